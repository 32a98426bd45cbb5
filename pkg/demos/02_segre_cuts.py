"""The cutting game behind Segre varieties.

Points are bipartitions of {1..n+m}; each cut (a, b) throws away the sides
containing b but not a. The search picks the gentlest cuts first.
"""
import sys
import time

from secant_indices.segre import CutState, SegreInstance, apply_cut, last_gap, solve_segre

n, m = (int(x) for x in sys.argv[1:3]) if len(sys.argv) > 2 else (3, 2)
inst = SegreInstance(n, m)
t0 = time.perf_counter()
res = solve_segre(inst)
print(f"P^{n} x P^{m}: {res.sequence}   ({res.nodes} nodes, {time.perf_counter() - t0:.3f}s)")

state = CutState.initial(n, m)
print(f"{state.count} sides to begin with")
for cut in res.cuts:
    state = apply_cut(state, cut)
    left = ["".join(map(str, sorted(A))) for A in state.survivors()]
    print(f"  cut {cut.a} {cut.b} -> {state.count:3d}   {' '.join(left)}")

print(f"last jump {res.sequence[-1] - res.sequence[-2]}, predicted {last_gap(inst)}")
