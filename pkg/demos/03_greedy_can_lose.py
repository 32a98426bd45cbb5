"""A small divisibility poset where always removing the fewest elements is
not termwise best.
"""
from secant_indices import poset as pg

p = pg.counterexample()
print("elements:", ", ".join(p.elements))
print("pickable:", ", ".join(e for e in p.elements if e in p.A))

greedy = pg.solve_greedy(p)
print("greedy picks", greedy.picks, "->", greedy.counts)

for order in (["a^3", "a^2", "a", "c", "b"], ["c", "a^3", "a^2", "a", "b"]):
    print("picks", order, "->", pg.play(p, order))

exact = pg.solve_exact(p)
print("lexicographic best:", exact.lexmax, "via", exact.witness)
print("termwise maxima:   ", exact.termwise)
print(pg.verdict(greedy.counts, exact.termwise))
