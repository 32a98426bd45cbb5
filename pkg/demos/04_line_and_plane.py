"""Eight points in P^3: three on a line, five on a plane.

The most points on a j-plane and the best nested flag disagree at j = 1.
"""
from secant_indices import pointset as ps

cfg = ps.q2_example()
lat = ps.flats(cfg)
for r, fs in lat.labelled().items():
    big = [f for f in fs if len(f) > r]
    if big:
        print(f"rank {r} flats with more than {r} points:", big)

print("secant sequence:", ps.secant_sequence(cfg))
res = ps.chain_search(cfg)
print("best chain:     ", res.sequence)
for j, s in enumerate(res.chain):
    print(f"  dim {j}:", sorted(cfg.labels[i] for i in s))
