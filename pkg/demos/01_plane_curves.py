"""Plane curves: watch the lex segment carve up the exponent box.

Each addition of a degree-d monomial (dehomogenized) to the pure-power ideal
removes a staircase corner; the leftover cell count is one secant index.
"""
from secant_indices.monomials import BoxIdeal, Monomial, quotient_dim
from secant_indices.veronese import VeroneseInstance, lex_additions, n2_closed_form, rlg_veronese


def show_box(ideal):
    d = ideal.d
    for y in reversed(range(d)):
        row = ""
        for x in range(d):
            row += "." if ideal.contains(Monomial((x, y))) else "o"
        print("   ", row)


d = 4
inst = VeroneseInstance(2, d)
ideal = BoxIdeal(2, d)
print(f"start: {quotient_dim(ideal)} cells")
show_box(ideal)
for m in lex_additions(inst)[:6]:
    ideal = ideal.with_extra(m)
    print(f"add {m}: {quotient_dim(ideal)} cells")
    show_box(ideal)

print()
for d in range(3, 8):
    seq = rlg_veronese(VeroneseInstance(2, d))
    same = seq == n2_closed_form(d)
    print(f"d={d}: {seq}  closed form {'matches' if same else 'differs'}")
