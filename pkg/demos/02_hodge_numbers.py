"""Hodge numbers of the weighted hypersurfaces used as building blocks.

Run:  python demos/02_hodge_numbers.py
"""
from spin7kit import chern, cohomology, series

# Jacobian ring of a Fermat octic in CP^4(1,1,1,1,4): the z4 partial is linear,
# so only the four degree-7 relations survive
spec = series.jacobian_spec((1, 1, 1, 1, 4), 8)
print("R(f) Hilbert series:", spec, "->", list(series.expand(spec.with_order(8)).coeffs))

d = cohomology.hypersurface_hodge((1, 1, 1, 1, 4), 8)
print("\nCalabi-Yau divisor D:")
print(d.pretty())
print("chi(D) =", d.euler())

# the same Euler number through the 4-sheeted cover from CP^4
route = chern.euler_weighted_ci((1, 1, 1, 1, 4), (8,))
print(f"cover route: ({route.chi_cover} + 3*{route.chi_branch})/4 = {route.chi}")
print("note:", chern.misprint_note(3, (8,)))

for degree in (8, 4):
    v = cohomology.hypersurface_hodge((1, 1, 1, 1, 4, 4), degree)
    print(f"\ndegree-{degree} fourfold in CP^5(1,1,1,1,4,4): middle row {v.middle_row()}, chi {v.euler()}")

# the surface S: only h^{0,2} comes from the residue ring, chi from the cover
h02 = cohomology.ci_h0q((1, 1, 1, 1, 4), (8, 8), 0, 2)
chi = chern.euler_weighted_ci((1, 1, 1, 1, 4), (8, 8)).chi
s = cohomology.surface_from_chi_h02(chi, h02)
print(f"\nsurface S: chi {s.chi}, h02 {h02}, tau {s.tau}")
print(s.diamond.pretty())
