"""Walk through the Spin(7) linear algebra on R^8 with exact rationals.

Run:  python demos/01_cayley_form.py
"""
from spin7kit import cayley
from spin7kit.cayley import ALPHA, BETA, PHI, make_cayley_form, pullback

phi0 = make_cayley_form()
print("Phi0 =", phi0)
print("terms:", len(phi0.coeffs), " self-dual:", cayley.hodge_star4(phi0) == phi0)

# alpha and beta generate the order-8 group acting on C^4 = R^8; both fix Phi0
for name, a in (("alpha", ALPHA), ("beta", BETA), ("phi", PHI)):
    print(f"{name}^* Phi0 == Phi0: {pullback(phi0, a) == phi0}   det = {a.det()}")
print(cayley.verify_group_relations().checks)

# the same 4-form from two complex structures: omega^2/2 + Re(Omega)
for label, coords in (("z", cayley.Z_COORDS), ("w", cayley.W_COORDS)):
    print(f"{label}-coordinates give Phi0: {cayley.calabi_yau_cayley_form(coords) == phi0}")

# orbit of Phi0 under GL(8): tangent rank plus stabiliser dimension is 64
t = cayley.orbit_tangent_basis()
print(f"orbit tangent rank {t.rank}, stabiliser dimension {t.stabilizer_dim}")
print("all 35 anti-self-dual forms tangent to the orbit:", cayley.check_asd_inclusion())

# a 4-form splits into an orbit-tangent part and a normal (self-dual) part
eta = cayley.Form(4, {(1, 2, 3, 4): 1})
tangent, normal = cayley.split_tangent_normal(eta)
print("normal part of theta^1234:", normal)
