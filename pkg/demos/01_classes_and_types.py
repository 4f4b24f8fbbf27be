"""
Reidemeister classes, defectiveness and map types
=================================================

A pair of homomorphisms f, g : G -> N lets G act on N by
gamma . alpha = g(gamma) alpha f(gamma)^-1.  The orbits are the
Reidemeister classes.  With orientation characters on both groups a class
is defective when its stabilizer holds an element of combined sign -1.
"""
from nielsen_coincidence import CoincidencePair, make_character, make_hom, orientation_type
from nielsen_coincidence import reidemeister_classes, verify_root_theorems
from nielsen_coincidence.catalog import catalog_group, cyclic
from nielsen_coincidence.groups import constant_hom, identity_hom, trivial_character

# S3 acting on itself by conjugation: the classes are the conjugacy classes
S3 = catalog_group("S3")
sign = make_character(S3, [1, 1, 1, -1, -1, -1])
pair = CoincidencePair(identity_hom(S3), identity_hom(S3), sign, trivial_character(S3))
for cls in reidemeister_classes(pair):
    print(f"S3 class of {cls.twist}: orbit {cls.orbit}, |stab| = {cls.stabilizer.order}, "
          f"defective = {cls.defective}")

# The orbit of 0 is the identity, whose stabilizer is all of S3.  It contains
# transpositions of sign -1, so that class is defective.  Pairing the sign
# character on both sides cancels the signs and nothing is defective.
pair = CoincidencePair(identity_hom(S3), identity_hom(S3), sign, sign)
print("sign against sign:", [c.defective for c in reidemeister_classes(pair)])

# Map types.  Z/2 -> Z/2 constant, with a nonorientable source: the kernel
# carries a -1, so this is type III and every root class is defective.
Z2, Z4 = cyclic(2), cyclic(4)
w = make_character(Z2, [1, -1])
c = constant_hom(Z2, Z2)
print(orientation_type(c, w, trivial_character(Z2)), verify_root_theorems(c, w, trivial_character(Z2)))

# Z/4 -> Z/2 reduction mod 2 with the alternating character is type II
mod2 = make_hom(Z4, Z2, [0, 1, 0, 1])
alt = make_character(Z4, [1, -1, 1, -1])
report = verify_root_theorems(mod2, alt, trivial_character(Z2))
print(report.map_type, "root classes defective:", report.defective)
