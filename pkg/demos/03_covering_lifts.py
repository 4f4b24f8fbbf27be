"""
Lifting a class to a regular covering
=====================================

A pair of normal subgroups K_M, K_N with f(K_M), g(K_M) inside K_N gives
deck groups G / K_M and N / K_N.  A class downstairs lifts to T / k classes
upstairs, where T counts the twisted equalizer of the deck maps and k the
image of the stabilizer in the deck group.  The closed formula for the
lifted semi-index is compared with a direct construction of the lifted
points.
"""
from nielsen_coincidence import ClassConfiguration, CoincidencePair, Subgroup, check_liftable
from nielsen_coincidence import fiber_equalizer, lift_formula, lift_oracle, lifted_class_partition
from nielsen_coincidence import make_hom, reidemeister_classes
from nielsen_coincidence.catalog import cyclic
from nielsen_coincidence.covering import lift_points
from nielsen_coincidence.groups import identity_hom, trivial_character

Z4 = cyclic(4)
pair = CoincidencePair(identity_hom(Z4), make_hom(Z4, Z4, [0, 3, 2, 1]),
                       trivial_character(Z4), trivial_character(Z4))
half = Subgroup(Z4, (0, 2))
cov = check_liftable(pair, half, half)

for cls, labels in zip(reidemeister_classes(pair), [[0, 1], [2]]):
    cfg = ClassConfiguration(pair, cls, labels)
    _, T = fiber_equalizer(pair, cov, cls)
    k, num, cosets = lifted_class_partition(pair, cov, cls)
    print(f"class {cls.twist}: T = {T}, k = {k}, {num} lifted classes {cosets}")
    print("   formula", lift_formula(pair, cov, cfg), "oracle", lift_oracle(pair, cov, cfg))

# The universal cover of Z/3 -> Z/3 with f = g = identity: the stabilizer is
# all of Z/3, so the three lifts of each point land in a single class.
Z3 = cyclic(3)
pair = CoincidencePair(identity_hom(Z3), identity_hom(Z3),
                       trivial_character(Z3), trivial_character(Z3))
cov = check_liftable(pair, Z3.trivial_subgroup(), Z3.trivial_subgroup())
cfg = ClassConfiguration(pair, reidemeister_classes(pair)[0], [0, 1])
lifted = lift_points(pair, cov, cfg)
for lc in lifted.classes:
    print("lifted class", lc.deck, "points", lc.points, "semi-index", lc.semi_index)
