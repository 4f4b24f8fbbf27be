import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nielsen_coincidence.catalog import catalog, catalog_group, cyclic
from nielsen_coincidence.classes import (
    CoincidencePair, MapType, ReidemeisterClass, center_propagation_check,
    combined_character, is_defective, orientation_type, reidemeister_classes,
    verify_root_theorems,
)
from nielsen_coincidence.groups import (
    MismatchedDomains, characters, constant_hom, enumerate_homs, identity_hom,
    make_character, make_hom, trivial_character,
)


def pair_of(f, g, wM=None, wN=None):
    return CoincidencePair(f, g, wM or trivial_character(f.source), wN or trivial_character(f.target))


def brute_orbits(f, g):
    """Union-find-free orbit enumeration straight from the action."""
    G, N = f.source, f.target
    orbits = []
    for a in range(N.order):
        if any(a in o for o in orbits):
            continue
        orbits.append({N.mul(N.mul(g(x), a), N.inv(f(x))) for x in range(G.order)})
    return sorted(sorted(o) for o in orbits)


def test_pair_rejects_mismatched_characters(S3, Z4):
    with pytest.raises(MismatchedDomains):
        CoincidencePair(identity_hom(S3), identity_hom(S3), trivial_character(Z4),
                        trivial_character(S3))


class TestCombinedCharacter:
    def test_trivial_target(self, z4_mod2, z4_alternating):
        c = combined_character(pair_of(z4_mod2, z4_mod2, z4_alternating))
        assert c.signs == z4_alternating.signs
        assert c(1) == -1

    def test_orientation_true_is_trivial(self, S3):
        sign = make_character(S3, [1, 1, 1, -1, -1, -1])
        c = combined_character(pair_of(identity_hom(S3), identity_hom(S3), sign, sign))
        assert c.is_trivial()


class TestReidemeisterClasses:
    def test_conjugacy_classes_of_s3(self, S3):
        classes = reidemeister_classes(pair_of(identity_hom(S3), identity_hom(S3)))
        assert sorted(c.size for c in classes) == [1, 2, 3]
        assert [c.twist for c in classes] == [0, 1, 3]

    def test_constant_maps(self, S3):
        const = constant_hom(S3, S3)
        classes = reidemeister_classes(pair_of(const, const))
        assert [c.orbit for c in classes] == [(a,) for a in range(6)]

    def test_z4_twisted(self, Z4):
        classes = reidemeister_classes(pair_of(identity_hom(Z4), make_hom(Z4, Z4, [0, 3, 2, 1])))
        assert [c.orbit for c in classes] == [(0, 2), (1, 3)]

    @settings(max_examples=60, deadline=None)
    @given(st.sampled_from(list(catalog(8))), st.sampled_from(list(catalog(8))), st.data())
    def test_partition_and_orbit_stabilizer(self, a, b, data):
        A, B = catalog_group(a), catalog_group(b)
        homs = enumerate_homs(A, B)
        f, g = data.draw(st.sampled_from(homs)), data.draw(st.sampled_from(homs))
        pair = pair_of(f, g, data.draw(st.sampled_from(characters(A))),
                       data.draw(st.sampled_from(characters(B))))
        classes = reidemeister_classes(pair)
        assert sorted(list(c.orbit) for c in classes) == brute_orbits(f, g)
        for cls in classes:
            assert cls.size * cls.stabilizer.order == A.order
            assert cls.defective == is_defective(pair, cls)
            for alt in cls.orbit:
                moved = ReidemeisterClass(alt, cls.orbit, cls.stabilizer, cls.defective)
                assert is_defective(pair, moved) == cls.defective
            for x in cls.stabilizer:
                assert pair.w_N(f(x)) == pair.w_N(g(x))


class TestDefectiveness:
    def test_trivial_characters(self, S3):
        pair = pair_of(identity_hom(S3), constant_hom(S3, S3))
        assert not any(c.defective for c in reidemeister_classes(pair))

    def test_z4_over_z2(self, z4_mod2, z4_alternating):
        pair = pair_of(z4_mod2, z4_mod2, z4_alternating)
        cls = reidemeister_classes(pair)[0]
        assert cls.twist == 0 and cls.stabilizer.order == 4
        assert is_defective(pair, cls)

    def test_s3_sign_squared(self, S3):
        sign = make_character(S3, [1, 1, 1, -1, -1, -1])
        pair = pair_of(identity_hom(S3), identity_hom(S3), sign, sign)
        assert not any(is_defective(pair, c) for c in reidemeister_classes(pair))


class TestOrientationType:
    def test_type_i(self, S3):
        sign = make_character(S3, [1, 1, 1, -1, -1, -1])
        assert orientation_type(identity_hom(S3), sign, sign) is MapType.I

    def test_type_ii(self, z4_mod2, z4_alternating, Z2):
        assert orientation_type(z4_mod2, z4_alternating, trivial_character(Z2)) is MapType.II

    def test_type_iii(self, Z2):
        w = make_character(Z2, [1, -1])
        kind = orientation_type(constant_hom(Z2, Z2), w, trivial_character(Z2))
        assert kind is MapType.III and not kind.orientable

    @pytest.mark.parametrize("a,b", [("C4", "C2"), ("D4", "C2xC2"), ("C2xC4", "C4"), ("S3", "C2")])
    def test_type_properties(self, a, b):
        A, B = catalog_group(a), catalog_group(b)
        for f in enumerate_homs(A, B):
            for wM in characters(A):
                if wM.is_trivial():
                    assert orientation_type(f, wM, trivial_character(B)) is MapType.I
                    continue
                assert orientation_type(f, wM, trivial_character(B)) is not MapType.I
                for wN in characters(B):
                    kind = orientation_type(f, wM, wN)
                    orientation_true = all(wM(x) == wN(f(x)) for x in range(A.order))
                    assert (kind is MapType.I) == orientation_true


class TestRootTheorems:
    def test_type_iii_all_defective(self, Z2):
        rep = verify_root_theorems(constant_hom(Z2, Z2), make_character(Z2, [1, -1]),
                                   trivial_character(Z2))
        assert rep.map_type is MapType.III
        assert rep.defective == [True, True] and rep.passed

    def test_trivial_characters(self, S3):
        rep = verify_root_theorems(identity_hom(S3), trivial_character(S3), trivial_character(S3))
        assert rep.map_type is MapType.I and not any(rep.defective) and rep.passed

    def test_type_ii(self, z4_mod2, z4_alternating, Z2):
        rep = verify_root_theorems(z4_mod2, z4_alternating, trivial_character(Z2))
        # f is onto, so the root pair has a single class
        assert rep.map_type is MapType.II
        assert rep.defective == [False] and rep.passed


class TestCenterPropagation:
    def test_abelian_target(self, z4_mod2, z4_alternating):
        rep = center_propagation_check(pair_of(z4_mod2, z4_mod2, z4_alternating))
        assert rep.applicable and rep.defective == [True, True] and rep.passed

    def test_trivial_target(self, S3):
        one = cyclic(1)
        rep = center_propagation_check(pair_of(constant_hom(S3, one), constant_hom(S3, one)))
        assert rep.applicable and rep.passed

    def test_not_central(self, S3):
        rep = center_propagation_check(pair_of(identity_hom(S3), identity_hom(S3)))
        assert not rep.applicable

    def test_exhaustive_small(self):
        for a, b in itertools.product(["C2", "C4", "C2xC2"], ["C2", "C4", "D4", "Q8"]):
            A, B = catalog_group(a), catalog_group(b)
            for f, g in itertools.product(enumerate_homs(A, B), repeat=2):
                for wM, wN in itertools.product(characters(A), characters(B)):
                    assert center_propagation_check(pair_of(f, g, wM, wN)).passed
