"""Property checks shared by the ``verify`` command and the test suite.

Each check returns a list of human-readable violations; empty means pass.
"""
from __future__ import annotations

import itertools
from typing import Sequence

from .classes import (
    CoincidencePair, ReidemeisterClass, center_propagation_check, combined_character,
    is_defective, verify_root_theorems,
)
from .covering import (
    RegularCovering, double_orientable_cover, fiber_equalizer, lift_points,
    lift_report, lifted_class_partition, upstairs_defective,
)
from .groups import twisted_equalizer
from .semiindex import ClassConfiguration, semi_index


def check_partition(pair: CoincidencePair, classes: Sequence[ReidemeisterClass]) -> list[str]:
    seen: dict[int, int] = {}
    out = []
    for cls in classes:
        for a in cls.orbit:
            if a in seen:
                out.append(f"{a} lies in classes {seen[a]} and {cls.twist}")
            seen[a] = cls.twist
        if cls.twist != min(cls.orbit):
            out.append(f"class {cls.twist} is not represented by its minimum")
    missing = set(range(pair.N.order)) - set(seen)
    if missing:
        out.append(f"elements {sorted(missing)} lie in no class")
    for cls in classes:
        alpha = cls.twist
        orbit = {pair.act(g, alpha) for g in range(pair.G.order)}
        if orbit != set(cls.orbit):
            out.append(f"class {alpha}: orbit mismatch")
    return out


def check_orbit_stabilizer(pair: CoincidencePair, classes: Sequence[ReidemeisterClass]) -> list[str]:
    out = []
    for cls in classes:
        for a in cls.orbit:
            stab = twisted_equalizer(pair.phi, pair.psi, a)
            if cls.size * stab.order != pair.G.order:
                out.append(f"class {cls.twist}, rep {a}: {cls.size} * {stab.order} != {pair.G.order}")
    return out


def check_defect_invariance(pair: CoincidencePair, classes: Sequence[ReidemeisterClass]) -> list[str]:
    out = []
    for cls in classes:
        for a in cls.orbit:
            other = ReidemeisterClass(a, cls.orbit, cls.stabilizer, cls.defective)
            if is_defective(pair, other) != cls.defective:
                out.append(f"class {cls.twist}: defectiveness differs at rep {a}")
    return out


def check_stabilizer_signs(pair: CoincidencePair, classes: Sequence[ReidemeisterClass]) -> list[str]:
    w = pair.w_N
    return [f"class {cls.twist}: w_N(f(g)) != w_N(g(g)) at {g}"
            for cls in classes for g in cls.stabilizer
            if w(pair.phi(g)) != w(pair.psi(g))]


def check_lift_formula(pair: CoincidencePair, cov: RegularCovering,
                       configs: Sequence[ClassConfiguration]) -> list[str]:
    report = lift_report(pair, cov, configs)
    return [f"class {e.twist}: formula {e.formula} != oracle {e.oracle}"
            for e in report.entries if not e.matches]


def check_lift_structure(pair: CoincidencePair, cov: RegularCovering,
                         config: ClassConfiguration) -> list[str]:
    """Fiber sizes, fiber partition, defect flags, copy signs and deck equivariance."""
    cls = config.cls
    out = []
    E, T = fiber_equalizer(pair, cov, cls)
    k, num, cosets = lifted_class_partition(pair, cov, cls)
    lifted = lift_points(pair, cov, config)
    tag = f"class {cls.twist}"

    if lifted.fiber != E.members:
        out.append(f"{tag}: oracle fiber {lifted.fiber} != deck equalizer {E.members}")
    if len(lifted.classes) != num:
        out.append(f"{tag}: {len(lifted.classes)} lifted classes, expected {num}")
    if sorted(lc.deck for lc in lifted.classes) != cosets:
        out.append(f"{tag}: lifted classes do not match the coset partition")
    for i in range(len(config)):
        over = lifted.fiber_over(i)
        if len(over) != T:
            out.append(f"{tag}: fiber over point {i} has {len(over)} points, expected {T}")
        for lc in lifted.classes:
            here = sum(1 for p in lc.points if p[0] == i)
            if here != k:
                out.append(f"{tag}: lifted class holds {here} lifts of point {i}, expected {k}")

    up = upstairs_defective(pair, cov, cls)
    if any(lc.defective != up for lc in lifted.classes):
        out.append(f"{tag}: oracle defect flags disagree with upstairs_defective={up}")

    c = combined_character(pair)
    by_image: dict[int, set[int]] = {}
    for g in cls.stabilizer:
        by_image.setdefault(cov.j_M(g), set()).add(c(g))
    if any(len(s) > 1 for s in by_image.values()) and not up:
        out.append(f"{tag}: ambiguous copy sign without an upstairs self-reducing loop")

    where = {p: n for n, lc in enumerate(lifted.classes) for p in lc.points}
    where.update({("B", d): n for n, lc in enumerate(lifted.classes) for d in lc.deck})
    D = cov.D_M
    for d0 in lifted.fiber:
        image_of = {}
        for key, n in where.items():
            moved = ("B", D.mul(d0, key[1])) if key[0] == "B" else (key[0], D.mul(d0, key[1]))
            if moved not in where:
                out.append(f"{tag}: deck {d0} moves a lifted point off the coincidence set")
                break
            if image_of.setdefault(n, where[moved]) != where[moved]:
                out.append(f"{tag}: deck {d0} splits lifted class {n}")
                break
    return out


def check_permutation_invariance(config: ClassConfiguration, max_points: int = 6) -> list[str]:
    if len(config) > max_points:
        return []
    s = semi_index(config)
    for perm in itertools.permutations(config.labels):
        other = ClassConfiguration(config.pair, config.cls, perm)
        if semi_index(other) != s:
            return [f"class {config.cls.twist}: semi-index changes under permutation {perm}"]
    return []


def check_root_theorems(pair: CoincidencePair) -> list[str]:
    rep = verify_root_theorems(pair.phi, pair.w_M, pair.w_N)
    out = []
    if not rep.orientable_ok:
        out.append(f"type {rep.map_type.value} map has defective root classes")
    if not rep.type_iii_ok:
        out.append("type III map has a non-defective root class")
    return out


def check_center(pair: CoincidencePair) -> list[str]:
    rep = center_propagation_check(pair)
    return [] if rep.passed else ["image of f is central but defectiveness is not uniform"]


def check_double_cover(pair: CoincidencePair, configs: Sequence[ClassConfiguration]) -> list[str]:
    _, rep = double_orientable_cover(pair, configs)
    out = [f"class {e.twist}: double cover lifted {e.lifted}, defective={e.defective}, s={e.semi_index}"
           for e in rep.entries if not e.ok]
    if not rep.up_even:
        out.append(f"upstairs Nielsen number {rep.nielsen_up} is odd")
    if not rep.down_bound:
        out.append(f"N(f,g) = {rep.nielsen_down} < {rep.nielsen_up}/2")
    if not rep.zero_up_implies_defective:
        out.append("upstairs Nielsen number 0 but an essential class is not defective")
    if not rep.agrees_with_generic:
        out.append("double cover disagrees with the generic lifting computation")
    return out
