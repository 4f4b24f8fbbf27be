"""Reidemeister classes of a pair of homomorphisms, with orientation data.

A pair of maps ``f, g: M -> N`` is represented at the fundamental group
level by two homomorphisms ``phi, psi: G -> H`` and the orientation
characters ``w_M`` on ``G`` and ``w_N`` on ``H``.  Coincidence classes
correspond to orbits of the twisted action

    gamma . alpha = psi(gamma) * alpha * phi(gamma)^-1

on ``H``.  The stabilizer of ``alpha`` is the twisted equalizer, and a
class is defective exactly when its stabilizer contains an element on which
the combined character ``w_M(gamma) * w_N(phi(gamma))`` is -1.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np

from .groups import (
    FiniteGroup, Homomorphism, MismatchedDomains, OrientationCharacter, Subgroup,
    center, constant_hom, twisted_equalizer,
)

__all__ = [
    "CoincidencePair", "ReidemeisterClass", "MapType",
    "combined_character", "reidemeister_classes", "is_defective",
    "orientation_type", "verify_root_theorems", "center_propagation_check",
    "RootReport", "CenterReport", "class_of",
]


@dataclass(frozen=True)
class CoincidencePair:
    phi: Homomorphism
    psi: Homomorphism
    w_M: OrientationCharacter
    w_N: OrientationCharacter

    def __post_init__(self):
        if self.phi.source != self.psi.source or self.phi.target != self.psi.target:
            raise MismatchedDomains("phi and psi must share source and target")
        if self.w_M.group != self.G:
            raise MismatchedDomains("w_M must be a character of the source group")
        if self.w_N.group != self.N:
            raise MismatchedDomains("w_N must be a character of the target group")

    @property
    def G(self) -> FiniteGroup:
        return self.phi.source

    @property
    def N(self) -> FiniteGroup:
        return self.phi.target

    def act(self, gamma: int, alpha: int) -> int:
        N = self.N
        return N.mul(N.mul(self.psi(gamma), alpha), N.inv(self.phi(gamma)))


@dataclass(frozen=True)
class ReidemeisterClass:
    twist: int
    orbit: tuple[int, ...]
    stabilizer: Subgroup = field(repr=False)
    defective: bool

    @property
    def size(self) -> int:
        return len(self.orbit)


class MapType(enum.Enum):
    I = "I"
    II = "II"
    III = "III"

    @property
    def orientable(self) -> bool:
        return self is not MapType.III


def combined_character(pair: CoincidencePair) -> OrientationCharacter:
    """``gamma -> w_M(gamma) * w_N(phi(gamma))``; -1 marks graph-orientation-reversing loops."""
    signs = pair.w_M.array * pair.w_N.array[pair.phi.array]
    return OrientationCharacter(pair.G, tuple(int(s) for s in signs))


def _defective_on(stab: Subgroup, c: OrientationCharacter) -> bool:
    return any(c(g) == -1 for g in stab)


def reidemeister_classes(pair: CoincidencePair) -> list[ReidemeisterClass]:
    """Orbits of the twisted action, ordered by their minimal element."""
    N = pair.N
    c = combined_character(pair)
    # orbit of alpha is {psi(g) alpha phi(g)^-1 : g in G}
    left = pair.psi.array
    right = N.inverses[pair.phi.array]
    assigned = np.zeros(N.order, dtype=bool)
    classes = []
    for alpha in range(N.order):
        if assigned[alpha]:
            continue
        orbit = np.unique(N.table[N.table[left, alpha], right])
        assigned[orbit] = True
        stab = twisted_equalizer(pair.phi, pair.psi, alpha)
        classes.append(ReidemeisterClass(
            twist=alpha,
            orbit=tuple(int(x) for x in orbit),
            stabilizer=stab,
            defective=_defective_on(stab, c),
        ))
    return classes


def class_of(classes: list[ReidemeisterClass], alpha: int) -> ReidemeisterClass:
    for cls in classes:
        if alpha in cls.orbit:
            return cls
    raise KeyError(f"{alpha} lies in no class")


def is_defective(pair: CoincidencePair, cls: ReidemeisterClass) -> bool:
    """True iff some stabilizer element has combined sign -1 (a self-reducing loop)."""
    return _defective_on(twisted_equalizer(pair.phi, pair.psi, cls.twist),
                         combined_character(pair))


def orientation_type(phi: Homomorphism, w_M: OrientationCharacter,
                     w_N: OrientationCharacter) -> MapType:
    pulled = w_N.array[phi.array]
    if np.array_equal(pulled, w_M.array):
        return MapType.I
    reversing_in_kernel = (phi.array == 0) & (w_M.array == -1)
    if reversing_in_kernel.any():
        return MapType.III
    return MapType.II


@dataclass
class RootReport:
    map_type: MapType
    defective: list[bool]
    orientable_ok: bool
    type_iii_ok: bool

    @property
    def passed(self) -> bool:
        return self.orientable_ok and self.type_iii_ok


def verify_root_theorems(phi: Homomorphism, w_M: OrientationCharacter,
                         w_N: OrientationCharacter) -> RootReport:
    """Check root-class defectiveness against the map type of ``phi``.

    Root classes are the classes of ``(phi, constant)``.  Orientable maps
    must have no defective root class and Type III maps must have only
    defective ones.
    """
    pair = CoincidencePair(phi, constant_hom(phi.source, phi.target), w_M, w_N)
    kind = orientation_type(phi, w_M, w_N)
    flags = [cls.defective for cls in reidemeister_classes(pair)]
    return RootReport(
        map_type=kind,
        defective=flags,
        orientable_ok=not kind.orientable or not any(flags),
        type_iii_ok=kind.orientable or all(flags),
    )


@dataclass
class CenterReport:
    applicable: bool
    defective: list[bool]
    passed: bool


def center_propagation_check(pair: CoincidencePair) -> CenterReport:
    """When phi lands in the center, one defective class makes every class defective."""
    Z = center(pair.N)
    applicable = all(b in Z for b in pair.phi.images)
    flags = [cls.defective for cls in reidemeister_classes(pair)]
    if not applicable:
        return CenterReport(False, flags, True)
    return CenterReport(True, flags, all(flags) or not any(flags))
