"""Lifting coincidence classes to finite regular coverings.

A regular covering of ``M`` is a normal subgroup ``K_M`` of ``G`` (the
image of the cover's fundamental group); its deck group is ``G / K_M``.
Likewise ``K_N`` for the target.  The pair lifts when both homomorphisms
send ``K_M`` into ``K_N``.

Over a coincidence point of a class with twist ``alpha`` and stabilizer
``S``, the coincidence lifts are indexed by the deck equalizer ``E`` (size
``T``).  They fall into ``T / k`` lifted classes of ``k = |j_M(S)|`` points
each, and the semi-index of every lifted class is ``s * k`` (or its parity,
for defective classes).  :func:`lift_formula` evaluates that closed form;
:func:`lift_oracle` rebuilds the lifted point set and its Nielsen/R
relations explicitly and recounts.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field, replace
from typing import Sequence

from .classes import CoincidencePair, ReidemeisterClass, combined_character, reidemeister_classes
from .groups import (
    FiniteGroup, GroupError, Homomorphism, NotNormal, Subgroup, is_normal, quotient,
    trivial_character, twisted_equalizer,
)
from .semiindex import ClassConfiguration, nielsen_number, semi_index

__all__ = [
    "NotLiftable", "SourceOrientable", "TargetNonorientable",
    "RegularCovering", "LiftEntry", "LiftReport", "LiftedClass", "LiftedPoints",
    "DoubleCoverEntry", "DoubleCoverReport",
    "check_liftable", "trivial_covering", "induced_pair", "fiber_equalizer",
    "lifted_class_partition", "upstairs_defective", "lift_formula", "lift_points",
    "lift_oracle", "lift_report", "double_orientable_cover",
]


class NotLiftable(GroupError):
    pass


class SourceOrientable(GroupError):
    pass


class TargetNonorientable(GroupError):
    pass


@dataclass(frozen=True)
class RegularCovering:
    pair: CoincidencePair = field(repr=False)
    K_M: Subgroup
    K_N: Subgroup
    D_M: FiniteGroup = field(repr=False)
    j_M: Homomorphism = field(repr=False)
    D_N: FiniteGroup = field(repr=False)
    j_N: Homomorphism = field(repr=False)


def check_liftable(pair: CoincidencePair, K_M: Subgroup, K_N: Subgroup) -> RegularCovering:
    if K_M.parent != pair.G or K_N.parent != pair.N:
        raise GroupError("covering subgroups must live in the source and target groups")
    for name, K, grp in (("K_M", K_M, pair.G), ("K_N", K_N, pair.N)):
        if not is_normal(grp, K):
            raise NotNormal(f"{name} = {list(K.members)} is not normal")
    for name, h in (("f", pair.phi), ("g", pair.psi)):
        for k in K_M:
            if h(k) not in K_N:
                raise NotLiftable(f"{name} maps {k} in K_M to {h(k)}, outside K_N")
    D_M, j_M = quotient(pair.G, K_M)
    D_N, j_N = quotient(pair.N, K_N)
    return RegularCovering(pair, K_M, K_N, D_M, j_M, D_N, j_N)


def trivial_covering(pair: CoincidencePair) -> RegularCovering:
    """Identity coverings on both sides; deck groups are trivial."""
    return check_liftable(pair, pair.G.whole(), pair.N.whole())


def _coset_reps(j: Homomorphism) -> list[int]:
    reps = [-1] * j.target.order
    for g in range(j.source.order - 1, -1, -1):
        reps[j(g)] = g
    return reps


def _induced(h: Homomorphism, cov: RegularCovering) -> Homomorphism:
    reps = _coset_reps(cov.j_M)
    images = tuple(cov.j_N(h(r)) for r in reps)
    for g in range(cov.pair.G.order):
        assert images[cov.j_M(g)] == cov.j_N(h(g)), "induced map not well defined"
    return Homomorphism(cov.D_M, cov.D_N, images)


def induced_pair(pair: CoincidencePair, cov: RegularCovering) -> CoincidencePair:
    """Deck-level maps ``[phi(g)]`` and ``[psi(g)]``; characters are trivial placeholders."""
    return CoincidencePair(
        _induced(pair.phi, cov), _induced(pair.psi, cov),
        trivial_character(cov.D_M), trivial_character(cov.D_N),
    )


def fiber_equalizer(pair: CoincidencePair, cov: RegularCovering,
                    cls: ReidemeisterClass) -> tuple[Subgroup, int]:
    deck = induced_pair(pair, cov)
    E = twisted_equalizer(deck.phi, deck.psi, cov.j_N(cls.twist))
    return E, E.order


def lifted_class_partition(pair: CoincidencePair, cov: RegularCovering,
                           cls: ReidemeisterClass) -> tuple[int, int, list[tuple[int, ...]]]:
    E, T = fiber_equalizer(pair, cov, cls)
    H = sorted({cov.j_M(g) for g in cls.stabilizer})
    assert all(h in E for h in H), "projected stabilizer must lie in the deck equalizer"
    k = len(H)
    assert T % k == 0
    D = cov.D_M
    cosets = sorted({tuple(sorted(D.mul(d, h) for h in H)) for d in E})
    assert len(cosets) == T // k
    return k, T // k, cosets


def upstairs_defective(pair: CoincidencePair, cov: RegularCovering,
                       cls: ReidemeisterClass) -> bool:
    """A self-reducing loop survives upstairs iff it lies in ``K_M``."""
    c = combined_character(pair)
    return any(c(g) == -1 for g in cls.stabilizer if g in cov.K_M)


def lift_formula(pair: CoincidencePair, cov: RegularCovering,
                 config: ClassConfiguration) -> list[int]:
    s = semi_index(config)
    k, num_classes, _ = lifted_class_partition(pair, cov, config.cls)
    value = (s * k) % 2 if config.cls.defective else s * k
    return [value] * num_classes


@dataclass
class LiftedClass:
    deck: tuple[int, ...]                 # fiber positions of the lifted basepoint
    points: tuple[tuple[int, int], ...]   # (position in config, deck element)
    labels: tuple[int, ...]               # transported labels in G, one per point
    defective: bool
    semi_index: int


@dataclass
class LiftedPoints:
    fiber: tuple[int, ...]
    classes: list[LiftedClass]

    def fiber_over(self, pos: int) -> list[tuple[int, int]]:
        return [p for lc in self.classes for p in lc.points if p[0] == pos]


def lift_points(pair: CoincidencePair, cov: RegularCovering,
                config: ClassConfiguration) -> LiftedPoints:
    """Build every lifted coincidence point of one class explicitly.

    Nodes are lifts of the class basepoint ``B[d]`` and lifts ``(i, d)`` of
    configured point ``i``, for ``d`` in the fiber.  Edges are lifts of the
    downstairs Nielsen paths: basepoint loop ``gamma`` in the stabilizer joins
    ``B[d]`` to ``B[d * j(gamma)]``; the path with label ``g_i`` joins
    ``B[d]`` to ``(i, d)``.  Each edge carries a group element, whose combined
    sign says whether it reverses graph orientation.  Connected components
    are the lifted classes, and a component with an odd-signed cycle holds a
    self-reducing point.
    """
    G, N, D = pair.G, pair.N, cov.D_M
    cls = config.cls
    c = combined_character(pair)
    alpha = cls.twist

    # coincidence lifts over the basepoint, tested in G and N directly
    fiber = sorted({
        cov.j_M(r) for r in range(G.order)
        if cov.j_N(N.mul(pair.psi(r), alpha)) == cov.j_N(N.mul(alpha, pair.phi(r)))
    })
    in_fiber = set(fiber)

    adj: dict[tuple, list[tuple[tuple, int]]] = {}

    def link(u, v, g):
        adj.setdefault(u, []).append((v, g))
        adj.setdefault(v, []).append((u, G.inv(g)))

    for d in fiber:
        adj.setdefault(("B", d), [])
        for gamma in cls.stabilizer:
            e = D.mul(d, cov.j_M(gamma))
            assert e in in_fiber, "lifted Nielsen loop left the coincidence fiber"
            link(("B", d), ("B", e), gamma)
        for i, g in enumerate(config.labels):
            link(("B", d), ("P", i, d), g)

    seen: dict[tuple, int] = {}
    classes = []
    for d in fiber:
        root = ("B", d)
        if root in seen:
            continue
        seen[root] = 0
        members = [root]
        defective = False
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v, g in adj[u]:
                t = G.mul(seen[u], g)
                if v not in seen:
                    seen[v] = t
                    members.append(v)
                    queue.append(v)
                elif c(seen[v]) != c(t):
                    defective = True
        deck = tuple(sorted(u[1] for u in members if u[0] == "B"))
        points = sorted((u[1], u[2]) for u in members if u[0] == "P")
        labels = tuple(seen[("P", i, d2)] for i, d2 in points)
        up_cls = replace(cls, stabilizer=cls.stabilizer.intersection(cov.K_M),
                         defective=defective)
        s = semi_index(ClassConfiguration(pair, up_cls, labels))
        classes.append(LiftedClass(deck, tuple(points), labels, defective, s))
    return LiftedPoints(tuple(fiber), classes)


def lift_oracle(pair: CoincidencePair, cov: RegularCovering,
                config: ClassConfiguration) -> list[int]:
    return [lc.semi_index for lc in lift_points(pair, cov, config).classes]


@dataclass
class LiftEntry:
    twist: int
    semi_index: int
    defective: bool
    T: int
    k: int
    num_classes: int
    upstairs_defective: list[bool]
    formula: list[int]
    oracle: list[int]

    @property
    def matches(self) -> bool:
        return self.formula == self.oracle


@dataclass
class LiftReport:
    entries: list[LiftEntry]

    @property
    def matches(self) -> bool:
        return all(e.matches for e in self.entries)

    def nielsen_up(self) -> int:
        return sum(1 for e in self.entries for v in e.oracle if v > 0)


def lift_report(pair: CoincidencePair, cov: RegularCovering,
                configs: Sequence[ClassConfiguration]) -> LiftReport:
    entries = []
    for cfg in configs:
        k, num, _ = lifted_class_partition(pair, cov, cfg.cls)
        _, T = fiber_equalizer(pair, cov, cfg.cls)
        lifted = lift_points(pair, cov, cfg)
        entries.append(LiftEntry(
            twist=cfg.cls.twist,
            semi_index=semi_index(cfg),
            defective=cfg.cls.defective,
            T=T, k=k, num_classes=num,
            upstairs_defective=[lc.defective for lc in lifted.classes],
            formula=lift_formula(pair, cov, cfg),
            oracle=[lc.semi_index for lc in lifted.classes],
        ))
    return LiftReport(entries)


@dataclass
class DoubleCoverEntry:
    twist: int
    defective: bool
    semi_index: int
    num_classes: int
    lifted: list[int]
    ok: bool


@dataclass
class DoubleCoverReport:
    entries: list[DoubleCoverEntry]
    nielsen_down: int
    nielsen_up: int
    up_even: bool
    down_bound: bool
    zero_up_implies_defective: bool
    agrees_with_generic: bool

    @property
    def passed(self) -> bool:
        return (all(e.ok for e in self.entries) and self.up_even and self.down_bound
                and self.zero_up_implies_defective and self.agrees_with_generic)


def double_orientable_cover(pair: CoincidencePair,
                            configs: Sequence[ClassConfiguration] | None = None,
                            ) -> tuple[RegularCovering, DoubleCoverReport]:
    """Lift to the orientable double cover of a nonorientable source.

    The target must be orientable and is covered by itself.  Non-defective
    classes split into two lifted classes with the same semi-index;
    defective classes lift to a single class of semi-index zero.
    """
    if pair.w_M.is_trivial():
        raise SourceOrientable("source character is trivial; no double orientable cover")
    if not pair.w_N.is_trivial():
        raise TargetNonorientable("target character must be trivial")
    cov = check_liftable(pair, pair.w_M.kernel(), pair.N.whole())
    if configs is None:
        configs = [ClassConfiguration(pair, cls) for cls in reidemeister_classes(pair)]

    generic = lift_report(pair, cov, configs)
    entries = []
    for cfg, gen in zip(configs, generic.entries):
        s = gen.semi_index
        if cfg.cls.defective:
            expected = [0]
        else:
            expected = [s, s]
        entries.append(DoubleCoverEntry(
            twist=cfg.cls.twist, defective=cfg.cls.defective, semi_index=s,
            num_classes=gen.num_classes, lifted=gen.oracle,
            ok=gen.oracle == expected and gen.formula == expected,
        ))

    down = nielsen_number(configs)
    up = generic.nielsen_up()
    essential_defective = all(cfg.cls.defective for cfg in configs if semi_index(cfg) > 0)
    report = DoubleCoverReport(
        entries=entries,
        nielsen_down=down,
        nielsen_up=up,
        up_even=up % 2 == 0,
        down_bound=2 * down >= up,
        zero_up_implies_defective=up != 0 or essential_defective,
        agrees_with_generic=generic.matches and cov.D_M.order == 2 and cov.D_N.order == 1,
    )
    return cov, report
