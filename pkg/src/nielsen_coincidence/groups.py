"""Finite groups given by multiplication tables.

Every group here has its identity at index 0.  Groups, subgroups,
homomorphisms and sign characters are immutable and validated eagerly:
if a constructor returns, the object satisfies its axioms.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "GroupError", "NotClosed", "NoIdentityAtZero", "NoInverse", "NotAssociative",
    "IndexOutOfRange", "NotNormal", "NotAHomomorphism", "IdentityNotPreserved",
    "NotMultiplicative", "IdentityNotPositive", "MismatchedDomains", "BudgetExceeded",
    "FiniteGroup", "Subgroup", "Homomorphism", "OrientationCharacter",
    "make_group", "subgroup_closure", "is_normal", "quotient", "make_hom",
    "make_character", "equalizer", "twisted_equalizer", "center", "enumerate_homs",
    "generating_set", "all_subgroups", "normal_subgroups", "characters",
    "trivial_character", "constant_hom", "identity_hom",
]


class GroupError(ValueError):
    pass


class NotClosed(GroupError):
    pass


class NoIdentityAtZero(GroupError):
    pass


class NoInverse(GroupError):
    pass


class NotAssociative(GroupError):
    pass


class IndexOutOfRange(GroupError):
    pass


class NotNormal(GroupError):
    pass


class NotAHomomorphism(GroupError):
    pass


class IdentityNotPreserved(GroupError):
    pass


class NotMultiplicative(GroupError):
    pass


class IdentityNotPositive(GroupError):
    pass


class MismatchedDomains(GroupError):
    pass


class BudgetExceeded(GroupError):
    pass


class FiniteGroup:
    """A finite group stored as its Cayley table.

    ``table[i, j]`` is the index of ``i * j``.  Build instances through
    :func:`make_group`, which checks the group axioms.
    """

    def __init__(self, table: np.ndarray, inverses: np.ndarray):
        table = np.array(table, dtype=np.int64)
        table.setflags(write=False)
        inverses = np.array(inverses, dtype=np.int64)
        inverses.setflags(write=False)
        self.table = table
        self.inverses = inverses
        self._key = table.tobytes()

    @property
    def order(self) -> int:
        return self.table.shape[0]

    def __len__(self) -> int:
        return self.order

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def inv(self, a: int) -> int:
        return int(self.inverses[a])

    def product(self, elems: Iterable[int]) -> int:
        out = 0
        for e in elems:
            out = int(self.table[out, e])
        return out

    def conj(self, g: int, x: int) -> int:
        """g x g^-1"""
        return int(self.table[self.table[g, x], self.inverses[g]])

    def elements(self) -> range:
        return range(self.order)

    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.table, self.table.T))

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != 0:
            x = int(self.table[x, a])
            k += 1
        return k

    def check_index(self, a: int) -> None:
        if not 0 <= a < self.order:
            raise IndexOutOfRange(f"element index {a} not in [0, {self.order})")

    def whole(self) -> Subgroup:
        return Subgroup(self, tuple(range(self.order)))

    def trivial_subgroup(self) -> Subgroup:
        return Subgroup(self, (0,))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FiniteGroup) and self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        return f"FiniteGroup(order={self.order})"


@dataclass(frozen=True)
class Subgroup:
    parent: FiniteGroup = field(repr=False)
    members: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, a: int) -> bool:
        return a in self._set

    def __iter__(self):
        return iter(self.members)

    @cached_property
    def _set(self) -> frozenset[int]:
        return frozenset(self.members)

    def index(self) -> int:
        return self.parent.order // self.order

    def intersection(self, other: Subgroup) -> Subgroup:
        return Subgroup(self.parent, tuple(sorted(self._set & other._set)))

    def issubset(self, other: Subgroup) -> bool:
        return self._set <= other._set


@dataclass(frozen=True)
class Homomorphism:
    source: FiniteGroup = field(repr=False)
    target: FiniteGroup = field(repr=False)
    images: tuple[int, ...]

    def __call__(self, a: int) -> int:
        return self.images[a]

    @cached_property
    def array(self) -> np.ndarray:
        arr = np.array(self.images, dtype=np.int64)
        arr.setflags(write=False)
        return arr

    def kernel(self) -> Subgroup:
        return Subgroup(self.source, tuple(a for a, b in enumerate(self.images) if b == 0))

    def image(self) -> Subgroup:
        return Subgroup(self.target, tuple(sorted(set(self.images))))

    def preimage(self, S: Subgroup) -> Subgroup:
        return Subgroup(self.source, tuple(a for a, b in enumerate(self.images) if b in S))

    def is_surjective(self) -> bool:
        return len(set(self.images)) == self.target.order

    def is_constant(self) -> bool:
        return all(b == 0 for b in self.images)


@dataclass(frozen=True)
class OrientationCharacter:
    """A homomorphism to {+1, -1}; its kernel is the orientation-preserving subgroup."""

    group: FiniteGroup = field(repr=False)
    signs: tuple[int, ...]

    def __call__(self, a: int) -> int:
        return self.signs[a]

    @cached_property
    def array(self) -> np.ndarray:
        arr = np.array(self.signs, dtype=np.int64)
        arr.setflags(write=False)
        return arr

    def kernel(self) -> Subgroup:
        return Subgroup(self.group, tuple(a for a, s in enumerate(self.signs) if s == 1))

    def is_trivial(self) -> bool:
        return all(s == 1 for s in self.signs)


def make_group(table: Sequence[Sequence[int]] | np.ndarray) -> FiniteGroup:
    T = np.asarray(table)
    if T.ndim != 2 or T.shape[0] != T.shape[1] or T.shape[0] == 0:
        raise GroupError(f"table must be a non-empty square array, got shape {T.shape}")
    if not np.issubdtype(T.dtype, np.integer):
        raise GroupError("table entries must be integers")
    T = T.astype(np.int64)
    n = T.shape[0]

    bad = np.argwhere((T < 0) | (T >= n))
    if len(bad):
        i, j = map(int, bad[0])
        raise NotClosed(f"table[{i}][{j}] = {int(T[i, j])} is outside [0, {n})")

    idx = np.arange(n)
    bad = np.flatnonzero((T[0] != idx) | (T[:, 0] != idx))
    if len(bad):
        raise NoIdentityAtZero(f"index 0 does not act as identity on element {int(bad[0])}")

    inverses = np.empty(n, dtype=np.int64)
    for a in range(n):
        right = np.flatnonzero(T[a] == 0)
        left = np.flatnonzero(T[:, a] == 0)
        common = np.intersect1d(right, left)
        if len(common) == 0:
            raise NoInverse(f"element {a} has no two-sided inverse")
        inverses[a] = common[0]

    # (a*b)*c vs a*(b*c), all triples at once
    lhs = T[T]
    rhs = T[idx[:, None, None], T[None, :, :]]
    bad = np.argwhere(lhs != rhs)
    if len(bad):
        a, b, c = map(int, bad[0])
        raise NotAssociative(f"({a}*{b})*{c} != {a}*({b}*{c})")

    return FiniteGroup(T, inverses)


def subgroup_closure(G: FiniteGroup, gens: Iterable[int]) -> Subgroup:
    gens = sorted(set(int(g) for g in gens))
    for g in gens:
        G.check_index(g)
    members = {0}
    frontier = [0]
    # in a finite group, closure under right multiplication by generators suffices
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = G.mul(x, g)
                if y not in members:
                    members.add(y)
                    nxt.append(y)
        frontier = nxt
    return Subgroup(G, tuple(sorted(members)))


def is_normal(G: FiniteGroup, S: Subgroup) -> bool:
    if S.parent != G:
        raise MismatchedDomains("subgroup does not belong to this group")
    members = np.array(S.members)
    for g in range(G.order):
        conj = G.table[G.table[g, members], G.inverses[g]]
        if not all(int(x) in S for x in conj):
            return False
    return True


def quotient(G: FiniteGroup, K: Subgroup) -> tuple[FiniteGroup, Homomorphism]:
    """Quotient ``G/K`` on minimal-index coset representatives, with its projection.

    Coset ``i`` of the quotient is represented by the ``i``-th smallest
    representative, so the coset of 0 (that is, ``K`` itself) comes first.
    """
    if not is_normal(G, K):
        raise NotNormal(f"subgroup {list(K.members)} is not normal")
    coset_of = np.full(G.order, -1, dtype=np.int64)
    reps = []
    for g in range(G.order):
        if coset_of[g] >= 0:
            continue
        coset_of[G.table[g, list(K.members)]] = len(reps)
        reps.append(g)
    m = len(reps)
    table = np.empty((m, m), dtype=np.int64)
    for i, a in enumerate(reps):
        for j, b in enumerate(reps):
            table[i, j] = coset_of[G.table[a, b]]
    Q = make_group(table)
    return Q, Homomorphism(G, Q, tuple(int(c) for c in coset_of))


def make_hom(source: FiniteGroup, target: FiniteGroup, images: Sequence[int]) -> Homomorphism:
    images = [int(x) for x in images]
    if len(images) != source.order:
        raise NotAHomomorphism(
            f"expected {source.order} images, got {len(images)}")
    for x in images:
        target.check_index(x)
    if images[0] != 0:
        raise IdentityNotPreserved(f"identity maps to {images[0]}")
    img = np.array(images)
    lhs = img[source.table]
    rhs = target.table[img[:, None], img[None, :]]
    bad = np.argwhere(lhs != rhs)
    if len(bad):
        a, b = map(int, bad[0])
        raise NotAHomomorphism(f"h({a}*{b}) != h({a})*h({b})")
    return Homomorphism(source, target, tuple(images))


def make_character(G: FiniteGroup, signs: Sequence[int]) -> OrientationCharacter:
    signs = [int(s) for s in signs]
    if len(signs) != G.order:
        raise NotMultiplicative(f"expected {G.order} signs, got {len(signs)}")
    if any(s not in (1, -1) for s in signs):
        raise NotMultiplicative("signs must be +1 or -1")
    if signs[0] != 1:
        raise IdentityNotPositive("identity must have sign +1")
    w = np.array(signs)
    bad = np.argwhere(w[G.table] != w[:, None] * w[None, :])
    if len(bad):
        a, b = map(int, bad[0])
        raise NotMultiplicative(f"w({a}*{b}) != w({a})*w({b})")
    return OrientationCharacter(G, tuple(signs))


def _check_parallel(phi: Homomorphism, psi: Homomorphism) -> None:
    if phi.source != psi.source or phi.target != psi.target:
        raise MismatchedDomains("homomorphisms must share source and target")


def equalizer(phi: Homomorphism, psi: Homomorphism) -> Subgroup:
    _check_parallel(phi, psi)
    return Subgroup(phi.source, tuple(
        g for g in range(phi.source.order) if phi.images[g] == psi.images[g]))


def twisted_equalizer(phi: Homomorphism, psi: Homomorphism, alpha: int) -> Subgroup:
    """Elements g with ``psi(g) * alpha == alpha * phi(g)``: the stabilizer of ``alpha``."""
    _check_parallel(phi, psi)
    N = phi.target
    N.check_index(alpha)
    lhs = N.table[psi.array, alpha]
    rhs = N.table[alpha, phi.array]
    return Subgroup(phi.source, tuple(int(g) for g in np.flatnonzero(lhs == rhs)))


def center(G: FiniteGroup) -> Subgroup:
    commutes = (G.table == G.table.T).all(axis=1)
    return Subgroup(G, tuple(int(z) for z in np.flatnonzero(commutes)))


def generating_set(G: FiniteGroup) -> list[int]:
    """Greedy generators: repeatedly add the smallest element not yet generated."""
    gens: list[int] = []
    current = G.trivial_subgroup()
    while current.order < G.order:
        g = next(x for x in range(G.order) if x not in current)
        gens.append(g)
        current = subgroup_closure(G, gens)
    return gens


def enumerate_homs(source: FiniteGroup, target: FiniteGroup,
                   budget: int = 2_000_000) -> list[Homomorphism]:
    """All homomorphisms ``source -> target``, sorted by image array.

    Tries every assignment of target elements to a generating set of the
    source; ``budget`` bounds the number of table lookups attempted.
    """
    gens = generating_set(source)
    cost = target.order ** len(gens) * source.order
    if cost > budget:
        raise BudgetExceeded(f"{cost} lookups needed, budget is {budget}")

    # a BFS spanning tree over the Cayley graph: each element is reached
    # from an earlier one by one generator step
    order, step = [0], {}
    seen = {0}
    for x in order:
        for k, g in enumerate(gens):
            y = source.mul(x, g)
            if y not in seen:
                seen.add(y)
                step[y] = (x, k)
                order.append(y)

    homs = []
    for gen_imgs in itertools.product(range(target.order), repeat=len(gens)):
        images = [0] * source.order
        for y in order[1:]:
            x, k = step[y]
            images[y] = target.mul(images[x], gen_imgs[k])
        try:
            homs.append(make_hom(source, target, images))
        except NotAHomomorphism:
            continue
    homs.sort(key=lambda h: h.images)
    return homs


def all_subgroups(G: FiniteGroup) -> list[Subgroup]:
    """Every subgroup, sorted by (order, members)."""
    found = {subgroup_closure(G, [g]).members for g in range(G.order)}
    frontier = set(found)
    while frontier:
        new = set()
        for a in frontier:
            for b in found:
                j = subgroup_closure(G, a + b).members
                if j not in found and j not in new:
                    new.add(j)
        found |= new
        frontier = new
    return [Subgroup(G, m) for m in sorted(found, key=lambda m: (len(m), m))]


def normal_subgroups(G: FiniteGroup) -> list[Subgroup]:
    return [S for S in all_subgroups(G) if is_normal(G, S)]


def characters(G: FiniteGroup) -> list[OrientationCharacter]:
    """All sign characters of ``G``, trivial first."""
    C2 = make_group([[0, 1], [1, 0]])
    return [OrientationCharacter(G, tuple(1 - 2 * x for x in h.images))
            for h in enumerate_homs(G, C2)]


def trivial_character(G: FiniteGroup) -> OrientationCharacter:
    return OrientationCharacter(G, (1,) * G.order)


def constant_hom(source: FiniteGroup, target: FiniteGroup) -> Homomorphism:
    return Homomorphism(source, target, (0,) * source.order)


def identity_hom(G: FiniteGroup) -> Homomorphism:
    return Homomorphism(G, G, tuple(range(G.order)))
