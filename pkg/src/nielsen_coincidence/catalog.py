"""Small named groups used for examples and random instance generation.

Catalog version 1: C1, C2, C3, C4, C6, C8, C2xC2, C2xC4, S3, D4, Q8,
C2xC2xC2, C2xS3, C4xC4, C2xD4, C2xQ8.  Element numbering is fixed:

* cyclic ``Cn``: ``k`` is the k-th power of the generator;
* dihedral ``Dn`` (order 2n): ``i + n*e`` is ``r^i s^e``, so in S3 the
  rotation ``r`` is 1 and the reflection ``s`` is 3;
* ``Q8``: 1, -1, i, -i, j, -j, k, -k;
* ``A x B``: the pair ``(a, b)`` is ``a * |B| + b``.
"""
from __future__ import annotations

from functools import lru_cache

import numpy as np

from .groups import FiniteGroup, make_group

CATALOG_VERSION = 1


def cyclic(n: int) -> FiniteGroup:
    idx = np.arange(n)
    return make_group((idx[:, None] + idx[None, :]) % n)


def dihedral(n: int) -> FiniteGroup:
    """Symmetries of the n-gon, order 2n."""
    table = np.empty((2 * n, 2 * n), dtype=np.int64)
    for a in range(2 * n):
        i, e = a % n, a // n
        for b in range(2 * n):
            j, f = b % n, b // n
            table[a, b] = (i + (-1) ** e * j) % n + n * ((e + f) % 2)
    return make_group(table)


def quaternion() -> FiniteGroup:
    # unit quaternions as (sign, unit) with unit in 1, i, j, k
    units = {(0, 0): (1, 0), (0, 1): (1, 1), (0, 2): (1, 2), (0, 3): (1, 3),
             (1, 0): (1, 1), (1, 1): (-1, 0), (1, 2): (1, 3), (1, 3): (-1, 2),
             (2, 0): (1, 2), (2, 1): (-1, 3), (2, 2): (-1, 0), (2, 3): (1, 1),
             (3, 0): (1, 3), (3, 1): (1, 2), (3, 2): (-1, 1), (3, 3): (-1, 0)}

    def decode(a):
        return (1 if a % 2 == 0 else -1), a // 2

    def encode(sign, u):
        return 2 * u + (0 if sign == 1 else 1)

    table = np.empty((8, 8), dtype=np.int64)
    for a in range(8):
        sa, ua = decode(a)
        for b in range(8):
            sb, ub = decode(b)
            s, u = units[ua, ub]
            table[a, b] = encode(sa * sb * s, u)
    return make_group(table)


def direct_product(A: FiniteGroup, B: FiniteGroup) -> FiniteGroup:
    m = B.order
    idx = np.arange(A.order * m)
    a, b = idx // m, idx % m
    table = A.table[a[:, None], a[None, :]] * m + B.table[b[:, None], b[None, :]]
    return make_group(table)


_BUILDERS = {
    "C1": lambda: cyclic(1),
    "C2": lambda: cyclic(2),
    "C3": lambda: cyclic(3),
    "C4": lambda: cyclic(4),
    "C6": lambda: cyclic(6),
    "C8": lambda: cyclic(8),
    "C2xC2": lambda: direct_product(cyclic(2), cyclic(2)),
    "C2xC4": lambda: direct_product(cyclic(2), cyclic(4)),
    "S3": lambda: dihedral(3),
    "D4": lambda: dihedral(4),
    "Q8": quaternion,
    "C2xC2xC2": lambda: direct_product(cyclic(2), direct_product(cyclic(2), cyclic(2))),
    "C2xS3": lambda: direct_product(cyclic(2), dihedral(3)),
    "C4xC4": lambda: direct_product(cyclic(4), cyclic(4)),
    "C2xD4": lambda: direct_product(cyclic(2), dihedral(4)),
    "C2xQ8": lambda: direct_product(cyclic(2), quaternion()),
}

CATALOG_NAMES: tuple[str, ...] = tuple(_BUILDERS)


@lru_cache(maxsize=None)
def catalog_group(name: str) -> FiniteGroup:
    try:
        return _BUILDERS[name]()
    except KeyError:
        raise KeyError(f"unknown catalog group {name!r}") from None


def catalog(max_order: int = 16) -> dict[str, FiniteGroup]:
    """Catalog groups of order at most ``max_order``, in catalog order."""
    out = {}
    for name in CATALOG_NAMES:
        G = catalog_group(name)
        if G.order <= max_order:
            out[name] = G
    return out
