"""Semi-index of a coincidence class from labeled coincidence points.

A transverse class is modeled by a list of labels ``g_1, ..., g_n`` in the
source group, one per coincidence point; the label stands for the path
from the class basepoint to the point.  Two points are R-related when a
connecting path is graph-orientation-reversing.  In a defective class every
pair is R-related; otherwise points i and j are R-related exactly when
``c(g_i) * c(g_j) == -1`` for the combined character ``c``.

The semi-index is the number of points left unpaired after pairing off
R-related points.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .classes import CoincidencePair, ReidemeisterClass, combined_character
from .groups import IndexOutOfRange

__all__ = [
    "ClassConfiguration", "Decomposition", "DuplicateClass",
    "relative_sign", "decompose", "semi_index", "nielsen_number",
]


class DuplicateClass(ValueError):
    pass


@dataclass(frozen=True)
class ClassConfiguration:
    pair: CoincidencePair = field(repr=False)
    cls: ReidemeisterClass
    labels: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(int(g) for g in self.labels))
        for g in self.labels:
            self.pair.G.check_index(g)

    def __len__(self) -> int:
        return len(self.labels)

    def signs(self) -> list[int]:
        c = combined_character(self.pair)
        return [c(g) for g in self.labels]


@dataclass(frozen=True)
class Decomposition:
    free: tuple[int, ...]
    pairs: tuple[tuple[int, int], ...]


def relative_sign(config: ClassConfiguration, i: int, j: int) -> int:
    n = len(config)
    if not (0 <= i < n and 0 <= j < n):
        raise IndexOutOfRange(f"positions ({i}, {j}) out of range for {n} points")
    c = combined_character(config.pair)
    return c(config.labels[i]) * c(config.labels[j])


def decompose(config: ClassConfiguration) -> Decomposition:
    n = len(config)
    if config.cls.defective:
        # any two points are R-related: pair neighbours
        pairs = tuple((i, i + 1) for i in range(0, n - 1, 2))
        free = (n - 1,) if n % 2 else ()
        return Decomposition(free, pairs)

    waiting: dict[int, list[int]] = {1: [], -1: []}
    pairs = []
    for pos, s in enumerate(config.signs()):
        if waiting[-s]:
            pairs.append((waiting[-s].pop(0), pos))
        else:
            waiting[s].append(pos)
    free = tuple(sorted(waiting[1] + waiting[-1]))
    return Decomposition(free, tuple(pairs))


def semi_index(config: ClassConfiguration) -> int:
    return len(decompose(config).free)


def nielsen_number(configs: Sequence[ClassConfiguration]) -> int:
    """Number of essential classes, i.e. classes with non-zero semi-index."""
    seen = set()
    for cfg in configs:
        if cfg.cls.twist in seen:
            raise DuplicateClass(f"class {cfg.cls.twist} configured twice")
        seen.add(cfg.cls.twist)
    return sum(1 for cfg in configs if semi_index(cfg) > 0)
