"""Text instance files and a seeded random instance generator.

Grammar (line oriented, ``#`` starts a comment)::

    group M order <n>
    table
    <n rows of n indices>
    endtable
    group N order <m>
    table ... endtable
    char wM : <n signs, + or ->
    char wN : <m signs>
    hom f : M -> N : <n indices>
    hom g : M -> N : <n indices>
    covering : KM { <indices> } KN { <indices> }     # optional
    config                                           # optional
    class <alpha> : labels <indices>
    endconfig
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .catalog import catalog
from .classes import CoincidencePair, class_of, reidemeister_classes
from .covering import RegularCovering, check_liftable, trivial_covering
from .groups import (
    FiniteGroup, GroupError, Subgroup, characters, enumerate_homs, make_character,
    make_group, make_hom, normal_subgroups,
)
from .semiindex import ClassConfiguration, DuplicateClass

__all__ = [
    "InstanceError", "InstanceSyntaxError", "ValidationError", "MissingSection",
    "GenerationExhausted", "Instance", "parse_instance", "emit_instance",
    "random_instance",
]


class InstanceError(ValueError):
    pass


class InstanceSyntaxError(InstanceError):
    def __init__(self, line: int, msg: str):
        super().__init__(f"line {line}: {msg}")
        self.line = line


class ValidationError(InstanceError):
    def __init__(self, line: int, cause: Exception | str):
        super().__init__(f"line {line}: {cause}")
        self.line = line
        self.cause = cause


class MissingSection(InstanceError):
    pass


class GenerationExhausted(RuntimeError):
    pass


@dataclass(frozen=True)
class Instance:
    M: FiniteGroup
    N: FiniteGroup
    pair: CoincidencePair
    covering: tuple[Subgroup, Subgroup] | None = None
    config: dict[int, tuple[int, ...]] | None = field(default=None)

    def classes(self):
        return reidemeister_classes(self.pair)

    def regular_covering(self) -> RegularCovering:
        if self.covering is None:
            return trivial_covering(self.pair)
        return check_liftable(self.pair, *self.covering)

    def configurations(self) -> list[ClassConfiguration]:
        """One configuration per class, in class order; unconfigured classes are empty."""
        by_twist = {}
        classes = self.classes()
        for alpha, labels in (self.config or {}).items():
            by_twist[class_of(classes, alpha).twist] = labels
        return [ClassConfiguration(self.pair, cls, by_twist.get(cls.twist, ()))
                for cls in classes]


def _ints(tokens: list[str], line: int) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError as exc:
        raise InstanceSyntaxError(line, f"expected integers: {exc}") from None


def _signs(tokens: list[str], line: int) -> list[int]:
    out = []
    for t in tokens:
        for ch in t:
            if ch == "+":
                out.append(1)
            elif ch == "-":
                out.append(-1)
            else:
                raise InstanceSyntaxError(line, f"bad sign {ch!r}")
    return out


def _braced(tokens: list[str], line: int) -> list[int]:
    if len(tokens) < 2 or tokens[0] != "{" or tokens[-1] != "}":
        raise InstanceSyntaxError(line, "expected { indices }")
    return _ints(tokens[1:-1], line)


def parse_instance(text: str) -> Instance:
    lines = []
    for no, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split("#", 1)[0].split()
        if tokens:
            lines.append((no, tokens))

    groups: dict[str, tuple[FiniteGroup, int]] = {}
    chars: dict[str, tuple[list[int], int]] = {}
    homs: dict[str, tuple[list[int], int]] = {}
    covering = None
    config: dict[int, tuple[int, ...]] | None = None
    config_lines: dict[int, int] = {}

    pos = 0
    while pos < len(lines):
        no, tok = lines[pos]
        head = tok[0]
        if head == "group":
            if len(tok) != 4 or tok[2] != "order" or tok[1] not in ("M", "N"):
                raise InstanceSyntaxError(no, "expected 'group M|N order <n>'")
            name, n = tok[1], _ints([tok[3]], no)[0]
            if n <= 0:
                raise InstanceSyntaxError(no, "order must be positive")
            pos += 1
            if pos >= len(lines) or lines[pos][1] != ["table"]:
                raise InstanceSyntaxError(lines[pos][0] if pos < len(lines) else no,
                                          "expected 'table'")
            rows = []
            pos += 1
            while pos < len(lines) and lines[pos][1] != ["endtable"]:
                if lines[pos][1][0] in ("group", "char", "hom", "covering", "config"):
                    break
                rows.append(_ints(lines[pos][1], lines[pos][0]))
                pos += 1
            if pos >= len(lines) or lines[pos][1] != ["endtable"]:
                raise InstanceSyntaxError(lines[pos - 1][0], "missing 'endtable'")
            if len(rows) != n or any(len(r) != n for r in rows):
                raise InstanceSyntaxError(no, f"table must be {n} rows of {n} indices")
            try:
                groups[name] = (make_group(rows), no)
            except GroupError as exc:
                raise ValidationError(no, exc) from None
        elif head == "char":
            if len(tok) < 3 or tok[1] not in ("wM", "wN") or tok[2] != ":":
                raise InstanceSyntaxError(no, "expected 'char wM|wN : <signs>'")
            chars[tok[1]] = (_signs(tok[3:], no), no)
        elif head == "hom":
            if (len(tok) < 7 or tok[1] not in ("f", "g") or tok[2] != ":"
                    or tok[3:6] != ["M", "->", "N"] or tok[6] != ":"):
                raise InstanceSyntaxError(no, "expected 'hom f|g : M -> N : <indices>'")
            homs[tok[1]] = (_ints(tok[7:], no), no)
        elif head == "covering":
            try:
                km = tok.index("KM")
                kn = tok.index("KN")
            except ValueError:
                raise InstanceSyntaxError(no, "expected 'covering : KM { .. } KN { .. }'") from None
            if tok[1] != ":" or km != 2 or kn < km:
                raise InstanceSyntaxError(no, "expected 'covering : KM { .. } KN { .. }'")
            covering = (_braced(tok[km + 1:kn], no), _braced(tok[kn + 1:], no), no)
        elif head == "config":
            config = {}
            pos += 1
            while pos < len(lines) and lines[pos][1] != ["endconfig"]:
                cno, ctok = lines[pos]
                if len(ctok) < 4 or ctok[0] != "class" or ctok[2] != ":" or ctok[3] != "labels":
                    raise InstanceSyntaxError(cno, "expected 'class <alpha> : labels <indices>'")
                alpha = _ints([ctok[1]], cno)[0]
                if alpha in config:
                    raise ValidationError(cno, DuplicateClass(f"class {alpha} listed twice"))
                config[alpha] = tuple(_ints(ctok[4:], cno))
                config_lines[alpha] = cno
                pos += 1
            if pos >= len(lines):
                raise InstanceSyntaxError(lines[-1][0], "missing 'endconfig'")
        else:
            raise InstanceSyntaxError(no, f"unknown directive {head!r}")
        pos += 1

    for name, store in (("group M", groups.get("M")), ("group N", groups.get("N")),
                        ("char wM", chars.get("wM")), ("char wN", chars.get("wN")),
                        ("hom f", homs.get("f")), ("hom g", homs.get("g"))):
        if store is None:
            raise MissingSection(f"missing section '{name}'")

    M, N = groups["M"][0], groups["N"][0]

    def build(fn, args, line):
        try:
            return fn(*args)
        except GroupError as exc:
            raise ValidationError(line, exc) from None

    wM = build(make_character, (M, chars["wM"][0]), chars["wM"][1])
    wN = build(make_character, (N, chars["wN"][0]), chars["wN"][1])
    f = build(make_hom, (M, N, homs["f"][0]), homs["f"][1])
    g = build(make_hom, (M, N, homs["g"][0]), homs["g"][1])
    pair = CoincidencePair(f, g, wM, wN)

    cov = None
    if covering is not None:
        km, kn, line = covering
        for grp, idx in ((M, km), (N, kn)):
            for x in idx:
                build(grp.check_index, (x,), line)
        if sorted(set(km)) != sorted(km) or sorted(set(kn)) != sorted(kn):
            raise ValidationError(line, "repeated covering index")
        K_M = Subgroup(M, tuple(sorted(km)))
        K_N = Subgroup(N, tuple(sorted(kn)))
        for grp, K in ((M, K_M), (N, K_N)):
            if 0 not in K or any(grp.mul(a, grp.inv(b)) not in K for a in K for b in K):
                raise ValidationError(line, f"{list(K.members)} is not a subgroup")
        build(check_liftable, (pair, K_M, K_N), line)
        cov = (K_M, K_N)

    if config is not None:
        classes = reidemeister_classes(pair)
        seen = {}
        for alpha, labels in config.items():
            line = config_lines[alpha]
            build(N.check_index, (alpha,), line)
            for x in labels:
                build(M.check_index, (x,), line)
            rep = class_of(classes, alpha).twist
            if rep in seen:
                raise ValidationError(line, DuplicateClass(
                    f"class {alpha} is the same class as {seen[rep]}"))
            seen[rep] = alpha

    return Instance(M, N, pair, cov, config)


def _fmt_table(G: FiniteGroup) -> list[str]:
    return [" ".join(str(int(x)) for x in row) for row in G.table]


def _fmt_signs(signs) -> str:
    return " ".join("+" if s == 1 else "-" for s in signs)


def emit_instance(inst: Instance) -> str:
    pair = inst.pair
    out = []
    for name, G in (("M", inst.M), ("N", inst.N)):
        out.append(f"group {name} order {G.order}")
        out.append("table")
        out.extend(_fmt_table(G))
        out.append("endtable")
    out.append(f"char wM : {_fmt_signs(pair.w_M.signs)}")
    out.append(f"char wN : {_fmt_signs(pair.w_N.signs)}")
    for name, h in (("f", pair.phi), ("g", pair.psi)):
        out.append(f"hom {name} : M -> N : " + " ".join(map(str, h.images)))
    if inst.covering is not None:
        km, kn = inst.covering
        out.append("covering : KM { " + " ".join(map(str, km.members))
                   + " } KN { " + " ".join(map(str, kn.members)) + " }")
    if inst.config is not None:
        out.append("config")
        for alpha in sorted(inst.config):
            labels = " ".join(map(str, inst.config[alpha]))
            out.append(f"class {alpha} : labels {labels}".rstrip())
        out.append("endconfig")
    return "\n".join(out) + "\n"


def _generate(rng: np.random.Generator, max_order: int, attempts: int) -> Instance:
    groups = list(catalog(max_order).items())
    _, M = groups[rng.integers(len(groups))]
    _, N = groups[rng.integers(len(groups))]

    homs = enumerate_homs(M, N)
    f = homs[rng.integers(len(homs))]
    g = homs[rng.integers(len(homs))]

    chars_M, chars_N = characters(M), characters(N)
    wM = chars_M[rng.integers(len(chars_M))]
    # half the time an orientable target, so the double cover case shows up
    wN = chars_N[0] if rng.random() < 0.5 else chars_N[rng.integers(len(chars_N))]
    pair = CoincidencePair(f, g, wM, wN)

    normals_M, normals_N = normal_subgroups(M), normal_subgroups(N)
    for _ in range(attempts):
        K_M = normals_M[rng.integers(len(normals_M))]
        K_N = normals_N[rng.integers(len(normals_N))]
        if all(f(k) in K_N and g(k) in K_N for k in K_M):
            break
    else:
        raise GenerationExhausted(f"no liftable covering after {attempts} attempts")

    config = {}
    for cls in reidemeister_classes(pair):
        n = int(rng.integers(0, 7))
        config[cls.twist] = tuple(int(x) for x in rng.integers(0, M.order, size=n))
    return Instance(M, N, pair, (K_M, K_N), config)


def random_instance(seed: int, max_order: int = 16, attempts: int = 32,
                    rounds: int = 64) -> str:
    """Instance text, a deterministic function of ``(seed, max_order)``.

    When the covering search runs out of attempts the generator restarts
    from the next derived seed, up to ``rounds`` times.
    """
    if not 0 <= seed < 2 ** 64:
        raise ValueError("seed must be an unsigned 64-bit integer")
    if max_order < 1:
        raise ValueError("max_order must be positive")
    seq = np.random.SeedSequence(seed)
    for child in seq.spawn(rounds):
        try:
            inst = _generate(np.random.default_rng(child), max_order, attempts)
        except GenerationExhausted:
            continue
        return emit_instance(inst)
    raise GenerationExhausted(f"seed {seed}: every derived seed exhausted")
