"""Command line front end.

    nielsen-coin [--machine] validate|classes|type|semiindex|lift|doublecover FILE
    nielsen-coin [--machine] verify [--oracle] FILE | --batch DIR
    nielsen-coin gen --seed S --max-order N

Exit codes: 0 success, 1 bad input, 2 a verified property failed.
"""
from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable

from . import checks
from .classes import orientation_type
from .covering import (
    SourceOrientable, TargetNonorientable, double_orientable_cover, lift_report,
)
from .groups import GroupError, center
from .instance import Instance, InstanceError, parse_instance, random_instance
from .semiindex import nielsen_number, semi_index

OK, INPUT_ERROR, VERIFY_FAILED = 0, 1, 2


@dataclass
class Report:
    lines: list[str] = field(default_factory=list)
    items: list[tuple[str, str]] = field(default_factory=list)
    code: int = OK
    want_machine: bool = False

    def say(self, text: str) -> None:
        self.lines.append(text)

    def put(self, key: str, value) -> None:
        self.items.append((key, _fmt(value)))

    def machine(self) -> str:
        return "".join(f"{k} = {v}\n" for k, v in self.items)

    def render(self, machine: bool = False) -> str:
        text = "".join(line + "\n" for line in self.lines)
        return text + self.machine() if machine else text


def _fmt(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (list, tuple)):
        return " ".join(_fmt(v) for v in value)
    return str(value)


def _classes(inst: Instance, rep: Report) -> None:
    classes = inst.classes()
    rep.say(f"{len(classes)} Reidemeister classes")
    for cls in classes:
        tag = " defective" if cls.defective else ""
        rep.say(f"  class {cls.twist}: size {cls.size}, stabilizer order {cls.stabilizer.order}{tag}")
        rep.put(f"class.{cls.twist}.size", cls.size)
        rep.put(f"class.{cls.twist}.stab", cls.stabilizer.order)
        rep.put(f"class.{cls.twist}.defective", cls.defective)


def _type(inst: Instance, rep: Report) -> None:
    kind = orientation_type(inst.pair.phi, inst.pair.w_M, inst.pair.w_N)
    rep.say(f"map f is of type {kind.value} ({'orientable' if kind.orientable else 'nonorientable'})")
    rep.put("pair.type", kind.value)


def _semiindex(inst: Instance, rep: Report) -> None:
    configs = inst.configurations()
    for cfg in configs:
        s = semi_index(cfg)
        rep.say(f"  class {cfg.cls.twist}: {len(cfg)} point{'' if len(cfg) == 1 else 's'}, semi-index {s}")
        rep.put(f"class.{cfg.cls.twist}.semiindex", s)
    down = nielsen_number(configs)
    rep.say(f"Nielsen number {down}")
    rep.put("nielsen.down", down)


def _lift_entries(report, rep: Report) -> None:
    for e in report.entries:
        rep.say(f"  class {e.twist}: T={e.T} k={e.k} lifted classes={e.num_classes} "
                f"formula={e.formula} oracle={e.oracle}")
        key = f"class.{e.twist}.lift"
        rep.put(f"{key}.T", e.T)
        rep.put(f"{key}.k", e.k)
        rep.put(f"{key}.classes", e.num_classes)
        rep.put(f"{key}.defective", e.upstairs_defective)
        rep.put(f"{key}.formula", e.formula)
        rep.put(f"{key}.oracle", e.oracle)
    up = report.nielsen_up()
    rep.say(f"lifted Nielsen number {up}")
    rep.put("nielsen.up", up)
    if not report.matches:
        rep.say("FAIL: lifted semi-index formula disagrees with the oracle")
        rep.code = VERIFY_FAILED


def _lift(inst: Instance, rep: Report) -> None:
    cov = inst.regular_covering()
    rep.say(f"covering: deck groups of order {cov.D_M.order} and {cov.D_N.order}")
    _lift_entries(lift_report(inst.pair, cov, inst.configurations()), rep)


def _doublecover(inst: Instance, rep: Report) -> None:
    configs = inst.configurations()
    cov, dc = double_orientable_cover(inst.pair, configs)
    _lift_entries(lift_report(inst.pair, cov, configs), rep)
    rep.put("nielsen.down", dc.nielsen_down)
    rep.say(f"Nielsen number {dc.nielsen_down}, lifted {dc.nielsen_up}")
    if not dc.passed:
        rep.say("FAIL: double cover properties violated")
        rep.code = VERIFY_FAILED


def _validate(inst: Instance, rep: Report) -> None:
    rep.say(f"valid instance: |M| = {inst.M.order}, |N| = {inst.N.order}, "
            f"{len(inst.classes())} classes")


def _verify_instance(inst: Instance, rep: Report, oracle: bool) -> None:
    pair = inst.pair
    classes = inst.classes()
    configs = inst.configurations()
    cov = inst.regular_covering()

    _type(inst, rep)
    _classes(inst, rep)
    _semiindex(inst, rep)
    report = lift_report(pair, cov, configs)
    _lift_entries(report, rep)

    results: list[tuple[str, list[str] | None]] = [
        ("partition", checks.check_partition(pair, classes)),
        ("orbit_stabilizer", checks.check_orbit_stabilizer(pair, classes)),
        ("defect_invariance", checks.check_defect_invariance(pair, classes)),
        ("stabilizer_signs", checks.check_stabilizer_signs(pair, classes)),
        ("lift_formula", checks.check_lift_formula(pair, cov, configs)),
    ]
    if oracle:
        results.append(("lift_structure", [v for cfg in configs
                                           for v in checks.check_lift_structure(pair, cov, cfg)]))
        results.append(("permutation_invariance", [v for cfg in configs
                                                   for v in checks.check_permutation_invariance(cfg)]))
    results.append(("root", checks.check_root_theorems(pair) if pair.psi.is_constant() else None))
    central = all(b in center(pair.N) for b in pair.phi.images)
    results.append(("center", checks.check_center(pair) if central else None))
    dc = not pair.w_M.is_trivial() and pair.w_N.is_trivial()
    results.append(("doublecover", checks.check_double_cover(pair, configs) if dc else None))

    for name, violations in results:
        if violations is None:
            rep.put(f"verify.{name}", "n/a")
            continue
        rep.put(f"verify.{name}", "fail" if violations else "pass")
        for v in violations:
            rep.say(f"FAIL {name}: {v}")
        if violations:
            rep.code = VERIFY_FAILED
    rep.say("all checks passed" if rep.code == OK else "verification FAILED")


COMMANDS: dict[str, Callable[[Instance, Report], None]] = {
    "validate": _validate,
    "classes": _classes,
    "type": _type,
    "semiindex": _semiindex,
    "lift": _lift,
    "doublecover": _doublecover,
}


def _load(path: str | Path) -> Instance:
    return parse_instance(Path(path).read_text(encoding="utf-8"))


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="nielsen-coin", description=__doc__.splitlines()[0])
    p.add_argument("--machine", action="store_true", help="append key = value lines")
    sub = p.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sp = sub.add_parser(name)
        sp.add_argument("file")
    v = sub.add_parser("verify")
    v.add_argument("file", nargs="?")
    v.add_argument("--oracle", action="store_true",
                   help="also run the exhaustive lifted-point and permutation checks")
    v.add_argument("--batch", metavar="DIR")
    g = sub.add_parser("gen")
    g.add_argument("--seed", type=int, required=True)
    g.add_argument("--max-order", type=int, default=16)
    return p


def run_command(argv: list[str]) -> tuple[int, Report]:
    """Run one command and return its exit code and report (nothing is printed)."""
    rep = Report()
    machine = "--machine" in argv
    argv = [a for a in argv if a != "--machine"]
    try:
        args = _parser().parse_args(argv)
    except SystemExit as exc:
        rep.code = INPUT_ERROR if exc.code else OK
        return rep.code, rep
    rep.want_machine = machine and args.command != "gen"

    try:
        if args.command == "gen":
            rep.lines.append(random_instance(args.seed, args.max_order).rstrip("\n"))
        elif args.command == "verify":
            if args.batch:
                files = sorted(Path(args.batch).glob("*.inst"))
                for path in files:
                    sub = Report()
                    try:
                        _verify_instance(_load(path), sub, args.oracle)
                    except (InstanceError, GroupError, OSError) as exc:
                        sub.say(f"error: {exc}")
                        sub.code = INPUT_ERROR
                    rep.say(f"== {path.name}: exit {sub.code}")
                    rep.lines.extend(sub.lines)
                    rep.items.extend((f"{path.name}.{k}", v) for k, v in sub.items)
                    rep.code = max(rep.code, sub.code)
            elif args.file:
                _verify_instance(_load(args.file), rep, args.oracle)
            else:
                raise InstanceError("verify needs a file or --batch DIR")
        else:
            COMMANDS[args.command](_load(args.file), rep)
    except (SourceOrientable, TargetNonorientable) as exc:
        rep.say(f"error: {exc}")
        rep.code = INPUT_ERROR
    except (InstanceError, GroupError, OSError, ValueError) as exc:
        rep.say(f"error: {exc}")
        rep.code = INPUT_ERROR
    return rep.code, rep


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    code, rep = run_command(argv)
    text = rep.render(machine=rep.want_machine)
    stream = sys.stderr if code == INPUT_ERROR else sys.stdout
    stream.write(text)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
