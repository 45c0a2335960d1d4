"""descjones: exact descendant colored Jones invariants and root-of-unity state sums.

Exit status: 0 when everything computed or passed, 1 when any check
failed (conjecture failures included), 2 on usage or input errors.
Integer ranges accept ``5``, ``1..8`` (inclusive) or ``2,3,5``.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from typing import Any, Callable, Sequence

from . import descendants as dsc
from . import habiro as hb
from . import qdiff
from .report import Report
from .rmatrix import rmatrix_suite

LEVEL_ENV = "DESCJONES_LEVEL"
DEFAULT_LEVEL = 10


class UsageError(Exception):
    pass


def parse_range(text: str) -> list[int]:
    """'3' -> [3], '1..4' -> [1, 2, 3, 4], '2,5' -> [2, 5]."""
    out: list[int] = []
    try:
        for part in text.split(","):
            part = part.strip()
            if ".." in part:
                lo, hi = part.split("..", 1)
                lo_i, hi_i = int(lo), int(hi)
                if hi_i < lo_i:
                    raise argparse.ArgumentTypeError(f"empty range {part!r}")
                out.extend(range(lo_i, hi_i + 1))
            else:
                out.append(int(part))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer range: {text!r}") from None
    return out


def default_level() -> int:
    raw = os.environ.get(LEVEL_ENV)
    if raw is None:
        return DEFAULT_LEVEL
    try:
        level = int(raw)
    except ValueError:
        raise UsageError(f"{LEVEL_ENV} must be a positive integer, got {raw!r}") from None
    if level < 1:
        raise UsageError(f"{LEVEL_ENV} must be a positive integer, got {raw!r}")
    return level


def _require(values: Sequence[int], low: int, name: str) -> None:
    bad = [v for v in values if v < low]
    if bad:
        raise UsageError(f"--{name} must be at least {low}, got {bad[0]}")


def _sequence(args) -> hb.HabiroSequence:
    if getattr(args, "habiro_file", None):
        return hb.load_habiro_file(args.habiro_file, knot=args.knot or "user")
    if not args.knot:
        raise UsageError("give --knot or --habiro-file")
    return hb.habiro_sequence(args.knot)


def _jsonable(value: Any) -> Any:
    if hasattr(value, "to_json"):
        return value.to_json()
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


class Output:
    """Collects value records or a report and renders them deterministically."""

    def __init__(self, fmt: str):
        self.fmt = fmt
        self.records: list[tuple[dict, Any]] = []
        self.report: Report | None = None

    def value(self, key: dict, value: Any) -> None:
        self.records.append((key, value))

    def render(self) -> str:
        if self.report is not None:
            if self.fmt == "json":
                return self.report.dumps()
            passed = sum(1 for c in self.report if not c.failed and c.status != "INFO")
            tail = f"summary: {passed} passed, {len(self.report.failures)} failed"
            return "\n".join(filter(None, [self.report.text(), tail]))
        if self.fmt == "json":
            rows = [dict(key, value=_jsonable(v)) for key, v in self.records]
            return json.dumps(rows, indent=1, sort_keys=True)
        lines = []
        for key, v in self.records:
            label = " ".join(f"{k}={key[k]}" for k in key)
            text = str(v) if not isinstance(v, list) else "; ".join(str(t) for t in v)
            lines.append(f"{label}\t{text}")
        return "\n".join(lines)


# subcommand handlers

def cmd_jones(args, out: Output) -> None:
    _require(args.n, 1, "n")
    seq = _sequence(args)
    for n in args.n:
        out.value({"knot": seq.knot, "n": n}, hb.jones_from_habiro(seq, n))


def cmd_habiro(args, out: Output) -> None:
    _require(args.k, 0, "k")
    if args.source == "recursion":
        if args.knot != "5_2":
            raise UsageError("--source recursion is only available for 5_2")
        seq = hb.recursion_sequence_52()
    else:
        seq = _sequence(args)
    for k in args.k:
        out.value({"knot": seq.knot, "k": k}, seq[k])


def cmd_descendant(args, out: Output) -> None:
    low = 1
    _require(args.param, low, "param")
    seq = _sequence(args)
    fn = dsc.mirror_descendant if args.mirror else dsc.descendant
    for m in args.m:
        for p in args.param:
            d = fn(seq, m, p, args.mode)
            out.value({"knot": d.knot, "m": m, "mode": args.mode, "param": p}, d.payload)


def cmd_eval(args, out: Output) -> None:
    _require(args.N, 1, "N")
    if args.ab is not None:
        a, b = args.ab
        for N in args.N:
            out.value({"knot": "5_2", "a": a, "b": b, "N": N}, dsc.dj_ab_52(a, b, N))
        return
    seq = _sequence(args)
    for m in args.m:
        for N in args.N:
            out.value({"knot": seq.knot, "m": m, "N": N}, dsc.dj_eval_root(seq, m, N))


def cmd_recursion_check(args, out: Output) -> Report:
    if args.knot not in hb.BUILTIN_KNOTS:
        raise hb.UnknownKnotError(f"no recursion for {args.knot!r}")
    if args.level is not None:
        _require([args.level], 1, "level")
        report = qdiff.verify_relation(args.knot, args.m, level=args.level)
    else:
        _require(args.n, 1, "n")
        report = qdiff.verify_relation(args.knot, args.m, args.n)
    report.extend(qdiff.displayed_operator_report(args.knot))
    return report


def cmd_identities_52(args, out: Output) -> Report:
    report = Report()
    levels = args.level if args.level is not None else [default_level()]
    _require(levels, 1, "level")
    _require(args.N, 1, "N")
    for level in levels:
        report.extend(dsc.verify_52_identities(level=level))
    for N in args.N:
        report.extend(dsc.verify_52_identities(N=N))
    return report


def cmd_rmatrix_check(args, out: Output) -> Report:
    _require(args.N, 2, "N")
    return rmatrix_suite(args.N, yang_baxter=not args.skip_yang_baxter)


def _diagram(source: str | None, knot: str | None):
    from .statesum.diagram import BUILTIN_DIAGRAMS, builtin_diagram, load_diagram, validate_diagram

    if source is None:
        if knot is None:
            raise UsageError("give --diagram or --knot")
        return builtin_diagram(knot)
    if source in BUILTIN_DIAGRAMS:
        return builtin_diagram(source)
    d = validate_diagram(load_diagram(source))
    return d


def cmd_statesum(args, out: Output) -> None:
    from .statesum.contract import contract

    _require(args.N, 1, "N")
    d = _diagram(args.diagram, args.knot)
    for N in args.N:
        for n in (args.color if args.color is not None else range(N)):
            inv = contract(d, N, n, knot=args.knot or d.name)
            out.value({"diagram": d.name or args.diagram, "N": N, "color": n}, inv)


def cmd_conjecture2(args, out: Output) -> Report:
    from .statesum.checks import conjecture2_check

    _require(args.N, 1, "N")
    hb.habiro_sequence(args.knot)
    d = _diagram(args.diagram, args.knot)
    report = Report()
    for N in args.N:
        for n in (args.color if args.color is not None else range(N)):
            report.extend(conjecture2_check(args.knot, d, N, n))
    return report


def cmd_invariance(args, out: Output) -> Report:
    from .statesum.checks import invariance_check

    _require(args.N, 1, "N")
    d1, d2 = _diagram(args.diagram_a, None), _diagram(args.diagram_b, None)
    report = Report()
    for N in args.N:
        for n in (args.color if args.color is not None else range(N)):
            report.extend(invariance_check(args.knot or "knot", d1, d2, N, n))
    return report


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="descjones", description=__doc__.split("\n\n")[0])
    parser.add_argument("--format", choices=("text", "json"), default="text")
    sub = parser.add_subparsers(dest="command", required=True)
    rng = parse_range

    def add(name: str, handler: Callable, help_text: str, knot: bool = True) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(handler=handler)
        p.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS)
        if knot:
            p.add_argument("--knot", help="3_1, 4_1 or 5_2; a trailing * selects the mirror")
        return p

    p = add("jones", cmd_jones, "colored Jones polynomials J_n")
    p.add_argument("--n", type=rng, required=True)
    p.add_argument("--habiro-file")

    p = add("habiro", cmd_habiro, "Habiro coefficients H_k")
    p.add_argument("--k", type=rng, required=True)
    p.add_argument("--source", choices=("closed", "recursion"), default="closed")
    p.add_argument("--habiro-file")

    p = add("descendant", cmd_descendant, "descendants DJ^(m) in one of four modes")
    p.add_argument("--m", type=rng, required=True)
    p.add_argument("--mode", choices=dsc.MODES, default="colored")
    p.add_argument("--param", type=rng, required=True,
                   help="color n (colored), term count (x), level (habiro) or root order N (root)")
    p.add_argument("--mirror", action="store_true")
    p.add_argument("--habiro-file")

    p = add("eval", cmd_eval, "values at q = exp(2 pi i / N)")
    p.add_argument("--m", type=rng, default=[0])
    p.add_argument("--N", type=rng, required=True)
    p.add_argument("--ab", type=lambda t: tuple(int(v) for v in t.split(",")),
                   help="a,b: evaluate the two-parameter 5_2 family instead")
    p.add_argument("--habiro-file")

    p = add("recursion-check", cmd_recursion_check, "verify a built-in q-difference relation")
    p.add_argument("--m", type=rng, required=True)
    p.add_argument("--n", type=rng, default=list(range(1, 9)))
    p.add_argument("--level", type=int)

    p = add("identities-52", cmd_identities_52, "the five DJ_{a,b} relations for 5_2", knot=False)
    p.add_argument("--level", type=rng, help=f"truncation levels (default ${LEVEL_ENV} or {DEFAULT_LEVEL})")
    p.add_argument("--N", type=rng, default=[5, 7])

    p = add("rmatrix-check", cmd_rmatrix_check, "Yang-Baxter, gauge and Fourier identities", knot=False)
    p.add_argument("--N", type=rng, default=[2, 3, 4])
    p.add_argument("--skip-yang-baxter", action="store_true")

    p = add("statesum", cmd_statesum, "state-sum matrix of a diagram")
    p.add_argument("--diagram", help="built-in diagram name or JSON file")
    p.add_argument("--N", type=rng, required=True)
    p.add_argument("--color", type=rng)

    p = add("conjecture2", cmd_conjecture2, "compare the state sum with J_{n+1} at the root")
    p.add_argument("--diagram")
    p.add_argument("--N", type=rng, required=True)
    p.add_argument("--color", type=rng)

    p = add("invariance", cmd_invariance, "compare two diagrams of the same knot")
    p.add_argument("--diagram-a", required=True)
    p.add_argument("--diagram-b", required=True)
    p.add_argument("--N", type=rng, required=True)
    p.add_argument("--color", type=rng)
    return parser


_NEGATIVE_VALUE = re.compile(r"-\d")


def _attach_negative_values(argv: Sequence[str]) -> list[str]:
    """Rewrite ``--m -1..1`` as ``--m=-1..1`` so argparse does not read the range as a flag."""
    out: list[str] = []
    for tok in argv:
        if out and _NEGATIVE_VALUE.match(tok) and out[-1].startswith("--") and "=" not in out[-1]:
            out[-1] = f"{out[-1]}={tok}"
        else:
            out.append(tok)
    return out


def main(argv: Sequence[str] | None = None) -> int:
    from .statesum.diagram import DiagramError

    parser = build_parser()
    argv = _attach_negative_values(sys.argv[1:] if argv is None else argv)
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    out = Output(args.format)
    try:
        result = args.handler(args, out)
    except (UsageError, hb.UnknownKnotError, DiagramError, hb.InconsistentDataError,
            ValueError, IndexError, OSError) as exc:
        print(f"descjones {args.command}: error: {exc}", file=sys.stderr)
        return 2
    if isinstance(result, Report):
        out.report = result
    text = out.render()
    if text:
        print(text)
    if out.report is not None and not out.report.ok:
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
