"""Command-line front end: ``genfib table | verify | gfcheck``.

Exit status: 0 when every check passes or is skipped, 1 when at least one
check fails, 2 on a usage or parse error.  Every value is written as an
exact decimal string, in CSV (with header) or JSON lines.
"""

from __future__ import annotations

import argparse
import csv
import json
import re
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, TextIO

from .exact_arith import format_rational
from .genfam import decompose
from .genfunc import expand, gf_u2, gf_v2
from .horadam import PRESETS, HoradamInit, SequenceParams, horadam_w
from .identities import (DEFAULT_SOURCE, FAIL, IDENTITIES, IdentityReport,
                         SequenceSource, sweep)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

VERIFY_FIELDS = ("identity", "family", "p", "q", "m", "k", "s", "n",
                 "lhs", "rhs", "status", "reason")
DEFAULT_FAMILIES = ("fibonacci", "pell", "jacobsthal", "balancing", "p=3,q=2", "p=2,q=1")

_INT_RE = re.compile(r"[+-]?[0-9]+")
_RANGE_RE = re.compile(r"(?:([A-Za-z]+)=)?([+-]?[0-9]+)\.\.([+-]?[0-9]+)")


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


@dataclass(frozen=True)
class FamilySpec:
    p: int
    q: int
    k: int = 1
    a: int | None = None
    b: int | None = None
    name: str | None = None

    @property
    def params(self) -> SequenceParams:
        return SequenceParams(self.p, self.q)

    @property
    def label(self) -> str:
        return self.name or f"p={self.p},q={self.q}"


def parse_family(text: str) -> FamilySpec:
    """Parse ``NAME`` or ``p=<int>,q=<int>``, optionally followed by
    ``,k=<uint>`` and ``,a=<int>,b=<int>``.

    Whitespace is ignored everywhere.  Positions in error messages are
    0-based offsets into the original string.
    """
    # Drop whitespace but remember where each surviving char came from.
    chars = [(c, i) for i, c in enumerate(text) if not c.isspace()]
    if not chars:
        raise ParseError("empty family spec", 0)
    segments: list[list[tuple[str, int]]] = [[]]
    comma_pos = [len(text)]
    for c, i in chars:
        if c == ",":
            segments.append([])
            comma_pos.append(i)
        else:
            segments[-1].append((c, i))

    values: dict[str, int] = {}
    name = None
    for seg_no, seg in enumerate(segments):
        if not seg:
            raise ParseError("empty field", comma_pos[seg_no] if seg_no else 0)
        body = "".join(c for c, _ in seg)
        start = seg[0][1]
        if "=" not in body:
            if seg_no != 0:
                raise ParseError(f"expected key=value, got {body!r}", start)
            if body.lower() not in PRESETS:
                raise ParseError(f"unknown preset {body!r}", start)
            name = body.lower()
            preset = PRESETS[name]
            values["p"], values["q"] = preset.p, preset.q
            continue
        eq = body.index("=")
        key, raw = body[:eq], body[eq + 1:]
        if key not in ("p", "q", "k", "a", "b"):
            raise ParseError(f"unknown key {key!r}", start)
        if key in values:
            raise ParseError(f"duplicate key {key!r}", start)
        value_pos = seg[eq + 1][1] if eq + 1 < len(seg) else seg[eq][1] + 1
        if not _INT_RE.fullmatch(raw):
            raise ParseError(f"malformed integer {raw!r} for {key!r}", value_pos)
        value = int(raw)
        if key == "k" and value < 1:
            raise ParseError("k must be a positive integer", value_pos)
        values[key] = value

    if "p" not in values or "q" not in values:
        raise ParseError("both p and q are required", len(text))
    if ("a" in values) != ("b" in values):
        raise ParseError("a and b must be given together", len(text))
    return FamilySpec(values["p"], values["q"], values.get("k", 1),
                      values.get("a"), values.get("b"), name)


def parse_range(text: str) -> tuple[str | None, int, int]:
    """``a..b`` or ``name=a..b`` (inclusive)."""
    match = _RANGE_RE.fullmatch(text.replace(" ", ""))
    if match is None:
        raise ValueError(f"malformed range {text!r}; expected a..b or name=a..b")
    name, lo, hi = match.groups()
    lo, hi = int(lo), int(hi)
    if lo > hi:
        raise ValueError(f"empty range {text!r}")
    return name, lo, hi


def cmd_table(family: FamilySpec, lo: int, hi: int, which: str = "U",
              src: SequenceSource = DEFAULT_SOURCE) -> list[dict[str, str]]:
    if lo < 0:
        raise ValueError("n must be nonnegative")
    params = family.params
    if which == "W":
        if family.a is None:
            raise ValueError("--which W needs a and b in the family spec")
        if family.k != 1:
            raise ValueError("--which W is only defined for k=1")
        init = HoradamInit(family.a, family.b)
        value_of = lambda n: horadam_w(params, init, n)  # noqa: E731
    elif which == "U":
        value_of = lambda n: src.u_family(params, n, family.k)  # noqa: E731
    elif which == "V":
        value_of = lambda n: src.v_family(params, n, family.k)  # noqa: E731
    else:
        raise ValueError(f"unknown sequence {which!r}")
    records = []
    for n in range(lo, hi + 1):
        idx = decompose(n, family.k)
        records.append({"n": str(n), "m": str(idx.m), "r": str(idx.r),
                        "value": str(value_of(n))})
    return records


def _format_side(side) -> str:
    if side is None:
        return ""
    if isinstance(side, tuple):
        return "[" + ",".join(format_rational(x) for x in side) + "]"
    return format_rational(Fraction(side))


def report_record(report: IdentityReport, family: str) -> dict[str, str]:
    rec = {"identity": report.identity_id, "family": family,
           "p": str(report.params.p), "q": str(report.params.q)}
    rec.update((name, str(value)) for name, value in report.index)
    rec["lhs"] = _format_side(report.lhs)
    rec["rhs"] = _format_side(report.rhs)
    rec["status"] = report.status
    rec["reason"] = report.reason
    return rec


def cmd_verify(identity_ids: Sequence[str], families: Sequence[FamilySpec],
               ranges: Sequence[tuple[str | None, int, int]] = (),
               src: SequenceSource = DEFAULT_SOURCE) -> tuple[list[dict[str, str]], int]:
    records = []
    failed = False
    for identity_id in identity_ids:
        spec = IDENTITIES[identity_id]
        chosen = {}
        for name, lo, hi in ranges:
            if name is None:
                if len(spec.index_names) != 1:
                    raise ValueError(
                        f"{identity_id} has indices {spec.index_names}; "
                        "name them as name=a..b")
                name = spec.index_names[0]
            if name in spec.index_names:
                chosen[name] = (lo, hi)
            elif len(identity_ids) == 1:
                raise ValueError(f"{identity_id} has no index named {name!r}")
        for family in families:
            for report in sweep(identity_id, [family.params], chosen, src=src):
                failed |= report.status == FAIL
                records.append(report_record(report, family.label))
    return records, EXIT_FAIL if failed else EXIT_OK


def cmd_gfcheck(family: FamilySpec, count: int,
                src: SequenceSource = DEFAULT_SOURCE) -> tuple[list[dict[str, str]], int]:
    if count < 1:
        raise ValueError("count must be >= 1")
    params = family.params
    records = []
    failed = False
    for series_name, series, expected_of in (
        ("U", gf_u2(params), src.u_family),
        ("V", gf_v2(params), src.v_family),
    ):
        for n, coeff in enumerate(expand(series, count)):
            expected = expected_of(params, n, 2)
            ok = coeff == expected
            failed |= not ok
            records.append({"family": family.label, "series": series_name,
                            "n": str(n), "coefficient": str(coeff),
                            "expected": str(expected),
                            "status": "match" if ok else "mismatch"})
    return records, EXIT_FAIL if failed else EXIT_OK


def write_records(records: Iterable[dict[str, str]], fmt: str, out: TextIO,
                  fieldnames: Sequence[str] | None = None) -> None:
    records = list(records)
    if fmt == "json":
        for rec in records:
            out.write(json.dumps(rec) + "\n")
        return
    fields: dict[str, None] = {}
    for rec in records:
        fields.update(dict.fromkeys(rec))
    if fieldnames is not None:
        fields = {f: None for f in fieldnames if f in fields}
    writer = csv.DictWriter(out, fieldnames=list(fields), restval="",
                            lineterminator="\n")
    writer.writeheader()
    writer.writerows(records)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="genfib",
        description="Generalized Fibonacci/Lucas families: tables and exact identity checks.")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("csv", "json"), default="csv")

    table = sub.add_parser("table", parents=[common], help="print sequence values")
    table.add_argument("--family", required=True)
    table.add_argument("--range", default="0..10", dest="range_")
    table.add_argument("--which", choices=("U", "V", "W"), default="U")

    verify = sub.add_parser("verify", parents=[common], help="check identities over a grid")
    verify.add_argument("--identity", default="all",
                        help="one of %s, or 'all'" % ", ".join(IDENTITIES))
    verify.add_argument("--family", action="append", dest="families",
                        help="repeatable; defaults to the four presets, p=3,q=2 and p=2,q=1")
    verify.add_argument("--range", action="append", dest="ranges", default=[],
                        help="a..b or name=a..b, repeatable")

    gfcheck = sub.add_parser("gfcheck", parents=[common],
                             help="compare generating-function coefficients with U^(2), V^(2)")
    gfcheck.add_argument("--family", required=True)
    gfcheck.add_argument("--count", type=int, default=64)
    return parser


def main(argv: Sequence[str] | None = None, src: SequenceSource = DEFAULT_SOURCE,
         out: TextIO | None = None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK

    fieldnames = None
    try:
        if args.command == "table":
            _, lo, hi = parse_range(args.range_)
            records = cmd_table(parse_family(args.family), lo, hi, args.which, src)
            status = EXIT_OK
        elif args.command == "verify":
            if args.identity == "all":
                ids = list(IDENTITIES)
            elif args.identity in IDENTITIES:
                ids = [args.identity]
            else:
                raise ValueError(f"unknown identity {args.identity!r}")
            families = [parse_family(f) for f in (args.families or DEFAULT_FAMILIES)]
            ranges = [parse_range(r) for r in args.ranges]
            records, status = cmd_verify(ids, families, ranges, src)
            fieldnames = VERIFY_FIELDS
        else:
            records, status = cmd_gfcheck(parse_family(args.family), args.count, src)
    except ValueError as exc:
        print(f"genfib {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    write_records(records, args.format, out, fieldnames)
    return status


if __name__ == "__main__":
    sys.exit(main())
