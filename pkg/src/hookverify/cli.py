"""Command-line entry point: ``hookverify verify | table | enumerate``.

Exit status is 0 when every row passes, 1 when any row fails (or hits a
pole of the evaluation point), and 2 on usage errors.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .engine import METHODS, TREE_IDENTITIES, VerificationReport, verify
from .exactnum import BigRat, PoleError, RatFunc, parse_rational, rf_eval, rf_format
from .series import SERIES_IDENTITIES, series_reports
from .trees import (
    ENV_CAP_VARS,
    FAMILIES,
    CapExceeded,
    EnumerationCaps,
    encode_binary,
    encode_forest,
    encode_ternary,
    enumerate_binary,
    enumerate_forests,
    enumerate_ternary,
    format_hooks,
    hooks_binary,
    hooks_forest,
    hooks_ternary_internal,
)
from .weights import WEIGHTS

IDENTITIES = TREE_IDENTITIES + SERIES_IDENTITIES
FORMATS = ("text", "csv", "json")

# the variable t stands for in each identity's usual notation
T_ROLE = {
    "postnikov": "t does not occur (constant identity)",
    "lascoux": "t stands for x",
    "han": "t stands for z",
    "half": "t does not occur (z fixed at 1/2)",
    "ternary": "t does not occur (constant identity)",
    "forest": "t does not occur (constant identity)",
    "lemma3": "t stands for z",
    "square": "t stands for z; series variable is x",
    "treefn": "t does not occur; series variable is x",
}


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    identity: Optional[str] = None
    n: Optional[int] = None
    n_max: Optional[int] = None
    method: str = "auto"
    family: Optional[str] = None
    fmt: str = "text"
    caps: EnumerationCaps = field(default_factory=EnumerationCaps)
    eval_point: Optional[BigRat] = None
    env_overrides: dict[str, int] = field(default_factory=dict)

    def sizes(self) -> range:
        first = 0 if self.identity in SERIES_IDENTITIES else 1
        if self.n is not None:
            if self.n < first:
                raise UsageError(f"--n must be at least {first} for {self.identity}")
            return range(self.n, self.n + 1)
        if self.n_max is None:
            raise UsageError("one of --n or --n-max is required")
        if self.n_max < first:
            raise UsageError(f"--n-max must be at least {first} for {self.identity}")
        return range(first, self.n_max + 1)


# -- argument parsing --------------------------------------------------------

def _nonneg_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {v}")
    return v


def _rational(text: str) -> BigRat:
    try:
        return parse_rational(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hookverify",
        description="Exact checks of hook length formulas for binary trees, 3-ary trees and plane forests.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", dest="fmt", choices=FORMATS, default="text")
        p.add_argument("--cap-binary", type=_nonneg_int)
        p.add_argument("--cap-ternary", type=_nonneg_int)
        p.add_argument("--cap-forest", type=_nonneg_int)

    def sized(p: argparse.ArgumentParser, default_method: str) -> None:
        p.add_argument("--identity", required=True, choices=IDENTITIES)
        p.add_argument("--n", type=_nonneg_int, help="check a single size")
        p.add_argument("--n-max", type=_nonneg_int, help="check every size up to this one")
        p.add_argument(
            "--method",
            choices=METHODS + ("auto",),
            default=default_method,
            help="auto: both methods within the enumeration cap, recurrence beyond it",
        )
        p.add_argument("--eval", dest="eval_point", type=_rational, help="specialize t to this rational")
        common(p)

    sized(sub.add_parser("verify", help="compare every side of an identity for n = 1..n-max"), "auto")
    sized(sub.add_parser("table", help="tabulate lhs and rhs of an identity"), "recurrence")

    p = sub.add_parser("enumerate", help="list objects of one size with their hook lengths")
    p.add_argument("--family", required=True, choices=FAMILIES)
    p.add_argument("--n", type=_nonneg_int, required=True)
    common(p)
    return parser


def make_config(args: argparse.Namespace, environ=None) -> RunConfig:
    caps, overrides = EnumerationCaps.from_env(environ)
    flags = {f: getattr(args, f"cap_{f}") for f in FAMILIES if getattr(args, f"cap_{f}") is not None}
    if flags:
        caps = EnumerationCaps(**{**caps.__dict__, **flags})
    return RunConfig(
        command=args.command,
        identity=getattr(args, "identity", None),
        n=getattr(args, "n", None),
        n_max=getattr(args, "n_max", None),
        method=getattr(args, "method", "auto"),
        family=getattr(args, "family", None),
        fmt=args.fmt,
        caps=caps,
        eval_point=getattr(args, "eval_point", None),
        env_overrides=overrides,
    )


# -- output ------------------------------------------------------------------

def render_value(value: Optional[RatFunc], point: Optional[BigRat]) -> Optional[str]:
    if value is None:
        return None
    if point is None:
        return rf_format(value)
    return str(rf_eval(value, point))


def header_lines(cfg: RunConfig) -> list[str]:
    lines = []
    if cfg.identity is not None:
        lines.append(f"# identity: {cfg.identity}; {T_ROLE[cfg.identity]}")
    caps = cfg.caps
    lines.append(f"# caps: binary={caps.binary} ternary={caps.ternary} forest={caps.forest}")
    for family, value in sorted(cfg.env_overrides.items()):
        lines.append(f"# {ENV_CAP_VARS[family]}={value} (from environment)")
    if cfg.eval_point is not None:
        lines.append(f"# values specialized at t = {cfg.eval_point}")
    return lines


def emit(rows: list[dict], columns: Sequence[str], cfg: RunConfig, out, err) -> None:
    if cfg.fmt == "json":
        for line in header_lines(cfg):
            print(line, file=err)
        json.dump(rows, out, indent=2)
        out.write("\n")
        return
    if cfg.fmt == "csv":
        for line in header_lines(cfg):
            print(line, file=err)
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=list(columns), lineterminator="\n")
        writer.writeheader()
        for row in rows:
            writer.writerow({k: "" if row.get(k) is None else row[k] for k in columns})
        out.write(buf.getvalue())
        return
    for line in header_lines(cfg):
        print(line, file=out)
    print("\t".join(columns), file=out)
    for row in rows:
        print("\t".join("-" if row.get(k) is None else str(row[k]) for k in columns), file=out)


# -- commands ----------------------------------------------------------------

def _reports(cfg: RunConfig) -> Iterable[tuple[str, VerificationReport]]:
    sizes = cfg.sizes()
    if cfg.identity in SERIES_IDENTITIES:
        for rep in series_reports(cfg.identity, sizes.stop - 1):
            if rep.n in sizes:
                yield "series", rep
        return
    family = WEIGHTS[cfg.identity].family
    for n in sizes:
        method = cfg.method
        if method == "auto":
            method = "both" if n <= cfg.caps.cap(family) else "recurrence"
        yield method, verify(cfg.identity, n, method, cfg.caps)


def _check_caps(cfg: RunConfig) -> None:
    if cfg.identity in SERIES_IDENTITIES or cfg.method not in ("brute", "both"):
        return
    family = WEIGHTS[cfg.identity].family
    top = cfg.sizes().stop - 1
    cfg.caps.check(family, top)


def _specialize(rep: VerificationReport, point: Optional[BigRat]) -> tuple[dict, Optional[str]]:
    try:
        return {k: render_value(v, point) for k, v in rep.sides().items()}, None
    except PoleError:
        return {k: None for k in rep.sides()}, f"error (pole at t = {point})"


def cmd_verify(cfg: RunConfig, out=sys.stdout, err=sys.stderr) -> int:
    _check_caps(cfg)
    rows, columns, status = [], ["identity", "n", "method", "verdict"], 0
    for method, rep in _reports(cfg):
        values, error = _specialize(rep, cfg.eval_point)
        verdict = error or rep.verdict
        if verdict != "pass":
            status = 1
        row = {"identity": rep.identity, "n": rep.n, "method": method, "verdict": verdict}
        row.update(values)
        for key in values:
            if key not in columns:
                columns.append(key)
        rows.append(row)
    # rhs last so the agreed value reads at the end of each row
    columns = [c for c in columns if c != "rhs"] + ["rhs"]
    emit(rows, columns, cfg, out, err)
    return status


def cmd_table(cfg: RunConfig, out=sys.stdout, err=sys.stderr) -> int:
    if cfg.method == "auto":
        cfg.method = "recurrence"
    _check_caps(cfg)
    rows, status = [], 0
    for _, rep in _reports(cfg):
        try:
            lhs = render_value(rep.lhs, cfg.eval_point)
            rhs = render_value(rep.rhs, cfg.eval_point)
            verdict = rep.verdict
        except PoleError:
            lhs = rhs = None
            verdict = f"error (pole at t = {cfg.eval_point})"
        if verdict != "pass":
            status = 1
        rows.append({"n": rep.n, "lhs": lhs, "rhs": rhs, "verdict": verdict})
    emit(rows, ["n", "lhs", "rhs", "verdict"], cfg, out, err)
    return status


_ENUM = {
    "binary": (enumerate_binary, encode_binary, hooks_binary),
    "ternary": (enumerate_ternary, encode_ternary, hooks_ternary_internal),
    "forest": (enumerate_forests, encode_forest, hooks_forest),
}


def cmd_enumerate(cfg: RunConfig, out=sys.stdout, err=sys.stderr) -> int:
    gen, encode, hooks = _ENUM[cfg.family]
    stream = gen(cfg.n, cfg.caps)
    if cfg.fmt == "text":
        for obj in stream:
            out.write(f"{encode(obj)}\t{format_hooks(hooks(obj))}\n")
        return 0
    rows = [{"encoding": encode(obj), "hooks": format_hooks(hooks(obj))} for obj in stream]
    emit(rows, ["encoding", "hooks"], cfg, out, err)
    return 0


COMMANDS = {"verify": cmd_verify, "table": cmd_table, "enumerate": cmd_enumerate}


def main(argv: Optional[Sequence[str]] = None, out=None, err=None, environ=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cfg = make_config(args, environ)
        return COMMANDS[cfg.command](cfg, out, err)
    except (UsageError, CapExceeded, ValueError, KeyError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"hookverify: error: {msg}", file=err)
        return 2


if __name__ == "__main__":
    sys.exit(main())
