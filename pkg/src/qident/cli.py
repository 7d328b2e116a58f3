"""Command-line front end: list, describe, verify, suite, eval.

Exit codes: 0 every requested verdict passed; 1 at least one failed;
2 nothing failed but something was skipped; 3 usage or input errors
(unknown identity, dimensions outside the engine's caps, malformed
config files).

Rationals cross the boundary as "p/q" strings in both directions.  The
default working precision comes from the QIDENT_DIGITS environment
variable when set; explicit --digits always wins.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from fractions import Fraction

from .errors import QidentError
from .identities import (
    catalog,
    catalog_json,
    describe_termination,
    lookup,
    record_summary,
)
from .scalars import DEFAULT_DIGITS, Precision, parse_rational
from .series import (
    AnSeries,
    Box,
    Infinite,
    PhiSpec,
    Shell,
    VwpSpec,
    Weight,
    WnmSpec,
    eval_an_series,
    eval_phi_spec,
    eval_vwp_spec,
    wnm_series,
)
from .verifier import (
    TrialDims,
    reports_to_tsv,
    run_suite,
    suite_summary,
    verify,
    verify_reduction,
)

ENV_DIGITS = "QIDENT_DIGITS"

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_SKIPPED = 2
EXIT_ERROR = 3


@dataclass
class RunConfig:
    """Everything one invocation needs, normalized from flags."""

    command: str
    idents: tuple[str, ...] = ()
    n: int | None = None
    m: int | None = None
    order: int | None = None
    box: tuple[int, ...] | None = None
    trials: int = 5
    seed: int = 0
    digits: int | None = DEFAULT_DIGITS
    mode: str = "auto"
    fmt: str = "human"
    out: str | None = None
    only: tuple[str, ...] = ()
    reduction: str | None = None
    path: str | None = None

    def __post_init__(self) -> None:
        if self.digits is not None and self.digits < 15:
            raise ValueError(f"--digits must be >= 15, got {self.digits}")


class _Parser(argparse.ArgumentParser):
    """argparse variant whose usage failures exit with the error code."""

    def error(self, message):  # noqa: A002 - argparse API
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def _default_digits() -> int:
    raw = os.environ.get(ENV_DIGITS)
    if raw is None:
        return DEFAULT_DIGITS
    try:
        return int(raw)
    except ValueError:
        return DEFAULT_DIGITS


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="qident",
        description="Verify q-series transformation and summation formulas "
        "exactly or to high precision.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_list = sub.add_parser("list", help="print the catalog")
    p_list.add_argument("--format", choices=("human", "json", "tsv"), default="human")
    p_list.add_argument("--out", default=None)

    p_desc = sub.add_parser("describe", help="show one record in full")
    p_desc.add_argument("ident")
    p_desc.add_argument("--format", choices=("human", "json"), default="human")

    def run_flags(p, trials_default=5):
        p.add_argument("--trials", type=int, default=trials_default)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--digits", type=int, default=None)
        p.add_argument("--mode", choices=("auto", "exact", "numeric"), default="auto")
        p.add_argument(
            "--format", choices=("human", "json", "tsv"), default="human"
        )
        p.add_argument("--out", default=None)

    p_ver = sub.add_parser("verify", help="check one identity at random points")
    p_ver.add_argument("ident")
    p_ver.add_argument("--n", type=int, default=None)
    p_ver.add_argument("--m", type=int, default=None)
    p_ver.add_argument("--N", type=int, default=None, dest="order")
    p_ver.add_argument(
        "--M", default=None, dest="box", help="comma-separated box bounds"
    )
    p_ver.add_argument(
        "--reduction",
        nargs="?",
        const="",
        default=None,
        metavar="TARGET",
        help="check the reduction link instead (default: first declared target)",
    )
    run_flags(p_ver)

    p_suite = sub.add_parser("suite", help="verify the whole catalog")
    p_suite.add_argument(
        "--only",
        nargs="*",
        default=[],
        help="keep records matching any id, group, or termination class",
    )
    run_flags(p_suite)

    p_eval = sub.add_parser("eval", help="evaluate one series from a JSON config")
    p_eval.add_argument("path")
    p_eval.add_argument("--digits", type=int, default=None)

    return parser


# ---------------------------------------------------------------------------
# Output plumbing


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")


def _dump_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def _verdict_exit(reports) -> int:
    worst = EXIT_PASS
    for r in reports:
        status = r.verdict.to_json()["status"]
        if status == "fail":
            return EXIT_FAIL
        if status == "skipped":
            worst = EXIT_SKIPPED
    return worst


def _report_human(report) -> str:
    lines = [
        f"{report.name}  [{report.kind}, {report.mode}"
        + (f", {report.digits} digits" if report.digits else "")
        + f", seed {report.seed}]"
    ]
    for t in report.trials:
        mark = "ok  " if t.ok else "FAIL"
        lines.append(
            f"  {mark} trial {t.index}  {t.dims}  point {t.digest}  "
            f"residual {t.residual}"
        )
    lines.append(f"  verdict: {report.verdict.label}")
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# Commands


def cmd_list(cfg: RunConfig) -> int:
    if cfg.fmt == "json":
        _emit(_dump_json(catalog_json()), cfg.out)
        return EXIT_PASS
    rows = []
    for rec in catalog():
        sig = rec.dims
        dims = f"n={'*' if sig.n is None else sig.n} m={'*' if sig.m is None else sig.m}"
        if sig.order:
            dims += " N"
        if sig.box:
            dims += " M"
        rows.append(
            (rec.id, rec.group, dims, describe_termination(rec.termination_class))
        )
    if cfg.fmt == "tsv":
        lines = ["\t".join(("id", "group", "dims", "termination"))]
        lines += ["\t".join(row) for row in rows]
        _emit("\n".join(lines), cfg.out)
        return EXIT_PASS
    width = max(len(r[0]) for r in rows)
    gwidth = max(len(r[1]) for r in rows)
    lines = [
        f"{rid:<{width}}  {group:<{gwidth}}  {dims:<14}  {term}"
        for rid, group, dims, term in rows
    ]
    lines.append(f"{len(rows)} records")
    _emit("\n".join(lines), cfg.out)
    return EXIT_PASS


def cmd_describe(cfg: RunConfig) -> int:
    rec = lookup(cfg.idents[0])
    if cfg.fmt == "json":
        _emit(_dump_json(record_summary(rec)), cfg.out)
        return EXIT_PASS
    sig = rec.dims
    lines = [
        f"{rec.id}: {rec.title}",
        f"  group: {rec.group}",
        f"  dims: n={'free' if sig.n is None else sig.n}, "
        f"m={'free' if sig.m is None else sig.m}"
        + (", triangular order N" if sig.order else "")
        + (f", box over rank {sig.box}" if sig.box else ""),
        f"  termination: {describe_termination(rec.termination_class)}",
    ]
    if rec.scalars:
        lines.append(f"  scalars: {', '.join(rec.scalars)}")
    for vs in rec.vectors:
        kind = "coordinates" if vs.coord else "parameters"
        lines.append(f"  vector {vs.name}[{vs.dim}]: {kind}")
    if rec.constraints:
        lines.append(f"  solved by balancing: {', '.join(rec.solved)}")
    for link in rec.reductions:
        pins = []
        if link.n is not None:
            pins.append(f"n={link.n}")
        if link.m is not None:
            pins.append(f"m={link.m}")
        suffix = f" ({link.description})" if link.description else ""
        lines.append(
            f"  reduces to {link.target}"
            + (f" at {' '.join(pins)}" if pins else "")
            + suffix
        )
    if rec.notes:
        lines.append(f"  note: {rec.notes}")
    _emit("\n".join(lines), cfg.out)
    return EXIT_PASS


def _single_dims(rec, cfg: RunConfig) -> TrialDims | None:
    if cfg.n is None and cfg.m is None and cfg.order is None and cfg.box is None:
        return None
    n = cfg.n if cfg.n is not None else (rec.dims.n if rec.dims.n is not None else 1)
    if cfg.m is not None:
        m = cfg.m
    elif rec.dims.m is not None:
        m = rec.dims.m
    else:
        m = 1
    dims = TrialDims(n=n, m=m, order=cfg.order, box=cfg.box)
    dims.validate()
    rec.dims.validate(n, m)
    return dims


def cmd_verify(cfg: RunConfig) -> int:
    rec = lookup(cfg.idents[0])
    if cfg.reduction is not None:
        target = cfg.reduction or None
        report = verify_reduction(
            rec, target, trials=cfg.trials, seed=cfg.seed, digits=cfg.digits
        )
    else:
        dims = _single_dims(rec, cfg)
        report = verify(
            rec,
            dims=dims,
            trials=cfg.trials,
            seed=cfg.seed,
            digits=cfg.digits,
            mode=cfg.mode,
        )
    if cfg.fmt == "json":
        _emit(_dump_json(report.to_json()), cfg.out)
    elif cfg.fmt == "tsv":
        _emit(reports_to_tsv([report]), cfg.out)
    else:
        _emit(_report_human(report), cfg.out)
    return _verdict_exit([report])


def cmd_suite(cfg: RunConfig) -> int:
    reports = run_suite(
        only=cfg.only,
        trials=cfg.trials,
        seed=cfg.seed,
        digits=cfg.digits,
        mode=cfg.mode,
    )
    summary = suite_summary(reports)
    aggregate = {
        "seed": cfg.seed,
        "digits": cfg.digits,
        "mode": cfg.mode,
        "trials": cfg.trials,
        "only": list(cfg.only),
        "summary": summary,
        "reports": [r.to_json() for r in reports],
    }
    if cfg.fmt == "json":
        _emit(_dump_json(aggregate), cfg.out)
    elif cfg.fmt == "tsv":
        _emit(reports_to_tsv(reports), cfg.out)
    else:
        lines = [
            f"{r.name:<44} {r.kind:<12} {r.verdict.label}" for r in reports
        ]
        lines.append(
            f"{summary['pass']} passed, {summary['fail']} failed, "
            f"{summary['skipped']} skipped"
        )
        _emit("\n".join(lines), None)
        if cfg.out is not None:
            _emit(_dump_json(aggregate), cfg.out)
    return _verdict_exit(reports)


# ---------------------------------------------------------------------------
# eval: one series from a JSON config


def _cfg_scalar(value) -> Fraction:
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise ValueError(f"expected an integer or a 'p/q' string, got {value!r}")


def _cfg_vector(value) -> tuple[Fraction, ...]:
    if not isinstance(value, list):
        raise ValueError(f"expected a list, got {value!r}")
    return tuple(_cfg_scalar(v) for v in value)


def _cfg_rows(value) -> tuple[tuple[Fraction, ...], ...]:
    if not isinstance(value, list):
        raise ValueError(f"expected a list of rows, got {value!r}")
    return tuple(_cfg_vector(row) for row in value)


def _cfg_domain(value):
    if not isinstance(value, dict) or "kind" not in value:
        raise ValueError("domain must be an object with a 'kind' field")
    kind = value["kind"]
    if kind == "weight":
        return Weight(int(value["N"]))
    if kind == "shell":
        return Shell(int(value["N"]))
    if kind == "box":
        return Box(tuple(int(b) for b in value["M"]))
    if kind == "infinite":
        return Infinite()
    raise ValueError(f"unknown domain kind {kind!r}")


def _eval_config(doc: dict, digits: int | None):
    """Returns (value, stats) for one series config."""
    if not isinstance(doc, dict) or "type" not in doc:
        raise ValueError("config must be an object with a 'type' field")
    kind = doc["type"]
    stats: dict = {}
    prec = Precision(digits) if digits is not None else None
    q = _cfg_scalar(doc["q"])
    if kind == "phi":
        spec = PhiSpec(
            upper=_cfg_vector(doc.get("upper", [])),
            lower=_cfg_vector(doc.get("lower", [])),
            q=q,
            z=_cfg_scalar(doc["z"]),
            termination=doc.get("termination"),
        )
        return eval_phi_spec(spec, prec=prec, stats=stats), stats
    if kind == "vwp":
        spec = VwpSpec(
            s=_cfg_scalar(doc["s"]),
            params=_cfg_vector(doc.get("params", [])),
            q=q,
            z=_cfg_scalar(doc["z"]),
            termination=doc.get("termination"),
        )
        return eval_vwp_spec(spec, prec=prec, stats=stats), stats
    if kind == "an":
        series = AnSeries(
            q=q,
            x=_cfg_vector(doc["x"]),
            z=_cfg_scalar(doc["z"]),
            vandermonde=doc.get("vandermonde", True),
            vwp=_cfg_scalar(doc["vwp"]) if "vwp" in doc else None,
            cross_num=_cfg_rows(doc.get("cross_num", [])),
            cross_den=_cfg_rows(doc.get("cross_den", [])),
            per_index_num=_cfg_rows(doc.get("per_index_num", [])),
            per_index_den=_cfg_rows(doc.get("per_index_den", [])),
            weight_num=_cfg_vector(doc.get("weight_num", [])),
            weight_den=_cfg_vector(doc.get("weight_den", [])),
            x_exponent=doc.get("x_exponent", 0),
            e2_exponent=doc.get("e2_exponent", 0),
        )
        domain = _cfg_domain(doc["domain"])
        return eval_an_series(series, domain, prec=prec, stats=stats), stats
    if kind == "wnm":
        spec = WnmSpec(
            s=_cfg_scalar(doc["s"]),
            a=_cfg_vector(doc["a"]),
            x=_cfg_vector(doc["x"]),
            u=_cfg_vector(doc.get("u", [])),
            v=_cfg_vector(doc.get("v", [])),
            q=q,
            z=_cfg_scalar(doc["z"]),
        )
        domain = _cfg_domain(doc["domain"])
        return eval_an_series(wnm_series(spec), domain, prec=prec, stats=stats), stats
    raise ValueError(f"unknown series type {kind!r}")


def cmd_eval(cfg: RunConfig) -> int:
    try:
        with open(cfg.path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        print(f"cannot read {cfg.path}: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except json.JSONDecodeError as exc:
        print(
            f"parse error in {cfg.path} at line {exc.lineno}, column {exc.colno}: "
            f"{exc.msg}",
            file=sys.stderr,
        )
        return EXIT_ERROR
    digits = cfg.digits if cfg.digits is not None else doc.get("digits")
    needs_float = False
    if isinstance(doc, dict):
        dom = doc.get("domain")
        if isinstance(dom, dict) and dom.get("kind") == "infinite":
            needs_float = True
        if doc.get("type") in ("phi", "vwp") and doc.get("termination") is None:
            needs_float = True
    if digits is None and needs_float:
        digits = _default_digits()
    try:
        value, stats = _eval_config(doc, int(digits) if digits is not None else None)
    except (ValueError, KeyError, TypeError) as exc:
        print(f"bad config: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except QidentError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_ERROR
    print(f"value = {value}")
    if "terms" in stats:
        print(f"terms = {stats['terms']}")
    if stats.get("tail") is not None:
        print(f"tail <= {stats['tail']}")
    return EXIT_PASS


# ---------------------------------------------------------------------------
# Entry point


def _to_config(args: argparse.Namespace) -> RunConfig:
    box = None
    if getattr(args, "box", None):
        box = tuple(int(b) for b in str(args.box).split(","))
    digits = getattr(args, "digits", None)
    if digits is None and args.command != "eval":
        digits = _default_digits()
    return RunConfig(
        command=args.command,
        idents=(args.ident,) if hasattr(args, "ident") else (),
        n=getattr(args, "n", None),
        m=getattr(args, "m", None),
        order=getattr(args, "order", None),
        box=box,
        trials=getattr(args, "trials", 5),
        seed=getattr(args, "seed", 0),
        digits=digits,
        mode=getattr(args, "mode", "auto"),
        fmt=getattr(args, "format", "human"),
        out=getattr(args, "out", None),
        only=tuple(getattr(args, "only", ()) or ()),
        reduction=getattr(args, "reduction", None),
        path=getattr(args, "path", None),
    )


_DISPATCH = {
    "list": cmd_list,
    "describe": cmd_describe,
    "verify": cmd_verify,
    "suite": cmd_suite,
    "eval": cmd_eval,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _to_config(args)
        return _DISPATCH[args.command](cfg)
    except (QidentError, ValueError) as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
