"""Randomized both-sides verification of catalog statements.

The flow for one trial: draw small positive rationals for every free symbol
(seeded deterministically from run seed, record id, dimensions, and trial
index), resolve the balancing constraints, screen the point, then compare
the two sides.  Terminating records are screened by attempting the exact
evaluation itself — any true pole surfaces as an error and the point is
redrawn — and compared over rationals, where the only acceptable residual
is literally zero.  Nonterminating records are screened structurally
(convergence moduli under margin, no denominator factor on either side
sitting on the q-power lattice) and compared in decimal arithmetic carrying
guard digits beyond the requested precision.

Trials are independent; reports assemble them in index order and serialize
without timing data, so a rerun with the same seed, digits, and catalog is
byte-identical.
"""

from __future__ import annotations

import hashlib
import math
import random
import time
from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from typing import Callable, Union

from .errors import (
    InvalidDims,
    MappingUndefined,
    QidentError,
    SamplingExhausted,
)
from .identities import (
    CompositionPlan,
    IdentityRecord,
    Nonterminating,
    ReductionLink,
    build_side,
    catalog,
    composition_plans,
    describe_termination,
    eval_side,
    lookup,
    lookup_composition,
)
from .params import ParamSet
from .scalars import DEFAULT_DIGITS, Precision, Scalar, as_float, working_precision
from .series import PhiSpec, VwpSpec, wnm_series

MAX_RANK = 4
MAX_ORDER = 6
MAX_RETRIES = 200
NT_MARGIN = 0.8
NUMERIC_MIN_DIGITS = 25
GUARD_DIGITS = 10

# The shell summation gives up at 600 shells; reject points whose slowest
# modulus would need more than this many to push the tail under tolerance.
_SHELL_BUDGET = 520


# ---------------------------------------------------------------------------
# Trial dimensions


@dataclass(frozen=True)
class TrialDims:
    """Concrete dimensions for one batch of trials."""

    n: int = 1
    m: int = 0
    order: int | None = None
    box: tuple[int, ...] | None = None

    def label(self) -> str:
        parts = [f"n={self.n}", f"m={self.m}"]
        if self.order is not None:
            parts.append(f"N={self.order}")
        if self.box is not None:
            parts.append("M=" + ",".join(str(b) for b in self.box))
        return " ".join(parts)

    def validate(self) -> None:
        if not 1 <= self.n <= MAX_RANK:
            raise InvalidDims(f"n must lie in 1..{MAX_RANK}, got {self.n}")
        if not 0 <= self.m <= MAX_RANK:
            raise InvalidDims(f"m must lie in 0..{MAX_RANK}, got {self.m}")
        if self.order is not None and not 0 <= self.order <= MAX_ORDER:
            raise InvalidDims(f"N must lie in 0..{MAX_ORDER}, got {self.order}")
        if self.box is not None:
            if any(b < 0 for b in self.box):
                raise InvalidDims(f"box bounds must be >= 0, got {self.box}")
            if sum(self.box) > MAX_ORDER:
                raise InvalidDims(
                    f"|M| must be <= {MAX_ORDER}, got {sum(self.box)}"
                )


_TWO_FAMILY_PAIRS = ((1, 1), (2, 1), (1, 2), (2, 2), (3, 2))


def dims_grid(rec: IdentityRecord) -> tuple[tuple[int, int], ...]:
    """Default (n, m) pairs for a record, respecting its signature.

    Nonterminating records stop at rank 2 per family: their shells carry
    hundreds of lattice points at high precision, and rank 2 already
    exercises every cross term.
    """
    sig = rec.dims
    nt = isinstance(rec.termination_class, Nonterminating)
    if sig.m is None or (sig.m or 0) >= 1:
        pairs = [p for p in _TWO_FAMILY_PAIRS if not nt or max(p) <= 2]
    else:
        pairs = [(n, 0) for n in ((1, 2) if nt else (1, 2, 3))]
    out = []
    for n, m in pairs:
        if sig.n is not None and n != sig.n:
            continue
        if sig.m is not None and m != sig.m:
            continue
        out.append((n, m))
    return tuple(out)


def _spread(total: int, slots: int) -> tuple[int, ...]:
    base, rem = divmod(total, slots)
    return tuple(base + (1 if i < rem else 0) for i in range(slots))


def _fill_dims(
    rec: IdentityRecord, n: int, m: int, trial: int, pinned: TrialDims | None
) -> TrialDims:
    """Attach termination data, cycling N (or |M|) through 0..4 over trials.

    Nonterminating records with integer box exponents stop at |M| = 2:
    their convergence moduli scale like q**-|M|, and larger boxes leave the
    sampler almost no admissible points under the margin.
    """
    order = pinned.order if pinned is not None else None
    box = pinned.box if pinned is not None else None
    if rec.dims.order and order is None:
        order = trial % 5
    if rec.dims.box is not None and box is None:
        nt = isinstance(rec.termination_class, Nonterminating)
        box = _spread(trial % (3 if nt else 5), rec.dims.box_length(n, m))
    return TrialDims(n=n, m=m, order=order, box=box)


# ---------------------------------------------------------------------------
# Sampling


def _draw_scalar(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(1, 9), rng.randint(2, 11))


def _draw(rec: IdentityRecord, dims: TrialDims, rng: random.Random) -> ParamSet:
    q = Fraction(rng.randint(1, 5), rng.randint(6, 13))
    scalars = {s: _draw_scalar(rng) for s in rec.scalars}
    vectors = {}
    for vs in rec.vectors:
        length = dims.n if vs.dim == "n" else dims.m
        vals: list[Fraction] = []
        while len(vals) < length:
            v = _draw_scalar(rng)
            if not vs.coord or v not in vals:
                vals.append(v)
        vectors[vs.name] = tuple(vals)
    return ParamSet(
        q=q,
        n=dims.n,
        m=dims.m,
        order=dims.order,
        box=dims.box,
        scalars=scalars,
        vectors=vectors,
    )


def _is_nonneg_power_of_q(value: Scalar, q: Fraction) -> bool:
    """Whether value equals q**-i for some integer i >= 0 (exact)."""
    if isinstance(value, int):
        value = Fraction(value)
    if not isinstance(value, Fraction) or value <= 0:
        return False
    probe = Fraction(1)
    while probe <= value:
        if probe == value:
            return True
        probe /= q
    return False


def _poch_den_clear(specs, q: Fraction) -> bool:
    for spec in specs:
        if spec.length is None:
            if _is_nonneg_power_of_q(spec.base, q):
                return False
        else:
            c = spec.base
            for _ in range(spec.length):
                if c == 1:
                    return False
                c = c * q
    return True


def _series_poles_clear(payload, q: Fraction) -> bool:
    """Structural pole screen for a series whose index range is unbounded."""
    if payload is None:
        return True
    if isinstance(payload, PhiSpec):
        return not any(_is_nonneg_power_of_q(b, q) for b in payload.lower)
    if isinstance(payload, VwpSpec):
        if payload.s == 1:
            return False
        return not any(
            _is_nonneg_power_of_q(payload.s * q / p, q) for p in payload.params
        )
    x = payload.x
    for i in range(len(x)):
        for j in range(i):
            if x[i] == x[j]:
                return False
    if payload.vwp is not None and any(payload.vwp * xi == 1 for xi in x):
        return False
    for row in payload.cross_den:
        for xi in x:
            for aj, xj in zip(row, x):
                if _is_nonneg_power_of_q(aj * xi / xj, q):
                    return False
    for row in payload.per_index_den:
        if any(_is_nonneg_power_of_q(w, q) for w in row):
            return False
    return not any(_is_nonneg_power_of_q(v, q) for v in payload.weight_den)


def _side_clear(side, q: Fraction) -> bool:
    if not _poch_den_clear(side.prefactor_den, q):
        return False
    payload = wnm_series(side.wnm) if side.wnm is not None else side.series
    return _series_poles_clear(payload, q)


def _nt_budget_ok(maxmod: float, digits: int) -> bool:
    if maxmod <= 0.0:
        return True
    return (digits + GUARD_DIGITS + 5) / -math.log10(maxmod) < _SHELL_BUDGET


def _attempt(
    rec: IdentityRecord,
    dims: TrialDims,
    rng: random.Random,
    prepare: Callable[[ParamSet], ParamSet] | None,
    digits: int,
):
    """One draw.  Returns (params, lhs, rhs) with exact side values for
    terminating records, (params, None, None) for nonterminating ones, or
    None when the point is rejected."""
    p = _draw(rec, dims, rng)
    if prepare is not None:
        p = prepare(p)
    try:
        p = rec.resolve(p)
    except (QidentError, ZeroDivisionError):
        return None
    tc = rec.termination_class
    if isinstance(tc, Nonterminating):
        try:
            mods = tc.moduli(p)
        except (QidentError, ZeroDivisionError):
            return None
        maxmod = max((abs(as_float(v)) for v in mods), default=0.0)
        if maxmod >= NT_MARGIN or not _nt_budget_ok(maxmod, digits):
            return None
        try:
            clear = _side_clear(build_side(rec, "lhs", p), p.q) and _side_clear(
                build_side(rec, "rhs", p), p.q
            )
        except (QidentError, ZeroDivisionError):
            return None
        return (p, None, None) if clear else None
    try:
        return (p, eval_side(rec, "lhs", p), eval_side(rec, "rhs", p))
    except (QidentError, ZeroDivisionError):
        return None


def _seed_string(seed: int, rec_id: str, dims: TrialDims, trial: int) -> str:
    return f"{seed}:{rec_id}:{dims.label()}:{trial}"


def sample_params(
    rec: IdentityRecord | str,
    dims: TrialDims,
    seed: int,
    trial: int = 0,
    prepare: Callable[[ParamSet], ParamSet] | None = None,
    digits: int = DEFAULT_DIGITS,
) -> ParamSet:
    """A constraint-satisfying, pole-free point for one record.

    Deterministic in (seed, record, dims, trial); raises SamplingExhausted
    after the retry budget.
    """
    if isinstance(rec, str):
        rec = lookup(rec)
    dims.validate()
    rng = random.Random(_seed_string(seed, rec.id, dims, trial))
    for _ in range(MAX_RETRIES):
        got = _attempt(rec, dims, rng, prepare, digits)
        if got is not None:
            return got[0]
    raise SamplingExhausted(
        f"no admissible point for {rec.id} at {dims.label()} "
        f"within {MAX_RETRIES} draws"
    )


# ---------------------------------------------------------------------------
# Verdicts, trials, reports


@dataclass(frozen=True)
class Pass:
    label: str = "Pass"

    def to_json(self) -> dict:
        return {"status": "pass"}


@dataclass(frozen=True)
class Fail:
    trial: int

    @property
    def label(self) -> str:
        return f"Fail(trial {self.trial})"

    def to_json(self) -> dict:
        return {"status": "fail", "trial": self.trial}


@dataclass(frozen=True)
class Skipped:
    reason: str

    @property
    def label(self) -> str:
        return f"Skipped({self.reason})"

    def to_json(self) -> dict:
        return {"status": "skipped", "reason": self.reason}


Verdict = Union[Pass, Fail, Skipped]


@dataclass(frozen=True)
class TrialResult:
    index: int
    dims: str
    digest: str
    lhs: str
    rhs: str
    residual: str
    retries: int
    ok: bool
    elapsed: float = 0.0  # in-memory only; never serialized

    def to_json(self) -> dict:
        return {
            "trial": self.index,
            "dims": self.dims,
            "digest": self.digest,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "residual": self.residual,
            "retries": self.retries,
            "ok": self.ok,
        }


@dataclass(frozen=True)
class VerificationReport:
    id: str
    kind: str  # "identity" | "reduction" | "composition"
    mode: str  # "exact" | "numeric"
    seed: int
    digits: int | None
    dims: tuple[str, ...]
    trials: tuple[TrialResult, ...]
    verdict: Verdict
    target: str | None = None

    @property
    def ok(self) -> bool:
        return isinstance(self.verdict, Pass)

    @property
    def name(self) -> str:
        if self.kind == "reduction" and self.target:
            return f"{self.id}->{self.target}"
        return self.id

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "kind": self.kind,
            "target": self.target,
            "mode": self.mode,
            "seed": self.seed,
            "digits": self.digits,
            "dims": list(self.dims),
            "trials": [t.to_json() for t in self.trials],
            "verdict": self.verdict.to_json(),
        }

    def tsv_line(self) -> str:
        residuals = [t.residual for t in self.trials if not t.ok]
        worst = residuals[0] if residuals else ("0" if self.trials else "-")
        return "\t".join(
            [
                self.name,
                self.kind,
                self.mode,
                ";".join(self.dims) or "-",
                str(len(self.trials)),
                worst,
                self.verdict.label,
            ]
        )


TSV_HEADER = "\t".join(
    ["identity", "kind", "mode", "dims", "trials", "first_bad_residual", "verdict"]
)


def reports_to_tsv(reports) -> str:
    return "\n".join([TSV_HEADER] + [r.tsv_line() for r in reports]) + "\n"


def _digest(p: ParamSet) -> str:
    parts = [f"q={p.q}", f"n={p.n}", f"m={p.m}", f"order={p.order}", f"box={p.box}"]
    for k in sorted(p.scalars):
        parts.append(f"{k}={p.scalars[k]}")
    for k in sorted(p.vectors):
        parts.append(f"{k}=({','.join(str(v) for v in p.vectors[k])})")
    return hashlib.sha256(";".join(parts).encode()).hexdigest()[:12]


def _fmt(value: Scalar) -> str:
    return str(value)


# ---------------------------------------------------------------------------
# Verification drivers


def _resolve_mode(rec: IdentityRecord, mode: str) -> str:
    if mode not in ("auto", "exact", "numeric"):
        raise InvalidDims(f"mode must be auto|exact|numeric, got {mode!r}")
    if mode != "auto":
        return mode
    return "numeric" if isinstance(rec.termination_class, Nonterminating) else "exact"


def _mode_guard(rec: IdentityRecord, resolved: str, digits: int) -> Skipped | None:
    nt = isinstance(rec.termination_class, Nonterminating)
    if resolved == "exact" and nt:
        return Skipped("nonterminating sides cannot be compared exactly")
    if resolved == "numeric" and digits < NUMERIC_MIN_DIGITS:
        return Skipped(
            f"numeric mode needs at least {NUMERIC_MIN_DIGITS} digits, got {digits}"
        )
    return None


def _numeric_compare(
    rec: IdentityRecord, p: ParamSet, digits: int
) -> tuple[Decimal, Decimal, Decimal, bool]:
    prec_eval = Precision(digits + GUARD_DIGITS)
    tol = Decimal(Precision(digits).tolerance)
    with working_precision(prec_eval):
        lhs = eval_side(rec, "lhs", p, prec=prec_eval)
        rhs = eval_side(rec, "rhs", p, prec=prec_eval)
        residual = abs(lhs - rhs)
        floor = max(Decimal(1), abs(lhs))
        ok = residual <= tol * floor
    return lhs, rhs, residual, ok


def verify(
    rec: IdentityRecord | str,
    dims: TrialDims | None = None,
    trials: int = 5,
    seed: int = 0,
    digits: int = DEFAULT_DIGITS,
    mode: str = "auto",
) -> VerificationReport:
    """Check one record at randomized points.

    Without explicit dims, runs the default dimension grid, cycling the
    truncation through 0..4 across trials.  Failures are verdicts, never
    exceptions.
    """
    if isinstance(rec, str):
        rec = lookup(rec)
    resolved = _resolve_mode(rec, mode)
    skip = _mode_guard(rec, resolved, digits)
    report_digits = digits if resolved == "numeric" else None

    def make(trial_list, verdict, dims_labels):
        return VerificationReport(
            id=rec.id,
            kind="identity",
            mode=resolved,
            seed=seed,
            digits=report_digits,
            dims=tuple(dims_labels),
            trials=tuple(trial_list),
            verdict=verdict,
        )

    if skip is not None:
        return make([], skip, [])

    if dims is not None:
        dims.validate()
        try:
            rec.dims.validate(dims.n, dims.m)
        except InvalidDims as exc:
            return make([], Skipped(str(exc)), [])
        groups: list[tuple[int, int]] = [(dims.n, dims.m)]
    else:
        groups = list(dims_grid(rec))

    results: list[TrialResult] = []
    labels: list[str] = []
    verdict: Verdict = Pass()
    index = 0
    for n, m in groups:
        group_label = None
        for t in range(trials):
            d = _fill_dims(rec, n, m, t, dims)
            if group_label is None:
                labels.append(f"n={n} m={m}")
            group_label = True
            rng = random.Random(_seed_string(seed, rec.id, d, t))
            started = time.perf_counter()
            got = None
            retries = 0
            for retries in range(MAX_RETRIES):
                got = _attempt(rec, d, rng, None, digits)
                if got is not None:
                    break
            if got is None:
                exhausted = Skipped(f"sampling exhausted at {d.label()}")
                if not isinstance(verdict, Pass):
                    exhausted = verdict
                return make(results, exhausted, labels)
            p, lhs, rhs = got
            if resolved == "exact":
                if lhs is None:
                    lhs = eval_side(rec, "lhs", p)
                    rhs = eval_side(rec, "rhs", p)
                residual = lhs - rhs
                ok = residual == 0
            else:
                try:
                    lhs, rhs, residual, ok = _numeric_compare(rec, p, digits)
                except (QidentError, ZeroDivisionError) as exc:
                    return make(
                        results,
                        Skipped(f"trial {index} at {d.label()}: {exc}"),
                        labels,
                    )
            results.append(
                TrialResult(
                    index=index,
                    dims=d.label(),
                    digest=_digest(p),
                    lhs=_fmt(lhs),
                    rhs=_fmt(rhs),
                    residual=_fmt(abs(residual)),
                    retries=retries,
                    ok=ok,
                    elapsed=time.perf_counter() - started,
                )
            )
            if not ok and isinstance(verdict, Pass):
                verdict = Fail(index)
            index += 1
    return make(results, verdict, labels)


def _find_link(rec: IdentityRecord, target_id: str) -> ReductionLink:
    if rec.id == target_id:
        return ReductionLink(target=target_id, description="identity mapping")
    for link in rec.reductions:
        if link.target == target_id:
            return link
    raise MappingUndefined(f"no reduction link from {rec.id} to {target_id}")


def _reduction_dims(rec: IdentityRecord, link: ReductionLink) -> tuple[int, int]:
    if link.n is not None:
        n = link.n
    elif rec.dims.n is not None:
        n = rec.dims.n
    else:
        n = 2 if rec.dims.box is not None else 1
    if link.m is not None:
        m = link.m
    elif rec.dims.m is not None:
        m = rec.dims.m
    else:
        m = 1
    return n, m


def verify_reduction(
    rec: IdentityRecord | str,
    target: IdentityRecord | str | None = None,
    trials: int = 5,
    seed: int = 0,
    digits: int = DEFAULT_DIGITS,
) -> VerificationReport:
    """Check a record against one of its declared specializations.

    Samples the source at the link's pinned dimensions, applies the link's
    preparation (coordinate or scalar pinning) before screening, maps the
    resolved point into the target's symbols verbatim, and compares the two
    statements side-for-side.  Trial lhs/rhs columns hold the two left
    sides; the residual is the larger mismatch across both sides.
    """
    if isinstance(rec, str):
        rec = lookup(rec)
    if target is None:
        if not rec.reductions:
            raise MappingUndefined(f"{rec.id} declares no reduction link")
        target_id = rec.reductions[0].target
    else:
        target_id = target if isinstance(target, str) else target.id
    tgt = lookup(target_id)
    link = _find_link(rec, target_id)
    nt = isinstance(rec.termination_class, Nonterminating)
    resolved = "numeric" if nt else "exact"
    report_digits = digits if nt else None

    def make(trial_list, verdict, dims_labels):
        return VerificationReport(
            id=rec.id,
            kind="reduction",
            mode=resolved,
            seed=seed,
            digits=report_digits,
            dims=tuple(dims_labels),
            trials=tuple(trial_list),
            verdict=verdict,
            target=target_id,
        )

    if nt and digits < NUMERIC_MIN_DIGITS:
        return make(
            [],
            Skipped(
                f"numeric mode needs at least {NUMERIC_MIN_DIGITS} digits, got {digits}"
            ),
            [],
        )

    n, m = _reduction_dims(rec, link)
    labels = [f"n={n} m={m}"]
    tgt_tc = tgt.termination_class
    prec_eval = Precision(digits + GUARD_DIGITS)
    tol = Decimal(Precision(digits).tolerance)

    results: list[TrialResult] = []
    verdict: Verdict = Pass()
    for t in range(trials):
        d = _fill_dims(rec, n, m, t, None)
        rng = random.Random(_seed_string(seed, f"{rec.id}->{target_id}", d, t))
        started = time.perf_counter()
        found = None
        retries = 0
        for retries in range(MAX_RETRIES):
            got = _attempt(rec, d, rng, link.prepare, digits)
            if got is None:
                continue
            p, sl, sr = got
            tp = link.map(p) if link.map is not None else p
            try:
                if nt:
                    if isinstance(tgt_tc, Nonterminating):
                        mods = tgt_tc.moduli(tp)
                        maxmod = max(
                            (abs(as_float(v)) for v in mods), default=0.0
                        )
                        if maxmod >= NT_MARGIN or not _nt_budget_ok(maxmod, digits):
                            continue
                    with working_precision(prec_eval):
                        sl = eval_side(rec, "lhs", p, prec=prec_eval)
                        sr = eval_side(rec, "rhs", p, prec=prec_eval)
                        tl = eval_side(tgt, "lhs", tp, prec=prec_eval)
                        tr = eval_side(tgt, "rhs", tp, prec=prec_eval)
                else:
                    tl = eval_side(tgt, "lhs", tp)
                    tr = eval_side(tgt, "rhs", tp)
            except (QidentError, ZeroDivisionError):
                continue
            found = (p, sl, sr, tl, tr)
            break
        if found is None:
            exhausted = Skipped(f"sampling exhausted at {d.label()}")
            if not isinstance(verdict, Pass):
                exhausted = verdict
            return make(results, exhausted, labels)
        p, sl, sr, tl, tr = found
        if link.swap:
            tl, tr = tr, tl
        if nt:
            with working_precision(prec_eval):
                residual = max(abs(sl - tl), abs(sr - tr))
                floor = max(Decimal(1), abs(sl))
                ok = residual <= tol * floor
        else:
            residual = max(abs(sl - tl), abs(sr - tr))
            ok = residual == 0
        results.append(
            TrialResult(
                index=t,
                dims=d.label(),
                digest=_digest(p),
                lhs=_fmt(sl),
                rhs=_fmt(tl),
                residual=_fmt(residual),
                retries=retries,
                ok=ok,
                elapsed=time.perf_counter() - started,
            )
        )
        if not ok and isinstance(verdict, Pass):
            verdict = Fail(t)
    return make(results, verdict, labels)


def verify_composition(
    plan: CompositionPlan | str,
    trials: int = 3,
    seed: int = 0,
    digits: int = DEFAULT_DIGITS,
) -> VerificationReport:
    """Check that a composition chain closes at sampled base points.

    Every shipped chain is terminating, so each labelled assertion must
    hold with an exactly zero difference; the trial columns show the final
    assertion's two values.
    """
    if isinstance(plan, str):
        plan = lookup_composition(plan)
    base = lookup(plan.base)
    n = base.dims.n if base.dims.n is not None else 2
    m = base.dims.m if base.dims.m is not None else 0
    labels = [f"n={n} m={m}"]

    results: list[TrialResult] = []
    verdict: Verdict = Pass()
    for t in range(trials):
        order = 2 + t % 3 if base.dims.order else None
        d = TrialDims(n=n, m=m, order=order)
        rng = random.Random(_seed_string(seed, f"plan:{plan.id}", d, t))
        started = time.perf_counter()
        outcome = None
        retries = 0
        for retries in range(MAX_RETRIES):
            got = _attempt(base, d, rng, None, digits)
            if got is None:
                continue
            try:
                asserts = plan.check(got[0])
            except (QidentError, ZeroDivisionError):
                continue
            outcome = (got[0], asserts)
            break
        if outcome is None:
            return VerificationReport(
                id=plan.id,
                kind="composition",
                mode="exact",
                seed=seed,
                digits=None,
                dims=tuple(labels),
                trials=tuple(results),
                verdict=Skipped(f"sampling exhausted at {d.label()}"),
                target=plan.base,
            )
        p, asserts = outcome
        residual = max((abs(left - right) for _, left, right in asserts), default=0)
        ok = residual == 0
        last = asserts[-1] if asserts else ("", 0, 0)
        results.append(
            TrialResult(
                index=t,
                dims=d.label(),
                digest=_digest(p),
                lhs=_fmt(last[1]),
                rhs=_fmt(last[2]),
                residual=_fmt(residual),
                retries=retries,
                ok=ok,
                elapsed=time.perf_counter() - started,
            )
        )
        if not ok and isinstance(verdict, Pass):
            verdict = Fail(t)
    return VerificationReport(
        id=plan.id,
        kind="composition",
        mode="exact",
        seed=seed,
        digits=None,
        dims=tuple(labels),
        trials=tuple(results),
        verdict=verdict,
        target=plan.base,
    )


# ---------------------------------------------------------------------------
# Whole-catalog runs


def _record_tokens(rec: IdentityRecord) -> set[str]:
    label = "nonterminating" if isinstance(
        rec.termination_class, Nonterminating
    ) else "terminating"
    return {rec.id, rec.group, label}


def run_suite(
    only: tuple[str, ...] = (),
    trials: int = 5,
    seed: int = 0,
    digits: int = DEFAULT_DIGITS,
    mode: str = "auto",
) -> tuple[VerificationReport, ...]:
    """Verify records, then reduction links, then composition plans.

    ``only`` filters by id, group, or termination class; an empty filter
    keeps everything.  Output order is deterministic.
    """
    toks = set(only)

    def keep(tokens: set[str]) -> bool:
        return not toks or bool(toks & tokens)

    reports: list[VerificationReport] = []
    for rec in catalog():
        if keep(_record_tokens(rec)):
            reports.append(
                verify(rec, trials=trials, seed=seed, digits=digits, mode=mode)
            )
    for rec in catalog():
        if not keep(_record_tokens(rec)):
            continue
        for link in rec.reductions:
            reports.append(
                verify_reduction(
                    rec, link.target, trials=trials, seed=seed, digits=digits
                )
            )
    for plan in composition_plans():
        tokens = _record_tokens(lookup(plan.base)) | {plan.id, "composition"}
        if keep(tokens):
            reports.append(verify_composition(plan, trials=3, seed=seed, digits=digits))
    return tuple(reports)


def suite_summary(reports) -> dict:
    counts = {"pass": 0, "fail": 0, "skipped": 0}
    for r in reports:
        if isinstance(r.verdict, Pass):
            counts["pass"] += 1
        elif isinstance(r.verdict, Fail):
            counts["fail"] += 1
        else:
            counts["skipped"] += 1
    return counts


def describe_record(rec: IdentityRecord) -> str:
    """One human-readable line used by listings."""
    sig = rec.dims
    nm = f"n={'*' if sig.n is None else sig.n},m={'*' if sig.m is None else sig.m}"
    extra = []
    if sig.order:
        extra.append("N")
    if sig.box:
        extra.append("M")
    dims = nm + ("," + ",".join(extra) if extra else "")
    return f"{rec.id}\t{rec.group}\t{dims}\t{describe_termination(rec.termination_class)}"
