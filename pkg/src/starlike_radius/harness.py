"""Verification suites and the reproduction table.

Random streams come from numpy's PCG64 seeded through ``SeedSequence``.
Each suite draws from its own child sequence, and each sample index gets its
own grandchild, so results do not depend on suite scheduling.
"""

from __future__ import annotations

import csv
import io
import json
import math
import os
from concurrent.futures import ThreadPoolExecutor
from functools import partial
from dataclasses import asdict, dataclass, field
from typing import Any, Callable, Optional

import numpy as np

from . import bounds
from .analytic import (
    IDENTITY,
    FactorKind,
    Family,
    SubordinateFactor,
    eval_factor,
    eval_member,
    extremal_member,
    log_derivative_factor,
    log_derivative_member,
    random_factor,
    random_member,
)
from .radii import (
    RADIUS_TOL,
    RESIDUAL_TOL,
    Exactness,
    RadiusQuery,
    bisection_radius,
    closed_form_radius,
    exactness_of,
    janowski_radius,
    numeric_radius,
    radius_report,
    univalence_witness,
)
from .regions import Region, RegionKind, catalog_regions, disc_in_disc

THREADS_ENV = "STARLIKE_RADIUS_THREADS"

ALPHA_GRID = (0.0, 0.25, 0.5, 0.75)
JANOWSKI_A = (0.0, 0.25, 0.5, 0.75, 1.0)
JANOWSKI_B = (-0.9, -0.7, -0.5, -0.3, -0.1)
EQUALITY_TOL = 1e-12
_STRICTLY_NEGATIVE = -5e-324


@dataclass(frozen=True)
class VerificationConfig:
    seed: int = 0
    samples_per_family: int = bounds.DEFAULT_SAMPLES
    boundary_samples: int = bounds.DEFAULT_BOUNDARY_SAMPLES
    radius_tol: float = RADIUS_TOL
    residual_tol: float = RESIDUAL_TOL
    dominance_slack: float = bounds.DOMINANCE_SLACK
    radii: tuple[float, ...] = bounds.DEFAULT_RADII

    def __post_init__(self):
        if not 0 <= int(self.seed) < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")
        if self.samples_per_family < 1 or self.boundary_samples < 1:
            raise ValueError("sample counts must be at least 1")
        for name in ("radius_tol", "residual_tol", "dominance_slack"):
            if not getattr(self, name) > 0:
                raise ValueError(f"{name} must be positive")
        if not self.radii or not all(0 < r < 1 for r in self.radii):
            raise ValueError("radii must lie in (0, 1)")
        object.__setattr__(self, "radii", tuple(float(r) for r in self.radii))


@dataclass
class SuiteResult:
    name: str
    passed: bool
    worst_residual: float
    witness: Optional[dict] = None
    checks: int = 0

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "pass": self.passed,
            "worst_residual": self.worst_residual,
            "checks": self.checks,
            "witness": self.witness,
        }


@dataclass
class VerificationReport:
    config: VerificationConfig
    suites: list[SuiteResult] = field(default_factory=list)

    @property
    def overall(self) -> bool:
        return all(s.passed for s in self.suites)

    def to_dict(self) -> dict:
        cfg = asdict(self.config)
        cfg["radii"] = list(cfg["radii"])
        return {
            "config": cfg,
            "suites": [s.to_dict() for s in self.suites],
            "overall": self.overall,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=False)

    def merged(self, other: "VerificationReport") -> "VerificationReport":
        return VerificationReport(self.config, self.suites + other.suites)


class _Tracker:
    """Keeps the worst residual of a suite and the input that produced it.

    A check passes when ``residual <= limit``.  Failures outrank passes when
    choosing the reported witness.
    """

    def __init__(self, name: str, limit: float):
        self.name = name
        self.limit = limit
        self.failed = False
        self.count = 0
        self._key: Optional[tuple[bool, float]] = None
        self.witness: Optional[dict] = None

    def check(self, residual: float, limit: Optional[float] = None, **witness: Any) -> None:
        limit = self.limit if limit is None else limit
        residual = float(residual)
        self.count += 1
        bad = not residual <= limit
        key = (bad, residual)
        if self._key is None or key > self._key or (bad and not self._key[0]):
            self._key = key
            self.witness = _jsonable({**witness, "residual": residual, "limit": limit})
        self.failed |= bad

    def result(self) -> SuiteResult:
        worst = 0.0 if self._key is None else self._key[1]
        return SuiteResult(self.name, not self.failed, worst, self.witness, self.count)


def _jsonable(value: Any) -> Any:
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, (complex, np.complexfloating)):
        return [float(value.real), float(value.imag)]
    if isinstance(value, np.floating):
        return float(value)
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, (Family, RegionKind, Exactness, FactorKind)):
        return value.value
    if isinstance(value, Region):
        return value.label
    return value


def thread_cap() -> int:
    """Worker cap from ``STARLIKE_RADIUS_THREADS``; 1 when unset."""
    raw = os.environ.get(THREADS_ENV)
    if raw is None or raw == "":
        return 1
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{THREADS_ENV} must be a positive integer, got {raw!r}") from None
    if value < 1:
        raise ValueError(f"{THREADS_ENV} must be a positive integer, got {raw!r}")
    return value


def _run_parallel(tasks: list[Callable[[], SuiteResult]], workers: int) -> list[SuiteResult]:
    if workers <= 1 or len(tasks) <= 1:
        return [task() for task in tasks]
    with ThreadPoolExecutor(max_workers=min(workers, len(tasks))) as pool:
        futures = [pool.submit(task) for task in tasks]
        return [f.result() for f in futures]


# --- radii ---------------------------------------------------------------------


def oracle_queries() -> list[RadiusQuery]:
    """Catalog rows plus the half-plane and disc order grid."""
    regions = catalog_regions()
    for alpha in ALPHA_GRID:
        regions.append(Region.disc(alpha))
        if alpha != 0.0:
            regions.append(Region.halfplane(alpha))
    return [RadiusQuery(fam, reg) for fam in Family for reg in regions]


def _suite_radii_oracle(config: VerificationConfig) -> SuiteResult:
    t = _Tracker("radii_oracle", config.radius_tol)
    for query in oracle_queries():
        expected = closed_form_radius(query)
        for path, value in (("numeric", numeric_radius(query)), ("bisection", bisection_radius(query))):
            t.check(
                abs(value - expected),
                family=query.family, region=query.region, path=path,
                expected=expected, got=value, input=query.region.params,
            )
    return t.result()


def _suite_sharpness(config: VerificationConfig) -> SuiteResult:
    t = _Tracker("sharpness", config.residual_tol)
    queries = oracle_queries() + [
        RadiusQuery(fam, Region.janowski(a, b)) for fam in Family for a in JANOWSKI_A for b in JANOWSKI_B
    ]
    for query in queries:
        if exactness_of(query) is not Exactness.EXACT:
            continue
        rep = radius_report(query)
        t.check(
            rep.boundary_residual,
            family=query.family, region=query.region, input=rep.witness_z,
            expected="on boundary", got=rep.witness_value,
        )
    # half-plane witnesses land exactly on Re w = alpha
    for fam in Family:
        for alpha in np.linspace(0.0, 0.95, 20):
            R = closed_form_radius(RadiusQuery(fam, Region.halfplane(alpha)))
            value = complex(log_derivative_member(extremal_member(fam), -R))
            t.check(
                abs(value - alpha), family=fam, region=f"halfplane(alpha={alpha:g})",
                input=-R, expected=float(alpha), got=value,
            )
    # lune: |w^2 - 1| = 2|w|, common value 0.828 to three decimals
    for fam in Family:
        R = closed_form_radius(RadiusQuery(fam, Region(RegionKind.LUNE)))
        w = complex(log_derivative_member(extremal_member(fam), -R))
        lhs, rhs = abs(w * w - 1.0), 2.0 * abs(w)
        t.check(abs(lhs - rhs), family=fam, region="lune", input=-R, expected=rhs, got=lhs)
        t.check(
            abs(round(rhs, 3) - 0.828), limit=0.0, family=fam, region="lune",
            input=-R, expected=0.828, got=rhs,
        )
    return t.result()


def _suite_monotone_alpha(config: VerificationConfig) -> SuiteResult:
    t = _Tracker("alpha_monotonicity", 0.0)
    alphas = np.linspace(0.0, 0.99, 100)
    for fam in Family:
        values = [closed_form_radius(RadiusQuery(fam, Region.halfplane(a))) for a in alphas]
        for a0, a1, v0, v1 in zip(alphas, alphas[1:], values, values[1:]):
            t.check(v1 - v0, limit=_STRICTLY_NEGATIVE, family=fam, input=[float(a0), float(a1)], expected="decrease", got=[v0, v1])
        near_one = closed_form_radius(RadiusQuery(fam, Region.halfplane(1.0 - 1e-9)))
        t.check(near_one - 1e-8, limit=0.0, family=fam, input=1.0 - 1e-9, expected="-> 0", got=near_one)
    return t.result()


def _suite_structural(config: VerificationConfig) -> SuiteResult:
    t = _Tracker("structural_consistency", config.radius_tol)
    for fam in Family:
        for alpha in np.linspace(0.0, 0.95, 20):
            h = numeric_radius(RadiusQuery(fam, Region.halfplane(alpha)))
            d = numeric_radius(RadiusQuery(fam, Region.disc(alpha)))
            t.check(abs(h - d), limit=1e-10, family=fam, check="halfplane vs disc", input=float(alpha), expected=h, got=d)
        par = numeric_radius(RadiusQuery(fam, Region(RegionKind.PARABOLA)))
        half = numeric_radius(RadiusQuery(fam, Region.halfplane(0.5)))
        t.check(abs(par - half), family=fam, check="parabola vs order 1/2", expected=half, got=par)
        target = 0.25 if fam is Family.T1 else 1.0 / 6.0
        t.check(abs(par - target), family=fam, check="parabola value", expected=target, got=par)
        for A in np.linspace(0.1, 1.0, 10):
            jan, _ = janowski_radius(fam, A, -1.0)
            half = closed_form_radius(RadiusQuery(fam, Region.halfplane((1.0 - A) / 2.0)))
            t.check(abs(jan - half), limit=1e-12, family=fam, check="janowski B=-1", input=float(A), expected=half, got=jan)
            if fam is Family.T1:
                t.check(abs(jan - (1 + A) / (4 + A)), limit=1e-12, family=fam, check="(1+A)/(4+A)", input=float(A), got=jan)
    # one-sided values straddling the branch point
    root = bounds.SQRT2_MINUS_1
    eps = 1e-12
    below, above = bounds.exp_factor_bound(root - eps), bounds.exp_factor_bound(root + eps)
    jump = abs(above - below)
    t.check(jump, limit=1e-8, check="exp bound continuity", input=root, expected=below, got=above)
    return t.result()


def _suite_janowski(config: VerificationConfig) -> SuiteResult:
    t = _Tracker("janowski", config.radius_tol)
    for fam in Family:
        for A in JANOWSKI_A:
            for B in JANOWSKI_B:
                value, exactness = janowski_radius(fam, A, B)
                if fam is Family.T1:
                    formula = 2 * (A - B) / (3 + 2 * A - 5 * B)
                else:
                    formula = (A - B) / (3 * (1 - B))
                t.check(abs(value - formula), limit=1e-15, family=fam, check="formula", input=[A, B], expected=formula, got=value)
                t.check(0.0 if exactness is Exactness.EXACT else 1.0, limit=0.0, family=fam, check="exactness", input=[A, B])
                oracle = numeric_radius(RadiusQuery(fam, Region.janowski(A, B)))
                t.check(abs(oracle - value), family=fam, check="silverman bisection", input=[A, B], expected=value, got=oracle)
                region = Region.janowski(A, B)
                a, b = region.janowski_disc
                d = bounds.member_bound(fam, value)
                touch = abs(abs(a - 1.0) - (b - d))
                t.check(touch, limit=1e-12, family=fam, check="|a-c| = b-d", input=[A, B], expected=b - d, got=abs(a - 1.0))
                t.check(0.0 if disc_in_disc(1.0, d * (1 - 1e-9), a, b) else 1.0, limit=0.0,
                        family=fam, check="inside disc", input=[A, B])
    return t.result()


def _suite_univalence(config: VerificationConfig) -> SuiteResult:
    t = _Tracker("univalence", 1e-12)
    for fam, expected in ((Family.T1, -0.4), (Family.T2, -1.0 / 3.0)):
        z = univalence_witness(fam)
        t.check(abs(z - expected), family=fam, input="zero of f'", expected=expected, got=z)
        R0 = closed_form_radius(RadiusQuery(fam, Region.halfplane(0.0)))
        t.check(abs(abs(z) - R0), family=fam, input="alpha=0 radius", expected=R0, got=abs(z))
    return t.result()


RADII_SUITES = {
    "radii_oracle": _suite_radii_oracle,
    "sharpness": _suite_sharpness,
    "alpha_monotonicity": _suite_monotone_alpha,
    "structural_consistency": _suite_structural,
    "janowski": _suite_janowski,
    "univalence": _suite_univalence,
}


def verify_radii(config: VerificationConfig = VerificationConfig(), workers: int = 1) -> VerificationReport:
    tasks = [partial(fn, config) for fn in RADII_SUITES.values()]
    return VerificationReport(config, _run_parallel(tasks, workers))


# --- lemmas --------------------------------------------------------------------


def _sample_rng(config: VerificationConfig, suite: int, index: int) -> np.random.Generator:
    seq = np.random.SeedSequence(entropy=int(config.seed), spawn_key=(suite, index))
    return np.random.Generator(np.random.PCG64(seq))


def _circle_points(config: VerificationConfig) -> tuple[np.ndarray, np.ndarray]:
    """Sample points ``r e^{i theta}``: one row per radius."""
    radii = np.asarray(config.radii)
    thetas = 2.0 * np.pi * np.arange(config.boundary_samples) / config.boundary_samples
    return radii, radii[:, None] * np.exp(1j * thetas)[None, :]


def _suite_factor_dominance(config: VerificationConfig, kind: FactorKind, suite_id: int) -> SuiteResult:
    name = f"factor_dominance_{kind.value}"
    t = _Tracker(name, config.dominance_slack)
    radii, z = _circle_points(config)
    bound = np.array([bounds.factor_bound(kind, r) for r in radii])
    ranges = [bounds.factor_modulus_range(kind, r) for r in radii]
    lo = np.array([rg.lo for rg in ranges])
    hi = np.array([rg.hi for rg in ranges])
    for i in range(config.samples_per_family):
        p = random_factor(_sample_rng(config, suite_id, i), kind)
        ld = np.abs(log_derivative_factor(p, z))
        mod = np.abs(eval_factor(p, z))
        excess = ld - bound[:, None]
        j = np.unravel_index(np.argmax(excess), excess.shape)
        t.check(float(excess[j]), check="log-derivative bound", sample=i, input=z[j],
                expected=float(bound[j[0]]), got=float(ld[j]), map=_map_dict(p))
        range_excess = np.maximum(lo[:, None] - mod, mod - hi[:, None])
        j = np.unravel_index(np.argmax(range_excess), range_excess.shape)
        t.check(float(range_excess[j]), check="modulus range", sample=i, input=z[j],
                expected=[float(lo[j[0]]), float(hi[j[0]])], got=float(mod[j]), map=_map_dict(p))
    return t.result()


def _map_dict(p: SubordinateFactor) -> dict:
    return {"kind": p.kind.value, "phase": p.map.phase, "params": [[a.real, a.imag] for a in p.map.params]}


def _suite_member_dominance(config: VerificationConfig, family: Family, suite_id: int) -> SuiteResult:
    t = _Tracker(f"member_dominance_{family.value}", config.dominance_slack)
    radii, z = _circle_points(config)
    bound = np.array([bounds.member_bound(family, r) for r in radii])
    growth = [bounds.member_growth_range(family, r) for r in radii]
    lo = np.array([g.lo for g in growth])
    hi = np.array([g.hi for g in growth])
    for i in range(config.samples_per_family):
        f = random_member(_sample_rng(config, suite_id, i), family)
        dev = np.abs(log_derivative_member(f, z) - 1.0)
        excess = dev - bound[:, None]
        j = np.unravel_index(np.argmax(excess), excess.shape)
        t.check(float(excess[j]), check="member bound", sample=i, input=z[j],
                expected=float(bound[j[0]]), got=float(dev[j]),
                factors=[_map_dict(p) for p in f.factors])
        mod = np.abs(eval_member(f, z))
        growth_excess = np.maximum(lo[:, None] - mod, mod - hi[:, None])
        j = np.unravel_index(np.argmax(growth_excess), growth_excess.shape)
        t.check(float(growth_excess[j]), check="growth range", sample=i, input=z[j],
                expected=[float(lo[j[0]]), float(hi[j[0]])], got=float(mod[j]),
                factors=[_map_dict(p) for p in f.factors])
    return t.result()


def _suite_lemma_equality(config: VerificationConfig) -> SuiteResult:
    t = _Tracker("lemma_equality", EQUALITY_TOL)
    sqrt_p = SubordinateFactor(FactorKind.SQRT_ONE_PLUS, IDENTITY)
    exp_p = SubordinateFactor(FactorKind.EXP, IDENTITY)
    for r in config.radii:
        z = complex(-r)
        got = abs(log_derivative_factor(sqrt_p, z))
        want = bounds.sqrt_factor_bound(r)
        t.check(abs(got - want), check="sqrt factor at z=-r", input=z, expected=want, got=got)
        lo, hi = bounds.factor_modulus_range(FactorKind.SQRT_ONE_PLUS, r)
        t.check(abs(abs(eval_factor(sqrt_p, z)) - lo), check="sqrt modulus lower at z=-r", input=z, expected=lo)
        t.check(abs(abs(eval_factor(sqrt_p, -z)) - hi), check="sqrt modulus upper at z=r", input=-z, expected=hi)
        f1 = extremal_member(Family.T1)
        glo, ghi = bounds.member_growth_range(Family.T1, r)
        t.check(abs(abs(eval_member(f1, z)) - glo), check="T1 growth lower", input=z, expected=glo)
        t.check(abs(abs(eval_member(f1, -z)) - ghi), check="T1 growth upper", input=-z, expected=ghi)
        f2 = extremal_member(Family.T2)
        glo, ghi = bounds.member_growth_range(Family.T2, r)
        t.check(abs(abs(eval_member(f2, z)) - glo), check="T2 growth lower", input=z, expected=glo)
        t.check(abs(abs(eval_member(f2, -z)) - ghi), check="T2 growth upper", input=-z, expected=ghi)
        if r <= bounds.SQRT2_MINUS_1:
            for theta in 2.0 * np.pi * np.arange(config.boundary_samples) / config.boundary_samples:
                zc = r * complex(math.cos(theta), math.sin(theta))
                got = abs(log_derivative_factor(exp_p, zc))
                t.check(abs(got - r), check="exp factor at |z|=r", input=zc, expected=r, got=got)
    return t.result()


def verify_lemmas(config: VerificationConfig = VerificationConfig(), workers: int = 1) -> VerificationReport:
    tasks = [
        partial(_suite_factor_dominance, config, FactorKind.SQRT_ONE_PLUS, 1),
        partial(_suite_factor_dominance, config, FactorKind.EXP, 2),
        partial(_suite_member_dominance, config, Family.T1, 3),
        partial(_suite_member_dominance, config, Family.T2, 4),
        partial(_suite_lemma_equality, config),
    ]
    return VerificationReport(config, _run_parallel(tasks, workers))


def verify_all(config: VerificationConfig = VerificationConfig(), workers: int = 1) -> VerificationReport:
    return verify_radii(config, workers).merged(verify_lemmas(config, workers))


# --- reproduction table -----------------------------------------------------------

TABLE_FIELDS = (
    "family", "region", "params", "closed_form_expr", "closed_form_value",
    "numeric_value", "radius_residual", "sharpness_residual", "exactness",
)


def table_rows() -> list[dict]:
    rows = []
    for fam in Family:
        for region in catalog_regions():
            rep = radius_report(RadiusQuery(fam, region))
            rows.append({
                "family": fam.value,
                "region": region.kind.value,
                "params": region.params,
                "closed_form_expr": rep.closed_form_expr,
                "closed_form_value": rep.closed_form,
                "numeric_value": rep.numeric,
                "radius_residual": rep.radius_residual,
                "sharpness_residual": rep.boundary_residual,
                "exactness": rep.exactness.value,
            })
    return rows


def _params_text(params: dict) -> str:
    return ";".join(f"{k}={v!r}" for k, v in params.items())


def emit_table(fmt: str = "json") -> str:
    """Serialise the catalog table as ``json``, ``csv`` or ``text``."""
    rows = table_rows()
    if fmt == "json":
        return json.dumps(rows, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=TABLE_FIELDS, lineterminator="\n")
        writer.writeheader()
        for row in rows:
            writer.writerow({
                **row,
                "params": _params_text(row["params"]),
                **{k: repr(row[k]) for k in ("closed_form_value", "numeric_value", "radius_residual", "sharpness_residual")},
            })
        return buf.getvalue()
    if fmt == "text":
        return _text_table(rows)
    raise ValueError(f"unknown table format {fmt!r}")


def _fmt10(x: Optional[float]) -> str:
    return "-" if x is None else f"{x:.10g}"


def _text_table(rows: list[dict]) -> str:
    header = ("family", "region", "params", "closed form", "value", "numeric", "radius res", "sharp res", "exactness")
    body = [
        (
            r["family"], r["region"], _params_text(r["params"]) or "-", r["closed_form_expr"],
            _fmt10(r["closed_form_value"]), _fmt10(r["numeric_value"]),
            _fmt10(r["radius_residual"]), _fmt10(r["sharpness_residual"]), r["exactness"],
        )
        for r in rows
    ]
    widths = [max(len(str(row[i])) for row in [header] + body) for i in range(len(header))]
    lines = ["  ".join(str(c).ljust(w) for c, w in zip(row, widths)).rstrip() for row in [header] + body]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"
