"""Cross-check the Proth closed forms against the generic engine."""

from __future__ import annotations

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any

from . import proth
from . import semigroup as sg
from .errors import EngineScaleExceeded, SemigroupError
from .proth import ProthParams

log = logging.getLogger(__name__)

DEFAULT_MAX_S0 = 10**6
DEFAULT_MAX_FROBENIUS = 10**9

CHECK_NAMES = (
    'embedding_dimension',
    'minimal_generators',
    'apery_set',
    'apery_cardinality',
    'frobenius',
    'pf_set',
    'type',
    'genus_bound',
    'wilf',
    'w1_w2',
    'tuple_injectivity',
    'rewrite_identities',
    'monotone_w',
)


@dataclass(frozen=True)
class Check:
    name: str
    expected: Any
    actual: Any
    passed: bool


@dataclass
class VerificationReport:
    params: ProthParams
    checks: list[Check]
    elapsed: float = 0.0

    @property
    def overall_pass(self) -> bool:
        return all(c.passed for c in self.checks)

    def check(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)


@dataclass(frozen=True)
class SkippedPoint:
    n: int
    r: int
    k: int
    reason: str


@dataclass
class SweepSummary:
    grid: list[tuple[int, int]] = field(default_factory=list)
    reports: list[VerificationReport] = field(default_factory=list)
    skipped: list[SkippedPoint] = field(default_factory=list)

    @property
    def failures(self) -> int:
        return sum(not rep.overall_pass for rep in self.reports)


@dataclass(frozen=True)
class Exploration:
    """Engine-only view of P_k(n) for any admissible odd k."""
    params: ProthParams
    generators: tuple[int, ...]
    summary: sg.SemigroupSummary
    frobenius_formula: int
    formula_matches: bool


def check_scale(p: ProthParams, max_s0: int = DEFAULT_MAX_S0,
                max_frobenius: int = DEFAULT_MAX_FROBENIUS) -> None:
    s = lambda t: proth.generator(p, t)
    s0 = s(0)
    if s0 > max_s0:
        raise EngineScaleExceeded(f's0 = {s0} exceeds the engine ceiling {max_s0}')
    # the k = 2**r + 1 Frobenius expression, used as a size estimate for every k
    f = 2 * s(1) + s(p.n) + s(p.length) - s0
    if f > max_frobenius:
        raise EngineScaleExceeded(
            f'Frobenius estimate {f} exceeds the engine ceiling {max_frobenius}')


def cross_check(p: ProthParams, max_s0: int = DEFAULT_MAX_S0,
                max_frobenius: int = DEFAULT_MAX_FROBENIUS) -> VerificationReport:
    if not p.closed_form_available:
        raise proth.ClosedFormUnavailable(
            f'k={p.k} is not of the form 2**r + 1; nothing to cross-check')
    check_scale(p, max_s0, max_frobenius)
    started = time.perf_counter()
    n, r, top = p.n, p.r, p.length
    s = proth.minimal_generating_set(p).s
    S = sg.GeneratorSet(s)
    table = sg.apery_table(S)
    summary = sg.summarize(S)
    checks = []

    def add(name, expected, actual, passed=None):
        checks.append(Check(name, expected, actual,
                            expected == actual if passed is None else passed))

    extended = sg.GeneratorSet(tuple(proth.generator(p, i) for i in range(top + 4)))
    engine_min = sg.minimal_generators(extended).generators
    add('embedding_dimension', proth.embedding_dimension(p), len(engine_min))
    add('minimal_generators', list(s), list(engine_min))

    closed_ap = proth.apery_closed_form(p)
    add('apery_set', closed_ap, table.values())
    card = proth.apery_cardinality(p)
    add('apery_cardinality', card, len(closed_ap), card == len(closed_ap) == s[0])

    add('frobenius', proth.frobenius_closed_form(p), summary.frobenius)
    add('pf_set', proth.pf_closed_form(p), list(summary.pseudo_frobenius))
    add('type', proth.type_closed_form(p), summary.type)

    bound = proth.genus_lower_bound(p)
    add('genus_bound', bound, summary.genus,
        summary.genus >= bound and 2 * bound == summary.frobenius + 1)

    wilf = sg.wilf_check(S, summary)
    chain = (summary.type + 1 == n + r
             and summary.embedding_dimension == n + r + 1
             and wilf.lhs <= (n + r) * summary.nu < (n + r + 1) * summary.nu)
    add('wilf', True, wilf.holds and wilf.intermediate_holds and chain)

    w1, w2 = proth.w12_closed_form(p)
    identities = (w1 - w2 == s[1] and w2 - 2 == s[0]**2 and w1 - 1 == s[0]**2 + 2 * s[0])
    add('w1_w2', [w1, w2], [table[1], table[2]],
        [w1, w2] == [table[1], table[2]] and identities)

    tuples = proth.apery_tuples(p)
    sums = {proth.tuple_value(p, a) for a in tuples}
    add('tuple_injectivity', len(tuples), len(sums), len(tuples) == len(sums) == s[0])

    pairs = list(proth.rewrite_pairs(p))
    add('rewrite_identities', len(pairs),
        sum(proth.check_rewrite_identity(p, i, j) for i, j in pairs))

    violations = sum(table[i + 1] > table[i] + 1 for i in range(1, s[0] - 1))
    add('monotone_w', 0, violations)

    elapsed = time.perf_counter() - started
    log.debug('cross_check n=%d k=%d took %.3fs', n, p.k, elapsed)
    return VerificationReport(p, checks, elapsed)


def _sweep_point(args: tuple[int, int, int, int]) -> VerificationReport | SkippedPoint:
    n, r, max_s0, max_frobenius = args
    k = 2**r + 1
    try:
        p = proth.proth_params(n, k)
        return cross_check(p, max_s0, max_frobenius)
    except SemigroupError as exc:
        return SkippedPoint(n, r, k, str(exc))


def sweep(n_lo: int, n_hi: int, r_lo: int, r_hi: int, jobs: int = 1,
          max_s0: int = DEFAULT_MAX_S0,
          max_frobenius: int = DEFAULT_MAX_FROBENIUS) -> SweepSummary:
    """Cross-check every (n, k = 2**r + 1) with n, r in the inclusive ranges.

    Invalid points are skipped with a reason rather than raising.  Results are
    ordered by (n, r) whatever the completion order of the workers.
    """
    work = [(n, r, max_s0, max_frobenius)
            for n in range(n_lo, n_hi + 1) for r in range(r_lo, r_hi + 1)]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_sweep_point, work))
    else:
        results = [_sweep_point(w) for w in work]

    out = SweepSummary()
    for res in results:
        if isinstance(res, SkippedPoint):
            out.skipped.append(res)
        else:
            out.grid.append((res.params.n, res.params.k))
            out.reports.append(res)
    return out


def explore_arbitrary_k(n: int, k: int, max_s0: int = DEFAULT_MAX_S0,
                        max_frobenius: int = DEFAULT_MAX_FROBENIUS) -> Exploration:
    """Engine summary of P_k(n) for any odd k; no closed form is claimed.

    The semigroup is built from s[0..n+r+3] so the engine decides the minimal
    generators on its own.  ``formula_matches`` records whether the Frobenius
    expression proved for k = 2**r + 1 happens to hold.
    """
    p = proth.proth_params(n, k)
    check_scale(p, max_s0, max_frobenius)
    S = sg.GeneratorSet(tuple(proth.generator(p, i) for i in range(p.length + 4)))
    summary = sg.summarize(S)
    s = lambda t: proth.generator(p, t)
    formula = 2 * s(1) + s(n) + s(p.length) - s(0)
    return Exploration(
        params=p,
        generators=sg.minimal_generators(S).generators,
        summary=summary,
        frobenius_formula=formula,
        formula_matches=formula == summary.frobenius,
    )


def explore_all_odd(n_lo: int, n_hi: int, jobs: int = 1,
                    max_s0: int = DEFAULT_MAX_S0,
                    max_frobenius: int = DEFAULT_MAX_FROBENIUS,
                    ) -> list[Exploration | SkippedPoint]:
    """Explore every odd 3 <= k < 2**n; oversized points come back skipped."""
    work = [(n, k, max_s0, max_frobenius)
            for n in range(n_lo, n_hi + 1) for k in range(3, 2**n, 2)]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_explore_point, work))
    return [_explore_point(w) for w in work]


def _explore_point(args: tuple[int, int, int, int]) -> Exploration | SkippedPoint:
    n, k = args[:2]
    try:
        return explore_arbitrary_k(*args)
    except SemigroupError as exc:
        return SkippedPoint(n, k.bit_length() - 1, k, str(exc))
