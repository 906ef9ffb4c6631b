"""Rendering of library results as text, JSON or CSV.

JSON integers above 2**53 in magnitude are written as decimal strings so that
consumers parsing into doubles never lose digits.  Scalar fields that can grow
without bound (``frobenius``, ``genus_bound``) always carry a ``*_str``
companion holding the full decimal value.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from typing import Any, Iterable, Sequence

from . import proth
from . import semigroup as sg
from .errors import EngineScaleExceeded, UnsupportedFormat
from .proth import ProthParams
from .verify import (
    DEFAULT_MAX_FROBENIUS,
    DEFAULT_MAX_S0,
    Exploration,
    SkippedPoint,
    SweepSummary,
    VerificationReport,
    check_scale,
)

FORMATS = ('text', 'json', 'csv')
_SAFE = 2**53


@dataclass(frozen=True)
class Description:
    """Closed-form invariants of one P_{2^r+1}(n).

    ``wilf`` needs the genus, which has no closed form, so it is filled from
    the engine when the instance is within the engine ceiling and left as
    None otherwise.
    """
    params: ProthParams
    generators: tuple[int, ...]
    embedding_dimension: int
    frobenius: int
    pseudo_frobenius: tuple[int, ...]
    type: int
    genus_bound: int
    apery_cardinality: int
    wilf: sg.WilfReport | None


@dataclass(frozen=True)
class GapList:
    gaps: tuple[int, ...]


@dataclass(frozen=True)
class Membership:
    x: int
    member: bool


@dataclass(frozen=True)
class FrobeniusResult:
    frobenius: int
    source: str


@dataclass(frozen=True)
class PseudoFrobeniusResult:
    pseudo_frobenius: tuple[int, ...]
    source: str


@dataclass(frozen=True)
class ExplorationSweep:
    points: tuple[Exploration | SkippedPoint, ...]


def describe(p: ProthParams, max_s0: int = DEFAULT_MAX_S0,
             max_frobenius: int = DEFAULT_MAX_FROBENIUS) -> Description:
    gens = proth.minimal_generating_set(p).s
    F = proth.frobenius_closed_form(p)
    pf = proth.pf_closed_form(p)
    e = proth.embedding_dimension(p)
    wilf = None
    try:
        check_scale(p, max_s0, max_frobenius)
    except EngineScaleExceeded:
        pass
    else:
        S = sg.GeneratorSet(gens)
        wilf = sg.wilf_check(S)
    return Description(
        params=p,
        generators=gens,
        embedding_dimension=e,
        frobenius=F,
        pseudo_frobenius=tuple(pf),
        type=len(pf),
        genus_bound=proth.genus_lower_bound(p),
        apery_cardinality=proth.apery_cardinality(p),
        wilf=wilf,
    )


# JSON

def jint(x: Any) -> Any:
    """Encode integers beyond double precision as strings, recursively."""
    if isinstance(x, bool) or x is None:
        return x
    if isinstance(x, int):
        return x if -_SAFE <= x <= _SAFE else str(x)
    if isinstance(x, (list, tuple)):
        return [jint(v) for v in x]
    if isinstance(x, dict):
        return {k: jint(v) for k, v in x.items()}
    return x


def _params_obj(p: ProthParams) -> dict:
    return {'n': p.n, 'k': p.k, 'r': p.r}


def _summary_obj(s: sg.SemigroupSummary) -> dict:
    return {
        'frobenius': s.frobenius,
        'frobenius_str': str(s.frobenius),
        'genus': s.genus,
        'embedding_dimension': s.embedding_dimension,
        'type': s.type,
        'nu': s.nu,
        'pseudo_frobenius': list(s.pseudo_frobenius),
    }


def _wilf_obj(w: sg.WilfReport | None) -> dict | None:
    if w is None:
        return None
    return {'lhs': w.lhs, 'rhs': w.rhs_e, 'holds': w.holds,
            'rhs_type': w.rhs_t, 'type_bound_holds': w.intermediate_holds}


def _report_obj(rep: VerificationReport) -> dict:
    return {
        **_params_obj(rep.params),
        'overall_pass': rep.overall_pass,
        'checks': [{'name': c.name, 'expected': c.expected,
                    'actual': c.actual, 'pass': c.passed} for c in rep.checks],
    }


def _skipped_obj(sk: SkippedPoint) -> dict:
    return {'n': sk.n, 'k': sk.k, 'r': sk.r, 'reason': sk.reason}


def _exploration_obj(ex: Exploration) -> dict:
    return {
        **_params_obj(ex.params),
        'closed_form_available': ex.params.closed_form_available,
        'generators': list(ex.generators),
        **_summary_obj(ex.summary),
        'frobenius_formula': ex.frobenius_formula,
        'formula_matches': ex.formula_matches,
    }


def to_json_obj(obj: Any) -> Any:
    if isinstance(obj, Description):
        return {
            **_params_obj(obj.params),
            'generators': list(obj.generators),
            'embedding_dimension': obj.embedding_dimension,
            'frobenius': obj.frobenius,
            'frobenius_str': str(obj.frobenius),
            'pseudo_frobenius': list(obj.pseudo_frobenius),
            'type': obj.type,
            'genus_bound': obj.genus_bound,
            'genus_bound_str': str(obj.genus_bound),
            'apery_cardinality': obj.apery_cardinality,
            'wilf': _wilf_obj(obj.wilf),
        }
    if isinstance(obj, sg.SemigroupSummary):
        return _summary_obj(obj)
    if isinstance(obj, sg.WilfReport):
        return _wilf_obj(obj)
    if isinstance(obj, VerificationReport):
        return _report_obj(obj)
    if isinstance(obj, SweepSummary):
        return {
            'points': len(obj.reports),
            'failures': obj.failures,
            'reports': [_report_obj(r) for r in obj.reports],
            'skipped': [_skipped_obj(s) for s in obj.skipped],
        }
    if isinstance(obj, Exploration):
        return _exploration_obj(obj)
    if isinstance(obj, ExplorationSweep):
        return {
            'explored': [_exploration_obj(e) for e in obj.points if isinstance(e, Exploration)],
            'skipped': [_skipped_obj(e) for e in obj.points if isinstance(e, SkippedPoint)],
        }
    if isinstance(obj, sg.AperyTable):
        return {'modulus': obj.modulus, 'w': list(obj.w)}
    if isinstance(obj, GapList):
        return {'genus': len(obj.gaps), 'gaps': list(obj.gaps)}
    if isinstance(obj, Membership):
        return {'x': obj.x, 'member': obj.member}
    if isinstance(obj, FrobeniusResult):
        return {'frobenius': obj.frobenius, 'frobenius_str': str(obj.frobenius),
                'source': obj.source}
    if isinstance(obj, PseudoFrobeniusResult):
        return {'pseudo_frobenius': list(obj.pseudo_frobenius),
                'type': len(obj.pseudo_frobenius), 'source': obj.source}
    raise TypeError(f'cannot serialize {type(obj).__name__}')


# CSV

def _cell(v: Any) -> str:
    if isinstance(v, bool):
        return 'true' if v else 'false'
    if isinstance(v, (list, tuple)):
        return ' '.join(_cell(x) for x in v)
    return str(v)


def _csv(header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator='\n')
    writer.writerow(header)
    for row in rows:
        writer.writerow([_cell(v) for v in row])
    return buf.getvalue()


def to_csv(obj: Any) -> str:
    if isinstance(obj, VerificationReport):
        p = obj.params
        return _csv(['n', 'k', 'r', 'check', 'expected', 'actual', 'pass'],
                    ([p.n, p.k, p.r, c.name, c.expected, c.actual, c.passed]
                     for c in obj.checks))
    if isinstance(obj, SweepSummary):
        rows = [[r.params.n, r.params.k, r.params.r, 'checked', r.overall_pass,
                 [c.name for c in r.checks if not c.passed], '']
                for r in obj.reports]
        rows += [[s.n, s.k, s.r, 'skipped', '', '', s.reason] for s in obj.skipped]
        rows.sort(key=lambda row: (row[0], row[2]))
        return _csv(['n', 'k', 'r', 'status', 'overall_pass', 'failed_checks', 'note'], rows)
    if isinstance(obj, ExplorationSweep):
        rows = []
        for e in obj.points:
            if isinstance(e, SkippedPoint):
                rows.append([e.n, e.k, e.r, 'skipped', '', '', '', '', '', e.reason])
            else:
                s = e.summary
                rows.append([e.params.n, e.params.k, e.params.r, 'explored',
                             s.embedding_dimension, s.frobenius, s.type, s.genus,
                             e.formula_matches, ''])
        return _csv(['n', 'k', 'r', 'status', 'embedding_dimension', 'frobenius',
                     'type', 'genus', 'formula_matches', 'note'], rows)
    if isinstance(obj, sg.AperyTable):
        return _csv(['residue', 'w'], enumerate(obj.w))
    if isinstance(obj, GapList):
        return _csv(['gap'], ([g] for g in obj.gaps))
    raise UnsupportedFormat(f'csv output is not available for {_kind(obj)}')


def _kind(obj: Any) -> str:
    return {
        Description: 'describe',
        sg.SemigroupSummary: 'a semigroup summary',
        Exploration: 'explore',
        Membership: 'member',
        FrobeniusResult: 'frobenius',
        PseudoFrobeniusResult: 'pf',
    }.get(type(obj), type(obj).__name__)


# text

def _short(v: Any, limit: int = 8) -> str:
    if isinstance(v, (list, tuple)):
        if len(v) > limit:
            return f'<{len(v)} values>'
        return '[' + ', '.join(str(x) for x in v) + ']'
    return str(v)


def _report_lines(rep: VerificationReport) -> list[str]:
    p = rep.params
    head = f'n={p.n} k={p.k} (r={p.r}): {"PASS" if rep.overall_pass else "FAIL"}'
    lines = [head]
    for c in rep.checks:
        mark = 'ok  ' if c.passed else 'FAIL'
        lines.append(f'  [{mark}] {c.name}: expected {_short(c.expected)}, '
                     f'actual {_short(c.actual)}')
    return lines


def _summary_lines(s: sg.SemigroupSummary) -> list[str]:
    return [
        f'frobenius: {s.frobenius}',
        f'genus: {s.genus}',
        f'embedding_dimension: {s.embedding_dimension}',
        f'type: {s.type}',
        f'nu: {s.nu}',
        f'pseudo_frobenius: {_short(list(s.pseudo_frobenius), 32)}',
    ]


def to_text(obj: Any) -> str:
    if isinstance(obj, Description):
        p = obj.params
        lines = [
            f'n: {p.n}', f'k: {p.k}', f'r: {p.r}',
            f'generators: {_short(list(obj.generators), 64)}',
            f'embedding_dimension: {obj.embedding_dimension}',
            f'frobenius: {obj.frobenius}',
            f'pseudo_frobenius: {_short(list(obj.pseudo_frobenius), 64)}',
            f'type: {obj.type}',
            f'genus_bound: {obj.genus_bound}',
            f'apery_cardinality: {obj.apery_cardinality}',
        ]
        if obj.wilf is None:
            lines.append('wilf: not computed (above engine ceiling)')
        else:
            w = obj.wilf
            lines.append(f'wilf: {w.lhs} <= {w.rhs_e} '
                         f'({"holds" if w.holds else "FAILS"})')
        return '\n'.join(lines) + '\n'
    if isinstance(obj, sg.SemigroupSummary):
        return '\n'.join(_summary_lines(obj)) + '\n'
    if isinstance(obj, VerificationReport):
        return '\n'.join(_report_lines(obj)) + '\n'
    if isinstance(obj, SweepSummary):
        lines = []
        for rep in obj.reports:
            lines.extend(_report_lines(rep))
        for sk in obj.skipped:
            lines.append(f'n={sk.n} k={sk.k} (r={sk.r}): skipped, {sk.reason}')
        lines.append(f'{len(obj.reports)} points, {obj.failures} failures')
        return '\n'.join(lines) + '\n'
    if isinstance(obj, Exploration):
        p = obj.params
        lines = [f'n: {p.n}', f'k: {p.k}', f'r: {p.r}',
                 f'generators: {_short(list(obj.generators), 64)}']
        lines += _summary_lines(obj.summary)
        lines.append(f'frobenius_formula: {obj.frobenius_formula} '
                     f'({"matches" if obj.formula_matches else "differs"})')
        return '\n'.join(lines) + '\n'
    if isinstance(obj, ExplorationSweep):
        lines = []
        for e in obj.points:
            if isinstance(e, SkippedPoint):
                lines.append(f'n={e.n} k={e.k}: skipped, {e.reason}')
            else:
                s = e.summary
                lines.append(f'n={e.params.n} k={e.params.k}: e={s.embedding_dimension} '
                             f'F={s.frobenius} t={s.type} g={s.genus} '
                             f'formula {"matches" if e.formula_matches else "differs"}')
        return '\n'.join(lines) + '\n'
    if isinstance(obj, sg.AperyTable):
        return ''.join(f'{i} {w}\n' for i, w in enumerate(obj.w))
    if isinstance(obj, GapList):
        return ' '.join(map(str, obj.gaps)) + '\n'
    if isinstance(obj, Membership):
        return ('true' if obj.member else 'false') + '\n'
    if isinstance(obj, FrobeniusResult):
        return f'{obj.frobenius}\n'
    if isinstance(obj, PseudoFrobeniusResult):
        return ' '.join(map(str, obj.pseudo_frobenius)) + '\n'
    raise TypeError(f'cannot render {type(obj).__name__}')


def serialize_report(obj: Any, fmt: str = 'text') -> str:
    if fmt == 'json':
        return json.dumps(jint(to_json_obj(obj)), indent=2) + '\n'
    if fmt == 'csv':
        return to_csv(obj)
    if fmt == 'text':
        return to_text(obj)
    raise UnsupportedFormat(f'unknown format {fmt!r}; choose from {", ".join(FORMATS)}')


__all__ = [
    'Description', 'GapList', 'Membership', 'FrobeniusResult',
    'PseudoFrobeniusResult', 'ExplorationSweep', 'describe', 'jint',
    'serialize_report', 'to_json_obj', 'FORMATS',
]
