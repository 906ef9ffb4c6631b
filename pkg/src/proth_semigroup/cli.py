"""Command-line front end.

Exit status: 0 on success, 1 when a verification found mismatches, 2 on
invalid input or usage.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
from typing import Sequence

from . import proth
from . import semigroup as sg
from .errors import SemigroupError
from .report import (
    FORMATS,
    ExplorationSweep,
    FrobeniusResult,
    GapList,
    Membership,
    PseudoFrobeniusResult,
    describe,
    serialize_report,
)
from .verify import (
    DEFAULT_MAX_FROBENIUS,
    DEFAULT_MAX_S0,
    check_scale,
    cross_check,
    explore_all_odd,
    explore_arbitrary_k,
    sweep,
)

JOBS_ENV = 'PROTH_SG_JOBS'


class UsageError(Exception):
    pass


def parse_range(text: str) -> tuple[int, int]:
    """``lo..hi`` (inclusive) or a single integer."""
    try:
        if '..' in text:
            lo, hi = text.split('..', 1)
            return int(lo), int(hi)
        v = int(text)
        return v, v
    except ValueError:
        raise argparse.ArgumentTypeError(f'expected an integer or lo..hi, got {text!r}') from None


def parse_gens(text: str) -> list[int]:
    try:
        return [int(t) for t in text.replace(',', ' ').split()]
    except ValueError:
        raise argparse.ArgumentTypeError(
            f'expected a comma-separated list of integers, got {text!r}') from None


def default_jobs() -> int:
    env = os.environ.get(JOBS_ENV)
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return os.cpu_count() or 1


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f'{self.prog}: {message}')


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--format', choices=FORMATS, default='text')
    common.add_argument('--jobs', type=int, default=None,
                        help=f'worker processes (default: ${JOBS_ENV} or CPU count)')
    common.add_argument('--max-s0', type=int, default=DEFAULT_MAX_S0)
    common.add_argument('--max-frobenius', type=int, default=DEFAULT_MAX_FROBENIUS)
    common.add_argument('-v', '--verbose', action='store_true')

    parser = _Parser(prog='proth-sg', description='Proth numerical semigroup toolkit')
    sub = parser.add_subparsers(dest='command', required=True, parser_class=_Parser)

    def target(p, gens=True):
        if gens:
            group = p.add_mutually_exclusive_group(required=True)
            group.add_argument('--gens', type=parse_gens,
                               help='generators, e.g. 3,5 or "3 5"')
            group.add_argument('--n', type=int)
        else:
            p.add_argument('--n', type=int, required=True)
        p.add_argument('--k', type=int)

    p = sub.add_parser('describe', parents=[common],
                       help='closed-form invariants of P_k(n), k = 2^r+1')
    target(p, gens=False)

    p = sub.add_parser('apery', parents=[common], help='Apéry table')
    target(p)
    source = p.add_mutually_exclusive_group()
    source.add_argument('--engine', dest='source', action='store_const', const='engine')
    source.add_argument('--closed-form', dest='source', action='store_const', const='closed-form')
    p.add_argument('--modulus', type=int, help='engine only; defaults to the smallest generator')

    for name, help_ in (('frobenius', 'Frobenius number'),
                        ('pf', 'pseudo-Frobenius numbers'),
                        ('gaps', 'gaps in ascending order'),
                        ('summary', 'engine invariants of a generator list')):
        p = sub.add_parser(name, parents=[common], help=help_)
        target(p)

    p = sub.add_parser('member', parents=[common], help='membership test')
    target(p)
    p.add_argument('--x', type=int, required=True)

    p = sub.add_parser('verify', parents=[common],
                       help='cross-check closed forms against the engine')
    p.add_argument('--n', type=parse_range, required=True, metavar='LO..HI')
    kr = p.add_mutually_exclusive_group(required=True)
    kr.add_argument('--r', type=parse_range, metavar='LO..HI')
    kr.add_argument('--k', type=int)

    p = sub.add_parser('sweep', parents=[common], help='grid sweep')
    p.add_argument('--n', type=parse_range, required=True, metavar='LO..HI')
    p.add_argument('--r', type=parse_range, metavar='LO..HI')
    p.add_argument('--k-mode', choices=('closed', 'all-odd'), default='closed')

    p = sub.add_parser('explore', parents=[common],
                       help='engine-only summary of P_k(n) for any odd k')
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--k', type=int, required=True)
    return parser


def _params(args) -> proth.ProthParams:
    if args.k is None:
        raise UsageError(f'{args.command}: --k is required with --n')
    return proth.proth_params(args.n, args.k)


def _engine_set(args) -> sg.GeneratorSet:
    """Generator set from --gens, or the minimal generators of P_k(n)."""
    if args.gens is not None:
        if args.k is not None:
            raise UsageError(f'{args.command}: --k only applies together with --n')
        return sg.validate_generators(args.gens)
    p = _params(args)
    check_scale(p, args.max_s0, args.max_frobenius)
    return proth.minimal_generating_set(p).generator_set()


def _closed_form_ready(args) -> proth.ProthParams | None:
    if args.gens is not None:
        return None
    p = _params(args)
    return p if p.closed_form_available else None


def execute(args) -> tuple[object, int]:
    """Run one parsed command; returns (result, exit code)."""
    jobs = args.jobs if args.jobs is not None else default_jobs()
    ceilings = dict(max_s0=args.max_s0, max_frobenius=args.max_frobenius)
    cmd = args.command

    if cmd == 'describe':
        return describe(_params(args), **ceilings), 0

    if cmd == 'apery':
        if args.source == 'closed-form':
            if args.gens is not None:
                raise UsageError('apery: --closed-form needs --n/--k, not --gens')
            if args.modulus is not None:
                raise UsageError('apery: --modulus applies to the engine only')
            p = _params(args)
            values = proth.apery_closed_form(p)
            s0 = proth.generator(p, 0)
            w = [0] * s0
            for v in values:
                w[v % s0] = v
            return sg.AperyTable(s0, tuple(w)), 0
        return sg.apery_table(_engine_set(args), args.modulus), 0

    if cmd == 'frobenius':
        p = _closed_form_ready(args)
        if p is not None:
            return FrobeniusResult(proth.frobenius_closed_form(p), 'closed-form'), 0
        return FrobeniusResult(sg.frobenius(_engine_set(args)), 'engine'), 0

    if cmd == 'pf':
        p = _closed_form_ready(args)
        if p is not None:
            return PseudoFrobeniusResult(tuple(proth.pf_closed_form(p)), 'closed-form'), 0
        return PseudoFrobeniusResult(tuple(sg.pseudo_frobenius(_engine_set(args))), 'engine'), 0

    if cmd == 'gaps':
        return GapList(tuple(sg.gaps(_engine_set(args)))), 0

    if cmd == 'summary':
        return sg.summarize(_engine_set(args)), 0

    if cmd == 'member':
        if args.x < 0:
            raise UsageError('member: --x must be non-negative')
        return Membership(args.x, sg.membership(_engine_set(args), args.x)), 0

    if cmd == 'verify':
        n_lo, n_hi = args.n
        if args.k is not None:
            if n_lo != n_hi:
                raise UsageError('verify: --k takes a single --n value')
            rep = cross_check(proth.proth_params(n_lo, args.k), **ceilings)
            return rep, 0 if rep.overall_pass else 1
        summary = sweep(n_lo, n_hi, *args.r, jobs=jobs, **ceilings)
        return summary, 0 if summary.failures == 0 else 1

    if cmd == 'sweep':
        n_lo, n_hi = args.n
        if args.k_mode == 'all-odd':
            if args.r is not None:
                raise UsageError('sweep: --r does not apply with --k-mode all-odd')
            return ExplorationSweep(tuple(explore_all_odd(n_lo, n_hi, jobs=jobs, **ceilings))), 0
        if args.r is None:
            raise UsageError('sweep: --r is required with --k-mode closed')
        summary = sweep(n_lo, n_hi, *args.r, jobs=jobs, **ceilings)
        return summary, 0 if summary.failures == 0 else 1

    if cmd == 'explore':
        return explore_arbitrary_k(args.n, args.k, **ceilings), 0

    raise UsageError(f'unknown command {cmd!r}')


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        print(exc, file=stderr)
        return 2
    except SystemExit as exc:  # --help
        return int(exc.code or 0)

    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format='%(levelname)s %(name)s: %(message)s', stream=stderr)
    try:
        result, code = execute(args)
        text = serialize_report(result, args.format)
    except (UsageError, SemigroupError) as exc:
        print(f'error: {exc}', file=stderr)
        return 2
    stdout.write(text)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == '__main__':
    main()
