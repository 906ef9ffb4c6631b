"""Generic numerical semigroup engine.

Everything is derived from Apéry tables: for a nonzero element ``m`` of S,
``w[i]`` is the least element of S congruent to ``i`` modulo ``m``.  Tables are
built with the round-robin method: generators are added one at a time, and
each residue cycle of ``gcd(a, m)`` is relaxed in a single lap started from
its current minimum.  Arithmetic is exact (Python integers).
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass, field
from functools import lru_cache, reduce
from typing import Iterable

from .errors import (
    EmptyInput,
    InvalidGenerator,
    ModulusNotInSemigroup,
    NotCoprime,
    SemigroupIsAllNaturals,
)

__all__ = [
    'GeneratorSet', 'AperyTable', 'SemigroupSummary', 'WilfReport',
    'validate_generators', 'apery_table', 'frobenius', 'gaps', 'genus',
    'membership', 'minimal_generators', 'pseudo_frobenius', 'summarize',
    'wilf_check',
]

_INF = math.inf


@dataclass(frozen=True)
class GeneratorSet:
    """Sorted, deduplicated, coprime positive generators.

    Build through :func:`validate_generators`; the constructor itself only
    canonicalizes.
    """
    generators: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, 'generators', tuple(sorted(set(self.generators))))

    @property
    def multiplicity(self) -> int:
        return self.generators[0]

    @property
    def is_naturals(self) -> bool:
        return self.generators[0] == 1

    def __iter__(self):
        return iter(self.generators)

    def __len__(self) -> int:
        return len(self.generators)


@dataclass(frozen=True)
class AperyTable:
    modulus: int
    w: tuple[int, ...]

    def __getitem__(self, i: int) -> int:
        return self.w[i]

    def __len__(self) -> int:
        return self.modulus

    def values(self) -> list[int]:
        """Elements of the Apéry set in ascending order."""
        return sorted(self.w)

    def contains(self, x: int) -> bool:
        """Membership of ``x`` in the semigroup the table was built from."""
        return x >= 0 and x >= self.w[x % self.modulus]

    def in_apery_set(self, x: int) -> bool:
        return x >= 0 and self.w[x % self.modulus] == x


@dataclass(frozen=True)
class SemigroupSummary:
    frobenius: int
    genus: int
    embedding_dimension: int
    type: int
    nu: int
    pseudo_frobenius: tuple[int, ...] = field(default=())


@dataclass(frozen=True)
class WilfReport:
    lhs: int
    rhs_e: int
    rhs_t: int
    holds: bool
    intermediate_holds: bool


def validate_generators(raw: Iterable[int]) -> GeneratorSet:
    raw = list(raw)
    if not raw:
        raise EmptyInput('generator list is empty')
    for g in raw:
        if isinstance(g, bool) or not isinstance(g, int):
            raise InvalidGenerator(f'generator {g!r} is not an integer')
        if g < 1:
            raise InvalidGenerator(f'generator {g} is not positive')
    d = reduce(math.gcd, raw)
    if d != 1:
        raise NotCoprime(f'gcd of generators is {d}; the complement in N is infinite')
    return GeneratorSet(tuple(raw))


def _add_generator(w: list, a: int) -> None:
    """Relax table ``w`` (in place) so it accounts for generator ``a``."""
    m = len(w)
    d = math.gcd(a, m)
    if d == m:
        return
    lap = m // d - 1
    for p in range(d):
        start = min(range(p, m, d), key=w.__getitem__)
        cur = w[start]
        if cur == _INF:
            continue
        for _ in range(lap):
            cur += a
            q = cur % m
            if w[q] < cur:
                cur = w[q]
            else:
                w[q] = cur


@lru_cache(maxsize=256)
def _table(generators: tuple[int, ...], m: int) -> tuple[int, ...]:
    w = [_INF] * m
    w[0] = 0
    for a in generators:
        _add_generator(w, a)
    return tuple(w)


def apery_table(S: GeneratorSet, m: int | None = None) -> AperyTable:
    """Apéry table of S with respect to ``m`` (default: the smallest generator)."""
    if m is None:
        m = S.multiplicity
    if m < 1:
        raise ModulusNotInSemigroup(f'modulus {m} must be a nonzero element of S')
    if m not in S.generators and not _default_table(S).contains(m):
        raise ModulusNotInSemigroup(f'{m} is not an element of the semigroup')
    return AperyTable(m, _table(S.generators, m))


def _default_table(S: GeneratorSet) -> AperyTable:
    return AperyTable(S.multiplicity, _table(S.generators, S.multiplicity))


def frobenius(S: GeneratorSet) -> int:
    """Largest integer outside S; -1 when S is all of N."""
    t = _default_table(S)
    return max(t.w) - t.modulus


def gaps(S: GeneratorSet) -> list[int]:
    t = _default_table(S)
    m = t.modulus
    # each residue class contributes w[i]-m, w[i]-2m, ... down to its first positive value
    per_class = (range(i, w_i, m) for i, w_i in enumerate(t.w) if w_i > i)
    return list(heapq.merge(*per_class))


def genus(S: GeneratorSet) -> int:
    t = _default_table(S)
    return sum((w_i - i) // t.modulus for i, w_i in enumerate(t.w))


def membership(S: GeneratorSet, x: int) -> bool:
    if x < 0:
        raise ValueError(f'membership is defined for non-negative integers, got {x}')
    return _default_table(S).contains(x)


def minimal_generators(S: GeneratorSet) -> GeneratorSet:
    """The unique minimal system of generators of S.

    A generator is redundant exactly when the smaller generators already reach
    it, so the table is grown in ascending order and each candidate is tested
    against the partial table before being added.
    """
    gens = S.generators
    m = gens[0]
    w: list = [_INF] * m
    w[0] = 0
    kept = [m]
    for a in gens[1:]:
        if a >= w[a % m]:
            continue
        kept.append(a)
        _add_generator(w, a)
    return GeneratorSet(tuple(kept))


def _maximal_apery_elements(S: GeneratorSet) -> list[int]:
    # w is maximal under <=_S iff w + g leaves the Apéry set for every generator g
    t = _default_table(S)
    return [w for w in t.values()
            if not any(t.in_apery_set(w + g) for g in S.generators)]


def pseudo_frobenius(S: GeneratorSet) -> list[int]:
    if S.is_naturals:
        raise SemigroupIsAllNaturals('pseudo-Frobenius numbers are defined for S != N')
    m = S.multiplicity
    return [w - m for w in _maximal_apery_elements(S)]


def summarize(S: GeneratorSet) -> SemigroupSummary:
    F = frobenius(S)
    g = genus(S)
    e = len(minimal_generators(S))
    # PF(N) = {-1} by the usual convention
    pf = (-1,) if S.is_naturals else tuple(pseudo_frobenius(S))
    return SemigroupSummary(
        frobenius=F,
        genus=g,
        embedding_dimension=e,
        type=len(pf),
        nu=F + 1 - g,
        pseudo_frobenius=pf,
    )


def wilf_check(S: GeneratorSet, summary: SemigroupSummary | None = None) -> WilfReport:
    if S.is_naturals:
        raise SemigroupIsAllNaturals("Wilf's inequality is checked on proper semigroups only")
    s = summary or summarize(S)
    lhs = s.frobenius + 1
    rhs_e = s.embedding_dimension * s.nu
    rhs_t = (s.type + 1) * s.nu
    return WilfReport(
        lhs=lhs,
        rhs_e=rhs_e,
        rhs_t=rhs_t,
        holds=lhs <= rhs_e,
        intermediate_holds=lhs <= rhs_t,
    )

