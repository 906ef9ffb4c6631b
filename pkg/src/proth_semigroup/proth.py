"""Closed forms for the Proth semigroups P_k(n) = <k*2**(n+i) + 1 : i >= 0>.

Notation: ``s[i] = k*2**(n+i) + 1``.  The minimal system of generators is
``s[0..n+r]`` where ``2**r < k < 2**(r+1)``.  Apéry set, Frobenius number,
pseudo-Frobenius set and genus bound are only known in closed form for
``k = 2**r + 1``; every such function refuses other values of ``k``.

Coefficient tuples are 1-based in meaning: ``a[0]`` is the coefficient of
``s[1]`` and ``a[-1]`` the coefficient of ``s[n+r]``.  ``s`` itself is 0-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import (
    ClosedFormUnavailable,
    IndexOutOfRange,
    InvalidProthParams,
    KEven,
    KIsOne,
    KTooLarge,
    NTooSmall,
)
from .semigroup import GeneratorSet

CoefficientTuple = tuple[int, ...]


@dataclass(frozen=True)
class ProthParams:
    n: int
    k: int
    r: int

    @property
    def closed_form_available(self) -> bool:
        return self.k == 2**self.r + 1

    @property
    def length(self) -> int:
        """Number of coefficients in a tuple, n + r."""
        return self.n + self.r


@dataclass(frozen=True)
class ProthGenerators:
    params: ProthParams
    s: tuple[int, ...]

    def generator_set(self) -> GeneratorSet:
        return GeneratorSet(self.s)


@dataclass(frozen=True)
class RewriteConstants:
    alpha: int
    beta: int


def proth_params(n: int, k: int) -> ProthParams:
    if n <= 2:
        raise NTooSmall(f'n must exceed 2 (got n={n})')
    if k < 1:
        raise InvalidProthParams(f'k must be a positive odd integer (got k={k})')
    if k % 2 == 0:
        raise KEven(f'k must be odd (got k={k})')
    if k == 1:
        raise KIsOne('k = 1 is the Cunningham semigroup, which is not covered here')
    if k >= 2**n:
        raise KTooLarge(f'k must be below 2**n = {2**n} (got k={k})')
    return ProthParams(n=n, k=k, r=k.bit_length() - 1)


def _require_closed_form(p: ProthParams) -> None:
    if not p.closed_form_available:
        raise ClosedFormUnavailable(
            f'closed forms need k = 2**r + 1; k={p.k} (r={p.r}) does not qualify')


def generator(p: ProthParams, i: int) -> int:
    return p.k * 2**(p.n + i) + 1


def minimal_generating_set(p: ProthParams) -> ProthGenerators:
    return ProthGenerators(p, tuple(generator(p, i) for i in range(p.length + 1)))


def embedding_dimension(p: ProthParams) -> int:
    return p.n + p.r + 1


def rewrite_constants(p: ProthParams) -> RewriteConstants:
    return RewriteConstants(
        alpha=(p.k - 2**p.r) * 2**(p.n + 1) + 3,
        beta=(2**(p.r + 1) - p.k) * 2**p.n - 2,
    )


def check_rewrite_identity(p: ProthParams, i: int, j: int) -> bool:
    """Evaluate the exchange identity for ``s[i] + 2*s[j]`` exactly.

    For ``j < n+r`` it reads ``2*s[i-1] + s[j+1]``; for ``j = n+r`` the right
    side is ``2*s[i-1] + alpha*s[0] + beta*s[1]``.
    """
    top = p.length
    if not 0 < i <= j <= top:
        raise IndexOutOfRange(f'need 0 < i <= j <= {top}, got i={i}, j={j}')
    s = lambda t: generator(p, t)
    lhs = s(i) + 2 * s(j)
    if j < top:
        return lhs == 2 * s(i - 1) + s(j + 1)
    c = rewrite_constants(p)
    return lhs == 2 * s(i - 1) + c.alpha * s(0) + c.beta * s(1)


def rewrite_pairs(p: ProthParams) -> Iterator[tuple[int, int]]:
    top = p.length
    for i in range(1, top + 1):
        for j in range(i, top + 1):
            yield i, j


# coefficient tuples

def is_admissible(a: Sequence[int]) -> bool:
    """Membership test for P(r, n): entries in {0,1,2}, a 2 only after zeros."""
    seen_nonzero = False
    for v in a:
        if v not in (0, 1, 2):
            return False
        if v == 2 and seen_nonzero:
            return False
        seen_nonzero = seen_nonzero or v != 0
    return True


def tuple_value(p: ProthParams, a: Sequence[int]) -> int:
    return sum(c * generator(p, i) for i, c in enumerate(a, start=1) if c)


def enumerate_tuples(p: ProthParams) -> Iterator[CoefficientTuple]:
    """All of P(r, n) in lexicographic order; 2**(n+r+1) - 1 tuples."""
    size = p.length

    def extend(prefix: tuple[int, ...], all_zero: bool) -> Iterator[CoefficientTuple]:
        if len(prefix) == size:
            yield prefix
            return
        yield from extend(prefix + (0,), all_zero)
        yield from extend(prefix + (1,), False)
        if all_zero:
            # once a 2 is placed, the rest is binary
            yield from extend(prefix + (2,), False)

    return extend((), True)


def count_tuples(p: ProthParams) -> int:
    return 2**(p.length + 1) - 1


def _unit_tuple(p: ProthParams, coeffs: dict[int, int]) -> CoefficientTuple:
    a = [0] * p.length
    for idx, c in coeffs.items():
        a[idx - 1] = c
    return tuple(a)


def apery_exceptions(p: ProthParams) -> frozenset[CoefficientTuple]:
    """The three tuples kept in the Apéry set although they end in s[n+r]:
    s[n]+s[n+r], s[1]+s[n]+s[n+r] and 2s[1]+s[n]+s[n+r]."""
    n, top = p.n, p.length
    return frozenset({
        _unit_tuple(p, {n: 1, top: 1}),
        _unit_tuple(p, {1: 1, n: 1, top: 1}),
        _unit_tuple(p, {1: 2, n: 1, top: 1}),
    })


def forbidden_set(p: ProthParams) -> frozenset[CoefficientTuple]:
    """Tuples of P(r, n) whose value minus s[0] is still in the semigroup.

    Union of the tuples ending in ``s[n+r-1] + s[n+r]`` (coefficient of
    s[n+r-1] in {1,2}), the families E_l for 0 <= l <= r-2 and the single tuple
    ``2*s[n+r]``, with the three tuples of :func:`apery_exceptions` removed
    from the whole union.  Its size is ``2**(n+r) - 2**n - 2``.
    """
    _require_closed_form(p)
    n, r, top = p.n, p.r, p.length
    out = set()
    for a in enumerate_tuples(p):
        if a[-1] == 2:
            out.add(a)  # only 2*s[n+r] qualifies
            continue
        if a[-1] != 1:
            continue
        if a[top - 2] >= 1:
            out.add(a)
            continue
        # E_l: a[n+l] in {1,2} followed by zeros up to s[n+r-1]
        for l in range(r - 1):
            lead = n + l
            if a[lead - 1] >= 1 and not any(a[lead:top - 1]):
                out.add(a)
                break
    return frozenset(out - apery_exceptions(p))


def forbidden_count(p: ProthParams) -> int:
    _require_closed_form(p)
    return 2**p.length - 2**p.n - 2


def apery_tuples(p: ProthParams) -> list[CoefficientTuple]:
    """P(r, n) minus the forbidden set, in lexicographic order."""
    bad = forbidden_set(p)
    return [a for a in enumerate_tuples(p) if a not in bad]


def apery_closed_form(p: ProthParams) -> list[int]:
    """Ap(P_k(n), s[0]) in ascending order."""
    return sorted({tuple_value(p, a) for a in apery_tuples(p)})


def apery_cardinality(p: ProthParams) -> int:
    """|P(r, n)| - |F|, computed from the two counting formulas (equals s[0])."""
    return count_tuples(p) - forbidden_count(p)


def frobenius_closed_form(p: ProthParams) -> int:
    _require_closed_form(p)
    s = lambda t: generator(p, t)
    return 2 * s(1) + s(p.n) + s(p.length) - s(0)


def pf_closed_form(p: ProthParams) -> list[int]:
    _require_closed_form(p)
    n, r, top = p.n, p.r, p.length
    s = [generator(p, t) for t in range(top + 1)]
    pf = {2 * s[i] + sum(s[i + 1:top]) - s[0] for i in range(1, r + 1)}
    pf |= {2 * s[j] + sum(s[j + 1:n]) + s[top] - s[0] for j in range(1, n - 1)}
    pf.add(2 * s[1] + s[n] + s[top] - s[0])
    return sorted(pf)


def type_closed_form(p: ProthParams) -> int:
    _require_closed_form(p)
    return p.n + p.r - 1


def genus_lower_bound(p: ProthParams) -> int:
    _require_closed_form(p)
    n, k, r = p.n, p.k, p.r
    return k * (2**(n + 1) + 2**(2*n - 1) + 2**(2*n + r - 1) - 2**(n - 1)) + 2


def w12_closed_form(p: ProthParams) -> tuple[int, int]:
    """(w(1), w(2)) of the Apéry table with respect to s[0]."""
    _require_closed_form(p)
    s = lambda t: generator(p, t)
    w2 = s(1) + s(p.n) + s(p.length)
    return w2 + s(1), w2


def exclusion_witnesses(p: ProthParams) -> list[tuple[str, int, int, int]]:
    """Explicit representations ``x - s[0] = c0*s[0] + c1*s[1]``.

    Returns ``(label, x, c0, c1)`` for the three families of combinations that
    are pushed out of the Apéry set: ``s[n+l] + s[n+r]`` for 1 <= l <= r, and
    ``s[i] + s[n] + s[n+r]`` and ``s[1] + s[i] + s[n] + s[n+r]`` for 2 <= i <= n.
    """
    _require_closed_form(p)
    n, r, k = p.n, p.r, p.k
    s = lambda t: generator(p, t)
    out = []
    for l in range(1, r + 1):
        out.append((f'a:l={l}', s(n + l) + s(n + r),
                    2**(n + r) - 2**(n + l) + 2**(n + 1) + 4, 2**(n + l) - 2**n - 3))
    for i in range(2, n + 1):
        c0 = k * 2**n + 2 - (2**i - 4)
        out.append((f'b:i={i}', s(i) + s(n) + s(n + r), c0, 2**i - 4))
        out.append((f'c:i={i}', s(1) + s(i) + s(n) + s(n + r), c0, 2**i - 3))
    return out
