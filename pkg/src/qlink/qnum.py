"""q-deformed numbers.

Conventions: the q-integer is {n} = (q^2n - 1)/(q^2 - 1), so {2} = 1 + q^2,
and every rational x gets a q-deformation {x} through its even continued
fraction expansion.  The nested formula alternates between plain rungs
{a} + q^2a / (...) at odd positions and inverted rungs {a}_{q^-2} + q^-2a
/ (...) at even positions.  The two defining identities are

    {x + 1} = q^2 {x} + 1        and        {1/x} = 1 / {x}_{q^-1},

and both are exercised heavily by the test suite.

Left q-deformations {x}^b are the q-adic limits of {x - 1/k} as k grows.
They satisfy the same shift identity but take different values at every
rational.  Closed form: evaluate the same continued-fraction ladder with
one extra virtual innermost rung holding the limit value 1/(1 - q^2) (the
q-adic limit of {m} as m -> infinity).  The limit oracle `q_adic_limit`
stays the source of truth: the closed form is checked against it in tests
order by order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator

from .exactalg import IntLaurent, RatFun, TruncSeries, series_expand

__all__ = [
    "EvenCF",
    "even_cf",
    "qint",
    "qrational",
    "qdelta",
    "qbinomial",
    "qfactorial",
    "left_qrational",
    "left_qdelta",
    "q_adic_limit",
]


@dataclass(frozen=True)
class EvenCF:
    """Even-length continued fraction expansion [a1, ..., a2m].

    a1 may be any integer; all later terms are >= 1; folding reproduces the
    source rational exactly.
    """

    terms: tuple[int, ...]

    def __post_init__(self) -> None:
        t = self.terms
        if len(t) < 2 or len(t) % 2:
            raise ValueError("even continued fraction needs even length >= 2")
        if any(a < 1 for a in t[1:]):
            raise ValueError("continued fraction terms after the head must be >= 1")

    def fold(self) -> Fraction:
        acc: Fraction | None = None
        for a in reversed(self.terms):
            acc = Fraction(a) if acc is None else a + 1 / acc
        assert acc is not None
        return acc


def even_cf(x: Fraction | int) -> EvenCF:
    """Even-length continued fraction of a rational, via the Euclidean
    algorithm plus the tail parity fix [..., a] -> [..., a-1, 1]."""
    x = Fraction(x)
    if x.denominator == 1:
        return EvenCF((x.numerator - 1, 1))
    p, d = x.numerator, x.denominator
    terms: list[int] = []
    while d:
        a = p // d
        terms.append(a)
        p, d = d, p - a * d
    if len(terms) % 2:
        if terms[-1] == 1 and len(terms) > 1:
            terms[-2] += 1
            terms.pop()
        else:
            terms[-1] -= 1
            terms.append(1)
    cf = EvenCF(tuple(terms))
    assert cf.fold() == x, "continued fraction failed to re-fold"
    return cf


def qint(n: int) -> IntLaurent:
    """The q-integer {n} = (q^2n - 1)/(q^2 - 1) as a Laurent polynomial."""
    if n >= 0:
        return IntLaurent({2 * i: 1 for i in range(n)})
    return IntLaurent({-2 * i: -1 for i in range(1, -n + 1)})


def _ladder(terms: tuple[int, ...], seed: tuple[IntLaurent, IntLaurent] | None) -> RatFun:
    """Evaluate the nested continued-fraction formula bottom-up.

    Rungs at odd positions (1-indexed) contribute {a} + q^2a / tail, rungs
    at even positions {a}_{q^-2} + q^-2a / tail.  `seed` optionally supplies
    an extra innermost tail value as a raw fraction (used for the left
    deformation); with no seed the innermost rung is the closing
    {a}_{q^-2}.  The intermediate fractions generated here are coprime up
    to monomials by construction, so the final fraction skips the gcd.
    """
    n = len(terms)
    if seed is None:
        num = qint(terms[-1]).subs_qinv()
        den = IntLaurent.one()
        start = n - 1
    else:
        num, den = seed
        start = n
    for i in range(start, 0, -1):
        a = terms[i - 1]
        if i % 2:  # plain rung
            head, q_shift = qint(a), 2 * a
        else:  # inverted rung
            head, q_shift = qint(a).subs_qinv(), -2 * a
        num, den = head * num + den.shift(q_shift), num
        if den.is_zero():
            raise ZeroDivisionError("degenerate continued fraction ladder")
    return RatFun._reduced(num, den)


@lru_cache(maxsize=16384)
def qrational(x: Fraction | int) -> RatFun:
    """The q-deformation {x} of a rational number."""
    x = Fraction(x)
    return _ladder(even_cf(x).terms, None)


# q-adic limit of {m} for m -> infinity: the innermost rung of every left
# deformation.  As a raw fraction: 1 / (1 - q^2).
_LEFT_SEED = (IntLaurent.one(), IntLaurent({0: 1, 2: -1}))


@lru_cache(maxsize=16384)
def left_qrational(x: Fraction | int) -> RatFun:
    """The left q-deformation {x}^b: the q-adic limit of {x - 1/k}."""
    x = Fraction(x)
    return _ladder(even_cf(x).terms, _LEFT_SEED)


@lru_cache(maxsize=8192)
def qdelta(x: Fraction | int) -> RatFun:
    """delta_x = {x} - {x - 1}; reduces to q^(2n-2) at integers."""
    x = Fraction(x)
    return qrational(x) - qrational(x - 1)


@lru_cache(maxsize=8192)
def left_qdelta(x: Fraction | int) -> RatFun:
    """The left analogue {x}^b - {x-1}^b."""
    x = Fraction(x)
    return left_qrational(x) - left_qrational(x - 1)


def qfactorial(k: int) -> RatFun:
    """{k}! = {k}{k-1}...{1}."""
    out = RatFun.one()
    for i in range(2, k + 1):
        out = out * RatFun.from_laurent(qint(i))
    return out


def qbinomial(x: Fraction | int, k: int) -> RatFun:
    """Generalized q-binomial {x}{x-1}...{x-k+1} / {k}!; k = 0 gives 1."""
    if k < 0:
        raise ValueError("q-binomial needs a nonnegative lower index")
    x = Fraction(x)
    out = RatFun.one()
    for i in range(k):
        out = out * qrational(x - i)
        if out.is_zero():
            return out
    return out / qfactorial(k)


def q_adic_limit(
    seq: Iterable[RatFun],
    order: int,
    window: int = 3,
    budget: int | None = None,
) -> TruncSeries:
    """Coefficient-wise limit of the q-expansions of a sequence.

    Convergence is detected empirically.  A run of `window` identical
    expansions is necessary but not sufficient: coefficients right at the
    truncation boundary sit on deceptive plateaus whose length grows with
    the index (sequences like {x - 1/k} change their expansion ever more
    rarely), so the run must additionally have lasted as long again as it
    took to reach its start.  Raises when the iteration budget (default
    32 * order) is exhausted without such a run; slow-converging sequences
    (large denominators) may need an explicit budget.
    """
    if budget is None:
        budget = max(32 * order, 64)
    it: Iterator[RatFun] = iter(seq)
    last: TruncSeries | None = None
    last_change = 1
    for i in range(1, budget + 1):
        try:
            f = next(it)
        except StopIteration:
            break
        s = series_expand(f, order)
        if last is None or s != last:
            last_change = i
            last = s
        elif i - last_change + 1 >= window and i >= 2 * last_change:
            return s
    raise ValueError(f"sequence not q-adically convergent at order {order}")
