"""Canonical fractions of integer Laurent polynomials.

A fraction is stored in the canonical form

  * denominator nonzero, with minimal exponent(s) 0 (any monomial factor of
    the denominator is absorbed into the numerator, which may therefore be a
    genuine Laurent polynomial),
  * numerator and denominator with no common polynomial factor over Q,
  * gcd of the two integer contents equal to 1,
  * positive leading denominator coefficient,
  * zero represented as 0/1.

With this normalization, equality of values is equality of the stored
numerator/denominator pairs, which keeps comparisons cheap everywhere else.

Arithmetic keeps results canonical without gratuitous gcds: sums and
products of canonical fractions are reduced using the classical
cross-cancellation identities, so the expensive polynomial gcds only ever
run on the small cofactors actually at risk of sharing a factor.
"""

from __future__ import annotations

from fractions import Fraction

from .laurent import (
    IntLaurent,
    IntLaurent2,
    laurent2_divide_exact,
    laurent2_gcd,
    laurent_divide_exact,
    laurent_gcd,
)

__all__ = [
    "RatFun",
    "RatFun2",
    "PoleError",
    "normalize",
    "normalize2",
    "field_op",
    "invert_q",
    "evaluate_at",
]


class PoleError(ZeroDivisionError):
    """Evaluation or specialization hit a vanishing denominator."""


def _content_sign_1(num: IntLaurent, den: IntLaurent) -> tuple[IntLaurent, IntLaurent]:
    import math

    cg = math.gcd(num.content(), den.content())
    if cg > 1:
        num = num.divide_content(cg)
        den = den.divide_content(cg)
    if den.leading_coefficient() < 0:
        num, den = -num, -den
    return num, den


class RatFun:
    """Canonical fraction of integer Laurent polynomials in q."""

    __slots__ = ("num", "den")

    def __init__(self, num: IntLaurent, den: IntLaurent | None = None):
        if den is None:
            den = IntLaurent.one()
        reduced = normalize(num, den)
        self.num = reduced.num
        self.den = reduced.den

    # -- construction --------------------------------------------------------

    @staticmethod
    def _make(num: IntLaurent, den: IntLaurent) -> RatFun:
        out = RatFun.__new__(RatFun)
        out.num = num
        out.den = den
        return out

    @staticmethod
    def _reduced(num: IntLaurent, den: IntLaurent) -> RatFun:
        """Canonicalize a fraction already known to be gcd-free.

        Only the monomial shift, shared integer content and denominator sign
        are normalized; the caller guarantees numerator and denominator have
        no common polynomial factor.
        """
        if den.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if num.is_zero():
            return RatFun._make(IntLaurent.zero(), IntLaurent.one())
        m = den.min_exp()
        if m:
            den = den.shift(-m)
            num = num.shift(-m)
        num, den = _content_sign_1(num, den)
        return RatFun._make(num, den)

    @staticmethod
    def zero() -> RatFun:
        return RatFun._make(IntLaurent.zero(), IntLaurent.one())

    @staticmethod
    def one() -> RatFun:
        return RatFun._make(IntLaurent.one(), IntLaurent.one())

    @staticmethod
    def from_int(n: int) -> RatFun:
        return RatFun._make(IntLaurent.from_int(n), IntLaurent.one())

    @staticmethod
    def from_laurent(p: IntLaurent) -> RatFun:
        return RatFun._make(p, IntLaurent.one())

    @staticmethod
    def q_power(e: int) -> RatFun:
        return RatFun._make(IntLaurent.q_power(e), IntLaurent.one())

    # -- queries -------------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.num.is_one() and self.den.is_one()

    def is_laurent(self) -> bool:
        return self.den.is_one()

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = RatFun.from_int(other)
        if not isinstance(other, RatFun):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    # -- arithmetic ------------------------------------------------------------

    def __add__(self, other: RatFun | int) -> RatFun:
        if isinstance(other, int):
            other = RatFun.from_int(other)
        a, b, c, d = self.num, self.den, other.num, other.den
        if d.is_one():
            return RatFun._reduced(a + c * b, b)
        if b.is_one():
            return RatFun._reduced(c + a * d, d)
        g = laurent_gcd(b, d)
        if g.is_one():
            return RatFun._reduced(a * d + c * b, b * d)
        db = laurent_divide_exact(b, g)
        dd = laurent_divide_exact(d, g)
        t = a * dd + c * db
        h = laurent_gcd(t, g)
        if not h.is_one():
            t = laurent_divide_exact(t, h)
            g = laurent_divide_exact(g, h)
        return RatFun._reduced(t, db * dd * g)

    __radd__ = __add__

    def __sub__(self, other: RatFun | int) -> RatFun:
        if isinstance(other, int):
            other = RatFun.from_int(other)
        return self + (-other)

    def __rsub__(self, other: RatFun | int) -> RatFun:
        return (-self) + other

    def __neg__(self) -> RatFun:
        return RatFun._make(-self.num, self.den)

    def __mul__(self, other: RatFun | int) -> RatFun:
        if isinstance(other, int):
            other = RatFun.from_int(other)
        a, b, c, d = self.num, self.den, other.num, other.den
        if a.is_zero() or c.is_zero():
            return RatFun.zero()
        g1 = IntLaurent.one() if d.is_one() else laurent_gcd(a, d)
        g2 = IntLaurent.one() if b.is_one() else laurent_gcd(c, b)
        if not g1.is_one():
            a = laurent_divide_exact(a, g1)
            d = laurent_divide_exact(d, g1)
        if not g2.is_one():
            c = laurent_divide_exact(c, g2)
            b = laurent_divide_exact(b, g2)
        return RatFun._reduced(a * c, b * d)

    __rmul__ = __mul__

    def __truediv__(self, other: RatFun | int) -> RatFun:
        if isinstance(other, int):
            other = RatFun.from_int(other)
        if other.num.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return self * RatFun._reduced(other.den, other.num)

    def __rtruediv__(self, other: RatFun | int) -> RatFun:
        if isinstance(other, int):
            other = RatFun.from_int(other)
        return other / self

    def inverse(self) -> RatFun:
        if self.num.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RatFun._reduced(self.den, self.num)

    def __pow__(self, n: int) -> RatFun:
        if n < 0:
            return self.inverse() ** (-n)
        out = RatFun.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- substitutions ----------------------------------------------------------

    def invert_q(self) -> RatFun:
        """Substitute q -> q^-1 and renormalize (an involution)."""
        return RatFun._reduced(self.num.subs_qinv(), self.den.subs_qinv())

    def evaluate(self, q0: Fraction | int) -> Fraction:
        """Exact evaluation at a nonzero rational point; raises PoleError at
        zeros of the denominator."""
        q0 = Fraction(q0)
        if q0 == 0 and (not self.num.is_zero()) and self.num.min_exp() < 0:
            raise PoleError("evaluation at q = 0 of negative-exponent terms")
        d = self.den.evaluate(q0)
        if d == 0:
            raise PoleError(f"pole at q = {q0}")
        return self.num.evaluate(q0) / d

    def to_ratfun2(self) -> RatFun2:
        return RatFun2._make(IntLaurent2.from_q(self.num), IntLaurent2.from_q(self.den))

    def __repr__(self) -> str:
        from .textio import format_ratfun

        return f"RatFun({format_ratfun(self)})"

    def __str__(self) -> str:
        from .textio import format_ratfun

        return format_ratfun(self)


def normalize(num: IntLaurent, den: IntLaurent) -> RatFun:
    """Canonical fraction num/den; the denominator must be nonzero."""
    if den.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    if num.is_zero():
        return RatFun._make(IntLaurent.zero(), IntLaurent.one())
    m = den.min_exp()
    if m:
        den = den.shift(-m)
        num = num.shift(-m)
    if not den.is_monomial():
        t = num.min_exp()
        num0 = num.shift(-t) if t else num
        g = laurent_gcd(num0, den)
        if not g.is_one():
            num0 = laurent_divide_exact(num0, g)
            den = laurent_divide_exact(den, g)
        num = num0.shift(t) if t else num0
    num, den = _content_sign_1(num, den)
    return RatFun._make(num, den)


def field_op(kind: str, f: RatFun, g: RatFun) -> RatFun:
    """Dispatch exact field arithmetic: kind in {add, sub, mul, div}."""
    if kind == "add":
        return f + g
    if kind == "sub":
        return f - g
    if kind == "mul":
        return f * g
    if kind == "div":
        return f / g
    raise ValueError(f"unknown field operation {kind!r}")


def invert_q(f: RatFun) -> RatFun:
    return f.invert_q()


def evaluate_at(f: RatFun, q0: Fraction | int) -> Fraction:
    return f.evaluate(q0)


# ---------------------------------------------------------------------------
# Two-variable fractions
# ---------------------------------------------------------------------------


def _content_sign_2(num: IntLaurent2, den: IntLaurent2) -> tuple[IntLaurent2, IntLaurent2]:
    import math

    cg = math.gcd(num.content(), den.content())
    if cg > 1:
        num = num.divide_content(cg)
        den = den.divide_content(cg)
    if den.leading_coefficient() < 0:
        num, den = -num, -den
    return num, den


class RatFun2:
    """Canonical fraction of integer Laurent polynomials in a and q."""

    __slots__ = ("num", "den")

    def __init__(self, num: IntLaurent2, den: IntLaurent2 | None = None):
        if den is None:
            den = IntLaurent2.one()
        reduced = normalize2(num, den)
        self.num = reduced.num
        self.den = reduced.den

    @staticmethod
    def _make(num: IntLaurent2, den: IntLaurent2) -> RatFun2:
        out = RatFun2.__new__(RatFun2)
        out.num = num
        out.den = den
        return out

    @staticmethod
    def _reduced(num: IntLaurent2, den: IntLaurent2) -> RatFun2:
        if den.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if num.is_zero():
            return RatFun2._make(IntLaurent2.zero(), IntLaurent2.one())
        da, dq = den.min_exps()
        if da or dq:
            den = den.shift(-da, -dq)
            num = num.shift(-da, -dq)
        num, den = _content_sign_2(num, den)
        return RatFun2._make(num, den)

    @staticmethod
    def zero() -> RatFun2:
        return RatFun2._make(IntLaurent2.zero(), IntLaurent2.one())

    @staticmethod
    def one() -> RatFun2:
        return RatFun2._make(IntLaurent2.one(), IntLaurent2.one())

    @staticmethod
    def from_int(n: int) -> RatFun2:
        return RatFun2._make(IntLaurent2.term(n), IntLaurent2.one())

    @staticmethod
    def from_laurent2(p: IntLaurent2) -> RatFun2:
        return RatFun2._make(p, IntLaurent2.one())

    @staticmethod
    def monomial(coeff: int, a_exp: int = 0, q_exp: int = 0) -> RatFun2:
        if coeff == 0:
            return RatFun2.zero()
        return RatFun2._make(IntLaurent2.term(coeff, a_exp, q_exp), IntLaurent2.one())

    # -- queries -------------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.num.is_one() and self.den.is_one()

    def is_laurent(self) -> bool:
        return self.den.is_one()

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = RatFun2.from_int(other)
        if not isinstance(other, RatFun2):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    # -- arithmetic ------------------------------------------------------------

    def __add__(self, other: RatFun2 | int) -> RatFun2:
        if isinstance(other, int):
            other = RatFun2.from_int(other)
        a, b, c, d = self.num, self.den, other.num, other.den
        if d.is_one():
            return RatFun2._reduced(a + c * b, b)
        if b.is_one():
            return RatFun2._reduced(c + a * d, d)
        if b == d:
            t = a + c
            h = laurent2_gcd(t, b)
            if not h.is_one():
                t = laurent2_divide_exact(t, h)
                b = laurent2_divide_exact(b, h)
            return RatFun2._reduced(t, b)
        g = laurent2_gcd(b, d)
        if g.is_one():
            return RatFun2._reduced(a * d + c * b, b * d)
        db = laurent2_divide_exact(b, g)
        dd = laurent2_divide_exact(d, g)
        t = a * dd + c * db
        h = laurent2_gcd(t, g)
        if not h.is_one():
            t = laurent2_divide_exact(t, h)
            g = laurent2_divide_exact(g, h)
        return RatFun2._reduced(t, db * dd * g)

    __radd__ = __add__

    def __sub__(self, other: RatFun2 | int) -> RatFun2:
        if isinstance(other, int):
            other = RatFun2.from_int(other)
        return self + (-other)

    def __rsub__(self, other: RatFun2 | int) -> RatFun2:
        return (-self) + other

    def __neg__(self) -> RatFun2:
        return RatFun2._make(-self.num, self.den)

    def __mul__(self, other: RatFun2 | int) -> RatFun2:
        if isinstance(other, int):
            other = RatFun2.from_int(other)
        a, b, c, d = self.num, self.den, other.num, other.den
        if a.is_zero() or c.is_zero():
            return RatFun2.zero()
        if b.is_one() and d.is_one():
            return RatFun2._reduced(a * c, IntLaurent2.one())
        g1 = IntLaurent2.one() if d.is_one() else laurent2_gcd(a, d)
        g2 = IntLaurent2.one() if b.is_one() else laurent2_gcd(c, b)
        if not g1.is_one():
            a = laurent2_divide_exact(a, g1)
            d = laurent2_divide_exact(d, g1)
        if not g2.is_one():
            c = laurent2_divide_exact(c, g2)
            b = laurent2_divide_exact(b, g2)
        return RatFun2._reduced(a * c, b * d)

    __rmul__ = __mul__

    def __truediv__(self, other: RatFun2 | int) -> RatFun2:
        if isinstance(other, int):
            other = RatFun2.from_int(other)
        if other.num.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return self * RatFun2._reduced(other.den, other.num)

    def inverse(self) -> RatFun2:
        if self.num.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RatFun2._reduced(self.den, self.num)

    def __pow__(self, n: int) -> RatFun2:
        if n < 0:
            return self.inverse() ** (-n)
        out = RatFun2.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- substitutions ----------------------------------------------------------

    def subs_bar(self) -> RatFun2:
        """The mirror substitution a -> a^-1, q -> q^-1."""
        return RatFun2._reduced(self.num.subs_bar(), self.den.subs_bar())

    def subs_a_power_of_q(self, n: int) -> RatFun:
        """Substitute a = q^n, collapsing to a one-variable fraction."""
        num = self.num.subs_a_power_of_q(n)
        den = self.den.subs_a_power_of_q(n)
        if den.is_zero():
            raise PoleError(f"denominator vanishes under a = q^{n}")
        return normalize(num, den)

    def a_parities(self) -> set[int]:
        """Parity of the value's a-degree: parities of numerator support minus
        the (single, by homogeneity of canonical denominators in practice)
        parity of the denominator support, as a set of residues mod 2."""
        pn = self.num.a_parities()
        pd = self.den.a_parities()
        return {(x - y) % 2 for x in pn for y in pd}

    def __repr__(self) -> str:
        from .textio import format_ratfun2

        return f"RatFun2({format_ratfun2(self)})"

    def __str__(self) -> str:
        from .textio import format_ratfun2

        return format_ratfun2(self)


def normalize2(num: IntLaurent2, den: IntLaurent2) -> RatFun2:
    """Canonical fraction num/den over Z[a^{±1}, q^{±1}]."""
    if den.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    if num.is_zero():
        return RatFun2._make(IntLaurent2.zero(), IntLaurent2.one())
    da, dq = den.min_exps()
    if da or dq:
        den = den.shift(-da, -dq)
        num = num.shift(-da, -dq)
    if not den.is_monomial():
        ta, tq = num.min_exps()
        num0 = num.shift(-ta, -tq) if (ta or tq) else num
        g = laurent2_gcd(num0, den)
        if not g.is_one():
            num0 = laurent2_divide_exact(num0, g)
            den = laurent2_divide_exact(den, g)
        num = num0.shift(ta, tq) if (ta or tq) else num0
    num, den = _content_sign_2(num, den)
    return RatFun2._make(num, den)
