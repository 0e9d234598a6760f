"""Arithmetic in the quadratic extension generated by v with v^2 = delta^-1.

A NuValue is e + o*v with e, o rational functions in q and delta a fixed
nonzero rational function (the context).  Values from different contexts
never mix: combining them is a hard error rather than a silent coercion.

`specialize_a` is the bridge from two-variable fractions: substituting
a = q*v*delta sends a^2 to q^2*delta and each leftover single power of a
to q*delta*v, turning a two-variable fraction into a NuValue of its
context.
"""

from __future__ import annotations

from .laurent import IntLaurent
from .ratfun import PoleError, RatFun, RatFun2

__all__ = ["NuValue", "nu_op", "nu_power", "specialize_a", "SpecializationError"]


class SpecializationError(PoleError):
    """A denominator vanished under the a = q*v*delta substitution."""


class NuValue:
    """Element e + o*v of the quadratic extension with v^2 = delta^-1."""

    __slots__ = ("even", "odd", "delta")

    def __init__(self, even: RatFun, odd: RatFun, delta: RatFun):
        if delta.is_zero():
            raise ZeroDivisionError("delta of a quadratic extension must be nonzero")
        self.even = even
        self.odd = odd
        self.delta = delta

    # -- constructors ------------------------------------------------------

    @staticmethod
    def scalar(value: RatFun, delta: RatFun) -> NuValue:
        return NuValue(value, RatFun.zero(), delta)

    @staticmethod
    def nu(delta: RatFun) -> NuValue:
        return NuValue(RatFun.zero(), RatFun.one(), delta)

    @staticmethod
    def zero(delta: RatFun) -> NuValue:
        return NuValue(RatFun.zero(), RatFun.zero(), delta)

    @staticmethod
    def one(delta: RatFun) -> NuValue:
        return NuValue(RatFun.one(), RatFun.zero(), delta)

    # -- structure -----------------------------------------------------------

    def _check(self, other: NuValue) -> None:
        if self.delta != other.delta:
            raise ValueError("mismatched delta contexts in quadratic-extension arithmetic")

    def is_zero(self) -> bool:
        return self.even.is_zero() and self.odd.is_zero()

    def is_even(self) -> bool:
        return self.odd.is_zero()

    def is_odd(self) -> bool:
        return self.even.is_zero() and not self.odd.is_zero()

    def is_homogeneous(self) -> bool:
        """Exactly one of the two components vanishes (zero counts as even)."""
        return self.even.is_zero() or self.odd.is_zero()

    def nu_parity(self) -> int:
        """0 for even elements, 1 for odd; requires homogeneity."""
        if self.odd.is_zero():
            return 0
        if self.even.is_zero():
            return 1
        raise ValueError("value is not homogeneous in v")

    def norm(self) -> RatFun:
        """Field norm e^2 - o^2/delta."""
        return self.even * self.even - self.odd * self.odd / self.delta

    def conjugate(self) -> NuValue:
        return NuValue(self.even, -self.odd, self.delta)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NuValue):
            return NotImplemented
        return self.delta == other.delta and self.even == other.even and self.odd == other.odd

    def __hash__(self) -> int:
        return hash((self.even, self.odd, self.delta))

    # -- arithmetic ------------------------------------------------------------

    def __add__(self, other: NuValue) -> NuValue:
        self._check(other)
        return NuValue(self.even + other.even, self.odd + other.odd, self.delta)

    def __sub__(self, other: NuValue) -> NuValue:
        self._check(other)
        return NuValue(self.even - other.even, self.odd - other.odd, self.delta)

    def __neg__(self) -> NuValue:
        return NuValue(-self.even, -self.odd, self.delta)

    def __mul__(self, other: NuValue | RatFun | int) -> NuValue:
        if isinstance(other, (RatFun, int)):
            return NuValue(self.even * other, self.odd * other, self.delta)
        self._check(other)
        e1, o1, e2, o2 = self.even, self.odd, other.even, other.odd
        even = e1 * e2 + o1 * o2 / self.delta
        odd = e1 * o2 + o1 * e2
        return NuValue(even, odd, self.delta)

    __rmul__ = __mul__

    def inverse(self) -> NuValue:
        n = self.norm()
        if n.is_zero():
            raise ZeroDivisionError("zero norm in quadratic-extension inversion")
        inv = n.inverse()
        return NuValue(self.even * inv, -self.odd * inv, self.delta)

    def __truediv__(self, other: NuValue) -> NuValue:
        self._check(other)
        return self * other.inverse()

    def __pow__(self, n: int) -> NuValue:
        if n < 0:
            return self.inverse() ** (-n)
        out = NuValue.one(self.delta)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def substitute_nu(self, nu_value: RatFun) -> RatFun:
        """Collapse the extension by substituting a concrete square root of
        delta^-1 (valid when delta is a perfect square, e.g. integer contexts)."""
        return self.even + self.odd * nu_value

    def __repr__(self) -> str:
        from .textio import format_nu

        return f"NuValue({format_nu(self)})"

    def __str__(self) -> str:
        from .textio import format_nu

        return format_nu(self)


def nu_op(kind: str, u: NuValue, v: NuValue | None = None) -> NuValue:
    """Dispatch quadratic-extension arithmetic: kind in {add, sub, mul, div, inv}."""
    if kind == "inv":
        return u.inverse()
    if v is None:
        raise ValueError(f"operation {kind!r} needs two operands")
    if kind == "add":
        return u + v
    if kind == "sub":
        return u - v
    if kind == "mul":
        return u * v
    if kind == "div":
        return u / v
    raise ValueError(f"unknown quadratic-extension operation {kind!r}")


def nu_power(delta: RatFun, k: int) -> NuValue:
    """v^k in closed form: v^k = delta^-(k - k mod 2)/2 * v^(k mod 2)."""
    p = k & 1
    scale = delta ** (-((k - p) // 2))
    if p:
        return NuValue(RatFun.zero(), scale, delta)
    return NuValue(scale, RatFun.zero(), delta)


def _specialize_poly(p, delta: RatFun, powers: dict[int, RatFun]) -> NuValue:
    """Substitute a = q*v*delta into a two-variable integer Laurent polynomial."""

    def q2delta_power(m: int) -> RatFun:
        f = powers.get(m)
        if f is None:
            f = (RatFun.q_power(2) * delta) ** m
            powers[m] = f
        return f

    even = RatFun.zero()
    odd = RatFun.zero()
    qdelta = None
    for (d, e), v in p.items():
        base = RatFun._make(IntLaurent.term(v, e), IntLaurent.one())
        if d % 2 == 0:
            even = even + base * q2delta_power(d // 2)
        else:
            if qdelta is None:
                qdelta = RatFun.q_power(1) * delta
            odd = odd + base * q2delta_power((d - 1) // 2) * qdelta
    return NuValue(even, odd, delta)


def specialize_a(F: RatFun2, delta: RatFun) -> NuValue:
    """Specialize a two-variable fraction at a = q*v*delta.

    Returns the value as an element of the quadratic extension attached to
    delta.  Raises SpecializationError when the denominator specializes to
    zero (a pole of the specialization).
    """
    powers: dict[int, RatFun] = {0: RatFun.one()}
    num = _specialize_poly(F.num, delta, powers)
    den = _specialize_poly(F.den, delta, powers)
    if den.is_zero():
        raise SpecializationError("denominator vanishes under the a = q*v*delta specialization")
    norm = den.norm()
    if norm.is_zero():
        raise SpecializationError("denominator has zero norm under the a = q*v*delta specialization")
    return num / den
