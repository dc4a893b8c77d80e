"""Truncated series in the genus-counting variable u, and number theory.

A USeries is a polynomial-truncated formal power series in u whose
coefficients are :class:`~feynchar.symfunc.SymFunc` values sharing one
truncation.  Laurent data never appears as a first-class object: callers
rescale by the appropriate power of u to land in unit power series before
taking logs, inverses, or the asymptotic psi expansions.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .symfunc import SymFunc, TruncationSpec


# ---------------------------------------------------------------------------
# number theory


def moebius(n: int) -> int:
    """Number-theoretic Moebius function."""
    if n < 1:
        raise ValueError("moebius requires n >= 1")
    result = 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return 0
            result = -result
        d += 1
    if n > 1:
        result = -result
    return result


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def necklace(n: int) -> dict:
    """Necklace polynomial M_n(t) = (1/n) sum_{d|n} mu(n/d) t^d.

    Returned as {t_exponent: Fraction}.
    """
    if n < 1:
        raise ValueError("necklace requires n >= 1")
    out: dict = {}
    for d in divisors(n):
        c = Fraction(moebius(n // d), n)
        if c:
            out[d] = out.get(d, Fraction(0)) + c
    return {k: v for k, v in out.items() if v}


def necklace_in(n: int, variable_exponent: int) -> dict:
    """M_n evaluated at t^e: exponents scaled by e (e may be negative)."""
    return {d * variable_exponent: c for d, c in necklace(n).items()}


class BernoulliCache:
    """Bernoulli numbers B_0, B_1, ... with the convention B_1 = -1/2."""

    def __init__(self):
        self.values = [Fraction(1)]

    def get(self, j: int) -> Fraction:
        while len(self.values) <= j:
            m = len(self.values)
            # sum_{k=0}^{m} C(m+1, k) B_k = 0
            acc = Fraction(0)
            binom = 1  # C(m+1, 0)
            for k in range(m):
                acc += binom * self.values[k]
                binom = binom * (m + 1 - k) // (k + 1)
            self.values.append(-acc / binom)
        return self.values[j]


_BERNOULLI = BernoulliCache()


def bernoulli(j: int) -> Fraction:
    """Exact Bernoulli number B_j, convention B_1 = -1/2."""
    if j < 0:
        raise ValueError("bernoulli requires j >= 0")
    return _BERNOULLI.get(j)


# Sign of the B_1 term used inside the psi expansions.  The literature leaves
# the convention open; this value is pinned by the calibration tests that
# compare the closed-form weight-2 Euler series against the graph-sum values
# at (g, n) = (0, 2) and (0, 4).
PSI_B1 = Fraction(1, 2)


def _psi_bernoulli(j: int) -> Fraction:
    return PSI_B1 if j == 1 else bernoulli(j)


# ---------------------------------------------------------------------------
# truncated u-series


class USeries:
    """Power series in u up to order N with SymFunc coefficients."""

    __slots__ = ("order", "trunc", "coeffs")

    def __init__(self, order: int, trunc: TruncationSpec, coeffs: dict | None = None):
        if order < 0:
            raise ValueError("order must be non-negative")
        self.order = order
        self.trunc = trunc
        clean: dict = {}
        if coeffs:
            for m, f in coeffs.items():
                if 0 <= m <= order and not f.is_zero():
                    clean[m] = f
        self.coeffs = clean

    @classmethod
    def zero(cls, order: int, trunc: TruncationSpec) -> "USeries":
        return cls(order, trunc)

    @classmethod
    def one(cls, order: int, trunc: TruncationSpec) -> "USeries":
        return cls(order, trunc, {0: SymFunc.one(trunc)})

    @classmethod
    def u_power(cls, m: int, order: int, trunc: TruncationSpec, coeff=1) -> "USeries":
        return cls(order, trunc, {m: SymFunc.one(trunc) * coeff})

    def coefficient(self, m: int) -> SymFunc:
        return self.coeffs.get(m, SymFunc.zero(self.trunc))

    def is_zero(self) -> bool:
        return not self.coeffs

    def truncated(self, order: int) -> "USeries":
        return USeries(min(order, self.order), self.trunc, self.coeffs)

    def _require_compatible(self, other: "USeries") -> None:
        if self.order != other.order or self.trunc != other.trunc:
            raise ValueError("mismatched USeries truncations")

    def __add__(self, other: "USeries") -> "USeries":
        self._require_compatible(other)
        out = dict(self.coeffs)
        for m, f in other.coeffs.items():
            out[m] = out[m] + f if m in out else f
        return USeries(self.order, self.trunc, out)

    def __neg__(self) -> "USeries":
        return USeries(self.order, self.trunc, {m: -f for m, f in self.coeffs.items()})

    def __sub__(self, other: "USeries") -> "USeries":
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, USeries):
            return USeries(self.order, self.trunc, {m: f * other for m, f in self.coeffs.items()})
        self._require_compatible(other)
        out: dict = {}
        for m1, f1 in self.coeffs.items():
            for m2, f2 in other.coeffs.items():
                m = m1 + m2
                if m > self.order:
                    continue
                prod = f1 * f2
                out[m] = out[m] + prod if m in out else prod
        return USeries(self.order, self.trunc, out)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, USeries)
            and self.order == other.order
            and self.trunc == other.trunc
            and self.coeffs == other.coeffs
        )

    def __repr__(self) -> str:
        body = " + ".join("(%r)*u^%d" % (f, m) for m, f in sorted(self.coeffs.items()))
        return "USeries(%s)" % (body or "0")

    def shift_u(self, k: int) -> "USeries":
        """Multiply by u^k (k >= 0)."""
        return USeries(self.order, self.trunc, {m + k: f for m, f in self.coeffs.items()})

    def pow(self, k: int) -> "USeries":
        result = USeries.one(self.order, self.trunc)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def _unit_part(self):
        c0 = self.coefficient(0)
        if c0 != SymFunc.one(self.trunc):
            raise ValueError("series is not a unit power series (constant coefficient != 1)")
        return c0


def inv_unit(s: USeries) -> USeries:
    """Inverse of a unit power series (constant coefficient 1)."""
    s._unit_part()
    one = SymFunc.one(s.trunc)
    out = {0: one}
    for m in range(1, s.order + 1):
        acc = SymFunc.zero(s.trunc)
        for k in range(1, m + 1):
            sk = s.coeffs.get(k)
            if sk is None or (m - k) not in out:
                continue
            acc = acc + sk * out[m - k]
        neg = -acc
        if not neg.is_zero():
            out[m] = neg
    return USeries(s.order, s.trunc, out)


def log_unit(s: USeries) -> USeries:
    """Formal logarithm of a unit power series."""
    s._unit_part()
    out: dict = {}
    for m in range(1, s.order + 1):
        acc = s.coefficient(m)
        for k in range(1, m):
            lk = out.get(k)
            if lk is None:
                continue
            acc = acc - lk * s.coefficient(m - k) * Fraction(k, m)
        if not acc.is_zero():
            out[m] = acc
    return USeries(s.order, s.trunc, out)


def exp_series(s: USeries) -> USeries:
    """Formal exponential of a series with zero constant coefficient."""
    if 0 in s.coeffs:
        raise ValueError("exp requires zero constant coefficient")
    out = {0: SymFunc.one(s.trunc)}
    for m in range(1, s.order + 1):
        acc = SymFunc.zero(s.trunc)
        for k in range(1, m + 1):
            sk = s.coeffs.get(k)
            if sk is None or (m - k) not in out:
                continue
            acc = acc + sk * out[m - k] * Fraction(k, m)
        if not acc.is_zero():
            out[m] = acc
    return USeries(s.order, s.trunc, out)


def psi0_of(z_rescaled: USeries, ell: int) -> USeries:
    """Asymptotic series psi_0 evaluated at -Z_ell.

    The caller supplies the unit series ``z_rescaled`` = ell * u^ell * Z_ell
    (the Laurent rescaling of Z_ell, whose leading behaviour is u^{-ell}).
    Term j contributes ell^j u^{ell j} times the j-th inverse power, so only
    j <= N/ell terms reach the truncation order.
    """
    if ell <= 0:
        raise ValueError("ell must be positive")
    v_inv = inv_unit(z_rescaled)
    total = USeries.zero(z_rescaled.order, z_rescaled.trunc)
    inv_pow = USeries.one(z_rescaled.order, z_rescaled.trunc)
    for j in range(1, z_rescaled.order // ell + 1):
        inv_pow = inv_pow * v_inv
        term = inv_pow.shift_u(ell * j) * (-_psi_bernoulli(j) * Fraction(ell**j, j))
        total = total + term
    return total


def psi1_of(z_rescaled: USeries, ell: int) -> USeries:
    """Asymptotic series psi_1 evaluated at -Z_ell; conventions as psi0_of."""
    if ell <= 0:
        raise ValueError("ell must be positive")
    v_inv = inv_unit(z_rescaled)
    total = USeries.zero(z_rescaled.order, z_rescaled.trunc)
    inv_pow = USeries.one(z_rescaled.order, z_rescaled.trunc)
    for j in range(0, z_rescaled.order // ell):
        inv_pow = inv_pow * v_inv
        term = inv_pow.shift_u(ell * (j + 1)) * (-_psi_bernoulli(j) * Fraction(ell ** (j + 1)))
        total = total + term
    return total
