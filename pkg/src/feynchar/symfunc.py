"""Exact arithmetic in the ring of symmetric functions, power-sum basis.

Symmetric functions are stored as rational linear combinations of monomials
p_lambda * t^w, where p_lambda is a product of power sums indexed by a
partition lambda and t is an auxiliary weight variable.  All computations are
truncated: terms of symmetric-function degree above ``n_max`` or t-degree
above ``w_max`` are discarded eagerly.  Coefficients are ``fractions.Fraction``
throughout; no floating point is used anywhere.

Partitions are plain non-increasing tuples of positive integers.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterable, Iterator, NamedTuple

Partition = tuple  # non-increasing tuple of positive ints


# ---------------------------------------------------------------------------
# partitions and symmetric-group combinatorics


def as_partition(parts: Iterable[int]) -> Partition:
    """Sort parts into a valid partition tuple, dropping zeros."""
    t = tuple(sorted((p for p in parts if p != 0), reverse=True))
    if any(p < 0 for p in t):
        raise ValueError("partition parts must be positive")
    return t


def partitions(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """Yield all partitions of n, largest part first, in reverse-lex order."""
    if n < 0:
        return
    if n == 0:
        yield ()
        return
    if max_part is None or max_part > n:
        max_part = n
    for first in range(max_part, 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def zlam(lam: Partition) -> int:
    """Order of the centraliser of a permutation of cycle type lam."""
    z = 1
    mult: dict[int, int] = {}
    for part in lam:
        mult[part] = mult.get(part, 0) + 1
    for part, m in mult.items():
        z *= part**m * factorial(m)
    return z


def hook_dim(lam: Partition) -> int:
    """Dimension of the irreducible S_n representation via hook lengths."""
    n = sum(lam)
    conj = conjugate(lam)
    num = factorial(n)
    den = 1
    for i, row in enumerate(lam):
        for j in range(row):
            den *= row - j + conj[j] - i - 1
    assert num % den == 0
    return num // den


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > j) for j in range(lam[0]))


def _beta_set(lam: Partition, m: int) -> list[int]:
    # first-column hook lengths padded to m rows
    rows = list(lam) + [0] * (m - len(lam))
    return [rows[i] + m - 1 - i for i in range(m)]


@lru_cache(maxsize=None)
def character(lam: Partition, mu: Partition) -> int:
    """Irreducible character chi^lam(mu), by the Murnaghan-Nakayama rule."""
    if sum(lam) != sum(mu):
        raise ValueError("character requires |lam| == |mu|")
    if not mu:
        return 1
    k = mu[0]
    rest = mu[1:]
    m = max(len(lam), 1)
    beta = _beta_set(lam, m)
    present = set(beta)
    total = 0
    for idx, b in enumerate(beta):
        c = b - k
        if c < 0 or c in present:
            continue
        # height of the border strip = number of beta entries inside (c, b)
        height = sum(1 for x in beta if c < x < b)
        new_beta = sorted(beta[:idx] + [c] + beta[idx + 1 :], reverse=True)
        new_lam = as_partition(new_beta[i] - (m - 1 - i) for i in range(m))
        total += (-1) ** height * character(new_lam, rest)
    return total


# ---------------------------------------------------------------------------
# truncated symmetric functions


class TruncationSpec(NamedTuple):
    n_max: int  # maximal symmetric-function degree kept
    w_max: int  # maximal t exponent kept

    def check(self) -> None:
        if self.n_max < 0 or self.w_max < 0:
            raise ValueError("truncation bounds must be non-negative")


class SymFunc:
    """Truncated symmetric function with a weight variable t.

    ``terms`` maps (partition, t_exponent) to a nonzero Fraction.  Values are
    immutable once constructed; all arithmetic returns new objects.  Negative
    t exponents may occur transiently inside :func:`power_with_exponent`; all
    public constructors produce t exponents >= 0.
    """

    __slots__ = ("trunc", "terms")

    def __init__(self, trunc: TruncationSpec, terms: dict | None = None):
        trunc.check()
        self.trunc = trunc
        clean = {}
        if terms:
            for (lam, w), c in terms.items():
                if c == 0:
                    continue
                if sum(lam) > trunc.n_max or w > trunc.w_max:
                    continue
                clean[(lam, w)] = c if isinstance(c, Fraction) else Fraction(c)
        self.terms = clean

    # -- constructors

    @classmethod
    def zero(cls, trunc: TruncationSpec) -> "SymFunc":
        return cls(trunc)

    @classmethod
    def one(cls, trunc: TruncationSpec) -> "SymFunc":
        return cls(trunc, {((), 0): Fraction(1)})

    @classmethod
    def p(cls, k: int, trunc: TruncationSpec) -> "SymFunc":
        if k < 1:
            raise ValueError("power sum index must be positive")
        return cls(trunc, {((k,), 0): Fraction(1)})

    @classmethod
    def t_power(cls, w: int, trunc: TruncationSpec, coeff=1) -> "SymFunc":
        return cls(trunc, {((), w): Fraction(coeff)})

    @classmethod
    def p_lambda(cls, lam: Iterable[int], trunc: TruncationSpec, coeff=1, w: int = 0) -> "SymFunc":
        return cls(trunc, {(as_partition(lam), w): Fraction(coeff)})

    # -- predicates and accessors

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, lam: Iterable[int], w: int = 0) -> Fraction:
        return self.terms.get((as_partition(lam), w), Fraction(0))

    def constant_term(self) -> Fraction:
        return self.terms.get(((), 0), Fraction(0))

    def component(self, n: int) -> "SymFunc":
        """Part of symmetric-function degree exactly n."""
        return SymFunc(self.trunc, {k: c for k, c in self.terms.items() if sum(k[0]) == n})

    def t_slice(self, w: int) -> "SymFunc":
        """Coefficient of t^w, returned with the t exponent reset to 0."""
        return SymFunc(self.trunc, {(k[0], 0): c for k, c in self.terms.items() if k[1] == w})

    def t_degrees(self) -> list[int]:
        return sorted({w for (_, w) in self.terms})

    def max_degree(self) -> int:
        return max((sum(k[0]) for k in self.terms), default=0)

    # -- ring operations

    def _require_same_trunc(self, other: "SymFunc") -> None:
        if self.trunc != other.trunc:
            raise ValueError("mismatched TruncationSpec: %r vs %r" % (self.trunc, other.trunc))

    def __add__(self, other: "SymFunc") -> "SymFunc":
        self._require_same_trunc(other)
        terms = dict(self.terms)
        for k, c in other.terms.items():
            s = terms.get(k, 0) + c
            if s:
                terms[k] = s
            else:
                terms.pop(k, None)
        return SymFunc(self.trunc, terms)

    def __neg__(self) -> "SymFunc":
        return SymFunc(self.trunc, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "SymFunc") -> "SymFunc":
        return self + (-other)

    def scale(self, c) -> "SymFunc":
        c = Fraction(c)
        if c == 0:
            return SymFunc.zero(self.trunc)
        return SymFunc(self.trunc, {k: c * v for k, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, SymFunc):
            return self.scale(other)
        self._require_same_trunc(other)
        n_max, w_max = self.trunc
        out: dict = {}
        for (lam1, w1), c1 in self.terms.items():
            d1 = sum(lam1)
            for (lam2, w2), c2 in other.terms.items():
                if d1 + sum(lam2) > n_max:
                    continue
                w = w1 + w2
                if w > w_max:
                    continue
                key = (_merge(lam1, lam2), w)
                s = out.get(key, 0) + c1 * c2
                if s:
                    out[key] = s
                else:
                    del out[key]
        return SymFunc(self.trunc, out)

    __rmul__ = __mul__

    def __truediv__(self, c) -> "SymFunc":
        return self.scale(Fraction(1, 1) / Fraction(c))

    def __eq__(self, other) -> bool:
        return isinstance(other, SymFunc) and self.trunc == other.trunc and self.terms == other.terms

    def __hash__(self):
        return hash((self.trunc, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        return "SymFunc(%s)" % format_power(self)

    def shift_t(self, delta: int) -> "SymFunc":
        """Multiply by t^delta; delta may be negative (exact shift)."""
        return SymFunc(self.trunc, {(lam, w + delta): c for (lam, w), c in self.terms.items()})

    def retruncate(self, trunc: TruncationSpec) -> "SymFunc":
        return SymFunc(trunc, self.terms)


def _merge(lam1: Partition, lam2: Partition) -> Partition:
    if not lam1:
        return lam2
    if not lam2:
        return lam1
    return tuple(sorted(lam1 + lam2, reverse=True))


# ---------------------------------------------------------------------------
# plethysm


def plethysm_pk(k: int, f: SymFunc) -> SymFunc:
    """Substitute p_j -> p_{jk} and t -> t^k in f."""
    if k < 1:
        raise ValueError("plethysm index must be positive")
    if k == 1:
        return f
    out = {}
    n_max, w_max = f.trunc
    for (lam, w), c in f.terms.items():
        if k * sum(lam) > n_max or k * w > w_max:
            continue
        out[(tuple(p * k for p in lam), k * w)] = c
    return SymFunc(f.trunc, out)


def plethysm(f: SymFunc, g: SymFunc) -> SymFunc:
    """Plethystic substitution f o g, linear and multiplicative in f.

    t-coefficients of f are scalars under the substitution, while t inside g
    transforms through each p_k as t -> t^k.  g must have no constant term in
    symmetric-function degree (else the composition diverges under
    truncation).
    """
    f._require_same_trunc(g)
    if any(not lam for (lam, _w) in g.terms):
        raise ValueError("plethysm requires g with zero constant term")
    cache: dict[int, SymFunc] = {}

    def pk_of_g(k: int) -> SymFunc:
        if k not in cache:
            cache[k] = plethysm_pk(k, g)
        return cache[k]

    total = SymFunc.zero(f.trunc)
    for (lam, w), c in f.terms.items():
        piece = SymFunc.t_power(w, f.trunc, c)
        for part in lam:
            piece = piece * pk_of_g(part)
            if piece.is_zero():
                break
        total = total + piece
    return total


def exp_sym(f: SymFunc) -> SymFunc:
    """exp of a truncation-nilpotent symmetric function."""
    for lam, w in f.terms:
        if not lam and w <= 0:
            raise ValueError("exp requires every term to raise degree")
    total = SymFunc.one(f.trunc)
    power = SymFunc.one(f.trunc)
    k = 1
    while True:
        power = power * f
        if power.is_zero():
            return total
        total = total + power / factorial(k)
        k += 1


def log_sym(f: SymFunc) -> SymFunc:
    """log of a symmetric function with constant term 1."""
    if f.constant_term() != 1:
        raise ValueError("log requires constant term 1")
    x = f - SymFunc.one(f.trunc)
    for lam, w in x.terms:
        if not lam and w <= 0:
            raise ValueError("log requires 1 + (degree-raising terms)")
    total = SymFunc.zero(f.trunc)
    power = SymFunc.one(f.trunc)
    k = 1
    while True:
        power = power * x
        if power.is_zero():
            return total
        total = total + power * Fraction((-1) ** (k + 1), k)
        k += 1


def inverse_unit(f: SymFunc) -> SymFunc:
    """Multiplicative inverse of f = c*(1 + nilpotent), c a nonzero scalar."""
    c = f.constant_term()
    if c == 0:
        raise ValueError("inverse requires a unit constant term")
    g = f / c
    x = SymFunc.one(f.trunc) - g
    total = SymFunc.one(f.trunc)
    power = SymFunc.one(f.trunc)
    while True:
        power = power * x
        if power.is_zero():
            return total / c
        total = total + power


def power_with_exponent(base: SymFunc, expo) -> SymFunc:
    """Compute base**expo as exp(expo * log(base)).

    ``expo`` is a Laurent polynomial in t: a dict {t_exponent: coefficient}
    (exponents may be negative), a SymFunc supported on empty partitions, or
    a plain scalar.  The product expo * log(base) must again have only
    degree-raising terms; this holds in all the Getzler-type product formulas
    used here.
    """
    if base.constant_term() != 1:
        raise ValueError("power_with_exponent requires base with constant term 1")
    if isinstance(expo, SymFunc):
        if any(lam for (lam, _w) in expo.terms):
            raise ValueError("exponent must be a polynomial in t only")
        expo = {w: c for ((_lam, w), c) in expo.terms.items()}
    elif not isinstance(expo, dict):
        expo = {0: Fraction(expo)}
    log_base = log_sym(base)
    n_max, w_max = base.trunc
    prod: dict = {}
    for shift, c0 in expo.items():
        if c0 == 0:
            continue
        for (lam, w), c in log_base.terms.items():
            w2 = w + shift
            if w2 > w_max:
                continue
            key = (lam, w2)
            s = prod.get(key, 0) + c0 * c
            if s:
                prod[key] = s
            else:
                del prod[key]
    m = SymFunc(base.trunc, prod)
    for lam, w in m.terms:
        if not lam and w <= 0:
            raise ValueError("exponent * log(base) has a non-nilpotent term")
    return exp_sym(m)


# ---------------------------------------------------------------------------
# Schur basis and traces


def schur(lam: Iterable[int], trunc: TruncationSpec, w: int = 0) -> SymFunc:
    """The Schur function s_lambda as a SymFunc, times t^w."""
    lam = as_partition(lam)
    n = sum(lam)
    terms = {}
    for mu in partitions(n):
        chi = character(lam, mu)
        if chi:
            terms[(mu, w)] = Fraction(chi, zlam(mu))
    return SymFunc(trunc, terms)


def h_complete(n: int, trunc: TruncationSpec) -> SymFunc:
    """Complete homogeneous symmetric function h_n = ch(trivial rep)."""
    return SymFunc(trunc, {(mu, 0): Fraction(1, zlam(mu)) for mu in partitions(n)})


def to_schur(f: SymFunc) -> dict:
    """Expand f in the Schur basis: map (partition, t_exponent) -> Fraction."""
    by_nw: dict = {}
    for (mu, w), c in f.terms.items():
        by_nw.setdefault((sum(mu), w), {})[mu] = c
    out: dict = {}
    for (n, w), coeffs in by_nw.items():
        for lam in partitions(n):
            a = sum(c * character(lam, mu) for mu, c in coeffs.items())
            if a:
                out[(lam, w)] = a
    return out


def from_schur(coeffs: dict, trunc: TruncationSpec) -> SymFunc:
    """Inverse of :func:`to_schur`."""
    total = SymFunc.zero(trunc)
    for (lam, w), c in coeffs.items():
        total = total + schur(lam, trunc, w) * c
    return total


def trace_of(f: SymFunc, lam: Iterable[int]) -> dict:
    """Trace of any permutation of cycle type lam on the representation f.

    f must be homogeneous of degree sum(lam) (other degrees are ignored).
    Returns the trace as a polynomial in t: a dict {t_exponent: Fraction}.
    """
    lam = as_partition(lam)
    z = zlam(lam)
    out: dict = {}
    for (mu, w), c in f.terms.items():
        if mu == lam:
            out[w] = z * c
    return out


def dimension_poly(f: SymFunc, n: int) -> dict:
    """Graded dimension (trace of the identity) of the degree-n part of f."""
    return trace_of(f.component(n), (1,) * n)


# ---------------------------------------------------------------------------
# printing


def _fmt_coeff(c: Fraction, first: bool) -> str:
    sign = "-" if c < 0 else ("" if first else "+")
    a = abs(c)
    body = "" if a == 1 else (str(a.numerator) if a.denominator == 1 else str(a)) + "*"
    return sign + body


def format_power(f: SymFunc) -> str:
    """Render in the power-sum basis, ordered by (degree, t, partition)."""
    if f.is_zero():
        return "0"
    keys = sorted(f.terms, key=lambda k: (sum(k[0]), k[1], k[0]))
    chunks = []
    for i, (lam, w) in enumerate(keys):
        c = f.terms[(lam, w)]
        body = "*".join("p%d" % p for p in lam) if lam else ""
        if w:
            body = (body + "*" if body else "") + ("t^%d" % w if w != 1 else "t")
        if not body:
            body = "1"
        head = _fmt_coeff(c, i == 0)
        if head in ("", "+", "-") and body == "1":
            head += "1"
            body = ""
        chunks.append(head + body if body != "1" or head.endswith("*") else head + body)
    return "".join(chunks)


def format_schur(f: SymFunc, per_weight: bool = False) -> str:
    """Render in the Schur basis as e.g. ``s[2,1]+2*s[3]*t^2``."""
    coeffs = to_schur(f)
    if not coeffs:
        return "0"
    keys = sorted(coeffs, key=lambda k: (k[1], sum(k[0]), k[0]))
    chunks = []
    for i, (lam, w) in enumerate(keys):
        body = "s[%s]" % ",".join(map(str, lam))
        if w:
            body += "*t^%d" % w if w != 1 else "*t"
        chunks.append(_fmt_coeff(coeffs[(lam, w)], i == 0) + body)
    return "".join(chunks)
