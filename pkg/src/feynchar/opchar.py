"""Weight-graded equivariant characters of the cyclic operads.

Each operad is stored sign-stripped: ``parts[(n, W)]`` is the honest
Frobenius characteristic of the arity-n, weight-W piece, a pure degree-n
symmetric function with no t.  Every piece sits in a single cohomological
degree given by ``degree_fn(n, W)``; the Euler signs of the printed
characteristic series are divided out on construction and reconstituted at
the consumption sites (graph sums need degree-resolved data).
"""

from __future__ import annotations

from fractions import Fraction

from .symfunc import (
    SymFunc,
    TruncationSpec,
    h_complete,
    inverse_unit,
    plethysm,
    power_with_exponent,
    zlam,
)
from .useries import necklace_in


class OperadChar:
    """Per-arity, per-weight character data of a cyclic operad."""

    __slots__ = ("name", "trunc", "parts", "degree_fn", "min_arity", "bivalent_weight_min")

    def __init__(self, name, trunc, parts, degree_fn, min_arity, bivalent_weight_min=None):
        self.name = name
        self.trunc = trunc
        self.parts = parts  # (n, W) -> {partition: Fraction}
        self.degree_fn = degree_fn
        self.min_arity = min_arity
        self.bivalent_weight_min = bivalent_weight_min

    def trace(self, n: int, w: int, mu) -> Fraction:
        """Trace of a permutation of cycle type mu on the (n, w) piece."""
        coeffs = self.parts.get((n, w))
        if not coeffs:
            return Fraction(0)
        c = coeffs.get(tuple(mu))
        return zlam(tuple(mu)) * c if c else Fraction(0)

    def weights(self, n: int) -> list:
        return sorted(w for (m, w) in self.parts if m == n)

    def part_symfunc(self, n: int, w: int) -> SymFunc:
        coeffs = self.parts.get((n, w), {})
        return SymFunc(self.trunc, {(lam, 0): c for lam, c in coeffs.items()})

    def signed_series(self) -> SymFunc:
        """Reassemble the Euler-Frobenius-Poincare series sum (-1)^d t^W ch."""
        terms: dict = {}
        for (n, w), coeffs in self.parts.items():
            sign = (-1) ** self.degree_fn(n, w)
            for lam, c in coeffs.items():
                key = (lam, w)
                terms[key] = terms.get(key, 0) + sign * c
        return SymFunc(self.trunc, terms)

    def dims(self, n: int) -> dict:
        """Weight-graded dimensions of the arity-n piece."""
        out = {}
        for (m, w), coeffs in self.parts.items():
            if m == n:
                d = coeffs.get((1,) * n)
                if d:
                    out[w] = d * zlam((1,) * n)
        return out


def _strip_signs(name, series, degree_fn, min_arity, bivalent_weight_min=None, trunc=None, strict=True):
    trunc = trunc or series.trunc
    parts: dict = {}
    for (lam, w), c in series.terms.items():
        n = sum(lam)
        if n < min_arity:
            # Getzler-type product formulas carry junk below the operad's
            # first arity; the printed expansions start at min_arity.
            if c and strict:
                raise ValueError("%s: unexpected arity-%d term %s" % (name, n, lam))
            continue
        sign = (-1) ** degree_fn(n, w)
        parts.setdefault((n, w), {})[lam] = sign * c
    return OperadChar(name, trunc, parts, degree_fn, min_arity, bivalent_weight_min)


# ---------------------------------------------------------------------------
# degree conventions
#
# Grav: the weight-W part of the arity-n piece is concentrated in degree
# n - 3 + W/2.  DBV* adds arity-2 classes of weight 2k in degree 2k - 1.
# BV carries weight twice the homological degree, so cohomological degree
# -W/2; HyCom weight equals homological degree (only the parity is consumed
# downstream).  Com sits in degree 0.


def _deg_grav(n, w):
    if n == 2:
        return w - 1
    if w % 2:
        raise ValueError("odd weight in gravity character")
    return n - 3 + w // 2


def _deg_bv(n, w):
    if w % 2:
        raise ValueError("odd weight in BV character")
    return -(w // 2)


def _deg_hycom(n, w):
    return -w


def _one(trunc):
    return SymFunc.one(trunc)


def _p(k, trunc):
    return SymFunc.p(k, trunc)


def _tpoly(trunc, coeffs):
    return SymFunc(trunc, {((), w): Fraction(c) for w, c in coeffs.items()})


def _getzler_product(trunc, base_t, neck_exponent):
    """prod_l (1 + base_t(l) * p_l) ** M_l(t^neck_exponent)."""
    total = _one(trunc)
    for ell in range(1, trunc.n_max + 1):
        base = _one(trunc) + base_t(ell) * _p(ell, trunc)
        expo = necklace_in(ell, neck_exponent)
        total = total * power_with_exponent(base, expo)
    return total


def ch_grav(trunc: TruncationSpec) -> OperadChar:
    """Euler characteristic series of the (1-shifted) gravity operad."""
    big = TruncationSpec(trunc.n_max, trunc.w_max + 2)
    prod = _getzler_product(big, lambda ell: _one(big), 2)
    prod = prod * (_one(big) + _p(1, big))
    bracket = prod - _one(big) - (_one(big) + _tpoly(big, {2: 1})) * _p(1, big)
    shifted = bracket.shift_t(-2)
    if any(w < 0 for (_lam, w) in shifted.terms):
        raise AssertionError("gravity bracket not divisible by t^2")
    series = -shifted * inverse_unit(_one(big) - _tpoly(big, {4: 1}))
    series = series + inverse_unit(_one(big) - _tpoly(big, {2: 1})) * _p(1, big) * _p(1, big) / 2
    series = series - inverse_unit(_one(big) + _tpoly(big, {2: 1})) * _p(2, big) / 2
    series = series.retruncate(trunc)
    return _strip_signs("grav", series, _deg_grav, 3)


def ch_dbv(trunc: TruncationSpec) -> OperadChar:
    """Gravity plus the arity-2 tower of dual BV operators (weight 2k)."""
    grav = ch_grav(trunc)
    parts = dict(grav.parts)
    for k in range(1, trunc.w_max // 2 + 1):
        # character of the span of the degree 2k-1 element x_k; the
        # transposition acts by -(-1)^k
        parts[(2, 2 * k)] = {
            (1, 1): Fraction(1, 2),
            (2,): Fraction(-((-1) ** k), 2),
        }
    return OperadChar("dbv", trunc, parts, _deg_grav, 2, bivalent_weight_min=2)


def ch_m(trunc: TruncationSpec) -> OperadChar:
    """Getzler's characteristic of the open-moduli homology operad m."""
    series = _m_series(trunc)
    return _strip_signs("m", series, _deg_bv, 3, strict=False)


def _headroom(trunc: TruncationSpec) -> TruncationSpec:
    # the necklace exponents M_l(t^{-2}) shift t-degrees down by up to 2l,
    # so product formulas in them need extra working precision in t
    return TruncationSpec(trunc.n_max, trunc.w_max + 2 * trunc.n_max)


def _m_series(trunc: TruncationSpec) -> SymFunc:
    big = _headroom(trunc)
    prod = _getzler_product(big, lambda ell: _tpoly(big, {2 * ell: 1}), -2)
    bracket = prod - _one(big) - (_one(big) + _tpoly(big, {2: 1})) * _p(1, big)
    series = inverse_unit(_one(big) - _tpoly(big, {4: 1})) * (_one(big) + _tpoly(big, {2: 1}) * _p(1, big)) * bracket
    series = series - inverse_unit(_one(big) - _tpoly(big, {2: 1})) * _p(1, big) * _p(1, big) / 2
    series = series - inverse_unit(_one(big) + _tpoly(big, {2: 1})) * _p(2, big) / 2
    return series.retruncate(trunc)


def _bv_series_product_route(trunc: TruncationSpec) -> SymFunc:
    big = _headroom(trunc)
    prod = _getzler_product(
        big,
        lambda ell: _tpoly(big, {2 * ell: 1, 4 * ell: -1}),
        -2,
    )
    series = inverse_unit(_one(big) - _tpoly(big, {4: 1}))
    series = series * (_one(big) + _tpoly(big, {2: 1, 4: -1}) * _p(1, big))
    series = series * (prod - _one(big))
    series = series - _p(1, big)
    return series.retruncate(trunc)


def _bv_series_plethysm_route(trunc: TruncationSpec) -> SymFunc:
    m_series = ch_m(trunc).signed_series()  # honest character: no junk below arity 3
    circ = plethysm(m_series, (_one(trunc) - _tpoly(trunc, {2: 1})) * _p(1, trunc))
    two = (_one(trunc) - _tpoly(trunc, {2: 1})) * (_p(1, trunc) * _p(1, trunc) + _p(2, trunc)) / 2
    return circ + two


def ch_bv(trunc: TruncationSpec) -> OperadChar:
    """Characteristic of the BV operad, by two independent routes.

    Route one is the closed product formula; route two composes Getzler's m
    with the circle character (1 - t^2) p_1.  Disagreement signals a series
    bug.
    """
    a = _bv_series_product_route(trunc)
    b = _bv_series_plethysm_route(trunc)
    for n in range(2, trunc.n_max + 1):
        if a.component(n) != b.component(n):
            raise AssertionError("BV character routes disagree in arity %d" % n)
    return _strip_signs("bv", a, _deg_bv, 2, bivalent_weight_min=2, strict=False)


def ch_mS(trunc: TruncationSpec) -> OperadChar:
    """Character of the auxiliary operad m_S: equal to the augmented BV."""
    bv = ch_bv(trunc)
    parts = {nw: c for nw, c in bv.parts.items() if nw != (2, 0)}
    return OperadChar("ms", trunc, parts, _deg_bv, 2, bivalent_weight_min=2)


def ch_com(trunc: TruncationSpec) -> OperadChar:
    """Trivial-representation character, arity >= 3, weight 0."""
    parts = {}
    for n in range(3, trunc.n_max + 1):
        parts[(n, 0)] = {lam: c for ((lam, _w), c) in h_complete(n, trunc).terms.items()}
    return OperadChar("com", trunc, parts, lambda n, w: 0, 3)


def ch_hycom(trunc: TruncationSpec) -> OperadChar:
    """HyCom character, computed as genus-0 Feynman-transform tree sums."""
    from . import feyneuler  # deferred: feyneuler consumes this module

    grav = ch_grav(trunc)
    parts: dict = {}
    for n in range(3, trunc.n_max + 1):
        by_w = feyneuler.euler_feyn(grav, "feyn_k", 0, n, trunc.w_max)
        for w, f in by_w.items():
            coeffs = {lam: c for ((lam, _z), c) in f.terms.items()}
            if coeffs:
                # degree -W is even, so the stored and signed data coincide
                parts[(n, w)] = coeffs
    return OperadChar("hycom", trunc, parts, _deg_hycom, 3)


_BUILDERS = {
    "grav": ch_grav,
    "dbv": ch_dbv,
    "bv": ch_bv,
    "m": ch_m,
    "ms": ch_mS,
    "com": ch_com,
    "hycom": ch_hycom,
}


def by_name(name: str, trunc: TruncationSpec) -> OperadChar:
    try:
        builder = _BUILDERS[name]
    except KeyError:
        raise ValueError("unknown operad %r (choose from %s)" % (name, sorted(_BUILDERS)))
    return builder(trunc)
