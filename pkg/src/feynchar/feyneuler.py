"""Weight-graded equivariant Euler characteristics of Feynman transforms.

The main engine sums over isomorphism classes of stable graphs whose
vertices are at least trivalent and, per automorphism, multiplies graded
traces: a supertrace factor for each vertex orbit, a chain-space factor for
each edge and leg orbit, and the power-sum monomial of the leg cycle type.

Chains of bivalent vertices are not materialised as graphs: for each edge
(and, in the unamputated transforms, each leg) the total space of all
bivalent chains along it forms a two-sided bar construction whose graded
supertrace under the identity and under the edge flip is a small power
series in t.  Summing over core graphs with these per-orbit factors computes
exactly the Euler characteristic of the unreduced transform; a slow
reference engine that does materialise bivalent vertices is kept for
cross-checks on small inputs.

Variants: ``feyn_k`` is the transform of a 1-shifted (co)operad (edges carry
degree 0), ``feyn`` the transform of an operad (edges carry degree -1), and
``afeyn`` the amputated version of ``feyn_k`` (no chains on legs).
"""

from __future__ import annotations

from fractions import Fraction

from . import stgraph
from .opchar import OperadChar
from .symfunc import SymFunc, TruncationSpec
from .useries import USeries, divisors, inv_unit, log_unit, moebius, psi0_of, psi1_of

_VARIANT_P = {"feyn_k": 0, "feyn": -1, "afeyn": 0}


# ---------------------------------------------------------------------------
# dense-free polynomial helpers: polynomials in t as {exponent: Fraction}


def _pmul(a: dict, b: dict, w_max: int) -> dict:
    out: dict = {}
    for wa, ca in a.items():
        for wb, cb in b.items():
            w = wa + wb
            if w > w_max:
                continue
            s = out.get(w, 0) + ca * cb
            if s:
                out[w] = s
            else:
                del out[w]
    return out


def _pinv(a: dict, w_max: int) -> dict:
    """Invert a unit polynomial (nonzero constant term) as a power series."""
    c0 = a.get(0)
    if not c0:
        raise ValueError("not a unit")
    x = {w: -c / c0 for w, c in a.items() if w != 0}
    out = {0: Fraction(1)}
    power = {0: Fraction(1)}
    while True:
        power = _pmul(power, x, w_max)
        if not power:
            break
        for w, c in power.items():
            s = out.get(w, 0) + c
            if s:
                out[w] = s
            else:
                del out[w]
    return {w: c / c0 for w, c in out.items()}


def _psub(a: dict, k: int, w_max: int) -> dict:
    """Substitute t -> t^k."""
    return {w * k: c for w, c in a.items() if w * k <= w_max}


# ---------------------------------------------------------------------------
# chain-space supertraces


class ChainTables:
    """Edge and leg chain factors for one operad character.

    q_e, c1, c2 are the per-element supertraces of the arity-2 data (with
    its degree signs); T_id/T_flip include all Det factors of the chain's
    edges, so no separate edge-sign appears in the graph sum.
    """

    def __init__(self, char: OperadChar, p: int, w_max: int, leg_chains: bool):
        q_e: dict = {}
        c1: dict = {}
        floor = char.bivalent_weight_min
        if floor is not None:
            for (n, w), _c in char.parts.items():
                if n != 2 or w < floor:
                    continue
                sign = (-1) ** char.degree_fn(2, w)
                dim = char.trace(2, w, (1, 1))
                flip = char.trace(2, w, (2,))
                if dim:
                    q_e[w] = q_e.get(w, 0) + sign * dim
                if flip:
                    c1[w] = c1.get(w, 0) + sign * flip
        c2 = {2 * w: c for w, c in q_e.items() if 2 * w <= w_max}
        q_e = {w: c for w, c in q_e.items() if w <= w_max}
        c1 = {w: c for w, c in c1.items() if w <= w_max}
        one = {0: Fraction(1)}
        sign_p = Fraction((-1) ** (p % 2))
        denom_id = dict(one)
        for w, c in q_e.items():
            denom_id[w] = denom_id.get(w, 0) - sign_p * c
        t_leg = _pinv(denom_id, w_max)
        t_id = {w: sign_p * c for w, c in t_leg.items()}
        denom_flip = dict(one)
        for w, c in c2.items():
            denom_flip[w] = denom_flip.get(w, 0) - sign_p * c
        numer = dict(one)
        for w, c in c1.items():
            numer[w] = numer.get(w, 0) + c
        t_flip = _pmul(numer, _pinv(denom_flip, w_max), w_max)
        t_flip = {w: sign_p * c for w, c in t_flip.items()}
        self.w_max = w_max
        self.t_id = t_id
        self.t_flip = t_flip
        self.t_leg = t_leg if leg_chains else dict(one)
        self._cache: dict = {}

    def edge(self, k: int, flipped: bool) -> dict:
        key = (k, flipped)
        if key not in self._cache:
            base = self.t_flip if flipped else self.t_id
            self._cache[key] = _psub(base, k, self.w_max)
        return self._cache[key]

    def leg(self, k: int) -> dict:
        key = ("leg", k)
        if key not in self._cache:
            self._cache[key] = _psub(self.t_leg, k, self.w_max)
        return self._cache[key]


class VertexFactors:
    """Memoised per-orbit vertex supertraces."""

    def __init__(self, char: OperadChar, w_max: int):
        self.char = char
        self.w_max = w_max
        self._cache: dict = {}
        self._weights_by_arity: dict = {}
        for (n, w) in char.parts:
            self._weights_by_arity.setdefault(n, []).append(w)

    def factor(self, valence: int, mu: tuple, k: int) -> dict:
        key = (valence, mu, k)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        char = self.char
        floor = char.bivalent_weight_min if valence == 2 else None
        out: dict = {}
        for w in self._weights_by_arity.get(valence, ()):
            if k * w > self.w_max:
                continue
            if floor is not None and w < floor:
                continue
            tr = char.trace(valence, w, mu)
            if tr:
                c = Fraction((-1) ** char.degree_fn(valence, w)) * tr
                out[k * w] = out.get(k * w, 0) + c
        out = {w: c for w, c in out.items() if c}
        self._cache[key] = out
        return out


# ---------------------------------------------------------------------------
# the graph-sum engine


def euler_feyn(char: OperadChar, variant: str, g: int, n: int, w_max: int) -> dict:
    """Weight-graded equivariant Euler characteristic at one (g, n).

    Returns {W: SymFunc of degree n}; for n = 0 the values are multiples of
    the empty monomial.
    """
    if variant not in _VARIANT_P:
        raise ValueError("unknown variant %r" % variant)
    p = _VARIANT_P[variant]
    if 2 * g + n < 3:
        raise ValueError("require 2g + n >= 3")
    if char.trunc.w_max < w_max:
        raise ValueError("character truncation too small in weight")
    max_valence = 2 * g + n
    if char.trunc.n_max < max_valence:
        raise ValueError(
            "character truncation too small: need arity %d, have %d" % (max_valence, char.trunc.n_max)
        )
    chains = ChainTables(char, p, w_max, leg_chains=(variant != "afeyn" and n > 0))
    vfac = VertexFactors(char, w_max)
    graphs = stgraph.enumerate_core(g, n)
    acc: dict = {}
    for graph in graphs:
        order = stgraph.automorphism_count(graph)
        local: dict = {}
        for sigma in stgraph.half_edge_automorphisms(graph):
            od = stgraph.orbit_data(graph, sigma)
            poly = {0: Fraction(1)}
            for k, valence, mu in od.vertex_orbits:
                poly = _pmul(poly, vfac.factor(valence, mu, k), w_max)
                if not poly:
                    break
            if poly:
                for k, flipped in od.edge_orbits:
                    poly = _pmul(poly, chains.edge(k, flipped), w_max)
                    if not poly:
                        break
            if poly and n:
                for k in od.leg_cycle_type:
                    poly = _pmul(poly, chains.leg(k), w_max)
                    if not poly:
                        break
            if not poly:
                continue
            lam = od.leg_cycle_type
            tgt = local.setdefault(lam, {})
            for w, c in poly.items():
                s = tgt.get(w, 0) + c
                if s:
                    tgt[w] = s
                else:
                    del tgt[w]
        for lam, poly in local.items():
            tgt = acc.setdefault(lam, {})
            for w, c in poly.items():
                s = tgt.get(w, 0) + Fraction(c, order)
                if s:
                    tgt[w] = s
                else:
                    del tgt[w]
    return _assemble(acc, n, w_max)


def _assemble(acc: dict, n: int, w_max: int) -> dict:
    trunc = TruncationSpec(n, 0)
    by_w: dict = {}
    for lam, poly in acc.items():
        for w, c in poly.items():
            by_w.setdefault(w, {})[(lam, 0)] = c
    return {w: SymFunc(trunc, terms) for w, terms in sorted(by_w.items()) if terms}


def euler_feyn_reference(char: OperadChar, variant: str, g: int, n: int, w_max: int) -> dict:
    """Slow oracle: materialise bivalent chains as actual graph vertices."""
    p = _VARIANT_P[variant]
    spec = stgraph.EnumSpec(
        min_valence_ordinary=2 if char.bivalent_weight_min is not None else 3,
        max_bivalent_weight_budget=w_max if char.bivalent_weight_min is not None else 0,
    )
    graphs = stgraph.enumerate_stable(g, n, spec)
    if variant == "afeyn":
        graphs = [h for h in graphs if not _has_leg_on_bivalent(h)]
    vfac = VertexFactors(char, w_max)
    acc: dict = {}
    for graph in graphs:
        order = stgraph.automorphism_count(graph)
        for sigma in stgraph.half_edge_automorphisms(graph):
            od = stgraph.orbit_data(graph, sigma)
            poly = {0: Fraction(1)}
            for k, valence, mu in od.vertex_orbits:
                poly = _pmul(poly, vfac.factor(valence, mu, k), w_max)
                if not poly:
                    break
            if p % 2:
                if len(od.edge_orbits) % 2:
                    poly = {w: -c for w, c in poly.items()}
            if not poly:
                continue
            lam = od.leg_cycle_type
            tgt = acc.setdefault(lam, {})
            for w, c in poly.items():
                s = tgt.get(w, 0) + Fraction(c, order)
                if s:
                    tgt[w] = s
                else:
                    del tgt[w]
    return _assemble(acc, n, w_max)


def _has_leg_on_bivalent(graph) -> bool:
    val = graph.valences()
    return any(val[v] == 2 for (v, _label, _tag) in graph.legs)


# ---------------------------------------------------------------------------
# tables and the duality check


class EulerTable:
    """Entries (g, n, W) -> SymFunc for one operad and transform variant."""

    def __init__(self, variant: str, operad: str):
        self.variant = variant
        self.operad = operad
        self.entries: dict = {}

    def put(self, g: int, n: int, by_w: dict) -> None:
        for w, f in by_w.items():
            self.entries[(g, n, w)] = f

    def cell(self, g: int, n: int, w: int):
        return self.entries.get((g, n, w))

    def integer_row(self, g: int, w_top: int) -> list:
        out = []
        for w in range(0, w_top + 1, 2):
            f = self.entries.get((g, 0, w))
            out.append(int(f.constant_term()) if f is not None else 0)
        return out


def top_weight(operad: str, variant: str, g: int, n: int) -> int:
    if operad in ("grav", "hycom"):
        return max(4 * g - 6 + 2 * n, 0)
    return max(6 * g - 6 + 2 * n, 0)


def euler_table(char: OperadChar, variant: str, g_min: int, g_max: int, n: int, w_max=None) -> EulerTable:
    table = EulerTable(variant, char.name)
    for g in range(g_min, g_max + 1):
        if 2 * g + n < 3:
            continue
        w_top = top_weight(char.name, variant, g, n) if w_max is None else w_max
        table.put(g, n, euler_feyn(char, variant, g, n, w_top))
    return table


def duality_check(char_dbv: OperadChar, char_bv: OperadChar, g: int, n: int) -> list:
    """Prop 9.2-style comparison at one (g, n).

    Returns the list of (W, afeyn_value, feyn_value_at_mirror) triples;
    raises AssertionError on any mismatch.
    """
    w_top = 6 * g - 6 + 2 * n
    a = euler_feyn(char_dbv, "afeyn", g, n, w_top)
    b = euler_feyn(char_bv, "feyn", g, n, w_top)
    zero = SymFunc.zero(TruncationSpec(n, 0))
    report = []
    for w in range(0, w_top + 1, 2):
        lhs = a.get(w, zero)
        rhs = b.get(w_top - w, zero)
        report.append((w, lhs, rhs))
        if lhs != rhs:
            raise AssertionError(
                "duality mismatch at (g, n, W) = (%d, %d, %d): %r vs %r" % (g, n, w, lhs, rhs)
            )
    return report


# ---------------------------------------------------------------------------
# closed form for the weight-2 part of Feyn(BV)


def gr2_bv_closed_form(order: int) -> dict:
    """Evaluate the closed-form generating series for gr_2 Feyn(BV).

    Returns {(g, n): SymFunc of degree n} for all g, n >= 0 with
    0 < g + n <= order, the coefficient of u^{g+n} split by symmetric-
    function degree.
    """
    if order < 2:
        raise ValueError("order must be at least 2")
    trunc = TruncationSpec(order, 0)

    def p_sym(d):
        return SymFunc.p(d, trunc)

    def v_series(ell):
        coeffs: dict = {}
        for d in divisors(ell):
            mu = moebius(ell // d)
            if not mu:
                continue
            m = ell - d
            coeffs[m] = coeffs.get(m, SymFunc.zero(trunc)) + SymFunc.one(trunc) * mu
            coeffs[ell] = coeffs.get(ell, SymFunc.zero(trunc)) + p_sym(d) * mu
        return USeries(order, trunc, coeffs)

    vcache: dict = {}

    def v(ell):
        if ell not in vcache:
            vcache[ell] = v_series(ell)
        return vcache[ell]

    zero = USeries.zero(order, trunc)
    v1_inv = inv_unit(v(1))
    neg_inv_z1 = -(v1_inv.shift_u(1))

    e_sum = neg_inv_z1
    for ell in range(1, 2 * order + 3):
        mu = moebius(ell)
        if not mu:
            continue
        term = log_unit(v(ell)) + psi0_of(v(ell), ell)
        e_sum = e_sum + term * Fraction(mu, ell)

    s2 = zero
    for ell in range(1, order + 2):
        mu = moebius(ell)
        if not mu:
            continue
        term = log_unit(v(2 * ell)) + psi0_of(v(2 * ell), 2 * ell)
        s2 = s2 + term * Fraction(mu, ell)

    s_psi1 = zero
    for ell in range(1, order + 1):
        mu = moebius(ell)
        if not mu:
            continue
        s_psi1 = s_psi1 + psi1_of(v(ell), ell) * Fraction(mu * mu, ell * ell)

    inner = e_sum * e_sum + s2 - (v1_inv * v1_inv).shift_u(2) + s_psi1
    total = v(1) * inner * Fraction(-1, 2)

    out: dict = {}
    for m in range(1, order + 1):
        coeff = total.coefficient(m)
        for n in range(0, m + 1):
            part = coeff.component(n)
            if not part.is_zero() or n <= m:
                out[(m - n, n)] = part.retruncate(TruncationSpec(n, 0))
    return out
