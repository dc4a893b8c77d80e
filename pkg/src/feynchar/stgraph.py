"""Stable graphs: enumeration, canonical labeling, automorphism groups.

Graphs are connected multigraphs with tadpoles, numbered legs, per-vertex
genus labels, and an optional vertex color channel (used for special
vertices).  Half-edges can carry decoration tags; isomorphisms must preserve
all of this data.  Canonical labeling works on vertices via iterative color
refinement with individualization, which is sound for multigraphs because
cells carry full typed edge-multiplicity data; tadpoles and parallel edges
are then handled at the half-edge level when automorphism groups are
expanded.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

TAG_NONE, TAG_E, TAG_PSI = 0, 1, 2
KIND_PLAIN, KIND_CROSSED = 0, 1


def mk_edge(u: int, v: int, tu: int = 0, tv: int = 0, kind: int = 0) -> tuple:
    """Normalised edge tuple: endpoints sorted, tadpole tags sorted."""
    if u > v:
        u, v, tu, tv = v, u, tv, tu
    elif u == v and tu > tv:
        tu, tv = tv, tu
    return (u, v, tu, tv, kind)


class Graph:
    """Immutable stable graph with typed half-edges."""

    __slots__ = ("nv", "edges", "legs", "genus_v", "vcolor", "_hash")

    def __init__(self, nv, edges, legs=(), genus_v=None, vcolor=None):
        self.nv = nv
        self.edges = tuple(sorted(mk_edge(*e) for e in edges))
        self.legs = tuple(sorted(legs))  # (vertex, label, tag)
        self.genus_v = tuple(genus_v) if genus_v is not None else (0,) * nv
        self.vcolor = tuple(vcolor) if vcolor is not None else (0,) * nv
        self._hash = hash((self.nv, self.edges, self.legs, self.genus_v, self.vcolor))

    def __eq__(self, other):
        return (
            isinstance(other, Graph)
            and self.nv == other.nv
            and self.edges == other.edges
            and self.legs == other.legs
            and self.genus_v == other.genus_v
            and self.vcolor == other.vcolor
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return "Graph(nv=%d, edges=%r, legs=%r)" % (self.nv, self.edges, self.legs)

    # -- basic invariants

    def n_edges(self) -> int:
        return len(self.edges)

    def n_legs(self) -> int:
        return len(self.legs)

    def genus(self) -> int:
        return len(self.edges) - self.nv + 1 + sum(self.genus_v)

    def valence(self, v: int) -> int:
        val = sum((e[0] == v) + (e[1] == v) for e in self.edges)
        return val + sum(1 for l in self.legs if l[0] == v)

    def valences(self) -> list:
        val = [0] * self.nv
        for u, v, *_ in self.edges:
            val[u] += 1
            val[v] += 1
        for v, *_ in self.legs:
            val[v] += 1
        return val

    def is_connected(self) -> bool:
        if self.nv == 0:
            return False
        parent = list(range(self.nv))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u, v, *_ in self.edges:
            parent[find(u)] = find(v)
        root = find(0)
        return all(find(v) == root for v in range(self.nv))

    def leg_labels(self) -> list:
        return sorted(l[1] for l in self.legs)

    def relabel(self, perm) -> "Graph":
        """Relabel vertices; perm[old] = new."""
        inv = [0] * self.nv
        for old, new in enumerate(perm):
            inv[new] = old
        return Graph(
            self.nv,
            [mk_edge(perm[u], perm[v], tu, tv, kind) for (u, v, tu, tv, kind) in self.edges],
            [(perm[v], label, tag) for (v, label, tag) in self.legs],
            [self.genus_v[inv[new]] for new in range(self.nv)],
            [self.vcolor[inv[new]] for new in range(self.nv)],
        )

    # -- debug serialization (stable line format)

    def to_lines(self) -> str:
        out = ["v %d" % self.nv]
        out.append("genus %s" % " ".join(map(str, self.genus_v)))
        out.append("color %s" % " ".join(map(str, self.vcolor)))
        for e in self.edges:
            out.append("edge %d %d %d %d %d" % e)
        for l in self.legs:
            out.append("leg %d %d %d" % l)
        return "\n".join(out)

    @classmethod
    def from_lines(cls, text: str) -> "Graph":
        nv = 0
        genus_v = vcolor = None
        edges, legs = [], []
        for line in text.strip().splitlines():
            parts = line.split()
            if parts[0] == "v":
                nv = int(parts[1])
            elif parts[0] == "genus":
                genus_v = [int(x) for x in parts[1:]]
            elif parts[0] == "color":
                vcolor = [int(x) for x in parts[1:]]
            elif parts[0] == "edge":
                edges.append(tuple(int(x) for x in parts[1:]))
            elif parts[0] == "leg":
                legs.append(tuple(int(x) for x in parts[1:]))
        return cls(nv, edges, legs, genus_v, vcolor)


# ---------------------------------------------------------------------------
# canonical labeling


def _vertex_data(graph: Graph, labeled_legs: bool):
    """Per-vertex invariant data independent of the labeling."""
    loops = [[] for _ in range(graph.nv)]
    for u, v, tu, tv, kind in graph.edges:
        if u == v:
            loops[u].append((kind, tu, tv))
    legd = [[] for _ in range(graph.nv)]
    for v, label, tag in graph.legs:
        legd[v].append((label, tag) if labeled_legs else (0, tag))
    return [
        (
            graph.vcolor[v],
            graph.genus_v[v],
            graph.valence(v),
            tuple(sorted(loops[v])),
            tuple(sorted(legd[v])),
        )
        for v in range(graph.nv)
    ]


def _serialize(graph: Graph, perm, vdata):
    """Canonical key of the relabeled graph; perm[old] = new."""
    cells: dict = {}
    for u, v, tu, tv, kind in graph.edges:
        a, b = perm[u], perm[v]
        if a > b:
            a, b, tu, tv = b, a, tv, tu
        elif a == b and tu > tv:
            tu, tv = tv, tu
        cells.setdefault((a, b), []).append((kind, tu, tv))
    inv = sorted(range(graph.nv), key=lambda old: perm[old])
    vpart = tuple(vdata[old] for old in inv)
    epart = tuple(sorted((ab, tuple(sorted(ds))) for ab, ds in cells.items()))
    return (graph.nv, vpart, epart)


class CanonResult:
    __slots__ = ("key", "perm", "graph", "vertex_autos")

    def __init__(self, key, perm, graph, vertex_autos):
        self.key = key
        self.perm = perm  # perm[old] = new on the input graph
        self.graph = graph  # relabeled representative
        self.vertex_autos = vertex_autos  # perms old -> old of the input graph


_canon_cache: dict = {}


def canonicalize(graph: Graph, labeled_legs: bool = True) -> CanonResult:
    """Canonical form with relabeling map and the vertex automorphism group.

    Isomorphic inputs yield identical canonical graphs; the result is cached
    per (graph, mode).
    """
    ck = (graph, labeled_legs)
    hit = _canon_cache.get(ck)
    if hit is not None:
        return hit

    vdata = _vertex_data(graph, labeled_legs)
    nv = graph.nv
    nbrs = [[] for _ in range(nv)]
    for u, v, tu, tv, kind in graph.edges:
        if u != v:
            nbrs[u].append((v, (kind, tu, tv)))
            nbrs[v].append((u, (kind, tv, tu)))

    def refine(colors):
        while True:
            sigs = []
            for v in range(nv):
                nb = tuple(sorted((desc, colors[w]) for w, desc in nbrs[v]))
                sigs.append((colors[v], vdata[v], nb))
            order = sorted(range(nv), key=lambda v: sigs[v])
            new = [0] * nv
            c = 0
            for i, v in enumerate(order):
                if i and sigs[v] != sigs[order[i - 1]]:
                    c += 1
                new[v] = c
            if new == colors:
                return colors
            colors = new

    leaves = []

    def search(colors):
        colors = refine(colors)
        classes: dict = {}
        for v in range((nv)):
            classes.setdefault(colors[v], []).append(v)
        target = None
        for c in sorted(classes):
            if len(classes[c]) > 1:
                target = classes[c]
                break
        if target is None:
            perm = [0] * nv
            for rank, v in enumerate(sorted(range(nv), key=lambda v: colors[v])):
                perm[v] = rank
            leaves.append(perm)
            return
        for v in target:
            branched = list(colors)
            branched[v] = branched[v] - 1 + (1 << 20)  # unique new color, sorts after
            search(branched)

    search([0] * nv)

    best_key = None
    best_perms = []
    for perm in leaves:
        key = _serialize(graph, perm, vdata)
        if best_key is None or key < best_key:
            best_key, best_perms = key, [perm]
        elif key == best_key:
            best_perms.append(perm)

    perm0 = best_perms[0]
    inv0 = [0] * nv
    for old, new in enumerate(perm0):
        inv0[new] = old
    autos = sorted({tuple(inv0[p[v]] for v in range(nv)) for p in best_perms})
    result = CanonResult(best_key, tuple(perm0), graph.relabel(perm0), autos)
    _canon_cache[ck] = result
    return result


def clear_caches():
    _canon_cache.clear()


# ---------------------------------------------------------------------------
# half-edge automorphisms
#
# Half-edge slots are numbered 0..2E-1 for the two sides of each edge (side 0
# at the smaller endpoint) and 2E..2E+L-1 for the legs, in storage order.


def _edge_classes(graph: Graph) -> dict:
    classes: dict = {}
    for i, e in enumerate(graph.edges):
        classes.setdefault(e, []).append(i)
    return classes


def _leg_classes(graph: Graph, labeled_legs: bool) -> dict:
    classes: dict = {}
    for i, (v, label, tag) in enumerate(graph.legs):
        key = (v, label, tag) if labeled_legs else (v, tag)
        classes.setdefault(key, []).append(i)
    return classes


def automorphism_count(graph: Graph, labeled_legs: bool = False) -> int:
    """Order of the half-edge automorphism group."""
    import math

    canon = canonicalize(graph, labeled_legs)
    total = len(canon.vertex_autos)
    for e, idxs in _edge_classes(graph).items():
        m = len(idxs)
        total *= math.factorial(m)
        u, v, tu, tv, _kind = e
        if u == v and tu == tv:
            total *= 2**m
    for _key, idxs in _leg_classes(graph, labeled_legs).items():
        total *= math.factorial(len(idxs))
    return total


def half_edge_automorphisms(graph: Graph, labeled_legs: bool = False) -> Iterator[list]:
    """Yield all half-edge automorphisms as slot permutation lists."""
    canon = canonicalize(graph, labeled_legs)
    ne = len(graph.edges)
    eclasses = _edge_classes(graph)
    lclasses = _leg_classes(graph, labeled_legs)

    for phi in canon.vertex_autos:
        # per-edge-class assignment choices
        class_options = []
        ok = True
        for e, idxs in eclasses.items():
            u, v, tu, tv, kind = e
            target = mk_edge(phi[u], phi[v], tu, tv, kind)
            tgt_idxs = eclasses.get(target)
            if tgt_idxs is None or len(tgt_idxs) != len(idxs):
                ok = False
                break
            is_tadpole = u == v
            flip_free = is_tadpole and tu == tv
            opts = []
            for assignment in itertools.permutations(tgt_idxs):
                if flip_free:
                    for flips in itertools.product((False, True), repeat=len(idxs)):
                        opts.append((idxs, assignment, flips, e, target))
                else:
                    opts.append((idxs, assignment, None, e, target))
            class_options.append(opts)
        if not ok:
            continue
        leg_options = []
        for key, idxs in lclasses.items():
            v = key[0]
            tkey = (phi[v],) + key[1:]
            tgt = lclasses.get(tkey)
            if tgt is None or len(tgt) != len(idxs):
                ok = False
                break
            leg_options.append([(idxs, a) for a in itertools.permutations(tgt)])
        if not ok:
            continue

        for echoice in itertools.product(*class_options):
            base = [None] * (2 * ne + len(graph.legs))
            good = True
            for idxs, assignment, flips, e, target in echoice:
                u, v, tu, tv, kind = e
                for k, (src, dst) in enumerate(zip(idxs, assignment)):
                    if u == v:
                        flip = flips[k] if flips is not None else False
                        base[2 * src] = 2 * dst + (1 if flip else 0)
                        base[2 * src + 1] = 2 * dst + (0 if flip else 1)
                    else:
                        # side 0 of src sits at u and must map to the side of
                        # dst sitting at phi[u]
                        du, dv = graph.edges[dst][0], graph.edges[dst][1]
                        if phi[u] == du and phi[v] == dv:
                            base[2 * src] = 2 * dst
                            base[2 * src + 1] = 2 * dst + 1
                        elif phi[u] == dv and phi[v] == du:
                            base[2 * src] = 2 * dst + 1
                            base[2 * src + 1] = 2 * dst
                        else:
                            good = False
                            break
                if not good:
                    break
            if not good:
                continue
            for lchoice in itertools.product(*leg_options):
                sigma = list(base)
                for idxs, assignment in lchoice:
                    for src, dst in zip(idxs, assignment):
                        sigma[2 * ne + src] = 2 * ne + dst
                yield sigma


def has_odd_automorphism(graph: Graph, labeled_legs: bool = True) -> bool:
    """True iff some automorphism induces an odd permutation of the edges.

    Local moves (tadpole flips, leg swaps) act trivially on the edge set, and
    a swap of two same-typed parallel edges or tadpoles is an odd
    transposition; otherwise the sign is determined by the vertex
    automorphism.
    """
    for e, idxs in _edge_classes(graph).items():
        if len(idxs) >= 2:
            return True
    canon = canonicalize(graph, labeled_legs)
    eclasses = _edge_classes(graph)
    for phi in canon.vertex_autos:
        perm = []
        for i, (u, v, tu, tv, kind) in enumerate(graph.edges):
            target = mk_edge(phi[u], phi[v], tu, tv, kind)
            perm.append(eclasses[target][0])
        if _perm_sign(perm) < 0:
            return True
    return False


def _perm_sign(perm) -> int:
    seen = [False] * len(perm)
    sign = 1
    for i in range(len(perm)):
        if seen[i]:
            continue
        j = i
        length = 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


# ---------------------------------------------------------------------------
# orbit data of a half-edge automorphism (for equivariant Euler sums)


@dataclass
class OrbitData:
    vertex_orbits: list  # (orbit length k, valence, cycle type mu of return map on the star)
    edge_orbits: list  # (orbit length k, flipped: bool)
    leg_cycle_type: tuple  # partition of n


def orbit_data(graph: Graph, sigma) -> OrbitData:
    ne = len(graph.edges)
    nl = len(graph.legs)

    # vertex permutation induced by sigma
    slot_vertex = []
    for u, v, *_ in graph.edges:
        slot_vertex.extend((u, v))
    slot_vertex.extend(l[0] for l in graph.legs)
    phi = [None] * graph.nv
    for s in range(2 * ne + nl):
        phi[slot_vertex[s]] = slot_vertex[sigma[s]]

    star = [[] for _ in range(graph.nv)]
    for s, v in enumerate(slot_vertex):
        star[v].append(s)

    vertex_orbits = []
    seen_v = [False] * graph.nv
    for v in range(graph.nv):
        if seen_v[v]:
            continue
        k = 0
        w = v
        while not seen_v[w]:
            seen_v[w] = True
            w = phi[w]
            k += 1
        # return map sigma^k on the star of v
        ret = {s: s for s in star[v]}
        for _ in range(k):
            ret = {s: sigma[ret[s]] for s in ret}
        mu = _cycle_type(ret)
        vertex_orbits.append((k, len(star[v]), mu))

    edge_of_slot = lambda s: s // 2
    edge_orbits = []
    seen_e = [False] * ne
    for e in range(ne):
        if seen_e[e]:
            continue
        k = 0
        f = e
        while not seen_e[f]:
            seen_e[f] = True
            f = edge_of_slot(sigma[2 * f])
            k += 1
        s = 2 * e
        for _ in range(k):
            s = sigma[s]
        edge_orbits.append((k, s == 2 * e + 1))

    seen_l = [False] * nl
    legcycles = []
    for i in range(nl):
        if seen_l[i]:
            continue
        k = 0
        j = i
        while not seen_l[j]:
            seen_l[j] = True
            j = sigma[2 * ne + j] - 2 * ne
            k += 1
        legcycles.append(k)
    return OrbitData(vertex_orbits, edge_orbits, tuple(sorted(legcycles, reverse=True)))


def _cycle_type(mapping: dict) -> tuple:
    seen = set()
    cycles = []
    for s in mapping:
        if s in seen:
            continue
        k = 0
        t = s
        while t not in seen:
            seen.add(t)
            t = mapping[t]
            k += 1
        cycles.append(k)
    return tuple(sorted(cycles, reverse=True))


# ---------------------------------------------------------------------------
# enumeration


@dataclass
class EnumSpec:
    min_valence_ordinary: int = 3
    special_vertex: bool = False
    special_min_valence: int = 3
    max_bivalent_weight_budget: int = 0
    allow_tadpoles: bool = True
    legs_mode: str = "permutable"  # or "fixed"


def _type_sequences(nv, n_edge_slots, n_legs, min_val, need_edge_slot):
    """Non-increasing sequences of (edge_degree, legs) per vertex."""

    def rec(i, rem_d, rem_l, prev):
        if i == nv:
            if rem_d == 0 and rem_l == 0:
                yield ()
            return
        remaining = nv - i - 1
        for d in range(rem_d, -1, -1):
            if need_edge_slot and d == 0:
                continue
            for l in range(rem_l, -1, -1):
                if d + l < min_val:
                    continue
                if (d, l) > prev:
                    continue
                # the remaining vertices each need at least min_val slots
                if rem_d - d + rem_l - l < remaining * min_val:
                    continue
                for rest in rec(i + 1, rem_d - d, rem_l - l, (d, l)):
                    yield ((d, l),) + rest

    big = (n_edge_slots + n_legs + 1, 0)
    yield from rec(0, n_edge_slots, n_legs, big)


def _matrices(types, allow_tadpoles):
    """Symmetric multiplicity matrices with prescribed row sums.

    ``types`` is the non-increasing (edge_degree, legs) sequence; within a
    block of equal types the column prefix above the block is required to be
    lexicographically non-increasing, which prunes relabelings within blocks
    without losing any isomorphism class.
    """
    nv = len(types)
    degrees = [t[0] for t in types]
    block_start = [0] * nv
    for i in range(1, nv):
        block_start[i] = block_start[i - 1] if types[i] == types[i - 1] else i

    mat = [[0] * nv for _ in range(nv)]
    rem = list(degrees)

    def fill_cell(i, j):
        # next cell after (i, j) in the upper triangle, row-major
        if j + 1 < nv:
            return (i, j + 1)
        return (i + 1, i + 1)

    results = []

    def rec(i, j):
        if i == nv:
            results.append([row[:] for row in mat])
            return
        if j == i:
            # starting a new row: block-sorting prune
            s = block_start[i]
            if s < i:
                prefix_this = tuple(mat[r][i] for r in range(s))
                prefix_prev = tuple(mat[r][i - 1] for r in range(s))
                if prefix_this > prefix_prev:
                    return
            if allow_tadpoles:
                top = rem[i] // 2 * 2
                for a in range(top, -1, -2):
                    mat[i][i] = a
                    rem[i] -= a
                    if rem[i] <= sum(rem[k] for k in range(i + 1, nv)):
                        rec(*fill_cell(i, j))
                    rem[i] += a
                mat[i][i] = 0
            else:
                if rem[i] <= sum(rem[k] for k in range(i + 1, nv)):
                    rec(*fill_cell(i, j))
            return
        if j >= nv:
            if rem[i] == 0:
                rec(i + 1, i + 1)
            return
        hi = min(rem[i], rem[j])
        lo = 0
        if j == nv - 1:
            lo = rem[i]
            if lo > hi:
                return
        for a in range(hi, lo - 1, -1):
            mat[i][j] = mat[j][i] = a
            rem[i] -= a
            rem[j] -= a
            # row i must be completable by later columns
            if rem[i] <= sum(rem[k] for k in range(j + 1, nv)):
                rec(*fill_cell(i, j))
            rem[i] += a
            rem[j] += a
        mat[i][j] = mat[j][i] = 0

    rec(0, 0)
    return results


def enumerate_core(g: int, n: int, min_valence: int = 3, allow_tadpoles: bool = True) -> list:
    """All connected stable graphs of genus g with n permutable legs.

    All vertices have genus 0 and valence >= min_valence (legs count towards
    valence).  Exactly one representative per isomorphism class, in a
    deterministic order.
    """
    if min_valence < 3:
        raise ValueError("enumerate_core requires min_valence >= 3; use subdivisions for bivalent vertices")
    found: dict = {}
    if 2 * g + n < 3:
        return []
    v_max = max(2 * g - 2 + n, 1)
    for nv in range(1, v_max + 1):
        ne = g + nv - 1
        if ne < 0:
            continue
        for types in _type_sequences(nv, 2 * ne, n, min_valence, need_edge_slot=nv > 1):
            for mat in _matrices([t for t in types], allow_tadpoles):
                edges = []
                for i in range(nv):
                    edges.extend([(i, i, 0, 0, KIND_PLAIN)] * (mat[i][i] // 2))
                    for j in range(i + 1, nv):
                        edges.extend([(i, j, 0, 0, KIND_PLAIN)] * mat[i][j])
                legs = []
                label = 1
                for i in range(nv):
                    for _ in range(types[i][1]):
                        legs.append((i, label, TAG_NONE))
                        label += 1
                graph = Graph(nv, edges, legs)
                if not graph.is_connected():
                    continue
                canon = canonicalize(graph, labeled_legs=False)
                if canon.key not in found:
                    found[canon.key] = canon.graph
    return [found[k] for k in sorted(found)]


def subdivide_edge(graph: Graph, edge_idx: int, vcolor: int = 0) -> Graph:
    """Insert a new (bivalent) vertex in the middle of an edge."""
    u, v, tu, tv, kind = graph.edges[edge_idx]
    w = graph.nv
    edges = [e for i, e in enumerate(graph.edges) if i != edge_idx]
    edges.append((u, w, tu, 0, kind))
    edges.append((w, v, 0, tv, kind))
    return Graph(
        graph.nv + 1,
        edges,
        graph.legs,
        graph.genus_v + (0,),
        graph.vcolor + (vcolor,),
    )


def subdivide_leg(graph: Graph, leg_idx: int, vcolor: int = 0) -> Graph:
    """Insert a new (bivalent) vertex between a leg and its vertex."""
    v, label, tag = graph.legs[leg_idx]
    w = graph.nv
    legs = [l for i, l in enumerate(graph.legs) if i != leg_idx]
    legs.append((w, label, tag))
    edges = list(graph.edges) + [(v, w, 0, 0, KIND_PLAIN)]
    return Graph(
        graph.nv + 1,
        edges,
        legs,
        graph.genus_v + (0,),
        graph.vcolor + (vcolor,),
    )


def enumerate_stable(g: int, n: int, spec: EnumSpec) -> list:
    """Enumeration entry point covering bivalent budgets and special vertices.

    Graphs with bivalent vertices are generated by repeatedly subdividing the
    edges and legs of core graphs; a budget of 2*k admits up to k bivalent
    vertices (each carries weight at least 2).
    """
    if spec.min_valence_ordinary < 3 and spec.max_bivalent_weight_budget == 0:
        raise ValueError("bivalent vertices require a weight budget")
    labeled = spec.legs_mode == "fixed"
    cores = enumerate_core(g, n, 3, spec.allow_tadpoles)
    if labeled:
        cores = [h for c in cores for h in leg_labelings(c)]
    found: dict = {}

    def add(graph):
        canon = canonicalize(graph, labeled_legs=labeled)
        if canon.key not in found:
            found[canon.key] = canon.graph
            return True
        return False

    if spec.special_vertex:
        for core in cores:
            for v in range(core.nv):
                colored = Graph(
                    core.nv,
                    core.edges,
                    core.legs,
                    core.genus_v,
                    tuple(1 if i == v else 0 for i in range(core.nv)),
                )
                add(colored)
            if spec.special_min_valence <= 2:
                for i in range(len(core.edges)):
                    add(subdivide_edge(core, i, vcolor=1))
                for i in range(len(core.legs)):
                    add(subdivide_leg(core, i, vcolor=1))
        return [found[k] for k in sorted(found)]

    budget = spec.max_bivalent_weight_budget // 2
    if budget < 0:
        raise ValueError("infeasible spec: negative bivalent budget")
    for graph in cores:
        add(graph)
    for _round in range(budget):
        grown = False
        for graph in [found[k] for k in sorted(found)]:
            if count_bivalent(graph) != _round:
                continue
            for i in range(len(graph.edges)):
                grown |= add(subdivide_edge(graph, i))
            for i in range(len(graph.legs)):
                grown |= add(subdivide_leg(graph, i))
        if not grown:
            break
    return [found[k] for k in sorted(found)]


def count_bivalent(graph: Graph) -> int:
    return sum(1 for v in range(graph.nv) if graph.valence(v) == 2)


def leg_labelings(graph: Graph) -> list:
    """All inequivalent ways of distributing the leg labels 1..n."""
    n = len(graph.legs)
    base = [(v, tag) for (v, _label, tag) in graph.legs]
    found: dict = {}
    for perm in itertools.permutations(range(1, n + 1)):
        legs = [(base[i][0], perm[i], base[i][1]) for i in range(n)]
        g2 = Graph(graph.nv, graph.edges, legs, graph.genus_v, graph.vcolor)
        canon = canonicalize(g2, labeled_legs=True)
        if canon.key not in found:
            found[canon.key] = canon.graph
    return [found[k] for k in sorted(found)]
