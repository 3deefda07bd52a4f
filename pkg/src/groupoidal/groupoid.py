"""Finite groupoids: the restricted product on an inverse semigroup,
Paterson's groupoid (L(S), .), components, local groups, Paterson
coordinates and the basis U_{s; s_1..s_n}."""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

from .core import sigma_quotient
from .cosets import build_LS, natural_minimum
from .errors import ValidationError
from .groups import group_from_table
from .order import bar_closure, idempotent_part


class FiniteGroupoid:
    """Objects 0..k-1 and arrows 0..m-1.

    ``compose[g, f]`` is the arrow "g after f", defined (>= 0) exactly when
    ``src[g] == dst[f]``.
    """

    node_shape = "box"

    def __init__(self, objects, arrows, src, dst, compose, inverse, unit, name="G", check=True):
        self.objects = tuple(objects)
        self.arrows = tuple(arrows)
        self.src = np.asarray(src, dtype=np.int64).reshape(len(self.arrows))
        self.dst = np.asarray(dst, dtype=np.int64).reshape(len(self.arrows))
        self.compose = np.asarray(compose, dtype=np.int64).reshape(len(self.arrows), len(self.arrows))
        self.inverse = np.asarray(inverse, dtype=np.int64).reshape(len(self.arrows))
        self.unit = np.asarray(unit, dtype=np.int64).reshape(len(self.objects))
        self.name = name
        if check:
            self.check_axioms()

    def __repr__(self):
        return f"<FiniteGroupoid {len(self.objects)} objects, {len(self.arrows)} arrows>"

    @property
    def nodes(self):
        return list(self.objects)

    @property
    def edges(self):
        return [(int(self.src[a]), int(self.dst[a]), self.arrows[a]) for a in range(len(self.arrows))]

    def check_axioms(self):
        m = len(self.arrows)
        src, dst, c = self.src, self.dst, self.compose
        defined = c >= 0
        expected = src[:, None] == dst[None, :]
        if not np.array_equal(defined, expected):
            g, f = (int(v) for v in np.argwhere(defined != expected)[0])
            raise ValidationError("composition defined on the wrong pairs", witness=(g, f))
        for g, f in np.argwhere(defined):
            h = c[g, f]
            if src[h] != src[f] or dst[h] != dst[g]:
                raise ValidationError("composite has wrong endpoints", witness=(int(g), int(f)))
        for h in range(m):
            for g, f in np.argwhere(defined):
                if src[h] == dst[c[g, f]] and c[h, c[g, f]] != c[c[h, g], f]:
                    raise ValidationError("composition is not associative", witness=(h, int(g), int(f)))
        for x, u in enumerate(self.unit):
            if src[u] != x or dst[u] != x:
                raise ValidationError("unit arrow has wrong endpoints", witness=(x,))
        for a in range(m):
            if c[self.unit[dst[a]], a] != a or c[a, self.unit[src[a]]] != a:
                raise ValidationError("unit laws fail", witness=(a,))
            ai = self.inverse[a]
            if c[ai, a] != self.unit[src[a]] or c[a, ai] != self.unit[dst[a]]:
                raise ValidationError("inverse laws fail", witness=(a,))

    def to_json(self):
        return {
            "identities": list(self.objects),
            "arrows": [{"src": self.objects[s], "dst": self.objects[d], "label": lab} for s, d, lab in self.edges],
        }


def restricted_product_groupoid(T, name=None):
    """Arrows are the elements of T, s: d(s) -> r(s), and s.t = st when d(s) = r(t)."""
    E = list(T.idempotents)
    obj = {e: i for i, e in enumerate(E)}
    n = len(T)
    src = [obj[int(T.d[s])] for s in range(n)]
    dst = [obj[int(T.r[s])] for s in range(n)]
    compose = np.where(T.d[:, None] == T.r[None, :], T.table, -1)
    return FiniteGroupoid(
        [T.label(e) for e in E],
        [T.label(s) for s in range(n)],
        src,
        dst,
        compose,
        T.inverse,
        E,
        name=name or "G",
    )


def groupoid_map_certificate(G1, G2, arrow_map):
    """Check that ``arrow_map`` (list) is an isomorphism of groupoids."""
    arrow_map = np.asarray(arrow_map)
    m = len(G1.arrows)
    bijective = m == len(G2.arrows) and sorted(arrow_map.tolist()) == list(range(len(G2.arrows)))
    object_map = {}
    consistent = True
    for x, u in enumerate(G1.unit):
        y = np.nonzero(G2.unit == arrow_map[u])[0]
        if len(y) != 1:
            consistent = False
            continue
        object_map[x] = int(y[0])
    endpoints = consistent and all(
        object_map.get(int(G1.src[a])) == int(G2.src[arrow_map[a]]) and object_map.get(int(G1.dst[a])) == int(G2.dst[arrow_map[a]])
        for a in range(m)
    )
    defined = G1.compose >= 0
    composition = bool(
        np.array_equal(defined, G2.compose[np.ix_(arrow_map, arrow_map)] >= 0)
        and all(arrow_map[G1.compose[g, f]] == G2.compose[arrow_map[g], arrow_map[f]] for g, f in np.argwhere(defined))
    )
    inverses = bool(np.array_equal(arrow_map[G1.inverse], G2.inverse[arrow_map]))
    cert = {"bijective": bijective, "units": consistent, "endpoints": endpoints, "composition": composition, "inverses": inverses}
    cert["isomorphism"] = all(cert.values())
    return cert


def paterson_groupoid(S, L=None):
    """The restricted-product groupoid of L(S).

    The result carries ``L`` and ``iso_certificate``, the check that
    s -> s^ is an isomorphism from the restricted-product groupoid of S.
    """
    if L is None:
        L = build_LS(S)
    T = L.as_semigroup(check=False)
    G = restricted_product_groupoid(T, name=f"paterson_{S.name or 'S'}".replace("(", "_").replace(")", "").replace(",", "_"))
    G.L = L
    G.semigroup = T
    G.iso_certificate = groupoid_map_certificate(restricted_product_groupoid(S), G, L.iota)
    if not G.iso_certificate["isomorphism"]:
        raise ValidationError("Paterson groupoid is not isomorphic to the restricted product of S")
    return G


def connected_components(G):
    """Partition of object indices; objects are joined by arrows."""
    parent = list(range(len(G.objects)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a in range(len(G.arrows)):
        x, y = find(int(G.src[a])), find(int(G.dst[a]))
        if x != y:
            parent[max(x, y)] = min(x, y)
    blocks = {}
    for x in range(len(G.objects)):
        blocks.setdefault(find(x), []).append(x)
    return sorted((frozenset(b) for b in blocks.values()), key=min)


def local_group(G, x):
    """Arrows x -> x as a group; ``embedding`` lists the arrow indices."""
    arrows = [a for a in range(len(G.arrows)) if G.src[a] == x and G.dst[a] == x]
    pos = {a: i for i, a in enumerate(arrows)}
    table = [[pos[int(G.compose[a, b])] for b in arrows] for a in arrows]
    return group_from_table(table, labels=[G.arrows[a] for a in arrows], embedding=arrows)


def local_group_certificate(S, L, h):
    """The map theta(A) = sigma(a), a in A, from the local group at the
    identity ``h`` of L(S) to bar(E(H))/sigma.

    Returns ``(theta, certificate)``; theta maps coset indices of L to
    classes of the quotient group.  The certificate records each property
    separately.
    """
    H = L.cosets[h].carrier
    if L.product(h, h) != h:
        raise ValidationError("not an identity of L(S)", witness=(h,))
    F = idempotent_part(S, H)
    Fbar = bar_closure(S, F)
    sub = S.restrict(Fbar)
    Q, proj = sigma_quotient(sub)
    pos = {a: i for i, a in enumerate(sub.parent)}
    arrows = [i for i in range(len(L)) if L.product(L.inverse(i), i) == h and L.product(i, L.inverse(i)) == h]

    theta = {}
    well_defined = True
    for i in arrows:
        A = L.cosets[i].carrier
        if not A <= Fbar:
            well_defined = False
            continue
        images = {proj[pos[a]] for a in A}
        if len(images) != 1:
            well_defined = False
            continue
        theta[i] = images.pop()
    injective = well_defined and len(set(theta.values())) == len(arrows)
    surjective = well_defined and set(theta.values()) == set(range(Q.order))
    multiplicative = well_defined and all(
        theta[L.product(i, j)] == Q.mul(theta[i], theta[j]) for i in arrows for j in arrows
    )
    cert = {
        "well_defined": well_defined,
        "injective": injective,
        "surjective": surjective,
        "multiplicative": multiplicative,
    }
    return theta, cert, Q


class PatersonCoordinate(NamedTuple):
    P: frozenset
    rep: int


def paterson_coordinates(S, A):
    """[P, a] with P = (AA^-1)^ and a the least element of A."""
    A = frozenset(A.carrier if hasattr(A, "carrier") else A)
    P = S.up(S.set_product(A, S.set_inverse(A)))
    rep = natural_minimum(S, A)
    if rep is None:
        rep = min(A)
    if int(S.r[rep]) not in P:
        raise ValidationError("r(rep) not in P", witness=(rep,))
    if coordinate_carrier(S, P, rep) != A:
        raise ValidationError("coordinate does not reconstruct the coset", witness=tuple(sorted(A)))
    return PatersonCoordinate(P, rep)


def coordinate_carrier(S, P, a):
    return S.up(S.set_product(P, [a]))


def paterson_identified(S, P, a, b):
    """(P, a) ~ (P, b) iff pa = pb for some p in P."""
    return any(S.mul(p, a) == S.mul(p, b) for p in P)


class BasisSet(NamedTuple):
    s: int
    excluded: tuple
    points: frozenset


def _antichains(S, elems):
    leq = S.leq_matrix
    out = []

    def grow(start, chosen):
        out.append(tuple(chosen))
        for i in range(start, len(elems)):
            x = elems[i]
            if all(not leq[x, y] and not leq[y, x] for y in chosen):
                chosen.append(x)
                grow(i + 1, chosen)
                chosen.pop()

    grow(0, [])
    return out


def topology_basis(S, L=None):
    """The sets U_{s; s_1..s_n} = U_s minus U_{s_i}, with U_s the points
    of L(S) containing s and s_i an antichain strictly below s.  Duplicate
    point sets are listed once, under the first (s, excluded) found."""
    if L is None:
        L = build_LS(S)
    member = np.zeros((len(S), len(L)), dtype=bool)
    for i, C in enumerate(L.cosets):
        member[list(C.carrier), i] = True
    leq = S.leq_matrix
    seen = {}
    for s in range(len(S)):
        below = [int(x) for x in np.nonzero(leq[:, s])[0] if x != s]
        for excl in _antichains(S, below):
            pts = member[s].copy()
            for x in excl:
                pts &= ~member[x]
            key = frozenset(int(i) for i in np.nonzero(pts)[0])
            if key not in seen:
                seen[key] = BasisSet(s, excl, key)
    return sorted(seen.values(), key=lambda b: (len(b.points), sorted(b.points)))


def basis_certificate(basis, n_points):
    sets = [b.points for b in basis]
    covers = set().union(*sets) == set(range(n_points)) if sets else n_points == 0
    refine = all(
        any(x in B3 and B3 <= (B1 & B2) for B3 in sets)
        for B1 in sets
        for B2 in sets
        for x in (B1 & B2)
    )
    discrete = all(frozenset([x]) in set(sets) for x in range(n_points))
    return {"covers": covers, "intersections": refine, "discrete": discrete}
