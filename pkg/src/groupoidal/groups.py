"""Finite groups given by Cayley tables."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations, product
from math import gcd

import numpy as np

from .errors import CapExceededError, ValidationError


@dataclass(frozen=True, eq=False)
class GroupTable:
    """A finite group on indices 0..n-1.

    ``embedding[i]`` is the index of element ``i`` in an ambient structure
    (for maximal subgroups and sigma quotients), and ``labels`` are display
    names.
    """

    table: np.ndarray
    identity: int
    inverse: np.ndarray
    labels: tuple = ()
    embedding: tuple = ()
    _orders: list = field(default=None, repr=False, compare=False)

    @property
    def order(self):
        return len(self.table)

    def __len__(self):
        return len(self.table)

    def mul(self, a, b):
        return int(self.table[a, b])

    def inv(self, a):
        return int(self.inverse[a])

    def label(self, a):
        return self.labels[a] if self.labels else str(a)

    def element_order(self, a):
        k, x = 1, a
        while x != self.identity:
            x = self.mul(x, a)
            k += 1
        return k

    def element_orders(self):
        if self._orders is None:
            object.__setattr__(self, "_orders", [self.element_order(a) for a in range(self.order)])
        return self._orders

    def exponent(self):
        out = 1
        for k in self.element_orders():
            out = out * k // gcd(out, k)
        return out

    def is_abelian(self):
        return bool(np.array_equal(self.table, self.table.T))

    def conjugacy_classes(self):
        seen, classes = set(), []
        for a in range(self.order):
            if a in seen:
                continue
            cls = sorted({self.mul(self.mul(g, a), self.inv(g)) for g in range(self.order)})
            seen.update(cls)
            classes.append(cls)
        return classes

    def generated(self, gens):
        """Subgroup generated by ``gens`` as a frozenset."""
        out = {self.identity}
        frontier = list(out)
        gens = list(gens)
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = self.mul(x, g)
                    if y not in out:
                        out.add(y)
                        nxt.append(y)
            frontier = nxt
        return frozenset(out)

    def generators(self):
        """A small generating set, chosen greedily by decreasing element order."""
        orders = self.element_orders()
        by_order = sorted(range(self.order), key=lambda a: (-orders[a], a))
        gens, current = [], frozenset([self.identity])
        for a in by_order:
            if len(current) == self.order:
                break
            if a not in current:
                gens.append(a)
                current = self.generated(gens)
        return gens


def group_from_table(table, labels=(), embedding=()):
    """Validate a Cayley table exhaustively and wrap it."""
    table = np.asarray(table, dtype=np.int64)
    n = len(table)
    if table.shape != (n, n) or n == 0:
        raise ValidationError("group table must be a non-empty square array")
    if table.min() < 0 or table.max() >= n:
        raise ValidationError("group table entries out of range")
    left = table[table]
    right = table[:, table]
    bad = np.argwhere(left != right)
    if len(bad):
        a, b, c = (int(v) for v in bad[0])
        raise ValidationError(f"not associative at {(a, b, c)}", witness=(a, b, c))
    ids = [e for e in range(n) if np.array_equal(table[e], np.arange(n)) and np.array_equal(table[:, e], np.arange(n))]
    if not ids:
        raise ValidationError("no identity element")
    e = ids[0]
    inverse = np.full(n, -1, dtype=np.int64)
    for a in range(n):
        hits = np.nonzero(table[a] == e)[0]
        if len(hits) != 1 or table[hits[0], a] != e:
            raise ValidationError(f"element {a} has no two-sided inverse", witness=(a,))
        inverse[a] = hits[0]
    return GroupTable(table, e, inverse, tuple(labels), tuple(embedding))


def subgroups(G, cap=100000):
    """All subgroups of ``G`` as frozensets, ordered by (size, elements)."""
    trivial = frozenset([G.identity])
    found = {trivial}
    frontier = [trivial]
    while frontier:
        nxt = []
        for H in frontier:
            for a in range(G.order):
                if a in H:
                    continue
                K = G.generated(set(H) | {a})
                if K not in found:
                    found.add(K)
                    nxt.append(K)
                    if len(found) > cap:
                        raise CapExceededError("too many subgroups", cap)
        frontier = nxt
    return sorted(found, key=lambda H: (len(H), sorted(H)))


def find_isomorphism(G, H):
    """A bijection ``phi`` (list, ``phi[g]`` in H) that is a group
    isomorphism, or ``None``.

    Backtracks over images of a small generating set, restricted to
    elements of matching order, and extends along the Cayley graph.
    """
    if G.order != H.order:
        return None
    if sorted(G.element_orders()) != sorted(H.element_orders()):
        return None
    gens = G.generators()
    g_orders, h_orders = G.element_orders(), H.element_orders()
    candidates = [[h for h in range(H.order) if h_orders[h] == g_orders[g]] for g in gens]
    for images in product(*candidates):
        phi = _extend(G, H, gens, images)
        if phi is not None:
            return phi
    return None


def _extend(G, H, gens, images):
    phi = {G.identity: H.identity}
    frontier = [G.identity]
    while frontier:
        nxt = []
        for x in frontier:
            for g, h in zip(gens, images):
                y, z = G.mul(x, g), H.mul(phi[x], h)
                if y in phi:
                    if phi[y] != z:
                        return None
                else:
                    phi[y] = z
                    nxt.append(y)
        frontier = nxt
    if len(set(phi.values())) != G.order:
        return None
    out = [phi[g] for g in range(G.order)]
    if not is_homomorphism(G, H, out):
        return None
    return out


def is_homomorphism(G, H, phi):
    phi = np.asarray(phi)
    return bool(np.array_equal(phi[G.table], H.table[np.ix_(phi, phi)]))


def brute_force_isomorphic(G, H):
    """Exhaustive search over all bijections; only for tiny groups."""
    if G.order != H.order:
        return False
    if G.order > 8:
        raise CapExceededError("brute-force isomorphism search limited to order 8", 8)
    return any(is_homomorphism(G, H, list(p)) for p in permutations(range(H.order)))


def cyclic_group(n):
    table = [[(a + b) % n for b in range(n)] for a in range(n)]
    return group_from_table(table, labels=tuple(f"c{a}" for a in range(n)))


def symmetric_group(n):
    """S_n on tuples of images of 0..n-1; product is composition (apply right first)."""
    perms = sorted(permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    table = [[index[tuple(p[q[x]] for x in range(n))] for q in perms] for p in perms]
    labels = tuple("(" + "".join(str(x + 1) for x in p) + ")" for p in perms)
    G = group_from_table(table, labels=labels)
    return G, perms
