"""Transitive actions by partial bijections: stabilizers, morphisms,
universal and fundamental actions, strong congruences and action graphs."""

from __future__ import annotations

from itertools import product
from typing import NamedTuple

import numpy as np

from .core import TransitiveAction, schutzenberger_action, sigma_quotient
from .cosets import coset_space_action
from .errors import CapExceededError, ValidationError
from .order import (
    bar_closure,
    idempotent_part,
    is_closed_inverse_subsemigroup,
    is_conjugate,
    wide_subsemigroups_vs_subgroups,
)

BRUTE_FORCE_POINTS = 6

__all__ = [
    "TransitiveAction",
    "schutzenberger_action",
    "coset_space_action",
    "stabilizer",
    "Morphism",
    "equivalent_to_coset_action",
    "actions_equivalent",
    "build_morphism",
    "build_strong_morphism",
    "is_universal",
    "is_fundamental",
    "universal_cover",
    "fundamental_quotient",
    "strong_congruences",
    "ActionGraph",
    "action_graph",
    "check_immersion",
    "check_cover",
]


def stabilizer(X, x=None):
    """{s : s . x = x}, verified to be a closed inverse subsemigroup."""
    H = X.stabilizer(x)
    if not is_closed_inverse_subsemigroup(X.semigroup, H):
        raise ValidationError("stabilizer is not a closed inverse subsemigroup")
    return H


class Morphism:
    """A map of point indices ``mapping[i]`` from ``source`` to ``target``."""

    def __init__(self, source, target, mapping):
        self.source = source
        self.target = target
        self.mapping = tuple(int(m) for m in mapping)

    def __repr__(self):
        return f"Morphism({list(self.mapping)})"

    def __call__(self, x):
        return self.mapping[x]

    def is_morphism(self):
        X, Y, f = self.source.table, self.target.table, np.array(self.mapping)
        dx = X >= 0
        fy = Y[:, f]  # fy[s, x] = s . f(x)
        return bool(np.all(fy[dx] >= 0) and np.all(f[X[dx]] == fy[dx]))

    def is_strong(self):
        X, Y, f = self.source.table, self.target.table, np.array(self.mapping)
        return self.is_morphism() and bool(np.array_equal(X >= 0, Y[:, f] >= 0))

    def is_injective(self):
        return len(set(self.mapping)) == len(self.mapping)

    def is_surjective(self):
        return set(self.mapping) == set(range(len(self.target)))

    def is_bijective(self):
        return self.is_injective() and self.is_surjective()

    def is_equivalence(self):
        return self.is_strong() and self.is_bijective()

    def kernel(self):
        """The partition of source points induced by the map."""
        blocks = {}
        for x, y in enumerate(self.mapping):
            blocks.setdefault(y, []).append(x)
        return _normal_partition(blocks.values())

    def compose(self, other):
        """self after other."""
        return Morphism(other.source, self.target, [self.mapping[y] for y in other.mapping])


def _normal_partition(blocks):
    return tuple(sorted(tuple(sorted(b)) for b in blocks))


def _transporter(X, x):
    """For each point, some element a with a . x equal to it."""
    out = [None] * len(X)
    for a in range(len(X.semigroup)):
        y = X.act(a, x)
        if y is not None and out[y] is None:
            out[y] = a
    if any(a is None for a in out):
        raise ValidationError("action is not transitive")
    return out


def build_morphism(X, x, Y, y):
    """The unique morphism with x -> y, which exists iff S_x is inside S_y."""
    if not X.stabilizer(x) <= Y.stabilizer(y):
        return None
    mapping = [Y.act(a, y) for a in _transporter(X, x)]
    alpha = Morphism(X, Y, mapping)
    if not alpha.is_morphism():
        raise ValidationError("constructed map is not a morphism")
    return alpha


def build_strong_morphism(X, x, Y, y):
    """The unique strong morphism with x -> y; exists iff S_x is inside
    S_y and both have the same idempotents."""
    Sx, Sy = X.stabilizer(x), Y.stabilizer(y)
    S = X.semigroup
    if not Sx <= Sy or idempotent_part(S, Sx) != idempotent_part(S, Sy):
        return None
    alpha = build_morphism(X, x, Y, y)
    if not alpha.is_strong() or not alpha.is_surjective():
        raise ValidationError("constructed map is not a surjective strong morphism")
    return alpha


def all_maps(X, Y, x=None, y=None, strong=False):
    """Every (strong) morphism X -> Y by exhaustive search, optionally
    restricted to those sending x to y."""
    if len(X) > BRUTE_FORCE_POINTS:
        raise CapExceededError(f"exhaustive map search limited to {BRUTE_FORCE_POINTS} points", BRUTE_FORCE_POINTS)
    out = []
    for images in product(range(len(Y)), repeat=len(X)):
        if x is not None and images[x] != y:
            continue
        alpha = Morphism(X, Y, images)
        if alpha.is_strong() if strong else alpha.is_morphism():
            out.append(alpha)
    return out


def equivalent_to_coset_action(X, x=None):
    """An equivalence X -> S/S_x sending x to the coset S_x."""
    x = X.base if x is None else x
    H = stabilizer(X, x)
    Y = coset_space_action(X.semigroup, H)
    alpha = Morphism(X, Y, [Y.act(a, Y.base) for a in _transporter(X, x)])
    if not alpha.is_equivalence():
        raise ValidationError("map to the coset space is not an equivalence")
    return alpha


def actions_equivalent(X, Y):
    """An element conjugating the base stabilizers, or None."""
    return is_conjugate(X.semigroup, X.stabilizer(), Y.stabilizer())


def find_equivalence(X, Y):
    """Exhaustive search for a bijective strong morphism (small actions)."""
    if len(X) != len(Y):
        return None
    if len(X) > BRUTE_FORCE_POINTS:
        raise CapExceededError(f"exhaustive search limited to {BRUTE_FORCE_POINTS} points", BRUTE_FORCE_POINTS)
    from itertools import permutations

    for perm in permutations(range(len(Y))):
        alpha = Morphism(X, Y, perm)
        if alpha.is_strong():
            return alpha
    return None


def _all_points(X, test):
    S = X.semigroup
    for x in range(len(X)):
        H = X.stabilizer(x)
        if not test(S, H, idempotent_part(S, H)):
            return False
    return True


def is_universal(X):
    """Every stabilizer equals F^ for its idempotent filter F."""
    return _all_points(X, lambda S, H, F: H == S.up(F))


def is_fundamental(X):
    """Every stabilizer equals bar(F) for its idempotent filter F."""
    return _all_points(X, lambda S, H, F: H == bar_closure(S, F))


def universal_cover(Y, y=None):
    """(X, alpha): X = S / E(S_y)^ and the strong morphism X -> Y."""
    y = Y.base if y is None else y
    S = Y.semigroup
    H = S.up(idempotent_part(S, Y.stabilizer(y)))
    X = coset_space_action(S, H)
    alpha = build_strong_morphism(X, X.base, Y, y)
    if alpha is None or not is_universal(X):
        raise ValidationError("universal cover construction failed")
    return X, alpha


def fundamental_quotient(Y, y=None):
    """(alpha, Z): Z = S / bar(E(S_y)) and the strong morphism Y -> Z."""
    y = Y.base if y is None else y
    S = Y.semigroup
    H = bar_closure(S, idempotent_part(S, Y.stabilizer(y)))
    Z = coset_space_action(S, H)
    alpha = build_strong_morphism(Y, y, Z, Z.base)
    if alpha is None or not is_fundamental(Z):
        raise ValidationError("fundamental quotient construction failed")
    return alpha, Z


def is_congruence(X, partition, strong=False):
    block = {}
    for i, b in enumerate(partition):
        for x in b:
            block[x] = i
    t = X.table
    for b in partition:
        for x in b:
            for y in b:
                for s in range(len(X.semigroup)):
                    dx, dy = t[s, x] >= 0, t[s, y] >= 0
                    if strong and dx != dy:
                        return False
                    if dx and dy and block[int(t[s, x])] != block[int(t[s, y])]:
                        return False
    return True


def set_partitions(items):
    items = list(items)
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for p in set_partitions(rest):
        yield [[first]] + p
        for i in range(len(p)):
            yield p[:i] + [[first] + p[i]] + p[i + 1:]


def all_strong_congruences(X):
    """Brute force: every partition of the points tested directly."""
    if len(X) > BRUTE_FORCE_POINTS:
        raise CapExceededError(f"partition search limited to {BRUTE_FORCE_POINTS} points", BRUTE_FORCE_POINTS)
    out = [_normal_partition(p) for p in set_partitions(range(len(X))) if is_congruence(X, p, strong=True)]
    return sorted(out)


def quotient_action(X, partition):
    """X modulo a strong congruence, with the natural map."""
    partition = _normal_partition(partition)
    if not is_congruence(X, partition, strong=True):
        raise ValidationError("not a strong congruence")
    block = {x: i for i, b in enumerate(partition) for x in b}
    table = np.full((len(X.semigroup), len(partition)), -1, dtype=np.int64)
    for i, b in enumerate(partition):
        for s in range(len(X.semigroup)):
            y = X.act(s, b[0])
            if y is not None:
                table[s, i] = block[y]
    Q = TransitiveAction(X.semigroup, [tuple(X.points[x] for x in b) for b in partition], table, base=block[X.base])
    Q.points_blocks = partition
    return Q, Morphism(X, Q, [block[x] for x in range(len(X))])


class StrongCongruence(NamedTuple):
    partition: tuple
    subsemigroup: frozenset
    subgroup: frozenset


def strong_congruences(X, x=None):
    """Strong congruences on a universal action, paired with subgroups of
    bar(F)/sigma where S_x = F^.

    Each closed H between F^ and bar(F) is the full preimage of a
    subgroup; the congruence is the kernel of X -> S/H at the base point.
    Sorted by subgroup order then elements.
    """
    x = X.base if x is None else x
    S = X.semigroup
    Sx = X.stabilizer(x)
    F = idempotent_part(S, Sx)
    if Sx != S.up(F):
        raise ValidationError("strong_congruences needs a universal action")
    sub = S.restrict(bar_closure(S, F))
    out = []
    for T, K in wide_subsemigroups_vs_subgroups(sub):
        H = frozenset(sub.parent[t] for t in T)
        Y = coset_space_action(S, H)
        alpha = build_strong_morphism(X, x, Y, Y.base)
        if alpha is None:
            raise ValidationError("no strong morphism onto S/H")
        out.append(StrongCongruence(alpha.kernel(), H, K))
    if len({c.partition for c in out}) != len(out):
        raise ValidationError("distinct subgroups gave the same congruence")
    return out


def local_group_of_filter(S, F):
    """bar(F)/sigma as a group."""
    return sigma_quotient(S.restrict(bar_closure(S, F)))[0]


def point_label(X, i):
    p = X.points[i]
    S = X.semigroup
    if isinstance(p, (int, np.integer)):
        return S.label(int(p))
    if isinstance(p, frozenset):
        return "{" + ",".join(S.label(s) for s in sorted(p)) + "}"
    return str(p)


class ActionGraph:
    """Vertices are points; an edge x -s-> s.x for each defined action.
    The involution sends (x, s, y) to (y, s^-1, x)."""

    node_shape = "ellipse"

    def __init__(self, X, name="action"):
        self.action = X
        self.name = name
        S = X.semigroup
        self.triples = [(x, s, int(X.table[s, x])) for x in range(len(X)) for s in range(len(S)) if X.table[s, x] >= 0]
        self.nodes = [point_label(X, i) for i in range(len(X))]
        self.edges = [(x, y, S.label(s)) for x, s, y in self.triples]

    def star(self, x):
        return [(x, s, y) for (u, s, y) in self.triples if u == x]

    def involution(self, edge):
        x, s, y = edge
        return (y, self.action.semigroup.inv(s), x)

    def check_involution(self):
        edges = set(self.triples)
        return all(self.involution(e) in edges for e in edges)


def action_graph(X):
    return ActionGraph(X)


def _edge_images(X, Y, f):
    images = {}
    for x in range(len(X)):
        for s in range(len(X.semigroup)):
            y = X.act(s, x)
            if y is None:
                continue
            if Y.act(s, f[x]) != f[y]:
                raise ValidationError("vertex map is not label preserving", witness=(x, s))
            images[(x, s, y)] = (f[x], s, f[y])
    return images


def check_immersion(X, Y, f):
    """The induced graph map is injective on every star."""
    f = f.mapping if isinstance(f, Morphism) else tuple(f)
    images = _edge_images(X, Y, f)
    for x in range(len(X)):
        star = [images[(u, s, y)] for (u, s, y) in images if u == x]
        if len(set(star)) != len(star):
            return False
    return True


def check_cover(X, Y, f):
    """The induced graph map is bijective on every star."""
    f = f.mapping if isinstance(f, Morphism) else tuple(f)
    images = _edge_images(X, Y, f)
    GY = ActionGraph(Y)
    for x in range(len(X)):
        star = {images[(u, s, y)] for (u, s, y) in images if u == x}
        if star != set(GY.star(f[x])) or len(star) != sum(1 for (u, _, _) in images if u == x):
            return False
    return True


def factor_through_kernel(alpha):
    """Split a strong morphism as X -> X/ker(alpha) -> Y, the second map
    injective.  Returns (Q, natural map, injection)."""
    if not alpha.is_strong():
        raise ValidationError("factorisation needs a strong morphism")
    Q, nat = quotient_action(alpha.source, alpha.kernel())
    inj = Morphism(Q, alpha.target, [alpha.mapping[b[0]] for b in Q.points_blocks])
    if not inj.is_injective() or not inj.is_strong() or inj.compose(nat).mapping != alpha.mapping:
        raise ValidationError("kernel factorisation does not reconstruct the morphism")
    return Q, nat, inj


def schutzenberger_restriction_check(X, x=None, K=None):
    """Compare S/S_x with the Schutzenberger action of K(S) at the coset
    S_x, restricted to S along s -> s^.  True when the tables agree."""
    from .cosets import build_KS

    S = X.semigroup
    x = X.base if x is None else x
    H = X.stabilizer(x)
    if K is None:
        K = build_KS(S)
    KT = K.as_semigroup(check=False)
    h = K.index(H)
    Z = schutzenberger_action(KT, h)
    Y = coset_space_action(S, H)
    pos = {int(p): i for i, p in enumerate(Z.points)}
    to_z = [pos[K.index(c)] for c in Y.points]
    restricted = Z.table[K.iota][:, to_z]
    mapped = np.where(Y.table >= 0, np.asarray(to_z)[Y.table], -1)
    return bool(np.array_equal(restricted, mapped)) and equivalent_to_coset_action(X, x).is_equivalence()


def orbits(S, table):
    """Split a (possibly intransitive) action table into orbits."""
    table = np.asarray(table)
    seen, out = set(), []
    for x in range(table.shape[1]):
        if x in seen:
            continue
        orbit, todo = {x}, [x]
        while todo:
            y = todo.pop()
            for z in table[:, y]:
                if z >= 0 and int(z) not in orbit:
                    orbit.add(int(z))
                    todo.append(int(z))
        seen |= orbit
        out.append(sorted(orbit))
    return out


def action_to_json(X):
    S = X.semigroup
    moves = [
        {"s": S.label(s), "from": point_label(X, x), "to": point_label(X, int(X.table[s, x]))}
        for s in range(len(S))
        for x in range(len(X))
        if X.table[s, x] >= 0
    ]
    return {"points": [point_label(X, i) for i in range(len(X))], "moves": moves}
