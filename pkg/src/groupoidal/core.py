"""Finite inverse semigroups: construction, validation, Green's relations,
the natural partial order, the minimum group congruence and
Schützenberger actions.

Elements are dense integer indices into a multiplication table.  All
objects are treated as immutable once built.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import CapExceededError, ValidationError
from .groups import group_from_table
from .partial_perm import PartialPerm, compose

DEFAULT_ELEMENT_CAP = 10**6


class FiniteInverseSemigroup:
    """An inverse semigroup on indices 0..n-1.

    Parameters
    ----------
    table : array_like
        ``table[a][b]`` is the index of the product ``ab``.
    inverse : array_like, optional
        Inverse of each element; recovered from the table when omitted.
    labels : sequence of str, optional
    elements : sequence, optional
        Concrete models (e.g. :class:`PartialPerm`) for each index.
    check : bool
        Run the exhaustive associativity check.  Trusted constructors
        (closure of partial permutations) switch it off.
    """

    def __init__(self, table, inverse=None, labels=None, elements=None, check=True, name=None):
        table = np.array(table, dtype=np.int64)
        n = len(table)
        if n == 0 or table.ndim != 2 or table.shape != (n, n):
            raise ValidationError("multiplication table must be a non-empty square array")
        if table.min() < 0 or table.max() >= n:
            raise ValidationError("multiplication table has entries out of range")
        table.setflags(write=False)
        self.table = table
        self.name = name
        self.elements = tuple(elements) if elements is not None else None
        self.labels = tuple(str(x) for x in labels) if labels is not None else tuple(str(i) for i in range(n))
        if len(self.labels) != n:
            raise ValidationError("labels length does not match table size")
        if check:
            _check_associative(table)
        self._check_idempotents_commute()
        if inverse is None:
            inverse = self._recover_inverse()
        inverse = np.array(inverse, dtype=np.int64)
        if inverse.shape != (n,) or inverse.min() < 0 or inverse.max() >= n:
            raise ValidationError("inverse array malformed")
        inverse.setflags(write=False)
        self.inverse = inverse
        self._check_inverse()
        self.zero = self._find_zero()
        self._index = {lab: i for i, lab in enumerate(self.labels)}
        if self.elements is not None:
            self._index.update({x: i for i, x in enumerate(self.elements)})
        if check:
            self._check_order_characterisation()

    # -- validation -----------------------------------------------------

    def _check_idempotents_commute(self):
        t = self.table
        idem = np.nonzero(t[np.arange(len(t)), np.arange(len(t))] == np.arange(len(t)))[0]
        sub = t[np.ix_(idem, idem)]
        bad = np.argwhere(sub != sub.T)
        if len(bad):
            e, f = (int(idem[k]) for k in bad[0])
            raise ValidationError(
                f"idempotents {self.labels[e]} and {self.labels[f]} do not commute", witness=(e, f)
            )

    def _recover_inverse(self):
        t = self.table
        n = len(t)
        out = np.empty(n, dtype=np.int64)
        for s in range(n):
            # u with s u s = s and u s u = u
            sus = t[t[s], s]
            cands = [u for u in np.nonzero(sus == s)[0] if t[t[u, s], u] == u]
            if len(cands) != 1:
                what = "no" if not cands else "more than one"
                raise ValidationError(f"element {self.labels[s]} has {what} generalized inverse", witness=(s,))
            out[s] = cands[0]
        return out

    def _check_inverse(self):
        t, inv = self.table, self.inverse
        idx = np.arange(len(t))
        sts = t[t[idx, inv], idx]
        tst = t[t[inv, idx], inv]
        bad = np.nonzero((sts != idx) | (tst != inv))[0]
        if len(bad):
            s = int(bad[0])
            raise ValidationError(f"inverse of {self.labels[s]} fails s s' s = s or s' s s' = s'", witness=(s,))

    def _find_zero(self):
        t = self.table
        for z in range(len(t)):
            if np.all(t[z] == z) and np.all(t[:, z] == z):
                return z
        return None

    def _check_order_characterisation(self):
        # s <= t  iff  s = t d(s)  iff  s = t e for some idempotent e
        n = len(self)
        alt = np.zeros((n, n), dtype=bool)
        E = np.array(self.idempotents)
        for t in range(n):
            alt[self.table[t, E], t] = True
        if not np.array_equal(alt, self.leq_matrix):
            s, t = (int(v) for v in np.argwhere(alt != self.leq_matrix)[0])
            raise ValidationError("natural order characterisations disagree", witness=(s, t))

    # -- basic structure -------------------------------------------------

    def __len__(self):
        return len(self.table)

    def __repr__(self):
        name = f" {self.name}" if self.name else ""
        return f"<FiniteInverseSemigroup{name} of size {len(self)}>"

    def mul(self, a, b):
        return int(self.table[a, b])

    def product(self, *xs):
        out = xs[0]
        for x in xs[1:]:
            out = int(self.table[out, x])
        return out

    def inv(self, a):
        return int(self.inverse[a])

    def label(self, a):
        return self.labels[a]

    def index(self, key):
        """Index of an element given its label, or its concrete model."""
        if isinstance(key, (int, np.integer)) and not isinstance(key, bool):
            return int(key)
        if isinstance(key, str) and key not in self._index:
            try:
                key = PartialPerm.parse(key)
            except ValidationError:
                pass
        try:
            return self._index[key]
        except KeyError:
            raise KeyError(f"no element {key!r} in {self!r}") from None

    @cached_property
    def d(self):
        idx = np.arange(len(self))
        out = self.table[self.inverse, idx]
        out.setflags(write=False)
        return out

    @cached_property
    def r(self):
        idx = np.arange(len(self))
        out = self.table[idx, self.inverse]
        out.setflags(write=False)
        return out

    @cached_property
    def idempotents(self):
        idx = np.arange(len(self))
        return tuple(int(e) for e in np.nonzero(self.table[idx, idx] == idx)[0])

    def is_idempotent(self, a):
        return self.table[a, a] == a

    @cached_property
    def leq_matrix(self):
        """``leq_matrix[s, t]`` is True iff s <= t in the natural order."""
        n = len(self)
        m = self.table[:, self.d].T == np.arange(n)[:, None]
        m.setflags(write=False)
        return m

    def leq(self, s, t):
        return bool(self.leq_matrix[s, t])

    # -- subsets ---------------------------------------------------------

    def mask(self, A):
        m = np.zeros(len(self), dtype=bool)
        m[list(A)] = True
        return m

    def up(self, A):
        """Upward closure of ``A`` as a frozenset."""
        A = list(A)
        if not A:
            return frozenset()
        return frozenset(int(x) for x in np.nonzero(self.leq_matrix[A].any(axis=0))[0])

    def set_product(self, *sets):
        out = set(sets[0])
        for B in sets[1:]:
            B = list(B)
            out = {int(x) for x in self.table[np.ix_(list(out), B)].ravel()} if out and B else set()
        return frozenset(out)

    def set_inverse(self, A):
        return frozenset(int(self.inverse[a]) for a in A)

    def restrict(self, carrier):
        """The inverse subsemigroup on ``carrier`` as a new semigroup; its
        ``parent`` tuple maps new indices back to this one."""
        elems = sorted(carrier)
        pos = {a: i for i, a in enumerate(elems)}
        try:
            table = [[pos[self.mul(a, b)] for b in elems] for a in elems]
            inverse = [pos[self.inv(a)] for a in elems]
        except KeyError:
            raise ValidationError("carrier is not an inverse subsemigroup") from None
        sub = FiniteInverseSemigroup(table, inverse, labels=[self.labels[a] for a in elems], check=False)
        sub.parent = tuple(elems)
        return sub


def _check_associative(table):
    left = table[table]
    right = table[:, table]
    bad = np.argwhere(left != right)
    if len(bad):
        a, b, c = (int(v) for v in bad[0])
        raise ValidationError(f"multiplication is not associative at ({a}, {b}, {c})", witness=(a, b, c))


# -- constructors ---------------------------------------------------------


def semigroup_from_table(mul, inv=None, labels=None, name=None):
    return FiniteInverseSemigroup(mul, inv, labels=labels, name=name)


def semigroup_from_generators(gens, cap=DEFAULT_ELEMENT_CAP, name=None, check=False):
    """Inverse semigroup of partial permutations generated by ``gens``.

    Elements are sorted by image tuple before being numbered.
    """
    gens = list(gens)
    if not gens:
        raise ValidationError("need at least one generator")
    degree = gens[0].degree
    if any(g.degree != degree for g in gens):
        raise ValidationError("generators have different degrees")
    letters = list(dict.fromkeys(gens + [g.inverse() for g in gens]))
    seen = set(letters)
    frontier = list(letters)
    while frontier:
        nxt = []
        for x in frontier:
            for g in letters:
                y = compose(x, g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
                    if len(seen) > cap:
                        raise CapExceededError(f"closure exceeds {cap} elements", cap)
        frontier = nxt
    elems = sorted(seen)
    pos = {x: i for i, x in enumerate(elems)}
    table = [[pos[compose(x, y)] for y in elems] for x in elems]
    inverse = [pos[x.inverse()] for x in elems]
    return FiniteInverseSemigroup(table, inverse, labels=[str(x) for x in elems], elements=elems, check=check, name=name)


# -- element-level operations -----------------------------------------------


def d_of(S, s):
    return int(S.d[s])


def r_of(S, s):
    return int(S.r[s])


def natural_leq(S, s, t):
    return S.leq(s, t)


@dataclass(frozen=True)
class GreenData:
    d: np.ndarray
    r: np.ndarray
    L: list
    R: list
    H: list
    D: list
    J: list

    def class_of(self, relation, s):
        for block in getattr(self, relation):
            if s in block:
                return block
        raise KeyError(s)


def _partition(keys):
    blocks = {}
    for s, k in enumerate(keys):
        blocks.setdefault(k, []).append(s)
    return sorted((frozenset(b) for b in blocks.values()), key=min)


def principal_ideal(S, s):
    """S^1 s S^1 as a boolean mask."""
    t = S.table
    m = np.zeros(len(S), dtype=bool)
    m[s] = True
    m[t[:, s]] = True
    m[t[s, :]] = True
    m[t[t[:, s], :].ravel()] = True
    return m


def green_data(S):
    d, r = S.d, S.r
    n = len(S)
    # e ~ f iff some a has d(a) = e and r(a) = f; this is already an equivalence
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a in range(n):
        ra, rb = find(int(d[a])), find(int(r[a]))
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    D_keys = [find(int(d[s])) for s in range(n)]
    ideals = [principal_ideal(S, s).tobytes() for s in range(n)]
    return GreenData(
        d=d,
        r=r,
        L=_partition(d.tolist()),
        R=_partition(r.tolist()),
        H=_partition(list(zip(d.tolist(), r.tolist()))),
        D=_partition(D_keys),
        J=_partition(ideals),
    )


def maximal_subgroup(S, e):
    """The H-class of idempotent ``e`` as a group, with ``embedding`` into S."""
    if not S.is_idempotent(e):
        raise ValidationError(f"{S.label(e)} is not idempotent", witness=(e,))
    elems = [s for s in range(len(S)) if S.d[s] == e and S.r[s] == e]
    pos = {a: i for i, a in enumerate(elems)}
    table = [[pos[S.mul(a, b)] for b in elems] for a in elems]
    return group_from_table(table, labels=[S.label(a) for a in elems], embedding=elems)


def sigma_classes(S):
    """Classes of the minimum group congruence: a ~ b iff they share a lower bound."""
    leq = S.leq_matrix.astype(np.int64)
    related = (leq.T @ leq) > 0
    n = len(S)
    cls = [-1] * n
    blocks = []
    for a in range(n):
        if cls[a] >= 0:
            continue
        block = [int(b) for b in np.nonzero(related[a])[0]]
        for b in block:
            if cls[b] >= 0:
                raise ValidationError("common-lower-bound relation is not transitive", witness=(a, b))
            cls[b] = len(blocks)
        blocks.append(frozenset(block))
    return blocks, cls


def sigma_quotient(S):
    """``(G, projection)`` with G = S/sigma and ``projection[s]`` the class of s."""
    blocks, cls = sigma_classes(S)
    reps = [min(b) for b in blocks]
    table = [[cls[S.mul(a, b)] for b in reps] for a in reps]
    G = group_from_table(table, labels=[S.label(a) for a in reps], embedding=reps)
    return G, tuple(cls)


# -- actions -------------------------------------------------------------------


class TransitiveAction:
    """A partial action of S on a finite point set.

    ``table[s, x]`` is the index of ``s . x`` or -1 when undefined.
    ``base`` is a distinguished point (index).
    """

    def __init__(self, semigroup, points, table, base=0, check=True):
        self.semigroup = semigroup
        self.points = tuple(points)
        table = np.array(table, dtype=np.int64).reshape(len(semigroup), len(self.points))
        table.setflags(write=False)
        self.table = table
        self.base = base
        if check:
            self.check_axioms()
            if not self.is_transitive():
                raise ValidationError("action is not transitive")

    def __len__(self):
        return len(self.points)

    def __repr__(self):
        return f"<TransitiveAction on {len(self)} points>"

    def act(self, s, x):
        y = int(self.table[s, x])
        return None if y < 0 else y

    def defined(self, s, x):
        return self.table[s, x] >= 0

    def stabilizer(self, x=None):
        x = self.base if x is None else x
        return frozenset(int(s) for s in np.nonzero(self.table[:, x] == x)[0])

    def domain_of_point(self, x):
        return frozenset(int(s) for s in np.nonzero(self.table[:, x] >= 0)[0])

    def check_axioms(self):
        S, t = self.semigroup, self.table
        m = len(self.points)
        for e in S.idempotents:
            row = t[e]
            bad = np.nonzero((row >= 0) & (row != np.arange(m)))[0]
            if len(bad):
                raise ValidationError(f"(A1) fails: idempotent {S.label(e)} moves point {int(bad[0])}", witness=(e, int(bad[0])))
        ext = np.hstack([t, np.full((len(S), 1), -1, dtype=np.int64)])
        lhs = t[S.table]
        rhs = ext[:, t]
        bad = np.argwhere(lhs != rhs)
        if len(bad):
            s, u, x = (int(v) for v in bad[0])
            raise ValidationError(f"(A2) fails for ({S.label(s)}, {S.label(u)}) at point {x}", witness=(s, u, x))

    def orbit(self, x):
        col = self.table[:, x]
        return frozenset(int(y) for y in col[col >= 0])

    def is_effective(self):
        return bool(np.all((self.table >= 0).any(axis=0)))

    def is_transitive(self):
        return self.is_effective() and len(self.orbit(0)) == len(self.points)


def schutzenberger_action(S, e):
    """S acting on the L-class of ``e`` by left multiplication, where
    ``a . x`` is defined iff d(ax) = e."""
    if not S.is_idempotent(e):
        raise ValidationError(f"{S.label(e)} is not idempotent", witness=(e,))
    points = [int(x) for x in np.nonzero(S.d == e)[0]]
    pos = {x: i for i, x in enumerate(points)}
    table = np.full((len(S), len(points)), -1, dtype=np.int64)
    for a in range(len(S)):
        for i, x in enumerate(points):
            ax = S.mul(a, x)
            if S.d[ax] == e:
                table[a, i] = pos[ax]
    return TransitiveAction(S, points, table, base=pos[e])
