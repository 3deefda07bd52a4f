"""Atlases and cosets, the coset semigroup K(S) and its inverse
subsemigroup L(S) of directed cosets."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .core import FiniteInverseSemigroup, TransitiveAction
from .errors import CapExceededError, ValidationError
from .order import (
    enumerate_closed_inverse_subsemigroups,
    enumerate_filters,
    generated_inverse_subsemigroup,
    is_closed_inverse_subsemigroup,
)

DEFAULT_MAX_COSETS = 20000
DEFAULT_TABLE_THRESHOLD = 2000


@dataclass(frozen=True)
class Coset:
    """A closed atlas, i.e. (rep H) taken upward, with d(rep) in H.

    ``subgroup`` is the closed inverse subsemigroup H (recoverable from the
    carrier as (A^-1 A) upward) and ``rep`` the least element index.
    """

    carrier: frozenset
    subgroup: frozenset
    rep: int

    def __len__(self):
        return len(self.carrier)

    def __contains__(self, s):
        return s in self.carrier

    def key(self):
        return tuple(sorted(self.carrier))


def is_atlas(S, A):
    A = frozenset(A)
    if not A:
        return False
    return S.set_product(A, S.set_inverse(A), A) == A


def coset_from_carrier(S, A):
    """Wrap a closed atlas, validating it and recovering (H, rep)."""
    A = frozenset(A)
    if not is_atlas(S, A) or S.up(A) != A:
        raise ValidationError("set is not a closed atlas", witness=tuple(sorted(A)))
    H = S.up(S.set_product(S.set_inverse(A), A))
    rep = min(A)
    if S.up(S.set_product([rep], H)) != A:
        raise ValidationError("coset does not regenerate from its canonical pair", witness=tuple(sorted(A)))
    return Coset(A, H, rep)


def left_coset(S, s, H):
    """(sH) upward; requires d(s) in H."""
    H = frozenset(H)
    if int(S.d[s]) not in H:
        raise ValidationError(f"d({S.label(s)}) is not in H", witness=(s,))
    carrier = S.up(S.set_product([s], H))
    return Coset(carrier, H, min(carrier))


def cosets_equal(S, s, t, H):
    """(sH)^ == (tH)^ via the s^-1 t in H test."""
    return S.mul(S.inv(s), t) in frozenset(H)


def cosets_of(S, H):
    """All left cosets of H, sorted by carrier."""
    H = frozenset(H)
    seen = {}
    for s in range(len(S)):
        if int(S.d[s]) in H:
            C = left_coset(S, s, H)
            seen.setdefault(C.carrier, C)
    return sorted(seen.values(), key=Coset.key)


def coset_space_action(S, H):
    """S acting on S/H by a . (sH)^ = (asH)^ when d(as) is in H.
    The base point is the coset H itself."""
    H = frozenset(H)
    if not is_closed_inverse_subsemigroup(S, H):
        raise ValidationError("H is not a closed inverse subsemigroup", witness=tuple(sorted(H)))
    cosets = cosets_of(S, H)
    pos = {C.carrier: i for i, C in enumerate(cosets)}
    table = [[-1] * len(cosets) for _ in range(len(S))]
    for i, C in enumerate(cosets):
        for a in range(len(S)):
            results = set()
            for s in C.carrier:
                as_ = S.mul(a, s)
                if int(S.d[as_]) in H:
                    results.add(pos[S.up(S.set_product([as_], H))])
            if len(results) > 1:
                raise ValidationError("coset action is not well defined", witness=(a, i))
            # definedness must not depend on the representative
            if results and any(int(S.d[S.mul(a, s)]) not in H for s in C.carrier):
                raise ValidationError("coset action definedness depends on representative", witness=(a, i))
            if results:
                table[a][i] = results.pop()
    X = TransitiveAction(S, [C.carrier for C in cosets], table, base=pos[H])
    X.cosets = cosets
    return X


def smallest_coset_containing(S, X):
    """Close X under upward closure and A -> A A^-1 A until stable."""
    A = frozenset(X)
    if not A:
        raise ValidationError("empty set lies in no coset")
    while True:
        B = S.up(S.set_product(A, S.set_inverse(A), A) | A)
        if B == A:
            return A
        A = B


def intersection_of_containing_cosets(cosets, X):
    """Oracle: intersect every coset (carrier) that contains X."""
    X = frozenset(X)
    out = None
    for C in cosets:
        carrier = C.carrier if isinstance(C, Coset) else C
        if X <= carrier:
            out = carrier if out is None else out & carrier
    return out


def kos_meet(S, cosets):
    """Meet in K(S), whose order is reverse inclusion: the smallest coset
    containing every input carrier."""
    cosets = list(cosets)
    if not cosets:
        raise ValidationError("meet of an empty family")
    union = frozenset().union(*(C.carrier if isinstance(C, Coset) else frozenset(C) for C in cosets))
    return coset_from_carrier(S, smallest_coset_containing(S, union))


def coset_product(S, X, Y):
    """X (x) Y = (ab <b^-1 H b, K>)^ for X = (aH)^ and Y = (bK)^."""
    a, H, b, K = X.rep, X.subgroup, Y.rep, Y.subgroup
    conj = S.set_product([S.inv(b)], H, [b])
    gen = generated_inverse_subsemigroup(S, conj | K)
    return S.up(S.set_product([S.mul(a, b)], gen))


def is_directed(S, A):
    A = list(A)
    if not A:
        raise ValidationError("directedness of the empty set is undefined")
    leq = S.leq_matrix
    for i, a in enumerate(A):
        for b in A[i + 1:]:
            if not any(leq[c, a] and leq[c, b] for c in A):
                return False
    return True


def coinitial(S, A, B):
    """A and B are mutually coinitial: each element of one lies above some
    element of the other."""
    leq = S.leq_matrix
    return all(any(leq[a, b] for a in A) for b in B) and all(any(leq[b, a] for b in B) for a in A)


def normalize_directed_subset(S, A):
    """The coset A^ representing the coinitiality class of a directed set."""
    if not is_directed(S, A):
        raise ValidationError("subset is not directed", witness=tuple(sorted(A)))
    return coset_from_carrier(S, S.up(A))


def natural_minimum(S, A):
    """The least element of A in the natural order, or None."""
    leq = S.leq_matrix
    for a in sorted(A):
        if all(leq[a, b] for b in A):
            return a
    return None


class CosetSemigroup:
    """K(S), or an inverse subsemigroup of it, on a list of cosets.

    Products are computed on demand and memoised; ``table`` materialises
    the full multiplication table when the size allows.
    """

    def __init__(self, S, cosets, product_rule, kind="K", table_threshold=DEFAULT_TABLE_THRESHOLD):
        self.S = S
        self.cosets = list(cosets)
        self.kind = kind
        self._index = {C.carrier: i for i, C in enumerate(self.cosets)}
        self._rule = product_rule
        self._memo = {}
        self.table_threshold = table_threshold
        self.iota = [self.index(S.up([s])) for s in range(len(S))]

    def __len__(self):
        return len(self.cosets)

    def __repr__(self):
        return f"<CosetSemigroup {self.kind}(S) with {len(self)} cosets>"

    def index(self, carrier):
        try:
            return self._index[frozenset(carrier)]
        except KeyError:
            raise ValidationError("set is not an element of this coset semigroup", witness=tuple(sorted(carrier))) from None

    def product(self, i, j):
        key = (i, j)
        if key not in self._memo:
            self._memo[key] = self.index(self._rule(self.S, self.cosets[i], self.cosets[j]))
        return self._memo[key]

    def inverse(self, i):
        return self.index(self.S.set_inverse(self.cosets[i].carrier))

    def label(self, i):
        carrier = self.cosets[i].carrier
        m = natural_minimum(self.S, carrier)
        if m is not None:
            return self.S.label(m) + "^"
        return "{" + ",".join(self.S.label(s) for s in sorted(carrier)) + "}"

    @cached_property
    def table(self):
        n = len(self)
        if n > self.table_threshold:
            raise CapExceededError(f"{n} cosets exceed the table threshold {self.table_threshold}", self.table_threshold)
        return [[self.product(i, j) for j in range(n)] for i in range(n)]

    def as_semigroup(self, check=True):
        """The coset semigroup as a validated :class:`FiniteInverseSemigroup`."""
        T = FiniteInverseSemigroup(
            self.table,
            [self.inverse(i) for i in range(len(self))],
            labels=[self.label(i) for i in range(len(self))],
            check=check,
            name=f"{self.kind}({self.S.name or 'S'})",
        )
        return T

    def idempotent_indices(self):
        return [i for i in range(len(self)) if self.product(i, i) == i]

    def leq(self, i, j):
        """Natural order: reverse inclusion of carriers."""
        return self.cosets[j].carrier <= self.cosets[i].carrier


def enumerate_cosets(S, max_cosets=DEFAULT_MAX_COSETS, closed_family=None):
    if closed_family is None:
        closed_family = enumerate_closed_inverse_subsemigroups(S)
    out = []
    for H in closed_family:
        out.extend(cosets_of(S, H))
        if len(out) > max_cosets:
            raise CapExceededError(f"more than {max_cosets} cosets", max_cosets)
    return sorted(out, key=lambda C: (len(C), C.key()))


def build_KS(S, max_cosets=DEFAULT_MAX_COSETS, verify=False, table_threshold=DEFAULT_TABLE_THRESHOLD):
    """The coset semigroup K(S).

    With ``verify`` every product from the generation formula is compared
    with the intersection of all cosets containing AB.
    """
    cosets = enumerate_cosets(S, max_cosets)
    K = CosetSemigroup(S, cosets, coset_product, kind="K", table_threshold=table_threshold)
    if verify:
        for i, X in enumerate(cosets):
            for j, Y in enumerate(cosets):
                oracle = intersection_of_containing_cosets(cosets, S.set_product(X.carrier, Y.carrier))
                if K.cosets[K.product(i, j)].carrier != oracle:
                    raise ValidationError("coset product disagrees with intersection oracle", witness=(i, j))
    return K


def directed_product(S, X, Y):
    return S.up(S.set_product(X.carrier, Y.carrier))


def build_LS(S, table_threshold=DEFAULT_TABLE_THRESHOLD):
    """L(S): the directed cosets, which are the cosets of F^ for filters F.

    The product is (AB)^.  For finite S every directed coset has a least
    element, and the attribute ``certificate`` records that s -> s^ is a
    bijective homomorphism S -> L(S).
    """
    cosets = []
    for F in enumerate_filters(S):
        H = S.up(F.carrier)
        for C in cosets_of(S, H):
            if not is_directed(S, C.carrier):
                raise ValidationError("coset of a directed subsemigroup is not directed", witness=C.key())
            cosets.append(C)
    cosets.sort(key=lambda C: (len(C), C.key()))
    L = CosetSemigroup(S, cosets, directed_product, kind="L", table_threshold=table_threshold)
    L.certificate = iota_certificate(S, L)
    return L


def iota_certificate(S, L):
    n = len(S)
    minima = [natural_minimum(S, C.carrier) for C in L.cosets]
    injective = len(set(L.iota)) == n
    surjective = sorted(L.iota) == list(range(len(L)))
    homomorphism = all(L.product(L.iota[s], L.iota[t]) == L.iota[S.mul(s, t)] for s in range(n) for t in range(n))
    cert = {
        "has_minimum": all(m is not None for m in minima),
        "injective": injective,
        "surjective": surjective,
        "homomorphism": homomorphism,
    }
    cert["isomorphism"] = all(cert.values())
    return cert


def meet_decomposition(S, A):
    """Split a coset into its blocks under a ~ b iff some c in A lies
    below both.  Each block is a directed coset; all blocks share the
    same d- and r-idempotents K = E(H)^ and L = (aKa^-1)^ in L(S)."""
    C = A if isinstance(A, Coset) else coset_from_carrier(S, A)
    leq = S.leq_matrix
    elems = sorted(C.carrier)
    blocks = []
    assigned = set()
    for a in elems:
        if a in assigned:
            continue
        block = frozenset(b for b in elems if any(leq[c, a] and leq[c, b] for c in elems))
        assigned |= block
        blocks.append(block)
    if sum(len(b) for b in blocks) != len(C.carrier):
        raise ValidationError("common-lower-bound relation is not an equivalence on the coset")
    F = frozenset(h for h in C.subgroup if S.is_idempotent(h))
    K = S.up(F)
    Lr = S.up(S.set_product([C.rep], K, [S.inv(C.rep)]))
    out = []
    for block in blocks:
        if not is_directed(S, block) or S.up(block) != block:
            raise ValidationError("meet block is not a directed closed set", witness=tuple(sorted(block)))
        dom = S.up(S.set_product(S.set_inverse(block), block))
        ran = S.up(S.set_product(block, S.set_inverse(block)))
        if dom != K or ran != Lr:
            raise ValidationError("meet blocks are not H-related in L(S)", witness=tuple(sorted(block)))
        out.append(coset_from_carrier(S, block))
    if kos_meet(S, out).carrier != C.carrier:
        raise ValidationError("meet of blocks does not reconstruct the coset")
    return out
