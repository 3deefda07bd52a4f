"""Upward closures, filters in E(S), closed inverse subsemigroups and
their conjugacy.

Subsets of a semigroup are passed around as frozensets of element
indices.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

from .core import sigma_quotient
from .errors import CapExceededError, ValidationError
from .groups import subgroups

DEFAULT_SUBSEMIGROUP_CAP = 100000


class Filter(NamedTuple):
    """A filter in E(S); finite filters are principal, so the minimum
    idempotent determines the carrier."""

    minimum: int
    carrier: frozenset


def _carrier(F):
    return F.carrier if isinstance(F, Filter) else frozenset(F)


def up_closure(S, A):
    return S.up(A)


def is_closed(S, A):
    return S.up(A) == frozenset(A)


def is_filter(S, F):
    F = frozenset(F)
    if not F or any(not S.is_idempotent(e) for e in F):
        return False
    E = frozenset(S.idempotents)
    return (S.up(F) & E) == F and S.set_product(F, F) <= F


def enumerate_filters(S):
    """All filters in E(S), one per idempotent.

    Each principal set e-up within E(S) is checked to be a filter, and
    every filter is shown to be principal: a finite filter contains the
    product of all its members, which then lies below all of them.
    """
    E = frozenset(S.idempotents)
    out = []
    for e in S.idempotents:
        carrier = S.up([e]) & E
        if not is_filter(S, carrier):
            raise ValidationError(f"principal set above {S.label(e)} is not a filter", witness=(e,))
        meet = S.product(*sorted(carrier))
        if meet != e:
            raise ValidationError("filter minimum is not the product of its members", witness=(e, meet))
        out.append(Filter(e, carrier))
    return out


def filter_of(S, F):
    """Wrap an idempotent set known to be a filter, recovering its minimum."""
    F = frozenset(F)
    if not is_filter(S, F):
        raise ValidationError("not a filter in E(S)", witness=tuple(sorted(F)))
    return Filter(S.product(*sorted(F)), F)


def idempotent_part(S, A):
    return frozenset(a for a in A if S.is_idempotent(a))


def bar_closure(S, F):
    """The largest closed inverse subsemigroup with idempotents F:
    all s with s^-1 F s and s F s^-1 inside F."""
    F = _carrier(F)
    if not is_filter(S, F):
        raise ValidationError("bar_closure needs a filter in E(S)", witness=tuple(sorted(F)))
    fl = sorted(F)
    t, inv = S.table, S.inverse
    out = []
    for s in range(len(S)):
        si = inv[s]
        conj_in = t[t[si, fl], s]
        conj_out = t[t[s, fl], si]
        if all(int(x) in F for x in conj_in) and all(int(x) in F for x in conj_out):
            out.append(s)
    return frozenset(out)


def filter_up_in_S(S, F):
    """The smallest closed inverse subsemigroup with idempotents F."""
    F = _carrier(F)
    if not is_filter(S, F):
        raise ValidationError("filter_up_in_S needs a filter in E(S)", witness=tuple(sorted(F)))
    return S.up(F)


def is_inverse_subsemigroup(S, A):
    A = frozenset(A)
    return bool(A) and S.set_inverse(A) <= A and S.set_product(A, A) <= A


def is_closed_inverse_subsemigroup(S, A):
    return is_inverse_subsemigroup(S, A) and is_closed(S, A)


def generated_inverse_subsemigroup(S, A):
    """<A>: the inverse subsemigroup generated by A (no upward closure)."""
    m = S.mask(A) | S.mask(S.set_inverse(A))
    if not m.any():
        return frozenset()
    letters = np.nonzero(m)[0]
    while True:
        idx = np.nonzero(m)[0]
        new = m.copy()
        new[S.table[np.ix_(idx, letters)].ravel()] = True
        if np.array_equal(new, m):
            return frozenset(int(x) for x in idx)
        m = new


def closed_closure(S, A):
    """Smallest closed inverse subsemigroup containing A."""
    m = S.mask(A)
    if not m.any():
        raise ValidationError("closure of the empty set is undefined")
    leq = S.leq_matrix
    while True:
        idx = np.nonzero(m)[0]
        new = m.copy()
        new[S.inverse[idx]] = True
        new[S.table[np.ix_(idx, idx)].ravel()] = True
        new = leq[np.nonzero(new)[0]].any(axis=0)
        if np.array_equal(new, m):
            return frozenset(int(x) for x in np.nonzero(m)[0])
        m = new


def _canonical_key(H):
    return (len(H), tuple(sorted(H)))


def enumerate_closed_inverse_subsemigroups(S, cap=DEFAULT_SUBSEMIGROUP_CAP):
    """Every closed inverse subsemigroup of S.

    Starts from the closures of single elements and repeatedly adjoins one
    more element; every closed inverse subsemigroup arises this way, since
    it is the closure of its own elements added one at a time.
    """
    found = {}
    frontier = []
    for s in range(len(S)):
        H = closed_closure(S, [s])
        if H not in found:
            found[H] = None
            frontier.append(H)
    while frontier:
        nxt = []
        for H in frontier:
            for s in range(len(S)):
                if s in H:
                    continue
                K = closed_closure(S, set(H) | {s})
                if K not in found:
                    found[K] = None
                    nxt.append(K)
                    if len(found) > cap:
                        raise CapExceededError(f"more than {cap} closed inverse subsemigroups", cap)
        frontier = nxt
    return sorted(found, key=_canonical_key)


def is_proper(S, H):
    """Proper means the zero (if any) is not in H."""
    return S.zero is None or S.zero not in H


def conjugate_set(S, s, H):
    """(s H s^-1) taken upward."""
    return S.up(S.set_product([s], H, [S.inv(s)]))


def is_conjugate(S, H, K):
    """A witness s with (sHs^-1)^ = K and (s^-1Ks)^ = H, or None."""
    H, K = frozenset(H), frozenset(K)
    for s in range(len(S)):
        if conjugate_set(S, s, H) == K and conjugate_set(S, S.inv(s), K) == H:
            return s
    return None


def conjugacy_classes(S, family):
    """Partition ``family`` (closed inverse subsemigroups) by conjugacy."""
    classes = []
    for H in family:
        for cls in classes:
            if is_conjugate(S, cls[0], H) is not None:
                cls.append(H)
                break
        else:
            classes.append([H])
    return classes


def wide_subsemigroups_vs_subgroups(S, closed_family=None):
    """Pairs (T, subgroup of S/sigma) for the wide closed inverse
    subsemigroups T of S, where T is the full preimage of its subgroup.

    The preimages are cross-checked against the wide members of the
    enumerated closed inverse subsemigroups.
    """
    G, proj = sigma_quotient(S)
    E = frozenset(S.idempotents)
    pairs = []
    for K in subgroups(G):
        T = frozenset(s for s in range(len(S)) if proj[s] in K)
        if not is_closed_inverse_subsemigroup(S, T):
            raise ValidationError("preimage of a subgroup is not a closed inverse subsemigroup")
        image = frozenset(proj[t] for t in T)
        if image != K:
            raise ValidationError("preimage does not map onto its subgroup")
        pairs.append((T, K))
    if closed_family is None:
        closed_family = enumerate_closed_inverse_subsemigroups(S)
    wide = {H for H in closed_family if E <= H}
    if wide != {T for T, _ in pairs}:
        raise ValidationError("wide closed inverse subsemigroups do not match subgroup preimages")
    return pairs
