from itertools import product
from math import comb, factorial

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import corpus, small_corpus
from groupoidal.core import (
    FiniteInverseSemigroup,
    green_data,
    maximal_subgroup,
    schutzenberger_action,
    semigroup_from_generators,
    sigma_quotient,
)
from groupoidal.errors import ValidationError
from groupoidal.families import inverse_symmetric
from groupoidal.partial_perm import PartialPerm, all_partial_perms


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_inverse_symmetric_matches_enumeration(n):
    S = inverse_symmetric(n)
    brute = all_partial_perms(n)
    assert len(S) == len(brute) == sum(comb(n, k) ** 2 * factorial(k) for k in range(n + 1))
    assert set(S.elements) == set(brute)
    assert len(S.idempotents) == sum(1 for f in brute if f.is_idempotent()) == 2**n


def test_generators_of_I2(I2):
    S = semigroup_from_generators([PartialPerm.parse("[2,1]"), PartialPerm.parse("[2,0]")])
    assert len(S) == 7


def test_d_and_r(I2, names):
    assert I2.d[names["a12"]] == names["e1"]
    assert I2.r[names["a12"]] == names["e2"]


def test_order_examples(I2, names):
    assert I2.leq(names["e1"], names["e12"])
    assert not I2.leq(names["e12"], names["t"])


def test_non_associative_table_names_triple():
    with pytest.raises(ValidationError) as info:
        FiniteInverseSemigroup([[0, 1, 2], [1, 2, 0], [2, 0, 0]])
    assert len(info.value.witness) == 3


def test_non_commuting_idempotents_rejected():
    # left-zero band: ab = a, both idempotent, ab != ba
    with pytest.raises(ValidationError) as info:
        FiniteInverseSemigroup([[0, 0], [1, 1]])
    assert set(info.value.witness) == {0, 1}


def brute_leq(S):
    n = len(S)
    out = np.zeros((n, n), dtype=bool)
    for s, t in product(range(n), repeat=2):
        out[s, t] = any(S.mul(e, t) == s for e in S.idempotents)
    return out


@pytest.mark.parametrize("name", list(corpus()))
def test_natural_order(name):
    S = corpus()[name]
    leq = S.leq_matrix
    assert np.array_equal(leq, brute_leq(S))
    n = len(S)
    assert leq.diagonal().all()
    assert not np.any(leq & leq.T & ~np.eye(n, dtype=bool))
    assert np.array_equal((leq.astype(int) @ leq.astype(int) > 0), leq)
    for s, t in product(range(n), repeat=2):
        st_ = S.mul(s, t)
        assert leq[S.d[st_], S.d[t]] and leq[S.r[st_], S.r[s]]


def left_ideal(S, a):
    return frozenset([a]) | frozenset(int(x) for x in S.table[:, a])


def right_ideal(S, a):
    return frozenset([a]) | frozenset(int(x) for x in S.table[a, :])


def two_sided(S, a):
    return frozenset(S.mul(S.mul(x, y), z) for x in range(len(S)) for y in [a] for z in range(len(S))) | left_ideal(S, a) | right_ideal(S, a)


def classes(n, rel):
    out = []
    for a in range(n):
        for c in out:
            if rel(a, next(iter(c))):
                c.add(a)
                break
        else:
            out.append({a})
    return sorted((frozenset(c) for c in out), key=min)


@pytest.mark.parametrize("name", list(corpus()))
def test_green_relations_match_ideals(name):
    S = corpus()[name]
    n = len(S)
    gd = green_data(S)
    L = classes(n, lambda a, b: left_ideal(S, a) == left_ideal(S, b))
    R = classes(n, lambda a, b: right_ideal(S, a) == right_ideal(S, b))
    J = classes(n, lambda a, b: two_sided(S, a) == two_sided(S, b))
    H = classes(n, lambda a, b: left_ideal(S, a) == left_ideal(S, b) and right_ideal(S, a) == right_ideal(S, b))
    # D = L o R
    D = classes(n, lambda a, b: any(left_ideal(S, a) == left_ideal(S, c) and right_ideal(S, c) == right_ideal(S, b) for c in range(n)))
    assert gd.L == L and gd.R == R and gd.H == H and gd.D == D and gd.J == J


def test_d_class_counts(I2, I3):
    assert len(green_data(I2).D) == 3
    gd = green_data(I3)
    assert len(gd.D) == 4
    rank2 = gd.class_of("D", I3.index("[1,2,0]"))
    assert sum(1 for s in rank2 if I3.is_idempotent(s)) == 3


def test_maximal_subgroups(I2, I3, names):
    assert maximal_subgroup(I2, names["e12"]).order == 2
    assert maximal_subgroup(I2, names["e1"]).order == 1
    assert maximal_subgroup(I3, I3.index("[1,2,3]")).order == 6


def brute_sigma(S):
    """Least congruence identifying all idempotents, by closure."""
    n = len(S)
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    def union(a, b):
        a, b = find(a), find(b)
        if a != b:
            parent[max(a, b)] = min(a, b)
            return True
        return False

    E = S.idempotents
    for e in E:
        union(e, E[0])
    changed = True
    while changed:
        changed = False
        for a, b in product(range(n), repeat=2):
            if find(a) == find(b):
                for c in range(n):
                    changed |= union(S.mul(a, c), S.mul(b, c))
                    changed |= union(S.mul(c, a), S.mul(c, b))
    return classes(n, lambda a, b: find(a) == find(b))


@pytest.mark.parametrize("name", list(small_corpus()))
def test_sigma_is_least_group_congruence(name):
    S = small_corpus()[name]
    G, proj = sigma_quotient(S)
    mine = classes(len(S), lambda a, b: proj[a] == proj[b])
    assert mine == brute_sigma(S)
    leq = S.leq_matrix
    assert all(proj[s] == proj[t] for s, t in zip(*np.nonzero(leq)))


def test_sigma_quotient_of_group_with_identity():
    S = corpus()["Z2+1"]
    G, _ = sigma_quotient(S)
    assert G.order == 2
    assert sigma_quotient(corpus()["I2"])[0].order == 1


@pytest.mark.parametrize("name", list(corpus()))
def test_schutzenberger_axioms(name):
    S = corpus()[name]
    for e in S.idempotents:
        X = schutzenberger_action(S, e)  # axioms checked on construction
        assert X.is_transitive()
        assert sorted(X.points) == [s for s in range(len(S)) if S.d[s] == e]


def test_schutzenberger_points_I2(I2, names):
    assert set(schutzenberger_action(I2, names["e12"]).points) == {names["e12"], names["t"]}
    assert set(schutzenberger_action(I2, names["e1"]).points) == {names["e1"], names["a12"]}


@st.composite
def generator_sets(draw):
    n = draw(st.integers(1, 3))
    perms = all_partial_perms(n)
    return draw(st.lists(st.sampled_from(perms), min_size=1, max_size=3))


@settings(max_examples=30, deadline=None)
@given(generator_sets())
def test_generated_semigroups_are_inverse(gens):
    S = semigroup_from_generators(gens, check=True)
    for s in range(len(S)):
        assert S.mul(S.mul(s, S.inv(s)), s) == s
    E = S.idempotents
    assert all(S.mul(e, f) == S.mul(f, e) for e in E for f in E)
