import numpy as np
import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from conftest import corpus
from groupoidal import linalg
from groupoidal.core import semigroup_from_generators, sigma_quotient
from groupoidal.errors import CapExceededError, UnsupportedFieldError, ValidationError
from groupoidal.families import chain, group_semigroup
from groupoidal.fields import PrimeField, Rationals
from groupoidal.groups import cyclic_group, group_from_table, symmetric_group
from groupoidal.partial_perm import all_partial_perms
from groupoidal.reps import (
    GroupRep,
    MatrixRep,
    Transversal,
    decompose_regular,
    group_irreducibles,
    ideal_Ie,
    induce,
    irreducible_representations,
    is_primitive,
    is_simple_module,
    largest_submodule_annihilated_by,
    rees_quotient,
    res_ind_check,
    restrict,
    semilattice_bound_check,
    transversal_factorize,
)

Q = Rationals()


def trivial(G, F=Q):
    return GroupRep(G, F, [F.eye(1)] * G.order, name="trivial")


def sign(G, F=Q):
    return [N for N in group_irreducibles(G, F) if N.dim == 1 and any(N(g)[0, 0] != 1 for g in range(G.order))][0]


def test_transversals(I2, I3, names):
    T, factor = transversal_factorize(I2, names["e1"])
    assert len(T) == 2 and Transversal(I2, names["e1"]).group.order == 1
    for x, (i, g) in factor.items():
        tr = Transversal(I2, names["e1"])
        assert I2.mul(T[i], tr.group.embedding[g]) == x
    e = I3.index("[1,2,0]")
    tr = Transversal(I3, e)
    assert len(tr.T) == 3 and tr.group.order == 2 and len(tr.L) == 6


def test_transversal_of_group_identity():
    S = group_semigroup(cyclic_group(3))
    T, factor = transversal_factorize(S, 0)
    assert T == [0] and factor == {x: (0, x) for x in range(3)}


def test_induce_from_rank_one(I2, names):
    tr = Transversal(I2, names["e1"])
    M = induce(I2, names["e1"], trivial(tr.group))
    assert M.dim == 2
    assert M(names["t"]).tolist() == [[0, 1], [1, 0]]
    assert not np.any(M(names["0"]))


def test_induce_sign_from_identity(I2, names):
    G = Transversal(I2, names["e12"]).group
    M = induce(I2, names["e12"], sign(G))
    assert M.dim == 1
    assert M(names["t"])[0, 0] == -1
    for s in ("0", "e1", "e2", "a12", "a21"):
        assert M(names[s])[0, 0] == 0


def test_induce_at_minimum_factors_through_sigma():
    S = corpus()["Z2+1"]
    e = [f for f in S.idempotents if all(S.leq(f, g) for g in S.idempotents)][0]
    _, proj = sigma_quotient(S)
    tr = Transversal(S, e)
    for N in group_irreducibles(tr.group, Q):
        M = induce(S, e, N)
        assert M.dim == N.dim
        for s in range(len(S)):
            for t in range(len(S)):
                if proj[s] == proj[t]:
                    assert linalg.equal(M(s), M(t))


@pytest.mark.parametrize("name", ["I2", "I3"])
def test_restriction_inverts_induction(name):
    S = corpus()[name]
    for M in irreducible_representations(S, Q):
        out = res_ind_check(S, M.idempotent, M.group_rep, M)
        assert out == {"dimension": True, "character": True, "intertwiner": True}


def test_restriction_to_unit_group(I2, names):
    M = induce(I2, names["e1"], trivial(Transversal(I2, names["e1"]).group))
    R = restrict(M, names["e12"])
    assert R.dim == linalg.rank(Q, M(names["e12"])) == 2
    t_index = R.group.embedding.index(names["t"])
    assert R(t_index).tolist() == [[0, 1], [1, 0]]
    assert restrict(M, names["0"]) is None


def test_ideals_and_quotients(I2, I3, names):
    assert ideal_Ie(I2, names["0"]) == frozenset()
    assert rees_quotient(I2, frozenset()) is I2
    assert ideal_Ie(I2, names["e1"]) == {names["0"]}
    assert len(rees_quotient(I2, ideal_Ie(I2, names["e1"]))) == 7
    e = I3.index("[1,2,0]")
    I = ideal_Ie(I3, e)
    assert I == {s for s in range(len(I3)) if I3.elements[s].rank <= 1}
    R = rees_quotient(I3, I)
    assert len(R) == 34 - 10 + 1
    assert is_primitive(R, R.quotient_map[e])
    with pytest.raises(ValidationError):
        rees_quotient(I2, {names["e1"]})


def test_primitive(I2, names):
    assert is_primitive(I2, names["e1"]) and is_primitive(I2, names["e2"])
    assert not is_primitive(I2, names["e12"])
    assert not is_primitive(I2, names["0"])
    with pytest.raises(ValidationError):
        is_primitive(group_semigroup(cyclic_group(2)), 0)


def test_spinning(I2, names):
    F = PrimeField(5)
    tr = Transversal(I2, names["e1"])
    M = induce(I2, names["e1"], trivial(tr.group, F))
    assert is_simple_module(M) == (True, None)
    one = induce(I2, names["e12"], trivial(Transversal(I2, names["e12"]).group, F))
    assert is_simple_module(one)[0]
    # direct sum of two 1-dimensional reps
    G = Transversal(I2, names["e12"]).group
    a = induce(I2, names["e12"], trivial(G, F))
    b = induce(I2, names["e12"], sign(G, F))
    mats = [np.block([[a(s), np.zeros((1, 1), dtype=np.int64)], [np.zeros((1, 1), dtype=np.int64), b(s)]]) for s in range(7)]
    D = MatrixRep(I2, F, mats)
    simple, W = is_simple_module(D)
    assert not simple and W.shape[1] == 1
    for m in D.matrices:
        assert linalg.rank(F, np.hstack([W, F.matmul(m, W)])) == 1


def test_spinning_needs_finite_field(I2):
    with pytest.raises(UnsupportedFieldError):
        is_simple_module(irreducible_representations(I2, Q)[0])


def test_annihilated_submodule(I2, names):
    for M in irreducible_representations(I2, Q):
        assert largest_submodule_annihilated_by(M, M.idempotent).shape[1] == 0
    top = induce(I2, names["e12"], trivial(Transversal(I2, names["e12"]).group))
    assert top(names["e1"])[0, 0] == 0
    assert largest_submodule_annihilated_by(top, names["e1"]).shape[1] == 1


def test_group_irreducibles_closed_forms():
    G1 = cyclic_group(1)
    assert [N.dim for N in group_irreducibles(G1, Q)] == [1]
    S2, _ = symmetric_group(2)
    chars = sorted(N.character() for N in group_irreducibles(S2, Q))
    assert chars == sorted([(1, 1), (1, -1)])
    S3, _ = symmetric_group(3)
    dims = sorted(N.dim for N in group_irreducibles(S3, Q))
    assert dims == [1, 1, 2] and sum(d * d for d in dims) == 6


def test_group_irreducibles_S4_and_cyclic():
    S4, _ = symmetric_group(4)
    reps = group_irreducibles(S4, Q)
    assert sorted(N.dim for N in reps) == [1, 1, 2, 3, 3]
    assert len({N.character() for N in reps}) == 5
    assert [N.dim for N in group_irreducibles(cyclic_group(3), PrimeField(7))] == [1, 1, 1]
    with pytest.raises(UnsupportedFieldError):
        group_irreducibles(cyclic_group(3), Q)
    with pytest.raises(UnsupportedFieldError):
        group_irreducibles(cyclic_group(3), PrimeField(3))
    with pytest.raises(UnsupportedFieldError):
        group_irreducibles(cyclic_group(4), PrimeField(7))
    with pytest.raises(CapExceededError):
        group_irreducibles(cyclic_group(25), PrimeField(101))


def perm_group(gens, n):
    els, frontier = {tuple(range(n))}, [tuple(range(n))]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = tuple(g[x[i]] for i in range(n))
                if y not in els:
                    els.add(y)
                    nxt.append(y)
        frontier = nxt
    els = sorted(els)
    idx = {p: i for i, p in enumerate(els)}
    return group_from_table([[idx[tuple(a[b[i]] for i in range(n))] for b in els] for a in els])


@pytest.mark.parametrize("gens,p,dims", [
    ([(1, 2, 3, 0), (0, 3, 2, 1)], 5, [1, 1, 1, 1, 2]),  # dihedral of order 8
    ([(1, 2, 0, 3), (1, 0, 3, 2)], 7, [1, 1, 1, 3]),  # alternating A4
])
def test_group_irreducibles_by_regular_decomposition(gens, p, dims):
    G = perm_group(gens, 4)
    F = PrimeField(p)
    reps = group_irreducibles(G, F)
    assert sorted(N.dim for N in reps) == dims
    for N in reps:
        M = MatrixRep(group_semigroup(G), F, N.matrices)
        assert is_simple_module(M)[0]
    with pytest.raises(UnsupportedFieldError):
        group_irreducibles(G, Q)


def test_regular_decomposition_of_S3_matches_specht():
    S3, _ = symmetric_group(3)
    F = PrimeField(7)
    mods = decompose_regular(F, S3.table)
    chars = sorted(tuple(int(np.trace(m)) % 7 for m in mats) for mats in mods)
    expected = sorted(tuple(int(x) for x in N.character()) for N in group_irreducibles(S3, F))
    assert chars == expected


def test_semilattice_bound(I2, names):
    M = induce(I2, names["e1"], trivial(Transversal(I2, names["e1"]).group))
    assert semilattice_bound_check(M)
    images = {tuple(M(e).ravel().tolist()) for e in I2.idempotents}
    assert len(images) == 4
    for S in (I2, corpus()["I3"]):
        for R in irreducible_representations(S, Q):
            assert semilattice_bound_check(R)


def test_max_dim_cap(I3):
    with pytest.raises(CapExceededError):
        irreducible_representations(I3, Q, max_dim=2)


def test_chain_irreducibles_are_characters():
    S = chain(3)
    reps = irreducible_representations(S, Q)
    assert [M.dim for M in reps] == [1, 1, 1]


@st.composite
def generator_sets(draw):
    perms = all_partial_perms(3)
    return draw(st.lists(st.sampled_from(perms), min_size=1, max_size=3))


@settings(max_examples=12, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(generator_sets())
def test_random_semigroups_split_over_gf7(gens):
    S = semigroup_from_generators(gens)
    F = PrimeField(7)
    reps = irreducible_representations(S, F)
    assert sum(M.dim**2 for M in reps) == len(S)
    assert len({M.traces() for M in reps}) == len(reps)
    for M in reps:
        assert is_simple_module(M)[0]
        assert largest_submodule_annihilated_by(M, M.idempotent).shape[1] == 0
