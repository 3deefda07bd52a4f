"""Representations over exact fields: induction and restriction along an
idempotent, simplicity by spinning, group irreducibles and the list of
all irreducible representations of a finite inverse semigroup."""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations, product
from math import factorial, isqrt

import numpy as np

from . import linalg
from .core import FiniteInverseSemigroup, green_data, maximal_subgroup, principal_ideal
from .errors import CapExceededError, UnsupportedFieldError, ValidationError
from .fields import PrimeField, Rationals, field_name
from .groups import find_isomorphism, symmetric_group

DEFAULT_MAX_DIM = 64
MAX_GROUP_ORDER = 24
SPIN_EXHAUSTIVE_LIMIT = 10**5
VERIFICATION_PRIMES = (5, 7)


class MatrixRep:
    """``matrices[s]`` for each element index s of ``semigroup``."""

    def __init__(self, semigroup, field, matrices, contracted=False, check=True, info=None):
        self.semigroup = semigroup
        self.field = field
        self.matrices = [np.asarray(m) for m in matrices]
        self.dim = self.matrices[0].shape[0] if self.matrices else 0
        self.contracted = contracted
        self.info = dict(info or {})
        if check:
            self.check()

    def __repr__(self):
        return f"<MatrixRep dim {self.dim} over {self.field!r}>"

    def __call__(self, s):
        return self.matrices[s]

    def check(self):
        S, F = self.semigroup, self.field
        for s in range(len(S)):
            for t in range(len(S)):
                if not linalg.equal(F.matmul(self.matrices[s], self.matrices[t]), self.matrices[S.mul(s, t)]):
                    raise ValidationError("representation is not multiplicative", witness=(s, t))
        if self.contracted and S.zero is not None and np.any(self.matrices[S.zero] != 0):
            raise ValidationError("zero does not act as the zero matrix")

    def traces(self):
        return tuple(self.field.reduce(np.trace(m)) if self.dim else 0 for m in self.matrices)

    def reduce_mod(self, p):
        F = PrimeField(p)
        return MatrixRep(self.semigroup, F, [F.array(m) for m in self.matrices], self.contracted, info=self.info)

    def to_json(self):
        S, F = self.semigroup, self.field
        return {
            "field": field_name(F),
            "dim": int(self.dim),
            "matrices": {S.label(s): [[F.pair(x) for x in row] for row in m] for s, m in enumerate(self.matrices)},
        }


class GroupRep:
    """``matrices[g]`` for each element of a GroupTable."""

    def __init__(self, group, field, matrices, check=True, name=None):
        self.group = group
        self.field = field
        self.matrices = [np.asarray(m) for m in matrices]
        self.dim = self.matrices[0].shape[0]
        self.name = name
        if check:
            self.check()

    def __repr__(self):
        return f"<GroupRep {self.name or ''} dim {self.dim} over {self.field!r}>"

    def __call__(self, g):
        return self.matrices[g]

    def check(self):
        G, F = self.group, self.field
        if not linalg.equal(self.matrices[G.identity], F.eye(self.dim)):
            raise ValidationError("identity does not act as the identity matrix")
        for a in range(G.order):
            for b in range(G.order):
                if not linalg.equal(F.matmul(self.matrices[a], self.matrices[b]), self.matrices[G.mul(a, b)]):
                    raise ValidationError("group representation is not multiplicative", witness=(a, b))

    def character(self):
        return tuple(self.field.reduce(np.trace(m)) for m in self.matrices)


# -- Green's machinery ---------------------------------------------------------


class Transversal:
    """One element per H-class of L_e and the factorisation x = t g."""

    def __init__(self, S, e):
        if not S.is_idempotent(e):
            raise ValidationError(f"{S.label(e)} is not idempotent", witness=(e,))
        self.S, self.e = S, e
        self.group = maximal_subgroup(S, e)
        self.L = [int(x) for x in np.nonzero(S.d == e)[0]]
        reps = {}
        for x in self.L:
            reps.setdefault(int(S.r[x]), x)
        self.T = sorted(reps.values())
        self._t_of_r = {int(S.r[t]): i for i, t in enumerate(self.T)}
        self._g_index = {s: i for i, s in enumerate(self.group.embedding)}

    def factor(self, x):
        """(i, g): x = T[i] * g with g an index into the group."""
        S = self.S
        if int(S.d[x]) != self.e:
            raise ValidationError(f"{S.label(x)} is not in L_e", witness=(x,))
        i = self._t_of_r[int(S.r[x])]
        g = S.mul(S.inv(self.T[i]), x)
        if S.mul(self.T[i], g) != x:
            raise ValidationError("factorisation failed", witness=(x,))
        return i, self._g_index[g]


def transversal_factorize(S, e):
    tr = Transversal(S, e)
    return tr.T, {x: tr.factor(x) for x in tr.L}


def induce(S, e, N, max_dim=DEFAULT_MAX_DIM, transversal=None):
    """Ind_e(N) on the basis T x basis(N).

    s sends t (x) n to t' (x) g n when st = t'g lies in L_e and to 0
    otherwise.
    """
    tr = transversal or Transversal(S, e)
    F, k = N.field, N.dim
    dim = len(tr.T) * k
    if dim > max_dim:
        raise CapExceededError(f"induced module of dimension {dim} exceeds cap {max_dim}", max_dim)
    mats = []
    for s in range(len(S)):
        M = F.zeros((dim, dim))
        for i, t in enumerate(tr.T):
            x = S.mul(s, t)
            if int(S.d[x]) == e:
                j, g = tr.factor(x)
                M[j * k:(j + 1) * k, i * k:(i + 1) * k] = N(g)
        mats.append(M)
    contracted = S.zero is not None and S.zero != e
    info = {"idempotent": S.label(e), "group_rep": N.name, "group_order": N.group.order}
    M = MatrixRep(S, F, mats, contracted=contracted, info=info)
    M.idempotent, M.group_rep = e, N
    return M


def restrict(M, e):
    """G_e acting on the column space of M(e)."""
    S, F = M.semigroup, M.field
    G = maximal_subgroup(S, e)
    B = linalg.column_space(F, M(e))
    if B.shape[1] == 0:
        return None
    mats = []
    for s in G.embedding:
        C = linalg.solve(F, B, F.matmul(M(s), B))
        if C is None:
            raise ValidationError("column space of M(e) is not G_e-invariant")
        mats.append(C)
    return GroupRep(G, F, mats, name=f"Res({S.label(e)})")


def find_intertwiner(N1, N2, max_dim=3):
    """An invertible X with X N1(g) = N2(g) X for all g, or None.

    Solves the linear system for the intertwiner space and tries its
    basis and small combinations.
    """
    F = N1.field
    if N1.dim != N2.dim:
        return None
    n = N1.dim
    if n > max_dim:
        raise CapExceededError(f"intertwiner search limited to dimension {max_dim}", max_dim)
    rows = []
    for g in range(N1.group.order):
        A, B = N1(g), N2(g)
        # X A - B X, with X flattened row-major
        for i in range(n):
            for j in range(n):
                row = [0] * (n * n)
                for k in range(n):
                    row[i * n + k] = row[i * n + k] + A[k, j]
                    row[k * n + j] = row[k * n + j] - B[i, k]
                rows.append(row)
    K = linalg.nullspace(F, F.array(rows))
    for coeffs in product(range(3), repeat=K.shape[1]):
        if not any(coeffs):
            continue
        X = F.reduce(F.matmul(K, F.array([[c] for c in coeffs]))).reshape(n, n)
        if linalg.rank(F, X) == n:
            return X
    return None


def res_ind_check(S, e, N, M=None):
    """Dimension, character and (at dim <= 3) intertwiner checks for
    Res_e Ind_e N against N."""
    M = M or induce(S, e, N)
    R = restrict(M, e)
    out = {"dimension": R is not None and R.dim == N.dim}
    out["character"] = out["dimension"] and R.character() == N.character()
    if out["dimension"] and N.dim <= 3:
        out["intertwiner"] = find_intertwiner(N, R) is not None
    return out


def ideal_Ie(S, e):
    """Elements of SeS strictly J-below e."""
    J = green_data(S).class_of("J", e)
    return frozenset(int(x) for x in np.nonzero(principal_ideal(S, e))[0]) - J


def rees_quotient(S, I):
    """S/I with I collapsed to a zero; S itself when I is empty.
    The result has ``quotient_map`` from S indices."""
    I = frozenset(I)
    n = len(S)
    if not I:
        S.quotient_map = tuple(range(n))
        return S
    if any(S.mul(s, i) not in I or S.mul(i, s) not in I for s in range(n) for i in I):
        raise ValidationError("not a two-sided ideal", witness=tuple(sorted(I)))
    keep = [s for s in range(n) if s not in I]
    zero = len(keep)
    qmap = [zero] * n
    for i, s in enumerate(keep):
        qmap[s] = i
    table = [[qmap[S.mul(a, b)] for b in keep] + [zero] for a in keep]
    table.append([zero] * (zero + 1))
    labels = [S.label(s) for s in keep] + ([S.label(min(I))] if len(I) == 1 else ["0"])
    Q = FiniteInverseSemigroup(table, labels=labels, name=f"{S.name or 'S'}/I")
    Q.quotient_map = tuple(qmap)
    return Q


def is_primitive(S, e):
    if S.zero is None:
        raise ValidationError("primitivity needs a zero")
    if e == S.zero or not S.is_idempotent(e):
        return False
    leq = S.leq_matrix
    return all(f in (e, S.zero) for f in S.idempotents if leq[f, e])


# -- simplicity ----------------------------------------------------------------


def _distinct_generators(M):
    seen, out = set(), []
    for m in M.matrices:
        key = m.tobytes() if m.dtype != object else tuple(m.ravel())
        if key not in seen:
            seen.add(key)
            out.append(m)
    return out


def spin(F, mats, vectors):
    """Basis of the smallest subspace containing ``vectors`` and invariant
    under every matrix."""
    n = mats[0].shape[0] if mats else len(vectors[0])
    basis = F.zeros((n, 0))
    todo = [F.array(v).reshape(n, 1) for v in vectors]
    while todo:
        v = todo.pop()
        cand = np.hstack([basis, v])
        if linalg.rank(F, cand) > basis.shape[1]:
            basis = cand
            todo.extend(F.matmul(m, v) for m in mats)
    return basis


def _candidate_vectors(F, n, seed=0, samples=256):
    p = F.p
    if p**n <= SPIN_EXHAUSTIVE_LIMIT:
        # one vector per line: first nonzero coordinate equal to 1
        for lead in range(n):
            for tail in product(range(p), repeat=n - lead - 1):
                yield [0] * lead + [1] + list(tail)
        return
    for i in range(n):
        yield [int(i == j) for j in range(n)]
    rng = np.random.default_rng(seed)
    for _ in range(samples):
        v = rng.integers(0, p, size=n)
        if v.any():
            yield [int(x) for x in v]


def is_simple_module(M, max_dim=DEFAULT_MAX_DIM, seed=0):
    """(simple, witness): witness is a proper nonzero invariant subspace
    (basis columns) when one is found."""
    F = M.field
    if F.characteristic == 0:
        raise UnsupportedFieldError("spinning needs a finite field; reduce mod p first")
    if M.dim == 0:
        return False, None
    if M.dim > max_dim:
        raise CapExceededError(f"dimension {M.dim} exceeds spinning cap {max_dim}", max_dim)
    mats = _distinct_generators(M)
    for v in _candidate_vectors(F, M.dim, seed):
        W = spin(F, mats, [v])
        if W.shape[1] < M.dim:
            return False, W
    return True, None


def largest_submodule_annihilated_by(M, e):
    """Basis of the largest submodule on which M(e) vanishes."""
    F = M.field
    W = linalg.nullspace(F, M(e))
    mats = _distinct_generators(M)
    while W.shape[1]:
        P = linalg.left_annihilator(F, W)
        if P.shape[0] == 0:
            return W
        stacked = np.vstack([F.matmul(F.matmul(P, m), W) for m in mats])
        C = linalg.nullspace(F, stacked)
        if C.shape[1] == W.shape[1]:
            return W
        W = F.reduce(F.matmul(W, C))
    return W


def semilattice_bound_check(M):
    """{M(e)} is a commuting family of idempotent matrices of size <= 2^dim."""
    F = M.field
    mats = [M(e) for e in M.semigroup.idempotents]
    idem = all(linalg.equal(F.matmul(m, m), m) for m in mats)
    comm = all(linalg.equal(F.matmul(a, b), F.matmul(b, a)) for a in mats for b in mats)
    distinct = {tuple(F.reduce(m).ravel().tolist()) for m in mats}
    return idem and comm and len(distinct) <= 2**M.dim


# -- group irreducibles --------------------------------------------------------


def _abelian_characters(G, F):
    m = G.exponent()
    zeta = F.root_of_unity(m)
    gens = G.generators()
    powers = [F.scalar(1)]
    for _ in range(m - 1):
        powers.append(F.reduce(F.array([powers[-1] * zeta]))[0])
    out = []
    for ks in product(range(m), repeat=len(gens)):
        exps = {G.identity: 0}
        frontier, ok = [G.identity], True
        while frontier and ok:
            nxt = []
            for x in frontier:
                for g, k in zip(gens, ks):
                    y, v = G.mul(g, x), (exps[x] + k) % m
                    if y in exps:
                        ok &= exps[y] == v
                    else:
                        exps[y] = v
                        nxt.append(y)
            frontier = nxt
        if not ok or any((exps[a] + exps[b]) % m != exps[G.mul(a, b)] for a in range(G.order) for b in range(G.order)):
            continue
        mats = [F.array([[powers[exps[g]]]]) for g in range(G.order)]
        out.append(GroupRep(G, F, mats, name="chi(" + ",".join(map(str, ks)) + ")"))
    return out


def _partitions(n, largest=None):
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for k in range(min(n, largest), 0, -1):
        for rest in _partitions(n - k, k):
            yield (k,) + rest


def _standard_tableaux(shape):
    n = sum(shape)
    cells = [(r, c) for r, row in enumerate(shape) for c in range(row)]
    out = []
    for perm in permutations(range(n)):
        T = dict(zip(cells, perm))
        if all(T[(r, c)] < T[(r, c + 1)] for (r, c) in cells if (r, c + 1) in T) and all(
            T[(r, c)] < T[(r + 1, c)] for (r, c) in cells if (r + 1, c) in T
        ):
            out.append(T)
    return out


def _sign(perm):
    seen, s = set(), 1
    for i in range(len(perm)):
        if i in seen:
            continue
        j, length = i, 0
        while j not in seen:
            seen.add(j)
            j = perm[j]
            length += 1
        s *= -1 if length % 2 == 0 else 1
    return s


def specht_matrices(n, shape, perms):
    """Integer matrices of S_n on the Specht module S^shape, in the basis of
    standard polytabloids.  ``perms`` lists the group elements as image
    tuples."""
    cells = [(r, c) for r, row in enumerate(shape) for c in range(row)]
    tabloid = lambda T: tuple(frozenset(T[(r, c)] for c in range(shape[r])) for r in range(len(shape)))
    columns = [[(r, c) for r in range(len(shape)) if c < shape[r]] for c in range(shape[0])]

    def polytabloid(T):
        vec = {}
        col_perms = [list(permutations(col)) for col in columns]
        for choice in product(*col_perms):
            U, sgn = dict(T), 1
            for col, img in zip(columns, choice):
                idx = [col.index(x) for x in img]
                sgn *= _sign(idx)
                for a, b in zip(col, img):
                    U[b] = T[a]
            key = tabloid(U)
            vec[key] = vec.get(key, 0) + sgn
        return vec

    std = _standard_tableaux(shape)
    basis_vecs = [polytabloid(T) for T in std]
    keys = sorted({k for v in basis_vecs for k in v}, key=lambda t: [sorted(r) for r in t])
    pos = {k: i for i, k in enumerate(keys)}
    Q = Rationals()

    def column(vec):
        col = [0] * len(keys)
        for k, c in vec.items():
            col[pos[k]] = c
        return col

    B = Q.array([column(v) for v in basis_vecs]).T
    mats = []
    for p in perms:
        images = [polytabloid({cell: p[T[cell]] for cell in cells}) for T in std]
        if any(k not in pos for v in images for k in v):
            raise ValidationError("polytabloid image outside the tabloid span")
        X = linalg.solve(Q, B, Q.array([column(v) for v in images]).T)
        if X is None or any(x.denominator != 1 for x in X.ravel()):
            raise ValidationError("Specht matrix is not integral")
        mats.append([[int(x) for x in row] for row in X])
    return mats


def _symmetric_irreducibles(G, F, n):
    Sn, perms = symmetric_group(n)
    phi = find_isomorphism(G, Sn)
    out = []
    for shape in _partitions(n):
        mats = specht_matrices(n, shape, perms)
        out.append(GroupRep(G, F, [F.array(mats[phi[g]]) for g in range(G.order)], name="specht" + str(list(shape))))
    return out


def _symmetric_degree(G):
    for n in range(1, 5):
        if factorial(n) == G.order:
            Sn, _ = symmetric_group(n)
            if find_isomorphism(G, Sn) is not None:
                return n
    return None


def group_irreducibles(G, field, seed=0):
    """All irreducible representations of G over ``field`` when it splits G."""
    F = field
    if G.order > MAX_GROUP_ORDER:
        raise CapExceededError(f"group order {G.order} exceeds {MAX_GROUP_ORDER}", MAX_GROUP_ORDER)
    if F.characteristic and G.order % F.characteristic == 0:
        raise UnsupportedFieldError(f"characteristic {F.characteristic} divides the group order {G.order}")
    if G.order == 1:
        return [GroupRep(G, F, [F.eye(1)], name="trivial")]
    if G.is_abelian():
        reps = _abelian_characters(G, F)
    elif _symmetric_degree(G):
        reps = _symmetric_irreducibles(G, F, _symmetric_degree(G))
    elif F.characteristic == 0:
        raise UnsupportedFieldError("only abelian and symmetric groups are handled over the rationals")
    else:
        modules = decompose_regular(F, G.table, seed=seed)
        reps = [GroupRep(G, F, mats, name=f"block{i}") for i, mats in enumerate(modules)]
    if sum(r.dim**2 for r in reps) != G.order:
        raise UnsupportedFieldError(f"{F!r} does not split the group of order {G.order}")
    return reps


# -- regular-module decomposition (independent oracle) -------------------------


def _left_mult(F, table):
    n = len(table)
    mats = []
    for s in range(n):
        L = F.zeros((n, n))
        for t in range(n):
            L[table[s][t], t] = 1
        mats.append(L)
    return mats


def _combine(F, mats, coeffs):
    out = F.zeros(mats[0].shape)
    for c, m in zip(coeffs, mats):
        if c:
            out = F.reduce(out + c * m)
    return out


def _min_poly_roots(F, A, v):
    """Roots in GF(p) of the minimal polynomial of A relative to v."""
    p = F.p
    if p > 10**6:
        raise CapExceededError("root search limited to p <= 10^6", 10**6)
    vecs = [F.array(v).reshape(-1, 1)]
    while True:
        K = np.hstack(vecs)
        nxt = F.matmul(A, vecs[-1])
        c = linalg.solve(F, K, nxt)
        if c is not None:
            break
        vecs.append(nxt)
    # A^k v = sum c_i A^i v, so x^k - sum c_i x^i
    coeffs = [int(F.reduce(np.array([-x]))[0]) for x in c.ravel()] + [1]
    xs = np.arange(p, dtype=object)
    val = np.zeros(p, dtype=object)
    for a in reversed(coeffs):
        val = (val * xs + a) % p
    return [int(x) for x in np.nonzero(val == 0)[0]]


def _eigenspaces(F, A, rng, tries=20, complete=True):
    """(eigenvalue, kernel basis) pairs for A over GF(p).

    Roots come from minimal polynomials relative to random vectors.  With
    ``complete`` the eigenspaces must fill the space (A diagonalisable);
    otherwise whatever was found is returned."""
    n = A.shape[0]
    found = {}
    for _ in range(tries):
        v = [int(x) for x in rng.integers(0, F.p, size=n)]
        if not any(v):
            continue
        for lam in _min_poly_roots(F, A, v):
            if lam not in found:
                K = linalg.nullspace(F, F.reduce(A - lam * F.eye(n)))
                if K.shape[1]:
                    found[lam] = K
        if sum(K.shape[1] for K in found.values()) == n:
            return sorted(found.items())
    if not complete:
        return sorted(found.items())
    raise UnsupportedFieldError("matrix does not diagonalise over the field")


def algebra_center(F, table):
    """Basis (columns) of the center of the algebra with basis 0..n-1 and
    product table (basis elements multiply to basis elements)."""
    n = len(table)
    rows = []
    for s in range(n):
        # sum_x z_x (x s - s x) = 0, coordinates indexed by basis element
        M = F.zeros((n, n))
        for x in range(n):
            M[table[x][s], x] = M[table[x][s], x] + 1
            M[table[s][x], x] = M[table[s][x], x] - 1
        rows.append(F.reduce(M))
    return linalg.nullspace(F, np.vstack(rows))


def decompose_regular(F, table, seed=0, tries=50):
    """Simple modules of a split semisimple algebra with a basis closed
    under multiplication, found inside the left regular module.

    A random central element separates the blocks by its eigenvalues; in a
    block of dimension d^2, an element with d-dimensional kernel yields a
    rank-one vector x and the left ideal through x is simple.  Returns one
    list of matrices (indexed by basis element) per simple module.
    """
    if F.characteristic == 0:
        raise UnsupportedFieldError("regular decomposition runs over GF(p)")
    rng = np.random.default_rng(seed)
    n = len(table)
    L = _left_mult(F, table)
    Z = algebra_center(F, table)
    n_blocks = Z.shape[1]
    # common eigenspaces of random central elements, refined until they
    # are the blocks
    spaces = [F.eye(n)]
    for _ in range(tries):
        if len(spaces) == n_blocks:
            break
        z = F.reduce(F.matmul(Z, F.array(rng.integers(0, F.p, size=(n_blocks, 1))))).ravel()
        Lz = _combine(F, L, z)
        refined = []
        for B in spaces:
            coords = linalg.solve(F, B, F.matmul(Lz, B))
            for _, K in _eigenspaces(F, coords, rng):
                refined.append(F.reduce(F.matmul(B, K)))
        spaces = refined
    if len(spaces) != n_blocks:
        raise UnsupportedFieldError("could not separate the blocks; the field may not split the algebra")
    modules = []
    for B in spaces:
        d = isqrt(B.shape[1])
        if d * d != B.shape[1]:
            raise UnsupportedFieldError("block dimension is not a square; the field does not split the algebra")
        modules.append(_simple_in_block(F, L, B, d, rng, tries))
    modules.sort(key=lambda mats: (mats[0].shape[0], tuple(int(np.trace(m)) if F.characteristic else 0 for m in mats)))
    return modules


def _simple_in_block(F, L, B, d, rng, tries):
    n = B.shape[0]
    for _ in range(tries):
        if d == 1:
            x = B[:, 0]
        else:
            b = F.reduce(F.matmul(B, F.array(rng.integers(0, F.p, size=(B.shape[1], 1))))).ravel()
            Lb = _combine(F, L, b)
            x = None
            # b acting on the block, in block coordinates
            coords = linalg.solve(F, B, F.matmul(Lb, B))
            for lam, K in _eigenspaces(F, coords, rng, tries=3, complete=False):
                if K.shape[1] == d:
                    x = F.reduce(F.matmul(B, K[:, :1])).ravel()
                    break
            if x is None:
                continue
        W = spin(F, L, [x])
        if W.shape[1] != d:
            continue
        mats = []
        for m in L:
            C = linalg.solve(F, W, F.matmul(m, W))
            mats.append(C)
        return mats
    raise UnsupportedFieldError("no simple left ideal found in block")


# -- all irreducibles ----------------------------------------------------------


def d_class_idempotents(S):
    """The least idempotent (by index) of each D-class, in class order."""
    return sorted(min(e for e in cls if S.is_idempotent(e)) for cls in green_data(S).D)


def irreducible_representations(S, field, max_dim=DEFAULT_MAX_DIM, seed=0):
    """Ind_e(N) for one idempotent e per D-class and every irreducible N of
    G_e, ordered by idempotent index then by the order of N."""
    out = []
    for e in d_class_idempotents(S):
        tr = Transversal(S, e)
        for N in group_irreducibles(tr.group, field, seed=seed):
            out.append(induce(S, e, N, max_dim=max_dim, transversal=tr))
    traces = [M.traces() for M in out]
    if field.characteristic == 0 and len(set(traces)) != len(traces):
        raise ValidationError("two irreducibles share a trace vector")
    return out


def certify_simple(M, primes=VERIFICATION_PRIMES):
    """Reduce a rational rep mod each prime and spin; dict prime -> bool."""
    out = {}
    for p in primes:
        R = M.reduce_mod(p) if M.field.characteristic == 0 else M
        out[p] = is_simple_module(R)[0]
    return out


def regular_composition_factors(S, p, seed=0):
    """Simple kS-modules over GF(p) from the regular module, as MatrixReps."""
    F = PrimeField(p)
    table = S.table.tolist()
    return [MatrixRep(S, F, mats) for mats in decompose_regular(F, table, seed=seed)]


def match_factors(induced, factors, p):
    """Pair each induced rep (reduced mod p) with a composition factor of
    equal trace vector; True when this is a bijection."""
    a = sorted(tuple(int(x) for x in M.reduce_mod(p).traces()) for M in induced)
    b = sorted(tuple(int(x) for x in M.traces()) for M in factors)
    return a == b and len(set(a)) == len(a)
