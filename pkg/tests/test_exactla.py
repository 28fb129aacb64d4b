from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from corings.exactla import (
    QQ, GF, Mat, Subspace, DimensionError, kernel, solve, rank, tensor, identity,
    quotient, rref, det, solve_affine_space, SparseSystem, operator_rows,
    linear_operator_matrix, times_kron_identity,
)


def M(rows, field=QQ):
    return Mat.from_rows(field, rows)


def test_kernel_examples():
    assert kernel(Mat.zeros(QQ, 3, 3)).dim == 3
    assert kernel(identity(QQ, 3)).dim == 0
    K = kernel(M([[1, 1]]))
    assert K == Subspace.span(QQ, 2, [[1, -1]])
    assert K.rows == [(1, -1)]


def test_solve_examples():
    assert solve(identity(QQ, 3), [1, "2/3", -4]) == [1, Fraction(2, 3), -4]
    assert solve(M([[1, 1]]), [2]) == [2, 0]
    assert solve(Mat.zeros(QQ, 2, 2), [0, 1]) is None
    with pytest.raises(DimensionError):
        solve(identity(QQ, 2), [1, 2, 3])


def test_tensor_rank_quotient():
    assert tensor(identity(QQ, 2), identity(QQ, 3)) == identity(QQ, 6)
    assert rank(M([[1, 2], [2, 4]])) == 1
    q, P, S = quotient(2, Subspace.span(QQ, 2, [[1, 0]]))
    assert q == 1
    assert P @ S == identity(QQ, 1)
    assert (P @ Mat.column(QQ, [1, 0])).is_zero()


def test_scalars_lowest_terms():
    assert QQ("4/6") == Fraction(2, 3)
    assert type(QQ("4/2")) is int
    assert (M([["1/2"]]) @ M([[2]])).A[0, 0] == 1
    assert type((M([["1/2"]]) @ M([[2]])).A[0, 0]) is int
    assert GF(5)(Fraction(1, 2)) == 3
    with pytest.raises(ValueError):
        GF(4)
    with pytest.raises(TypeError):
        QQ(0.5)


def test_mod_p_rank_differs():
    A = [[1, 1], [1, -1]]
    assert rank(M(A)) == 2
    assert rank(M(A, GF(2))) == 1


def test_det():
    assert det(M([[1, 2], [3, 4]])) == -2
    assert det(M([["1/2", 0], [0, 4]])) == 2
    assert det(M([[1, 2], [3, 4]], GF(3))) == 1


def test_affine_space():
    x, K = solve_affine_space(M([[1, 1, 0]]), [3])
    assert x == [3, 0, 0] and K.dim == 2
    assert solve_affine_space(M([[0, 0]]), [1]) is None


def test_subspace_ops():
    U = Subspace.span(QQ, 3, [[1, 0, 0], [0, 1, 0]])
    V = Subspace.span(QQ, 3, [[0, 1, 0], [0, 0, 1]])
    assert U.intersect(V) == Subspace.span(QQ, 3, [[0, 2, 0]])
    assert U.contains([3, -1, 0]) and not U.contains([0, 0, 1])
    assert Subspace.whole(QQ, 3).contains_space(U)


def test_kron_times_identity():
    P = M([[1, 0, "1/2", 2], [0, 3, 1, 0]])
    H = M([[1, 2, 0], [0, "1/3", 1]])
    assert times_kron_identity(P, H, 2) == P @ tensor(H, identity(QQ, 2))


# properties

entries = st.sampled_from([0, 0, 0, 1, -1, 2, -3, Fraction(1, 2), Fraction(-2, 3)])


@st.composite
def matrices(draw, max_rows=6, max_cols=6, field=QQ):
    m = draw(st.integers(1, max_rows))
    n = draw(st.integers(1, max_cols))
    rows = draw(st.lists(st.lists(entries, min_size=n, max_size=n), min_size=m, max_size=m))
    return Mat.from_rows(field, rows, n)


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_rank_nullity(A):
    assert kernel(A).dim + rank(A) == A.cols
    for v in kernel(A).rows:
        assert (A @ Mat.column(QQ, v)).is_zero()


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_strategies_agree(A):
    ref = rref(A)
    for s in ("fraction-free-smallest", "fraction", "fraction-last", "sparse", "dense"):
        assert rref(A, s) == ref


@settings(max_examples=40, deadline=None)
@given(matrices(), st.randoms(use_true_random=False))
def test_echelon_canonical(A, rnd):
    rows = A.tolist()
    mixed = []
    for _ in range(len(rows)):
        c = [rnd.randint(-2, 2) for _ in rows]
        mixed.append([sum(ci * r[j] for ci, r in zip(c, rows)) for j in range(A.cols)])
    S1 = Subspace.span(QQ, A.cols, rows)
    S2 = Subspace.span(QQ, A.cols, rows + mixed)
    assert S1 == S2 and S1.rows == S2.rows


@settings(max_examples=40, deadline=None)
@given(matrices(4, 3), matrices(3, 4), st.randoms(use_true_random=False))
def test_kronecker_contract(f, g, rnd):
    v = [rnd.randint(-3, 3) for _ in range(f.cols)]
    w = [rnd.randint(-3, 3) for _ in range(g.cols)]
    vw = [a * b for a in v for b in w]
    lhs = (tensor(f, g) @ Mat.column(QQ, vw)).column_vector()
    fv = (f @ Mat.column(QQ, v)).column_vector()
    gw = (g @ Mat.column(QQ, w)).column_vector()
    assert lhs == [a * b for a in fv for b in gw]


@settings(max_examples=40, deadline=None)
@given(matrices(5, 5, GF(7)))
def test_rank_nullity_mod_p(A):
    assert kernel(A).dim + rank(A) == A.cols
    assert rref(A) == rref(A, "dense")


@st.composite
def operator_terms(draw):
    m, n, k = (draw(st.integers(1, 3)) for _ in range(3))
    p, q = draw(st.integers(1, 3)), draw(st.integers(1, 3))

    def mat(r, c):
        return Mat.from_rows(QQ, draw(st.lists(st.lists(entries, min_size=c, max_size=c),
                                               min_size=r, max_size=r)), c)

    terms = [("plain", mat(p, m), mat(n, q), 2),
             ("left", mat(p, m * k), mat(n * k, q), k),
             ("right", mat(p, k * m), mat(k * n, q), k, -1)]
    return (m, n), terms, (p, q)


@settings(max_examples=30, deadline=None)
@given(operator_terms())
def test_sparse_operator_matches_dense(data):
    shape, terms, out = data
    D = linear_operator_matrix(QQ, shape, terms, out)
    S = SparseSystem(QQ, shape[0] * shape[1]).add(operator_rows(QQ, shape, terms, out))
    assert S.kernel() == kernel(D)
