import itertools
import random

from corings.exactla import QQ, GF, Mat, identity, rank, det, tensor
from corings.algebra import (
    FinAlgebra, Bimodule, check_algebra, check_bimodule, group_algebra, cyclic_group_table,
    upper_triangular, truncated_polynomial, field_algebra, balanced_tensor, hom_space,
    right_dual, left_dual, double_dual_map, invertible_element_exists, fgp_check,
    is_bimodule_map,
)


def qc(n, field=QQ):
    return group_algebra(field, cyclic_group_table(n), name="QC%d" % n)


def test_group_algebra_axioms():
    assert check_algebra(qc(2)).ok
    assert check_algebra(field_algebra(QQ)).ok
    assert check_algebra(upper_triangular(QQ)).ok
    assert check_algebra(truncated_polynomial(QQ, [-2, 0])).ok


def test_perturbed_constants_fail_with_witness():
    A = qc(3)
    # g1 g2 = e becomes 2e; everything else untouched
    mult = Mat(QQ, A.mult.A.copy())
    mult.A[0, 1 * 3 + 2] = 2
    B = FinAlgebra(QQ, 3, mult, A.unit, name="bad")
    rep = check_algebra(B)
    assert not rep["associativity"].ok
    i, j, k = rep["associativity"].witness
    ei = lambda t: [1 if s == t else 0 for s in range(3)]
    lhs = B.mul(B.mul(ei(i), ei(j)), ei(k))
    rhs = B.mul(ei(i), B.mul(ei(j), ei(k)))
    assert lhs != rhs


def test_unit_failure_reported():
    A = qc(2)
    B = FinAlgebra(QQ, 2, A.mult, [1, 1], name="wrong unit")
    rep = check_algebra(B)
    assert not rep["left unit"].ok and not rep["right unit"].ok


def test_balanced_tensor_dims():
    k = field_algebra(QQ)
    V, W = Bimodule.vector_space(QQ, 2), Bimodule.vector_space(QQ, 3)
    T = balanced_tensor(V, W)
    assert T.dim == 6 and T.projection == identity(QQ, 6)
    A = qc(2)
    R = Bimodule.regular(A)
    assert balanced_tensor(R, R).dim == 2
    N = Bimodule.left_regular(A)
    assert balanced_tensor(R, N).dim == N.dim
    T2 = upper_triangular(QQ)
    assert balanced_tensor(Bimodule.regular(T2), Bimodule.left_regular(T2)).dim == 3
    assert k.dim == 1


def test_balanced_tensor_invariants():
    A = upper_triangular(QQ)
    R = Bimodule.regular(A)
    T = balanced_tensor(R, R)
    assert T.projection @ T.section == identity(QQ, T.dim)
    assert check_bimodule(T.bimodule).ok
    for b in range(A.dim):
        rel = (A.right_mult(b).A, A.left_mult(b).A)
        for m in range(3):
            for n in range(3):
                v1 = [0] * 9
                v2 = [0] * 9
                for i in range(3):
                    v1[i * 3 + n] += rel[0][i, m]
                    v2[m * 3 + i] += rel[1][i, n]
                diff = Mat.column(QQ, [x - y for x, y in zip(v1, v2)])
                assert (T.projection @ diff).is_zero()


def test_balanced_tensor_associative():
    A = qc(2)
    B = upper_triangular(QQ)
    k = field_algebra(QQ)
    M = Bimodule(k, A, 2, None, [A.right_mult(j) for j in range(2)], name="M")
    N = Bimodule(A, B, 6, [tensor_op(A.left_mult(i), 3) for i in range(2)],
                 [tensor_op_right(B.right_mult(j), 2) for j in range(3)], name="N")
    P = Bimodule.left_regular(B)
    MN = balanced_tensor(M, N)
    NP = balanced_tensor(N, P)
    T1 = balanced_tensor(MN.bimodule, P)
    T2 = balanced_tensor(M, NP.bimodule)
    assert T1.dim == T2.dim
    cols = []
    for t in T1.section_idx:
        b, p = divmod(t, P.dim)
        m, n = divmod(MN.section_idx[b], N.dim)
        np_vec = NP.projection.A[:, n * P.dim + p]
        v = [0] * T2.kdim
        for c, x in enumerate(np_vec):
            v[m * NP.dim + c] = x
        cols.append(v)
    iso = T2.projection @ Mat.from_columns(QQ, cols, T2.kdim)
    assert rank(iso) == T1.dim


def tensor_op(a, n):
    return tensor(a, identity(QQ, n))


def tensor_op_right(b, n):
    return tensor(identity(QQ, n), b)


def test_hom_space_examples():
    V = Bimodule.vector_space(QQ, 2)
    assert hom_space(V, V).dim == 4
    R = Bimodule.regular(qc(2))
    assert hom_space(R, R).dim == 2
    T = Bimodule.regular(upper_triangular(QQ))
    H = hom_space(T, T)
    assert H.dim == 1
    for h in H.basis:
        assert is_bimodule_map(h, T, T)


def test_duals():
    V = Bimodule.vector_space(QQ, 3)
    assert right_dual(V).module.dim == 3
    A = upper_triangular(QQ)
    D = right_dual(Bimodule.right_regular(A))
    assert D.module.dim == 3 and D.module.left_alg is A
    assert check_bimodule(D.module).ok
    for M in (Bimodule.regular(A), Bimodule.right_regular(qc(3)), Bimodule.left_regular(A)):
        sigma, _, _ = double_dual_map(M)
        assert sigma.rows == sigma.cols == M.dim and rank(sigma) == M.dim
        assert check_bimodule(left_dual(M).module).ok


def test_invertible_element_examples():
    assert invertible_element_exists([identity(QQ, 3)]).status == "YES"
    # rank one maps all killing e_0
    basis = [Mat.from_rows(QQ, [[0, 1, 0], [0, 0, 0], [0, 0, 0]]),
             Mat.from_rows(QQ, [[0, 0, 0], [0, 0, 1], [0, 0, 0]]),
             Mat.from_rows(QQ, [[0, 0, 0], [0, 0, 0], [0, 2, 3]])]
    r = invertible_element_exists(basis)
    assert r.status == "NO" and "grid exhausted" in r.reason


def _linear_dual_hom(A):
    D = right_dual(Bimodule.left_regular(A)).module
    return hom_space(D, Bimodule.right_regular(A))


def test_t2_not_self_injective():
    H = _linear_dual_hom(upper_triangular(QQ))
    r = invertible_element_exists(H.basis)
    assert r.status == "NO"
    assert r.reason == "generic determinant ≡ 0 (grid exhausted)"
    r = invertible_element_exists(_linear_dual_hom(qc(2)).basis)
    assert r.status == "YES" and det(r.witness) != 0


def test_invertible_budget_undecided():
    H = _linear_dual_hom(upper_triangular(QQ))
    r = invertible_element_exists(H.basis, budget=2)
    assert r.status in ("UNDECIDED", "NO")
    if r.status == "NO":
        assert "common kernel" in r.reason


def test_invertible_matches_brute_force():
    rng = random.Random(5)
    for p in (2, 3):
        F = GF(p)
        for _ in range(40):
            n = rng.randint(1, 3)
            basis = [Mat.from_rows(F, [[rng.choice([0, 0, 1, 2 % p]) for _ in range(2)] for _ in range(2)])
                     for _ in range(n)]
            brute = False
            for t in itertools.product(range(p), repeat=n):
                M = Mat.zeros(F, 2, 2)
                for c, h in zip(t, basis):
                    M = M + h.scale(c)
                if det(M) != 0:
                    brute = True
                    break
            assert (invertible_element_exists(basis).status == "YES") == brute


def test_fgp_check():
    A = qc(2)
    assert fgp_check(Bimodule.left_regular(A), "left")[0]
    assert fgp_check(Bimodule(A, field_algebra(QQ), 0, [Mat.zeros(QQ, 0, 0)] * 2, None), "left")[0]
    for field, expected in ((QQ, True), (GF(2), False)):
        B = qc(2, field)
        triv = Bimodule(B, field_algebra(field), 1, [identity(field, 1)] * 2, None, name="k")
        ok, dual = fgp_check(triv, "left")
        assert ok is expected
        if ok:
            # sum_i f_i(m) e_i = m on the basis vector
            total = [0]
            for f, e in dual:
                fm = f.column_vector(0)
                for a, c in enumerate(fm):
                    total[0] += c * (triv.left_ops[a].A[0, 0] * e[0])
            assert total == [1]
