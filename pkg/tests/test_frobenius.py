import random

import pytest

from corings.exactla import QQ, Mat, solve, tensor, identity
from corings.algebra import (
    Bimodule, group_algebra, cyclic_group_table, upper_triangular, field_algebra,
)
from corings.coring import (
    module_as_bicomodule, trivial_coring, dual_coalgebra, grouplike_coalgebra, check_coring,
    cotensor, graded_comodule,
)
from corings.frobenius import (
    FrobeniusSystem, ZigZag, verify_frobenius_system, search_frobenius_system,
    frobenius_pair_check, CoringMorphism, induction_data, frobenius_extension_check,
    frobenius_coring_check, opposite_coring, opposite_morphism, FROBENIUS, NOT_FROBENIUS,
)
from corings import graded as gr


QC2 = group_algebra(QQ, cyclic_group_table(2), name="QC2")
T2 = upper_triangular(QQ)


def bic(M):
    return module_as_bicomodule(M)


def system(X, L, psi_cols, omega_rows):
    """psi given on C's basis and omega on L (x) X, both in plain tensor coordinates."""
    zz = ZigZag(X, L)
    cols = []
    for c in psi_cols:
        t = zz.XL.tensor.projection @ Mat.column(QQ, c)
        cols.append(solve(zz.XL.inclusion, t.column_vector()))
    psi = Mat.from_columns(QQ, cols, zz.XL.dim)
    omega = Mat.from_rows(QQ, omega_rows) @ zz.LX.tensor.section @ zz.LX.inclusion
    return FrobeniusSystem(X, L, psi, omega)


def test_identity_system_on_ground_field():
    k = field_algebra(QQ)
    X = bic(Bimodule.regular(k))
    s = system(X, X, [[1]], [[1]])
    assert verify_frobenius_system(s).ok


def test_classical_group_algebra_system():
    # C = trivial coring on QC2, D = Q: psi(1) = sum g (x) g^-1, omega = coefficient of e
    X, L = bic(Bimodule.left_regular(QC2)), bic(Bimodule.right_regular(QC2))
    s = system(X, L, [[1, 0, 0, 1], [0, 1, 1, 0]], [[1, 0, 0, 1]])
    assert verify_frobenius_system(s).ok
    bad = system(X, L, [[1, 0, 0, 0], [0, 1, 0, 0]], [[1, 0, 0, 1]])
    rep = verify_frobenius_system(bad)
    assert not rep.ok
    for c in rep.failures():
        if c.name.startswith("zig-zag"):
            assert c.witness["lhs"] != c.witness["rhs"]


def test_restriction_orientation():
    # C = Q, D = QC2: X []_D Lambda is QC2 itself, so psi(1) = 1 (x) 1 is the unit
    X, L = bic(Bimodule.right_regular(QC2)), bic(Bimodule.left_regular(QC2))
    mult = [[1, 0, 0, 1], [0, 1, 1, 0]]
    assert verify_frobenius_system(system(X, L, [[1, 0, 0, 0]], mult)).ok
    rep = verify_frobenius_system(system(X, L, [[1, 0, 0, 1]], mult))
    assert not rep.ok
    assert {c.name for c in rep.failures()} == {"zig-zag on Lambda", "zig-zag on X"}


def test_wrong_shapes_reported():
    X, L = bic(Bimodule.left_regular(QC2)), bic(Bimodule.right_regular(QC2))
    s = FrobeniusSystem(X, L, Mat.zeros(QQ, 4, 1), Mat.zeros(QQ, 1, 2))
    rep = verify_frobenius_system(s)
    assert not rep.ok and rep.failures()[0].name == "shapes"


def _reverify(rep):
    s = rep.witness
    assert verify_frobenius_system(s).ok
    zz = ZigZag(s.x, s.lam)
    z1, z2 = zz.evaluate(s.psi, s.omega)
    assert z1 == identity(QQ, s.lam.dim) and z2 == identity(QQ, s.x.dim)


@pytest.mark.parametrize("make", [
    lambda: trivial_coring(QC2),
    lambda: grouplike_coalgebra(QQ, 3),
    lambda: dual_coalgebra(QC2),
])
def test_search_identity_pair(make):
    C = make()
    rep = search_frobenius_system(C.regular(), C.regular())
    assert rep.verdict == FROBENIUS
    _reverify(rep)


def test_search_group_algebra_both_ways():
    for X, L in ((Bimodule.left_regular(QC2), Bimodule.right_regular(QC2)),
                 (Bimodule.right_regular(QC2), Bimodule.left_regular(QC2))):
        rep = search_frobenius_system(bic(X), bic(L))
        assert rep.verdict == FROBENIUS
        _reverify(rep)
    assert frobenius_pair_check(bic(Bimodule.right_regular(QC2)),
                                bic(Bimodule.left_regular(QC2))).verdict == FROBENIUS


def test_search_triangular():
    X, L = bic(Bimodule.right_regular(T2)), bic(Bimodule.left_regular(T2))
    # restriction of scalars always has induction as left adjoint
    assert search_frobenius_system(X, L).verdict == FROBENIUS
    rep = search_frobenius_system(L, X)
    assert rep.verdict == NOT_FROBENIUS and rep.reason
    pair = frobenius_pair_check(X, L)
    assert pair.verdict == NOT_FROBENIUS and pair.witness is None


def test_induction_data_examples():
    f = CoringMorphism.identity(grouplike_coalgebra(QQ, 2))
    X, L = induction_data(f)
    assert X.check().ok and L.check().ok
    assert X.dim == L.dim == 2
    unit = Mat.column(QQ, QC2.unit)
    g = CoringMorphism.of_algebra_map(field_algebra(QQ), QC2, unit, name="Q->QC2")
    assert g.check().ok
    X, L = induction_data(g)
    assert X.dim == L.dim == 2
    assert X.carrier.right_ops[1] == QC2.right_mult(1)
    assert L.carrier.left_ops[1] == QC2.left_mult(1)
    with pytest.raises(ValueError):
        induction_data(CoringMorphism.of_algebra_map(field_algebra(QQ), QC2,
                                                     Mat.column(QQ, [1, 1])))


def test_extension_checks():
    unit = lambda B: Mat.column(QQ, B.unit)
    k = field_algebra(QQ)
    ok = frobenius_extension_check(CoringMorphism.of_algebra_map(k, QC2, unit(QC2)))
    assert ok.verdict == FROBENIUS
    for part in ok.witness.values():
        assert verify_frobenius_system(part).ok
    no = frobenius_extension_check(CoringMorphism.of_algebra_map(k, T2, unit(T2)))
    assert no.verdict == NOT_FROBENIUS and no.witness is None
    C = dual_coalgebra(QC2)
    assert frobenius_extension_check(CoringMorphism.identity(C)).verdict == FROBENIUS


def test_frobenius_corings():
    r = frobenius_coring_check(dual_coalgebra(QC2))
    assert r.verdict == FROBENIUS
    assert r.routes == {"Cor26": FROBENIUS, "Cor28(c)": FROBENIUS}
    assert verify_frobenius_system(r.witness["system"]).ok
    r = frobenius_coring_check(dual_coalgebra(T2))
    assert r.verdict == NOT_FROBENIUS
    assert r.routes["Cor26"] == r.routes["Cor28(c)"] == NOT_FROBENIUS
    assert "generic determinant ≡ 0 (grid exhausted)" in r.reason
    assert frobenius_coring_check(trivial_coring(QC2)).verdict == FROBENIUS
    assert frobenius_coring_check(grouplike_coalgebra(QQ, 3)).verdict == FROBENIUS


def test_opposite_coring():
    C = dual_coalgebra(T2)
    Cop = opposite_coring(C)
    assert check_coring(Cop).ok
    assert opposite_coring(Cop).delta == C.delta
    f = opposite_morphism(CoringMorphism.identity(C))
    assert f.check().ok


def test_mirrored_systems_over_coseparable_corings():
    # transpose a witness for (- [] X, - [] L) into one for (L [] -, X [] -)
    k = gr.GradedAlgebra.trivially_graded(field_algebra(QQ), gr.FiniteGroup.trivial())
    rng = random.Random(3)
    for _ in range(3):
        X, L = _graded_pair(rng, k)
        rep = search_frobenius_system(X, L)
        assert rep.verdict == FROBENIUS
        _reverify(rep)
        Xop, Lop = _opposite_bicomodule(L), _opposite_bicomodule(X)
        rep2 = search_frobenius_system(Xop, Lop)
        assert rep2.verdict == FROBENIUS
        _reverify(rep2)


def _graded_pair(rng, k):
    X3 = gr.GSet.trivial_action(gr.FiniteGroup.trivial(), 3, "X3")
    dims = [[rng.randint(0, 1) for _ in range(3)] for _ in range(3)]
    dims[rng.randrange(3)][rng.randrange(3)] = 1
    V = gr.graded_vector_space(QQ, X3, dims, side="both", name="V")
    W = gr.graded_vector_space(QQ, X3, [list(r) for r in zip(*dims)], side="both", name="W")
    return V.bicomodule(), W.bicomodule()


def _opposite_bicomodule(M):
    """A (C, D)-bicomodule over coalgebras read as a (D^op, C^op)-bicomodule."""
    from corings.coring import Bicomodule
    C, D = M.left_coring, M.right_coring
    Cop, Dop = _op(C), _op(D)
    n, c, d = M.dim, C.dim, D.dim
    # lam: M -> C (x) M  becomes  rho': M -> M (x) C^op
    swap_l = _swap(QQ, c, n)
    swap_r = _swap(QQ, n, d)
    carrier = Bimodule.vector_space(QQ, n)
    return Bicomodule(Dop, Cop, carrier, swap_r @ M.rho, swap_l @ M.lam, name=M.name + "op")


_OPS = {}


def _op(C):
    if id(C) not in _OPS:
        _OPS[id(C)] = (C, opposite_coring(C))
    return _OPS[id(C)][1]


def _swap(F, a, b):
    "a (x) b -> b (x) a"
    S = Mat.zeros(F, a * b, a * b)
    for i in range(a):
        for j in range(b):
            S.A[j * a + i, i * b + j] = 1
    return S


def _triangle_on(M, s):
    """
    For a right C-comodule M over a field base, the composite
    M []_C X -> (M [] X [] L) [] X -> M []_C X built from the unit at M
    and the counit at M [] X.
    """
    X, L = s.x, s.lam
    zz = ZigZag(X, L)
    C, D = X.left_coring, X.right_coring
    m, x, l, c = M.dim, X.dim, L.dim, C.dim
    psi_t = zz.XL.inclusion @ s.psi                    # C -> X (x) L
    unit = tensor(identity(QQ, m), psi_t) @ M.rho     # M -> M (x) X (x) L
    step = tensor(unit, identity(QQ, x))               # M (x) X -> M X L X
    inc = tensor(identity(QQ, m * x), zz.LX.inclusion)
    eo = D.epsilon @ s.omega                           # L [] X -> k
    S = cotensor(M, X)
    out = []
    for col in range(S.dim):
        v = step @ S.inclusion.select_columns([col])
        w = solve(inc, v.column_vector())
        assert w is not None, "unit lands outside M (x) X (x) (L [] X)"
        out.append((tensor(identity(QQ, m * x), eo) @ Mat.column(QQ, w)).column_vector())
    return Mat.from_columns(QQ, out, m * x), S.inclusion


def test_naturality_on_comodule_pool():
    k = gr.GradedAlgebra.trivially_graded(field_algebra(QQ), gr.FiniteGroup.trivial())
    rng = random.Random(7)
    X, L = _graded_pair(rng, k)
    rep = search_frobenius_system(X, L)
    assert rep.verdict == FROBENIUS
    C = X.left_coring
    for dims in ([1, 0, 0], [0, 2, 1], [1, 1, 1]):
        M = graded_comodule(C, dims)
        got, want = _triangle_on(M, rep.witness)
        assert got == want
