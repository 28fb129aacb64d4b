from corings.exactla import QQ, Mat, identity, rank
from corings.algebra import group_algebra, cyclic_group_table, upper_triangular, field_algebra
from corings.coring import grouplike_coalgebra, dual_coalgebra, check_coring
from corings.entwine import Entwining, EntwiningMorphism, check_entwining, entwined_frobenius_check
from corings.frobenius import FROBENIUS, NOT_FROBENIUS
from corings import graded as gr


QC2 = group_algebra(QQ, cyclic_group_table(2), name="QC2")
T1 = gr.FiniteGroup.trivial()
C2 = gr.FiniteGroup.cyclic(2)
A2 = gr.GradedAlgebra.group_algebra(QQ, C2)
reg2 = gr.GSet.regular(C2)


def test_flip_over_ground_field_is_the_coalgebra():
    C = dual_coalgebra(upper_triangular(QQ))
    e = Entwining.flip(field_algebra(QQ), C)
    assert check_entwining(e).ok
    D = e.coring()
    assert D.delta == C.delta and D.epsilon == C.epsilon


def test_flip_with_nontrivial_algebra():
    e = Entwining.flip(QC2, grouplike_coalgebra(QQ, 3))
    assert check_entwining(e).ok
    assert e.coring().dim == 6


def test_graded_entwining_matches_graded_coring():
    for X in (reg2, gr.GSet(C2, [[0, 1], [1, 0], [2, 2]], "C2+pt"), gr.GSet.singleton(C2)):
        e = Entwining.graded(A2, X)
        assert rank(e.psi) == e.psi.rows
        assert check_entwining(e).ok
        C = e.coring()
        B = gr.build_graded_coring(A2, X).coring
        assert C.delta == B.delta and C.epsilon == B.epsilon
        assert C.carrier.left_ops == B.carrier.left_ops
        assert C.carrier.right_ops == B.carrier.right_ops


def test_perturbed_psi_fails_with_witness():
    e = Entwining.graded(A2, reg2)
    psi = Mat(QQ, e.psi.A.copy())
    # x (x) g -> g (x) x instead of g (x) xg
    psi.A[:, 0 * 2 + 1] = 0
    psi.A[1 * 2 + 0, 0 * 2 + 1] = 1
    rep = check_entwining(Entwining(QC2, e.coalgebra, psi, name="bad"))
    assert not rep.ok
    failed = rep.failures()
    assert failed and all(c.witness is not None for c in failed)


def test_identity_morphism_is_frobenius():
    e = Entwining.graded(A2, reg2)
    m = EntwiningMorphism.identity(e)
    assert m.check().ok
    r = entwined_frobenius_check(m)
    assert r.verdict == FROBENIUS
    assert any("coseparable: YES" in h for h in r.hypotheses)


def _unit(B):
    return Mat.column(QQ, B.unit)


def test_ground_field_inclusions():
    k1 = grouplike_coalgebra(QQ, 1)
    src = Entwining.flip(field_algebra(QQ), k1)
    for B, verdict in ((QC2, FROBENIUS), (upper_triangular(QQ), NOT_FROBENIUS)):
        m = EntwiningMorphism(src, Entwining.flip(B, k1), _unit(B), identity(QQ, 1))
        assert m.check().ok
        assert entwined_frobenius_check(m).verdict == verdict


def test_graded_instance_agrees_with_tstar():
    pt = gr.GSet.singleton(T1)
    Atriv = gr.GradedAlgebra.trivially_graded(QC2, T1)
    forget = gr.GradedMorphism(A2, reg2, Atriv, pt, [0, 0], [0, 0], identity(QQ, 2), name="forget")
    src = Entwining.graded(A2, reg2)
    tgt = Entwining.flip(QC2, grouplike_coalgebra(QQ, 1))
    m = EntwiningMorphism(src, tgt, identity(QQ, 2), Mat.from_rows(QQ, [[1, 1]]))
    assert m.check().ok
    assert check_coring(tgt.coring()).ok
    assert entwined_frobenius_check(m).verdict == gr.tstar_frobenius_check(forget).verdict
