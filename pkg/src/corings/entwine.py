"""
Entwining structures ``(A, C, psi)`` with ``psi: C (x) A -> A (x) C``,
validated through the coring ``A (x) C``.

Index conventions: ``c (x) a`` sits at ``c*dim A + a`` and ``a (x) c`` at
``a*dim C + c``.
"""

import numpy

from .exactla import Mat, tensor
from .algebra import Bimodule, balanced_tensor, check_bimodule, algebra_map_ok
from .coring import Coring, check_coring, coseparability
from .frobenius import CoringMorphism, frobenius_extension_check, DEFAULT_HEIGHT, DEFAULT_TRIALS
from .report import Report


class Entwining:
    def __init__(self, algebra, coalgebra, psi, name=None):
        n, c = algebra.dim, coalgebra.dim
        if coalgebra.base.dim != 1:
            raise ValueError("C must be a coalgebra over the ground field")
        if psi.shape != (n * c, c * n):
            raise ValueError("psi must map C (x) A to A (x) C")
        self.algebra = algebra
        self.coalgebra = coalgebra
        self.psi = psi
        self.name = name or "(%s,%s,psi)" % (algebra.name, coalgebra.name)
        self._coring = None

    @classmethod
    def flip(cls, A, C):
        "The trivial entwining c (x) a -> a (x) c."
        F = A.field
        n, c = A.dim, C.dim
        P = Mat.zeros(F, n * c, c * n)
        for a in range(n):
            for x in range(c):
                P.A[a * c + x, x * n + a] = 1
        return cls(A, C, P)

    @classmethod
    def graded(cls, Ag, X, C=None):
        "x (x) a_g -> a_g (x) xg over the grouplike coalgebra kX."
        from .coring import grouplike_coalgebra
        F = Ag.field
        C = C or grouplike_coalgebra(F, X.size, name="k" + X.name)
        n, c = Ag.dim, X.size
        P = Mat.zeros(F, n * c, c * n)
        for a in range(n):
            for x in range(c):
                P.A[a * c + X.right(x, Ag.degrees[a]), x * n + a] = 1
        return cls(Ag.algebra, C, P)

    def coring(self):
        """``A (x) C`` with ``(a (x) c) b = a psi(c (x) b)``."""
        if self._coring is not None:
            return self._coring
        A, C, psi = self.algebra, self.coalgebra, self.psi
        F = A.field
        n, c = A.dim, C.dim
        d = n * c
        Ic = numpy.eye(c, dtype=int).astype(object)
        left = [Mat(F, numpy.kron(A.left_mult(i).A, Ic)) for i in range(n)]
        right = []
        for b in range(n):
            R = numpy.zeros((d, d), dtype=object)
            for a in range(n):
                for x in range(c):
                    col = psi.A[:, x * n + b]
                    for t, v in enumerate(col):
                        if v == 0:
                            continue
                        k, y = divmod(t, c)
                        for m, u in enumerate(A.product_vector(a, k)):
                            if u != 0:
                                R[m * c + y, a * c + x] += u * v
            right.append(Mat(F, F.normalize(R)))
        carrier = Bimodule(A, A, d, left, right, name="%s(x)%s" % (A.name, C.name))
        T = balanced_tensor(carrier, carrier)
        dl = C.CC.lift(C.delta)
        cols = []
        for a in range(n):
            for x in range(c):
                v = numpy.zeros(d * d, dtype=object)
                for t, w in enumerate(dl.A[:, x]):
                    if w == 0:
                        continue
                    x1, x2 = divmod(t, c)
                    for u, one in enumerate(A.unit):
                        if one != 0:
                            v[(a * c + x1) * d + u * c + x2] += w * one
                cols.append(list(v))
        delta = T.projection @ Mat.from_columns(F, cols, d * d)
        eps = Mat(F, numpy.kron(numpy.eye(n, dtype=int).astype(object), C.epsilon.A))
        self._coring = Coring(A, carrier, delta, eps, name=carrier.name)
        return self._coring


def check_entwining(e):
    """The entwining axioms, read off from the bimodule and coring axioms of A (x) C."""
    rep = Report("entwining %s" % e.name, tag="entwining via the coring A(x)C")
    C = e.coring()
    for sub in (check_bimodule(C.carrier), check_coring(C)):
        for chk in sub.checks:
            rep.checks.append(chk)
    return rep


class EntwiningMorphism:
    def __init__(self, src, tgt, alpha, gamma, name="(alpha,gamma)"):
        self.src, self.tgt = src, tgt
        self.alpha, self.gamma = alpha, gamma
        self.name = name

    def coring_morphism(self):
        return CoringMorphism(self.src.coring(), self.tgt.coring(), self.alpha,
                              tensor(self.alpha, self.gamma), name=self.name)

    def check(self):
        rep = self.coring_morphism().check()
        rep.title = "entwining morphism %s" % self.name
        return rep

    @classmethod
    def identity(cls, e):
        F = e.algebra.field
        return cls(e, e, Mat.identity(F, e.algebra.dim), Mat.identity(F, e.coalgebra.dim), name="id")


def entwined_frobenius_check(m, height=DEFAULT_HEIGHT, max_trials=DEFAULT_TRIALS):
    """Frobenius test of the induction functor of an entwining morphism."""
    chk = m.check()
    if not chk.ok:
        raise ValueError("invalid entwining morphism: %s" % ", ".join(c.name for c in chk.failures()))
    f = m.coring_morphism()
    rep = frobenius_extension_check(f, height, max_trials)
    rep.hypotheses = list(rep.hypotheses or []) + [
        "%s coseparable: %s" % (C.name, coseparability(C).status) for C in (f.C, f.D)]
    return rep
