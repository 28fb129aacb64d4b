"""
Corings over finite-dimensional algebras, bicomodules and cotensor
products.

Everything comodule-like is a :class:`Bicomodule`.  A right C-comodule is a
bicomodule whose left coring is the trivial coring of the ground field, and
symmetrically for left comodules, so one cotensor routine and one hom-space
routine cover all cases.  Over a trivial coring the cotensor product is the
plain balanced tensor product.
"""

import numpy

from . import exactla
from .exactla import Mat, Subspace, kernel, tensor, vec, unvec
from .algebra import (
    AlgebraMismatch, Bimodule, balanced_tensor, tensor_chain, induced_map,
    field_algebra, regular_bimodule, left_action_map, right_action_map,
    solve_linear_maps, linearity_blocks, HomSpace, right_dual, left_dual,
    algebra_map_ok,
)
from .report import Report


class CoringMismatch(ValueError):
    pass


class NotApplicable(ValueError):
    "Raised when a criterion's hypotheses fail; never a verdict."


# ---------------------------------------------------------------------------
# corings


class Coring:
    """
    An A-coring: the bimodule ``carrier`` with ``delta`` (matrix into the
    coordinates of ``carrier (x)_A carrier``) and ``epsilon`` (matrix into A).
    """

    def __init__(self, base, carrier, delta, epsilon, name="C", trivial=False):
        if not (carrier.left_alg.same_as(base) and carrier.right_alg.same_as(base)):
            raise AlgebraMismatch("carrier is not a bimodule over the base algebra")
        self.base = base
        self.carrier = carrier
        self.field = base.field
        self.name = name
        self.trivial = trivial
        self.CC = balanced_tensor(carrier, carrier)
        if delta.shape != (self.CC.dim, carrier.dim):
            raise exactla.DimensionError("delta must be %dx%d" % (self.CC.dim, carrier.dim))
        if epsilon.shape != (base.dim, carrier.dim):
            raise exactla.DimensionError("epsilon must be %dx%d" % (base.dim, carrier.dim))
        self.delta = delta
        self.epsilon = epsilon

    @property
    def dim(self):
        return self.carrier.dim

    def __repr__(self):
        return "Coring(%s over %s, dim=%d)" % (self.name, self.base.name, self.dim)

    def same_as(self, other):
        if self is other:
            return True
        return (self.base.same_as(other.base) and self.dim == other.dim
                and self.delta == other.delta and self.epsilon == other.epsilon
                and self.carrier.left_ops == other.carrier.left_ops
                and self.carrier.right_ops == other.carrier.right_ops)

    def check(self):
        return check_coring(self)

    def regular(self):
        "C as a (C, C)-bicomodule."
        if getattr(self, "_regular", None) is None:
            self._regular = Bicomodule(self, self, self.carrier, self.delta, self.delta,
                                       name=self.name)
        return self._regular

    def right_regular(self):
        "C as a right C-comodule (left structure forgotten down to k)."
        if getattr(self, "_right_regular", None) is None:
            k = trivial_coring(field_algebra(self.field))
            carrier = self.carrier.restrict(left_map=_unit_map(self.base), left_alg=k.base)
            carrier.name = self.name
            T = balanced_tensor(carrier, self.carrier)
            # same k-tensor coordinates as C (x)_A C, relations agree
            rho = T.projection @ self.CC.lift(self.delta)
            self._right_regular = Bicomodule(k, self, carrier, None, rho, name=self.name)
        return self._right_regular

    def left_regular(self):
        "C as a left C-comodule."
        if getattr(self, "_left_regular", None) is None:
            k = trivial_coring(field_algebra(self.field))
            carrier = self.carrier.restrict(right_map=_unit_map(self.base), right_alg=k.base)
            carrier.name = self.name
            T = balanced_tensor(self.carrier, carrier)
            lam = T.projection @ self.CC.lift(self.delta)
            self._left_regular = Bicomodule(self, k, carrier, lam, None, name=self.name)
        return self._left_regular

    def to_json(self):
        return {
            "base": self.base.to_json(),
            "carrier": self.carrier.to_json(),
            "delta": self.delta.to_json(),
            "epsilon": self.epsilon.to_json(),
        }


def _unit_map(A):
    "The unit k -> A as a matrix."
    return Mat.column(A.field, A.unit)


def _coaction_right_counit(M, C):
    "M (x)_A C -> M, m (x) c -> m . eps(c)."
    return right_action_map(balanced_tensor(M, C.carrier), C.epsilon)


def _coaction_left_counit(C, M):
    "C (x)_A M -> M, c (x) m -> eps(c) . m."
    return left_action_map(balanced_tensor(C.carrier, M), C.epsilon)


def check_coring(C):
    rep = Report("coring %s" % C.name, tag="basic notations: coring axioms")
    A = C.base
    M = C.carrier
    CC = C.CC
    regA = regular_bimodule(A)
    for name, f, tgt in (("delta", C.delta, CC.bimodule), ("epsilon", C.epsilon, regA)):
        ok_l = all(f @ Ls == Lt @ f for Ls, Lt in zip(M.left_ops, tgt.left_ops))
        ok_r = all(f @ Rs == Rt @ f for Rs, Rt in zip(M.right_ops, tgt.right_ops))
        rep.add("%s is A-bimodule map" % name, ok_l and ok_r)
    CCC = tensor_chain(M, M, M)
    I = Mat.identity(C.field, M.dim)
    lhs = induced_map(CC, CCC, [I, CC.lift(C.delta)]) @ C.delta
    rhs = induced_map(CC, CCC, [CC.lift(C.delta), I]) @ C.delta
    rep.add("coassociativity", lhs == rhs, *_witness(lhs, rhs, "(C(x)Delta)Delta(e%d)"))
    left = left_action_map(CC, C.epsilon) @ C.delta
    right = right_action_map(CC, C.epsilon) @ C.delta
    rep.add("left counit", left == I, *_witness(left, I, "(eps(x)C)Delta(e%d)"))
    rep.add("right counit", right == I, *_witness(right, I, "(C(x)eps)Delta(e%d)"))
    return rep


def _witness(f, g, text):
    if f == g:
        return "", None
    d = (f - g).A
    for j in range(d.shape[1]):
        if any(x != 0 for x in d[:, j]):
            return text % j + " differs", {"column": j, "lhs": [str(x) for x in f.A[:, j]],
                                          "rhs": [str(x) for x in g.A[:, j]]}
    return "", None


# ---------------------------------------------------------------------------
# standard corings

_TRIVIAL = {}


def trivial_coring(A):
    """The trivial A-coring A, one object per algebra."""
    hit = _TRIVIAL.get(id(A))
    if hit is not None and hit[0] is A:
        return hit[1]
    R = regular_bimodule(A)
    T = balanced_tensor(R, R)
    F = A.field
    delta = T.projection @ tensor(Mat.identity(F, A.dim), _unit_map(A))
    C = Coring(A, R, delta, Mat.identity(F, A.dim), name=A.name, trivial=True)
    _TRIVIAL[id(A)] = (A, C)
    return C


def coalgebra(field, dim, delta, epsilon, name="C"):
    """A k-coalgebra from ``delta`` (dim^2 x dim, row-major) and ``epsilon``."""
    k = field_algebra(field)
    V = Bimodule(k, k, dim, name=name)
    return Coring(k, V, delta, epsilon, name=name)


def grouplike_coalgebra(field, n, name=None):
    "kX with Delta(x) = x (x) x and eps(x) = 1."
    delta = Mat.zeros(field, n * n, n)
    for x in range(n):
        delta.A[x * n + x, x] = 1
    eps = Mat.from_rows(field, [[1] * n])
    return coalgebra(field, n, delta, eps, name=name or "k%d" % n)


def dual_coalgebra(A, name=None):
    """
    The coalgebra A* dual to a finite-dimensional algebra: basis the dual
    basis e^i, Delta = transpose of the multiplication, eps(e^i) = 1_i.
    """
    F = A.field
    delta = A.mult.T
    eps = Mat.from_rows(F, [A.unit])
    return coalgebra(F, A.dim, delta, eps, name=name or "(%s)*" % A.name)


def sweedler_coring(A, B, iota, name=None):
    """
    The canonical A-coring A (x)_B A for an algebra map ``iota: B -> A``,
    Delta(a (x) a') = a (x) 1 (x) a', eps(a (x) a') = a a'.
    """
    F = A.field
    if not algebra_map_ok(iota, B, A):
        raise AlgebraMismatch("iota is not a unital algebra map")
    regA = regular_bimodule(A)
    AB = regA.restrict(right_map=iota, right_alg=B)
    BA = regA.restrict(left_map=iota, left_alg=B)
    T = balanced_tensor(AB, BA)
    carrier = T.bimodule
    carrier.name = name or "A(x)A"
    CC = balanced_tensor(carrier, carrier)
    one = Mat.column(F, A.unit)
    I = Mat.identity(F, A.dim)
    left = T.lift(T.projection @ tensor(I, one))    # a -> a (x) 1
    right = T.lift(T.projection @ tensor(one, I))   # a' -> 1 (x) a'
    delta = induced_map(T, CC, [left, right])
    # eps(a (x) a') = a a'
    eps = A.mult.select_columns(T.section_idx)
    return Coring(A, carrier, delta, eps, name=carrier.name)


# ---------------------------------------------------------------------------
# bicomodules


class Bicomodule:
    """
    A (C', C)-bicomodule: ``carrier`` is an (A', A)-bimodule, ``lam`` maps
    into ``C' (x)_{A'} M`` and ``rho`` into ``M (x)_A C``.  A missing
    coaction on a trivial coring is ``m -> 1 (x) m`` (resp. ``m (x) 1``).
    """

    def __init__(self, left_coring, right_coring, carrier, lam=None, rho=None, name="M"):
        if not carrier.left_alg.same_as(left_coring.base):
            raise CoringMismatch("left algebra of %s is not the base of %s"
                                 % (carrier.name, left_coring.name))
        if not carrier.right_alg.same_as(right_coring.base):
            raise CoringMismatch("right algebra of %s is not the base of %s"
                                 % (carrier.name, right_coring.name))
        F = carrier.field
        self.field = F
        self.left_coring = left_coring
        self.right_coring = right_coring
        self.carrier = carrier
        self.name = name
        self.LT = balanced_tensor(left_coring.carrier, carrier)
        self.RT = balanced_tensor(carrier, right_coring.carrier)
        I = Mat.identity(F, carrier.dim)
        if lam is None:
            if not left_coring.trivial:
                raise ValueError("left coaction required for a nontrivial coring")
            lam = self.LT.projection @ tensor(_unit_map(left_coring.base), I)
        if rho is None:
            if not right_coring.trivial:
                raise ValueError("right coaction required for a nontrivial coring")
            rho = self.RT.projection @ tensor(I, _unit_map(right_coring.base))
        if lam.shape != (self.LT.dim, carrier.dim) or rho.shape != (self.RT.dim, carrier.dim):
            raise exactla.DimensionError("coaction matrices have the wrong shape")
        self.lam = lam
        self.rho = rho

    @property
    def dim(self):
        return self.carrier.dim

    def __repr__(self):
        return "Bicomodule(%s, %s-%s, dim=%d)" % (self.name, self.left_coring.name,
                                                  self.right_coring.name, self.dim)

    def check(self):
        return check_bicomodule(self)

    def to_json(self):
        return {"carrier": self.carrier.to_json(), "lambda": self.lam.to_json(),
                "rho": self.rho.to_json()}


def right_comodule(C, carrier, rho, name="M"):
    """A right C-comodule; ``carrier`` may be a (k, A)-bimodule."""
    k = trivial_coring(field_algebra(C.field))
    return Bicomodule(k, C, carrier, None, rho, name=name)


def left_comodule(C, carrier, lam, name="M"):
    k = trivial_coring(field_algebra(C.field))
    return Bicomodule(C, k, carrier, lam, None, name=name)


def module_as_bicomodule(M, name=None):
    "An (A', A)-bimodule as a bicomodule over the trivial corings."
    return Bicomodule(trivial_coring(M.left_alg), trivial_coring(M.right_alg), M,
                      name=name or M.name)


def comodule_from_grouplike(C, g, name="k_g"):
    """The one-dimensional right comodule k with rho(1) = 1 (x) g (C over k)."""
    F = C.field
    k = field_algebra(F)
    V = Bimodule(k, k, 1, name=name)
    return right_comodule(C, V, Mat.column(F, g), name=name)


def graded_comodule(C, dims, name="M", side="right"):
    """
    A comodule over the grouplike coalgebra kX given by the dimensions of
    its homogeneous components: basis vectors of degree x come in a block.
    """
    F = C.field
    k = field_algebra(F)
    n = sum(dims)
    V = Bimodule(k, k, n, name=name)
    X = len(dims)
    co = Mat.zeros(F, n * X, n)
    i = 0
    for x, d in enumerate(dims):
        for _ in range(d):
            if side == "right":
                co.A[i * X + x, i] = 1
            else:
                co.A[x * n + i, i] = 1
            i += 1
    if side == "right":
        return right_comodule(C, V, co, name)
    return left_comodule(C, V, co, name)


def check_bicomodule(M):
    rep = Report("bicomodule %s" % M.name, tag="basic notations: comodule axioms")
    Cl, Cr = M.left_coring, M.right_coring
    X = M.carrier
    F = M.field
    I = Mat.identity(F, X.dim)
    rep.add("lambda is bimodule map", _is_bimodule_map(M.lam, X, M.LT.bimodule))
    rep.add("rho is bimodule map", _is_bimodule_map(M.rho, X, M.RT.bimodule))
    # right coaction
    MCC = tensor_chain(X, Cr.carrier, Cr.carrier)
    lhs = induced_map(M.RT, MCC, [Mat.identity(F, X.dim), Cr.CC.lift(Cr.delta)]) @ M.rho
    rhs = induced_map(M.RT, MCC, [M.RT.lift(M.rho), Mat.identity(F, Cr.dim)]) @ M.rho
    rep.add("rho coassociative", lhs == rhs, *_witness(lhs, rhs, "rho on e%d"))
    cu = _coaction_right_counit(X, Cr) @ M.rho
    rep.add("rho counital", cu == I, *_witness(cu, I, "rho on e%d"))
    # left coaction
    CCM = tensor_chain(Cl.carrier, Cl.carrier, X)
    lhs = induced_map(M.LT, CCM, [Cl.CC.lift(Cl.delta), Mat.identity(F, X.dim)]) @ M.lam
    rhs = induced_map(M.LT, CCM, [Mat.identity(F, Cl.dim), M.LT.lift(M.lam)]) @ M.lam
    rep.add("lambda coassociative", lhs == rhs, *_witness(lhs, rhs, "lambda on e%d"))
    cu = _coaction_left_counit(Cl, X) @ M.lam
    rep.add("lambda counital", cu == I, *_witness(cu, I, "lambda on e%d"))
    # compatibility (lambda (x) C) rho = (C' (x) rho) lambda
    CMC = tensor_chain(Cl.carrier, X, Cr.carrier)
    lhs = induced_map(M.RT, CMC, [M.LT.lift(M.lam), Mat.identity(F, Cr.dim)]) @ M.rho
    rhs = induced_map(M.LT, CMC, [Mat.identity(F, Cl.dim), M.RT.lift(M.rho)]) @ M.lam
    rep.add("coactions commute", lhs == rhs, *_witness(lhs, rhs, "on e%d"))
    return rep


def _is_bimodule_map(f, S, T):
    return (all(f @ a == b @ f for a, b in zip(S.left_ops, T.left_ops))
            and all(f @ a == b @ f for a, b in zip(S.right_ops, T.right_ops)))


# ---------------------------------------------------------------------------
# cotensor products


class CotensorSpace:
    """
    ``M []_C N`` as the subspace ``ker omega`` of ``M (x)_A N``, with the
    induced (C', C'')-bicomodule structure in ``bicomodule``.
    """

    def __init__(self, left, right, tensor_product, subspace, omega, bicomodule, inclusion):
        self.left = left
        self.right = right
        self.tensor = tensor_product
        self.subspace = subspace
        self.omega = omega
        self.bicomodule = bicomodule
        self.inclusion = inclusion

    @property
    def dim(self):
        return self.subspace.dim

    def __repr__(self):
        return "CotensorSpace(%s [] %s, dim=%d)" % (self.left.name, self.right.name, self.dim)


def _same_coring(C, D):
    return C is D or C.same_as(D)


_COTENSOR_CACHE = {}


def cotensor(M, N, name=None):
    """``M []_C N`` for a (C', C)-bicomodule M and a (C, C'')-bicomodule N."""
    key = (id(M), id(N))
    hit = _COTENSOR_CACHE.get(key)
    if hit is not None and hit[0] is M and hit[1] is N:
        return hit[2]
    C = M.right_coring
    if not _same_coring(C, N.left_coring):
        raise CoringMismatch("middle corings differ: %s vs %s" % (C.name, N.left_coring.name))
    F = M.field
    T = balanced_tensor(M.carrier, N.carrier)
    MCN = tensor_chain(M.carrier, C.carrier, N.carrier)
    Im, In = Mat.identity(F, M.dim), Mat.identity(F, N.dim)
    omega = (induced_map(T, MCN, [M.RT.lift(M.rho), In])
             - induced_map(T, MCN, [Im, N.LT.lift(N.lam)]))
    K = kernel(omega)
    iota = K.basis_matrix()
    sub, _ = T.bimodule.submodule(K, name=name or "%s[]%s" % (M.name, N.name))
    Cl, Cr = M.left_coring, N.right_coring
    # lambda: restrict (lambda_M (x) N) and solve through C' (x) iota
    W = balanced_tensor(Cl.carrier, sub)
    amb = tensor_chain(Cl.carrier, M.carrier, N.carrier)
    J = induced_map(W, amb, [Mat.identity(F, Cl.dim), T.lift(iota)])
    lamT = induced_map(T, amb, [M.LT.lift(M.lam), In]) @ iota
    lam = exactla.solve_matrix(J, lamT)
    V = balanced_tensor(sub, Cr.carrier)
    amb = tensor_chain(M.carrier, N.carrier, Cr.carrier)
    J = induced_map(V, amb, [T.lift(iota), Mat.identity(F, Cr.dim)])
    rhoT = induced_map(T, amb, [Im, N.RT.lift(N.rho)]) @ iota
    rho = exactla.solve_matrix(J, rhoT)
    if lam is None or rho is None:
        raise ArithmeticError("induced coaction does not factor through the cotensor product")
    B = Bicomodule(Cl, Cr, sub, lam, rho, name=sub.name)
    out = CotensorSpace(M, N, T, K, omega, B, iota)
    _COTENSOR_CACHE[key] = (M, N, out)
    return out


def cotensor_map(S, T, f, g):
    """
    ``f [] g : S -> T`` between cotensor spaces for colinear ``f`` and ``g``
    on the factors, in cotensor coordinates.
    """
    full = induced_map(S.tensor, T.tensor, [f, g])
    img = full @ S.inclusion
    return T.subspace.coordinate_map() @ img


def counit_iso_left(N):
    """``C []_C N -> N`` via eps (x) N, with its inverse lambda_N."""
    C = N.left_coring
    S = cotensor(C.regular(), N)
    f = left_action_map(S.tensor, C.epsilon) @ S.inclusion
    inv = S.subspace.coordinate_map() @ N.lam
    return S, f, inv


def counit_iso_right(M):
    """``M []_C C -> M`` via M (x) eps, with its inverse rho_M."""
    C = M.right_coring
    S = cotensor(M, C.regular())
    f = right_action_map(S.tensor, C.epsilon) @ S.inclusion
    inv = S.subspace.coordinate_map() @ M.rho
    return S, f, inv


# ---------------------------------------------------------------------------
# spaces of colinear maps


def colinearity_blocks(M, N, left=True, right=True):
    """
    Linear constraints on F: M -> N saying F is an (A', A)-bimodule map that
    commutes with the coactions on the chosen sides.
    """
    F = M.field
    m, n = M.dim, N.dim
    blocks = linearity_blocks(M.carrier, N.carrier, True, True)
    Im = Mat.identity(F, m)
    if right:
        if not _same_coring(M.right_coring, N.right_coring):
            raise CoringMismatch("right corings differ")
        c = M.right_coring.dim
        # rho_N F = (F (x) C) rho_M
        blocks.append(([("plain", N.rho, Im),
                        ("left", N.RT.projection, M.RT.section @ M.rho, c, -1)],
                       (N.RT.dim, m)))
    if left:
        if not _same_coring(M.left_coring, N.left_coring):
            raise CoringMismatch("left corings differ")
        c = M.left_coring.dim
        blocks.append(([("plain", N.lam, Im),
                        ("right", N.LT.projection, M.LT.section @ M.lam, c, -1)],
                       (N.LT.dim, m)))
    return blocks


def comodule_hom_space(M, N, left=True, right=True):
    """Basis of the bicolinear maps M -> N."""
    blocks = colinearity_blocks(M, N, left, right)
    basis = solve_linear_maps(M.field, (N.dim, M.dim), blocks)
    return HomSpace(M, N, ("colinear", left, right), basis)


def nat_space(L, L2):
    """
    Natural transformations between the cotensor functors of two
    (D, C)-bicomodules, realised as their bicolinear maps.
    """
    return comodule_hom_space(L, L2)


def is_colinear(f, M, N, left=True, right=True):
    F = M.field
    if not _is_bimodule_map(f, M.carrier, N.carrier):
        return False
    if right:
        lhs = N.rho @ f
        rhs = N.RT.projection @ tensor(f, Mat.identity(F, M.right_coring.dim)) @ M.RT.section @ M.rho
        if lhs != rhs:
            return False
    if left:
        lhs = N.lam @ f
        rhs = N.LT.projection @ tensor(Mat.identity(F, M.left_coring.dim), f) @ M.LT.section @ M.lam
        if lhs != rhs:
            return False
    return True


def _affine_solution(field, shape, blocks, affine_terms, affine_rhs):
    """
    Solve homogeneous ``blocks`` together with ``op(F) = rhs``; returns
    ``(particular, homogeneous basis)`` or None.
    """
    S = exactla.SparseSystem(field, shape[0] * shape[1])
    for t, o in blocks:
        S.add_operator(shape, t, o)
    eqs = exactla.operator_rows(field, shape, *affine_terms)
    sol = S.solve_affine(eqs, vec(affine_rhs))
    if sol is None:
        return None
    x, K = sol
    return unvec(field, x, shape), [unvec(field, v, shape) for v in K.rows]


# ---------------------------------------------------------------------------
# coseparability and relative injectivity


class Decision:
    """YES / NO / NOT_APPLICABLE with an optional witness and reason."""

    def __init__(self, status, witness=None, reason="", space=None, tag=""):
        self.status = status
        self.witness = witness
        self.reason = reason
        self.space = space or []
        self.tag = tag

    def __bool__(self):
        return self.status == "YES"

    def __repr__(self):
        return "Decision(%s%s)" % (self.status, ", " + self.reason if self.reason else "")

    def to_json(self):
        out = {"status": self.status, "tag": self.tag}
        if self.reason:
            out["reason"] = self.reason
        if self.witness is not None:
            out["witness"] = self.witness.to_json()
        out["solution_space_dim"] = len(self.space)
        return out


def tensor_square_bicomodule(C):
    """C (x)_A C as a (C, C)-bicomodule, coactions Delta (x) C and C (x) Delta."""
    if getattr(C, "_square", None) is not None:
        return C._square
    F = C.field
    I = Mat.identity(F, C.dim)
    CC = C.CC
    sq = CC.bimodule
    # rho = C (x) Delta : CC -> (CC) (x) C  (same basis as the chain C C C)
    CCC = tensor_chain(C.carrier, C.carrier, C.carrier)
    rho = induced_map(CC, CCC, [I, CC.lift(C.delta)])
    # lambda = Delta (x) C : CC -> C (x) (CC), regrouped
    W = balanced_tensor(C.carrier, sq)
    regroup = W.projection @ tensor(I, CC.projection)
    lam = regroup @ tensor(CC.lift(C.delta), I) @ CC.section
    B = Bicomodule(C, C, sq, lam, rho, name="%s(x)%s" % (C.name, C.name))
    C._square = B
    return B


def coseparability(C):
    """
    Decide whether Delta splits as a map of bicomodules: find a bicolinear
    sigma: C (x)_A C -> C with sigma Delta = id (exact affine solve).
    """
    F = C.field
    sq = tensor_square_bicomodule(C)
    R = C.regular()
    blocks = colinearity_blocks(sq, R)
    shape = (C.dim, sq.dim)
    sol = _affine_solution(F, shape, blocks,
                           ([("plain", Mat.identity(F, C.dim), C.delta)], (C.dim, C.dim)),
                           Mat.identity(F, C.dim))
    tag = "coseparable: Delta is a split monomorphism of bicomodules"
    if sol is None:
        return Decision("NO", reason="cointegral system is infeasible", tag=tag)
    x, K = sol
    hom = comodule_hom_space(sq, R)
    return Decision("YES", witness=x, space=hom.basis, tag=tag)


def is_cointegral(C, sigma):
    sq = tensor_square_bicomodule(C)
    return (sigma @ C.delta).is_identity() and is_colinear(sigma, sq, C.regular())


def is_semisimple_by_trace(A):
    """
    True when the trace form (a, b) -> tr(L_{ab}) is nondegenerate, which
    forces A to be semisimple; in characteristic 0 the converse holds too.
    """
    F = A.field
    n = A.dim
    G = Mat.zeros(F, n, n)
    for i in range(n):
        for j in range(n):
            G.A[i, j] = _trace(A.left_matrix(A.product_vector(i, j)))
    return G.rank() == n


def _trace(M):
    s = 0
    for i in range(M.rows):
        s = s + M.A[i, i]
    return M.field(s)


def injectivity_splitting(M, coseparable=None):
    """
    Relative injectivity of a right comodule: a right-colinear
    sigma: M (x)_A C -> M with sigma rho_M = id.
    """
    C = M.right_coring
    F = M.field
    tag = "injective comodule: rho_M splits colinearly"
    A = C.base
    ok_base = A.dim == 1 or is_semisimple_by_trace(A)
    if not ok_base:
        if coseparable is None:
            coseparable = bool(coseparability(C))
        if not coseparable:
            return Decision("NOT_APPLICABLE", tag=tag,
                            reason="base algebra not known to be semisimple and coring not coseparable")
    MC = M.RT
    CCC = tensor_chain(M.carrier, C.carrier, C.carrier)
    rho = induced_map(MC, CCC, [Mat.identity(F, M.dim), C.CC.lift(C.delta)])
    # only the right structure matters: forget any left coaction
    src = Bicomodule(trivial_coring(M.carrier.left_alg), C, MC.bimodule, None, rho)
    tgt = M if M.left_coring.trivial else \
        Bicomodule(trivial_coring(M.carrier.left_alg), C, M.carrier, None, M.rho, M.name)
    blocks = colinearity_blocks(src, tgt, left=False, right=True)
    shape = (M.dim, MC.dim)
    sol = _affine_solution(F, shape, blocks,
                           ([("plain", Mat.identity(F, M.dim), M.rho)], (M.dim, M.dim)),
                           Mat.identity(F, M.dim))
    if sol is None:
        return Decision("NO", reason="splitting system is infeasible", tag=tag)
    return Decision("YES", witness=sol[0], space=sol[1], tag=tag)


# ---------------------------------------------------------------------------
# basic duality


class DualComodule:
    """The dual of a one-sided comodule together with the pairing data."""

    def __init__(self, comodule, original, dual, side):
        self.comodule = comodule
        self.original = original
        self.dual = dual
        self.side = side


def dualize(M):
    """
    Dual of a finite one-sided comodule.  A right C-comodule M gives
    ``M* = Hom_A(M_A, A_A)`` as a left C-comodule, and a left comodule N
    gives ``*N = Hom_A(_A N, _A A)`` as a right comodule.
    """
    if M.left_coring.trivial and M.left_coring.base.dim == 1:
        return _dual_of_right(M)
    if M.right_coring.trivial and M.right_coring.base.dim == 1:
        return _dual_of_left(M)
    raise NotApplicable("dualize expects a one-sided comodule")


def _dual_of_right(M):
    C = M.right_coring
    A = C.base
    F = M.field
    D = right_dual(M.carrier)      # (A, k)-bimodule
    Dm = D.module
    m, d, c = M.dim, Dm.dim, C.dim
    W = balanced_tensor(C.carrier, Dm)
    # ev: C (x) M* -> Hom_k(M, C), c (x) f -> (x -> c . f(x))
    ev = numpy.zeros((c * m, c * d), dtype=object)
    for ci in range(c):
        for j, f in enumerate(D.basis):
            G = Mat.zeros(F, c, m)
            for a in range(A.dim):
                row = f.A[a, :]
                if any(x != 0 for x in row):
                    col = C.carrier.right_ops[a].A[:, ci]
                    G = G + Mat(F, numpy.outer(col, row))
            ev[:, ci * d + j] = numpy.array(vec(G), dtype=object)
    ev = Mat(F, F.normalize(ev)).select_columns(W.section_idx)
    # target for f: x -> sum f(x_0) . x_1
    rhs = []
    for f in D.basis:
        # M (x) C -> C, x (x) c -> f(x) . c
        K = numpy.zeros((c, m * c), dtype=object)
        for i in range(m):
            blk = Mat.zeros(F, c, c)
            for a in range(A.dim):
                if f.A[a, i] != 0:
                    blk = blk + C.carrier.left_ops[a].scale(f.A[a, i])
            K[:, i * c:(i + 1) * c] = blk.A
        g = Mat(F, K).select_columns(M.RT.section_idx) @ M.rho
        rhs.append(vec(g))
    lam = exactla.solve_matrix(ev, Mat.from_columns(F, rhs, c * m))
    if lam is None:
        raise ArithmeticError("dual coaction does not exist")
    k = trivial_coring(field_algebra(F))
    out = Bicomodule(C, k, Dm, lam, None, name=M.name + "*")
    return DualComodule(out, M, D, "right")


def _dual_of_left(N):
    C = N.left_coring
    A = C.base
    F = N.field
    D = left_dual(N.carrier)       # (k, A)-bimodule
    Dm = D.module
    m, d, c = N.dim, Dm.dim, C.dim
    W = balanced_tensor(Dm, C.carrier)
    # ev: *N (x) C -> Hom_k(N, C), f (x) c -> (x -> f(x) . c)
    ev = numpy.zeros((c * m, d * c), dtype=object)
    for j, f in enumerate(D.basis):
        for ci in range(c):
            G = Mat.zeros(F, c, m)
            for a in range(A.dim):
                row = f.A[a, :]
                if any(x != 0 for x in row):
                    col = C.carrier.left_ops[a].A[:, ci]
                    G = G + Mat(F, numpy.outer(col, row))
            ev[:, j * c + ci] = numpy.array(vec(G), dtype=object)
    ev = Mat(F, F.normalize(ev)).select_columns(W.section_idx)
    rhs = []
    for f in D.basis:
        # C (x) N -> C, c (x) x -> c . f(x)
        K = numpy.zeros((c, c * m), dtype=object)
        for ci in range(c):
            for i in range(m):
                v = numpy.zeros(c, dtype=object)
                for a in range(A.dim):
                    if f.A[a, i] != 0:
                        v = v + C.carrier.right_ops[a].A[:, ci] * f.A[a, i]
                K[:, ci * m + i] = v
        g = Mat(F, F.normalize(K)).select_columns(N.LT.section_idx) @ N.lam
        rhs.append(vec(g))
    rho = exactla.solve_matrix(ev, Mat.from_columns(F, rhs, c * m))
    if rho is None:
        raise ArithmeticError("dual coaction does not exist")
    k = trivial_coring(field_algebra(F))
    out = Bicomodule(k, C, Dm, None, rho, name="*" + N.name)
    return DualComodule(out, N, D, "left")


def double_dual(M):
    """
    ``sigma_M: M -> *(M*)`` for a right comodule, m -> (f -> f(m)); returns
    ``(sigma, first dual, second dual)``.
    """
    D1 = dualize(M)
    D2 = dualize(D1.comodule)
    F = M.field
    A = M.right_coring.base
    coords = []
    for j in range(M.dim):
        g = Mat.from_columns(F, [f.column_vector(j) for f in D1.dual.basis], A.dim) \
            if D1.dual.basis else Mat.zeros(F, A.dim, 0)
        coords.append(D2.dual.coordinates(g))
    if any(c is None for c in coords):
        raise ArithmeticError("evaluation map is not linear")
    sigma = Mat.from_columns(F, coords, D2.comodule.dim)
    return sigma, D1, D2
