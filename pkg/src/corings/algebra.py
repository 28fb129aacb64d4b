"""
Finite-dimensional algebras given by structure constants, bimodules over
them, balanced tensor products, spaces of (bi)module maps and duals.

A bimodule over ``(A, B)`` is stored through the matrices of its basis
actions: ``left_ops[i]`` is ``m -> e_i . m`` and ``right_ops[j]`` is
``m -> m . e_j``.  One-sided modules are bimodules where the other side is
the ground field viewed as a one-dimensional algebra.
"""

import itertools

import numpy
from dataclasses import dataclass, field as dc_field

from . import exactla
from .exactla import Mat, Subspace, kernel, tensor, linear_operator_matrix, unvec, vec
from .report import Report


class AlgebraMismatch(ValueError):
    pass


class FinAlgebra:
    """
    A unital associative algebra with basis ``e_0 .. e_{dim-1}``.  ``mult``
    is the ``dim x dim^2`` matrix with ``mult[k, i*dim + j]`` the coefficient
    of ``e_k`` in ``e_i e_j``.
    """

    def __init__(self, field, dim, mult, unit, name="A", names=None):
        if mult.shape != (dim, dim * dim):
            raise exactla.DimensionError("structure constants must be %dx%d" % (dim, dim * dim))
        if len(unit) != dim:
            raise exactla.DimensionError("unit vector has wrong length")
        self.field = field
        self.dim = dim
        self.mult = mult
        self.unit = [field(x) for x in unit]
        self.name = name
        self.names = names or ["%s%d" % (name.lower()[:1] or "e", i) for i in range(dim)]
        self._L = None
        self._R = None

    def __repr__(self):
        return "FinAlgebra(%s, dim=%d, %s)" % (self.name, self.dim, self.field)

    @classmethod
    def from_triples(cls, field, dim, triples, unit, name="A", names=None):
        "Structure constants as triples ``(i, j, k, c)``: e_i e_j += c e_k."
        M = Mat.zeros(field, dim, dim * dim)
        for i, j, k, c in triples:
            M.A[k, i * dim + j] = field(M.A[k, i * dim + j] + field(c))
        return cls(field, dim, M, unit, name, names)

    @classmethod
    def from_products(cls, field, dim, product, unit, name="A", names=None):
        "``product(i, j)`` returns the coordinate vector of e_i e_j."
        M = Mat.zeros(field, dim, dim * dim)
        for i in range(dim):
            for j in range(dim):
                v = product(i, j)
                for k in range(dim):
                    M.A[k, i * dim + j] = field(v[k])
        return cls(field, dim, M, unit, name, names)

    # structure

    def basis_vector(self, i):
        v = [0] * self.dim
        v[i] = 1
        return v

    def left_mult(self, i):
        "Matrix of x -> e_i x."
        if self._L is None:
            n = self.dim
            self._L = [self.mult.select_columns(range(i * n, (i + 1) * n)) for i in range(n)]
        return self._L[i]

    def right_mult(self, j):
        "Matrix of x -> x e_j."
        if self._R is None:
            n = self.dim
            self._R = [self.mult.select_columns(range(j, n * n, n)) for j in range(n)]
        return self._R[j]

    def left_matrix(self, u):
        return _combine(self.field, self.dim, [self.left_mult(i) for i in range(self.dim)], u)

    def right_matrix(self, v):
        return _combine(self.field, self.dim, [self.right_mult(j) for j in range(self.dim)], v)

    def mul(self, u, v):
        return (self.left_matrix(u) @ Mat.column(self.field, v)).column_vector()

    def product_vector(self, i, j):
        return self.mult.select_columns([i * self.dim + j]).column_vector()

    def is_unit_vector(self, u):
        return [self.field(x) for x in u] == self.unit

    def opposite(self):
        n = self.dim
        M = Mat.zeros(self.field, n, n * n)
        for i in range(n):
            for j in range(n):
                M.A[:, i * n + j] = self.mult.A[:, j * n + i]
        return FinAlgebra(self.field, n, M, self.unit, self.name + "^op", self.names)

    def same_as(self, other):
        return self is other or (
            self.field == other.field and self.dim == other.dim
            and self.mult == other.mult and self.unit == other.unit)

    def center(self):
        "Basis of the centre, as coordinate vectors."
        n = self.dim
        blocks = [self.left_mult(i) - self.right_mult(i) for i in range(n)]
        # z is central iff e_i z = z e_i for all i
        M = blocks[0].vstack(*blocks[1:]) if blocks else Mat.zeros(self.field, 0, n)
        return kernel(M)

    def check(self):
        return check_algebra(self)

    def to_json(self):
        fmt = self.field.fmt
        triples = []
        n = self.dim
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    c = self.mult.A[k, i * n + j]
                    if c != 0:
                        triples.append([i, j, k, fmt(c)])
        return {"dim": n, "unit": [fmt(x) for x in self.unit], "mult": triples}


def _combine(field, n, mats, coeffs):
    out = Mat.zeros(field, n, n)
    for c, M in zip(coeffs, mats):
        if c != 0:
            out = out + M.scale(c)
    return out


def field_algebra(field):
    "The ground field as a one-dimensional algebra (cached per field)."
    try:
        return _FIELD_ALGEBRAS[field]
    except KeyError:
        pass
    k = FinAlgebra(field, 1, Mat.from_rows(field, [[1]]), [1], name="k", names=["1"])
    _FIELD_ALGEBRAS[field] = k
    return k


_FIELD_ALGEBRAS = {}


def check_algebra(a):
    """Associativity and the two unit laws, with a witness triple on failure."""
    rep = Report("algebra %s" % a.name, tag="basic notations: unital associative algebra")
    n = a.dim
    F = a.field
    bad = None
    for i in range(n):
        Li = a.left_mult(i)
        for j in range(n):
            # (e_i e_j) e_k == e_i (e_j e_k) for all k
            eij = a.product_vector(i, j)
            left = a.left_matrix(eij)
            right = Li @ a.left_mult(j)
            if left != right:
                diff = (left - right).A
                for k in range(n):
                    if any(x != 0 for x in diff[:, k]):
                        bad = (i, j, k)
                        break
                break
        if bad:
            break
    rep.add("associativity", bad is None,
            "" if bad is None else "(e%d e%d) e%d != e%d (e%d e%d)" % (bad + bad),
            witness=None if bad is None else list(bad))
    U = a.left_matrix(a.unit)
    V = a.right_matrix(a.unit)
    I = Mat.identity(F, n)
    bad_l = [k for k in range(n) if U.select_columns([k]) != I.select_columns([k])]
    bad_r = [k for k in range(n) if V.select_columns([k]) != I.select_columns([k])]
    rep.add("left unit", not bad_l, "" if not bad_l else "1 e%d != e%d" % (bad_l[0], bad_l[0]),
            witness=bad_l[:1] or None)
    rep.add("right unit", not bad_r, "" if not bad_r else "e%d 1 != e%d" % (bad_r[0], bad_r[0]),
            witness=bad_r[:1] or None)
    return rep


# ---------------------------------------------------------------------------
# standard algebras


def group_algebra(field, table, identity=0, name="kG"):
    """Group algebra from a multiplication table ``table[g][h] = gh``."""
    n = len(table)
    triples = [(g, h, table[g][h], 1) for g in range(n) for h in range(n)]
    unit = [0] * n
    unit[identity] = 1
    return FinAlgebra.from_triples(field, n, triples, unit, name=name,
                                   names=["g%d" % g for g in range(n)])


def cyclic_group_table(n):
    return [[(g + h) % n for h in range(n)] for g in range(n)]


def upper_triangular(field, name="T2"):
    """T2(k) with basis e11, e12, e22."""
    # e11 e11 = e11, e11 e12 = e12, e12 e22 = e12, e22 e22 = e22
    triples = [(0, 0, 0, 1), (0, 1, 1, 1), (1, 2, 1, 1), (2, 2, 2, 1)]
    return FinAlgebra.from_triples(field, 3, triples, [1, 0, 1], name=name,
                                   names=["e11", "e12", "e22"])


def truncated_polynomial(field, coeffs, name=None):
    """
    k[x]/(f) for monic f = x^n + c_{n-1} x^{n-1} + ... + c_0, given as
    ``coeffs = [c_0, ..., c_{n-1}]``; basis 1, x, ..., x^{n-1}.
    """
    n = len(coeffs)
    coeffs = [field(c) for c in coeffs]

    def reduce(power):
        # coordinate vector of x^power
        v = [0] * n
        if power < n:
            v[power] = 1
            return v
        prev = reduce(power - 1)
        # x * (sum v_i x^i)
        out = [0] + prev[:-1]
        top = prev[-1]
        for i in range(n):
            out[i] = field(out[i] - top * coeffs[i])
        return out

    name = name or "k[x]/(f)"
    unit = [1] + [0] * (n - 1)
    return FinAlgebra.from_products(field, n, lambda i, j: reduce(i + j), unit, name=name,
                                    names=["x^%d" % i for i in range(n)])


def matrix_algebra(field, n, name=None):
    "M_n(k) with basis E_ij at index i*n+j."
    dim = n * n
    triples = []
    for i in range(n):
        for j in range(n):
            for l in range(n):
                triples.append((i * n + j, j * n + l, i * n + l, 1))
    unit = [1 if i == j else 0 for i in range(n) for j in range(n)]
    return FinAlgebra.from_triples(field, dim, triples, unit, name=name or "M%d" % n)


def algebra_map_ok(rho, A, B):
    """Is ``rho`` (dimB x dimA) a unital algebra map A -> B?"""
    if rho.shape != (B.dim, A.dim):
        return False
    if (rho @ Mat.column(A.field, A.unit)).column_vector() != B.unit:
        return False
    for i in range(A.dim):
        ri = rho.column_vector(i)
        for j in range(A.dim):
            rj = rho.column_vector(j)
            lhs = (rho @ Mat.column(A.field, A.product_vector(i, j))).column_vector()
            if lhs != B.mul(ri, rj):
                return False
    return True


# ---------------------------------------------------------------------------
# bimodules


class Bimodule:
    """A finite-dimensional (A, B)-bimodule."""

    def __init__(self, left_alg, right_alg, dim, left_ops=None, right_ops=None, name="M"):
        F = left_alg.field
        if right_alg.field != F:
            raise AlgebraMismatch("algebras over different fields")
        self.field = F
        self.left_alg = left_alg
        self.right_alg = right_alg
        self.dim = dim
        I = Mat.identity(F, dim)
        if left_ops is None:
            if left_alg.dim != 1:
                raise ValueError("left action required")
            left_ops = [I]
        if right_ops is None:
            if right_alg.dim != 1:
                raise ValueError("right action required")
            right_ops = [I]
        if len(left_ops) != left_alg.dim or len(right_ops) != right_alg.dim:
            raise exactla.DimensionError("one action matrix per algebra basis vector")
        for M in list(left_ops) + list(right_ops):
            if M.shape != (dim, dim):
                raise exactla.DimensionError("action matrices must be %dx%d" % (dim, dim))
        self.left_ops = list(left_ops)
        self.right_ops = list(right_ops)
        self.name = name

    def __repr__(self):
        return "Bimodule(%s, %s-%s, dim=%d)" % (self.name, self.left_alg.name,
                                                self.right_alg.name, self.dim)

    @classmethod
    def regular(cls, A, name=None):
        return cls(A, A, A.dim, [A.left_mult(i) for i in range(A.dim)],
                   [A.right_mult(j) for j in range(A.dim)], name=name or A.name)

    @classmethod
    def right_regular(cls, A, name=None):
        "A as a (k, A)-bimodule."
        return cls(field_algebra(A.field), A, A.dim, None,
                   [A.right_mult(j) for j in range(A.dim)], name=name or A.name)

    @classmethod
    def left_regular(cls, A, name=None):
        "A as an (A, k)-bimodule."
        return cls(A, field_algebra(A.field), A.dim, [A.left_mult(i) for i in range(A.dim)],
                   None, name=name or A.name)

    @classmethod
    def vector_space(cls, field, n, name="V"):
        k = field_algebra(field)
        return cls(k, k, n, None, None, name=name)

    @classmethod
    def from_actions(cls, left_alg, right_alg, dim, left_action=None, right_action=None, name="M"):
        """
        From action matrices in the tensor convention: ``left_action`` is
        ``dim x (dimA * dim)`` (column a*dim+m is e_a . m) and
        ``right_action`` is ``dim x (dim * dimB)`` (column m*dimB+b is m . e_b).
        """
        left_ops = right_ops = None
        if left_action is not None:
            left_ops = [left_action.select_columns(range(a * dim, (a + 1) * dim))
                        for a in range(left_alg.dim)]
        if right_action is not None:
            nb = right_alg.dim
            right_ops = [right_action.select_columns(range(b, dim * nb, nb)) for b in range(nb)]
        return cls(left_alg, right_alg, dim, left_ops, right_ops, name)

    @property
    def left_action(self):
        return self.left_ops[0].hstack(*self.left_ops[1:])

    @property
    def right_action(self):
        nb = self.right_alg.dim
        F = self.field
        out = Mat.zeros(F, self.dim, self.dim * nb)
        for b, M in enumerate(self.right_ops):
            for m in range(self.dim):
                out.A[:, m * nb + b] = M.A[:, m]
        return out

    def act_left(self, a):
        return _combine(self.field, self.dim, self.left_ops, a)

    def act_right(self, b):
        return _combine(self.field, self.dim, self.right_ops, b)

    def restrict(self, left_map=None, right_map=None, left_alg=None, right_alg=None):
        """
        Restriction of scalars along algebra maps ``left_map: A0 -> A`` and
        ``right_map: B0 -> B`` (matrices, columns = images of basis vectors).
        """
        left_ops, right_ops = self.left_ops, self.right_ops
        la, ra = self.left_alg, self.right_alg
        if left_map is not None:
            la = left_alg
            left_ops = [self.act_left(left_map.column_vector(i)) for i in range(la.dim)]
        if right_map is not None:
            ra = right_alg
            right_ops = [self.act_right(right_map.column_vector(j)) for j in range(ra.dim)]
        return Bimodule(la, ra, self.dim, left_ops, right_ops, self.name)

    def change_basis(self, P, name=None):
        """The same bimodule in the basis given by the columns of invertible P."""
        Pinv = exactla.inverse(P)
        if Pinv is None:
            raise ValueError("change of basis matrix is singular")
        return Bimodule(self.left_alg, self.right_alg, self.dim,
                        [Pinv @ M @ P for M in self.left_ops],
                        [Pinv @ M @ P for M in self.right_ops], name or self.name)

    def submodule(self, sub, name=None):
        """
        The sub-bimodule on the subspace ``sub`` (which must be stable);
        returns ``(bimodule, inclusion)``.
        """
        B = sub.basis_matrix()
        coords = sub.coordinate_map()
        lo, ro = [], []
        for M in self.left_ops + self.right_ops:
            img = M @ B
            for j in range(img.cols):
                if not sub.contains(img.column_vector(j)):
                    raise ValueError("subspace is not a sub-bimodule")
        lo = [coords @ M @ B for M in self.left_ops]
        ro = [coords @ M @ B for M in self.right_ops]
        return Bimodule(self.left_alg, self.right_alg, sub.dim, lo, ro, name or self.name), B

    def direct_sum(self, other, name=None):
        F = self.field
        lo = [exactla.block_diag(F, [a, b]) for a, b in zip(self.left_ops, other.left_ops)]
        ro = [exactla.block_diag(F, [a, b]) for a, b in zip(self.right_ops, other.right_ops)]
        return Bimodule(self.left_alg, self.right_alg, self.dim + other.dim, lo, ro,
                        name or "%s+%s" % (self.name, other.name))

    def check(self):
        return check_bimodule(self)

    def to_json(self):
        return {
            "dim": self.dim,
            "left": [M.to_json() for M in self.left_ops],
            "right": [M.to_json() for M in self.right_ops],
        }


def _unit_witness(f, I, text):
    if f == I:
        return True, "", None
    j = next(j for j in range(I.cols) if list(f.A[:, j]) != list(I.A[:, j]))
    return False, text % j + " differs", {"column": j, "value": [str(x) for x in f.A[:, j]]}


def check_bimodule(M):
    rep = Report("bimodule %s" % M.name, tag="basic notations: bimodule")
    A, B = M.left_alg, M.right_alg
    F = M.field
    I = Mat.identity(F, M.dim)
    bad = None
    for i in range(A.dim):
        for j in range(A.dim):
            if M.act_left(A.product_vector(i, j)) != M.left_ops[i] @ M.left_ops[j]:
                bad = (i, j)
                break
        if bad:
            break
    rep.add("left associativity", bad is None, "" if bad is None else "(e%d e%d).m" % bad, bad)
    rep.add("left unit", *_unit_witness(M.act_left(A.unit), I, "1.e%d"))
    bad = None
    for i in range(B.dim):
        for j in range(B.dim):
            # m.(e_i e_j) = (m.e_i).e_j
            if M.act_right(B.product_vector(i, j)) != M.right_ops[j] @ M.right_ops[i]:
                bad = (i, j)
                break
        if bad:
            break
    rep.add("right associativity", bad is None, "" if bad is None else "m.(e%d e%d)" % bad, bad)
    rep.add("right unit", *_unit_witness(M.act_right(B.unit), I, "e%d.1"))
    bad = None
    for i in range(A.dim):
        for j in range(B.dim):
            if M.left_ops[i] @ M.right_ops[j] != M.right_ops[j] @ M.left_ops[i]:
                bad = (i, j)
                break
        if bad:
            break
    rep.add("actions commute", bad is None, "" if bad is None else "(e%d.m).f%d" % bad, bad)
    return rep


# ---------------------------------------------------------------------------
# balanced tensor products


class TensorProduct:
    """
    ``M_1 (x)_{A_1} M_2 (x) ... (x) M_n`` as a quotient of the k-tensor
    product of the factors.

    ``projection`` maps the k-tensor (row-major basis) onto the quotient;
    ``section_idx[t]`` is the k-tensor basis index lifting quotient basis
    vector t, so the section is a 0/1 selection matrix.
    """

    def __init__(self, factors, projection, section_idx, bimodule):
        self.factors = tuple(factors)
        self.projection = projection
        self.section_idx = list(section_idx)
        self.bimodule = bimodule
        self.dim = bimodule.dim
        self.field = bimodule.field
        self._dims = [M.dim for M in self.factors]

    @property
    def left(self):
        return self.factors[0]

    @property
    def right(self):
        return self.factors[-1]

    @property
    def kdim(self):
        n = 1
        for d in self._dims:
            n *= d
        return n

    @property
    def section(self):
        S = Mat.zeros(self.field, self.kdim, self.dim)
        for t, i in enumerate(self.section_idx):
            S.A[i, t] = 1
        return S

    def multi_index(self, t):
        "Factor indices of the k-tensor basis vector lifting quotient vector t."
        i = self.section_idx[t]
        out = []
        for d in reversed(self._dims):
            out.append(i % d)
            i //= d
        return tuple(reversed(out))

    def lift(self, f):
        """Rows of f (in quotient coordinates) placed into k-tensor coordinates."""
        out = Mat.zeros(self.field, self.kdim, f.cols)
        for t, i in enumerate(self.section_idx):
            out.A[i, :] = f.A[t, :]
        return out

    def element(self, *vectors):
        "Image of the pure tensor v_1 (x) ... (x) v_n."
        w = Mat.column(self.field, vectors[0])
        for v in vectors[1:]:
            w = tensor(w, Mat.column(self.field, v))
        return (self.projection @ w).column_vector()

    def __repr__(self):
        return "TensorProduct(%s, dim=%d)" % (" (x) ".join(M.name for M in self.factors), self.dim)


def as_tensor(M):
    "A bimodule seen as a one-factor tensor product."
    if isinstance(M, TensorProduct):
        return M
    F = M.field
    return TensorProduct([M], Mat.identity(F, M.dim), range(M.dim), M)


_TENSOR_CACHE = {}


def balanced_tensor(M, N, name=None):
    """
    ``M (x)_B N`` for an (A, B)-bimodule M and a (B, C)-bimodule N.
    """
    key = (id(M), id(N))
    hit = _TENSOR_CACHE.get(key)
    if hit is not None and hit[0] is M and hit[1] is N:
        return hit[2]
    B = M.right_alg
    if not B.same_as(N.left_alg):
        raise AlgebraMismatch("middle algebras differ: %s vs %s" % (B.name, N.left_alg.name))
    F = M.field
    dm, dn = M.dim, N.dim
    Im, In = Mat.identity(F, dm), Mat.identity(F, dn)
    rels = []
    if not (B.dim == 1 and B.unit == [1]):
        for b in range(B.dim):
            R = tensor(M.right_ops[b], In) - tensor(Im, N.left_ops[b])
            if not R.is_zero():
                rels.append(R.T)
    if rels:
        rel = Subspace.row_space(rels[0].vstack(*rels[1:]))
    else:
        rel = Subspace.zero(F, dm * dn)
    q, P, S = exactla.quotient(dm * dn, rel)
    sec_idx = rel.complement_basis()
    lo = [P @ _kron_columns(Ma, In, sec_idx) for Ma in M.left_ops]
    ro = [P @ _kron_columns(Im, Nc, sec_idx) for Nc in N.right_ops]
    bim = Bimodule(M.left_alg, N.right_alg, q, lo, ro,
                   name or "%s(x)%s" % (M.name, N.name))
    T = TensorProduct([M, N], P, sec_idx, bim)
    T.relations = rel
    _TENSOR_CACHE[key] = (M, N, T)
    return T


def _kron_columns(f, g, idx):
    "The columns ``idx`` of ``tensor(f, g)``, without forming the whole product."
    n = g.cols
    cols = [numpy.kron(f.A[:, i // n], g.A[:, i % n]) for i in idx]
    if not cols:
        return Mat.zeros(f.field, f.rows * g.rows, 0)
    return Mat(f.field, numpy.array(cols, dtype=object).T.reshape(f.rows * g.rows, len(idx)))


def tensor_chain(*mods, name=None):
    """``M_1 (x) M_2 (x) ... (x) M_n``, associated to the left."""
    if len(mods) == 1:
        return as_tensor(mods[0])
    if len(mods) == 2:
        return balanced_tensor(mods[0], mods[1], name)
    key = tuple(id(M) for M in mods)
    hit = _TENSOR_CACHE.get(key)
    if hit is not None and all(a is b for a, b in zip(hit[0], mods)):
        return hit[1]
    head = tensor_chain(*mods[:-1])
    last = mods[-1]
    T = balanced_tensor(head.bimodule, last)
    F = last.field
    P = exactla.times_kron_identity(T.projection, head.projection, last.dim)
    d = last.dim
    sec = []
    for i in T.section_idx:
        b, m = divmod(i, d)
        sec.append(head.section_idx[b] * d + m)
    bim = T.bimodule
    if name:
        bim.name = name
    out = TensorProduct(list(head.factors) + [last], P, sec, bim)
    _TENSOR_CACHE[key] = (mods, out)
    return out


def induced_map(src, tgt, maps):
    """
    The map ``src -> tgt`` induced by k-linear maps on the factors.

    ``maps[i]`` sends ``src.factors[i]`` into the k-tensor of a consecutive
    block of ``tgt.factors`` (use :func:`lifted` for maps whose codomain is
    itself a tensor product).  The blocks, concatenated, must exhaust
    ``tgt.factors``.  Well defined when the maps are compatible with the
    balancing relations, which is the caller's responsibility.
    """
    src = as_tensor(src)
    tgt = as_tensor(tgt)
    F = src.field
    if len(maps) != len(src.factors):
        raise exactla.DimensionError("one map per source factor")
    for f, M in zip(maps, src.factors):
        if f.cols != M.dim:
            raise exactla.DimensionError("map does not start at factor %s" % M.name)
    total = 1
    for f in maps:
        total *= f.rows
    if total != tgt.kdim:
        raise exactla.DimensionError("maps land in dimension %d, target k-tensor has %d"
                                     % (total, tgt.kdim))
    cols = []
    for t in range(src.dim):
        idx = src.multi_index(t)
        w = maps[0].A[:, idx[0]]
        for f, j in zip(maps[1:], idx[1:]):
            w = _kron_vec(w, f.A[:, j])
        cols.append(w)
    K = Mat(F, F.normalize(numpy.array(cols, dtype=object).T.reshape(total, src.dim))) \
        if cols else Mat.zeros(F, total, 0)
    return tgt.projection @ K


def _kron_vec(u, v):
    return numpy.kron(u, v) if u.size and v.size else numpy.zeros(u.size * v.size, dtype=object)


def lifted(f, T):
    """A map into a tensor product, re-expressed in its k-tensor coordinates."""
    return as_tensor(T).lift(f)


def tensor_maps(src, tgt, *maps):
    """
    ``f_1 (x) ... (x) f_n : src -> tgt`` for maps between the factors of
    two tensor products with the same shape.
    """
    src = as_tensor(src)
    tgt = as_tensor(tgt)
    return induced_map(src, tgt, list(maps))


def tensor_identity_map(T, i, f, tgt):
    "Apply f to the i-th factor of T and the identity elsewhere."
    T = as_tensor(T)
    F = T.field
    maps = [Mat.identity(F, M.dim) for M in T.factors]
    maps[i] = f
    return induced_map(T, tgt, maps)


# ---------------------------------------------------------------------------
# spaces of module maps


@dataclass
class HomSpace:
    source: object
    target: object
    constraints: tuple
    basis: list = dc_field(default_factory=list)

    @property
    def dim(self):
        return len(self.basis)

    def combine(self, coeffs):
        F = self.source.field
        out = Mat.zeros(F, self.target.dim, self.source.dim)
        for c, h in zip(coeffs, self.basis):
            if c != 0:
                out = out + h.scale(c)
        return out

    def coordinates(self, f):
        if not self.basis:
            return [] if f.is_zero() else None
        B = Mat.from_columns(f.field, [vec(h) for h in self.basis], f.rows * f.cols)
        return exactla.solve(B, vec(f))


def solve_linear_maps(field, shape, blocks):
    """
    All matrices F of ``shape`` annihilated by every linear operator in
    ``blocks`` (each a ``(terms, out_shape)`` pair, see
    :func:`exactla.linear_operator_matrix`).  Returns an echelon-canonical
    list of basis matrices.
    """
    m, n = shape
    S = exactla.SparseSystem(field, m * n)
    for terms, out in blocks:
        S.add_operator(shape, terms, out)
    return [unvec(field, v, shape) for v in S.kernel().rows]


def linearity_blocks(source, target, left=True, right=True):
    """Constraint blocks saying F: source -> target is left/right linear."""
    F = source.field
    m, n = target.dim, source.dim
    Im, In = Mat.identity(F, m), Mat.identity(F, n)
    blocks = []
    if left and not _trivial(source.left_alg):
        if not source.left_alg.same_as(target.left_alg):
            raise AlgebraMismatch("left algebras differ")
        for Ls, Lt in zip(source.left_ops, target.left_ops):
            blocks.append(([("plain", Lt, In), ("plain", Im, Ls, -1)], (m, n)))
    if right and not _trivial(source.right_alg):
        if not source.right_alg.same_as(target.right_alg):
            raise AlgebraMismatch("right algebras differ")
        for Rs, Rt in zip(source.right_ops, target.right_ops):
            blocks.append(([("plain", Rt, In), ("plain", Im, Rs, -1)], (m, n)))
    return blocks


def _trivial(A):
    return A.dim == 1


def hom_space(source, target, left=True, right=True):
    """
    Basis of the (bi)module maps ``source -> target``; ``left`` / ``right``
    choose which linearity constraints are imposed.
    """
    blocks = linearity_blocks(source, target, left, right)
    basis = solve_linear_maps(source.field, (target.dim, source.dim), blocks)
    return HomSpace(source, target, (left, right), basis)


def is_bimodule_map(f, source, target, left=True, right=True):
    if left:
        for Ls, Lt in zip(source.left_ops, target.left_ops):
            if f @ Ls != Lt @ f:
                return False
    if right:
        for Rs, Rt in zip(source.right_ops, target.right_ops):
            if f @ Rs != Rt @ f:
                return False
    return True


# ---------------------------------------------------------------------------
# duals


class Dual:
    """
    A dual module together with its evaluation data.  ``basis[i]`` is the
    matrix (dim A x dim M) of the i-th basis functional.
    """

    def __init__(self, module, original, basis, side):
        self.module = module
        self.original = original
        self.basis = basis
        self.side = side

    def functional(self, coords):
        F = self.original.field
        out = Mat.zeros(F, self.basis[0].rows if self.basis else 0, self.original.dim)
        for c, f in zip(coords, self.basis):
            if c != 0:
                out = out + f.scale(c)
        return out

    def coordinates(self, f):
        F = f.field
        B = Mat.from_columns(F, [vec(h) for h in self.basis], f.rows * f.cols)
        return exactla.solve(B, vec(f))


def right_dual(M):
    """
    ``M* = Hom_B(M_B, B_B)`` for an (A, B)-bimodule M; a (B, A)-bimodule via
    ``(b f a)(m) = b f(a m)``.
    """
    B = M.right_alg
    F = M.field
    reg = Bimodule.regular(B)
    # right B-linear maps M -> B
    m, n = B.dim, M.dim
    Im, In = Mat.identity(F, m), Mat.identity(F, n)
    blocks = [([("plain", reg.right_ops[j], In), ("plain", Im, M.right_ops[j], -1)], (m, n))
              for j in range(B.dim)]
    basis = solve_linear_maps(F, (m, n), blocks)
    d = len(basis)
    coords = _coordinate_solver(F, basis, (m, n))
    lo = [Mat.from_columns(F, [coords(B.left_mult(b) @ f) for f in basis], d) for b in range(B.dim)]
    ro = [Mat.from_columns(F, [coords(f @ M.left_ops[a]) for f in basis], d)
          for a in range(M.left_alg.dim)]
    mod = Bimodule(B, M.left_alg, d, lo, ro, name=M.name + "*")
    return Dual(mod, M, basis, "right")


def left_dual(M):
    """
    ``*M = Hom_A(_A M, _A A)`` for an (A, B)-bimodule M; a (B, A)-bimodule via
    ``(b f a)(m) = f(m b) a``.
    """
    A = M.left_alg
    F = M.field
    reg = Bimodule.regular(A)
    m, n = A.dim, M.dim
    Im, In = Mat.identity(F, m), Mat.identity(F, n)
    blocks = [([("plain", reg.left_ops[i], In), ("plain", Im, M.left_ops[i], -1)], (m, n))
              for i in range(A.dim)]
    basis = solve_linear_maps(F, (m, n), blocks)
    d = len(basis)
    coords = _coordinate_solver(F, basis, (m, n))
    lo = [Mat.from_columns(F, [coords(f @ M.right_ops[b]) for f in basis], d)
          for b in range(M.right_alg.dim)]
    ro = [Mat.from_columns(F, [coords(A.right_mult(a) @ f) for f in basis], d) for a in range(A.dim)]
    mod = Bimodule(M.right_alg, A, d, lo, ro, name="*" + M.name)
    return Dual(mod, M, basis, "left")


def _coordinate_solver(F, basis, shape):
    m, n = shape
    if not basis:
        return lambda f: []
    B = Mat.from_columns(F, [vec(h) for h in basis], m * n)
    Linv = exactla.left_inverse(B)

    def coords(f):
        c = (Linv @ Mat.column(F, vec(f))).column_vector()
        if (B @ Mat.column(F, c)).column_vector() != [F(x) for x in vec(f)]:
            raise ValueError("map is not in the span of the basis")
        return c

    return coords


def dual_module(M, side="right"):
    """Dual of a module; ``side`` says which action the functionals respect."""
    return right_dual(M) if side == "right" else left_dual(M)


def double_dual_map(M):
    """
    ``sigma_M : M -> *(M*)``, m -> (f -> f(m)), for an (A, B)-bimodule M
    with its right dual; returns ``(sigma, D1, D2)`` with the matrix of sigma
    in the basis of *(M*).
    """
    D1 = right_dual(M)
    D2 = left_dual(D1.module)
    F = M.field
    B = M.right_alg
    cols = []
    for j in range(M.dim):
        # functional on M*: f_i -> f_i(e_j), as a B x dim(M*) matrix
        g = Mat.from_columns(F, [f.column_vector(j) for f in D1.basis], B.dim) \
            if D1.basis else Mat.zeros(F, B.dim, 0)
        cols.append(D2.coordinates(g))
    if any(c is None for c in cols):
        raise ValueError("evaluation is not left linear")
    sigma = Mat.from_columns(F, cols, D2.module.dim)
    return sigma, D1, D2


# ---------------------------------------------------------------------------
# invertible elements of a space of square matrices


@dataclass
class InvertibleResult:
    status: str                 # "YES", "NO" or "UNDECIDED"
    witness: object = None      # invertible matrix when YES
    coefficients: list = None   # combination of the basis giving the witness
    evaluations: int = 0
    grid: str = ""
    reason: str = ""

    def __bool__(self):
        return self.status == "YES"

    def to_json(self):
        out = {"status": self.status, "evaluations": self.evaluations, "grid": self.grid}
        if self.reason:
            out["reason"] = self.reason
        if self.coefficients is not None:
            out["coefficients"] = [str(c) for c in self.coefficients]
        if self.witness is not None:
            out["witness"] = self.witness.to_json()
        return out


DEFAULT_GRID_BUDGET = 10 ** 6


def _graded_grid(n, top):
    """All of {0..top}^n, by increasing max entry, lexicographic within."""
    yield (0,) * n
    for h in range(1, top + 1):
        for t in itertools.product(range(h + 1), repeat=n):
            if max(t) == h:
                yield t


def invertible_element_exists(basis, budget=DEFAULT_GRID_BUDGET):
    """
    Decide whether the span of the square matrices ``basis`` contains an
    invertible matrix.  The determinant of ``sum t_i h_i`` is a polynomial
    of degree d (the matrix size) in each variable, so it vanishes
    identically iff it vanishes on ``{0..d}^n``; over GF(p) with p <= d the
    grid is all of GF(p)^n, which decides the question directly.
    """
    if not basis:
        return InvertibleResult("NO", reason="empty space", grid="{}")
    F = basis[0].field
    d = basis[0].rows
    if any(h.shape != (d, d) for h in basis):
        raise exactla.DimensionError("invertible_element_exists needs square maps of one size")
    if d == 0:
        return InvertibleResult("YES", witness=basis[0], coefficients=[1] + [0] * (len(basis) - 1),
                                grid="{}")
    n = len(basis)
    top = d if (F.char == 0 or F.char > d) else F.char - 1
    size = (top + 1) ** n
    grid = "{0..%d}^%d" % (top, n)
    evals = 0
    for t in _graded_grid(n, top):
        if not any(t):
            continue
        evals += 1
        if evals > budget:
            # a common kernel vector still settles the question exactly
            ck = kernel(basis[0].vstack(*basis[1:]))
            if ck.dim:
                return InvertibleResult("NO", evaluations=evals - 1, grid=grid,
                                        reason="common kernel vector %s" % [str(x) for x in ck.rows[0]])
            return InvertibleResult("UNDECIDED", evaluations=evals - 1, grid=grid,
                                    reason="grid budget %d exceeded (grid size %d)" % (budget, size))
        M = Mat.zeros(F, d, d)
        for c, h in zip(t, basis):
            if c:
                M = M + h.scale(c)
        if exactla.det(M) != 0:
            return InvertibleResult("YES", witness=M, coefficients=list(t), evaluations=evals,
                                    grid=grid)
    return InvertibleResult("NO", evaluations=evals, grid=grid,
                            reason="generic determinant ≡ 0 (grid exhausted)")


# ---------------------------------------------------------------------------
# action maps out of binary tensor products


def left_action_map(T, f):
    """
    ``K (x)_B N -> N``, ``u (x) n -> f(u) . n`` for a binary tensor product
    ``T`` of K and N and a map ``f: K -> B`` (matrix dim B x dim K).
    """
    K, N = T.factors
    F = T.field
    B = N.left_alg
    k, n = K.dim, N.dim
    W = numpy.zeros((n, k * n), dtype=object)
    for i in range(k):
        block = Mat.zeros(F, n, n)
        for b in range(B.dim):
            c = f.A[b, i]
            if c != 0:
                block = block + N.left_ops[b].scale(c)
        W[:, i * n:(i + 1) * n] = block.A
    return Mat(F, W).select_columns(T.section_idx)


def right_action_map(T, f):
    """``M (x)_B K -> M``, ``m (x) u -> m . f(u)`` for ``f: K -> B``."""
    M, K = T.factors
    F = T.field
    B = M.right_alg
    m, k = M.dim, K.dim
    W = numpy.zeros((m, m * k), dtype=object)
    for j in range(k):
        block = Mat.zeros(F, m, m)
        for b in range(B.dim):
            c = f.A[b, j]
            if c != 0:
                block = block + M.right_ops[b].scale(c)
        W[:, j::k] = block.A
    return Mat(F, W).select_columns(T.section_idx)


_REGULAR = {}


def regular_bimodule(A):
    "The regular A-bimodule, one object per algebra so tensor caching works."
    hit = _REGULAR.get(id(A))
    if hit is not None and hit[0] is A:
        return hit[1]
    R = Bimodule.regular(A)
    _REGULAR[id(A)] = (A, R)
    return R


def fgp_check(M, side="left"):
    """
    Is M finitely generated projective as a left (``side="left"``) module
    over its left algebra, or as a right module over its right algebra?
    Decided by the dual basis equation ``sum_i f_i(m) e_i = m``, which is
    linear once a basis of Hom_A(M, A) is fixed.  Returns ``(ok, dual
    basis)`` where the dual basis is a list of ``(functional, element)``.
    """
    F = M.field
    n = M.dim
    if n == 0:
        return True, []
    if side == "left":
        D = left_dual(M)
        ops = M.left_ops
    else:
        D = right_dual(M)
        ops = M.right_ops
    cols, labels = [], []
    for j, f in enumerate(D.basis):
        for i in range(n):
            # x -> f(x) . e_i  (or e_i . f(x) on the right)
            G = numpy.zeros((n, n), dtype=object)
            for a, op in enumerate(ops):
                row = f.A[a, :]
                if any(x != 0 for x in row):
                    G = G + numpy.outer(op.A[:, i], row)
            cols.append(vec(Mat(F, F.normalize(G))))
            labels.append((j, i))
    if not cols:
        return False, None
    S = Mat.from_columns(F, cols, n * n)
    x = exactla.solve(S, vec(Mat.identity(F, n)))
    if x is None:
        return False, None
    pairs = {}
    for c, (j, i) in zip(x, labels):
        if c != 0:
            pairs.setdefault(j, [0] * n)
            pairs[j][i] = F(pairs[j][i] + c)
    return True, [(D.basis[j], pairs[j]) for j in sorted(pairs)]
