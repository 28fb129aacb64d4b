"""
Exact linear algebra over the rationals and prime fields.

Matrices are numpy object arrays wrapped in :class:`Mat`.  Rational entries
are ``int`` or ``fractions.Fraction``; entries over GF(p) are ints reduced
into ``range(p)``.  Elimination is fraction free: rows are scaled to
integers and kept content-reduced, and division only happens when the final
reduced row echelon form is read off.

Basis ordering for tensor products is row major: ``e_i (x) e_j`` has index
``i * dim2 + j``, which is what ``numpy.kron`` produces.
"""

from fractions import Fraction
from math import gcd, lcm

import numpy


class DimensionError(ValueError):
    pass


# ---------------------------------------------------------------------------
# fields


class Field:
    """Base class for the two supported ground fields."""

    char = 0
    name = "?"

    def __call__(self, x):
        raise NotImplementedError

    def __eq__(self, other):
        return type(self) is type(other) and self.char == other.char

    def __hash__(self):
        return hash((type(self).__name__, self.char))

    def __repr__(self):
        return self.name

    zero = 0
    one = 1

    def array(self, rows):
        rows = list(rows)
        if not rows:
            return numpy.zeros((0, 0), dtype=object)
        A = numpy.empty((len(rows), len(rows[0])), dtype=object)
        for i, row in enumerate(rows):
            if len(row) != A.shape[1]:
                raise DimensionError("ragged matrix")
            for j, x in enumerate(row):
                A[i, j] = self(x)
        return A


class RationalField(Field):
    name = "Q"
    char = 0

    def __call__(self, x):
        if type(x) is int:
            return x
        if isinstance(x, str):
            x = Fraction(x.strip())
        elif isinstance(x, bool):
            x = int(x)
        elif isinstance(x, float):
            raise TypeError("inexact scalar %r; use an int, a Fraction or a string like '1/3'" % x)
        elif not isinstance(x, (int, Fraction)):
            x = Fraction(x)
        if isinstance(x, Fraction) and x.denominator == 1:
            return x.numerator
        return x

    def inv(self, x):
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        return Fraction(1) / x if isinstance(x, int) else 1 / x

    def normalize(self, A):
        return A

    def dot(self, A, B):
        Ai, Bi = _as_int64(A), _as_int64(B)
        if Ai is not None and Bi is not None:
            C = _small_dot(Ai, Bi)
            if C is not None:
                return C
        C = _fraction_dot(A, B)
        if C is not None:
            return C
        # clear denominators row-wise on A and column-wise on B, multiply integers
        da = [lcm(*(_den(x) for x in row)) for row in A]
        db = [lcm(*(_den(x) for x in col)) for col in B.T]
        Ai = _scaled(A, da, 1)
        Bi = _scaled(B, db, 0)
        C = _int_dot(Ai, Bi)
        if all(d == 1 for d in da) and all(d == 1 for d in db):
            return C
        out = numpy.empty(C.shape, dtype=object)
        for i in range(C.shape[0]):
            for j in range(C.shape[1]):
                c, d = C[i, j], da[i] * db[j]
                if c == 0 or d == 1:
                    out[i, j] = c
                else:
                    q = Fraction(c, d)
                    out[i, j] = q.numerator if q.denominator == 1 else q
        return out

    def fmt(self, x):
        x = Fraction(x)
        if x.denominator == 1:
            return str(x.numerator)
        return "%d/%d" % (x.numerator, x.denominator)

    def to_json(self):
        return "Q"


QQ = RationalField()


def _den(x):
    return x.denominator if type(x) is Fraction else 1


def _scaled(A, d, axis):
    out = numpy.empty(A.shape, dtype=object)
    for i, s in enumerate(d):
        if axis == 1:
            out[i, :] = [int(x * s) for x in A[i, :]]
        else:
            out[:, i] = [int(x * s) for x in A[:, i]]
    return out


_INT64_SAFE = 2**62


_den_array = numpy.frompyfunc(_den, 1, 1)


def _fraction_dot(A, B):
    """
    Rational product with denominators cleared in int64: row lcm on A,
    column lcm on B.  None when something does not fit.
    """
    try:
        da = numpy.lcm.reduce(_den_array(A).astype(numpy.int64), axis=1)
        db = numpy.lcm.reduce(_den_array(B).astype(numpy.int64), axis=0)
        Ai = (A * da[:, None].astype(object)).astype(numpy.int64)
        Bi = (B * db[None, :].astype(object)).astype(numpy.int64)
    except (OverflowError, TypeError, ValueError):
        return None
    if (da <= 0).any() or (db <= 0).any():
        return None
    C = _small_dot(Ai, Bi)
    if C is None:
        return None
    d = numpy.multiply.outer(da.astype(object), db.astype(object))
    C = C.astype(object)
    out = C // d
    for i, j in zip(*numpy.nonzero((C % d) != 0)):
        out[i, j] = Fraction(C[i, j], d[i, j])
    return out


def _as_int64(A):
    "A as an int64 array when every entry is an integer that fits, else None."
    try:
        Ai = A.astype(numpy.int64)
    except (OverflowError, TypeError, ValueError):
        return None
    if A.size and not (Ai == A).all():
        return None
    return Ai


def _small_dot(Ai, Bi):
    if Ai.size == 0 or Bi.size == 0:
        return numpy.zeros((Ai.shape[0], Bi.shape[1]), dtype=object)
    ma = int(numpy.abs(Ai).max())
    mb = int(numpy.abs(Bi).max())
    if ma * mb * Ai.shape[1] >= _INT64_SAFE:
        return None
    return (Ai @ Bi).astype(object)


def _int_dot(A, B):
    "Exact integer product of two object arrays, via int64 when it cannot overflow."
    if A.size == 0 or B.size == 0:
        return numpy.zeros((A.shape[0], B.shape[1]), dtype=object)
    Ai, Bi = _as_int64(A), _as_int64(B)
    if Ai is not None and Bi is not None:
        C = _small_dot(Ai, Bi)
        if C is not None:
            return C
    return A.dot(B)


def _is_prime(p):
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


class PrimeField(Field):
    def __init__(self, p):
        p = int(p)
        if not _is_prime(p):
            raise ValueError("GF(%d): %d is not prime" % (p, p))
        self.char = p
        self.name = "GF(%d)" % p

    def __call__(self, x):
        p = self.char
        if isinstance(x, str):
            x = Fraction(x.strip())
        if isinstance(x, Fraction):
            if x.denominator % p == 0:
                raise ZeroDivisionError("%s has no image in %s" % (x, self.name))
            return x.numerator * pow(x.denominator, -1, p) % p
        if isinstance(x, float):
            raise TypeError("inexact scalar %r" % x)
        return int(x) % p

    def inv(self, x):
        if x % self.char == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(int(x), -1, self.char)

    def normalize(self, A):
        if A.size:
            A = A % self.char
        return A

    def dot(self, A, B):
        Ai, Bi = _as_int64(A), _as_int64(B)
        if Ai is not None and Bi is not None:
            C = _small_dot(Ai, Bi)
            if C is not None:
                return C % self.char
        return _int_dot(A, B) % self.char

    def fmt(self, x):
        return str(int(x) % self.char)

    def to_json(self):
        return {"Fp": self.char}


def GF(p):
    return PrimeField(p)


def field_from_json(obj):
    if obj == "Q" or obj == "QQ":
        return QQ
    if isinstance(obj, dict) and "Fp" in obj:
        return GF(obj["Fp"])
    raise ValueError("unknown field spec %r" % (obj,))


# ---------------------------------------------------------------------------
# matrices


class Mat:
    """
    A k-linear map between coordinate spaces, stored as a dense
    ``rows x cols`` matrix acting on column vectors.
    """

    __slots__ = ("field", "A")

    def __init__(self, field, A):
        if not isinstance(A, numpy.ndarray):
            A = field.array(A) if len(A) else numpy.zeros((0, 0), dtype=object)
        assert A.ndim == 2, A.shape
        self.field = field
        self.A = A

    # construction

    @classmethod
    def zeros(cls, field, rows, cols):
        return cls(field, numpy.zeros((rows, cols), dtype=object))

    @classmethod
    def identity(cls, field, n):
        A = numpy.zeros((n, n), dtype=object)
        for i in range(n):
            A[i, i] = 1
        return cls(field, A)

    @classmethod
    def from_rows(cls, field, rows, cols=None):
        rows = [list(r) for r in rows]
        if not rows:
            return cls.zeros(field, 0, cols or 0)
        return cls(field, field.array(rows))

    @classmethod
    def from_columns(cls, field, columns, rows=None):
        columns = [list(c) for c in columns]
        if not columns:
            return cls.zeros(field, rows or 0, 0)
        return cls.from_rows(field, columns).T

    @classmethod
    def column(cls, field, v):
        return cls.from_columns(field, [v], len(v))

    @classmethod
    def unit_column(cls, field, n, i):
        M = cls.zeros(field, n, 1)
        M.A[i, 0] = 1
        return M

    # shape

    @property
    def rows(self):
        return self.A.shape[0]

    @property
    def cols(self):
        return self.A.shape[1]

    @property
    def shape(self):
        return self.A.shape

    def __getitem__(self, idx):
        return self.A[idx]

    def column_vector(self, j=0):
        return [self.A[i, j] for i in range(self.rows)]

    def tolist(self):
        return [[self.A[i, j] for j in range(self.cols)] for i in range(self.rows)]

    @property
    def T(self):
        return Mat(self.field, self.A.T.copy())

    # arithmetic

    def _check(self, other):
        if not isinstance(other, Mat):
            raise TypeError(other)
        if other.field != self.field:
            raise DimensionError("field mismatch %s vs %s" % (self.field, other.field))

    def __matmul__(self, other):
        self._check(other)
        if self.cols != other.rows:
            raise DimensionError("cannot compose %s @ %s" % (self.shape, other.shape))
        if self.cols == 0:
            return Mat.zeros(self.field, self.rows, other.cols)
        return Mat(self.field, self.field.dot(self.A, other.A))

    def __add__(self, other):
        self._check(other)
        if self.shape != other.shape:
            raise DimensionError("cannot add %s + %s" % (self.shape, other.shape))
        return Mat(self.field, self.field.normalize(self.A + other.A))

    def __sub__(self, other):
        self._check(other)
        if self.shape != other.shape:
            raise DimensionError("cannot subtract %s - %s" % (self.shape, other.shape))
        return Mat(self.field, self.field.normalize(self.A - other.A))

    def __neg__(self):
        return Mat(self.field, self.field.normalize(-self.A))

    def scale(self, c):
        c = self.field(c)
        return Mat(self.field, self.field.normalize(self.A * c))

    __rmul__ = scale

    def __eq__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        if self.field != other.field or self.shape != other.shape:
            return False
        return bool((self.A == other.A).all())

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    __hash__ = None

    def is_zero(self):
        return not self.A.size or not (self.A != 0).any()

    def is_identity(self):
        return self.rows == self.cols and self == Mat.identity(self.field, self.rows)

    def __str__(self):
        fmt = self.field.fmt
        lines = ["[" + " ".join("%4s" % (fmt(x) if x != 0 else ".") for x in row) + "]"
                 for row in self.A]
        return "\n".join(lines) if lines else "[]"

    def __repr__(self):
        return "Mat(%s, %dx%d)" % (self.field, self.rows, self.cols)

    def to_json(self):
        fmt = self.field.fmt
        return [[fmt(x) for x in row] for row in self.A]

    # block structure

    def hstack(self, *others):
        mats = (self,) + others
        return Mat(self.field, numpy.hstack([m.A for m in mats]))

    def vstack(self, *others):
        mats = (self,) + others
        if all(m.rows == 0 for m in mats):
            return Mat.zeros(self.field, 0, self.cols)
        return Mat(self.field, numpy.vstack([m.A for m in mats]))

    def select_columns(self, idxs):
        idxs = list(idxs)
        return Mat(self.field, self.A[:, idxs] if idxs else numpy.zeros((self.rows, 0), dtype=object))

    def select_rows(self, idxs):
        idxs = list(idxs)
        return Mat(self.field, self.A[idxs, :] if idxs else numpy.zeros((0, self.cols), dtype=object))

    # linear algebra shortcuts

    def rank(self):
        return rank(self)

    def kernel(self):
        return kernel(self)

    def image(self):
        return image(self)

    def solve(self, target):
        return solve(self, target)


def tensor(f, g):
    """Kronecker product with the row-major index convention."""
    f._check(g)
    if f.A.size == 0 or g.A.size == 0:
        return Mat.zeros(f.field, f.rows * g.rows, f.cols * g.cols)
    return Mat(f.field, f.field.normalize(numpy.kron(f.A, g.A)))


def times_kron_identity(P, H, d):
    "``P @ tensor(H, identity(d))`` without forming the Kronecker product."
    F = P.field
    t, q = P.rows, H.rows
    if P.cols != q * d:
        raise DimensionError("cannot compose %s @ (%s x I_%d)" % (P.shape, H.shape, d))
    if t == 0 or H.cols == 0 or q == 0:
        return Mat.zeros(F, t, H.cols * d)
    P2 = P.A.reshape(t, q, d).transpose(0, 2, 1).reshape(t * d, q)
    R = F.dot(numpy.ascontiguousarray(P2), H.A)
    return Mat(F, R.reshape(t, d, H.cols).transpose(0, 2, 1).reshape(t, H.cols * d).copy())


def identity(field, n):
    return Mat.identity(field, n)


def block_diag(field, mats):
    rows = sum(m.rows for m in mats)
    cols = sum(m.cols for m in mats)
    out = numpy.zeros((rows, cols), dtype=object)
    r = c = 0
    for m in mats:
        out[r:r + m.rows, c:c + m.cols] = m.A
        r += m.rows
        c += m.cols
    return Mat(field, out)


# ---------------------------------------------------------------------------
# elimination


def _integer_rows(field, A):
    "Scale each row of a rational matrix to a primitive integer row."
    rows = []
    for row in A:
        den = 1
        for x in row:
            if type(x) is Fraction:
                den = lcm(den, x.denominator)
        if den == 1:
            r = [int(x) for x in row]
        else:
            r = [int(x * den) for x in row]
        rows.append(_primitive(r))
    return rows


def _primitive(r):
    g = 0
    for x in r:
        if x:
            g = gcd(g, x)
            if g == 1:
                return r
    if g > 1:
        return [x // g for x in r]
    return r


def _rref_rational(A, pivot_order="first"):
    """
    Fraction-free Gauss-Jordan elimination on integer rows.  Rows are kept
    primitive (content removed) after each update, so entries stay bounded
    by the size of the minors involved.
    """
    m, n = A.shape
    rows = _integer_rows(QQ, A)
    pivots = []
    r = 0
    for c in range(n):
        if r == m:
            break
        cands = [i for i in range(r, m) if rows[i][c] != 0]
        if not cands:
            continue
        if pivot_order == "first":
            p = cands[0]
        elif pivot_order == "last":
            p = cands[-1]
        else:
            p = min(cands, key=lambda i: (abs(rows[i][c]), i))
        rows[r], rows[p] = rows[p], rows[r]
        prow = rows[r]
        a = prow[c]
        nz = [j for j in range(c, n) if prow[j]]
        for i in range(m):
            if i == r:
                continue
            b = rows[i][c]
            if b == 0:
                continue
            row = rows[i]
            g = gcd(a, b)
            sa, sb = a // g, b // g
            new = [sa * x for x in row]
            for j in nz:
                new[j] -= sb * prow[j]
            rows[i] = _primitive(new)
        pivots.append(c)
        r += 1
    out = []
    for i, c in enumerate(pivots):
        row = rows[i]
        a = row[c]
        out.append([x // a if x % a == 0 else Fraction(x, a) for x in row])
    return out, pivots


def _rref_fraction(A, pivot_order="first"):
    "Plain Gauss-Jordan with Fraction arithmetic; an independent strategy."
    m, n = A.shape
    rows = [[Fraction(x) for x in row] for row in A]
    pivots = []
    r = 0
    for c in range(n):
        if r == m:
            break
        cands = [i for i in range(r, m) if rows[i][c] != 0]
        if not cands:
            continue
        p = cands[-1] if pivot_order == "last" else cands[0]
        rows[r], rows[p] = rows[p], rows[r]
        a = rows[r][c]
        rows[r] = [x / a for x in rows[r]]
        for i in range(m):
            if i != r and rows[i][c] != 0:
                b = rows[i][c]
                rows[i] = [x - b * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return [[QQ(x) for x in row] for row in rows[:r]], pivots


def _rref_modp(A, p):
    m, n = A.shape
    rows = [[int(x) % p for x in row] for row in A]
    pivots = []
    r = 0
    for c in range(n):
        if r == m:
            break
        for i in range(r, m):
            if rows[i][c]:
                break
        else:
            continue
        rows[r], rows[i] = rows[i], rows[r]
        inv = pow(rows[r][c], -1, p)
        rows[r] = [x * inv % p for x in rows[r]]
        prow = rows[r]
        nz = [j for j in range(c, n) if prow[j]]
        for i in range(m):
            if i != r and rows[i][c]:
                b = rows[i][c]
                row = rows[i]
                for j in nz:
                    row[j] = (row[j] - b * prow[j]) % p
        pivots.append(c)
        r += 1
    return rows[:r], pivots


def _rref_sparse(A, p=0):
    "Sparse elimination of a dense array; see :func:`_echelon_rows`."
    if p:
        rows = ({j: int(x) % p for j, x in enumerate(row) if int(x) % p} for row in A)
    else:
        rows = ({j: x for j, x in enumerate(r) if x} for r in _integer_rows(QQ, A))
    return _echelon_rows(rows, A.shape[1], p)


def _int_dict(r):
    den = 1
    for x in r.values():
        if type(x) is Fraction:
            den = lcm(den, x.denominator)
    if den == 1:
        return _primitive_dict({j: int(x) for j, x in r.items()})
    return _primitive_dict({j: int(x * den) for j, x in r.items()})


def _echelon_rows(rows, n, p=0):
    """
    Reduced echelon form of sparse rows (dicts column -> int, integer and
    primitive over Q, reduced mod p otherwise).  Rows are added one at a
    time to an echelon set, then back substituted.  The output matches the
    dense routines.
    """
    if p:
        norm = lambda r: {j: x for j, x in r.items() if x}
    echelon = {}
    for r in rows:
        while r:
            lead = min(r)
            prow = echelon.get(lead)
            if prow is None:
                break
            a, b = prow[lead], r[lead]
            if p:
                f = b * pow(a, -1, p) % p
                for j, x in prow.items():
                    r[j] = (r.get(j, 0) - f * x) % p
                r = norm(r)
            else:
                g = gcd(a, b)
                sa, sb = a // g, b // g
                r = {j: sa * x for j, x in r.items()} if sa != 1 else dict(r)
                for j, x in prow.items():
                    r[j] = r.get(j, 0) - sb * x
                r = _primitive_dict(r)
        if r:
            lead = min(r)
            if p:
                inv = pow(r[lead], -1, p)
                r = {j: x * inv % p for j, x in r.items()}
            elif r[lead] < 0:
                r = {j: -x for j, x in r.items()}
            echelon[lead] = r
    pivots = sorted(echelon)
    done = {}
    for c in reversed(pivots):
        r = echelon[c]
        for d in [j for j in r if j != c and j in done]:
            b = r.get(d, 0)
            if not b:
                continue
            prow = done[d]
            if p:
                for j, x in prow.items():
                    r[j] = (r.get(j, 0) - b * x) % p
                r = norm(r)
            else:
                a = prow[d]
                g = gcd(a, b)
                sa, sb = a // g, b // g
                r = {j: sa * x for j, x in r.items()}
                for j, x in prow.items():
                    r[j] = r.get(j, 0) - sb * x
                r = _primitive_dict(r)
        done[c] = r
    out = []
    for c in pivots:
        r = done[c]
        row = [0] * n
        if p:
            for j, x in r.items():
                row[j] = x
        else:
            a = r[c]
            for j, x in r.items():
                row[j] = x // a if x % a == 0 else Fraction(x, a)
        out.append(row)
    return out, pivots


def _primitive_dict(r):
    r = {j: x for j, x in r.items() if x}
    g = 0
    for x in r.values():
        g = gcd(g, x)
        if g == 1:
            return r
    if g > 1:
        r = {j: x // g for j, x in r.items()}
    return r


_SPARSE_CUTOFF = 4000


def rref(M, strategy="fraction-free"):
    """
    Reduced row echelon form: returns ``(rows, pivots)`` where ``rows`` are
    the nonzero rows (lists of field elements) and ``pivots`` their pivot
    columns.  The result is canonical, whatever ``strategy`` is used.
    """
    field = M.field
    if M.rows == 0 or M.cols == 0:
        return [], []
    big = M.rows * M.cols > _SPARSE_CUTOFF
    if field.char:
        if big and strategy != "dense":
            return _rref_sparse(M.A, field.char)
        return _rref_modp(M.A, field.char)
    if strategy == "sparse":
        return _rref_sparse(M.A)
    if strategy == "fraction-free":
        if big:
            return _rref_sparse(M.A)
        return _rref_rational(M.A)
    if strategy == "dense":
        return _rref_rational(M.A)
    if strategy == "fraction-free-smallest":
        return _rref_rational(M.A, "smallest")
    if strategy == "fraction":
        return _rref_fraction(M.A)
    if strategy == "fraction-last":
        return _rref_fraction(M.A, "last")
    raise ValueError(strategy)


def rank(M):
    return len(rref(M)[1])


def det(M):
    "Determinant, by Bareiss elimination over the integers (or mod p)."
    n = M.rows
    if n != M.cols:
        raise DimensionError("det of non-square matrix")
    if n == 0:
        return 1
    field = M.field
    if field.char:
        p = field.char
        rows = [[int(x) % p for x in row] for row in M.A]
        d = 1
        for c in range(n):
            for i in range(c, n):
                if rows[i][c]:
                    break
            else:
                return 0
            if i != c:
                rows[c], rows[i] = rows[i], rows[c]
                d = -d
            a = rows[c][c]
            d = d * a % p
            inv = pow(a, -1, p)
            for i in range(c + 1, n):
                b = rows[i][c] * inv % p
                if b:
                    rows[i] = [(x - b * y) % p for x, y in zip(rows[i], rows[c])]
        return d % p
    den = 1
    rows = []
    for row in M.A:
        rd = 1
        for x in row:
            if isinstance(x, Fraction):
                rd = lcm(rd, x.denominator)
        den *= rd
        rows.append([int(x * rd) for x in row])
    sign = 1
    prev = 1
    for c in range(n - 1):
        if rows[c][c] == 0:
            for i in range(c + 1, n):
                if rows[i][c]:
                    break
            else:
                return 0
            rows[c], rows[i] = rows[i], rows[c]
            sign = -sign
        a = rows[c][c]
        for i in range(c + 1, n):
            b = rows[i][c]
            ri, rc = rows[i], rows[c]
            rows[i] = [(a * ri[j] - b * rc[j]) // prev if j > c else 0 for j in range(n)]
        prev = a
    return QQ(Fraction(sign * rows[n - 1][n - 1], den))


# ---------------------------------------------------------------------------
# subspaces


class Subspace:
    """
    A subspace of ``field^ambient``, stored by its canonical reduced row
    echelon basis.  Two Subspace objects are equal iff the subspaces are.
    """

    __slots__ = ("field", "ambient", "rows", "pivots")

    def __init__(self, field, ambient, rows, pivots):
        self.field = field
        self.ambient = ambient
        self.rows = rows
        self.pivots = pivots

    @classmethod
    def span(cls, field, ambient, vectors, strategy="fraction-free"):
        vectors = [list(v) for v in vectors]
        if not vectors:
            return cls(field, ambient, [], [])
        for v in vectors:
            if len(v) != ambient:
                raise DimensionError("vector of length %d in ambient %d" % (len(v), ambient))
        rows, pivots = rref(Mat.from_rows(field, vectors), strategy)
        return cls(field, ambient, [tuple(r) for r in rows], pivots)

    @classmethod
    def row_space(cls, M):
        rows, pivots = rref(M)
        return cls(M.field, M.cols, [tuple(r) for r in rows], pivots)

    @classmethod
    def column_span(cls, M):
        return cls.row_space(M.T)

    @classmethod
    def whole(cls, field, n):
        return cls.span(field, n, Mat.identity(field, n).tolist())

    @classmethod
    def zero(cls, field, n):
        return cls(field, n, [], [])

    @property
    def dim(self):
        return len(self.rows)

    def __len__(self):
        return len(self.rows)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return (self.field == other.field and self.ambient == other.ambient
                and self.rows == other.rows)

    __hash__ = None

    def __repr__(self):
        return "Subspace(dim=%d, ambient=%d)" % (self.dim, self.ambient)

    def basis_matrix(self):
        "Columns are the echelon basis vectors (ambient x dim)."
        return Mat.from_columns(self.field, self.rows, self.ambient)

    def contains(self, v):
        return self.coordinates(v) is not None

    def contains_space(self, other):
        return all(self.contains(v) for v in other.rows)

    def coordinates(self, v):
        """Coordinates of v in the echelon basis, or None if v is outside."""
        v = [self.field(x) for x in v]
        coords = [v[c] for c in self.pivots]
        if self.rows:
            B = self.basis_matrix()
            w = B @ Mat.column(self.field, coords)
            if w.column_vector() != v:
                return None
        elif any(x != 0 for x in v):
            return None
        return coords

    def coordinate_map(self):
        """
        The matrix ``dim x ambient`` reading off echelon coordinates; only
        meaningful on vectors inside the subspace.
        """
        P = Mat.zeros(self.field, self.dim, self.ambient)
        for i, c in enumerate(self.pivots):
            P.A[i, c] = 1
        return P

    def __add__(self, other):
        return Subspace.span(self.field, self.ambient, list(self.rows) + list(other.rows))

    def intersect(self, other):
        if self.ambient != other.ambient:
            raise DimensionError("ambient mismatch")
        if not self.rows or not other.rows:
            return Subspace.zero(self.field, self.ambient)
        B1 = self.basis_matrix()
        B2 = other.basis_matrix()
        K = kernel(B1.hstack(-B2))
        vecs = [(B1 @ Mat.column(self.field, v[:self.dim])).column_vector() for v in K.rows]
        return Subspace.span(self.field, self.ambient, vecs)

    def image_under(self, f):
        if f.cols != self.ambient:
            raise DimensionError("map does not act on this ambient space")
        if not self.rows:
            return Subspace.zero(self.field, f.rows)
        return Subspace.column_span(f @ self.basis_matrix())

    def complement_basis(self):
        "Standard basis vectors on the non-pivot coordinates, as indices."
        piv = set(self.pivots)
        return [j for j in range(self.ambient) if j not in piv]


def kernel(f, strategy="fraction-free"):
    """The canonical echelon basis of ``{v : f v = 0}``."""
    rows, pivots = rref(f, strategy)
    return _kernel_from_rref(f.field, f.cols, rows, pivots)


def image(f):
    return Subspace.column_span(f)


def solve(f, target):
    """
    One preimage of ``target`` under ``f``, or None.  Free variables are set
    to zero, so the answer is deterministic.
    """
    field = f.field
    target = [field(x) for x in target]
    if len(target) != f.rows:
        raise DimensionError("target has length %d, map has %d rows" % (len(target), f.rows))
    n = f.cols
    if f.rows == 0:
        return [0] * n
    aug = f.hstack(Mat.column(field, target))
    rows, pivots = rref(aug)
    if pivots and pivots[-1] == n:
        return None
    x = [0] * n
    for row, c in zip(rows, pivots):
        x[c] = row[n]
    return x


def solve_matrix(f, B):
    """Solve ``f X = B`` column by column; None if any column fails."""
    field = f.field
    if B.rows != f.rows:
        raise DimensionError("right-hand side has %d rows, map has %d" % (B.rows, f.rows))
    n = f.cols
    if B.cols == 0:
        return Mat.zeros(field, n, 0)
    if f.rows == 0:
        return Mat.zeros(field, n, B.cols)
    aug = f.hstack(B)
    rows, pivots = rref(aug)
    if pivots and pivots[-1] >= n:
        return None
    X = Mat.zeros(field, n, B.cols)
    for row, c in zip(rows, pivots):
        for j in range(B.cols):
            X.A[c, j] = row[n + j]
    return X


def solve_affine_space(f, target):
    """
    The full solution set of ``f x = target`` as ``(particular, kernel)``,
    or None when infeasible.
    """
    x = solve(f, target)
    if x is None:
        return None
    return x, kernel(f)


def quotient(ambient, by):
    """
    Canonical quotient ``field^ambient / by``: returns ``(dim, projection,
    section)`` where the section sends quotient basis vectors to the
    standard basis vectors on the non-pivot coordinates of ``by``.
    """
    field = by.field
    free = by.complement_basis()
    pos = {j: i for i, j in enumerate(free)}
    q = len(free)
    P = Mat.zeros(field, q, ambient)
    for j in free:
        P.A[pos[j], j] = 1
    for row, c in zip(by.rows, by.pivots):
        for j in free:
            if row[j] != 0:
                P.A[pos[j], c] = field(-row[j])
    S = Mat.zeros(field, ambient, q)
    for j in free:
        S.A[j, pos[j]] = 1
    return q, P, S


def left_inverse(f):
    """A matrix g with g f = id, for injective f; None otherwise."""
    g = solve_matrix(f.T, Mat.identity(f.field, f.cols))
    return None if g is None else g.T


def inverse(f):
    if f.rows != f.cols:
        return None
    return solve_matrix(f, Mat.identity(f.field, f.rows))


def linear_operator_matrix(field, shape, terms, out_shape):
    """
    Matrix of a linear operator on ``shape`` matrices F, in row-major
    vectorised coordinates.  ``terms`` is a list of ``(kind, L, R, coeff)``:

      ``("plain", L, R)``    F  ->  L F R
      ``("left", L, R, k)``  F  ->  L (F (x) I_k) R
      ``("right", L, R, k)`` F  ->  L (I_k (x) F) R

    All results are summed.  ``out_shape`` is the shape of the image.
    """
    m, n = shape
    p, q = out_shape
    total = numpy.zeros((p, q, m, n), dtype=object)
    for term in terms:
        kind = term[0]
        if kind == "plain":
            _, L, R = term[:3]
            c = term[3] if len(term) > 3 else 1
            # (L F R)[r,s] = sum L[r,i] F[i,j] R[j,s]
            t = numpy.einsum("ri,js->rsij", L.A, R.A)
        elif kind == "left":
            _, L, R, k = term[:4]
            c = term[4] if len(term) > 4 else 1
            # (F (x) I_k)[(i,a),(j,b)] = F[i,j] d_ab
            L3 = L.A.reshape(p, m, k)
            R3 = R.A.reshape(n, k, q)
            t = numpy.einsum("ria,jas->rsij", L3, R3)
        elif kind == "right":
            _, L, R, k = term[:4]
            c = term[4] if len(term) > 4 else 1
            L3 = L.A.reshape(p, k, m)
            R3 = R.A.reshape(k, n, q)
            t = numpy.einsum("rai,ajs->rsij", L3, R3)
        else:
            raise ValueError(kind)
        total = total + (t * c if c != 1 else t)
    M = total.reshape(p * q, m * n)
    return Mat(field, field.normalize(M))


def operator_rows(field, shape, terms, out_shape):
    """
    The matrix of :func:`linear_operator_matrix` as sparse rows (a dict
    row -> {column: value}), built from the nonzero entries of the factors.
    """
    m, n = shape
    p, q = out_shape
    out = {}

    def put(r, s, i, j, v):
        row = out.setdefault(r * q + s, {})
        col = i * n + j
        row[col] = row.get(col, 0) + v

    for term in terms:
        kind = term[0]
        if kind == "plain":
            _, L, R = term[:3]
            c = term[3] if len(term) > 3 else 1
            Lnz = _nonzeros(L.A)
            Rnz = _nonzeros(R.A)
            for (r, i), x in Lnz:
                for (j, s), y in Rnz:
                    put(r, s, i, j, c * x * y)
        elif kind in ("left", "right"):
            _, L, R, k = term[:4]
            c = term[4] if len(term) > 4 else 1
            if kind == "left":
                # L (F (x) I_k) R: L[r, i*k+a] R[j*k+a, s]
                byL = {}
                for (r, col), x in _nonzeros(L.A):
                    i, a = divmod(col, k)
                    byL.setdefault(a, []).append((r, i, x))
                byR = {}
                for (row, s), y in _nonzeros(R.A):
                    j, a = divmod(row, k)
                    byR.setdefault(a, []).append((j, s, y))
            else:
                # L (I_k (x) F) R: L[r, a*m+i] R[a*n+j, s]
                byL = {}
                for (r, col), x in _nonzeros(L.A):
                    a, i = divmod(col, m)
                    byL.setdefault(a, []).append((r, i, x))
                byR = {}
                for (row, s), y in _nonzeros(R.A):
                    a, j = divmod(row, n)
                    byR.setdefault(a, []).append((j, s, y))
            for a, ls in byL.items():
                for j, s, y in byR.get(a, ()):
                    for r, i, x in ls:
                        put(r, s, i, j, c * x * y)
        else:
            raise ValueError(kind)
    if field.char:
        P = field.char
        out = {r: {j: v % P for j, v in row.items() if v % P} for r, row in out.items()}
    else:
        out = {r: {j: field(v) for j, v in row.items() if v} for r, row in out.items()}
    return {r: row for r, row in out.items() if row}


def _nonzeros(A):
    rs, cs = numpy.nonzero(A != 0)
    return [((int(r), int(c)), A[r, c]) for r, c in zip(rs, cs)]


class SparseSystem:
    """Linear equations on ``ncols`` unknowns, kept as sparse rows."""

    def __init__(self, field, ncols):
        self.field = field
        self.ncols = ncols
        self.rows = []

    def add(self, rows):
        "Add rows: a dict of sparse rows, a list of them, or a dense Mat."
        if isinstance(rows, Mat):
            if rows.cols != self.ncols:
                raise DimensionError("system has %d unknowns, got %d columns" % (self.ncols, rows.cols))
            rows = [{j: x for j, x in enumerate(r) if x} for r in rows.A]
        elif isinstance(rows, dict):
            rows = list(rows.values())
        self.rows.extend(r for r in rows if r)
        return self

    def add_operator(self, shape, terms, out_shape):
        return self.add(operator_rows(self.field, shape, terms, out_shape))

    def rref(self):
        p = self.field.char
        if p:
            rows = (dict(r) for r in self.rows)
        else:
            rows = (_int_dict(r) for r in self.rows)
        return _echelon_rows(rows, self.ncols, p)

    def kernel(self):
        rows, pivots = self.rref()
        return _kernel_from_rref(self.field, self.ncols, rows, pivots)

    def solve_affine(self, equations, rhs):
        """
        All x with ``equations x = rhs`` and every stored row vanishing:
        ``(particular, kernel)`` or None.  ``equations`` is a dict of sparse
        rows keyed by position in ``rhs``; free variables of the particular
        solution are zero.
        """
        n = self.ncols
        aug = SparseSystem(self.field, n + 1).add(self.rows)
        extra = []
        for r, b in enumerate(rhs):
            row = dict(equations.get(r, {}))
            if b:
                row[n] = self.field(b)
            if row:
                extra.append(row)
        aug.add(extra)
        rows, pivots = aug.rref()
        if pivots and pivots[-1] == n:
            return None
        x = [0] * n
        for row, c in zip(rows, pivots):
            x[c] = row[n]
        full = SparseSystem(self.field, n).add(self.rows).add(equations)
        return x, full.kernel()


def _kernel_from_rref(field, n, rows, pivots):
    piv = set(pivots)
    basis = []
    for free in range(n):
        if free in piv:
            continue
        v = [0] * n
        v[free] = 1
        for row, c in zip(rows, pivots):
            v[c] = field(-row[free])
        basis.append(v)
    # already in reduced echelon form up to order; span() recomputes it
    return Subspace.span(field, n, basis)


def unvec(field, v, shape):
    "Inverse of row-major vectorisation."
    m, n = shape
    A = numpy.empty((m, n), dtype=object)
    for i in range(m):
        for j in range(n):
            A[i, j] = v[i * n + j]
    return Mat(field, A)


def vec(M):
    return [M.A[i, j] for i in range(M.rows) for j in range(M.cols)]
