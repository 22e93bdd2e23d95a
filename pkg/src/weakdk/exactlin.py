"""Exact dense linear algebra over the rationals or a prime field.

Vectors are tuples of field elements.  A linear map ``V -> W`` is a
:class:`Matrix` with ``dim W`` rows and ``dim V`` columns, so column ``j``
is the image of the ``j``-th basis vector and composition is ``g @ f``.

Subspaces are stored in reduced row echelon form, which makes equality of
subspaces a plain comparison of basis grids.
"""

from __future__ import annotations

from fractions import Fraction
from functools import total_ordering
from typing import Iterable, Sequence


# ---------------------------------------------------------------- scalars


@total_ordering
class Fp:
    """Element of the prime field F_p, stored as an int in ``[0, p)``."""

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        self.value = value % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, Fp):
            if other.p != self.p:
                raise ValueError("mixing F_%d and F_%d" % (self.p, other.p))
            return other.value
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction):
            return other.numerator * pow(other.denominator, -1, self.p)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Fp(self.value + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Fp(self.value - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Fp(o - self.value, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Fp(self.value * o, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return Fp(-self.value, self.p)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if o % self.p == 0:
            raise ZeroDivisionError("division by zero in F_%d" % self.p)
        return Fp(self.value * pow(o, -1, self.p), self.p)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if self.value == 0:
            raise ZeroDivisionError("division by zero in F_%d" % self.p)
        return Fp(o * pow(self.value, -1, self.p), self.p)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return False
        return (self.value - o) % self.p == 0

    def __lt__(self, other):
        return self.value < self._coerce(other)

    def __hash__(self):
        return hash((self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return "Fp(%d, %d)" % (self.value, self.p)

    def __str__(self):
        return str(self.value)


class Field:
    """A scalar domain: ``QQ`` (exact rationals) or ``GF(p)``."""

    def __init__(self, p: int = 0):
        if p and not _is_prime(p):
            raise ValueError("%d is not prime" % p)
        self.p = p
        self.zero = self(0)
        self.one = self(1)

    def __call__(self, x) -> object:
        if self.p:
            if isinstance(x, Fp):
                if x.p != self.p:
                    raise ValueError("element of F_%d given to F_%d" % (x.p, self.p))
                return x
            if isinstance(x, str):
                x = Fraction(x)
            if isinstance(x, Fraction):
                if x.denominator % self.p == 0:
                    raise ZeroDivisionError("denominator divisible by %d" % self.p)
                return Fp(x.numerator * pow(x.denominator, -1, self.p), self.p)
            return Fp(int(x), self.p)
        if isinstance(x, Fp):
            raise ValueError("prime field element given to QQ")
        return Fraction(x)

    @property
    def name(self) -> str:
        return "Fp:%d" % self.p if self.p else "Q"

    @classmethod
    def parse(cls, name: str) -> "Field":
        if name == "Q":
            return QQ
        if name.startswith("Fp:"):
            return GF(int(name[3:]))
        raise ValueError("unknown field %r" % name)

    def format(self, x) -> str:
        return str(x)

    def __eq__(self, other):
        return isinstance(other, Field) and other.p == self.p

    def __hash__(self):
        return hash(("Field", self.p))

    def __repr__(self):
        return "QQ" if not self.p else "GF(%d)" % self.p


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


QQ = Field()
_gf_cache: dict[int, Field] = {}


def GF(p: int) -> Field:
    if p not in _gf_cache:
        _gf_cache[p] = Field(p)
    return _gf_cache[p]


def field_of(x) -> Field:
    return GF(x.p) if isinstance(x, Fp) else QQ


# ---------------------------------------------------------------- vectors


def zero_vector(field: Field, n: int) -> tuple:
    return (field.zero,) * n


def unit_vector(field: Field, n: int, i: int) -> tuple:
    v = [field.zero] * n
    v[i] = field.one
    return tuple(v)


def vadd(u, v) -> tuple:
    return tuple(a + b for a, b in zip(u, v))


def vsub(u, v) -> tuple:
    return tuple(a - b for a, b in zip(u, v))


def vscale(c, v) -> tuple:
    return tuple(c * a for a in v)


def is_zero(v) -> bool:
    return not any(v)


def support(v) -> dict:
    return {i: x for i, x in enumerate(v) if x}


def densify(d: dict, n: int, field: Field) -> tuple:
    v = [field.zero] * n
    for i, x in d.items():
        v[i] = x
    return tuple(v)


def kron_vec(u, v) -> tuple:
    """Tensor of two vectors with index ``(i, j) -> i * len(v) + j``."""
    out = [None] * (len(u) * len(v))
    nv = len(v)
    for i, a in enumerate(u):
        base = i * nv
        for j, b in enumerate(v):
            out[base + j] = a * b
    return tuple(out)


# ---------------------------------------------------------------- matrices


class Matrix:
    """Immutable dense matrix with exact entries."""

    __slots__ = ("rows", "cols", "field", "data")

    def __init__(self, data: Sequence[Sequence], field: Field, cols: int | None = None):
        self.field = field
        self.data = tuple(tuple(r) for r in data)
        self.rows = len(self.data)
        if cols is None:
            if not self.data:
                raise ValueError("cols required for an empty matrix")
            cols = len(self.data[0])
        self.cols = cols
        for r in self.data:
            if len(r) != cols:
                raise ValueError("ragged matrix")

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], field: Field, rows: int) -> "Matrix":
        columns = list(columns)
        data = [tuple(c[i] for c in columns) for i in range(rows)]
        return cls(data, field, cols=len(columns))

    @classmethod
    def zeros(cls, rows: int, cols: int, field: Field) -> "Matrix":
        return cls([[field.zero] * cols for _ in range(rows)], field, cols=cols)

    @classmethod
    def identity(cls, n: int, field: Field) -> "Matrix":
        return cls([unit_vector(field, n, i) for i in range(n)], field, cols=n)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def row(self, i: int) -> tuple:
        return self.data[i]

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self.data)

    def columns(self) -> list[tuple]:
        return [self.column(j) for j in range(self.cols)]

    @property
    def T(self) -> "Matrix":
        return Matrix.from_columns(self.data, self.field, self.cols)

    def apply(self, v) -> tuple:
        if len(v) != self.cols:
            raise ValueError("shape mismatch: %s applied to length %d" % (self.shape, len(v)))
        nz = [(j, x) for j, x in enumerate(v) if x]
        zero = self.field.zero
        out = []
        for r in self.data:
            s = zero
            for j, x in nz:
                a = r[j]
                if a:
                    s = s + a * x
            out.append(s)
        return tuple(out)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch %s @ %s" % (self.shape, other.shape))
        cols = [self.apply(c) for c in other.columns()]
        return Matrix.from_columns(cols, self.field, self.rows)

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return Matrix([vadd(a, b) for a, b in zip(self.data, other.data)], self.field, self.cols)

    def __sub__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return Matrix([vsub(a, b) for a, b in zip(self.data, other.data)], self.field, self.cols)

    def scale(self, c) -> "Matrix":
        return Matrix([vscale(c, r) for r in self.data], self.field, self.cols)

    def kron(self, other: "Matrix") -> "Matrix":
        data = []
        for r in self.data:
            for s in other.data:
                data.append(kron_vec(r, s))
        return Matrix(data, self.field, self.cols * other.cols)

    def hstack(self, other: "Matrix") -> "Matrix":
        return Matrix([a + b for a, b in zip(self.data, other.data)], self.field,
                      self.cols + other.cols)

    def vstack(self, other: "Matrix") -> "Matrix":
        return Matrix(self.data + other.data, self.field, self.cols)

    def is_identity(self) -> bool:
        return self.rows == self.cols and self == Matrix.identity(self.rows, self.field)

    def map_entries(self, f) -> "Matrix":
        return Matrix([[f(x) for x in r] for r in self.data], self.field, self.cols)

    def __eq__(self, other):
        return (isinstance(other, Matrix) and self.shape == other.shape
                and self.data == other.data)

    def __hash__(self):
        return hash((self.shape, self.data))

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in r) for r in self.data)
        return "Matrix(%dx%d: [%s])" % (self.rows, self.cols, body)


def stack_rows(mats: Iterable[Matrix], cols: int, field: Field) -> Matrix:
    data = []
    for m in mats:
        data.extend(m.data)
    return Matrix(data, field, cols=cols)


# ---------------------------------------------------------------- elimination


def _rref_sparse(rows: Iterable[dict], field: Field) -> dict[int, dict]:
    """Reduced row echelon form of the span of sparse rows.

    Returns ``{pivot column: row}`` with each row normalised to 1 at its
    pivot and zero at every other pivot column.
    """
    piv: dict[int, dict] = {}
    for r in rows:
        d = {c: x for c, x in r.items() if x}
        while d:
            c = min(d)
            p = piv.get(c)
            if p is None:
                inv = field.one / d[c]
                piv[c] = {cc: x * inv for cc, x in d.items()}
                break
            f = d[c]
            for cc, x in p.items():
                v = d.get(cc, 0) - f * x
                if v:
                    d[cc] = v
                else:
                    d.pop(cc, None)
    for c in sorted(piv, reverse=True):
        row = piv[c]
        hits = [cc for cc in row if cc != c and cc in piv]
        for cc in hits:
            f = row.get(cc)
            if not f:
                continue
            for k, x in piv[cc].items():
                v = row.get(k, 0) - f * x
                if v:
                    row[k] = v
                else:
                    row.pop(k, None)
    return piv


def _rows_as_dicts(vectors: Iterable[Sequence]) -> Iterable[dict]:
    for v in vectors:
        yield {i: x for i, x in enumerate(v) if x}


# ---------------------------------------------------------------- subspaces


class Subspace:
    """A subspace of ``k^n`` with canonical reduced row echelon basis."""

    __slots__ = ("ambient_dim", "field", "basis", "pivots", "_rows")

    def __init__(self, ambient_dim: int, field: Field, piv: dict[int, dict]):
        self.ambient_dim = ambient_dim
        self.field = field
        self.pivots = tuple(sorted(piv))
        self._rows = [piv[c] for c in self.pivots]
        self.basis = tuple(densify(r, ambient_dim, field) for r in self._rows)

    @property
    def dim(self) -> int:
        return len(self.pivots)

    def matrix(self) -> Matrix:
        """Basis as rows."""
        return Matrix(self.basis, self.field, cols=self.ambient_dim)

    def coordinates(self, v) -> tuple | None:
        """Coordinates of ``v`` in the echelon basis, or None if ``v`` is outside."""
        coords = tuple(v[c] for c in self.pivots)
        rest = dict((i, x) for i, x in enumerate(v) if x)
        for a, row in zip(coords, self._rows):
            if not a:
                continue
            for c, x in row.items():
                y = rest.get(c, 0) - a * x
                if y:
                    rest[c] = y
                else:
                    rest.pop(c, None)
        return None if rest else coords

    def __contains__(self, v) -> bool:
        return self.coordinates(v) is not None

    def combination(self, coords) -> tuple:
        out = [self.field.zero] * self.ambient_dim
        for a, row in zip(coords, self._rows):
            if a:
                for c, x in row.items():
                    out[c] += a * x
        return tuple(out)

    def __eq__(self, other):
        return (isinstance(other, Subspace) and self.ambient_dim == other.ambient_dim
                and self.basis == other.basis)

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    def __le__(self, other: "Subspace") -> bool:
        return all(v in other for v in self.basis)

    def __repr__(self):
        return "Subspace(dim=%d, ambient=%d)" % (self.dim, self.ambient_dim)


def span(vectors: Iterable[Sequence], ambient_dim: int, field: Field) -> Subspace:
    return Subspace(ambient_dim, field, _rref_sparse(_rows_as_dicts(vectors), field))


def span_sparse(rows: Iterable[dict], ambient_dim: int, field: Field) -> Subspace:
    return Subspace(ambient_dim, field, _rref_sparse(rows, field))


def zero_subspace(ambient_dim: int, field: Field) -> Subspace:
    return Subspace(ambient_dim, field, {})


def full_space(ambient_dim: int, field: Field) -> Subspace:
    return span((unit_vector(field, ambient_dim, i) for i in range(ambient_dim)),
                ambient_dim, field)


def rank(m: Matrix) -> int:
    return len(_rref_sparse(_rows_as_dicts(m.data), m.field))


def kernel(m: Matrix) -> Subspace:
    """Solution space of ``m x = 0``."""
    piv = _rref_sparse(_rows_as_dicts(m.data), m.field)
    field = m.field
    free = [j for j in range(m.cols) if j not in piv]
    vecs = []
    for f in free:
        v = {f: field.one}
        for c, row in piv.items():
            x = row.get(f)
            if x:
                v[c] = -x
        vecs.append(v)
    return span_sparse(vecs, m.cols, field)


def image(m: Matrix) -> Subspace:
    """Column space of ``m``."""
    return span(m.columns(), m.rows, m.field)


def subspace_sum(u: Subspace, v: Subspace) -> Subspace:
    if u.ambient_dim != v.ambient_dim:
        raise ValueError("dimension mismatch: %d vs %d" % (u.ambient_dim, v.ambient_dim))
    return span(u.basis + v.basis, u.ambient_dim, u.field)


def intersect(u: Subspace, v: Subspace) -> Subspace:
    """``u ∩ v``: solve ``Σ a_i u_i = Σ b_j v_j`` and map the ``a`` part back."""
    if u.ambient_dim != v.ambient_dim:
        raise ValueError("dimension mismatch: %d vs %d" % (u.ambient_dim, v.ambient_dim))
    field = u.field
    if u.dim == 0 or v.dim == 0:
        return zero_subspace(u.ambient_dim, field)
    cols = list(u.basis) + [vscale(-field.one, b) for b in v.basis]
    joint = Matrix.from_columns(cols, field, u.ambient_dim)
    ker = kernel(joint)
    return span((u.combination(x[:u.dim]) for x in ker.basis), u.ambient_dim, field)


def solve(m: Matrix, b: Sequence) -> tuple | None:
    """One solution of ``m x = b`` (free variables set to zero), or None."""
    field = m.field
    aug = []
    for i, r in enumerate(m.data):
        row = support(r)
        if b[i]:
            row[m.cols] = field(b[i])
        aug.append(row)
    piv = _rref_sparse(aug, field)
    if m.cols in piv:
        return None
    x = [field.zero] * m.cols
    for c, row in piv.items():
        x[c] = row.get(m.cols, field.zero)
    return tuple(x)


def inverse(m: Matrix) -> Matrix:
    if m.rows != m.cols:
        raise ValueError("not square")
    n = m.rows
    cols = []
    for i in range(n):
        x = solve(m, unit_vector(m.field, n, i))
        if x is None:
            raise ZeroDivisionError("matrix is singular")
        cols.append(x)
    inv = Matrix.from_columns(cols, m.field, n)
    if not (m @ inv).is_identity():
        raise ZeroDivisionError("matrix is singular")
    return inv


# ---------------------------------------------------------------- quotients


class QuotientSpace:
    """``k^n / relations`` with coordinates on the non-pivot columns.

    The section sends quotient coordinate ``j`` to the ambient basis vector
    ``e_{free[j]}``; the projection subtracts the echelon rows.
    """

    __slots__ = ("ambient_dim", "field", "relations", "free", "_proj_cols", "_index")

    def __init__(self, ambient_dim: int, relations: Subspace):
        if relations.ambient_dim != ambient_dim:
            raise ValueError("relations live in dimension %d, not %d"
                             % (relations.ambient_dim, ambient_dim))
        self.ambient_dim = ambient_dim
        self.field = relations.field
        self.relations = relations
        pivset = set(relations.pivots)
        self.free = tuple(j for j in range(ambient_dim) if j not in pivset)
        self._index = {c: j for j, c in enumerate(self.free)}
        proj: dict[int, dict] = {c: {j: self.field.one} for c, j in self._index.items()}
        for c, row in zip(relations.pivots, relations._rows):
            proj[c] = {self._index[k]: -x for k, x in row.items() if k != c}
        self._proj_cols = proj

    @property
    def quot_dim(self) -> int:
        return len(self.free)

    def project_sparse(self, v: dict) -> dict:
        out: dict[int, object] = {}
        for c, x in v.items():
            if not x:
                continue
            for j, y in self._proj_cols[c].items():
                z = out.get(j, 0) + x * y
                if z:
                    out[j] = z
                else:
                    out.pop(j, None)
        return out

    def project(self, v) -> tuple:
        if isinstance(v, dict):
            d = v
        else:
            d = {i: x for i, x in enumerate(v) if x}
        return densify(self.project_sparse(d), self.quot_dim, self.field)

    def lift(self, q) -> tuple:
        out = [self.field.zero] * self.ambient_dim
        for j, x in enumerate(q):
            out[self.free[j]] = x
        return tuple(out)

    def lift_sparse(self, q) -> dict:
        return {self.free[j]: x for j, x in enumerate(q) if x}

    @property
    def projection(self) -> Matrix:
        cols = [densify(self._proj_cols[c], self.quot_dim, self.field)
                for c in range(self.ambient_dim)]
        return Matrix.from_columns(cols, self.field, self.quot_dim)

    @property
    def section(self) -> Matrix:
        cols = [unit_vector(self.field, self.ambient_dim, c) for c in self.free]
        return Matrix.from_columns(cols, self.field, self.ambient_dim)

    def __repr__(self):
        return "QuotientSpace(%d / %d -> %d)" % (self.ambient_dim, self.relations.dim,
                                                 self.quot_dim)


def quotient(ambient_dim: int, relations: Subspace) -> QuotientSpace:
    return QuotientSpace(ambient_dim, relations)
