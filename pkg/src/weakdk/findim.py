"""Finite-dimensional algebras, coalgebras, bimodules and corings by structure constants.

Tensor coordinates are fixed globally: the basis vector ``b_i ⊗ b_j`` of
``V ⊗ W`` has index ``i * dim W + j``.  Every map is compared on basis
vectors only.
"""

from __future__ import annotations

from typing import Callable, Sequence

from .exactlin import (Field, Matrix, QuotientSpace, Subspace, densify, full_space,
                       intersect, kernel, quotient, rank, span_sparse, support,
                       unit_vector, zero_vector)
from .report import Report, VerificationError


def _acc(out: dict, i: int, x) -> None:
    y = out.get(i, 0) + x
    if y:
        out[i] = y
    else:
        out.pop(i, None)


def sparse_columns(m: Matrix) -> list[dict]:
    cols: list[dict] = [{} for _ in range(m.cols)]
    for i, r in enumerate(m.data):
        for j, x in enumerate(r):
            if x:
                cols[j][i] = x
    return cols


# ---------------------------------------------------------------- algebras


class FinAlgebra:
    """Algebra with ``b_i b_j = Σ_k mult[i][j][k] b_k``."""

    def __init__(self, field: Field, mult: Sequence, unit: Sequence,
                 basis_names: Sequence[str] | None = None):
        self.field = field
        self.dim = len(unit)
        self.mult = tuple(tuple(tuple(field(x) for x in v) for v in row) for row in mult)
        self.unit = tuple(field(x) for x in unit)
        if len(self.mult) != self.dim or any(len(row) != self.dim for row in self.mult):
            raise ValueError("multiplication table must be dim x dim")
        if any(len(v) != self.dim for row in self.mult for v in row):
            raise ValueError("structure vectors must have length dim")
        self.basis_names = tuple(basis_names) if basis_names else tuple(
            "b%d" % i for i in range(self.dim))
        self._sp = [[support(v) for v in row] for row in self.mult]

    @classmethod
    def from_function(cls, field: Field, dim: int, product: Callable[[int, int], dict],
                      unit: Sequence, basis_names=None) -> "FinAlgebra":
        mult = [[densify(product(i, j), dim, field) for j in range(dim)] for i in range(dim)]
        return cls(field, mult, unit, basis_names)

    def e(self, i: int) -> tuple:
        return unit_vector(self.field, self.dim, i)

    @property
    def one(self) -> tuple:
        return self.unit

    def zero(self) -> tuple:
        return zero_vector(self.field, self.dim)

    def mul_sparse(self, x: dict, y: dict) -> dict:
        out: dict = {}
        for i, a in x.items():
            row = self._sp[i]
            for j, b in y.items():
                ab = a * b
                for k, c in row[j].items():
                    _acc(out, k, ab * c)
        return out

    def mul(self, x, y) -> tuple:
        return densify(self.mul_sparse(support(x), support(y)), self.dim, self.field)

    def left_matrix(self, x) -> Matrix:
        return Matrix.from_columns([self.mul(x, self.e(j)) for j in range(self.dim)],
                                   self.field, self.dim)

    def right_matrix(self, x) -> Matrix:
        return Matrix.from_columns([self.mul(self.e(j), x) for j in range(self.dim)],
                                   self.field, self.dim)

    def mult_matrix(self) -> Matrix:
        cols = [self.mult[i][j] for i in range(self.dim) for j in range(self.dim)]
        return Matrix.from_columns(cols, self.field, self.dim)

    def opposite(self) -> "FinAlgebra":
        mult = [[self.mult[j][i] for j in range(self.dim)] for i in range(self.dim)]
        names = [n + "°" for n in self.basis_names]
        return FinAlgebra(self.field, mult, self.unit, names)

    def tensor(self, other: "FinAlgebra") -> "FinAlgebra":
        n, m = self.dim, other.dim

        def product(i, j):
            (a, b), (c, d) = divmod(i, m), divmod(j, m)
            out: dict = {}
            for k, x in self._sp[a][c].items():
                for l, y in other._sp[b][d].items():
                    out[k * m + l] = x * y
            return out

        unit = [x * y for x in self.unit for y in other.unit]
        names = ["%s⊗%s" % (p, q) for p in self.basis_names for q in other.basis_names]
        return FinAlgebra.from_function(self.field, n * m, product, unit, names)

    def __eq__(self, other):
        return (isinstance(other, FinAlgebra) and self.field == other.field
                and self.mult == other.mult and self.unit == other.unit)

    def __hash__(self):
        return hash((self.dim, self.unit))

    def __repr__(self):
        return "FinAlgebra(dim=%d)" % self.dim


def mul_tensor2(left: FinAlgebra, right: FinAlgebra, x: dict, y: dict) -> dict:
    """Product in the tensor algebra ``left ⊗ right`` on sparse vectors."""
    m = right.dim
    out: dict = {}
    for i, a in x.items():
        p, q = divmod(i, m)
        for j, b in y.items():
            r, s = divmod(j, m)
            ab = a * b
            lp = left._sp[p][r]
            if not lp:
                continue
            rp = right._sp[q][s]
            for k, c in lp.items():
                abc = ab * c
                for l, d in rp.items():
                    _acc(out, k * m + l, abc * d)
    return out


def check_algebra(a: FinAlgebra, subject: str = "algebra") -> Report:
    rep = Report(subject)
    n = a.dim
    assoc = rep.law("associativity")
    for i in range(n):
        for j in range(n):
            ij = a._sp[i][j]
            for l in range(n):
                lhs = a.mul_sparse(ij, {l: a.field.one})
                rhs = a.mul_sparse({i: a.field.one}, a._sp[j][l])
                assoc.expect(lhs, rhs, i, j, l)
    unit = rep.law("unit")
    u = support(a.unit)
    for i in range(n):
        ei = {i: a.field.one}
        unit.expect(a.mul_sparse(u, ei), ei, i, note="1·b_i")
        unit.expect(a.mul_sparse(ei, u), ei, i, note="b_i·1")
    return rep


# ---------------------------------------------------------------- coalgebras


class FinCoalgebra:
    """Coalgebra with ``comult`` a ``dim² x dim`` matrix and ``counit`` a covector."""

    def __init__(self, field: Field, comult: Matrix, counit: Sequence,
                 basis_names: Sequence[str] | None = None):
        self.field = field
        self.dim = len(counit)
        if comult.shape != (self.dim * self.dim, self.dim):
            raise ValueError("comultiplication must be a dim^2 x dim matrix")
        self.comult = comult
        self.counit = tuple(field(x) for x in counit)
        self.basis_names = tuple(basis_names) if basis_names else tuple(
            "b%d" % i for i in range(self.dim))
        self._dcols = sparse_columns(comult)

    def delta_sparse(self, x: dict) -> dict:
        out: dict = {}
        for i, a in x.items():
            for k, c in self._dcols[i].items():
                _acc(out, k, a * c)
        return out

    def delta(self, x) -> tuple:
        return densify(self.delta_sparse(support(x)), self.dim ** 2, self.field)

    def eps(self, x):
        s = self.field.zero
        for a, b in zip(x, self.counit):
            if a and b:
                s += a * b
        return s

    def eps_sparse(self, x: dict):
        s = self.field.zero
        for i, a in x.items():
            s += a * self.counit[i]
        return s

    def __eq__(self, other):
        return (isinstance(other, FinCoalgebra) and self.comult == other.comult
                and self.counit == other.counit)

    def __hash__(self):
        return hash(self.counit)

    def __repr__(self):
        return "FinCoalgebra(dim=%d)" % self.dim


def coalgebra_from_function(field: Field, dim: int, delta: Callable[[int], dict],
                            counit: Sequence, basis_names=None) -> FinCoalgebra:
    cols = [densify(delta(i), dim * dim, field) for i in range(dim)]
    return FinCoalgebra(field, Matrix.from_columns(cols, field, dim * dim), counit, basis_names)


def check_coalgebra(c: FinCoalgebra, subject: str = "coalgebra") -> Report:
    rep = Report(subject)
    n = c.dim
    one = c.field.one
    coassoc = rep.law("coassociativity")
    counit = rep.law("counit")
    for i in range(n):
        d = c._dcols[i]
        lhs: dict = {}   # (Δ⊗id)Δ
        rhs: dict = {}   # (id⊗Δ)Δ
        left_unit: dict = {}
        right_unit: dict = {}
        for k, x in d.items():
            a, b = divmod(k, n)
            for kk, y in c._dcols[a].items():
                _acc(lhs, kk * n + b, x * y)
            for kk, y in c._dcols[b].items():
                _acc(rhs, a * n * n + kk, x * y)
            if c.counit[a]:
                _acc(left_unit, b, x * c.counit[a])
            if c.counit[b]:
                _acc(right_unit, a, x * c.counit[b])
        coassoc.expect(lhs, rhs, i)
        counit.expect(left_unit, {i: one}, i, note="(ε⊗id)Δ")
        counit.expect(right_unit, {i: one}, i, note="(id⊗ε)Δ")
    return rep


# ---------------------------------------------------------------- maps


class AlgebraMap:
    def __init__(self, source: FinAlgebra, target: FinAlgebra, matrix: Matrix):
        if matrix.shape != (target.dim, source.dim):
            raise ValueError("algebra map has shape %s, expected %s"
                             % (matrix.shape, (target.dim, source.dim)))
        self.source = source
        self.target = target
        self.matrix = matrix

    def __call__(self, x) -> tuple:
        return self.matrix.apply(x)


def check_algebra_map(source: FinAlgebra, target: FinAlgebra, matrix: Matrix,
                      anti: bool = False, report: Report | None = None,
                      name: str = "algebra_map") -> Report:
    """``f(ab) = f(a)f(b)`` (or ``f(b)f(a)`` when ``anti``) and ``f(1) = 1``."""
    rep = report if report is not None else Report(name)
    law = rep.law(name + ("_anti_multiplicative" if anti else "_multiplicative"))
    images = [matrix.column(i) for i in range(source.dim)]
    for i in range(source.dim):
        for j in range(source.dim):
            lhs = matrix.apply(source.mult[i][j])
            rhs = target.mul(images[j], images[i]) if anti else target.mul(images[i], images[j])
            law.expect(lhs, rhs, i, j)
    rep.law(name + "_unital").expect(matrix.apply(source.unit), target.unit)
    return rep


# ---------------------------------------------------------------- bimodules


class RBimodule:
    """A vector space with (optional) left and right actions of ``base``.

    ``left[k]`` is the matrix of ``m ↦ b_k · m``; ``right[k]`` that of
    ``m ↦ m · b_k``.
    """

    def __init__(self, base: FinAlgebra, dim: int, left: Sequence[Matrix] | None = None,
                 right: Sequence[Matrix] | None = None, name: str = ""):
        self.base = base
        self.dim = dim
        self.field = base.field
        self.left = tuple(left) if left is not None else None
        self.right = tuple(right) if right is not None else None
        self.name = name
        for mats in (self.left, self.right):
            if mats is not None:
                if len(mats) != base.dim or any(m.shape != (dim, dim) for m in mats):
                    raise ValueError("action matrices have the wrong shape")
        self._lcols = [sparse_columns(m) for m in self.left] if self.left else None
        self._rcols = [sparse_columns(m) for m in self.right] if self.right else None

    def _combine(self, mats: tuple[Matrix, ...], r) -> Matrix:
        out = Matrix.zeros(self.dim, self.dim, self.field)
        for k, x in enumerate(r):
            if x:
                out = out + mats[k].scale(x)
        return out

    def left_matrix(self, r) -> Matrix:
        return self._combine(self.left, r)

    def right_matrix(self, r) -> Matrix:
        return self._combine(self.right, r)

    def act_left(self, r, m) -> tuple:
        return self.left_matrix(r).apply(m)

    def act_right(self, m, r) -> tuple:
        return self.right_matrix(r).apply(m)

    def act_left_sparse(self, r: dict, m: dict) -> dict:
        out: dict = {}
        for k, x in r.items():
            cols = self._lcols[k]
            for j, y in m.items():
                for i, z in cols[j].items():
                    _acc(out, i, x * y * z)
        return out

    def act_right_sparse(self, m: dict, r: dict) -> dict:
        out: dict = {}
        for k, x in r.items():
            cols = self._rcols[k]
            for j, y in m.items():
                for i, z in cols[j].items():
                    _acc(out, i, x * y * z)
        return out

    def only_left(self) -> "RBimodule":
        return RBimodule(self.base, self.dim, self.left, None, self.name)

    def __eq__(self, other):
        return (isinstance(other, RBimodule) and self.base == other.base
                and self.dim == other.dim and self.left == other.left
                and self.right == other.right)

    def __hash__(self):
        return hash((self.dim, self.base.dim))

    def __repr__(self):
        return "RBimodule(%s dim=%d over dim %d)" % (self.name, self.dim, self.base.dim)


def ring_bimodule(base: FinAlgebra, total: FinAlgebra, i_map: Matrix,
                  name: str = "") -> RBimodule:
    """``r·u·r' = i(r) u i(r')`` for an R-ring ``(U, i)``."""
    left = [total.left_matrix(i_map.column(k)) for k in range(base.dim)]
    right = [total.right_matrix(i_map.column(k)) for k in range(base.dim)]
    return RBimodule(base, total.dim, left, right, name)


def regular_bimodule(base: FinAlgebra) -> RBimodule:
    return ring_bimodule(base, base, Matrix.identity(base.dim, base.field), "R")


def check_bimodule(m: RBimodule, report: Report | None = None, prefix: str = "") -> Report:
    rep = report if report is not None else Report("bimodule")
    R = m.base
    ident = Matrix.identity(m.dim, m.field)
    if m.left is not None:
        rep.law(prefix + "left_unital").expect(m.left_matrix(R.unit), ident)
        law = rep.law(prefix + "left_associative")
        for a in range(R.dim):
            for b in range(R.dim):
                law.expect(m.left[a] @ m.left[b], m.left_matrix(R.mult[a][b]), a, b)
    if m.right is not None:
        rep.law(prefix + "right_unital").expect(m.right_matrix(R.unit), ident)
        law = rep.law(prefix + "right_associative")
        for a in range(R.dim):
            for b in range(R.dim):
                law.expect(m.right[b] @ m.right[a], m.right_matrix(R.mult[a][b]), a, b)
    if m.left is not None and m.right is not None:
        law = rep.law(prefix + "actions_commute")
        for a in range(R.dim):
            for b in range(R.dim):
                law.expect(m.left[a] @ m.right[b], m.right[b] @ m.left[a], a, b)
    return rep


# ---------------------------------------------------------------- tensor over R


class BalancedTensor:
    """``M ⊗_R N`` as a quotient of ``M ⊗ N`` by ``(m·r)⊗n - m⊗(r·n)``."""

    def __init__(self, left: RBimodule, right: RBimodule):
        if left.base != right.base:
            raise ValueError("tensor over different base algebras")
        if left.right is None or right.left is None:
            raise ValueError("M ⊗_R N needs a right action on M and a left action on N")
        self.left = left
        self.right = right
        self.base = left.base
        self.field = left.field
        m, n = left.dim, right.dim
        self.ambient_dim = m * n

        def relations():
            for k in range(self.base.dim):
                rc, lc = left._rcols[k], right._lcols[k]
                for i in range(m):
                    mi = rc[i]
                    for j in range(n):
                        v: dict = {}
                        for a, x in mi.items():
                            _acc(v, a * n + j, x)
                        for b, y in lc[j].items():
                            _acc(v, i * n + b, -y)
                        if v:
                            yield v

        rel = span_sparse(relations(), m * n, self.field)
        self.space: QuotientSpace = quotient(m * n, rel)
        self._bimodule: RBimodule | None = None

    @property
    def dim(self) -> int:
        return self.space.quot_dim

    def project(self, v) -> tuple:
        return self.space.project(v)

    def project_sparse(self, v: dict) -> dict:
        return self.space.project_sparse(v)

    def lift_terms(self, q) -> list[tuple[int, int, object]]:
        n = self.right.dim
        out = []
        for j, x in enumerate(q):
            if x:
                a, b = divmod(self.space.free[j], n)
                out.append((a, b, x))
        return out

    def lift_terms_sparse(self, q: dict) -> list[tuple[int, int, object]]:
        n = self.right.dim
        return [divmod(self.space.free[j], n) + (x,) for j, x in q.items()]

    def basis_pair(self, j: int) -> tuple[int, int]:
        return divmod(self.space.free[j], self.right.dim)

    def lift(self, q) -> tuple:
        return self.space.lift(q)

    def pair_sparse(self, u: dict, v: dict) -> dict:
        n = self.right.dim
        amb: dict = {}
        for i, x in u.items():
            for j, y in v.items():
                amb[i * n + j] = x * y
        return self.space.project_sparse(amb)

    def pair(self, u, v) -> tuple:
        """The balanced bilinear map ``M × N → M ⊗_R N``."""
        return densify(self.pair_sparse(support(u), support(v)), self.dim, self.field)

    def pair_index(self, i: int, j: int) -> dict:
        return self.space.project_sparse({i * self.right.dim + j: self.field.one})

    def induced(self, f: Matrix, g: Matrix, target: "BalancedTensor") -> Matrix:
        """``f ⊗_R g`` for maps compatible with the balancing."""
        fc, gc = sparse_columns(f), sparse_columns(g)
        cols = []
        for j in range(self.dim):
            a, b = self.basis_pair(j)
            cols.append(densify(target.pair_sparse(fc[a], gc[b]), target.dim, self.field))
        return Matrix.from_columns(cols, self.field, target.dim)

    def _leg_action(self, mats, leg: str) -> list[Matrix]:
        out = []
        n = self.right.dim
        for k in range(self.base.dim):
            cols = []
            mc = sparse_columns(mats[k])
            for j in range(self.dim):
                a, b = self.basis_pair(j)
                amb = {}
                if leg == "left":
                    for i, x in mc[a].items():
                        amb[i * n + b] = x
                else:
                    for i, x in mc[b].items():
                        amb[a * n + i] = x
                cols.append(self.space.project(amb))
            out.append(Matrix.from_columns(cols, self.field, self.dim))
        return out

    def as_bimodule(self) -> RBimodule:
        """Left action from ``M``, right action from ``N`` (where present)."""
        if self._bimodule is None:
            left = self._leg_action(self.left.left, "left") if self.left.left else None
            right = self._leg_action(self.right.right, "right") if self.right.right else None
            self._bimodule = RBimodule(self.base, self.dim, left, right,
                                       "(%s⊗%s)" % (self.left.name, self.right.name))
        return self._bimodule

    def __repr__(self):
        return "BalancedTensor(%d x %d -> %d)" % (self.left.dim, self.right.dim, self.dim)


def tensor_over_R(m: RBimodule, n: RBimodule) -> BalancedTensor:
    return BalancedTensor(m, n)


def associator(xy: BalancedTensor, xy_z: BalancedTensor, yz: BalancedTensor,
               x_yz: BalancedTensor) -> Matrix:
    """The map ``(X⊗_R Y)⊗_R Z → X⊗_R (Y⊗_R Z)`` induced by the identity of ``X⊗Y⊗Z``.

    Raises if it is not invertible.
    """
    field = xy.field
    cols = []
    for j in range(xy_z.dim):
        a, z = xy_z.basis_pair(j)
        x, y = xy.basis_pair(a)
        yzq = yz.pair_index(y, z)
        out: dict = {}
        for q, c in yzq.items():
            for k, v in x_yz.pair_index(x, q).items():
                _acc(out, k, c * v)
        cols.append(densify(out, x_yz.dim, field))
    m = Matrix.from_columns(cols, field, x_yz.dim)
    if m.rows != m.cols or rank(m) != m.rows:
        raise VerificationError("associator (X⊗Y)⊗Z → X⊗(Y⊗Z) is not invertible: %s"
                                % (m.shape,))
    return m


# ---------------------------------------------------------------- Takeuchi product


class TakeuchiProduct:
    """``H ×_R A ⊆ H ⊗_R A``, in quotient coordinates, with its product."""

    def __init__(self, tensor: BalancedTensor, subspace: Subspace, left_alg: FinAlgebra,
                 right_alg: FinAlgebra | None):
        self.tensor = tensor
        self.subspace = subspace
        self.left_alg = left_alg
        self.right_alg = right_alg
        self.table: list[list[tuple]] | None = None

    def __contains__(self, q) -> bool:
        return q in self.subspace

    @property
    def dim(self) -> int:
        return self.subspace.dim

    def mul(self, x, y) -> tuple:
        """Product of two elements via representatives in ``H ⊗ A``."""
        t = self.tensor
        lx = t.space.lift_sparse(x)
        ly = t.space.lift_sparse(y)
        prod = mul_tensor2(self.left_alg, self.right_alg, lx, ly)
        return densify(t.project_sparse(prod), t.dim, t.field)

    def one(self) -> tuple:
        return self.tensor.pair(self.left_alg.unit, self.right_alg.unit)

    def build_table(self) -> list[list[tuple]]:
        """Products of subspace basis elements; raises if the subspace is not closed."""
        basis = self.subspace.basis
        table = []
        for i, x in enumerate(basis):
            row = []
            for j, y in enumerate(basis):
                p = self.mul(x, y)
                c = self.subspace.coordinates(p)
                if c is None:
                    raise VerificationError(
                        "H ×_R A not closed under multiplication at basis pair (%d, %d)" % (i, j))
                row.append(c)
            table.append(row)
        one = self.subspace.coordinates(self.one())
        if one is None:
            raise VerificationError("1 ⊗_R 1 not in H ×_R A")
        self.table = table
        return table

    def algebra(self) -> FinAlgebra:
        """The ring structure in subspace-basis coordinates."""
        table = self.table if self.table is not None else self.build_table()
        return FinAlgebra(self.tensor.field, table, self.subspace.coordinates(self.one()))


def times_R(h_module: RBimodule, h_algebra: FinAlgebra, target: Matrix,
            a_module: RBimodule, a_algebra: FinAlgebra | None = None,
            tensor: BalancedTensor | None = None, with_table: bool = True) -> TakeuchiProduct:
    """``H ×_R A``: elements with ``Σ h t_H(r) ⊗ a = Σ h ⊗ a·r`` for all basis ``r``.

    ``a_module.right`` supplies ``a·r`` (``a s_A(r)`` for an R-ring).  When
    ``a_algebra`` is given the product table is built and closure verified.
    """
    if h_module.base != a_module.base:
        raise ValueError("base mismatch in H ×_R A")
    t = tensor if tensor is not None else BalancedTensor(h_module, a_module)
    field = t.field
    R = h_module.base
    sub = full_space(t.dim, field)
    for k in range(R.dim):
        tr = support(target.column(k))
        ar = a_module._rcols[k]
        cols = []
        for j in range(t.dim):
            h, a = t.basis_pair(j)
            amb: dict = {}
            hk = h_algebra.mul_sparse({h: field.one}, tr)
            for i, x in hk.items():
                _acc(amb, i * a_module.dim + a, x)
            for i, x in ar[a].items():
                _acc(amb, h * a_module.dim + i, -x)
            cols.append(densify(t.project_sparse(amb), t.dim, field))
        sub = intersect(sub, kernel(Matrix.from_columns(cols, field, t.dim)))
    tp = TakeuchiProduct(t, sub, h_algebra, a_algebra)
    if a_algebra is not None and with_table:
        tp.build_table()
    return tp


# ---------------------------------------------------------------- corings


class Coring:
    """An R-coring: bimodule, ``Δ`` into ``C ⊗_R C`` coordinates, ``ε`` into ``R``."""

    def __init__(self, base: FinAlgebra, bimodule: RBimodule, comult: Matrix, counit: Matrix,
                 tensor: BalancedTensor | None = None):
        self.base = base
        self.bimodule = bimodule
        self.field = base.field
        self.tensor = tensor if tensor is not None else BalancedTensor(bimodule, bimodule)
        if comult.shape != (self.tensor.dim, bimodule.dim):
            raise ValueError("comultiplication has shape %s, expected %s"
                             % (comult.shape, (self.tensor.dim, bimodule.dim)))
        if counit.shape != (base.dim, bimodule.dim):
            raise ValueError("counit has shape %s, expected %s"
                             % (counit.shape, (base.dim, bimodule.dim)))
        self.comult = comult
        self.counit = counit
        self._dcols = sparse_columns(comult)
        self._ecols = sparse_columns(counit)

    @property
    def dim(self) -> int:
        return self.bimodule.dim

    def delta(self, c) -> tuple:
        return self.comult.apply(c)

    def eps(self, c) -> tuple:
        return self.counit.apply(c)

    def delta_lift(self, c: dict) -> dict:
        """A representative of ``Δ(c)`` in the ambient ``C ⊗ C``."""
        out: dict = {}
        for i, x in c.items():
            for j, y in self._dcols[i].items():
                _acc(out, self.tensor.space.free[j], x * y)
        return out

    def __eq__(self, other):
        return (isinstance(other, Coring) and self.base == other.base
                and self.bimodule == other.bimodule and self.comult == other.comult
                and self.counit == other.counit)

    def __hash__(self):
        return hash((self.dim, self.base.dim))

    def __repr__(self):
        return "Coring(dim=%d over dim %d)" % (self.dim, self.base.dim)


def trivial_coring(base: FinAlgebra) -> Coring:
    """``R`` as an R-coring: ``Δ`` and ``ε`` are the identity under ``R ⊗_R R ≅ R``."""
    bim = regular_bimodule(base)
    t = BalancedTensor(bim, bim)
    comult = Matrix.from_columns([t.pair(base.e(i), base.unit) for i in range(base.dim)],
                                 base.field, t.dim)
    return Coring(base, bim, comult, Matrix.identity(base.dim, base.field), t)


def check_coring(c: Coring, subject: str = "coring", report: Report | None = None,
                 prefix: str = "") -> Report:
    rep = report if report is not None else Report(subject)
    R, B = c.base, c.bimodule
    field = c.field
    check_bimodule(B, rep, prefix + "bimodule_")
    T = c.tensor
    TB = T.as_bimodule()
    one = field.one
    n = c.dim
    dl = rep.law(prefix + "comult_left_R_linear")
    dr = rep.law(prefix + "comult_right_R_linear")
    el = rep.law(prefix + "counit_left_R_linear")
    er = rep.law(prefix + "counit_right_R_linear")
    for k in range(R.dim):
        rk = R.e(k)
        for i in range(n):
            lc = B.left[k].column(i)
            dl.expect(c.delta(lc), TB.left[k].apply(c.comult.column(i)), k, i)
            rc = B.right[k].column(i)
            dr.expect(c.delta(rc), TB.right[k].apply(c.comult.column(i)), i, k)
            el.expect(c.eps(lc), R.mul(rk, c.counit.column(i)), k, i)
            er.expect(c.eps(rc), R.mul(c.counit.column(i), rk), i, k)

    # coassociativity in (C⊗C)⊗C, transported to C⊗(C⊗C)
    t12 = BalancedTensor(TB, B)
    t21 = BalancedTensor(B, TB)
    assoc = associator(T, t12, T, t21)
    coassoc = rep.law(prefix + "coassociativity")
    cl = rep.law(prefix + "counit_left")
    cr = rep.law(prefix + "counit_right")
    for i in range(n):
        d = c._dcols[i]
        lhs: dict = {}
        rhs: dict = {}
        left_unit: dict = {}
        right_unit: dict = {}
        for j, x in d.items():
            a, b = T.basis_pair(j)
            for q, y in c._dcols[a].items():
                for kk, z in t12.pair_index(q, b).items():
                    _acc(lhs, kk, x * y * z)
            for q, y in c._dcols[b].items():
                for kk, z in t21.pair_index(a, q).items():
                    _acc(rhs, kk, x * y * z)
            ea = c._ecols[a]
            if ea:
                for kk, y in B.act_left_sparse(ea, {b: one}).items():
                    _acc(left_unit, kk, x * y)
            eb = c._ecols[b]
            if eb:
                for kk, y in B.act_right_sparse({a: one}, eb).items():
                    _acc(right_unit, kk, x * y)
        lhs_t = assoc.apply(densify(lhs, t12.dim, field))
        coassoc.expect(lhs_t, densify(rhs, t21.dim, field), i)
        cl.expect(left_unit, {i: one}, i, note="(ε⊗_R C)Δ")
        cr.expect(right_unit, {i: one}, i, note="(C⊗_R ε)Δ")
    return rep


# ---------------------------------------------------------------- comodules


class CoringComodule:
    """A left comodule of a coring: left R-module ``M`` and ``ρ: M → C ⊗_R M``."""

    def __init__(self, coring: Coring, module: RBimodule, coaction: Matrix,
                 tensor: BalancedTensor | None = None):
        if module.left is None:
            raise ValueError("a coring comodule needs a left module")
        self.coring = coring
        self.module = module
        self.tensor = tensor if tensor is not None else BalancedTensor(coring.bimodule, module)
        if coaction.shape != (self.tensor.dim, module.dim):
            raise ValueError("coaction has shape %s, expected %s"
                             % (coaction.shape, (self.tensor.dim, module.dim)))
        self.coaction = coaction
        self._cols = sparse_columns(coaction)

    @property
    def dim(self) -> int:
        return self.module.dim

    def rho(self, m) -> tuple:
        return self.coaction.apply(m)


def check_coring_comodule(m: CoringComodule, subject: str = "comodule",
                          report: Report | None = None, prefix: str = "") -> Report:
    rep = report if report is not None else Report(subject)
    C = m.coring
    R = C.base
    field = C.field
    one = field.one
    M = m.module
    check_bimodule(M.only_left(), rep, prefix + "module_")
    T = m.tensor
    TB = T.as_bimodule()
    lin = rep.law(prefix + "coaction_left_R_linear")
    for k in range(R.dim):
        for i in range(M.dim):
            lin.expect(m.rho(M.left[k].column(i)), TB.left[k].apply(m.coaction.column(i)), k, i)

    c_t = BalancedTensor(C.bimodule, TB)                    # C ⊗_R (C ⊗_R M)
    cc_m = BalancedTensor(C.tensor.as_bimodule(), M)        # (C ⊗_R C) ⊗_R M
    assoc = associator(C.tensor, cc_m, T, c_t)
    coassoc = rep.law(prefix + "coassociativity")
    counit = rep.law(prefix + "counit")
    for i in range(M.dim):
        lhs: dict = {}     # (Δ ⊗_R M) ρ
        rhs: dict = {}     # (C ⊗_R ρ) ρ
        unit: dict = {}
        for j, x in m._cols[i].items():
            c, mm = T.basis_pair(j)
            for q, y in C._dcols[c].items():
                for kk, z in cc_m.pair_index(q, mm).items():
                    _acc(lhs, kk, x * y * z)
            for q, y in m._cols[mm].items():
                for kk, z in c_t.pair_index(c, q).items():
                    _acc(rhs, kk, x * y * z)
            ec = C._ecols[c]
            if ec:
                for kk, y in M.act_left_sparse(ec, {mm: one}).items():
                    _acc(unit, kk, x * y)
        coassoc.expect(assoc.apply(densify(lhs, cc_m.dim, field)), densify(rhs, c_t.dim, field), i)
        counit.expect(unit, {i: one}, i, note="(ε⊗_R M)ρ")
    return rep


# ---------------------------------------------------------------- multi-leg helpers


def split_index(k: int, dims: Sequence[int]) -> list[int]:
    out = []
    for d in reversed(dims):
        k, r = divmod(k, d)
        out.append(r)
    return out[::-1]


def join_index(idx: Sequence[int], dims: Sequence[int]) -> int:
    k = 0
    for i, d in zip(idx, dims):
        k = k * d + i
    return k


def mul_legs(algs: Sequence[FinAlgebra], x: dict, y: dict) -> dict:
    """Product in ``A_1 ⊗ ... ⊗ A_k`` on sparse vectors."""
    dims = [a.dim for a in algs]
    out: dict = {}
    for i, a in x.items():
        ii = split_index(i, dims)
        for j, b in y.items():
            jj = split_index(j, dims)
            terms = {0: a * b}
            for alg, p, q, d in zip(algs, ii, jj, dims):
                sp = alg._sp[p][q]
                if not sp:
                    terms = {}
                    break
                terms = {t * d + k: c * v for t, c in terms.items() for k, v in sp.items()}
            for k, v in terms.items():
                _acc(out, k, v)
    return out


def tensor_sparse(*vecs: dict, dims: Sequence[int]) -> dict:
    out = {0: None}
    first = True
    for v, d in zip(vecs, dims):
        nxt = {}
        for t, c in out.items():
            for k, x in v.items():
                nxt[t * d + k] = x if first else c * x
        out = nxt
        first = False
    return out


def apply_leg(cols: list[dict], leg: int, dims: Sequence[int], v: dict,
              out_dim: int | None = None) -> dict:
    """Apply a linear map (given by sparse columns) to one tensor leg."""
    new_dims = list(dims)
    if out_dim is not None:
        new_dims[leg] = out_dim
    out: dict = {}
    for k, x in v.items():
        idx = split_index(k, dims)
        for i, y in cols[idx[leg]].items():
            idx2 = list(idx)
            idx2[leg] = i
            _acc(out, join_index(idx2, new_dims), x * y)
    return out
