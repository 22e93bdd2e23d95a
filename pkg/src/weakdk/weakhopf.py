"""Weak bialgebras and weak Hopf algebras, their counital maps and base algebra."""

from __future__ import annotations

from .exactlin import Matrix, densify, image, inverse, support
from .findim import (BalancedTensor, FinAlgebra, FinCoalgebra, _acc, apply_leg,
                     check_algebra, check_coalgebra, mul_legs, mul_tensor2,
                     sparse_columns, tensor_sparse)
from .report import Report, VerificationError


class WeakBialgebra:
    """An algebra and a coalgebra on the same basis."""

    def __init__(self, algebra: FinAlgebra, coalgebra: FinCoalgebra, name: str = ""):
        if algebra.dim != coalgebra.dim or algebra.field != coalgebra.field:
            raise ValueError("algebra and coalgebra must share field and dimension")
        self.algebra = algebra
        self.coalgebra = coalgebra
        self.field = algebra.field
        self.dim = algebra.dim
        self.name = name
        self._pi = None

    @property
    def basis_names(self):
        return self.algebra.basis_names

    def e(self, i: int) -> tuple:
        return self.algebra.e(i)

    @property
    def one(self) -> tuple:
        return self.algebra.unit

    def mul(self, x, y) -> tuple:
        return self.algebra.mul(x, y)

    def delta(self, x) -> tuple:
        return self.coalgebra.delta(x)

    def eps(self, x):
        return self.coalgebra.eps(x)

    def delta_one(self) -> dict:
        return self.coalgebra.delta_sparse(support(self.one))

    def eps_pairing(self) -> list[list]:
        """``E[i][j] = ε(b_i b_j)``."""
        c = self.coalgebra
        return [[c.eps_sparse(self.algebra._sp[i][j]) for j in range(self.dim)]
                for i in range(self.dim)]

    def _pi_matrices(self) -> tuple[Matrix, Matrix]:
        if self._pi is None:
            n = self.dim
            E = self.eps_pairing()
            d1 = [divmod(k, n) + (x,) for k, x in self.delta_one().items()]
            left, right = [], []
            for g in range(n):
                pl: dict = {}
                pr: dict = {}
                for a, b, c in d1:
                    if E[a][g]:
                        _acc(pl, b, c * E[a][g])    # ε(1₁g)1₂
                    if E[g][b]:
                        _acc(pr, a, c * E[g][b])    # ε(g1₂)1₁
                left.append(densify(pl, n, self.field))
                right.append(densify(pr, n, self.field))
            self._pi = (Matrix.from_columns(left, self.field, n),
                        Matrix.from_columns(right, self.field, n))
        return self._pi

    @property
    def pi_left(self) -> Matrix:
        return self._pi_matrices()[0]

    @property
    def pi_right(self) -> Matrix:
        return self._pi_matrices()[1]

    def __repr__(self):
        return "%s(%s dim=%d)" % (type(self).__name__, self.name, self.dim)


class WeakHopf(WeakBialgebra):
    """A weak bialgebra with bijective antipode.

    ``antipode_inv`` may be omitted, in which case the matrix inverse is used; a
    singular antipode leaves it ``None`` so that the checker can report it.
    """

    def __init__(self, algebra: FinAlgebra, coalgebra: FinCoalgebra, antipode: Matrix,
                 antipode_inv: Matrix | None = None, name: str = ""):
        super().__init__(algebra, coalgebra, name)
        if antipode.shape != (self.dim, self.dim):
            raise ValueError("antipode must be dim x dim")
        self.antipode = antipode
        if antipode_inv is None:
            try:
                antipode_inv = inverse(antipode)
            except ZeroDivisionError:
                pass
        self.antipode_inv = antipode_inv

    def S(self, x) -> tuple:
        return self.antipode.apply(x)

    def S_inv(self, x) -> tuple:
        if self.antipode_inv is None:
            raise ZeroDivisionError("the antipode is not invertible")
        return self.antipode_inv.apply(x)


def pi_maps(h: WeakBialgebra, g) -> tuple[tuple, tuple]:
    """``(Π^L(g), Π^R(g))``."""
    return h.pi_left.apply(g), h.pi_right.apply(g)


def check_weak_bialgebra(h: WeakBialgebra, report: Report | None = None) -> Report:
    rep = report if report is not None else Report("weak bialgebra %s" % h.name)
    rep.merge(check_algebra(h.algebra), "algebra_")
    rep.merge(check_coalgebra(h.coalgebra), "coalgebra_")
    A, C = h.algebra, h.coalgebra
    n = h.dim

    law = rep.law("comult_multiplicative")
    for i in range(n):
        di = C._dcols[i]
        for j in range(n):
            lhs = C.delta_sparse(A._sp[i][j])
            rhs = mul_tensor2(A, A, di, C._dcols[j])
            law.expect(lhs, rhs, i, j)

    # weak counit: ε(xyz) = ε(xy₁)ε(y₂z) = ε(xy₂)ε(y₁z)
    E = h.eps_pairing()
    law = rep.law("weak_counit")
    for y in range(n):
        dy = [divmod(k, n) + (c,) for k, c in C._dcols[y].items()]
        for x in range(n):
            xy = A._sp[x][y]
            for z in range(n):
                lhs = sum((c * E[k][z] for k, c in xy.items()), h.field.zero)
                r1 = sum((c * E[x][a] * E[b][z] for a, b, c in dy), h.field.zero)
                r2 = sum((c * E[x][b] * E[a][z] for a, b, c in dy), h.field.zero)
                law.expect(lhs, r1, x, y, z, note="ε(xy₁)ε(y₂z)")
                law.expect(lhs, r2, x, y, z, note="ε(xy₂)ε(y₁z)")

    # weak unit: (Δ⊗H)Δ(1) = (Δ(1)⊗1)(1⊗Δ(1)) = (1⊗Δ(1))(Δ(1)⊗1)
    d1 = h.delta_one()
    u = support(h.one)
    # Δ on the first leg; the (n², n) layout coincides with (n, n, n)
    lhs = apply_leg(C._dcols, 0, (n, n), d1, n * n)
    left = tensor_sparse(d1, u, dims=(n * n, n))
    right = tensor_sparse(u, d1, dims=(n, n * n))
    law = rep.law("weak_unit")
    law.expect(lhs, mul_legs((A, A, A), left, right), note="(Δ(1)⊗1)(1⊗Δ(1))")
    law.expect(lhs, mul_legs((A, A, A), right, left), note="(1⊗Δ(1))(Δ(1)⊗1)")
    return rep


def check_weak_hopf(h: WeakHopf, subject: str | None = None) -> Report:
    """All weak Hopf axioms on basis tuples, with witnesses."""
    rep = Report(subject or "weak Hopf algebra %s" % h.name)
    check_weak_bialgebra(h, rep)
    A, C = h.algebra, h.coalgebra
    n = h.dim
    S = sparse_columns(h.antipode)
    PL, PR = h.pi_left, h.pi_right
    l1 = rep.law("antipode_left")      # h₁S(h₂) = Π^L(h)
    l2 = rep.law("antipode_right")     # S(h₁)h₂ = Π^R(h)
    l3 = rep.law("antipode_sandwich")  # S(h₁)h₂S(h₃) = S(h)
    for i in range(n):
        d = [divmod(k, n) + (c,) for k, c in C._dcols[i].items()]
        a: dict = {}
        b: dict = {}
        for x, y, c in d:
            for k, v in A.mul_sparse({x: c}, S[y]).items():
                _acc(a, k, v)
            for k, v in A.mul_sparse(S[x], {y: c}).items():
                _acc(b, k, v)
        l1.expect(densify(a, n, h.field), PL.column(i), i)
        l2.expect(densify(b, n, h.field), PR.column(i), i)
        s: dict = {}
        for x, y, c in d:
            for yy, zz, c2 in [divmod(k, n) + (v,) for k, v in C._dcols[y].items()]:
                t = A.mul_sparse(A.mul_sparse(S[x], {yy: c * c2}), S[zz])
                for k, v in t.items():
                    _acc(s, k, v)
        l3.expect(densify(s, n, h.field), h.antipode.column(i), i)
    ident = Matrix.identity(n, h.field)
    inv = rep.law("antipode_invertible")
    if h.antipode_inv is None:
        inv.fail(note="S is singular")
    else:
        inv.expect(h.antipode_inv @ h.antipode, ident, note="S⁻¹S")
        inv.expect(h.antipode @ h.antipode_inv, ident, note="SS⁻¹")
    return rep


# ---------------------------------------------------------------- base algebra


class SeparablePair:
    """An algebra ``R`` with ``e ∈ R⊗R`` (coordinates ``p*dim+q``) and ``φ: R → k``."""

    def __init__(self, r_algebra: FinAlgebra, idempotent_e, frobenius_phi):
        self.r_algebra = r_algebra
        self.field = r_algebra.field
        self.idempotent_e = tuple(idempotent_e)
        self.frobenius_phi = tuple(frobenius_phi)

    @property
    def dim(self) -> int:
        return self.r_algebra.dim

    def e_terms(self) -> list[tuple[int, int, object]]:
        m = self.dim
        return [divmod(k, m) + (x,) for k, x in enumerate(self.idempotent_e) if x]

    def phi(self, r):
        return sum((a * b for a, b in zip(r, self.frobenius_phi) if a and b), self.field.zero)


class BaseAlgebra(SeparablePair):
    """``R = Im Π^L`` with structure constants in its echelon basis, ``e`` and ``φ``."""

    def __init__(self, parent: WeakBialgebra, r_basis, r_algebra: FinAlgebra, subspace,
                 idempotent_e: tuple, frobenius_phi: tuple):
        super().__init__(r_algebra, idempotent_e, frobenius_phi)
        self.parent = parent
        self.r_basis = tuple(r_basis)
        self.subspace = subspace
        self.inclusion = Matrix.from_columns(self.r_basis, parent.field, parent.dim)

    def coords(self, h) -> tuple:
        c = self.subspace.coordinates(h)
        if c is None:
            raise ValueError("vector is not in the base algebra")
        return c


def extract_base(h: WeakHopf) -> BaseAlgebra:
    """Compute ``R``, ``e = S(1₁)⊗1₂`` and ``φ = ε|_R``; verify separability and Frobenius laws."""
    field = h.field
    n = h.dim
    sub = image(h.pi_left)
    basis = sub.basis
    m = sub.dim
    coords = []
    for i, x in enumerate(basis):
        row = []
        for j, y in enumerate(basis):
            c = sub.coordinates(h.mul(x, y))
            if c is None:
                raise VerificationError("Im Π^L not closed under multiplication at (%d, %d)"
                                        % (i, j))
            row.append(c)
        coords.append(row)
    unit = sub.coordinates(h.one)
    if unit is None:
        raise VerificationError("1 is not in Im Π^L")
    names = [_label(h, x) for x in basis]
    R = FinAlgebra(field, coords, unit, names)

    # e in R⊗R: coefficients are read off at pivot pairs of the echelon basis
    e_amb: dict = {}
    Scols = sparse_columns(h.antipode)
    for k, c in h.delta_one().items():
        a, b = divmod(k, n)
        for i, x in Scols[a].items():
            _acc(e_amb, i * n + b, c * x)
    piv = sub.pivots
    e = tuple(e_amb.get(piv[p] * n + piv[q], field.zero) for p in range(m) for q in range(m))
    recon: dict = {}
    for k, x in enumerate(e):
        if x:
            p, q = divmod(k, m)
            for i, y in support(basis[p]).items():
                for j, z in support(basis[q]).items():
                    _acc(recon, i * n + j, x * y * z)
    if recon != e_amb:
        raise VerificationError("S(1₁)⊗1₂ does not lie in R⊗R")
    phi = tuple(h.eps(x) for x in basis)
    base = BaseAlgebra(h, basis, R, sub, e, phi)
    rep = check_base(base)
    if not rep.passed:
        raise VerificationError("base algebra failed its separability checks", rep)
    return base


def _label(h: WeakBialgebra, x) -> str:
    s = support(x)
    if len(s) == 1:
        (i, c), = s.items()
        if c == 1:
            return h.basis_names[i]
    return "+".join("%s%s" % ("" if c == 1 else "%s*" % c, h.basis_names[i])
                    for i, c in s.items())


def check_separable_pair(pair: SeparablePair, elements=None,
                         report: Report | None = None) -> Report:
    """``re = er`` for the given elements of ``R`` (default: its basis), ``e¹e² = 1``
    and ``(φ⊗id)(e) = (id⊗φ)(e) = 1``."""
    rep = report if report is not None else Report("separable Frobenius pair")
    R = pair.r_algebra
    m = R.dim
    e = support(pair.idempotent_e)
    if elements is None:
        elements = [((i,), R.e(i)) for i in range(m)]
    sep = rep.law("separability")
    for idx, r in elements:
        r = support(r)
        lhs = mul_tensor2(R, R, _left_r(R, r), e)
        rhs = mul_tensor2(R, R, e, _right_r(R, r))
        sep.expect(lhs, rhs, *idx, note="re¹⊗e² = e¹⊗e²r")
    prod: dict = {}
    for k, x in e.items():
        p, q = divmod(k, m)
        for i, y in R._sp[p][q].items():
            _acc(prod, i, x * y)
    rep.law("idempotent_multiplies_to_one").expect(prod, support(R.unit))
    left: dict = {}
    right: dict = {}
    for k, x in e.items():
        p, q = divmod(k, m)
        if pair.frobenius_phi[p]:
            _acc(left, q, x * pair.frobenius_phi[p])
        if pair.frobenius_phi[q]:
            _acc(right, p, x * pair.frobenius_phi[q])
    fr = rep.law("frobenius")
    fr.expect(left, support(R.unit), note="(φ⊗id)(e)")
    fr.expect(right, support(R.unit), note="(id⊗φ)(e)")
    return rep


def check_base(base: BaseAlgebra) -> Report:
    """Separability against ``Π^L(g)`` for every basis ``g`` of ``H``, plus the Frobenius laws."""
    rep = Report("base algebra")
    rep.merge(check_algebra(base.r_algebra), "algebra_")
    h = base.parent
    elements = [((g,), base.coords(h.pi_left.column(g))) for g in range(h.dim)]
    return check_separable_pair(base, elements, rep)


def _left_r(R: FinAlgebra, r: dict) -> dict:
    """``r ⊗ 1`` in ``R⊗R``."""
    u = support(R.unit)
    return {i * R.dim + j: x * y for i, x in r.items() for j, y in u.items()}


def _right_r(R: FinAlgebra, r: dict) -> dict:
    """``1 ⊗ r`` in ``R⊗R``."""
    u = support(R.unit)
    return {i * R.dim + j: x * y for i, x in u.items() for j, y in r.items()}


# ---------------------------------------------------------------- separability section


def section_sigma(base: SeparablePair, t: BalancedTensor) -> Matrix:
    """``σ(m⊗_R n) = m·e¹ ⊗ e²·n`` as a matrix from quotient to ambient coordinates.

    ``t`` must be a tensor over ``base.r_algebra``; ``t.project ∘ σ = id`` is verified.
    """
    if t.base != base.r_algebra:
        raise ValueError("tensor is not over this base algebra")
    M, N = t.left, t.right
    nn = N.dim
    field = base.field
    terms = base.e_terms()
    cols = []
    for j in range(t.dim):
        a, b = t.basis_pair(j)
        out: dict = {}
        for p, q, x in terms:
            for i, y in M._rcols[p][a].items():
                for k, z in N._lcols[q][b].items():
                    _acc(out, i * nn + k, x * y * z)
        cols.append(densify(out, t.ambient_dim, field))
    sigma = Matrix.from_columns(cols, field, t.ambient_dim)
    if not (t.space.projection @ sigma).is_identity():
        raise VerificationError("can∘σ is not the identity: the idempotent is not separable")
    return sigma


def sigma_ambient(base: SeparablePair, t: BalancedTensor, v: dict) -> dict:
    """``m⊗n ↦ m·e¹⊗e²·n`` on an ambient vector (no quotient involved)."""
    M, N = t.left, t.right
    nn = N.dim
    out: dict = {}
    terms = base.e_terms()
    for k, c in v.items():
        a, b = divmod(k, nn)
        for p, q, x in terms:
            for i, y in M._rcols[p][a].items():
                for j, z in N._lcols[q][b].items():
                    _acc(out, i * nn + j, c * x * y * z)
    return out


# ---------------------------------------------------------------- identities


def lemma_report(h: WeakHopf) -> Report:
    """Consequences of the axioms, checked on all basis pairs ``g, h``:

    * ``h₁⊗h₂Π^L(g) = h₁S⁻¹(Π^L(g))⊗h₂``
    * ``Π^R(g)h = h₁ε(gh₂)``
    * ``ε(gΠ^L(h)) = ε(Π^R(g)h)``
    * ``Π^L`` and ``Π^R`` are idempotent
    """
    rep = Report("weak Hopf identities %s" % h.name)
    A, C = h.algebra, h.coalgebra
    n = h.dim
    field = h.field
    PL = sparse_columns(h.pi_left)
    PR = sparse_columns(h.pi_right)
    Si = sparse_columns(h.antipode_inv)
    E = h.eps_pairing()
    a = rep.law("target_commutes_through_coproduct")
    b = rep.law("source_counital_absorbs")
    c = rep.law("counit_pi_exchange")
    for x in range(n):
        dx = C._dcols[x]
        for g in range(n):
            pl = PL[g]
            lhs = mul_tensor2(A, A, dx, _tensor_one_left(A, pl))
            spl: dict = {}
            for i, y in pl.items():
                for k, z in Si[i].items():
                    _acc(spl, k, y * z)
            rhs = mul_tensor2(A, A, dx, _tensor_one_right(A, spl))
            a.expect(lhs, rhs, x, g)
            lhs = A.mul_sparse(PR[g], {x: field.one})
            rhs = {}
            for k, y in dx.items():
                p, q = divmod(k, n)
                if E[g][q]:
                    _acc(rhs, p, y * E[g][q])
            b.expect(lhs, rhs, g, x)
            lhs = C.eps_sparse(A.mul_sparse({g: field.one}, PL[x]))
            rhs = C.eps_sparse(A.mul_sparse(PR[g], {x: field.one}))
            c.expect(lhs, rhs, g, x)
    idem = rep.law("pi_idempotent")
    idem.expect(h.pi_left @ h.pi_left, h.pi_left, note="Π^L")
    idem.expect(h.pi_right @ h.pi_right, h.pi_right, note="Π^R")
    return rep


def _tensor_one_left(A: FinAlgebra, r: dict) -> dict:
    """``1 ⊗ r``."""
    return {i * A.dim + j: x * y for i, x in support(A.unit).items() for j, y in r.items()}


def _tensor_one_right(A: FinAlgebra, r: dict) -> dict:
    """``r ⊗ 1``."""
    return {i * A.dim + j: x * y for i, x in r.items() for j, y in support(A.unit).items()}
