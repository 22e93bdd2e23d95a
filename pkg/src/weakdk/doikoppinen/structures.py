"""Comodule algebras and module coalgebras in both flavors, Doi-Koppinen data and modules."""

from __future__ import annotations

from typing import Sequence

from ..exactlin import Matrix, densify, support
from ..findim import (BalancedTensor, Coring, CoringComodule, FinAlgebra, FinCoalgebra,
                      RBimodule, _acc, apply_leg, check_algebra, check_bimodule,
                      check_coalgebra, check_coring, check_coring_comodule, mul_legs,
                      mul_tensor2, sparse_columns, times_R)
from ..bialgebroid import Bialgebroid, RRing, check_r_ring, triangle_matrices
from ..report import Report, VerificationError
from ..weakhopf import WeakHopf


def combine(mats: Sequence[Matrix], v) -> Matrix:
    """``Σ v_i mats[i]``."""
    out = None
    for i, x in enumerate(v):
        if x:
            term = mats[i].scale(x)
            out = term if out is None else out + term
    if out is None:
        m = mats[0]
        return Matrix.zeros(m.rows, m.cols, m.field)
    return out


def _columns(mats: Sequence[Matrix]) -> list[list[dict]]:
    return [sparse_columns(m) for m in mats]


# ---------------------------------------------------------------- weak flavor


class ComoduleAlgebraW:
    """An algebra ``A`` with ``ρ: A → H⊗A`` (ambient coordinates)."""

    def __init__(self, weak_hopf: WeakHopf, algebra: FinAlgebra, coaction: Matrix,
                 name: str = ""):
        if coaction.shape != (weak_hopf.dim * algebra.dim, algebra.dim):
            raise ValueError("coaction must be (dim H · dim A) x dim A")
        self.weak_hopf = weak_hopf
        self.algebra = algebra
        self.coaction = coaction
        self.name = name
        self._cols = sparse_columns(coaction)

    def rho(self, a) -> tuple:
        return self.coaction.apply(a)

    def rho_sparse(self, a: dict) -> dict:
        out: dict = {}
        for i, x in a.items():
            for k, y in self._cols[i].items():
                _acc(out, k, x * y)
        return out


class ModuleCoalgebraW:
    """A coalgebra ``C`` with a left ``H``-action; ``action[i]`` is the matrix of ``b_i · -``."""

    def __init__(self, weak_hopf: WeakHopf, coalgebra: FinCoalgebra, action: Sequence[Matrix],
                 name: str = ""):
        if len(action) != weak_hopf.dim or any(
                m.shape != (coalgebra.dim, coalgebra.dim) for m in action):
            raise ValueError("action needs one dim C x dim C matrix per basis element of H")
        self.weak_hopf = weak_hopf
        self.coalgebra = coalgebra
        self.action = tuple(action)
        self.name = name
        self._acols = _columns(self.action)

    def act(self, h) -> Matrix:
        return combine(self.action, h)


def check_comodule_algebra_w(x: ComoduleAlgebraW, report: Report | None = None,
                             prefix: str = "") -> Report:
    rep = report if report is not None else Report("weak comodule algebra %s" % x.name)
    h, A = x.weak_hopf, x.algebra
    H, C = h.algebra, h.coalgebra
    n, m = h.dim, A.dim
    field = h.field
    one = field.one
    rep.merge(check_algebra(A), prefix + "algebra_")
    coassoc = rep.law(prefix + "coaction_coassociative")
    counit = rep.law(prefix + "coaction_counit")
    for a in range(m):
        r = x._cols[a]
        lhs = apply_leg(C._dcols, 0, (n, m), r, n * n)
        rhs: dict = {}
        unit: dict = {}
        for k, c in r.items():
            hh, aa = divmod(k, m)
            for kk, y in x._cols[aa].items():
                _acc(rhs, hh * n * m + kk, c * y)
            if C.counit[hh]:
                _acc(unit, aa, c * C.counit[hh])
        coassoc.expect(lhs, rhs, a, note="(Δ⊗A)ρ = (H⊗ρ)ρ")
        counit.expect(unit, {a: one}, a, note="(ε⊗A)ρ")
    mult = rep.law(prefix + "coaction_multiplicative")
    for a in range(m):
        for b in range(m):
            mult.expect(x.rho_sparse(A._sp[a][b]), mul_tensor2(H, A, x._cols[a], x._cols[b]),
                        a, b)
    # (H⊗ρ)ρ(1) against 1₁⊗1_{<-1>}1₂⊗1_{<0>} and 1₁⊗1₂1_{<-1>}⊗1_{<0>}
    r1 = x.rho_sparse(support(A.unit))
    lhs: dict = {}
    for k, c in r1.items():
        hh, aa = divmod(k, m)
        for kk, y in x._cols[aa].items():
            _acc(lhs, hh * n * m + kk, c * y)
    d1 = h.delta_one()
    one_h = support(H.unit)
    one_rho = {i * n * m + k: a * b for i, a in one_h.items() for k, b in r1.items()}
    d1_one = {k * m + j: a * b for k, a in d1.items() for j, b in support(A.unit).items()}
    algs = (H, H, A)
    f1 = rep.law(prefix + "unit_coaction")
    f2 = rep.law(prefix + "unit_coaction_alternative")
    ok1 = f1.expect(lhs, mul_legs(algs, one_rho, d1_one), note="1₁⊗1_{<-1>}1₂⊗1_{<0>}")
    ok2 = f2.expect(lhs, mul_legs(algs, d1_one, one_rho), note="1₁⊗1₂1_{<-1>}⊗1_{<0>}")
    rep.law(prefix + "unit_forms_agree").expect_true(ok1 == ok2, lhs=ok1, rhs=ok2)
    return rep


def check_module_coalgebra_w(x: ModuleCoalgebraW, report: Report | None = None,
                             prefix: str = "") -> Report:
    rep = report if report is not None else Report("weak module coalgebra %s" % x.name)
    h, C = x.weak_hopf, x.coalgebra
    H, HC = h.algebra, h.coalgebra
    n, m = h.dim, C.dim
    field = h.field
    rep.merge(check_coalgebra(C), prefix + "coalgebra_")
    ident = Matrix.identity(m, field)
    rep.law(prefix + "action_unital").expect(x.act(H.unit), ident)
    law = rep.law(prefix + "action_associative")
    for i in range(n):
        for j in range(n):
            law.expect(x.action[i] @ x.action[j], x.act(H.mult[i][j]), i, j)
    eq = rep.law(prefix + "comult_equivariant")
    for i in range(n):
        dh = [divmod(k, n) + (v,) for k, v in HC._dcols[i].items()]
        for c in range(m):
            lhs = C.delta_sparse(x._acols[i][c])
            rhs: dict = {}
            for k, v in C._dcols[c].items():
                c1, c2 = divmod(k, m)
                for p, q, w in dh:
                    for a, y in x._acols[p][c1].items():
                        for b, z in x._acols[q][c2].items():
                            _acc(rhs, a * m + b, v * w * y * z)
            eq.expect(lhs, rhs, i, c, note="Δ_C(h·c) = h₁·c₁⊗h₂·c₂")
    # ε_C(hg·c) = ε(hg₂) ε_C(g₁·c)
    E = h.eps_pairing()
    eps_act = [[C.eps_sparse(x._acols[g][c]) for c in range(m)] for g in range(n)]
    law = rep.law(prefix + "counit_weak_equivariant")
    for hh in range(n):
        for g in range(n):
            hg = H._sp[hh][g]
            dg = [divmod(k, n) + (v,) for k, v in HC._dcols[g].items()]
            for c in range(m):
                lhs = sum((v * eps_act[k][c] for k, v in hg.items()), field.zero)
                rhs = sum((v * E[hh][g2] * eps_act[g1][c] for g1, g2, v in dg), field.zero)
                law.expect(lhs, rhs, hh, g, c)
    return rep


# ---------------------------------------------------------------- bialgebroid flavor


class ComoduleAlgebraB:
    """An R-ring ``(A, s_A)`` with ``ρ: A → H⊗_R A`` in quotient coordinates."""

    def __init__(self, bialgebroid: Bialgebroid, r_ring: RRing, coaction: Matrix,
                 tensor: BalancedTensor | None = None, name: str = ""):
        if r_ring.base != bialgebroid.base:
            raise ValueError("comodule algebra over a different base algebra")
        self.bialgebroid = bialgebroid
        self.r_ring = r_ring
        self.tensor = tensor if tensor is not None else BalancedTensor(
            bialgebroid.coring.bimodule, r_ring.bimodule())
        if coaction.shape != (self.tensor.dim, r_ring.total.dim):
            raise ValueError("coaction has shape %s, expected %s"
                             % (coaction.shape, (self.tensor.dim, r_ring.total.dim)))
        self.coaction = coaction
        self.name = name
        self._cols = sparse_columns(coaction)
        self._takeuchi = None

    @property
    def algebra(self) -> FinAlgebra:
        return self.r_ring.total

    @property
    def source(self) -> Matrix:
        return self.r_ring.i_map

    def rho(self, a) -> tuple:
        return self.coaction.apply(a)

    def rho_lift(self, a: int) -> list[tuple[int, int, object]]:
        return self.tensor.lift_terms_sparse(self._cols[a])

    def takeuchi(self):
        """``H ×_R A``; raises if it is not closed under the product."""
        if self._takeuchi is None:
            b = self.bialgebroid
            ring = b.re_ring
            self._takeuchi = times_R(ring.coring_bimodule(), ring.total, ring.target,
                                     self.r_ring.bimodule(), self.algebra, tensor=self.tensor)
        return self._takeuchi

    def comodule(self) -> CoringComodule:
        return CoringComodule(self.bialgebroid.coring, self.r_ring.bimodule().only_left(),
                              self.coaction, self.tensor)


class ModuleCoalgebraB:
    """An R-coring ``C`` with a left ``H``-action inducing its bimodule structure."""

    def __init__(self, bialgebroid: Bialgebroid, coring: Coring, action: Sequence[Matrix],
                 name: str = ""):
        if coring.base != bialgebroid.base:
            raise ValueError("module coalgebra over a different base algebra")
        if len(action) != bialgebroid.dim or any(
                m.shape != (coring.dim, coring.dim) for m in action):
            raise ValueError("action needs one dim C x dim C matrix per basis element of H")
        self.bialgebroid = bialgebroid
        self.coring = coring
        self.action = tuple(action)
        self.name = name
        self._acols = _columns(self.action)

    def act(self, h) -> Matrix:
        return combine(self.action, h)


def action_bimodule(b: Bialgebroid, action: Sequence[Matrix], dim: int) -> RBimodule:
    """``r·c·r' = s(r)t(r')·c``."""
    R = b.base
    left = [combine(action, b.re_ring.source.column(k)) for k in range(R.dim)]
    right = [combine(action, b.re_ring.target.column(k)) for k in range(R.dim)]
    return RBimodule(R, dim, left, right, "C")


def check_comodule_algebra_b(x: ComoduleAlgebraB, report: Report | None = None,
                             prefix: str = "") -> Report:
    rep = report if report is not None else Report("comodule algebra %s" % x.name)
    b = x.bialgebroid
    A = x.algebra
    check_r_ring(x.r_ring, rep)
    check_coring_comodule(x.comodule(), report=rep, prefix=prefix + "comodule_")
    mem = rep.law(prefix + "coaction_in_takeuchi")
    mult = rep.law(prefix + "coaction_multiplicative")
    try:
        tk = x.takeuchi()
    except VerificationError as err:
        rep.law(prefix + "takeuchi_closed").fail(note=str(err))
        tk = times_R(b.re_ring.coring_bimodule(), b.total, b.re_ring.target,
                     x.r_ring.bimodule(), A, tensor=x.tensor, with_table=False)
    images = [x.coaction.column(a) for a in range(A.dim)]
    for a, v in enumerate(images):
        mem.expect_true(v in tk, a, lhs=v)
    for a in range(A.dim):
        for c in range(A.dim):
            mult.expect(x.rho(A.mult[a][c]), tk.mul(images[a], images[c]), a, c)
    rep.law(prefix + "coaction_unital").expect(x.rho(A.unit), tk.one(),
                                               note="ρ(1) = 1⊗_R 1")
    return rep


def check_module_coalgebra_b(x: ModuleCoalgebraB, report: Report | None = None,
                             prefix: str = "") -> Report:
    rep = report if report is not None else Report("module coalgebra %s" % x.name)
    b = x.bialgebroid
    H, R = b.total, b.base
    C = x.coring
    n, m = b.dim, C.dim
    field = b.field
    check_coring(C, report=rep, prefix=prefix + "coring_")
    ident = Matrix.identity(m, field)
    rep.law(prefix + "action_unital").expect(x.act(H.unit), ident)
    law = rep.law(prefix + "action_associative")
    for i in range(n):
        for j in range(n):
            law.expect(x.action[i] @ x.action[j], x.act(H.mult[i][j]), i, j)
    induced = action_bimodule(b, x.action, m)
    law = rep.law(prefix + "bimodule_from_action")
    for k in range(R.dim):
        law.expect(induced.left[k], C.bimodule.left[k], k, note="s(r)·c = r·c")
        law.expect(induced.right[k], C.bimodule.right[k], k, note="t(r)·c = c·r")
    eq = rep.law(prefix + "comult_equivariant")
    T = C.tensor
    for i in range(n):
        dh = b.tensor.lift_terms(b.comult.column(i))
        for c in range(m):
            lhs = C.delta(x.action[i].column(c))
            amb: dict = {}
            for c1, c2, v in T.lift_terms_sparse(C._dcols[c]):
                for p, q, w in dh:
                    for a, y in x._acols[p][c1].items():
                        for bb, z in x._acols[q][c2].items():
                            _acc(amb, a * m + bb, v * w * y * z)
            eq.expect(lhs, densify(T.project_sparse(amb), T.dim, field), i, c,
                      note="Δ_C(h·c) = h₁·c₁ ⊗_R h₂·c₂")
    tri = triangle_matrices(b)
    law = rep.law(prefix + "counit_equivariant")
    for i in range(n):
        for c in range(m):
            lhs = C.eps(x.action[i].column(c))
            rhs = tri[i].apply(C.counit.column(c))
            law.expect(lhs, rhs, i, c, note="ε_C(h·c) = h▷ε_C(c)")
    return rep


# ---------------------------------------------------------------- data and modules


class WeakDKDatum:
    def __init__(self, weak_hopf: WeakHopf, comodule_algebra: ComoduleAlgebraW,
                 module_coalgebra: ModuleCoalgebraW, name: str = ""):
        for part in (comodule_algebra, module_coalgebra):
            if part.weak_hopf.algebra != weak_hopf.algebra:
                raise ValueError("components over different weak Hopf algebras")
        self.weak_hopf = weak_hopf
        self.A = comodule_algebra
        self.C = module_coalgebra
        self.name = name


class DKDatum:
    def __init__(self, bialgebroid: Bialgebroid, comodule_algebra: ComoduleAlgebraB,
                 module_coalgebra: ModuleCoalgebraB, name: str = ""):
        self.bialgebroid = bialgebroid
        self.A = comodule_algebra
        self.C = module_coalgebra
        self.name = name


def check_weak_dk_components(d: WeakDKDatum) -> Report:
    rep = Report("weak DK datum %s" % d.name)
    check_comodule_algebra_w(d.A, rep, "A_")
    check_module_coalgebra_w(d.C, rep, "C_")
    return rep


def check_dk_datum(d: DKDatum) -> Report:
    rep = Report("DK datum %s" % d.name)
    check_comodule_algebra_b(d.A, rep, "A_")
    check_module_coalgebra_b(d.C, rep, "C_")
    return rep


class DKModule:
    """A left ``A``-module ``M`` with ``ρ: M → C⊗_R M`` (quotient coordinates).

    ``action[i]`` is the matrix of ``a_i · -``; ``M`` is a left R-module through ``s_A``.
    """

    def __init__(self, datum: DKDatum, action: Sequence[Matrix], coaction: Matrix,
                 tensor: BalancedTensor | None = None, name: str = ""):
        A = datum.A.algebra
        if len(action) != A.dim:
            raise ValueError("action needs one matrix per basis element of A")
        self.datum = datum
        self.action = tuple(action)
        self.dim = self.action[0].rows
        if tensor is None:
            tensor = dk_module_tensor(datum, self.action)
        self.r_module = tensor.right
        self.tensor = tensor
        if coaction.shape != (self.tensor.dim, self.dim):
            raise ValueError("coaction has shape %s, expected %s"
                             % (coaction.shape, (self.tensor.dim, self.dim)))
        self.coaction = coaction
        self.name = name
        self._acols = _columns(self.action)
        self._cols = sparse_columns(coaction)

    def act(self, a) -> Matrix:
        return combine(self.action, a)

    def comodule(self) -> CoringComodule:
        return CoringComodule(self.datum.C.coring, self.r_module, self.coaction, self.tensor)


def dk_module_tensor(datum: DKDatum, action: Sequence[Matrix]) -> BalancedTensor:
    """``C ⊗_R M`` for an ``A``-module ``M``, with ``r·m = s_A(r)·m``."""
    R = datum.bialgebroid.base
    s_A = datum.A.source
    r_module = RBimodule(R, action[0].rows,
                         [combine(action, s_A.column(k)) for k in range(R.dim)], None, "M")
    return BalancedTensor(datum.C.coring.bimodule, r_module)


def check_dk_module(m: DKModule, report: Report | None = None) -> Report:
    rep = report if report is not None else Report("DK module %s" % m.name)
    d = m.datum
    A = d.A.algebra
    field = A.field
    ident = Matrix.identity(m.dim, field)
    rep.law("action_unital").expect(m.act(A.unit), ident)
    law = rep.law("action_associative")
    for i in range(A.dim):
        for j in range(A.dim):
            law.expect(m.action[i] @ m.action[j], m.act(A.mult[i][j]), i, j)
    check_bimodule(m.r_module, rep, "module_")
    check_coring_comodule(m.comodule(), report=rep, prefix="comodule_")
    # ρ(a·m) = a_{<-1>}·m_{<-1>} ⊗_R a_{<0>}·m_{<0>}
    law = rep.law("coaction_compatible")
    T = m.tensor
    Cact = d.C._acols
    mm = m.dim
    for a in range(A.dim):
        ra = d.A.rho_lift(a)
        for j in range(m.dim):
            lhs = m.coaction.apply(m.action[a].column(j))
            amb: dict = {}
            for c, mj, v in T.lift_terms_sparse(m._cols[j]):
                for hh, aa, w in ra:
                    for c2, y in Cact[hh][c].items():
                        for k, z in m._acols[aa][mj].items():
                            _acc(amb, c2 * mm + k, v * w * y * z)
            law.expect(lhs, densify(T.project_sparse(amb), T.dim, field), a, j)
    return rep


def trivial_action(b: Bialgebroid) -> list[Matrix]:
    """``h ↦ (r ↦ h ▷ r)``."""
    return triangle_matrices(b)


__all__ = ["ComoduleAlgebraW", "ModuleCoalgebraW", "ComoduleAlgebraB", "ModuleCoalgebraB",
           "WeakDKDatum", "DKDatum", "DKModule", "check_comodule_algebra_w",
           "check_module_coalgebra_w", "check_comodule_algebra_b", "check_module_coalgebra_b",
           "check_weak_dk_components", "check_dk_datum", "check_dk_module", "action_bimodule",
           "dk_module_tensor",
           "combine", "trivial_action"]
