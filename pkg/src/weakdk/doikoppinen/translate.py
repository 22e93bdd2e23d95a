"""Passing comodule algebras and module coalgebras between the weak and bialgebroid flavors.

Forward (weak → bialgebroid) composes with the canonical projection onto
``⊗_R``; backward composes with the separability section ``σ``.
"""

from __future__ import annotations

from ..exactlin import Matrix, densify, support
from ..findim import BalancedTensor, Coring, FinCoalgebra, _acc
from ..bialgebroid import Bialgebroid, RRing, from_weak_hopf
from ..report import VerificationError
from ..weakhopf import BaseAlgebra, section_sigma
from .structures import (ComoduleAlgebraB, ComoduleAlgebraW, DKDatum, ModuleCoalgebraB,
                         ModuleCoalgebraW, WeakDKDatum, action_bimodule,
                         check_comodule_algebra_b, check_comodule_algebra_w,
                         check_module_coalgebra_b, check_module_coalgebra_w)


def _base_of(b: Bialgebroid) -> BaseAlgebra:
    base = b.separability
    if not isinstance(base, BaseAlgebra) or b.weak_hopf is None:
        raise ValueError("translation needs the bialgebroid of a weak Hopf algebra")
    return base


def _bialgebroid_for(h, b: Bialgebroid | None) -> Bialgebroid:
    if b is None:
        return from_weak_hopf(h)
    if b.weak_hopf is None or b.weak_hopf.algebra != h.algebra:
        raise ValueError("bialgebroid was not built from this weak Hopf algebra")
    return b


def _verify(rep, what: str):
    if not rep.passed:
        raise VerificationError("%s failed its checks" % what, rep)


def forward_comodule_algebra(x: ComoduleAlgebraW, b: Bialgebroid | None = None,
                             verify: bool = True) -> ComoduleAlgebraB:
    """``s_A(r) = ε(1_{<-1>} r) 1_{<0>}`` and ``ρ̃ = can∘ρ``."""
    h = x.weak_hopf
    b = _bialgebroid_for(h, b)
    base = _base_of(b)
    A = x.algebra
    field = h.field
    m = A.dim
    E = h.eps_pairing()
    r1 = x.rho_sparse(support(A.unit))
    cols = []
    for r in base.r_basis:
        rs = support(r)
        out: dict = {}
        for k, c in r1.items():
            hh, a = divmod(k, m)
            e = sum((y * E[hh][j] for j, y in rs.items()), field.zero)
            if e:
                _acc(out, a, c * e)
        cols.append(densify(out, m, field))
    s_A = Matrix.from_columns(cols, field, m)
    ring = RRing(base.r_algebra, A, s_A)
    tensor = BalancedTensor(b.coring.bimodule, ring.bimodule())
    rho = Matrix.from_columns([densify(tensor.project_sparse(x._cols[a]), tensor.dim, field)
                               for a in range(m)], field, tensor.dim)
    out = ComoduleAlgebraB(b, ring, rho, tensor, x.name)
    if verify:
        _verify(check_comodule_algebra_b(out), "forward comodule algebra %s" % x.name)
    return out


def backward_comodule_algebra(x: ComoduleAlgebraB, verify: bool = True) -> ComoduleAlgebraW:
    """``ρ(a) = σ(ρ̃(a)) = 1₁a_{<-1>} ⊗ s_A(1₂)a_{<0>}``."""
    b = x.bialgebroid
    base = _base_of(b)
    sigma = section_sigma(base, x.tensor)
    out = ComoduleAlgebraW(b.weak_hopf, x.algebra, sigma @ x.coaction, x.name)
    if verify:
        _verify(check_comodule_algebra_w(out), "backward comodule algebra %s" % x.name)
    return out


def forward_module_coalgebra(x: ModuleCoalgebraW, b: Bialgebroid | None = None,
                             verify: bool = True) -> ModuleCoalgebraB:
    """``Δ̃_C = can∘Δ_C`` and ``ε̃_C(c) = ε_C(1₁·c)1₂``."""
    h = x.weak_hopf
    b = _bialgebroid_for(h, b)
    base = _base_of(b)
    C = x.coalgebra
    field = h.field
    n, m = h.dim, C.dim
    bim = action_bimodule(b, x.action, m)
    tensor = BalancedTensor(bim, bim)
    comult = Matrix.from_columns(
        [densify(tensor.project_sparse(C._dcols[c]), tensor.dim, field) for c in range(m)],
        field, tensor.dim)
    d1 = [divmod(k, n) + (v,) for k, v in h.delta_one().items()]
    cols = []
    for c in range(m):
        out: dict = {}
        for p, q, v in d1:
            e = C.eps_sparse(x._acols[p][c])
            if e:
                _acc(out, q, v * e)
        cols.append(base.coords(densify(out, n, field)))
    counit = Matrix.from_columns(cols, field, base.dim)
    coring = Coring(base.r_algebra, bim, comult, counit, tensor)
    out = ModuleCoalgebraB(b, coring, x.action, x.name)
    if verify:
        _verify(check_module_coalgebra_b(out), "forward module coalgebra %s" % x.name)
    return out


def backward_module_coalgebra(x: ModuleCoalgebraB, verify: bool = True) -> ModuleCoalgebraW:
    """``Δ_C = σ∘Δ̃_C`` and ``ε_C = φ∘ε̃_C``."""
    b = x.bialgebroid
    base = _base_of(b)
    C = x.coring
    sigma = section_sigma(base, C.tensor)
    counit = tuple(base.phi(C.counit.column(c)) for c in range(C.dim))
    coalg = FinCoalgebra(b.field, sigma @ C.comult, counit)
    out = ModuleCoalgebraW(b.weak_hopf, coalg, x.action, x.name)
    if verify:
        _verify(check_module_coalgebra_w(out), "backward module coalgebra %s" % x.name)
    return out


def forward_datum(d: WeakDKDatum, b: Bialgebroid | None = None,
                  verify: bool = True) -> DKDatum:
    b = _bialgebroid_for(d.weak_hopf, b)
    return DKDatum(b, forward_comodule_algebra(d.A, b, verify),
                   forward_module_coalgebra(d.C, b, verify), d.name)


def backward_datum(d: DKDatum, verify: bool = True) -> WeakDKDatum:
    b = d.bialgebroid
    return WeakDKDatum(b.weak_hopf, backward_comodule_algebra(d.A, verify),
                       backward_module_coalgebra(d.C, verify), d.name)


__all__ = ["forward_comodule_algebra", "backward_comodule_algebra",
           "forward_module_coalgebra", "backward_module_coalgebra",
           "forward_datum", "backward_datum"]
