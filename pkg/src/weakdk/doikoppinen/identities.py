"""Intermediate identities relating a weak comodule algebra to its bialgebroid form.

Every identity is evaluated on basis tuples in the ambient ``H⊗A`` (or ``H⊗H⊗A``);
those that live in ``H ⊗_R A`` are compared after applying the separability section.
"""

from __future__ import annotations

from ..exactlin import densify, support
from ..findim import _acc, apply_leg, mul_legs, sparse_columns, tensor_sparse
from ..report import Report
from ..weakhopf import section_sigma, sigma_ambient
from .structures import ComoduleAlgebraB, ComoduleAlgebraW
from .translate import _base_of, forward_comodule_algebra


def _apply(cols: list[dict], v: dict) -> dict:
    out: dict = {}
    for k, x in v.items():
        for i, y in cols[k].items():
            _acc(out, i, x * y)
    return out


def comodule_algebra_identities(x: ComoduleAlgebraW,
                                xb: ComoduleAlgebraB | None = None) -> Report:
    """Check the identities linking ``ρ`` and ``ρ̃ = can∘ρ`` on every basis tuple.

    ``xb`` defaults to the forward translation of ``x``.
    """
    h = x.weak_hopf
    xb = xb if xb is not None else forward_comodule_algebra(x)
    b = xb.bialgebroid
    base = _base_of(b)
    H, A = h.algebra, x.algebra
    field = h.field
    n, na = h.dim, A.dim
    HA = (H, A)
    rep = Report("comodule algebra identities %s" % x.name)

    uh, ua = support(H.unit), support(A.unit)
    d1 = h.delta_one()
    dcols = h.coalgebra._dcols
    PL = sparse_columns(h.pi_left)
    PR = sparse_columns(h.pi_right)
    Si = sparse_columns(h.antipode_inv)
    sA = sparse_columns(xb.source)
    r1 = x.rho_sparse(ua)
    rho = [x._cols[a] for a in range(na)]

    # 1_{<-2>}⊗1_{<-1>}⊗1_{<0>} = 1₁ ⊗ 1₂1_{<-1>} ⊗ 1_{<0>}
    lhs = apply_leg(dcols, 0, (n, na), r1, n * n)
    rhs = mul_legs((H, H, A), tensor_sparse(d1, ua, dims=(n * n, na)),
                   tensor_sparse(uh, r1, dims=(n, n * na)))
    rep.law("unit_coaction_split").expect(lhs, rhs, note="(Δ⊗A)ρ(1) = 1₁⊗1₂1_{<-1>}⊗1_{<0>}")

    pir = rep.law("pi_right_on_coaction")
    for a in range(na):
        lhs = apply_leg(PR, 0, (n, na), rho[a])
        rhs = mul_legs(HA, tensor_sparse(uh, {a: field.one}, dims=(n, na)), r1)
        pir.expect(lhs, rhs, a, note="Π^R(a_{<-1>})⊗a_{<0>} = 1_{<-1>}⊗a1_{<0>}")

    # S⁻¹(Π^L(g)) and s_A(Π^L(g)) for every basis g
    tgt = [_apply(Si, PL[g]) for g in range(n)]
    src = [_apply(sA, support(base.coords(h.pi_left.column(g)))) for g in range(n)]

    commute = rep.law("coaction_target_commutes")
    slide = rep.law("target_slides_to_source")
    HHA = (H, H, A)
    for a in range(na):
        d2 = apply_leg(dcols, 0, (n, na), rho[a], n * n)
        for g in range(n):
            lhs = mul_legs(HHA, d2, tensor_sparse(uh, PL[g], ua, dims=(n, n, na)))
            rhs = mul_legs(HHA, d2, tensor_sparse(tgt[g], uh, ua, dims=(n, n, na)))
            commute.expect(lhs, rhs, a, g,
                           note="a_{<-2>}⊗a_{<-1>}Π^L(g)⊗a_{<0>} = a_{<-2>}S⁻¹(Π^L(g))⊗a_{<-1>}⊗a_{<0>}")
            lhs = mul_legs(HA, rho[a], tensor_sparse(tgt[g], ua, dims=(n, na)))
            rhs = mul_legs(HA, rho[a], tensor_sparse(uh, src[g], dims=(n, na)))
            slide.expect(lhs, rhs, a, g,
                         note="a_{<-1>}S⁻¹(Π^L(g))⊗a_{<0>} = a_{<-1>}⊗a_{<0>}s_A(Π^L(g))")

    T = xb.tensor
    rep.law("unit_coacts_trivially").expect(xb.rho(A.unit), T.pair(H.unit, A.unit), note="ρ̃(1) = 1⊗_R 1")

    sigma = section_sigma(base, T)
    rhs: dict = {}
    for k, c in d1.items():
        p, q = divmod(k, n)
        for i, y in _apply(sA, support(base.coords(H.e(q)))).items():
            _acc(rhs, p * na + i, c * y)
    rep.law("section_of_unit_coaction").expect(sigma.apply(xb.rho(A.unit)), densify(rhs, n * na, field),
                            note="1₁1_{<-1>}⊗1₂·1_{<0>} = 1₁⊗s_A(1₂)")

    def lift(a_vec: dict) -> dict:
        out: dict = {}
        for a, c in a_vec.items():
            for hh, aa, y in xb.rho_lift(a):
                _acc(out, hh * na + aa, c * y)
        return out

    lifts = [lift({a: field.one}) for a in range(na)]
    t_cols = sparse_columns(b.re_ring.target)
    balance = rep.law("section_balances_base")
    for a in range(na):
        for r in range(base.dim):
            left = mul_legs(HA, lifts[a], tensor_sparse(t_cols[r], ua, dims=(n, na)))
            right = mul_legs(HA, lifts[a], tensor_sparse(uh, sA[r], dims=(n, na)))
            balance.expect(sigma_ambient(base, T, left), sigma_ambient(base, T, right), a, r,
                        note="σ(a_{<-1>}t(r)⊗a_{<0>}) = σ(a_{<-1>}⊗a_{<0>}s_A(r))")
    mult_law = rep.law("section_multiplicative")
    for a in range(na):
        for c in range(na):
            lhs = sigma_ambient(base, T, lift(A._sp[a][c]))
            rhs = sigma_ambient(base, T, mul_legs(HA, lifts[a], lifts[c]))
            mult_law.expect(lhs, rhs, a, c, note="σ(ρ̃(ab)) = σ(ρ̃(a)ρ̃(b))")
    return rep


__all__ = ["comodule_algebra_identities"]
