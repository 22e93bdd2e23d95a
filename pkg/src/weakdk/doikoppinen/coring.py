"""The A-coring ``C ⊗_R A`` of a Doi-Koppinen datum, the comodule dictionary, and the
weak-side coring ``C̃ ⊆ C⊗A`` with its isomorphism to ``C ⊗_R A``."""

from __future__ import annotations

from typing import Callable, Sequence

from ..bialgebroid import Bialgebroid, from_weak_hopf
from ..exactlin import Matrix, Subspace, densify, image, rank, solve, support
from ..findim import (BalancedTensor, Coring, CoringComodule, RBimodule, _acc,
                      check_bimodule, check_coring, sparse_columns)
from ..report import Report, VerificationError
from .structures import (DKDatum, DKModule, WeakDKDatum, check_dk_datum, dk_module_tensor)
from .translate import forward_datum


def _on_quotient(t: BalancedTensor, ambient: Callable[[int, int], dict], out_dim: int,
                 field, project: Callable[[dict], dict] | None = None) -> Matrix:
    """Matrix of a map given on ambient basis pairs, evaluated on the section of ``t``."""
    cols = []
    for j in range(t.dim):
        v = ambient(*t.basis_pair(j))
        if project is not None:
            v = project(v)
        cols.append(densify(v, out_dim, field))
    return Matrix.from_columns(cols, field, out_dim)


def _kills_relations(t: BalancedTensor, ambient: Callable[[int, int], dict],
                     project: Callable[[dict], dict], law) -> None:
    """Record whether an ambient formula vanishes on the balancing relations."""
    n = t.right.dim
    for idx, row in enumerate(t.space.relations._rows):
        total: dict = {}
        for k, x in row.items():
            for i, y in ambient(*divmod(k, n)).items():
                _acc(total, i, x * y)
        law.expect(project(total), {}, idx)


class DKCoring:
    """``𝒞 = C ⊗_R A`` as an A-coring."""

    def __init__(self, datum: DKDatum, space: BalancedTensor, coring: Coring, report: Report):
        self.datum = datum
        self.space = space
        self.coring = coring
        self.report = report

    @property
    def dim(self) -> int:
        return self.space.dim

    def element(self, c, a) -> tuple:
        """``[c ⊗_R a]`` in quotient coordinates."""
        return self.space.pair(c, a)


def build_dk_coring(d: DKDatum, verify: bool = True) -> DKCoring:
    """Left action ``a·[c⊗a'] = [a_{<-1>}·c ⊗ a_{<0>}a']``, right action in ``A``,
    ``Δ[c⊗a] = [c₁⊗1] ⊗_A [c₂⊗a]`` and ``ε[c⊗a] = s_A(ε_C(c))a``."""
    C = d.C.coring
    A = d.A.algebra
    field = A.field
    na = A.dim
    T = BalancedTensor(C.bimodule, d.A.r_ring.bimodule())
    rep = Report("DK coring %s" % d.name)
    proj = T.project_sparse
    Cact = d.C._acols
    rho = [d.A.rho_lift(a) for a in range(na)]
    s_A = sparse_columns(d.A.source)

    def right(k):
        def f(c, a):
            return {c * na + i: x for i, x in A._sp[a][k].items()}
        return f

    def left(k):
        def f(c, a):
            out: dict = {}
            for h, a2, x in rho[k]:
                prod = A._sp[a2][a]
                for c2, y in Cact[h][c].items():
                    for i, z in prod.items():
                        _acc(out, c2 * na + i, x * y * z)
            return out
        return f

    def counit(c, a):
        out: dict = {}
        for r, x in C._ecols[c].items():
            for i, y in s_A[r].items():
                for j, z in A._sp[i][a].items():
                    _acc(out, j, x * y * z)
        return out

    lefts, rights = [], []
    for k in range(na):
        _kills_relations(T, right(k), proj, rep.law("right_action_well_defined"))
        _kills_relations(T, left(k), proj, rep.law("left_action_well_defined"))
        rights.append(_on_quotient(T, right(k), T.dim, field, proj))
        lefts.append(_on_quotient(T, left(k), T.dim, field, proj))
    _kills_relations(T, counit, lambda v: v, rep.law("counit_well_defined"))
    bim = RBimodule(A, T.dim, lefts, rights, "C⊗_R A")
    TT = BalancedTensor(bim, bim)
    unit = support(A.unit)

    def comult(c, a):
        out: dict = {}
        for c1, c2, x in C.tensor.lift_terms_sparse(C._dcols[c]):
            u = proj({c1 * na + i: y for i, y in unit.items()})
            v = proj({c2 * na + a: field.one})
            for k, y in TT.pair_sparse(u, v).items():
                _acc(out, k, x * y)
        return out

    law = rep.law("comult_well_defined")
    _kills_relations(T, comult, lambda v: v, law)
    for a in range(na):
        def on_pairs(c1, c2, a=a):
            u = proj({c1 * na + i: y for i, y in unit.items()})
            return TT.pair_sparse(u, proj({c2 * na + a: field.one}))
        _kills_relations(C.tensor, on_pairs, lambda v: v, law)
    coring = Coring(A, bim, _on_quotient(T, comult, TT.dim, field),
                    _on_quotient(T, counit, na, field), TT)
    check_coring(coring, report=rep)
    if verify and not rep.passed:
        raise VerificationError("C ⊗_R A is not an A-coring for %s" % d.name, rep)
    return DKCoring(d, T, coring, rep)


# ---------------------------------------------------------------- dictionary


class Dictionary:
    """``𝒞 ⊗_A M ≅ C ⊗_R M`` for a fixed left ``A``-module ``M``."""

    def __init__(self, forward: Matrix, backward: Matrix, source: BalancedTensor,
                 target: BalancedTensor, report: Report):
        self.forward = forward      # [c⊗a⊗m] ↦ [c⊗a·m]
        self.backward = backward    # [c⊗m] ↦ [c⊗1⊗m]
        self.source = source
        self.target = target
        self.report = report


def dictionary_maps(dkc: DKCoring, action: Sequence[Matrix]) -> Dictionary:
    d = dkc.datum
    A = d.A.algebra
    field = A.field
    na = A.dim
    module = RBimodule(A, action[0].rows, action, None, "M")
    src = BalancedTensor(dkc.coring.bimodule, module)
    dst = dk_module_tensor(d, action)
    nm = module.dim
    acols = [sparse_columns(m) for m in action]
    rep = Report("comodule dictionary")

    def fwd(q, m):
        out: dict = {}
        for c, a, x in dkc.space.lift_terms_sparse({q: field.one}):
            for i, y in acols[a][m].items():
                _acc(out, c * nm + i, x * y)
        return out

    unit = support(A.unit)

    def bwd(c, m):
        u = dkc.space.project_sparse({c * na + i: y for i, y in unit.items()})
        return src.pair_sparse(u, {m: field.one})

    _kills_relations(src, fwd, dst.project_sparse, rep.law("forward_well_defined"))
    _kills_relations(dst, bwd, lambda v: v, rep.law("backward_well_defined"))
    F = _on_quotient(src, fwd, dst.dim, field, dst.project_sparse)
    B = _on_quotient(dst, bwd, src.dim, field)
    law = rep.law("mutually_inverse")
    law.expect_true((F @ B).is_identity(), note="forward∘backward")
    law.expect_true((B @ F).is_identity(), note="backward∘forward")
    if not rep.passed:
        raise VerificationError("C⊗_R A ⊗_A M ≅ C ⊗_R M failed", rep)
    return Dictionary(F, B, src, dst, rep)


def comodule_to_dk_module(dkc: DKCoring, m: CoringComodule, verify: bool = True) -> DKModule:
    """A left ``𝒞``-comodule as a Doi-Koppinen module."""
    action = m.module.left
    dic = dictionary_maps(dkc, action)
    if m.tensor.space.relations != dic.source.space.relations:
        raise ValueError("comodule tensor does not match 𝒞 ⊗_A M")
    out = DKModule(dkc.datum, action, dic.forward @ m.coaction, dic.target, m.module.name)
    if verify:
        from .structures import check_dk_module
        rep = check_dk_module(out)
        if not rep.passed:
            raise VerificationError("dictionary image is not a DK module", rep)
    return out


def dk_module_to_comodule(dkc: DKCoring, m: DKModule, verify: bool = True) -> CoringComodule:
    """A Doi-Koppinen module as a left ``𝒞``-comodule."""
    from ..findim import check_coring_comodule
    dic = dictionary_maps(dkc, m.action)
    out = CoringComodule(dkc.coring, dic.source.right, dic.backward @ m.coaction, dic.source)
    if verify:
        rep = check_coring_comodule(out)
        if not rep.passed:
            raise VerificationError("dictionary image is not a 𝒞-comodule", rep)
    return out


def regular_comodule(dkc: DKCoring) -> CoringComodule:
    """``𝒞`` coacting on itself by ``Δ_𝒞``."""
    c = dkc.coring
    return CoringComodule(c, c.bimodule.only_left(), c.comult, c.tensor)


# ---------------------------------------------------------------- the weak-side coring


class WeakCoringIso:
    def __init__(self, weak_datum: WeakDKDatum, dk_coring: DKCoring, subspace: Subspace,
                 coring: Coring, theta: Matrix, theta_tilde: Matrix, report: Report):
        self.weak_datum = weak_datum
        self.dk_coring = dk_coring
        self.subspace = subspace
        self.coring = coring
        self.theta = theta
        self.theta_tilde = theta_tilde
        self.report = report


def build_weak_coring_iso(d: WeakDKDatum, b: Bialgebroid | None = None,
                          verify: bool = True) -> WeakCoringIso:
    """``C̃ = {Σ 1_{<-1>}·c ⊗ 1_{<0>}a}`` with ``θ[c⊗a] = 1_{<-1>}·c ⊗ 1_{<0>}a`` and
    ``θ̃(Σ c⊗a) = Σ [c⊗a]``."""
    h = d.weak_hopf
    b = b if b is not None else from_weak_hopf(h)
    db = forward_datum(d, b)
    drep = check_dk_datum(db)
    if not drep.passed:
        raise VerificationError("translated datum failed its checks", drep)
    dkc = build_dk_coring(db)
    A = d.A.algebra
    Cw = d.C.coalgebra
    field = A.field
    nc, na = Cw.dim, A.dim
    amb = nc * na
    acols = d.C._acols
    rep = Report("weak coring %s" % d.name)

    def act_left(k: int, v: dict) -> dict:
        """``a_k · Σ c⊗a = Σ a_{<-1>}·c ⊗ a_{<0>}a``."""
        out: dict = {}
        for key, x in v.items():
            c, a = divmod(key, na)
            for hk, y in d.A._cols[k].items():
                hh, a2 = divmod(hk, na)
                for c2, z in acols[hh][c].items():
                    for i, w in A._sp[a2][a].items():
                        _acc(out, c2 * na + i, x * y * z * w)
        return out

    def act_right(v: dict, k: int) -> dict:
        out: dict = {}
        for key, x in v.items():
            c, a = divmod(key, na)
            for i, y in A._sp[a][k].items():
                _acc(out, c * na + i, x * y)
        return out

    one_a = support(A.unit)

    def p(v: dict) -> dict:
        out: dict = {}
        for k, x in one_a.items():
            for i, y in act_left(k, v).items():
                _acc(out, i, x * y)
        return out

    P = Matrix.from_columns([densify(p({j: field.one}), amb, field) for j in range(amb)],
                            field, amb)
    rep.law("projection_idempotent").expect(P @ P, P)
    sub = image(P)
    basis = [support(v) for v in sub.basis]
    m = sub.dim

    def coords(v: dict, law, *idx) -> tuple:
        c = sub.coordinates(densify(v, amb, field))
        if c is None:
            law.fail(*idx, lhs=v)
            return (field.zero,) * m
        return c

    closed = rep.law("subspace_closed_under_actions")
    lefts = [Matrix.from_columns([coords(act_left(k, x), closed, k, j)
                                  for j, x in enumerate(basis)], field, m) for k in range(na)]
    rights = [Matrix.from_columns([coords(act_right(x, k), closed, j, k)
                                   for j, x in enumerate(basis)], field, m) for k in range(na)]
    bim = RBimodule(A, m, lefts, rights, "C̃")
    check_bimodule(bim, rep, "bimodule_")
    TT = BalancedTensor(bim, bim)

    # ψ: C̃ ⊗_A C̃ → C⊗C⊗A, [x⊗y] ↦ x^c ⊗ x^a·y
    def psi_pair(i: int, j: int) -> dict:
        out: dict = {}
        y = basis[j]
        for key, x in basis[i].items():
            c, a = divmod(key, na)
            for k, z in act_left(a, y).items():
                _acc(out, c * amb + k, x * z)
        return out

    psi_law = rep.law("tensor_embedding_well_defined")
    _kills_relations(TT, psi_pair, lambda v: v, psi_law)
    psi = Matrix.from_columns([densify(psi_pair(*TT.basis_pair(j)), nc * amb, field)
                               for j in range(TT.dim)], field, nc * amb)
    rep.law("tensor_embedding_injective").expect(rank(psi), TT.dim)
    comult_cols = []
    solv = rep.law("comult_lands_in_tensor")
    for j, x in enumerate(basis):
        target: dict = {}
        for key, y in x.items():
            c, a = divmod(key, na)
            for k, z in Cw._dcols[c].items():
                _acc(target, k * na + a, y * z)
        sol = solve(psi, densify(target, nc * amb, field))
        if sol is None:
            solv.fail(j, lhs=target)
            sol = (field.zero,) * TT.dim
        else:
            solv.expect_true(True)
        comult_cols.append(sol)
    counit_cols = []
    for x in basis:
        out: dict = {}
        for key, y in x.items():
            c, a = divmod(key, na)
            if Cw.counit[c]:
                _acc(out, a, y * Cw.counit[c])
        counit_cols.append(densify(out, na, field))
    coring = Coring(A, bim, Matrix.from_columns(comult_cols, field, TT.dim),
                    Matrix.from_columns(counit_cols, field, na), TT)
    check_coring(coring, report=rep, prefix="coring_")

    T = dkc.space
    theta_law = rep.law("theta_well_defined")
    _kills_relations(T, lambda c, a: p({c * na + a: field.one}),
                     lambda v: v, theta_law)
    theta = Matrix.from_columns(
        [coords(p({T.space.free[j]: field.one}), theta_law, j) for j in range(T.dim)],
        field, m)
    theta_tilde = Matrix.from_columns([densify(T.project_sparse(x), T.dim, field)
                                       for x in basis], field, T.dim)
    rep.law("dimensions_agree").expect(m, T.dim)
    inv = rep.law("theta_invertible")
    if theta.rows == theta.cols:
        inv.expect_true((theta @ theta_tilde).is_identity(), note="θ∘θ̃ = id")
        inv.expect_true((theta_tilde @ theta).is_identity(), note="θ̃∘θ = id")
    else:
        inv.fail(lhs=theta.shape)
    K = dkc.coring
    bl = rep.law("theta_bimodule_map")
    for k in range(na):
        bl.expect(theta @ K.bimodule.left[k], bim.left[k] @ theta, k, note="left")
        bl.expect(theta @ K.bimodule.right[k], bim.right[k] @ theta, k, note="right")
    cm = rep.law("theta_coring_map")
    tt = K.tensor.induced(theta, theta, TT)
    cm.expect(tt @ K.comult, coring.comult @ theta, note="(θ⊗_Aθ)Δ_𝒞 = Δ_C̃ θ")
    cm.expect(coring.counit @ theta, K.counit, note="ε_C̃ θ = ε_𝒞")
    if verify and not rep.passed:
        raise VerificationError("C̃ ≅ C ⊗_R A failed for %s" % d.name, rep)
    return WeakCoringIso(d, dkc, sub, coring, theta, theta_tilde, rep)


__all__ = ["DKCoring", "build_dk_coring", "Dictionary", "dictionary_maps",
           "comodule_to_dk_module", "dk_module_to_comodule", "regular_comodule",
           "WeakCoringIso", "build_weak_coring_iso"]
