"""Certificates for separability of the induction functor ``C ⊗_R -`` and of the
forgetful functor from Doi-Koppinen modules to ``A``-modules.

Both conditions are affine in the unknown certificate, so a search reduces to one
linear solve: the residual map is probed at zero and at every unit vector.
"""

from __future__ import annotations

from typing import Callable, Iterator, Sequence

from ..exactlin import Matrix, densify, solve, support, vsub
from ..findim import _acc, sparse_columns
from ..report import Report
from .coring import DKCoring, build_dk_coring
from .structures import DKDatum

Residual = tuple[str, tuple, tuple, tuple, str]


def _coring_of(target: DKDatum | DKCoring) -> DKCoring:
    return target if isinstance(target, DKCoring) else build_dk_coring(target)


def _record(rep: Report, rows: Iterator[Residual]) -> Report:
    for name, idx, lhs, rhs, note in rows:
        rep.law(name).expect(lhs, rhs, *idx, note=note)
    return rep


def _residual_vector(rows: Iterator[Residual]) -> list:
    out: list = []
    for _, _, lhs, rhs, _ in rows:
        out.extend(vsub(lhs, rhs))
    return out


def _affine_solve(residuals: Callable[[list], Iterator[Residual]], n: int, field):
    """Solve ``residuals(x) = 0`` for an affine residual map on ``k^n``."""
    zero = [field.zero] * n
    r0 = _residual_vector(residuals(zero))
    cols = []
    for i in range(n):
        x = list(zero)
        x[i] = field.one
        cols.append(vsub(_residual_vector(residuals(x)), r0))
    if not r0:
        return tuple(zero)
    system = Matrix.from_columns(cols, field, len(r0)) if cols else Matrix.zeros(len(r0), 0, field)
    return solve(system, tuple(-v for v in r0))


# ---------------------------------------------------------------- induction functor


def _induction_rows(dkc: DKCoring, e) -> Iterator[Residual]:
    A = dkc.datum.A.algebra
    K = dkc.coring
    e = tuple(e)
    yield ("counit_of_certificate", (), K.counit.apply(e), A.unit, "Σ ε_C(cⁱ)·aⁱ = 1_A")
    for k in range(A.dim):
        yield ("certificate_central", (k,), K.bimodule.left[k].apply(e),
               K.bimodule.right[k].apply(e), "a·e = e·a")


def check_induction_separable(target: DKDatum | DKCoring, e_cand) -> Report:
    """Verify ``Σ ε_C(cⁱ)·aⁱ = 1_A`` and ``Σ a_{<-1>}·cⁱ ⊗ a_{<0>}aⁱ = Σ cⁱ ⊗ aⁱa``
    for ``e_cand`` in ``C ⊗_R A`` coordinates."""
    dkc = _coring_of(target)
    if len(e_cand) != dkc.dim:
        raise ValueError("certificate must have %d coordinates" % dkc.dim)
    rep = Report("induction functor separability %s" % dkc.datum.name)
    return _record(rep, _induction_rows(dkc, e_cand))


def search_induction_certificate(target: DKDatum | DKCoring):
    """A certificate for the induction functor, or ``None`` if none exists."""
    dkc = _coring_of(target)
    return _affine_solve(lambda x: _induction_rows(dkc, x), dkc.dim, dkc.datum.A.algebra.field)


def induction_unit_certificate(target: DKDatum | DKCoring) -> tuple:
    """``1_C ⊗_R 1_A`` for a coalgebra with a distinguished element playing the unit.

    The ``C`` side uses the image of ``1_H`` under the action, which for ``C = H`` or
    ``C = R`` is the unit.
    """
    dkc = _coring_of(target)
    d = dkc.datum
    H = d.bialgebroid.total
    A = d.A.algebra
    C = d.C
    u = support(A.unit)
    if C.coring.dim == H.dim:
        c = support(H.unit)
    else:
        c = support(d.bialgebroid.base.unit)
    return densify(dkc.space.pair_sparse(c, u), dkc.dim, A.field)


# ---------------------------------------------------------------- forgetful functor


def _forgetful_rows(dkc: DKCoring, gamma: Matrix) -> Iterator[Residual]:
    d = dkc.datum
    b = d.bialgebroid
    A = d.A.algebra
    C = d.C.coring
    R = b.base
    field = A.field
    T = C.tensor
    na, nc = A.dim, C.dim
    g = sparse_columns(gamma)
    s_A = d.A.source
    TB = T.as_bimodule()

    def gam(v: dict) -> dict:
        out: dict = {}
        for j, x in v.items():
            for i, y in g[j].items():
                _acc(out, i, x * y)
        return out

    def dense_a(v: dict) -> tuple:
        return densify(v, na, field)

    for k in range(R.dim):
        sk = s_A.column(k)
        for j in range(T.dim):
            gj = gamma.column(j)
            yield ("gamma_left_R_linear", (k, j), gamma.apply(TB.left[k].column(j)),
                   A.mul(sk, gj), "γ(r·x) = r·γ(x)")
            yield ("gamma_right_R_linear", (j, k), gamma.apply(TB.right[k].column(j)),
                   A.mul(gj, sk), "γ(x·r) = γ(x)·r")

    for c in range(nc):
        yield ("gamma_on_coproduct", (c,), gamma.apply(C.comult.column(c)),
               s_A.apply(C.counit.column(c)), "γ(c₁⊗c₂) = ε_C(c)·1_A")

    act = d.C._acols
    Hb = b.tensor
    coring_delta = [Hb.lift_terms_sparse(b.coring._dcols[h]) for h in range(b.dim)]
    rho = [d.A.rho_lift(a) for a in range(na)]
    for a in range(na):
        # a_{<-2>} ⊗ a_{<-1>} ⊗ a_{<0>}
        legs = [(h1, h2, a0, x * y) for h, a0, x in rho[a] for h1, h2, y in coring_delta[h]]
        for c in range(nc):
            for c2 in range(nc):
                lhs: dict = {}
                for h1, h2, a0, x in legs:
                    for p, y in act[h1][c].items():
                        for q, z in act[h2][c2].items():
                            gv = gam(T.pair_index(p, q))
                            for i, w in A.mul_sparse(gv, {a0: field.one}).items():
                                _acc(lhs, i, x * y * z * w)
                rhs = A.mul_sparse({a: field.one}, gam(T.pair_index(c, c2)))
                yield ("gamma_A_linear", (a, c, c2), dense_a(lhs), dense_a(rhs),
                       "γ(a_{<-2>}·c ⊗ a_{<-1>}·c')a_{<0>} = aγ(c⊗c')")

    K = dkc.space
    dcols = [T.lift_terms_sparse(C._dcols[c]) for c in range(nc)]
    for c in range(nc):
        for c2 in range(nc):
            lhs: dict = {}
            for p, q, x in dcols[c]:
                for i, y in K.pair_sparse({p: field.one}, gam(T.pair_index(q, c2))).items():
                    _acc(lhs, i, x * y)
            rhs: dict = {}
            for p, q, x in dcols[c2]:
                gv = gam(T.pair_index(c, p))
                for h, a0, y in _rho_terms(gv, rho):
                    for cc, z in act[h][q].items():
                        for i, w in K.pair_index(cc, a0).items():
                            _acc(rhs, i, x * y * z * w)
            yield ("gamma_colinear", (c, c2), densify(lhs, K.dim, field),
                   densify(rhs, K.dim, field),
                   "c₁⊗γ(c₂⊗c') = γ(c⊗c'₁)_{<-1>}·c'₂ ⊗ γ(c⊗c'₁)_{<0>}")


def _rho_terms(v: dict, rho) -> list:
    """Lifted ``ρ(v)`` as ``(h, a, coefficient)`` terms."""
    return [(h, a0, x * y) for a, x in v.items() for h, a0, y in rho[a]]


def check_forgetful_separable(target: DKDatum | DKCoring, gamma: Matrix) -> Report:
    """Verify that ``γ: C ⊗_R C → A`` (quotient coordinates) is an R-bimodule map with
    ``γ∘Δ_C = ε_C·1_A``, the ``A``-linearity twisted by the coaction, and colinearity."""
    dkc = _coring_of(target)
    d = dkc.datum
    shape = (d.A.algebra.dim, d.C.coring.tensor.dim)
    if gamma.shape != shape:
        raise ValueError("γ must have shape %s" % (shape,))
    rep = Report("forgetful functor separability %s" % d.name)
    return _record(rep, _forgetful_rows(dkc, gamma))


def search_forgetful_certificate(target: DKDatum | DKCoring) -> Matrix | None:
    """A certificate ``γ`` for the forgetful functor, or ``None`` if none exists."""
    dkc = _coring_of(target)
    d = dkc.datum
    field = d.A.algebra.field
    rows, cols = d.A.algebra.dim, d.C.coring.tensor.dim

    def as_matrix(x: Sequence) -> Matrix:
        return Matrix.from_columns([tuple(x[j * rows:(j + 1) * rows]) for j in range(cols)],
                                   field, rows)

    sol = _affine_solve(lambda x: _forgetful_rows(dkc, as_matrix(x)), rows * cols, field)
    return None if sol is None else as_matrix(sol)


def multiplication_certificate(target: DKDatum | DKCoring) -> Matrix:
    """``γ(c⊗c') = s_A(ε_C(c)ε_C(c'))``; for the trivial datum this is multiplication."""
    dkc = _coring_of(target)
    d = dkc.datum
    C = d.C.coring
    R = d.bialgebroid.base
    T = C.tensor
    cols = []
    for j in range(T.dim):
        p, q = T.basis_pair(j)
        cols.append(d.A.source.apply(R.mul(C.counit.column(p), C.counit.column(q))))
    return Matrix.from_columns(cols, R.field, d.A.algebra.dim)


__all__ = ["check_induction_separable", "search_induction_certificate",
           "induction_unit_certificate", "check_forgetful_separable",
           "search_forgetful_certificate", "multiplication_certificate"]
