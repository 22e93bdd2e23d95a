"""R-rings, R^e-rings and bialgebroids; passage to and from weak bialgebras."""

from __future__ import annotations

from .exactlin import Matrix, densify, support
from .findim import (BalancedTensor, Coring, FinAlgebra, FinCoalgebra, RBimodule,
                     TakeuchiProduct, _acc, check_algebra, check_algebra_map,
                     check_bimodule, check_coring, ring_bimodule, sparse_columns, times_R)
from .report import Report, VerificationError
from .weakhopf import (BaseAlgebra, SeparablePair, WeakBialgebra, WeakHopf,
                       check_separable_pair, check_weak_bialgebra, extract_base,
                       section_sigma)


class RRing:
    """An algebra ``U`` with an algebra map ``i: R → U``."""

    def __init__(self, base: FinAlgebra, total: FinAlgebra, i_map: Matrix):
        if i_map.shape != (total.dim, base.dim):
            raise ValueError("i_map must be dim U x dim R")
        self.base = base
        self.total = total
        self.i_map = i_map
        self._bimodule = None

    def bimodule(self) -> RBimodule:
        """``r·u·r' = i(r) u i(r')``."""
        if self._bimodule is None:
            self._bimodule = ring_bimodule(self.base, self.total, self.i_map)
        return self._bimodule


def check_r_ring(r: RRing, report: Report | None = None) -> Report:
    rep = report if report is not None else Report("R-ring")
    rep.merge(check_algebra(r.base), "base_")
    rep.merge(check_algebra(r.total), "total_")
    check_algebra_map(r.base, r.total, r.i_map, report=rep, name="unit_map")
    check_bimodule(r.bimodule(), rep, "bimodule_")
    return rep


class ReRing:
    """An algebra ``H`` with source ``s: R → H`` and target ``t: R^op → H``."""

    def __init__(self, base: FinAlgebra, total: FinAlgebra, source: Matrix, target: Matrix):
        for m in (source, target):
            if m.shape != (total.dim, base.dim):
                raise ValueError("source and target must be dim H x dim R")
        self.base = base
        self.total = total
        self.source = source
        self.target = target
        self._bimodule = None

    def s(self, r) -> tuple:
        return self.source.apply(r)

    def t(self, r) -> tuple:
        return self.target.apply(r)

    def coring_bimodule(self) -> RBimodule:
        """``r·h·r' = s(r) t(r') h``."""
        if self._bimodule is None:
            H = self.total
            left = [H.left_matrix(self.source.column(k)) for k in range(self.base.dim)]
            right = [H.left_matrix(self.target.column(k)) for k in range(self.base.dim)]
            self._bimodule = RBimodule(self.base, H.dim, left, right, "H")
        return self._bimodule

    def source_ring(self) -> RRing:
        return RRing(self.base, self.total, self.source)


def check_re_ring(r: ReRing, report: Report | None = None) -> Report:
    rep = report if report is not None else Report("R^e-ring")
    rep.merge(check_algebra(r.base), "base_")
    rep.merge(check_algebra(r.total), "total_")
    check_algebra_map(r.base, r.total, r.source, report=rep, name="source")
    check_algebra_map(r.base, r.total, r.target, anti=True, report=rep, name="target")
    law = rep.law("source_target_commute")
    H = r.total
    for a in range(r.base.dim):
        sa = r.source.column(a)
        for b in range(r.base.dim):
            tb = r.target.column(b)
            law.expect(H.mul(sa, tb), H.mul(tb, sa), a, b)
    return rep


class Bialgebroid:
    """An R^e-ring whose coring bimodule carries ``Δ: H → H⊗_R H`` and ``ε: H → R``."""

    def __init__(self, re_ring: ReRing, comult: Matrix, counit: Matrix,
                 tensor: BalancedTensor | None = None, name: str = "",
                 separability: SeparablePair | None = None):
        self.re_ring = re_ring
        self.name = name
        bim = re_ring.coring_bimodule()
        self.coring = Coring(re_ring.base, bim, comult, counit, tensor)
        self.separability = separability
        self.weak_hopf: WeakHopf | None = None
        self.re_base: FinAlgebra | None = None
        self._takeuchi = None

    @property
    def base(self) -> FinAlgebra:
        return self.re_ring.base

    @property
    def total(self) -> FinAlgebra:
        return self.re_ring.total

    @property
    def field(self):
        return self.total.field

    @property
    def dim(self) -> int:
        return self.total.dim

    @property
    def tensor(self) -> BalancedTensor:
        return self.coring.tensor

    @property
    def comult(self) -> Matrix:
        return self.coring.comult

    @property
    def counit(self) -> Matrix:
        return self.coring.counit

    def takeuchi(self) -> TakeuchiProduct:
        """``H ×_R H`` inside the coring tensor, without building the product table."""
        if self._takeuchi is None:
            ring = self.re_ring
            self._takeuchi = times_R(ring.coring_bimodule(), ring.total, ring.target,
                                     ring_bimodule(ring.base, ring.total, ring.source),
                                     ring.total, tensor=self.tensor, with_table=False)
        return self._takeuchi

    def __repr__(self):
        return "Bialgebroid(%s dim=%d over dim %d)" % (self.name, self.dim, self.base.dim)


def check_bialgebroid(b: Bialgebroid, subject: str | None = None) -> Report:
    """Every bialgebroid law, each with a witness on failure."""
    rep = Report(subject or "bialgebroid %s" % b.name)
    check_re_ring(b.re_ring, rep)
    check_coring(b.coring, report=rep, prefix="coring_")
    H, R = b.total, b.base
    field = b.field
    tk = b.takeuchi()
    n = H.dim
    mem = rep.law("comult_in_takeuchi")
    images = [b.comult.column(i) for i in range(n)]
    for i, d in enumerate(images):
        mem.expect_true(d in tk, i, lhs=d)
    law = rep.law("comult_multiplicative")
    for i in range(n):
        for j in range(n):
            lhs = b.comult.apply(H.mult[i][j])
            rhs = tk.mul(images[i], images[j])
            law.expect(lhs, rhs, i, j)
    rep.law("comult_unital").expect(b.comult.apply(H.unit), tk.one(), note="Δ(1) = 1⊗_R 1")
    rep.law("counit_unital").expect(b.counit.apply(H.unit), R.unit, note="ε(1_H) = 1_R")
    ls = rep.law("counit_absorbs_source")
    lt = rep.law("counit_absorbs_target")
    src = sparse_columns(b.re_ring.source)
    tgt = sparse_columns(b.re_ring.target)
    ecols = sparse_columns(b.counit)
    for g in range(n):
        for h in range(n):
            lhs = densify(_eps(b, H._sp[g][h], ecols), R.dim, field)
            eh = ecols[h]
            s_eh = _apply(src, eh)
            t_eh = _apply(tgt, eh)
            rs = densify(_eps(b, H.mul_sparse({g: field.one}, s_eh), ecols), R.dim, field)
            rt = densify(_eps(b, H.mul_sparse({g: field.one}, t_eh), ecols), R.dim, field)
            ls.expect(lhs, rs, g, h, note="ε(gh) = ε(g s(ε(h)))")
            lt.expect(lhs, rt, g, h, note="ε(gh) = ε(g t(ε(h)))")
    return rep


def _apply(cols: list[dict], v: dict) -> dict:
    out: dict = {}
    for k, x in v.items():
        for i, y in cols[k].items():
            _acc(out, i, x * y)
    return out


def _eps(b: Bialgebroid, v: dict, ecols) -> dict:
    return _apply(ecols, v)


def from_weak_hopf(h: WeakHopf, base: BaseAlgebra | None = None,
                   verify: bool = True) -> Bialgebroid:
    """The bialgebroid over ``R = Im Π^L``: ``s`` the inclusion, ``t = S⁻¹`` on ``R``,
    ``Δ̃ = can∘Δ``, ``ε̃ = Π^L``."""
    if h.antipode_inv is None:
        raise ValueError("the antipode of %s is not invertible" % h.name)
    base = base if base is not None else extract_base(h)
    R = base.r_algebra
    field = h.field
    s = base.inclusion
    t = h.antipode_inv @ s
    ring = ReRing(R, h.algebra, s, t)
    tensor = BalancedTensor(ring.coring_bimodule(), ring.coring_bimodule())
    cols = [densify(tensor.project_sparse(h.coalgebra._dcols[i]), tensor.dim, field)
            for i in range(h.dim)]
    comult = Matrix.from_columns(cols, field, tensor.dim)
    counit = Matrix.from_columns([base.coords(h.pi_left.column(i)) for i in range(h.dim)],
                                 field, R.dim)
    b = Bialgebroid(ring, comult, counit, tensor, name=h.name, separability=base)
    b.weak_hopf = h
    if verify:
        rep = check_bialgebroid(b)
        if not rep.passed:
            raise VerificationError("bialgebroid of %s failed its checks" % h.name, rep)
    return b


def to_weak_bialgebra(b: Bialgebroid, pair: SeparablePair | None = None,
                      verify: bool = True) -> WeakBialgebra:
    """``Δ(h) = h₁·e¹ ⊗ e²·h₂`` and ``ε = φ∘ε̃`` on the underlying vector space of ``H``."""
    pair = pair if pair is not None else b.separability
    if pair is None:
        raise ValueError("a separability idempotent and Frobenius functional are required")
    if pair.r_algebra != b.base:
        raise ValueError("the idempotent lives over a different base algebra")
    rep = check_separable_pair(pair)
    if not rep.passed:
        raise VerificationError("(e, φ) is not a separable Frobenius pair", rep)
    field = b.field
    sigma = section_sigma(pair, b.tensor)
    comult = sigma @ b.comult
    counit = tuple(pair.phi(b.counit.column(i)) for i in range(b.dim))
    coalg = FinCoalgebra(field, comult, counit, b.total.basis_names)
    w = WeakBialgebra(b.total, coalg, name=b.name)
    if verify:
        rep = check_weak_bialgebra(w)
        if not rep.passed:
            raise VerificationError("weak bialgebra from %s failed its checks" % b.name, rep)
    return w


def triangle_action(b: Bialgebroid, h, a) -> tuple:
    """``h ▷ a = ε(h s(a))``; raises unless it equals ``ε(h t(a))``."""
    H = b.total
    x = b.counit.apply(H.mul(h, b.re_ring.s(a)))
    y = b.counit.apply(H.mul(h, b.re_ring.t(a)))
    if x != y:
        raise VerificationError("ε(h s(a)) ≠ ε(h t(a)): not a bialgebroid")
    return x


def triangle_matrices(b: Bialgebroid) -> list[Matrix]:
    """``M_h`` with ``M_h a = b_h ▷ a`` for each basis ``h``."""
    R = b.base
    out = []
    for i in range(b.dim):
        hi = b.total.e(i)
        out.append(Matrix.from_columns([triangle_action(b, hi, R.e(k)) for k in range(R.dim)],
                                       b.field, R.dim))
    return out


def source_absorbs_report(b: Bialgebroid) -> Report:
    """``s(h₁ ▷ r) h₂ = h s(r)`` on basis ``h, r``."""
    rep = Report("source absorbs the triangle action")
    law = rep.law("source_absorbs_triangle")
    H, R = b.total, b.base
    field = b.field
    for i in range(b.dim):
        terms = b.tensor.lift_terms(b.comult.column(i))
        for k in range(R.dim):
            lhs: dict = {}
            for x, y, c in terms:
                act = triangle_action(b, H.e(x), R.e(k))
                v = H.mul_sparse(support(b.re_ring.s(act)), {y: c})
                for j, z in v.items():
                    _acc(lhs, j, z)
            rhs = H.mul_sparse({i: field.one}, support(b.re_ring.s(R.e(k))))
            law.expect(lhs, rhs, i, k)
    return rep


# ---------------------------------------------------------------- the R^e example


def re_bialgebroid(R: FinAlgebra, verify: bool = True) -> Bialgebroid:
    """``H = R ⊗ R^op`` with ``s(a) = a⊗1``, ``t(b̄) = 1⊗b̄``,
    ``Δ(r⊗r̄) = (r⊗1) ⊗_R (1⊗r̄)`` and ``ε(r⊗r̄) = r r̄``."""
    field = R.field
    m = R.dim
    H = R.tensor(R.opposite())
    H.basis_names = tuple("%s⊗%s°" % (a, b) for a in R.basis_names for b in R.basis_names)
    u = support(R.unit)
    s_cols = [densify({i * m + j: x for j, x in u.items()}, m * m, field) for i in range(m)]
    t_cols = [densify({j * m + i: x for j, x in u.items()}, m * m, field) for i in range(m)]
    ring = ReRing(R, H, Matrix.from_columns(s_cols, field, m * m),
                  Matrix.from_columns(t_cols, field, m * m))
    bim = ring.coring_bimodule()
    tensor = BalancedTensor(bim, bim)
    cols = []
    for k in range(m * m):
        a, c = divmod(k, m)
        left = support(s_cols[a])
        right = support(t_cols[c])
        cols.append(densify(tensor.pair_sparse(left, right), tensor.dim, field))
    comult = Matrix.from_columns(cols, field, tensor.dim)
    counit = Matrix.from_columns([R.mult[k // m][k % m] for k in range(m * m)], field, m)
    b = Bialgebroid(ring, comult, counit, tensor, name="R^e(dim %d)" % m)
    b.re_base = R
    if verify:
        rep = check_bialgebroid(b)
        if not rep.passed:
            raise VerificationError("R^e bialgebroid failed its checks", rep)
    return b


def commutative_separable_pair(R: FinAlgebra) -> SeparablePair:
    """For ``R = k×...×k``: ``e = Σ p_i⊗p_i``, ``φ(p_i) = 1``."""
    m = R.dim
    field = R.field
    e = [field.one if k // m == k % m else field.zero for k in range(m * m)]
    return SeparablePair(R, e, [field.one] * m)


__all__ = ["RRing", "ReRing", "Bialgebroid", "check_r_ring", "check_re_ring",
           "check_bialgebroid", "from_weak_hopf", "to_weak_bialgebra", "triangle_action",
           "triangle_matrices", "source_absorbs_report", "re_bialgebroid",
           "commutative_separable_pair", "WeakHopf", "BaseAlgebra", "SeparablePair"]
