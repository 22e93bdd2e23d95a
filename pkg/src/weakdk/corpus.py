"""Concrete examples: groupoid algebras, small base algebras and their derived data."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import product

from .bialgebroid import Bialgebroid, RRing, from_weak_hopf, triangle_matrices
from .doikoppinen import (ComoduleAlgebraB, ComoduleAlgebraW, DKDatum, DKModule,
                          ModuleCoalgebraB, ModuleCoalgebraW, WeakDKDatum, backward_datum,
                          check_dk_datum, dk_module_tensor)
from .exactlin import QQ, Field, Matrix, densify, support, unit_vector
from .findim import (BalancedTensor, Coring, FinAlgebra, _acc, coalgebra_from_function,
                     trivial_coring)
from .report import VerificationError
from .weakhopf import WeakHopf


# ---------------------------------------------------------------- groupoids


@dataclass(frozen=True)
class GroupoidPresentation:
    """A finite groupoid.

    ``morphisms[i] = (source, target, label)``; ``compose[(f, g)]`` is the
    index of ``f ∘ g`` and is defined exactly when ``source(f) = target(g)``.
    """

    objects: int
    morphisms: tuple
    compose: dict = dc_field(hash=False, compare=True)

    def source(self, f: int) -> int:
        return self.morphisms[f][0]

    def target(self, f: int) -> int:
        return self.morphisms[f][1]

    def label(self, f: int) -> str:
        return self.morphisms[f][2]

    def identity(self, x: int) -> int:
        for f in range(len(self.morphisms)):
            if self.source(f) == x and self.target(f) == x and all(
                    self.compose.get((f, g)) == g for g in range(len(self.morphisms))
                    if self.target(g) == x):
                return f
        raise ValueError("object %d has no identity" % x)

    def inverse(self, f: int) -> int:
        idt = self.identity(self.source(f))
        for g in range(len(self.morphisms)):
            if self.compose.get((g, f)) == idt and self.compose.get((f, g)) == \
                    self.identity(self.target(f)):
                return g
        raise ValueError("morphism %s is not invertible" % self.label(f))

    def validate(self) -> None:
        n = len(self.morphisms)
        for f, g in product(range(n), repeat=2):
            defined = (f, g) in self.compose
            if defined != (self.source(f) == self.target(g)):
                raise ValueError("composition of %s and %s is wrongly (un)defined"
                                 % (self.label(f), self.label(g)))
            if defined:
                fg = self.compose[(f, g)]
                if self.source(fg) != self.source(g) or self.target(fg) != self.target(f):
                    raise ValueError("composite %s∘%s has the wrong ends"
                                     % (self.label(f), self.label(g)))
        for f, g, h in product(range(n), repeat=3):
            if (f, g) in self.compose and (g, h) in self.compose:
                if self.compose[(self.compose[(f, g)], h)] != self.compose[(f, self.compose[(g, h)])]:
                    raise ValueError("composition is not associative")
        for x in range(self.objects):
            self.identity(x)
        for f in range(n):
            self.inverse(f)


def _from_rule(objects: int, morphisms: list, rule) -> GroupoidPresentation:
    comp = {}
    for f, g in product(range(len(morphisms)), repeat=2):
        if morphisms[f][0] == morphisms[g][1]:
            comp[(f, g)] = rule(f, g)
    return GroupoidPresentation(objects, tuple(morphisms), comp)


def pair_groupoid(n: int) -> GroupoidPresentation:
    """Objects ``1..n`` with exactly one arrow ``e_xy: y → x`` for each pair."""
    morphisms = [(y, x, "e%d%d" % (x + 1, y + 1)) for x in range(n) for y in range(n)]
    return _from_rule(n, morphisms, lambda f, g: (f // n) * n + g % n)


def cyclic_group(n: int) -> GroupoidPresentation:
    """The group ``ℤ_n`` as a one-object groupoid with arrows ``1, u, u², ...``."""
    names = ["1", "u"] + ["u%d" % k for k in range(2, n)]
    morphisms = [(0, 0, names[k]) for k in range(n)]
    return _from_rule(1, morphisms, lambda f, g: (f + g) % n)


def discrete_groupoid(n: int) -> GroupoidPresentation:
    """``n`` objects and identity arrows only."""
    morphisms = [(x, x, "i%d" % (x + 1)) for x in range(n)]
    return _from_rule(n, morphisms, lambda f, g: f)


def groupoid_algebra(g: GroupoidPresentation, field: Field = QQ, name: str = "") -> WeakHopf:
    """``k G`` with ``Δ(f) = f⊗f``, ``ε(f) = 1``, ``S(f) = f⁻¹``."""
    g.validate()
    n = len(g.morphisms)
    one = field.one
    labels = [g.label(f) for f in range(n)]
    alg = FinAlgebra.from_function(
        field, n, lambda f, h: {g.compose[(f, h)]: one} if (f, h) in g.compose else {},
        [one if f in {g.identity(x) for x in range(g.objects)} else field.zero
         for f in range(n)], labels)
    coalg = coalgebra_from_function(field, n, lambda f: {f * n + f: one}, [one] * n, labels)
    inv = Matrix.from_columns([unit_vector(field, n, g.inverse(f)) for f in range(n)], field, n)
    return WeakHopf(alg, coalg, inv, inv, name or "k[%s]" % ",".join(labels))


def pair_groupoid_algebra(n: int, field: Field = QQ) -> WeakHopf:
    return groupoid_algebra(pair_groupoid(n), field, "kP%d" % n)


def cyclic_group_algebra(n: int, field: Field = QQ) -> WeakHopf:
    return groupoid_algebra(cyclic_group(n), field, "Q[Z%d]" % n)


def discrete_groupoid_algebra(n: int, field: Field = QQ) -> WeakHopf:
    return groupoid_algebra(discrete_groupoid(n), field, "kD%d" % n)


def weak_hopf_corpus(field: Field = QQ) -> list[WeakHopf]:
    """The instances every suite runs over."""
    return ([pair_groupoid_algebra(2, field), pair_groupoid_algebra(3, field)]
            + [cyclic_group_algebra(n, field) for n in range(1, 7)]
            + [discrete_groupoid_algebra(2, field)])


# ---------------------------------------------------------------- small algebras


def ground_algebra(field: Field = QQ) -> FinAlgebra:
    return FinAlgebra(field, [[[field.one]]], [field.one], ["1"])


def product_algebra(n: int = 2, field: Field = QQ) -> FinAlgebra:
    """``k × ... × k`` with primitive idempotents ``p1, ..., pn``."""
    return FinAlgebra.from_function(field, n, lambda i, j: {i: field.one} if i == j else {},
                                    [field.one] * n, ["p%d" % (i + 1) for i in range(n)])


def matrix_algebra(n: int = 2, field: Field = QQ) -> FinAlgebra:
    """``M_n(k)`` on matrix units ``e_xy`` (row-major)."""
    def prod(i, j):
        (a, b), (c, d) = divmod(i, n), divmod(j, n)
        return {a * n + d: field.one} if b == c else {}
    unit = [field.one if i // n == i % n else field.zero for i in range(n * n)]
    return FinAlgebra.from_function(field, n * n, prod, unit,
                                    ["e%d%d" % (i // n + 1, i % n + 1) for i in range(n * n)])


def upper_triangular_algebra(field: Field = QQ) -> FinAlgebra:
    """Upper triangular 2×2 matrices on ``e11, e12, e22``."""
    units = [(0, 0), (0, 1), (1, 1)]
    index = {u: i for i, u in enumerate(units)}

    def prod(i, j):
        (a, b), (c, d) = units[i], units[j]
        return {index[(a, d)]: field.one} if b == c else {}
    return FinAlgebra.from_function(field, 3, prod, [field.one, field.zero, field.one],
                                    ["e11", "e12", "e22"])


# ---------------------------------------------------------------- weak Doi-Koppinen data


def regular_comodule_algebra_w(h: WeakHopf):
    """``A = H`` coacting on itself by ``Δ``."""
    return ComoduleAlgebraW(h, h.algebra, h.coalgebra.comult, "H")


def regular_module_coalgebra_w(h: WeakHopf):
    """``C = H`` with left multiplication."""
    return ModuleCoalgebraW(h, h.coalgebra,
                            [h.algebra.left_matrix(h.e(i)) for i in range(h.dim)], "H")


def regular_weak_datum(h: WeakHopf):
    return WeakDKDatum(h, regular_comodule_algebra_w(h), regular_module_coalgebra_w(h),
                       "%s:(H,H,H)" % h.name)


# ---------------------------------------------------------------- bialgebroid Doi-Koppinen data


def regular_comodule_algebra_b(b: Bialgebroid):
    """``A = H`` with ``s_A = s`` and ``ρ = Δ``."""
    ring = RRing(b.base, b.total, b.re_ring.source)
    t = BalancedTensor(b.coring.bimodule, ring.bimodule())
    cols = [densify(t.project_sparse(b.coring.delta_lift({i: b.field.one})), t.dim, b.field)
            for i in range(b.dim)]
    return ComoduleAlgebraB(b, ring, Matrix.from_columns(cols, b.field, t.dim), t, "H")


def base_comodule_algebra_b(b: Bialgebroid):
    """``A = R`` with ``r ↦ s(r) ⊗_R 1``."""
    R = b.base
    ring = RRing(R, R, Matrix.identity(R.dim, b.field))
    t = BalancedTensor(b.coring.bimodule, ring.bimodule())
    cols = [t.pair(b.re_ring.source.column(k), R.unit) for k in range(R.dim)]
    return ComoduleAlgebraB(b, ring, Matrix.from_columns(cols, b.field, t.dim), t, "R")


def regular_module_coalgebra_b(b: Bialgebroid):
    """``C = H`` with left multiplication."""
    H = b.total
    return ModuleCoalgebraB(b, b.coring, [H.left_matrix(H.e(i)) for i in range(b.dim)], "H")


def base_module_coalgebra_b(b: Bialgebroid):
    """``C = R`` as the trivial coring, ``H`` acting by ``▷``."""
    return ModuleCoalgebraB(b, trivial_coring(b.base), triangle_matrices(b), "R")


def re_example_datum(b: Bialgebroid):
    """``(H, R^e, R^e)`` built from the explicit ``R^e`` formulas.

    Coaction and comultiplication are ``r⊗r̄ ↦ (r⊗1) ⊗_R (1⊗r̄)``, the counit is
    ``r⊗r̄ ↦ r r̄`` and ``R^e`` acts on itself by multiplication.
    """
    R = getattr(b, "re_base", None)
    if R is None:
        raise ValueError("not an R^e bialgebroid")
    field = b.field
    m = R.dim
    H = b.total
    u = support(R.unit)

    def r_tensor_1(i):
        return {i * m + j: x for j, x in u.items()}

    def one_tensor_r(i):
        return {j * m + i: x for j, x in u.items()}

    s_A = Matrix.from_columns([densify(r_tensor_1(i), m * m, field) for i in range(m)],
                              field, m * m)
    ring = RRing(R, H, s_A)
    t = BalancedTensor(b.coring.bimodule, ring.bimodule())
    cols = []
    for k in range(m * m):
        a, c = divmod(k, m)
        cols.append(densify(t.pair_sparse(r_tensor_1(a), one_tensor_r(c)), t.dim, field))
    A = ComoduleAlgebraB(b, ring, Matrix.from_columns(cols, field, t.dim), t, "R^e")
    bim = b.re_ring.coring_bimodule()
    tc = BalancedTensor(bim, bim)
    ccols = [densify(tc.pair_sparse(r_tensor_1(k // m), one_tensor_r(k % m)), tc.dim, field)
             for k in range(m * m)]
    counit = Matrix.from_columns([R.mult[k // m][k % m] for k in range(m * m)], field, m)
    coring = Coring(R, bim, Matrix.from_columns(ccols, field, tc.dim), counit, tc)
    C = ModuleCoalgebraB(b, coring, [H.left_matrix(H.e(i)) for i in range(b.dim)], "R^e")
    return DKDatum(b, A, C, "%s:(H,R^e,R^e)" % b.name)


def canonical_dk_data(b: Bialgebroid, verify: bool = True) -> list:
    """``(H, A, C)`` for ``A, C ∈ {H, R}``, plus ``(H, R^e, R^e)`` over an ``R^e`` bialgebroid."""
    As = {"H": regular_comodule_algebra_b(b), "R": base_comodule_algebra_b(b)}
    Cs = {"H": regular_module_coalgebra_b(b), "R": base_module_coalgebra_b(b)}
    data = [DKDatum(b, As[a], Cs[c], "%s:(H,%s,%s)" % (b.name, a, c))
            for a, c in [("H", "H"), ("H", "R"), ("R", "H"), ("R", "R")]]
    if getattr(b, "re_base", None) is not None:
        data.append(re_example_datum(b))
    if verify:
        for d in data:
            rep = check_dk_datum(d)
            if not rep.passed:
                raise VerificationError("datum %s failed its checks" % d.name, rep)
    return data


def weak_dk_data(h: WeakHopf, verify: bool = True) -> list:
    """Weak counterparts of the canonical data, via the separability section."""
    b = from_weak_hopf(h)
    return [backward_datum(d, verify) for d in canonical_dk_data(b, verify)]


def tensor_comodule_algebra(x, B: FinAlgebra):
    """``A⊗B`` with ``s(r) = s_A(r)⊗1`` and ``ρ(a⊗b) = a_{<-1>} ⊗_R (a_{<0>}⊗b)``."""
    A = x.algebra
    field = A.field
    AB = A.tensor(B)
    nb = B.dim
    ub = support(B.unit)
    s = Matrix.from_columns(
        [densify({i * nb + j: a * c for i, a in support(x.source.column(k)).items()
                  for j, c in ub.items()}, AB.dim, field) for k in range(x.r_ring.base.dim)],
        field, AB.dim)
    ring = RRing(x.r_ring.base, AB, s)
    t = BalancedTensor(x.bialgebroid.coring.bimodule, ring.bimodule())
    cols = []
    for k in range(AB.dim):
        a, bb = divmod(k, nb)
        amb: dict = {}
        for hh, aa, c in x.rho_lift(a):
            _acc(amb, hh * AB.dim + aa * nb + bb, c)
        cols.append(densify(t.project_sparse(amb), t.dim, field))
    return ComoduleAlgebraB(x.bialgebroid, ring, Matrix.from_columns(cols, field, t.dim), t,
                            "%s⊗B" % x.name)


# ---------------------------------------------------------------- Doi-Koppinen modules


def hopf_dk_module(d: DKDatum):
    """``M = H`` over a datum with ``A = C = H``: ``A`` acts by multiplication, ``ρ = Δ``."""
    b = d.bialgebroid
    H = b.total
    action = [H.left_matrix(H.e(i)) for i in range(H.dim)]
    t = dk_module_tensor(d, action)
    cols = [densify(t.project_sparse(b.coring.delta_lift({i: b.field.one})), t.dim, b.field)
            for i in range(H.dim)]
    return DKModule(d, action, Matrix.from_columns(cols, b.field, t.dim), t, "H")


def trivial_dk_module(d: DKDatum):
    """``M = R`` over a datum with ``A = C = R``: ``ρ(m) = 1 ⊗_R m``."""
    b = d.bialgebroid
    R = b.base
    action = [R.left_matrix(R.e(i)) for i in range(R.dim)]
    t = dk_module_tensor(d, action)
    cols = [t.pair(R.unit, R.e(i)) for i in range(R.dim)]
    return DKModule(d, action, Matrix.from_columns(cols, b.field, t.dim), t, "R")


# ---------------------------------------------------------------- morphisms


@dataclass
class CorpusMorphism:
    """A structure-preserving map between two corpus objects of the same kind.

    ``kind`` is ``"ca"`` (comodule algebras) or ``"mc"`` (module coalgebras).
    """

    name: str
    kind: str
    source: object
    target: object
    matrix: Matrix


def corpus_morphisms(b: Bialgebroid) -> list[CorpusMorphism]:
    """Identities, ``s: R → H`` between the comodule algebras and ``ε: H → R`` between
    the module coalgebras, all in the bialgebroid flavor."""
    field = b.field
    a_h, a_r = regular_comodule_algebra_b(b), base_comodule_algebra_b(b)
    c_h, c_r = regular_module_coalgebra_b(b), base_module_coalgebra_b(b)
    out = []
    for x in (a_h, a_r):
        out.append(CorpusMorphism("id_A(%s)" % x.name, "ca", x, x,
                                  Matrix.identity(x.algebra.dim, field)))
    for x in (c_h, c_r):
        out.append(CorpusMorphism("id_C(%s)" % x.name, "mc", x, x,
                                  Matrix.identity(x.coring.dim, field)))
    out.append(CorpusMorphism("source", "ca", a_r, a_h, b.re_ring.source))
    out.append(CorpusMorphism("counit", "mc", c_h, c_r, b.counit))
    return out
