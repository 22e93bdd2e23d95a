from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from weakdk.bialgebroid import RRing, from_weak_hopf, re_bialgebroid
from weakdk.corpus import (base_comodule_algebra_b, canonical_dk_data, corpus_morphisms,
                           cyclic_group_algebra, discrete_groupoid_algebra, hopf_dk_module,
                           matrix_algebra, pair_groupoid_algebra, product_algebra,
                           regular_comodule_algebra_b, regular_module_coalgebra_b,
                           tensor_comodule_algebra, trivial_dk_module,
                           upper_triangular_algebra, weak_dk_data)
from weakdk.doikoppinen import (ComoduleAlgebraB, ComoduleAlgebraW, DatumMorphism, DKModule,
                                ModuleCoalgebraB, backward_comodule_algebra, backward_datum,
                                backward_module_coalgebra, build_dk_coring,
                                build_weak_coring_iso, check_ca_morphism_b,
                                check_ca_morphism_w, check_comodule_algebra_b,
                                check_comodule_algebra_w, check_datum_morphism,
                                check_dk_datum, check_dk_module, check_forgetful_separable,
                                check_induction_separable, check_mc_morphism_b,
                                check_mc_morphism_w, check_module_coalgebra_b,
                                check_weak_dk_components, comodule_algebra_identities,
                                comodule_to_dk_module, dk_module_to_comodule,
                                forward_comodule_algebra, forward_datum,
                                forward_module_coalgebra, induction_unit_certificate,
                                multiplication_certificate, regular_comodule,
                                search_forgetful_certificate, search_induction_certificate)
from weakdk.exactlin import QQ, Matrix, vadd
from weakdk.findim import BalancedTensor, check_coring, check_coring_comodule

from oracles import naive_rank

P2 = pair_groupoid_algebra(2)
Z2 = cyclic_group_algebra(2)
B_P2 = from_weak_hopf(P2)
B_Z2 = from_weak_hopf(Z2)
DATA_P2 = canonical_dk_data(B_P2)
HHH, HHR, HRH, HRR = DATA_P2
SMALL = [P2, pair_groupoid_algebra(3), Z2, cyclic_group_algebra(3),
         discrete_groupoid_algebra(2)]


def _names(xs):
    return [x.name for x in xs]


# ---------------------------------------------------------------- components


def test_regular_and_trivial_module_coalgebras():
    assert check_module_coalgebra_b(HHH.C).passed
    assert check_module_coalgebra_b(HHR.C).passed


def test_action_twisted_by_antipode_is_rejected():
    H = B_P2.total
    twisted = ModuleCoalgebraB(B_P2, B_P2.coring,
                               [H.left_matrix(P2.S(H.e(i))) for i in range(4)], "twisted")
    rep = check_module_coalgebra_b(twisted)
    assert not rep["counit_equivariant"].passed
    assert rep["counit_equivariant"].witness is not None
    assert not rep["action_associative"].passed


def test_regular_and_base_comodule_algebras():
    assert check_comodule_algebra_b(regular_comodule_algebra_b(B_P2)).passed
    assert check_comodule_algebra_b(base_comodule_algebra_b(B_P2)).passed


def test_target_as_source_map_breaks_r_linearity():
    b = re_bialgebroid(product_algebra(2))
    ring = RRing(b.base, b.total, b.re_ring.target)
    t = BalancedTensor(b.coring.bimodule, ring.bimodule())
    cols = [t.project(b.tensor.lift(b.comult.column(i))) for i in range(b.dim)]
    bad = ComoduleAlgebraB(b, ring, Matrix.from_columns(cols, QQ, t.dim), t, "t-twisted")
    rep = check_comodule_algebra_b(bad)
    law = rep["comodule_coaction_left_R_linear"]
    assert not law.passed and law.witness is not None


@pytest.mark.parametrize("h", [P2, Z2], ids=_names([P2, Z2]))
def test_weak_regular_datum_passes(h):
    for d in weak_dk_data(h):
        assert check_weak_dk_components(d).passed


def test_trivial_coaction_breaks_weak_unit():
    ones = {0, 3}   # 1 = e11 + e22
    cols = [[QQ.one if k // 4 == a and k % 4 in ones else QQ.zero for k in range(16)]
            for a in range(4)]
    x = ComoduleAlgebraW(P2, P2.algebra, Matrix.from_columns(cols, QQ, 16), "a⊗1")
    rep = check_comodule_algebra_w(x)
    assert not rep["unit_coaction"].passed
    assert not rep["unit_coaction_alternative"].passed


# ---------------------------------------------------------------- translations


def test_forward_on_p2_regular_comodule_algebra():
    wd = weak_dk_data(P2)[0]
    xb = forward_comodule_algebra(wd.A, B_P2)
    assert xb.source == B_P2.re_ring.source
    assert check_comodule_algebra_b(xb).passed


def test_forward_module_coalgebra_counit_is_pi_left():
    wd = weak_dk_data(P2)[0]
    cb = forward_module_coalgebra(wd.C, B_P2)
    assert B_P2.re_ring.source @ cb.coring.counit == P2.pi_left


def test_hopf_case_forward_is_classical():
    wd = weak_dk_data(Z2)[0]
    cb = forward_module_coalgebra(wd.C)
    assert cb.coring.base.dim == 1
    assert cb.coring.counit.row(0) == Z2.coalgebra.counit
    assert forward_comodule_algebra(wd.A).coaction == wd.A.coaction


@pytest.mark.parametrize("h", SMALL, ids=_names(SMALL))
def test_round_trips_are_exact(h):
    b = from_weak_hopf(h)
    for d in canonical_dk_data(b):
        w = backward_datum(d)
        again = forward_datum(w, b)
        assert again.A.coaction == d.A.coaction
        assert again.A.source == d.A.source
        assert again.C.coring.comult == d.C.coring.comult
        assert again.C.coring.counit == d.C.coring.counit
        back = backward_datum(again)
        assert back.A.coaction == w.A.coaction
        assert back.C.coalgebra.comult == w.C.coalgebra.comult
        assert back.C.coalgebra.counit == w.C.coalgebra.counit


@pytest.mark.parametrize("h", SMALL, ids=_names(SMALL))
def test_comodule_algebra_identities(h):
    for d in weak_dk_data(h):
        rep = comodule_algebra_identities(d.A)
        assert rep.passed, rep.summary()


# ---------------------------------------------------------------- DK modules and the coring


def test_hopf_dk_module_and_trivial_module():
    assert check_dk_module(hopf_dk_module(HHH)).passed
    assert check_dk_module(trivial_dk_module(HRR)).passed


def test_non_colinear_automorphism_breaks_compatibility():
    b = from_weak_hopf(cyclic_group_algebra(3))
    d = canonical_dk_data(b)[0]
    m = hopf_dk_module(d)
    inversion = [0, 2, 1]   # u ↦ u², an algebra map that is not colinear
    bad = DKModule(d, [m.action[inversion[i]] for i in range(3)], m.coaction, m.tensor, "bad")
    law = check_dk_module(bad)["coaction_compatible"]
    assert not law.passed
    assert law.witness.indices == (1, 0)


@pytest.mark.parametrize("d, dim", list(zip(DATA_P2, (8, 4, 4, 2))), ids=_names(DATA_P2))
def test_dk_coring_dimensions_and_laws(d, dim):
    k = build_dk_coring(d)
    assert k.dim == dim
    assert check_coring(k.coring).passed


def test_dk_coring_of_trivial_datum_is_base():
    k = build_dk_coring(HRR)
    assert k.dim == B_P2.base.dim


def test_dk_coring_over_re_example():
    for R in (product_algebra(2), upper_triangular_algebra()):
        d = canonical_dk_data(re_bialgebroid(R))[-1]
        assert d.name.endswith("(H,R^e,R^e)")
        assert check_dk_datum(d).passed
        assert check_coring(build_dk_coring(d).coring).passed


def test_regular_comodule_round_trip():
    for d in DATA_P2:
        k = build_dk_coring(d)
        co = regular_comodule(k)
        assert check_coring_comodule(co).passed
        m = comodule_to_dk_module(k, co)
        assert check_dk_module(m).passed
        assert dk_module_to_comodule(k, m).coaction == co.coaction


def test_dictionary_on_dk_modules():
    for d, m in [(HHH, hopf_dk_module(HHH)), (HRR, trivial_dk_module(HRR))]:
        k = build_dk_coring(d)
        co = dk_module_to_comodule(k, m)
        assert check_coring_comodule(co).passed
        assert comodule_to_dk_module(k, co).coaction == m.coaction


def test_trivial_datum_comodule_keeps_its_module():
    k = build_dk_coring(HRR)
    m = trivial_dk_module(HRR)
    co = dk_module_to_comodule(k, m)
    assert co.dim == m.dim
    assert co.module.left == m.action


small = st.integers(-2, 2)


@settings(max_examples=30, deadline=None)
@given(st.lists(small, min_size=4, max_size=4), st.lists(small, min_size=8, max_size=8))
def test_dk_coring_comult_is_left_linear(a, x):
    k = build_dk_coring(HHH)
    c = k.coring
    a = [QQ(v) for v in a]
    x = [QQ(v) for v in x]
    left = c.bimodule.left_matrix(a)
    tleft = c.tensor.as_bimodule().left_matrix(a)
    assert c.delta(left.apply(x)) == tleft.apply(c.delta(x))
    assert c.eps(left.apply(x)) == c.base.mul(a, c.eps(x))


# ---------------------------------------------------------------- the weak coring


@pytest.mark.parametrize("h, dim", [(P2, 8), (Z2, 4), (pair_groupoid_algebra(3), 27)],
                         ids=["kP2", "Q[Z2]", "kP3"])
def test_weak_coring_iso(h, dim):
    iso = build_weak_coring_iso(weak_dk_data(h)[0])
    assert iso.coring.dim == iso.dk_coring.dim == dim
    n = iso.theta.rows
    assert (iso.theta @ iso.theta_tilde).is_identity()
    assert (iso.theta_tilde @ iso.theta).is_identity()
    assert iso.report["theta_bimodule_map"].passed
    assert iso.report["theta_coring_map"].passed
    assert n == dim


def test_hopf_case_projection_is_identity():
    iso = build_weak_coring_iso(weak_dk_data(Z2)[0])
    assert iso.subspace.dim == 4
    assert iso.theta.is_identity()


# ---------------------------------------------------------------- separability


def test_trivial_datum_canonical_certificates_pass():
    for d in (HRR, canonical_dk_data(B_Z2)[3]):
        assert check_induction_separable(d, induction_unit_certificate(d)).passed
        assert check_forgetful_separable(d, multiplication_certificate(d)).passed


def test_unit_certificate_fails_on_p2_at_e12():
    rep = check_induction_separable(HHH, induction_unit_certificate(HHH))
    assert rep["counit_of_certificate"].passed
    law = rep["certificate_central"]
    assert not law.passed
    assert law.witness.indices == (1,)
    assert P2.basis_names[1] == "e12"


def test_single_idempotent_certificate_fails_counit_condition():
    k = build_dk_coring(HHH)
    e11 = B_P2.total.e(0)
    rep = check_induction_separable(k, k.element(e11, e11))
    law = rep["counit_of_certificate"]
    assert not law.passed
    # ε(e11)·e11 = e11 ≠ 1
    assert tuple(law.witness.lhs) == e11


def test_diagonal_certificate_passes_counit_condition_only():
    k = build_dk_coring(HHH)
    H = B_P2.total
    e = vadd(k.element(H.e(0), H.e(0)), k.element(H.e(3), H.e(3)))
    rep = check_induction_separable(k, e)
    assert rep["counit_of_certificate"].passed
    assert rep["certificate_central"].failing_indices()[0] == (1,)


def test_counit_product_fails_colinearity_on_z2():
    d = canonical_dk_data(B_Z2)[0]
    law = check_forgetful_separable(d, multiplication_certificate(d))["gamma_colinear"]
    assert not law.passed
    assert (1, 0) in law.failing_indices()    # (u, 1)


def _induction_solvable(k) -> bool:
    """Rank test on ``a·e = e·a`` for all basis ``a`` and ``ε(e) = 1``."""
    c = k.coring
    A = c.base
    rows = []
    rhs = []
    for j in range(A.dim):
        diff = c.bimodule.left[j] - c.bimodule.right[j]
        rows += [list(r) for r in diff.data]
        rhs += [0] * diff.rows
    rows += [list(r) for r in c.counit.data]
    rhs += list(A.unit)
    augmented = [r + [Fraction(b)] for r, b in zip(rows, rhs)]
    return naive_rank(rows) == naive_rank(augmented)


SEARCH_DATA = DATA_P2 + canonical_dk_data(re_bialgebroid(upper_triangular_algebra()))


@pytest.mark.parametrize("d", SEARCH_DATA, ids=_names(SEARCH_DATA))
def test_induction_search_matches_rank_oracle(d):
    k = build_dk_coring(d)
    cert = search_induction_certificate(k)
    assert (cert is not None) == _induction_solvable(k)
    if cert is not None:
        assert check_induction_separable(k, cert).passed


@pytest.mark.parametrize("d", DATA_P2, ids=_names(DATA_P2))
def test_forgetful_search_verifies(d):
    gamma = search_forgetful_certificate(d)
    assert gamma is not None
    assert check_forgetful_separable(d, gamma).passed


def test_upper_triangular_regular_datum_is_not_induction_separable():
    d = canonical_dk_data(re_bialgebroid(upper_triangular_algebra()))[0]
    assert search_induction_certificate(d) is None


# ---------------------------------------------------------------- morphisms and Example (4)


@pytest.mark.parametrize("h", SMALL[:3], ids=_names(SMALL[:3]))
def test_corpus_morphisms_survive_translation(h):
    b = from_weak_hopf(h)
    for m in corpus_morphisms(b):
        if m.kind == "ca":
            assert check_ca_morphism_b(m.matrix, m.source, m.target).passed
            sw, tw = backward_comodule_algebra(m.source), backward_comodule_algebra(m.target)
            assert check_ca_morphism_w(m.matrix, sw, tw).passed
            fs, ft = forward_comodule_algebra(sw, b), forward_comodule_algebra(tw, b)
            assert check_ca_morphism_b(m.matrix, fs, ft).passed
        else:
            assert check_mc_morphism_b(m.matrix, m.source, m.target).passed
            sw, tw = backward_module_coalgebra(m.source), backward_module_coalgebra(m.target)
            assert check_mc_morphism_w(m.matrix, sw, tw).passed
            fs, ft = forward_module_coalgebra(sw, b), forward_module_coalgebra(tw, b)
            assert check_mc_morphism_b(m.matrix, fs, ft).passed


def test_non_morphisms_are_caught():
    A = regular_comodule_algebra_b(B_P2)
    C = regular_module_coalgebra_b(B_P2)
    swap = Matrix([[0, 0, 0, 1], [0, 1, 0, 0], [0, 0, 1, 0], [1, 0, 0, 0]], QQ)
    rep = check_ca_morphism_b(swap, A, A)
    assert not rep.passed and not rep["colinear"].passed
    assert not check_mc_morphism_b(Matrix.zeros(4, 4, QQ), C, C)["counital"].passed
    ident = Matrix.identity(4, QQ)
    good = check_datum_morphism(DatumMorphism(ident, ident), HHH, HHH)
    assert good.passed
    bad = check_datum_morphism(DatumMorphism(swap, ident), HHH, HHH)
    assert not bad.passed
    assert all(law.name.startswith("A_") for law in bad.failed())


def test_shape_mismatch_is_reported():
    A = regular_comodule_algebra_b(B_P2)
    R = base_comodule_algebra_b(B_P2)
    rep = check_ca_morphism_b(Matrix.identity(4, QQ), R, A)
    assert not rep["shape"].passed


@pytest.mark.parametrize("B", [product_algebra(2), matrix_algebra(2)], ids=["QxQ", "M2"])
def test_tensoring_a_comodule_algebra_with_an_algebra(B):
    for A in (regular_comodule_algebra_b(B_P2), base_comodule_algebra_b(B_P2)):
        assert check_comodule_algebra_b(tensor_comodule_algebra(A, B)).passed
