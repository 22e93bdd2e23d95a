import pytest
from hypothesis import given, settings, strategies as st

from weakdk.corpus import (cyclic_group_algebra, discrete_groupoid_algebra,
                           pair_groupoid_algebra, weak_hopf_corpus)
from weakdk.exactlin import QQ, GF, Matrix
from weakdk.findim import BalancedTensor, regular_bimodule
from weakdk.weakhopf import (WeakHopf, check_weak_bialgebra, check_weak_hopf, extract_base,
                             lemma_report, pi_maps, section_sigma, sigma_ambient)

from mutations import mutation_set

CORPUS = weak_hopf_corpus()


@pytest.mark.parametrize("h", CORPUS, ids=lambda h: h.name)
def test_corpus_passes_every_axiom(h):
    rep = check_weak_hopf(h)
    assert rep.passed, rep.summary()


@pytest.mark.parametrize("h", CORPUS, ids=lambda h: h.name)
def test_lemma_suite(h):
    rep = lemma_report(h)
    assert rep.passed, rep.summary()


def test_z2_is_ordinary_hopf():
    h = cyclic_group_algebra(2)
    assert h.delta_one() == {0: 1}
    u = h.e(1)
    assert pi_maps(h, u) == (h.one, h.one)


def test_p2_unit_coproduct_is_not_one_tensor_one():
    h = pair_groupoid_algebra(2)
    e11, e22 = 0, 3
    assert h.delta_one() == {e11 * 4 + e11: 1, e22 * 4 + e22: 1}


def test_p2_identity_antipode_fails_at_e12():
    h = pair_groupoid_algebra(2)
    bad = WeakHopf(h.algebra, h.coalgebra, Matrix.identity(4, QQ), name="bad")
    rep = check_weak_hopf(bad)
    assert not rep.passed
    assert rep["antipode_invertible"].passed
    law = rep["antipode_left"]
    assert law.witness.indices == (1,)
    assert h.basis_names[law.witness.indices[0]] == "e12"


def test_singular_antipode_is_a_failure_not_a_crash():
    h = pair_groupoid_algebra(2)
    bad = WeakHopf(h.algebra, h.coalgebra, Matrix.zeros(4, 4, QQ))
    assert bad.antipode_inv is None
    assert not check_weak_hopf(bad)["antipode_invertible"].passed
    with pytest.raises(ZeroDivisionError):
        bad.S_inv(h.one)


def test_pi_maps_on_p2():
    h = pair_groupoid_algebra(2)
    e11, e12, e22 = h.e(0), h.e(1), h.e(3)
    assert pi_maps(h, e12)[0] == e11
    assert pi_maps(h, e22) == (e22, e22)


def test_pi_maps_are_idempotent():
    for h in CORPUS:
        assert h.pi_left @ h.pi_left == h.pi_left
        assert h.pi_right @ h.pi_right == h.pi_right


def test_base_of_z2():
    base = extract_base(cyclic_group_algebra(2))
    assert base.dim == 1
    assert base.idempotent_e == (1,)
    assert base.phi(base.r_algebra.unit) == 1


def test_base_of_p2():
    h = pair_groupoid_algebra(2)
    base = extract_base(h)
    assert base.dim == 2
    assert set(base.r_algebra.basis_names) == {"e11", "e22"}
    # e = e11⊗e11 + e22⊗e22 in R⊗R coordinates
    assert base.idempotent_e == (1, 0, 0, 1)
    assert base.frobenius_phi == (1, 1)


def test_base_of_p3_has_dim_3():
    assert extract_base(pair_groupoid_algebra(3)).dim == 3


@pytest.mark.parametrize("h", [cyclic_group_algebra(n) for n in (1, 3, 5)],
                         ids=lambda h: h.name)
def test_hopf_case_has_one_dimensional_base(h):
    assert extract_base(h).dim == 1


@settings(max_examples=8, deadline=None)
@given(st.integers(1, 4))
def test_groupoid_base_dimension_counts_objects(n):
    assert extract_base(pair_groupoid_algebra(n)).dim == n
    assert extract_base(discrete_groupoid_algebra(n)).dim == n


def test_pi_left_is_target_identity():
    h = pair_groupoid_algebra(3)
    for f in range(9):
        x, _ = divmod(f, 3)
        assert pi_maps(h, h.e(f))[0] == h.e(x * 3 + x)


def test_section_over_ground_field_is_identity():
    h = cyclic_group_algebra(2)
    base = extract_base(h)
    m = regular_bimodule(base.r_algebra)
    t = BalancedTensor(m, m)
    assert section_sigma(base, t).is_identity()


def test_section_on_p2_coring_tensor():
    from weakdk.bialgebroid import from_weak_hopf
    h = pair_groupoid_algebra(2)
    b = from_weak_hopf(h)
    t = b.coring.tensor
    sigma = section_sigma(b.separability, t)
    assert t.dim == 8
    assert (t.space.projection @ sigma).is_identity()
    # agrees with h⊗h′ ↦ Σ_z h·e_zz ⊗ e_zz·h′ on every ambient basis vector
    for k in range(16):
        amb = sigma_ambient(b.separability, t, {k: QQ.one})
        via = sigma.apply(t.project(tuple(1 if i == k else 0 for i in range(16))))
        assert t.project(tuple(amb.get(i, 0) for i in range(16))) == t.project(via)


def test_section_of_unit_tensor_is_e():
    base = extract_base(pair_groupoid_algebra(2))
    R = base.r_algebra
    m = regular_bimodule(R)
    t = BalancedTensor(m, m)
    one = t.pair(R.unit, R.unit)
    assert section_sigma(base, t).apply(one) == base.idempotent_e


def test_fifty_mutations_are_caught():
    for name, table, index, mutant in mutation_set(CORPUS):
        rep = check_weak_hopf(mutant)
        assert not rep.passed, (name, table, index)
        assert all(law.witness is not None for law in rep.failed())


def test_finite_field_corpus():
    h = pair_groupoid_algebra(2, GF(5))
    assert check_weak_hopf(h).passed
    assert extract_base(h).dim == 2


def test_weak_bialgebra_checker_ignores_antipode():
    h = pair_groupoid_algebra(2)
    bad = WeakHopf(h.algebra, h.coalgebra, Matrix.identity(4, QQ))
    assert check_weak_bialgebra(bad).passed
