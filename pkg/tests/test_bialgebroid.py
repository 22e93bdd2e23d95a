import pytest
from hypothesis import given, settings, strategies as st

from weakdk.bialgebroid import (Bialgebroid, check_bialgebroid, commutative_separable_pair,
                                from_weak_hopf, re_bialgebroid, source_absorbs_report,
                                to_weak_bialgebra, triangle_action)
from weakdk.corpus import (cyclic_group_algebra, ground_algebra, pair_groupoid_algebra,
                           product_algebra, upper_triangular_algebra, weak_hopf_corpus)
from weakdk.exactlin import QQ, Matrix
from weakdk.weakhopf import check_weak_bialgebra

CORPUS = weak_hopf_corpus()
BIALGEBROIDS = {h.name: from_weak_hopf(h) for h in CORPUS}


@pytest.mark.parametrize("name", sorted(BIALGEBROIDS))
def test_corpus_bialgebroids_pass(name):
    b = BIALGEBROIDS[name]
    assert check_bialgebroid(b).passed
    assert source_absorbs_report(b).passed


@pytest.mark.parametrize("name", sorted(BIALGEBROIDS))
def test_counit_is_pi_left_and_comult_is_can_delta(name):
    b = BIALGEBROIDS[name]
    h = b.weak_hopf
    assert b.re_ring.source @ b.counit == h.pi_left
    assert b.comult == b.tensor.space.projection @ h.coalgebra.comult


@pytest.mark.parametrize("name", sorted(BIALGEBROIDS))
def test_round_trip_to_weak_bialgebra(name):
    b = BIALGEBROIDS[name]
    w = to_weak_bialgebra(b)
    assert w.coalgebra.comult == b.weak_hopf.coalgebra.comult
    assert w.coalgebra.counit == b.weak_hopf.coalgebra.counit


@pytest.mark.parametrize("n, dim", [(2, 8), (3, 27)])
def test_pair_groupoid_tensor_dimension(n, dim):
    assert from_weak_hopf(pair_groupoid_algebra(n)).tensor.dim == dim
    # one block per object: (row block) × (column block) = n · n per object
    assert dim == n * n * n


def test_hopf_case_is_an_ordinary_bialgebra():
    b = from_weak_hopf(cyclic_group_algebra(2))
    assert b.base.dim == 1
    assert b.tensor.dim == 4


def test_p2_source_equals_target():
    b = BIALGEBROIDS["kP2"]
    assert b.re_ring.source == b.re_ring.target
    # ε̃(e_xy) = e_xx
    for f in range(4):
        x, _ = divmod(f, 2)
        assert b.re_ring.source.apply(b.counit.column(f)) == b.total.e(x * 3)


def test_triangle_action():
    b = BIALGEBROIDS["kP2"]
    R, H = b.base, b.total
    for k in range(R.dim):
        assert triangle_action(b, H.unit, R.e(k)) == R.e(k)
    e22 = b.separability.coords(H.e(3))
    e11 = b.separability.coords(H.e(0))
    assert triangle_action(b, H.e(1), e22) == e11


def test_re_triangle_action_is_r_a_rbar():
    R = upper_triangular_algebra()
    b = re_bialgebroid(R)
    m = R.dim
    for k in range(m * m):
        r, rbar = divmod(k, m)
        for a in range(m):
            expect = R.mul(R.mul(R.e(r), R.e(a)), R.e(rbar))
            assert triangle_action(b, b.total.e(k), R.e(a)) == expect


def test_re_examples():
    assert re_bialgebroid(ground_algebra()).dim == 1
    b = re_bialgebroid(product_algebra(2))
    assert (b.dim, b.tensor.dim) == (4, 8)
    assert check_bialgebroid(re_bialgebroid(upper_triangular_algebra())).passed


def test_re_with_canonical_idempotent_gives_weak_bialgebra():
    b = re_bialgebroid(product_algebra(2))
    w = to_weak_bialgebra(b, commutative_separable_pair(b.base))
    assert check_weak_bialgebra(w).passed


def test_swapped_counit_breaks_counit_absorption():
    R = upper_triangular_algebra()
    b = re_bialgebroid(R)
    m = R.dim
    swapped = Matrix.from_columns([R.mult[k % m][k // m] for k in range(m * m)], QQ, m)
    bad = Bialgebroid(b.re_ring, b.comult, swapped, b.tensor, name="swapped")
    rep = check_bialgebroid(bad)
    for law in ("counit_absorbs_source", "counit_absorbs_target"):
        assert not rep[law].passed
        assert rep[law].witness is not None


def test_source_target_commute_on_all_pairs():
    for b in BIALGEBROIDS.values():
        H, ring = b.total, b.re_ring
        for i in range(b.base.dim):
            for j in range(b.base.dim):
                s, t = ring.s(b.base.e(i)), ring.t(b.base.e(j))
                assert H.mul(s, t) == H.mul(t, s)


@settings(max_examples=5, deadline=None)
@given(st.integers(1, 4))
def test_product_re_bialgebroids_pass(n):
    b = re_bialgebroid(product_algebra(n), verify=False)
    assert check_bialgebroid(b).passed
    assert b.tensor.dim == n ** 3
