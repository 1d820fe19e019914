import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from bsd_hilbert import (TypeI, TypeII, TypeIII, TypeIV, bergman_norm, caratheodory_norm,
                         disc_distance, distance_from_normal_form, finsler_norm, hilbert_distance,
                         metric_report, sample_interior, sigma_matrix)
from bsd_hilbert.domains import _skew_diag

from conftest import DOMAINS, domain_id

LN3 = np.log(3.0)


def test_disc_distance():
    assert disc_distance(0.0) == 0.0
    assert abs(disc_distance(0.5) - LN3) < 1e-15
    with pytest.raises(ValueError):
        disc_distance(1.0)


def test_distance_examples():
    assert abs(hilbert_distance(TypeI(1, 1), 0.0, 0.5) - LN3) < 1e-15
    c, r = 0.125, np.sqrt(0.5)
    expected = np.log((1 + c + r) / (1 + c - r))
    assert abs(hilbert_distance(TypeIV(2), [0, 0], [0.5, 0]) - expected) < 1e-14
    got = hilbert_distance(TypeI(2, 2), np.zeros((2, 2)), np.diag([0.6, 0.3]))
    assert abs(got - (np.log(4) + np.log(13 / 7))) < 1e-14
    assert abs(got - 2.0053336) < 1e-7


@pytest.mark.parametrize("domain", DOMAINS, ids=domain_id)
def test_reflexive_and_symmetric(domain):
    x, y = sample_interior(domain, 1), sample_interior(domain, 2)
    assert hilbert_distance(domain, x, x) == pytest.approx(0.0, abs=1e-12)
    assert abs(hilbert_distance(domain, x, y) - hilbert_distance(domain, y, x)) < 1e-10


def test_type_ii_counts_both_singular_values_of_a_block():
    d = TypeII(4)
    z = _skew_diag(4, [0.5, 0.2])
    expected = 2 * (disc_distance(0.5) + disc_distance(0.2))
    assert abs(hilbert_distance(d, np.zeros((4, 4)), z) - expected) < 1e-14


@settings(max_examples=60, deadline=None)
@given(st.lists(st.floats(0.0, 0.99), min_size=2, max_size=2),
       st.lists(st.floats(0.0, 0.99), min_size=2, max_size=2))
def test_additive_along_diagonal(s, t):
    # 0, Sigma(s), Sigma(t) with s <= t lie on a geodesic-like diagonal segment
    lo, hi = np.minimum(s, t), np.maximum(s, t)
    d = TypeI(2, 2)
    zero = np.zeros((2, 2))
    a = hilbert_distance(d, zero, np.diag(lo))
    b = hilbert_distance(d, np.diag(lo), np.diag(hi))
    c = hilbert_distance(d, zero, np.diag(hi))
    assert abs(a + b - c) <= 1e-9 * max(1.0, c)


def test_normal_form_rejects_boundary():
    with pytest.raises(ValueError):
        distance_from_normal_form(TypeI(1, 1), [1.0])
    with pytest.raises(ValueError):
        distance_from_normal_form(TypeIV(2), [1 / np.sqrt(2), 1 / np.sqrt(2)])
    with pytest.raises(ValueError):
        distance_from_normal_form(TypeI(1, 1), [-0.1])


def test_norm_examples():
    d = TypeI(2, 2)
    xi = np.diag([0.3, 0.2])
    assert finsler_norm(d, xi) == pytest.approx(1.0, abs=1e-15)
    assert caratheodory_norm(d, xi) == pytest.approx(0.3, abs=1e-15)
    assert bergman_norm(d, xi) == pytest.approx(np.sqrt(0.13), abs=1e-15)
    assert finsler_norm(TypeIV(3), [0.3, 0, 0]) == pytest.approx(2 * np.sqrt(2) * 0.3, abs=1e-15)
    assert caratheodory_norm(TypeIV(2), [0.3, 0.1j]) == pytest.approx(0.4 / np.sqrt(2), abs=1e-15)
    for dom in (TypeI(2, 3), TypeIV(3)):
        zero = np.zeros(dom.shape)
        assert finsler_norm(dom, zero) == 0.0 and caratheodory_norm(dom, zero) == 0.0


def test_rank_one_norms_collapse():
    d = TypeI(2, 3)
    xi = sigma_matrix((2, 3), [1.0])
    assert bergman_norm(d, xi) == caratheodory_norm(d, xi) == finsler_norm(d, xi) / 2


def test_undefined_norms_are_none():
    assert caratheodory_norm(TypeII(4), np.zeros((4, 4))) is None
    assert bergman_norm(TypeIII(2), np.zeros((2, 2))) is None
    assert bergman_norm(TypeIV(2), [0, 0]) is None


@pytest.mark.parametrize("domain", DOMAINS, ids=domain_id)
def test_finsler_is_derivative_of_distance(domain):
    zero = np.zeros(domain.shape, dtype=complex)
    xi = sample_interior(domain, 5)
    t = 1e-5
    assert abs(hilbert_distance(domain, zero, t * xi) / t - finsler_norm(domain, xi)) <= 10 * t


def test_metric_report():
    d = TypeI(2, 2)
    rep = metric_report(d, np.zeros((2, 2)), np.diag([0.6, 0.3]), xi=np.diag([0.6, 0.3]))
    out = rep.to_dict()
    assert out["sigma"] == pytest.approx([0.6, 0.3], abs=1e-15)
    assert out["finsler"] == pytest.approx(1.8, abs=1e-14)
    assert "oracle" not in out
    assert metric_report(TypeII(2), np.zeros((2, 2)), np.zeros((2, 2))).to_dict()["distance"] == 0.0


@pytest.mark.parametrize("domain", [TypeI(2, 3), TypeII(5), TypeIII(3), TypeIV(4)], ids=domain_id)
def test_symmetric_near_the_boundary(domain):
    for seed in range(20):
        x = sample_interior(domain, seed, radius=0.95)
        y = sample_interior(domain, 100 + seed, radius=0.9999)
        dxy, dyx = hilbert_distance(domain, x, y), hilbert_distance(domain, y, x)
        assert abs(dxy - dyx) <= 1e-12 * max(1.0, dxy)


def test_near_boundary_branch_agrees_with_normal_form():
    # points whose normal form sits just on either side of the branch switch
    d = TypeI(1, 2)
    zero = np.zeros((1, 2))
    for s in (0.74, 0.76, 0.9):
        z = np.array([[s, 0.0]])
        assert abs(hilbert_distance(d, zero, z) - disc_distance(s)) <= 1e-14
