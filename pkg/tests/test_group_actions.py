import numpy as np
import pytest

from bsd_hilbert import (Moebius, PseudoOrtho, TypeI, TypeII, TypeIII, TypeIV, act, compose, contains,
                         identity, normalize_pair, normalize_to_origin, random_automorphism,
                         sample_interior, stabilizer_element)
from bsd_hilbert.group_actions import act_iv, mobius_act, mobius_derivative, normal_form_iv
from bsd_hilbert.numerics import ginibre

from conftest import DOMAINS, domain_id


def test_identity_acts_trivially():
    for d in DOMAINS:
        z = sample_interior(d, 0)
        np.testing.assert_allclose(act(d, identity(d), z), z, atol=1e-15)


def test_disc_example():
    a, b = 1 / np.sqrt(0.75), -0.5 / np.sqrt(0.75)
    g = Moebius.from_matrix([[a, b], [np.conj(b), np.conj(a)]], 1)
    assert abs(mobius_act(g, np.array([[0.5]]))[0, 0]) < 1e-15
    assert g.is_member()


def test_normalizer_examples():
    d = TypeI(1, 1)
    g = normalize_to_origin(d, 0.0)
    np.testing.assert_allclose(g.matrix, np.eye(2), atol=1e-15)
    g = normalize_to_origin(d, 0.5)
    np.testing.assert_allclose(g.matrix, np.array([[1, -0.5], [-0.5, 1]]) / np.sqrt(0.75), atol=1e-15)
    assert abs(act(d, g, 0.5)[0, 0]) < 1e-15
    g = normalize_to_origin(TypeIV(2), [0.3, 0.1j])
    assert np.abs(act(TypeIV(2), g, [0.3, 0.1j])).max() <= 1e-10
    assert g.is_member()


def test_type_iv_stabilizer_examples():
    n = 3
    th = 0.7
    m = np.eye(n + 2)
    m[n:, n:] = [[np.cos(th), -np.sin(th)], [np.sin(th), np.cos(th)]]
    g = PseudoOrtho(m)
    assert np.abs(act_iv(g, np.zeros(n))).max() < 1e-15
    z = sample_interior(TypeIV(n), 1)
    np.testing.assert_allclose(act_iv(PseudoOrtho(np.eye(n + 2)), z), z, atol=1e-15)
    # a rotation in the last two coordinates multiplies points by a phase
    w = act_iv(g, z)
    np.testing.assert_allclose(np.abs(w), np.abs(z), atol=1e-14)


def test_normalize_pair_examples():
    d = TypeI(1, 1)
    assert normalize_pair(d, 0.3, 0.3)[1].is_zero()
    np.testing.assert_allclose(normalize_pair(d, 0.0, 0.5)[1].sigma, [0.5], atol=1e-15)
    nf = normalize_pair(TypeIV(2), [0, 0], [0.5, 0])[1]
    np.testing.assert_allclose(nf.sigma, [0.5, 0.0], atol=1e-15)


@pytest.mark.parametrize("domain", DOMAINS, ids=domain_id)
def test_normalizer_sends_point_to_origin(domain):
    for seed in range(5):
        z = sample_interior(domain, seed)
        g = normalize_to_origin(domain, z)
        assert g.is_member()
        assert np.abs(act(domain, g, z)).max() <= 1e-10
        assert normalize_pair(domain, z, z)[1].sigma.max() <= 1e-10


@pytest.mark.parametrize("domain", DOMAINS, ids=domain_id)
def test_random_automorphisms_preserve_domain(domain):
    for seed in range(5):
        g = random_automorphism(domain, seed)
        assert g.is_member()
        for s in range(3):
            w = act(domain, g, sample_interior(domain, 100 + s))
            assert contains(domain, w)
            if domain.family == "II":
                assert np.linalg.norm(w + w.T) <= 1e-12
            if domain.family == "III":
                assert np.linalg.norm(w - w.T) <= 1e-12


@pytest.mark.parametrize("domain", DOMAINS, ids=domain_id)
def test_compose_is_action_composition(domain):
    g, h = random_automorphism(domain, 1), random_automorphism(domain, 2)
    z = sample_interior(domain, 3)
    np.testing.assert_allclose(act(domain, compose(g, h), z), act(domain, g, act(domain, h, z)),
                               atol=1e-10)


def test_compose_rejects_mixed_groups():
    with pytest.raises(TypeError):
        compose(identity(TypeI(1, 1)), identity(TypeIV(2)))


@pytest.mark.parametrize("domain", [TypeI(1, 1), TypeI(2, 3), TypeIII(2), TypeII(4)], ids=domain_id)
def test_mobius_derivative(domain, rng):
    z = sample_interior(domain, 0)
    g = identity(domain)
    xi = ginibre(rng, max(domain.shape))[:domain.shape[0], :domain.shape[1]]
    np.testing.assert_allclose(mobius_derivative(g, z, xi), xi, atol=1e-15)
    for seed in range(5):
        g = random_automorphism(domain, seed)
        z = sample_interior(domain, 10 + seed)
        h = 1e-5
        fd = (mobius_act(g, z + h * xi) - mobius_act(g, z - h * xi)) / (2 * h)
        exact = mobius_derivative(g, z, xi)
        assert np.linalg.norm(fd - exact) <= 1e-6 * np.linalg.norm(exact)


@pytest.mark.parametrize("domain", DOMAINS, ids=domain_id)
def test_stabilizer_fixes_origin_and_invariants(domain):
    rng = np.random.default_rng(7)
    zero = np.zeros(domain.shape, dtype=complex)
    z = sample_interior(domain, 4)
    for _ in range(3):
        k = stabilizer_element(domain, rng)
        assert np.abs(act(domain, k, zero)).max() <= 1e-15
        np.testing.assert_allclose(normalize_pair(domain, zero, act(domain, k, z))[1].sigma,
                                   normalize_pair(domain, zero, z)[1].sigma, atol=1e-12)


def test_type_iv_normal_form_of_canonical_point():
    np.testing.assert_allclose(normal_form_iv([0.4, 0.2j, 0]), [0.4, 0.2], atol=1e-15)


def test_exterior_points_are_rejected():
    with pytest.raises(ValueError):
        normalize_to_origin(TypeI(1, 1), 1.0)
    with pytest.raises(ValueError):
        normalize_pair(TypeIV(2), [0, 0], [1.2, 1.2])


def test_member_check_detects_non_members():
    g = Moebius.from_matrix(2 * np.eye(2), 1)
    assert not g.is_member()
    m = np.eye(4)
    m[0, 0] = -1
    assert not PseudoOrtho(m).is_member()
