import numpy as np
import pytest

from focklat import algebra, fock
from focklat.algebra import BCHParams, Ordering
from focklat.errors import BranchError, RangeError, SingularParameterError


@pytest.fixture(scope="module")
def gen64():
    return algebra.su11_generators(64)


def test_generator_matrix_elements(gen64):
    n = 64
    assert np.allclose(np.diag(gen64.k0.mat), np.arange(n) + 0.5)
    for j in range(n - 1):
        assert gen64.kplus.mat[j + 1, j] == j + 1
        assert gen64.kminus.mat[j, j + 1] == j + 1
    assert gen64.bargmann_k == 0.5


def test_lowest_weight_action(gen64):
    vac = fock.vacuum(64)
    assert np.allclose(gen64.k0.apply(vac), 0.5 * vac)
    assert np.allclose(gen64.kminus.apply(vac), np.zeros(64))
    cubed = gen64.kplus @ gen64.kplus @ gen64.kplus
    assert np.allclose(cubed.apply(vac), 6.0 * fock.basis_state(64, 3))


def test_su11_commutators(gen64):
    c1 = fock.commutator(gen64.k0, gen64.kplus)
    keep = 64 - c1.edge_band
    assert np.abs(c1.mat[:keep, :keep] - gen64.kplus.mat[:keep, :keep]).max() <= 1e-12
    c2 = fock.commutator(gen64.k0, gen64.kminus)
    keep = 64 - c2.edge_band
    assert np.abs(c2.mat[:keep, :keep] + gen64.kminus.mat[:keep, :keep]).max() <= 1e-12
    c3 = fock.commutator(gen64.kplus, gen64.kminus)
    keep = 64 - c3.edge_band
    assert np.abs(c3.mat[:keep, :keep] + 2.0 * gen64.k0.mat[:keep, :keep]).max() <= 1e-12


def test_phase_operator_shifts():
    ph = algebra.phase_operators(8)
    assert np.allclose(ph.v.apply(fock.basis_state(8, 3)), fock.basis_state(8, 2))
    assert np.allclose(ph.v.apply(fock.vacuum(8)), np.zeros(8))
    assert np.allclose(ph.vdag.apply(fock.vacuum(8)), fock.basis_state(8, 1))
    assert np.allclose(ph.vdag.apply(fock.basis_state(8, 7)), np.zeros(8))


def test_phase_operator_unitarity_defect():
    n = 32
    ph = algebra.phase_operators(n)
    right = (ph.v @ ph.vdag).mat
    assert np.array_equal(right[: n - 1, : n - 1], np.eye(n - 1, dtype=complex))
    left = (ph.vdag @ ph.v).mat
    expected = np.eye(n, dtype=complex)
    expected[0, 0] = 0.0
    assert np.array_equal(left, expected)


def test_lowering_is_weighted_shift(gen64):
    # K- equals (K0 + 1/2) composed with the down-shift, exactly
    n = 64
    ph = algebra.phase_operators(n)
    inv = np.diag(1.0 / (np.arange(n) + 1.0))
    assert np.abs(inv @ gen64.kminus.mat - ph.v.mat).max() <= 1e-15
    a = fock.annihilation(n)
    scale = np.diag(1.0 / np.sqrt(np.arange(n) + 1.0))
    assert np.abs(scale @ a.mat - ph.v.mat).max() <= 1e-15


def test_map_identity_params():
    b = BCHParams(plus=0.0, zero=1.0, minus=0.0, ordering=Ordering.ANTINORMAL_FIRST)
    a = algebra.bch_antinormal_to_normal(b)
    assert (a.plus, a.zero, a.minus) == (0.0, 1.0, 0.0)
    assert a.ordering is Ordering.NORMAL_FIRST
    back = algebra.bch_normal_to_antinormal(a)
    assert (back.plus, back.zero, back.minus) == (0.0, 1.0, 0.0)


@pytest.mark.parametrize("phi", [0.3, 0.7, 2.0, -1.1])
def test_map_phase_state_params(phi):
    w = np.exp(1j * phi)
    b = BCHParams(plus=1.0, zero=w, minus=0.0, ordering=Ordering.ANTINORMAL_FIRST)
    a = algebra.bch_antinormal_to_normal(b)
    assert a.plus == pytest.approx(w, abs=1e-15)
    assert a.zero == pytest.approx(w, abs=1e-15)
    assert a.minus == 0.0
    back = algebra.bch_normal_to_antinormal(a)
    assert back.plus == pytest.approx(1.0, abs=1e-14)
    assert back.zero == pytest.approx(w, abs=1e-14)
    assert back.minus == 0.0


def test_map_symmetric_example():
    b = BCHParams(plus=0.5, zero=1.0, minus=0.5, ordering=Ordering.ANTINORMAL_FIRST)
    a = algebra.bch_antinormal_to_normal(b)
    assert a.plus == pytest.approx(2.0 / 3.0, rel=1e-15)
    assert a.zero == pytest.approx(16.0 / 9.0, rel=1e-15)
    assert a.minus == pytest.approx(2.0 / 3.0, rel=1e-15)
    back = algebra.bch_normal_to_antinormal(a)
    assert back.plus == pytest.approx(0.5, rel=1e-14)
    assert back.zero == pytest.approx(1.0, rel=1e-14)
    assert back.minus == pytest.approx(0.5, rel=1e-14)


def test_map_round_trip_random():
    rng = np.random.default_rng(11)
    worst = 0.0
    for _ in range(200):
        b = BCHParams(
            plus=0.3 * np.sqrt(rng.uniform()) * np.exp(2j * np.pi * rng.uniform()),
            zero=np.exp(1j * rng.uniform(-np.pi, np.pi)),
            minus=0.3 * np.sqrt(rng.uniform()) * np.exp(2j * np.pi * rng.uniform()),
            ordering=Ordering.ANTINORMAL_FIRST,
        )
        a = algebra.bch_antinormal_to_normal(b)
        back = algebra.bch_normal_to_antinormal(a)
        worst = max(worst, abs(back.plus - b.plus), abs(back.zero - b.zero),
                    abs(back.minus - b.minus))
    assert worst <= 1e-13


def test_map_singularities():
    with pytest.raises(SingularParameterError):
        algebra.bch_antinormal_to_normal(
            BCHParams(plus=1.0, zero=1.0, minus=1.0, ordering=Ordering.ANTINORMAL_FIRST))
    with pytest.raises(SingularParameterError):
        algebra.bch_normal_to_antinormal(
            BCHParams(plus=1.0, zero=1.0, minus=1.0, ordering=Ordering.NORMAL_FIRST))
    with pytest.raises(BranchError):
        BCHParams(plus=0.0, zero=0.0, minus=0.0, ordering=Ordering.NORMAL_FIRST)
    with pytest.raises(SingularParameterError):
        algebra.bch_antinormal_to_normal(
            BCHParams(plus=0.0, zero=1.0, minus=0.0, ordering=Ordering.NORMAL_FIRST))


def test_verify_bch_identity_params():
    b = BCHParams(plus=0.0, zero=1.0, minus=0.0, ordering=Ordering.ANTINORMAL_FIRST)
    assert algebra.verify_bch(b, 64) <= 1e-13


def test_verify_bch_phase_state_params():
    b = BCHParams(plus=1.0, zero=np.exp(0.7j), minus=0.0, ordering=Ordering.ANTINORMAL_FIRST)
    assert algebra.verify_bch(b, 64, edge_exclude=16) <= 1e-9


def test_verify_bch_moderate_random():
    # |X+-| <= 0.15 keeps the compared entries well conditioned in double
    # precision; larger magnitudes are exercised by the acceptance suite
    rng = np.random.default_rng(5)
    worst = 0.0
    for _ in range(10):
        b = BCHParams(
            plus=0.15 * np.sqrt(rng.uniform()) * np.exp(2j * np.pi * rng.uniform()),
            zero=np.exp(1j * rng.uniform(-2.9, 2.9)),
            minus=0.15 * np.sqrt(rng.uniform()) * np.exp(2j * np.pi * rng.uniform()),
            ordering=Ordering.ANTINORMAL_FIRST,
        )
        worst = max(worst, algebra.verify_bch(b, 64))
    assert worst <= 1e-9


def test_verify_bch_normal_first_input():
    a = BCHParams(plus=0.1 + 0.05j, zero=np.exp(0.4j), minus=-0.08j,
                  ordering=Ordering.NORMAL_FIRST)
    assert algebra.verify_bch(a, 48) <= 1e-9


def test_rotation_conjugation():
    assert algebra.rotation_conjugation_check(0.0, 16) == 0.0
    assert algebra.rotation_conjugation_check(1.0, 64, edge_exclude=16) <= 1e-9
    assert algebra.rotation_conjugation_check(3.0, 256, edge_exclude=64) <= 1e-9


def test_rotation_conjugation_range_guard():
    with pytest.raises(RangeError):
        algebra.rotation_conjugation_check(3.0, 16)
