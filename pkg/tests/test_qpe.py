import cmath
import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from redheffer import qpe
from redheffer.errors import DomainError, ResourceError
from redheffer.inequality import SUCCESS_BOUND


def brute_force_probs(n, w):
    """|2^-n sum_y exp(2 pi i (w - x/2^n) y)|^2 for every x, in plain Python."""
    size = 2**n
    out = []
    for x in range(size):
        acc = sum(cmath.exp(2j * math.pi * (w - x / size) * y) for y in range(size))
        out.append(abs(acc / size) ** 2)
    return out


def random_state(rng, n):
    v = rng.normal(size=2**n) + 1j * rng.normal(size=2**n)
    return qpe.StateVector(n, v / np.linalg.norm(v))


# ---------------------------------------------------------------- delta


@pytest.mark.parametrize(
    "w, n, x, expected",
    [(0.3, 2, 1, 0.05), (0.9, 2, 0, -0.1), (0.5, 1, 0, 0.5), (0.0, 1, 1, 0.5), (1.3, 2, 1, 0.05)],
)
def test_delta_values(w, n, x, expected):
    assert qpe.delta(w, n, x) == pytest.approx(expected, abs=1e-15)


@settings(max_examples=300, deadline=None)
@given(w=st.floats(-5, 5), n=st.integers(1, 12), data=st.data())
def test_delta_is_nearest_representative(w, n, data):
    x = data.draw(st.integers(0, 2**n - 1))
    d = qpe.delta(w, n, x)
    assert -0.5 < d <= 0.5
    shifted = d - (w - x / 2**n)
    assert shifted == pytest.approx(round(shifted), abs=1e-9)


def test_delta_domain():
    with pytest.raises(DomainError):
        qpe.delta(0.1, 2, 4)
    with pytest.raises(DomainError):
        qpe.delta(0.1, 2, -1)


# ---------------------------------------------------------------- states


def test_phase_state_values():
    s = 1 / math.sqrt(2)
    assert np.allclose(qpe.phase_state(1, 0.0).amplitudes, [s, s], atol=1e-15)
    assert np.allclose(qpe.phase_state(1, 0.5).amplitudes, [s, -s], atol=1e-15)
    assert np.allclose(qpe.phase_state(2, 0.25).amplitudes, np.array([1, 1j, -1, -1j]) / 2, atol=1e-15)


@pytest.mark.parametrize("n, w", [(1, 0.3), (4, 0.123456), (9, 0.999), (10, 1 / 3)])
def test_phase_state_is_a_product_state(n, w):
    # qubit j is bit j of the index, so the last kron factor is qubit 0
    state = np.array([1.0 + 0j])
    for j in reversed(range(n)):
        state = np.kron(state, np.array([1, cmath.exp(2j * math.pi * 2**j * w)]) / math.sqrt(2))
    assert np.max(np.abs(qpe.phase_state(n, w).amplitudes - state)) < 1e-12


def test_phase_state_large_register_phase_is_exact():
    n, w = 20, 0.1234567890123
    amps = qpe.phase_state(n, w).amplitudes
    scale = 2 ** (n / 2)
    for y in (2**n - 1, 2**n - 12345, 777777):
        turns = float((Fraction(w) * y) % 1)
        expected = cmath.exp(2j * math.pi * turns)
        assert abs(amps[y] * scale - expected) < 1e-14


def test_state_vector_validation():
    with pytest.raises(DomainError):
        qpe.StateVector(1, [1.0, 1.0])
    with pytest.raises(DomainError):
        qpe.StateVector(2, [1.0, 0.0])
    with pytest.raises(ResourceError):
        qpe.phase_state(25, 0.1)
    with pytest.raises(DomainError):
        qpe.phase_state(0, 0.1)


def test_state_vector_is_immutable():
    s = qpe.phase_state(2, 0.1)
    with pytest.raises(ValueError):
        s.amplitudes[0] = 0


# ---------------------------------------------------------------- transforms


@pytest.mark.parametrize("n", [1, 3, 6])
def test_inverse_qft_recovers_basis_state(n):
    for x0 in range(0, 2**n, max(1, 2**n // 7)):
        out = qpe.inverse_qft(qpe.phase_state(n, x0 / 2**n))
        target = np.zeros(2**n)
        target[x0] = 1
        assert np.max(np.abs(out.amplitudes - target)) < 1e-12


@pytest.mark.parametrize("n", [1, 4, 8])
def test_transforms_of_zero_state_are_uniform(n):
    zero = qpe.StateVector.basis(n, 0)
    uniform = np.full(2**n, 2 ** (-n / 2))
    assert np.max(np.abs(qpe.inverse_qft(zero).amplitudes - uniform)) < 1e-12
    assert np.max(np.abs(qpe.qft(zero).amplitudes - uniform)) < 1e-12


@pytest.mark.parametrize("n", [2, 5])
def test_qft_of_basis_state_is_phase_state(n):
    for x0 in range(2**n):
        out = qpe.qft(qpe.StateVector.basis(n, x0))
        assert np.max(np.abs(out.amplitudes - qpe.phase_state(n, x0 / 2**n).amplitudes)) < 1e-12


def test_unitarity_random_states():
    rng = np.random.default_rng(20240611)
    for i in range(1000):
        n = 1 + i % 10
        s = random_state(rng, n)
        f = qpe.qft(s)
        assert abs(f.norm() - s.norm()) < 1e-10
        assert np.max(np.abs(qpe.inverse_qft(f).amplitudes - s.amplitudes)) < 1e-12
        assert np.max(np.abs(qpe.qft(qpe.inverse_qft(s)).amplitudes - s.amplitudes)) < 1e-12


@pytest.mark.parametrize("n", [1, 2, 5, 8])
def test_fft_path_matches_direct_sum(n):
    rng = np.random.default_rng(n)
    s = random_state(rng, n)
    for fn in (qpe.qft, qpe.inverse_qft):
        fast, ref = fn(s), fn(s, method="direct")
        assert np.max(np.abs(fast.amplitudes - ref.amplitudes)) < 1e-12


def test_unknown_method():
    with pytest.raises(DomainError):
        qpe.qft(qpe.phase_state(1, 0), method="gates")


# ---------------------------------------------------------------- probabilities


@pytest.mark.parametrize(
    "n, w, x, expected",
    [
        (2, 1 / 8, 0, 1 / (16 * math.sin(math.pi / 8) ** 2)),
        (2, 1 / 8, 2, 1 / (16 * math.sin(3 * math.pi / 8) ** 2)),
        (3, 5 / 8, 5, 1.0),
    ],
)
def test_closed_form_values(n, w, x, expected):
    assert qpe.closed_form_prob(n, w, x) == pytest.approx(expected, abs=1e-15)
    assert qpe.closed_form_prob(n, w, x) == pytest.approx(brute_force_probs(n, w)[x], abs=1e-14)


def test_closed_form_quoted_digits():
    assert qpe.closed_form_prob(2, 1 / 8, 0) == pytest.approx(0.4267767, abs=1e-7)
    assert qpe.closed_form_prob(2, 1 / 8, 2) == pytest.approx(0.0732233, abs=1e-7)


@pytest.mark.parametrize(
    "n, w, expected",
    [
        (2, 1 / 8, [0.4267767, 0.4267767, 0.0732233, 0.0732233]),
        (2, 1 / 4, [0, 1, 0, 0]),
        (1, 1 / 4, [0.5, 0.5]),
    ],
)
def test_outcome_distribution_values(n, w, expected):
    dist = qpe.outcome_distribution(n, w)
    assert np.allclose(dist.probs, expected, atol=1e-7)
    assert np.allclose(dist.probs, brute_force_probs(n, w), atol=1e-14)


def test_oracle_equivalence_random_pairs():
    rng = np.random.default_rng(7)
    for _ in range(100):
        n = int(rng.integers(1, 11))
        w = float(rng.random())
        probs = qpe.outcome_distribution(n, w).probs
        closed = [qpe.closed_form_prob(n, w, x) for x in range(2**n)]
        assert np.max(np.abs(probs - closed)) < 1e-9
        assert abs(probs.sum() - 1) < 1e-10
        assert np.all((probs >= 0) & (probs <= 1))


@pytest.mark.parametrize("n, w", [(3, 0.3), (5, 0.77), (6, 0.015625)])
def test_direct_and_brute_force_agree(n, w):
    direct = qpe.outcome_distribution(n, w, method="direct").probs
    assert np.allclose(direct, brute_force_probs(n, w), atol=1e-12)


# ---------------------------------------------------------------- success probability


def test_success_worked_value():
    rep = qpe.success_probability(2, 1 / 8)
    assert (rep.x_lo, rep.x_hi) == (0, 1)
    assert rep.success_prob == pytest.approx((2 + math.sqrt(2)) / 4, abs=1e-12)
    assert rep.satisfied
    oracle = brute_force_probs(2, 1 / 8)
    assert oracle[0] + oracle[1] == pytest.approx((2 + math.sqrt(2)) / 4, abs=1e-12)


def test_success_exact_phase():
    rep = qpe.success_probability(3, 5 / 8)
    assert rep.x_lo == rep.x_hi == 5
    assert rep.success_prob == pytest.approx(1.0, abs=1e-12)


def test_success_generic_phase():
    rep = qpe.success_probability(8, 0.321703)
    assert rep.success_prob >= SUCCESS_BOUND
    for x in (rep.x_lo, rep.x_hi):
        assert abs(qpe.delta(0.321703, 8, x)) < 2**-8


def test_nearest_outcomes_wrap():
    assert qpe.nearest_outcomes(1, 0.75) == (1, 0)
    assert qpe.nearest_outcomes(3, 0.99) == (7, 0)


@settings(max_examples=300, deadline=None)
@given(n=st.integers(1, 10), w=st.floats(0, 1, exclude_max=True))
def test_simulated_and_closed_success_agree(n, w):
    a = qpe.success_probability(n, w)
    b = qpe.success_probability(n, w, method="closed")
    assert (a.x_lo, a.x_hi) == (b.x_lo, b.x_hi)
    assert a.success_prob == pytest.approx(b.success_prob, abs=1e-9)
    assert a.satisfied


def test_midpoint_success_decreases_to_bound():
    vals = [qpe.success_probability(n, 0.5 / 2**n).success_prob for n in range(1, 13)]
    assert all(a > b for a, b in zip(vals, vals[1:]))
    assert vals[-1] - SUCCESS_BOUND < 1e-3
    assert vals[-1] >= SUCCESS_BOUND


@pytest.mark.parametrize("n", [1, 3, 6, 10])
def test_corollary_linkage(n):
    # p(x_lo) + p(x_hi) >= sin^2(pi t)/pi^2 (1/t^2 + 1/(1-t)^2) >= 8/pi^2, t = 2^n * delta
    x_lo = 2**n // 3
    for t in np.linspace(0.001, 0.999, 199):
        w = (x_lo + t) / 2**n
        rep = qpe.success_probability(n, w, method="closed")
        middle = math.sin(math.pi * t) ** 2 / math.pi**2 * (1 / t**2 + 1 / (1 - t) ** 2)
        assert rep.success_prob >= middle - 1e-12
        assert middle >= SUCCESS_BOUND - 1e-12
