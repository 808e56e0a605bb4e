"""State-vector simulation of quantum phase estimation.

Basis index y of an n-qubit register is the integer sum_j y_j 2^j, so qubit
j is bit j of the index.  Phases w are fractions of a full turn and are
wrapped into [0, 1) on entry.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError, ResourceError
from .inequality import SUCCESS_BOUND

MAX_QUBITS = 24
NORM_TOL = 1e-10
BOUND_SLACK = 1e-12


def _check_qubits(n, max_qubits=MAX_QUBITS):
    if int(n) != n or n < 1:
        raise DomainError(f"number of qubits must be a positive integer, got {n!r}")
    if n > max_qubits:
        raise ResourceError(f"{n} qubits exceeds the amplitude budget of {max_qubits}")
    return int(n)


def _wrap(w):
    w = float(w)
    if not math.isfinite(w):
        raise DomainError("phase must be finite")
    w = w % 1.0
    return 0.0 if w == 1.0 else w


@dataclass(frozen=True)
class StateVector:
    num_qubits: int
    amplitudes: np.ndarray = field(repr=False)

    def __post_init__(self):
        n = _check_qubits(self.num_qubits)
        amps = np.array(self.amplitudes, dtype=complex)
        if amps.shape != (1 << n,):
            raise DomainError(f"expected {1 << n} amplitudes, got shape {amps.shape}")
        norm2 = float(np.vdot(amps, amps).real)
        if abs(norm2 - 1.0) > NORM_TOL:
            raise DomainError(f"state is not normalized (squared norm {norm2!r})")
        amps.setflags(write=False)
        object.__setattr__(self, "amplitudes", amps)

    @classmethod
    def basis(cls, n: int, x: int) -> "StateVector":
        n = _check_qubits(n)
        if not 0 <= x < (1 << n):
            raise DomainError(f"basis index {x} out of range for {n} qubits")
        amps = np.zeros(1 << n, dtype=complex)
        amps[x] = 1.0
        return cls(n, amps)

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def probabilities(self) -> np.ndarray:
        return np.abs(self.amplitudes) ** 2


@dataclass(frozen=True)
class OutcomeDistribution:
    num_qubits: int
    phase_w: float
    probs: np.ndarray = field(repr=False)


@dataclass(frozen=True)
class SuccessReport:
    phase_w: float
    num_qubits: int
    x_lo: int
    x_hi: int
    p_lo: float
    p_hi: float
    success_prob: float
    bound: float = SUCCESS_BOUND

    @property
    def satisfied(self) -> bool:
        return self.success_prob >= self.bound - BOUND_SLACK


def delta(w: float, n: int, x: int) -> float:
    """Wrapped phase error: w - x/2^n reduced mod 1 into (-1/2, 1/2]."""
    n = _check_qubits(n, max_qubits=1023)
    if int(x) != x or not 0 <= x < (1 << n):
        raise DomainError(f"outcome {x!r} out of range for {n} qubits")
    d = _wrap(w) - x / 2.0**n
    return d - math.ceil(d - 0.5)


def phase_state(n: int, w: float) -> StateVector:
    """Product state 2^(-n/2) sum_y exp(2 pi i w y) |y>."""
    n = _check_qubits(n)
    w = _wrap(w)
    y = np.arange(1 << n, dtype=float)
    # split w so the high part times y (< 2^24) is exact before reducing mod 1
    w_hi = math.floor(w * 2.0**28) / 2.0**28
    turns = np.mod(np.mod(w_hi * y, 1.0) + (w - w_hi) * y, 1.0)
    return StateVector(n, np.exp(2j * math.pi * turns) / math.sqrt(1 << n))


def _dft_direct(amps: np.ndarray, sign: int) -> np.ndarray:
    size = amps.size
    y = np.arange(size)
    out = np.empty(size, dtype=complex)
    for x in range(size):
        # exponent reduced mod size before scaling keeps the phase exact
        out[x] = np.dot(np.exp(sign * 2j * math.pi * ((x * y) % size) / size), amps)
    return out / math.sqrt(size)


def inverse_qft(state: StateVector, method: str = "fft") -> StateVector:
    """Apply the inverse QFT, kernel exp(-2 pi i x y / 2^n) / sqrt(2^n).

    ``method="direct"`` evaluates the O(4^n) double sum and serves as the
    reference for the default FFT path.
    """
    if method == "fft":
        out = np.fft.fft(state.amplitudes, norm="ortho")
    elif method == "direct":
        out = _dft_direct(state.amplitudes, -1)
    else:
        raise DomainError(f"unknown transform method {method!r}")
    return StateVector(state.num_qubits, out)


def qft(state: StateVector, method: str = "fft") -> StateVector:
    """Apply the QFT, kernel exp(+2 pi i x y / 2^n) / sqrt(2^n)."""
    if method == "fft":
        out = np.fft.ifft(state.amplitudes, norm="ortho")
    elif method == "direct":
        out = _dft_direct(state.amplitudes, +1)
    else:
        raise DomainError(f"unknown transform method {method!r}")
    return StateVector(state.num_qubits, out)


def closed_form_prob(n: int, w: float, x: int) -> float:
    """Probability of reading x: (sin(pi 2^n D) / (2^n sin(pi D)))^2 with D = delta(w, n, x)."""
    d = delta(w, n, x)
    if abs(d) < 1e-15:
        return 1.0
    size = 2.0**n
    den = size * math.sin(math.pi * d)
    if den == 0.0:
        return 1.0
    return (math.sin(math.pi * size * d) / den) ** 2


def outcome_distribution(n: int, w: float, method: str = "fft") -> OutcomeDistribution:
    """Measurement probabilities of inverse_qft(phase_state(n, w))."""
    out = inverse_qft(phase_state(n, w), method)
    probs = out.probabilities()
    probs.setflags(write=False)
    return OutcomeDistribution(out.num_qubits, _wrap(w), probs)


def nearest_outcomes(n: int, w: float) -> tuple[int, int]:
    """Outcomes x with |delta(w, n, x)| < 2^-n; both equal when 2^n w is an integer."""
    n = _check_qubits(n)
    size = 1 << n
    scaled = _wrap(w) * size
    lo = int(math.floor(scaled)) % size
    if scaled == math.floor(scaled):
        return lo, lo
    return lo, (lo + 1) % size


def success_probability(n: int, w: float, method: str = "simulate") -> SuccessReport:
    """Probability that the readout is one of the two nearest n-bit fractions of w.

    ``method`` is "simulate" (state vector) or "closed" (closed-form p(x)).
    """
    w = _wrap(w)
    x_lo, x_hi = nearest_outcomes(n, w)
    if method == "simulate":
        probs = outcome_distribution(n, w).probs
        p = lambda x: float(probs[x])  # noqa: E731
    elif method == "closed":
        p = lambda x: closed_form_prob(n, w, x)  # noqa: E731
    else:
        raise DomainError(f"unknown method {method!r}")
    p_lo = p(x_lo)
    p_hi = p(x_hi) if x_hi != x_lo else 0.0
    return SuccessReport(w, n, x_lo, x_hi, p_lo, p_hi, p_lo + p_hi)
