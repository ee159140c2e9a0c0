"""Exact single-qubit state algebra.

Provides the tunable-coherence state family rho(tau) = tau |+><+| + (1-tau) I/2,
measurement bases drawn from the rotated observable J(theta) = cos(theta) Z +
sin(theta) X, and the closed-form quantities the rest of the library builds on:
purity, entropies, basis overlaps, Born probabilities, dephasing and spectral
decomposition.  Everything here is analytic; randomness lives in `shadows`.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

_ATOL = 1e-12

_SQRT_HALF = 1.0 / math.sqrt(2.0)


@dataclass(frozen=True)
class QubitState:
    """A 2x2 density matrix in the computational (Z) basis.

    Only the independent entries are stored: the diagonal is real and the
    lower off-diagonal is `conj(m01)`.  Construction validates unit trace,
    positivity and Bloch length to 1e-12.
    """

    m00: float
    m11: float
    m01: complex

    def __post_init__(self):
        object.__setattr__(self, "m00", float(self.m00))
        object.__setattr__(self, "m11", float(self.m11))
        object.__setattr__(self, "m01", complex(self.m01))
        if abs(self.m00 + self.m11 - 1.0) > _ATOL:
            raise ValueError(f"trace must be 1, got {self.m00 + self.m11!r}")
        if self.m00 < -_ATOL or self.m11 < -_ATOL:
            raise ValueError("diagonal entries must be nonnegative")
        det = self.m00 * self.m11 - (self.m01.real**2 + self.m01.imag**2)
        if det < -_ATOL:
            raise ValueError(f"matrix is not positive semidefinite (det={det!r})")
        if self.bloch_norm > 1.0 + _ATOL:
            raise ValueError(f"Bloch vector length {self.bloch_norm!r} exceeds 1")

    @property
    def m10(self) -> complex:
        return self.m01.conjugate()

    @property
    def matrix(self) -> np.ndarray:
        return np.array([[self.m00, self.m01], [self.m10, self.m11]], dtype=complex)

    @property
    def bloch(self) -> tuple[float, float, float]:
        """Bloch components (x, y, z) with rho = (I + xX + yY + zZ)/2."""
        return 2.0 * self.m01.real, -2.0 * self.m01.imag, self.m00 - self.m11

    @property
    def bloch_norm(self) -> float:
        x, y, z = self.bloch
        return math.hypot(x, y, z)

    @classmethod
    def from_matrix(cls, m, atol: float = 1e-9) -> "QubitState":
        m = np.asarray(m, dtype=complex)
        if m.shape != (2, 2):
            raise ValueError(f"expected a 2x2 matrix, got shape {m.shape}")
        if abs(m[0, 1] - m[1, 0].conjugate()) > atol or abs(m[0, 0].imag) > atol or abs(m[1, 1].imag) > atol:
            raise ValueError("matrix is not Hermitian")
        off = 0.5 * (m[0, 1] + m[1, 0].conjugate())
        return cls(m[0, 0].real, m[1, 1].real, off)

    @classmethod
    def from_bloch(cls, x: float, y: float, z: float) -> "QubitState":
        return cls(0.5 * (1.0 + z), 0.5 * (1.0 - z), complex(0.5 * x, -0.5 * y))


@dataclass(frozen=True, eq=False)
class MeasBasis:
    """An orthonormal qubit measurement basis.

    `kets[i]` is the i-th basis ket as a length-2 complex vector.  For bases
    built from J(theta) the first ket is always the +1 eigenstate; kets are
    fixed only up to an overall phase.
    """

    kets: np.ndarray
    label: str | None = None
    theta: float | None = None

    def __post_init__(self):
        kets = np.array(self.kets, dtype=complex)
        if kets.shape != (2, 2):
            raise ValueError(f"expected two 2-component kets, got shape {kets.shape}")
        gram = kets.conj() @ kets.T
        if not np.allclose(gram, np.eye(2), atol=_ATOL):
            raise ValueError("kets are not orthonormal")
        kets.setflags(write=False)
        object.__setattr__(self, "kets", kets)

    @classmethod
    def from_theta(cls, theta: float) -> "MeasBasis":
        """Eigenbasis of J(theta) = cos(theta) Z + sin(theta) X, +1 eigenket first."""
        c, s = math.cos(0.5 * theta), math.sin(0.5 * theta)
        return cls(kets=np.array([[c, s], [-s, c]]), theta=float(theta))

    @classmethod
    def pauli(cls, label: str) -> "MeasBasis":
        kets = {
            "X": [[_SQRT_HALF, _SQRT_HALF], [_SQRT_HALF, -_SQRT_HALF]],
            "Y": [[_SQRT_HALF, _SQRT_HALF * 1j], [_SQRT_HALF, -_SQRT_HALF * 1j]],
            "Z": [[1.0, 0.0], [0.0, 1.0]],
        }
        if label not in kets:
            raise ValueError(f"unknown Pauli label {label!r}")
        theta = {"X": 0.5 * math.pi, "Y": None, "Z": 0.0}[label]
        return cls(kets=np.array(kets[label]), label=label, theta=theta)


BASIS_X = MeasBasis.pauli("X")
BASIS_Y = MeasBasis.pauli("Y")
BASIS_Z = MeasBasis.pauli("Z")

#: Pauli bases in the fixed sampling order used throughout the library.
PAULI_BASES = (BASIS_X, BASIS_Y, BASIS_Z)


@dataclass(frozen=True)
class SpectralDecomp:
    """Eigendecomposition of a qubit state with the larger eigenvalue first."""

    lam: float
    psi: np.ndarray
    psi_perp: np.ndarray


def make_rho_tau(tau: float) -> QubitState:
    """State of the family tau |+><+| + (1-tau) I/2.

    tau=1 is the pure |+> state, tau=0 the maximally mixed state.
    """
    if not 0.0 <= tau <= 1.0:
        raise ValueError(f"tau must lie in [0, 1], got {tau!r}")
    return QubitState(0.5, 0.5, 0.5 * tau)


def purity(rho: QubitState) -> float:
    """tr[rho^2]; 1 for pure states, 0.5 for the maximally mixed qubit."""
    return rho.m00**2 + rho.m11**2 + 2.0 * (rho.m01.real**2 + rho.m01.imag**2)


def binary_entropy(x: float) -> float:
    """h(x) = -x log2 x - (1-x) log2(1-x), with h(0) = h(1) = 0."""
    if not 0.0 <= x <= 1.0:
        raise ValueError(f"binary_entropy argument must lie in [0, 1], got {x!r}")
    if x == 0.0 or x == 1.0:
        return 0.0
    return -x * math.log2(x) - (1.0 - x) * math.log2(1.0 - x)


def vn_entropy(rho: QubitState) -> float:
    """Von Neumann entropy -tr[rho log2 rho] in bits."""
    lam = 0.5 * (1.0 + min(1.0, rho.bloch_norm))
    return binary_entropy(lam)


def overlap_c(a: MeasBasis, b: MeasBasis) -> float:
    """Maximal squared overlap c = max_{i,j} |<a_i|b_j>|^2 between two bases.

    For A = J(0) and B = J(theta) this equals cos^2(theta/2); mutually
    unbiased qubit bases give c = 0.5, identical bases give 1.
    """
    gram = a.kets.conj() @ b.kets.T
    return float(np.max(gram.real**2 + gram.imag**2))


def born_probabilities(rho: QubitState, basis: MeasBasis) -> tuple[float, float]:
    """Outcome probabilities p_i = <k_i|rho|k_i> of a projective measurement."""
    p = np.einsum("ik,kl,il->i", basis.kets.conj(), rho.matrix, basis.kets).real
    p = np.clip(p, 0.0, 1.0)
    return float(p[0]), float(p[1])


def dephase(rho: QubitState, basis: MeasBasis) -> QubitState:
    """Completely dephasing channel: zero the off-diagonals in `basis`."""
    p0, p1 = born_probabilities(rho, basis)
    k = basis.kets
    m = p0 * np.outer(k[0], k[0].conj()) + p1 * np.outer(k[1], k[1].conj())
    return QubitState.from_matrix(m)


def prepare_via_pipeline(tau: float) -> QubitState:
    """Build rho(tau) through the preparation chain rather than directly.

    The source emits |+><+|; a weight-tau branch passes untouched while the
    weight-(1-tau) branch traverses a completely dephasing channel in Z; the
    two branches are then mixed incoherently.  Agrees with `make_rho_tau`
    entrywise to 1e-12.
    """
    if not 0.0 <= tau <= 1.0:
        raise ValueError(f"tau must lie in [0, 1], got {tau!r}")
    plus = QubitState(0.5, 0.5, 0.5)
    dephased = dephase(plus, BASIS_Z)
    return QubitState(
        tau * plus.m00 + (1.0 - tau) * dephased.m00,
        tau * plus.m11 + (1.0 - tau) * dephased.m11,
        tau * plus.m01 + (1.0 - tau) * dephased.m01,
    )


def spectral_decompose(rho: QubitState) -> SpectralDecomp:
    """Closed-form eigendecomposition via the Bloch vector.

    Returns lam >= 0.5 and orthonormal kets (psi, psi_perp) with
    rho = lam |psi><psi| + (1-lam) |psi_perp><psi_perp|.  The maximally mixed
    state is degenerate; by convention it returns the Z basis.
    """
    x, y, z = rho.bloch
    r = math.hypot(x, y, z)
    if r == 0.0:
        return SpectralDecomp(0.5, BASIS_Z.kets[0].copy(), BASIS_Z.kets[1].copy())
    half = 0.5 * math.acos(max(-1.0, min(1.0, z / r)))
    phase = cmath.exp(1j * math.atan2(y, x)) if (x != 0.0 or y != 0.0) else 1.0
    c, s = math.cos(half), math.sin(half)
    psi = np.array([c, s * phase], dtype=complex)
    psi_perp = np.array([-s, c * phase], dtype=complex)
    lam = 0.5 * (1.0 + min(1.0, r))
    return SpectralDecomp(lam, psi, psi_perp)
