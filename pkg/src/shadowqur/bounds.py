"""Coherence measures and uncertainty lower bounds for pairs of qubit bases.

Three coherence measures are supported: relative entropy of coherence, l1
norm of coherence, and coherence of formation (qubit closed form).  For each,
the sum of coherences in two bases A and B is bounded below by expressions in
the state's purity P, its entropy S, and the maximal basis overlap c.  Four
alternative bounds exist for the relative-entropy case; they are named here
after their originators (yuan, sanchez, berta, korzekwa) purely as keys.

Bound functions return the raw value, which can be negative; clamping to zero
is a reporting step (`clamp_nonnegative`, `QurReport.clamped`), never part of
the formulas.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .states import MeasBasis, QubitState, binary_entropy, born_probabilities, vn_entropy

RE_BOUND_NAMES = ("yuan", "sanchez", "berta", "korzekwa")


@dataclass(frozen=True)
class BoundInputs:
    """Validated (purity, overlap, entropy) triple feeding the bound formulas."""

    purity: float
    overlap: float
    entropy: float

    def __post_init__(self):
        if not 0.5 <= self.purity <= 1.0:
            raise ValueError(f"purity must lie in [0.5, 1], got {self.purity!r}")
        if not 0.5 <= self.overlap <= 1.0:
            raise ValueError(f"overlap must lie in [0.5, 1], got {self.overlap!r}")
        if not 0.0 <= self.entropy <= 1.0:
            raise ValueError(f"entropy must lie in [0, 1], got {self.entropy!r}")


@dataclass(frozen=True)
class QurReport:
    """One uncertainty-relation evaluation: lhs coherence sum vs named bounds."""

    lhs: float
    raw_bounds: dict[str, float]
    purity_clipped: bool = False

    @property
    def clamped(self) -> dict[str, float]:
        return {k: clamp_nonnegative(v) for k, v in self.raw_bounds.items()}

    @property
    def clamped_flags(self) -> dict[str, bool]:
        return {k: v < 0.0 for k, v in self.raw_bounds.items()}


def clamp_nonnegative(x: float) -> float:
    """max(x, 0): negative bound values are reported as zero."""
    return x if x > 0.0 else 0.0


def clip_purity(p: float) -> tuple[float, bool]:
    """Clip a noisy purity estimate into [0.5, 1]; flag whether clipping fired."""
    if p < 0.5:
        return 0.5, True
    if p > 1.0:
        return 1.0, True
    return float(p), False


def entropy_from_purity(p: float) -> float:
    """Von Neumann entropy of a qubit with purity p: h((1 + sqrt(2p-1))/2)."""
    if not 0.5 <= p <= 1.0:
        raise ValueError(f"purity must lie in [0.5, 1], got {p!r}")
    lam = 0.5 * (1.0 + math.sqrt(max(0.0, 2.0 * p - 1.0)))
    return binary_entropy(min(1.0, lam))


# ---------------------------------------------------------------------------
# Coherence measures
# ---------------------------------------------------------------------------


def c_re(rho: QubitState, basis: MeasBasis) -> float:
    """Relative entropy of coherence: entropy of the basis diagonal minus S_VN."""
    p0, _ = born_probabilities(rho, basis)
    return max(0.0, binary_entropy(p0) - vn_entropy(rho))


def c_re_from_measurement(h_measured: float, s: float) -> float:
    """Measurement-driven relative entropy of coherence, clamped at zero.

    Finite-sample noise can push the measured outcome entropy below the
    state entropy; the negative excess is reported as zero.
    """
    return max(0.0, h_measured - s)


def c_l1(rho: QubitState, basis: MeasBasis) -> float:
    """l1 norm of coherence: sum of off-diagonal moduli of rho in `basis`."""
    k = basis.kets
    off = k[0].conj() @ rho.matrix @ k[1]
    return 2.0 * abs(off)


def c_f_qubit(l1_value: float) -> float:
    """Coherence of formation for a qubit from its l1 coherence.

    Closed form h((1 + sqrt(1 - l1^2))/2); strictly increasing on (0, 1).
    """
    if not 0.0 <= l1_value <= 1.0:
        raise ValueError(f"l1 coherence must lie in [0, 1], got {l1_value!r}")
    inner = math.sqrt(max(0.0, 1.0 - l1_value * l1_value))
    return binary_entropy(0.5 * (1.0 + inner))


# ---------------------------------------------------------------------------
# Lower bounds
# ---------------------------------------------------------------------------


def _require_purity(p: float) -> None:
    if not 0.5 <= p <= 1.0:
        raise ValueError(f"purity must lie in [0.5, 1], got {p!r}")


def _require_overlap(c: float, low: float = 0.0) -> None:
    if not low <= c <= 1.0:
        raise ValueError(f"overlap must lie in [{low}, 1], got {c!r}")


def bound_re_yuan(p: float, c: float, s: float) -> float:
    """Purity-aware bound h((sqrt(2P-1)(2 sqrt(c) - 1) + 1)/2) - S."""
    _require_purity(p)
    _require_overlap(c, low=0.5)
    arg = 0.5 * (math.sqrt(max(0.0, 2.0 * p - 1.0)) * (2.0 * math.sqrt(c) - 1.0) + 1.0)
    return binary_entropy(min(1.0, arg)) - s


def bound_re_sanchez(p: float, c: float, s: float) -> float:
    """h((1 + sqrt(2c-1))/2) - 2S."""
    _require_overlap(c, low=0.5)
    arg = 0.5 * (1.0 + math.sqrt(max(0.0, 2.0 * c - 1.0)))
    return binary_entropy(min(1.0, arg)) - 2.0 * s


def bound_re_berta(p: float, c: float, s: float) -> float:
    """-log2(c) - S."""
    if c <= 0.0:
        raise ValueError(f"overlap must be positive, got {c!r}")
    _require_overlap(c)
    return -math.log2(c) - s


def bound_re_korzekwa(p: float, c: float, s: float) -> float:
    """-(1 - S) log2(c); never negative for S in [0, 1]."""
    if c <= 0.0:
        raise ValueError(f"overlap must be positive, got {c!r}")
    _require_overlap(c)
    return -(1.0 - s) * math.log2(c)


def re_bounds(inputs: BoundInputs) -> dict[str, float]:
    """All four relative-entropy bounds (raw, pre-clamp) keyed by name."""
    p, c, s = inputs.purity, inputs.overlap, inputs.entropy
    return {
        "yuan": bound_re_yuan(p, c, s),
        "sanchez": bound_re_sanchez(p, c, s),
        "berta": bound_re_berta(p, c, s),
        "korzekwa": bound_re_korzekwa(p, c, s),
    }


def bound_l1(p: float, c: float) -> float:
    """l1-coherence bound 2 sqrt((2P-1) c (1-c)); nonnegative."""
    _require_purity(p)
    _require_overlap(c)
    return 2.0 * math.sqrt(max(0.0, (2.0 * p - 1.0) * c * (1.0 - c)))


def bound_cf(p: float, c: float) -> float:
    """Formation-coherence bound h((1 + sqrt(1 - 4(2P-1) sqrt(c)(1 - sqrt(c))))/2)."""
    _require_purity(p)
    _require_overlap(c)
    sqrt_c = math.sqrt(c)
    inner = 1.0 - 4.0 * (2.0 * p - 1.0) * sqrt_c * (1.0 - sqrt_c)
    if inner < -1e-12:
        raise ValueError(f"outer square-root argument is negative ({inner!r})")
    return binary_entropy(min(1.0, 0.5 * (1.0 + math.sqrt(max(0.0, inner)))))
