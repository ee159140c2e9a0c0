"""Classical-shadow sampling and purity estimation for a single qubit.

Each sample measures the state in a Pauli basis drawn uniformly from
{X, Y, Z} and records (basis, outcome).  The single-sample state estimator is
3|k><k| - I where |k> is the measured eigenket; averaging pairs of distinct
samples gives an unbiased purity estimate.  A direct tomography baseline
(linear inversion over X/Y/Z counts with Bloch-vector projection) lives here
too so the two purity routes can be compared under identical sampling.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .states import (
    PAULI_BASES,
    MeasBasis,
    QubitState,
    binary_entropy,
    born_probabilities,
    purity,
)

BASIS_LABELS = ("X", "Y", "Z")

# Rank-1 projectors onto the six Pauli eigenkets, ordered (X0, X1, Y0, Y1,
# Z0, Z1).  Entries are exact dyadic rationals so downstream pair traces are
# exact in double precision.
_STAB_PROJECTORS = np.array(
    [
        [[0.5, 0.5], [0.5, 0.5]],
        [[0.5, -0.5], [-0.5, 0.5]],
        [[0.5, -0.5j], [0.5j, 0.5]],
        [[0.5, 0.5j], [-0.5j, 0.5]],
        [[1.0, 0.0], [0.0, 0.0]],
        [[0.0, 0.0], [0.0, 1.0]],
    ],
    dtype=complex,
)

_SNAPSHOT_MATRICES = 3.0 * _STAB_PROJECTORS - np.eye(2)
_SNAPSHOT_MATRICES.setflags(write=False)

# tr[m_i m_j] for the 36 snapshot-matrix pairs; values are exactly
# 5 (same ket), -4 (orthogonal ket) or 0.5 (different basis).
_PAIR_TRACE = np.einsum("iab,jba->ij", _SNAPSHOT_MATRICES, _SNAPSHOT_MATRICES).real
_PAIR_TRACE.setflags(write=False)

# Doubled pair traces are integers, so the pair-sum numerator of the purity
# estimator can be accumulated exactly.
_PAIR_TRACE_X2 = np.rint(2.0 * _PAIR_TRACE).astype(np.int64)
_PAIR_TRACE_X2.setflags(write=False)


@dataclass(frozen=True)
class Snapshot:
    """One classical-shadow record: a Pauli basis label and a binary outcome."""

    basis: str
    outcome: int

    def __post_init__(self):
        if self.basis not in BASIS_LABELS:
            raise ValueError(f"basis must be one of {BASIS_LABELS}, got {self.basis!r}")
        if self.outcome not in (0, 1):
            raise ValueError(f"outcome must be 0 or 1, got {self.outcome!r}")

    @property
    def index(self) -> int:
        """Position in the fixed (X0, X1, Y0, Y1, Z0, Z1) ordering."""
        return 2 * BASIS_LABELS.index(self.basis) + self.outcome


@dataclass(frozen=True)
class ShadowRun:
    """An ordered batch of snapshots with the seed that produced it."""

    seed: int
    bases: np.ndarray
    outcomes: np.ndarray

    def __post_init__(self):
        bases = np.ascontiguousarray(self.bases, dtype=np.uint8)
        outcomes = np.ascontiguousarray(self.outcomes, dtype=np.uint8)
        if bases.shape != outcomes.shape or bases.ndim != 1:
            raise ValueError("bases and outcomes must be 1-d arrays of equal length")
        if bases.size and (bases.max() > 2 or outcomes.max() > 1):
            raise ValueError("basis codes must be 0..2 and outcomes 0..1")
        bases.setflags(write=False)
        outcomes.setflags(write=False)
        object.__setattr__(self, "bases", bases)
        object.__setattr__(self, "outcomes", outcomes)

    @property
    def n_s(self) -> int:
        return int(self.bases.size)

    def snapshots(self) -> list[Snapshot]:
        return [
            Snapshot(BASIS_LABELS[b], int(o))
            for b, o in zip(self.bases, self.outcomes)
        ]

    @classmethod
    def from_snapshots(cls, snapshots, seed: int = 0) -> "ShadowRun":
        snaps = list(snapshots)
        bases = np.array([BASIS_LABELS.index(s.basis) for s in snaps], dtype=np.uint8)
        outcomes = np.array([s.outcome for s in snaps], dtype=np.uint8)
        return cls(seed=seed, bases=bases, outcomes=outcomes)

    def histogram(self) -> np.ndarray:
        """Counts over the six (basis, outcome) bins in snapshot-index order."""
        return np.bincount(self.bases * 2 + self.outcomes, minlength=6).astype(np.int64)


@dataclass(frozen=True)
class PurityStats:
    """Summary of repeated purity estimation: mean, population std, raw values."""

    mean: float
    std: float
    values: np.ndarray


def derive_seed(seed: int, *key: int) -> int:
    """Deterministic child seed for the cell addressed by `key`.

    Uses the splittable seed-sequence scheme so independent cells get
    statistically independent streams while remaining reproducible.
    """
    ss = np.random.SeedSequence(entropy=int(seed), spawn_key=tuple(int(k) for k in key))
    return int(ss.generate_state(1, dtype=np.uint64)[0])


def _basis_p0(rho: QubitState) -> np.ndarray:
    return np.array([born_probabilities(rho, b)[0] for b in PAULI_BASES])


def sample_snapshot(rho: QubitState, rng: np.random.Generator) -> Snapshot:
    """Draw one snapshot: uniform basis choice, then a Born-rule outcome."""
    b = int(rng.integers(0, 3))
    p0, _ = born_probabilities(rho, PAULI_BASES[b])
    outcome = 0 if rng.random() < p0 else 1
    return Snapshot(BASIS_LABELS[b], outcome)


def sample_run(rho: QubitState, n_s: int, seed: int) -> ShadowRun:
    """Draw `n_s` snapshots from `rho` under a dedicated stream.

    Identical (rho, n_s, seed) always reproduces the identical snapshot
    sequence.
    """
    if n_s < 0:
        raise ValueError(f"n_s must be nonnegative, got {n_s!r}")
    rng = np.random.default_rng(seed)
    bases = rng.integers(0, 3, size=n_s, dtype=np.uint8)
    u = rng.random(n_s)
    p0 = _basis_p0(rho)
    outcomes = (u >= p0[bases]).astype(np.uint8)
    return ShadowRun(seed=int(seed), bases=bases, outcomes=outcomes)


def snapshot_matrix(s: Snapshot) -> np.ndarray:
    """Single-sample state estimator 3|k><k| - I (trace 1, eigenvalues {2, -1})."""
    return _SNAPSHOT_MATRICES[s.index].copy()


def pair_overlap_trace(si: Snapshot, sj: Snapshot) -> float:
    """tr[m_i m_j] = 9 |<k_i|k_j>|^2 - 4 for two snapshot matrices."""
    return float(_PAIR_TRACE[si.index, sj.index])


def estimate_purity(run: ShadowRun) -> float:
    """Unbiased purity estimate: mean of tr[m_i m_j] over all ordered pairs i != j.

    Computed from the 6-bin (basis, outcome) histogram with integer pair
    counting, which reproduces the naive all-pairs sum exactly in O(n_s) time.
    The estimate may fall outside [0, 1] for small n_s; values are reported
    as-is.
    """
    n = run.n_s
    if n < 2:
        raise ValueError(f"purity estimation needs at least 2 snapshots, got {n}")
    counts = run.histogram()
    numer2 = int(counts @ _PAIR_TRACE_X2 @ counts) - 10 * n
    return numer2 / (2 * n * (n - 1))


def estimate_state_mean(run: ShadowRun) -> np.ndarray:
    """Entrywise mean of the snapshot matrices; converges to rho as n_s grows."""
    if run.n_s < 1:
        raise ValueError("state mean needs at least 1 snapshot")
    counts = run.histogram()
    return np.tensordot(counts, _SNAPSHOT_MATRICES, axes=1) / run.n_s


def repeat_purity(rho: QubitState, n_s: int, repeats: int, seed: int) -> PurityStats:
    """Run the purity estimator `repeats` times on fresh snapshot batches.

    Repeat r uses the stream derive_seed(seed, r), so repeats are independent
    and individually reproducible.
    """
    if repeats < 1:
        raise ValueError(f"repeats must be >= 1, got {repeats!r}")
    values = np.array(
        [estimate_purity(sample_run(rho, n_s, derive_seed(seed, r))) for r in range(repeats)]
    )
    return PurityStats(float(values.mean()), float(values.std()), values)


# ---------------------------------------------------------------------------
# Snapshot serialization (audit dumps)
# ---------------------------------------------------------------------------

_HEADER_RE = re.compile(r"^ns=(\d+) seed=(\d+)$")


def dump_snapshots(run: ShadowRun, path) -> None:
    """Write a run as text: header `ns=<N> seed=<S>`, then one `<basis><outcome>` per line."""
    lines = [f"ns={run.n_s} seed={run.seed}"]
    lines.extend(f"{BASIS_LABELS[b]}{o}" for b, o in zip(run.bases, run.outcomes))
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def load_snapshots(path) -> ShadowRun:
    """Read a run written by `dump_snapshots`."""
    lines = Path(path).read_text(encoding="utf-8").splitlines()
    if not lines:
        raise ValueError(f"{path}: empty snapshot file")
    m = _HEADER_RE.match(lines[0])
    if m is None:
        raise ValueError(f"{path}: malformed header {lines[0]!r}")
    n_s, seed = int(m.group(1)), int(m.group(2))
    body = [ln for ln in lines[1:] if ln]
    if len(body) != n_s:
        raise ValueError(f"{path}: header says ns={n_s} but found {len(body)} snapshots")
    try:
        bases = np.array([BASIS_LABELS.index(ln[0]) for ln in body], dtype=np.uint8)
        outcomes = np.array([int(ln[1:]) for ln in body], dtype=np.uint8)
    except (ValueError, IndexError) as exc:
        raise ValueError(f"{path}: malformed snapshot line") from exc
    return ShadowRun(seed=seed, bases=bases, outcomes=outcomes)


# ---------------------------------------------------------------------------
# Tomography baseline
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CountsTable:
    """Outcome counts of `shots_per_basis` projective shots in each Pauli basis."""

    x: tuple[int, int]
    y: tuple[int, int]
    z: tuple[int, int]
    shots_per_basis: int

    def __post_init__(self):
        for name, pair in (("x", self.x), ("y", self.y), ("z", self.z)):
            if len(pair) != 2 or min(pair) < 0:
                raise ValueError(f"{name} counts must be a pair of nonnegative ints")
            if pair[0] + pair[1] != self.shots_per_basis:
                raise ValueError(
                    f"{name} counts {pair} do not sum to shots_per_basis={self.shots_per_basis}"
                )


def projective_counts(
    rho: QubitState, basis: MeasBasis, shots: int, rng: np.random.Generator
) -> tuple[int, int]:
    """Binomial outcome counts of `shots` projective measurements in `basis`."""
    if shots < 1:
        raise ValueError(f"shots must be >= 1, got {shots!r}")
    p0, _ = born_probabilities(rho, basis)
    n0 = int(rng.binomial(shots, p0))
    return n0, shots - n0


def qst_counts(rho: QubitState, shots_per_basis: int, rng: np.random.Generator) -> CountsTable:
    """Sample the three Pauli-basis count pairs used by the tomography baseline."""
    x = projective_counts(rho, PAULI_BASES[0], shots_per_basis, rng)
    y = projective_counts(rho, PAULI_BASES[1], shots_per_basis, rng)
    z = projective_counts(rho, PAULI_BASES[2], shots_per_basis, rng)
    return CountsTable(x=x, y=y, z=z, shots_per_basis=shots_per_basis)


def project_bloch(x: float, y: float, z: float) -> tuple[float, float, float]:
    """Rescale a Bloch vector onto the unit ball if it sticks out."""
    r = (x * x + y * y + z * z) ** 0.5
    if r > 1.0:
        return x / r, y / r, z / r
    return x, y, z


def qst_reconstruct(counts: CountsTable) -> QubitState:
    """Linear-inversion estimate of the state, projected to a physical one.

    Bloch components are estimated as (n0 - n1)/shots per basis; if the
    resulting vector leaves the unit ball it is rescaled onto it (the nearest
    physical state in this parameterization).
    """
    shots = counts.shots_per_basis
    x = (counts.x[0] - counts.x[1]) / shots
    y = (counts.y[0] - counts.y[1]) / shots
    z = (counts.z[0] - counts.z[1]) / shots
    return QubitState.from_bloch(*project_bloch(x, y, z))


def purity_from_qst(counts: CountsTable) -> float:
    """Purity of the tomography-reconstructed state; always in [0.5, 1]."""
    return purity(qst_reconstruct(counts))


def empirical_entropy(n0: int, n1: int) -> float:
    """Plug-in Shannon entropy (bits) of the empirical outcome frequencies."""
    total = n0 + n1
    if total < 1:
        raise ValueError("empirical entropy needs at least one shot")
    return binary_entropy(n0 / total)
