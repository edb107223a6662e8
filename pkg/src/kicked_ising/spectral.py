"""Quasi-energy spectra, pairing statistics, and the time-reflection check.

A one-period propagator eigenvalue ``lambda = exp(-i e T)`` defines the
quasi-energy ``e`` modulo ``2 pi / T``; everything here works on the branch
``(-pi/T, pi/T]``.  Period-doubled dynamics shows up as eigenstate pairs whose
quasi-energies differ by exactly ``pi/T``.

Quasi-energy origin
-------------------
The propagator's overall phase is physically meaningless but moves every
quasi-energy rigidly, so statements like "states sit exactly at 0 and pi/T"
depend on a phase convention.  ``propagator_spectrum`` therefore divides out
the Ising phase of the fully aligned spin configuration (a global factor
``exp(-i J T L / 4)``).  With that origin, the exactly paired states of an
even-length chain at ``JT = pi`` anchor at 0 and ``pi/T`` for every even L;
with the raw propagator they sit at 0/pi only for L divisible by 4 and at
``+-pi/2T`` for L = 6, 10, ....  Pair *separations* and gap statistics are
unaffected by the choice.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

import math

import numpy as np
import scipy.linalg

from .engine import DensePropagator, build_dense_propagator
from .states import (
    DENSE_MAX_SITES,
    CapacityError,
    FloquetParams,
    StateVector,
    _require_sites,
)

#: Quasi-energies closer than this to an anchor count as exactly degenerate.
EXACT_PAIR_TOL = 1e-10


def fold_to_branch(x, period: float = 1.0):
    """Map phases (or phase differences) into the branch (-pi/T, pi/T]."""
    half = math.pi / period
    return half - np.mod(half - np.asarray(x), 2.0 * half)


@dataclass(frozen=True)
class QuasiEnergySpectrum:
    """Sorted quasi-energies of a propagator, optionally with eigenvectors.

    ``energies`` is ascending within (-pi/T, pi/T]; when kept, column j of
    ``eigenvectors`` belongs to ``energies[j]`` and the columns are
    orthonormal.
    """

    L: int
    T: float
    energies: np.ndarray
    eigenvectors: Optional[np.ndarray] = None

    @property
    def dim(self) -> int:
        return self.energies.size


@dataclass(frozen=True)
class GapStatistics:
    """Mean neighbour gap, mean deviation from exact pi pairing, and their ratio.

    ``delta0_mean`` averages consecutive gaps of the sorted spectrum;
    ``delta_pi_mean`` averages ``|e[i + D/2] - e[i] - pi/T|`` (folded back into
    the branch) over the first half.  Small ``ratio`` means the spectrum is
    organized into rigid pi-separated pairs.
    """

    delta0_mean: float
    delta_pi_mean: float
    ratio: float


@dataclass(frozen=True)
class PairCounts:
    """Number of quasi-energies within tolerance of 0 and of pi/T."""

    n_zero: int
    n_pi: int


def _as_matrix(U: Union[DensePropagator, np.ndarray]) -> np.ndarray:
    if isinstance(U, DensePropagator):
        return U.matrix
    m = np.asarray(U, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    return m


def quasi_energies(
    U: Union[DensePropagator, np.ndarray],
    T: float = 1.0,
    keep_vectors: bool = False,
    unitarity_tol: float = 1e-10,
) -> QuasiEnergySpectrum:
    """Diagonalize a unitary and return quasi-energies e = -arg(lambda)/T, sorted.

    With ``keep_vectors`` the (complex) Schur decomposition is used, so the
    returned eigenvector columns are orthonormal even inside degenerate
    clusters — exactly what pair-manifold projections need.
    """
    m = _as_matrix(U)
    dim = m.shape[0]
    if not T > 0:
        raise ValueError(f"period must be positive, got T={T}")
    residual = np.max(np.abs(m.conj().T @ m - np.eye(dim)))
    if residual > unitarity_tol:
        raise ValueError(f"matrix is not unitary: max |U^H U - I| = {residual:.3e}")

    if keep_vectors:
        triangular, vectors = scipy.linalg.schur(m, output="complex")
        eigenvalues = np.diag(triangular)
    else:
        vectors = None
        eigenvalues = np.linalg.eigvals(m)

    energies = fold_to_branch(-np.angle(eigenvalues) / T, period=T)
    order = np.argsort(energies, kind="stable")
    energies = np.ascontiguousarray(energies[order])
    energies.setflags(write=False)
    if vectors is not None:
        vectors = np.ascontiguousarray(vectors[:, order])
        vectors.setflags(write=False)
    L = dim.bit_length() - 1
    return QuasiEnergySpectrum(L=L, T=T, energies=energies, eigenvectors=vectors)


def propagator_spectrum(
    params: FloquetParams,
    keep_vectors: bool = False,
    phase_reference: str = "aligned",
) -> QuasiEnergySpectrum:
    """Spectrum of the one-period propagator with a fixed quasi-energy origin.

    ``phase_reference="aligned"`` (default) measures quasi-energies relative
    to the Ising phase of the fully aligned configuration, i.e. diagonalizes
    ``exp(+i J T L / 4) U``; see the module docstring.  ``"raw"`` uses the
    propagator as built.
    """
    _require_sites(params.L, DENSE_MAX_SITES, "dense diagonalization")
    U = build_dense_propagator(params).matrix
    if phase_reference == "aligned":
        U = U * np.exp(0.25j * params.jt * params.L)
    elif phase_reference != "raw":
        raise ValueError(f"phase_reference must be 'aligned' or 'raw', got {phase_reference!r}")
    return quasi_energies(U, T=params.T, keep_vectors=keep_vectors)


def gap_statistics(spec: QuasiEnergySpectrum) -> GapStatistics:
    """Neighbour-gap and pi-pairing statistics of a sorted spectrum."""
    e = spec.energies
    D = e.size
    if D % 2 != 0:
        raise ValueError(f"need an even number of levels to pair, got {D}")
    if D < 2:
        raise ValueError("need at least two levels")
    half_period = math.pi / spec.T
    delta0 = float(np.mean(np.diff(e)))
    deviations = fold_to_branch(e[D // 2 :] - e[: D // 2] - half_period, period=spec.T)
    delta_pi = float(np.mean(np.abs(deviations)))
    ratio = delta_pi / delta0 if delta0 > 0 else math.inf
    return GapStatistics(delta0_mean=delta0, delta_pi_mean=delta_pi, ratio=ratio)


def reflection_operator(L: int) -> np.ndarray:
    """Matrix of (prod_i sigma^x_i) (prod_j sigma^z_j) in the spin basis.

    Flips every spin and attaches the sign (-1)^(number of up spins) of the
    source state (for one site: [[0, -1], [1, 0]]); R is unitary with
    R^2 = (-1)^L I.  A global sign never matters where R is used twice, as in
    ``check_time_reflection``.
    """
    if not isinstance(L, (int, np.integer)) or L < 1:
        raise ValueError(f"need at least one site, got L={L!r}")
    if L > DENSE_MAX_SITES:
        raise CapacityError(f"L={L} exceeds the dense operator cap of {DENSE_MAX_SITES} sites")
    dim = 1 << L
    cols = np.arange(dim)
    rows = cols ^ (dim - 1)
    popcount = np.zeros(dim, dtype=np.int64)
    for i in range(L):
        popcount += (cols >> i) & 1
    signs = np.where(popcount % 2, -1.0, 1.0)
    R = np.zeros((dim, dim))
    R[rows, cols] = signs
    return R


def check_time_reflection(params: FloquetParams) -> float:
    """Residual of the time-reflection symmetry of the one-period propagator.

    The symmetry combines the spin-flip/parity product R (see
    ``reflection_operator``) with complex conjugation in the spin basis — an
    antiunitary operation, as time reflection must be.  The identity tested is

        R conj(U) R^dagger = i**L U,

    which holds exactly at JT = pi for every chain length and any kick
    imperfection; the returned max-norm residual is then at floating-point
    level, and grows to O(1) away from JT = pi.
    """
    _require_sites(params.L, DENSE_MAX_SITES, "dense operator")
    U = build_dense_propagator(params).matrix
    R = reflection_operator(params.L)
    phase = 1j ** (params.L % 4)
    return float(np.max(np.abs(R @ U.conj() @ R.T - phase * U)))


def count_exact_pi_pairs(spec: QuasiEnergySpectrum, tol: float = EXACT_PAIR_TOL) -> PairCounts:
    """Count quasi-energies within ``tol`` of the anchors 0 and pi/T.

    Distances are measured on the Floquet circle, so a level just below the
    branch edge -pi/T counts toward the pi/T anchor.
    """
    e = spec.energies
    half_period = math.pi / spec.T
    d_zero = np.abs(fold_to_branch(e, period=spec.T))
    d_pi = np.abs(fold_to_branch(e - half_period, period=spec.T))
    return PairCounts(n_zero=int(np.sum(d_zero <= tol)), n_pi=int(np.sum(d_pi <= tol)))


def paired_superposition(
    spec: QuasiEnergySpectrum,
    zero_index: int,
    pi_index: int,
    sign: int = +1,
    tol: float = EXACT_PAIR_TOL,
) -> StateVector:
    """Equal-weight superposition of an anchor-0 and an anchor-pi eigenstate.

    Such a state swaps between its two superposition branches every period and
    returns to itself exactly every second period, for as long as the two
    quasi-energies are exact: stroboscopic revival with no decay.
    """
    if spec.eigenvectors is None:
        raise ValueError("spectrum was computed without eigenvectors")
    if sign not in (+1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    half_period = math.pi / spec.T
    dev_zero = abs(float(fold_to_branch(spec.energies[zero_index], period=spec.T)))
    dev_pi = abs(float(fold_to_branch(spec.energies[pi_index] - half_period, period=spec.T)))
    if dev_zero > tol:
        raise ValueError(f"state {zero_index} is {dev_zero:.3e} away from quasi-energy 0")
    if dev_pi > tol:
        raise ValueError(f"state {pi_index} is {dev_pi:.3e} away from quasi-energy pi/T")
    combo = spec.eigenvectors[:, zero_index] + sign * spec.eigenvectors[:, pi_index]
    combo = combo / np.linalg.norm(combo)
    return StateVector(spec.L, combo)


def overlap_with_pair_manifold(
    state: StateVector, spec: QuasiEnergySpectrum, tol: float = EXACT_PAIR_TOL
) -> float:
    """Squared projection of ``state`` onto the span of anchor-0/anchor-pi eigenstates."""
    if spec.eigenvectors is None:
        raise ValueError("spectrum was computed without eigenvectors")
    if state.L != spec.L:
        raise ValueError(f"state has L={state.L} but spectrum has L={spec.L}")
    e = spec.energies
    half_period = math.pi / spec.T
    on_anchor = (np.abs(fold_to_branch(e, period=spec.T)) <= tol) | (
        np.abs(fold_to_branch(e - half_period, period=spec.T)) <= tol
    )
    if not np.any(on_anchor):
        return 0.0
    block = spec.eigenvectors[:, on_anchor]
    return float(np.sum(np.abs(block.conj().T @ state.amplitudes) ** 2))
