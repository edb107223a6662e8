"""Basis conventions, drive parameters, and state vectors for a periodic spin-1/2 chain.

Conventions used throughout the package:

* Basis states are integers ``k`` in ``[0, 2**L)``; bit ``i`` of ``k`` set
  means spin ``i`` points up (``sigma^z_i = +1``).  Site 0 is the least
  significant bit and the chain is periodic, site ``L`` being site 0.
* For ``L = 2`` the periodic bond sum counts the single physical bond twice
  (terms ``i=0->1`` and ``i=1->0``), which is the literal reading of the
  wrap-around sum.  Physics checks therefore prefer ``L >= 3``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

#: Largest chain for which state vectors may be evolved (2**L amplitudes).
EVOLVE_MAX_SITES = 24
#: Largest chain for which dense propagators / spectra may be built (4**L entries).
DENSE_MAX_SITES = 14

#: Tolerance on the 2-norm of a state vector.
NORM_TOL = 1e-12


class CapacityError(ValueError):
    """A requested chain size exceeds the configured capacity cap."""


def _require_sites(L: int, cap: int, what: str) -> None:
    if not isinstance(L, (int, np.integer)):
        raise TypeError(f"site count must be an integer, got {L!r}")
    if L < 2:
        raise ValueError(f"a periodic chain needs at least 2 sites, got L={L}")
    if L > cap:
        raise CapacityError(f"L={L} exceeds the {what} cap of {cap} sites")


@dataclass(frozen=True)
class FloquetParams:
    """Parameters of one drive period: Ising coupling J for time T, then a global kick.

    The kick rotates every spin about x by ``pi/2 - epsilon``; ``epsilon = 0``
    is a perfect spin flip.  All observables depend on ``J`` and ``T`` only
    through the product ``J*T`` (hbar = 1).
    """

    L: int
    J: float
    epsilon: float
    T: float = 1.0
    boundary: str = "periodic"

    def __post_init__(self) -> None:
        _require_sites(self.L, EVOLVE_MAX_SITES, "evolution")
        if not self.T > 0:
            raise ValueError(f"drive period must be positive, got T={self.T}")
        if self.boundary != "periodic":
            raise ValueError(f"only periodic boundaries are supported, got {self.boundary!r}")

    @property
    def jt(self) -> float:
        """The dimensionless interaction phase J*T."""
        return self.J * self.T

    @property
    def theta(self) -> float:
        """Kick rotation angle pi/2 - epsilon (radians, signed)."""
        return math.pi / 2 - self.epsilon

    @classmethod
    def from_dimensionless(
        cls, L: int, jt_over_pi: float, epsilon_over_pi: float, T: float = 1.0
    ) -> "FloquetParams":
        """Build params from JT and epsilon expressed in multiples of pi."""
        return cls(L=L, J=math.pi * jt_over_pi / T, epsilon=math.pi * epsilon_over_pi, T=T)


@dataclass(frozen=True)
class StateVector:
    """A normalized vector of 2**L complex amplitudes over the spin basis."""

    L: int
    amplitudes: np.ndarray

    def __post_init__(self) -> None:
        _require_sites(self.L, EVOLVE_MAX_SITES, "evolution")
        amps = np.ascontiguousarray(self.amplitudes, dtype=np.complex128)
        if amps.shape != (1 << self.L,):
            raise ValueError(
                f"expected {1 << self.L} amplitudes for L={self.L}, got shape {amps.shape}"
            )
        nrm = np.linalg.norm(amps)
        if abs(nrm - 1.0) > NORM_TOL:
            raise ValueError(f"state vector is not normalized: |norm - 1| = {abs(nrm - 1.0):.3e}")
        amps.setflags(write=False)
        object.__setattr__(self, "amplitudes", amps)

    @property
    def dim(self) -> int:
        return 1 << self.L

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))


def polarized_state(L: int, direction: str = "up") -> StateVector:
    """All spins up (basis index 2**L - 1) or all spins down (index 0)."""
    _require_sites(L, EVOLVE_MAX_SITES, "evolution")
    amps = np.zeros(1 << L, dtype=np.complex128)
    if direction == "up":
        amps[-1] = 1.0
    elif direction == "down":
        amps[0] = 1.0
    else:
        raise ValueError(f"direction must be 'up' or 'down', got {direction!r}")
    return StateVector(L, amps)


def product_state(L: int, orientations) -> StateVector:
    """Tensor product of single-site states given as Bloch angles.

    Each entry of ``orientations`` is ``(theta, phi)``; site ``i`` is prepared
    in ``cos(theta/2)|up> + exp(i*phi) sin(theta/2)|down>``.  ``theta = 0`` is
    spin up, ``theta = pi`` spin down.
    """
    _require_sites(L, EVOLVE_MAX_SITES, "evolution")
    pairs = [(float(t), float(p)) for (t, p) in orientations]
    if len(pairs) != L:
        raise ValueError(f"need exactly {L} (theta, phi) pairs, got {len(pairs)}")
    vec = np.array([1.0 + 0.0j])
    for theta, phi in pairs:
        # Index 0 of a site block is spin down, index 1 spin up (bit convention).
        site = np.array([np.exp(1j * phi) * np.sin(theta / 2), np.cos(theta / 2)])
        vec = np.kron(site, vec)
    vec /= np.linalg.norm(vec)
    return StateVector(L, vec)


def overlap(a: StateVector, b: StateVector) -> complex:
    """Inner product <a|b> (conjugate-linear in ``a``)."""
    if a.L != b.L:
        raise ValueError(f"state dimensions differ: L={a.L} vs L={b.L}")
    return complex(np.vdot(a.amplitudes, b.amplitudes))


def _cyclic_shift_down(k, L: int):
    """Rotate the low ``L`` bits of ``k`` right by one (bit i of result = bit i+1 of k)."""
    return (k >> 1) | ((k & 1) << (L - 1))


def bond_sum(index: int, L: int) -> int:
    """Eigenvalue of the nearest-neighbour Ising sum on basis state ``index``.

    Returns sum_i s(i) s(i+1 mod L) with s = +1 for an up spin.  Aligned
    neighbours contribute +1, anti-aligned -1; the wrap-around bond is
    included, so for L=2 the one physical bond appears twice.
    """
    _require_sites(L, EVOLVE_MAX_SITES, "evolution")
    index = int(index)
    if not 0 <= index < (1 << L):
        raise ValueError(f"basis index {index} out of range for L={L}")
    flipped = int(index ^ _cyclic_shift_down(index, L)).bit_count()
    return L - 2 * flipped


def bond_sum_table(L: int) -> np.ndarray:
    """``bond_sum`` for every basis index, as an int64 array of length 2**L."""
    _require_sites(L, EVOLVE_MAX_SITES, "evolution")
    k = np.arange(1 << L, dtype=np.uint64)
    diff = k ^ _cyclic_shift_down(k, L)
    flipped = np.zeros(diff.shape, dtype=np.int64)
    for i in range(L):
        flipped += ((diff >> np.uint64(i)) & np.uint64(1)).astype(np.int64)
    return L - 2 * flipped
