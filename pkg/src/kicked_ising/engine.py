"""One-period propagator of the kicked Ising chain, structured and dense.

A period consists of the global x kick ``K = prod_i exp(-i theta sigma^x_i)``
with ``theta = pi/2 - epsilon`` acting first, followed by the Ising phase
``D = diag(exp(-i (JT/4) * bond_sum))``.  The structured path applies these as
``L`` single-site sweeps plus one diagonal multiply and never materializes a
matrix, so stroboscopic evolution costs O(L * 2**L) per period.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional

import numpy as np

from .states import (
    DENSE_MAX_SITES,
    FloquetParams,
    StateVector,
    _require_sites,
    bond_sum_table,
)

OBSERVABLE_CHOICES = ("return_probability", "sz")


@dataclass(frozen=True)
class DensePropagator:
    """Explicit 2**L x 2**L one-period propagator matrix."""

    L: int
    matrix: np.ndarray

    def __post_init__(self) -> None:
        m = np.ascontiguousarray(self.matrix, dtype=np.complex128)
        if m.shape != (1 << self.L, 1 << self.L):
            raise ValueError(f"expected a {1 << self.L}x{1 << self.L} matrix, got {m.shape}")
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)


@dataclass(frozen=True)
class StroboscopicSeries:
    """Observables sampled once per period, n = 1 .. n_periods.

    ``return_probability[j]`` is measured against the initial state after
    period ``n[j]``; ``sz`` (optional) holds per-site magnetizations row-wise.
    ``norm_drift`` is |norm - 1| of the final state; evolution never
    renormalizes, so drift is a fidelity diagnostic of the arithmetic.
    """

    params: FloquetParams
    n: np.ndarray
    return_probability: np.ndarray
    sz: Optional[np.ndarray]
    norm_drift: float


@lru_cache(maxsize=128)
def _zz_phase_table(L: int, jt: float) -> np.ndarray:
    table = np.exp(-0.25j * jt * bond_sum_table(L))
    table.setflags(write=False)
    return table


def _kick(amps: np.ndarray, L: int, theta: float) -> np.ndarray:
    """Apply exp(-i theta sigma^x) on every site; pure, returns a new array."""
    c = np.cos(theta)
    s = np.sin(theta)
    for i in range(L):
        view = amps.reshape(1 << (L - 1 - i), 2, 1 << i)
        amps = (c * view - 1j * s * view[:, ::-1, :]).reshape(-1)
    return amps


def apply_global_x_rotation(state: StateVector, theta: float) -> StateVector:
    """Rotate every spin about x by ``theta``: cos(theta) I - i sin(theta) sigma^x per site."""
    return StateVector(state.L, _kick(state.amplitudes, state.L, float(theta)))


def apply_zz_phase(state: StateVector, params: FloquetParams) -> StateVector:
    """Multiply each basis amplitude by exp(-i (JT/4) bond_sum(index))."""
    if state.L != params.L:
        raise ValueError(f"state has L={state.L} but params have L={params.L}")
    amps = state.amplitudes * _zz_phase_table(params.L, params.jt)
    return StateVector(state.L, amps)


def floquet_step(state: StateVector, params: FloquetParams) -> StateVector:
    """Advance one drive period: kick first, then the Ising phase."""
    if state.L != params.L:
        raise ValueError(f"state has L={state.L} but params have L={params.L}")
    amps = _kick(state.amplitudes, params.L, params.theta)
    amps *= _zz_phase_table(params.L, params.jt)
    return StateVector(state.L, amps)


def _site_sz(weights: np.ndarray, L: int, site: int) -> float:
    up = weights.reshape(1 << (L - 1 - site), 2, 1 << site)[:, 1, :].sum()
    return float(2.0 * up - weights.sum())


def evolve_stroboscopic(
    initial: StateVector,
    params: FloquetParams,
    n_periods: int,
    observables: Iterable[str] = ("return_probability",),
) -> StroboscopicSeries:
    """Iterate the one-period propagator, sampling observables after each period.

    The state is never renormalized; the accumulated norm drift is reported on
    the result and stays far below 1e-9 over 1e5 periods in practice.
    """
    if initial.L != params.L:
        raise ValueError(f"state has L={initial.L} but params have L={params.L}")
    if n_periods < 1:
        raise ValueError(f"n_periods must be >= 1, got {n_periods}")
    wanted = tuple(observables)
    for name in wanted:
        if name not in OBSERVABLE_CHOICES:
            raise ValueError(f"unknown observable {name!r}; choose from {OBSERVABLE_CHOICES}")
    want_sz = "sz" in wanted

    L = params.L
    theta = params.theta
    phases = _zz_phase_table(L, params.jt)
    psi0 = initial.amplitudes
    amps = psi0

    p_out = np.empty(n_periods)
    sz_out = np.empty((n_periods, L)) if want_sz else None
    for j in range(n_periods):
        amps = _kick(amps, L, theta)
        amps *= phases
        p_out[j] = abs(np.vdot(psi0, amps)) ** 2
        if want_sz:
            w = np.abs(amps) ** 2
            for site in range(L):
                sz_out[j, site] = _site_sz(w, L, site)

    drift = abs(float(np.linalg.norm(amps)) - 1.0)
    return StroboscopicSeries(
        params=params,
        n=np.arange(1, n_periods + 1),
        return_probability=p_out,
        sz=sz_out,
        norm_drift=drift,
    )


def iter_return_probability(initial: StateVector, params: FloquetParams):
    """Yield P(nT) against ``initial`` after each period, indefinitely.

    A lazy single-pass alternative to ``evolve_stroboscopic`` for scans that
    stop early (for instance once the return probability crosses a threshold):
    nothing is stored, the caller bounds the horizon.
    """
    if initial.L != params.L:
        raise ValueError(f"state has L={initial.L} but params have L={params.L}")
    phases = _zz_phase_table(params.L, params.jt)
    theta = params.theta
    psi0 = initial.amplitudes
    amps = psi0
    while True:
        amps = _kick(amps, params.L, theta)
        amps *= phases
        yield float(abs(np.vdot(psi0, amps)) ** 2)


def build_dense_propagator(params: FloquetParams) -> DensePropagator:
    """Materialize the one-period propagator D*K as an explicit matrix.

    Columns equal ``floquet_step`` applied to the basis states; the kick factor
    is built by sweeping the L single-site rotations over identity columns
    rather than by a 4**L Kronecker chain.
    """
    _require_sites(params.L, DENSE_MAX_SITES, "dense propagator")
    L = params.L
    dim = 1 << L
    c = np.cos(params.theta)
    s = np.sin(params.theta)
    U = np.eye(dim, dtype=np.complex128)
    for i in range(L):
        # Middle axis is bit i of the row index; columns ride along in the last axis.
        view = U.reshape(1 << (L - 1 - i), 2, (1 << i) * dim)
        U = (c * view - 1j * s * view[:, ::-1, :]).reshape(dim, dim)
    U *= _zz_phase_table(L, params.jt)[:, None]
    return DensePropagator(L, U)
