"""Closed-form few-flip predictions for the polarized-state return probability.

Starting from the all-up state, the kick leaks amplitude into configurations
with flipped spins while the Ising phase makes single-flip paths interfere
with phase ``exp(-i j JT)`` per elapsed kick ``j``.  Keeping at most one flip
gives closed forms for the early return probability and its stroboscopic
envelope:

* after two periods,
  ``P(2T) ~= |cos(eps)^{2L} - L exp(-i JT) cos(eps)^{2L-2} sin(eps)^2|^2``,
  whose lowest order in ``eps`` is ``|1 - L eps^2 (1 + exp(-i JT))|^2``;
* after ``2n`` periods the single-flip amplitude per site is
  ``|c1(2n)| = eps |sin(n JT) / sin(JT/2)|`` (the geometric sum of the ``2n``
  kick phases ``exp(-i j JT)``, j = 0 .. 2n-1), and
  ``P(2nT) ~= 1 - L c1^2``.

These are perturbative truncations: the neglected weight is O(eps^4) per
bond pair and grows with n, so they are cross-checks for the exact engine at
small ``eps``, not substitutes for it.  ``predicted_return`` clamps negative
predictions to zero and flags them as out of the formula's validity domain.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

#: |sin(JT/2)| below this is treated as the removable singularity JT = 2 pi m.
_SINGULARITY_TOL = 1e-12


@dataclass(frozen=True)
class MagnonPrediction:
    """Single-flip-model prediction for P(2nT) from a polarized start."""

    n: int
    c1_magnitude: float
    predicted_P: float
    out_of_validity: bool


def c1_magnitude(n: int, jt: float, epsilon: float) -> float:
    """Single-flip amplitude magnitude after 2n periods: eps |sin(n JT)/sin(JT/2)|.

    At the removable singularity JT = 2 pi m the analytic limit 2 n |eps| is
    returned.
    """
    if n < 0:
        raise ValueError(f"pair index must be >= 0, got n={n}")
    denominator = math.sin(jt / 2.0)
    if abs(denominator) < _SINGULARITY_TOL:
        return 2.0 * n * abs(epsilon)
    return abs(epsilon) * abs(math.sin(n * jt) / denominator)


def predicted_P2T(L: int, jt: float, epsilon: float) -> float:
    """Lowest-order two-period return probability |1 - L eps^2 (1 + e^{-i JT})|^2."""
    amplitude = 1.0 - L * epsilon**2 * (1.0 + cmath.exp(-1j * jt))
    return abs(amplitude) ** 2


def predicted_P2T_unexpanded(L: int, jt: float, epsilon: float) -> float:
    """Two-period return probability with the kick trigonometry kept unexpanded.

    ``|cos(eps)^{2L} - L exp(-i JT) cos(eps)^{2L-2} sin(eps)^2|^2``.  Exact in
    the zero- and one-flip sector; the first neglected contributions are the
    two-flip ones of relative size ~ L^2 eps^4.
    """
    c = math.cos(epsilon)
    s = math.sin(epsilon)
    amplitude = c ** (2 * L) - L * cmath.exp(-1j * jt) * c ** (2 * L - 2) * s**2
    return abs(amplitude) ** 2


def predicted_return(n: int, L: int, jt: float, epsilon: float) -> MagnonPrediction:
    """Single-flip-model P(2nT) = 1 - L c1(n)^2 from a polarized start.

    Negative values mean the flipped weight L c1^2 left the formula's validity
    domain (it needs L c1^2 << 1); they are clamped to 0 and flagged.
    """
    c1 = c1_magnitude(n, jt, epsilon)
    raw = 1.0 - L * c1**2
    clamped = raw < 0.0
    return MagnonPrediction(
        n=n,
        c1_magnitude=c1,
        predicted_P=max(0.0, raw),
        out_of_validity=clamped,
    )
