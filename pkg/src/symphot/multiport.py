"""The output multiport: a beam-splitter cascade distributing N photons from
one spatial mode into N modes, plus post-selection on one photon per mode.

Splitter n has reflectivity 1/n (real orthogonal convention), which makes the
single-photon amplitude into every output equal to 1/sqrt(N).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from math import factorial, sqrt
from typing import Sequence

import numpy as np

from .fock import FockVector, H, V, PolarizationAmplitude, product_state
from .symmetric import QubitStateVector, coefficients_from_params

#: Tolerance for the balanced-amplitude check on cascade construction.
BALANCE_TOL = 1e-12


@dataclass(frozen=True)
class CascadeSpec:
    """A beam-splitter cascade 1 -> n modes.

    ``amplitudes`` is the single-photon output amplitude vector t_1..t_n;
    ``unitary`` is the full n x n mode transform (input enters mode 0).
    """

    n: int
    reflectivities: tuple
    amplitudes: np.ndarray
    unitary: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "amplitudes", np.asarray(self.amplitudes, dtype=complex))
        object.__setattr__(self, "unitary", np.asarray(self.unitary, dtype=complex))

    def with_output_phases(self, phases: Sequence[float]) -> "CascadeSpec":
        """Attach per-output phases t_j -> t_j e^{i phi_j} (diagnostic use)."""
        ph = np.exp(1j * np.asarray(phases, dtype=float))
        return CascadeSpec(self.n, self.reflectivities, self.amplitudes * ph,
                           np.diag(ph) @ self.unitary)


def build_cascade(n: int) -> CascadeSpec:
    """Compose splitters with reflectivity 1/k (k = 2..n) into one multiport."""
    if n < 1:
        raise ValueError("mode count must be at least 1")
    # the photon entering mode 0 meets BS_n first, so compose U = G_2 ... G_n;
    # BS_k couples the through line (mode 0) with output mode k-1
    u = np.eye(n)
    for k in range(2, n + 1):
        r = 1.0 / k
        g = np.eye(n)
        g[0, 0] = sqrt(1.0 - r)
        g[0, k - 1] = sqrt(r)
        g[k - 1, 0] = sqrt(r)
        g[k - 1, k - 1] = -sqrt(1.0 - r)
        u = u @ g
    t = u[:, 0].copy()
    if np.max(np.abs(np.abs(t) - 1.0 / sqrt(n))) > BALANCE_TOL:
        raise AssertionError("cascade amplitudes are not balanced")
    return CascadeSpec(n, tuple(1.0 / k for k in range(2, n + 1)), t, u)


# cache of single-basis-state expansions keyed by (matrix bytes, in-modes, key)
_EXPANSION_CACHE: dict = {}


def _apply_sum_creation(terms: dict, column: np.ndarray, pol: int) -> dict:
    """Apply sum_j column_j * a_{j,pol}^dag to a sparse amplitude map."""
    out = {}
    for key, amp in terms.items():
        for j, cj in enumerate(column):
            if cj == 0:
                continue
            idx = 2 * j + pol
            nj = key[idx]
            new = key[:idx] + (nj + 1,) + key[idx + 1:]
            out[new] = out.get(new, 0.0) + amp * cj * math.sqrt(nj + 1)
    return out


def _expand_basis_state(key: tuple, in_modes: int, matrix: np.ndarray) -> dict:
    """Expansion of one occupation basis state under a_{i,P}^dag -> sum_j M_ji a_{j,P}^dag."""
    cache_key = (matrix.tobytes(), matrix.shape, key)
    hit = _EXPANSION_CACHE.get(cache_key)
    if hit is not None:
        return hit
    out_modes = matrix.shape[0]
    norm = 1.0
    for n in key:
        norm *= math.factorial(n)
    terms = {(0,) * (2 * out_modes): 1.0 / math.sqrt(norm)}
    for i in range(in_modes):
        for pol in (H, V):
            col = matrix[:, i]
            for _ in range(key[2 * i + pol]):
                terms = _apply_sum_creation(terms, col, pol)
    _EXPANSION_CACHE[cache_key] = terms
    return terms


def apply_mode_isometry(state: FockVector, matrix: np.ndarray) -> FockVector:
    """Transform creation operators by an isometry on the spatial modes.

    ``matrix`` has shape (out_modes, in_modes) with orthonormal columns; both
    polarizations see the same spatial transform.
    """
    matrix = np.asarray(matrix, dtype=complex)
    if matrix.shape[1] != state.modes:
        raise ValueError("matrix column count must match input mode count")
    out_modes = matrix.shape[0]
    merged: dict = {}
    for key, amp in state.items():
        for out_key, coeff in _expand_basis_state(key, state.modes, matrix).items():
            merged[out_key] = merged.get(out_key, 0.0) + amp * coeff
    return FockVector(out_modes, merged)


def distribute(state: FockVector, spec: CascadeSpec) -> FockVector:
    """Distribute a single-mode state into the cascade's n output modes."""
    if state.modes != 1:
        raise ValueError("distribute expects a single-spatial-mode input")
    return apply_mode_isometry(state, spec.amplitudes.reshape(spec.n, 1))


def postselect_one_per_mode(state: FockVector) -> tuple[QubitStateVector, float]:
    """Project onto exactly one photon (either polarization) per spatial mode.

    Returns the renormalized projection as polarization qubits and the success
    probability relative to the input's squared norm.  A zero projection gives
    probability 0 and a null (all-zero) state.
    """
    total = state.norm_squared()
    if total == 0.0:
        raise ValueError("cannot post-select the zero vector")
    n = state.modes
    sel = np.zeros(2 ** n, dtype=complex)
    for key, amp in state.items():
        idx = 0
        ok = True
        for m in range(n):
            nh, nv = key[2 * m], key[2 * m + 1]
            if nh + nv != 1:
                ok = False
                break
            idx |= nv << (n - 1 - m)
        if ok:
            sel[idx] = amp
    proj = float(np.vdot(sel, sel).real)
    prob = proj / total
    if proj == 0.0:
        return QubitStateVector(n, sel), 0.0
    return QubitStateVector(n, sel / sqrt(proj)), prob


def run_pipeline(params: Sequence[PolarizationAmplitude]) -> tuple[QubitStateVector, float]:
    """Source parameters -> multiport -> one-per-mode post-selection.

    The success probability is N!/N^N independent of the polarizations.
    """
    params = list(params)
    if not params:
        raise ValueError("params must be non-empty")
    n = len(params)
    spec = build_cascade(n)
    psi = product_state(params)  # unnormalized; postselect divides by its norm
    distributed = distribute(psi, spec)
    return postselect_one_per_mode(distributed)


def postselection_probability(n: int) -> float:
    """Closed-form one-per-mode success probability N!/N^N."""
    if n < 1:
        raise ValueError("mode count must be at least 1")
    return factorial(n) / n ** n
