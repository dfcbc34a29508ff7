"""Symmetric-state algebra: Dicke states, the c_k expansion, and the
root-based synthesis map from target symmetric states to source parameters.

The bridge object is the coefficient vector c_0..c_N of the single-mode
product state expanded over (a_V^dag)^k (a_H^dag)^(N-k) monomials.  Roots of
the associated degree-N polynomial give the ratios alpha_i/beta_i of the
source polarizations; degree deficiencies map to |H> photons.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb, factorial, sqrt
from typing import Sequence

import numpy as np

from .fock import PolarizationAmplitude

#: Relative threshold below which leading polynomial coefficients count as zero.
DEGREE_TOL = 1e-12

#: Default round-trip fidelity tolerance for synthesis.
SYNTHESIS_TOL = 1e-9


class SynthesisError(RuntimeError):
    """Raised when root finding or the synthesis round trip fails.

    Carries the round-trip residual (1 - fidelity) in ``residual``.
    """

    def __init__(self, message: str, residual: float | None = None):
        super().__init__(message)
        self.residual = residual


@dataclass(frozen=True)
class SymmetricCoefficients:
    """Coefficient vector c_0..c_N of a symmetric N-photon state."""

    n: int
    c: np.ndarray

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("photon number must be positive")
        c = np.asarray(self.c, dtype=complex)
        if c.shape != (self.n + 1,):
            raise ValueError(f"expected {self.n + 1} coefficients, got shape {c.shape}")
        if not np.any(c != 0):
            raise ValueError("coefficient vector must be nonzero")
        object.__setattr__(self, "c", c)


@dataclass(frozen=True)
class QubitStateVector:
    """Dense state vector over N polarization qubits.

    Index convention: qubit 0 is the most significant bit, bit value 1 = |V>,
    so ``basis_label`` reads left to right in mode order.
    """

    n: int
    amplitudes: np.ndarray

    def __post_init__(self):
        amp = np.asarray(self.amplitudes, dtype=complex)
        if amp.shape != (2 ** self.n,):
            raise ValueError(f"expected 2^{self.n} amplitudes, got shape {amp.shape}")
        object.__setattr__(self, "amplitudes", amp)

    def norm_squared(self) -> float:
        return float(np.vdot(self.amplitudes, self.amplitudes).real)

    def is_null(self) -> bool:
        return self.norm_squared() == 0.0

    def normalized(self) -> "QubitStateVector":
        nsq = self.norm_squared()
        if nsq == 0.0:
            raise ValueError("cannot normalize a zero state")
        return QubitStateVector(self.n, self.amplitudes / sqrt(nsq))

    def fidelity(self, other: "QubitStateVector") -> float:
        """|<self|other>| for unit vectors; global-phase blind."""
        if self.n != other.n:
            raise ValueError("qubit-count mismatch")
        return float(abs(np.vdot(self.amplitudes, other.amplitudes)))


def basis_label(index: int, n: int) -> str:
    """Bitstring label like 'HVH' for a computational-basis index."""
    return "".join("V" if (index >> (n - 1 - i)) & 1 else "H" for i in range(n))


def hamming_weight(index: int) -> int:
    return bin(index).count("1")


@dataclass(frozen=True)
class MajoranaPolynomial:
    """Polynomial p_0 + p_1 z + ... + p_N z^N whose roots parameterize a
    symmetric state, with p_k = (-1)^k sqrt(C(N,k)) c_k."""

    coefficients: np.ndarray

    def __post_init__(self):
        p = np.asarray(self.coefficients, dtype=complex)
        object.__setattr__(self, "coefficients", p)

    @property
    def degree(self) -> int:
        """Effective degree K: leading coefficients below tolerance are zero."""
        p = self.coefficients
        cutoff = DEGREE_TOL * np.max(np.abs(p))
        nonzero = np.nonzero(np.abs(p) > cutoff)[0]
        return int(nonzero[-1]) if nonzero.size else 0

    def __call__(self, z: complex) -> complex:
        return complex(np.polyval(self.coefficients[::-1], z))

    def roots(self) -> np.ndarray:
        """Roots via companion-matrix eigenvalues, Newton-polished."""
        k = self.degree
        if k == 0:
            return np.zeros(0, dtype=complex)
        p = self.coefficients[: k + 1]
        # numpy expects highest-order first; uses the balanced companion matrix
        raw = np.roots(p[::-1])
        dp = p[1:] * np.arange(1, k + 1)
        scale = float(np.max(np.abs(p)))
        polished = []
        for z in raw:
            for _ in range(4):
                fz = np.polyval(p[::-1], z)
                if abs(fz) <= 1e-12 * scale:
                    break
                dfz = np.polyval(dp[::-1], z)
                if dfz == 0:
                    break
                step = fz / dfz
                if abs(np.polyval(p[::-1], z - step)) < abs(fz):
                    z = z - step
                else:
                    break
            polished.append(z)
        return np.asarray(polished, dtype=complex)


def dicke_state(n: int, k: int) -> QubitStateVector:
    """Equal superposition of all n-qubit bitstrings with k qubits in |V>."""
    if not 0 <= k <= n:
        raise ValueError(f"excitation number k={k} out of range for n={n}")
    amp = np.zeros(2 ** n, dtype=complex)
    scale = 1.0 / sqrt(comb(n, k))
    for idx in range(2 ** n):
        if hamming_weight(idx) == k:
            amp[idx] = scale
    return QubitStateVector(n, amp)


def coefficients_from_params(params: Sequence[PolarizationAmplitude]) -> SymmetricCoefficients:
    """Expand the product state over the symmetric monomial basis.

    Uses the elementary-symmetric-polynomial recursion: with
    f_k = [z^k] prod_i (alpha_i + beta_i z), the tuple sum over all N!
    index orderings collapses to c_k = sqrt(C(N,k)) k!(N-k)! f_k.
    """
    params = list(params)
    if not params:
        raise ValueError("params must be non-empty")
    n = len(params)
    f = np.zeros(n + 1, dtype=complex)
    f[0] = 1.0
    for i, p in enumerate(params):
        hi = i + 1
        f[1 : hi + 1] = p.alpha * f[1 : hi + 1] + p.beta * f[:hi]
        f[0] *= p.alpha
    c = np.array(
        [sqrt(comb(n, k)) * factorial(k) * factorial(n - k) * f[k] for k in range(n + 1)],
        dtype=complex,
    )
    return SymmetricCoefficients(n, c)


def normalization_squared(params: Sequence[PolarizationAmplitude]) -> float:
    """Squared norm of the unnormalized product state: sum_k |c_k|^2 / N!."""
    coeffs = coefficients_from_params(params)
    return float(np.sum(np.abs(coeffs.c) ** 2) / factorial(coeffs.n))


def output_state(coeffs: SymmetricCoefficients) -> QubitStateVector:
    """Renormalized Dicke superposition sum_k c_k |D_N^(k)>."""
    n = coeffs.n
    amp = np.zeros(2 ** n, dtype=complex)
    per_string = [coeffs.c[k] / sqrt(comb(n, k)) for k in range(n + 1)]
    for idx in range(2 ** n):
        amp[idx] = per_string[hamming_weight(idx)]
    return QubitStateVector(n, amp).normalized()


def majorana_polynomial(coeffs: SymmetricCoefficients) -> MajoranaPolynomial:
    n = coeffs.n
    signs = np.array([(-1) ** k for k in range(n + 1)])
    binom = np.array([sqrt(comb(n, k)) for k in range(n + 1)])
    return MajoranaPolynomial(signs * binom * coeffs.c)


def params_from_coefficients(
    coeffs: SymmetricCoefficients, tol: float = SYNTHESIS_TOL
) -> list[PolarizationAmplitude]:
    """Invert the expansion: find source polarizations producing ``coeffs``.

    Each polynomial root z gives (alpha, beta) = (z, 1)/sqrt(1+|z|^2); the
    N - K degree-deficiency slots are |H> photons.  The round trip is checked
    against the requested tolerance and a failure raises SynthesisError.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    n = coeffs.n
    # overall scale of c is irrelevant to the roots; normalize for conditioning
    unit = SymmetricCoefficients(n, coeffs.c / np.linalg.norm(coeffs.c))
    poly = majorana_polynomial(unit)
    roots = poly.roots()
    params = []
    for z in roots:
        scale = sqrt(1.0 + abs(z) ** 2)
        params.append(PolarizationAmplitude(z / scale, 1.0 / scale))
    params.extend(PolarizationAmplitude.horizontal() for _ in range(n - len(roots)))

    target = output_state(unit)
    achieved = output_state(coefficients_from_params(params))
    residual = 1.0 - target.fidelity(achieved)
    if residual > tol:
        raise SynthesisError(
            f"synthesis round trip failed: residual {residual:.3e} exceeds tol {tol:.3e}",
            residual=residual,
        )
    return params


def project_qubits(
    state: QubitStateVector,
    positions: Sequence[int],
    onto: Sequence[PolarizationAmplitude],
) -> QubitStateVector:
    """Partial projection <s_1...s_m| at the given qubit positions.

    Returns the unnormalized residual on the remaining qubits, ordered as in
    the input state.
    """
    if len(positions) != len(onto):
        raise ValueError("positions and onto must have equal length")
    if len(set(positions)) != len(positions):
        raise ValueError("positions must be distinct")
    n = state.n
    keep = [q for q in range(n) if q not in set(positions)]
    m = len(keep)
    residual = np.zeros(2 ** m, dtype=complex)
    for idx in range(2 ** n):
        a = state.amplitudes[idx]
        if a == 0:
            continue
        weight = 1.0 + 0.0j
        for q, s in zip(positions, onto):
            bit = (idx >> (n - 1 - q)) & 1
            weight *= (s.beta if bit else s.alpha).conjugate()
            if weight == 0:
                break
        if weight == 0:
            continue
        out_idx = 0
        for j, q in enumerate(keep):
            out_idx |= ((idx >> (n - 1 - q)) & 1) << (m - 1 - j)
        residual[out_idx] += weight * a
    return QubitStateVector(m, residual)
