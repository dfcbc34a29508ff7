"""Sparse Fock-space algebra for multimode, two-polarization photonic states.

Basis states are occupation-number tuples with two entries per spatial mode,
``(n_H, n_V)`` pairs ordered by mode index.  Amplitudes live in a sparse dict;
nothing is ever implicitly normalized, so unnormalized intermediates compose
correctly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Mapping

#: Polarization labels used as indices into the per-mode occupation pair.
H = 0
V = 1

#: Stored amplitudes with modulus below this are dropped.
PRUNE_TOL = 1e-14

#: Tolerance on |alpha|^2 + |beta|^2 = 1 for single-photon polarizations.
POLARIZATION_NORM_TOL = 1e-12

OccupationState = tuple  # flat tuple of ints, 2 entries per spatial mode


@dataclass(frozen=True)
class PolarizationAmplitude:
    """A single photon's polarization state alpha|H> + beta|V>."""

    alpha: complex
    beta: complex

    def __post_init__(self):
        object.__setattr__(self, "alpha", complex(self.alpha))
        object.__setattr__(self, "beta", complex(self.beta))
        nsq = abs(self.alpha) ** 2 + abs(self.beta) ** 2
        if abs(nsq - 1.0) > POLARIZATION_NORM_TOL:
            raise ValueError(
                f"polarization amplitudes must satisfy |alpha|^2+|beta|^2=1, got {nsq!r}"
            )

    @classmethod
    def horizontal(cls) -> "PolarizationAmplitude":
        return cls(1.0, 0.0)

    @classmethod
    def vertical(cls) -> "PolarizationAmplitude":
        return cls(0.0, 1.0)

    @classmethod
    def from_unnormalized(cls, alpha: complex, beta: complex) -> "PolarizationAmplitude":
        norm = math.sqrt(abs(alpha) ** 2 + abs(beta) ** 2)
        if norm == 0.0:
            raise ValueError("zero polarization vector")
        return cls(alpha / norm, beta / norm)

    def overlap(self, other: "PolarizationAmplitude") -> complex:
        """<self|other> on the single-qubit polarization space."""
        return self.alpha.conjugate() * other.alpha + self.beta.conjugate() * other.beta


class FockVector:
    """Sparse complex-amplitude map over multimode occupation-number states.

    Immutable after construction.  Keys are flat tuples of length ``2 * modes``
    holding ``(n_H, n_V)`` per spatial mode.
    """

    __slots__ = ("modes", "_amp")

    def __init__(self, modes: int, amplitudes: Mapping[OccupationState, complex] | None = None):
        if modes < 0:
            raise ValueError("mode count must be non-negative")
        amp = {}
        if amplitudes:
            width = 2 * modes
            for key, a in amplitudes.items():
                if len(key) != width:
                    raise ValueError(f"key {key} does not match {modes} modes")
                if abs(a) > PRUNE_TOL:
                    amp[tuple(key)] = complex(a)
        object.__setattr__(self, "modes", modes)
        object.__setattr__(self, "_amp", amp)

    def __setattr__(self, name, value):
        raise AttributeError("FockVector is immutable")

    def items(self):
        return self._amp.items()

    def keys(self):
        return self._amp.keys()

    def __len__(self) -> int:
        return len(self._amp)

    def amplitude(self, key: OccupationState) -> complex:
        return self._amp.get(tuple(key), 0.0 + 0.0j)

    def norm_squared(self) -> float:
        return sum(a.real * a.real + a.imag * a.imag for a in self._amp.values())

    def is_zero(self) -> bool:
        return not self._amp

    def scaled(self, factor: complex) -> "FockVector":
        return FockVector(self.modes, {k: a * factor for k, a in self._amp.items()})

    def __add__(self, other: "FockVector") -> "FockVector":
        if self.modes != other.modes:
            raise ValueError("mode-count mismatch in FockVector addition")
        out = dict(self._amp)
        for k, a in other._amp.items():
            out[k] = out.get(k, 0.0) + a
        return FockVector(self.modes, out)

    def normalized(self) -> "FockVector":
        nsq = self.norm_squared()
        if nsq == 0.0:
            raise ValueError("cannot normalize a zero vector")
        return self.scaled(1.0 / math.sqrt(nsq))

    def __repr__(self) -> str:
        terms = ", ".join(f"{k}: {a:.6g}" for k, a in sorted(self._amp.items()))
        return f"FockVector(modes={self.modes}, {{{terms}}})"


def vacuum(modes: int) -> FockVector:
    """The vacuum state |0> on the given number of spatial modes."""
    return FockVector(modes, {(0,) * (2 * modes): 1.0})


def basis_state(modes: int, key: OccupationState, amplitude: complex = 1.0) -> FockVector:
    return FockVector(modes, {tuple(key): amplitude})


def apply_creation(state: FockVector, mode: int, pol: int) -> FockVector:
    """Apply the creation operator for (mode, pol): |n> -> sqrt(n+1)|n+1>."""
    if not 0 <= mode < state.modes:
        raise ValueError(f"mode {mode} out of range for {state.modes} modes")
    if pol not in (H, V):
        raise ValueError(f"polarization must be H (0) or V (1), got {pol}")
    idx = 2 * mode + pol
    out = {}
    for key, amp in state.items():
        n = key[idx]
        new = key[:idx] + (n + 1,) + key[idx + 1:]
        out[new] = out.get(new, 0.0) + amp * math.sqrt(n + 1)
    return FockVector(state.modes, out)


def apply_polarized_creation(state: FockVector, mode: int, pol_state: PolarizationAmplitude) -> FockVector:
    """Apply alpha * a_H^dag + beta * a_V^dag on the given mode."""
    out = vacuum(state.modes).scaled(0.0)
    if pol_state.alpha != 0:
        out = out + apply_creation(state, mode, H).scaled(pol_state.alpha)
    if pol_state.beta != 0:
        out = out + apply_creation(state, mode, V).scaled(pol_state.beta)
    return out


def product_state(params: Iterable[PolarizationAmplitude], mode: int = 0, modes: int = 1) -> FockVector:
    """Unnormalized N-photon product state prod_i (alpha_i a_H^dag + beta_i a_V^dag)|0>.

    The caller divides by the polarization-dependent normalization; the squared
    norm of the result equals ``symmetric.normalization_squared(params)``.
    """
    params = list(params)
    if not params:
        raise ValueError("params must be non-empty")
    if not 0 <= mode < modes:
        raise ValueError(f"mode {mode} out of range for {modes} modes")
    state = vacuum(modes)
    for p in params:
        state = apply_polarized_creation(state, mode, p)
    return state


def inner_product(x: FockVector, y: FockVector) -> complex:
    """<x|y>, conjugate-linear in the first argument."""
    if x.modes != y.modes:
        raise ValueError("mode-count mismatch in inner product")
    # iterate the smaller map
    if len(x) > len(y):
        return sum(y.amplitude(k).conjugate() * a for k, a in x.items()).conjugate()
    return sum(a.conjugate() * y.amplitude(k) for k, a in x.items())


def tensor(x: FockVector, y: FockVector) -> FockVector:
    """Join two mode registers; amplitudes multiply."""
    out = {}
    for kx, ax in x.items():
        for ky, ay in y.items():
            out[kx + ky] = ax * ay
    return FockVector(x.modes + y.modes, out)


def apply_polarization_phase(state: FockVector, mode: int, phase_h: complex, phase_v: complex) -> FockVector:
    """Multiply each basis amplitude by phase_h**n_H * phase_v**n_V for one mode."""
    if not 0 <= mode < state.modes:
        raise ValueError(f"mode {mode} out of range for {state.modes} modes")
    idx = 2 * mode
    out = {}
    for key, amp in state.items():
        out[key] = amp * phase_h ** key[idx] * phase_v ** key[idx + 1]
    return FockVector(state.modes, out)


def total_photons(key: OccupationState) -> int:
    return sum(key)
