"""The three photon-source schemes feeding the multiport, with their state
constructions, stage probabilities, and production-rate formulas.

Schemes:
  * ``sps``  - independent single-photon sources combined on an input cascade;
  * ``ncl``  - N non-collinear pair sources sharing one output mode, followed
               by projective measurements on the partner modes;
  * ``cl``   - the N-th order emission of one collinear type-II pair source,
               split into 2N modes and projected on half of them.

Mode registers for joint states are ordered [a, b_1, ..., b_N].
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial, sqrt
from typing import Sequence

import numpy as np

from .fock import (
    FockVector,
    PolarizationAmplitude,
    apply_creation,
    basis_state,
    product_state,
    vacuum,
    H,
    V,
)
from .multiport import apply_mode_isometry, build_cascade, postselection_probability
from .symmetric import normalization_squared

PSI_MINUS = "psi-"
PSI_PLUS = "psi+"


@dataclass(frozen=True)
class SourceRates:
    """Emission rates of the elementary sources (events per unit time)."""

    c_sps: float = 1.0
    c_ncl: float = 1.0
    c_cl: float = 1.0

    def __post_init__(self):
        if min(self.c_sps, self.c_ncl, self.c_cl) < 0:
            raise ValueError("source rates must be non-negative")


@dataclass(frozen=True)
class SchemeRate:
    """One scheme's stage breakdown: rate = multiplicity * p_input * p_output."""

    multiplicity_factor: float
    p_input: float
    p_output: float
    rate: float


@dataclass(frozen=True)
class RateReport:
    n: int
    norm_squared: float
    sps: SchemeRate
    ncl: SchemeRate
    cl: SchemeRate


def _check_kind(kind: str) -> int:
    if kind == PSI_MINUS:
        return -1
    if kind == PSI_PLUS:
        return +1
    raise ValueError(f"kind must be {PSI_MINUS!r} or {PSI_PLUS!r}, got {kind!r}")


def sps_combine(params: Sequence[PolarizationAmplitude]) -> tuple[FockVector, float]:
    """Single-photon sources merged into mode a.

    Returns the normalized N-photon input state and the probability that all
    N photons end up in mode a: norm_squared(params) / N^N.
    """
    params = list(params)
    if not params:
        raise ValueError("params must be non-empty")
    n = len(params)
    psi = product_state(params)
    nsq = psi.norm_squared()
    return psi.scaled(1.0 / sqrt(nsq)), nsq / n ** n


def sps_combine_simulated(params: Sequence[PolarizationAmplitude]) -> tuple[FockVector, float]:
    """Explicit input-cascade simulation of the single-photon-source merge.

    Puts one photon in each input mode, applies the reversed cascade unitary,
    and projects on all photons sharing mode a.  Slower than ``sps_combine``
    but independent of the closed-form probability.
    """
    params = list(params)
    n = len(params)
    state = vacuum(n)
    for i, p in enumerate(params):
        term = apply_creation(state, i, H).scaled(p.alpha) + apply_creation(state, i, V).scaled(p.beta)
        state = term
    # the input multiport is the output cascade run backwards: e_i -> a with
    # amplitude t_i, i.e. the transpose of the cascade unitary
    u = build_cascade(n).unitary.T
    mixed = apply_mode_isometry(state, u)
    # keep only the all-photons-in-mode-0 component
    kept = {}
    for key, amp in mixed.items():
        if sum(key[2:]) == 0:
            kept[key[:2]] = amp
    merged = FockVector(1, kept)
    prob = merged.norm_squared()  # input was normalized
    return merged.scaled(1.0 / sqrt(prob)), prob


def bell_pair(kind: str = PSI_MINUS, pair_index: int = 1) -> FockVector:
    """A Bell pair (a_H^dag b_V^dag -/+ a_V^dag b_H^dag)|0>/sqrt(2) on modes (a, b_i)."""
    sign = _check_kind(kind)
    s = 1.0 / sqrt(2.0)
    return FockVector(2, {(1, 0, 0, 1): s, (0, 1, 1, 0): sign * s})


def ncl_joint_state(n: int, kind: str = PSI_MINUS) -> FockVector:
    """First-order emission of N non-collinear pair sources sharing mode a.

    The product of N Bell-pair factors has squared norm (N+1)!; the returned
    state is divided by sqrt((N+1)!) and its unit norm is asserted rather than
    assumed.
    """
    sign = _check_kind(kind)
    if n < 1:
        raise ValueError("need at least one pair source")
    state = vacuum(n + 1)
    for i in range(1, n + 1):
        term = apply_creation(apply_creation(state, 0, H), i, V)
        other = apply_creation(apply_creation(state, 0, V), i, H)
        state = (term + other.scaled(sign)).scaled(1.0 / sqrt(2.0))
    # state currently = product / 2^{N/2}; rescale to product / sqrt((N+1)!)
    unnormalized_nsq = state.norm_squared() * 2 ** n
    if abs(unnormalized_nsq - factorial(n + 1)) > 1e-9 * factorial(n + 1):
        raise AssertionError(
            f"joint-state norm check failed: {unnormalized_nsq} != {factorial(n + 1)}"
        )
    return state.scaled(sqrt(2 ** n / factorial(n + 1)))


def projector_state(params: Sequence[PolarizationAmplitude], kind: str = PSI_MINUS) -> FockVector:
    """Separable projection target on the b modes.

    One photon per b_i, polarized orthogonally to the desired epsilon_i:
    (alpha_i* b_V^dag - beta_i* b_H^dag) for the psi- sources, with the sign
    flipped for psi+ to compensate the sources' relative phase.
    """
    sign = _check_kind(kind)
    params = list(params)
    n = len(params)
    state = vacuum(n)
    for i, p in enumerate(params):
        term = apply_creation(state, i, V).scaled(p.alpha.conjugate())
        other = apply_creation(state, i, H).scaled(p.beta.conjugate())
        state = term + other.scaled(sign)
    return state


def project_onto(joint: FockVector, projector: FockVector) -> tuple[FockVector, float]:
    """Partial inner product <projector| over the trailing b-mode register.

    Returns the residual on the leading modes and the success probability
    (squared norms of residual, joint and projector all accounted for, so
    unnormalized inputs compose correctly).
    """
    m = projector.modes
    lead = joint.modes - m
    if lead < 1:
        raise ValueError("projector register must leave at least one leading mode")
    residual: dict = {}
    for key, amp in joint.items():
        pamp = projector.amplitude(key[2 * lead:])
        if pamp != 0:
            head = key[: 2 * lead]
            residual[head] = residual.get(head, 0.0) + pamp.conjugate() * amp
    res = FockVector(lead, residual)
    denom = joint.norm_squared() * projector.norm_squared()
    prob = res.norm_squared() / denom if denom > 0 else 0.0
    return res, prob


def dicke_2n_construction(n: int, kind: str = PSI_PLUS) -> FockVector:
    """Joint pair-source state with mode a distributed into N output modes.

    Returns a FockVector on 2N modes: A = modes 0..N-1 (the multiport outputs)
    followed by B = modes N..2N-1 (the untouched partner modes).  With psi+
    sources the one-per-mode component is the balanced 2N-qubit Dicke state
    with N excitations; with psi- it carries alternating-sign Schmidt weights.
    """
    joint = ncl_joint_state(n, kind)
    t = build_cascade(n).amplitudes
    iso = np.zeros((2 * n, n + 1), dtype=complex)
    iso[:n, 0] = t
    for i in range(n):
        iso[n + i, 1 + i] = 1.0
    return apply_mode_isometry(joint, iso)


def cl_input_state(n: int) -> FockVector:
    """N-th order collinear type-II emission (a_H^dag a_V^dag)^N |0> / N!.

    The 1/N! prefactor is exactly the norm of the operator product, which is
    asserted here; the result is the single basis state with n_H = n_V = N.
    """
    if n < 1:
        raise ValueError("emission order must be at least 1")
    state = vacuum(1)
    for _ in range(n):
        state = apply_creation(apply_creation(state, 0, H), 0, V)
    nsq = state.norm_squared()
    if abs(nsq - factorial(n) ** 2) > 1e-9 * factorial(n) ** 2:
        raise AssertionError(f"collinear norm check failed: {nsq} != {factorial(n) ** 2}")
    return state.scaled(1.0 / factorial(n))


def cl_distribution_probability(n: int) -> float:
    """Probability that the 2N collinear photons split one per mode: (2N)!/(2N)^(2N)."""
    if n < 1:
        raise ValueError("emission order must be at least 1")
    return postselection_probability(2 * n)


def rates(
    n: int,
    params: Sequence[PolarizationAmplitude],
    src: SourceRates = SourceRates(),
) -> RateReport:
    """Per-scheme production rates of the target state at the multiport output.

    Each rate is multiplicity_factor * p_input * p_output:

      sps: c^N            * [nsq/N^N]          * [N!/N^N]
      ncl: (c/2)^N (N+1)! * [nsq/(N+1)!]       * [N!/N^N]
      cl:  c^N (N!)^2     * [(2N)!/(2N)^(2N)]  * [nsq/(N+1)!]

    Note the printed closed forms give R_cl/R_ncl = (2N)!/((N+1)(2N)^N),
    which exceeds 1 for N >= 4 even though the collinear scheme is described
    as the least efficient; the formulas are reported as they stand.
    """
    params = list(params)
    if len(params) != n:
        raise ValueError(f"expected {n} parameters, got {len(params)}")
    nsq = normalization_squared(params)
    p_o = postselection_probability(n)

    sps_mult = src.c_sps ** n
    sps_in = nsq / n ** n
    sps = SchemeRate(sps_mult, sps_in, p_o, sps_mult * sps_in * p_o)

    ncl_mult = (src.c_ncl / 2.0) ** n * factorial(n + 1)
    ncl_in = nsq / factorial(n + 1)
    ncl = SchemeRate(ncl_mult, ncl_in, p_o, ncl_mult * ncl_in * p_o)

    cl_mult = src.c_cl ** n * factorial(n) ** 2
    cl_in = cl_distribution_probability(n)
    cl_out = nsq / factorial(n + 1)
    cl = SchemeRate(cl_mult, cl_in, cl_out, cl_mult * cl_in * cl_out)

    return RateReport(n, nsq, sps, ncl, cl)


def closed_form_rates(n: int, nsq: float, src: SourceRates = SourceRates()) -> dict:
    """The printed closed-form rate expressions, for cross-checking."""
    r_sps = src.c_sps ** n * nsq * factorial(n) / n ** (2 * n)
    r_ncl = src.c_ncl ** n * nsq * factorial(n) / (2 * n) ** n
    r_cl = (
        src.c_cl ** n
        * nsq
        * factorial(n)
        / (2 * n) ** n
        * factorial(2 * n)
        / ((n + 1) * (2 * n) ** n)
    )
    return {"sps": r_sps, "ncl": r_ncl, "cl": r_cl}
