"""Walkthrough: from target Dicke coefficients to source settings and back.

Given a symmetric target state sum_k c_k |D_N^(k)>, the polynomial
sum_k (-1)^k sqrt(C(N,k)) c_k z^k is factored; each root z gives one photon
polarization (alpha, beta) = (z, 1)/sqrt(1+|z|^2), and missing degrees fill
with |H>.  Feeding those photons into the balanced multiport and keeping the
one-photon-per-output events reproduces the target exactly.
"""

import numpy as np

from symphot import (
    SymmetricCoefficients,
    majorana_polynomial,
    output_state,
    params_from_coefficients,
    run_pipeline,
)


def demo(name, n, c):
    coeffs = SymmetricCoefficients(n, np.asarray(c, dtype=complex))
    poly = majorana_polynomial(coeffs)
    params = params_from_coefficients(coeffs)
    achieved, p_o = run_pipeline(params)
    target = output_state(coeffs)

    print(f"--- {name} (N={n}) ---")
    print(f"  polynomial degree : {poly.degree}")
    print(f"  roots             : {np.round(poly.roots(), 6)}")
    for i, p in enumerate(params):
        print(f"  photon {i + 1}          : alpha={p.alpha:.6f}  beta={p.beta:.6f}")
    print(f"  success prob p_O  : {p_o:.6f}")
    print(f"  target fidelity   : {target.fidelity(achieved):.12f}")
    print()


if __name__ == "__main__":
    s = 1 / np.sqrt(2)
    demo("GHZ", 3, [s, 0, 0, s])
    demo("W", 3, [0, 1, 0, 0])
    demo("all-horizontal product", 3, [1, 0, 0, 0])

    rng = np.random.default_rng(42)
    c = rng.normal(size=5) + 1j * rng.normal(size=5)
    demo("random 4-photon target", 4, c / np.linalg.norm(c))
