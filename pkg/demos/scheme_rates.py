"""Compare the production rates of the three source schemes.

Three ways to feed N photons with polarizations epsilon_i into the multiport:

  sps - N independent single-photon sources merged into one mode;
  ncl - N non-collinear pair sources sharing an output mode, with the target
        polarizations imprinted by projecting the partner photons;
  cl  - the N-th order emission of a single collinear pair source, split over
        2N modes and projected on half of them.

Each rate factors as multiplicity * p_input * p_output.  At equal source
rates, R_ncl / R_sps = (N/2)^N, so the pair-source scheme wins for N > 2.
Note the closed-form R_cl / R_ncl = (2N)!/((N+1)(2N)^N) exceeds 1 for N >= 4
even though the collinear scheme is usually described as the least efficient;
the formulas are reported as they stand.
"""

import numpy as np

from symphot import PolarizationAmplitude, SourceRates, rates


def random_params(n, rng):
    raw = rng.normal(size=(n, 4))
    return [
        PolarizationAmplitude.from_unnormalized(
            complex(r[0], r[1]), complex(r[2], r[3])
        )
        for r in raw
    ]


if __name__ == "__main__":
    rng = np.random.default_rng(1)
    src = SourceRates(c_sps=1.0, c_ncl=1.0, c_cl=1.0)

    header = f"{'N':>2} {'R_sps':>12} {'R_ncl':>12} {'R_cl':>12} {'ncl/sps':>10} {'cl/ncl':>10}"
    print(header)
    print("-" * len(header))
    for n in range(1, 7):
        report = rates(n, random_params(n, rng), src)
        ncl_sps = report.ncl.rate / report.sps.rate
        cl_ncl = report.cl.rate / report.ncl.rate
        note = "  <- cl/ncl > 1" if cl_ncl > 1 else ""
        print(
            f"{n:>2} {report.sps.rate:>12.4e} {report.ncl.rate:>12.4e} "
            f"{report.cl.rate:>12.4e} {ncl_sps:>10.4f} {cl_ncl:>10.4f}{note}"
        )
