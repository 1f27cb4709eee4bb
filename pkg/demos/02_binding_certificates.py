"""Binding certificates below the critical mass.

For m < m*, every split of the mass into s m and (1-s) m loses against
the single ball; the margin is the binding deficit.  A dilation argument
turns the ball energies into a rigorous lower bound for the deficit, so
a positive scan over s certifies strict binding at that mass.  The demo
also checks the entropy-comparison inequality underlying the argument
and the algebraic identity behind uniqueness of the minimizing split.
"""

import numpy as np

from dropkit import (
    RieszParams,
    ball_constants,
    binding_scan,
    critical_mass,
    lemma_g_verify,
    uniqueness_gap,
)


def main():
    params = RieszParams(3, 1.0)
    constants = ball_constants(params)
    m_star = critical_mass(params, constants)

    print(f"binding scans, N=3 lam=1, m* = {m_star:.4f}")
    print(f"  {'m':>7} {'min deficit':>12} {'argmin s':>9}  verdict")
    for f in (0.25, 0.5, 0.75, 0.9, 0.99, 1.0, 1.05):
        rep = binding_scan(params, constants, f * m_star, 2001)
        print(
            f"  {f * m_star:7.4f} {rep.min_deficit:12.3e} {rep.argmin_s:9.4f}  {rep.verdict}"
        )

    print("\nentropy comparison g(alpha, s) >= 0 on (0,1), sampled alphas")
    for alpha in (0.25, 0.75, 1.25, 1.75):
        rep = lemma_g_verify(alpha, 50_000)
        print(
            f"  alpha={alpha}: min g = {rep.min_g:.2e}, "
            f"h changes sign once at s = {rep.h_sign_change:.4f} -> {'ok' if rep.passed else 'FAIL'}"
        )

    print("\nuniqueness identity residual (should be ~ machine precision)")
    for f in (0.25, 0.5, 0.75, 0.99):
        gap = uniqueness_gap(params, constants, f * m_star)
        print(f"  m = {f:.2f} m*: {gap:.2e}")


if __name__ == "__main__":
    main()
