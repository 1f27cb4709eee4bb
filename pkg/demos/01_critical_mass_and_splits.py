"""Critical mass and multi-ball splitting.

A single ball of mass m has energy
    E(m) = Per(B) + D(B) = c_per m^{(N-1)/N} + c_riesz m^{(2N-lam)/N}.
Below a critical mass m* the single ball beats every split into k equal
balls; above it, splitting wins.  This demo prints m* for a few (N, lam)
pairs, then sweeps a mass grid and reports the best split count.
"""

import numpy as np

from dropkit import (
    RieszParams,
    ball_constants,
    ball_energy,
    best_split,
    critical_mass,
    crossing_mass,
)


def main():
    print("critical masses")
    for N, lam in [(2, 0.5), (2, 1.0), (3, 1.0), (3, 2.0), (4, 1.0)]:
        params = RieszParams(N, lam)
        constants = ball_constants(params)
        m_star = critical_mass(params, constants)
        m_cross = crossing_mass(params, constants)
        print(
            f"  N={N} lam={lam}: m* = {m_star:.6f} "
            f"(root-finding route agrees to {abs(m_cross - m_star):.1e})"
        )

    params = RieszParams(3, 1.0)
    constants = ball_constants(params)
    m_star = critical_mass(params, constants)
    print(f"\nsplit sweep, N=3 lam=1 (m* = {m_star:.4f})")
    print(f"  {'m':>6} {'E(1 ball)':>12} {'best k':>7} {'E(best)':>12}")
    for m in np.arange(1.0, 16.0, 1.5):
        rep = best_split(params, constants, float(m), 6)
        one = ball_energy(params, float(m), constants).total
        print(f"  {m:6.2f} {one:12.5f} {rep.best_k:7d} {rep.best_total:12.5f}")


if __name__ == "__main__":
    main()
