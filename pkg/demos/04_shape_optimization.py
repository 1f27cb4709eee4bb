"""Volume-constrained shape descent in the plane.

Starting from a cos(2 theta)-perturbed disk below the critical mass, a
pattern search over Fourier boundary coefficients (with exact volume
projection) drains the perturbation and lands near the ball energy --
numerical evidence for the ball being the minimizer at small mass.  A
perturbation energy curve around the disk shows the same thing locally.
"""

from dropkit import (
    FourierShape,
    RieszParams,
    ball_constants,
    ball_energy,
    critical_mass,
    optimize_shape,
    perturbation_curve,
)


def main():
    params = RieszParams(2, 1.0)
    constants = ball_constants(params)
    m = 0.5 * critical_mass(params, constants)
    ref = ball_energy(params, m, constants).total
    print(f"mass m = {m:.4f} (half of m*), ball energy = {ref:.6f}")

    start = FourierShape(1.0, (0.0, 0.3))
    res = optimize_shape(
        params, m, 2, opts={"h": 0.03, "max_iter": 150, "step_min": 1e-3}, start=start
    )
    print("\ndescent history (iteration, total energy)")
    for i, tot in res.history[:: max(1, len(res.history) // 8)]:
        print(f"  {i:4d}  {tot:.6f}")
    print(f"  final {res.energy.total:.6f}  ({(res.energy.total - ref) / ref:+.2%} vs ball)")
    print(f"  final coefficients: {[round(a, 4) for a in res.shape.cos_coeffs]}")

    print("\nenergy along the cos(2 theta) perturbation direction")
    eps = [-0.2, -0.1, 0.0, 0.1, 0.2]
    for e, tot in perturbation_curve(params, m, 2, eps, opts={"h": 0.02}):
        print(f"  eps = {e:+.2f}: total = {tot:.6f}")


if __name__ == "__main__":
    main()
