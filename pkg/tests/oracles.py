"""Independent straight-line reference implementations.

These deliberately avoid the library's code paths (no numpy, no shared
helpers) so they can serve as oracles for the vectorized solvers and the
payoff evaluation.
"""

import itertools
import math


def oracle_payoff_total(position, loss_row, weight_row, emission, object_positions, pi_value):
    """Income minus damage, accumulated object by object."""
    total = 0.0
    for j, (ox, oy) in enumerate(object_positions):
        rho = math.sqrt((position[0] - ox) ** 2 + (position[1] - oy) ** 2)
        total += loss_row[j] / rho
        total -= weight_row[j] * emission / (2.0 * pi_value * rho * rho)
    return total


def profile_payoffs(tensor):
    """Plain dict {profile: payoff tuple} extracted from a PayoffTensor."""
    out = {}
    for profile in itertools.product(*(range(s) for s in tensor.shape)):
        out[profile] = tuple(float(v) for v in tensor.values[profile])
    return out


def oracle_nash(shape, payoffs, tolerance=0.0):
    """Deviation scan: keep a profile unless some player gains more than
    tolerance by switching one index."""
    found = []
    for profile in itertools.product(*(range(s) for s in shape)):
        stable = True
        for player in range(len(shape)):
            for alternative in range(shape[player]):
                deviated = list(profile)
                deviated[player] = alternative
                if payoffs[tuple(deviated)][player] > payoffs[profile][player] + tolerance:
                    stable = False
        if stable:
            found.append(profile)
    return found


def oracle_compromise(shape, payoffs, tolerance=0.0):
    """Returns (ideal, residuals, minimizers, min_residual) by direct scan."""
    n = len(shape)
    profiles = list(itertools.product(*(range(s) for s in shape)))
    ideal = [max(payoffs[u][i] for u in profiles) for i in range(n)]
    residuals = {u: max(ideal[i] - payoffs[u][i] for i in range(n)) for u in profiles}
    min_residual = min(residuals.values())
    minimizers = [u for u in profiles if residuals[u] <= min_residual + tolerance]
    return ideal, residuals, minimizers, min_residual


def central_difference_gradient(f, x, y, step=1e-5):
    """Two-sided finite differences of a scalar field."""
    d_x = (f(x + step, y) - f(x - step, y)) / (2.0 * step)
    d_y = (f(x, y + step) - f(x, y - step)) / (2.0 * step)
    return d_x, d_y
