"""Douglas energy quadrature: exactness, convergence, reparametrization.

For the unit circle with the identity parametrization the integrand is
constant and the energy is pi^2 exactly; the quadrature error then comes
from the piecewise-linear interpolation of the sampled curve and shrinks
quadratically.  A non-trivial monotone reparametrization raises the energy
above the minimum, as it should.
"""

import math

import numpy as np

from pershom import DouglasInput, douglas_eval


def circle(n):
    t = np.arange(n) * (2 * math.pi / n)
    return np.column_stack([np.cos(t), np.sin(t)])


pi2 = math.pi**2
print(f"target: pi^2 = {pi2:.12f}\n")

print("unit circle, identity parametrization, curve sampled at n points:")
print(f"{'n':>6} {'energy':>18} {'abs error':>12} {'order':>7}")
previous = None
for n in (16, 32, 64, 128, 256, 512):
    value = douglas_eval(DouglasInput.identity(circle(n), n))
    err = abs(value - pi2)
    order = f"{math.log2(previous / err):5.2f}" if previous else "    -"
    print(f"{n:>6} {value:>18.12f} {err:>12.3e} {order:>7}")
    previous = err

print("\nconstant curve has zero energy exactly:")
print(f"  {douglas_eval(DouglasInput.identity(np.zeros((32, 2)), 64))!r}")

print("\nmonotone reparametrizations move the energy above the minimum:")
n = 256
t = np.arange(n) * (2 * math.pi / n)
for strength in (0.0, 0.2, 0.5, 0.9):
    phi = t + strength * np.sin(t)
    value = douglas_eval(DouglasInput(circle(n), phi, n))
    print(f"  phi = t + {strength:3.1f} sin t  ->  {value:.6f}")
