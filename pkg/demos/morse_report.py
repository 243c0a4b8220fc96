"""Cap numbers and the Morse-inequality report on a small diagram.

Shows the two cap-number flavors (per value vs aggregated), the exact
identity tying caps, essential dimensions, and finite-lifetime counts
together, and what happens when the hypothesis of the inequalities fails.
"""

import math

from pershom import (
    PersistenceDiagram,
    PreconditionViolated,
    cap_number,
    cap_number_at,
    essential_dimension,
    morse_check,
    nu,
)

diagram = PersistenceDiagram({0: [(0, math.inf), (1, 2)], 1: [(3, 4)]})
eps = 0.5

print("diagram: degree 0 has (0, inf) and (1, 2); degree 1 has (3, 4)")
print(f"eps = {eps}\n")

print("per-value cap numbers (finite endpoints only):")
for t in (0.0, 1.0, 2.0, 3.0, 4.0):
    row = [cap_number_at(diagram, d, t, eps) for d in (0, 1, 2)]
    print(f"  t={t:3.0f}  m(d=0..2) = {row}")

print("\naggregated cap numbers (essential points admitted):")
for d in (0, 1, 2):
    print(
        f"  d={d}  m_eps={cap_number(diagram, d, eps)}"
        f"  p={essential_dimension(diagram, d)}"
        f"  nu={nu(diagram, d, eps)}"
    )
print("\nnote: the essential class (0, inf) is counted by the aggregated m_0")
print("but by none of the per-value sums, so the two flavors differ here.\n")

print("full report (identity m-p = nu(d-1)+nu(d) holds, partial sums >= 0):")
print(morse_check(diagram, eps, 2).render())

print("\na diagram with a -inf birth violates the hypothesis:")
bad = PersistenceDiagram({0: [(-math.inf, 1.0)]})
try:
    morse_check(bad, eps, 2)
except PreconditionViolated as exc:
    print(f"  PreconditionViolated: {exc}")
