"""Two boundary-of-tameness galleries at desk scale.

The earring truncations show the rank of a fixed structure map growing
without bound as the truncation deepens; the shrinking-interval product
family shows why a positive persistence floor is needed before counting
anything, and what the radical does to attained endpoints.
"""

from pershom import (
    cap_number,
    constancy_witness,
    diagram_of,
    hawaiian_rank_sweep,
    product_family,
    radical,
)

print("earring truncations: rank of H_1(f_<=s -> f_<=t) for any 1 <= s < t")
for k, rank in hawaiian_rank_sweep(1, 12):
    print(f"  k={k:2d}  rank={rank:2d}  {'#' * rank}")
print("the ranks grow linearly in k, so no single bound works for the")
print("untruncated limit: its persistence module is not tame.\n")

print("product family [0,1), [0,1/2), ..., [0,1/8):")
family = product_family(8)
for degree, interval in family:
    print(f"  H_{degree}: {interval}")

print("\nradical opens every attained left endpoint:")
for degree, interval in radical(family):
    print(f"  H_{degree}: {interval}")

diagram = diagram_of(family)
print("\ncounting without a persistence floor would see all 8 bars;")
for eps in (0.5, 0.25, 0.1, 0.05):
    print(f"  eps={eps:4.2f}: aggregated cap number in degree 0 = {cap_number(diagram, 0, eps)}")
print("as eps shrinks the count climbs toward the full (in the limit,")
print("infinite) family -- the floor is what keeps cap numbers finite.")

w = constancy_witness(family, 0)
print(f"\nthe module is constant below t0={w.t0} and above t1={w.t1}.")
