"""Divisor classes and the decorated graphs that carry the relation terms.

Degree-2 cohomology has a standard generator list per (g, n); each relation
term traces back to a decorated stable graph of codimension 1.
"""

from rspinrel import (
    RSpinTheory,
    canonical_divisor,
    delta_sep,
    divisor_class_of,
    divisor_generators,
    enumerate_contributing_graphs,
    excluded_contributions,
    placement_count,
)

# Generator lists.  Separating boundary classes are canonical with respect to
# swapping the two sides of the node.
for g, n in ((1, 2), (1, 3), (2, 0), (2, 2)):
    gens = divisor_generators(g, n)
    print(f"(g={g}, n={n}): {len(gens)} generators:",
          ", ".join(d.render() for d in gens))

# Canonicalization in action: the genus-2 side with the empty marking set is
# rewritten through its complement, and in genus 3 the two labels of the same
# boundary divisor collapse.
print("\n(2, {}) on the 2-marked genus-2 space ->",
      canonical_divisor(delta_sep(2, ()), 2, 2).render())
print("(2, {}) on the unmarked genus-3 space ->",
      canonical_divisor(delta_sep(2, ()), 3, 0).render())

# The graphs that can contribute in codimension 1.
theory = RSpinTheory(3)
print("\ncontributing graphs for (g=1, n=2):")
contribs = enumerate_contributing_graphs(1, 2, theory)
for c in contribs:
    edge_note = f"{len(c.graph.edges)} edge(s)" if c.graph.edges else "smooth"
    print(f"  {c.kind:>16}: {edge_note}, |Aut| = {c.automorphism_order}, "
          f"gluing degree = {c.pushforward_degree}")
print("total decoration placements:", placement_count(contribs))

print("\nboundary classes of the one-edge graphs:")
for c in contribs:
    if c.graph.edges:
        print(f"  {c.kind} -> {divisor_class_of(c.graph, 1, 2).render()}")

print("\nfamilies excluded from the enumeration:")
for record in excluded_contributions(1, 2):
    print(f"  {record.description}: {record.reason}")
