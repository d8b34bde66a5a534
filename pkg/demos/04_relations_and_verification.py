"""End to end: assemble relations, extract powers of r, verify spans.

This is the headline computation.  For the two-marked genus-1 space the
assembled relation with leg vector (1, 0) at r = 3 is

    7 psi_1 - 5 psi_2 + 5 kappa_1 - delta_irr - 7 delta_{0,{1,2}} = 0,

and together with the relations extracted from the symbolic-in-r assembly the
span is exactly the known complete set of degree-2 relations.
"""

from fractions import Fraction

from rspinrel import (
    ac_relations,
    assemble_relation,
    divisor_generators,
    extract_r_coefficients,
    graph_contribution_terms,
    ppz_relation_set,
    pullback_genus2,
    spans_equal,
    system_matrix_det,
    DegreeGateError,
    RSpinTheory,
)


def show(rel, basis):
    vec = rel.normalized_vector(basis)
    terms = " ".join(
        f"{'+' if c > 0 else '-'} {abs(c)}*{d.render()}"
        for c, d in zip(vec, basis) if c
    )
    print("  ", terms.lstrip("+ "), "= 0")


# --- genus 1, two markings -------------------------------------------------
basis = tuple(divisor_generators(1, 2))
print("assembled relations on the two-marked genus-1 space at r = 3:")
for a_vec in ((1, 0), (0, 1)):
    show(assemble_relation(1, 2, a_vec, 3), basis)

print("\nsymbolic in r, then split by powers of r:")
symbolic = assemble_relation(1, 2, (1, 0), symbolic=True)
for rel in extract_r_coefficients(symbolic).relations:
    print(f"  at {rel.provenance.r_mode}:")
    show(rel, basis)

report = spans_equal(ppz_relation_set(1, 2, 3), ac_relations(1, 2))
print("\nspan equals the known complete set:", report.equal,
      f"(rank {report.rank_union})")

# The same span arises for every r; the relations themselves differ.
for r in (4, 5):
    print(f"span at r={r} equals span at r=3:",
          spans_equal(ppz_relation_set(1, 2, r), ppz_relation_set(1, 2, 3)).equal)

# --- genus 2 ---------------------------------------------------------------
basis2 = tuple(divisor_generators(2, 0))
rel2 = assemble_relation(2, 0, (), 3)
print("\nunmarked genus-2 relation at r = 3 (5 kappa = irr + 7 split):")
show(rel2, basis2)

basis22 = tuple(divisor_generators(2, 2))
print("pulled back to two markings:")
show(pullback_genus2(rel2, 2), basis22)

# --- genus 3 and 4: the gates ----------------------------------------------
terms = graph_contribution_terms(3, 0, (), RSpinTheory(3))
print("\ngenus 3: every graph contribution vanishes:",
      all(t.coefficient == 0 for t in terms))
try:
    assemble_relation(4, 0, (), 3)
except DegreeGateError as exc:
    print("genus 4 is refused: class degree", exc.witten_degree)

# --- the determinant of the genus-1 system ---------------------------------
print("\ndeterminant of the (n+1) x (n+1) genus-1 system:")
for n in (1, 2, 3):
    rep = system_matrix_det(n, 3)
    print(f"  n={n}: det = {rep.det}, product form -((r-1)(r-2)/2)^n = "
          f"{rep.product_form_value}, stated closed form = {rep.reference_value}")
print("the product form holds for every n; the stated closed form only at n=2.")
assert system_matrix_det(2, 3).det == Fraction(-1)
