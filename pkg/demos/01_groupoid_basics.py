"""
Building and validating small groupoids
========================================

Two extreme shapes bracket everything else: the pair groupoid, where every
ordered pair of objects carries exactly one arrow, and the null groupoid,
where the only arrows are the units themselves.
"""

from groupoids import (
    FiniteGroupoid,
    fiber,
    is_transitive,
    isotropy_group,
    null_groupoid,
    pair_groupoid,
    validate_groupoid,
)

g = pair_groupoid(["a", "b", "c"])
print("pair groupoid on 3 objects:", len(g.arrows), "arrows")
print("valid:", validate_groupoid(g).valid)
print("transitive:", is_transitive(g))

# arrows leaving a; arrows arriving at c
print("source fiber at a:", sorted(fiber(g, "source", "a")))
print("target fiber at c:", sorted(fiber(g, "target", "c")))

# exactly one loop per object, so the isotropy groups are trivial
print("isotropy at b:", sorted(isotropy_group(g, "b").elements))

n = null_groupoid(["u", "v"])
print("\nnull groupoid on 2 objects: arrows =", sorted(n.arrows))
print("valid:", validate_groupoid(n).valid)
print("transitive:", is_transitive(n), "(no arrow connects u to v)")

# now damage one product entry and watch the report name the broken axioms
prod = dict(g.prod)
prod[("(a|b)", "(b|c)")] = "(a|b)"  # should be (a|c)
broken = FiniteGroupoid(g.objects, g.arrows, g.src, g.tgt, g.unit, g.inv, prod)
report = validate_groupoid(broken)
print("\nafter tampering with one product entry:")
for rule in report.rules():
    first = report.by_rule(rule)[0]
    print(f"  {rule}: witnessed by {first.witness}")
