"""
When a groupoid carries a group and when it cannot
===================================================

A group structure on the arrows (with a matching one on the objects) is
compatible with composition in two equivalent senses: the operations are
themselves morphisms, or the endpoint maps are homomorphisms and the
interchange law ties the two multiplications together.  Both verdicts are
computed independently; they agree on every input.
"""

from groupoids import (
    GroupGroupoid,
    check_group_groupoid,
    cyclic_group,
    group_as_single_unit_groupoid,
    group_pair_groupoid,
    single_unit_group_groupoid,
    symmetric_group,
    trivial_group,
)

gg = group_pair_groupoid(cyclic_group(3))
report = check_group_groupoid(gg, mode="both")
print("pair structure on Z3, both definitions:")
for note in report.notes:
    print(f"  {note.rule}: {note.message}")

# a commutative group fits on a single object
su = single_unit_group_groupoid(cyclic_group(4))
print("\nsingle unit over Z4 passes:", check_group_groupoid(su).valid)

# a non-commutative one cannot: the constructor refuses outright
try:
    single_unit_group_groupoid(symmetric_group(3))
except Exception as exc:
    print("single unit over S3 refused:", exc)

# assembling the same thing by hand shows exactly which law breaks
s3 = symmetric_group(3)
control = GroupGroupoid(
    base=group_as_single_unit_groupoid(s3),
    arrow_group=s3,
    object_group=trivial_group(s3.identity),
)
report = check_group_groupoid(control, mode="both")
print("\nhand-assembled S3 overlay:")
quad = report.by_rule("def32:interchange")[0]
print("  interchange fails at", quad.witness)
print("  " + quad.message)
verdicts = {n.rule: n.message for n in report.notes if n.status == "info"}
print("  verdicts:", verdicts)
