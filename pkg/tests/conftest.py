import pytest

from groupoids import (
    GroupGroupoid,
    cyclic_group,
    direct_product_group_groupoids,
    direct_product_groups,
    group_as_single_unit_groupoid,
    group_pair_groupoid,
    null_group_groupoid,
    single_unit_group_groupoid,
    symmetric_group,
    trivial_group,
)


def build_corpus() -> dict[str, GroupGroupoid]:
    """The standard examples every exhaustive check runs over.

    Spans both degenerate shapes (all-loop, single-object), the generic
    transitive shape, a direct product, and one non-commutative base.
    """
    z2 = cyclic_group(2)
    z3 = cyclic_group(3)
    z4 = cyclic_group(4)
    klein = direct_product_groups(z2, z2)
    s3 = symmetric_group(3)
    product, _, _ = direct_product_group_groupoids(
        group_pair_groupoid(z2), null_group_groupoid(z2)
    )
    return {
        "null(Z2)": null_group_groupoid(z2),
        "null(S3)": null_group_groupoid(s3),
        "single_unit(Z2)": single_unit_group_groupoid(z2),
        "single_unit(Z4)": single_unit_group_groupoid(z4),
        "single_unit(Z2xZ2)": single_unit_group_groupoid(klein),
        "group_pair(Z2)": group_pair_groupoid(z2),
        "group_pair(Z3)": group_pair_groupoid(z3),
        "group_pair(Z4)": group_pair_groupoid(z4),
        "group_pair(Z2)xnull(Z2)": product,
    }


def s3_single_unit_control() -> GroupGroupoid:
    """Single-unit overlay on a non-commutative group; must fail interchange.

    The constructor refuses this input, so assemble the pieces directly.
    """
    s3 = symmetric_group(3)
    return GroupGroupoid(
        base=group_as_single_unit_groupoid(s3),
        arrow_group=s3,
        object_group=trivial_group(s3.identity),
    )


@pytest.fixture(scope="session")
def corpus() -> dict[str, GroupGroupoid]:
    return build_corpus()


@pytest.fixture(scope="session")
def s3_control() -> GroupGroupoid:
    return s3_single_unit_control()
