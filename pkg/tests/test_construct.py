import pytest

from groupoids import (
    EmptySet,
    GroupTable,
    InvalidGroup,
    InvalidInput,
    NonCommutativeGroup,
    check_group_groupoid,
    cyclic_group,
    direct_product_group_groupoids,
    direct_product_groupoids,
    group_as_single_unit_groupoid,
    group_pair_groupoid,
    is_transitive,
    isotropy_group,
    null_group_groupoid,
    null_groupoid,
    pair_groupoid,
    single_unit_group_groupoid,
    symmetric_group,
    validate_gg_morphism,
    validate_groupoid,
)


def test_null_groupoid_counts():
    g = null_groupoid(["u", "v", "w"])
    assert len(g.objects) == len(g.arrows) == 3
    assert len(g.prod) == 3
    with pytest.raises(EmptySet):
        null_groupoid([])


def test_pair_groupoids_small_sizes():
    for n in range(1, 6):
        objs = [f"o{i}" for i in range(n)]
        g = pair_groupoid(objs)
        assert len(g.arrows) == n * n
        assert validate_groupoid(g).valid
        assert is_transitive(g)
        for u in objs:
            assert len(isotropy_group(g, u).elements) == 1


def test_single_unit_groupoid_from_table():
    g = group_as_single_unit_groupoid(symmetric_group(3))
    assert len(g.objects) == 1
    assert len(g.arrows) == 6
    assert validate_groupoid(g).valid
    assert len(g.prod) == 36


def test_direct_product_groupoids():
    g = direct_product_groupoids(pair_groupoid(["a", "b"]), null_groupoid(["u", "v"]))
    assert len(g.objects) == 4
    assert len(g.arrows) == 8
    assert len(g.prod) == 16
    assert g.prod[("((a|b)|u)", "((b|a)|u)")] == "((a|a)|u)"
    assert validate_groupoid(g).valid


def test_null_group_groupoid():
    gg = null_group_groupoid(cyclic_group(2))
    assert gg.base.arrows == frozenset({"0", "1"})
    assert gg.arrow_group.op == gg.object_group.op
    assert check_group_groupoid(gg).valid


def test_single_unit_group_groupoid_needs_commutativity():
    gg = single_unit_group_groupoid(cyclic_group(4))
    assert check_group_groupoid(gg).valid
    assert gg.object_group.elements == frozenset({"0"})
    with pytest.raises(NonCommutativeGroup) as info:
        single_unit_group_groupoid(symmetric_group(3))
    assert info.value.witness == ("021", "102")


def test_group_pair_groupoid_shape():
    gg = group_pair_groupoid(cyclic_group(3))
    assert len(gg.base.arrows) == 9
    assert gg.arrow_group.mul("(1|2)", "(2|2)") == "(0|1)"
    assert gg.object_group.elements == frozenset({"0", "1", "2"})
    assert check_group_groupoid(gg).valid


def test_direct_product_group_groupoids_and_projections():
    a = group_pair_groupoid(cyclic_group(2))
    b = null_group_groupoid(cyclic_group(2))
    product, left, right = direct_product_group_groupoids(a, b)
    assert len(product.base.arrows) == 8
    assert len(product.base.objects) == 4
    assert check_group_groupoid(product).valid
    assert left.f["((0|1)|1)"] == "(0|1)"
    assert right.f["((0|1)|1)"] == "1"
    assert left.f0["(1|0)"] == "1"
    assert validate_gg_morphism(left, product, a).valid
    assert validate_gg_morphism(right, product, b).valid


def test_product_rejects_invalid_factor(s3_control):
    good = null_group_groupoid(cyclic_group(2))
    with pytest.raises(InvalidInput):
        direct_product_group_groupoids(s3_control, good)


def test_constructors_reject_broken_tables():
    z3 = cyclic_group(3)
    op = dict(z3.op)
    op[("1", "1")] = "1"
    broken = GroupTable(z3.elements, op, z3.identity, z3.inverse)
    with pytest.raises(InvalidGroup):
        null_group_groupoid(broken)
    with pytest.raises(InvalidGroup):
        group_pair_groupoid(broken)
