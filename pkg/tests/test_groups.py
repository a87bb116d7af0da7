import pytest

from helpers import pair_bijection_is_isomorphism
from hopfprod.corpus import a4_order2_ges, s3_c3_ges, z4_c2_ges
from hopfprod.fields import QQ, PrimeField
from hopfprod.groups import (
    GroupExtendingStructure,
    GroupTable,
    NotAGroupError,
    NotASubgroupError,
    builtin_group,
    check_group_structure,
    coset_extending_structure,
    group_algebra,
    group_unified_product,
    lift_to_hopf,
    small_corpus_names,
)
from hopfprod.structures import check_bialgebra
from hopfprod.unified import check_product_conditions, validate_datum

EXPECTED_ORDERS = {"c1": 1, "c7": 7, "c12": 12, "c2xc2": 4, "s3": 6,
                   "d4": 8, "q8": 8, "a4": 12, "s4": 24}


def test_builtin_orders_and_identity():
    for name, order in EXPECTED_ORDERS.items():
        g = builtin_group(name)
        assert g.order == order
        assert g.identity == 0


def test_a6_order_and_simple_facts():
    a6 = builtin_group("a6")
    assert a6.order == 360
    assert a6.identity == 0
    # every element has an inverse and the inverse table is an involution
    assert all(a6.inverse[a6.inverse[x]] == x for x in range(360))


def test_corrupt_table_rejected():
    g = builtin_group("s3")
    table = [list(row) for row in g.table]
    table[3][4] = table[3][3]  # break the Latin property / associativity
    with pytest.raises(NotAGroupError):
        GroupTable(table, g.labels)


def test_missing_identity_rejected():
    with pytest.raises(NotAGroupError):
        GroupTable([[1, 0], [1, 0]], ["a", "b"])


def test_subgroup_counts_match_known_values():
    known = {"c2xc2": 5, "s3": 6, "d4": 10, "q8": 6, "a4": 10, "s4": 30, "c12": 6}
    for name, count in known.items():
        assert len(builtin_group(name).all_subgroups()) == count


def test_subgroup_table_and_rejection():
    s3 = builtin_group("s3")
    subs = s3.all_subgroups()
    assert (0,) in subs and tuple(range(6)) in subs
    for indices in subs:
        sub, back = s3.subgroup_table(indices)
        assert sub.order == len(indices)
        assert back == indices
    with pytest.raises(NotASubgroupError):
        s3.subgroup_table([0, 3])  # a 3-cycle without its square


def test_coset_structure_full_subgroup_is_trivial():
    s3 = builtin_group("s3")
    ges = coset_extending_structure(s3, range(6))
    assert ges.x_size == 1
    assert check_group_structure(ges).ok


def test_s3_c3_split_is_bicrossed():
    ges = s3_c3_ges()
    assert ges.x_size == 2
    e = ges.group.identity
    assert all(ges.cocyc[x][y] == e for x in range(2) for y in range(2))
    # representatives {e, (1 2)} form a subgroup, which is why the cocycle
    # is trivial
    s3 = builtin_group("s3")
    reps = set(ges.rep_indices)
    assert all(s3.table[a][b] in reps for a in reps for b in reps)


def test_a4_order2_split_is_neither_trivial():
    ges = a4_order2_ges()
    assert ges.x_size == 6
    e = ges.group.identity
    assert any(ges.cocyc[x][y] != e for x in range(6) for y in range(6))
    assert any(ges.ract[x][a] != x for x in range(6) for a in range(2))
    assert check_group_structure(ges).ok


def test_group_unified_product_trivial_structure_gives_klein_four():
    c2 = builtin_group("c2")
    ges = GroupExtendingStructure(
        group=c2, x_labels=("1x", "tx"),
        ract=((0, 0), (1, 1)), lact=((0, 1), (0, 1)),
        cocyc=((0, 0), (0, 0)), star=((0, 1), (1, 0)),
    )
    assert check_group_structure(ges).ok
    product = group_unified_product(ges)
    assert product.order == 4
    assert all(product.table[x][x] == product.identity for x in range(4))


def test_group_products_match_ambient_groups():
    for ges in (s3_c3_ges(), z4_c2_ges(), a4_order2_ges()):
        assert pair_bijection_is_isomorphism(ges)


def test_monoid_star_passes_conditions_but_trips_group_guard():
    c2 = builtin_group("c2")
    # the idempotent star tx*tx = tx satisfies all the product conditions
    # (the product is a monoid bialgebra) but has no inverses, so the
    # group guard must fire
    ges = GroupExtendingStructure(
        group=c2, x_labels=("1x", "tx"),
        ract=((0, 0), (1, 1)), lact=((0, 1), (0, 1)),
        cocyc=((0, 0), (0, 0)), star=((0, 1), (1, 1)),
    )
    assert check_group_structure(ges).ok
    with pytest.raises(NotAGroupError):
        group_unified_product(ges)


def test_lift_trivial_structure_gives_trivial_maps():
    c2 = builtin_group("c2")
    ges = GroupExtendingStructure(
        group=c2, x_labels=("1x", "tx"),
        ract=((0, 0), (1, 1)), lact=((0, 1), (0, 1)),
        cocyc=((0, 0), (0, 0)), star=((0, 1), (1, 0)),
    )
    d = lift_to_hopf(ges)
    from hopfprod.structures import (
        trivial_action_left,
        trivial_action_right,
        trivial_cocycle,
    )

    assert d.ract == trivial_action_right(QQ, d.ext.space, d.base.coalgebra)
    assert d.lact == trivial_action_left(QQ, d.ext.coalg, d.base.space)
    assert d.cocycle == trivial_cocycle(QQ, d.ext.coalg, d.base.unit, d.base.space)


def test_lift_matches_matched_pair_datum_for_s3():
    from hopfprod.corpus import s3_matched_pair
    from hopfprod.special import matched_pair_datum

    lifted = lift_to_hopf(s3_c3_ges())
    induced = matched_pair_datum(s3_matched_pair())
    assert lifted.components_equal(induced) is None


def test_functoriality_smoke():
    # the full order <= 24 sweep runs in the acceptance suite
    for name in ("c6", "s3", "q8"):
        g = builtin_group(name)
        for indices in g.all_subgroups():
            ges = coset_extending_structure(g, indices)
            datum = lift_to_hopf(ges)
            assert validate_datum(datum).ok
            assert check_product_conditions(datum).ok
            from hopfprod.unified import assemble_product

            product = assemble_product(datum)
            expected = group_algebra(group_unified_product(ges))
            assert product.mult == expected.mult
            assert product.delta == expected.delta
            assert product.epsilon == expected.epsilon
            assert product.unit == expected.unit


def test_functoriality_over_prime_field():
    f7 = PrimeField(7)
    ges = s3_c3_ges()
    datum = lift_to_hopf(ges, f7)
    assert validate_datum(datum).ok
    assert check_product_conditions(datum).ok
    from hopfprod.unified import assemble_product

    product = assemble_product(datum)
    expected = group_algebra(group_unified_product(ges), f7)
    assert product.mult == expected.mult
    assert check_bialgebra(product).ok


def test_group_algebra_passes_axioms():
    for name in ("c1", "c2", "s3", "q8"):
        h = group_algebra(builtin_group(name))
        assert check_bialgebra(h).ok


def test_bicrossed_detection_full_corpus():
    # trivial cocycle <=> the representative set is a subgroup <=> exact
    # factorization through the subgroup and that complement, checked both
    # ways over every subgroup of every builtin group of order <= 24
    for name in small_corpus_names():
        g = builtin_group(name)
        for indices in g.all_subgroups():
            ges = coset_extending_structure(g, indices)
            e = ges.group.identity
            trivial = all(ges.cocyc[x][y] == e
                          for x in range(ges.x_size) for y in range(ges.x_size))
            reps = set(ges.rep_indices)
            closed = g.is_subgroup(reps)
            products = {g.table[a][x] for a in indices for x in reps}
            exact = closed and len(reps) * len(set(indices)) == g.order \
                and products == set(range(g.order))
            assert trivial == closed
            assert closed == exact


def test_c2_antipode_is_identity():
    h = group_algebra(builtin_group("c2"))
    from hopfprod.linalg import LinMap as LM

    assert h.antipode == LM.identity(QQ, h.space)


def test_grouplike_coalgebra_basics():
    from hopfprod.groups import grouplike_coalgebra
    from hopfprod.structures import check_coalgebra

    single = grouplike_coalgebra(("1",))
    assert single.dim == 1 and check_coalgebra(single.coalg).ok
    six = grouplike_coalgebra(tuple("abcdef"))
    assert six.dim == 6 and check_coalgebra(six.coalg).ok
    assert six.unit == {0: QQ.one}
