"""Named built-in fixtures used by the CLI, the tests and the golden files.

Everything here is constructed deterministically from the builtin group
tables, so repeated runs emit byte-identical documents.
"""
from __future__ import annotations

from .fields import QQ
from .groups import (
    GroupExtendingStructure,
    GroupTable,
    builtin_group,
    coset_extending_structure,
    group_algebra,
    lift_to_hopf,
)
from .linalg import LinMap, tensor_space
from .special import CrossedDatum, MatchedPair
from .structures import trivial_action_left
from .unified import ExtendingDatum


def matched_pair_from_ges(ges: GroupExtendingStructure, field=QQ) -> MatchedPair:
    """Promote a trivial-cocycle set structure to a matched pair of group
    Hopf algebras; requires the star multiplication to be a group."""
    e = ges.group.identity
    if any(ges.cocyc[x][y] != e for x in range(ges.x_size) for y in range(ges.x_size)):
        raise ValueError("the cocycle is not trivial; this is not a matched pair")
    star_group = GroupTable(ges.star, ges.x_labels)
    datum = lift_to_hopf(ges, field)
    return MatchedPair(
        a=datum.base,
        h=group_algebra(star_group, field),
        ract=datum.ract,
        lact=datum.lact,
    )


def _least_involution(g: GroupTable) -> int:
    for x in range(g.order):
        if x != g.identity and g.table[x][x] == g.identity:
            return x
    raise ValueError("group has no element of order two")


def _s3_rotations() -> list[int]:
    s3 = builtin_group("s3")
    cycle = next(x for x in range(s3.order) if len(s3.closure_of([x])) == 3)
    return sorted(s3.closure_of([cycle]))


def s3_c3_ges() -> GroupExtendingStructure:
    """S3 split along its rotation subgroup; representatives {e, (1 2)}."""
    return coset_extending_structure(builtin_group("s3"), _s3_rotations())


def s3_matched_pair(field=QQ) -> MatchedPair:
    """The matched pair with base k[C3] acting on k[C2] from the S3 split."""
    return matched_pair_from_ges(s3_c3_ges(), field)


def s3_c2_ges() -> GroupExtendingStructure:
    """S3 split along a transposition subgroup with the rotations as
    representatives (the exact factorization with base C2)."""
    s3 = builtin_group("s3")
    invol = _least_involution(s3)
    c2 = sorted(s3.closure_of([invol]))
    return coset_extending_structure(s3, c2, reps=_s3_rotations())


def s3_transposed_matched_pair(field=QQ) -> MatchedPair:
    """The matched pair with base k[C2] acting on k[C3] from the S3 split."""
    return matched_pair_from_ges(s3_c2_ges(), field)


def _z2_crossed(field, nontrivial: bool) -> CrossedDatum:
    c2 = builtin_group("c2")
    a = group_algebra(c2, field)
    h = group_algebra(c2, field)
    lact = trivial_action_left(field, h.coalgebra, a.space)
    one = field.one
    unit_val = {c2.identity: one}
    twist_val = {1: one} if nontrivial else unit_val
    cols = {0: unit_val, 1: unit_val, 2: unit_val, 3: twist_val}
    cocycle = LinMap(field, tensor_space(h.space, h.space), a.space, cols)
    return CrossedDatum(a=a, h=h, lact=lact, cocycle=cocycle)


def z4_crossed_datum(field=QQ) -> CrossedDatum:
    """Two copies of k[C2] glued by the nontrivial cocycle; the product is
    the group algebra of the cyclic group of order four."""
    return _z2_crossed(field, nontrivial=True)


def z2xz2_crossed_datum(field=QQ) -> CrossedDatum:
    """The trivial-cocycle companion; the product is k[C2 x C2]."""
    return _z2_crossed(field, nontrivial=False)


def a4_order2_ges() -> GroupExtendingStructure:
    """A4 split along its least order-two subgroup: six representatives,
    nontrivial cocycle and nontrivial right action."""
    a4 = builtin_group("a4")
    invol = _least_involution(a4)
    return coset_extending_structure(a4, [a4.identity, invol])


def a4_unified_datum(field=QQ) -> ExtendingDatum:
    return lift_to_hopf(a4_order2_ges(), field)


def z4_c2_ges() -> GroupExtendingStructure:
    """The cyclic group of order four split along its order-two subgroup."""
    c4 = builtin_group("c4")
    return coset_extending_structure(c4, [0, 2])


EXAMPLE_NAMES = ("s3-bicrossed", "z4-crossed", "a4-unified", "a6-group-level")


def builtin_example(name: str):
    """The named corpus objects exposed through the command line."""
    if name == "s3-bicrossed":
        return s3_matched_pair()
    if name == "z4-crossed":
        return z4_crossed_datum()
    if name == "a4-unified":
        return a4_unified_datum()
    if name == "a6-group-level":
        return builtin_group("a6")
    try:
        return builtin_group(name)
    except KeyError:
        raise KeyError(f"unknown example {name!r}") from None
