"""Shared fixtures and independent oracles for the test suite."""
from __future__ import annotations


import hopfprod as hp
from hopfprod.fields import QQ
from hopfprod.groups import GroupExtendingStructure
from hopfprod.linalg import SCALAR_SPACE, LinMap, tensor_space
from hopfprod.structures import FDAlgebra, FDBialgebra, FDCoalgebra


def random_group_structure(rng, group, x_size) -> GroupExtendingStructure:
    """Uniformly random set-level maps with the unit normalization pinned."""
    ng, e = group.order, group.identity
    ract = [[rng.randrange(x_size) for _ in range(ng)] for _ in range(x_size)]
    lact = [[rng.randrange(ng) for _ in range(ng)] for _ in range(x_size)]
    cocyc = [[rng.randrange(ng) for _ in range(x_size)] for _ in range(x_size)]
    star = [[rng.randrange(x_size) for _ in range(x_size)] for _ in range(x_size)]
    for x in range(x_size):
        ract[x][e] = x
        lact[x][e] = e
        cocyc[x][0] = e
        cocyc[0][x] = e
        star[x][0] = x
        star[0][x] = x
    for a in range(ng):
        ract[0][a] = 0
        lact[0][a] = a
    return GroupExtendingStructure(
        group=group,
        x_labels=tuple(f"x{k}" for k in range(x_size)),
        ract=tuple(map(tuple, ract)),
        lact=tuple(map(tuple, lact)),
        cocyc=tuple(map(tuple, cocyc)),
        star=tuple(map(tuple, star)),
    )


def strip_provenance(ges: GroupExtendingStructure) -> GroupExtendingStructure:
    return GroupExtendingStructure(
        group=ges.group, x_labels=ges.x_labels, ract=ges.ract,
        lact=ges.lact, cocyc=ges.cocyc, star=ges.star,
    )


def perturb_group_structure(rng, ges: GroupExtendingStructure) -> GroupExtendingStructure:
    """Change one non-pinned entry of one of the four maps, if any exists."""
    ng, nx, e = ges.group.order, ges.x_size, ges.group.identity
    slots = []
    for x in range(1, nx):
        for a in range(ng):
            if a != e:
                slots.append(("ract", x, a, nx))
                slots.append(("lact", x, a, ng))
    for x in range(1, nx):
        for y in range(1, nx):
            slots.append(("cocyc", x, y, ng))
            slots.append(("star", x, y, nx))
    slots = [(name, i, j, size) for name, i, j, size in slots if size > 1]
    if not slots:
        return strip_provenance(ges)
    name, i, j, size = slots[rng.randrange(len(slots))]
    table = [list(row) for row in getattr(ges, name)]
    old = table[i][j]
    table[i][j] = rng.choice([v for v in range(size) if v != old])
    out = strip_provenance(ges)
    return GroupExtendingStructure(
        group=out.group, x_labels=out.x_labels,
        ract=tuple(map(tuple, table)) if name == "ract" else out.ract,
        lact=tuple(map(tuple, table)) if name == "lact" else out.lact,
        cocyc=tuple(map(tuple, table)) if name == "cocyc" else out.cocyc,
        star=tuple(map(tuple, table)) if name == "star" else out.star,
    )


def sweedler_bialgebra(field=QQ) -> FDBialgebra:
    """The four-dimensional bialgebra with basis 1, g, x, gx where g*g = 1,
    x*x = 0, x*g = -g*x, delta(g) = g (x) g, delta(x) = x (x) 1 + g (x) x.
    The canonical small example with a non-cocommutative comultiplication."""
    one = field.one
    neg = field.neg(one)
    space = hp.BasedSpace(("1", "g", "x", "gx"))
    delta = LinMap(field, space, tensor_space(space, space), {
        0: {0: one},
        1: {5: one},
        2: {8: one, 6: one},      # x (x) 1 + g (x) x
        3: {13: one, 3: one},     # gx (x) g + 1 (x) gx
    })
    epsilon = LinMap(field, space, SCALAR_SPACE, {0: {0: one}, 1: {0: one}})
    mult_table = {
        (0, 0): {0: one}, (0, 1): {1: one}, (0, 2): {2: one}, (0, 3): {3: one},
        (1, 0): {1: one}, (1, 1): {0: one}, (1, 2): {3: one}, (1, 3): {2: one},
        (2, 0): {2: one}, (2, 1): {3: neg}, (2, 2): {}, (2, 3): {},
        (3, 0): {3: one}, (3, 1): {2: neg}, (3, 2): {}, (3, 3): {},
    }
    mult = LinMap(field, tensor_space(space, space), space,
                  {i * 4 + j: col for (i, j), col in mult_table.items()})
    coalg = FDCoalgebra(field, space, delta, epsilon)
    alg = FDAlgebra(field, space, mult, {0: one}, associative="yes")
    return FDBialgebra(coalg, alg)


def trivial_datum(a: FDBialgebra, h: FDBialgebra) -> hp.ExtendingDatum:
    return hp.matched_pair_datum(hp.trivial_matched_pair(a, h))


def pair_bijection_is_isomorphism(ges: GroupExtendingStructure) -> bool:
    """Does (a, x) -> a * x carry the twisted product onto the ambient group?"""
    ambient = ges.ambient
    product = hp.group_unified_product(ges)
    nx = ges.x_size
    to_ambient = []
    for a_sub in ges.sub_indices:
        for r in ges.rep_indices:
            to_ambient.append(ambient.table[a_sub][r])
    if sorted(to_ambient) != list(range(ambient.order)):
        return False
    for p in range(product.order):
        for q in range(product.order):
            if to_ambient[product.table[p][q]] != \
                    ambient.table[to_ambient[p]][to_ambient[q]]:
                return False
    return True


def dense_from_linmap(m: LinMap):
    """A dense matrix M[j][i] with f(e_i) = sum_j M[j][i] e_j, for oracles."""
    rows = [[m.field.zero] * m.domain.dim for _ in range(m.codomain.dim)]
    for i in range(m.domain.dim):
        for j, v in m.col(i).items():
            rows[j][i] = v
    return rows


def random_linmap(rng, field, dom, cod, density=0.7) -> LinMap:
    cols = {}
    for i in range(dom.dim):
        col = {}
        for j in range(cod.dim):
            if rng.random() < density:
                col[j] = field.of(rng.randrange(-4, 5), rng.randrange(1, 4))
        cols[i] = col
    return LinMap(field, dom, cod, cols)
