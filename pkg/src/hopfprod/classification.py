"""Lazy cocycles and the equivalence classification of twisted products.

A lazy cocycle is a unitary coalgebra map ``u: H -> A`` whose comultiplication
components commute past it: ``h1 (x) u(h2) = h2 (x) u(h1)``.  Under
convolution these form a group; deforming one extending datum by a lazy
cocycle gives another with the same right action, and two data are equivalent
exactly when such a cocycle transforms one into the other.  The equivalence
is realized by ``phi(a (x) h) = a u(h1) (x) h2`` from the deformed product to
the original one, a bijective bialgebra map that is also a left A-module and
right H-comodule map; :func:`check_equivalence` verifies all of that and
hands back the certificate.

Enumeration of cocycles is only available at group-like desk scale, where
cocycles are exactly the pointed maps from the basis of H to the group-like
basis of A; everywhere else callers must supply the cocycle themselves.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iproduct
from typing import TYPE_CHECKING

from .fields import same_field
from .linalg import (
    LinMap,
    basis_vec,
    compose,
    tensor_map,
    tensor_vec,
    twist_map,
    vec_add_into,
    vec_scale,
)
from .reports import Report
from .structures import (
    FDBialgebra,
    FDHopf,
    UnitalCoalgebra,
    convolution,
    grouplike_indices,
    is_coalgebra_map,
    is_algebra_map,
)
from .unified import ExtendingDatum, assemble_product

if TYPE_CHECKING:  # pragma: no cover
    from .special import MatchedPair

DEFAULT_COCYCLE_CAP = 10_000


class CapExceededError(RuntimeError):
    """An enumeration would exceed the configured candidate cap."""


class NotGroupLikeError(ValueError):
    """Enumeration requested outside the group-like desk-scale regime."""


def is_lazy_cocycle(u: LinMap, h: UnitalCoalgebra, a: FDBialgebra) -> bool:
    """Unitary coalgebra map with h1 (x) u(h2) = h2 (x) u(h1)."""
    if u.domain.dim != h.dim or u.codomain.dim != a.dim:
        raise ValueError("cocycle shape does not match H -> A")
    if not is_coalgebra_map(u, h.coalg, a.coalgebra):
        return False
    if u.apply(h.unit) != a.unit:
        return False
    field = same_field(h, a)
    ident = LinMap.identity(field, h.space)
    straight = compose(tensor_map(ident, u), h.delta)
    crossed = compose(tensor_map(ident, u),
                      compose(twist_map(field, h.space, h.space), h.delta))
    return straight == crossed


@dataclass
class LazyCocycle:
    """A validated lazy cocycle with its H and A context attached."""

    linmap: LinMap
    ext: UnitalCoalgebra
    base: FDBialgebra

    @classmethod
    def build(cls, linmap: LinMap, ext: UnitalCoalgebra, base: FDBialgebra) -> "LazyCocycle":
        if not is_lazy_cocycle(linmap, ext, base):
            raise ValueError("map is not a lazy cocycle")
        return cls(linmap, ext, base)

    def __call__(self, v: dict) -> dict:
        return self.linmap.apply(v)


def trivial_cocycle_map(h: UnitalCoalgebra, a: FDBialgebra) -> LinMap:
    """unit_A . counit_H, the unit of the convolution group."""
    return compose(a.algebra.unit_map(), h.epsilon)


def trivial_lazy_cocycle(h: UnitalCoalgebra, a: FDBialgebra) -> LazyCocycle:
    return LazyCocycle(trivial_cocycle_map(h, a), h, a)


def cocycle_convolve(u: LazyCocycle, v: LazyCocycle) -> LazyCocycle:
    """Convolution u * v; the result is validated (the set is closed)."""
    if u.ext != v.ext or u.base != v.base:
        raise ValueError("cocycles live over different (H, A) pairs")
    w = convolution(u.linmap, v.linmap, u.ext.coalg, u.base.algebra)
    return LazyCocycle.build(w, u.ext, u.base)


def cocycle_inverse(u: LazyCocycle) -> LazyCocycle:
    """Convolution inverse S_A . u; requires the base to be Hopf."""
    if not isinstance(u.base, FDHopf):
        raise ValueError("convolution inverse needs an antipode on the base")
    return LazyCocycle.build(compose(u.base.antipode, u.linmap), u.ext, u.base)


def enumerate_cocycles(h: UnitalCoalgebra, a: FDBialgebra,
                       cap: int = DEFAULT_COCYCLE_CAP) -> list[LazyCocycle]:
    """All lazy cocycles in the group-like regime: pointed basis maps.

    H must have an all-group-like basis with the unit a basis vector, and A
    an all-group-like basis; the candidates are then the maps sending the
    basepoint to 1_A and every other basis element anywhere in A's basis.
    """
    field = same_field(h, a)
    if grouplike_indices(h.coalg) != list(range(h.dim)):
        raise NotGroupLikeError("H is not group-like on its basis")
    if grouplike_indices(a.coalgebra) != list(range(a.dim)):
        raise NotGroupLikeError("A is not group-like on its basis")
    base_idx = [i for i, c in h.unit.items() if c == field.one]
    if len(h.unit) != 1 or len(base_idx) != 1:
        raise NotGroupLikeError("the unit of H is not a basis vector")
    basepoint = base_idx[0]
    unit_idx = [i for i, c in a.unit.items() if c == field.one]
    if len(a.unit) != 1 or len(unit_idx) != 1:
        raise NotGroupLikeError("the unit of A is not a basis vector")
    count = a.dim ** (h.dim - 1)
    if count > cap:
        raise CapExceededError(f"{count} candidate cocycles exceed the cap {cap}")
    others = [i for i in range(h.dim) if i != basepoint]
    out = []
    for targets in iproduct(range(a.dim), repeat=len(others)):
        cols = {basepoint: {unit_idx[0]: field.one}}
        for x, t in zip(others, targets):
            cols[x] = {t: field.one}
        u = LinMap(field, h.space, a.space, cols)
        out.append(LazyCocycle(u, h, a))
    return out


def deform_datum(d: ExtendingDatum, u: LazyCocycle) -> ExtendingDatum:
    """Deform an arbitrary datum by a lazy cocycle.

    The dot deforms first, then the left action and the cocycle (whose
    formula references the deformed dot).  The right action never moves.
    The result is equivalent to d via u by construction.
    """
    if u.ext != d.ext or u.base != d.base:
        raise ValueError("cocycle context does not match the datum")
    a = d.base
    if not isinstance(a, FDHopf):
        raise ValueError("deformation needs a Hopf base")
    field = d.field
    h = d.ext
    hc, ac = h.coalg, a.coalgebra
    bv = lambda i: basis_vec(field, i)
    sa = a.antipode
    um = u.linmap
    adim, hdim = a.dim, h.dim

    def amul(*vs):
        out = vs[0]
        for v in vs[1:]:
            out = a.mul(out, v)
        return out

    dot_cols = {}
    for hi in range(hdim):
        for gi in range(hdim):
            out: dict = {}
            for (g1, g2), cg in hc.expand(gi, 2):
                term = d.dot.bilin(d.ract.bilin(bv(hi), um.apply(bv(g1)), adim),
                                   bv(g2), hdim)
                vec_add_into(field, out, term, cg)
            if out:
                dot_cols[hi * hdim + gi] = out
    dot = LinMap(field, d.dot.domain, h.space, dot_cols)

    lact_cols = {}
    for hi in range(hdim):
        for ci in range(adim):
            out = {}
            for (h1, h2, h3), ch in hc.expand(hi, 3):
                for (c1, c2), cc in ac.expand(ci, 2):
                    term = amul(um.apply(bv(h1)),
                                d.lact.bilin(bv(h2), bv(c1), adim),
                                sa.apply(um.apply(d.ract.bilin(bv(h3), bv(c2), adim))))
                    vec_add_into(field, out, term, field.mul(ch, cc))
            if out:
                lact_cols[hi * adim + ci] = out
    lact = LinMap(field, d.lact.domain, a.space, lact_cols)

    coc_cols = {}
    for hi in range(hdim):
        for gi in range(hdim):
            out = {}
            for (h1, h2, h3, h4), ch in hc.expand(hi, 4):
                for (g1, g2, g3, g4), cg in hc.expand(gi, 4):
                    term = amul(
                        um.apply(bv(h1)),
                        d.lact.bilin(bv(h2), um.apply(bv(g1)), adim),
                        d.cocycle.bilin(
                            d.ract.bilin(bv(h3), um.apply(bv(g2)), adim),
                            bv(g3), hdim),
                        sa.apply(um.apply(dot.bilin(bv(h4), bv(g4), hdim))),
                    )
                    vec_add_into(field, out, term, field.mul(ch, cg))
            if out:
                coc_cols[hi * hdim + gi] = out
    cocycle = LinMap(field, d.cocycle.domain, a.space, coc_cols)
    return ExtendingDatum(base=a, ext=h, dot=dot, ract=d.ract,
                          lact=lact, cocycle=cocycle)


@dataclass
class EquivalenceCertificate:
    """The isomorphism realizing an equivalence of extending data.

    ``phi`` maps the product of ``source`` onto the product of ``target`` by
    a (x) h -> a u(h1) (x) h2, and ``psi`` is its inverse via the antipode.
    """

    source: ExtendingDatum
    target: ExtendingDatum
    cocycle: LazyCocycle
    phi: LinMap
    psi: LinMap


@dataclass
class EquivalenceResult:
    report: Report
    certificate: EquivalenceCertificate | None

    @property
    def ok(self) -> bool:
        return self.report.ok


def _scan(rep, name, tuples, labels, check):
    for tup in tuples:
        if not check(*tup):
            witness = "(" + ",".join(lab[k] for lab, k in zip(labels, tup)) + ")"
            rep.add(name, False, witness)
            return False
        continue
    rep.add(name, True)
    return True


def _incl_base(d: ExtendingDatum, carrier) -> LinMap:
    field = d.field
    return LinMap(field, d.base.space, carrier.space,
                  {i: tensor_vec(field, basis_vec(field, i), d.ext.unit, d.ext.dim)
                   for i in range(d.base.dim)})


def check_equivalence(d: ExtendingDatum, d2: ExtendingDatum,
                      u: LazyCocycle) -> EquivalenceResult:
    """Is d2 the deformation of d by the lazy cocycle u?

    Verifies the forced equality of right actions, then the three deformation
    formulas for the left action, the cocycle and the dot.  On success the
    certificate map ``phi: A (x)' H -> A (x) H`` is built and verified to be a
    bijective bialgebra, left A-module and right H-comodule map.
    """
    if d.base != d2.base or d.ext != d2.ext:
        raise ValueError("the two data must share the base and the coalgebra")
    a = d.base
    if not isinstance(a, FDHopf):
        raise ValueError("equivalence checking needs a Hopf base")
    if u.ext != d.ext or u.base != a:
        raise ValueError("cocycle context does not match the data")
    field = d.field
    h = d.ext
    hc, ac = h.coalg, a.coalgebra
    bv = lambda i: basis_vec(field, i)
    sa = a.antipode
    um = u.linmap
    hl, al = h.space.labels, a.space.labels
    hr, ar = range(h.dim), range(a.dim)
    adim, hdim = a.dim, h.dim
    rep = Report("extending-structure equivalence")

    if d2.ract != d.ract:
        rep.add("ract-equal", False, "right actions differ")
        return EquivalenceResult(rep, None)
    rep.add("ract-equal", True)

    def amul(*vs):
        out = vs[0]
        for v in vs[1:]:
            out = a.mul(out, v)
        return out

    def deformed_lact(hi, ci):
        got = d2.lact.bilin(bv(hi), bv(ci), adim)
        want: dict = {}
        for (h1, h2, h3), ch in hc.expand(hi, 3):
            for (c1, c2), cc in ac.expand(ci, 2):
                term = amul(um.apply(bv(h1)),
                            d.lact.bilin(bv(h2), bv(c1), adim),
                            sa.apply(um.apply(d.ract.bilin(bv(h3), bv(c2), adim))))
                vec_add_into(field, want, term, field.mul(ch, cc))
        return got == want

    ok = _scan(rep, "deformed-lact", iproduct(hr, ar), (hl, al), deformed_lact)

    def deformed_dot(hi, gi):
        got = d2.dot.bilin(bv(hi), bv(gi), hdim)
        want: dict = {}
        for (g1, g2), cg in hc.expand(gi, 2):
            term = d.dot.bilin(d.ract.bilin(bv(hi), um.apply(bv(g1)), adim),
                               bv(g2), hdim)
            vec_add_into(field, want, term, cg)
        return got == want

    ok = _scan(rep, "deformed-dot", iproduct(hr, hr), (hl, hl), deformed_dot) and ok

    def deformed_cocycle(hi, gi):
        got = d2.cocycle.bilin(bv(hi), bv(gi), hdim)
        want: dict = {}
        for (h1, h2, h3, h4), ch in hc.expand(hi, 4):
            for (g1, g2, g3, g4), cg in hc.expand(gi, 4):
                term = amul(
                    um.apply(bv(h1)),
                    d.lact.bilin(bv(h2), um.apply(bv(g1)), adim),
                    d.cocycle.bilin(
                        d.ract.bilin(bv(h3), um.apply(bv(g2)), adim), bv(g3), hdim),
                    sa.apply(um.apply(d2.dot.bilin(bv(h4), bv(g4), hdim))),
                )
                vec_add_into(field, want, term, field.mul(ch, cg))
        return got == want

    ok = _scan(rep, "deformed-cocycle", iproduct(hr, hr), (hl, hl), deformed_cocycle) and ok
    if not ok:
        return EquivalenceResult(rep, None)

    prod = assemble_product(d)
    prod2 = assemble_product(d2)
    phi_cols = {}
    psi_cols = {}
    for ai in ar:
        for hi in hr:
            fcol: dict = {}
            gcol: dict = {}
            for (h1, h2), ch in hc.expand(hi, 2):
                vec_add_into(field, fcol, tensor_vec(
                    field, a.mul(bv(ai), um.apply(bv(h1))), bv(h2), hdim), ch)
                vec_add_into(field, gcol, tensor_vec(
                    field, a.mul(bv(ai), sa.apply(um.apply(bv(h1)))), bv(h2), hdim), ch)
            phi_cols[ai * hdim + hi] = fcol
            psi_cols[ai * hdim + hi] = gcol
    phi = LinMap(field, prod2.space, prod.space, phi_cols)
    psi = LinMap(field, prod.space, prod2.space, psi_cols)

    rep.add("phi-algebra-map", is_algebra_map(phi, prod2.algebra, prod.algebra))
    rep.add("phi-coalgebra-map", is_coalgebra_map(phi, prod2.coalgebra, prod.coalgebra))

    i_a2 = _incl_base(d2, prod2)
    i_a1 = _incl_base(d, prod)
    ident_e2 = LinMap.identity(field, prod2.space)
    lhs = compose(phi, compose(prod2.mult, tensor_map(i_a2, ident_e2)))
    rhs = compose(prod.mult, tensor_map(i_a1, phi))
    rep.add("phi-left-module", lhs == rhs)

    ident_a = LinMap.identity(field, a.space)
    rho1 = tensor_map(ident_a, h.delta)
    rho2 = tensor_map(ident_a, h.delta)
    rep.add("phi-right-comodule",
            compose(rho1, phi) == compose(tensor_map(phi, LinMap.identity(field, h.space)), rho2))

    ident_full = LinMap.identity(field, prod.space)
    rep.add("phi-bijective",
            compose(phi, psi) == ident_full and compose(psi, phi) == ident_full)
    cert = EquivalenceCertificate(d2, d, u, phi, psi) if rep.ok else None
    return EquivalenceResult(rep, cert)


def quotient_classes(data: list[ExtendingDatum],
                     cap: int = DEFAULT_COCYCLE_CAP) -> list[list[int]]:
    """Partition data sharing (A, H, ract) into deformation-equivalence classes.

    Works by exhausting the enumerable cocycles, so it is gated to the
    group-like regime.  Symmetry and transitivity of the relation are
    asserted, not assumed.
    """
    if not data:
        return []
    first = data[0]
    for d in data[1:]:
        if d.base != first.base or d.ext != first.ext or d.ract != first.ract:
            raise ValueError("all data must share the base, coalgebra and right action")
    cocycles = enumerate_cocycles(first.ext, first.base, cap)
    n = len(data)
    related = [[False] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            related[i][j] = any(
                check_equivalence(data[i], data[j], u).ok for u in cocycles
            )
    for i in range(n):
        if not related[i][i]:
            raise AssertionError("equivalence relation is not reflexive")
        for j in range(n):
            if related[i][j] != related[j][i]:
                raise AssertionError("equivalence relation is not symmetric")
            for k in range(n):
                if related[i][j] and related[j][k] and not related[i][k]:
                    raise AssertionError("equivalence relation is not transitive")
    seen = set()
    classes = []
    for i in range(n):
        if i in seen:
            continue
        cls = [j for j in range(n) if related[i][j]]
        seen.update(cls)
        classes.append(cls)
    return classes


def check_bicrossed_equivalence(mp: "MatchedPair", mp2: "MatchedPair",
                                u: LazyCocycle) -> Report:
    """Equivalence of two matched pairs over the same Hopf algebras.

    With both cocycles trivial the deformation conditions specialize to: the
    right actions agree, the left action deforms by conjugation under u, the
    would-be deformed cocycle collapses to the trivial one, and the right
    action kills u.
    """
    a, h = mp.a, mp.h
    if mp2.a != a or mp2.h != h:
        raise ValueError("matched pairs must share both Hopf algebras")
    if not isinstance(a, FDHopf) or not isinstance(h, FDHopf):
        raise ValueError("bicrossed equivalence needs Hopf algebras on both sides")
    if u.base != a or u.ext != h.unit_coalgebra():
        raise ValueError("cocycle context does not match the matched pairs")
    field = a.field
    hc, ac = h.coalgebra, a.coalgebra
    bv = lambda i: basis_vec(field, i)
    sa = a.antipode
    um = u.linmap
    adim, hdim = a.dim, h.dim
    hl, al = h.space.labels, a.space.labels
    hr, ar = range(hdim), range(adim)
    rep = Report("bicrossed equivalence")

    if mp2.ract != mp.ract:
        rep.add("ract-equal", False, "right actions differ")
        return rep
    rep.add("ract-equal", True)

    def amul(*vs):
        out = vs[0]
        for v in vs[1:]:
            out = a.mul(out, v)
        return out

    def deformed_lact(hi, ci):
        got = mp2.lact.bilin(bv(hi), bv(ci), adim)
        want: dict = {}
        for (h1, h2, h3), ch in hc.expand(hi, 3):
            for (c1, c2), cc in ac.expand(ci, 2):
                term = amul(um.apply(bv(h1)),
                            mp.lact.bilin(bv(h2), bv(c1), adim),
                            sa.apply(um.apply(mp.ract.bilin(bv(h3), bv(c2), adim))))
                vec_add_into(field, want, term, field.mul(ch, cc))
        return got == want

    _scan(rep, "deformed-lact", iproduct(hr, ar), (hl, al), deformed_lact)

    def triviality(hi, gi):
        got: dict = {}
        for (h1, h2, h3), ch in hc.expand(hi, 3):
            for (g1, g2), cg in hc.expand(gi, 2):
                term = amul(um.apply(bv(h1)),
                            mp.lact.bilin(bv(h2), um.apply(bv(g1)), adim),
                            sa.apply(um.apply(h.mul(bv(h3), bv(g2)))))
                vec_add_into(field, got, term, field.mul(ch, cg))
        eps = field.mul(hc.counit(bv(hi)), hc.counit(bv(gi)))
        return got == vec_scale(field, eps, a.unit)

    _scan(rep, "cocycle-triviality", iproduct(hr, hr), (hl, hl), triviality)

    def kills(hi, gi):
        got = mp.ract.bilin(bv(hi), um.apply(bv(gi)), adim)
        return got == vec_scale(field, hc.counit(bv(gi)), bv(hi))

    _scan(rep, "ract-kills-cocycle", iproduct(hr, hr), (hl, hl), kills)
    return rep
