"""Finite-dimensional coalgebras, algebras, bialgebras and Hopf algebras.

All structures are stored as sparse structure-constant maps over an exact
field.  Comultiplication components follow the usual implicit-summation
convention: ``delta(c) = sum c_(1) (x) c_(2)``; :meth:`FDCoalgebra.expand`
produces the joint n-fold expansion used by the compatibility checkers.

Axiom checkers return :class:`~hopfprod.reports.Report` objects that name
each failing axiom together with a witness basis element, never bare booleans.
"""
from __future__ import annotations

from .fields import same_field
from .linalg import (
    SCALAR_SPACE,
    BasedSpace,
    LinMap,
    basis_vec,
    compose,
    solve_system,
    tensor_map,
    tensor_space,
    tensor_vec,
    twist_map,
    vec_scale,
)
from .reports import Report


class NoAntipodeError(ValueError):
    """The convolution system for an antipode is inconsistent."""

    def __init__(self, side: str):
        self.side = side
        super().__init__(f"no antipode: the {side} convolution system is inconsistent")


class FDCoalgebra:
    """A coalgebra given by comultiplication and counit structure constants."""

    def __init__(self, field, space: BasedSpace, delta: LinMap, epsilon: LinMap):
        self.field = field
        self.space = space
        self.delta = delta
        self.epsilon = epsilon
        if delta.domain.dim != space.dim or delta.codomain.dim != space.dim**2:
            raise ValueError("comultiplication has the wrong shape")
        if epsilon.domain.dim != space.dim or epsilon.codomain.dim != 1:
            raise ValueError("counit has the wrong shape")
        self._expand_cache: dict[tuple[int, int], list] = {}

    @property
    def dim(self) -> int:
        return self.space.dim

    def counit(self, v: dict):
        return self.epsilon.apply(v).get(0, self.field.zero)

    def expand(self, i: int, n: int) -> list[tuple[tuple[int, ...], object]]:
        """Joint n-fold comultiplication of basis element i.

        Returns ``[(indices, coeff), ...]`` where ``indices`` has length n.
        Only valid on coassociative comultiplications (checked elsewhere);
        the expansion always splits the leftmost factor.
        """
        if n == 1:
            return [((i,), self.field.one)]
        key = (i, n)
        cached = self._expand_cache.get(key)
        if cached is not None:
            return cached
        field = self.field
        dim = self.dim
        acc: dict[tuple[int, ...], object] = {}
        for rest, c in self.expand(i, n - 1):
            for flat, c2 in self.delta.cols.get(rest[0], ()):
                idx = (flat // dim, flat % dim) + rest[1:]
                x = field.add(acc.get(idx, field.zero), field.mul(c, c2))
                if field.is_zero(x):
                    acc.pop(idx, None)
                else:
                    acc[idx] = x
        out = sorted(acc.items())
        self._expand_cache[key] = out
        return out

    def __eq__(self, other):
        return (
            isinstance(other, FDCoalgebra)
            and self.field == other.field
            and self.delta == other.delta
            and self.epsilon == other.epsilon
        )

    def __hash__(self):
        return hash((self.delta, self.epsilon))

    def __repr__(self):
        return f"FDCoalgebra(dim={self.dim})"


class UnitalCoalgebra:
    """A coalgebra with a distinguished group-like unit vector."""

    def __init__(self, coalg: FDCoalgebra, unit: dict):
        self.coalg = coalg
        self.unit = dict(unit)

    @property
    def field(self):
        return self.coalg.field

    @property
    def space(self):
        return self.coalg.space

    @property
    def dim(self):
        return self.coalg.dim

    @property
    def delta(self):
        return self.coalg.delta

    @property
    def epsilon(self):
        return self.coalg.epsilon

    def __eq__(self, other):
        return (
            isinstance(other, UnitalCoalgebra)
            and self.coalg == other.coalg
            and self.unit == other.unit
        )

    def __hash__(self):
        return hash((self.coalg, tuple(sorted(self.unit.items()))))

    def __repr__(self):
        return f"UnitalCoalgebra(dim={self.dim})"


class FDAlgebra:
    """An algebra given by multiplication structure constants and a unit vector.

    ``associative`` is a tri-state claim ("yes" / "no" / "unknown"); checkers
    always test the actual multiplication regardless of the flag.
    """

    def __init__(self, field, space: BasedSpace, mult: LinMap, unit: dict,
                 associative: str = "unknown"):
        self.field = field
        self.space = space
        self.mult = mult
        self.unit = dict(unit)
        if associative not in ("yes", "no", "unknown"):
            raise ValueError("associative flag must be yes, no or unknown")
        self.associative = associative
        if mult.domain.dim != space.dim**2 or mult.codomain.dim != space.dim:
            raise ValueError("multiplication has the wrong shape")

    @property
    def dim(self) -> int:
        return self.space.dim

    def mul(self, v: dict, w: dict) -> dict:
        return self.mult.bilin(v, w, self.dim)

    def unit_map(self) -> LinMap:
        return LinMap(self.field, SCALAR_SPACE, self.space, {0: self.unit})

    def __eq__(self, other):
        return (
            isinstance(other, FDAlgebra)
            and self.field == other.field
            and self.mult == other.mult
            and self.unit == other.unit
        )

    def __hash__(self):
        return hash((self.mult, tuple(sorted(self.unit.items()))))

    def __repr__(self):
        return f"FDAlgebra(dim={self.dim}, associative={self.associative})"


class FDBialgebra:
    """A coalgebra and an algebra on the same based space."""

    def __init__(self, coalgebra: FDCoalgebra, algebra: FDAlgebra):
        if coalgebra.space.dim != algebra.space.dim:
            raise ValueError("coalgebra and algebra live on different spaces")
        same_field(coalgebra, algebra)
        self.coalgebra = coalgebra
        self.algebra = algebra

    @property
    def field(self):
        return self.coalgebra.field

    @property
    def space(self):
        return self.coalgebra.space

    @property
    def dim(self):
        return self.coalgebra.dim

    @property
    def delta(self):
        return self.coalgebra.delta

    @property
    def epsilon(self):
        return self.coalgebra.epsilon

    @property
    def mult(self):
        return self.algebra.mult

    @property
    def unit(self):
        return self.algebra.unit

    def mul(self, v: dict, w: dict) -> dict:
        return self.algebra.mul(v, w)

    def counit(self, v: dict):
        return self.coalgebra.counit(v)

    def expand(self, i: int, n: int):
        return self.coalgebra.expand(i, n)

    def unit_coalgebra(self) -> UnitalCoalgebra:
        return UnitalCoalgebra(self.coalgebra, self.unit)

    def __eq__(self, other):
        return (
            isinstance(other, FDBialgebra)
            and self.coalgebra == other.coalgebra
            and self.algebra == other.algebra
        )

    def __hash__(self):
        return hash((self.coalgebra, self.algebra))

    def __repr__(self):
        return f"FDBialgebra(dim={self.dim})"


class FDHopf(FDBialgebra):
    """A bialgebra with an antipode."""

    def __init__(self, coalgebra: FDCoalgebra, algebra: FDAlgebra, antipode: LinMap):
        super().__init__(coalgebra, algebra)
        self.antipode = antipode
        if antipode.domain.dim != self.dim or antipode.codomain.dim != self.dim:
            raise ValueError("antipode has the wrong shape")

    def __eq__(self, other):
        return (
            isinstance(other, FDHopf)
            and FDBialgebra.__eq__(self, other)
            and self.antipode == other.antipode
        )

    def __hash__(self):
        return hash((self.coalgebra, self.algebra, self.antipode))

    def __repr__(self):
        return f"FDHopf(dim={self.dim})"


# ---------------------------------------------------------------------------
# tensor constructions


def tensor_coalgebra(c: FDCoalgebra, d: FDCoalgebra) -> FDCoalgebra:
    """The tensor-product coalgebra: (c (x) d)_(1..2) pairs componentwise."""
    field = same_field(c, d)
    space = tensor_space(c.space, d.space)
    shuffle = tensor_map(
        tensor_map(LinMap.identity(field, c.space), twist_map(field, c.space, d.space)),
        LinMap.identity(field, d.space),
    )
    delta = compose(shuffle, tensor_map(c.delta, d.delta))
    epsilon = tensor_map(c.epsilon, d.epsilon)
    return FDCoalgebra(field, space, delta, epsilon)


def tensor_algebra(a: FDAlgebra, b: FDAlgebra) -> FDAlgebra:
    """Componentwise multiplication on the tensor product space."""
    field = same_field(a, b)
    space = tensor_space(a.space, b.space)
    shuffle = tensor_map(
        tensor_map(LinMap.identity(field, a.space), twist_map(field, b.space, a.space)),
        LinMap.identity(field, b.space),
    )
    mult = compose(tensor_map(a.mult, b.mult), shuffle)
    unit = tensor_vec(field, a.unit, b.unit, b.dim)
    flag = "yes" if a.associative == b.associative == "yes" else "unknown"
    return FDAlgebra(field, space, mult, unit, associative=flag)


def tensor_bialgebra(x: FDBialgebra, y: FDBialgebra) -> FDBialgebra:
    return FDBialgebra(
        tensor_coalgebra(x.coalgebra, y.coalgebra),
        tensor_algebra(x.algebra, y.algebra),
    )


# ---------------------------------------------------------------------------
# predicates and checkers


def _first_difference(f: LinMap, g: LinMap, labels) -> str | None:
    """Label of the first domain basis index where two maps differ."""
    if f == g:
        return None
    for i in range(len(labels)):
        if f.col(i) != g.col(i):
            return labels[i]
    return "shape"


def check_coalgebra(c: FDCoalgebra) -> Report:
    """Verify coassociativity and both counit laws, with witnesses."""
    field = c.field
    ident = LinMap.identity(field, c.space)
    rep = Report("coalgebra axioms")
    lhs = compose(tensor_map(c.delta, ident), c.delta)
    rhs = compose(tensor_map(ident, c.delta), c.delta)
    rep.add("coassociativity", lhs == rhs, _first_difference(lhs, rhs, c.space.labels))
    left = compose(tensor_map(c.epsilon, ident), c.delta)
    rep.add("counit-left", left == ident, _first_difference(left, ident, c.space.labels))
    right = compose(tensor_map(ident, c.epsilon), c.delta)
    rep.add("counit-right", right == ident, _first_difference(right, ident, c.space.labels))
    return rep


def check_algebra(a: FDAlgebra) -> Report:
    field = a.field
    ident = LinMap.identity(field, a.space)
    rep = Report("algebra axioms")
    lhs = compose(a.mult, tensor_map(a.mult, ident))
    rhs = compose(a.mult, tensor_map(ident, a.mult))
    labels3 = tensor_space(tensor_space(a.space, a.space), a.space).labels
    rep.add("associativity", lhs == rhs, _first_difference(lhs, rhs, labels3))
    eta = a.unit_map()
    left = compose(a.mult, tensor_map(eta, ident))
    rep.add("unit-left", left == ident, _first_difference(left, ident, a.space.labels))
    right = compose(a.mult, tensor_map(ident, eta))
    rep.add("unit-right", right == ident, _first_difference(right, ident, a.space.labels))
    return rep


def check_bialgebra(b: FDBialgebra) -> Report:
    """Coalgebra axioms, algebra axioms, and the four compatibility laws."""
    field = b.field
    rep = Report("bialgebra axioms")
    rep.extend(check_coalgebra(b.coalgebra))
    rep.extend(check_algebra(b.algebra))
    pair_labels = tensor_space(b.space, b.space).labels
    square = tensor_algebra(b.algebra, b.algebra)
    lhs = compose(b.delta, b.mult)
    rhs = compose(square.mult, tensor_map(b.delta, b.delta))
    rep.add("comult-multiplicative", lhs == rhs, _first_difference(lhs, rhs, pair_labels))
    delta_unit = b.delta.apply(b.unit)
    want = tensor_vec(field, b.unit, b.unit, b.dim)
    rep.add(
        "comult-unit",
        delta_unit == want,
        None if delta_unit == want else "unit",
    )
    lhs = compose(b.epsilon, b.mult)
    rhs = tensor_map(b.epsilon, b.epsilon)
    rep.add("counit-multiplicative", lhs == rhs, _first_difference(lhs, rhs, pair_labels))
    eps_unit = b.counit(b.unit)
    rep.add("counit-unit", eps_unit == field.one, None if eps_unit == field.one else "unit")
    return rep


def is_coalgebra_map(f: LinMap, src: FDCoalgebra, dst: FDCoalgebra) -> bool:
    """True iff delta_dst . f = (f (x) f) . delta_src and counits agree."""
    if f.domain.dim != src.dim or f.codomain.dim != dst.dim:
        raise ValueError("map shape does not match the given coalgebras")
    if compose(dst.delta, f) != compose(tensor_map(f, f), src.delta):
        return False
    return compose(dst.epsilon, f) == src.epsilon


def is_coalgebra_antimap(f: LinMap, src: FDCoalgebra, dst: FDCoalgebra) -> bool:
    """Like :func:`is_coalgebra_map` but with the tensor factors swapped."""
    if f.domain.dim != src.dim or f.codomain.dim != dst.dim:
        raise ValueError("map shape does not match the given coalgebras")
    field = same_field(src, dst)
    flipped = compose(twist_map(field, dst.space, dst.space), compose(tensor_map(f, f), src.delta))
    if compose(dst.delta, f) != flipped:
        return False
    return compose(dst.epsilon, f) == src.epsilon


def is_algebra_map(f: LinMap, src: FDAlgebra, dst: FDAlgebra) -> bool:
    if compose(f, src.mult) != compose(dst.mult, tensor_map(f, f)):
        return False
    return f.apply(src.unit) == dst.unit


def is_algebra_antimap(f: LinMap, src: FDAlgebra, dst: FDAlgebra) -> bool:
    field = same_field(src, dst)
    tw = twist_map(field, src.space, src.space)
    if compose(f, src.mult) != compose(dst.mult, compose(tensor_map(f, f), tw)):
        return False
    return f.apply(src.unit) == dst.unit


def grouplike_indices(c: FDCoalgebra) -> list[int]:
    """Basis indices i with delta(e_i) = e_i (x) e_i and counit 1."""
    field = c.field
    out = []
    for i in range(c.dim):
        if c.delta.col(i) == {i * c.dim + i: field.one} and c.counit(
            basis_vec(field, i)
        ) == field.one:
            out.append(i)
    return out


# ---------------------------------------------------------------------------
# convolution and antipodes


def convolution(f: LinMap, g: LinMap, src: FDCoalgebra, dst: FDAlgebra) -> LinMap:
    """The convolution product m_dst . (f (x) g) . delta_src."""
    return compose(dst.mult, compose(tensor_map(f, g), src.delta))


def convolution_unit(src: FDCoalgebra, dst: FDAlgebra) -> LinMap:
    """unit_dst . counit_src, the unit of the convolution algebra."""
    return compose(dst.unit_map(), src.epsilon)


def antipode_solve(b: FDBialgebra) -> LinMap:
    """Solve both convolution-inverse systems for the antipode exactly.

    Unknowns are the matrix entries of S; the two systems say S is a left and
    a right convolution inverse of the identity.  Raises
    :class:`NoAntipodeError` naming the inconsistent side.
    """
    field = b.field
    n = b.dim
    target = convolution_unit(b.coalgebra, b.algebra)

    def build(side: str):
        rows, rhs = [], []
        for k in range(n):
            want = target.col(k)
            out_rows = {}
            for (i, j), c in b.expand(k, 2):
                if side == "left":
                    # sum_t S[t,i] * c * mult((t,j) -> r)
                    for t in range(n):
                        for r, m in b.mult.cols.get(t * n + j, ()):
                            key = t * n + i
                            row = out_rows.setdefault(r, {})
                            row[key] = field.add(row.get(key, field.zero), field.mul(c, m))
                else:
                    for t in range(n):
                        for r, m in b.mult.cols.get(i * n + t, ()):
                            key = t * n + j
                            row = out_rows.setdefault(r, {})
                            row[key] = field.add(row.get(key, field.zero), field.mul(c, m))
            for r in set(out_rows) | set(want):
                rows.append(out_rows.get(r, {}))
                rhs.append(want.get(r, field.zero))
        return rows, rhs

    left_rows, left_rhs = build("left")
    right_rows, right_rhs = build("right")
    sol, _ = solve_system(field, left_rows + right_rows, left_rhs + right_rhs, n * n)
    if sol is None:
        if solve_system(field, left_rows, left_rhs, n * n)[0] is None:
            raise NoAntipodeError("left")
        if solve_system(field, right_rows, right_rhs, n * n)[0] is None:
            raise NoAntipodeError("right")
        raise NoAntipodeError("two-sided")
    cols: dict[int, dict] = {}
    for key, v in sol.items():
        t, i = divmod(key, n)
        cols.setdefault(i, {})[t] = v
    s = LinMap(field, b.space, b.space, cols)
    # a consistent system always pins S down: a two-sided convolution inverse
    # is unique, but verify rather than trust the elimination
    ident = LinMap.identity(field, b.space)
    if convolution(s, ident, b.coalgebra, b.algebra) != target:
        raise NoAntipodeError("left")
    if convolution(ident, s, b.coalgebra, b.algebra) != target:
        raise NoAntipodeError("right")
    return s


def attach_antipode(b: FDBialgebra) -> FDHopf:
    """Solve for the antipode and promote the bialgebra to a Hopf algebra."""
    return FDHopf(b.coalgebra, b.algebra, antipode_solve(b))


# ---------------------------------------------------------------------------
# small construction helpers used across modules


def counit_all_ones(field, space: BasedSpace) -> LinMap:
    return LinMap(field, space, SCALAR_SPACE, {i: {0: field.one} for i in range(space.dim)})


def grouplike_delta(field, space: BasedSpace) -> LinMap:
    n = space.dim
    return LinMap(field, space, tensor_space(space, space),
                  {i: {i * n + i: field.one} for i in range(n)})


def trivial_action_right(field, h_space, a_coalg: FDCoalgebra) -> LinMap:
    """h <| a = counit(a) h as a map H (x) A -> H."""
    adim = a_coalg.dim
    cols = {}
    for i in range(h_space.dim):
        for j in range(adim):
            e = a_coalg.counit(basis_vec(field, j))
            if not field.is_zero(e):
                cols[i * adim + j] = {i: e}
    return LinMap(field, tensor_space(h_space, a_coalg.space), h_space, cols)


def trivial_action_left(field, h_coalg: FDCoalgebra, a_space) -> LinMap:
    """h |> a = counit(h) a as a map H (x) A -> A."""
    adim = a_space.dim
    cols = {}
    for i in range(h_coalg.dim):
        e = h_coalg.counit(basis_vec(field, i))
        if field.is_zero(e):
            continue
        for j in range(adim):
            cols[i * adim + j] = {j: e}
    return LinMap(field, tensor_space(h_coalg.space, a_space), a_space, cols)


def trivial_cocycle(field, h_coalg: FDCoalgebra, unit_a: dict, a_space) -> LinMap:
    """f(h, g) = counit(h) counit(g) 1_A as a map H (x) H -> A."""
    hdim = h_coalg.dim
    cols = {}
    for i in range(hdim):
        ei = h_coalg.counit(basis_vec(field, i))
        if field.is_zero(ei):
            continue
        for j in range(hdim):
            ej = h_coalg.counit(basis_vec(field, j))
            c = field.mul(ei, ej)
            if not field.is_zero(c):
                cols[i * hdim + j] = vec_scale(field, c, unit_a)
    return LinMap(field, tensor_space(h_coalg.space, h_coalg.space), a_space, cols)
