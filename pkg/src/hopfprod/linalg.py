"""Based vector spaces and exact sparse linear maps.

A :class:`LinMap` stores, for each domain basis index, the sparse image vector
as a sorted tuple of ``(codomain index, value)`` pairs with no zeros.  Sparse
vectors elsewhere in the package are plain dicts ``{index: value}`` with no
stored zeros.  Tensor products use the row-major convention throughout: the
pair ``(i, j)`` over ``A (x) B`` sits at flat index ``i * dim(B) + j``.  That
convention is normative for file I/O as well.

Bilinear maps are linear maps out of a tensor-product domain; apply them to a
pair of vectors with :meth:`LinMap.bilin`.
"""
from __future__ import annotations

from .fields import same_field


class DimensionError(ValueError):
    """Shapes of two maps or spaces do not line up."""


class NotInvertibleError(ValueError):
    """A square map has no inverse; carries the rank found."""

    def __init__(self, rank: int, dim: int):
        self.rank = rank
        self.dim = dim
        super().__init__(f"map is not bijective: rank {rank} < dimension {dim}")


class BasedSpace:
    """A finite-dimensional space with a distinguished ordered basis."""

    __slots__ = ("labels", "_hash")

    def __init__(self, labels):
        self.labels = tuple(labels)
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("basis labels must be distinct")
        self._hash = hash(self.labels)

    @property
    def dim(self) -> int:
        return len(self.labels)

    def __eq__(self, other):
        return isinstance(other, BasedSpace) and self.labels == other.labels

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"BasedSpace(dim={self.dim})"


SCALAR_SPACE = BasedSpace(("1",))


def tensor_space(a: BasedSpace, b: BasedSpace) -> BasedSpace:
    """Tensor product space, row-major: label (i, j) at index i*dim(b)+j."""
    return BasedSpace(
        tuple(f"({la},{lb})" for la in a.labels for lb in b.labels)
    )


# ---------------------------------------------------------------------------
# sparse vectors as plain dicts


def vec_add_into(field, acc: dict, v: dict, scale=None) -> dict:
    """acc += scale*v in place (scale defaults to one); drops zeros."""
    for i, c in v.items():
        x = field.add(acc.get(i, field.zero), c if scale is None else field.mul(scale, c))
        if field.is_zero(x):
            acc.pop(i, None)
        else:
            acc[i] = x
    return acc


def vec_scale(field, c, v: dict) -> dict:
    if field.is_zero(c):
        return {}
    return {i: field.mul(c, x) for i, x in v.items()}


def vec_sub(field, u: dict, v: dict) -> dict:
    out = dict(u)
    for i, c in v.items():
        x = field.sub(out.get(i, field.zero), c)
        if field.is_zero(x):
            out.pop(i, None)
        else:
            out[i] = x
    return out


def tensor_vec(field, u: dict, v: dict, right_dim: int) -> dict:
    """The vector u (x) v inside the flattened tensor space."""
    out = {}
    for i, cu in u.items():
        for j, cv in v.items():
            out[i * right_dim + j] = field.mul(cu, cv)
    return out


def basis_vec(field, i: int) -> dict:
    return {i: field.one}


class LinMap:
    """An exact linear map between based spaces, stored column-sparse."""

    __slots__ = ("field", "domain", "codomain", "cols", "_hash")

    def __init__(self, field, domain: BasedSpace, codomain: BasedSpace, cols):
        """``cols`` maps domain index -> {codomain index: value}; zeros dropped."""
        self.field = field
        self.domain = domain
        self.codomain = codomain
        norm = {}
        for i, col in cols.items():
            if not 0 <= i < domain.dim:
                raise DimensionError(f"domain index {i} out of range")
            entries = tuple(
                sorted((j, v) for j, v in col.items() if not field.is_zero(v))
            )
            for j, _ in entries:
                if not 0 <= j < codomain.dim:
                    raise DimensionError(f"codomain index {j} out of range")
            if entries:
                norm[i] = entries
        self.cols = norm
        self._hash = None

    @classmethod
    def identity(cls, field, space: BasedSpace) -> LinMap:
        return cls(field, space, space, {i: {i: field.one} for i in range(space.dim)})

    @classmethod
    def zero(cls, field, domain: BasedSpace, codomain: BasedSpace) -> LinMap:
        return cls(field, domain, codomain, {})

    @classmethod
    def from_images(cls, field, domain, codomain, images) -> LinMap:
        """Build from a list of sparse image vectors, one per domain index."""
        return cls(field, domain, codomain, dict(enumerate(images)))

    def col(self, i: int) -> dict:
        return dict(self.cols.get(i, ()))

    def apply(self, v: dict) -> dict:
        out = {}
        f = self.field
        for i, c in v.items():
            for j, m in self.cols.get(i, ()):
                x = f.add(out.get(j, f.zero), f.mul(c, m))
                if f.is_zero(x):
                    out.pop(j, None)
                else:
                    out[j] = x
        return out

    def bilin(self, v: dict, w: dict, right_dim: int) -> dict:
        """Apply to v (x) w, where the domain splits as left (x) right."""
        return self.apply(tensor_vec(self.field, v, w, right_dim))

    def entrywise_key(self):
        return (self.domain.dim, self.codomain.dim, tuple(sorted(self.cols.items())))

    def __eq__(self, other):
        """Exact structural equality; spaces compared by dimension only."""
        return (
            isinstance(other, LinMap)
            and self.field == other.field
            and self.entrywise_key() == other.entrywise_key()
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.entrywise_key())
        return self._hash

    def __matmul__(self, other):
        return compose(self, other)

    def __repr__(self):
        return f"LinMap({self.domain.dim}->{self.codomain.dim}, {len(self.cols)} cols)"


def compose(f: LinMap, g: LinMap) -> LinMap:
    """The composite f after g.  Requires dim(codomain g) == dim(domain f)."""
    field = same_field(f, g)
    if g.codomain.dim != f.domain.dim:
        raise DimensionError(
            f"cannot compose: {g.codomain.dim} -> {f.domain.dim} mismatch"
        )
    cols = {}
    for i in g.cols:
        img = f.apply(g.col(i))
        if img:
            cols[i] = img
    return LinMap(field, g.domain, f.codomain, cols)


def tensor_map(f: LinMap, g: LinMap) -> LinMap:
    """(f (x) g)(e_i (x) e_j) = f(e_i) (x) g(e_j), row-major indexing."""
    field = same_field(f, g)
    dom = tensor_space(f.domain, g.domain)
    cod = tensor_space(f.codomain, g.codomain)
    gdim = g.domain.dim
    cdim = g.codomain.dim
    cols = {}
    for i, fcol in f.cols.items():
        for j, gcol in g.cols.items():
            cols[i * gdim + j] = {
                a * cdim + b: field.mul(x, y) for a, x in fcol for b, y in gcol
            }
    return LinMap(field, dom, cod, cols)


def twist_map(field, a: BasedSpace, b: BasedSpace) -> LinMap:
    """The flip a (x) b -> b (x) a."""
    cols = {}
    for i in range(a.dim):
        for j in range(b.dim):
            cols[i * b.dim + j] = {j * a.dim + i: field.one}
    return LinMap(field, tensor_space(a, b), tensor_space(b, a), cols)


# ---------------------------------------------------------------------------
# exact elimination


def _rows_of(f: LinMap) -> list[dict]:
    rows = [dict() for _ in range(f.codomain.dim)]
    for i, col in f.cols.items():
        for j, v in col:
            rows[j][i] = v
    return rows


def _subtract_scaled(field, row: dict, factor, prow: dict):
    for c, v in prow.items():
        x = field.sub(row.get(c, field.zero), field.mul(factor, v))
        if field.is_zero(x):
            row.pop(c, None)
        else:
            row[c] = x


def _echelon(field, rows: list[dict], width: int):
    """Forward-reduce sparse rows in place; pivots are the row minima.

    Rows may carry augmentation columns >= width; pivots are chosen below
    ``width`` only.  Returns the sorted list of (pivot column, row index).
    Rows that never acquire a pivot end up with no coefficient columns.
    """
    pivots: dict[int, int] = {}
    for r in sorted(range(len(rows)), key=lambda k: len(rows[k])):
        row = rows[r]
        while True:
            cols = [c for c in row if c < width]
            if not cols:
                break
            c0 = min(cols)
            holder = pivots.get(c0)
            if holder is None:
                pinv = field.inv(row[c0])
                for c in list(row):
                    row[c] = field.mul(pinv, row[c])
                pivots[c0] = r
                break
            _subtract_scaled(field, row, row[c0], rows[holder])
    return sorted((c, r) for c, r in pivots.items())


def _rref(field, rows: list[dict], width: int):
    """Full reduced echelon form; returns sorted pivot pairs."""
    pivots = _echelon(field, rows, width)
    for col, r in reversed(pivots):
        prow = rows[r]
        for col2, r2 in pivots:
            if col2 >= col:
                break
            row2 = rows[r2]
            factor = row2.get(col)
            if factor is not None and not field.is_zero(factor):
                _subtract_scaled(field, row2, factor, prow)
    return pivots


def invert(f: LinMap) -> LinMap:
    """Exact inverse of a square map; raises NotInvertibleError with the rank."""
    n = f.domain.dim
    if f.codomain.dim != n:
        raise DimensionError("only square maps can be inverted")
    field = f.field
    rows = _rows_of(f)
    for r, row in enumerate(rows):
        row[n + r] = field.one
    pivots = _rref(field, rows, n)
    if len(pivots) < n:
        raise NotInvertibleError(len(pivots), n)
    # after reduction the augmented part of the pivot row for column `col`
    # holds row `col` of the inverse matrix
    cols = {}
    for col, r in pivots:
        for c, v in rows[r].items():
            if c >= n:
                cols.setdefault(c - n, {})[col] = v
    return LinMap(field, f.codomain, f.domain, cols)


def rank(f: LinMap) -> int:
    """Rank computed by column elimination (independent of :func:`invert`)."""
    field = f.field
    cols = [f.col(i) for i in range(f.domain.dim) if f.cols.get(i)]
    r = 0
    for j in range(f.codomain.dim):
        pick = None
        for k, col in enumerate(cols):
            if not field.is_zero(col.get(j, field.zero)):
                pick = k
                break
        if pick is None:
            continue
        pivot = cols.pop(pick)
        r += 1
        pinv = field.inv(pivot[j])
        for col in cols:
            factor = col.get(j)
            if factor is None or field.is_zero(factor):
                continue
            scale = field.mul(factor, pinv)
            for c, v in pivot.items():
                x = field.sub(col.get(c, field.zero), field.mul(scale, v))
                if field.is_zero(x):
                    col.pop(c, None)
                else:
                    col[c] = x
    return r


def solve_system(field, rows: list[dict], rhs: list, n_unknowns: int):
    """Solve a sparse linear system exactly.

    Returns ``(solution dict, unique)`` with free unknowns set to zero, or
    ``(None, False)`` when inconsistent.
    """
    work = []
    for row, b in zip(rows, rhs):
        row = {c: v for c, v in row.items() if not field.is_zero(v)}
        if not field.is_zero(b):
            row[n_unknowns] = b
        work.append(row)
    pivots = _echelon(field, work, n_unknowns)
    pivot_rows = {r for _, r in pivots}
    for r, row in enumerate(work):
        if r in pivot_rows:
            continue
        if not field.is_zero(row.get(n_unknowns, field.zero)):
            return None, False
    sol = {}
    for col, r in reversed(pivots):
        row = work[r]
        acc = row.get(n_unknowns, field.zero)
        for c, v in row.items():
            if c != col and c < n_unknowns and c in sol:
                acc = field.sub(acc, field.mul(v, sol[c]))
        if not field.is_zero(acc):
            sol[col] = acc
    return sol, len(pivots) == n_unknowns


class PreimageSolver:
    """Solve f(x) = v repeatedly for a fixed injective-or-not map f."""

    def __init__(self, f: LinMap):
        self.f = f
        self.field = f.field
        n = f.domain.dim
        rows = _rows_of(f)
        m = len(rows)
        for r, row in enumerate(rows):
            row[n + r] = self.field.one
        self.pivots = _rref(self.field, rows, n)
        self.rows = rows
        self.n = n
        self.m = m
        self.pivot_rows = {r for _, r in self.pivots}

    def preimage(self, v: dict):
        """A preimage of v under f, or None if v is outside the image."""
        field = self.field
        sol = {}
        for col, r in self.pivots:
            acc = field.zero
            row = self.rows[r]
            for c, coeff in row.items():
                if c >= self.n:
                    acc = field.add(acc, field.mul(coeff, v.get(c - self.n, field.zero)))
            if not field.is_zero(acc):
                sol[col] = acc
        # rows without pivots impose consistency constraints
        for r in range(self.m):
            if r in self.pivot_rows:
                continue
            row = self.rows[r]
            acc = field.zero
            for c, coeff in row.items():
                if c >= self.n:
                    acc = field.add(acc, field.mul(coeff, v.get(c - self.n, field.zero)))
            if not field.is_zero(acc):
                return None
        return sol
