"""Matrices over F_q[x]: exact determinant, Hermite normal form, orbit tests.

The Hermite normal form used throughout is the canonical representative of
the left orbit under unimodular (constant-determinant) matrices: upper
triangular, monic diagonal, and every above-diagonal entry reduced to degree
strictly below the diagonal entry of its column.  Orbit equality is therefore
a structural equality of canonical forms.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    MixedFields,
    NotSquare,
    ShapeMismatch,
    SingularMatrix,
    ZeroColumn,
)
from .fields import GF
from .poly import NEG_INF, Poly, poly_gcd


class PolyMatrix:
    __slots__ = ("field", "rows", "cols", "entries")

    def __init__(self, entries):
        entries = tuple(tuple(row) for row in entries)
        if not entries or not entries[0]:
            raise ShapeMismatch("matrices must have at least one row and column")
        field = entries[0][0].field
        cols = len(entries[0])
        for row in entries:
            if len(row) != cols:
                raise ShapeMismatch("ragged rows")
            for e in row:
                if e.field != field:
                    raise MixedFields("entries from different fields")
        self.field = field
        self.rows = len(entries)
        self.cols = cols
        self.entries = entries

    # -- constructors --------------------------------------------------------

    @classmethod
    def identity(cls, field: GF, n: int):
        one, zero = Poly.one(field), Poly.zero(field)
        return cls([[one if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def diagonal(cls, diag):
        field = diag[0].field
        zero = Poly.zero(field)
        n = len(diag)
        return cls([[diag[i] if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def from_ints(cls, field: GF, rows):
        """Rows of little-endian integer coefficient lists."""
        return cls([[Poly.from_ints(field, e) for e in row] for row in rows])

    @classmethod
    def constant(cls, field: GF, rows):
        """A matrix of constants, given as an integer grid."""
        return cls([[Poly.const(field, v) for v in row] for row in rows])

    def to_json(self) -> dict:
        return {
            "field": self.field.to_json(),
            "entries": [[e.to_ints() for e in row] for row in self.entries],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "PolyMatrix":
        field = GF.from_json(obj["field"])
        return cls.from_ints(field, obj["entries"])

    # -- views ---------------------------------------------------------------

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def column(self, j: int):
        return [self.entries[i][j] for i in range(self.rows)]

    def coeff_layer(self, j: int, d: int):
        """The vector of degree-d coefficients of column j."""
        return [self.entries[i][j][d] for i in range(self.rows)]

    def constant_layer(self):
        """The matrix of constant terms, as an integer grid."""
        return [[e[0] for e in row] for row in self.entries]

    def key(self):
        """Hashable structural key (coefficient tuples, row-major)."""
        return tuple(tuple(e.coeffs for e in row) for row in self.entries)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_upper_triangular(self) -> bool:
        return all(
            self.entries[i][j].is_zero()
            for i in range(self.rows)
            for j in range(min(i, self.cols))
        )

    def max_entry_degree(self):
        return max(e.degree for row in self.entries for e in row)

    def __eq__(self, other):
        return (
            isinstance(other, PolyMatrix)
            and self.field == other.field
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        body = "; ".join(", ".join(repr(e) for e in row) for row in self.entries)
        return f"[{body}]"

    # -- arithmetic ----------------------------------------------------------

    def __matmul__(self, other: "PolyMatrix") -> "PolyMatrix":
        if self.field != other.field:
            raise MixedFields("matrix product across different fields")
        if self.cols != other.rows:
            raise ShapeMismatch(f"{self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        zero = Poly.zero(self.field)
        out = []
        for i in range(self.rows):
            row = []
            arow = self.entries[i]
            for j in range(other.cols):
                acc = zero
                for l in range(self.cols):
                    if arow[l] and other.entries[l][j]:
                        acc = acc + arow[l] * other.entries[l][j]
                row.append(acc)
            out.append(row)
        return PolyMatrix(out)


def mat_mul(a: PolyMatrix, b: PolyMatrix) -> PolyMatrix:
    return a @ b


def satisfies_R(m: PolyMatrix, k: int) -> bool:
    """True iff every entry has degree <= k (zero entries pass)."""
    return all(e.degree <= k for row in m.entries for e in row)


def _det_cofactor(entries, field):
    n = len(entries)
    if n == 1:
        return entries[0][0]
    if n == 2:
        return entries[0][0] * entries[1][1] - entries[0][1] * entries[1][0]
    acc = Poly.zero(field)
    for i in range(n):
        e = entries[i][0]
        if e.is_zero():
            continue
        minor = [row[1:] for r, row in enumerate(entries) if r != i]
        term = e * _det_cofactor(minor, field)
        acc = acc + term if i % 2 == 0 else acc - term
    return acc


def det(m: PolyMatrix) -> Poly:
    """Exact determinant; cofactor expansion up to n = 5, HNF-based beyond."""
    if not m.is_square():
        raise NotSquare(f"{m.rows}x{m.cols}")
    if m.rows <= 5:
        return _det_cofactor([list(row) for row in m.entries], m.field)
    try:
        form = hnf(m)
    except SingularMatrix:
        return Poly.zero(m.field)
    d = Poly.one(m.field)
    for i in range(m.rows):
        d = d * form.h.entries[i][i]
    # u @ m = h with det(u) a nonzero constant c, so det(m) = det(h) / c
    c = det_constant(form.u)
    return d.scale(m.field.inv(c))


def det_constant(u: PolyMatrix) -> int:
    """Determinant of a matrix known to be unimodular, as a field element."""
    d = det(u) if u.rows <= 5 else _det_cofactor([list(r) for r in u.entries], u.field)
    if not d.is_constant():
        raise SingularMatrix("matrix is not unimodular")
    return d[0]


@dataclass(frozen=True)
class HermiteForm:
    h: PolyMatrix
    u: PolyMatrix
    det_degree: int


def hnf(m: PolyMatrix) -> HermiteForm:
    """Canonical upper-triangular form under left unimodular multiplication.

    Euclidean elimination clears each column below the diagonal, the pivot is
    made monic, and above-diagonal entries are reduced by division with
    remainder.  The witness u satisfies u @ m = h with det(u) in F_q^*.
    """
    if not m.is_square():
        raise NotSquare(f"{m.rows}x{m.cols}")
    field = m.field
    n = m.rows
    h = [list(row) for row in m.entries]
    u = [list(row) for row in PolyMatrix.identity(field, n).entries]

    def row_sub(i, j, q):
        # row_i -= q * row_j
        h[i] = [a - q * b for a, b in zip(h[i], h[j])]
        u[i] = [a - q * b for a, b in zip(u[i], u[j])]

    for c in range(n):
        while True:
            live = [i for i in range(c, n) if not h[i][c].is_zero()]
            if not live:
                raise SingularMatrix(f"column {c} has no pivot")
            piv = min(live, key=lambda i: h[i][c].degree)
            if piv != c:
                h[c], h[piv] = h[piv], h[c]
                u[c], u[piv] = u[piv], u[c]
            below = [i for i in range(c + 1, n) if not h[i][c].is_zero()]
            if not below:
                break
            for i in below:
                q, _ = divmod(h[i][c], h[c][c])
                row_sub(i, c, q)
        # monic pivot
        lc = h[c][c].lc
        if lc != 1:
            inv = field.inv(lc)
            h[c] = [e.scale(inv) for e in h[c]]
            u[c] = [e.scale(inv) for e in u[c]]
    # reduce above-diagonal entries, left to right
    for c in range(1, n):
        for i in range(c):
            if h[i][c].degree >= h[c][c].degree:
                q, _ = divmod(h[i][c], h[c][c])
                row_sub(i, c, q)
    hm = PolyMatrix(h)
    um = PolyMatrix(u)
    t = sum(hm.entries[i][i].degree for i in range(n))
    return HermiteForm(hm, um, t)


def same_orbit(a: PolyMatrix, b: PolyMatrix) -> bool:
    """True iff a and b generate the same left unimodular orbit."""
    if a.rows != b.rows or a.cols != b.cols:
        raise ShapeMismatch(f"{a.rows}x{a.cols} vs {b.rows}x{b.cols}")
    return hnf(a).h == hnf(b).h


def column_gcd(m: PolyMatrix, j: int) -> Poly:
    """Monic gcd of the entries of column j."""
    col = [e for e in m.column(j) if not e.is_zero()]
    if not col:
        raise ZeroColumn(f"column {j} is identically zero")
    g = col[0]
    for e in col[1:]:
        g = poly_gcd(g, e)
    return g.monic()


def is_canonical_hnf(m: PolyMatrix) -> bool:
    """Structural check of the canonical-form conditions."""
    if not m.is_square() or not m.is_upper_triangular():
        return False
    n = m.rows
    for j in range(n):
        d = m.entries[j][j]
        if d.is_zero() or d.lc != 1:
            return False
        for i in range(j):
            if m.entries[i][j].degree >= d.degree:
                return False
    return True
