"""Exact linear algebra over the rationals.

Everything downstream (structure constants, axiom checks, tensor quotients)
reduces to row reduction, kernels and linear solves over Q.  Scalars are
`fractions.Fraction`; there is no floating point anywhere in the package.

Row reduction is done on sparse integer-scaled rows: a row of fractions is
normalized to a primitive integer vector (content 1), and elimination uses
cross-multiplication, so intermediate growth stays controlled and the hot
path avoids repeated gcd normalizations inside Fraction arithmetic.  The
pivot order is always leftmost column, topmost row, which makes every
derived object (echelon forms, kernel bases, coset representatives)
deterministic.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

QQ = Fraction
Q0 = Fraction(0)
Q1 = Fraction(1)

Vec = tuple  # dense vector of Fractions


# ---------------------------------------------------------------------------
# sparse vector helpers (dict col -> Fraction, zero entries never stored)
# ---------------------------------------------------------------------------

def sp_from_dense(v) -> dict:
    return {i: QQ(x) for i, x in enumerate(v) if x}


def sp_to_dense(d: dict, n: int) -> Vec:
    out = [Q0] * n
    for i, x in d.items():
        out[i] = x
    return tuple(out)


def sp_add_into(dst: dict, src: dict, coeff=Q1) -> None:
    """dst += coeff * src, dropping zeros."""
    if not coeff:
        return
    for i, x in src.items():
        y = dst.get(i, Q0) + coeff * x
        if y:
            dst[i] = y
        else:
            dst.pop(i, None)


def sp_scale(src: dict, coeff) -> dict:
    if not coeff:
        return {}
    return {i: coeff * x for i, x in src.items()}


def _primitive_int_row(d: dict) -> dict:
    """Scale a fraction row to a primitive integer row (content 1)."""
    if not d:
        return {}
    denom = lcm(*(x.denominator for x in d.values())) if len(d) > 1 else next(iter(d.values())).denominator
    row = {i: int(x * denom) for i, x in d.items()}
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            break
    if g > 1:
        row = {i: v // g for i, v in row.items()}
    return row


# ---------------------------------------------------------------------------
# incremental echelon container
# ---------------------------------------------------------------------------

class RowSpace:
    """Incrementally echelonized span of rows in Q^ncols.

    Rows are stored as primitive integer dicts keyed by their pivot (= least
    nonzero) column.  Supports rank queries, membership, and canonical coset
    representatives (residues supported only on non-pivot columns).
    """

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.rows: dict[int, dict] = {}  # pivot col -> primitive int row

    @property
    def rank(self) -> int:
        return len(self.rows)

    def pivots(self) -> list[int]:
        return sorted(self.rows)

    def _forward_reduce(self, vec: dict) -> dict:
        """Eliminate every pivot column from an integer row (in place)."""
        rows = self.rows
        while True:
            hit = None
            for c in vec:
                if c in rows and (hit is None or c < hit):
                    hit = c
            if hit is None:
                return vec
            row = rows[hit]
            a, b = row[hit], vec[hit]
            g = gcd(a, b)
            ma, mb = a // g, b // g
            if ma != 1:
                for k in list(vec):
                    vec[k] *= ma
            for k, v in row.items():
                nv = vec.get(k, 0) - mb * v
                if nv:
                    vec[k] = nv
                else:
                    vec.pop(k, None)

    def add(self, vec) -> bool:
        """Add a row (dense sequence or fraction dict); True if rank grew."""
        if not isinstance(vec, dict):
            vec = sp_from_dense(vec)
        row = self._forward_reduce(_primitive_int_row(vec))
        if not row:
            return False
        g = 0
        for v in row.values():
            g = gcd(g, v)
            if g == 1:
                break
        p = min(row)
        if g > 1 or row[p] < 0:
            s = g if row[p] > 0 else -g
            row = {k: v // s for k, v in row.items()}
        self.rows[p] = row
        return True

    def add_many(self, vecs) -> None:
        for v in vecs:
            self.add(v)

    def residue(self, vec: dict) -> dict:
        """Canonical coset representative of a fraction dict modulo the span.

        The residue is supported only on non-pivot columns; two vectors are
        congruent iff their residues are equal.
        """
        vec = dict(vec)
        rows = self.rows
        while True:
            hit = None
            for c in vec:
                if c in rows and (hit is None or c < hit):
                    hit = c
            if hit is None:
                return vec
            row = rows[hit]
            coeff = vec[hit] / row[hit]
            for k, v in row.items():
                nv = vec.get(k, Q0) - coeff * v
                if nv:
                    vec[k] = nv
                else:
                    vec.pop(k, None)

    def contains(self, vec) -> bool:
        if not isinstance(vec, dict):
            vec = sp_from_dense(vec)
        return not self.residue(vec)

    def reduced_basis(self) -> list[dict]:
        """Fully back-substituted basis (RREF rows, pivot entry 1), pivot order."""
        out: dict[int, dict] = {}
        for p in sorted(self.rows, reverse=True):
            row = {k: QQ(v) for k, v in self.rows[p].items()}
            piv = row[p]
            row = {k: v / piv for k, v in row.items()}
            for q, done in out.items():
                c = row.get(q)
                if c:
                    for k, v in done.items():
                        nv = row.get(k, Q0) - c * v
                        if nv:
                            row[k] = nv
                        else:
                            row.pop(k, None)
            out[p] = row
        return [out[p] for p in sorted(out)]


# ---------------------------------------------------------------------------
# dense matrices
# ---------------------------------------------------------------------------

class Mat:
    """Immutable dense matrix of Fractions (row-major)."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries):
        entries = tuple(QQ(x) for x in entries)
        if len(entries) != rows * cols:
            raise ValueError(f"need {rows * cols} entries, got {len(entries)}")
        self.rows = rows
        self.cols = cols
        self.entries = entries

    # -- constructors -------------------------------------------------------

    @staticmethod
    def from_rows(rows_list) -> "Mat":
        rows_list = [list(r) for r in rows_list]
        nr = len(rows_list)
        nc = len(rows_list[0]) if rows_list else 0
        flat = []
        for r in rows_list:
            if len(r) != nc:
                raise ValueError("ragged rows")
            flat.extend(r)
        return Mat(nr, nc, flat)

    @staticmethod
    def from_cols(cols_list) -> "Mat":
        return Mat.from_rows(cols_list).transpose() if cols_list else Mat(0, 0, [])

    @staticmethod
    def identity(n: int) -> "Mat":
        return Mat(n, n, [Q1 if i == j else Q0 for i in range(n) for j in range(n)])

    @staticmethod
    def zero(rows: int, cols: int) -> "Mat":
        return Mat(rows, cols, [Q0] * (rows * cols))

    # -- access -------------------------------------------------------------

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Vec:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def col(self, j: int) -> Vec:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def row_list(self):
        return [list(self.row(i)) for i in range(self.rows)]

    def __eq__(self, other):
        return (isinstance(other, Mat) and self.rows == other.rows
                and self.cols == other.cols and self.entries == other.entries)

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        return f"Mat({self.rows}x{self.cols})"

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: "Mat") -> "Mat":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return Mat(self.rows, self.cols,
                   [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other: "Mat") -> "Mat":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return Mat(self.rows, self.cols,
                   [a - b for a, b in zip(self.entries, other.entries)])

    def scale(self, c) -> "Mat":
        c = QQ(c)
        return Mat(self.rows, self.cols, [c * a for a in self.entries])

    def __mul__(self, other: "Mat") -> "Mat":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        n, m, k = self.rows, other.cols, self.cols
        a, b = self.entries, other.entries
        out = [Q0] * (n * m)
        for i in range(n):
            arow = a[i * k:(i + 1) * k]
            for t in range(k):
                c = arow[t]
                if not c:
                    continue
                boff = t * m
                ooff = i * m
                for j in range(m):
                    v = b[boff + j]
                    if v:
                        out[ooff + j] += c * v
        return Mat(n, m, out)

    def apply(self, v) -> Vec:
        """Matrix-vector product on a dense sequence."""
        if len(v) != self.cols:
            raise ValueError("dimension mismatch")
        out = [Q0] * self.rows
        e = self.entries
        for j, x in enumerate(v):
            if not x:
                continue
            for i in range(self.rows):
                c = e[i * self.cols + j]
                if c:
                    out[i] += c * x
        return tuple(out)

    def apply_dict(self, d: dict) -> dict:
        """Matrix-vector product on a sparse dict, returning a sparse dict."""
        out: dict[int, QQ] = {}
        e = self.entries
        for j, x in d.items():
            for i in range(self.rows):
                c = e[i * self.cols + j]
                if c:
                    y = out.get(i, Q0) + c * x
                    if y:
                        out[i] = y
                    else:
                        out.pop(i, None)
        return out

    def transpose(self) -> "Mat":
        return Mat(self.cols, self.rows,
                   [self.entries[i * self.cols + j]
                    for j in range(self.cols) for i in range(self.rows)])

    def augment(self, other: "Mat") -> "Mat":
        if self.rows != other.rows:
            raise ValueError("row mismatch")
        flat = []
        for i in range(self.rows):
            flat.extend(self.row(i))
            flat.extend(other.row(i))
        return Mat(self.rows, self.cols + other.cols, flat)

    # -- elimination-backed queries ------------------------------------------

    def rank(self) -> int:
        rs = RowSpace(self.cols)
        for i in range(self.rows):
            rs.add(sp_from_dense(self.row(i)))
        return rs.rank

    def is_invertible(self) -> bool:
        return self.rows == self.cols and self.rank() == self.rows

    def inv(self) -> "Mat":
        if self.rows != self.cols:
            raise ValueError("not square")
        n = self.rows
        aug = rref(self.augment(Mat.identity(n)))
        for i in range(n):
            if aug[i, i] != Q1:
                raise ValueError("matrix is singular")
        return Mat(n, n, [aug[i, n + j] for i in range(n) for j in range(n)])


# ---------------------------------------------------------------------------
# rref / kernel / solve
# ---------------------------------------------------------------------------

def rref(m: Mat) -> Mat:
    """Reduced row-echelon form (same shape, zero rows at the bottom)."""
    rs = RowSpace(m.cols)
    for i in range(m.rows):
        rs.add(sp_from_dense(m.row(i)))
    rows = rs.reduced_basis()
    flat = []
    for r in rows:
        flat.extend(sp_to_dense(r, m.cols))
    flat.extend([Q0] * ((m.rows - len(rows)) * m.cols))
    return Mat(m.rows, m.cols, flat)


class Subspace:
    """Subspace of Q^n with a canonical reduced-echelon basis.

    Two equal subspaces have identical representations, so equality of
    subspaces is equality of basis tuples.
    """

    __slots__ = ("ambient_dim", "basis", "_pivots")

    def __init__(self, ambient_dim: int, basis):
        self.ambient_dim = ambient_dim
        self.basis = tuple(tuple(QQ(x) for x in b) for b in basis)
        self._pivots = []
        for b in self.basis:
            for j, x in enumerate(b):
                if x:
                    self._pivots.append(j)
                    break

    @staticmethod
    def from_span(vectors, ambient_dim: int) -> "Subspace":
        rs = RowSpace(ambient_dim)
        for v in vectors:
            rs.add(v)
        return Subspace(ambient_dim,
                        [sp_to_dense(r, ambient_dim) for r in rs.reduced_basis()])

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, v) -> bool:
        d = sp_from_dense(v) if not isinstance(v, dict) else dict(v)
        for b, p in zip(self.basis, self._pivots):
            c = d.get(p)
            if c:
                for j, x in enumerate(b):
                    if x:
                        y = d.get(j, Q0) - c * x
                        if y:
                            d[j] = y
                        else:
                            d.pop(j, None)
        return not d

    def coords(self, v):
        """Coordinates of v in the canonical basis, or None if not in span."""
        d = sp_from_dense(v) if not isinstance(v, dict) else dict(v)
        out = []
        for b, p in zip(self.basis, self._pivots):
            c = d.get(p, Q0)
            out.append(c)
            if c:
                for j, x in enumerate(b):
                    if x:
                        y = d.get(j, Q0) - c * x
                        if y:
                            d[j] = y
                        else:
                            d.pop(j, None)
        return None if d else tuple(out)

    def __eq__(self, other):
        return (isinstance(other, Subspace) and self.ambient_dim == other.ambient_dim
                and self.basis == other.basis)

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    def __repr__(self):
        return f"Subspace(dim {self.dim} of Q^{self.ambient_dim})"


def kernel_basis(m: Mat) -> Subspace:
    """Canonical basis of {v : m v = 0}."""
    rs = RowSpace(m.cols)
    for i in range(m.rows):
        rs.add(sp_from_dense(m.row(i)))
    reduced = rs.reduced_basis()
    pivots = rs.pivots()
    pivot_set = set(pivots)
    free = [j for j in range(m.cols) if j not in pivot_set]
    gens = []
    for f in free:
        v = {f: Q1}
        for p, row in zip(pivots, reduced):
            c = row.get(f)
            if c:
                v[p] = -c
        gens.append(v)
    return Subspace.from_span(gens, m.cols)


def solve(m: Mat, b) -> Vec | None:
    """One solution of m x = b (free variables 0), or None if inconsistent."""
    if len(b) != m.rows:
        raise ValueError("dimension mismatch")
    rs = RowSpace(m.cols + 1)
    for i in range(m.rows):
        d = sp_from_dense(m.row(i))
        bi = QQ(b[i])
        if bi:
            d[m.cols] = bi
        rs.add(d)
    if m.cols in rs.rows:
        return None
    # each reduced row reads  x_p + sum over free columns = rhs; free vars are 0
    x = [Q0] * m.cols
    for p, row in zip(rs.pivots(), rs.reduced_basis()):
        x[p] = row.get(m.cols, Q0)
    return tuple(x)


def solve_matrix(m: Mat, rhs: Mat) -> Mat | None:
    """Solve m X = rhs columnwise; None if any column is inconsistent."""
    cols = []
    for j in range(rhs.cols):
        x = solve(m, rhs.col(j))
        if x is None:
            return None
        cols.append(x)
    return Mat.from_rows(cols).transpose()
