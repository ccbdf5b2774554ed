"""Finite-dimensional unital associative algebras over Q by structure constants.

An algebra is a basis with a sparse structure-constant table
e_i * e_j = sum_k c[i][j][k] e_k and a distinguished unit vector.  Morphisms
are stored as matrices (never closures) so rank and kernel questions stay in
linear algebra.  Subalgebras are canonical echelon subspaces of a parent with
the induced product.
"""

from __future__ import annotations

from .linalg import (Mat, Q0, Q1, QQ, RowSpace, Subspace, kernel_basis,
                     sp_add_into, sp_from_dense, sp_to_dense)
from .report import Report, fmt_vec


class Algebra:
    """Unital associative algebra with a fixed ordered basis."""

    def __init__(self, labels, sc, unit, name: str = ""):
        """sc: nested table sc[i][j] giving either a dense length-dim list or a
        sparse dict {k: coeff} for the product e_i e_j."""
        self.labels = tuple(labels)
        self.dim = len(self.labels)
        self.name = name or "algebra"
        table = []
        for i in range(self.dim):
            row = []
            for j in range(self.dim):
                entry = sc[i][j]
                if isinstance(entry, dict):
                    row.append({k: QQ(v) for k, v in entry.items() if v})
                else:
                    row.append({k: QQ(v) for k, v in enumerate(entry) if v})
            table.append(tuple(row))
        self._sc = tuple(table)
        self.unit = tuple(QQ(x) for x in unit)
        if len(self.unit) != self.dim:
            raise ValueError("unit vector has wrong length")

    def __repr__(self):
        return f"Algebra({self.name}, dim={self.dim})"

    # -- products -----------------------------------------------------------

    def mul_basis(self, i: int, j: int) -> dict:
        return self._sc[i][j]

    def mul_dict(self, u: dict, v: dict) -> dict:
        out: dict[int, QQ] = {}
        for i, x in u.items():
            for j, y in v.items():
                sp_add_into(out, self._sc[i][j], x * y)
        return out

    def mul_vec(self, u, v) -> tuple:
        return sp_to_dense(self.mul_dict(sp_from_dense(u), sp_from_dense(v)), self.dim)

    def left_mult(self, u) -> Mat:
        """Matrix of x -> u x."""
        ud = sp_from_dense(u) if not isinstance(u, dict) else u
        cols = [sp_to_dense(self.mul_dict(ud, {j: Q1}), self.dim) for j in range(self.dim)]
        return Mat.from_cols(cols)

    def right_mult(self, u) -> Mat:
        """Matrix of x -> x u."""
        ud = sp_from_dense(u) if not isinstance(u, dict) else u
        cols = [sp_to_dense(self.mul_dict({j: Q1}, ud), self.dim) for j in range(self.dim)]
        return Mat.from_cols(cols)

    # -- elements -----------------------------------------------------------

    def element(self, coords) -> "Element":
        return Element(self, coords)

    def basis_element(self, i: int) -> "Element":
        return Element(self, tuple(Q1 if j == i else Q0 for j in range(self.dim)))

    def one(self) -> "Element":
        return Element(self, self.unit)

    def zero(self) -> "Element":
        return Element(self, (Q0,) * self.dim)

    def show(self, v) -> str:
        """Human-readable rendering of a coordinate vector."""
        parts = []
        for i, x in enumerate(v):
            if not x:
                continue
            c = "" if x == Q1 else f"({x})"
            parts.append(f"{c}{self.labels[i]}")
        return " + ".join(parts) if parts else "0"


class Element:
    """An element of a fixed algebra, by coordinates."""

    __slots__ = ("algebra", "coords")

    def __init__(self, algebra: Algebra, coords):
        self.algebra = algebra
        self.coords = tuple(QQ(x) for x in coords)
        if len(self.coords) != algebra.dim:
            raise ValueError("coordinate length mismatch")

    def __mul__(self, other: "Element") -> "Element":
        if self.algebra is not other.algebra:
            raise ValueError("algebra mismatch")
        return Element(self.algebra, self.algebra.mul_vec(self.coords, other.coords))

    def __add__(self, other: "Element") -> "Element":
        if self.algebra is not other.algebra:
            raise ValueError("algebra mismatch")
        return Element(self.algebra, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Element") -> "Element":
        if self.algebra is not other.algebra:
            raise ValueError("algebra mismatch")
        return Element(self.algebra, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __rmul__(self, scalar) -> "Element":
        c = QQ(scalar)
        return Element(self.algebra, tuple(c * a for a in self.coords))

    def __eq__(self, other):
        return (isinstance(other, Element) and self.algebra is other.algebra
                and self.coords == other.coords)

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        return self.algebra.show(self.coords)


def mul(x: Element, y: Element) -> Element:
    """Product of two elements of the same algebra."""
    return x * y


class AlgMorphism:
    """Linear map between algebras intended to be (anti)multiplicative."""

    def __init__(self, domain: Algebra, codomain: Algebra, matrix: Mat,
                 is_anti: bool = False, name: str = ""):
        if matrix.rows != codomain.dim or matrix.cols != domain.dim:
            raise ValueError("matrix shape does not match domain/codomain")
        self.domain = domain
        self.codomain = codomain
        self.matrix = matrix
        self.is_anti = bool(is_anti)
        self.name = name or "morphism"

    def __repr__(self):
        kind = "anti-morphism" if self.is_anti else "morphism"
        return f"AlgMorphism({self.name}: {kind} {self.domain.dim}->{self.codomain.dim})"

    def apply_vec(self, v) -> tuple:
        return self.matrix.apply(v)

    def apply(self, x: Element) -> Element:
        if x.algebra is not self.domain:
            raise ValueError("element not in the domain")
        return Element(self.codomain, self.matrix.apply(x.coords))

    def __call__(self, x):
        return self.apply(x) if isinstance(x, Element) else self.apply_vec(x)

    def compose(self, inner: "AlgMorphism") -> "AlgMorphism":
        if inner.codomain is not self.domain:
            raise ValueError("composition mismatch")
        return AlgMorphism(inner.domain, self.codomain, self.matrix * inner.matrix,
                           is_anti=self.is_anti != inner.is_anti,
                           name=f"{self.name}∘{inner.name}")

    def rank(self) -> int:
        return self.matrix.rank()

    def is_bijective(self) -> bool:
        return self.domain.dim == self.codomain.dim and self.rank() == self.domain.dim


def morphism_check(f: AlgMorphism) -> Report:
    """Verify unit preservation and (anti-)multiplicativity on basis pairs."""
    rep = Report(title=f"morphism {f.name}")
    dom, cod = f.domain, f.codomain
    img_unit = f.apply_vec(dom.unit)
    rep.add("unit_preserved", img_unit == cod.unit,
            left=cod.show(img_unit), right=cod.show(cod.unit))
    images = [f.apply_vec(tuple(Q1 if t == i else Q0 for t in range(dom.dim)))
              for i in range(dom.dim)]
    before = len(rep.items)
    law = "anti_multiplicative" if f.is_anti else "multiplicative"
    for i in range(dom.dim):
        for j in range(dom.dim):
            lhs = f.apply_vec(sp_to_dense(dom.mul_basis(i, j), dom.dim))
            if f.is_anti:
                rhs = cod.mul_vec(images[j], images[i])
            else:
                rhs = cod.mul_vec(images[i], images[j])
            rep.require(law, lhs == rhs,
                        witness=f"{dom.labels[i]},{dom.labels[j]}",
                        left=cod.show(lhs), right=cod.show(rhs))
    rep.sweep(law, before)
    rk = f.rank()
    rep.meta["rank"] = rk
    rep.meta["injective"] = rk == dom.dim
    rep.meta["surjective"] = rk == cod.dim
    return rep


class Subalgebra:
    """A subspace of a parent algebra closed under product and containing 1."""

    def __init__(self, parent: Algebra, space: Subspace, name: str = ""):
        if space.ambient_dim != parent.dim:
            raise ValueError("ambient dimension mismatch")
        self.parent = parent
        self.space = space
        self.name = name or "subalgebra"
        if not space.contains(parent.unit):
            raise ValueError(f"{self.name}: unit not contained")
        for i, u in enumerate(space.basis):
            for j, v in enumerate(space.basis):
                if not space.contains(parent.mul_vec(u, v)):
                    raise ValueError(f"{self.name}: not closed under product "
                                     f"(basis {i},{j})")

    @property
    def dim(self) -> int:
        return self.space.dim

    def __repr__(self):
        return f"Subalgebra({self.name}, dim={self.dim} of {self.parent.name})"

    def as_algebra(self, name: str = "") -> tuple[Algebra, AlgMorphism]:
        """Induced algebra on the canonical basis plus the inclusion map."""
        basis = self.space.basis
        d = len(basis)
        sc = []
        for i in range(d):
            row = []
            for j in range(d):
                prod = self.parent.mul_vec(basis[i], basis[j])
                coords = self.space.coords(prod)
                assert coords is not None
                row.append({k: c for k, c in enumerate(coords) if c})
            sc.append(row)
        unit = self.space.coords(self.parent.unit)
        labels = [self.parent.show(b) for b in basis]
        alg = Algebra(labels, sc, unit, name=name or self.name)
        inc = AlgMorphism(alg, self.parent, Mat.from_cols(list(basis)), name="inclusion")
        return alg, inc


def check_algebra(a: Algebra) -> Report:
    """Associativity on all basis triples and both unit laws."""
    rep = Report(title=f"algebra {a.name}")
    before = len(rep.items)
    for i in range(a.dim):
        ei = {i: Q1}
        for j in range(a.dim):
            ij = a.mul_basis(i, j)
            for k in range(a.dim):
                lhs = a.mul_dict(ij, {k: Q1})
                rhs = a.mul_dict(ei, a.mul_basis(j, k))
                rep.require("associativity", lhs == rhs,
                            witness=f"{a.labels[i]},{a.labels[j]},{a.labels[k]}",
                            left=a.show(sp_to_dense(lhs, a.dim)),
                            right=a.show(sp_to_dense(rhs, a.dim)))
    rep.sweep("associativity", before)
    before = len(rep.items)
    unit = sp_from_dense(a.unit)
    for i in range(a.dim):
        left = sp_to_dense(a.mul_dict(unit, {i: Q1}), a.dim)
        right = sp_to_dense(a.mul_dict({i: Q1}, unit), a.dim)
        target = tuple(Q1 if t == i else Q0 for t in range(a.dim))
        rep.require("unit_law", left == target and right == target,
                    witness=a.labels[i], left=a.show(left), right=a.show(target))
    rep.sweep("unit_law", before)
    rep.meta["dim"] = a.dim
    return rep


def opposite(a: Algebra) -> Algebra:
    """Same space with reversed product."""
    sc = [[a.mul_basis(j, i) for j in range(a.dim)] for i in range(a.dim)]
    return Algebra(a.labels, sc, a.unit, name=f"{a.name}^op")


def tensor_algebra(a: Algebra, b: Algebra) -> Algebra:
    """Componentwise product on the tensor product space."""
    dim = a.dim * b.dim
    labels = [f"{la}⊗{lb}" for la in a.labels for lb in b.labels]
    sc = []
    for i1 in range(a.dim):
        for j1 in range(b.dim):
            row = []
            for i2 in range(a.dim):
                for j2 in range(b.dim):
                    pa = a.mul_basis(i1, i2)
                    pb = b.mul_basis(j1, j2)
                    row.append({k1 * b.dim + k2: x * y
                                for k1, x in pa.items() for k2, y in pb.items()})
            sc.append(row)
    unit = [Q0] * dim
    for i, x in enumerate(a.unit):
        if not x:
            continue
        for j, y in enumerate(b.unit):
            if y:
                unit[i * b.dim + j] = x * y
    return Algebra(labels, sc, unit, name=f"{a.name}⊗{b.name}")


def endomorphism_algebra(a: Algebra) -> Algebra:
    """All linear maps on the underlying space, under composition.

    Basis E[p,q] sends e_q to e_p; index of E[p,q] is p*dim + q.
    """
    n = a.dim
    labels = [f"E[{p},{q}]" for p in range(n) for q in range(n)]
    sc = []
    for p in range(n):
        for q in range(n):
            row = []
            for r in range(n):
                for s in range(n):
                    row.append({p * n + s: Q1} if q == r else {})
            sc.append(row)
    unit = [Q1 if p == q else Q0 for p in range(n) for q in range(n)]
    return Algebra(labels, sc, unit, name=f"End({a.name})")


def endo_coords(m: Mat) -> tuple:
    """Coordinates of a dim x dim matrix in the E[p,q] basis."""
    n = m.rows
    return tuple(m[p, q] for p in range(n) for q in range(n))


def endo_matrix(coords, n: int) -> Mat:
    """Inverse of endo_coords."""
    return Mat(n, n, list(coords))


def fixed_subalgebra(a: Algebra, autos) -> Subalgebra:
    """Joint fixed points of a list of automorphisms of a."""
    for f in autos:
        if f.domain is not a or f.codomain is not a or f.is_anti:
            raise ValueError("input is not an endomorphism of the algebra")
        if not f.is_bijective() or not morphism_check(f).ok:
            raise ValueError(f"input {f.name} is not an automorphism")
    if not autos:
        return Subalgebra(a, Subspace.from_span(
            [tuple(Q1 if t == i else Q0 for t in range(a.dim)) for i in range(a.dim)],
            a.dim), name=f"{a.name}^{{}}")
    ident = Mat.identity(a.dim)
    stacked = []
    for f in autos:
        diff = f.matrix - ident
        stacked.extend(diff.row_list())
    space = kernel_basis(Mat.from_rows(stacked))
    return Subalgebra(a, space, name=f"{a.name}^G")


def centralizer(a: Algebra, b: Subalgebra) -> Subalgebra:
    """Elements commuting with every element of the subalgebra b."""
    if b.parent is not a:
        raise ValueError("subalgebra of a different parent")
    stacked = []
    for v in b.space.basis:
        comm = a.left_mult(v) - a.right_mult(v)
        stacked.extend(comm.row_list())
    if not stacked:
        stacked = [[Q0] * a.dim]
    space = kernel_basis(Mat.from_rows(stacked))
    return Subalgebra(a, space, name=f"C_{a.name}(B)")


def scalar_subalgebra(a: Algebra) -> Subalgebra:
    """The span of the unit, as a subalgebra."""
    return Subalgebra(a, Subspace.from_span([a.unit], a.dim), name="Q·1")
