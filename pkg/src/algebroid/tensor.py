"""Tensor products over a noncommutative base as explicit quotients.

M ⊗_R N is the quotient of the plain tensor space by the span of
(x·r)⊗y − x⊗(r·y).  Every coset gets a canonical representative, so equality
in the quotient is a normal-form comparison.  Two interchangeable backends:

* generic: echelonize the relation span; the canonical representative is the
  residue supported on non-pivot coordinates.
* free: when the left factor is free as a right module with a known basis
  (u_j), the quotient is identified with span{u_j ⊗ e_k} by rewriting
  x ⊗ y = sum_j u_j ⊗ (rho_j(x) · y).  The basis claim is verified by a
  matrix invertibility check at construction, with fallback to the generic
  backend, so nothing is assumed.

Both backends provide the same contract: projection, section, relation
subspace, and coset equality; they are cross-checked in the test suite.
"""

from __future__ import annotations

from .algebra import Algebra, AlgMorphism, Subalgebra
from .linalg import (Mat, Q0, Q1, QQ, RowSpace, Subspace, kernel_basis,
                     sp_add_into, sp_from_dense, sp_to_dense)
from .report import Report


class Bimodule:
    """A space with a left action of one base algebra and/or a right action
    of another, each stored as one matrix per base basis element."""

    def __init__(self, dim: int, base_left: Algebra = None, left_action=None,
                 base_right: Algebra = None, right_action=None, name: str = ""):
        self.dim = dim
        self.base_left = base_left
        self.base_right = base_right
        self.left_action = tuple(left_action) if left_action is not None else None
        self.right_action = tuple(right_action) if right_action is not None else None
        self.name = name or "bimodule"
        if base_left is not None and len(self.left_action) != base_left.dim:
            raise ValueError("one left-action matrix per base basis element")
        if base_right is not None and len(self.right_action) != base_right.dim:
            raise ValueError("one right-action matrix per base basis element")

    def __repr__(self):
        return f"Bimodule({self.name}, dim={self.dim})"


def check_bimodule(m: Bimodule) -> Report:
    """Unitality, module axioms, and commutation of the two actions."""
    rep = Report(title=f"bimodule {m.name}")
    ident = Mat.identity(m.dim)

    def side(base, mats, label, opposite_order):
        total = Mat.zero(m.dim, m.dim)
        for i, c in enumerate(base.unit):
            if c:
                total = total + mats[i].scale(c)
        rep.add(f"{label}_unital", total == ident)
        before = len(rep.items)
        for i in range(base.dim):
            for j in range(base.dim):
                of_prod = Mat.zero(m.dim, m.dim)
                for k, c in base.mul_basis(i, j).items():
                    of_prod = of_prod + mats[k].scale(c)
                composed = mats[j] * mats[i] if opposite_order else mats[i] * mats[j]
                rep.require(f"{label}_module_axiom", composed == of_prod,
                            witness=f"{base.labels[i]},{base.labels[j]}")
        rep.sweep(f"{label}_module_axiom", before)

    if m.base_left is not None:
        side(m.base_left, m.left_action, "left", opposite_order=False)
    if m.base_right is not None:
        # right module: x·(rs) = (x·r)·s, i.e. mat(rs) = mat(s) mat(r)
        side(m.base_right, m.right_action, "right", opposite_order=True)
    if m.base_left is not None and m.base_right is not None:
        before = len(rep.items)
        for i in range(m.base_left.dim):
            for j in range(m.base_right.dim):
                rep.require("actions_commute",
                            m.left_action[i] * m.right_action[j]
                            == m.right_action[j] * m.left_action[i],
                            witness=f"{i},{j}")
        rep.sweep("actions_commute", before)
    return rep


# -- bimodule constructors -----------------------------------------------------

def regular_bimodule(a: Algebra, base: Algebra, include: AlgMorphism) -> Bimodule:
    """A as a bimodule over an included base, acting by two-sided multiplication."""
    lmats = [a.left_mult(include.apply_vec(
        tuple(Q1 if t == i else Q0 for t in range(base.dim))))
        for i in range(base.dim)]
    rmats = [a.right_mult(include.apply_vec(
        tuple(Q1 if t == i else Q0 for t in range(base.dim))))
        for i in range(base.dim)]
    return Bimodule(a.dim, base, lmats, base, rmats, name=f"{base.name}-{a.name}-{base.name}")


def source_target_bimodule(total: Algebra, base: Algebra, source: AlgMorphism,
                           target: AlgMorphism) -> Bimodule:
    """The bialgebroid bimodule r·c·s = source(r) target(s) c (both act from
    the left of the total algebra)."""
    lmats = []
    rmats = []
    for i in range(base.dim):
        e = tuple(Q1 if t == i else Q0 for t in range(base.dim))
        lmats.append(total.left_mult(source.apply_vec(e)))
        rmats.append(total.left_mult(target.apply_vec(e)))
    return Bimodule(total.dim, base, lmats, base, rmats,
                    name=f"{base.name}-{total.name}-{base.name}")


# -- the quotient --------------------------------------------------------------

class TensorOverBase:
    """M ⊗_R N with projection, section and exact coset equality."""

    def __init__(self, left: Bimodule, right: Bimodule, free_basis=None):
        if left.base_right is None or right.base_left is None:
            raise ValueError("left factor needs a right action, right factor a left action")
        if left.base_right is not right.base_left:
            raise ValueError("base mismatch")
        self.left = left
        self.right = right
        self.base = left.base_right
        self.ambient_dim = left.dim * right.dim
        self._rdim = right.dim
        self._relations = None
        self._proj_mat = None
        self._sect_mat = None
        self.backend = "generic"
        if free_basis is not None and len(free_basis) * self.base.dim == left.dim:
            if self._init_free(free_basis):
                self.backend = "free"
            else:
                self._init_generic()
        else:
            self._init_generic()

    # .. generic backend .....................................................

    def _relation_generators(self):
        rdim, ldim, bdim = self.right.dim, self.left.dim, self.base.dim
        for r in range(bdim):
            xr = self.left.right_action[r]
            ry = self.right.left_action[r]
            xcols = [sp_from_dense(xr.col(i)) for i in range(ldim)]
            ycols = [sp_from_dense(ry.col(k)) for k in range(rdim)]
            for i in range(ldim):
                for k in range(rdim):
                    gen: dict[int, QQ] = {}
                    for i2, c in xcols[i].items():
                        gen[i2 * rdim + k] = gen.get(i2 * rdim + k, Q0) + c
                    for k2, c in ycols[k].items():
                        idx = i * rdim + k2
                        v = gen.get(idx, Q0) - c
                        if v:
                            gen[idx] = v
                        else:
                            gen.pop(idx, None)
                    if gen:
                        yield gen

    def _init_generic(self):
        rs = RowSpace(self.ambient_dim)
        for gen in self._relation_generators():
            rs.add(gen)
        self._rs = rs
        pivots = set(rs.rows)
        self._qindex = {}
        self._qbasis_cols = []
        for col in range(self.ambient_dim):
            if col not in pivots:
                self._qindex[col] = len(self._qbasis_cols)
                self._qbasis_cols.append(col)
        self.dim = len(self._qbasis_cols)

    # .. free backend ........................................................

    def _init_free(self, free_basis) -> bool:
        p = len(free_basis)
        bdim = self.base.dim
        cols = []
        for j in range(p):
            uj = tuple(free_basis[j])
            for y in range(bdim):
                cols.append(self.left.right_action[y].apply(uj))
        m = Mat.from_cols(cols)
        if not m.is_invertible():
            return False
        minv = m.inv()
        self._free_basis = [tuple(QQ(x) for x in u) for u in free_basis]
        self._p = p
        # rho[i]: coordinates of e_i as sum_j u_j · (base vector), sparse
        self._rho = []
        for i in range(self.left.dim):
            col = minv.col(i)
            entry = []
            for j in range(p):
                base_vec = {y: col[j * bdim + y] for y in range(bdim)
                            if col[j * bdim + y]}
                if base_vec:
                    entry.append((j, base_vec))
            self._rho.append(entry)
        # sparse columns of the right factor's left action
        self._lcols = [[sp_from_dense(self.right.left_action[y].col(k))
                        for k in range(self.right.dim)] for y in range(bdim)]
        self.dim = p * self.right.dim
        return True

    # .. common api ..........................................................

    def project_dict(self, d: dict) -> dict:
        """Quotient coordinates of an ambient vector given as {flat index: coeff}."""
        if self.backend == "generic":
            res = self._rs.residue(d)
            return {self._qindex[c]: v for c, v in res.items()}
        out: dict[int, QQ] = {}
        rdim = self._rdim
        for flat, c in d.items():
            i, k = divmod(flat, rdim)
            for j, base_vec in self._rho[i]:
                for y, cy in base_vec.items():
                    for k2, ck in self._lcols[y][k].items():
                        idx = j * rdim + k2
                        v = out.get(idx, Q0) + c * cy * ck
                        if v:
                            out[idx] = v
                        else:
                            out.pop(idx, None)
        return out

    def project(self, v) -> tuple:
        d = v if isinstance(v, dict) else sp_from_dense(v)
        return sp_to_dense(self.project_dict(d), self.dim)

    def section_dict(self, q: int) -> dict:
        """Canonical ambient representative of the q-th quotient basis vector."""
        if self.backend == "generic":
            return {self._qbasis_cols[q]: Q1}
        j, k = divmod(q, self._rdim)
        return {i * self._rdim + k: c
                for i, c in enumerate(self._free_basis[j]) if c}

    def section_of(self, qvec) -> dict:
        d = qvec if isinstance(qvec, dict) else sp_from_dense(qvec)
        out: dict[int, QQ] = {}
        for q, c in d.items():
            sp_add_into(out, self.section_dict(q), c)
        return out

    def equal(self, u, v) -> bool:
        du = u if isinstance(u, dict) else sp_from_dense(u)
        dv = v if isinstance(v, dict) else sp_from_dense(v)
        diff = dict(du)
        for k, c in dv.items():
            x = diff.get(k, Q0) - c
            if x:
                diff[k] = x
            else:
                diff.pop(k, None)
        return not self.project_dict(diff)

    def relations(self) -> Subspace:
        """The relation subspace (kernel of the projection)."""
        if self._relations is None:
            if self.backend == "generic":
                self._relations = Subspace(
                    self.ambient_dim,
                    [sp_to_dense(r, self.ambient_dim)
                     for r in self._rs.reduced_basis()])
            else:
                self._relations = kernel_basis(self.projection_mat())
        return self._relations

    def projection_mat(self) -> Mat:
        if self._proj_mat is None:
            cols = [self.project({i: Q1}) for i in range(self.ambient_dim)]
            self._proj_mat = Mat.from_cols(cols)
        return self._proj_mat

    def section_mat(self) -> Mat:
        if self._sect_mat is None:
            cols = [sp_to_dense(self.section_dict(q), self.ambient_dim)
                    for q in range(self.dim)]
            self._sect_mat = Mat.from_cols(cols)
        return self._sect_mat

    def induced_map(self, f_left: Mat = None, f_right: Mat = None) -> Mat:
        """Quotient matrix of f_left ⊗ f_right (identity where None).

        The caller is responsible for the map descending to the quotient;
        the projection makes the result well defined either way.
        """
        cols = []
        for q in range(self.dim):
            amb = self.section_dict(q)
            img = map_slots(amb, f_left, f_right, self._rdim, self._rdim)
            cols.append(self.project(img))
        return Mat.from_cols(cols)

    def __repr__(self):
        return (f"TensorOverBase(dim={self.dim}, ambient={self.ambient_dim}, "
                f"backend={self.backend})")


def map_slots(d: dict, f_left: Mat, f_right: Mat, rdim_in: int, rdim_out: int) -> dict:
    """Apply f_left ⊗ f_right to an ambient tensor dict with flat keys."""
    out: dict[int, QQ] = {}
    for flat, c in d.items():
        i, k = divmod(flat, rdim_in)
        li = {i: Q1} if f_left is None else sp_from_dense(f_left.col(i))
        rk = {k: Q1} if f_right is None else sp_from_dense(f_right.col(k))
        for i2, ci in li.items():
            for k2, ck in rk.items():
                idx = i2 * rdim_out + k2
                v = out.get(idx, Q0) + c * ci * ck
                if v:
                    out[idx] = v
                else:
                    out.pop(idx, None)
    return out


def tensor_over_base(left: Bimodule, right: Bimodule, free_basis=None) -> TensorOverBase:
    return TensorOverBase(left, right, free_basis=free_basis)


def tensor_square_over_subalgebra(a: Algebra, b: Subalgebra) -> TensorOverBase:
    """A ⊗_B A for a subalgebra B of A, with its natural two-sided actions."""
    if b.parent is not a:
        raise ValueError("subalgebra of a different parent")
    base, inc = b.as_algebra()
    left = Bimodule(a.dim,
                    base_left=None, left_action=None,
                    base_right=base,
                    right_action=[a.right_mult(inc.apply_vec(
                        tuple(Q1 if t == i else Q0 for t in range(base.dim))))
                        for i in range(base.dim)],
                    name=f"{a.name} (right {base.name})")
    right = Bimodule(a.dim,
                     base_left=base,
                     left_action=[a.left_mult(inc.apply_vec(
                         tuple(Q1 if t == i else Q0 for t in range(base.dim))))
                         for i in range(base.dim)],
                     base_right=None, right_action=None,
                     name=f"{a.name} (left {base.name})")
    return TensorOverBase(left, right)


class TensorCube:
    """Triple tensor M ⊗_R M ⊗_R M realized as (M ⊗_R M) ⊗_R M.

    Built from a TensorOverBase whose two factors are the same bimodule with
    both actions present (the bialgebroid case).  `project3` maps an ambient
    dict keyed by (i, j, k) into canonical coordinates; the composite kills
    exactly the adjacent-slot relation span.
    """

    def __init__(self, t2: TensorOverBase):
        self.t2 = t2
        base = t2.base
        cdim = t2.right.dim
        q2_right = [t2.induced_map(None, t2.left.right_action[r])
                    for r in range(base.dim)]
        q2 = Bimodule(t2.dim, base_right=base, right_action=q2_right,
                      name="tensor-square")
        free = None
        if t2.backend == "free":
            free = []
            for j in range(t2._p):
                uj = t2._free_basis[j]
                for k in range(t2._p):
                    uk = t2._free_basis[k]
                    amb = {}
                    for i, ci in enumerate(uj):
                        if ci:
                            for i2, ck in enumerate(uk):
                                if ck:
                                    amb[i * cdim + i2] = ci * ck
                    free.append(t2.project(amb))
        self.t3 = TensorOverBase(q2, t2.right, free_basis=free)
        self.dim = self.t3.dim
        self._cdim = cdim

    def project3(self, d: dict) -> dict:
        """Canonical coordinates of an ambient dict keyed by (i, j, k)."""
        cdim = self._cdim
        grouped: dict[int, dict] = {}
        for (i, j, k), c in d.items():
            grouped.setdefault(k, {})[i * cdim + j] = \
                grouped.get(k, {}).get(i * cdim + j, Q0) + c
        out: dict[int, QQ] = {}
        for k, sub in grouped.items():
            q2 = self.t2.project_dict(sub)
            for q, c in q2.items():
                idx = q * cdim + k
                v = out.get(idx, Q0) + c
                if v:
                    out[idx] = v
                else:
                    out.pop(idx, None)
        return self.t3.project_dict(out)

    def equal3(self, u: dict, v: dict) -> bool:
        diff = dict(u)
        for key, c in v.items():
            x = diff.get(key, Q0) - c
            if x:
                diff[key] = x
            else:
                diff.pop(key, None)
        return not self.project3(diff)


class InvariantSubspace:
    """Vectors of a tensor quotient satisfying a commutation equation."""

    def __init__(self, parent: TensorOverBase, space: Subspace, name: str = ""):
        self.parent = parent
        self.space = space
        self.name = name or "invariants"

    @property
    def dim(self) -> int:
        return self.space.dim

    def ambient_rep(self, i: int) -> dict:
        """Ambient representative of the i-th basis vector."""
        return self.parent.section_of(sp_from_dense(self.space.basis[i]))

    def __repr__(self):
        return f"InvariantSubspace({self.name}, dim={self.dim})"


def invariants_of_tensor_square(a: Algebra, b: Subalgebra,
                                t: TensorOverBase = None) -> InvariantSubspace:
    """(A ⊗_B A)^B: classes with b·e = e·b for every b in a basis of B."""
    if t is None:
        t = tensor_square_over_subalgebra(a, b)
    stacked = []
    for v in b.space.basis:
        left = t.induced_map(a.left_mult(v), None)
        right = t.induced_map(None, a.right_mult(v))
        stacked.extend((left - right).row_list())
    if not stacked:
        stacked = [[Q0] * t.dim]
    return InvariantSubspace(t, kernel_basis(Mat.from_rows(stacked)),
                             name=f"({a.name}⊗_B {a.name})^B")


def twisted_invariants(a: Algebra, b: Subalgebra, sigma: AlgMorphism,
                       t: TensorOverBase = None) -> InvariantSubspace:
    """Classes e with e·x = σ(x)·e for all x, inside A ⊗_B A."""
    from .algebra import morphism_check
    if sigma.domain is not a or sigma.codomain is not a or sigma.is_anti:
        raise ValueError("twist must be an endomorphism of A")
    if not sigma.is_bijective() or not morphism_check(sigma).ok:
        raise ValueError("twist is not an automorphism")
    for v in b.space.basis:
        if sigma.apply_vec(v) != tuple(QQ(x) for x in v):
            raise ValueError("twist does not fix the base subalgebra")
    if t is None:
        t = tensor_square_over_subalgebra(a, b)
    stacked = []
    for x in range(a.dim):
        ex = tuple(Q1 if i == x else Q0 for i in range(a.dim))
        right = t.induced_map(None, a.right_mult(ex))
        left = t.induced_map(a.left_mult(sigma.apply_vec(ex)), None)
        stacked.extend((right - left).row_list())
    return InvariantSubspace(t, kernel_basis(Mat.from_rows(stacked)),
                             name=f"twisted invariants ({sigma.name})")


def equal_in_tensor(t: TensorOverBase, u, v) -> bool:
    """True iff u - v lies in the relation subspace."""
    return t.equal(u, v)
