"""Hopf algebras, group algebras, module-algebra actions and crossed products.

Comultiplications are matrices H -> H⊗H whose Sweedler expansions are
materialized as explicit coefficient lists, so every Sweedler-notation
formula downstream is evaluated by summing over those lists.
"""

from __future__ import annotations

from .algebra import Algebra, AlgMorphism, check_algebra, morphism_check, tensor_algebra
from .builders import cyclic_group_table, symmetric_group_table
from .linalg import Mat, Q0, Q1, QQ, sp_add_into, sp_from_dense, sp_to_dense
from .report import Report


class GroupData:
    """A finite group as a multiplication table on indices, identity at 0."""

    def __init__(self, table, inverse=None, name: str = "G"):
        self.table = tuple(tuple(int(x) for x in row) for row in table)
        self.order = len(self.table)
        self.name = name
        n = self.order
        for i in range(n):
            if self.table[0][i] != i or self.table[i][0] != i:
                raise ValueError("index 0 is not an identity")
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    if self.table[self.table[i][j]][k] != self.table[i][self.table[j][k]]:
                        raise ValueError(f"table not associative at ({i},{j},{k})")
        if inverse is None:
            inverse = []
            for i in range(n):
                inv = next((j for j in range(n) if self.table[i][j] == 0), None)
                if inv is None or self.table[inv][i] != 0:
                    raise ValueError(f"element {i} has no two-sided inverse")
                inverse.append(inv)
        self.inverse = tuple(int(x) for x in inverse)
        for i in range(n):
            if self.table[i][self.inverse[i]] != 0 or self.table[self.inverse[i]][i] != 0:
                raise ValueError(f"wrong inverse for element {i}")

    @staticmethod
    def cyclic(n: int) -> "GroupData":
        table, inverse = cyclic_group_table(n)
        return GroupData(table, inverse, name=f"C{n}")

    @staticmethod
    def symmetric(n: int) -> "GroupData":
        table, inverse = symmetric_group_table(n)
        return GroupData(table, inverse, name=f"S{n}")

    @staticmethod
    def trivial() -> "GroupData":
        return GroupData([[0]], [0], name="1")

    def __repr__(self):
        return f"GroupData({self.name}, order={self.order})"


class HopfAlgebra:
    """Hopf algebra data: algebra plus coproduct, counit and antipode matrices."""

    def __init__(self, alg: Algebra, coproduct: Mat, counit: Mat,
                 antipode: AlgMorphism, name: str = ""):
        m = alg.dim
        if coproduct.rows != m * m or coproduct.cols != m:
            raise ValueError("coproduct must map H into H⊗H")
        if counit.rows != 1 or counit.cols != m:
            raise ValueError("counit must map H into the ground field")
        if not antipode.is_anti:
            raise ValueError("antipode must be marked anti-multiplicative")
        self.alg = alg
        self.coproduct = coproduct
        self.counit = counit
        self.antipode = antipode
        self.name = name or f"H({alg.name})"
        self._sweedler = []
        for h in range(m):
            col = coproduct.col(h)
            self._sweedler.append(tuple(
                (idx // m, idx % m, c) for idx, c in enumerate(col) if c))

    @property
    def dim(self) -> int:
        return self.alg.dim

    def __repr__(self):
        return f"HopfAlgebra({self.name}, dim={self.dim})"

    def sweedler(self, h: int):
        """Δ(e_h) as a list of (left index, right index, coefficient)."""
        return self._sweedler[h]

    def sweedler2(self, h: int):
        """(Δ⊗id)Δ(e_h) as a list of (i, j, k, coefficient)."""
        out = []
        for i, k, c in self._sweedler[h]:
            for i1, i2, c1 in self._sweedler[i]:
                out.append((i1, i2, k, c * c1))
        return out

    def eps(self, h: int) -> QQ:
        return self.counit[0, h]

    def eps_vec(self, v) -> QQ:
        return sum((self.counit[0, i] * x for i, x in enumerate(v)), Q0)

    def s_of(self, h: int) -> tuple:
        return self.antipode.matrix.col(h)


def group_algebra(g: GroupData) -> HopfAlgebra:
    """K[G] with grouplike coproduct, trivial counit, antipode g -> g^{-1}."""
    n = g.order
    labels = [f"g{i}" if i else "e" for i in range(n)]
    sc = [[{g.table[i][j]: Q1} for j in range(n)] for i in range(n)]
    unit = [Q1 if i == 0 else Q0 for i in range(n)]
    alg = Algebra(labels, sc, unit, name=f"K[{g.name}]")
    cop = Mat.zero(n * n, n)
    cop_entries = [Q0] * (n * n * n)
    for i in range(n):
        cop_entries[(i * n + i) * n + i] = Q1
    cop = Mat(n * n, n, cop_entries)
    eps = Mat(1, n, [Q1] * n)
    anti = Mat.from_cols([[Q1 if t == g.inverse[i] else Q0 for t in range(n)]
                          for i in range(n)])
    s = AlgMorphism(alg, alg, anti, is_anti=True, name="S")
    return HopfAlgebra(alg, cop, eps, s, name=f"K[{g.name}]")


def trivial_hopf() -> HopfAlgebra:
    return group_algebra(GroupData.trivial())


def is_involutive(h: HopfAlgebra) -> bool:
    s = h.antipode.matrix
    return s * s == Mat.identity(h.dim)


def check_hopf(h: HopfAlgebra) -> Report:
    """All Hopf axioms on basis elements, with named failures and witnesses."""
    rep = Report(title=f"hopf {h.name}")
    alg = h.alg
    m = alg.dim
    rep.extend(check_algebra(alg))

    labels = alg.labels
    before = len(rep.items)
    for x in range(m):
        lhs = {}
        for i, k, c in h.sweedler(x):
            for i1, i2, c1 in h.sweedler(i):
                key = (i1 * m + i2) * m + k
                sp_add_into(lhs, {key: Q1}, c * c1)
        rhs = {}
        for i, k, c in h.sweedler(x):
            for k1, k2, c1 in h.sweedler(k):
                key = (i * m + k1) * m + k2
                sp_add_into(rhs, {key: Q1}, c * c1)
        rep.require("coassociativity", lhs == rhs, witness=labels[x])
    rep.sweep("coassociativity", before)

    before = len(rep.items)
    for x in range(m):
        left = {}
        right = {}
        for i, k, c in h.sweedler(x):
            sp_add_into(left, {k: Q1}, c * h.eps(i))
            sp_add_into(right, {i: Q1}, c * h.eps(k))
        e_x = {x: Q1}
        rep.require("counit_law_left", left == e_x, witness=labels[x],
                    left=alg.show(sp_to_dense(left, m)), right=labels[x])
        rep.require("counit_law_right", right == e_x, witness=labels[x],
                    left=alg.show(sp_to_dense(right, m)), right=labels[x])
    rep.sweep("counit_laws", before)

    # Δ and ε are algebra maps
    hh = tensor_algebra(alg, alg)
    before = len(rep.items)
    for x in range(m):
        dx = sp_from_dense(h.coproduct.col(x))
        for y in range(m):
            dy = sp_from_dense(h.coproduct.col(y))
            prod_img = hh.mul_dict(dx, dy)
            img_prod = {}
            for k, c in alg.mul_basis(x, y).items():
                sp_add_into(img_prod, sp_from_dense(h.coproduct.col(k)), c)
            rep.require("coproduct_multiplicative", prod_img == img_prod,
                        witness=f"{labels[x]},{labels[y]}")
            eps_prod = sum((c * h.eps(k) for k, c in alg.mul_basis(x, y).items()), Q0)
            rep.require("counit_multiplicative", eps_prod == h.eps(x) * h.eps(y),
                        witness=f"{labels[x]},{labels[y]}")
    rep.sweep("structure_maps_multiplicative", before)

    unit_cop = {}
    for i, x in enumerate(alg.unit):
        if x:
            for j, y in enumerate(alg.unit):
                if y:
                    unit_cop[i * m + j] = x * y
    rep.add("coproduct_of_unit", sp_from_dense(h.coproduct.apply(alg.unit)) == unit_cop)
    rep.add("counit_of_unit", h.eps_vec(alg.unit) == Q1)

    srep = morphism_check(h.antipode)
    rep.add("antipode_anti_morphism", srep.ok)
    rep.add("antipode_bijective", h.antipode.is_bijective())

    before = len(rep.items)
    for x in range(m):
        conv_l = {}
        conv_r = {}
        for i, k, c in h.sweedler(x):
            sp_add_into(conv_l, alg.mul_dict(sp_from_dense(h.s_of(i)), {k: Q1}), c)
            sp_add_into(conv_r, alg.mul_dict({i: Q1}, sp_from_dense(h.s_of(k))), c)
        target = {j: h.eps(x) * u for j, u in enumerate(alg.unit) if h.eps(x) * u}
        rep.require("antipode_convolution_left", conv_l == target, witness=labels[x],
                    left=alg.show(sp_to_dense(conv_l, m)),
                    right=alg.show(sp_to_dense(target, m)))
        rep.require("antipode_convolution_right", conv_r == target, witness=labels[x],
                    left=alg.show(sp_to_dense(conv_r, m)),
                    right=alg.show(sp_to_dense(target, m)))
    rep.sweep("antipode_convolution", before)
    rep.meta["dim"] = m
    rep.meta["involutive"] = is_involutive(h)
    return rep


class ModuleAction:
    """A left action H ⊗ A -> A, stored as one A-matrix per H-basis element."""

    def __init__(self, hopf: HopfAlgebra, alg: Algebra, matrices, name: str = ""):
        if len(matrices) != hopf.dim:
            raise ValueError("one action matrix per Hopf basis element required")
        for mt in matrices:
            if mt.rows != alg.dim or mt.cols != alg.dim:
                raise ValueError("action matrix has wrong shape")
        self.hopf = hopf
        self.alg = alg
        self.matrices = tuple(matrices)
        self.name = name or f"{hopf.name}-action-on-{alg.name}"

    def act(self, h: int) -> Mat:
        return self.matrices[h]

    def act_dict(self, h: int, av: dict) -> dict:
        return self.matrices[h].apply_dict(av)

    def __repr__(self):
        return f"ModuleAction({self.name})"


def trivial_action(hopf: HopfAlgebra, alg: Algebra) -> ModuleAction:
    """h acts as ε(h)·id."""
    mats = [Mat.identity(alg.dim).scale(hopf.eps(i)) for i in range(hopf.dim)]
    return ModuleAction(hopf, alg, mats, name=f"trivial-{hopf.name}-on-{alg.name}")


def group_action_to_module_action(g: GroupData, autos, alg: Algebra = None) -> ModuleAction:
    """Automorphisms indexed by group elements, as a K[G]-module algebra."""
    if alg is None:
        alg = autos[0].domain
    if len(autos) != g.order:
        raise ValueError("need one automorphism per group element")
    for f in autos:
        if f.domain is not alg or f.codomain is not alg or f.is_anti:
            raise ValueError("each action map must be an endomorphism of A")
        if not f.is_bijective() or not morphism_check(f).ok:
            raise ValueError(f"{f.name} is not an automorphism")
    if autos[0].matrix != Mat.identity(alg.dim):
        raise ValueError("identity element must act as the identity")
    for i in range(g.order):
        for j in range(g.order):
            if autos[i].matrix * autos[j].matrix != autos[g.table[i][j]].matrix:
                raise ValueError(f"assignment is not a group homomorphism at ({i},{j})")
    return ModuleAction(group_algebra(g), alg, [f.matrix for f in autos],
                        name=f"{g.name}-on-{alg.name}")


def check_module_algebra(m: ModuleAction) -> Report:
    """Unital module, module axiom, measuring, and h·1 = ε(h)1."""
    rep = Report(title=f"action {m.name}")
    h, a = m.hopf, m.alg
    unit_act = Mat.zero(a.dim, a.dim)
    for i, c in enumerate(h.alg.unit):
        if c:
            unit_act = unit_act + m.act(i).scale(c)
    rep.add("module_unital", unit_act == Mat.identity(a.dim))

    before = len(rep.items)
    for i in range(h.dim):
        for j in range(h.dim):
            composed = m.act(i) * m.act(j)
            of_product = Mat.zero(a.dim, a.dim)
            for k, c in h.alg.mul_basis(i, j).items():
                of_product = of_product + m.act(k).scale(c)
            rep.require("module_axiom", composed == of_product,
                        witness=f"{h.alg.labels[i]},{h.alg.labels[j]}")
    rep.sweep("module_axiom", before)

    before = len(rep.items)
    for hi in range(h.dim):
        sw = h.sweedler(hi)
        for x in range(a.dim):
            for y in range(a.dim):
                lhs = m.act_dict(hi, a.mul_basis(x, y))
                rhs = {}
                for h1, h2, c in sw:
                    sp_add_into(rhs, a.mul_dict(m.act_dict(h1, {x: Q1}),
                                                m.act_dict(h2, {y: Q1})), c)
                rep.require("measuring", lhs == rhs,
                            witness=f"{h.alg.labels[hi]};{a.labels[x]},{a.labels[y]}")
    rep.sweep("measuring", before)

    before = len(rep.items)
    for hi in range(h.dim):
        img = m.act(hi).apply(a.unit)
        target = tuple(h.eps(hi) * u for u in a.unit)
        rep.require("acts_unitally_on_one", img == target,
                    witness=h.alg.labels[hi], left=a.show(img), right=a.show(target))
    rep.sweep("acts_unitally_on_one", before)
    return rep


def smash_product(m: ModuleAction) -> Algebra:
    """A ⋊ H on A⊗H with (a#h)(b#k) = a(h1·b) # h2 k."""
    a, h = m.alg, m.hopf
    na, nh = a.dim, h.dim
    dim = na * nh
    labels = [f"{la}#{lh}" for la in a.labels for lh in h.alg.labels]

    def idx(ai, hi):
        return ai * nh + hi

    sc = [[{} for _ in range(dim)] for _ in range(dim)]
    for ai in range(na):
        for hi in range(nh):
            sw = h.sweedler(hi)
            for bi in range(na):
                for ki in range(nh):
                    out: dict[int, QQ] = {}
                    for h1, h2, c in sw:
                        left = a.mul_dict({ai: Q1}, m.act_dict(h1, {bi: Q1}))
                        right = h.alg.mul_basis(h2, ki)
                        for la_, ca in left.items():
                            for lh_, ch in right.items():
                                sp_add_into(out, {idx(la_, lh_): Q1}, c * ca * ch)
                    sc[idx(ai, hi)][idx(bi, ki)] = out
    unit = [Q0] * dim
    for ai, ca in enumerate(a.unit):
        if ca:
            for hi, ch in enumerate(h.alg.unit):
                if ch:
                    unit[idx(ai, hi)] = ca * ch
    return Algebra(labels, sc, unit, name=f"{a.name}⋊{h.name}")


def right_cross_product(m: ModuleAction) -> Algebra:
    """H ⋉ A^op on H⊗A with (h#ā)(k#b̄) = h k1 # (ā·k2) b̄, ā·k = over(S(k)·a)."""
    a, h = m.alg, m.hopf
    na, nh = a.dim, h.dim
    dim = nh * na
    labels = [f"{lh}#over({la})" for lh in h.alg.labels for la in a.labels]

    def idx(hi, ai):
        return hi * na + ai

    sc = [[{} for _ in range(dim)] for _ in range(dim)]
    for hi in range(nh):
        for ai in range(na):
            for ki in range(nh):
                sw = h.sweedler(ki)
                for bi in range(na):
                    out: dict[int, QQ] = {}
                    for k1, k2, c in sw:
                        hk = h.alg.mul_basis(hi, k1)
                        # (ā · k2) b̄ = over(b · (S(k2) · a))
                        moved = m.alg.mul_dict(
                            {bi: Q1},
                            _act_by_vec(m, h.s_of(k2), {ai: Q1}))
                        for lh_, ch in hk.items():
                            for la_, ca in moved.items():
                                sp_add_into(out, {idx(lh_, la_): Q1}, c * ch * ca)
                    sc[idx(hi, ai)][idx(ki, bi)] = out
    unit = [Q0] * dim
    for hi, ch in enumerate(h.alg.unit):
        if ch:
            for ai, ca in enumerate(a.unit):
                if ca:
                    unit[idx(hi, ai)] = ch * ca
    return Algebra(labels, sc, unit, name=f"{h.name}⋉{a.name}^op")


def _act_by_vec(m: ModuleAction, hvec, avec: dict) -> dict:
    """Action of a general Hopf element (dense coords) on a sparse A-vector."""
    out: dict[int, QQ] = {}
    for i, c in enumerate(hvec):
        if c:
            sp_add_into(out, m.act_dict(i, avec), c)
    return out
