"""Hopf algebras, group actions, smash and crossed products."""

from fractions import Fraction

import pytest

from algebroid.algebra import AlgMorphism, check_algebra, tensor_algebra
from algebroid.builders import componentwise_algebra, matrix_units_algebra
from algebroid.hopf import (GroupData, HopfAlgebra, ModuleAction, check_hopf,
                            check_module_algebra, group_action_to_module_action,
                            group_algebra, is_involutive, right_cross_product,
                            smash_product, trivial_action, trivial_hopf)
from algebroid.linalg import Mat, Q0, Q1

F = Fraction


def swap_auto(a):
    return AlgMorphism(a, a, Mat.from_rows([[0, 1], [1, 0]]), name="swap")


def c2_swap_action():
    a = componentwise_algebra(2)
    g = GroupData.cyclic(2)
    ident = AlgMorphism(a, a, Mat.identity(2), name="id")
    return group_action_to_module_action(g, [ident, swap_auto(a)])


def m2_inner_action():
    m2 = matrix_units_algebra(2)
    conj = AlgMorphism(m2, m2, Mat.from_rows(
        [[1, 0, 0, 0], [0, -1, 0, 0], [0, 0, -1, 0], [0, 0, 0, 1]]),
        name="conj")
    ident = AlgMorphism(m2, m2, Mat.identity(4), name="id")
    return group_action_to_module_action(GroupData.cyclic(2), [ident, conj])


# -- groups -------------------------------------------------------------------

def test_group_data_validation():
    GroupData.cyclic(4)
    with pytest.raises(ValueError):
        GroupData([[0, 1], [1, 1]])  # not a group table


def test_trivial_group_algebra():
    h = trivial_hopf()
    assert h.dim == 1
    assert check_hopf(h).ok


def test_c2_group_algebra():
    h = group_algebra(GroupData.cyclic(2))
    assert h.dim == 2
    assert check_hopf(h).ok
    assert h.antipode.matrix == Mat.identity(2)  # every element is its own inverse


def test_s3_group_algebra():
    h = group_algebra(GroupData.symmetric(3))
    assert h.dim == 6
    assert check_hopf(h).ok
    s = h.antipode.matrix
    assert s * s == Mat.identity(6)
    assert s != Mat.identity(6)  # the 3-cycles invert nontrivially


def test_is_involutive():
    assert is_involutive(group_algebra(GroupData.cyclic(3)))
    assert is_involutive(trivial_hopf())
    h = group_algebra(GroupData.cyclic(2))
    bad = HopfAlgebra(h.alg, h.coproduct, h.counit,
                      AlgMorphism(h.alg, h.alg,
                                  Mat.from_rows([[1, 1], [0, 1]]), is_anti=True),
                      name="corrupted")
    assert not is_involutive(bad)


def test_corrupted_counit_detected():
    h = group_algebra(GroupData.cyclic(2))
    bad = HopfAlgebra(h.alg, h.coproduct, Mat(1, 2, [Q1, Q0]), h.antipode,
                      name="bad-counit")
    rep = check_hopf(bad)
    assert not rep.ok
    # (ε⊗id)Δ(g) = 0 ≠ g
    fails = {(f.name, f.witness) for f in rep.failures()}
    assert ("counit_law_left", "g1") in fails


# -- actions ------------------------------------------------------------------

def test_trivial_action_passes():
    h = group_algebra(GroupData.cyclic(2))
    a = componentwise_algebra(3)
    assert check_module_algebra(trivial_action(h, a)).ok


def test_c2_swap_action_passes():
    assert check_module_algebra(c2_swap_action()).ok


def test_m2_conjugation_action_passes():
    assert check_module_algebra(m2_inner_action()).ok


def test_group_action_rejects_non_homomorphism():
    a = componentwise_algebra(2)
    g = GroupData.cyclic(2)
    ident = AlgMorphism(a, a, Mat.identity(2), name="id")
    with pytest.raises(ValueError):
        # sigma^2 = id required, -id is not even an algebra map here; use a
        # valid automorphism assignment that fails the table instead:
        group_action_to_module_action(g, [swap_auto(a), swap_auto(a)])
    with pytest.raises(ValueError):
        group_action_to_module_action(g, [ident, ident, ident])


def test_module_axiom_corruption_detected():
    # act(g1) as a 90-degree rotation: squares to -id, not act(g1*g1) = id
    h = group_algebra(GroupData.cyclic(2))
    a = componentwise_algebra(2)
    bad = ModuleAction(h, a, [Mat.identity(2),
                              Mat.from_rows([[0, 1], [-1, 0]])], name="broken")
    rep = check_module_algebra(bad)
    assert not rep.ok
    assert any(f.name == "module_axiom" and f.witness == "g1,g1"
               for f in rep.failures())


# -- smash product -------------------------------------------------------------

def test_smash_trivial_action_is_tensor():
    h = group_algebra(GroupData.cyclic(2))
    a = componentwise_algebra(2)
    sm = smash_product(trivial_action(h, a))
    t = tensor_algebra(a, h.alg)
    for i in range(sm.dim):
        for j in range(sm.dim):
            assert sm.mul_basis(i, j) == t.mul_basis(i, j)


def test_smash_group_formula():
    m = c2_swap_action()
    sm = smash_product(m)
    assert check_algebra(sm).ok
    # (a#σ)(b#τ) = a σ(b) # στ on basis a=e0, b=e0, σ=τ=g1:
    # e0 σ(e0) = e0 e1 = 0
    i = 0 * 2 + 1   # e0 # g1
    assert sm.mul_basis(i, i) == {}
    # (e0#g1)(e1#g1) = e0 σ(e1) # e = e0 # e
    j = 1 * 2 + 1   # e1 # g1
    assert sm.mul_basis(i, j) == {0: Q1}


def test_right_cross_product_trivial_is_tensor():
    h = group_algebra(GroupData.cyclic(2))
    a = componentwise_algebra(2)
    rc = right_cross_product(trivial_action(h, a))
    from algebroid.algebra import opposite
    t = tensor_algebra(h.alg, opposite(a))
    for i in range(rc.dim):
        for j in range(rc.dim):
            assert rc.mul_basis(i, j) == t.mul_basis(i, j)


def test_right_cross_product_group_case():
    m = c2_swap_action()
    rc = right_cross_product(m)
    assert check_algebra(rc).ok
    # (g1 # over(e0))(g1 # over(e0)) = e # over(e0 · σ(e0)) = e # over(e0 e1) = 0
    i = 1 * 2 + 0
    assert rc.mul_basis(i, i) == {}
    # (g1 # over(e0))(g1 # over(e1)) = e # over(σ(e0)) over(e1) = e # over(e1)
    j = 1 * 2 + 1
    assert rc.mul_basis(i, j) == {1: Q1}


def test_crossed_products_associative_for_m2_action():
    m = m2_inner_action()
    assert check_algebra(smash_product(m)).ok
    assert check_algebra(right_cross_product(m)).ok
