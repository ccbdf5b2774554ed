"""Structure-constant algebras: products, checks, derived constructions.

Oracles: matrix-unit products are compared against literal 2x2 matrix
multiplication; centralizers and fixed algebras against hand-solved linear
conditions frozen in the assertions.
"""

from fractions import Fraction

import pytest

from algebroid.algebra import (AlgMorphism, Subalgebra, centralizer,
                               check_algebra, endo_coords, endo_matrix,
                               endomorphism_algebra, fixed_subalgebra,
                               morphism_check, opposite, scalar_subalgebra,
                               tensor_algebra)
from algebroid.builders import (componentwise_algebra, dual_numbers_algebra,
                                matrix_units_algebra)
from algebroid.linalg import Mat, Q0, Q1, Subspace

F = Fraction


def mat2_of(coords):
    """Read a M2(Q) coordinate vector (E00,E01,E10,E11 order) as a 2x2 array."""
    return [[coords[0], coords[1]], [coords[2], coords[3]]]


def mat2_mul(a, b):
    return [[sum(a[i][k] * b[k][j] for k in range(2)) for j in range(2)]
            for i in range(2)]


def test_unit_times_x():
    a = componentwise_algebra(2)
    x = a.element((F(3), F(-1, 2)))
    assert a.one() * x == x and x * a.one() == x


def test_orthogonal_idempotents():
    a = componentwise_algebra(2)
    e0, e1 = a.basis_element(0), a.basis_element(1)
    assert (e0 * e1).coords == (0, 0)


def test_matrix_units_against_matrix_multiplication():
    m2 = matrix_units_algebra(2)
    # E00*E01 = E01 (paper-independent oracle: direct matrix product)
    for i in range(4):
        for j in range(4):
            prod = m2.mul_vec(tuple(Q1 if t == i else Q0 for t in range(4)),
                              tuple(Q1 if t == j else Q0 for t in range(4)))
            ei = [Q1 if t == i else Q0 for t in range(4)]
            ej = [Q1 if t == j else Q0 for t in range(4)]
            assert mat2_of(prod) == mat2_mul(mat2_of(ei), mat2_of(ej))
    e01 = m2.basis_element(1)
    assert m2.basis_element(0) * e01 == e01


def test_algebra_mismatch_raises():
    a = componentwise_algebra(2)
    b = componentwise_algebra(2)
    with pytest.raises(ValueError):
        a.basis_element(0) * b.basis_element(0)


def test_check_algebra_passes():
    assert check_algebra(componentwise_algebra(2)).ok
    assert check_algebra(matrix_units_algebra(2)).ok
    assert check_algebra(dual_numbers_algebra()).ok


def test_check_algebra_corrupted_names_triple():
    m2 = matrix_units_algebra(2)
    sc = [[dict(m2.mul_basis(i, j)) for j in range(4)] for i in range(4)]
    sc[0][1] = {}  # drop E00*E01 = E01
    bad = matrix_units_algebra(2)
    from algebroid.algebra import Algebra
    bad = Algebra(m2.labels, sc, m2.unit, name="corrupted-M2")
    rep = check_algebra(bad)
    assert not rep.ok
    # (E00 E01) E10 = 0 but E00 (E01 E10) = E00 E00 = E00 under the corruption
    witnesses = {f.witness for f in rep.failures() if f.name == "associativity"}
    assert "E00,E01,E10" in witnesses


def test_opposite_commutative_unchanged():
    a = componentwise_algebra(2)
    op = opposite(a)
    for i in range(2):
        for j in range(2):
            assert op.mul_basis(i, j) == a.mul_basis(i, j)


def test_opposite_matrix_units():
    m2 = matrix_units_algebra(2)
    op = opposite(m2)
    # in the opposite, E01 * E00 = (E00 E01 computed in M2) = E01
    assert op.mul_basis(1, 0) == {1: Q1}
    opop = opposite(op)
    for i in range(4):
        for j in range(4):
            assert opop.mul_basis(i, j) == m2.mul_basis(i, j)


def test_tensor_with_ground_field():
    a = matrix_units_algebra(2)
    k = componentwise_algebra(1)
    t = tensor_algebra(a, k)
    assert t.dim == a.dim
    for i in range(4):
        for j in range(4):
            assert t.mul_basis(i, j) == a.mul_basis(i, j)


def test_tensor_dims_and_componentwise():
    m2 = matrix_units_algebra(2)
    assert tensor_algebra(m2, opposite(m2)).dim == 16
    q2 = componentwise_algebra(2)
    t = tensor_algebra(q2, q2)
    assert t.dim == 4
    for i in range(4):
        assert t.mul_basis(i, i) == {i: Q1}
        for j in range(4):
            if i != j:
                assert t.mul_basis(i, j) == {}
    assert check_algebra(t).ok


def test_endomorphism_algebra():
    a = componentwise_algebra(2)
    e = endomorphism_algebra(a)
    assert e.dim == 4
    assert check_algebra(e).ok
    # composition = matrix product
    m1 = Mat.from_rows([[1, 2], [0, 1]])
    m2 = Mat.from_rows([[0, 1], [3, 0]])
    prod = e.mul_vec(endo_coords(m1), endo_coords(m2))
    assert endo_matrix(prod, 2) == m1 * m2
    # identity endo is the unit
    assert e.unit == endo_coords(Mat.identity(2))


def swap_morphism(a):
    return AlgMorphism(a, a, Mat.from_rows([[0, 1], [1, 0]]), name="swap")


def test_fixed_subalgebra_empty_list():
    a = componentwise_algebra(2)
    assert fixed_subalgebra(a, []).dim == 2


def test_fixed_subalgebra_swap():
    a = componentwise_algebra(2)
    fixed = fixed_subalgebra(a, [swap_morphism(a)])
    # solving (x,y) = (y,x) leaves the diagonal
    assert fixed.dim == 1
    assert fixed.space.contains((1, 1))


def conj_diag_morphism(m2):
    # conjugation by diag(1,-1): flips the sign of E01 and E10
    return AlgMorphism(m2, m2, Mat.from_rows(
        [[1, 0, 0, 0], [0, -1, 0, 0], [0, 0, -1, 0], [0, 0, 0, 1]]),
        name="conj(diag(1,-1))")


def test_fixed_subalgebra_inner_conjugation():
    m2 = matrix_units_algebra(2)
    fixed = fixed_subalgebra(m2, [conj_diag_morphism(m2)])
    assert fixed.dim == 2
    assert fixed.space.contains((1, 0, 0, 0)) and fixed.space.contains((0, 0, 0, 1))


def test_fixed_subalgebra_rejects_non_automorphism():
    a = componentwise_algebra(2)
    bad = AlgMorphism(a, a, Mat.from_rows([[1, 1], [0, 0]]), name="proj")
    with pytest.raises(ValueError):
        fixed_subalgebra(a, [bad])


def test_centralizer_of_whole_matrix_algebra_is_scalars():
    m2 = matrix_units_algebra(2)
    whole = Subalgebra(m2, Subspace.from_span(
        [tuple(Q1 if t == i else Q0 for t in range(4)) for i in range(4)], 4))
    c = centralizer(m2, whole)
    assert c.dim == 1
    assert c.space.contains(m2.unit)


def test_centralizer_of_scalars_is_whole():
    m2 = matrix_units_algebra(2)
    assert centralizer(m2, scalar_subalgebra(m2)).dim == 4


def test_centralizer_of_diagonal_is_diagonal():
    m2 = matrix_units_algebra(2)
    diag = Subalgebra(m2, Subspace.from_span([(1, 0, 0, 0), (0, 0, 0, 1)], 4))
    c = centralizer(m2, diag)
    assert c.dim == 2
    assert c.space == diag.space


def test_morphism_check_identity():
    a = componentwise_algebra(2)
    rep = morphism_check(AlgMorphism(a, a, Mat.identity(2), name="id"))
    assert rep.ok and rep.meta["injective"] and rep.meta["surjective"]


def test_morphism_check_swap():
    a = componentwise_algebra(2)
    rep = morphism_check(swap_morphism(a))
    assert rep.ok and rep.meta["injective"] and rep.meta["surjective"]


def test_morphism_check_projection():
    a = componentwise_algebra(2)
    k = componentwise_algebra(1)
    rep = morphism_check(AlgMorphism(a, k, Mat.from_rows([[1, 0]]), name="pr1"))
    assert rep.ok and rep.meta["surjective"] and not rep.meta["injective"]


def test_subalgebra_rejects_non_closed():
    m2 = matrix_units_algebra(2)
    # any span{1, x} in M2 is closed by Cayley-Hamilton, so take a 3-dim
    # space: E00*(E01+E10) = E01 escapes span{1, E00, E01+E10}
    with pytest.raises(ValueError):
        Subalgebra(m2, Subspace.from_span(
            [m2.unit, (1, 0, 0, 0), (0, 1, 1, 0)], 4))
    # and a space without the unit is rejected as well
    with pytest.raises(ValueError):
        Subalgebra(m2, Subspace.from_span([(0, 1, 0, 0)], 4))


def test_subalgebra_induced_algebra():
    m2 = matrix_units_algebra(2)
    diag = Subalgebra(m2, Subspace.from_span([(1, 0, 0, 0), (0, 0, 0, 1)], 4))
    alg, inc = diag.as_algebra("diag")
    assert alg.dim == 2
    assert check_algebra(alg).ok
    assert morphism_check(inc).ok
