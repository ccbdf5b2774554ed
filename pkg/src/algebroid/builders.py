"""Small concrete algebras and groups used by the built-in instances and tests."""

from __future__ import annotations

from itertools import permutations

from .algebra import Algebra
from .linalg import Q0, Q1


def componentwise_algebra(n: int, name: str = "") -> Algebra:
    """Q^n with componentwise product; basis of orthogonal idempotents."""
    labels = [f"e{i}" for i in range(n)]
    sc = [[{i: Q1} if i == j else {} for j in range(n)] for i in range(n)]
    return Algebra(labels, sc, [Q1] * n, name=name or f"Q^{n}")


def matrix_units_algebra(n: int, name: str = "") -> Algebra:
    """M_n(Q) on the matrix-unit basis E[i,j], index i*n + j."""
    labels = [f"E{i}{j}" for i in range(n) for j in range(n)]
    sc = []
    for i in range(n):
        for j in range(n):
            row = []
            for k in range(n):
                for l in range(n):
                    row.append({i * n + l: Q1} if j == k else {})
            sc.append(row)
    unit = [Q1 if i == j else Q0 for i in range(n) for j in range(n)]
    return Algebra(labels, sc, unit, name=name or f"M{n}(Q)")


def dual_numbers_algebra(name: str = "dual") -> Algebra:
    """Q[x]/(x^2) on the basis {1, x}."""
    sc = [[{0: Q1}, {1: Q1}], [{1: Q1}, {}]]
    return Algebra(["1", "x"], sc, [Q1, Q0], name=name)


def cyclic_group_table(n: int):
    """Multiplication table and inverses of Z/n (identity at index 0)."""
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    inverse = [(-i) % n for i in range(n)]
    return table, inverse


def symmetric_group_table(n: int):
    """Multiplication table of S_n on permutation tuples, identity first.

    Product convention: (p*q)(x) = p(q(x)).
    """
    perms = sorted(permutations(range(n)))
    ident = tuple(range(n))
    perms.remove(ident)
    perms.insert(0, ident)
    index = {p: i for i, p in enumerate(perms)}
    table = []
    for p in perms:
        row = []
        for q in perms:
            row.append(index[tuple(p[q[x]] for x in range(n))])
        table.append(row)
    inverse = []
    for p in perms:
        inv = [0] * n
        for x in range(n):
            inv[p[x]] = x
        inverse.append(index[tuple(inv)])
    return table, inverse
