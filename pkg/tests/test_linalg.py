from fractions import Fraction as F

from weightcat import linalg


def test_rref_and_rank():
    rows, pivots = linalg.rref([[1, 2, 3], [2, 4, 6], [0, 1, 1]])
    assert pivots == [0, 1]
    assert linalg.rank([[1, 2], [3, 4]]) == 2
    assert linalg.rank([[1, 2], [2, 4]]) == 1


def test_nullspace_solves_system():
    mat = [[1, 2, 0], [0, 0, 1]]
    basis = linalg.nullspace(mat, 3)
    assert len(basis) == 1
    v = basis[0]
    for row in mat:
        assert sum(F(a) * b for a, b in zip(row, v)) == 0


def test_solve_consistency():
    assert linalg.solve([[2, 0], [0, 3]], [4, 9]) == [F(2), F(3)]
    assert linalg.solve([[1, 1], [1, 1]], [1, 2]) is None
    # underdetermined: free variable set to zero
    sol = linalg.solve([[1, 1]], [5])
    assert sol == [F(5), F(0)]


def test_in_span():
    basis = [[1, 0, 1], [0, 1, 1]]
    assert linalg.in_span([2, 3, 5], basis) == [F(2), F(3)]
    assert linalg.in_span([1, 0, 0], basis) is None


def test_reduce_mod_rowspace_is_projection():
    rows, pivots = linalg.rref([[1, 0, 2], [0, 1, 3]])
    red = linalg.reduce_mod_rowspace([1, 1, 1], rows, pivots)
    assert red[:2] == [F(0), F(0)]
    twice = linalg.reduce_mod_rowspace(red, rows, pivots)
    assert twice == red


def test_integer_row_reduce_rank():
    assert linalg.lattice_rank([[1, 0], [1, 1]]) == 2
    assert linalg.lattice_rank([[2, 4], [1, 2]]) == 1
    assert linalg.lattice_rank([]) == 0
    basis = linalg.integer_row_reduce([[2, 4], [3, 6], [0, 5]])
    assert len(basis) == 2
