from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import cofactor_det, quadratic_form_witness
from plumbook import linalg
from plumbook.errors import SingularMatrixError

Y2 = [[-2, 0, 0, 1], [0, -2, 0, 1], [0, 0, -2, 1], [1, 1, 1, -6]]
Y1 = [[-2, 0, 1, 0], [0, -2, 0, 1], [1, 0, -3, 2], [0, 1, 2, -3]]
E8 = [
    [-2, 1, 1, 0, 1, 0, 0, 0],
    [1, -2, 0, 0, 0, 0, 0, 0],
    [1, 0, -2, 1, 0, 0, 0, 0],
    [0, 0, 1, -2, 0, 0, 0, 0],
    [1, 0, 0, 0, -2, 1, 0, 0],
    [0, 0, 0, 0, 1, -2, 1, 0],
    [0, 0, 0, 0, 0, 1, -2, 1],
    [0, 0, 0, 0, 0, 0, 1, -2],
]


def square_matrices(max_n=5, bound=6):
    return st.integers(1, max_n).flatmap(
        lambda n: st.lists(
            st.lists(st.integers(-bound, bound), min_size=n, max_size=n), min_size=n, max_size=n
        )
    )


@st.composite
def symmetric_matrices(draw, max_n=4, bound=5):
    n = draw(st.integers(1, max_n))
    A = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            A[i][j] = A[j][i] = draw(st.integers(-bound, bound))
    return A


@pytest.mark.parametrize(
    "A, minors",
    [
        (Y2, [-2, 4, -8, 36]),
        ([[-1]], [-1]),
        ([[0, 1], [1, 0]], [0, -1]),
        (Y1, [-2, 4, -10, 9]),
        (E8, [-2, 3, -4, 5, -4, 3, -2, 1]),
    ],
)
def test_leading_minors_examples(A, minors):
    assert linalg.leading_principal_minors(A) == minors


def test_leading_minors_rejects_non_square():
    with pytest.raises(ValueError):
        linalg.leading_principal_minors([[1, 2, 3], [4, 5, 6]])


@settings(max_examples=300)
@given(square_matrices())
def test_minors_match_cofactor_expansion(A):
    expected = [cofactor_det([row[:k] for row in A[:k]]) for k in range(1, len(A) + 1)]
    assert linalg.leading_principal_minors(A) == expected
    assert linalg.determinant(A) == expected[-1]


def test_minors_survive_zero_pivot():
    A = [[0, 1, 2], [1, 0, 3], [2, 3, 0]]
    assert linalg.leading_principal_minors(A) == [0, -1, 12]


def test_big_entries_stay_exact():
    big = 10**40
    A = [[big, 1], [1, big]]
    assert linalg.determinant(A) == big * big - 1


@pytest.mark.parametrize("A, expected", [(Y2, True), (E8, True), (Y1, True), ([[0]], False), ([[1]], False)])
def test_negative_definite_examples(A, expected):
    assert linalg.is_negative_definite(A) is expected


def test_negative_definite_rejects_asymmetric():
    with pytest.raises(ValueError):
        linalg.is_negative_definite([[-1, 1], [0, -1]])


@settings(max_examples=300)
@given(symmetric_matrices())
def test_sylvester_never_contradicted_by_quadratic_form(A):
    witness = quadratic_form_witness(A)
    if linalg.is_negative_definite(A):
        assert witness is None
    elif len(A) == 1:
        assert witness is not None


def test_solve_examples():
    assert linalg.solve_exact(Y2, [-1, -1, -1, -3]) == (1, 1, 1, 1)
    assert linalg.solve_exact([[-1]], [5]) == (-5,)
    assert linalg.solve_exact(Y1, [-1, -1, 0, 0]) == (1, 1, 1, 1)
    assert linalg.solve_exact([[2, 0], [0, 3]], [1, 1]) == (Fraction(1, 2), Fraction(1, 3))


def test_solve_singular():
    with pytest.raises(SingularMatrixError):
        linalg.solve_exact([[1, 2], [2, 4]], [1, 1])


@settings(max_examples=300)
@given(square_matrices(max_n=4), st.lists(st.integers(-20, 20), min_size=4, max_size=4))
def test_solve_substitutes_back(A, b):
    b = b[: len(A)]
    if cofactor_det(A) == 0:
        with pytest.raises(SingularMatrixError):
            linalg.solve_exact(A, b)
        return
    x = linalg.solve_exact(A, b)
    assert all(isinstance(v, Fraction) for v in x)
    assert linalg.matvec(A, x) == tuple(b)


def check_smith(A, dec):
    assert linalg.matmul(linalg.matmul(dec.U, A), dec.V) == dec.D
    assert abs(cofactor_det([list(r) for r in dec.U])) == 1
    assert abs(cofactor_det([list(r) for r in dec.V])) == 1
    for i, row in enumerate(dec.D):
        for j, x in enumerate(row):
            if i != j:
                assert x == 0
    diag = dec.diagonal
    assert all(d >= 0 for d in diag)
    for a, b in zip(diag, diag[1:]):
        assert (b == 0) if a == 0 else (b % a == 0)


@pytest.mark.parametrize(
    "A, diag",
    [
        ([[-2]], (2,)),
        (E8, (1,) * 8),
        ([[2, 0], [0, 4]], (2, 4)),
        (Y2, (1, 1, 2, 18)),
        (Y1, (1, 1, 1, 9)),
        ([[4, 0], [0, 6]], (2, 12)),
        ([[2, 4, 4], [-6, 6, 12], [10, -4, -16]], (2, 6, 12)),
        ([[0, 0], [0, 0]], (0, 0)),
    ],
)
def test_smith_examples(A, diag):
    dec = linalg.smith_normal_form(A)
    check_smith(A, dec)
    assert dec.diagonal == diag


def test_smith_rectangular():
    A = [[2, 4, 4], [-6, 6, 12], [10, -4, -16], [1, 1, 1]]
    dec = linalg.smith_normal_form(A)
    assert linalg.matmul(linalg.matmul(dec.U, A), dec.V) == dec.D
    assert dec.diagonal == (1, 2, 6)


def test_smith_is_deterministic():
    assert linalg.smith_normal_form(Y2) == linalg.smith_normal_form(Y2)


@settings(max_examples=300)
@given(square_matrices(max_n=5, bound=9))
def test_smith_invariants(A):
    dec = linalg.smith_normal_form(A)
    check_smith(A, dec)
    prod = 1
    for d in dec.diagonal:
        prod *= d
    assert prod == abs(cofactor_det(A))
