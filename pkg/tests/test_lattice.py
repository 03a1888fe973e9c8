"""Exact linear algebra: pairing, definiteness, solving."""
from fractions import Fraction as Q

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from delpezzo.errors import DegenerateConfiguration, IncompatibleSurfaces
from delpezzo.lattice import (
    DivisorClass,
    IntersectionMatrix,
    PicardLattice,
    format_rational,
    intersect,
    is_negative_definite,
    rational,
    solve_linear,
)

P2 = PicardLattice(("h",), ((Q(1),),))
BL1 = P2.extended("e1")


def test_rational_parsing_round_trip():
    assert rational("3") == 3
    assert rational("-7/2") == Q(-7, 2)
    assert rational(Q(5, 10)) == Q(1, 2)
    assert format_rational(Q(4, 2)) == "2"
    assert format_rational(Q(-1, 3)) == "-1/3"


def test_intersect_on_plane():
    h = P2.basis_class("h")
    assert intersect(h.scale(3), h) == 3
    assert intersect(h, P2.zero()) == 0


def test_intersect_blow_up():
    h = BL1.basis_class("h")
    e = BL1.basis_class("e1")
    assert intersect(h.scale(3) - e, e) == 1
    assert e.dot(e) == -1
    assert h.dot(e) == 0


def test_incompatible_bases_rejected():
    with pytest.raises(IncompatibleSurfaces, match="incompatible surfaces"):
        intersect(P2.basis_class("h"), BL1.basis_class("h"))


small_rationals = st.fractions(
    min_value=-4, max_value=4, max_denominator=6
)


@given(
    a=small_rationals,
    b=small_rationals,
    vecs=st.lists(
        st.tuples(small_rationals, small_rationals), min_size=3, max_size=3
    ),
)
def test_pairing_is_bilinear(a, b, vecs):
    d1, d2, d3 = (DivisorClass(BL1, coords) for coords in vecs)
    left = intersect(d1.scale(a) + d2.scale(b), d3)
    right = a * intersect(d1, d3) + b * intersect(d2, d3)
    assert left == right
    assert intersect(d1, d2) == intersect(d2, d1)


def _matrix(entries):
    ids = tuple(f"c{i}" for i in range(len(entries)))
    rows = tuple(tuple(Q(x) for x in row) for row in entries)
    return IntersectionMatrix(ids, rows)


@pytest.mark.parametrize(
    "entries,expected",
    [
        ([[-2]], True),
        ([[0]], False),
        ([[-2, 1], [1, -2]], True),   # minors -2, 3
        ([[-1, 1], [1, -1]], False),  # singular
        ([[-2, 3], [3, -2]], False),
        ([[2]], False),
    ],
)
def test_negative_definite_cases(entries, expected):
    assert is_negative_definite(_matrix(entries)) == expected


def test_negative_definite_empty_is_vacuous():
    assert is_negative_definite(_matrix([]))


@given(
    st.lists(
        st.lists(st.integers(min_value=-3, max_value=3), min_size=3, max_size=3),
        min_size=3,
        max_size=3,
    )
)
@settings(max_examples=200)
def test_definiteness_agrees_with_grid_falsifier(raw):
    # symmetrize
    sym = [[raw[i][j] + raw[j][i] for j in range(3)] for i in range(3)]
    matrix = _matrix(sym)
    verdict = is_negative_definite(matrix)
    witnesses = [
        v for v in oracles.grid_vectors(3) if oracles.quadratic_form(sym, v) >= 0
    ]
    if verdict:
        assert not witnesses
    if witnesses:
        # the grid can only falsify, never prove
        assert not verdict


@pytest.mark.parametrize(
    "entries,rhs,expected",
    [
        ([[-2]], [-1], (Q(1, 2),)),
        ([[-3]], [1], (Q(-1, 3),)),
        ([[-1, 0], [0, -1]], [2, -5], (Q(-2), Q(5))),
    ],
)
def test_solve_linear_cases(entries, rhs, expected):
    assert solve_linear(_matrix(entries), [Q(x) for x in rhs]) == expected


def test_solve_singular_raises():
    with pytest.raises(DegenerateConfiguration, match="degenerate configuration"):
        solve_linear(_matrix([[-1, 1], [1, -1]]), [Q(1), Q(1)])


@given(
    st.lists(
        st.lists(st.integers(min_value=-4, max_value=4), min_size=4, max_size=4),
        min_size=4,
        max_size=4,
    ),
    st.lists(st.integers(min_value=-6, max_value=6), min_size=4, max_size=4),
)
@settings(max_examples=150)
def test_solve_verified_by_back_substitution(raw, rhs):
    # diagonally dominant symmetric matrix: always invertible
    sym = [[Q(raw[i][j] + raw[j][i]) for j in range(4)] for i in range(4)]
    for i in range(4):
        sym[i][i] = Q(-20) - abs(sym[i][i])
    matrix = _matrix(sym)
    solution = solve_linear(matrix, [Q(x) for x in rhs])
    for i in range(4):
        assert sum(sym[i][j] * solution[j] for j in range(4)) == rhs[i]
    # cross-check against the independent Cramer-rule oracle
    assert solution == oracles.cramer_solve(sym, [Q(x) for x in rhs])
