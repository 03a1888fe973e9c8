"""Independent reference computations used to pin expected test values.

Deliberately separate from the package internals: determinants are expanded
by cofactors, linear systems are solved with Cramer's rule, and discrepancy
systems for exceptional chains are assembled from scratch.  Slow is fine
here; these exist so the main implementation is checked against a different
algorithm, not against itself.
"""
from __future__ import annotations

import itertools
from fractions import Fraction

Q = Fraction


def cofactor_det(rows):
    # entries stay in their own arithmetic (ints stay ints)
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    total = 0
    for j in range(n):
        if rows[0][j] == 0:
            continue
        minor = [[row[k] for k in range(n) if k != j] for row in rows[1:]]
        sign = -1 if j % 2 else 1
        total += sign * rows[0][j] * cofactor_det(minor)
    return total


def cramer_solve(rows, rhs) -> tuple[Q, ...]:
    n = len(rows)
    det = cofactor_det(rows)
    if det == 0:
        raise ZeroDivisionError("singular system")
    out = []
    for j in range(n):
        col_swapped = [
            [rhs[i] if k == j else rows[i][k] for k in range(n)] for i in range(n)
        ]
        out.append(Q(cofactor_det(col_swapped)) / Q(det))
    return tuple(out)


def chain_matrix(weights) -> list[list[int]]:
    """Intersection matrix of a chain of smooth rational curves.

    ``weights[i] = w`` means the i-th curve has self-intersection -w;
    consecutive curves meet once, all other pairs are disjoint.
    """
    n = len(weights)
    rows = [[0] * n for _ in range(n)]
    for i, w in enumerate(weights):
        rows[i][i] = -w
        if i + 1 < n:
            rows[i][i + 1] = 1
            rows[i + 1][i] = 1
    return rows


def chain_discrepancies(weights) -> tuple[Q, ...]:
    """Brute-force discrepancies of a contracted rational chain.

    Solves sum_j a_j (E_j . E_i) = K . E_i with K . E_i = w_i - 2 (a smooth
    rational curve of self-intersection -w_i), via Cramer's rule.
    """
    rows = chain_matrix(weights)
    rhs = [w - 2 for w in weights]
    return cramer_solve(rows, rhs)


def adjunction_genus(self_intersection: Q, k_degree: Q) -> Q:
    """p_a from the adjunction identity 2p_a - 2 = C^2 + K.C."""
    return (Q(self_intersection) + Q(k_degree)) / 2 + 1


def grid_vectors(n: int, radius: int = 2):
    """All nonzero integer vectors with entries in [-radius, radius]."""
    for combo in itertools.product(range(-radius, radius + 1), repeat=n):
        if any(combo):
            yield combo


def quadratic_form(rows, vec) -> Q:
    total = Q(0)
    for i, vi in enumerate(vec):
        if not vi:
            continue
        for j, vj in enumerate(vec):
            if vj:
                total += Q(vi) * Q(rows[i][j]) * Q(vj)
    return total


# Values frozen from hand computation with the oracles above, before the
# main implementation was written.

# Chain [-2, -3]: M = [[-2,1],[1,-3]], rhs = (0, 1)  =>  a = (-1/5, -2/5).
HJ_CHAIN_2_3 = (Q(-1, 5), Q(-2, 5))

# Single (-3) rational curve: -3a = 1  =>  a = -1/3.
SINGLE_MINUS_3 = Q(-1, 3)

# F3: -K = 2C0 + 5f, -K.C0 = -1, C0^2 = -3  =>  N = (1/3) C0, P^2 = 25/3.
F3_NEGATIVE_COEFF = Q(1, 3)
F3_POSITIVE_SQUARE = Q(25, 3)

# F2: -K.C0 = 0, N = 0, P = -K, P^2 = 8.
F2_POSITIVE_SQUARE = Q(8)

# Star: (-5)-curve meeting five disjoint (-2)-curves once each, plus one
# (-1)-curve meeting the (-5): Fujita support solved by Cramer gives
# coefficients 4/3 (center), 2/3 (each leg), 1/3 (the (-1)); P^2 = 5/3.
STAR_CENTER_COEFF = Q(4, 3)
STAR_LEG_COEFF = Q(2, 3)
STAR_TAIL_COEFF = Q(1, 3)
STAR_POSITIVE_SQUARE = Q(5, 3)

# Two meeting negative curves: a (-6) rational curve (line through 7 points)
# and a (-3) rational curve (exceptional with 2 extra points) meeting once:
# [[-6,1],[1,-3]] c = (-4,-1)  =>  c = (13/17, 10/17); redundant shared
# point of multiplicity 23/17; P^2 = 62/17.
PAIR_COEFFS = (Q(13, 17), Q(10, 17))
PAIR_SHARED_MULT = Q(23, 17)
PAIR_POSITIVE_SQUARE = Q(62, 17)

# Witness data (direct construction): L solves M x = (-1,...,-1).
F2_L_COEFF = Q(1, 2)          # [[-2]] x = [-1]
F3_L_COEFF = Q(1, 3)          # [[-3]] x = [-1]
PAIR_L_COEFFS = (Q(4, 17), Q(7, 17))   # [[-6,1],[1,-3]] x = (-1,-1)
PAIR_EPSILON = Q(2, 7)        # min((1-13/17)/(2*7/17), 1/2) = 2/7

# Boundary discrepancies on F2 (C0 is the (-2)-curve, the fiber meets it
# once): -2a = 0 + q  =>  a = -q/2.
F2_BOUNDARY_HALF = Q(-1, 4)
F2_BOUNDARY_ONE = Q(-1, 2)

# Example-of-nine-points resolution: each exceptional meets three boundary
# lines of coefficient 1/10: a(-1) = K.E + 3/10 = -1 + 3/10  =>  a = 7/10.
NINE_POINT_DISCREPANCY = Q(7, 10)
