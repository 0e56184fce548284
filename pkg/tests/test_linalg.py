import random
from fractions import Fraction

import numpy as np
from hypothesis import given, settings, strategies as st

from jacsyz.fields import PrimeField, QQ, random_primes
from jacsyz.linalg import (ExactMatrix, nullspace_mod_np, rank_mod_np,
                           rref_mod_np)

P = random_primes(1, seed=11)[0]

matrices = st.integers(1, 5).flatmap(
    lambda n: st.integers(1, 5).flatmap(
        lambda m: st.lists(
            st.lists(st.integers(-9, 9), min_size=m, max_size=m),
            min_size=n, max_size=n)))


def _qmat(rows):
    return ExactMatrix(QQ, [[Fraction(v) for v in row] for row in rows])


def _rank_oracle(rows):
    """Fraction-free elimination with shuffled pivot choices."""
    rng = random.Random(12345)
    rows = [list(map(Fraction, r)) for r in rows]
    rank = 0
    cols = list(range(len(rows[0])))
    for col in cols:
        pivots = [i for i in range(rank, len(rows)) if rows[i][col] != 0]
        if not pivots:
            continue
        i = rng.choice(pivots)
        rows[rank], rows[i] = rows[i], rows[rank]
        for j in range(len(rows)):
            if j != rank and rows[j][col] != 0:
                c = rows[j][col] / rows[rank][col]
                rows[j] = [a - c * b for a, b in zip(rows[j], rows[rank])]
        rank += 1
    return rank


@settings(max_examples=60)
@given(matrices)
def test_rank_against_shuffled_pivot_oracle(rows):
    assert _qmat(rows).rank() == _rank_oracle(rows)


@settings(max_examples=60)
@given(matrices)
def test_rank_nullity(rows):
    M = _qmat(rows)
    ns = M.nullspace()
    assert M.rank() + len(ns) == len(rows[0])
    for v in ns:
        assert M.maps_to_zero(v)


@settings(max_examples=40)
@given(matrices)
def test_modular_rank_matches_rational_on_small_entries(rows):
    # entries in [-9, 9]: no accidental rank drop is possible at a 31-bit
    # prime unless a minor is divisible by P, which cannot happen here
    A = np.array(rows, dtype=np.int64) % P
    assert rank_mod_np(A, P) == _qmat(rows).rank()


@settings(max_examples=40)
@given(matrices)
def test_modular_nullspace(rows):
    A = np.array(rows, dtype=np.int64) % P
    basis = nullspace_mod_np(A, P)
    assert rank_mod_np(A, P) + len(basis) == A.shape[1]
    for v in basis:
        assert not ((A @ v) % P).any()


@settings(max_examples=30)
@given(matrices)
def test_rref_idempotent(rows):
    A = np.array(rows, dtype=np.int64) % P
    R, piv = rref_mod_np(A, P)
    R2, piv2 = rref_mod_np(R, P)
    assert (R == R2).all() and piv == piv2
    assert rank_mod_np(R, P) == len(piv)


def test_det():
    assert _qmat([[1, 0], [0, 1]]).det() == 1
    assert _qmat([[1, 2], [2, 4]]).det() == 0
    assert _qmat([[0, 1], [1, 0]]).det() == -1
    assert _qmat([[2, 1, 0], [1, 3, 1], [0, 1, 4]]).det() == Fraction(18)


def test_prime_field_matrix():
    F = PrimeField(P)
    M = ExactMatrix(F, [[F.coerce(1), F.coerce(2)],
                        [F.coerce(2), F.coerce(4)]])
    assert M.rank() == 1 and M.nullity() == 1
