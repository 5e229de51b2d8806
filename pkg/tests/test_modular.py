"""Prime-field linear algebra checks on seeded random matrices."""

import numpy as np

from groupchar.modular import nullspace, rank, rref


def _random_matrices(q, seed):
    rng = np.random.default_rng(seed)
    for rows, cols in [(1, 1), (3, 3), (4, 6), (6, 4), (5, 5), (8, 8), (2, 9)]:
        yield rng.integers(0, q, size=(rows, cols))


def test_rref_properties():
    for q in (7, 37):
        for a in _random_matrices(q, q):
            red, pivots = rref(a, q)
            assert red.shape[0] == len(pivots)
            assert list(pivots) == sorted(pivots)
            for r, c in enumerate(pivots):
                assert red[r, c] == 1
                col = red[:, c].copy()
                col[r] = 0
                assert not col.any()  # pivot column is a unit vector


def test_rref_preserves_row_space():
    # every original row must reduce to zero against the rref rows
    for q in (7, 37):
        for a in _random_matrices(q, q + 1):
            red, pivots = rref(a, q)
            for row in np.array(a) % q:
                v = row.copy()
                for r, c in enumerate(pivots):
                    v = (v - v[c] * red[r]) % q
                assert not v.any()


def test_nullspace_is_annihilated():
    for q in (7, 37):
        for a in _random_matrices(q, 2 * q):
            ns = nullspace(a, q)
            assert rank(a, q) + ns.shape[0] == a.shape[1]
            if ns.shape[0]:
                assert not ((np.array(a) @ ns.T) % q).any()
                assert rank(ns, q) == ns.shape[0]  # basis is independent


def test_identity_and_zero():
    eye = np.eye(4, dtype=np.int64)
    assert rank(eye, 7) == 4
    assert nullspace(eye, 7).shape == (0, 4)
    zero = np.zeros((3, 5), dtype=np.int64)
    assert rank(zero, 7) == 0
    assert nullspace(zero, 7).shape == (5, 5)
