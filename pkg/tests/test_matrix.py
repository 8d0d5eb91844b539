#!/usr/bin/env python

"""Tests for `hopflab.matrix`."""

import random
import unittest

from sympy import Matrix

from hopflab.matrix import IntMatrix, hermite_normal_form, smith_normal_form


def _det(m: IntMatrix) -> int:
    return int(Matrix(m.to_list()).det(method='bareiss'))


class TestSmithNormalForm(unittest.TestCase):
    """Smith normal form and its transforms."""

    def setUp(self):
        """Set up test fixtures, if any."""
        self.rng = random.Random(7)

    def tearDown(self):
        """Tear down test fixtures, if any."""

    def assertSmith(self, m: IntMatrix):
        snf = smith_normal_form(m)
        self.assertEqual(snf.U @ m @ snf.V, snf.D)
        self.assertTrue(snf.D.is_diagonal())
        self.assertIn(abs(_det(snf.U)), (1,))
        self.assertIn(abs(_det(snf.V)), (1,))
        diag = snf.diagonal
        self.assertTrue(all(d >= 0 for d in diag))
        nonzero = [d for d in diag if d]
        for a, b in zip(nonzero, nonzero[1:]):
            self.assertEqual(b % a, 0)
        return snf

    def test_two_by_two(self):
        snf = self.assertSmith(IntMatrix.from_rows([[2, 4], [6, 8]]))
        self.assertEqual(snf.diagonal, (2, 4))

    def test_zero_matrix(self):
        snf = self.assertSmith(IntMatrix.from_rows([[0]]))
        self.assertEqual(snf.D.to_list(), [[0]])
        self.assertEqual(snf.U, IntMatrix.identity(1))
        self.assertEqual(snf.V, IntMatrix.identity(1))

    def test_identity(self):
        snf = self.assertSmith(IntMatrix.identity(2))
        self.assertEqual(snf.D, IntMatrix.identity(2))

    def test_three_by_three(self):
        m = IntMatrix.from_rows([[2, 4, 4], [-6, 6, 12], [10, -4, -16]])
        self.assertEqual(self.assertSmith(m).diagonal, (2, 6, 12))

    def test_empty_matrix(self):
        snf = smith_normal_form(IntMatrix.zero(0, 3))
        self.assertEqual(snf.diagonal, ())
        self.assertEqual(snf.V, IntMatrix.identity(3))

    def test_random_matrices(self):
        for _ in range(40):
            rows = self.rng.randint(1, 6)
            cols = self.rng.randint(1, 6)
            m = IntMatrix.from_rows(
                [[self.rng.randint(-50, 50) for _ in range(cols)]
                 for _ in range(rows)], cols)
            self.assertSmith(m)


class TestHermite(unittest.TestCase):

    def test_hermite_form(self):
        hnf = hermite_normal_form([(2, 1), (4, 0), (0, 2)], 2)
        self.assertEqual(hnf, ((2, 1), (0, 2)))

    def test_hermite_reduces_above_pivots(self):
        expected = ((2, 3, 2), (0, 4, 1), (0, 0, 3))
        self.assertEqual(
            hermite_normal_form([(2, 3, 5), (0, 4, 1), (0, 0, 3)], 3),
            expected)
        self.assertEqual(
            hermite_normal_form([(0, 0, 3), (0, -4, -1), (2, 7, 6),
                                 (0, 0, 0)], 3), expected)
        self.assertEqual(hermite_normal_form([], 0), ())

    def test_hermite_form_is_canonical(self):
        a = hermite_normal_form([(1, 1), (0, 2), (2, 0)], 2)
        b = hermite_normal_form([(3, 1), (2, 0), (0, 2), (1, -1)], 2)
        self.assertEqual(a, b)

    def test_hermite_needs_full_rank(self):
        with self.assertRaises(ValueError):
            hermite_normal_form([(1, 0)], 2)


if __name__ == '__main__':
    unittest.main()
