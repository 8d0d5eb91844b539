#!/usr/bin/env python

"""Tests for `hopflab.utils`."""

import unittest

from hopflab.utils import factorize, partitions, prime_power, valuation


class TestNumberTheory(unittest.TestCase):

    def test_valuation(self):
        self.assertEqual(valuation(48, 2), 4)
        self.assertEqual(valuation(-48, 3), 1)
        self.assertEqual(valuation(7, 2), 0)
        with self.assertRaises(ValueError):
            valuation(0, 2)

    def test_partitions(self):
        self.assertEqual(list(partitions(4)),
                         [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)])
        self.assertEqual(list(partitions(4, largest=2)),
                         [(2, 2), (2, 1, 1), (1, 1, 1, 1)])
        self.assertEqual(list(partitions(0)), [()])
        self.assertEqual(len(list(partitions(10))), 42)

    def test_factorize(self):
        self.assertEqual(factorize(360), {2: 3, 3: 2, 5: 1})
        self.assertEqual(factorize(1), {})
        self.assertEqual(prime_power(27), (3, 3))
        self.assertIsNone(prime_power(12))


if __name__ == '__main__':
    unittest.main()
