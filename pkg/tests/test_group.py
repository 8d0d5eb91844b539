#!/usr/bin/env python

"""Tests for `hopflab.group`."""

import unittest

from hopflab.exceptions import InfiniteQuotient, InvalidElement, InvalidGroup
from hopflab.group import (FiniteAbelianGroup, direct_sum, element_order,
                           enumerate_groups, group_from_relations,
                           is_isomorphic, parse_elements, parse_group)
from hopflab.matrix import IntMatrix


class TestFiniteAbelianGroup(unittest.TestCase):
    """Presentations, invariant factors and element arithmetic."""

    def setUp(self):
        """Set up test fixtures, if any."""
        self.G = FiniteAbelianGroup((4, 2))

    def tearDown(self):
        """Tear down test fixtures, if any."""

    def test_invariant_factors(self):
        self.assertEqual(self.G.invariant_factors, (2, 4))
        self.assertEqual(FiniteAbelianGroup((2, 3)).invariant_factors, (6,))
        self.assertEqual(FiniteAbelianGroup((2, 2, 3)).invariant_factors,
                         (2, 6))
        self.assertEqual(FiniteAbelianGroup(()).invariant_factors, ())
        self.assertFalse(self.G.is_canonical)
        self.assertTrue(FiniteAbelianGroup.canonical([4, 2, 1]).is_canonical)

    def test_order_and_exponent(self):
        self.assertEqual(self.G.order(), 8)
        self.assertEqual(self.G.exponent(), 4)
        self.assertEqual(len(list(self.G.elements())), 8)
        self.assertEqual(FiniteAbelianGroup(()).order(), 1)

    def test_element_count_matches_order(self):
        for G in enumerate_groups(1024, include_trivial=True):
            self.assertEqual(sum(1 for _ in G.elements()), G.order(), str(G))

    def test_invalid_presentation(self):
        with self.assertRaises(InvalidGroup):
            FiniteAbelianGroup((1,))
        with self.assertRaises(InvalidGroup):
            parse_group('4,x')

    def test_arithmetic(self):
        self.assertEqual(self.G.add((3, 1), (2, 1)), (1, 0))
        self.assertEqual(self.G.neg((1, 1)), (3, 1))
        self.assertEqual(self.G.scale(2, (3, 1)), (2, 0))
        with self.assertRaises(InvalidElement):
            self.G.validate((4, 0))

    def test_element_order(self):
        self.assertEqual(element_order(self.G, (1, 0)), 4)
        self.assertEqual(element_order(self.G, (2, 1)), 2)
        self.assertEqual(element_order(FiniteAbelianGroup(()), ()), 1)
        with self.assertRaises(InvalidElement):
            element_order(self.G, (0, 2))

    def test_is_isomorphic(self):
        self.assertFalse(is_isomorphic(FiniteAbelianGroup((2, 4)),
                                       FiniteAbelianGroup((8,))))
        self.assertTrue(is_isomorphic(FiniteAbelianGroup((2, 4)),
                                      FiniteAbelianGroup((4, 2))))
        self.assertFalse(is_isomorphic(FiniteAbelianGroup((2, 2, 2)),
                                       FiniteAbelianGroup((2, 4))))
        self.assertTrue(is_isomorphic(FiniteAbelianGroup((6,)),
                                      FiniteAbelianGroup((2, 3))))

    def test_primary_decomposition(self):
        G = FiniteAbelianGroup((12, 2))
        self.assertEqual(G.primary_decomposition(), {2: [4, 2], 3: [3]})
        self.assertEqual(G.p_exponents(2), [2, 1])
        self.assertEqual(G.p_rank(2), 2)
        self.assertEqual(G.p_rank(3), 1)
        self.assertFalse(G.is_p_group())
        self.assertTrue(FiniteAbelianGroup((8, 2)).is_p_group(2))

    def test_direct_sum(self):
        S = direct_sum(FiniteAbelianGroup((2,)), FiniteAbelianGroup((4,)))
        self.assertEqual(S.moduli, (2, 4))

    def test_literals(self):
        self.assertEqual(parse_group('4,2'), self.G)
        self.assertTrue(parse_group('0').is_trivial())
        self.assertEqual(parse_elements('2,1;0,1'), [(2, 1), (0, 1)])
        self.assertEqual(str(self.G), 'Z(4) + Z(2)')
        self.assertEqual(self.G.literal(), '4,2')


class TestRelations(unittest.TestCase):

    def test_diagonal_relations(self):
        rq = group_from_relations(2, IntMatrix.from_rows([[2, 0], [0, 4]]))
        self.assertEqual(rq.group.moduli, (2, 4))

    def test_relations_from_smith_form(self):
        rq = group_from_relations(2, IntMatrix.from_rows([[2, 4], [6, 8]]))
        self.assertEqual(rq.group.moduli, (2, 4))

    def test_presentation_invariance(self):
        a = group_from_relations(2, IntMatrix.from_rows([[2, 4], [6, 8]]))
        b = group_from_relations(2, IntMatrix.from_rows([[6, 8], [2, 4]]))
        c = group_from_relations(2, IntMatrix.from_rows([[8, 12], [6, 8]]))
        self.assertEqual(a.group, b.group)
        self.assertEqual(a.group, c.group)

    def test_full_relation_kills_generator(self):
        rq = group_from_relations(1, IntMatrix.from_rows([[1]]))
        self.assertTrue(rq.group.is_trivial())

    def test_infinite_quotient(self):
        with self.assertRaises(InfiniteQuotient):
            group_from_relations(2, IntMatrix.from_rows([[2, 0]]))


class TestEnumerateGroups(unittest.TestCase):

    def test_two_groups_of_order_at_most_64(self):
        self.assertEqual(len(enumerate_groups(64, primes=[2])), 29)

    def test_all_groups_of_order_at_most_8(self):
        groups = enumerate_groups(8)
        self.assertEqual(len(groups), 10)
        self.assertEqual(groups[0].moduli, (2,))
        self.assertEqual([g.moduli for g in groups if g.order() == 8],
                         [(2, 2, 2), (2, 4), (8,)])

    def test_generator_bound(self):
        groups = enumerate_groups(16, primes=[2], max_generators=2)
        self.assertNotIn((2, 2, 2), [g.moduli for g in groups])
        self.assertIn((4, 4), [g.moduli for g in groups])


if __name__ == '__main__':
    unittest.main()
