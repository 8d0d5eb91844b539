#!/usr/bin/env python

"""Tests for `hopflab.descriptors`."""

import unittest

from hopflab.cardinals import OMEGA, ExtCard
from hopflab.config import CorpusSpec
from hopflab.corpus import generate_corpus
from hopflab.descriptors import (GroupDescriptor, TailKind, cyclic,
                                 descriptor_of_group, direct_sum,
                                 format_descriptor, group_of_descriptor,
                                 hom_vanishes, parse_descriptor, quasicyclic,
                                 standard, summand_descriptors,
                                 ulm_of_descriptor)
from hopflab.exceptions import DescriptorError, ParseError
from hopflab.group import FiniteAbelianGroup


def _d(text):
    return parse_descriptor(text)


class TestParseAndFormat(unittest.TestCase):

    def setUp(self):
        """Set up test fixtures, if any."""

    def tearDown(self):
        """Tear down test fixtures, if any."""

    def test_canonical_text(self):
        cases = {
            'Q + Z(5^inf) + Z(2^3)^4 + Z^2': 'Z^2 + Z(2^3)^4 + Z(5^inf) + Q',
            '0': '0',
            '0 + Z(3)': 'Z(3)',
            'Z(2)+B(2^2)': 'B(2)',
            'Z(2^3)+B(2)': 'Z(2) + Z(2^2) + Z(2^3)^2 + B(2^4)',
            'Z(2)^w + B(2^2)^w': 'B(2)^w',
            'B(2) + B(2)^w': 'B(2)^w',
            'Z(3) + Z(3)': 'Z(3)^2',
            'Z(2)^w + Z(2)': 'Z(2)^w',
            'Z^w + Q^2 + Z': 'Z^w + Q^2',
        }
        for text, expected in cases.items():
            self.assertEqual(format_descriptor(_d(text)), expected, text)

    def test_structure(self):
        d = _d('Z(2^3) + B(2)')
        pp = d.part(2)
        self.assertEqual(pp.mult(3), 2)
        self.assertEqual(pp.mult(10), 1)
        self.assertEqual(pp.tail.kind, TailKind.ALL_ONES)
        self.assertEqual(pp.tail.start, 4)
        self.assertTrue(pp.semi_standard())
        self.assertFalse(pp.is_bounded())

    def test_errors(self):
        with self.assertRaises(ParseError) as ctx:
            _d('Z(4)')
        self.assertEqual(ctx.exception.position, 2)
        with self.assertRaises(ParseError) as ctx:
            _d('Z(2')
        self.assertEqual(ctx.exception.position, 3)
        with self.assertRaises(ParseError) as ctx:
            _d('Z(2) + X')
        self.assertEqual(ctx.exception.position, 7)
        for bad in ('B(2)^3', 'B(2) + B(2)', 'Z(2) Z(3)', '', 'Z(2^0)'):
            with self.assertRaises(ParseError, msg=bad):
                _d(bad)

    def test_whitespace_inside_terms(self):
        cases = {
            'Z (2)': 'Z(2)',
            ' Z ( 2 ^ 3 ) ^ 4 ': 'Z(2^3)^4',
            'Z ( 2^inf )': 'Z(2^inf)',
            'Z( 5 ^ inf ) ^ w': 'Z(5^inf)^w',
            'B (2)': 'B(2)',
            'B ( 3 ^ 2 ) ^ w': 'B(3^2)^w',
            'Z ^ 2 + Q ^ 3': 'Z^2 + Q^3',
            ' 0 ': '0',
        }
        for text, expected in cases.items():
            self.assertEqual(format_descriptor(_d(text)), expected, text)
        with self.assertRaises(ParseError) as ctx:
            _d('B 2')
        self.assertEqual(ctx.exception.position, 2)

    def test_text_is_stable(self):
        for d in generate_corpus(CorpusSpec(seed=7, size=100)):
            self.assertEqual(_d(format_descriptor(d)), d, str(d))


class TestAlgebra(unittest.TestCase):

    def test_direct_sum(self):
        self.assertEqual(direct_sum(cyclic(2, 1), standard(2, 2)),
                         standard(2))
        self.assertEqual(direct_sum(), GroupDescriptor.trivial())
        with self.assertRaises(DescriptorError):
            direct_sum(standard(2), standard(2))
        self.assertEqual(direct_sum(quasicyclic(3), quasicyclic(3, OMEGA)),
                         quasicyclic(3, OMEGA))

    def test_predicates(self):
        d = _d('Z(2^inf) + Q')
        self.assertTrue(d.is_divisible())
        self.assertFalse(d.is_reduced())
        self.assertFalse(d.is_torsion_free())
        mixed = _d('Z^2 + Z(2) + Z(3^inf)')
        self.assertEqual(mixed.torsion_part(), _d('Z(2) + Z(3^inf)'))
        self.assertEqual(mixed.torsion_free_part(), _d('Z^2'))
        self.assertEqual(mixed.reduced_part(), _d('Z^2 + Z(2)'))
        self.assertEqual(mixed.divisible_part(), _d('Z(3^inf)'))
        self.assertTrue(_d('Z(2)^w').is_p_group(2))
        self.assertFalse(_d('Z(2)^w').is_finite())
        self.assertTrue(_d('Z(2)^3 + Z(5)').is_finite())

    def test_ulm_of_descriptor(self):
        u = ulm_of_descriptor(_d('B(2)'), 2)
        self.assertEqual(u.upto(5), [1, 1, 1, 1, 1])
        self.assertIsNone(u.length)
        u = ulm_of_descriptor(_d('Z(2)^3 + Z(2^3) + Z(2^inf)^w + Z(3)'), 2)
        self.assertEqual(u.upto(4), [3, 0, 1, 0])
        self.assertEqual(u.f_inf, OMEGA)
        self.assertFalse(ulm_of_descriptor(_d('B(3^2)^w'), 3).semi_standard())

    def test_hom_vanishes(self):
        cases = [
            ('Z(2)', 'Z(3)', True),
            ('Z(2)', 'Z(2^2)', False),
            ('Q', 'Z', True),
            ('Z', 'Q', False),
            ('Z(2^inf)', 'Z(2)', True),
            ('Z(2)', 'Z(2^inf)', False),
            ('Z(2^inf) + Z(3)', 'Z(3^inf) + Z', False),
            ('Q', 'Z(5^inf)', False),
            ('0', 'Z', True),
        ]
        for K, L, expected in cases:
            self.assertEqual(hom_vanishes(_d(K), _d(L)), expected, f'{K}, {L}')

    def test_summands(self):
        got = [format_descriptor(s)
               for s in summand_descriptors(_d('Z(2)^2 + Q'))]
        self.assertEqual(got, ['Z(2)^2 + Q', '0', 'Z(2)^2', 'Q', 'Z(2) + Q'])
        got = list(summand_descriptors(_d('B(2)')))
        self.assertEqual(len(got), len(set(got)))
        self.assertIn(_d('B(2^2)'), got)
        self.assertIn(_d('Z(2^4)'), got)

    def test_finite_groups(self):
        G = FiniteAbelianGroup((12, 2))
        self.assertEqual(format_descriptor(descriptor_of_group(G)),
                         'Z(2) + Z(2^2) + Z(3)')
        self.assertEqual(group_of_descriptor(_d('Z(2)^2 + Z(3)')).moduli,
                         (2, 6))
        self.assertTrue(group_of_descriptor(_d('0')).is_trivial())
        with self.assertRaises(DescriptorError):
            group_of_descriptor(_d('Q'))
        self.assertEqual(ExtCard.of(3), _d('Z(5)^3').part(5).mult(1))


if __name__ == '__main__':
    unittest.main()
