#!/usr/bin/env python

"""Tests for `hopflab.classifier`."""

import os
import unittest

import ujson

from hopflab.classifier import (CLASS_CHAIN, RULES, HopfClass,
                                HopfClassifier, Verdict, chain_violation,
                                classify, conjunction)
from hopflab.config import CorpusSpec
from hopflab.corpus import GOLDEN_TABLE, generate_corpus
from hopflab.descriptors import parse_descriptor

DATA_DIR = os.path.join(os.path.dirname(__file__), 'data')


def _classify(text):
    return classify(parse_descriptor(text))


class TestVerdicts(unittest.TestCase):

    def test_conjunction(self):
        self.assertEqual(conjunction([]), Verdict.YES)
        self.assertEqual(conjunction([Verdict.YES, Verdict.UNKNOWN]),
                         Verdict.UNKNOWN)
        self.assertEqual(conjunction([Verdict.UNKNOWN, Verdict.NO]),
                         Verdict.NO)

    def test_chain_violation(self):
        ok = {HopfClass.H: Verdict.NO, HopfClass.RH: Verdict.YES,
              HopfClass.WH: Verdict.YES, HopfClass.DF: Verdict.YES}
        self.assertIsNone(chain_violation(ok))
        bad = dict(ok)
        bad[HopfClass.DF] = Verdict.NO
        self.assertEqual(chain_violation(bad), 'RH=yes but DF=no')


class TestClassifier(unittest.TestCase):

    def setUp(self):
        """Set up test fixtures, if any."""
        with open(os.path.join(DATA_DIR, 'showcase_golden.json')) as f:
            self.golden = ujson.load(f)

    def tearDown(self):
        """Tear down test fixtures, if any."""

    def test_golden_table(self):
        self.assertEqual(set(self.golden), set(GOLDEN_TABLE))
        for text, verdicts in self.golden.items():
            report = _classify(text)
            expected = tuple(verdicts[c.value] for c in CLASS_CHAIN)
            self.assertEqual(report.row(), expected, text)
            self.assertEqual(report.row(), GOLDEN_TABLE[text], text)

    def test_trivial_group(self):
        report = _classify('0')
        self.assertTrue(report.is_all(Verdict.YES))
        self.assertEqual({e.rule for e in report.trace}, {'R-DSC'})

    def test_mixed_trace(self):
        report = _classify('Z(2^inf) + Q')
        self.assertEqual(report.row(), ('no', 'yes', 'yes', 'yes'))
        rules = [e.rule for e in report.trace]
        self.assertIn('R-SPLIT-D', rules)
        self.assertIn('R-COCYCLIC', rules)
        self.assertIn('Prop. (twosix)',
                      [e.citation for e in report.trace])
        # leaves come before the aggregate
        self.assertEqual(rules[-1], 'R-SPLIT-D')
        self.assertEqual(report.trace[-1].subterm, 'Z(2^inf) + Q')

    def test_infinite_rational_rank(self):
        report = _classify('Q^w')
        self.assertTrue(report.is_all(Verdict.NO))
        report = _classify('Z(3) + Q^w')
        self.assertTrue(report.is_all(Verdict.NO))

    def test_weakly_hopfian_torsion(self):
        self.assertEqual(_classify('Z(2)^3 + B(2^4)').row(),
                         ('no', 'no', 'yes', 'yes'))
        self.assertEqual(_classify('B(2)^w').row(), ('no', 'no', 'no', 'no'))
        self.assertEqual(_classify('B(2) + Z(3^inf)^2').row(),
                         ('no', 'no', 'yes', 'yes'))
        self.assertEqual(_classify('Z(2^inf)^w').row(),
                         ('no', 'no', 'no', 'no'))

    def test_free_part_dominates(self):
        self.assertEqual(_classify('Z^w + Z(2)').row(), ('no',) * 4)
        self.assertEqual(_classify('Z^3 + Q^2').row(), ('yes',) * 4)

    def test_dump(self):
        dumped = _classify('B(2)').dump()
        self.assertEqual(dumped['descriptor'], 'B(2)')
        self.assertEqual(dumped['verdicts'],
                         {'H': 'no', 'RH': 'no', 'WH': 'yes', 'DF': 'yes'})
        entry = dumped['trace'][0]
        self.assertEqual(set(entry),
                         {'class', 'rule', 'citation', 'subterm', 'verdict'})
        for e in dumped['trace']:
            self.assertEqual(e['citation'], RULES[e['rule']].citation)

    def test_corpus_is_decided_and_consistent(self):
        classifier = HopfClassifier()
        for d in generate_corpus(CorpusSpec(seed=11, size=200)):
            report = classifier.classify(d)
            self.assertIsNone(chain_violation(report.verdicts), str(d))
            self.assertNotIn(Verdict.UNKNOWN, report.verdicts.values())
            if d.is_finite():
                self.assertTrue(report.is_all(Verdict.YES), str(d))


if __name__ == '__main__':
    unittest.main()
