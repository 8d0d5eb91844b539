#!/usr/bin/env python

"""Tests for `hopflab.structure`."""

import unittest

from hopflab.cardinals import INFINITY, ExtCard
from hopflab.exceptions import BoundExceeded, PreconditionViolated
from hopflab.group import FiniteAbelianGroup, enumerate_groups, is_isomorphic
from hopflab.hom import (Homomorphism, Subgroup, enumerate_homs,
                         enumerate_subgroups, is_surjective, power_subgroup)
from hopflab.structure import (UlmInvariants, brute_ulm, extend_epi,
                               hzero_split_construct, is_pure, min_height,
                               p_height, ulm_invariants)

Z4 = FiniteAbelianGroup((4,))
Z8 = FiniteAbelianGroup((8,))
G42 = FiniteAbelianGroup((4, 2))


class TestHeights(unittest.TestCase):

    def setUp(self):
        """Set up test fixtures, if any."""

    def tearDown(self):
        """Tear down test fixtures, if any."""

    def test_p_height(self):
        self.assertEqual(p_height(Z8, (4,), 2), 2)
        self.assertEqual(p_height(Z8, (1,), 2), 0)
        self.assertEqual(p_height(G42, (2, 0), 2), 1)
        self.assertEqual(p_height(G42, (2, 1), 2), 0)
        self.assertIs(p_height(Z8, (0,), 2), INFINITY)
        # the 2-part of 2 in Z(6) is zero
        self.assertIs(p_height(FiniteAbelianGroup((6,)), (2,), 2), INFINITY)
        self.assertEqual(p_height(FiniteAbelianGroup((6,)), (3,), 2), 0)

    def test_height_matches_definition(self):
        for G in enumerate_groups(16, primes=[2]):
            layers = []
            k = 0
            while True:
                layer = {G.scale(2 ** k, x) for x in G.elements()}
                layers.append(layer)
                if len(layer) == 1:
                    break
                k += 1
            for x in G.elements():
                if not any(x):
                    continue
                expected = max(j for j, layer in enumerate(layers)
                               if x in layer)
                self.assertEqual(p_height(G, x, 2), expected)

    def test_min_height(self):
        self.assertEqual(min_height(Z4, Subgroup.generated(Z4, [(2,)]), 2), 1)
        G24 = FiniteAbelianGroup((2, 4))
        self.assertEqual(min_height(G24, Subgroup.generated(G24, [(1, 0)]), 2),
                         0)
        self.assertEqual(min_height(Z8, Subgroup.generated(Z8, [(4,)]), 2), 2)
        self.assertEqual(min_height(Z8, Subgroup.whole(Z8), 2), 0)
        self.assertIs(min_height(Z8, Subgroup.trivial(Z8), 2), INFINITY)

    def test_purity(self):
        self.assertFalse(is_pure(Z4, Subgroup.generated(Z4, [(2,)])))
        self.assertTrue(is_pure(Z4, Subgroup.trivial(Z4)))
        self.assertTrue(is_pure(Z4, Subgroup.whole(Z4)))
        self.assertTrue(is_pure(G42, Subgroup.generated(G42, [(0, 1)])))
        self.assertTrue(is_pure(G42, Subgroup.generated(G42, [(2, 1)])))
        self.assertFalse(is_pure(G42, Subgroup.generated(G42, [(2, 0)])))


    def test_homomorphisms_do_not_lower_heights(self):
        for G in enumerate_groups(8, primes=[2]):
            for K in enumerate_groups(8, primes=[2]):
                for h in enumerate_homs(G, K):
                    for x in G.elements():
                        self.assertGreaterEqual(p_height(K, h(x), 2),
                                                p_height(G, x, 2))


class TestUlmInvariants(unittest.TestCase):

    def test_closed_form(self):
        u = ulm_invariants(FiniteAbelianGroup((2, 8)), 2)
        self.assertEqual(u.upto(4), [1, 0, 1, 0])
        self.assertEqual(u.length, 3)
        self.assertTrue(u.semi_standard())
        u = ulm_invariants(FiniteAbelianGroup((2, 4, 4)), 2)
        self.assertEqual(u.f(0), 1)
        self.assertEqual(u.f(1), 2)
        self.assertEqual(ulm_invariants(FiniteAbelianGroup((9,)), 2).length, 0)

    def test_brute_force_agrees(self):
        for G in enumerate_groups(64):
            for p in (2, 3):
                self.assertEqual(brute_ulm(G, p), ulm_invariants(G, p), str(G))

    def test_brute_force_bound(self):
        with self.assertRaises(BoundExceeded):
            brute_ulm(FiniteAbelianGroup((32, 32)), 2, max_order=512)

    def test_tail(self):
        u = UlmInvariants.build(2, {0: 3, 4: 2}, tail_start=2,
                                tail_value=ExtCard(None))
        self.assertEqual(u.values, ((0, ExtCard(3)),))
        self.assertTrue(u.f(7).is_infinite)
        self.assertIsNone(u.length)
        self.assertFalse(u.semi_standard())
        self.assertEqual(u.dump()['tail'], {'from': 2, 'value': 'w'})


class TestConstructions(unittest.TestCase):

    def test_hzero_split_summand(self):
        H = Subgroup.generated(G42, [(0, 1)])
        split = hzero_split_construct(G42, H, 2)
        self.assertTrue(split.N.is_trivial())
        self.assertEqual(split.A.moduli, (2,))
        self.assertTrue(is_isomorphic(split.X, Z4))

    def test_hzero_split_cyclic_factor(self):
        G = FiniteAbelianGroup((2, 4))
        split = hzero_split_construct(G, Subgroup.generated(G, [(1, 0)]), 2)
        self.assertTrue(split.N.is_trivial())
        self.assertEqual(split.A.moduli, (2,))
        self.assertTrue(is_isomorphic(split.X, Z4))
        Z2 = FiniteAbelianGroup((2,))
        split = hzero_split_construct(Z2, Subgroup.whole(Z2), 2)
        self.assertTrue(split.N.is_trivial())
        self.assertTrue(split.X.is_trivial())

    def test_hzero_split_whole(self):
        split = hzero_split_construct(Z8, Subgroup.whole(Z8), 2)
        self.assertEqual(split.N, Subgroup.generated(Z8, [(2,)]))
        self.assertEqual(split.A.moduli, (2,))
        self.assertTrue(split.X.is_trivial())

    def test_hzero_split_every_subgroup(self):
        G = FiniteAbelianGroup((2, 4, 8))
        for H in enumerate_subgroups(G):
            if min_height(G, H, 2) != 0:
                continue
            split = hzero_split_construct(G, H, 2)
            self.assertEqual(split.N.order() * split.A.order(), H.order())

    def test_hzero_split_precondition(self):
        with self.assertRaises(PreconditionViolated):
            hzero_split_construct(Z8, Subgroup.generated(Z8, [(4,)]), 2)
        with self.assertRaises(PreconditionViolated):
            hzero_split_construct(Z8, Subgroup.trivial(Z8), 2)

    def _check_extension(self, T, k, phi):
        gamma = extend_epi(T, k, phi)
        _, emb = power_subgroup(T, 2, k)
        self.assertTrue(is_surjective(gamma))
        self.assertEqual(gamma.compose(emb), emb.compose(phi))
        return gamma

    def test_extend_identity(self):
        for moduli in ((4,), (2, 4), (4, 8)):
            T = FiniteAbelianGroup(moduli)
            P, _ = power_subgroup(T, 2, 1)
            self._check_extension(T, 1, Homomorphism.identity(P))

    def test_extend_level_zero(self):
        phi = Homomorphism.multiplication(Z4, 3)
        self.assertEqual(extend_epi(Z4, 0, phi), phi)

    def test_extend_twisted(self):
        T = FiniteAbelianGroup((4, 8))
        P, _ = power_subgroup(T, 2, 1)
        self.assertEqual(P.moduli, (2, 4))
        phi = Homomorphism(P, P, ((1, 2), (0, 1)))
        self._check_extension(T, 1, phi)

    def test_extend_every_automorphism(self):
        T = FiniteAbelianGroup((2, 8))
        P, _ = power_subgroup(T, 2, 1)
        for u in (1, 3):
            self._check_extension(T, 1, Homomorphism.multiplication(P, u))

    def test_extend_preconditions(self):
        P, _ = power_subgroup(Z8, 2, 1)
        with self.assertRaises(PreconditionViolated):
            extend_epi(Z8, 1, Homomorphism.multiplication(P, 2))
        with self.assertRaises(PreconditionViolated):
            extend_epi(Z8, 1, Homomorphism.identity(Z8))
        with self.assertRaises(PreconditionViolated):
            extend_epi(Z8, -1, Homomorphism.identity(Z8))
        Z6 = FiniteAbelianGroup((6,))
        with self.assertRaises(PreconditionViolated):
            extend_epi(Z6, 0, Homomorphism.identity(Z6))


if __name__ == '__main__':
    unittest.main()
