"""Verification suites over the finite engine.

Every suite enumerates groups in canonical order (order, then invariant
factors) and reports the falsified instances it finds.
"""

from itertools import product
from math import prod
from typing import List, Tuple

from hopflab.classifier import HopfClassifier, Verdict
from hopflab.descriptors import descriptor_of_group
from hopflab.exceptions import ConstructionError, PreconditionViolated
from hopflab.group import (FiniteAbelianGroup, direct_sum, enumerate_groups,
                           is_isomorphic)
from hopflab.hom import (Subgroup, count_homs, enumerate_subgroups,
                         find_split_surjection, homs_within, is_surjective,
                         kernel, power_subgroup, quotient,
                         surjective_endomorphisms)
from hopflab.reports import ControlResult
from hopflab.structure import (brute_ulm, extend_epi, hzero_split_construct,
                               is_pure, min_height, ulm_invariants)
from hopflab.suites.base_suite import BaseSuite, CheckOutcome
from hopflab.utils import is_prime

DEFAULT_SUBGROUP_ORDER = 64
DEFAULT_HOM_ORDER = 32


def _g(G: FiniteAbelianGroup) -> str:
    return G.literal() or '0'


def _h(H: Subgroup) -> str:
    return H.literal() or '0'


def _prime(G: FiniteAbelianGroup) -> int:
    return G.primes()[0]


def ulm_additivity(G: FiniteAbelianGroup, N: Subgroup,
                   p: int) -> Tuple[List[int], List[int]]:
    """f_k(G) and f_k(G/N) + f_k(N) for k below the p-length of G."""
    length = max(G.p_exponents(p), default=0)
    fG = ulm_invariants(G, p)
    fQ = ulm_invariants(quotient(G, N).group, p)
    fN = ulm_invariants(N.to_group(), p)
    lhs = [v.dump() for v in fG.upto(length)]
    rhs = [(a + b).dump() for a, b in zip(fQ.upto(length), fN.upto(length))]
    return lhs, rhs


class _PGroupSuite(BaseSuite):
    """Instances are the p-groups of order <= max_order for the configured
    primes."""

    def instances(self) -> List[FiniteAbelianGroup]:
        return enumerate_groups(self.bounds.max_order,
                                primes=self.bounds.primes)

    def subgroups(self, G: FiniteAbelianGroup):
        return enumerate_subgroups(G, self.bounds.max_subgroup_order)


class LemmaGoodSuite(_PGroupSuite):
    """f_k(G) = f_k(G/N) + f_k(N) for every pure subgroup N."""
    name = 'lemma-good'
    citation = 'Lemma (good)'
    DEFAULT_MAX_ORDER = DEFAULT_SUBGROUP_ORDER

    def check(self, G: FiniteAbelianGroup) -> CheckOutcome:
        out = CheckOutcome()
        p = _prime(G)
        for N in self.subgroups(G):
            if not is_pure(G, N):
                continue
            lhs, rhs = ulm_additivity(G, N, p)
            out.checked += 1
            if lhs != rhs:
                out.fail(f'G={_g(G)} N={_h(N)} p={p}', lhs, rhs)
        return out

    def controls(self) -> List[ControlResult]:
        G = FiniteAbelianGroup((4,))
        N = Subgroup.generated(G, [(2,)])
        lhs, rhs = ulm_additivity(G, N, 2)
        return [ControlResult(
            name='non-pure-subgroup',
            instance=f'G={_g(G)} N={_h(N)} p=2 pure={is_pure(G, N)}',
            expected='f_k(G) != f_k(G/N) + f_k(N)',
            observed={'f(G)': lhs, 'f(G/N)+f(N)': rhs},
            passed=lhs != rhs and not is_pure(G, N))]


class PropSizeSuite(_PGroupSuite):
    """r_p(C) <= r_p(T) and r_p(T/C) <= r_p(T) for every subgroup C of a
    p-group T."""
    name = 'prop-size'
    citation = 'Prop. (size)'
    DEFAULT_MAX_ORDER = 256

    def instances(self) -> List[FiniteAbelianGroup]:
        return [G for G in super().instances()
                if G.rank <= self.bounds.max_generators]

    def check(self, T: FiniteAbelianGroup) -> CheckOutcome:
        out = CheckOutcome()
        p = _prime(T)
        r = T.p_rank(p)
        for C in self.subgroups(T):
            rc = C.to_group().p_rank(p)
            rq = quotient(T, C).group.p_rank(p)
            out.checked += 1
            if rc > r or rq > r:
                out.fail(f'T={_g(T)} C={_h(C)} p={p}', f'r_p <= {r}',
                         {'C': rc, 'T/C': rq})
        return out


def closed_form_hom_count(G: FiniteAbelianGroup, K: FiniteAbelianGroup,
                          p: int) -> int:
    """prod over elementary divisors p^a of G and p^b of K of p^min(a, b)."""
    return prod(p ** min(a, b)
                for a in G.p_exponents(p) for b in K.p_exponents(p))


class _PairSuite(BaseSuite):
    """Instances are pairs of p-groups for the same prime."""
    DEFAULT_MAX_ORDER = DEFAULT_HOM_ORDER

    def instances(self) -> List[Tuple[FiniteAbelianGroup, FiniteAbelianGroup]]:
        groups = enumerate_groups(self.bounds.max_order,
                                  primes=self.bounds.primes)
        return [(G, K) for G in groups for K in groups
                if _prime(G) == _prime(K)]


class HomCountSuite(_PairSuite):
    """Enumerated |Hom(G, K)| against the closed form."""
    name = 'hom-count'
    citation = 'Hom(Z(p^a), Z(p^b)) = Z(p^min(a,b))'

    def check(self, pair) -> CheckOutcome:
        G, K = pair
        p = _prime(G)
        out = CheckOutcome(checked=1)
        expected = closed_form_hom_count(G, K, p)
        if K.order() ** G.rank <= self.bounds.max_homs:
            # every tuple of images, kept when it respects the relations
            found = sum(
                1 for imgs in product(list(K.elements()), repeat=G.rank)
                if all(not any(K.scale(m, y))
                       for m, y in zip(G.moduli, imgs)))
        else:
            # each relation constrains one image, so the tuples that pass
            # are the product of the per-generator solution sets
            found = prod(
                sum(1 for y in K.elements() if not any(K.scale(m, y)))
                for m in G.moduli)
        if found != expected:
            out.fail(f'G={_g(G)} K={_g(K)}', expected, found)
        return out


class FirstIsoSuite(_PairSuite):
    """G / ker h ~ im h and |ker h| |im h| = |G|."""
    name = 'first-iso'
    citation = 'first isomorphism theorem'
    DEFAULT_MAX_HOMS = 2 ** 17

    def check(self, pair) -> CheckOutcome:
        G, K = pair
        out = CheckOutcome()
        homs, exhaustive = homs_within(G, K, self.bounds.max_homs,
                                       self.bounds.seed)
        out.sampled = 0 if exhaustive else 1
        for h in homs:
            ker = kernel(h)
            im = h.image()
            out.checked += 1
            if ker.order() * im.order() != G.order() or \
                    not is_isomorphic(quotient(G, ker).group, im.to_group()):
                out.fail(f'G={_g(G)} K={_g(K)} h={h}',
                         f'G/ker ~ im, |G|={G.order()}',
                         f'|ker|={ker.order()} |im|={im.order()}')
            elif any(any(h(b)) for b in ker.basis()):
                out.fail(f'G={_g(G)} K={_g(K)} h={h}', 'h(ker) = 0',
                         _h(ker))
        return out


class HzeroSplitSuite(BaseSuite):
    """G/N ~ X + A and X ~ G/H whenever min height of H is 0, for every
    prime dividing |G|."""
    name = 'hzero-split'
    citation = 'Lemma (hzero)'
    DEFAULT_MAX_ORDER = DEFAULT_SUBGROUP_ORDER

    def instances(self) -> List[FiniteAbelianGroup]:
        return enumerate_groups(self.bounds.max_order)

    def check(self, G: FiniteAbelianGroup) -> CheckOutcome:
        out = CheckOutcome()
        for H in enumerate_subgroups(G, self.bounds.max_subgroup_order):
            if H.is_trivial():
                continue
            for p in G.primes():
                if min_height(G, H, p) != 0:
                    continue
                out.checked += 1
                try:
                    hzero_split_construct(G, H, p)
                except (ConstructionError, PreconditionViolated) as exc:
                    out.fail(f'G={_g(G)} H={_h(H)} p={p}',
                             'G/N ~ X + A, X ~ G/H', str(exc))
        return out


class ExtendEpiSuite(_PGroupSuite):
    """Every epimorphism of p^kT extends to an epimorphism of T."""
    name = 'extend-epi'
    citation = 'Lemma (extending)'
    DEFAULT_MAX_ORDER = DEFAULT_HOM_ORDER

    def check(self, T: FiniteAbelianGroup) -> CheckOutcome:
        out = CheckOutcome()
        p = _prime(T)
        for k in self.bounds.levels:
            P, emb = power_subgroup(T, p, k)
            homs, exhaustive = homs_within(P, P, self.bounds.max_homs,
                                           self.bounds.seed)
            out.sampled += 0 if exhaustive else 1
            for phi in homs:
                if not is_surjective(phi):
                    continue
                out.checked += 1
                where = f'T={_g(T)} k={k} phi={phi}'
                try:
                    gamma = extend_epi(T, k, phi, p)
                except (ConstructionError, PreconditionViolated) as exc:
                    out.fail(where, 'extending epimorphism', str(exc))
                    continue
                restricted = gamma.compose(emb)
                if not is_surjective(gamma) or \
                        restricted.images != emb.compose(phi).images:
                    out.fail(where, 'extending epimorphism', str(gamma))
        return out


class FiniteHopfSuite(BaseSuite):
    """Finite groups: no surjective endomorphism with nonzero kernel, and the
    classifier agrees (all classes yes).

    End(G) is the product of the endomorphism rings of the primary
    components and both properties hold componentwise, so the surjections
    are enumerated exhaustively one component at a time.
    """
    name = 'finite-hopf'
    citation = 'Prop. (sums)'
    DEFAULT_MAX_ORDER = DEFAULT_HOM_ORDER

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self._classifier = HopfClassifier(debug=self.debug)

    def instances(self) -> List[FiniteAbelianGroup]:
        return enumerate_groups(self.bounds.max_order)

    def check(self, G: FiniteAbelianGroup) -> CheckOutcome:
        out = CheckOutcome(checked=1)
        for p in G.primes():
            P = FiniteAbelianGroup(tuple(p ** a for a in G.p_exponents(p)))
            for h, injective in surjective_endomorphisms(P, p):
                out.checked += 1
                if not injective:
                    out.fail(f'G={_g(G)} p={p} h={h}', 'trivial kernel',
                             _h(kernel(h)))
        report = self._classifier.classify(descriptor_of_group(G))
        if not report.is_all(Verdict.YES):
            out.fail(f'G={_g(G)} classify', 'all yes', list(report.row()))
        return out


class CharacterizeSuite(BaseSuite):
    """No surjection G -> G + Z(p) for finite G."""
    name = 'characterize'
    citation = 'Definition (relatively Hopfian)'
    DEFAULT_MAX_ORDER = DEFAULT_HOM_ORDER

    def instances(self) -> List[Tuple[FiniteAbelianGroup, int]]:
        out = []
        for G in enumerate_groups(self.bounds.max_order):
            primes = list(G.primes())
            q = 2
            while q in primes or not is_prime(q):
                q += 1
            out.extend((G, p) for p in primes + [q])
        return out

    def check(self, instance) -> CheckOutcome:
        G, p = instance
        A = FiniteAbelianGroup((p,))
        out = CheckOutcome(checked=1)
        where = f'G={_g(G)} A=Z({p})'
        if count_homs(G, direct_sum(G, A)) <= self.bounds.max_homs:
            h = find_split_surjection(G, A, self.bounds.max_homs)
            if h is not None:
                out.fail(where, 'no surjection G -> G + A', str(h))
            return out
        out.sampled = 1
        homs, _ = homs_within(G, direct_sum(G, A), self.bounds.max_homs,
                              self.bounds.seed)
        for h in homs:
            if is_surjective(h):
                out.fail(where, 'no surjection G -> G + A', str(h))
                break
        return out


class UlmOracleSuite(_PGroupSuite):
    """Closed-form Ulm invariants against literal socle layers."""
    name = 'ulm-oracle'
    citation = 'f_n(G) = rank((p^nG)[p] / (p^(n+1)G)[p])'
    DEFAULT_MAX_ORDER = 1024

    def check(self, G: FiniteAbelianGroup) -> CheckOutcome:
        p = _prime(G)
        out = CheckOutcome(checked=1)
        fast = ulm_invariants(G, p)
        slow = brute_ulm(G, p, max(self.bounds.max_order, G.order()))
        if fast != slow:
            out.fail(f'G={_g(G)} p={p}', slow.dump(), fast.dump())
        return out
