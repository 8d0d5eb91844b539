"""Property suites for the descriptor classifier, run over a seeded corpus."""

from typing import List, Optional, Tuple

from hopflab.classifier import (CLASS_CHAIN, HopfClass, HopfClassifier,
                                HopfClassReport, Verdict, chain_violation,
                                conjunction)
from hopflab.config import CorpusSpec
from hopflab.corpus import GOLDEN_TABLE, generate_corpus
from hopflab.descriptors import (GroupDescriptor, descriptor_of_group,
                                 direct_sum, format_descriptor, hom_vanishes,
                                 parse_descriptor, summand_descriptors)
from hopflab.exceptions import ClassificationError, DescriptorError
from hopflab.group import enumerate_groups
from hopflab.suites.base_suite import BaseSuite, CheckOutcome


class _CorpusSuite(BaseSuite):
    """Instances are the showcase set plus `size` seeded descriptors."""
    DEFAULT_MAX_ORDER = 8
    DEFAULT_SIZE = 1000

    def __init__(self, *args, corpus: Optional[CorpusSpec] = None, **kwargs):
        super().__init__(*args, **kwargs)
        base = corpus if corpus is not None else CorpusSpec()
        self._corpus = base.copy(update={'seed': self.bounds.seed,
                                         'size': self.bounds.size})
        self._classifier = HopfClassifier(debug=self.debug)

    def instances(self) -> List[GroupDescriptor]:
        return generate_corpus(self._corpus)

    def classify(self, d: GroupDescriptor) -> HopfClassReport:
        return self._classifier.classify(d)


class ChainSuite(_CorpusSuite):
    """Containment chain, no unknown verdicts, and H = RH = WH on
    torsion-free descriptors."""
    name = 'chain'
    citation = 'Thm. (containments); Cor. (cor2.4)'
    DEFAULT_SIZE = 500

    def check(self, d: GroupDescriptor) -> CheckOutcome:
        out = CheckOutcome(checked=1)
        where = format_descriptor(d)
        try:
            report = self.classify(d)
        except ClassificationError as exc:
            out.fail(where, 'consistent chain', str(exc))
            return out
        row = list(report.row())
        if chain_violation(report.verdicts) is not None or \
                Verdict.UNKNOWN.value in row:
            out.fail(where, 'consistent chain without unknown', row)
        if d.is_torsion_free():
            out.checked += 1
            if len({report.verdict(c) for c in CLASS_CHAIN[:3]}) != 1:
                out.fail(where, 'H = RH = WH', row)
        return out


class SummandClosureSuite(_CorpusSuite):
    """Every class is closed under direct summands."""
    name = 'summand-closure'
    citation = 'Prop. (prop3)'

    def check(self, d: GroupDescriptor) -> CheckOutcome:
        out = CheckOutcome()
        report = self.classify(d)
        for s in summand_descriptors(d):
            sub = self.classify(s)
            out.checked += 1
            for c in CLASS_CHAIN:
                if report.verdict(c) == Verdict.YES and \
                        sub.verdict(c) != Verdict.YES:
                    out.fail(f'{format_descriptor(d)} > {sub.descriptor}',
                             f'{c.value}=yes', sub.verdict(c).value)
        return out


def semirigid_splits(d: GroupDescriptor) -> List[Tuple[GroupDescriptor,
                                                       GroupDescriptor]]:
    """Decompositions d = K + L with Hom(K, L) = 0 by construction."""
    pairs = [(d.torsion_part(), d.torsion_free_part()),
             (d.divisible_part(), d.reduced_part())]
    T = d.torsion_part()
    for p in d.primes():
        rest = GroupDescriptor(primary=tuple(
            pp for pp in T.primary if pp.prime != p))
        pairs.append((T.primary_component(p), rest))
        pp = d.part(p)
        pairs.append((GroupDescriptor(primary=(pp.divisible(),)),
                      GroupDescriptor(primary=(pp.reduced(),))))
    return pairs


class SemirigidSuite(_CorpusSuite):
    """class(K + L) = class(K) and class(L) when Hom(K, L) = 0."""
    name = 'semirigid'
    citation = 'Thm. (prop218)'

    def instances(self) -> List[Tuple[GroupDescriptor, GroupDescriptor]]:
        corpus = super().instances()
        pairs = [kl for d in corpus for kl in semirigid_splits(d)]
        pairs += list(zip(corpus, corpus[1:]))
        return pairs

    def check(self, pair) -> CheckOutcome:
        K, L = pair
        out = CheckOutcome()
        if not hom_vanishes(K, L):
            return out
        try:
            S = direct_sum(K, L)
        except DescriptorError:
            return out
        out.checked = 1
        rk, rl, rs = self.classify(K), self.classify(L), self.classify(S)
        for c in CLASS_CHAIN:
            want = conjunction([rk.verdict(c), rl.verdict(c)])
            if rs.verdict(c) != want:
                out.fail(f'K={rk.descriptor} L={rl.descriptor}',
                         f'{c.value}={want.value}', rs.verdict(c).value)
        return out


def finite_p_descriptors(p: int, max_order: int) -> List[GroupDescriptor]:
    return [descriptor_of_group(B)
            for B in enumerate_groups(max_order, primes=[p])]


class DirsumSuite(_CorpusSuite):
    """A + B is relatively Hopfian for relatively Hopfian p-groups A and
    finite p-groups B."""
    name = 'dirsum'
    citation = 'Prop. (dirsum)'

    def check(self, d: GroupDescriptor) -> CheckOutcome:
        out = CheckOutcome()
        for p in d.primes():
            A = d.primary_component(p)
            if self.classify(A).verdict(HopfClass.RH) != Verdict.YES:
                continue
            for B in finite_p_descriptors(p, self.bounds.max_order):
                out.checked += 1
                got = self.classify(direct_sum(A, B)).verdict(HopfClass.RH)
                if got != Verdict.YES:
                    out.fail(f'A={format_descriptor(A)} '
                             f'B={format_descriptor(B)}', 'RH=yes', got.value)
        return out


class CountFiniteSuite(_CorpusSuite):
    """A reduced relatively Hopfian p-group is finite."""
    name = 'count-finite'
    citation = 'Prop. (count)'

    def check(self, d: GroupDescriptor) -> CheckOutcome:
        out = CheckOutcome()
        for p in d.primes():
            reduced = d.primary_component(p).reduced_part()
            for A in summand_descriptors(reduced):
                if not A.is_reduced():
                    continue
                out.checked += 1
                rh = self.classify(A).verdict(HopfClass.RH)
                if rh == Verdict.YES and not A.is_finite():
                    out.fail(format_descriptor(A), 'finite', 'infinite')
        return out


class GoldenSuite(BaseSuite):
    """The showcase classification table."""
    name = 'golden'
    citation = 'showcase table'
    DEFAULT_MAX_ORDER = 1

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self._classifier = HopfClassifier(debug=self.debug)

    def instances(self) -> List[str]:
        return list(GOLDEN_TABLE)

    def check(self, text: str) -> CheckOutcome:
        out = CheckOutcome(checked=1)
        row = list(self._classifier.classify(parse_descriptor(text)).row())
        if row != list(GOLDEN_TABLE[text]):
            out.fail(text, list(GOLDEN_TABLE[text]), row)
        return out
