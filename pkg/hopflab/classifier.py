"""Rule-driven decision of the Hopfian (H), relatively Hopfian (RH), weakly
Hopfian (WH) and directly finite (DF) classes for group descriptors.

A descriptor splits as G = R + D (reduced + divisible) and R = T + Z^f.
Leaves are the reduced p-parts, the free part, the quasicyclic p-parts and
Q^r; verdicts of the leaves are combined upwards by conjunction.
"""

import enum
import logging
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Tuple

from pydantic import BaseModel

from hopflab.cardinals import ExtCard
from hopflab.descriptors import (GroupDescriptor, PrimaryPart,
                                 format_descriptor, free, rationals)
from hopflab.exceptions import ClassificationError

c_logger = None


class HopfClass(str, enum.Enum):
    H = 'H'
    RH = 'RH'
    WH = 'WH'
    DF = 'DF'


# H <= RH <= WH <= DF
CLASS_CHAIN: Tuple[HopfClass, ...] = (
    HopfClass.H, HopfClass.RH, HopfClass.WH, HopfClass.DF)


class Verdict(str, enum.Enum):
    YES = 'yes'
    NO = 'no'
    UNKNOWN = 'unknown'

    @classmethod
    def of(cls, value: bool) -> 'Verdict':
        return cls.YES if value else cls.NO


def conjunction(verdicts: Iterable[Verdict]) -> Verdict:
    """no beats unknown beats yes; empty conjunction is yes."""
    verdicts = list(verdicts)
    if Verdict.NO in verdicts:
        return Verdict.NO
    if Verdict.UNKNOWN in verdicts:
        return Verdict.UNKNOWN
    return Verdict.YES


@dataclass(frozen=True)
class Rule:
    name: str
    citation: str
    statement: str


RULES: Dict[str, Rule] = {r.name: r for r in (
    Rule('R-SPLIT-D', 'Cor. after Thm. (prop218)',
         'G = R + D is in a class iff R and D both are'),
    Rule('R-SPLIT-T', 'Cor. (torsionsplit)',
         'a splitting mixed group T + L is in a class iff T and L are'),
    Rule('R-PRIMARY', 'Prop. (allrel)',
         'a torsion group is in a class iff each primary component is'),
    Rule('R-DIV', 'Prop. (twosix)',
         'Q^r is Hopfian iff r is finite; not directly finite otherwise'),
    Rule('R-FREE', 'Thm. (suggestion)',
         'Z^f is in every class iff f is finite; Z^w has a Z^w summand'),
    Rule('R-DSC', 'Prop. (sums); Cor. (ulmhopfian)',
         'a direct sum of cyclic p-groups is H, equivalently RH, iff finite'),
    Rule('R-WH-TORSION', 'Thm. (torsionweak); Cor. (cor7)',
         'a p-group is WH, equivalently DF, iff every f_k (k <= inf) '
         'is finite'),
    Rule('R-COCYCLIC', 'Cor. (finiteprank); Prop. (twosix)',
         'Z(p^inf)^m is RH iff m is finite and H iff m = 0'),
    Rule('R-CONTAINMENT', 'Thm. (containments)',
         'H <= RH <= WH <= DF'),
)}


class TraceEntry(BaseModel):
    hopf_class: HopfClass
    rule: str
    citation: str
    subterm: str
    verdict: Verdict


class HopfClassReport(BaseModel):
    """HopfClassReport.
    Verdicts for the four classes and the rule applications behind them,
    leaves first.
    """
    descriptor: str
    verdicts: Dict[HopfClass, Verdict]
    trace: List[TraceEntry] = []

    def verdict(self, cls: HopfClass) -> Verdict:
        return self.verdicts[HopfClass(cls)]

    def is_all(self, verdict: Verdict) -> bool:
        return all(self.verdicts[c] == verdict for c in CLASS_CHAIN)

    def row(self) -> Tuple[str, ...]:
        return tuple(self.verdicts[c].value for c in CLASS_CHAIN)

    def dump(self) -> dict:
        return {
            'descriptor': self.descriptor,
            'verdicts': {c.value: self.verdicts[c].value for c in CLASS_CHAIN},
            'trace': [
                {'class': e.hopf_class.value, 'rule': e.rule,
                 'citation': e.citation, 'subterm': e.subterm,
                 'verdict': e.verdict.value} for e in self.trace],
        }


Verdicts = Dict[HopfClass, Verdict]


def chain_violation(verdicts: Verdicts) -> Optional[str]:
    """First violated containment, or None when the chain is consistent."""
    for i, small in enumerate(CLASS_CHAIN):
        for big in CLASS_CHAIN[i + 1:]:
            if verdicts[small] == Verdict.YES and verdicts[big] == Verdict.NO:
                return f'{small.value}=yes but {big.value}=no'
    return None


class HopfClassifier:
    """HopfClassifier.
    Stateless; one instance can classify any number of descriptors.
    """

    @classmethod
    def logger(cls) -> logging.Logger:
        global c_logger
        if c_logger is None:
            c_logger = logging.getLogger(__name__)
        return c_logger

    def __init__(self, debug: bool = False):
        self._debug = debug

    @property
    def log(self):
        return self.logger()

    @property
    def debug(self):
        return self._debug

    def classify(self, d: GroupDescriptor) -> HopfClassReport:
        """classify.

        Args:
            d (GroupDescriptor): descriptor

        Raises:
            ClassificationError: if a derived report breaks the containment
                chain
        """
        trace: List[TraceEntry] = []
        if d.is_trivial():
            verdicts = self._decide(trace, 'R-DSC', d, {
                c: Verdict.YES for c in CLASS_CHAIN})
        else:
            reduced = self._reduced(trace, d)
            divisible = self._divisible(trace, d)
            verdicts = self._combine(trace, 'R-SPLIT-D', d,
                                     [reduced, divisible])
        violation = chain_violation(verdicts)
        if violation is not None:
            raise ClassificationError(
                f'{format_descriptor(d)}: {violation}', errors=verdicts)
        return HopfClassReport(descriptor=format_descriptor(d),
                               verdicts=verdicts, trace=trace)

    def _record(self, trace: List[TraceEntry], rule: str,
                subterm: GroupDescriptor, cls: HopfClass,
                verdict: Verdict) -> None:
        text = format_descriptor(subterm)
        if self.debug:
            self.log.debug(f'{rule} on {text}: {cls.value}={verdict.value}')
        trace.append(TraceEntry(hopf_class=cls, rule=rule,
                                citation=RULES[rule].citation,
                                subterm=text, verdict=verdict))

    def _decide(self, trace: List[TraceEntry], rule: str,
                subterm: GroupDescriptor, decided: Verdicts) -> Verdicts:
        """Record a leaf rule, then derive the undecided classes along the
        containment chain.
        """
        for cls, verdict in decided.items():
            self._record(trace, rule, subterm, cls, verdict)
        out = dict(decided)
        for i, cls in enumerate(CLASS_CHAIN):
            if cls in out:
                continue
            smaller_yes = any(out.get(c) == Verdict.YES
                              for c in CLASS_CHAIN[:i])
            bigger_no = any(out.get(c) == Verdict.NO
                            for c in CLASS_CHAIN[i + 1:])
            if smaller_yes or bigger_no:
                out[cls] = Verdict.YES if smaller_yes else Verdict.NO
                self._record(trace, 'R-CONTAINMENT', subterm, cls, out[cls])
        for cls in CLASS_CHAIN:
            out.setdefault(cls, Verdict.UNKNOWN)
        return out

    def _combine(self, trace: List[TraceEntry], rule: str,
                 subterm: GroupDescriptor,
                 children: List[Optional[Verdicts]]) -> Verdicts:
        present = [c for c in children if c is not None]
        out = {cls: conjunction(c[cls] for c in present)
               for cls in CLASS_CHAIN}
        for cls in CLASS_CHAIN:
            self._record(trace, rule, subterm, cls, out[cls])
        return out

    def _reduced_p_part(self, trace: List[TraceEntry],
                        pp: PrimaryPart) -> Verdicts:
        sub = GroupDescriptor(primary=(pp,))
        finite = pp.is_finite()
        decided = {HopfClass.H: Verdict.of(finite),
                   HopfClass.RH: Verdict.of(finite)}
        out = self._decide(trace, 'R-DSC', sub, decided)
        if out[HopfClass.WH] == Verdict.UNKNOWN:
            self._weakly(trace, sub, out, pp.semi_standard())
        return out

    def _weakly(self, trace: List[TraceEntry], sub: GroupDescriptor,
                out: Verdicts, finite_ulm: bool) -> None:
        wh = Verdict.of(finite_ulm)
        for cls in (HopfClass.WH, HopfClass.DF):
            self._record(trace, 'R-WH-TORSION', sub, cls, wh)
            out[cls] = wh

    def _reduced(self, trace: List[TraceEntry],
                 d: GroupDescriptor) -> Optional[Verdicts]:
        parts = [pp.reduced() for pp in d.primary
                 if not pp.reduced().is_zero()]
        torsion: Optional[Verdicts] = None
        if parts:
            leaves = [self._reduced_p_part(trace, pp) for pp in parts]
            torsion = self._combine(
                trace, 'R-PRIMARY', GroupDescriptor(primary=tuple(parts)),
                leaves)
        free_part: Optional[Verdicts] = None
        if not d.free_rank.is_zero:
            ok = Verdict.of(d.free_rank.is_finite)
            free_part = self._decide(trace, 'R-FREE', free(d.free_rank),
                                     {c: ok for c in CLASS_CHAIN})
        if torsion is None and free_part is None:
            return None
        return self._combine(trace, 'R-SPLIT-T', d.reduced_part(),
                             [torsion, free_part])

    def _quasicyclic(self, trace: List[TraceEntry], p: int,
                     m: ExtCard) -> Verdicts:
        sub = GroupDescriptor(
            primary=(PrimaryPart.build(p, divisible_rank=m),))
        decided = {HopfClass.H: Verdict.NO,
                   HopfClass.RH: Verdict.of(m.is_finite)}
        out = self._decide(trace, 'R-COCYCLIC', sub, decided)
        if out[HopfClass.WH] == Verdict.UNKNOWN:
            self._weakly(trace, sub, out, m.is_finite)
        return out

    def _divisible(self, trace: List[TraceEntry],
                   d: GroupDescriptor) -> Optional[Verdicts]:
        leaves = [self._quasicyclic(trace, pp.prime, pp.divisible_rank)
                  for pp in d.primary if not pp.divisible_rank.is_zero]
        if not d.q_rank.is_zero:
            r = d.q_rank
            if r.is_finite:
                leaves.append(self._decide(trace, 'R-DIV', rationals(r),
                                           {HopfClass.H: Verdict.YES}))
            else:
                leaves.append(self._decide(trace, 'R-DIV', rationals(r), {
                    c: Verdict.NO for c in CLASS_CHAIN}))
        if not leaves:
            return None
        return self._combine(trace, 'R-DIV', d.divisible_part(), leaves)


def classify(d: GroupDescriptor) -> HopfClassReport:
    return HopfClassifier().classify(d)
