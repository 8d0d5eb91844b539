from enum import Enum
from typing import List, Optional, Type

from hopflab.config import CorpusSpec, SuiteBounds
from hopflab.exceptions import UnknownSuite
from hopflab.reports import VerificationReport
from hopflab.suites.base_suite import (BaseSuite, CheckOutcome,  # noqa: F401
                                       SuiteRunner)


class SuiteType(Enum):
    """SuiteType.
    Names of the supported verification suites.
    """
    LemmaGood = 'lemma-good'
    PropSize = 'prop-size'
    HomCount = 'hom-count'
    FirstIso = 'first-iso'
    HzeroSplit = 'hzero-split'
    ExtendEpi = 'extend-epi'
    Chain = 'chain'
    SummandClosure = 'summand-closure'
    Semirigid = 'semirigid'
    Dirsum = 'dirsum'
    CountFinite = 'count-finite'
    FiniteHopf = 'finite-hopf'
    UlmOracle = 'ulm-oracle'
    Golden = 'golden'
    Characterize = 'characterize'


SUITE_NAMES: List[str] = [s.value for s in SuiteType]

CORPUS_SUITES = (SuiteType.Chain, SuiteType.SummandClosure,
                 SuiteType.Semirigid, SuiteType.Dirsum,
                 SuiteType.CountFinite)


def suite_factory(stype: SuiteType) -> Type[BaseSuite]:
    """suite_factory.
    Suite class for a suite type.

    Args:
        stype (SuiteType): Suite type
    """
    import hopflab.suites.finite as finite
    import hopflab.suites.symbolic as symbolic
    return {
        SuiteType.LemmaGood: finite.LemmaGoodSuite,
        SuiteType.PropSize: finite.PropSizeSuite,
        SuiteType.HomCount: finite.HomCountSuite,
        SuiteType.FirstIso: finite.FirstIsoSuite,
        SuiteType.HzeroSplit: finite.HzeroSplitSuite,
        SuiteType.ExtendEpi: finite.ExtendEpiSuite,
        SuiteType.FiniteHopf: finite.FiniteHopfSuite,
        SuiteType.UlmOracle: finite.UlmOracleSuite,
        SuiteType.Characterize: finite.CharacterizeSuite,
        SuiteType.Chain: symbolic.ChainSuite,
        SuiteType.SummandClosure: symbolic.SummandClosureSuite,
        SuiteType.Semirigid: symbolic.SemirigidSuite,
        SuiteType.Dirsum: symbolic.DirsumSuite,
        SuiteType.CountFinite: symbolic.CountFiniteSuite,
        SuiteType.Golden: symbolic.GoldenSuite,
    }[stype]


def suite_type(name: str) -> SuiteType:
    """suite_type.

    Raises:
        UnknownSuite: if name is not a suite
    """
    try:
        return SuiteType(name)
    except ValueError:
        raise UnknownSuite(
            f'Unknown suite {name!r}; '
            f'expected one of {", ".join(SUITE_NAMES)}',
            errors=name)


def run_suite(name: str,
              bounds: Optional[SuiteBounds] = None,
              corpus: Optional[CorpusSpec] = None,
              debug: bool = False) -> VerificationReport:
    """run_suite.
    Run one suite and return its report.

    Args:
        name (str): suite name, e.g. "lemma-good"
        bounds (Optional[SuiteBounds]): search bounds, suite defaults if None
        corpus (Optional[CorpusSpec]): generation parameters of the corpus
            suites; seed and size always come from bounds

    Raises:
        UnknownSuite: if name is not a suite
        BoundExceeded: if a bound is too small for a required enumeration
    """
    stype = suite_type(name)
    cls = suite_factory(stype)
    if stype in CORPUS_SUITES:
        suite = cls(bounds, debug=debug, corpus=corpus)
    else:
        suite = cls(bounds, debug=debug)
    return suite.run()
