import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, List, Optional, TypeVar

from hopflab.config import SuiteBounds
from hopflab.reports import ControlResult, Failure, VerificationReport
from hopflab.utils import monotonic_ms

suite_logger = None

T = TypeVar('T')
R = TypeVar('R')


@dataclass
class CheckOutcome:
    """CheckOutcome.
    Result of checking one instance (which may cover several sub-checks).
    """
    checked: int = 0
    failures: List[Failure] = field(default_factory=list)
    sampled: int = 0

    def fail(self, instance: str, expected: Any, actual: Any) -> None:
        self.failures.append(
            Failure(instance=instance, expected=expected, actual=actual))


class SuiteRunner:
    """SuiteRunner.
    Order preserving map, optionally over a thread pool.
    """

    def __init__(self, workers: int = 1):
        self._max_workers = workers

    @property
    def workers(self) -> int:
        return self._max_workers

    def map(self, fn: Callable[[T], R], items: Iterable[T]) -> List[R]:
        if self._max_workers <= 1:
            return [fn(item) for item in items]
        with ThreadPoolExecutor(max_workers=self._max_workers) as executor:
            return list(executor.map(fn, items))


class BaseSuite:
    """BaseSuite.
    A verification suite enumerates instances in canonical order and checks
    each of them; run() reduces the outcomes, in order, into one report.
    """
    name: str = ''
    citation: str = ''
    DEFAULT_MAX_ORDER: int = 64
    DEFAULT_SIZE: int = 0
    DEFAULT_MAX_HOMS: Optional[int] = None

    @classmethod
    def logger(cls) -> logging.Logger:
        global suite_logger
        if suite_logger is None:
            suite_logger = logging.getLogger(__name__)
        return suite_logger

    def __init__(self,
                 bounds: SuiteBounds = None,
                 debug: bool = False):
        bounds = bounds if bounds is not None else SuiteBounds()
        self._bounds = bounds.resolved(self.DEFAULT_MAX_ORDER,
                                       self.DEFAULT_SIZE,
                                       self.DEFAULT_MAX_HOMS)
        self._debug = debug
        self._runner = SuiteRunner(self._bounds.workers)

    @property
    def log(self):
        return self.logger()

    @property
    def debug(self):
        return self._debug

    @property
    def bounds(self) -> SuiteBounds:
        return self._bounds

    def instances(self) -> List[Any]:
        raise NotImplementedError()

    def check(self, instance: Any) -> CheckOutcome:
        raise NotImplementedError()

    def controls(self) -> List[ControlResult]:
        return []

    def run(self) -> VerificationReport:
        """run.
        Check every instance and assemble the report.
        """
        start = monotonic_ms()
        instances = self.instances()
        self.log.info(f'Suite {self.name}: {len(instances)} instances')
        outcomes = self._runner.map(self.check, instances)
        failures = [f for o in outcomes for f in o.failures]
        for f in failures:
            self.log.warning(f'Suite {self.name} failed on {f.instance}: '
                             f'expected {f.expected}, got {f.actual}')
        controls = self.controls()
        for c in controls:
            if not c.passed:
                self.log.warning(f'Suite {self.name} control {c.name} '
                                 f'did not behave as expected')
        report = VerificationReport(
            suite=self.name,
            citation=self.citation,
            instances_checked=sum(o.checked for o in outcomes),
            failures=failures,
            controls=controls,
            sampled=sum(o.sampled for o in outcomes),
            seed=self.bounds.seed,
            bounds=self.bounds.dict(exclude={'workers'}),
            elapsed=monotonic_ms() - start,
        )
        self.log.info(f'Suite {self.name}: {report.instances_checked} checks, '
                      f'{len(failures)} failures, {report.elapsed} ms')
        return report
