from typing import Any, Dict, List

from pydantic import BaseModel, Field

from hopflab.utils import gen_timestamp


class Failure(BaseModel):
    """Failure.
    One falsified instance: what was checked, what the theorem predicts and
    what the engine computed.
    """
    instance: str
    expected: Any = None
    actual: Any = None


class ControlResult(BaseModel):
    """ControlResult.
    A negative control: an instance outside a theorem's hypotheses whose
    conclusion is expected to fail.
    """
    name: str
    instance: str
    expected: Any = None
    observed: Any = None
    passed: bool = False


class VerificationReport(BaseModel):
    """VerificationReport.
    failures == [] (and every control passing) iff the suite passed.
    """
    suite: str
    citation: str = ''
    instances_checked: int = 0
    failures: List[Failure] = []
    controls: List[ControlResult] = []
    sampled: int = 0
    elapsed: int = 0
    seed: int = 0
    bounds: Dict[str, Any] = {}
    timestamp: int = Field(default_factory=gen_timestamp)

    @property
    def passed(self) -> bool:
        return not self.failures and all(c.passed for c in self.controls)

    def dump(self, with_elapsed: bool = True) -> Dict[str, Any]:
        """dump.
        Report as plain data. The timestamp is never included and elapsed
        only on request, so fixed seed and bounds give identical dumps.
        """
        data = self.dict(exclude={'timestamp'})
        data['passed'] = self.passed
        if not with_elapsed:
            del data['elapsed']
        return data


class ReportBundle(BaseModel):
    """ReportBundle.
    Several suite reports emitted as one document.
    """
    reports: List[VerificationReport] = []

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.reports)

    def dump(self, with_elapsed: bool = True) -> Dict[str, Any]:
        return {'passed': self.passed,
                'reports': [r.dump(with_elapsed) for r in self.reports]}
