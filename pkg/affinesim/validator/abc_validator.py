from abc import ABC, abstractmethod
from logging import getLogger, NullHandler
from traceback import TracebackException
from typing import Dict, List, Optional, TYPE_CHECKING

import numpy as np

if TYPE_CHECKING:
    from affinesim.engine import AffSimEngine


logger = getLogger(__name__)
logger.addHandler(NullHandler())


class AbstractValidator(ABC):
    """
    Randomized self-test suite.
    Every trial is identified by name and seeded independently, failed trials are collected in errors.
    """

    def __init__(self, engine: "AffSimEngine"):
        self.engine = engine
        self.settings = engine.settings

        self.logger = logger
        self.errors: Dict[str, Exception] = {}
        self.trial_count = 0

    def validate(self):
        trials = self.get_trials()
        self.trial_count = len(trials)

        results = self.engine.map(self._run_trial, trials)

        for name, exc in zip(trials, results):
            if exc is not None:
                traceback = "".join(TracebackException.from_exception(exc).format())
                logger.warning(f"Failed trial [{name}] in [{self.__class__.__name__}]\n{traceback}")
                self.errors[name] = exc

        logger.debug(f"Validator [{self.__class__.__name__}] ran [{len(trials)}] trials with [{len(self.errors)}] error(s)")

    def _run_trial(self, name: str):
        try:
            self.validate_trial(name, self.get_rng(name))
        except Exception as exc:
            return exc

        return None

    def get_trials(self) -> List[str]:
        return [f"{self.__class__.__name__}_{i:04d}" for i in range(self.settings.selftest_trials)]

    def get_rng(self, name: str) -> np.random.Generator:
        # stable across runs, independent of thread scheduling
        return np.random.default_rng([self.settings.selftest_seed, sum(ord(ch) * 31**i for i, ch in enumerate(name)) % 2**32])

    def assert_close(self, actual: np.ndarray, expected: np.ndarray, what: str, tol: Optional[float] = None):
        if tol is None:
            tol = self.settings.tolerance

        if actual.shape != expected.shape:
            raise ValueError(f"Shape mismatch in [{what}]: {actual.shape} vs {expected.shape}")

        deviation = float(np.max(np.abs(actual - expected))) if actual.size else 0.0

        if deviation > tol:
            raise ValueError(f"Mismatch in [{what}]: max deviation [{deviation}] exceeds tolerance [{tol}]")

    @abstractmethod
    def validate_trial(self, name: str, rng: np.random.Generator):
        pass
