from logging import getLogger, NullHandler
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, List, TypeVar

from affinesim.formatter import AffSimFormatter
from affinesim.settings import AffSimSettings


logger = getLogger(__name__)
logger.addHandler(NullHandler())

T = TypeVar("T")
R = TypeVar("R")


class AffSimEngine:
    def __init__(self, settings: AffSimSettings):
        self.settings = settings
        self.logger = logger

        self.formatter = AffSimFormatter()
        self.format = self.formatter.format_output

        self.executor = ThreadPoolExecutor(max_workers=self.settings.max_workers, thread_name_prefix=self.__class__.__name__)

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        self.executor.shutdown()

    def map(self, fn: Callable[[T], R], items: Iterable[T]) -> List[R]:
        """Run fn over items in parallel, results keep the order of items"""
        return list(self.executor.map(fn, items))
