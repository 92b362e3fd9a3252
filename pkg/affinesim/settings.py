from pydantic import Field
from typing import List

from affinesim.model import BaseModelWithConfig


class AffSimSettings(BaseModelWithConfig):
    log_level: str = "INFO"

    dense_limit: int = Field(default=10, ge=0)
    tolerance: float = Field(default=1e-9, gt=0)
    literal_tolerance: float = Field(default=1e-12, gt=0)
    max_workers: int = Field(default=4, ge=1)

    # Options specific for selftest
    selftest_trials: int = Field(default=40, ge=1)
    selftest_max_qubits: int = Field(default=3, ge=1, le=5)
    selftest_seed: int = Field(default=0, ge=0)

    # Options specific for bench
    bench_qubits: List[int] = [25, 50, 100]
    bench_gates: List[int] = [1000, 10000]
    bench_seed: int = Field(default=0, ge=0)
