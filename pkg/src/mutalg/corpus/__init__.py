"""Recorded worked examples plus the runner that re-verifies them exactly."""

from .runner import (
    DEFAULT_PRNG_SEED,
    AssertionRecord,
    CaseReport,
    divisibility_oracle,
    list_cases,
    load_case,
    random_hirzebruch_witness,
    run_all,
    run_case,
)

__all__ = [
    "DEFAULT_PRNG_SEED",
    "AssertionRecord",
    "CaseReport",
    "divisibility_oracle",
    "list_cases",
    "load_case",
    "random_hirzebruch_witness",
    "run_all",
    "run_case",
]
