#!/usr/bin/env python3
"""
Every suite must pass, with identical case ids, for each primitive root w = zeta^t
"""

import logging
import os
import sys

import pytest

# Add the repository root to the path
sys.path.append(os.path.dirname(os.path.abspath(__file__)))

from shared import dual_pairing, qcombinat, quantum_plane_a, taft_hopf
from shared.verification_orchestrator import SUITES, root_exponents, run_suite
from shared.verify_config import SuiteSettings

logging.basicConfig(level=logging.INFO)
logger = logging.getLogger(__name__)

SETTINGS = SuiteSettings()


def test_root_exponent_listing():
    assert root_exponents(5, "canonical") == [1]
    assert root_exponents(5, "all") == [1, 2, 3, 4]
    assert root_exponents(6, "all") == [1, 5]
    assert root_exponents(8, "all") == [1, 3, 5, 7]
    assert root_exponents(2, "all") == [1]
    with pytest.raises(ValueError):
        root_exponents(5, "some")


@pytest.mark.parametrize("suite", SUITES)
@pytest.mark.parametrize("n", [5, 6, 8])
def test_suite_outcome_is_root_independent(n, suite):
    outcomes = {}
    for t in root_exponents(n, "all"):
        report = run_suite(suite, n, t, SETTINGS)
        failed = [case.case_id + " " + (case.detail or "") for case in report.cases if not case.passed]
        assert not failed, f"t={t}: {failed}"
        outcomes[t] = [(case.case_id, case.passed) for case in report.cases]
    reference = outcomes[1]
    for t, outcome in outcomes.items():
        assert outcome == reference, f"n={n} t={t} differs from t=1"


@pytest.mark.parametrize("cached", [
    qcombinat._pascal_row,
    qcombinat.weighted_composition_sum,
    quantum_plane_a._monomial_on_basis,
    taft_hopf._antipode_monomial,
    dual_pairing.pair_words,
    dual_pairing._X_on_basis,
])
def test_per_context_caches_are_bounded(cached):
    # one entry set per (n, t); an all-roots sweep must not grow them without limit
    maxsize = cached.cache_info().maxsize
    assert maxsize is not None and maxsize > 0


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))
