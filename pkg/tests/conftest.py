import random
import time

import pytest
from hypothesis import HealthCheck, settings

from poisson_homog.fixtures import load_catalog

settings.register_profile("default", max_examples=30, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

SUITE_LIMIT_SECONDS = 60.0

# criterion number -> (passed, detail); filled in by test_acceptance
ACCEPTANCE = {}
_START = {}


def pytest_sessionstart(session):
    _START["t"] = time.perf_counter()


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE:
        return
    elapsed = time.perf_counter() - _START["t"]
    tr = terminalreporter
    tr.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[k]
        if k == 10 and ok:
            ok = elapsed < SUITE_LIMIT_SECONDS
            detail = "%s; full suite %.1f s (limit %.0f s)" % (detail, elapsed, SUITE_LIMIT_SECONDS)
        tr.write_line("criterion %2d: %s  %s" % (k, "PASS" if ok else "FAIL", detail))


def pytest_sessionfinish(session, exitstatus):
    if ACCEPTANCE and time.perf_counter() - _START["t"] >= SUITE_LIMIT_SECONDS:
        session.exitstatus = 1


@pytest.fixture(scope="session")
def catalog():
    return load_catalog()


@pytest.fixture
def rng():
    return random.Random(20240607)
