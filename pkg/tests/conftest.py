from functools import lru_cache

import pytest
from hypothesis import HealthCheck, settings

from superprolong import ag2lab
from superprolong.dpsuper import contact_signature

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

ACCEPTANCE = {}


@lru_cache(maxsize=None)
def model(p, N=1):
    return ag2lab.build_model(p, N)


@lru_cache(maxsize=None)
def bj_report(p, N=1, route="tilde-g0", golden=True):
    return ag2lab.experiment_bj(p, N, route, golden=golden)


@lru_cache(maxsize=None)
def partial_report(variant, N=1):
    return ag2lab.experiment_bj_partial(variant, 3, N)


@pytest.fixture(scope="session")
def sig3():
    return contact_signature(3, 1)


@pytest.fixture(scope="session")
def record():
    def _record(n, ok, detail=""):
        ACCEPTANCE[n] = (ok, detail)

    return _record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n:>2}: {'PASS' if ok else 'FAIL'}  {detail}")
