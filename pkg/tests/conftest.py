import os

import pytest
from hypothesis import HealthCheck, settings

from afeval.fixtures import DIRICHLET_MODULI, builtin, delta_instance, dirichlet_instance, trivial_instance

settings.register_profile("default", max_examples=40, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", max_examples=400, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@pytest.fixture(scope="session")
def chi5():
    return dirichlet_instance(5)


@pytest.fixture(scope="session")
def delta():
    return delta_instance()


@pytest.fixture(scope="session")
def trivial():
    return trivial_instance()


@pytest.fixture(scope="session")
def twisted100():
    return builtin("dirichlet-5", t=100.0)


@pytest.fixture(scope="session", params=DIRICHLET_MODULI, ids=lambda q: f"q{q}")
def dirichlet(request):
    return dirichlet_instance(request.param)


@pytest.fixture(scope="session", params=list(DIRICHLET_MODULI) + ["delta"], ids=str)
def any_fixture(request):
    if request.param == "delta":
        return delta_instance()
    return dirichlet_instance(request.param)


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(results):
        terminalreporter.write_line(results[n])
