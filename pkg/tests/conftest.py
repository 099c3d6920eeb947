import os

import pytest
from hypothesis import HealthCheck, settings

from genuslab.census import CensusConfig, run_census

settings.register_profile("default", deadline=None, max_examples=100,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("ci", deadline=None, max_examples=300,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@pytest.fixture(scope="session")
def census7(tmp_path_factory):
    out = tmp_path_factory.mktemp("census7")
    return out, run_census(CensusConfig(nmax=7, out=out))


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    if mod is None:
        return
    lines = mod.acceptance_lines()
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
