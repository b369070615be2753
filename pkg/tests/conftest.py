import os

import numpy as np
import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "default", max_examples=200, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.register_profile("ci", max_examples=50, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@pytest.fixture
def square_center():
    return np.array([[0, 0], [1, 0], [1, 1], [0, 1], [0.5, 0.5]], dtype=float)


def pytest_terminal_summary(terminalreporter):
    rows = []
    for outcome in ("passed", "failed", "skipped"):
        for rep in terminalreporter.stats.get(outcome, []):
            nodeid = getattr(rep, "nodeid", "")
            if "test_acceptance.py::test_criterion_" in nodeid and rep.when in ("call", "setup"):
                if outcome == "passed" and rep.when != "call":
                    continue
                name = nodeid.split("::")[-1]
                props = dict(getattr(rep, "user_properties", ()))
                detail = props.get("detail", "")
                if outcome == "skipped" and isinstance(rep.longrepr, tuple):
                    detail = (detail + "; " if detail else "") + rep.longrepr[2]
                rows.append((name, outcome.upper(), detail))
    if rows:
        terminalreporter.section("acceptance criteria")
        for name, outcome, detail in sorted(rows, key=lambda r: int(r[0].split("_")[2])):
            terminalreporter.write_line(f"{outcome:8s} {name}  {detail}".rstrip())
