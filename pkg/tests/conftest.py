import time

import pytest

from petcarbon.meter import MeterConfig, PowerTrace, open_meter


def busy_wait(seconds):
    """Sleep most of the interval, then spin to the monotonic deadline."""
    deadline = time.monotonic() + seconds
    slack = seconds - 0.003
    if slack > 0:
        time.sleep(slack)
    while time.monotonic() < deadline:
        pass


@pytest.fixture
def sim_meter():
    """Simulated meter on a constant 10 W trace, 1 ms polling."""
    return open_meter(MeterConfig(trace=PowerTrace.constant(10.0)))
