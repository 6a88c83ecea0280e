import time

import pytest

from goeritz.powell import discover, slide_profile, spin_profile
from goeritz.verify import theorem_verify


@pytest.fixture(scope="session")
def discovered():
    """Run both generator searches once, keeping wall times for the
    acceptance bounds."""
    t0 = time.time()
    theta = discover(slide_profile())
    t1 = time.time()
    nu = discover(spin_profile())
    t2 = time.time()
    return {"theta": theta, "nu": nu,
            "theta_seconds": t1 - t0, "nu_seconds": t2 - t1}


@pytest.fixture(scope="session")
def verdict(discovered):
    """One full theorem verification shared by every test that needs a
    certificate.  seconds includes the discovery time."""
    t0 = time.time()
    cert, trace = theorem_verify(theta_candidates=discovered["theta"],
                                 nu_candidates=discovered["nu"])
    dt = time.time() - t0
    return {"cert": cert, "trace": trace,
            "seconds": dt + discovered["theta_seconds"] + discovered["nu_seconds"]}
