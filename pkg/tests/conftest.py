import sys
from pathlib import Path

import pytest

from hopfgc.discrete import cyclic_group, group_by_name, symmetric_group3, trivial_group
from hopfgc.double import build_double
from hopfgc.hopf import constant_family, kc2_hopf, sweedler_hopf, trivial_family

sys.path.insert(0, str(Path(__file__).parent))

# criterion number -> (status, title, seconds); filled by test_acceptance.py
ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        status, title, secs = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n}: {status}  {title}  ({secs:.2f} s)")


@pytest.fixture(scope="session")
def kc2_c2():
    return constant_family(kc2_hopf(), cyclic_group(2))


@pytest.fixture(scope="session")
def sweedler():
    return sweedler_hopf()


@pytest.fixture(scope="session")
def trivial_s3():
    return trivial_family(symmetric_group3())


@pytest.fixture(scope="session")
def double_kc2(kc2_c2):
    return build_double(kc2_c2, "smash")


@pytest.fixture(scope="session")
def double_kc2_koppinen(kc2_c2):
    return build_double(kc2_c2, "koppinen")


@pytest.fixture(scope="session")
def double_trivial():
    return build_double(trivial_family(group_by_name("c3")))


@pytest.fixture(scope="session")
def double_sweedler_e():
    return build_double(constant_family(sweedler_hopf(), trivial_group()), "koppinen")
