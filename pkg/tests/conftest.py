import pytest

from relkgauss.groups import FiniteGroup

# filled by test_acceptance.py: criterion number -> (passed, detail)
ACCEPTANCE_RESULTS = {}


def build_quaternion():
    # unit quaternions +-1, +-i, +-j, +-k as (sign, axis)
    axes = ["1", "i", "j", "k"]
    prod = {("i", "j"): (1, "k"), ("j", "k"): (1, "i"), ("k", "i"): (1, "j"),
            ("j", "i"): (-1, "k"), ("k", "j"): (-1, "i"), ("i", "k"): (-1, "j")}
    for a in axes:
        prod[("1", a)] = (1, a)
        prod[(a, "1")] = (1, a)
        if a != "1":
            prod[(a, a)] = (-1, "1")
    elems = [(s, a) for s in (1, -1) for a in axes]

    def op(x, y):
        s, a = prod[(x[1], y[1])]
        return (x[0] * y[0] * s, a)

    return FiniteGroup.from_function(elems, op, name="Q8")


@pytest.fixture
def quaternion():
    return build_quaternion()


@pytest.fixture
def acceptance_record():
    def record(number, passed, detail):
        ACCEPTANCE_RESULTS[number] = (passed, detail)
    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE_RESULTS):
        passed, detail = ACCEPTANCE_RESULTS[n]
        terminalreporter.write_line(f"AC{n}: {'PASS' if passed else 'FAIL'}  {detail}")
