from fractions import Fraction

from hypothesis import strategies as st

from polycert.poly import Polynomial


def fractions(max_num: int = 50, max_den: int = 12, positive: bool = False):
    lo = 1 if positive else -max_num
    return st.builds(Fraction, st.integers(lo, max_num), st.integers(1, max_den))


def polynomials(max_degree: int = 12, positive: bool = False, min_degree: int = 0):
    return st.lists(fractions(positive=positive), min_size=min_degree + 1, max_size=max_degree + 1).map(Polynomial)


def nonzero_polynomials(max_degree: int = 12):
    return polynomials(max_degree).filter(lambda p: not p.is_zero())


def pytest_terminal_summary(terminalreporter):
    import sys

    module = sys.modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number, name, ok, detail, elapsed, limit in sorted(module.RESULTS):
        status = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"{status} criterion {number} ({name}): {detail} [{elapsed:.2f}s / {limit}s]")
