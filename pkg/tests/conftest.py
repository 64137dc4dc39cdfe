import re
from collections import OrderedDict

import pytest

CRITERIA = {
    1: "P_k vertex counts and printed dimensions",
    2: "L_k vertex counts, characteristic root, printed dimensions",
    3: "N_k vertex counts, strong connectivity, golden dimension",
    4: "Q_k counts, single SCC, golden dimension, interleave isomorphism",
    5: "P_k depth counts, SCC chain, depth monotonicity",
    6: "P_k reflection automorphism and quotient",
    7: "sample table of C(1,M) rows",
    8: "upper bound scan to 10^4",
    9: "interleaving and decimation laws",
    10: "drawn figures and printed matrices",
    11: "P_k witness family and lower bounds",
    12: "P_k subgraph double-covering L_{k+1}",
    13: "degenerate multipliers",
    14: "path-counting oracle vs spectral dimension",
}

_outcomes: "OrderedDict[int, list[tuple[str, bool]]]" = OrderedDict((c, []) for c in CRITERIA)
_CRIT = re.compile(r"test_c(\d\d)_")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    m = _CRIT.search(report.nodeid)
    if m and "test_acceptance" in report.nodeid:
        _outcomes[int(m.group(1))].append((report.nodeid.split("::")[-1], report.passed))


def pytest_terminal_summary(terminalreporter):
    if not any(_outcomes.values()):
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for c, results in _outcomes.items():
        if not results:
            continue
        failed = [name for name, ok in results if not ok]
        status = "PASS" if not failed else "FAIL"
        tr.write_line(f"criterion {c:2d} {status}  {CRITERIA[c]}  ({len(results) - len(failed)}/{len(results)} checks)")
        for name in failed:
            tr.write_line(f"             failed: {name}")


@pytest.fixture(scope="session")
def seven():
    from ternary_pathsets import build_translate_presentation

    return build_translate_presentation([1, 7])
