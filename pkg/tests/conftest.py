import pytest

from cytoric.catalog import product_of_projective_lines, projective_space, weighted_projective
from cytoric.fan import validate_fan
from cytoric.koszul import CompleteIntersectionCY

_criteria = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    n, text = mark.args
    entry = _criteria.setdefault(n, {"text": text, "ok": True, "ran": False})
    if rep.when == "call":
        entry["ran"] = True
    if rep.failed or (rep.skipped and rep.when != "teardown"):
        entry["ok"] = False


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_criteria):
        e = _criteria[n]
        status = "PASS" if e["ok"] and e["ran"] else "FAIL"
        terminalreporter.write_line(f"{status} criterion {n}: {e['text']}")


@pytest.fixture(scope="session")
def p2():
    return projective_space(2)


@pytest.fixture(scope="session")
def p4():
    return projective_space(4)


@pytest.fixture(scope="session")
def p1xp1():
    return product_of_projective_lines(2)


@pytest.fixture(scope="session")
def p11112():
    return weighted_projective((1, 1, 1, 1, 2))


@pytest.fixture(scope="session")
def torsion_fan():
    """Complete fan whose class group is Z + Z/2."""
    return validate_fan([(1, 0), (-1, 2), (-1, -2)], [(0, 1), (1, 2), (0, 2)], "torsion")


def hypersurface(fan, degree_vector):
    return CompleteIntersectionCY(fan, (tuple(degree_vector),))


def fourfold_fixtures():
    """CY fourfolds used for the signature integrality property."""
    p5, p6 = projective_space(5), projective_space(6)
    q = product_of_projective_lines(5)
    return {
        "sextic": CompleteIntersectionCY(p5, ((6,) + (0,) * 5,)),
        "P6_25": CompleteIntersectionCY(p6, ((2,) + (0,) * 6, (5,) + (0,) * 6)),
        "P6_34": CompleteIntersectionCY(p6, ((3,) + (0,) * 6, (4,) + (0,) * 6)),
        "P1^5_2^5": CompleteIntersectionCY(
            q, (tuple(2 if j % 2 == 0 else 0 for j in range(10)),)),
    }
