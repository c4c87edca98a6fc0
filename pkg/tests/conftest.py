import pytest

from srtk import builtin, make_field

# (name, characteristic, extension degree) for every Buchsbaum* corpus member.
# The 7-vertex torus admits no lsop over GF(2) itself, so char 2 runs over GF(4).
BSTAR_CASES = [
    ("simplex_boundary:2", 32003, 1),
    ("simplex_boundary:3", 32003, 1),
    ("simplex_boundary:4", 32003, 1),
    ("cross_polytope:3", 32003, 1),
    ("rp2_6", 2, 1),
    ("torus7", 32003, 1),
    ("torus7", 2, 2),
]

BUCHSBAUM_CASES = BSTAR_CASES + [
    ("rp2_6", 3, 1),
    ("rp2_6", 32003, 1),
    ("wedge_two_circles", 32003, 1),
]

CORPUS = ["simplex_boundary:2", "simplex_boundary:3", "simplex_boundary:4", "cross_polytope:3",
          "rp2_6", "torus7", "wedge_two_circles", "bowtie_filled"]

SEEDS = (0, 1, 2)


def case_id(case):
    name, p, k = case
    return f"{name}@{p}" + (f"^{k}" if k > 1 else "")


@pytest.fixture
def triangle():
    return builtin("simplex_boundary:2")


@pytest.fixture
def rp2():
    return builtin("rp2_6")


@pytest.fixture
def torus():
    return builtin("torus7")


def field_of(p, k):
    return make_field(p, k)


_ACCEPTANCE: dict[str, str] = {}


def record(criterion: str, ok: bool, detail: str = ""):
    _ACCEPTANCE[criterion] = ("PASS" if ok else "FAIL") + (f"  {detail}" if detail else "")


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(_ACCEPTANCE, key=lambda k: int(k.split()[0])):
        terminalreporter.write_line(f"criterion {key}: {_ACCEPTANCE[key]}")
