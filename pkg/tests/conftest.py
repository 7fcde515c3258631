import pytest

from pentforge import catalog
from pentforge.analysis import count_olps, opposite_line, verify_pentagonal
from pentforge.core import Design
from pentforge.defgraph import build_deficiency, classify


def check_universal(design: Design) -> None:
    """Post-hook run on every design the suite constructs or loads:
    flag double count, opposite-line sizes, deficiency regularity and
    component structure, K_{k,k} count versus OLP count."""
    report = verify_pentagonal(design)
    assert report.ok, report.violations[:3]
    r = report.r
    assert design.b * design.k == design.v * r
    for x in range(design.v):
        assert len(opposite_line(design, x)) == design.k
    graph = build_deficiency(design)
    assert graph.is_regular(design.k)
    cls = classify(graph, design.k)
    assert cls.other_count == 0
    assert cls.k_kk_count == count_olps(design).q


@pytest.fixture(scope="session")
def pent3_9_olp1() -> Design:
    return catalog.catalog_load("pent3_9_olp1")


@pytest.fixture(scope="session")
def pent3_9_olp0() -> Design:
    return catalog.catalog_load("pent3_9_olp0")
