import pytest

from pentforge import catalog
from pentforge.analysis import (count_olps, known_spectrum, max_olps_bound,
                                opposite_line, two_olp_counts,
                                two_olp_excluded, verify_pentagonal)
from pentforge.construct import degenerate_pent
from pentforge.core import Design
from pentforge.defgraph import cycle_graph, moore_pent


def test_opposite_line_one_olp_listing(pent3_9_olp1):
    assert opposite_line(pent3_9_olp1, 0) == (3, 4, 5)


def test_opposite_line_pentagon():
    pentagon = moore_pent(cycle_graph(5), 2)
    for x in range(5):
        opp = opposite_line(pentagon, x)
        assert len(opp) == 2
        # lines are the distance-2 neighborhoods, so the non-collinear
        # points of x are exactly its two cycle neighbours
        assert all(abs(p - x) % 5 in (1, 4) for p in opp)


def test_opposite_line_one_olp_pent3_10():
    d = catalog.catalog_load("pent3_10_olp1")
    assert opposite_line(d, 18) == (21, 22, 23)


def test_verify_pentagonal_passes(pent3_9_olp0):
    rep = verify_pentagonal(pent3_9_olp0)
    assert rep.ok and rep.r == 9 and rep.count_consistent


def test_verify_pentagonal_broken_by_deleting_a_line(pent3_9_olp0):
    d = Design.make(v=22, k=3, lines=pent3_9_olp0.lines[1:])
    rep = verify_pentagonal(d)
    assert not rep.ok


def test_degenerate_pent_is_pentagonal():
    rep = verify_pentagonal(degenerate_pent(3))
    assert rep.ok and rep.r == 1


def test_count_olps(pent3_9_olp1, pent3_9_olp0):
    assert count_olps(pent3_9_olp1).q == 1
    assert count_olps(pent3_9_olp1).pairs == (((0, 1, 2), (3, 4, 5)),)
    assert count_olps(pent3_9_olp0).q == 0


def test_count_olps_one_olp_pent3_10():
    assert count_olps(catalog.catalog_load("pent3_10")).q == 0


@pytest.mark.parametrize("r,bound", [(10, 4), (12, 3), (9, 2), (7, 3), (13, 5)])
def test_max_olps_bound(r, bound):
    assert max_olps_bound(r) == bound


def test_max_olps_bound_rejects_bad_residue():
    with pytest.raises(ValueError):
        max_olps_bound(8)


def test_two_olp_line_census():
    counts = two_olp_counts(7)
    assert counts["ccc_lines"] == 2 and counts["c_points"] == 6
    counts13 = two_olp_counts(13)
    assert counts13["ccc_lines"] == 18 and counts13["c_points"] == 18


def test_two_olp_excluded_exact_set():
    valid = [r for r in range(7, 31) if r % 3 in (0, 1)]
    assert [r for r in valid if two_olp_excluded(r)] == [7, 9, 10, 12]


@pytest.mark.parametrize("k,r,status", [
    (3, 6, "not-exist"),
    (3, 4, "not-exist"),
    (4, 5, "not-exist"),
    (4, 4, "not-exist"),
    (4, 48, "open"),
    (4, 13, "exists"),
    (3, 9, "exists"),
    (3, 7, "exists-maximal"),
    (2, 2, "exists"),
    (7, 7, "exists"),
    (57, 57, "open"),
    (5, 5, "not-exist"),
    (6, 7, "exists"),
    (3, 5, "not-exist"),   # fails divisibility
    (5, 2, "not-exist"),   # 1 < r < k
])
def test_known_spectrum(k, r, status):
    assert known_spectrum(k, r).status == status


def test_olp_partition_when_r_small(pent3_9_olp1):
    # 1 < r < 3k: either q = 0 or the OLPs partition the point set.
    d = degenerate_pent(3)
    olps = count_olps(d)
    pts = sorted(p for pair in olps.pairs for line in pair for p in line)
    assert pts == list(range(d.v))


def test_opposite_size_identity(pent3_9_olp0):
    # |x_opp| = v - 1 - r(k-1) = k
    for x in range(pent3_9_olp0.v):
        assert len(opposite_line(pent3_9_olp0, x)) == 3
