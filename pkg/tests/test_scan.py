from hopfinv.graphs import net
from hopfinv.invariants import csf
from hopfinv.objects import Permutation
from hopfinv.scan import ScanTask, family, naturally_labelled_posets, scan, verdict
from hopfinv.symfunc import positivity_report

# naturally labelled posets on [n], n = 1..4
NATURAL_POSETS = [1, 2, 7, 40]


def test_family_sizes():
    assert [sum(1 for _ in naturally_labelled_posets(n)) for n in range(1, 5)] == NATURAL_POSETS
    assert sum(1 for _ in family("permutations", 4)) == 24
    assert sum(1 for _ in family("graphs", 4, up_to=True)) == 1 + 2 + 4 + 11


def test_h_alternating_scan():
    results = list(scan("graphs", 5, ScanTask("h-alternating"), up_to=True))
    assert all(ok for _, ok in results)


def test_claw_is_the_only_failure_on_four_vertices():
    bad = [g for g, ok in scan("graphs", 4, ScanTask("e-positive")) if not ok]
    # the claw is the only graph on four vertices whose CSF is not e-positive
    assert len(bad) == 1
    assert sorted(bad[0].degree(v) for v in range(1, 5)) == [1, 1, 1, 3]


def test_net_is_not_e_positive():
    assert not positivity_report(csf(net()), "e").positive


def test_parallel_scan_matches_serial():
    task = ScanTask("dd-e-positive-after-deflate", require_claw=True)
    serial = [ok for _, ok in scan("permutations", 6, task)]
    parallel = [ok for _, ok in scan("permutations", 6, task, jobs=2, chunk=100)]
    assert serial == parallel


def test_deflated_example_is_a_hit():
    task = ScanTask("dd-e-positive-after-deflate", require_claw=True)
    assert verdict(task, Permutation.parse("26153874"))
    assert not verdict(task, Permutation.parse("2143"))
