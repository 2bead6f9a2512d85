import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from udisk_mis import Disk, GenParams, Instance, check_observation1, decompose, generate, stabs_line


def test_decompose_example():
    inst = Instance.from_points([(0, 0.4), (1, -0.3), (2, -1.7)], 0.5)
    sa = decompose(inst)
    assert sa.line_ys == pytest.approx((0.4, -0.6, -1.6))
    assert sa.assignment == {0: 0, 1: 1, 2: 2}
    assert sa.strips == ((0,), (1,), (2,))


def test_single_disk():
    sa = decompose(Instance((Disk(7, 3.0, 2.5),), 0.5))
    assert sa.line_ys == (2.5,)
    assert sa.assignment == {7: 0}


def test_midway_goes_up():
    # lines at 1.0 and 0.0; 0.5 is equidistant
    inst = Instance.from_points([(0, 1.0), (5, 0.5), (9, -0.2)], 0.5)
    sa = decompose(inst)
    assert sa.assignment[1] == 0


def test_empty():
    sa = decompose(Instance((), 1.0))
    assert sa.k == 0 and sa.strips == ()


def test_empty_strips_kept():
    inst = Instance.from_points([(0, 0), (0, -2.0)], 0.5)
    sa = decompose(inst)
    assert sa.k == 3
    assert sa.strips == ((0,), (), (1,))
    assert check_observation1(sa, inst)


def test_range_just_over_one_diameter_needs_two_lines():
    # a single line through the top center would miss the bottom disk by 0.4
    inst = Instance.from_points([(0, 0.0), (3, -0.9)], 0.5)
    sa = decompose(inst)
    assert sa.k == 2
    for d in inst.disks:
        assert stabs_line(d, sa.line_ys[sa.assignment[d.id]], 0.5)


def test_observation1_single_strip():
    inst = generate(GenParams("stabbed", 30, 0.5, seed=4))
    sa = decompose(inst)
    assert sa.k <= 2
    assert check_observation1(sa, inst)


def test_observation1_detects_violation():
    # hand-built assignment that puts touching disks two strips apart
    from udisk_mis.strips import StripAssignment

    inst = Instance.from_points([(0, 0), (0.1, 0)], 0.5)
    sa = StripAssignment((0.0, -1.0, -2.0), ((0,), (), (1,)), {0: 0, 1: 2})
    assert not check_observation1(sa, inst)


def _brute_cross_parity_ok(inst, sa):
    for a in inst.disks:
        for b in inst.disks:
            if a.id < b.id and abs(sa.assignment[a.id] - sa.assignment[b.id]) > 1:
                if math.dist((a.cx, a.cy), (b.cx, b.cy)) < 2 * inst.radius:
                    return False
    return True


def test_observation1_large_random():
    inst = generate(GenParams("uniform", 1000, 0.5, seed=11))
    sa = decompose(inst)
    assert check_observation1(sa, inst)
    assert _brute_cross_parity_ok(inst, sa)


ys = st.floats(-30, 30, allow_nan=False)


@settings(max_examples=200)
@given(st.lists(st.tuples(st.floats(-30, 30, allow_nan=False), ys), min_size=1, max_size=60),
       st.sampled_from([0.5, 1.0, 0.37]))
def test_partition_and_stabbing(points, r):
    inst = Instance.from_points(points, r)
    sa = decompose(inst)
    assert sum(len(s) for s in sa.strips) == len(inst)
    assert set(sa.assignment) == {d.id for d in inst.disks}
    for i, members in enumerate(sa.strips):
        for disk_id in members:
            assert sa.assignment[disk_id] == i
    for d in inst.disks:
        assert stabs_line(d, sa.line_ys[sa.assignment[d.id]], r)
    gaps = np.diff(sa.line_ys)
    assert np.allclose(gaps, -2 * r)
    assert sa.line_ys[0] == max(d.cy for d in inst.disks)
    assert decompose(inst) == sa
    assert check_observation1(sa, inst)
