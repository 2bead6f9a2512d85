"""The compiled and pure-Python kernels must agree bit for bit."""
import numpy as np
import pytest

from udisk_mis import GenParams, generate, kernels, split_stabbed
from udisk_mis.line_solvers import build_ri_tables, paper_dp_table, pair_state_dp_solve

pytestmark = pytest.mark.skipif("compiled" not in kernels.BACKENDS, reason="extension not built")


def _si(seed, n, width=None):
    inst = generate(GenParams("stabbed", n, 0.5, seed, width=width))
    return split_stabbed(inst, [d.id for d in inst.disks], 0.0)


@pytest.mark.parametrize("seed", range(25))
@pytest.mark.parametrize("closed", [False, True])
def test_backends_agree(seed, closed):
    n = 5 + seed * 3
    si = _si(seed, n, width=n * (0.2 + 0.05 * (seed % 7)))
    ri_c = build_ri_tables(si, closed, "compiled")
    ri_p = build_ri_tables(si, closed, "python")
    for a, b in zip((ri_c.aa, ri_c.ab, ri_c.ba, ri_c.bb), (ri_p.aa, ri_p.ab, ri_p.ba, ri_p.bb)):
        np.testing.assert_array_equal(a, b)
    tc, tp = paper_dp_table(si, closed, "compiled"), paper_dp_table(si, closed, "python")
    np.testing.assert_array_equal(tc.values, tp.values)
    np.testing.assert_array_equal(tc.took, tp.took)
    p = si.packed
    fc, pc = kernels.get("compiled").pair_dp_fill(p.ax, p.ay, p.bx, p.by, p.a_rank, p.b_rank, 0.5, closed)
    fp, pp = kernels.get("python").pair_dp_fill(p.ax, p.ay, p.bx, p.by, p.a_rank, p.b_rank, 0.5, closed)
    np.testing.assert_array_equal(fc, fp)
    np.testing.assert_array_equal(pc[fc >= 0], pp[fp >= 0])
    assert pair_state_dp_solve(si, closed, "compiled").selected == pair_state_dp_solve(si, closed, "python").selected


def test_unknown_backend():
    with pytest.raises(ValueError):
        kernels.get("fortran")
