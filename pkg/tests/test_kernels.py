"""The compiled kernels and the numpy fallback must agree exactly."""

import os

import numpy as np
import pytest

from metricdim import _backend, _fallback
from metricdim.resolving import strong_pair_matrix
from metricdim.search import _pack_rows

from conftest import cylinder, path, prism

kernels = pytest.importorskip("metricdim._kernels")

GRAPHS = [cylinder(3, 3), cylinder(4, 3), path(6), prism(3, 3, 2), prism(4, 3, 2)]


def test_backend_selected():
    forced = os.environ.get("METRICDIM_PURE_PYTHON", "") in ("1", "true", "yes")
    assert _backend.NAME == ("python" if forced else "cython")


@pytest.mark.parametrize("graph", GRAPHS, ids=lambda gd: repr(gd[0]))
@pytest.mark.parametrize("doubly", [False, True])
def test_distinct_kernels_agree(graph, doubly):
    g, d = graph
    D = np.ascontiguousarray(d.as_array(), dtype=np.int32)
    pool = np.arange(g.vertex_count, dtype=np.int32)
    for size in range(1, 5):
        for lo, hi in [(0, len(pool)), (1, 3), (2, len(pool))]:
            assert kernels.first_hit_distinct(D, pool, size, lo, hi, doubly) == \
                _fallback.first_hit_distinct(D, pool, size, lo, hi, doubly)


@pytest.mark.parametrize("graph", GRAPHS, ids=lambda gd: repr(gd[0]))
def test_cover_kernels_agree(graph):
    g, d = graph
    _, cover = strong_pair_matrix(d)
    masks = _pack_rows(cover)
    pool = np.arange(g.vertex_count, dtype=np.int32)
    for size in range(1, 7):
        assert kernels.first_hit_cover(masks, pool, size, 0, len(pool)) == \
            _fallback.first_hit_cover(masks, pool, size, 0, len(pool))


def test_wide_bitsets():
    # 80 vertices need two 64-bit words per row
    g, d = prism(5, 4, 4)
    _, cover = strong_pair_matrix(d)
    masks = _pack_rows(cover)
    assert masks.shape[1] == 2
    pool = np.asarray([0, 1, 2, 3, 4, 75, 76, 77, 78, 79], dtype=np.int32)
    for size in (9, 10):
        assert kernels.first_hit_cover(masks, pool, size, 0, len(pool)) == \
            _fallback.first_hit_cover(masks, pool, size, 0, len(pool))


def test_sorting_branch_for_large_key_space():
    rng = np.random.default_rng(7)
    a = rng.integers(1, 60, size=(30, 30)).astype(np.int32)
    a = np.ascontiguousarray(np.triu(a, 1) + np.triu(a, 1).T)
    pool = np.arange(30, dtype=np.int32)
    # base 120, four coordinates: 2e8 keys, past the stamp-table limit
    for doubly in (False, True):
        assert kernels.first_hit_distinct(a, pool, 4, 0, 30, doubly) == \
            _fallback.first_hit_distinct(a, pool, 4, 0, 30, doubly)


def test_overflow_signalled():
    a = np.full((12, 12), 10_000, dtype=np.int32)
    np.fill_diagonal(a, 0)
    pool = np.arange(12, dtype=np.int32)
    with pytest.raises(OverflowError):
        kernels.first_hit_distinct(a, pool, 6, 0, 12, False)
    hit, _ = _fallback.first_hit_distinct(a, pool, 6, 0, 12, False)
    assert hit is None


def test_empty_ranges():
    g, d = cylinder(3, 3)
    D = np.ascontiguousarray(d.as_array(), dtype=np.int32)
    pool = np.arange(9, dtype=np.int32)
    assert kernels.first_hit_distinct(D, pool, 10, 0, 9, False) == (None, 0)
    assert kernels.first_hit_distinct(D, pool, 2, 5, 5, False) == (None, 0)
