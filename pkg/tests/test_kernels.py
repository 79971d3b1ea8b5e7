"""The two kernel backends must agree exactly."""

import pytest
from hypothesis import given, settings, strategies as st

from cyclat import _pykernels
from cyclat.oracle import enumerate_admitted

try:
    from cyclat import _ckernels
except ImportError:  # pragma: no cover - build-environment dependent
    _ckernels = None

compiled = pytest.mark.skipif(_ckernels is None,
                              reason="compiled kernels unavailable")

words = st.integers(min_value=1, max_value=8).flatmap(
    lambda n: st.permutations(list(range(1, n + 1)))).map(tuple)


class TestPairIndex:
    def test_enumerates_row_major(self):
        n = 5
        pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
        for t, (i, j) in enumerate(pairs):
            assert _pykernels.pair_index(n, i, j) == t


@compiled
class TestBackendAgreement:
    @given(words)
    @settings(max_examples=300)
    def test_word_functions(self, word):
        for name in ("canonical_rotation", "word_rank", "word_vector",
                     "word_descent_labels", "word_ascent_labels",
                     "word_covers_up", "word_covers_down", "descent_count"):
            py = getattr(_pykernels, name)(word)
            cy = getattr(_ckernels, name)(word)
            assert py == cy, name

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_lattice_functions(self, n):
        flats = enumerate_admitted(n)
        for u in flats:
            for v in flats:
                assert _pykernels.join_flat(n, u, v) == \
                    _ckernels.join_flat(n, u, v)
                assert _pykernels.meet_flat(n, u, v) == \
                    _ckernels.meet_flat(n, u, v)
                assert _pykernels.leq_flat(u, v) == _ckernels.leq_flat(u, v)

    @given(st.integers(min_value=2, max_value=6),
           st.data())
    @settings(max_examples=150)
    def test_admitted_predicate(self, n, data):
        size = n * (n - 1) // 2
        flat = tuple(data.draw(st.lists(st.integers(min_value=0, max_value=3),
                                        min_size=size, max_size=size)))
        assert _pykernels.is_admitted_flat(n, flat) == \
            _ckernels.is_admitted_flat(n, flat)

    def test_compiled_rejects_oversized_orders(self):
        n = 80
        flat = (0,) * (n * (n - 1) // 2)
        with pytest.raises(ValueError):
            _ckernels.join_flat(n, flat, flat)

    @given(st.integers(min_value=1, max_value=7), st.data())
    @settings(max_examples=100)
    def test_sd_scan_on_arbitrary_tables(self, size, data):
        cell = st.integers(min_value=0, max_value=size - 1)
        table = st.lists(st.lists(cell, min_size=size, max_size=size)
                         .map(tuple), min_size=size, max_size=size).map(tuple)
        joins = data.draw(table)
        meets = data.draw(table)
        assert _pykernels.sd_scan(joins, meets) == \
            _ckernels.sd_scan(joins, meets)

    def test_sd_scan_on_real_tables(self):
        from cyclat.poset import _lattice_tables, build
        joins, meets = _lattice_tables(build(5))
        joins = tuple(tuple(r) for r in joins)
        meets = tuple(tuple(r) for r in meets)
        assert _pykernels.sd_scan(joins, meets) is None
        assert _ckernels.sd_scan(joins, meets) is None


class TestBackendSelection:
    def test_forced_pure_backend(self):
        import subprocess
        import sys
        out = subprocess.run(
            [sys.executable, "-c", "import cyclat; print(cyclat.BACKEND)"],
            env={"CYCLAT_PURE": "1", "PATH": "/usr/bin:/bin"},
            capture_output=True, text=True)
        assert out.stdout.strip() == "python"

    def test_default_backend_is_reported(self):
        from cyclat import kernels
        assert kernels.BACKEND in ("python", "cython")
