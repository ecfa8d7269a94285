import pytest
from hypothesis import given, settings, strategies as st

from ghwkit.algebra import Matrix
from ghwkit.code import CodeValidationError, LinearCode, hamming_weight, support
from ghwkit.constructions import random_code, reed_solomon
from ghwkit.locality import (
    UncoverableCoordinateError,
    _localities_by_dual_enum,
    _min_cover_subset,
    coordinate_locality,
    covering_rows,
    is_lrc,
    locality,
)


class TestCoordinateLocality:
    def test_pair_code(self, pair_code):
        for j in range(4):
            assert coordinate_locality(pair_code, j) == 1

    def test_single_parity_check(self, gf2):
        spc = LinearCode(gf2, [[1, 0, 1], [0, 1, 1]])
        for j in range(3):
            assert coordinate_locality(spc, j) == 2

    def test_reference_fixture(self, lrc_12_6_3):
        for j in range(12):
            assert coordinate_locality(lrc_12_6_3, j) == 3

    def test_no_redundancy(self, gf2):
        full = LinearCode(gf2, Matrix.identity(gf2, 3))
        with pytest.raises(CodeValidationError, match="no redundancy"):
            coordinate_locality(full, 0)

    def test_uncoverable_coordinate(self, gf2):
        code = LinearCode(gf2, [[1, 0, 0], [0, 1, 1]])
        with pytest.raises(UncoverableCoordinateError):
            coordinate_locality(code, 0)
        assert coordinate_locality(code, 1) == 1

    def test_out_of_range(self, pair_code):
        with pytest.raises(IndexError):
            coordinate_locality(pair_code, 7)


class TestLocality:
    def test_reference_fixture(self, lrc_12_6_3):
        prof = locality(lrc_12_6_3)
        assert prof.r == 3
        assert prof.per_coordinate == (3,) * 12

    def test_mds_locality_is_k(self):
        code = reed_solomon(7, 6, 3)
        assert locality(code).r == 3 == code.k

    def test_pair_code(self, pair_code):
        prof = locality(pair_code)
        assert prof.r == 1
        assert prof.covering_rows == ((1, 1, 0, 0), (0, 0, 1, 1))

    def test_uncoverable(self, gf2):
        code = LinearCode(gf2, [[1, 0, 0], [0, 1, 1]])
        with pytest.raises(UncoverableCoordinateError):
            locality(code)


class TestCoveringRows:
    def test_pair_code(self, pair_code):
        assert covering_rows(pair_code, 1) == [(1, 1, 0, 0), (0, 0, 1, 1)]

    def test_single_parity_check(self, gf2):
        spc = LinearCode(gf2, [[1, 0, 1], [0, 1, 1]])
        assert covering_rows(spc, 2) == [(1, 1, 1)]

    def test_reference_fixture_disjoint_groups(self, lrc_12_6_3):
        rows = covering_rows(lrc_12_6_3, 3)
        assert len(rows) == 3
        supports = [set(support(row)) for row in rows]
        assert all(len(s) == 4 for s in supports)
        assert set().union(*supports) == set(range(12))
        for a in range(3):
            for b in range(a + 1, 3):
                assert not supports[a] & supports[b]

    def test_r_below_locality(self, lrc_12_6_3):
        with pytest.raises(ValueError, match="locality above"):
            covering_rows(lrc_12_6_3, 2)

    def test_rows_are_dual_codewords_with_pivot_one(self, lrc_12_6_3):
        rows = covering_rows(lrc_12_6_3, 3)
        g_t = lrc_12_6_3.generator.transpose()
        covered = set()
        for row in rows:
            assert all(v == 0 for v in
                       Matrix(lrc_12_6_3.field, [row]).mat_mul(g_t).rows[0])
            pivot = min(set(range(12)) - covered)
            assert row[pivot] == 1
            covered |= set(support(row))


class TestIsLrc:
    def test_reference_fixture(self, lrc_12_6_3):
        assert is_lrc(lrc_12_6_3, 3)
        assert not is_lrc(lrc_12_6_3, 2)

    def test_any_code_at_r_equals_k(self):
        code = reed_solomon(7, 6, 3)
        assert is_lrc(code, code.k)

    def test_mds_needs_full_locality(self):
        assert not is_lrc(reed_solomon(7, 6, 3), 2)

    def test_full_space_is_never_lrc(self, gf2):
        full = LinearCode(gf2, Matrix.identity(gf2, 3))
        assert not is_lrc(full, 3)


@settings(max_examples=40, deadline=None)
@given(data=st.data())
def test_locality_invariants(data):
    q = data.draw(st.sampled_from([2, 3, 4]))
    n = data.draw(st.integers(3, 9))
    k = data.draw(st.integers(1, n - 1))
    seed = data.draw(st.integers(0, 2**32))
    code = random_code(q, n, k, seed)
    try:
        prof = locality(code)
    except UncoverableCoordinateError:
        return
    assert all(1 <= rj <= k for rj in prof.per_coordinate)
    assert prof.r == max(prof.per_coordinate)
    assert is_lrc(code, prof.r)
    assert prof.r == 1 or not is_lrc(code, prof.r - 1)

    rows = prof.covering_rows
    assert set().union(*(set(support(r)) for r in rows)) == set(range(code.n))
    assert all(hamming_weight(r) <= prof.r + 1 for r in rows)
    assert Matrix(code.field, rows).rank() == len(rows)  # independent
    assert -(-code.k // prof.r) <= len(rows) <= code.n - code.k
    g_t = code.generator.transpose()
    for row in rows:
        assert all(v == 0 for v in Matrix(code.field, [row]).mat_mul(g_t).rows[0])


@settings(max_examples=30, deadline=None)
@given(data=st.data())
def test_enum_and_subset_paths_agree(data):
    """The dual-enumeration shortcut and the ascending support-size search
    are behaviorally identical."""
    q = data.draw(st.sampled_from([2, 3]))
    n = data.draw(st.integers(3, 8))
    k = data.draw(st.integers(1, n - 1))
    seed = data.draw(st.integers(0, 2**32))
    code = random_code(q, n, k, seed)
    enum = _localities_by_dual_enum(code)
    for j in range(n):
        subset = _min_cover_subset(code, j, min(code.n, code.k + 1))
        if enum[j] is None:
            assert subset is None
        else:
            assert subset is not None and len(subset) - 1 == enum[j]


def test_localities_witnessed_by_actual_dual_words(lrc_12_6_3):
    """Each per-coordinate locality is materialized by a real dual codeword:
    weight r_j + 1, nonzero at j, orthogonal to the generator."""
    from ghwkit.locality import _extract_cover_word

    code = lrc_12_6_3
    prof = locality(code)
    g_t = code.generator.transpose()
    for j, rj in enumerate(prof.per_coordinate):
        subset = _min_cover_subset(code, j, rj + 1)
        assert subset is not None and len(subset) == rj + 1
        word = _extract_cover_word(code, subset, j)
        assert word[j] != 0
        assert hamming_weight(word) == rj + 1
        assert all(v == 0 for v in Matrix(code.field, [word]).mat_mul(g_t).rows[0])
