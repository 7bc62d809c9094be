"""Base-matrix construction, CPM expansion and subgroup orderings."""

import itertools

import numpy as np
import pytest

from nbqc.construct import (
    CLASS_I,
    CLASS_II,
    CodeSpec,
    build_base,
    build_base_class1,
    build_base_class2,
    build_code,
    cpm,
    expand_base,
    index_subgroup,
    location_vector,
    random_index_subgroup,
    recover_base_region,
)
from nbqc.gf import GF2m

CLASS1_SUITE = [(2, 1, 3), (3, 7, 1), (4, 3, 5), (6, 7, 9)]
CLASS2_SUITE = [(2, 1), (3, 1), (4, 2), (5, 2)]


def test_location_vector_gf4():
    fld = GF2m(2)
    assert location_vector(fld, 0) == []
    assert location_vector(fld, 1) == [(0, 1)]
    assert location_vector(fld, 2) == [(1, 2)]
    assert location_vector(fld, 3) == [(2, 3)]


def test_cpm_gf4():
    fld = GF2m(2)
    # d = alpha: row r has alpha^(1+r) at column (1+r) mod 3
    assert cpm(fld, 2) == [(0, 1, 2), (1, 2, 3), (2, 0, 1)]
    assert cpm(fld, 0) == []


@pytest.mark.parametrize("m", [2, 3, 4])
def test_cpm_is_permutation_matrix(m):
    fld = GF2m(m)
    qm1 = fld.q - 1
    for d in range(1, fld.q):
        triples = cpm(fld, d)
        assert sorted(r for r, _, _ in triples) == list(range(qm1))
        assert sorted(c for _, c, _ in triples) == list(range(qm1))
        for r, c, v in triples:
            assert v == fld.mul(fld.pow_alpha(r), d)


def test_index_subgroup_gf4_full():
    fld = GF2m(2)
    assert index_subgroup(fld, [0, 1]) == (0, 1, 2, 3)
    assert index_subgroup(fld, [0]) == (0, 1)
    assert index_subgroup(fld, [1]) == (0, 2)


def test_index_subgroup_count_then_lex():
    fld = GF2m(4)
    # singles by ascending exponent, then pairs, then the triple
    got = index_subgroup(fld, [0, 1, 2])
    assert got[0] == 0
    assert got[1:4] == (1, 2, 4)  # alpha^0, alpha^1, alpha^2
    assert got[4:7] == (1 ^ 2, 1 ^ 4, 2 ^ 4)
    assert got[7] == 1 ^ 2 ^ 4


@pytest.mark.parametrize("m,t", CLASS2_SUITE)
def test_index_subgroup_palindrome(m, t):
    fld = GF2m(m)
    for basis in (list(range(t)), list(range(t, m))):
        seq = index_subgroup(fld, basis)
        top = seq[-1]
        assert all(seq[i] ^ seq[len(seq) - 1 - i] == top for i in range(len(seq)))


def test_index_subgroup_rejects_bad_basis():
    fld = GF2m(3)
    with pytest.raises(ValueError):
        index_subgroup(fld, [0, 0])
    with pytest.raises(ValueError):
        index_subgroup(fld, [3])


def test_random_index_subgroup_deterministic():
    fld = GF2m(4)
    a = random_index_subgroup(fld, [0, 1, 2], seed=42)
    b = random_index_subgroup(fld, [0, 1, 2], seed=42)
    assert a == b
    assert a[0] == 0
    assert sorted(a) == sorted(index_subgroup(fld, [0, 1, 2]))


def test_random_index_subgroup_frozen_seed0_breaks_palindrome():
    fld = GF2m(4)
    got = random_index_subgroup(fld, [0, 1, 2], seed=0)
    assert got == (0, 5, 4, 2, 1, 6, 3, 7)
    top = got[-1]
    assert any(got[i] ^ got[7 - i] != top for i in range(8))


def test_four_element_span_orderings_always_palindromic():
    # The three nonzero elements of a 4-element additive subgroup XOR to
    # zero, so every zero-first ordering keeps the palindromic sums; only
    # spans of 8 or more elements can break the symmetry.
    fld = GF2m(2)
    base = index_subgroup(fld, [0, 1])
    for rest in itertools.permutations(base[1:]):
        seq = (0,) + rest
        top = seq[-1]
        assert all(seq[i] ^ seq[3 - i] == top for i in range(4))


def test_class1_base_gf4():
    fld = GF2m(2)
    w, indexing = build_base_class1(fld, 1, 3)
    expected = np.array([[0, 3, 2], [3, 0, 1], [2, 1, 0]])
    assert np.array_equal(w.entries, expected)
    assert indexing.beta == (1, 2, 3)
    assert indexing.delta == (1,)


def test_class2_base_gf4():
    fld = GF2m(2)
    w, indexing = build_base_class2(fld, 1)
    b = np.array([[0, 1], [1, 0]])
    c = b ^ 2
    expected = np.block([[b, c], [c, b]])
    assert np.array_equal(w.entries, expected)
    assert indexing.beta == (0, 1)
    assert indexing.delta == (0, 2)


@pytest.mark.parametrize("m,c,n", CLASS1_SUITE)
def test_class1_zeros_exactly_on_diagonal(m, c, n):
    fld = GF2m(m)
    w, _ = build_base_class1(fld, c, n)
    zeros = np.argwhere(w.entries == 0)
    assert np.array_equal(zeros, np.array([[i, i] for i in range(w.dim)]))


@pytest.mark.parametrize("m,t", CLASS2_SUITE)
def test_class2_zeros_exactly_on_diagonal(m, t):
    fld = GF2m(m)
    w, _ = build_base_class2(fld, t)
    zeros = np.argwhere(w.entries == 0)
    assert np.array_equal(zeros, np.array([[i, i] for i in range(w.dim)]))


def test_expand_base_shapes_and_nnz():
    spec = CodeSpec.class1(2, 1, 3, gamma=2, rho=3)
    h, w, _, fld = build_code(spec)
    assert (h.rows, h.cols) == (6, 9)
    assert h.num_block_rows == 2 and h.num_block_cols == 3
    # two zero blocks in the truncated 2x3 region
    assert h.nnz() == (fld.q - 1) * 4
    for entries in h.row_entries:
        assert entries == sorted(entries)
    assert h.block_origin[4] == (1, 1)


def test_column_entries_transpose():
    spec = CodeSpec.class2(2, 1, gamma=2, rho=4)
    h, _, _, _ = build_code(spec)
    cols = h.column_entries()
    assert len(cols) == h.cols
    nnz = sum(len(c) for c in cols)
    assert nnz == h.nnz()
    for c, col in enumerate(cols):
        for r, v in col:
            assert (c, v) in h.row_entries[r]


@pytest.mark.parametrize(
    "spec",
    [
        CodeSpec.class1(2, 1, 3, gamma=2, rho=3),
        CodeSpec.class2(3, 1, gamma=3, rho=6),
        CodeSpec.class2(2, 1, gamma=2, rho=4),
    ],
)
def test_recover_base_region_roundtrip(spec):
    h, w, _, fld = build_code(spec)
    region = recover_base_region(h, fld)
    assert np.array_equal(region, w.entries[: spec.gamma, : spec.rho])


def test_recover_base_region_detects_corruption():
    spec = CodeSpec.class1(2, 1, 3, gamma=2, rho=3)
    h, _, _, fld = build_code(spec)
    c, v = h.row_entries[0][0]
    h.row_entries[0][0] = (c, fld.mul(v, 2))
    with pytest.raises(ValueError, match="CPM"):
        recover_base_region(h, fld)


def test_spec_validation_errors():
    with pytest.raises(ValueError, match="c\\*n"):
        CodeSpec.class1(2, 2, 2, gamma=1, rho=1)
    with pytest.raises(ValueError, match="gcd"):
        CodeSpec.class1(6, 21, 3, gamma=1, rho=1)
    with pytest.raises(ValueError, match="t="):
        CodeSpec.class2(3, 0, gamma=1, rho=1)
    with pytest.raises(ValueError, match="t="):
        CodeSpec.class2(3, 3, gamma=1, rho=1)
    with pytest.raises(ValueError, match="gamma"):
        CodeSpec.class1(2, 1, 3, gamma=4, rho=3)
    with pytest.raises(ValueError, match="rho"):
        CodeSpec.class1(2, 1, 3, gamma=3, rho=0)
    with pytest.raises(ValueError, match="code class"):
        CodeSpec(3, 2, 1, 3, 1, 1).validate()


def test_surjective_seed_randomizes_both_orderings():
    spec = CodeSpec.class2(4, 2, gamma=4, rho=4, surjective_seed=5)
    _, indexing, fld = build_base(spec)
    assert indexing.beta == random_index_subgroup(fld, [0, 1], 5)
    assert indexing.delta == random_index_subgroup(fld, [2, 3], 6)
