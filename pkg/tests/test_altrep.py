import itertools
import math

import numpy as np
import pytest

from irreps.altrep import (
    AltIrrepLabel,
    Branch,
    alt_matrix_element,
    associator,
    branch_block,
    branch_dimension,
    split_basis,
)
from irreps.perm import Permutation, partitions, sign
from irreps.symrep import basis, exact_character, matrix_element, rep_permutation
from irreps.tableaux import YoungDiagram, syt_count

SELF_CONJ_LE6 = [s for n in range(1, 7) for s in partitions(n) if YoungDiagram(s).is_self_conjugate()]


def even_perms(n):
    for images in itertools.permutations(range(1, n + 1)):
        p = Permutation(images)
        if sign(p) == 1:
            yield p


# ---- associator ----

def test_associator_21_exact():
    np.testing.assert_allclose(associator((2, 1)).toarray(), [[0, -1j], [1j, 0]], atol=1e-15)


def test_associator_squares_to_identity():
    for n in range(1, 9):
        for shape in partitions(n):
            if YoungDiagram(shape).is_self_conjugate():
                s = associator(shape).toarray()
                np.testing.assert_allclose(s @ s, np.eye(len(s)), atol=1e-12)


def test_associator_rejects_non_self_conjugate():
    with pytest.raises(ValueError):
        associator((3, 2))


def test_associator_block_structure():
    # each pair is a 2x2 block c|T^><T| + conj(c)|T><T^|, c = +-i or +-1 by parity
    for n in range(2, 9):
        for shape in partitions(n):
            lam = YoungDiagram(shape)
            if not lam.is_self_conjugate():
                continue
            odd = ((n - lam.diagonal_length()) // 2) % 2 == 1
            s = associator(shape)
            assert 2 * len(s.pairs) == syt_count(shape)
            for pair in s.pairs:
                allowed = (1j, -1j) if odd else (1, -1)
                assert any(abs(pair.coeff - c) < 1e-15 for c in allowed)
                assert pair.first.word < pair.second.word


def test_associator_commutes_with_even_permutations():
    for shape in SELF_CONJ_LE6:
        s = associator(shape).toarray()
        for p in even_perms(sum(shape)):
            r = rep_permutation(shape, p).entries
            assert np.max(np.abs(s @ r - r @ s)) <= 1e-9


# ---- split basis ----

def test_split_basis_21():
    vecs = split_basis((2, 1))
    np.testing.assert_allclose(vecs["plus"][:, 0], np.array([1, 1j]) / math.sqrt(2), atol=1e-15)
    np.testing.assert_allclose(vecs["minus"][:, 0], np.array([1, -1j]) / math.sqrt(2), atol=1e-15)


def test_split_basis_eigenvectors_orthonormal():
    for n in range(1, 9):
        for shape in partitions(n):
            if not YoungDiagram(shape).is_self_conjugate():
                continue
            s = associator(shape).toarray()
            vecs = split_basis(shape)
            d = syt_count(shape)
            if n > 1:
                assert vecs["plus"].shape[1] == vecs["minus"].shape[1] == d // 2
            both = np.hstack([vecs["plus"], vecs["minus"]])
            np.testing.assert_allclose(both.conj().T @ both, np.eye(d), atol=1e-12)
            np.testing.assert_allclose(s @ vecs["plus"], vecs["plus"], atol=1e-12)
            np.testing.assert_allclose(s @ vecs["minus"], -vecs["minus"], atol=1e-12)


def test_split_dimensions_sum():
    for n in range(1, 9):
        for shape in partitions(n):
            lam = YoungDiagram(shape)
            if lam.is_self_conjugate():
                dims = [branch_dimension(AltIrrepLabel(lam, b)) for b in ("plus", "minus")]
                assert sum(dims) == syt_count(shape)
            else:
                assert branch_dimension(AltIrrepLabel(lam, "whole")) == syt_count(shape)


# ---- matrix elements ----

def test_alt_element_identity():
    label = AltIrrepLabel((3, 2, 1), "plus")
    d = branch_dimension(label)
    for a in range(d):
        for b in range(d):
            assert alt_matrix_element(label, Permutation.identity(6), a, b) == pytest.approx(float(a == b), abs=1e-12)


def test_alt_element_21_three_cycle():
    p = Permutation((2, 3, 1))
    plus = alt_matrix_element(AltIrrepLabel((2, 1), "plus"), p, 0, 0)
    minus = alt_matrix_element(AltIrrepLabel((2, 1), "minus"), p, 0, 0)
    assert abs(plus) <= 1 + 1e-12
    assert plus + minus == pytest.approx(-1, abs=1e-12)
    # A_3 is cyclic, so the two one-dimensional branches are the nontrivial cube roots of unity
    assert abs(plus**3 - 1) < 1e-12 and abs(plus - 1) > 0.5
    assert minus == pytest.approx(np.conj(plus), abs=1e-12)


def test_alt_element_whole_equals_symrep(rng):
    label = AltIrrepLabel((3, 1), "whole")
    tabs = basis((3, 1))
    for p in even_perms(4):
        for a in range(3):
            for b in range(3):
                assert alt_matrix_element(label, p, a, b) == pytest.approx(matrix_element((3, 1), p, tabs[a], tabs[b]))


def test_alt_element_matches_block():
    for shape in [(2, 2), (3, 1, 1), (3, 2, 1)]:
        for branch in ("plus", "minus"):
            label = AltIrrepLabel(shape, branch)
            d = branch_dimension(label)
            for p in list(even_perms(sum(shape)))[:12]:
                block = branch_block(label, p)
                for a in range(d):
                    for b in range(d):
                        assert alt_matrix_element(label, p, a, b) == pytest.approx(block[a, b], abs=1e-12)


def test_a5_golden_ratio_characters():
    # A_5 irreps of degree 3 take the values (1 +- sqrt 5)/2 on 5-cycles
    p = Permutation((2, 3, 4, 5, 1))
    values = sorted(np.trace(branch_block(AltIrrepLabel((3, 1, 1), b), p)).real for b in ("plus", "minus"))
    np.testing.assert_allclose(values, [(1 - math.sqrt(5)) / 2, (1 + math.sqrt(5)) / 2], atol=1e-12)


def test_a4_cube_root_characters():
    p = Permutation((2, 3, 1, 4))
    values = {complex(np.round(np.trace(branch_block(AltIrrepLabel((2, 2), b), p)), 12)) for b in ("plus", "minus")}
    omega = complex(np.round(np.exp(2j * math.pi / 3), 12))
    assert values == {omega, omega.conjugate()}


def test_character_split_sums_to_symmetric_character():
    for shape in SELF_CONJ_LE6:
        for p in even_perms(sum(shape)):
            total = sum(np.trace(branch_block(AltIrrepLabel(shape, b), p)) for b in ("plus", "minus"))
            assert abs(total - exact_character(shape, p)) <= 1e-8


def test_branch_homomorphism(rng):
    for shape in SELF_CONJ_LE6:
        n = sum(shape)
        evens = list(even_perms(n))
        for branch in ("plus", "minus"):
            label = AltIrrepLabel(shape, branch)
            if branch_dimension(label) == 0:
                continue
            for _ in range(20):
                p = evens[int(rng.integers(len(evens)))]
                q = evens[int(rng.integers(len(evens)))]
                lhs = branch_block(label, p * q)
                rhs = branch_block(label, p) @ branch_block(label, q)
                assert np.max(np.abs(lhs - rhs)) <= 1e-9


# ---- errors and labels ----

def test_odd_permutation_rejected():
    with pytest.raises(ValueError):
        alt_matrix_element(AltIrrepLabel((2, 1), "plus"), Permutation((2, 1, 3)), 0, 0)


def test_index_out_of_range():
    with pytest.raises(IndexError):
        alt_matrix_element(AltIrrepLabel((2, 1), "plus"), Permutation.identity(3), 1, 0)


@pytest.mark.parametrize("shape, branch", [((2, 1), "whole"), ((3, 1), "plus"), ((3, 1), "sideways")])
def test_invalid_labels(shape, branch):
    with pytest.raises(ValueError):
        AltIrrepLabel(shape, branch)


def test_branch_enum_values():
    assert [b.value for b in Branch] == ["whole", "plus", "minus"]
