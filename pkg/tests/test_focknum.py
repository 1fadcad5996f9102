"""Truncated number-basis realizations and the protected-subspace check."""

import numpy as np
import pytest

from ladderlie.catalog import two_mode_oscillator
from ladderlie.focknum import (FockRealization, protected_commutator_check,
                               realize, realize_family)
from ladderlie.opalg import (annihilation_op, commutator, creation_op,
                             number_op, parse_expr)


def test_number_operator_is_diagonal():
    fock = FockRealization(8, 1)
    n = realize(number_op(1, 1), fock)
    want = np.diag(np.arange(8.0)).astype(complex)
    assert np.max(np.abs(n - want)) < 1e-12


def test_ladder_matrix_entries():
    fock = FockRealization(5, 1)
    a = realize(annihilation_op(1, 1), fock)
    for k in range(1, 5):
        assert abs(a[k - 1, k] - np.sqrt(k)) < 1e-15
    ad = realize(creation_op(1, 1), fock)
    assert np.array_equal(ad, a.conj().T)


def test_basis_occupations_order():
    fock = FockRealization(3, 2)
    occ = fock.basis_occupations()
    assert occ[0] == (0, 0)
    assert occ[1] == (0, 1)
    assert occ[3] == (1, 0)
    assert len(occ) == 9
    assert occ[8] == (2, 2)


def test_two_mode_index_convention():
    # column index n1*cutoff + n2 must match kron(mode1, mode2)
    fock = FockRealization(4, 2)
    n1 = realize(number_op(1, 2), fock)
    n2 = realize(number_op(2, 2), fock)
    occ = fock.basis_occupations()
    for k, (o1, o2) in enumerate(occ):
        assert abs(n1[k, k] - o1) < 1e-12
        assert abs(n2[k, k] - o2) < 1e-12


def test_truncation_artifact_at_edge():
    cutoff = 6
    fock = FockRealization(cutoff, 1)
    a = realize(annihilation_op(1, 1), fock)
    ad = realize(creation_op(1, 1), fock)
    comm = a @ ad - ad @ a
    assert abs(comm[-1, -1] - (1 - cutoff)) < 1e-12
    assert np.max(np.abs(comm[:-1, :-1] - np.eye(cutoff - 1))) < 1e-12


def test_s0_spectrum():
    fock = FockRealization(10, 2)
    s0 = realize(two_mode_oscillator().element("S0"), fock)
    occ = fock.basis_occupations()
    want = np.diag([(o1 + o2 + 1) / 2 for o1, o2 in occ]).astype(complex)
    assert np.max(np.abs(s0 - want)) < 1e-12


def test_realized_generators_hermitian():
    fock = FockRealization(8, 2)
    for _, m in realize_family(two_mode_oscillator(), fock).items():
        assert np.max(np.abs(m - m.conj().T)) < 1e-12


def test_protected_commutators_all_pairs():
    fock = FockRealization(16, 2)
    fam = two_mode_oscillator()
    pairs = list(fam.pairs())
    assert len(pairs) == 45
    worst = max(protected_commutator_check(fam.element(a), fam.element(b),
                                           fock, guard=4)
                for a, b in pairs)
    assert worst < 1e-12


def test_identical_arguments_give_zero():
    fock = FockRealization(6, 2)
    j1 = two_mode_oscillator().element("J1")
    assert protected_commutator_check(j1, j1, fock, guard=0) < 1e-15


def test_guard_zero_exposes_edge_effects():
    # quadratics in ad reach two levels above the protected band, so with
    # no guard the matrix commutator disagrees with the symbolic bracket
    fock = FockRealization(4, 2)
    fam = two_mode_oscillator()
    dev = protected_commutator_check(fam.element("K3"), fam.element("Q3"),
                                     fock, guard=0)
    assert dev > 1e-6


def test_guard_validation():
    fock = FockRealization(4, 2)
    fam = two_mode_oscillator()
    with pytest.raises(ValueError):
        protected_commutator_check(fam.element("J1"), fam.element("J2"),
                                   fock, guard=-1)
    with pytest.raises(ValueError):
        protected_commutator_check(fam.element("J1"), fam.element("J2"),
                                   fock, guard=4)


def test_protected_indices():
    fock = FockRealization(5, 2)
    idx = fock.protected_indices(guard=2)
    occ = fock.basis_occupations()
    for k in idx:
        assert sum(occ[k]) <= 2
    assert len(idx) == 6     # (0,0) (0,1) (0,2) (1,0) (1,1) (2,0)


def test_mode_count_enforced():
    fock = FockRealization(5, 1)
    with pytest.raises(ValueError):
        realize(parse_expr("ad1*a2", 2), fock)


def test_cutoff_validation():
    with pytest.raises(ValueError):
        FockRealization(1, 1)
    with pytest.raises(ValueError):
        FockRealization(5, 0)


def test_realize_respects_coefficients():
    fock = FockRealization(6, 1)
    m = realize(parse_expr("(1/2)*ad1*a1 + 3", 1), fock)
    want = np.diag([0.5 * k + 3 for k in range(6)]).astype(complex)
    assert np.max(np.abs(m - want)) < 1e-12
