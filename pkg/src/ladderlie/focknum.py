"""Truncated number-basis realization of ladder-operator expressions.

Operators become complex matrices on the span of |n1, ..., nM> with each
n < cutoff.  Truncation corrupts matrix elements near the edge (the matrix
CCR picks up a rank-one defect of size cutoff at the last level), so
commutator checks are restricted to a protected subspace of states whose
total quanta stay `guard` levels below the edge.  Quadratic generators move
total quanta by at most 2, so guard >= 2 makes one product exact on the
protected rows and guard >= 4 an operator product of two quadratics.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .opalg import OperatorExpr, commutator


@dataclass(frozen=True)
class FockRealization:
    """Truncation context: per-mode cutoff and mode count."""

    cutoff: int
    modes: int

    def __post_init__(self):
        if self.cutoff < 2:
            raise ValueError("cutoff must be at least 2")
        if self.modes < 1:
            raise ValueError("mode count must be at least 1")

    @property
    def dim(self) -> int:
        return self.cutoff ** self.modes

    def basis_occupations(self):
        """Occupation tuple for every basis index (mode 1 varies slowest)."""
        out = []
        for idx in range(self.dim):
            occ = []
            rem = idx
            for _ in range(self.modes):
                rem, n = divmod(rem, self.cutoff)
                occ.append(n)
            out.append(tuple(reversed(occ)))
        return out

    def protected_indices(self, guard: int) -> np.ndarray:
        """Indices of basis states with total quanta <= cutoff - 1 - guard."""
        if guard < 0:
            raise ValueError("guard must be non-negative")
        budget = self.cutoff - 1 - guard
        if budget < 0:
            raise ValueError(
                f"guard {guard} leaves no protected states at cutoff {self.cutoff}")
        keep = []
        for idx in range(self.dim):
            total = 0
            rem = idx
            for _ in range(self.modes):
                rem, n = divmod(rem, self.cutoff)
                total += n
            if total <= budget:
                keep.append(idx)
        return np.array(keep, dtype=int)


@lru_cache(maxsize=None)
def _mode_matrices(cutoff: int):
    a = np.diag(np.sqrt(np.arange(1, cutoff, dtype=float)), k=1)
    return a, a.T.copy()


@lru_cache(maxsize=None)
def _ladder(cutoff: int, modes: int, mode: int, creation: bool) -> np.ndarray:
    a, ad = _mode_matrices(cutoff)
    op = ad if creation else a
    out = np.eye(1)
    for m in range(1, modes + 1):
        out = np.kron(out, op if m == mode else np.eye(cutoff))
    return out


def realize(expr: OperatorExpr, fock: FockRealization) -> np.ndarray:
    """Matrix of a normally ordered expression on the truncated basis."""
    if expr.modes != fock.modes:
        raise ValueError(
            f"expression has {expr.modes} mode(s), realization has {fock.modes}")
    n = fock.dim
    out = np.zeros((n, n), dtype=complex)
    for mono in expr.terms:
        term = np.eye(n)
        for mode, c in enumerate(mono.cdeg, start=1):
            for _ in range(c):
                term = _ladder(fock.cutoff, fock.modes, mode, True) @ term
        word = np.eye(n)
        for mode, d in enumerate(mono.adeg, start=1):
            for _ in range(d):
                word = _ladder(fock.cutoff, fock.modes, mode, False) @ word
        out += mono.coeff.to_complex() * (term @ word)
    return out


def protected_commutator_check(a: OperatorExpr, b: OperatorExpr,
                               fock: FockRealization, guard: int = 4) -> float:
    """Max deviation between matrix and symbolic commutators, protected rows.

    Computes [realize(a), realize(b)] - realize([a, b] symbolic) and returns
    the largest magnitude over the protected-row/protected-column block.
    """
    ma = realize(a, fock)
    mb = realize(b, fock)
    sym = realize(commutator(a, b), fock)
    diff = (ma @ mb - mb @ ma) - sym
    keep = fock.protected_indices(guard)
    block = diff[np.ix_(keep, keep)]
    return float(np.max(np.abs(block))) if block.size else 0.0


def realize_family(family, fock: FockRealization) -> dict:
    """Realize every generator of an operator family."""
    return {label: realize(expr, fock) for label, expr in family.items()}
