"""Group contraction by squeeze conjugation, exact in the squeeze parameter.

Conjugating a generator G by the diagonal squeeze C(eps) produces matrix
entries that are finite Laurent polynomials in eps over the exact scalar
ring.  Multiplying by eps^p and taking eps -> 0 is then a bookkeeping
operation on exponents: negative exponents surviving in an entry mean the
limit diverges, the exponent-zero coefficient is the limit, positive
exponents vanish.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

import numpy as np

from .catalog import (GeneratorFamily, POINCARE_LABELS, o32_matrices,
                      translation_matrices)
from .matrices import ExactMatrix
from .scalars import ExactScalar, ONE, ZERO


class EpsScalar:
    """Finite Laurent polynomial in eps: {exponent: ExactScalar}."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[int, ExactScalar] | None = None):
        clean = {}
        if coeffs:
            for k, v in coeffs.items():
                v = ExactScalar.coerce(v)
                if not v.is_zero():
                    clean[int(k)] = v
        object.__setattr__(self, "coeffs", clean)

    def __setattr__(self, name, value):
        raise AttributeError("EpsScalar is immutable")

    @staticmethod
    def of(value, exponent: int = 0) -> "EpsScalar":
        return EpsScalar({exponent: ExactScalar.coerce(value)})

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "EpsScalar") -> "EpsScalar":
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            s = out.get(k, ZERO) + v
            if s.is_zero():
                out.pop(k, None)
            else:
                out[k] = s
        return EpsScalar(out)

    def __sub__(self, other: "EpsScalar") -> "EpsScalar":
        return self + (-other)

    def __neg__(self) -> "EpsScalar":
        return EpsScalar({k: -v for k, v in self.coeffs.items()})

    def __mul__(self, other: "EpsScalar") -> "EpsScalar":
        out: dict = {}
        for k1, v1 in self.coeffs.items():
            for k2, v2 in other.coeffs.items():
                k = k1 + k2
                s = out.get(k, ZERO) + v1 * v2
                if s.is_zero():
                    out.pop(k, None)
                else:
                    out[k] = s
        return EpsScalar(out)

    def shift(self, power: int) -> "EpsScalar":
        """Multiply by eps^power."""
        return EpsScalar({k + power: v for k, v in self.coeffs.items()})

    def __eq__(self, other):
        if not isinstance(other, EpsScalar):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def terms(self):
        """(exponent, coefficient) pairs, exponent ascending."""
        return [(k, self.coeffs[k]) for k in sorted(self.coeffs)]

    def min_exponent(self):
        return min(self.coeffs) if self.coeffs else None

    def at(self, eps: float) -> complex:
        return sum(v.to_complex() * eps ** k for k, v in self.coeffs.items())

    def __str__(self):
        if not self.coeffs:
            return "0"
        bits = []
        for k, v in self.terms():
            body = f"({v})" if v.component_count() > 1 else str(v)
            if k == 0:
                bits.append(body)
            else:
                bits.append(f"{body}*eps^{k}")
        return " + ".join(bits)

    def __repr__(self):
        return f"EpsScalar({self})"


class EpsMatrix:
    """Square matrix of EpsScalar entries."""

    __slots__ = ("rows", "n")

    def __init__(self, rows):
        body = tuple(tuple(x if isinstance(x, EpsScalar) else EpsScalar.of(x)
                           for x in row) for row in rows)
        n = len(body)
        if n == 0 or any(len(r) != n for r in body):
            raise ValueError("matrix must be square and non-empty")
        object.__setattr__(self, "rows", body)
        object.__setattr__(self, "n", n)

    def __setattr__(self, name, value):
        raise AttributeError("EpsMatrix is immutable")

    @staticmethod
    def from_exact(m: ExactMatrix) -> "EpsMatrix":
        return EpsMatrix([[EpsScalar.of(x) for x in row] for row in m.rows])

    @staticmethod
    def diag_powers(entries) -> "EpsMatrix":
        """Diagonal matrix of (coefficient, exponent) monomials."""
        n = len(entries)
        rows = [[EpsScalar() for _ in range(n)] for _ in range(n)]
        for i, (coeff, k) in enumerate(entries):
            rows[i][i] = EpsScalar.of(coeff, k)
        return EpsMatrix(rows)

    def __getitem__(self, idx) -> EpsScalar:
        i, j = idx
        return self.rows[i][j]

    def __matmul__(self, other: "EpsMatrix") -> "EpsMatrix":
        if self.n != other.n:
            raise ValueError("dimension mismatch")
        cols = list(zip(*other.rows))
        out = []
        for row in self.rows:
            out_row = []
            for col in cols:
                acc = EpsScalar()
                for a, b in zip(row, col):
                    if a.coeffs and b.coeffs:
                        acc = acc + a * b
                out_row.append(acc)
            out.append(out_row)
        return EpsMatrix(out)

    def __add__(self, other: "EpsMatrix") -> "EpsMatrix":
        if self.n != other.n:
            raise ValueError("dimension mismatch")
        return EpsMatrix([[a + b for a, b in zip(ra, rb)]
                          for ra, rb in zip(self.rows, other.rows)])

    def __sub__(self, other: "EpsMatrix") -> "EpsMatrix":
        if self.n != other.n:
            raise ValueError("dimension mismatch")
        return EpsMatrix([[a - b for a, b in zip(ra, rb)]
                          for ra, rb in zip(self.rows, other.rows)])

    def shift(self, power: int) -> "EpsMatrix":
        return EpsMatrix([[x.shift(power) for x in row] for row in self.rows])

    def det(self) -> EpsScalar:
        """Cofactor expansion; only used on the small squeeze matrices."""
        if self.n == 1:
            return self.rows[0][0]
        acc = EpsScalar()
        sign = 1
        for j in range(self.n):
            entry = self.rows[0][j]
            if entry.coeffs:
                minor = EpsMatrix([[self.rows[i][k] for k in range(self.n) if k != j]
                                   for i in range(1, self.n)])
                term = entry * minor.det()
                acc = acc + (term if sign > 0 else -term)
            sign = -sign
        return acc

    def __eq__(self, other):
        if not isinstance(other, EpsMatrix):
            return NotImplemented
        return self.n == other.n and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def entries(self):
        for i, row in enumerate(self.rows):
            for j, x in enumerate(row):
                yield i, j, x

    def at(self, eps: float) -> np.ndarray:
        return np.array([[x.at(eps) for x in row] for row in self.rows],
                        dtype=complex)


class DivergentLimit(ArithmeticError):
    """eps -> 0 limit does not exist; carries the diverging entries."""

    def __init__(self, entries):
        self.entries = tuple(entries)  # (i, j, exponent, coefficient)
        where = ", ".join(f"({i},{j}): eps^{k}" for i, j, k, _ in self.entries)
        super().__init__(f"divergent entries in eps -> 0 limit: {where}")


def squeeze_matrix(n: int = 5) -> EpsMatrix:
    """C(eps) = diag(1/eps, ..., 1/eps, eps): space-time blown up, s squeezed."""
    if n < 2:
        raise ValueError("squeeze needs at least a 2-dimensional space")
    return EpsMatrix.diag_powers([(ONE, -1)] * (n - 1) + [(ONE, 1)])


def squeeze_inverse(n: int = 5) -> EpsMatrix:
    return EpsMatrix.diag_powers([(ONE, 1)] * (n - 1) + [(ONE, -1)])


def conjugate(generator: ExactMatrix, scale_power: int = 0) -> EpsMatrix:
    """eps^scale_power * C(eps) G C(eps)^-1, exact in eps."""
    n = generator.n
    conj = squeeze_matrix(n) @ EpsMatrix.from_exact(generator) @ squeeze_inverse(n)
    return conj.shift(scale_power)


def limit(m: EpsMatrix) -> ExactMatrix:
    """eps -> 0 limit; raises DivergentLimit if any entry blows up."""
    divergent = []
    rows = []
    for row in m.rows:
        out_row = []
        for x in row:
            for k, v in x.terms():
                if k < 0:
                    divergent.append((len(rows), len(out_row), k, v))
            out_row.append(x.coeffs.get(0, ZERO))
        rows.append(out_row)
    if divergent:
        raise DivergentLimit(divergent)
    return ExactMatrix(rows)


def dominant_part(m: EpsMatrix) -> EpsMatrix:
    """Keep only the terms at the lowest eps exponent present in the matrix."""
    exps = [x.min_exponent() for _, _, x in m.entries() if not x.is_zero()]
    if not exps:
        return m
    d = min(exps)
    return EpsMatrix([[EpsScalar({d: x.coeffs[d]}) if d in x.coeffs else EpsScalar()
                       for x in row] for row in m.rows])


def contract_via_inverse_squeeze(generator: ExactMatrix) -> ExactMatrix:
    """Alternate contraction route: dominant part, conjugated back.

    C^-1 (dominant part of C G C^-1) C cancels the eps dependence exactly
    whenever the dominant exponent matches the entry position, which is the
    case for every generator of the ten-generator family.
    """
    n = generator.n
    m = conjugate(generator, 0)
    back = squeeze_inverse(n) @ dominant_part(m) @ squeeze_matrix(n)
    return limit(back)


# canonical scale powers: boosts toward the squeezed direction flatten onto
# translations at eps^2; rotations and the surviving boosts are eps-free
CONTRACTION_POWERS = {
    "J1": 0, "J2": 0, "J3": 0,
    "K1": 0, "K2": 0, "K3": 0,
    "Q1": 2, "Q2": 2, "Q3": 2, "S0": 2,
}

CONTRACTION_RELABEL = {
    "J1": "J1", "J2": "J2", "J3": "J3",
    "K1": "K1", "K2": "K2", "K3": "K3",
    "Q1": "P1", "Q2": "P2", "Q3": "P3", "S0": "P0",
}


def contract_family(family: GeneratorFamily, powers: Mapping[str, int],
                    relabel: Mapping[str, str] | None = None,
                    name: str | None = None) -> GeneratorFamily:
    """Apply the scaled squeeze limit to every generator of a matrix family."""
    if family.kind != "matrix":
        raise ValueError("contraction applies to matrix families")
    relabel = relabel or {l: l for l in family.labels}
    els = {}
    for label, g in family.items():
        els[relabel[label]] = limit(conjugate(g, powers[label]))
    labels = tuple(relabel[l] for l in family.labels)
    return GeneratorFamily(
        name or (family.name + "-contracted"), labels, els, None,
        f"squeeze-contraction of {family.name} "
        f"(boosts toward the squeezed axis become translations)")


def contract_o32() -> GeneratorFamily:
    """Contract the five-by-five ten-generator family to the Poincare set.

    J and K are fixed points; Q1, Q2, Q3, S0 flatten onto the translation
    generators P1, P2, P3, P0.  Label order follows the Poincare convention.
    """
    raw = contract_family(o32_matrices(), CONTRACTION_POWERS,
                          CONTRACTION_RELABEL, name="poincare")
    els = {l: raw.element(l) for l in POINCARE_LABELS}
    return GeneratorFamily(
        "poincare", POINCARE_LABELS, els, None,
        "rotations, boosts and translations on (x, y, z, t, 1)")


def expected_translations() -> GeneratorFamily:
    """The translation family the contraction must land on."""
    return translation_matrices()


def numeric_conjugate(generator: ExactMatrix, scale_power: int,
                      eps: float) -> np.ndarray:
    """Floating-point path: eps^p * C(eps) G C(eps)^-1 evaluated numerically."""
    n = generator.n
    c = np.diag([1.0 / eps] * (n - 1) + [eps]).astype(complex)
    c_inv = np.diag([eps] * (n - 1) + [1.0 / eps]).astype(complex)
    return (eps ** scale_power) * (c @ generator.to_numpy() @ c_inv)
