"""Exact Lie-algebraic analysis of generator families.

Commutators of family members are expanded back in the family basis by exact
Gaussian elimination over Q(i, sqrt2), giving structure constants with no
numeric tolerance anywhere.  Closure failures and linear dependencies are
returned as data, not exceptions, so typo'd variants can be reported.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .catalog import GeneratorFamily
from .matrices import ExactMatrix
from .opalg import OperatorExpr, commutator as op_commutator
from .scalars import ExactScalar, ONE, ZERO


def bracket(x, y):
    """Commutator dispatch for the two element kinds."""
    if isinstance(x, OperatorExpr) and isinstance(y, OperatorExpr):
        return op_commutator(x, y)
    if isinstance(x, ExactMatrix) and isinstance(y, ExactMatrix):
        return x.commutator(y)
    raise TypeError("bracket requires two OperatorExpr or two ExactMatrix")


# ---------------------------------------------------------------------------
# vectorization and exact linear solving
# ---------------------------------------------------------------------------


def _operator_keys(exprs) -> list:
    keys = set()
    for e in exprs:
        for mono in e.terms:
            keys.add((mono.cdeg, mono.adeg))
    return sorted(keys)


def _vectorize(element, keys=None) -> list:
    if isinstance(element, ExactMatrix):
        return list(element.entries())
    return [element.coefficient(c, a) for (c, a) in keys]


def _solve_exact(columns: Sequence[list], rhs: list):
    """Solve sum_j c_j * columns[j] = rhs over the exact field.

    Returns (status, data): ("unique", coeffs), ("dependent", pivot_free_cols)
    when the columns are linearly dependent, or ("inconsistent", residual)
    with residual = rhs - A @ particular for the least-entangled particular
    solution (free/unsolvable parts dropped, exactly nonzero).
    """
    m = len(rhs)
    n = len(columns)
    aug = [[columns[j][i] for j in range(n)] + [rhs[i]] for i in range(m)]

    pivot_cols: list = []
    row = 0
    for col in range(n):
        pivot = None
        for r in range(row, m):
            if not aug[r][col].is_zero():
                pivot = r
                break
        if pivot is None:
            continue
        aug[row], aug[pivot] = aug[pivot], aug[row]
        inv = aug[row][col].inverse()
        aug[row] = [x * inv for x in aug[row]]
        for r in range(m):
            if r != row and not aug[r][col].is_zero():
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[row])]
        pivot_cols.append(col)
        row += 1
        if row == m:
            break

    inconsistent = any(all(aug[r][c].is_zero() for c in range(n))
                       and not aug[r][n].is_zero() for r in range(m))
    coeffs = [ZERO] * n
    for r, col in enumerate(pivot_cols):
        coeffs[col] = aug[r][n]

    if inconsistent:
        residual = list(rhs)
        for j in range(n):
            if not coeffs[j].is_zero():
                residual = [x - coeffs[j] * y for x, y in zip(residual, columns[j])]
        return "inconsistent", residual
    if len(pivot_cols) < n:
        free = [j for j in range(n) if j not in pivot_cols]
        return "dependent", (coeffs, free)
    return "unique", coeffs


@dataclass(frozen=True)
class NotInSpan:
    """Expansion failure: the exact residual left outside the span."""

    residual: tuple

    def max_component(self) -> ExactScalar:
        for x in self.residual:
            if not x.is_zero():
                return x
        return ZERO


def expand_in_basis(element, basis: GeneratorFamily):
    """Expand element in the family basis.

    Returns {label: ExactScalar} on success or NotInSpan(residual).  Raises
    ValueError if the element lives on a different representation space or
    the basis is linearly dependent (no unique expansion exists).
    """
    first = basis.element(basis.labels[0])
    if type(element) is not type(first):
        raise TypeError("element and basis have different representation kinds")
    if GeneratorFamily._dim_of(element) != basis.dim:
        raise ValueError("dimension mismatch between element and basis")
    if basis.kind == "operator":
        keys = _operator_keys([element] + [e for _, e in basis.items()])
        columns = [_vectorize(e, keys) for _, e in basis.items()]
        rhs = _vectorize(element, keys)
    else:
        columns = [_vectorize(e) for _, e in basis.items()]
        rhs = _vectorize(element)
    status, data = _solve_exact(columns, rhs)
    if status == "inconsistent":
        return NotInSpan(tuple(data))
    if status == "dependent":
        raise ValueError("basis is linearly dependent; expansion is not unique")
    return {label: c for label, c in zip(basis.labels, data)}


def dependent_labels(basis: GeneratorFamily) -> tuple:
    """Labels whose generator lies in the span of the earlier ones."""
    if basis.kind == "operator":
        keys = _operator_keys([e for _, e in basis.items()])
        vectors = [_vectorize(e, keys) for _, e in basis.items()]
    else:
        vectors = [_vectorize(e) for _, e in basis.items()]
    bad = []
    independent: list = []
    for label, vec in zip(basis.labels, vectors):
        if not independent:
            if all(x.is_zero() for x in vec):
                bad.append(label)
            else:
                independent.append(vec)
            continue
        status, _ = _solve_exact(independent, vec)
        if status == "unique":
            bad.append(label)
        else:
            independent.append(vec)
    return tuple(bad)


# ---------------------------------------------------------------------------
# structure constants
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class StructureConstants:
    """Sparse antisymmetric tensor f with [X_a, X_b] = sum_c f_abc X_c."""

    labels: tuple
    table: Mapping[tuple, ExactScalar]

    def f(self, a: str, b: str, c: str) -> ExactScalar:
        return self.table.get((a, b, c), ZERO)

    def bracket_coeffs(self, a: str, b: str) -> dict:
        return {c: v for (x, y, c), v in self.table.items() if (x, y) == (a, b)}

    def nonzero_triplets(self):
        """Both orientations, deterministic order."""
        order = {l: k for k, l in enumerate(self.labels)}
        keys = sorted(self.table, key=lambda t: (order[t[0]], order[t[1]], order[t[2]]))
        return [(a, b, c, self.table[(a, b, c)]) for (a, b, c) in keys]

    @staticmethod
    def from_brackets(labels: Sequence[str], brackets: Mapping) -> "StructureConstants":
        """Build from {(a, b): {c: coeff}} given for a before b; antisymmetrized."""
        table = {}
        for (a, b), rhs in brackets.items():
            for c, v in rhs.items():
                v = ExactScalar.coerce(v)
                if v.is_zero():
                    continue
                table[(a, b, c)] = v
                table[(b, a, c)] = -v
        return StructureConstants(tuple(labels), table)

    def to_json_dict(self) -> dict:
        return {
            "labels": list(self.labels),
            "triplets": [[a, b, c, str(v)] for a, b, c, v in self.nonzero_triplets()],
        }


@dataclass(frozen=True)
class ClosureReport:
    """Outcome of a closure computation over one family."""

    family: str
    variant: str
    closed: bool
    constants: StructureConstants | None
    failures: tuple = ()            # ((a, b), NotInSpan) pairs
    dependent: tuple = ()           # labels spanned by earlier generators

    @property
    def well_defined(self) -> bool:
        return self.closed and not self.dependent


def structure_constants(basis: GeneratorFamily) -> ClosureReport:
    """Compute all pairwise brackets and expand them in the family basis.

    Pairs are traversed in declared label order; antisymmetric counterparts
    are filled in rather than recomputed.  A linearly dependent family gets
    no constants table (expansion coefficients would not be unique).
    """
    dependent = dependent_labels(basis)
    if dependent:
        return ClosureReport(basis.name, basis.variant, False, None,
                             (), dependent)
    table: dict = {}
    failures: list = []
    for a, b in basis.pairs():
        com = bracket(basis.element(a), basis.element(b))
        result = expand_in_basis(com, basis)
        if isinstance(result, NotInSpan):
            failures.append(((a, b), result))
            continue
        for c, v in result.items():
            if not v.is_zero():
                table[(a, b, c)] = v
                table[(b, a, c)] = -v
    if failures:
        return ClosureReport(basis.name, basis.variant, False, None,
                             tuple(failures), ())
    return ClosureReport(basis.name, basis.variant, True,
                         StructureConstants(basis.labels, table))


def jacobi_check(constants: StructureConstants) -> bool:
    """Contracted Jacobi identity on the f tensor; exact."""
    labels = constants.labels
    n = len(labels)
    for ia in range(n):
        for ib in range(ia + 1, n):
            for ic in range(ib + 1, n):
                a, b, c = labels[ia], labels[ib], labels[ic]
                for e in labels:
                    acc = ZERO
                    for d in labels:
                        acc = acc + constants.f(a, b, d) * constants.f(d, c, e)
                        acc = acc + constants.f(b, c, d) * constants.f(d, a, e)
                        acc = acc + constants.f(c, a, d) * constants.f(d, b, e)
                    if not acc.is_zero():
                        return False
    return True


@dataclass(frozen=True)
class CompareResult:
    match: bool
    mismatches: tuple = ()          # (a, b, c, f_left, f_right)


def compare(left: StructureConstants, right: StructureConstants,
            correspondence: Mapping[str, str] | None = None) -> CompareResult:
    """Compare two structure-constant tables under a label correspondence.

    `correspondence` maps left labels to right labels (identity by default).
    Representation dimension plays no role; only the tables are compared.
    """
    if len(left.labels) != len(right.labels):
        raise ValueError("families must have the same number of generators")
    if correspondence is None:
        correspondence = {l: l for l in left.labels}
    if set(correspondence) != set(left.labels) or \
            set(correspondence.values()) != set(right.labels):
        raise ValueError("correspondence must be a bijection between label sets")
    mismatches = []
    for a in left.labels:
        for b in left.labels:
            for c in left.labels:
                fl = left.f(a, b, c)
                fr = right.f(correspondence[a], correspondence[b], correspondence[c])
                if fl != fr:
                    mismatches.append((a, b, c, fl, fr))
    return CompareResult(not mismatches, tuple(mismatches))


def render_bracket_lines(constants: StructureConstants) -> list:
    """One text line per ordered pair: `[A, B] = c1 L1 + c2 L2` or `= 0`."""
    lines = []
    for i, a in enumerate(constants.labels):
        for b in constants.labels[i + 1:]:
            coeffs = constants.bracket_coeffs(a, b)
            lines.append(f"[{a}, {b}] = {render_combination(coeffs, constants.labels)}")
    return lines


def render_combination(coeffs: Mapping[str, ExactScalar], label_order) -> str:
    parts = []
    for label in label_order:
        v = coeffs.get(label, ZERO)
        if v.is_zero():
            continue
        if v == ONE:
            body = label
        elif v == -ONE:
            body = f"-{label}"
        elif v.component_count() > 1:
            body = f"({v}) {label}"
        else:
            body = f"{v} {label}"
        parts.append(body)
    if not parts:
        return "0"
    out = parts[0]
    for p in parts[1:]:
        if p.startswith("-"):
            out += " - " + p[1:]
        else:
            out += " + " + p
    return out
