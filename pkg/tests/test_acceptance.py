"""Acceptance gate: one check per shipped guarantee, one line each.

Run with `pytest -v tests/test_acceptance.py` to see a pass/fail line per
criterion, or with `-s` for the printed summary lines.
"""

import time

import numpy as np
import pytest

from ladderlie import catalog, cli, contract, focknum, phspace
from ladderlie.liecore import (StructureConstants, compare, jacobi_check,
                               structure_constants)
from ladderlie.opalg import (OperatorExpr, annihilation_op, commutator,
                             creation_op, momentum, position)
from ladderlie.scalars import I

_VERIFY_CACHE = {}


def _verify_checks():
    if "checks" not in _VERIFY_CACHE:
        config = cli.VerifyConfig()
        _VERIFY_CACHE["config"] = config
        _VERIFY_CACHE["checks"] = cli.run_verify(config)
    return _VERIFY_CACHE["checks"]


def _report(num, text, passed):
    print(f"[{'PASS' if passed else 'FAIL'}] criterion {num}: {text}")
    assert passed, f"criterion {num}: {text}"


def test_criterion_01_ccr_foundation():
    t0 = time.perf_counter()
    ok = commutator(position(1, 1), momentum(1, 1)) == OperatorExpr.constant(I, 1)
    for i in (1, 2):
        for j in (1, 2):
            want = (OperatorExpr.constant(1, 2) if i == j
                    else OperatorExpr.zero(2))
            ok = ok and commutator(annihilation_op(i, 2),
                                   creation_op(j, 2)) == want
    elapsed = time.perf_counter() - t0
    _report(1, "commutation foundation exact and fast",
            ok and elapsed < 1.0)


def test_criterion_02_sp2_closure_three_representations():
    want = StructureConstants.from_brackets(
        catalog.SP2_LABELS, catalog.sp2_bracket_targets())
    ok = True
    reps = {}
    for fam in (catalog.sp2_oscillator(), catalog.sp2_pauli(),
                catalog.sp2_minkowski4()):
        rep = structure_constants(fam)
        ok = ok and rep.closed and compare(rep.constants, want).match
        reps[fam.name] = rep.constants
    ok = ok and compare(reps["sp2-oscillator"], reps["sp2-pauli"]).match
    ok = ok and compare(reps["sp2-oscillator"], reps["sp2-minkowski4"]).match
    # the as-printed variants that fail must surface as WARN, not FAIL
    closure = [c for c in _verify_checks() if c.suite == "closure"]
    warned = {c.name for c in closure if c.status == "WARN"}
    for tag in ("sp2-oscillator[text] closure", "sp2-oscillator[table] closure",
                "sp2-minkowski4[as-printed] closure"):
        ok = ok and tag in warned
    _report(2, "single-mode family closes identically in all three "
               "representations; printed variants warned", ok)


def test_criterion_03_ten_generator_algebra():
    rep = structure_constants(catalog.two_mode_oscillator())
    want = StructureConstants.from_brackets(
        catalog.TEN_LABELS, catalog.de_sitter_bracket_targets())
    ok = rep.closed and compare(rep.constants, want).match
    c = rep.constants
    for i in (1, 2, 3):
        for j in (1, 2, 3):
            target = {"S0": -I} if i == j else {}
            ok = ok and c.bracket_coeffs(f"K{i}", f"Q{j}") == target
        ok = ok and c.bracket_coeffs(f"J{i}", "S0") == {}
    ok = ok and jacobi_check(c)
    _report(3, "two-mode family reproduces the full ten-generator table "
               "with exact Jacobi", ok)


def test_criterion_04_isomorphic_matrix_algebras():
    two = structure_constants(catalog.two_mode_oscillator()).constants
    sp4 = structure_constants(catalog.sp4_matrices()).constants
    o32 = structure_constants(catalog.o32_matrices()).constants
    ok = compare(two, sp4).match and compare(two, o32).match
    printed = structure_constants(catalog.sp4_matrices(catalog.AS_PRINTED))
    ok = ok and printed.dependent == ("Q3",)
    catalog_checks = [c for c in _verify_checks() if c.suite == "catalog"]
    ok = ok and any(c.status == "WARN" and "Q3" in c.detail
                    for c in catalog_checks)
    _report(4, "4x4 symplectic and 5x5 pseudo-orthogonal families share the "
               "operator structure constants; printed deviation warned", ok)


def test_criterion_05_contraction_limits():
    o32 = catalog.o32_matrices()
    trans = catalog.translation_matrices()
    ok = True
    for src in ("Q1", "Q2", "Q3", "S0"):
        got = contract.limit(contract.conjugate(o32.element(src), 2))
        ok = ok and got == trans.element(contract.CONTRACTION_RELABEL[src])
    for label in ("J1", "J2", "J3", "K1", "K2", "K3"):
        got = contract.limit(contract.conjugate(o32.element(label), 0))
        ok = ok and got == o32.element(label)
    eps = 1e-3
    for label, g in o32.items():
        numeric = contract.numeric_conjugate(
            g, contract.CONTRACTION_POWERS[label], eps)
        exact = contract.contract_o32().element(
            contract.CONTRACTION_RELABEL[label]).to_numpy()
        ok = ok and float(np.max(np.abs(numeric - exact))) <= 1e-5
    _report(5, "scaled conjugation limits land exactly on the translation "
               "matrices; numeric path within 1e-5 at eps = 1e-3", ok)


def test_criterion_06_contracted_family_output():
    rep = structure_constants(contract.contract_o32())
    want = StructureConstants.from_brackets(
        catalog.POINCARE_LABELS, catalog.poincare_bracket_targets())
    ok = rep.closed and compare(rep.constants, want).match
    ps = ("P1", "P2", "P3", "P0")
    for i, a in enumerate(ps):
        for b in ps[i + 1:]:
            ok = ok and rep.constants.bracket_coeffs(a, b) == {}
    checks = _verify_checks()
    notes = [c for c in checks if c.status == "NOTE"]
    ok = ok and len(notes) == 1 and "P0" in notes[0].detail
    ok = ok and cli.exit_code_for(checks) == 0
    _report(6, "contracted family is the closed translation-extended algebra; "
               "exit 0 with one documented bracket note", ok)


def test_criterion_07_fock_protected_commutators():
    t0 = time.perf_counter()
    fock = focknum.FockRealization(16, 2)
    fam = catalog.two_mode_oscillator()
    pairs = list(fam.pairs())
    worst = max(focknum.protected_commutator_check(
        fam.element(a), fam.element(b), fock, guard=4) for a, b in pairs)
    elapsed = time.perf_counter() - t0
    ok = len(pairs) == 45 and worst <= 1e-12 and elapsed < 10.0
    _report(7, f"45 protected commutators at cutoff 16 within 1e-12 "
               f"(max {worst:.2e}, {elapsed:.1f}s)", ok)


def test_criterion_08_invariance_flows():
    ts = (-1.0, -0.5, 0.1, 0.5, 1.0)
    sp4 = phspace.flow_residuals(catalog.sp4_matrices(),
                                 phspace.symplectic_residual, ts)
    worst_sp4 = max(r for rows in sp4.values() for _, r in rows)
    o32 = phspace.flow_residuals(catalog.o32_matrices(),
                                 phspace.o32_residual, ts)
    worst_o32 = max(r for rows in o32.values() for _, r in rows)
    rng = np.random.default_rng(4)
    ground = phspace.ground_state()
    drift = 0.0
    for _ in range(100):
        t1, t2 = rng.uniform(0.0, 2 * np.pi, size=2)
        eta = rng.uniform(-0.5, 0.5)
        m = phspace.rotation(t1) @ phspace.squeeze(eta) @ phspace.rotation(t2)
        drift = max(drift, abs(phspace.apply_sp2(ground, m).det_cov - 0.25))
    ok = worst_sp4 <= 1e-10 and worst_o32 <= 1e-10 and drift <= 1e-12
    _report(8, f"flow residuals within 1e-10 (sp4 {worst_sp4:.1e}, o32 "
               f"{worst_o32:.1e}); det drift {drift:.1e} over 100 maps", ok)


def test_criterion_09_mass_shell_invariance():
    worst = 0.0
    for mass in (0.5, 1.0, 2.0):
        for axis in (1, 2, 3):
            p = phspace.FourMomentum.at_rest(mass)
            p = phspace.boost_momentum(p, axis, 2.0)
            p = phspace.rotate_momentum(p, axis % 3 + 1, 1.234)
            p = phspace.boost_momentum(p, (axis + 1) % 3 + 1, -2.0)
            p = phspace.rotate_momentum(p, axis, -0.777)
            worst = max(worst, abs(phspace.mass_shell(p) + mass ** 2))
    _report(9, f"mass shell invariant within 1e-10 under rapidity-2 boosts "
               f"on every axis (max {worst:.1e})", worst <= 1e-10)


def test_criterion_10_translation_action():
    ok = True
    for a, b, c, d in ((1.5, -2.0, 0.25, 3.0), (0.1, -2.5, 3.25, 1.75),
                       (-1.0, 0.5, 0.0, 2.0)):
        m = phspace.translate(a, b, c, d)
        ok = ok and np.array_equal(m, phspace.translate_via_exponential(a, b, c, d))
        v = phspace.Affine5Vector(0.3, -1.0, 2.5, 4.0).transformed(m)
        ok = ok and (v.x, v.y, v.z, v.t) == (0.3 + a, -1.0 + b, 2.5 + c, 4.0 - d)
    _report(10, "translation matrices act as (x+a, y+b, z+c, t-d, 1) and "
                "equal their nilpotent exponentials exactly", ok)
