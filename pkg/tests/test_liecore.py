"""Closure, structure constants, Jacobi identity, representation comparison."""

import pytest

from ladderlie.catalog import (AS_PRINTED, de_sitter_bracket_targets,
                               o32_matrices, sp2_bracket_targets,
                               sp2_minkowski4, sp2_oscillator, sp2_pauli,
                               sp4_matrices, translation_matrices,
                               two_mode_oscillator)
from ladderlie.liecore import (NotInSpan, StructureConstants, compare,
                               dependent_labels, expand_in_basis, jacobi_check,
                               render_bracket_lines, render_combination,
                               structure_constants)
from ladderlie.matrices import ExactMatrix
from ladderlie.opalg import parse_expr
from ladderlie.scalars import ExactScalar, HALF, I, ONE


def _target_constants(labels, targets):
    return StructureConstants.from_brackets(labels, targets)


def test_sp2_canonical_closure_all_representations():
    want = _target_constants(sp2_oscillator().labels, sp2_bracket_targets())
    for fam in (sp2_oscillator(), sp2_pauli(), sp2_minkowski4()):
        rep = structure_constants(fam)
        assert rep.closed and not rep.dependent
        assert compare(rep.constants, want).match
        assert jacobi_check(rep.constants)


def test_sp2_bracket_values():
    rep = structure_constants(sp2_oscillator())
    assert rep.constants.bracket_coeffs("J2", "K1") == {"K3": -I}
    assert rep.constants.bracket_coeffs("J2", "K3") == {"K1": I}
    assert rep.constants.bracket_coeffs("K1", "K3") == {"J2": I}


def test_sp2_text_variant_doubles_constants():
    rep = structure_constants(sp2_oscillator("text"))
    assert rep.closed
    assert rep.constants.bracket_coeffs("J2", "K1") == {"K3": -2 * I}
    assert rep.constants.bracket_coeffs("K1", "K3") == {"J2": 2 * I}
    # doubled constants still satisfy Jacobi but differ from the target
    assert jacobi_check(rep.constants)
    want = _target_constants(rep.constants.labels, sp2_bracket_targets())
    assert not compare(rep.constants, want).match


def test_sp2_table_variant_flips_a_sign():
    rep = structure_constants(sp2_oscillator("table"))
    assert rep.closed
    assert rep.constants.bracket_coeffs("K1", "K3") == {"J2": -2 * I}


def test_sp2_minkowski_as_printed_does_not_close():
    rep = structure_constants(sp2_minkowski4(AS_PRINTED))
    assert not rep.closed
    assert (("J2", "K1") in [pair for pair, _ in rep.failures]
            or ("J2", "K3") in [pair for pair, _ in rep.failures])


def test_ten_generator_closure_and_targets():
    want = _target_constants(two_mode_oscillator().labels,
                             de_sitter_bracket_targets())
    for fam in (two_mode_oscillator(), sp4_matrices(), o32_matrices()):
        rep = structure_constants(fam)
        assert rep.closed and not rep.dependent
        assert compare(rep.constants, want).match
        assert jacobi_check(rep.constants)


def test_ten_generator_selected_brackets():
    rep = structure_constants(two_mode_oscillator())
    c = rep.constants
    assert c.bracket_coeffs("J1", "J2") == {"J3": I}
    assert c.bracket_coeffs("K1", "Q1") == {"S0": -I}
    assert c.bracket_coeffs("K2", "Q2") == {"S0": -I}
    assert c.bracket_coeffs("S0", "K1") == {"Q1": I}
    assert c.bracket_coeffs("S0", "Q1") == {"K1": -I}
    assert c.bracket_coeffs("K1", "K2") == {"J3": -I}
    assert c.bracket_coeffs("Q1", "Q2") == {"J3": -I}
    assert c.bracket_coeffs("J1", "S0") == {}
    assert c.bracket_coeffs("K1", "Q2") == {}


def test_two_mode_as_printed_flips_s0_sector():
    rep = structure_constants(two_mode_oscillator(AS_PRINTED))
    assert rep.closed
    c = rep.constants
    assert c.bracket_coeffs("K1", "Q1") == {"S0": I}
    assert c.bracket_coeffs("S0", "K1") == {"Q1": -I}
    # the rotation sector is unaffected
    assert c.bracket_coeffs("J1", "J2") == {"J3": I}


def test_sp4_as_printed_is_dependent():
    rep = structure_constants(sp4_matrices(AS_PRINTED))
    assert rep.dependent == ("Q3",)
    assert not rep.closed
    assert rep.constants is None


def test_translations_commute():
    rep = structure_constants(translation_matrices())
    assert rep.closed
    assert not rep.constants.nonzero_triplets()


def test_cross_representation_compare():
    osc = structure_constants(sp2_oscillator()).constants
    pauli = structure_constants(sp2_pauli()).constants
    assert compare(osc, pauli).match
    two = structure_constants(two_mode_oscillator()).constants
    sp4 = structure_constants(sp4_matrices()).constants
    o32 = structure_constants(o32_matrices()).constants
    assert compare(two, sp4).match
    assert compare(two, o32).match


def test_compare_reports_mismatches():
    osc = structure_constants(sp2_oscillator()).constants
    text = structure_constants(sp2_oscillator("text")).constants
    result = compare(osc, text)
    assert not result.match
    assert ("J2", "K1", "K3") in [(a, b, c) for a, b, c, _, _ in result.mismatches]


def test_compare_with_correspondence():
    osc = structure_constants(sp2_oscillator()).constants
    relabeled = StructureConstants.from_brackets(
        ("R", "B1", "B3"),
        {("R", "B1"): {"B3": -I}, ("R", "B3"): {"B1": I},
         ("B1", "B3"): {"R": I}})
    mapping = {"J2": "R", "K1": "B1", "K3": "B3"}
    assert compare(osc, relabeled, mapping).match
    with pytest.raises(ValueError):
        compare(osc, relabeled, {"J2": "R", "K1": "B1", "K3": "B1"})


def test_restricted_minkowski_matches_pauli():
    sub = sp2_minkowski4().restrict((0, 2, 3))
    rep = structure_constants(sub)
    pauli = structure_constants(sp2_pauli()).constants
    assert rep.closed and compare(rep.constants, pauli).match


def test_expand_in_basis_operator():
    fam = two_mode_oscillator()
    target = fam.element("J1") * 2 - fam.element("S0") * I
    coeffs = expand_in_basis(target, fam)
    nonzero = {k: v for k, v in coeffs.items() if not v.is_zero()}
    assert nonzero == {"J1": ExactScalar.rational(2), "S0": -I}


def test_expand_in_basis_not_in_span():
    result = expand_in_basis(ExactMatrix.identity(2), sp2_pauli())
    assert isinstance(result, NotInSpan)
    assert not result.max_component().is_zero()


def test_expand_rejects_mixed_kinds():
    with pytest.raises(TypeError):
        expand_in_basis(parse_expr("ad1*a1", 1), sp2_pauli())


def test_dependent_labels():
    assert dependent_labels(sp4_matrices(AS_PRINTED)) == ("Q3",)
    assert dependent_labels(sp4_matrices()) == ()


def test_corrupted_table_fails_jacobi():
    targets = de_sitter_bracket_targets()
    labels = two_mode_oscillator().labels
    good = StructureConstants.from_brackets(labels, targets)
    assert jacobi_check(good)
    bad_targets = dict(targets)
    bad_targets[("K1", "Q1")] = {"S0": I}     # sign flipped
    bad = StructureConstants.from_brackets(labels, bad_targets)
    assert not jacobi_check(bad)


def test_render_bracket_lines():
    rep = structure_constants(two_mode_oscillator())
    lines = render_bracket_lines(rep.constants)
    assert "[K1, Q1] = -i S0" in lines
    assert "[J1, J2] = i J3" in lines
    assert "[J1, S0] = 0" in lines
    assert len(lines) == 45


def test_render_combination():
    labels = ("A", "B")
    assert render_combination({}, labels) == "0"
    assert render_combination({"A": ONE}, labels) == "A"
    assert render_combination({"A": -ONE}, labels) == "-A"
    assert render_combination({"A": I, "B": -HALF}, labels) == "i A - 1/2 B"
    assert render_combination({"B": HALF + I}, labels) == "(1/2 + i) B"


def test_structure_constants_json_dict():
    rep = structure_constants(sp2_oscillator())
    d = rep.constants.to_json_dict()
    assert d["labels"] == ["J2", "K1", "K3"]
    assert ["J2", "K1", "K3", "-i"] in d["triplets"]
