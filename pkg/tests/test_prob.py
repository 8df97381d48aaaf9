"""Depth probability: validation, standard form, conditioning, Bayes."""

import pytest

from lexiring.descriptors import parse_struct
from lexiring.errors import CapabilityError, DomainError
from lexiring.integrate import SimpleFunction
from lexiring.measure import AtomSpace, LMeasure, shift_levels
from lexiring.prob import (
    bayes,
    cond_prob,
    depth,
    level_masses,
    normalize_from_density,
    standardize,
    validate_probability,
)
from lexiring.scenes import builtin_scene
from lexiring.values import ZERO, parse_value
from lexiring.xreal import ONE


def pv(struct, text):
    return parse_value(parse_struct(struct), text)


def test_validate_dartboard():
    m = builtin_scene("dartboard")
    report = validate_probability(m)
    assert report["ok"]
    assert report["level_masses"] == {"0": "1", "-1": "1"}
    assert report["empty_event_zero"]


def test_validate_bad_mass():
    d = parse_struct("P")
    space = AtomSpace(["a", "b"])
    m = LMeasure(d, space, {"a": pv("P", "(0,1)"), "b": pv("P", "(-1,3/4)")})
    report = validate_probability(m)
    assert not report["ok"]
    assert any("3/4" in f for f in report["failures"])


def test_level_masses_depth2():
    assert level_masses(builtin_scene("dartboard-depth2")) == {0: ONE, -1: ONE, -2: ONE}


def test_validate_zero_measure_fails():
    d = parse_struct("P")
    m = LMeasure(d, AtomSpace(["a"]), {"a": ZERO})
    report = validate_probability(m)
    assert not report["ok"]
    assert any("identically zero" in f for f in report["failures"])


# ---------------------------------------------------------------------------
# conditional probability (the four walkthrough values)
# ---------------------------------------------------------------------------

def test_conditional_probabilities():
    m = builtin_scene("dartboard")
    assert cond_prob(m, m.space.event("cross"), m.space.event("upper")) == pv("P", "(-1,3/2)")
    assert cond_prob(m, m.space.event("upper_vray"), m.space.event("cross")) == pv("P", "(0,1/4)")
    inter = m.space.event("upper") & m.space.event("cross")
    assert cond_prob(m, m.space.event("upper_vray"), inter) == pv("P", "(0,1/3)")
    assert cond_prob(m, m.space.event("upper_vray"), m.space.event("upper")) == pv("P", "(-1,1/2)")


def test_conditioning_on_zero_event_fails():
    m = builtin_scene("dartboard")
    with pytest.raises(DomainError):
        cond_prob(m, m.space.event("cross"), ("center",))


def test_cond_prob_shift_invariant():
    m = builtin_scene("dartboard")
    a, b = m.space.event("upper_vray"), m.space.event("upper")
    want = cond_prob(m, a, b)
    for k in (-2, 1, 3):
        assert cond_prob(shift_levels(m, k), a, b) == want


# ---------------------------------------------------------------------------
# standard form and depth
# ---------------------------------------------------------------------------

def test_standardize_shifted_scene():
    m = shift_levels(builtin_scene("dartboard"), 3)  # levels {3, 2}
    pm = standardize(m)
    assert pm.base.attained_levels() == [-1, 0]
    assert pm.total_depth == 1
    assert pm.base.atom_values == builtin_scene("dartboard").atom_values


def test_standardize_already_standard():
    pm = standardize(builtin_scene("dartboard"))
    assert pm.base.atom_values == builtin_scene("dartboard").atom_values
    assert pm.total_depth == 1


def test_depth2_scene():
    pm = standardize(builtin_scene("dartboard-depth2"))
    assert pm.total_depth == 2
    assert depth(pm, ("center",)) == 2
    assert depth(pm, pm.base.space.event("cross")) == 1
    assert depth(pm, pm.base.space.event("upper")) == 0


def test_depth_examples():
    pm = standardize(builtin_scene("dartboard"))
    assert depth(pm, pm.base.space.event("cross")) == 1
    assert depth(pm, pm.base.space.event("upper")) == 0
    with pytest.raises(DomainError):
        depth(pm, ("center",))


# ---------------------------------------------------------------------------
# Bayes
# ---------------------------------------------------------------------------

def test_bayes_quadrants_horizontal_line():
    m = builtin_scene("dartboard")
    out = bayes(m, ["Q1", "Q2", "Q3", "Q4"], "hline")
    assert out["conditionals"]["Q1"] == pv("P", "(-1,1)")
    assert out["conditionals"]["Q2"] is ZERO
    assert out["conditionals"]["Q4"] is ZERO
    # computed directly from the scene; the third quadrant behaves like the first
    assert out["conditionals"]["Q3"] == pv("P", "(-1,1)")
    assert out["total"] == pv("P", "(-1,1/2)")
    assert out["posteriors"]["Q1"] == pv("P", "(0,1/2)")


def test_bayes_total_is_event_mass():
    m = builtin_scene("dartboard")
    out = bayes(m, ["Q1", "Q2", "Q3", "Q4"], "hline")
    assert out["total"] == m.value(m.space.event("hline"))


def test_bayes_two_cell_symmetry():
    d = parse_struct("P")
    space = AtomSpace(["l", "r"], {"L": ["l"], "R": ["r"], "all": ["l", "r"]})
    m = LMeasure(d, space, {"l": pv("P", "(0,1/2)"), "r": pv("P", "(0,1/2)")})
    out = bayes(m, ["L", "R"], "all")
    assert out["posteriors"]["L"] == pv("P", "(0,1/2)")
    assert out["posteriors"]["R"] == pv("P", "(0,1/2)")


def test_bayes_order_independent():
    m = builtin_scene("dartboard")
    base = bayes(m, ["Q1", "Q2", "Q3", "Q4"], "hline")
    for order in (["Q4", "Q2", "Q1", "Q3"], ["Q3", "Q4", "Q1", "Q2"]):
        out = bayes(m, order, "hline")
        assert out["total"] == base["total"]
        assert out["posteriors"] == base["posteriors"]
        assert out["conditionals"] == base["conditionals"]


def test_bayes_partition_validation():
    m = builtin_scene("dartboard")
    with pytest.raises(DomainError):
        bayes(m, ["Q1", "Q2", "Q3"], "hline")  # does not cover
    with pytest.raises(DomainError):
        bayes(m, ["Q1", "Q1", "Q2", "Q3", "Q4"], "hline")  # overlaps


def _set_partitions(items):
    """All partitions of a list into nonempty cells."""
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in _set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [part[i] + [first]] + part[i + 1:]
        yield part + [[first]]


def test_law_of_total_probability_exhaustive_small():
    d = parse_struct("P")
    atoms = ["a", "b", "c", "d", "e"]
    space = AtomSpace(atoms)
    m = LMeasure(
        d,
        space,
        {
            "a": pv("P", "(0,1/2)"),
            "b": pv("P", "(0,1/2)"),
            "c": pv("P", "(-1,2/3)"),
            "d": pv("P", "(-1,1/3)"),
            "e": pv("P", "(-2,1)"),
        },
    )
    assert validate_probability(m)["ok"]
    from lexiring.ops import add, mul

    events = []
    for mask in range(1, 2 ** len(atoms)):
        events.append([x for i, x in enumerate(atoms) if mask >> i & 1])
    n_checked = 0
    for cells in _set_partitions(atoms):
        for b_ev in events:
            out = bayes(m, [list(c) for c in cells], b_ev)
            assert out["total"] == m.value(b_ev)
            acc = None
            for name in out["posteriors"]:
                term = mul(d, out["conditionals"][name], out["priors"][name])
                acc = term if acc is None else add(d, acc, term)
            assert acc == m.value(b_ev)
            n_checked += 1
    assert n_checked == 52 * 31  # every partition of 5 atoms, every nonempty event


def test_depth_range_invariant():
    pm = standardize(builtin_scene("dartboard-depth2"))
    atoms = pm.base.space.atoms
    for mask in range(1, 2 ** len(atoms)):
        ev = [a for i, a in enumerate(atoms) if mask >> i & 1]
        v = pm.value(ev)
        if v is not ZERO:
            assert 0 <= depth(pm, ev) <= pm.total_depth


# ---------------------------------------------------------------------------
# nested-level probability
# ---------------------------------------------------------------------------

def nested_scene():
    d = parse_struct("Pn(2)")
    space = AtomSpace(["a", "b", "c"])
    return LMeasure(
        d,
        space,
        {
            "a": pv("Pn(2)", "(0,0,1)"),
            "b": pv("Pn(2)", "(-1,0,1/2)"),
            "c": pv("Pn(2)", "(-1,-1,1)"),
        },
    )


def test_nested_validation_and_conditioning():
    m = nested_scene()
    assert validate_probability(m)["ok"]
    got = cond_prob(m, ("b",), ("b", "c"))
    assert got == pv("Pn(2)", "(0,0,1)")  # b dominates the union
    got2 = cond_prob(m, ("c",), ("b", "c"))
    assert got2 == pv("Pn(2)", "(0,-1,2)")


def test_nested_positive_component_fails():
    d = parse_struct("Pn(2)")
    space = AtomSpace(["a"])
    m = LMeasure(d, space, {"a": pv("Pn(2)", "(0,1,1)")})
    assert not validate_probability(m)["ok"]


def test_nested_standardize_shifts_to_zero_vector():
    d = parse_struct("Pn(2)")
    space = AtomSpace(["a", "b"])
    m = LMeasure(d, space, {"a": pv("Pn(2)", "(-1,-2,1)"), "b": pv("Pn(2)", "(-2,-1,1)")})
    pm = standardize(m)
    vecs = sorted(
        (v.level.x, v.residue.level.x) for v in pm.base.atom_values.values()
    )
    assert vecs == [(-1, 0), (0, -1)]


def test_depth_rejects_nested():
    with pytest.raises(CapabilityError):
        depth(standardize(nested_scene()), ("a",))


def test_too_deep_rejected():
    d = parse_struct("Pn(4)")
    space = AtomSpace(["a"])
    m = LMeasure(d, space, {"a": pv("Pn(4)", "(0,0,0,0,1)")})
    with pytest.raises(CapabilityError):
        validate_probability(m)


# ---------------------------------------------------------------------------
# densities
# ---------------------------------------------------------------------------

def test_unit_density_reproduces_scene():
    m = builtin_scene("dartboard")
    f = SimpleFunction.lvalued(m.desc, {a: pv("P", "(0,1)") for a in m.space.atoms})
    pm = normalize_from_density(m, f)
    assert pm.base.atom_values == m.atom_values


def test_density_renormalizes_levels():
    m = builtin_scene("dartboard")
    vals = {a: pv("P", "(0,2)") for a in ("q1", "q2")}
    vals.update({a: pv("P", "(0,2/3)") for a in ("q3", "q4")})
    vals.update({a: pv("P", "(0,1)") for a in ("rv_up", "rv_down", "rh_left", "rh_right")})
    vals["center"] = pv("P", "(0,1)")
    f = SimpleFunction.lvalued(m.desc, vals)
    pm = normalize_from_density(m, f)
    report = validate_probability(pm.base)
    assert report["ok"]
    # direct level-wise normalization oracle
    got_q1 = pm.base.atom_values["q1"]
    assert got_q1 == pv("P", "(0,3/8)")  # 1/2 / (4/3)
    assert pm.base.atom_values["rv_up"] == pv("P", "(-1,1/4)")


def test_density_with_level_shift():
    d = parse_struct("P")
    space = AtomSpace(["a", "b"])
    m = LMeasure(d, space, {"a": pv("P", "(0,1/2)"), "b": pv("P", "(0,1/2)")})
    f = SimpleFunction.lvalued(d, {"a": pv("P", "(1,1)"), "b": pv("P", "(0,1)")})
    pm = normalize_from_density(m, f)
    assert validate_probability(pm.base)["ok"]
    assert pm.base.atom_values["a"] == pv("P", "(0,1)")
    assert pm.base.atom_values["b"] == pv("P", "(-1,1)")
