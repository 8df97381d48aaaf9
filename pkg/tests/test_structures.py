"""Descriptor grammar, literals, and the arithmetic case tables."""

import pytest

from lexiring import descriptors as D
from lexiring import ops
from lexiring.descriptors import parse_struct
from lexiring.errors import CapabilityError, DomainError, ParseError, ShapeError
from lexiring.values import TOP, ZERO, Pair, Scalar, format_value, is_zero, one, parse_value, zero
from lexiring.xreal import XReal


def pv(struct, text):
    return parse_value(parse_struct(struct), text)


# ---------------------------------------------------------------------------
# structure grammar
# ---------------------------------------------------------------------------

def test_parse_aliases_expand_structurally():
    assert parse_struct(r"Z /\ Rc") == parse_struct("O") == D.Insert(D.Z, D.RC)
    assert parse_struct("S") == D.Insert(D.N0, D.RC)
    assert parse_struct("P") == D.Insert(D.Z, D.RO)
    assert parse_struct("Obar") == D.BarInsert(D.Z, D.RC)
    assert parse_struct("Sn(2)") == D.BarInsert(D.N0, D.BarInsert(D.N0, D.RC))
    assert parse_struct("On(2)") == D.BarInsert(D.Z, D.BarInsert(D.Z, D.RC))
    assert parse_struct("Pn(2)") == D.Insert(D.Z, D.Insert(D.Z, D.RO))


def test_parse_sinsert_inside_insert():
    got = parse_struct(r"(N0 \/ N0) /\ Rc")
    assert got == D.Insert(D.SInsert(D.N0, D.N0), D.RC)


def test_bar_operator_forms():
    assert parse_struct(r"Z b/\ Rc") == parse_struct("Obar")
    d = parse_struct(r"N0 b\/ N0")
    assert isinstance(d, D.BarSInsert)
    x = parse_value(d, "(1,2)")
    assert ops.add(d, x, TOP) is TOP
    assert ops.cmp(d, x, TOP) == ops.LT
    assert parse_value(d, "top") is TOP
    assert format_value(d, TOP) == "top"


def test_chains_require_parentheses():
    with pytest.raises(ParseError):
        parse_struct(r"N0 /\ N0 /\ N0")
    with pytest.raises(ParseError):
        parse_struct(r"N0 \/ N0 \/ N0")


def test_capability_validation():
    with pytest.raises(CapabilityError):
        parse_struct(r"Z \/ N0")  # Z is not an ordered abelian semigroup
    with pytest.raises(CapabilityError):
        parse_struct(r"N0 /\ Z")  # residues must come from a semigroup
    with pytest.raises(CapabilityError):
        parse_struct("double(Z)")


def test_capability_flags():
    caps = D.capabilities(parse_struct("P"))
    assert caps["isSemifield"] and caps["isSemiring"]
    assert not caps["hasLubProperty"] and not caps["isSummable"]
    caps_s = D.capabilities(parse_struct("S"))
    assert caps_s["hasLubProperty"] and not caps_s["isSummable"] and not caps_s["hasTop"]
    caps_obar = D.capabilities(parse_struct("Obar"))
    assert caps_obar["hasTop"] and caps_obar["isSummable"] and caps_obar["hasLubProperty"]
    assert not D.capabilities(parse_struct(r"N0 \/ N0"))["isSemiring"]


def test_mixed_parse():
    d = parse_struct("mixed(N0; 0..2; 0:Rc, 1:Rc, 2:Nbar0)")
    assert isinstance(d, D.MixedInsert)
    assert d.residue_desc(2) == D.NBAR0
    assert d.residue_desc(3) is None
    d2 = parse_struct("mixed(Z; ..0; default:Rc)")
    assert d2.residue_desc(-100) == D.RC and d2.residue_desc(1) is None


def test_mixed_arithmetic():
    d = parse_struct("mixed(N0; 0..2; 0:Rc, 1:Rc, 2:Nbar0)")
    lo = parse_value(d, "(0,1/2)")
    hi = parse_value(d, "(2,3)")
    assert ops.add(d, lo, hi) == hi  # level dominance across different residues
    assert ops.add(d, lo, parse_value(d, "(0,1/3)")) == parse_value(d, "(0,5/6)")
    assert ops.add(d, hi, parse_value(d, "(2,inf)")) == parse_value(d, "(2,inf)")
    assert ops.cmp(d, ZERO, lo) == ops.LT
    assert ops.cmp(d, lo, hi) == ops.LT
    with pytest.raises(ShapeError):
        parse_value(d, "(2,1/2)")  # level 2 residues are whole numbers
    with pytest.raises(ShapeError):
        parse_value(d, "(3,1)")  # outside the declared level range
    with pytest.raises(CapabilityError):
        ops.mul(d, lo, hi)  # mixed insertions are semigroups only


# ---------------------------------------------------------------------------
# comparison
# ---------------------------------------------------------------------------

def test_cmp_level_dominates():
    d = parse_struct("O")
    assert ops.cmp(d, pv("O", "(0,5)"), pv("O", "(1,1/10)")) == ops.LT


def test_cmp_zero_least():
    d = parse_struct("S")
    assert ops.cmp(d, ZERO, pv("S", "(0,1/100)")) == ops.LT


def test_cmp_top_greatest():
    d = parse_struct("Obar")
    assert ops.cmp(d, pv("Obar", "(3,inf)"), TOP) == ops.LT


# ---------------------------------------------------------------------------
# addition
# ---------------------------------------------------------------------------

def test_add_dominance():
    d = parse_struct("S")
    assert ops.add(d, pv("S", "(2,1/3)"), pv("S", "(1,inf)")) == pv("S", "(2,1/3)")


def test_add_equal_levels():
    d = parse_struct("S")
    assert ops.add(d, pv("S", "(1,1/4)"), pv("S", "(1,1/2)")) == pv("S", "(1,3/4)")


def test_add_zero_identity():
    for struct, lit in (("S", "(2,1/3)"), ("P", "(-1,3/4)"), ("Obar", "top")):
        d = parse_struct(struct)
        x = pv(struct, lit)
        assert ops.add(d, x, zero(d)) == x
        assert ops.add(d, zero(d), x) == x


def test_add_top_absorbs():
    d = parse_struct("Obar")
    assert ops.add(d, TOP, pv("Obar", "(5,2)")) == TOP


# ---------------------------------------------------------------------------
# multiplication: the non-associativity witness
# ---------------------------------------------------------------------------

def test_mul_right_nested_witness():
    d = parse_struct(r"N0 /\ (N0 /\ N0)")
    x = parse_value(d, "(1,(1,1))")
    y = parse_value(d, "(2,(1,1))")
    assert ops.mul(d, x, y) == parse_value(d, "(3,(2,1))")


def test_mul_left_nested_witness():
    d = parse_struct(r"(N0 /\ N0) /\ N0")
    x = parse_value(d, "((1,1),1)")
    y = parse_value(d, "((2,1),1)")
    assert ops.mul(d, x, y) == parse_value(d, "((2,1),1)")


def test_witness_shapes_are_incompatible():
    right = parse_struct(r"N0 /\ (N0 /\ N0)")
    left = parse_struct(r"(N0 /\ N0) /\ N0")
    with pytest.raises((ShapeError, ParseError)):
        parse_value(left, "(1,(1,1))")
    with pytest.raises((ShapeError, ParseError)):
        parse_value(right, "((1,1),1)")
    # the structural values are rejected too, not just the literals
    from lexiring.values import check_value

    with pytest.raises(ShapeError):
        check_value(left, parse_value(right, "(1,(1,1))"))
    with pytest.raises(ShapeError):
        check_value(right, parse_value(left, "((1,1),1)"))


def test_mul_identity():
    d = parse_struct("P")
    x = pv("P", "(-1,3/4)")
    assert ops.mul(d, x, one(d)) == x
    assert one(d) == pv("P", "(0,1)")


def test_mul_needs_semiring():
    d = parse_struct(r"N0 \/ N0")
    with pytest.raises(CapabilityError):
        ops.mul(d, zero(d), zero(d))


def test_bar_zero_top_products():
    d = parse_struct("Obar")
    x = pv("Obar", "(2,3)")
    assert ops.mul(d, ZERO, TOP) == ZERO
    assert ops.mul(d, TOP, x) == TOP


# ---------------------------------------------------------------------------
# inverses
# ---------------------------------------------------------------------------

def test_inv_examples():
    d = parse_struct("P")
    assert ops.inv(d, pv("P", "(0,1/2)")) == pv("P", "(0,2)")
    assert ops.inv(d, pv("P", "(0,1)")) == pv("P", "(0,1)")


def test_inv_nested_semifield():
    d = parse_struct("Pn(2)")
    x = parse_value(d, "(-1,2,3)")
    ix = ops.inv(d, x)
    # verified by multiplying back to the identity before trusting the literal
    assert ops.mul(d, x, ix) == one(d)
    assert ix == parse_value(d, "(1,(-2,1/3))")
    assert ix == parse_value(d, "(1,-2,1/3)")


def test_inv_errors():
    d = parse_struct("P")
    with pytest.raises(DomainError):
        ops.inv(d, ZERO)
    with pytest.raises(CapabilityError):
        ops.inv(parse_struct("O"), pv("O", "(0,2)"))


def test_try_inv_units_outside_semifields():
    o = parse_struct("O")
    assert ops.try_inv(o, pv("O", "(3,2)")) == pv("O", "(-3,1/2)")
    s = parse_struct("S")
    assert ops.try_inv(s, pv("S", "(0,2)")) == pv("S", "(0,1/2)")
    with pytest.raises(DomainError):
        ops.try_inv(s, pv("S", "(1,2)"))  # no negative levels available
    with pytest.raises(DomainError):
        ops.try_inv(o, pv("O", "(0,inf)"))


def test_divide_dartboard_value():
    d = parse_struct("P")
    got = ops.divide(d, pv("P", "(-1,3/4)"), pv("P", "(0,1/2)"))
    assert got == pv("P", "(-1,3/2)")


# ---------------------------------------------------------------------------
# level / residue projections
# ---------------------------------------------------------------------------

def test_level_residue():
    d = parse_struct("O")
    x = pv("O", "(3,1/2)")
    assert ops.level(d, x) == Scalar(3)
    assert ops.residue(d, x) == Scalar(XReal(1, 2))


def test_residue_of_zero_is_zero():
    d = parse_struct("O")
    assert is_zero(D.RC, ops.residue(d, ZERO))


def test_level_undefined_cases():
    with pytest.raises(DomainError):
        ops.level(parse_struct("Obar"), TOP)
    with pytest.raises(DomainError):
        ops.level(parse_struct("O"), ZERO)


# ---------------------------------------------------------------------------
# double structures
# ---------------------------------------------------------------------------

def test_double_add_cases():
    d = parse_struct("double(O)")
    x = parse_value(d, "(2,5)")
    y = parse_value(d, "-(1,3)")
    assert ops.double_add(d, x, y) == parse_value(d, "(2,5)")
    a = parse_value(d, "(1,3/4)")
    assert ops.double_add(d, a, parse_value(d, "-(1,1/4)")) == parse_value(d, "(1,1/2)")
    assert ops.double_add(d, a, parse_value(d, "-(1,3/4)")) == ZERO


def test_double_neg_and_order():
    d = parse_struct("double(S)")
    x = parse_value(d, "(1,2)")
    nx = ops.neg(d, x)
    assert ops.double_add(d, x, nx) == ZERO
    assert ops.cmp(d, nx, ZERO) == ops.LT
    assert ops.cmp(d, nx, parse_value(d, "-(1,3)")) == ops.GT


# ---------------------------------------------------------------------------
# vectors
# ---------------------------------------------------------------------------

def test_scalar_mul_shifts_levels():
    d = parse_struct("O")
    w = ops.OVector(d, [pv("O", "(0,2)"), pv("O", "(3,inf)")])
    got = ops.scalar_mul_vec(pv("O", "(1,1)"), w)
    assert got == ops.OVector(d, [pv("O", "(1,2)"), pv("O", "(4,inf)")])


def test_scalar_mul_identity():
    d = parse_struct("O")
    w = ops.OVector(d, [pv("O", "(0,2)"), pv("O", "(-1,7)")])
    assert ops.scalar_mul_vec(one(d), w) == w


def test_lattice_points():
    d = parse_struct("O")
    assert ops.is_lattice_point(ops.OVector(d, [pv("O", "(2,inf)"), pv("O", "(0,inf)")]))
    assert not ops.is_lattice_point(ops.OVector(d, [pv("O", "(2,inf)"), pv("O", "(0,1)")]))
    assert not ops.is_lattice_point(ops.OVector(d, [ZERO, pv("O", "(0,inf)")]))


# ---------------------------------------------------------------------------
# associativity isomorphism for s-insertions
# ---------------------------------------------------------------------------

def test_assoc_iso_example():
    d = parse_struct(r"N0 \/ (N0 \/ N0)")
    x = parse_value(d, "(1,(2,3))")
    t = ops.regroup_desc(d)
    assert ops.assoc_iso(d, x) == parse_value(t, "((1,2),3)")
    assert ops.assoc_iso_inv(t, ops.assoc_iso(d, x)) == x


def test_assoc_iso_preserves_zero():
    d = parse_struct(r"N0 \/ (N0 \/ N0)")
    t = ops.regroup_desc(d)
    assert ops.assoc_iso(d, zero(d)) == zero(t)


def test_assoc_iso_homomorphism_random():
    import random

    from lexiring.laws import random_value

    rng = random.Random(11)
    d = parse_struct(r"N0 \/ (Rc \/ N0)")
    t = ops.regroup_desc(d)
    for _ in range(500):
        x = random_value(rng, d)
        y = random_value(rng, d)
        assert ops.assoc_iso(d, ops.add(d, x, y)) == ops.add(t, ops.assoc_iso(d, x), ops.assoc_iso(d, y))
        assert ops.cmp(d, x, y) == ops.cmp(t, ops.assoc_iso(d, x), ops.assoc_iso(d, y))


# ---------------------------------------------------------------------------
# literals
# ---------------------------------------------------------------------------

def test_literal_roundtrip():
    cases = [
        ("O", "(-1,3/2)"),
        ("O", "0"),
        ("Obar", "top"),
        ("S", "(2,inf)"),
        ("Pn(2)", "(1,(-2,1/3))"),
        (r"(N0 \/ N0) /\ Rc", "((1,2),5/3)"),
        (r"N0 \/ N0", "(0,3)"),
        (r"N0 \/ N0", "0"),
        ("double(O)", "-(1,3)"),
        ("double(O)", "(2,5)"),
        ("mixed(N0; 0..2; 0:Rc, 1:Rc, 2:Nbar0)", "(2,inf)"),
    ]
    for struct, text in cases:
        d = parse_struct(struct)
        v = parse_value(d, text)
        assert format_value(d, v) == text
        assert parse_value(d, format_value(d, v)) == v


def test_flat_literals_are_sugar():
    d = parse_struct("Pn(3)")
    assert parse_value(d, "(1,2,3,1/2)") == parse_value(d, "(1,(2,(3,1/2)))")


def test_sinsert_zero_forms():
    d = parse_struct(r"N0 \/ N0")
    assert parse_value(d, "(0,0)") == zero(d) == Pair(Scalar(0), Scalar(0))
    assert format_value(d, zero(d)) == "0"


def test_residue_zero_rejected():
    with pytest.raises(ShapeError):
        pv("O", "(1,0)")


def test_literal_shape_errors():
    with pytest.raises(ShapeError):
        pv("S", "(-1,2)")
    with pytest.raises(ShapeError):
        pv("P", "(0,inf)")
    with pytest.raises(ShapeError):
        pv("O", "top")
    with pytest.raises(ParseError):
        pv("O", "(1,2") and None
    with pytest.raises(ParseError):
        pv("O", "(1,2) junk")
