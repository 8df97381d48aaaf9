"""Countable sums and least upper bounds."""

import pytest

from lexiring.descriptors import parse_struct
from lexiring.errors import NotRepresentableError, NotSummableError
from lexiring.seq import LevelRamp, Repeat, ResidueRamp, SeqGen, least_positive, sum_sequence, sup_sequence
from lexiring.values import TOP, Scalar, parse_value, zero
from lexiring.xreal import XReal


def pv(struct, text):
    return parse_value(parse_struct(struct), text)


def test_unbounded_levels_sum_to_top_in_bar():
    d = parse_struct("Obar")
    s = SeqGen(tail=LevelRamp(1, 1, Scalar(XReal(1))))
    assert sum_sequence(d, s) is TOP


def test_unbounded_levels_error_without_top():
    d = parse_struct("O")
    s = SeqGen(tail=LevelRamp(1, 1, Scalar(XReal(1))))
    with pytest.raises(NotSummableError):
        sum_sequence(d, s)


def test_dominant_head_term_wins():
    d = parse_struct("S")
    s = SeqGen(head=[pv("S", "(2,1/2)")], tail=Repeat(pv("S", "(1,5)")))
    assert sum_sequence(d, s) == pv("S", "(2,1/2)")


def test_constant_repeat_at_top_level():
    d = parse_struct("Sbar")
    s = SeqGen(tail=Repeat(pv("Sbar", "(3,1/2)")))
    assert sum_sequence(d, s) == pv("Sbar", "(3,inf)")


def test_repeat_not_summable_in_p():
    d = parse_struct("P")
    s = SeqGen(tail=Repeat(pv("P", "(0,1)")))
    with pytest.raises(NotSummableError):
        sum_sequence(d, s)


def test_finite_sum_and_empty():
    d = parse_struct("O")
    s = SeqGen(head=[pv("O", "(1,1/4)"), pv("O", "(1,1/2)"), pv("O", "(0,9)")])
    assert sum_sequence(d, s) == pv("O", "(1,3/4)")
    assert sum_sequence(d, SeqGen()) == zero(d)


def test_sup_residue_ramp_reaches_infinity():
    d = parse_struct("S")
    s = SeqGen(tail=ResidueRamp(4, pv("Rc", "1")))
    assert sup_sequence(d, s) == pv("S", "(4,inf)")


def test_sup_residue_ramp_not_representable_in_p():
    d = parse_struct("P")
    s = SeqGen(tail=ResidueRamp(0, pv("Ro", "1")))
    with pytest.raises(NotRepresentableError):
        sup_sequence(d, s)


def test_sup_residue_ramp_discrete_residues():
    # unbounded residues below a discrete level structure push one level up
    d = parse_struct(r"N0 /\ N0")
    s = SeqGen(tail=ResidueRamp(2, Scalar(1)))
    assert sup_sequence(d, s) == parse_value(d, "(3,1)")


def test_sup_level_ramp():
    assert sup_sequence(parse_struct("Obar"), SeqGen(tail=LevelRamp(0, 1, Scalar(XReal(1))))) is TOP
    with pytest.raises(NotRepresentableError):
        sup_sequence(parse_struct("O"), SeqGen(tail=LevelRamp(0, 1, Scalar(XReal(1)))))


def test_sup_finite_set_is_max():
    d = parse_struct(r"(N0 \/ N0) \/ N0")
    vals = [parse_value(d, t) for t in ("((0,1),2)", "((1,0),0)", "((0,4),4)")]
    assert sup_sequence(d, vals) == parse_value(d, "((1,0),0)")


def test_least_positive():
    assert least_positive(parse_struct("N0")) == Scalar(1)
    assert least_positive(parse_struct(r"N0 \/ N0")) == parse_value(parse_struct(r"N0 \/ N0"), "(0,1)")
    with pytest.raises(NotRepresentableError):
        least_positive(parse_struct("Rc"))


def test_sup_head_dominates_tail():
    d = parse_struct("S")
    s = SeqGen(head=[pv("S", "(9,1)")], tail=ResidueRamp(4, pv("Rc", "1")))
    assert sup_sequence(d, s) == pv("S", "(9,1)")
