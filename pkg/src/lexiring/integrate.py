"""Integration of atomwise-constant functions against level-valued measures.

On a finite atom space every function is simple, so the three integrals
reduce to finite sums:

  * real-valued f: the result lives at the highest level where the
    weighted residue sum is nonzero; slices below it are dominated.
  * structure-valued g: atoms are partitioned by the level of g, the
    residues are integrated one nesting level down, and each part is
    level-shifted back by the partition level.
  * signed f: integrate the positive and negative parts separately and
    combine with the sign-aware case rule.

Infinite residues propagate through the arithmetic; no special casing.
"""

from __future__ import annotations

from .descriptors import Base, BarInsert, DoubleOf, Insert, StructDesc
from .errors import CapabilityError, DomainError, ShapeError
from .measure import LMeasure
from .ops import _add, _double_add, shift
from .values import TOP, ZERO, Pair, Scalar, Signed, Value, check_value, is_zero, zero
from .xreal import XReal
from .xreal import ZERO as XR_ZERO


class SimpleFunction:
    """Atomwise-constant function: real, structure-valued, or signed."""

    __slots__ = ("kind", "desc", "values")

    def __init__(self, kind, desc, values):
        self.kind = kind
        self.desc = desc
        self.values = dict(values)

    @classmethod
    def real(cls, values: dict) -> "SimpleFunction":
        for v in values.values():
            if not isinstance(v, XReal):
                raise ShapeError(f"real-valued functions take extended rationals, got {v!r}")
        return cls("real", None, values)

    @classmethod
    def lvalued(cls, desc: StructDesc, values: dict) -> "SimpleFunction":
        for v in values.values():
            check_value(desc, v)
        return cls("lvalued", desc, values)

    @classmethod
    def signed(cls, desc: StructDesc, values: dict) -> "SimpleFunction":
        if not isinstance(desc, DoubleOf):
            raise ShapeError("signed functions need a double() descriptor")
        for v in values.values():
            check_value(desc, v)
        return cls("signed", desc, values)

    def at(self, atom: str):
        if atom not in self.values:
            raise DomainError(f"function has no value at atom {atom!r}")
        return self.values[atom]


def _require_sliceable(d: StructDesc):
    ok = (
        isinstance(d, (Insert, BarInsert))
        and isinstance(d.a, Base)
        and d.a.name in ("N0", "Z")
        and isinstance(d.b, Base)
        and d.b.name in ("Rc", "Ro")
    )
    if not ok:
        raise CapabilityError("integration needs an (integer level, rational residue) measure")


def integrate_real(m: LMeasure, f: SimpleFunction, A) -> Value:
    """Level-sum integral of a nonnegative real-valued function."""
    if f.kind != "real":
        raise ShapeError("expected a real-valued function")
    _require_sliceable(m.desc)
    ev = m.space.check_event(A)
    weighted = {}
    for a in ev:
        fa = f.at(a)
        v = m.atom_values[a]
        if v is ZERO or fa.is_zero:
            continue
        if v is TOP:
            return TOP
        k = v.level.x
        weighted[k] = weighted.get(k, XR_ZERO) + fa * v.residue.x
    best = None
    for k, w in weighted.items():
        if not w.is_zero and (best is None or k > best):
            best = k
    if best is None:
        return zero(m.desc)
    return Pair(Scalar(best), Scalar(weighted[best]))


def _levels_are_ints(d: StructDesc) -> bool:
    return isinstance(d, (Insert, BarInsert)) and isinstance(d.a, Base) and d.a.name in ("N0", "Z")


def integrate_lvalued(m: LMeasure, g: SimpleFunction, B) -> Value:
    """Integral of a structure-valued function, by level partition."""
    if g.kind != "lvalued":
        raise ShapeError("expected a structure-valued function")
    _require_sliceable(m.desc)
    ev = m.space.check_event(B)

    def go(desc, values, atoms) -> Value:
        if isinstance(desc, Base):
            if desc.name not in ("Rc", "Ro"):
                raise CapabilityError(f"cannot integrate values of {desc!r}")
            f = SimpleFunction.real({a: values[a].x for a in atoms})
            return integrate_real(m, f, atoms)
        if not _levels_are_ints(desc):
            raise CapabilityError("integrand must be a right-nested integer-leveled structure")
        parts = {}
        for a in atoms:
            v = values[a]
            if v is ZERO:
                continue
            if v is TOP:
                raise DomainError("a top-valued integrand has no level partition")
            parts.setdefault(v.level.x, []).append(a)
        total = zero(m.desc)
        for k, part_atoms in parts.items():
            inner = go(desc.b, {a: values[a].residue for a in part_atoms}, part_atoms)
            total = _add(m.desc, total, shift(m.desc, inner, k))
        return total

    return go(g.desc, {a: g.at(a) for a in ev}, sorted(ev))


def integrate_signed(m: LMeasure, f: SimpleFunction, A) -> Value:
    """Signed integral: split into positive and negative parts, combine."""
    if f.kind != "signed":
        raise ShapeError("expected a signed function")
    dd: DoubleOf = f.desc
    ev = m.space.check_event(A)
    plus, minus = {}, {}
    for a in ev:
        v = f.at(a)
        if v is ZERO:
            plus[a] = minus[a] = ZERO
        elif v.sign > 0:
            plus[a], minus[a] = v.mag, ZERO
        else:
            plus[a], minus[a] = ZERO, v.mag
    p = integrate_lvalued(m, SimpleFunction.lvalued(dd.inner, plus), ev)
    n = integrate_lvalued(m, SimpleFunction.lvalued(dd.inner, minus), ev)
    if p is TOP or n is TOP:
        raise DomainError("signed integral with an unbounded part is undefined")
    p_signed = ZERO if is_zero(dd.inner, p) else Signed(1, p)
    n_signed = ZERO if is_zero(dd.inner, n) else Signed(-1, n)
    return _double_add(dd, p_signed, n_signed)
