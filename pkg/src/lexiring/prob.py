"""Depth-valued probability on finite scenes.

A probability measure here takes values in the semifield of pairs
(integer level, finite positive rational); each attained level must
carry total mass one.  Events whose classical probability vanishes keep
a nonzero value at a negative level; ``depth`` is minus that level on a
standard measure.  Division makes conditional probability and Bayes
inference exact.

Nested variants (levels that are themselves leveled, up to three deep)
support validation, conditioning and Bayes; standardization for them is
shift-only, because closing lexicographic gaps is not meaningful on a
finite scene.
"""

from __future__ import annotations

from .descriptors import Base, Insert, StructDesc
from .errors import CapabilityError, DomainError, InfiniteMassError
from .integrate import SimpleFunction, integrate_lvalued, integrate_real
from .measure import LMeasure, align_levels, shift_levels
from .ops import _add, _mul, divide
from .values import TOP, ZERO, Pair, Scalar, Value, is_zero, zero
from .xreal import ONE as XR_ONE
from .xreal import XReal


def prob_depth_of_desc(d: StructDesc):
    """How many integer levels are stacked over the finite rationals; None if not a probability structure."""
    n = 0
    while isinstance(d, Insert) and isinstance(d.a, Base) and d.a.name == "Z":
        n += 1
        d = d.b
    if n and isinstance(d, Base) and d.name == "Ro":
        return n
    return None


def _require_prob_desc(d: StructDesc) -> int:
    n = prob_depth_of_desc(d)
    if n is None:
        raise CapabilityError("probability needs integer levels over finite rationals")
    if n > 3:
        raise CapabilityError("probability levels deeper than 3 are not supported")
    return n


def _level_vector(v: Value, n: int):
    levels = []
    cur = v
    for _ in range(n):
        levels.append(cur.level.x)
        cur = cur.residue
    return tuple(levels), cur.x


class PMeasure:
    """A validated probability scene."""

    def __init__(self, base: LMeasure, is_standard: bool, total_depth):
        self.base = base
        self.is_standard = is_standard
        self.total_depth = total_depth

    @property
    def desc(self):
        return self.base.desc

    def value(self, E) -> Value:
        return self.base.value(E)


def level_masses(m: LMeasure) -> dict:
    """Total residue mass per attained level (vector)."""
    n = _require_prob_desc(m.desc)
    masses = {}
    for v in m.atom_values.values():
        if v is ZERO:
            continue
        vec, s = _level_vector(v, n)
        key = vec[0] if n == 1 else vec
        masses[key] = masses.get(key, XReal(0)) + s
    return masses


def validate_probability(m: LMeasure) -> dict:
    """Check the probability conditions; returns a report, never raises for mass failures."""
    n = _require_prob_desc(m.desc)
    masses = level_masses(m)
    report = {
        "depth_levels": n,
        "level_masses": {str(k): str(v) for k, v in sorted(masses.items(), reverse=True)},
        "empty_event_zero": is_zero(m.desc, m.value(())),
        "ok": True,
        "failures": [],
    }
    if not masses:
        report["failures"].append("the measure is identically zero")
    elif n == 1:
        for lev, mass in masses.items():
            if mass != XR_ONE:
                report["failures"].append(f"level {lev} has mass {mass}, expected 1")
    else:
        for vec, mass in masses.items():
            if any(c > 0 for c in vec):
                report["failures"].append(f"level vector {vec} has a positive component")
            if mass > XR_ONE:
                report["failures"].append(f"level vector {vec} has mass {mass} > 1")
    report["ok"] = not report["failures"]
    return report


def _require_valid(m: LMeasure) -> int:
    report = validate_probability(m)
    if not report["ok"]:
        raise DomainError("not a probability measure: " + "; ".join(report["failures"]))
    return report["depth_levels"]


def standardize(m: LMeasure) -> PMeasure:
    """Shift the top attained level to zero and close interior gaps."""
    n = _require_valid(m)
    if n == 1:
        levels = m.attained_levels()
        if not levels:
            raise DomainError("the zero measure cannot be standardized")
        shifted = shift_levels(m, -levels[-1])
        aligned = align_levels(shifted)
        d = -aligned.attained_levels()[0]
        return PMeasure(aligned, True, d)
    # nested levels: shift so the componentwise maximum becomes the zero vector
    vecs = [
        _level_vector(v, n)[0] for v in m.atom_values.values() if v is not ZERO
    ]
    if not vecs:
        raise DomainError("the zero measure cannot be standardized")
    kappa = tuple(-max(vec[i] for vec in vecs) for i in range(n))
    unit = _unit_with_levels(m.desc, kappa)
    atom_values = {a: _mul(m.desc, unit, v) for a, v in m.atom_values.items()}
    out = LMeasure(m.desc, m.space, atom_values)
    return PMeasure(out, True, -min(_level_vector(v, n)[0][0] for v in out.atom_values.values() if v is not ZERO))


def _unit_with_levels(d: StructDesc, kappa) -> Value:
    if isinstance(d, Base):
        return Scalar(XR_ONE)
    return Pair(Scalar(kappa[0]), _unit_with_levels(d.b, kappa[1:]))


def depth(m, E) -> int:
    """Depth of an event under a standard single-level-stack measure."""
    pm = m if isinstance(m, PMeasure) else standardize(m)
    if prob_depth_of_desc(pm.desc) != 1:
        raise CapabilityError("depth is defined for single-stack probability measures")
    if not pm.is_standard:
        raise DomainError("depth needs a standard measure")
    v = pm.value(E)
    if v is ZERO:
        raise DomainError("zero-measure events have no depth")
    return -v.level.x


def cond_prob(m, A, B) -> Value:
    """P(A | B) = value(A and B) / value(B), exactly."""
    base = m.base if isinstance(m, PMeasure) else m
    _require_prob_desc(base.desc)
    ev_a = base.space.check_event(A)
    ev_b = base.space.check_event(B)
    vb = base.value(ev_b)
    if is_zero(base.desc, vb):
        raise DomainError("conditioning on a zero-measure event")
    vab = base.value(ev_a & ev_b)
    if is_zero(base.desc, vab):
        return zero(base.desc)
    return divide(base.desc, vab, vb)


def bayes(m, partition, B) -> dict:
    """Posterior table over a partition given the event B.

    Returns conditionals P(B|A_i), priors P(A_i), the total
    P(B) = sum_i P(B|A_i) P(A_i), and posteriors P(A_i|B); posteriors are
    cross-checked against direct conditioning.
    """
    base = m.base if isinstance(m, PMeasure) else m
    d = base.desc
    _require_prob_desc(d)
    cells = []
    for name_or_set in partition:
        if isinstance(name_or_set, str):
            cells.append((name_or_set, base.space.event(name_or_set)))
        else:
            cells.append((f"cell{len(cells) + 1}", base.space.check_event(name_or_set)))
    if len({name for name, _ in cells}) != len(cells):
        raise DomainError("partition cell names repeat")
    seen = frozenset()
    for name, ev in cells:
        if seen & ev:
            raise DomainError(f"partition cells overlap at {sorted(seen & ev)}")
        seen |= ev
        if is_zero(d, base.value(ev)):
            raise DomainError(f"partition cell {name!r} has zero measure")
    if seen != frozenset(base.space.atoms):
        raise DomainError("partition does not cover the atom space")
    ev_b = base.space.event(B) if isinstance(B, str) else base.space.check_event(B)
    vb = base.value(ev_b)
    if is_zero(d, vb):
        raise DomainError("conditioning on a zero-measure event")

    conditionals, priors, terms = {}, {}, {}
    total = zero(d)
    for name, ev in cells:
        prior = base.value(ev)
        cond = base.value(ev & ev_b)
        cond = zero(d) if is_zero(d, cond) else divide(d, cond, prior)
        conditionals[name] = cond
        priors[name] = prior
        term = _mul(d, cond, prior)
        terms[name] = term
        total = _add(d, total, term)
    posteriors = {}
    for name, ev in cells:
        if is_zero(d, terms[name]):
            posteriors[name] = zero(d)
        else:
            posteriors[name] = divide(d, terms[name], total)
        direct = cond_prob(base, ev, ev_b)
        if posteriors[name] != direct:
            raise AssertionError(f"posterior for {name!r} disagrees with direct conditioning")
    return {
        "conditionals": conditionals,
        "priors": priors,
        "total": total,
        "posteriors": posteriors,
    }


def normalize_from_density(mu: LMeasure, f: SimpleFunction) -> PMeasure:
    """Integrate a density against a scene, then renormalize each level to mass one."""
    if prob_depth_of_desc(mu.desc) != 1:
        raise CapabilityError("densities are supported over single-stack probability scenes")
    atom_values = {}
    for a in mu.space.atoms:
        if f.kind == "real":
            v = integrate_real(mu, f, (a,))
        elif f.kind == "lvalued":
            v = integrate_lvalued(mu, f, (a,))
        else:
            raise CapabilityError("signed densities do not define probability measures")
        if v is TOP:
            raise InfiniteMassError("density integral reached top")
        if v is not ZERO and v.residue.x.is_inf:
            raise InfiniteMassError("density integral has an infinite residue")
        atom_values[a] = v
    totals = {}
    for v in atom_values.values():
        if v is not ZERO:
            totals[v.level.x] = totals.get(v.level.x, XReal(0)) + v.residue.x
    normalized = {}
    for a, v in atom_values.items():
        if v is ZERO:
            normalized[a] = ZERO
        else:
            normalized[a] = Pair(v.level, Scalar(v.residue.x / totals[v.level.x]))
    out = LMeasure(mu.desc, mu.space, normalized)
    return standardize(out)
