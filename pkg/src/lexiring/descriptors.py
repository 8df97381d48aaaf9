"""Structure descriptors: the AST every arithmetic operation is driven by.

A descriptor says how an ordered structure was assembled from base
structures via the two lexicographic combinators (and their variants):

  * ``SInsert(A, B)``   -- full lexicographic product A x B of two
    ordered abelian semigroups (grammar ``\\/``).
  * ``Insert(A, B)``    -- A x (B minus its zero) plus a fresh zero,
    level-dominant addition, level-additive multiplication
    (grammar ``/\\``).
  * ``BarSInsert`` / ``BarInsert`` -- the same with a greatest element
    ``top`` adjoined so all countable sums evaluate.
  * ``MixedInsert``     -- a different residue semigroup at each level.
  * ``DoubleOf``        -- signed wrapper {0} u {+,-} x (L minus 0).

Bases: ``N0`` (naturals), ``Z`` (integers, a group, only usable on the
level side), ``Rc`` = [0, inf], ``Ro`` = [0, inf), ``Nbar0`` = naturals
with infinity.

Capability queries (``is_semiring`` etc.) are structural; the least
upper bound and summability flags follow the sufficient conditions under
which lexicographic products inherit those properties from their parts.
"""

from __future__ import annotations

from .errors import CapabilityError, ParseError

BASE_NAMES = ("N0", "Z", "Rc", "Ro", "Nbar0")


class StructDesc:
    __slots__ = ()


class Base(StructDesc):
    __slots__ = ("name",)

    def __init__(self, name: str):
        if name not in BASE_NAMES:
            raise CapabilityError(f"unknown base structure {name!r}")
        self.name = name

    def __eq__(self, other):
        return isinstance(other, Base) and self.name == other.name

    def __hash__(self):
        return hash(("Base", self.name))

    def __repr__(self):
        return self.name


class _Pairing(StructDesc):
    __slots__ = ("a", "b")
    _tag = ""
    _op = ""

    def __init__(self, a: StructDesc, b: StructDesc):
        self.a = a
        self.b = b

    def __eq__(self, other):
        return type(other) is type(self) and self.a == other.a and self.b == other.b

    def __hash__(self):
        return hash((self._tag, self.a, self.b))

    def __repr__(self):
        return f"({self.a!r} {self._op} {self.b!r})"


class SInsert(_Pairing):
    __slots__ = ()
    _tag = "SInsert"
    _op = "\\/"


class Insert(_Pairing):
    __slots__ = ()
    _tag = "Insert"
    _op = "/\\"


class BarSInsert(_Pairing):
    __slots__ = ()
    _tag = "BarSInsert"
    _op = "b\\/"


class BarInsert(_Pairing):
    __slots__ = ()
    _tag = "BarInsert"
    _op = "b/\\"


class MixedInsert(StructDesc):
    """Level-dependent residues over an integer level range.

    ``table`` maps explicitly listed levels to descriptors; ``default``
    covers the rest of the range.  ``lo``/``hi`` may be ``None`` for a
    half-bounded range (only with base ``Z``); a half-bounded or gappy
    range requires a default.
    """

    __slots__ = ("base", "lo", "hi", "table", "default")

    def __init__(self, base, lo, hi, table, default=None):
        self.base = base
        self.lo = lo
        self.hi = hi
        self.table = tuple(sorted(table))
        self.default = default

    def residue_desc(self, level: int):
        if self.lo is not None and level < self.lo:
            return None
        if self.hi is not None and level > self.hi:
            return None
        if self.base.name == "N0" and level < 0:
            return None
        for lev, d in self.table:
            if lev == level:
                return d
        return self.default

    def __eq__(self, other):
        return (
            isinstance(other, MixedInsert)
            and self.base == other.base
            and self.lo == other.lo
            and self.hi == other.hi
            and self.table == other.table
            and self.default == other.default
        )

    def __hash__(self):
        return hash(("MixedInsert", self.base, self.lo, self.hi, self.table, self.default))

    def __repr__(self):
        rng = f"{'' if self.lo is None else self.lo}..{'' if self.hi is None else self.hi}"
        parts = [f"{k}:{d!r}" for k, d in self.table]
        if self.default is not None:
            parts.append(f"default:{self.default!r}")
        return f"mixed({self.base!r}; {rng}; {', '.join(parts)})"


class DoubleOf(StructDesc):
    __slots__ = ("inner",)

    def __init__(self, inner: StructDesc):
        self.inner = inner

    def __eq__(self, other):
        return isinstance(other, DoubleOf) and self.inner == other.inner

    def __hash__(self):
        return hash(("DoubleOf", self.inner))

    def __repr__(self):
        return f"double({self.inner!r})"


# ---------------------------------------------------------------------------
# capability queries
# ---------------------------------------------------------------------------

def is_group(d: StructDesc) -> bool:
    """Ordered abelian group (usable as the level side of an insertion)."""
    return isinstance(d, Base) and d.name == "Z"


def is_semigroup(d: StructDesc) -> bool:
    """Ordered abelian semigroup: zero is least and a + b >= b."""
    if isinstance(d, Base):
        return d.name != "Z"
    if isinstance(d, DoubleOf):
        return False
    return True


def is_semiring(d: StructDesc) -> bool:
    if isinstance(d, Base):
        return d.name != "Z"
    if isinstance(d, (Insert, BarInsert)):
        return is_semiring(d.b)
    return False


def is_semifield(d: StructDesc) -> bool:
    if isinstance(d, Base):
        return d.name == "Ro"
    if isinstance(d, Insert):
        return is_group(d.a) and is_semifield(d.b)
    return False


def has_top(d: StructDesc) -> bool:
    """Whether the structure has a greatest element."""
    if isinstance(d, Base):
        return d.name in ("Rc", "Nbar0")
    if isinstance(d, (BarInsert, BarSInsert)):
        return True
    if isinstance(d, (Insert, SInsert)):
        return has_top(d.a) and has_top(d.b)
    return False


def _bounded_sets_have_greatest(d: StructDesc) -> bool:
    if isinstance(d, Base):
        return d.name in ("N0", "Z")
    if isinstance(d, (Insert, SInsert, BarInsert, BarSInsert)):
        return _bounded_sets_have_greatest(d.a) and _bounded_sets_have_greatest(d.b)
    return False


def _has_least_positive(d: StructDesc) -> bool:
    if isinstance(d, Base):
        return d.name in ("N0", "Z", "Nbar0")
    if isinstance(d, (SInsert, BarSInsert)):
        return _has_least_positive(d.b)
    if isinstance(d, (Insert, BarInsert)):
        return is_semigroup(d.a) and _has_least_positive(d.b)
    return False


def _every_set_has_least(d: StructDesc) -> bool:
    if isinstance(d, Base):
        return d.name in ("N0", "Nbar0")
    if isinstance(d, (SInsert, Insert, BarSInsert, BarInsert)):
        return _every_set_has_least(d.a) and _every_set_has_least(d.b)
    return False


def has_lub(d: StructDesc) -> bool:
    """Least-upper-bound property (sufficient structural conditions)."""
    if isinstance(d, Base):
        return True
    if isinstance(d, (Insert, SInsert, BarInsert, BarSInsert)):
        return (
            _bounded_sets_have_greatest(d.a)
            and has_lub(d.b)
            and (has_top(d.b) or (_has_least_positive(d.b) and _every_set_has_least(d.a)))
        )
    return False


def is_summable(d: StructDesc) -> bool:
    """Every countable sum of positive elements evaluates in d."""
    if isinstance(d, Base):
        return d.name in ("Rc", "Nbar0")
    if isinstance(d, (BarInsert, BarSInsert)):
        return is_summable(d.b)
    return False


def capabilities(d: StructDesc) -> dict:
    return {
        "isGroup": is_group(d),
        "isSemigroup": is_semigroup(d),
        "isSemiring": is_semiring(d),
        "isSemifield": is_semifield(d),
        "hasTop": has_top(d),
        "hasLubProperty": has_lub(d),
        "isSummable": is_summable(d),
    }


def validate_desc(d: StructDesc) -> StructDesc:
    """Check combinator operand requirements, recursively."""
    if isinstance(d, Base):
        return d
    if isinstance(d, (SInsert, BarSInsert)):
        validate_desc(d.a)
        validate_desc(d.b)
        if not is_semigroup(d.a):
            raise CapabilityError(f"left operand of \\/ must be an ordered abelian semigroup: {d.a!r}")
        if not is_semigroup(d.b):
            raise CapabilityError(f"right operand of \\/ must be an ordered abelian semigroup: {d.b!r}")
        return d
    if isinstance(d, (Insert, BarInsert)):
        validate_desc(d.a)
        validate_desc(d.b)
        if not (is_group(d.a) or is_semigroup(d.a)):
            raise CapabilityError(f"level operand of /\\ must be a group or semigroup: {d.a!r}")
        if not is_semigroup(d.b):
            raise CapabilityError(f"residue operand of /\\ must be an ordered abelian semigroup: {d.b!r}")
        return d
    if isinstance(d, MixedInsert):
        if d.base.name not in ("N0", "Z"):
            raise CapabilityError("mixed insertion levels must come from N0 or Z")
        if (d.lo is None or d.hi is None) and d.base.name == "Z" and d.default is None:
            raise CapabilityError("half-bounded mixed insertion requires a default residue structure")
        for lev, sub in d.table:
            validate_desc(sub)
            if not is_semigroup(sub):
                raise CapabilityError(f"residue structure at level {lev} must be a semigroup: {sub!r}")
            if d.lo is not None and lev < d.lo or d.hi is not None and lev > d.hi:
                raise CapabilityError(f"level {lev} lies outside the declared range")
            if d.base.name == "N0" and lev < 0:
                raise CapabilityError("negative level with base N0")
        if d.default is not None:
            validate_desc(d.default)
            if not is_semigroup(d.default):
                raise CapabilityError("default residue structure must be a semigroup")
        return d
    if isinstance(d, DoubleOf):
        validate_desc(d.inner)
        if not is_semigroup(d.inner):
            raise CapabilityError("double() requires an ordered abelian semigroup inside")
        return d
    raise CapabilityError(f"unknown descriptor {d!r}")


# ---------------------------------------------------------------------------
# common structures and aliases
# ---------------------------------------------------------------------------

N0 = Base("N0")
Z = Base("Z")
RC = Base("Rc")
RO = Base("Ro")
NBAR0 = Base("Nbar0")

S = Insert(N0, RC)
O = Insert(Z, RC)
P = Insert(Z, RO)
SBAR = BarInsert(N0, RC)
OBAR = BarInsert(Z, RC)


def s_nested(n: int) -> StructDesc:
    """n bar-insertions of N0 ending in [0, inf], right-nested."""
    d: StructDesc = RC
    for _ in range(n):
        d = BarInsert(N0, d)
    return d


def o_nested(n: int) -> StructDesc:
    d: StructDesc = RC
    for _ in range(n):
        d = BarInsert(Z, d)
    return d


def p_nested(n: int) -> StructDesc:
    """n plain insertions of Z ending in [0, inf): an ordered semifield."""
    d: StructDesc = RO
    for _ in range(n):
        d = Insert(Z, d)
    return d


# ---------------------------------------------------------------------------
# grammar
# ---------------------------------------------------------------------------

_SYMBOLS = ("b\\/", "b/\\", "\\/", "/\\", "..", "(", ")", ";", ":", ",")


def _tokenize(text: str):
    tokens = []
    i, n = 0, len(text)
    while i < n:
        c = text[i]
        if c.isspace():
            i += 1
            continue
        for sym in _SYMBOLS:
            if text.startswith(sym, i):
                tokens.append((sym, i))
                i += len(sym)
                break
        else:
            if c.isalpha():
                j = i
                while j < n and (text[j].isalnum() or text[j] == "_"):
                    j += 1
                tokens.append((text[i:j], i))
                i = j
            elif c.isdigit() or c == "-":
                j = i + 1
                while j < n and text[j].isdigit():
                    j += 1
                if j == i + 1 and c == "-":
                    raise ParseError("stray '-'", text, i)
                tokens.append((text[i:j], i))
                i = j
            else:
                raise ParseError(f"unexpected character {c!r}", text, i)
    return tokens


class _StructParser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos][0] if self.pos < len(self.tokens) else None

    def next(self):
        if self.pos >= len(self.tokens):
            raise ParseError("unexpected end of input", self.text, len(self.text))
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, sym):
        tok, at = self.next()
        if tok != sym:
            raise ParseError(f"expected {sym!r}, found {tok!r}", self.text, at)
        return tok

    def parse(self) -> StructDesc:
        d = self.struct()
        if self.peek() is not None:
            tok, at = self.tokens[self.pos]
            raise ParseError(f"trailing input {tok!r}", self.text, at)
        return d

    def struct(self) -> StructDesc:
        left = self.prim()
        op = self.peek()
        if op in ("\\/", "/\\", "b\\/", "b/\\"):
            self.next()
            right = self.prim()
            nxt = self.peek()
            if nxt in ("\\/", "/\\", "b\\/", "b/\\"):
                _, at = self.tokens[self.pos]
                raise ParseError(
                    "insertion operators do not associate; parentheses required", self.text, at
                )
            cls = {"\\/": SInsert, "/\\": Insert, "b\\/": BarSInsert, "b/\\": BarInsert}[op]
            return cls(left, right)
        return left

    def prim(self) -> StructDesc:
        tok, at = self.next()
        if tok == "(":
            inner = self.struct()
            self.expect(")")
            return inner
        if tok == "double":
            self.expect("(")
            inner = self.struct()
            self.expect(")")
            return DoubleOf(inner)
        if tok == "mixed":
            return self.mixed()
        if tok in BASE_NAMES or tok == "NBar0":
            return Base("Nbar0" if tok == "NBar0" else tok)
        if tok == "S":
            return Insert(N0, RC)
        if tok == "O":
            return Insert(Z, RC)
        if tok == "P":
            return Insert(Z, RO)
        if tok == "Sbar":
            return BarInsert(N0, RC)
        if tok == "Obar":
            return BarInsert(Z, RC)
        if tok in ("Sn", "On", "Pn"):
            self.expect("(")
            num, nat = self.next()
            try:
                n = int(num)
            except ValueError:
                raise ParseError("expected an integer argument", self.text, nat) from None
            if n < 1:
                raise ParseError("nesting depth must be >= 1", self.text, nat)
            self.expect(")")
            return {"Sn": s_nested, "On": o_nested, "Pn": p_nested}[tok](n)
        raise ParseError(f"unexpected token {tok!r}", self.text, at)

    def mixed(self) -> StructDesc:
        self.expect("(")
        name, at = self.next()
        if name not in ("N0", "Z"):
            raise ParseError("mixed base must be N0 or Z", self.text, at)
        base = Base(name)
        self.expect(";")
        lo = hi = None
        if self.peek() != "..":
            lo = int(self.next()[0])
        self.expect("..")
        if self.peek() != ";":
            hi = int(self.next()[0])
        self.expect(";")
        table = []
        default = None
        while True:
            tok, at = self.next()
            if tok == "default":
                self.expect(":")
                default = self.struct()
            else:
                try:
                    lev = int(tok)
                except ValueError:
                    raise ParseError(f"expected level integer, found {tok!r}", self.text, at) from None
                self.expect(":")
                table.append((lev, self.struct()))
            nxt = self.peek()
            if nxt == ",":
                self.next()
                continue
            if nxt == ";":
                self.next()
                continue
            break
        self.expect(")")
        if lo is not None and hi is not None and lo > hi:
            raise ParseError("empty level range", self.text, 0)
        return MixedInsert(base, lo, hi, table, default)


def parse_struct(text: str) -> StructDesc:
    """Parse and validate a structure expression."""
    return validate_desc(_StructParser(text).parse())


def struct_text(d: StructDesc) -> str:
    """Grammar text for a descriptor; parse_struct(struct_text(d)) == d."""
    return repr(d)
