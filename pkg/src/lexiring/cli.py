"""Command-line front door.

Subcommands: ``eval``, ``measure``, ``prob``, ``tree``, ``weights``,
``selfcheck``.  Output is exact literals only; ``--format json`` prints
one JSON object per line with sorted keys, so outputs are byte-stable.

Exit codes: 0 success, 1 domain or validation failure, 2 usage or parse
error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import ops
from .descriptors import capabilities, parse_struct
from .errors import LexiringError, ParseError, ShapeError
from .laws import run_selfcheck
from .measure import align_levels, shift_levels, slice_at, total_height
from .prob import bayes, cond_prob, standardize, validate_probability
from .scenes import BUILTIN_SCENES, load_scene, load_track, load_tree, scene_to_dict
from .seq import LevelRamp, Repeat, ResidueRamp, SeqGen, sum_sequence, sup_finite, sup_sequence
from .tree import distance, verify_metric
from .values import _ValueParser, check_value, format_value, parse_value
from .weights import apply_deck, check_branch_equations


# ---------------------------------------------------------------------------
# expression evaluation
# ---------------------------------------------------------------------------

_FUNCS = ("inv", "cmp", "sum", "sup")
_GENS = ("repeat", "levelramp", "resramp")


def _lex_expr(text: str):
    toks = []
    i, n = 0, len(text)
    while i < n:
        c = text[i]
        if c.isspace():
            i += 1
        elif c in "(),+-/*":
            toks.append((c, i))
            i += 1
        elif c.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            toks.append((text[i:j], i))
            i = j
        elif c.isalpha():
            j = i
            while j < n and text[j].isalpha():
                j += 1
            toks.append((text[i:j], i))
            i = j
        else:
            raise ParseError(f"unexpected character {c!r}", text, i)
    return toks


class _ExprEval:
    def __init__(self, desc, text: str):
        self.d = desc
        self.text = text
        self.toks = _lex_expr(text)
        self.pos = 0

    def peek(self):
        return self.toks[self.pos][0] if self.pos < len(self.toks) else None

    def next(self):
        if self.pos >= len(self.toks):
            raise ParseError("unexpected end of expression", self.text, len(self.text))
        t = self.toks[self.pos]
        self.pos += 1
        return t

    def expect(self, sym):
        tok, at = self.next()
        if tok != sym:
            raise ParseError(f"expected {sym!r}, found {tok!r}", self.text, at)

    def run(self):
        """Returns ('cmp', -1|0|1) or ('value', Value)."""
        if self.peek() == "cmp":
            self.next()
            self.expect("(")
            a = self.expr()
            self.expect(",")
            b = self.expr()
            self.expect(")")
            self._end()
            return "cmp", ops.cmp(self.d, a, b)
        v = self.expr()
        self._end()
        return "value", v

    def _end(self):
        if self.pos < len(self.toks):
            tok, at = self.toks[self.pos]
            raise ParseError(f"trailing input {tok!r}", self.text, at)

    def expr(self):
        t = self.product()
        while self.peek() == "+":
            self.next()
            t = ops.add(self.d, t, self.product())
        return t

    def product(self):
        t = self.atom()
        while self.peek() == "*":
            self.next()
            t = ops.mul(self.d, t, self.atom())
        return t

    def atom(self):
        tok = self.peek()
        if tok == "inv":
            self.next()
            self.expect("(")
            v = self.expr()
            self.expect(")")
            return ops.inv(self.d, v)
        if tok in ("sum", "sup"):
            return self.series(self.next()[0])
        if tok == "cmp":
            _, at = self.next()
            raise ParseError("cmp(...) only makes sense at the top level", self.text, at)
        v = self.try_literal(self.d)
        if v is not None:
            return v
        if tok == "(":
            self.next()
            v = self.expr()
            self.expect(")")
            return v
        tok, at = self.next()
        raise ParseError(f"unexpected token {tok!r}", self.text, at)

    def try_literal(self, d):
        vp = _ValueParser.from_tokens(self.text, self.toks, self.pos)
        save = self.pos
        try:
            v = vp.value(d)
        except (ParseError, ShapeError):
            self.pos = save
            return None
        self.pos = vp.pos
        return check_value(d, v)

    def literal(self, d):
        v = self.try_literal(d)
        if v is None:
            tok, at = self.toks[self.pos] if self.pos < len(self.toks) else ("", len(self.text))
            raise ParseError(f"expected a literal, found {tok!r}", self.text, at)
        return v

    def int_arg(self) -> int:
        neg = False
        if self.peek() == "-":
            self.next()
            neg = True
        tok, at = self.next()
        if not tok.isdigit():
            raise ParseError(f"expected an integer, found {tok!r}", self.text, at)
        return -int(tok) if neg else int(tok)

    def series(self, which: str):
        self.expect("(")
        head, tail = [], None
        while self.peek() != ")":
            tok = self.peek()
            if tok in _GENS:
                if tail is not None:
                    _, at = self.toks[self.pos]
                    raise ParseError("only one generator per series", self.text, at)
                self.next()
                self.expect("(")
                if tok == "repeat":
                    tail = Repeat(self.literal(self.d))
                elif tok == "levelramp":
                    start = self.int_arg()
                    self.expect(",")
                    step = self.int_arg()
                    self.expect(",")
                    tail = LevelRamp(start, step, self.literal(self.d.b))
                else:
                    lev = self.int_arg()
                    self.expect(",")
                    tail = ResidueRamp(lev, self.literal(self.d.b))
                self.expect(")")
            else:
                head.append(self.expr())
            if self.peek() == ",":
                self.next()
        self.expect(")")
        gen = SeqGen(head, tail)
        if which == "sum":
            return sum_sequence(self.d, gen)
        if tail is None:
            return sup_finite(self.d, head)
        return sup_sequence(self.d, gen)


def eval_expression(struct_text: str, expr_text: str) -> str:
    d = parse_struct(struct_text)
    kind, out = _ExprEval(d, expr_text).run()
    if kind == "cmp":
        return {-1: "LT", 0: "EQ", 1: "GT"}[out]
    return format_value(d, out)


# ---------------------------------------------------------------------------
# output helpers
# ---------------------------------------------------------------------------

class _Out:
    def __init__(self, fmt: str):
        self.fmt = fmt

    def emit(self, obj: dict, text_line: str):
        if self.fmt == "json":
            print(json.dumps(obj, sort_keys=True))
        else:
            print(text_line)


def _fmt_map(desc, mapping):
    return {k: format_value(desc, v) for k, v in mapping.items()}


def _scene_arg(args):
    if args.builtin:
        return load_scene(args.builtin)
    if not args.scene:
        raise ParseError("a scene file or --builtin name is required")
    return load_scene(args.scene)


# ---------------------------------------------------------------------------
# subcommand handlers
# ---------------------------------------------------------------------------

def _cmd_eval(args, out: _Out) -> int:
    result = eval_expression(args.structure, args.expression)
    out.emit({"result": result}, result)
    return 0


def _cmd_measure(args, out: _Out) -> int:
    m = _scene_arg(args)
    if args.action == "validate":
        caps = capabilities(m.desc)
        out.emit(
            {"ok": True, "atoms": len(m.space.atoms), "events": sorted(m.space.events), "capabilities": caps},
            f"ok: {len(m.space.atoms)} atoms, events {sorted(m.space.events)}",
        )
        return 0
    if args.action == "eval":
        ev = m.space.event(args.event)
        lit = format_value(m.desc, m.value(ev))
        out.emit({"event": args.event, "result": lit}, lit)
        return 0
    if args.action == "slice":
        ev = m.space.event(args.event)
        lit = str(slice_at(m, args.level, ev))
        out.emit({"event": args.event, "level": args.level, "result": lit}, lit)
        return 0
    if args.action == "height":
        h = total_height(m)
        out.emit({"height": h}, str(h))
        return 0
    if args.action in ("align", "shift"):
        new = align_levels(m) if args.action == "align" else shift_levels(m, args.by)
        doc = scene_to_dict(new)
        out.emit(doc, " ".join(f"{a['id']}={a['value']}" for a in doc["atoms"]))
        return 0
    raise ParseError(f"unknown measure action {args.action!r}")


def _cmd_prob(args, out: _Out) -> int:
    m = _scene_arg(args)
    if args.action == "validate":
        report = validate_probability(m)
        out.emit(
            report,
            ("ok" if report["ok"] else "FAIL: " + "; ".join(report["failures"]))
            + f" level masses {report['level_masses']}",
        )
        return 0 if report["ok"] else 1
    if args.action == "cond":
        if not args.event or not args.given:
            raise ParseError("prob cond needs --event and --given")
        v = cond_prob(m, m.space.event(args.event), m.space.event(args.given))
        lit = format_value(m.desc, v)
        out.emit({"event": args.event, "given": args.given, "result": lit}, lit)
        return 0
    if args.action == "bayes":
        if not args.partition or not args.given:
            raise ParseError("prob bayes needs --partition and --given")
        cells = [s.strip() for s in args.partition.split(",") if s.strip()]
        table = bayes(m, cells, args.given)
        obj = {
            "given": args.given,
            "total": format_value(m.desc, table["total"]),
            "conditionals": _fmt_map(m.desc, table["conditionals"]),
            "priors": _fmt_map(m.desc, table["priors"]),
            "posteriors": _fmt_map(m.desc, table["posteriors"]),
        }
        text = "; ".join(f"P({c}|{args.given})={obj['posteriors'][c]}" for c in cells)
        out.emit(obj, f"total={obj['total']}; {text}")
        return 0
    if args.action == "standardize":
        pm = standardize(m)
        atoms = _fmt_map(pm.desc, pm.base.atom_values)
        out.emit(
            {"depth": pm.total_depth, "atoms": atoms},
            f"depth={pm.total_depth} " + " ".join(f"{a}={v}" for a, v in sorted(atoms.items())),
        )
        return 0
    raise ParseError(f"unknown prob action {args.action!r}")


def _cmd_tree(args, out: _Out) -> int:
    t = load_tree(args.file)
    if args.action == "dist":
        if not args.x or not args.y:
            raise ParseError("tree dist needs two node names")
        lit = format_value(t.desc, distance(t, args.x, args.y))
        out.emit({"x": args.x, "y": args.y, "result": lit}, lit)
        return 0
    if args.action == "verify":
        report = verify_metric(t)
        out.emit(report, "ok" if report["ok"] else "FAIL: " + "; ".join(report["failures"]))
        return 0 if report["ok"] else 1
    raise ParseError(f"unknown tree action {args.action!r}")


def _cmd_weights(args, out: _Out) -> int:
    g, w, c = load_track(args.file)
    if args.action == "check":
        report = check_branch_equations(g, w, c)
        out.emit(
            report,
            "ok" if report["ok"] else "FAIL: "
            + "; ".join(f"switch {s['switch']}: {s['side1']} != {s['side2']}" for s in report["switches"] if not s["equal"]),
        )
        return 0 if report["ok"] else 1
    if args.action == "deck":
        if not args.scalar:
            raise ParseError("weights deck needs --scalar")
        lam = parse_value(w.desc, args.scalar)
        new = apply_deck(w, lam)
        weights = _fmt_map(new.desc, new.weights)
        out.emit({"weights": weights}, " ".join(f"{s}={v}" for s, v in sorted(weights.items())))
        return 0
    raise ParseError(f"unknown weights action {args.action!r}")


def _cmd_selfcheck(args, out: _Out) -> int:
    ok, results = run_selfcheck(args.seed, args.cases)
    for r in results:
        out.emit(r.as_dict(), r.line())
    out.emit(
        {"ok": ok, "suites": len(results), "seed": args.seed, "cases": args.cases},
        f"{'PASS' if ok else 'FAIL'}: {len(results)} suites (seed={args.seed}, cases={args.cases})",
    )
    return 0 if ok else 1


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="lexiring", description=__doc__)
    p.add_argument("--format", choices=("json", "text"), default="text")
    sub = p.add_subparsers(dest="command", required=True)

    pe = sub.add_parser("eval", help="evaluate an expression in a structure")
    pe.add_argument("structure")
    pe.add_argument("expression")

    pm = sub.add_parser("measure", help="scene measure queries")
    pm.add_argument("action", choices=("validate", "eval", "slice", "height", "align", "shift"))
    pm.add_argument("scene", nargs="?")
    pm.add_argument("--builtin", choices=sorted(BUILTIN_SCENES))
    pm.add_argument("--event", default="X")
    pm.add_argument("--level", type=int, default=0)
    pm.add_argument("--by", type=int, default=0)

    pp = sub.add_parser("prob", help="probability queries")
    pp.add_argument("action", choices=("validate", "cond", "bayes", "standardize"))
    pp.add_argument("scene", nargs="?")
    pp.add_argument("--builtin", choices=sorted(BUILTIN_SCENES))
    pp.add_argument("--event")
    pp.add_argument("--given")
    pp.add_argument("--partition")

    pt = sub.add_parser("tree", help="tree metric queries")
    pt.add_argument("action", choices=("dist", "verify"))
    pt.add_argument("file")
    pt.add_argument("x", nargs="?")
    pt.add_argument("y", nargs="?")

    pw = sub.add_parser("weights", help="branched-graph weight checks")
    pw.add_argument("action", choices=("check", "deck"))
    pw.add_argument("file")
    pw.add_argument("--scalar")

    ps = sub.add_parser("selfcheck", help="run the property suites")
    ps.add_argument("--seed", type=int, default=42)
    ps.add_argument("--cases", type=int, default=1000)

    return p


_HANDLERS = {
    "eval": _cmd_eval,
    "measure": _cmd_measure,
    "prob": _cmd_prob,
    "tree": _cmd_tree,
    "weights": _cmd_weights,
    "selfcheck": _cmd_selfcheck,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits itself (help, usage errors); fold into our contract
        return 0 if not exc.code else 2
    out = _Out(args.format)
    try:
        return _HANDLERS[args.command](args, out)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except LexiringError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
