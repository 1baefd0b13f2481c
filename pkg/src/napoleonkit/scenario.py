"""A tiny construction-script language for stating and checking claims.

A script is a sequence of newline-separated statements::

    # comment
    point A = (0, 0)
    point C1 = apex_out(A, B, C)
    scalar s = 3 + 25/12 r3          # r3 stands for sqrt(3)
    assert equal_dist(A, A1, B, B1)
    assert area_eq(area(A, B, C) == 4*area(As, Bs, Cs) + 4*area(Ass, Bss, Css))

Names are bound once, before use. Parsing checks names, arities and
argument kinds up front; evaluation is straight-line and exact. A failed
assertion is recorded and evaluation continues; a construction that is
undefined (circumcircle of collinear points, ...) stops the run.
"""

import re
from dataclasses import dataclass, field

from . import geom
from .geom import GeometryError, Point
from .napoleon import erect_apex
from .qsqrt3 import F3

P, L, C, S = "point", "line", "circle", "scalar"
KINDS = (P, L, C, S)

# name -> (required arg kinds, optional arg kinds, result kind)
FUNCS = {
    "midpoint": ((P, P), (), P),
    "centroid": ((P, P, P), (), P),
    "apex_left": ((P, P), (), P),
    "apex_right": ((P, P), (), P),
    "apex_out": ((P, P, P), (), P),
    "apex_in": ((P, P, P), (), P),
    "rot60": ((P, P), (S,), P),
    "rot120": ((P, P), (S,), P),
    "line": ((P, P), (), L),
    "intersect": ((L, L), (), P),
    "circumcircle": ((P, P, P), (), C),
    "reflect": ((P, L), (), P),
    "homothety": ((P, S, P), (), P),
    "area": ((P, P, P), (), S),
}

PREDS = {
    "coincide": (P, P),
    "equal_dist": (P, P, P, P),
    "collinear": (P, P, P),
    "concurrent": (L, L, L),
    "on_circle": (P, C),
    "equilateral": (P, P, P),
    "angle120": (P, P, P),
    "midpoint_of": (P, P, P),
    "parallelogram": (P, P, P, P),
    "area_eq": None,
}

RESERVED = {"point", "line", "circle", "scalar", "assert", "r3"}


class ScriptError(Exception):
    """Lexical, syntax, name, arity or construction error at a source position."""

    def __init__(self, kind, message, line, col=None):
        self.kind = kind
        self.message = message
        self.line = line
        self.col = col
        super().__init__(str(self))

    def __str__(self):
        where = f"line {self.line}" if self.col is None else f"line {self.line}, col {self.col}"
        return f"{where}: {self.kind} error: {self.message}"


# --- AST ---------------------------------------------------------------


@dataclass(frozen=True)
class Name:
    id: str
    line: int = field(default=0, compare=False)
    col: int = field(default=0, compare=False)


@dataclass(frozen=True)
class ScalarLit:
    value: F3
    line: int = field(default=0, compare=False)
    col: int = field(default=0, compare=False)


@dataclass(frozen=True)
class PointLit:
    x: F3
    y: F3
    line: int = field(default=0, compare=False)
    col: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Call:
    func: str
    args: tuple
    line: int = field(default=0, compare=False)
    col: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Term:
    coef: F3  # rational coefficient
    atom: object  # None for a bare constant (then coef is the constant)


@dataclass(frozen=True)
class Binding:
    kind: str
    name: str
    expr: object
    line: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Assertion:
    pred: str
    args: tuple  # for area_eq: (lhs terms, rhs terms)
    line: int = field(default=0, compare=False)
    text: str = field(default="", compare=False)


@dataclass(frozen=True)
class Comment:
    text: str


@dataclass(frozen=True)
class Program:
    statements: tuple

    def assertions(self):
        return [s for s in self.statements if isinstance(s, Assertion)]


# --- lexer -------------------------------------------------------------

_TOKEN_RE = re.compile(
    r"(?P<ws>[ \t\r]+)|(?P<comment>#[^\n]*)|(?P<nl>\n)|(?P<int>\d+)"
    r"|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>==|[()=,+\-*/])"
)


@dataclass
class Token:
    type: str  # "int", "name", "op", "nl", "comment", "eof"
    text: str
    line: int
    col: int


def tokenize(source):
    tokens = []
    line, line_start, pos = 1, 0, 0
    while pos < len(source):
        m = _TOKEN_RE.match(source, pos)
        if m is None:
            raise ScriptError("lexical", f"unexpected character {source[pos]!r}", line, pos - line_start + 1)
        kind = m.lastgroup
        col = pos - line_start + 1
        if kind == "nl":
            tokens.append(Token("nl", "\n", line, col))
            line += 1
            line_start = m.end()
        elif kind != "ws":
            tokens.append(Token(kind, m.group(), line, col))
        pos = m.end()
    tokens.append(Token("eof", "", line, pos - line_start + 1))
    return tokens


# --- parser ------------------------------------------------------------


class _Parser:
    def __init__(self, source):
        self.lines = source.split("\n")
        self.toks = tokenize(source)
        self.i = 0
        self.env = {}  # name -> kind

    def peek(self, offset=0):
        return self.toks[min(self.i + offset, len(self.toks) - 1)]

    def next(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def error(self, msg, tok=None, kind="syntax"):
        tok = tok or self.peek()
        raise ScriptError(kind, msg, tok.line, tok.col)

    def expect(self, text):
        tok = self.peek()
        if tok.text != text or tok.type not in ("op", "name"):
            found = "end of line" if tok.type in ("nl", "eof") else repr(tok.text)
            self.error(f"expected {text!r}, found {found}")
        return self.next()

    def at_op(self, text):
        tok = self.peek()
        return tok.type == "op" and tok.text == text

    def program(self):
        stmts = []
        while self.peek().type != "eof":
            tok = self.peek()
            if tok.type == "nl":
                self.next()
                continue
            if tok.type == "comment":
                stmts.append(Comment(tok.text[1:].strip()))
                self.next()
            else:
                stmts.append(self.statement())
                if self.peek().type == "comment":
                    self.next()
            if self.peek().type not in ("nl", "eof"):
                self.error(f"unexpected {self.peek().text!r} after statement")
        return Program(tuple(stmts))

    def statement(self):
        tok = self.peek()
        if tok.type == "name" and tok.text in KINDS and self.peek(1).type == "name":
            return self.binding()
        if tok.type == "name" and tok.text == "assert":
            return self.assertion()
        self.error(f"expected a binding or an assertion, found {tok.text!r}")

    def binding(self):
        kind_tok = self.next()
        name_tok = self.next()
        name = name_tok.text
        if name in RESERVED or name in FUNCS or name in PREDS:
            self.error(f"{name!r} is a reserved word", name_tok)
        self.expect("=")
        expr = self.expr()
        got = self.kind_of(expr)
        if got != kind_tok.text:
            self.error(f"{name} declared {kind_tok.text} but the expression is a {got}", name_tok, "type")
        if name in self.env:
            self.error(f"{name} is already bound", name_tok, "rebinding")
        self.env[name] = got
        return Binding(kind_tok.text, name, expr, kind_tok.line)

    def assertion(self):
        start = self.next()
        pred_tok = self.next()
        pred = pred_tok.text
        if pred_tok.type != "name" or pred not in PREDS:
            self.error(f"unknown predicate {pred!r}", pred_tok)
        self.expect("(")
        if pred == "area_eq":
            lhs = self.linear()
            self.expect("==")
            rhs = self.linear()
            self.expect(")")
            args = (lhs, rhs)
        else:
            args = self.args_until_close()
            want = PREDS[pred]
            if len(args) != len(want):
                self.error(f"{pred} takes {len(want)} arguments, got {len(args)}", pred_tok, "arity")
            for arg, k in zip(args, want):
                self.check_kind(arg, k)
        text = self.lines[start.line - 1].split("#", 1)[0].strip()
        return Assertion(pred, args, start.line, text)

    def args_until_close(self):
        args = []
        if not self.at_op(")"):
            args.append(self.expr())
            while self.at_op(","):
                self.next()
                args.append(self.expr())
        self.expect(")")
        return tuple(args)

    def expr(self):
        tok = self.peek()
        if tok.type == "op" and tok.text == "(":
            return self.point_lit()
        if tok.type == "int" or (tok.type == "op" and tok.text == "-"):
            value = self.scalar_lit()
            return ScalarLit(value, tok.line, tok.col)
        if tok.type == "name":
            if self.peek(1).type == "op" and self.peek(1).text == "(":
                return self.call()
            self.next()
            if tok.text not in self.env:
                self.error(f"unbound name {tok.text!r}", tok, "unbound-name")
            return Name(tok.text, tok.line, tok.col)
        found = "end of line" if tok.type in ("nl", "eof") else repr(tok.text)
        self.error(f"expected an expression, found {found}")

    def call(self):
        tok = self.next()
        if tok.text not in FUNCS:
            self.error(f"unknown function {tok.text!r}", tok)
        self.expect("(")
        args = self.args_until_close()
        required, optional, _ = FUNCS[tok.text]
        if not len(required) <= len(args) <= len(required) + len(optional):
            n = str(len(required)) if not optional else f"{len(required)}-{len(required) + len(optional)}"
            self.error(f"{tok.text} takes {n} arguments, got {len(args)}", tok, "arity")
        for arg, k in zip(args, required + optional):
            self.check_kind(arg, k)
        return Call(tok.text, args, tok.line, tok.col)

    def rat(self):
        neg = False
        if self.at_op("-"):
            self.next()
            neg = True
        tok = self.peek()
        if tok.type != "int":
            self.error(f"expected a number, found {tok.text!r}")
        self.next()
        num = int(tok.text)
        den = 1
        if self.at_op("/"):
            self.next()
            dtok = self.peek()
            if dtok.type != "int":
                self.error("expected a denominator", dtok)
            self.next()
            den = int(dtok.text)
            if den == 0:
                self.error("zero denominator", dtok)
        value = F3(num) / den
        return -value if neg else value

    def at_r3(self):
        tok = self.peek()
        return tok.type == "name" and tok.text == "r3"

    def scalar_lit(self):
        """rat [r3] [(+|-) rat r3]"""
        first = self.rat()
        if self.at_r3():
            self.next()
            return F3(0, first.a)
        if (self.at_op("+") or self.at_op("-")) and self._r3_follows():
            sign = -1 if self.next().text == "-" else 1
            b = self.rat()
            self.expect("r3")
            return F3(first.a, sign * b.a)
        return first

    def _r3_follows(self):
        # lookahead for "(+|-) [-] INT [/ INT] r3"
        j = 1
        if self.peek(j).text == "-":
            j += 1
        if self.peek(j).type != "int":
            return False
        j += 1
        if self.peek(j).text == "/":
            j += 2
        tok = self.peek(j)
        return tok.type == "name" and tok.text == "r3"

    def point_lit(self):
        tok = self.expect("(")
        x = self.scalar_lit()
        self.expect(",")
        y = self.scalar_lit()
        self.expect(")")
        return PointLit(x, y, tok.line, tok.col)

    def linear(self):
        terms = [self.term(1)]
        while self.at_op("+") or self.at_op("-"):
            sign = -1 if self.next().text == "-" else 1
            terms.append(self.term(sign))
        return tuple(terms)

    def term(self, sign):
        tok = self.peek()
        if tok.type == "int" or (tok.type == "op" and tok.text == "-"):
            coef = self.rat() * sign
            if self.at_r3():
                self.next()
                return Term(F3(0, coef.a), None)
            if self.at_op("*"):
                self.next()
                atom = self.expr()
                self.check_kind(atom, S)
                return Term(coef, atom)
            return Term(coef, None)
        atom = self.expr()
        self.check_kind(atom, S)
        return Term(F3(sign), atom)

    def kind_of(self, expr):
        if isinstance(expr, Name):
            return self.env[expr.id]
        if isinstance(expr, PointLit):
            return P
        if isinstance(expr, ScalarLit):
            return S
        return FUNCS[expr.func][2]

    def check_kind(self, expr, want):
        got = self.kind_of(expr)
        if got != want:
            tok = Token("", "", expr.line, expr.col)
            self.error(f"expected a {want} argument, got a {got}", tok, "type")


def parse(source):
    """Parse script text into a :class:`Program`; raises :class:`ScriptError`."""
    return _Parser(source).program()


# --- pretty printer ----------------------------------------------------


def _fmt_rat(r):
    return str(r.numerator) if r.denominator == 1 else f"{r.numerator}/{r.denominator}"


def format_scalar(v):
    if not v.b:
        return _fmt_rat(v.a)
    if not v.a:
        return f"{_fmt_rat(v.b)} r3"
    return f"{_fmt_rat(v.a)} + {_fmt_rat(v.b)} r3"


def format_expr(e):
    if isinstance(e, Name):
        return e.id
    if isinstance(e, ScalarLit):
        return format_scalar(e.value)
    if isinstance(e, PointLit):
        return f"({format_scalar(e.x)}, {format_scalar(e.y)})"
    return f"{e.func}({', '.join(format_expr(a) for a in e.args)})"


def _format_linear(terms):
    out = []
    for t in terms:
        if t.atom is None:
            out.append(format_scalar(t.coef) if t.coef.b else _fmt_rat(t.coef.a))
        elif t.coef == 1:
            out.append(format_expr(t.atom))
        else:
            out.append(f"{_fmt_rat(t.coef.a)}*{format_expr(t.atom)}")
    return " + ".join(out)


def format_program(program):
    lines = []
    for s in program.statements:
        if isinstance(s, Comment):
            lines.append(f"# {s.text}" if s.text else "#")
        elif isinstance(s, Binding):
            lines.append(f"{s.kind} {s.name} = {format_expr(s.expr)}")
        elif s.pred == "area_eq":
            lhs, rhs = s.args
            lines.append(f"assert area_eq({_format_linear(lhs)} == {_format_linear(rhs)})")
        else:
            lines.append(f"assert {s.pred}({', '.join(format_expr(a) for a in s.args)})")
    return "\n".join(lines) + "\n"


# --- evaluator ---------------------------------------------------------


@dataclass
class AssertionOutcome:
    line: int
    text: str
    passed: bool
    details: str


@dataclass
class EvalOutcome:
    bindings: dict = field(default_factory=dict)
    assertions: list = field(default_factory=list)
    error: ScriptError = None

    @property
    def passed(self):
        return self.error is None and all(a.passed for a in self.assertions)


def _direction(args, fname):
    if len(args) < 3:
        return 1
    d = args[2]
    if d == 1:
        return 1
    if d == -1:
        return -1
    raise GeometryError(f"{fname} direction must be 1 or -1, got {d}")


def _apply(fname, args):
    if fname == "midpoint":
        return geom.midpoint(*args)
    if fname == "centroid":
        return geom.centroid3(*args)
    if fname == "apex_left":
        return geom.equilateral_apex(args[0], args[1], "left")
    if fname == "apex_right":
        return geom.equilateral_apex(args[0], args[1], "right")
    if fname == "apex_out":
        return erect_apex(*args, outward=True)
    if fname == "apex_in":
        return erect_apex(*args, outward=False)
    if fname == "rot60":
        return geom.rotate60k(args[0], args[1], _direction(args, fname))
    if fname == "rot120":
        return geom.rotate60k(args[0], args[1], 2 * _direction(args, fname))
    if fname == "line":
        return geom.line_through(*args)
    if fname == "intersect":
        return geom.intersect_lines(*args)
    if fname == "circumcircle":
        return geom.circumcircle(*args)
    if fname == "reflect":
        return geom.reflect_over_line(*args)
    if fname == "homothety":
        return geom.homothety(*args)
    if fname == "area":
        return geom.signed_area(*args)
    raise KeyError(fname)


def _check(pred, v):
    """Return (passed, details) for a predicate over evaluated arguments."""
    if pred == "coincide":
        p, q = v
        return p == q, f"{p} vs {q}"
    if pred == "equal_dist":
        d1, d2 = geom.dist2(v[0], v[1]), geom.dist2(v[2], v[3])
        return d1 == d2, f"dist2 {d1} vs {d2}"
    if pred == "collinear":
        a = geom.signed_area(*v)
        return not a, f"signed area {a}"
    if pred == "concurrent":
        try:
            p = geom.intersect_lines(v[0], v[1])
            q = geom.intersect_lines(v[0], v[2])
        except GeometryError as exc:
            return False, str(exc)
        return p == q, f"{p} vs {q}"
    if pred == "on_circle":
        p, k = v
        d = geom.dist2(p, k.center)
        return d == k.r2, f"dist2 {d} vs r2 {k.r2}"
    if pred == "equilateral":
        ds = [geom.dist2(v[0], v[1]), geom.dist2(v[1], v[2]), geom.dist2(v[2], v[0])]
        return geom.is_equilateral(*v), "sides^2 " + ", ".join(map(str, ds))
    if pred == "angle120":
        try:
            return geom.angle_eq_120(*v), f"at {v[1]}"
        except GeometryError as exc:
            return False, str(exc)
    if pred == "midpoint_of":
        m = geom.midpoint(v[1], v[2])
        return v[0] == m, f"{v[0]} vs {m}"
    if pred == "parallelogram":
        m1, m2 = geom.midpoint(v[0], v[2]), geom.midpoint(v[1], v[3])
        return geom.diagonals_bisect(*v), f"diagonal midpoints {m1} vs {m2}"
    raise KeyError(pred)


class _Evaluator:
    def __init__(self):
        self.env = {}

    def value(self, e):
        if isinstance(e, Name):
            return self.env[e.id]
        if isinstance(e, ScalarLit):
            return e.value
        if isinstance(e, PointLit):
            return Point(e.x, e.y)
        args = [self.value(a) for a in e.args]
        try:
            return _apply(e.func, args)
        except (GeometryError, ZeroDivisionError) as exc:
            raise ScriptError("construction", f"{e.func}: {exc}", e.line, e.col) from None

    def linear(self, terms):
        total = F3(0)
        for t in terms:
            total = total + (t.coef if t.atom is None else t.coef * self.value(t.atom))
        return total


def eval_program(program):
    """Evaluate a parsed program. Construction errors are stored on the outcome."""
    out = EvalOutcome()
    ev = _Evaluator()
    for stmt in program.statements:
        try:
            if isinstance(stmt, Binding):
                ev.env[stmt.name] = ev.value(stmt.expr)
                out.bindings[stmt.name] = ev.env[stmt.name]
            elif isinstance(stmt, Assertion):
                if stmt.pred == "area_eq":
                    lhs, rhs = (ev.linear(side) for side in stmt.args)
                    ok, details = lhs == rhs, f"{lhs} vs {rhs}"
                else:
                    ok, details = _check(stmt.pred, [ev.value(a) for a in stmt.args])
                out.assertions.append(AssertionOutcome(stmt.line, stmt.text, ok, details))
        except ScriptError as exc:
            out.error = exc
            break
    return out


# the public name used by callers; ``eval`` would shadow the builtin
evaluate = eval_program


def run_script(source):
    """Parse and evaluate; returns ``(outcome, status)``.

    Status is 0 when every assertion passed, 1 when an assertion failed or a
    construction was undefined, 2 when the script does not parse.
    """
    try:
        program = parse(source)
    except ScriptError as exc:
        return EvalOutcome(error=exc), 2
    outcome = eval_program(program)
    return outcome, 0 if outcome.passed else 1


__all__ = [
    "Assertion",
    "Binding",
    "Call",
    "Comment",
    "EvalOutcome",
    "FUNCS",
    "PREDS",
    "Program",
    "ScriptError",
    "eval_program",
    "evaluate",
    "format_program",
    "parse",
    "run_script",
    "tokenize",
]
