"""Problem-file and polynomial expression parsing.

A problem file is a sequence of sections, each `key: body;`.  Recognized
keys: parameters, variables, order, ideal, equals, nonzero.  Expressions
use `^` for powers and `*` or plain adjacency for products; coefficients
are integers or integer fractions like 3/4.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

from .poly import ORDERS, Polynomial, Ring

_TOKEN = re.compile(r"""
    (?P<ws>[\s]+)
  | (?P<comment>\#[^\n]*)
  | (?P<name>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<int>[0-9]+)
  | (?P<op>[-+*^(),:;/])
""", re.VERBOSE)

SECTION_KEYS = ("parameters", "variables", "order", "ideal", "equals", "nonzero")


class ParseError(ValueError):
    """Syntax or validation error, carrying a 1-based source position."""

    def __init__(self, message, line, col):
        super().__init__(f"line {line}, col {col}: {message}")
        self.line = line
        self.col = col


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    col: int


def _tokenize(text):
    tokens = []
    pos = 0
    line = 1
    bol = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}",
                             line, pos - bol + 1)
        kind = m.lastgroup
        if kind not in ("ws", "comment"):
            tokens.append(Token(kind, m.group(), line, pos - bol + 1))
        nl = m.group().count("\n")
        if nl:
            line += nl
            bol = pos + m.group().rindex("\n") + 1
        pos = m.end()
    tokens.append(Token("eof", "", line, len(text) - bol + 1))
    return tokens


class _TokenStream:
    def __init__(self, tokens):
        self.tokens = tokens
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def next(self):
        t = self.tokens[self.i]
        if t.kind != "eof":
            self.i += 1
        return t

    def expect(self, kind, text=None):
        t = self.peek()
        if t.kind != kind or (text is not None and t.text != text):
            want = text if text is not None else kind
            raise ParseError(f"expected {want!r}, found {t.text or 'end of input'!r}",
                             t.line, t.col)
        return self.next()

    def at_op(self, text):
        t = self.peek()
        return t.kind == "op" and t.text == text

    def error(self, message):
        t = self.peek()
        raise ParseError(message, t.line, t.col)


class _ExprParser:
    """Recursive-descent parser building Polynomial values over a ring."""

    def __init__(self, stream, ring):
        self.s = stream
        self.ring = ring

    def parse_poly(self):
        s = self.s
        if s.at_op("+") or s.at_op("-"):
            sign = -1 if s.next().text == "-" else 1
        else:
            sign = 1
        p = self.parse_term() * sign
        while s.at_op("+") or s.at_op("-"):
            op = s.next().text
            q = self.parse_term()
            p = p + q if op == "+" else p - q
        return p

    def parse_term(self):
        s = self.s
        p = self.parse_factor()
        while True:
            if s.at_op("*"):
                s.next()
                p = p * self.parse_factor()
            elif s.peek().kind in ("name", "int") or s.at_op("("):
                p = p * self.parse_factor()
            else:
                return p

    def parse_factor(self):
        base = self.parse_base()
        if self.s.at_op("^"):
            self.s.next()
            t = self.s.expect("int")
            return base ** int(t.text)
        return base

    def parse_base(self):
        s = self.s
        t = s.peek()
        if t.kind == "name":
            s.next()
            if t.text not in self.ring.index:
                raise ParseError(f"undeclared name {t.text!r}", t.line, t.col)
            return self.ring.var(t.text)
        if t.kind == "int":
            s.next()
            num = int(t.text)
            if s.at_op("/"):
                s.next()
                den = s.expect("int")
                if int(den.text) == 0:
                    raise ParseError("zero denominator", den.line, den.col)
                return self.ring.constant(Fraction(num, int(den.text)))
            return self.ring.constant(num)
        if s.at_op("("):
            s.next()
            p = self.parse_poly()
            s.expect("op", ")")
            return p
        s.error(f"expected a name, number or '(', found {t.text or 'end of input'!r}")


def parse_poly(text, ring):
    """Parse one polynomial expression; the whole text must be consumed."""
    s = _TokenStream(_tokenize(text))
    p = _ExprParser(s, ring).parse_poly()
    if s.peek().kind != "eof":
        s.error(f"trailing input {s.peek().text!r}")
    return p


@dataclass(frozen=True)
class ProblemFile:
    """Parsed problem: alphabet, orders, generators, initial segment."""

    variables: tuple
    parameters: tuple
    x_order: str
    u_order: str
    ideal: tuple
    equals: tuple = ()
    nonzero: tuple = ()
    ring: Ring = field(compare=False, default=None)


def _split_sections(tokens):
    s = _TokenStream(tokens)
    sections = {}
    while s.peek().kind != "eof":
        key_tok = s.expect("name")
        if key_tok.text not in SECTION_KEYS:
            raise ParseError(f"unknown section {key_tok.text!r}",
                             key_tok.line, key_tok.col)
        if key_tok.text in sections:
            raise ParseError(f"duplicate section {key_tok.text!r}",
                             key_tok.line, key_tok.col)
        s.expect("op", ":")
        body = []
        while not s.at_op(";"):
            if s.peek().kind == "eof":
                raise ParseError(f"section {key_tok.text!r} missing ';'",
                                 s.peek().line, s.peek().col)
            body.append(s.next())
        s.next()
        sections[key_tok.text] = (key_tok, body)
    return sections


def _parse_namelist(body, what):
    names = []
    s = _TokenStream(body + [Token("eof", "", 0, 0)])
    if s.peek().kind == "eof":
        return ()
    while True:
        t = s.expect("name")
        if t.text in names:
            raise ParseError(f"duplicate {what} {t.text!r}", t.line, t.col)
        names.append(t.text)
        if s.peek().kind == "eof":
            return tuple(names)
        s.expect("op", ",")


def _parse_polylist(body, ring, key, param_only, reject_zero):
    out = []
    s = _TokenStream(body + [Token("eof", "", body[0].line if body else 0,
                                   body[0].col if body else 0)])
    if s.peek().kind == "eof":
        return ()
    ep = _ExprParser(s, ring)
    while True:
        t = s.peek()
        p = ep.parse_poly()
        if reject_zero and p.is_zero():
            raise ParseError(f"zero polynomial in section {key!r}", t.line, t.col)
        if param_only and not p.is_param_only():
            raise ParseError(
                f"section {key!r} entries must use parameters only", t.line, t.col)
        out.append(p)
        if s.peek().kind == "eof":
            return tuple(out)
        s.expect("op", ",")


def parse_problem(text):
    """Parse a full problem file into a ProblemFile."""
    sections = _split_sections(_tokenize(text))
    if "variables" not in sections:
        raise ParseError("missing required section 'variables'", 1, 1)
    if "ideal" not in sections:
        raise ParseError("missing required section 'ideal'", 1, 1)
    variables = _parse_namelist(sections["variables"][1], "variable")
    if not variables:
        key = sections["variables"][0]
        raise ParseError("at least one variable is required", key.line, key.col)
    parameters = ()
    if "parameters" in sections:
        parameters = _parse_namelist(sections["parameters"][1], "parameter")
    clash = set(variables) & set(parameters)
    if clash:
        key = sections["parameters"][0]
        raise ParseError(f"name {sorted(clash)[0]!r} declared twice",
                         key.line, key.col)
    x_order = u_order = "lex"
    if "order" in sections:
        key, body = sections["order"]
        names = []
        s = _TokenStream(body + [Token("eof", "", key.line, key.col)])
        while s.peek().kind != "eof":
            t = s.expect("name")
            if t.text not in ORDERS:
                raise ParseError(f"unknown order {t.text!r} (expected lex or grlex)",
                                 t.line, t.col)
            names.append(t.text)
            if s.peek().kind != "eof":
                s.expect("op", ",")
        if len(names) == 1:
            x_order = u_order = names[0]
        elif len(names) == 2:
            x_order, u_order = names
        else:
            raise ParseError("order takes one or two entries", key.line, key.col)
    ring = Ring(variables, parameters, x_order, u_order)
    ideal = _parse_polylist(sections["ideal"][1], ring, "ideal",
                            param_only=False, reject_zero=True)
    if not ideal:
        key = sections["ideal"][0]
        raise ParseError("ideal section is empty", key.line, key.col)
    equals = nonzero = ()
    if "equals" in sections:
        equals = _parse_polylist(sections["equals"][1], ring, "equals",
                                 param_only=True, reject_zero=True)
    if "nonzero" in sections:
        nonzero = _parse_polylist(sections["nonzero"][1], ring, "nonzero",
                                  param_only=True, reject_zero=True)
    return ProblemFile(variables, parameters, x_order, u_order,
                       ideal, equals, nonzero, ring)
