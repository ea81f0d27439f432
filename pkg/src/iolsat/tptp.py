"""Reader for I/O logic problems in the propositional TPTP NXF dialect.

A problem consists of one logic specification (role ``logic``), norms
(role ``axiom``, written ``{$$norm} @ (body, head)``), input formulas
(role ``hypothesis``) and any number of conjectures::

    tff(spec, logic, $$iol == [ $$operator == $$out3,
                                $$constrained == $$skeptical,
                                $$constraints == $$input,
                                $$preference == [[n1, n2], n3] ] ).
    tff(n1, axiom, {$$norm} @ ($true, helping) ).
    tff(fact, hypothesis, ~helping).
    tff(goal, conjecture, ~telling).

Only the propositional fragment is accepted; quantifiers, variables,
terms with arguments and equality are rejected as unsupported.
"""

from __future__ import annotations

import os
import re
import warnings
from dataclasses import dataclass, field
from typing import Optional, Union

from .constrained import SAME_AS_INPUT, Aggregation, Preference
from .detachment import Norm, NormSet, Operator
from .formula import BOTTOM, LOWER_WORD, TOP, And, Atom, Formula, Iff, Implies, Not, Or, unique


class InputError(Exception):
    """The problem text is malformed or outside the supported fragment."""


class ParseError(InputError):
    def __init__(self, message: str, line: int = 0, column: int = 0):
        self.message, self.line, self.column = message, line, column
        where = f"line {line}, column {column}: " if line else ""
        super().__init__(where + message)


class UnsupportedFragment(ParseError):
    pass


class ProblemWarning(UserWarning):
    pass


@dataclass(frozen=True)
class LogicSpec:
    operator: Operator
    throughput: bool = False
    constrained: Optional[Aggregation] = None
    constraints: Union[tuple[Formula, ...], object] = ()
    preference: Preference = field(default_factory=Preference)


@dataclass(frozen=True)
class AnnotatedFormula:
    name: str
    role: str
    payload: Union[LogicSpec, Norm, Formula]


@dataclass(frozen=True)
class Problem:
    spec: LogicSpec
    norms: NormSet
    inputs: tuple[Formula, ...]
    conjectures: tuple[tuple[str, Formula], ...] = ()
    source_name: str = "<input>"


@dataclass(frozen=True)
class Token:
    kind: str  # lower, upper, dollar, ddollar, quoted, dquoted, number, op, eof
    value: str
    line: int
    column: int


_TOKEN = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<comment>%[^\n]*)
  | (?P<block>/\*.*?\*/)
  | (?P<ddollar>\$\$[A-Za-z0-9_]+)
  | (?P<dollar>\$[A-Za-z0-9_]+)
  | (?P<lower>[a-z][A-Za-z0-9_]*)
  | (?P<upper>[A-Z][A-Za-z0-9_]*)
  | (?P<quoted>'(?:[^'\\]|\\.)*')
  | (?P<dquoted>"(?:[^"\\]|\\.)*")
  | (?P<number>[0-9]+(?:\.[0-9]+)?(?:[eE][+-]?[0-9]+)?)
  | (?P<op><=>|<~>|=>|<=|~\||~&|==|!=|[~&|=()\[\]{},.:@!?*>+-])
    """,
    re.VERBOSE | re.DOTALL,
)


def tokenize(text: str) -> list[Token]:
    tokens = []
    pos, line, line_start = 0, 1, 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            if text.startswith("/*", pos):
                raise ParseError("unterminated block comment", line, pos - line_start + 1)
            raise ParseError(f"unexpected character {text[pos]!r}", line, pos - line_start + 1)
        kind = m.lastgroup
        if kind not in ("ws", "comment", "block"):
            tokens.append(Token(kind, m.group(), line, pos - line_start + 1))
        newlines = m.group().count("\n")
        if newlines:
            line += newlines
            line_start = m.start() + m.group().rindex("\n") + 1
        pos = m.end()
    tokens.append(Token("eof", "", line, pos - line_start + 1))
    return tokens


_NON_ASSOC = {"=>", "<=", "<=>", "<~>", "~|", "~&"}
_BINARY = _NON_ASSOC | {"&", "|"}
_ROLES = ("logic", "axiom", "hypothesis", "conjecture")


def _binary(op: str, left: Formula, right: Formula) -> Formula:
    if op == "&":
        return And(left, right)
    if op == "|":
        return Or(left, right)
    if op == "=>":
        return Implies(left, right)
    if op == "<=":
        return Implies(right, left)
    if op == "<=>":
        return Iff(left, right)
    if op == "<~>":
        return Not(Iff(left, right))
    if op == "~|":
        return Not(Or(left, right))
    return Not(And(left, right))  # ~&


def _unquote(value: str) -> str:
    inner = value[1:-1].replace("\\'", "'").replace("\\\\", "\\")
    return inner if LOWER_WORD.match(inner) else value


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.pos = 0

    # -- token helpers --------------------------------------------------
    def peek(self, offset: int = 0) -> Token:
        return self.tokens[min(self.pos + offset, len(self.tokens) - 1)]

    def advance(self) -> Token:
        tok = self.peek()
        self.pos += 1
        return tok

    def at(self, value: str, offset: int = 0) -> bool:
        tok = self.peek(offset)
        return tok.kind in ("op", "ddollar", "dollar", "lower") and tok.value == value

    def error(self, message: str, tok: Optional[Token] = None, cls=ParseError):
        tok = tok or self.peek()
        return cls(message, tok.line, tok.column)

    def expect(self, value: str) -> Token:
        if not self.at(value):
            tok = self.peek()
            found = tok.value or "end of input"
            raise self.error(f"expected {value!r}, found {found!r}")
        return self.advance()

    def name(self) -> str:
        tok = self.advance()
        if tok.kind == "lower" or tok.kind == "number":
            return tok.value
        if tok.kind == "quoted":
            return _unquote(tok.value)
        raise self.error(f"expected a name, found {tok.value or 'end of input'!r}", tok)

    # -- classical formulas --------------------------------------------
    def formula(self) -> Formula:
        left = self.unitary()
        tok = self.peek()
        if tok.kind != "op" or tok.value not in _BINARY:
            return left
        op = tok.value
        if op in ("&", "|"):
            while self.at(op):
                self.advance()
                left = _binary(op, left, self.unitary())
        else:
            self.advance()
            left = _binary(op, left, self.unitary())
        nxt = self.peek()
        if nxt.kind == "op" and nxt.value in _BINARY:
            raise self.error(
                f"connective {nxt.value!r} after {op!r} needs explicit parentheses", nxt
            )
        return left

    def unitary(self) -> Formula:
        tok = self.advance()
        if tok.kind == "op":
            if tok.value == "~":
                return Not(self.unitary())
            if tok.value == "(":
                f = self.formula()
                self.expect(")")
                return f
            if tok.value in ("!", "?"):
                raise self.error("quantifiers are not supported", tok, UnsupportedFragment)
            if tok.value == "{":
                raise self.error("norms may only appear in axioms", tok)
        elif tok.kind == "dollar":
            if tok.value == "$true":
                return TOP
            if tok.value == "$false":
                return BOTTOM
            raise self.error(f"unsupported defined symbol {tok.value}", tok, UnsupportedFragment)
        elif tok.kind in ("lower", "quoted"):
            if self.at("("):
                raise self.error(
                    f"{tok.value} applied to arguments: only propositional atoms are supported",
                    tok,
                    UnsupportedFragment,
                )
            if self.at("=") or self.at("!="):
                raise self.error("equality is not supported", self.peek(), UnsupportedFragment)
            return Atom(tok.value if tok.kind == "lower" else _unquote(tok.value))
        elif tok.kind == "upper":
            raise self.error(f"variable {tok.value} is not supported", tok, UnsupportedFragment)
        raise self.error(f"expected a formula, found {tok.value or 'end of input'!r}", tok)

    def formula_list(self) -> tuple[Formula, ...]:
        self.expect("[")
        items = []
        if not self.at("]"):
            items.append(self.formula())
            while self.at(","):
                self.advance()
                items.append(self.formula())
        self.expect("]")
        return tuple(items)

    # -- norms -----------------------------------------------------------
    def norm(self, name: str) -> Norm:
        depth = 0
        while self.at("("):
            self.advance()
            depth += 1
        if not self.at("{"):
            raise self.error("axioms must be norms of the form {$$norm} @ (body, head)")
        self.advance()
        tok = self.advance()
        if tok.kind != "ddollar" or tok.value != "$$norm":
            raise self.error(f"unknown non-classical connective {tok.value!r}", tok, UnsupportedFragment)
        self.expect("}")
        self.expect("@")
        self.expect("(")
        body = self.formula()
        self.expect(",")
        head = self.formula()
        self.expect(")")
        for _ in range(depth):
            self.expect(")")
        return Norm(name, body, head)

    # -- logic specification ---------------------------------------------
    def logic_spec(self) -> dict:
        depth = 0
        while self.at("("):
            self.advance()
            depth += 1
        tok = self.advance()
        if tok.kind != "ddollar" or tok.value != "$$iol":
            raise self.error(f"unsupported logic {tok.value!r}, expected $$iol", tok)
        self.expect("==")
        self.expect("[")
        options: dict = {}
        if not self.at("]"):
            self.option(options)
            while self.at(","):
                self.advance()
                self.option(options)
        self.expect("]")
        for _ in range(depth):
            self.expect(")")
        return options

    def option(self, options: dict) -> None:
        key_tok = self.advance()
        key = key_tok.value
        if key_tok.kind != "ddollar":
            raise self.error(f"expected a $$ option name, found {key!r}", key_tok)
        if key in options:
            raise self.error(f"option {key} given twice", key_tok)
        self.expect("==")
        if key == "$$operator":
            tok = self.advance()
            ops = {f"$${op.value}": op for op in Operator}
            if tok.value not in ops:
                raise self.error(f"unknown output operator {tok.value!r}", tok)
            options[key] = ops[tok.value]
        elif key == "$$throughput":
            if self.at(",") or self.at("]"):
                options[key] = False
            else:
                tok = self.advance()
                if tok.value not in ("$true", "$false"):
                    raise self.error("$$throughput expects $true or $false", tok)
                options[key] = tok.value == "$true"
        elif key == "$$constrained":
            tok = self.advance()
            modes = {"$$credulous": Aggregation.CREDULOUS, "$$skeptical": Aggregation.SKEPTICAL}
            if tok.value not in modes:
                raise self.error(f"unknown aggregation {tok.value!r}", tok)
            options[key] = modes[tok.value]
        elif key == "$$constraints":
            if self.at("$$input"):
                self.advance()
                options[key] = SAME_AS_INPUT
            else:
                options[key] = self.formula_list()
        elif key == "$$preference":
            options[key] = (key_tok, self.preference())
        else:
            raise self.error(f"unknown option {key}", key_tok)

    def preference(self) -> list[list[str]]:
        self.expect("[")
        tiers = []
        while not self.at("]"):
            if self.at("[") or self.at("("):
                close = "]" if self.advance().value == "[" else ")"
                tier = [self.name()]
                while self.at(","):
                    self.advance()
                    tier.append(self.name())
                self.expect(close)
            else:
                tier = [self.name()]
            tiers.append(tier)
            if not self.at(","):
                break
            self.advance()
        self.expect("]")
        return tiers

    # -- annotations -------------------------------------------------------
    def skip_term(self) -> None:
        depth = 0
        while True:
            tok = self.peek()
            if tok.kind == "eof":
                raise self.error("unterminated annotated formula")
            if tok.kind == "op":
                if tok.value in "([{":
                    depth += 1
                elif tok.value in ")]}":
                    if depth == 0:
                        return
                    depth -= 1
                elif tok.value == "," and depth == 0:
                    return
            self.advance()

    # -- top level ----------------------------------------------------------
    def annotated(self) -> AnnotatedFormula:
        tok = self.advance()
        if tok.kind == "lower" and tok.value == "include":
            raise self.error("include directives are not supported", tok, UnsupportedFragment)
        if tok.kind != "lower" or tok.value not in ("tff", "fof"):
            raise self.error(f"expected an annotated formula, found {tok.value!r}", tok)
        self.expect("(")
        name = self.name()
        self.expect(",")
        role_tok = self.advance()
        role = role_tok.value
        if role_tok.kind != "lower" or role not in _ROLES:
            raise self.error(f"unknown or unsupported role {role!r}", role_tok)
        self.expect(",")
        if role == "logic":
            payload = self.logic_spec()
        elif role == "axiom":
            payload = self.norm(name)
        else:
            payload = self.formula()
        for _ in range(2):
            if self.at(","):
                self.advance()
                self.skip_term()
        self.expect(")")
        self.expect(".")
        return AnnotatedFormula(name, role, payload)

    def annotated_formulas(self) -> list[tuple[Token, AnnotatedFormula]]:
        result = []
        while self.peek().kind != "eof":
            start = self.peek()
            result.append((start, self.annotated()))
        return result


def parse_formula(text: str) -> Formula:
    """Parse one classical formula in TPTP syntax."""
    parser = _Parser(text)
    f = parser.formula()
    if parser.peek().kind != "eof":
        raise parser.error(f"unexpected {parser.peek().value!r} after formula")
    return f


def parse_problem(text: str, source_name: str = "<input>") -> Problem:
    """Parse a complete problem; raises :class:`InputError` subclasses."""
    parser = _Parser(text)
    spec_options = None
    spec_tok = None
    norms: list[Norm] = []
    inputs: list[Formula] = []
    conjectures: list[tuple[str, Formula]] = []
    for tok, item in parser.annotated_formulas():
        if item.role == "logic":
            if spec_options is not None:
                raise ParseError("more than one logic specification", tok.line, tok.column)
            spec_options, spec_tok = item.payload, tok
        elif item.role == "axiom":
            if any(n.name == item.name for n in norms):
                raise ParseError(f"duplicate norm name {item.name!r}", tok.line, tok.column)
            norms.append(item.payload)
        elif item.role == "hypothesis":
            inputs.append(item.payload)
        else:
            if any(name == item.name for name, _ in conjectures):
                warnings.warn(
                    f"conjecture name {item.name!r} used more than once", ProblemWarning, stacklevel=2
                )
            conjectures.append((item.name, item.payload))
    if spec_options is None:
        raise ParseError("missing logic specification (role 'logic')")
    if "$$operator" not in spec_options:
        raise ParseError("logic specification lacks $$operator", spec_tok.line, spec_tok.column)

    norm_set = NormSet(norms)
    preference = Preference()
    if "$$preference" in spec_options:
        pref_tok, tiers = spec_options["$$preference"]
        try:
            preference = Preference.from_tiers(tiers)
            preference.check(norm_set)
        except ValueError as exc:
            raise ParseError(str(exc), pref_tok.line, pref_tok.column) from None

    constrained = spec_options.get("$$constrained")
    if constrained is None:
        for key in ("$$constraints", "$$preference"):
            if key in spec_options:
                warnings.warn(
                    f"{key} has no effect without $$constrained", ProblemWarning, stacklevel=2
                )
    spec = LogicSpec(
        operator=spec_options["$$operator"],
        throughput=spec_options.get("$$throughput", False),
        constrained=constrained,
        constraints=spec_options.get("$$constraints", ()),
        preference=preference,
    )
    return Problem(spec, norm_set, unique(inputs), tuple(conjectures), source_name)


def read_problem(path: str) -> Problem:
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    return parse_problem(text, os.path.basename(path))
