"""Concrete syntax: parsing, canonical printing, JSON export.

Grammar (``%`` starts a comment reaching the end of the line)::

    atom    = [a-z][A-Za-z0-9_]*          # "not" is reserved
    literal = atom | "not" atom | "not" "not" atom
    head    = atom ("|" atom)* | <empty>
    body    = literal ("," literal)*
    rule    = head "." | head ":-" body "." | ":-" body "."

The degenerate rule with empty head and empty body is written ``:-.`` and
is accepted back; it arises from forgetting and denotes the always-violated
constraint.  Canonical printing sorts head atoms alphabetically, body
literals by kind (positive, ``not``, ``not not``) and then alphabetically,
and whole rules by their printed form, one per line, so that printing is
injective on programs and ``parse(print(P)) == P``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import FrozenSet, Iterable, List, Optional, Tuple, Union

from .core import ATOM_RE, Literal, Program, Rule, rule_key
from .ht_semantics import HTModelSet


class ParseError(Exception):
    """Syntax error with source position."""

    def __init__(self, message: str, line: int, column: int, snippet: str = ""):
        super().__init__(f"{line}:{column}: {message}")
        self.message = message
        self.line = line
        self.column = column
        self.snippet = snippet


_PUNCT = {":-", ".", ",", "|"}


def _tokenize(text: str) -> List[Tuple[str, str, int, int]]:
    """Yield (kind, value, line, column) tokens; kind is 'atom' or 'punct'."""
    tokens = []
    line, col = 1, 1
    i, n = 0, len(text)
    while i < n:
        c = text[i]
        if c == "\n":
            line += 1
            col = 1
            i += 1
        elif c in " \t\r":
            i += 1
            col += 1
        elif c == "%":
            while i < n and text[i] != "\n":
                i += 1
        elif text.startswith(":-", i):
            tokens.append(("punct", ":-", line, col))
            i += 2
            col += 2
        elif c in ".,|":
            tokens.append(("punct", c, line, col))
            i += 1
            col += 1
        elif c.isalpha() or c == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            word = text[i:j]
            if not ATOM_RE.match(word):
                raise ParseError(f"invalid atom name {word!r}", line, col,
                                 _line_of(text, line))
            tokens.append(("atom", word, line, col))
            col += j - i
            i = j
        else:
            raise ParseError(f"unexpected character {c!r}", line, col,
                             _line_of(text, line))
    return tokens


def _line_of(text: str, line: int) -> str:
    lines = text.splitlines()
    return lines[line - 1] if 0 < line <= len(lines) else ""


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0

    def _peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def _error(self, message: str, tok=None):
        if tok is None:
            tok = self._peek()
        if tok is None:
            lines = self.text.splitlines() or [""]
            raise ParseError(message, len(lines), len(lines[-1]) + 1, lines[-1])
        raise ParseError(message, tok[2], tok[3], _line_of(self.text, tok[2]))

    def _take_punct(self, value: str) -> None:
        tok = self._peek()
        if tok is None or tok[0] != "punct" or tok[1] != value:
            self._error(f"expected {value!r}")
        self.pos += 1

    def _take_atom(self) -> str:
        tok = self._peek()
        if tok is None or tok[0] != "atom":
            self._error("expected an atom")
        if tok[1] == "not":
            self._error("'not' is reserved and cannot be an atom name", tok)
        self.pos += 1
        return tok[1]

    def _literal(self) -> Literal:
        depth = 0
        while depth < 2:
            tok = self._peek()
            if tok is not None and tok[0] == "atom" and tok[1] == "not":
                self.pos += 1
                depth += 1
            else:
                break
        return Literal(depth, self._take_atom())

    def _rule(self) -> Rule:
        head: List[str] = []
        tok = self._peek()
        if tok[0] == "atom":
            head.append(self._take_atom())
            while self._peek() and self._peek()[1] == "|":
                self.pos += 1
                head.append(self._take_atom())
        body: List[Literal] = []
        tok = self._peek()
        if tok is not None and tok[1] == ":-":
            self.pos += 1
            if self._peek() is not None and self._peek()[1] != ".":
                body.append(self._literal())
                while self._peek() is not None and self._peek()[1] == ",":
                    self.pos += 1
                    body.append(self._literal())
        elif not head and (tok is None or tok[1] != "."):
            self._error("expected a rule")
        self._take_punct(".")
        parts = (set(), set(), set())
        for l in body:
            parts[l.depth].add(l.atom)
        return Rule(frozenset(head), *(frozenset(p) for p in parts))

    def program(self) -> Program:
        rules = []
        while self._peek() is not None:
            rules.append(self._rule())
        return Program(rules)


def parse_program(text: str) -> Program:
    """Parse program text; raises ParseError with line/column on bad input."""
    return _Parser(text).program()


def parse_rule(text: str) -> Rule:
    """Parse a single rule (convenience for tests and the REPL)."""
    program = parse_program(text)
    if len(program) != 1:
        raise ValueError(f"expected exactly one rule, got {len(program)}")
    return next(iter(program))


def format_literal(l: Literal) -> str:
    return str(l)


def format_rule(r: Rule) -> str:
    """Canonical single-line rendering of one rule."""
    return str(r)


def format_program(p: Program) -> str:
    """Canonical rendering: sorted rules, one per line, trailing newline.

    The empty program renders as the empty string.
    """
    lines = sorted(format_rule(r) for r in p.rules)
    return "".join(line + "\n" for line in lines)


AnswerSets = FrozenSet[FrozenSet[str]]


def models_to_json(models: Union[HTModelSet, Iterable[FrozenSet[str]]],
                   sigma: Optional[Iterable[str]] = None) -> str:
    """Stable JSON for HT-model sets or answer-set collections.

    Atom arrays are sorted, as are the outer arrays, so equal inputs always
    serialize to the same bytes.  For answer-set collections the signature
    defaults to the union of the sets unless given explicitly.
    """
    if isinstance(models, HTModelSet):
        payload = {
            "signature": sorted(models.sigma),
            "ht_models": sorted([sorted(m.x), sorted(m.y)]
                                for m in models.members),
        }
    else:
        sets = [frozenset(s) for s in models]
        if sigma is None:
            sig = sorted(set().union(*sets)) if sets else []
        else:
            sig = sorted(sigma)
        payload = {
            "signature": sig,
            "answer_sets": sorted(sorted(s) for s in sets),
        }
    return json.dumps(payload, separators=(",", ":"))
