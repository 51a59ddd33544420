"""Atoms, body literals, rules, and programs.

Rules are of the form

    a1 | ... | ak :- b1, ..., bl, not c1, ..., not cm, not not d1, ..., not not dn.

with all four components read as sets, so structural equality ignores order
and duplicates.  ``Rule`` and ``Program`` are immutable and hashable, which
lets rule sets and program collections behave like mathematical sets.  A
program carries an explicit signature that is always a superset of the atoms
occurring in its rules.
"""

from __future__ import annotations

import re
import sys
from dataclasses import dataclass
from functools import cached_property
from typing import FrozenSet, Iterable, Iterator, Optional, Tuple

ATOM_RE = re.compile(r"[a-z][A-Za-z0-9_]*\Z")

# Literal depths: number of "not" prefixes.
POS = 0
NAF = 1
NAFNAF = 2


def check_atom(name: str) -> str:
    """Validate an atom name and return the interned string.

    Atom names match ``[a-z][A-Za-z0-9_]*``; ``not`` is reserved.
    """
    if name == "not" or not ATOM_RE.match(name):
        raise ValueError(f"invalid atom name: {name!r}")
    return sys.intern(name)


@dataclass(frozen=True, order=True)
class Literal:
    """A body literal: an atom under zero, one, or two ``not``.

    The field order makes literals sort positives first, then ``not a``,
    then ``not not a``, each block alphabetically, which is also the
    canonical printing order for bodies.
    """

    depth: int
    atom: str

    def __post_init__(self):
        if self.depth not in (POS, NAF, NAFNAF):
            raise ValueError(f"literal depth must be 0, 1 or 2: {self.depth}")

    def negate(self) -> "Literal":
        """Prefix one ``not``, simplifying ``not not not a`` to ``not a``."""
        d = self.depth + 1
        return Literal(d if d <= NAFNAF else NAF, self.atom)

    def __str__(self) -> str:
        return "not " * self.depth + self.atom


def pos(atoms: Iterable[str]) -> FrozenSet[Literal]:
    """The atoms of a head or positive body, as plain literals."""
    return frozenset(Literal(POS, a) for a in atoms)


def naf(literals: Iterable[Literal | str]) -> FrozenSet[Literal]:
    """Apply ``not`` to every literal (atoms are taken at depth 0)."""
    return frozenset(_lift(l).negate() for l in literals)


def nafnaf(literals: Iterable[Literal | str]) -> FrozenSet[Literal]:
    """Apply ``not not`` to every literal, with depth simplification."""
    return frozenset(_lift(l).negate().negate() for l in literals)


def _lift(l: Literal | str) -> Literal:
    return l if isinstance(l, Literal) else Literal(POS, l)


@dataclass(frozen=True)
class Rule:
    """One rule; head and the three body parts are atom sets."""

    head: FrozenSet[str]
    pbody: FrozenSet[str]
    nbody: FrozenSet[str]
    nnbody: FrozenSet[str]

    @cached_property
    def body(self) -> FrozenSet[Literal]:
        """The body as a single literal set."""
        return frozenset(
            [Literal(POS, a) for a in self.pbody]
            + [Literal(NAF, a) for a in self.nbody]
            + [Literal(NAFNAF, a) for a in self.nnbody]
        )

    @cached_property
    def atoms(self) -> FrozenSet[str]:
        """All atoms occurring in the rule."""
        return self.head | self.pbody | self.nbody | self.nnbody

    @property
    def is_constraint(self) -> bool:
        return not self.head

    def head_without(self, q: str) -> FrozenSet[str]:
        return self.head - {q}

    def body_without(self, q: str) -> FrozenSet[Literal]:
        """The body literal set with every occurrence of ``q`` dropped."""
        return frozenset(l for l in self.body if l.atom != q)

    def __str__(self) -> str:
        head = " | ".join(sorted(self.head))
        body = ", ".join(str(l) for l in sorted(self.body))
        if head and body:
            return f"{head} :- {body}."
        if head:
            return f"{head}."
        return f":- {body}." if body else ":-."


def rule(head: Iterable[str] = (), pbody: Iterable[str] = (),
         nbody: Iterable[str] = (), nnbody: Iterable[str] = ()) -> Rule:
    """Build a rule from atom iterables, validating atom names."""
    return Rule(frozenset(map(check_atom, head)),
                frozenset(map(check_atom, pbody)),
                frozenset(map(check_atom, nbody)),
                frozenset(map(check_atom, nnbody)))


def make_rule(head: Iterable[str], body: Iterable[Literal]) -> Rule:
    """Build a rule from a head atom set and a body literal set."""
    parts = (set(), set(), set())
    for l in body:
        parts[l.depth].add(l.atom)
    return Rule(frozenset(head), *(frozenset(p) for p in parts))


def rule_key(r: Rule) -> Tuple:
    """Deterministic sort key for rules (structural, not textual)."""
    return (sorted(r.head), sorted(r.pbody), sorted(r.nbody), sorted(r.nnbody))


def is_tautological(r: Rule) -> bool:
    """True iff the rule can never act: an atom occurs in the head and the
    positive body, or positively and under ``not``, or under ``not`` and
    ``not not``."""
    return bool(r.head & r.pbody or r.pbody & r.nbody or r.nbody & r.nnbody)


def subsumes(r1: Rule, r2: Rule) -> bool:
    """True iff r1 strictly subsumes r2: head and body of r1 are contained
    in those of r2, and the rules differ."""
    return r1 != r2 and r1.head <= r2.head and r1.body <= r2.body


def find_subsumer(r: Rule, rules: Iterable[Rule]) -> Optional[Rule]:
    """A witness rule strictly subsuming ``r``, or None; deterministic."""
    hits = [r2 for r2 in rules if subsumes(r2, r)]
    return min(hits, key=rule_key) if hits else None


def is_minimal_in(r: Rule, program: "Program | Iterable[Rule]") -> bool:
    """True iff no rule of the collection strictly subsumes ``r``."""
    return find_subsumer(r, program) is None


class Program:
    """A duplicate-free rule set with an explicit signature.

    The signature is the union of the atoms occurring in the rules and any
    extra atoms passed in, so it can be widened explicitly but never
    silently narrowed.  Equality and hashing consider the rule set only.
    """

    __slots__ = ("_rules", "_signature")

    def __init__(self, rules: Iterable[Rule] = (),
                 signature: Iterable[str] = ()):
        self._rules = frozenset(rules)
        inferred = frozenset(a for r in self._rules for a in r.atoms)
        self._signature = inferred | frozenset(signature)

    @property
    def rules(self) -> FrozenSet[Rule]:
        return self._rules

    @property
    def signature(self) -> FrozenSet[str]:
        return self._signature

    def widen(self, atoms: Iterable[str]) -> "Program":
        """The same program over a larger signature."""
        return Program(self._rules, self._signature | frozenset(atoms))

    def __iter__(self) -> Iterator[Rule]:
        return iter(sorted(self._rules, key=rule_key))

    def __len__(self) -> int:
        return len(self._rules)

    def __contains__(self, r: Rule) -> bool:
        return r in self._rules

    def __or__(self, other: "Program") -> "Program":
        return Program(self._rules | other._rules,
                       self._signature | other._signature)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Program):
            return NotImplemented
        return self._rules == other._rules

    def __hash__(self) -> int:
        return hash(self._rules)

    def __repr__(self) -> str:
        rules = " ".join(str(r) for r in self)
        return f"<Program {len(self._rules)} rules: {rules}>"


def signature(p: Program) -> FrozenSet[str]:
    """The signature of a program."""
    return p.signature
