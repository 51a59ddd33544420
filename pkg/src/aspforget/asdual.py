"""Blocker sets: the ways to prevent every rule of a set from deriving q.

``as_dual(q, rules)`` returns all sets of negated literals that, read as
extra body conditions, jointly guarantee that no rule of ``rules`` can
produce ``q``: for each rule either one of its body literals (without q) is
refuted, or one of its other head atoms absorbs the derivation.  Formally
every rule contributes either ``not l`` for some body literal ``l`` or
``not not h`` for some head atom ``h`` other than q, with the usual
simplification collapsing three ``not`` to one.

Corner cases follow from the definition: the empty rule set yields ``{{}}``
(nothing to block), and a rule with no q-free body literal and no q-free
head atom (for instance the fact ``q.``) has no blocker, so the result is
empty.
"""

from __future__ import annotations

from itertools import product
from typing import FrozenSet, Iterable

from .core import Literal, NAFNAF, Rule


def as_dual(q: str, rules: Iterable[Rule]) -> FrozenSet[FrozenSet[Literal]]:
    """All blocker sets for ``q`` over ``rules``; rules are expected to be
    in normal form.  Every returned literal has one or two ``not`` and
    never mentions ``q``."""
    option_sets = []
    for r in rules:
        options = {l.negate() for l in r.body_without(q)}
        options |= {Literal(NAFNAF, h) for h in r.head - {q}}
        if not options:
            return frozenset()
        option_sets.append(options)
    return frozenset(frozenset(combo) for combo in product(*option_sets))
