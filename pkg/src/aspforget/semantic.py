"""Semantic account of forgetting: target models, the obstruction
criterion, and the counter-model construction.

For a program P and forgotten atoms V, fix some Y over the remaining
signature.  ``rel_sets`` collects the minimal ways A of re-adding atoms of
V so that Y u A is a total HT-model of P; for each such A the reachable
here-parts, with V removed, form one candidate model family.  The target
models of forgetting keep exactly the here-parts common to all candidates.

``satisfies_omega`` detects the obstruction: some Y whose family of
candidates is non-empty but has no least member.  Exactly then no single
program over the reduced signature can reproduce the answer sets of P
under every context, and syntactic forgetting falls back to a superset
guarantee.

``f_sem`` realizes the target models by brute force, emitting one rule per
missing pair (a counter-model construction).  It is a correctness yardstick
and deliberately performs no simplification, so its output is large.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, Optional, Tuple

from .core import Program, Rule
from .ht_semantics import (HTInterpretation, HTModelSet, check_signature,
                           ht_models, subsets)

SetFamily = FrozenSet[FrozenSet[str]]


@dataclass(frozen=True)
class OmegaCandidate:
    """The evidence collected for one Y over the reduced signature."""

    y: FrozenSet[str]
    rel: SetFamily
    families: Tuple[Tuple[FrozenSet[str], SetFamily], ...]
    has_least: bool

    @property
    def obstructs(self) -> bool:
        return bool(self.rel) and not self.has_least


@dataclass(frozen=True)
class OmegaReport:
    """Full record of the obstruction check."""

    satisfies: bool
    witness: Optional[FrozenSet[str]]
    candidates: Tuple[OmegaCandidate, ...]


def _pairs_by_total(ht: HTModelSet) -> Dict[FrozenSet[str], set]:
    by_y: Dict[FrozenSet[str], set] = {}
    for x, y in ht.members:
        by_y.setdefault(y, set()).add(x)
    return by_y


def _rel(by_y, v_atoms, y) -> SetFamily:
    rel = []
    for a in subsets(v_atoms):
        ya = y | a
        if ya not in by_y or ya not in by_y[ya]:
            continue
        if any(a2 != a and (y | a2) in by_y[ya] for a2 in subsets(a)):
            continue
        rel.append(a)
    return frozenset(rel)


def _here_parts(by_y, ya, v) -> FrozenSet[str]:
    return frozenset(x - v for x in by_y.get(ya, ()))


def rel_sets(p: Program, v: Iterable[str], y: Iterable[str],
             limit: Optional[int] = None) -> SetFamily:
    """The minimal extensions A of Y into V with Y u A a total HT-model of
    P and no smaller extension reaching the same there-world."""
    vs = frozenset(v)
    ys = frozenset(y)
    if ys & vs:
        raise ValueError("y must be disjoint from the forgotten atoms")
    by_y = _pairs_by_total(ht_models(p, limit=limit))
    return _rel(by_y, vs & p.signature, ys)


def satisfies_omega(p: Program, v: Iterable[str],
                    limit: Optional[int] = None) -> Tuple[bool, OmegaReport]:
    """Decide the obstruction criterion and return the full evidence.

    True iff some Y over the reduced signature has a non-empty family of
    candidate model sets without a least element.
    """
    vs = frozenset(v)
    sigma2 = p.signature - vs
    check_signature(sigma2, limit)
    by_y = _pairs_by_total(ht_models(p, limit=limit))
    v_atoms = vs & p.signature
    candidates = []
    witness = None
    for y in subsets(sigma2):
        rel = _rel(by_y, v_atoms, y)
        families = tuple((a, _here_parts(by_y, y | a, vs))
                         for a in sorted(rel, key=sorted))
        distinct = {fam for _, fam in families}
        has_least = any(all(m <= other for other in distinct)
                        for m in distinct)
        cand = OmegaCandidate(y, rel, families, has_least)
        candidates.append(cand)
        if cand.obstructs and witness is None:
            witness = y
    return witness is not None, OmegaReport(witness is not None, witness,
                                            tuple(candidates))


def fsp_target_models(p: Program, v: Iterable[str],
                      limit: Optional[int] = None) -> HTModelSet:
    """The HT-models any ideal forgetting result must have: for each Y,
    the intersection of its candidate model sets (no candidates, no
    models)."""
    vs = frozenset(v)
    sigma2 = p.signature - vs
    check_signature(sigma2, limit)
    by_y = _pairs_by_total(ht_models(p, limit=limit))
    v_atoms = vs & p.signature
    members = []
    for y in subsets(sigma2):
        rel = sorted(_rel(by_y, v_atoms, y), key=sorted)
        if not rel:
            continue
        common = set(_here_parts(by_y, y | rel[0], vs))
        for a in rel[1:]:
            common &= _here_parts(by_y, y | a, vs)
        members.extend(HTInterpretation(x, y) for x in common)
    return HTModelSet(sigma2, frozenset(members))


def f_sem(p: Program, v: Iterable[str],
          limit: Optional[int] = None) -> Program:
    """Realize the target models directly, one rule per missing pair.

    For a non-model <X,Y> whose total pair <Y,Y> is a model the rule
    excludes exactly that pair; for a non-model <Y,Y> a constraint kills
    the whole there-world.  No simplification is applied.
    """
    target = fsp_target_models(p, v, limit=limit)
    sigma2 = target.sigma
    by_y = _pairs_by_total(target)
    rules = []
    for y in subsets(sigma2):
        havey = by_y.get(y, set())
        if y not in havey:
            rules.append(Rule(frozenset(), y, sigma2 - y, frozenset()))
            continue
        for x in subsets(y):
            if x != y and x not in havey:
                rules.append(Rule(y - x, x, sigma2 - y, y - x))
    return Program(rules, signature=sigma2)
