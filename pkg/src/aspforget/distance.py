"""Edit distance between rules and programs.

Rule distance is the symmetric difference of heads plus that of bodies
(body literals compared with their negation kind).  Program distance
matches rules of one program injectively to rules of the other: matched
pairs cost their rule distance, unmatched rules cost their full size, and
the minimum over all partial injective matchings is taken.  The minimum is
computed exactly as a linear assignment problem with one dummy node per
rule, so leaving any rule unmatched stays available at its own cost.
"""

from __future__ import annotations

from typing import List, Tuple

import numpy as np
from scipy.optimize import linear_sum_assignment

from .core import Program, Rule, rule_key


def rule_size(r: Rule) -> int:
    """Head atoms plus body literals."""
    return len(r.head) + len(r.body)


def rule_distance(r1: Rule, r2: Rule) -> int:
    """Symmetric-difference distance between two rules."""
    return len(r1.head ^ r2.head) + len(r1.body ^ r2.body)


def program_distance(p1: Program, p2: Program
                     ) -> Tuple[int, Tuple[Tuple[Rule, Rule], ...]]:
    """Minimum total edit cost and one optimal matching as rule pairs.

    The returned pairs are the matched rules (unmatched rules are simply
    absent); ties are broken deterministically by sorting both rule lists
    first.
    """
    rules1: List[Rule] = sorted(p1.rules, key=rule_key)
    rules2: List[Rule] = sorted(p2.rules, key=rule_key)
    n1, n2 = len(rules1), len(rules2)
    if n1 == 0 and n2 == 0:
        return 0, ()
    n = n1 + n2
    cost = np.zeros((n, n), dtype=np.int64)
    for i, r1 in enumerate(rules1):
        for j, r2 in enumerate(rules2):
            cost[i, j] = rule_distance(r1, r2)
        cost[i, n2:] = rule_size(r1)
    for j, r2 in enumerate(rules2):
        cost[n1:, j] = rule_size(r2)
    rows, cols = linear_sum_assignment(cost)
    total = int(cost[rows, cols].sum())
    matching = tuple((rules1[i], rules2[j])
                     for i, j in zip(rows, cols) if i < n1 and j < n2)
    return total, matching
