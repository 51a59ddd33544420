"""Slow, definition-literal oracles the tests freeze expectations against.

Nothing here reuses the library's algorithms.  Satisfaction, reducts and
model enumeration are restated from scratch in the most naive way
possible, and program distance enumerates every partial injective
mapping.  Keep these dumb: their only job is to be obviously correct.
"""

from itertools import combinations, permutations

from aspforget.core import Program, Rule


def powerset(atoms):
    items = sorted(atoms)
    for k in range(len(items) + 1):
        for combo in combinations(items, k):
            yield frozenset(combo)


def holds(i, r):
    """Classical satisfaction: not a == a absent, not not a == a present."""
    body_true = r.pbody <= i and not (r.nbody & i) and r.nnbody <= i
    return not body_true or bool(r.head & i)


def classical_models(rules, sigma):
    return {i for i in powerset(sigma) if all(holds(i, r) for r in rules)}


def reduct_rules(rules, i):
    return [Rule(r.head, r.pbody, frozenset(), frozenset())
            for r in rules if not (r.nbody & i) and r.nnbody <= i]


def ht_pairs(rules, sigma):
    out = set()
    for y in powerset(sigma):
        if not all(holds(y, r) for r in rules):
            continue
        red = reduct_rules(rules, y)
        for x in powerset(y):
            if all(holds(x, r) for r in red):
                out.add((x, y))
    return out


def stable_models(rules, sigma):
    pairs = ht_pairs(rules, sigma)
    return {y for (x, y) in pairs
            if x == y and not any(x2 < y and (x2, y) in pairs
                                  for x2 in powerset(y))}


def rule_lits(r):
    return ({("+", a) for a in r.pbody}
            | {("-", a) for a in r.nbody}
            | {("--", a) for a in r.nnbody})


def naive_rule_distance(r1, r2):
    return len(r1.head ^ r2.head) + len(rule_lits(r1) ^ rule_lits(r2))


def naive_rule_size(r):
    return len(r.head) + len(r.pbody) + len(r.nbody) + len(r.nnbody)


def naive_program_distance(p1, p2):
    """Minimum over every subset of p1, injected every way into p2."""
    rules1 = sorted(p1, key=str)
    rules2 = sorted(p2, key=str)
    total = sum(naive_rule_size(r) for r in rules1 + rules2)
    best = total
    n1, n2 = len(rules1), len(rules2)
    for k in range(min(n1, n2) + 1):
        for left in combinations(range(n1), k):
            for right in permutations(range(n2), k):
                cost = sum(naive_rule_distance(rules1[a], rules2[b])
                           for a, b in zip(left, right))
                cost += sum(naive_rule_size(rules1[i])
                            for i in range(n1) if i not in left)
                cost += sum(naive_rule_size(rules2[i])
                            for i in range(n2) if i not in right)
                best = min(best, cost)
    return best
