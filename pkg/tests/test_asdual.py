"""Blocker-set construction: every way to keep an atom underivable."""

from hypothesis import given, settings
from hypothesis import strategies as st

from aspforget.asdual import as_dual
from aspforget.core import NAF, NAFNAF, Rule, naf, nafnaf
from aspforget.parser_io import parse_program

from . import oracles


def dual(q, text):
    return as_dual(q, parse_program(text).rules)


def test_two_positive_rules(prog):
    assert dual("q", "q :- s. q :- w.") == {frozenset(naf(["s", "w"]))}


def test_mixed_rules_four_blockers(prog):
    got = dual("q", "q :- s, t. q | u :- w.")
    want = {
        frozenset(naf(["s"]) | nafnaf(["u"])),
        frozenset(naf(["t"]) | nafnaf(["u"])),
        frozenset(naf(["s", "w"])),
        frozenset(naf(["t", "w"])),
    }
    assert got == want


def test_empty_rule_set():
    assert as_dual("q", frozenset()) == {frozenset()}


def test_fact_cannot_be_blocked(prog):
    assert dual("q", "q.") == frozenset()
    # one unblockable rule poisons the whole set
    assert dual("q", "q. q :- s.") == frozenset()


def test_negative_body_flips_to_double_negation(prog):
    # blocking q <- not t means asserting not not t
    assert dual("q", "q :- not t.") == {frozenset(nafnaf(["t"]))}
    assert dual("q", "q :- not not t.") == {frozenset(naf(["t"]))}


def test_head_alternatives_block_via_double_negation(prog):
    got = dual("q", "q | u | v :- s.")
    want = {
        frozenset(naf(["s"])),
        frozenset(nafnaf(["u"])),
        frozenset(nafnaf(["v"])),
    }
    assert got == want


def test_forgotten_atom_never_appears(prog):
    for blocker in dual("q", "q | u :- s, not q."):
        assert all(l.atom != "q" for l in blocker)


def test_blocker_sizes_and_depths(prog):
    blockers = dual("q", "q :- s, t. q | u :- w. q :- not v.")
    for b in blockers:
        assert len(b) <= 3
        assert all(l.depth in (NAF, NAFNAF) for l in b)


def _option_rules():
    atoms = st.sampled_from(("a", "b", "c"))
    sets = st.frozensets(atoms, max_size=2)
    return st.builds(
        lambda h, pb, nb: Rule(h | {"q"}, pb - {"q"}, nb - {"q"},
                               frozenset()),
        sets, sets, sets)


@given(st.frozensets(_option_rules(), max_size=3))
@settings(max_examples=60, deadline=None)
def test_blockers_characterize_headless_satisfaction(rules):
    """Some blocker holds in world Y iff Y satisfies every rule sans q.

    Blocker literals are all negations, so their truth is fixed by the
    there-world alone; the equivalence is therefore stated for total
    worlds.  (It does not lift to the here-world: `not not u` can hold at
    <X,Y> while the stripped rule u<-a fails X.)
    """
    sigma = {"a", "b", "c"}
    family = as_dual("q", rules)
    stripped = [Rule(r.head - {"q"}, r.pbody - {"q"},
                     r.nbody - {"q"}, r.nnbody - {"q"}) for r in rules]
    for y in oracles.powerset(sigma):
        def lit_holds(l):
            return (l.atom not in y) if l.depth == NAF else (l.atom in y)

        blocked = any(all(lit_holds(l) for l in d) for d in family)
        sat = all(oracles.holds(y, r) for r in stripped)
        assert blocked == sat
