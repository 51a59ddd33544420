"""Normal form: the four rewrite steps, their order, and preserved meaning."""

from hypothesis import given, settings

from aspforget.core import Program
from aspforget.ht_semantics import strongly_equivalent
from aspforget.normalform import is_normal_form, normal_form
from aspforget.parser_io import parse_program, parse_rule

from .conftest import programs as program_strategy


def test_detects_duplicate_body_forms(prog):
    assert not is_normal_form(prog("a :- b, not not b."))
    assert not is_normal_form(prog("a :- b, not b."))


def test_detects_head_body_overlap(prog):
    assert not is_normal_form(prog("a | b :- not b."))
    assert not is_normal_form(prog("a :- a."))


def test_detects_non_minimal_rules(prog):
    assert not is_normal_form(prog("a :- b. a :- b, c."))
    assert is_normal_form(prog("a :- b. a :- c."))


def test_tautologies_dropped(prog):
    assert normal_form(prog("p :- p. a :- b.")) == prog("a :- b.")


def test_double_negation_dropped_next_to_positive(prog):
    assert normal_form(prog("a :- b, not not b.")) == prog("a :- b.")


def test_head_atom_dropped_under_its_own_negation(prog):
    assert normal_form(prog("a | b :- not b, c.")) == prog("a :- not b, c.")


def test_head_drop_may_create_constraint(prog):
    # the whole head can disappear; the constraint stays behind
    assert normal_form(prog("a :- not a, c.")) == prog(":- not a, c.")


def test_subsumed_rules_dropped(prog):
    assert normal_form(prog("a :- b. a :- b, c.")) == prog("a :- b.")


def test_already_normal_program_is_fixed(prog):
    p = prog("t :- q. v :- not q. q :- s. q :- w.")
    assert normal_form(p) == p
    assert is_normal_form(p)


def test_step_order_tautology_before_simplification(prog):
    # a tautological rule is removed whole, not first repaired
    assert normal_form(prog("a :- a, not not a.")) == Program()


def test_steps_cascade_into_subsumption(prog):
    # body simplification makes the first rule subsume the second
    p = prog("a :- b, not not b. a :- b, c.")
    assert normal_form(p) == prog("a :- b.")


def test_signature_preserved_through_normalization(prog):
    p = prog("p :- p. a :- b.")
    assert normal_form(p).signature == {"p", "a", "b"}


@given(program_strategy)
@settings(max_examples=60, deadline=None)
def test_idempotent_and_well_formed(p):
    n = normal_form(p)
    assert is_normal_form(n)
    assert normal_form(n) == n


@given(program_strategy)
@settings(max_examples=60, deadline=None)
def test_meaning_preserved(p):
    assert strongly_equivalent(p, normal_form(p))


def test_meaning_preserved_on_corpus(small_corpus):
    for p in small_corpus:
        n = normal_form(p)
        assert is_normal_form(n)
        assert strongly_equivalent(p, n)
