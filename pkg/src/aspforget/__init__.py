"""Forgetting atoms from extended logic programs under strong persistence.

The package revolves around :func:`forget`, which removes an atom from a
program with disjunctive heads and single or double default negation while
preserving the program's answer sets, modulo the atom, under every context
that any forgetting operator could serve.  Around it sit the supporting
pieces: here-and-there model enumeration, normal forms, a semantic target
oracle with an obstruction criterion, a counter-model construction, rule
and program distances, and a randomized verification harness.
"""

from .asdual import as_dual
from .core import (Literal, NAF, NAFNAF, POS, Program, Rule, check_atom,
                   find_subsumer, is_minimal_in, is_tautological, make_rule,
                   naf, nafnaf, rule, signature, subsumes)
from .distance import program_distance, rule_distance, rule_size
from .forget import (Partition, TraceEntry, forget, forget_fast,
                     forget_iterated, forget_with_trace, is_q_forgettable,
                     partition)
from .harness import (CorpusSpec, GOLDEN_PROGRAMS, SPFailure, SPReport,
                      enumerate_contexts, generate_corpus, verify_sp)
from .ht_semantics import (HTInterpretation, HTModelSet, SignatureLimitError,
                           answer_sets, equivalent, ht_models, reduct,
                           strongly_equivalent, v_exclusion)
from .normalform import is_normal_form, normal_form
from .parser_io import (ParseError, format_program, format_rule,
                        models_to_json, parse_program, parse_rule)
from .semantic import (OmegaCandidate, OmegaReport, f_sem, fsp_target_models,
                       rel_sets, satisfies_omega)

__version__ = "0.1.0"

__all__ = [
    "CorpusSpec", "GOLDEN_PROGRAMS", "HTInterpretation", "HTModelSet",
    "Literal", "NAF", "NAFNAF", "OmegaCandidate", "OmegaReport",
    "ParseError", "Partition", "POS", "Program", "Rule", "SPFailure",
    "SPReport", "SignatureLimitError", "TraceEntry", "answer_sets",
    "as_dual", "check_atom", "enumerate_contexts", "equivalent", "f_sem",
    "find_subsumer", "forget", "forget_fast", "forget_iterated",
    "forget_with_trace", "format_program", "format_rule",
    "fsp_target_models", "generate_corpus", "ht_models", "is_minimal_in",
    "is_normal_form", "is_q_forgettable", "is_tautological", "make_rule",
    "models_to_json", "naf", "nafnaf", "normal_form", "parse_program",
    "parse_rule", "partition", "program_distance", "reduct", "rel_sets",
    "rule", "rule_distance", "rule_size", "satisfies_omega", "signature",
    "strongly_equivalent", "subsumes", "v_exclusion", "verify_sp",
]
