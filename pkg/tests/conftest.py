import pytest
from hypothesis import strategies as st

from aspforget.core import Program, Rule
from aspforget.harness import GOLDEN_PROGRAMS, CorpusSpec, generate_corpus
from aspforget.parser_io import parse_program


@pytest.fixture(scope="session")
def golden():
    return dict(GOLDEN_PROGRAMS)


@pytest.fixture(scope="session")
def small_corpus():
    """Quick shared corpus for module-level randomized checks."""
    return generate_corpus(CorpusSpec(count=150, seed=7))


@pytest.fixture
def prog():
    return parse_program


# ---------------------------------------------------------------------------
# hypothesis strategies over the 4-atom universe used by randomized tests

ATOM_POOL = ("a", "b", "c", "q")

atoms = st.sampled_from(ATOM_POOL)
atom_sets = st.frozensets(atoms, max_size=2)

rules = st.builds(Rule, atom_sets, atom_sets, atom_sets, atom_sets)
programs = st.builds(lambda rs: Program(rs), st.frozensets(rules, max_size=4))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = getattr(config, "_acceptance_lines", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
