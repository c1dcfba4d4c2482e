"""Shared reference data: a hand-checked worked example used as an oracle.

The two genomes below are co-tailed, their adjacency graph is a single
cycle of length 10, and REFERENCE_STEPS is one particular valid scenario on
the labeled cycle (1..9) whose partner/top tables and tree were worked out
by hand and cross-checked step by step.  Most modules assert against these
frozen values.
"""

import pytest

from dcjsort import Fission, FissionScenario, parse_genome

GENOME_A_TEXT = "(a -f -b e -d)\n(-c g)"
GENOME_B_TEXT = "(a b c)\n(d e f g)"

REFERENCE_STEPS = (
    (4, 5),
    (8, 9),
    (1, 8),
    (2, 6),
    (2, 7),
    (3, 6),
    (2, 8),
    (4, 6),
)
REFERENCE_PARKING = (4, 8, 1, 2, 2, 3, 2, 4)
REFERENCE_PARTNERS = (5, 9, 2, 3, 7, 4, 8, 6)
REFERENCE_TOPS = (5, 9, 8, 6, 7, 6, 8, 6)
REFERENCE_TREE_EDGES = (
    (0, 3),
    (1, 6),
    (2, 7),
    (3, 4),
    (3, 5),
    (3, 7),
    (4, 6),
    (6, 8),
)

# partition after each step, starting from the single cycle
REFERENCE_TRACE = (
    ((1, 2, 3, 4, 5, 6, 7, 8, 9),),
    ((1, 2, 3, 4, 6, 7, 8, 9), (5,)),
    ((1, 2, 3, 4, 6, 7, 8), (5,), (9,)),
    ((1,), (2, 3, 4, 6, 7, 8), (5,), (9,)),
    ((1,), (2, 7, 8), (3, 4, 6), (5,), (9,)),
    ((1,), (2, 8), (3, 4, 6), (5,), (7,), (9,)),
    ((1,), (2, 8), (3,), (4, 6), (5,), (7,), (9,)),
    ((1,), (2,), (3,), (4, 6), (5,), (7,), (8,), (9,)),
    ((1,), (2,), (3,), (4,), (5,), (6,), (7,), (8,), (9,)),
)


@pytest.fixture
def genome_a():
    return parse_genome(GENOME_A_TEXT)


@pytest.fixture
def genome_b():
    return parse_genome(GENOME_B_TEXT)


@pytest.fixture
def reference_scenario():
    return FissionScenario(9, tuple(Fission(*step) for step in REFERENCE_STEPS))


@pytest.fixture
def profile_21_pair():
    """All-circular pair whose adjacency graph has cycles needing 2 and 1 steps."""
    return parse_genome("[a c b]\n[d -e]"), parse_genome("[a b c]\n[d e]")
