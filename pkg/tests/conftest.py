import random
import sys

import pytest
from hypothesis import settings, strategies as st

from pborel.corpus import BUILTINS, rp2, rp2_pardue_j
from pborel.ideals import minimalize
from pborel.stretch import pardue_construct

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


def small_ideals(max_n=4, max_exp=2, max_gens=4):
    """Hypothesis strategy: nonzero monomial ideals in at most ``max_n`` variables."""

    @st.composite
    def build(draw):
        n = draw(st.integers(1, max_n))
        gens = draw(
            st.lists(
                st.lists(st.integers(0, max_exp), min_size=n, max_size=n),
                min_size=1,
                max_size=max_gens,
            )
        )
        return minimalize(n, gens)

    return build()


def random_corpus(count=40, seed=2024, max_n=4, max_exp=2):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(2, max_n)
        gens = [[rng.randint(0, max_exp) for _ in range(n)] for _ in range(rng.randint(1, 4))]
        gens = [g for g in gens if any(g)]
        if gens:
            out.append(minimalize(n, gens))
    return out


@pytest.fixture(scope="session")
def I_rp2():
    return rp2()


@pytest.fixture(scope="session")
def J_paper():
    return rp2_pardue_j()


@pytest.fixture(scope="session")
def rp2_run():
    return pardue_construct(rp2(), 2)


@pytest.fixture(scope="session")
def corpus_ideals():
    named = [f() for name, f in sorted(BUILTINS.items()) if name != "rp2-j"]
    return named + random_corpus()


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
