import random
from fractions import Fraction

import pytest

from algkit.algebra import StructureConstants, check_associative, transport
from algkit.corpus import load_corpus
from algkit.linalg import RationalMatrix, rank


@pytest.fixture(scope="session")
def corpus():
    return load_corpus()


@pytest.fixture(scope="session")
def corpus_algebras(corpus):
    return {e.name: e.algebra() for e in corpus}


@pytest.fixture
def rng():
    return random.Random(20141014)


def random_rational(rng, spread=4):
    return Fraction(rng.randint(-spread, spread), rng.randint(1, spread))


def random_matrix(rng, rows, cols, spread=4, density=1.0):
    return RationalMatrix(rows, cols, [random_rational(rng, spread) if rng.random() < density else 0
                                       for _ in range(rows * cols)])


def random_invertible(rng, n, spread=3):
    while True:
        P = random_matrix(rng, n, n, spread)
        if rank(P) == n:
            return P


def random_associative_algebras(count, seed=7, max_dim=3):
    """Distinct nonzero associative algebras of dimension <= max_dim.

    Random sparse structure tensors with small integer entries, kept only if
    they pass check_associative.  Half of the survivors are moved to a random
    rational basis so the suite also sees dense structure constants.
    """
    rng = random.Random(seed)
    found, seen = [], set()
    while len(found) < count:
        n = rng.choice([d for d in range(1, max_dim + 1) for _ in range(d)])
        table = [Fraction(0)] * n ** 3
        for _ in range(rng.randint(1, min(8, n ** 3))):
            table[rng.randrange(n ** 3)] = Fraction(rng.choice([-2, -1, 1, 1, 1, 2]))
        key = (n, tuple(table))
        if key in seen or sum(1 for x in table if x) < min(2, n):
            continue
        seen.add(key)
        sc = StructureConstants(n, tuple(table), name=f"rand{len(found)}")
        if check_associative(sc):
            if rng.random() < 0.5:
                sc = transport(sc, random_invertible(rng, n, spread=2))
            found.append(sc)
    return found


@pytest.fixture(scope="session")
def random_algebras():
    return random_associative_algebras(20)


# -- acceptance summary ---------------------------------------------------------

_ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def acceptance_log():
    """Record one PASS/FAIL line; lines are echoed in the terminal summary."""
    def record(label, ok, detail=""):
        line = f"{label}: {'PASS' if ok else 'FAIL'}" + (f"  {detail}" if detail else "")
        _ACCEPTANCE_LINES.append(line)
        print(line)
        return ok
    return record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
