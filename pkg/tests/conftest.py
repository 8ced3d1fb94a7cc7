import random

import pytest

from cevo.lexicon_io import seed_lexicon
from cevo.ontology import ROOT, EventClass, Lexicon, VerbEntry, root_class


@pytest.fixture(scope="session")
def seed():
    return seed_lexicon()


def random_lexicon(rng: random.Random, n_classes: int, n_verbs: int, max_parents: int = 3) -> Lexicon:
    """A valid random DAG lexicon; class i may only have parents among 0..i-1."""
    ids = [ROOT] + [f"C{i:03d}" for i in range(1, n_classes)]
    classes = [root_class()]
    for i in range(1, n_classes):
        k = rng.randint(1, min(max_parents, i))
        parents = rng.sample(ids[:i], k)
        classes.append(EventClass(ids[i], parents=frozenset(parents)))
    verbs = []
    for j in range(n_verbs):
        k = rng.randint(1, min(3, n_classes))
        verbs.append(VerbEntry(f"v{j:04d}", frozenset(rng.sample(ids, k))))
    return Lexicon(tuple(classes), tuple(verbs))


ACCEPTANCE_RESULTS: dict[str, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(ACCEPTANCE_RESULTS, key=lambda n: int(n.split()[0])):
        ok, detail = ACCEPTANCE_RESULTS[name]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}")
