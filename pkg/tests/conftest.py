import numpy as np
import pytest

import bgft


def random_digraph(n, seed, density=0.5, floor=0.05):
    """Random weighted digraph with no sinks.

    A small weight floor on every off-diagonal edge keeps the transition
    operator away from near-defective shift-like structure (very sparse rows
    produce eigenbases with cond(V) in the 1e8 range, which no fixed test
    tolerance survives).
    """
    rng = np.random.default_rng(seed)
    a = rng.random((n, n)) * (rng.random((n, n)) < density) + floor
    np.fill_diagonal(a, 0.0)
    return bgft.DirectedGraph(a)


def random_reversible_graph(n, seed):
    """Chain built from a random symmetric weight matrix (detailed balance
    holds with pi_i proportional to the weighted degree)."""
    rng = np.random.default_rng(seed)
    w = rng.random((n, n))
    w = w + w.T
    np.fill_diagonal(w, 0.0)
    return bgft.DirectedGraph(w)


@pytest.fixture(scope="session")
def canonical_bases():
    """Decomposed operators for the three benchmark graphs at n=64."""
    out = {}
    for name, g in [
        ("undirected", bgft.undirected_cycle(64)),
        ("directed", bgft.directed_cycle(64)),
        ("perturbed", bgft.add_directed_chord(bgft.directed_cycle(64), 20, 0, 32)),
    ]:
        op = bgft.transition(g)
        out[name] = (op, bgft.decompose(op))
    return out


@pytest.fixture(scope="session")
def property_suite():
    """20 random digraphs at n in {8, 16, 32}, decomposed once."""
    cases = []
    for i in range(20):
        n = (8, 16, 32)[i % 3]
        op = bgft.transition(random_digraph(n, seed=100 + i))
        cases.append((op, bgft.decompose(op)))
    return cases
