"""Directed weighted graphs: canonical generators and file I/O.

Adjacency is stored dense (experiments stay at a few hundred nodes, and dense
storage keeps the linear algebra uniform).  A_{ij} is the weight of edge
i -> j; weights are nonnegative reals.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import EdgeListParseError, InvalidNodeError, InvalidSizeError


@dataclass(frozen=True)
class DirectedGraph:
    """Weighted digraph with dense nonnegative adjacency."""

    adjacency: np.ndarray

    def __post_init__(self):
        a = np.asarray(self.adjacency, dtype=float)
        if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] < 1:
            raise ValueError(f"adjacency must be square and nonempty, got {a.shape}")
        if not np.all(np.isfinite(a)):
            raise ValueError("adjacency entries must be finite")
        if np.any(a < 0):
            raise ValueError("adjacency entries must be nonnegative")
        object.__setattr__(self, "adjacency", a)

    @property
    def n(self) -> int:
        return self.adjacency.shape[0]


def undirected_cycle(n: int) -> DirectedGraph:
    """Cycle with unit reciprocal edges i <-> i+1 (mod n)."""
    if n < 3:
        raise InvalidSizeError(f"cycle needs n >= 3, got {n}")
    a = np.zeros((n, n))
    for i in range(n):
        a[i, (i + 1) % n] = 1.0
        a[(i + 1) % n, i] = 1.0
    return DirectedGraph(a)


def directed_cycle(n: int) -> DirectedGraph:
    """Cycle with unit one-way edges i -> i+1 (mod n)."""
    if n < 3:
        raise InvalidSizeError(f"cycle needs n >= 3, got {n}")
    a = np.zeros((n, n))
    for i in range(n):
        a[i, (i + 1) % n] = 1.0
    return DirectedGraph(a)


def add_directed_chord(g: DirectedGraph, eps: float, i: int, j: int) -> DirectedGraph:
    """Return a copy of g with weight eps added onto edge i -> j."""
    n = g.n
    if not (0 <= i < n) or not (0 <= j < n):
        raise InvalidNodeError(f"chord endpoints ({i}, {j}) out of range for n={n}")
    if i == j:
        raise InvalidNodeError("chord endpoints must differ")
    if eps < 0:
        raise ValueError("chord weight must be nonnegative")
    a = g.adjacency.copy()
    a[i, j] += eps
    return DirectedGraph(a)


def out_degrees(g: DirectedGraph) -> np.ndarray:
    """Row sums d_i = sum_j A_{ij}.  Zero entries are allowed here; building
    a transition operator from them is what fails (SinkNodeError there)."""
    return g.adjacency.sum(axis=1)


def save_edge_list(g: DirectedGraph, path) -> None:
    """Write one `src dst weight` triple per line, 0-indexed.

    Weights are written with repr() so the save -> load round trip is
    bit-exact for any float weight.
    """
    with open(path, "w") as fh:
        fh.write(f"# nodes {g.n}\n")
        rows, cols = np.nonzero(g.adjacency)
        for i, j in zip(rows, cols):
            fh.write(f"{i} {j} {float(g.adjacency[i, j])!r}\n")


def load_edge_list(path) -> DirectedGraph:
    """Read the edge-list format written by save_edge_list.

    Lines are `src dst weight` (weight optional, default 1.0); `#` starts a
    comment.  A `# nodes N` header pins the node count; otherwise it is
    1 + max node index seen.
    """
    edges = []
    n = 0
    with open(path) as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if line.startswith("#"):
                parts = line[1:].split()
                if len(parts) == 2 and parts[0] == "nodes":
                    try:
                        n = max(n, int(parts[1]))
                    except ValueError:
                        raise EdgeListParseError(path, lineno, "bad node count")
                continue
            if not line:
                continue
            parts = line.split()
            if len(parts) not in (2, 3):
                raise EdgeListParseError(
                    path, lineno, f"expected 'src dst [weight]', got {line!r}"
                )
            try:
                i, j = int(parts[0]), int(parts[1])
                w = float(parts[2]) if len(parts) == 3 else 1.0
            except ValueError:
                raise EdgeListParseError(path, lineno, f"could not parse {line!r}")
            if i < 0 or j < 0:
                raise EdgeListParseError(path, lineno, "negative node index")
            if w < 0 or not np.isfinite(w):
                raise EdgeListParseError(path, lineno, f"bad weight {w!r}")
            edges.append((i, j, w))
            n = max(n, i + 1, j + 1)
    if n == 0:
        raise EdgeListParseError(path, 0, "empty graph file")
    a = np.zeros((n, n))
    for i, j, w in edges:
        a[i, j] += w
    return DirectedGraph(a)


def load_matrix_market(path) -> DirectedGraph:
    """Read a Matrix Market coordinate file (general, real) as a digraph."""
    import scipy.io

    try:
        m = scipy.io.mmread(path)
    except Exception as exc:
        raise EdgeListParseError(path, 0, f"not a readable Matrix Market file: {exc}")
    a = np.asarray(m.todense() if hasattr(m, "todense") else m, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise EdgeListParseError(path, 0, f"adjacency must be square, got {a.shape}")
    return DirectedGraph(a)


def load_graph(path) -> DirectedGraph:
    """Dispatch on extension: .mtx is Matrix Market, anything else edge list."""
    if str(path).endswith(".mtx"):
        return load_matrix_market(path)
    return load_edge_list(path)
