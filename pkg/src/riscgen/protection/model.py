"""Tree-structured dependency model over binary protection columns.

Fitting builds a maximum spanning tree on pairwise empirical mutual
information (the Chow-Liu criterion) and attaches, to each edge, a
Laplace-smoothed conditional table P(child=1 | parent). The first schema
column (SectionA) is the root and keeps its unsmoothed empirical marginal, so
a column that is constant in the training data stays constant in samples.

Sampling is ancestral: the root is drawn from its marginal, then children are
drawn along tree edges. Each output row consumes its own derived random
stream, so results are independent of batching and worker count.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from riscgen.errors import EmptyTable
from riscgen.protection.schema import ColumnSchema, ProtectionTable
from riscgen.rng import substream


@dataclass(frozen=True)
class TreeEdge:
    parent: str
    child: str
    p1_given_parent1: float
    p1_given_parent0: float


@dataclass(frozen=True)
class DependencyModel:
    schema: ColumnSchema
    root: str
    root_p1: float
    edges: tuple[TreeEdge, ...]  # topological order, parents before children
    rows_fitted: int
    seed: int
    smoothing: float

    def __post_init__(self):
        probs = [self.root_p1]
        for e in self.edges:
            probs.extend((e.p1_given_parent1, e.p1_given_parent0))
        if any(not (0.0 <= p <= 1.0) for p in probs):
            raise ValueError("model probabilities must lie in [0, 1]")
        reached = {self.root}
        for e in self.edges:
            if e.parent not in reached or e.child in reached:
                raise ValueError("edges must form a tree in topological order")
            reached.add(e.child)
        if reached != set(self.schema.names):
            raise ValueError("tree must span every schema column")

    def column_marginals(self) -> dict[str, float]:
        """Marginal P(column=1) induced by the tree parameters."""
        marg = {self.root: self.root_p1}
        for e in self.edges:
            p = marg[e.parent]
            marg[e.child] = p * e.p1_given_parent1 + (1.0 - p) * e.p1_given_parent0
        return marg

    def probability(self, bits) -> float:
        """Joint probability of one full assignment under the tree."""
        values = dict(zip(self.schema.names, bits))
        r = values[self.root]
        p = self.root_p1 if r == 1 else 1.0 - self.root_p1
        for e in self.edges:
            cond = e.p1_given_parent1 if values[e.parent] == 1 else e.p1_given_parent0
            p *= cond if values[e.child] == 1 else 1.0 - cond
        return p


def _pairwise_mutual_information(rows: np.ndarray) -> np.ndarray:
    """Empirical mutual information for every column pair, in nats."""
    n, m = rows.shape
    x = rows.astype(np.float64)
    n11 = x.T @ x
    ones = x.sum(axis=0)
    n10 = ones[:, None] - n11
    n01 = ones[None, :] - n11
    n00 = n - n11 - n10 - n01
    mi = np.zeros((m, m))
    for counts, pa, pb in (
        (n11, ones, ones),
        (n10, ones, n - ones),
        (n01, n - ones, ones),
        (n00, n - ones, n - ones),
    ):
        joint = counts / n
        denom = (pa[:, None] / n) * (pb[None, :] / n)
        with np.errstate(divide="ignore", invalid="ignore"):
            term = joint * np.log(joint / denom)
        mi += np.where(joint > 0, term, 0.0)
    np.fill_diagonal(mi, 0.0)
    return mi


def _maximum_spanning_tree(schema: ColumnSchema, mi: np.ndarray) -> list[tuple[int, int]]:
    """Kruskal on -MI; ties broken by the lexicographic pair of column names."""
    m = len(schema)
    candidates = sorted(
        itertools.combinations(range(m), 2),
        key=lambda ij: (
            -mi[ij[0], ij[1]],
            min(schema.names[ij[0]], schema.names[ij[1]]),
            max(schema.names[ij[0]], schema.names[ij[1]]),
        ),
    )
    parent = list(range(m))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    chosen: list[tuple[int, int]] = []
    for i, j in candidates:
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[ri] = rj
            chosen.append((i, j))
            if len(chosen) == m - 1:
                break
    return chosen


def fit(table: ProtectionTable, rng_seed: int, smoothing: float = 0.5) -> DependencyModel:
    """Fit the dependency tree to a binary table.

    Deterministic given (table, rng_seed, smoothing); the seed is recorded in
    the model metadata and keys nothing during fitting itself. ``smoothing``
    is the Laplace pseudo-count applied to each conditional-table cell; the
    root marginal is left unsmoothed.
    """
    n, m = table.rows.shape
    if n == 0 or m == 0:
        raise EmptyTable("cannot fit on an empty table")
    if n < 2:
        raise EmptyTable("fitting needs at least 2 rows")
    if smoothing < 0:
        raise ValueError("smoothing must be >= 0")
    schema = table.schema
    x = table.rows.astype(np.float64)
    ones = x.sum(axis=0)
    n11 = x.T @ x

    undirected = _maximum_spanning_tree(schema, _pairwise_mutual_information(table.rows))
    adjacency: dict[int, list[int]] = {i: [] for i in range(m)}
    for i, j in undirected:
        adjacency[i].append(j)
        adjacency[j].append(i)

    root = 0  # schema order puts SectionA first
    edges: list[TreeEdge] = []
    seen = {root}
    frontier = [root]
    while frontier:
        node = frontier.pop(0)
        for nxt in sorted(adjacency[node]):
            if nxt in seen:
                continue
            seen.add(nxt)
            frontier.append(nxt)
            n_p1 = ones[node]
            n_c1p1 = n11[nxt, node]
            n_c1p0 = ones[nxt] - n_c1p1
            edges.append(
                TreeEdge(
                    parent=schema.names[node],
                    child=schema.names[nxt],
                    p1_given_parent1=(n_c1p1 + smoothing) / (n_p1 + 2 * smoothing)
                    if n_p1 + 2 * smoothing > 0
                    else 0.5,
                    p1_given_parent0=(n_c1p0 + smoothing) / (n - n_p1 + 2 * smoothing)
                    if n - n_p1 + 2 * smoothing > 0
                    else 0.5,
                )
            )

    return DependencyModel(
        schema=schema,
        root=schema.names[root],
        root_p1=float(ones[root] / n),
        edges=tuple(edges),
        rows_fitted=n,
        seed=rng_seed,
        smoothing=smoothing,
    )


def sample(model: DependencyModel, n: int, rng_seed: int) -> ProtectionTable:
    """Draw n rows by ancestral sampling along the tree.

    Row i consumes the first draws of the stream keyed by (rng_seed, "row",
    i), so sample(model, 5, s) is a prefix of sample(model, 10, s) and any
    partitioning of rows across workers reproduces the sequential output.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    m = len(model.schema)
    u = np.empty((n, m), dtype=np.float64)
    for i in range(n):
        u[i] = substream(rng_seed, "row", i).random(m)

    bits = np.zeros((n, m), dtype=np.uint8)
    root_idx = model.schema.index(model.root)
    bits[:, root_idx] = u[:, 0] < model.root_p1
    for k, edge in enumerate(model.edges):
        p_idx = model.schema.index(edge.parent)
        c_idx = model.schema.index(edge.child)
        cond = np.where(bits[:, p_idx] == 1, edge.p1_given_parent1, edge.p1_given_parent0)
        bits[:, c_idx] = u[:, k + 1] < cond
    return ProtectionTable(model.schema, bits)


def save_model(model: DependencyModel, path: str | Path) -> None:
    doc = {
        "schema": list(model.schema.names),
        "root": model.root,
        "root_p1": model.root_p1,
        "edges": [
            {
                "parent": e.parent,
                "child": e.child,
                "p1_given_parent1": e.p1_given_parent1,
                "p1_given_parent0": e.p1_given_parent0,
            }
            for e in model.edges
        ],
        "fit": {
            "rows": model.rows_fitted,
            "seed": model.seed,
            "smoothing": model.smoothing,
        },
    }
    Path(path).write_text(json.dumps(doc, indent=2) + "\n", encoding="utf-8")


def load_model(path: str | Path) -> DependencyModel:
    doc = json.loads(Path(path).read_text(encoding="utf-8"))
    return DependencyModel(
        schema=ColumnSchema(tuple(doc["schema"])),
        root=doc["root"],
        root_p1=float(doc["root_p1"]),
        edges=tuple(
            TreeEdge(
                parent=e["parent"],
                child=e["child"],
                p1_given_parent1=float(e["p1_given_parent1"]),
                p1_given_parent0=float(e["p1_given_parent0"]),
            )
            for e in doc["edges"]
        ),
        rows_fitted=int(doc["fit"]["rows"]),
        seed=int(doc["fit"]["seed"]),
        smoothing=float(doc["fit"]["smoothing"]),
    )


def enumerate_joint(model: DependencyModel) -> dict[tuple[int, ...], float]:
    """Exhaustive joint distribution; only sensible for small schemas."""
    m = len(model.schema)
    if m > 20:
        raise ValueError("joint enumeration limited to 20 columns")
    out = {}
    for bits in itertools.product((0, 1), repeat=m):
        p = model.probability(bits)
        if p > 0.0:
            out[bits] = p
    total = math.fsum(out.values())
    assert abs(total - 1.0) < 1e-9
    return out
