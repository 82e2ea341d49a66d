"""The oriented quantum Bruhat graph of Gr(k,n) and its incidence matrix.

Vertices are the box partitions; there is an edge lam -> mu whenever sigma_mu
appears in the divisor multiplication sigma_(1) * sigma_lam.  Cover edges
carry degree 0, the single wrap-around edge (when it exists) carries degree 1.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np
import scipy.sparse as sp
from scipy.sparse.csgraph import connected_components

from .combinatorics import (DEFAULT_RANK_CAP, GrassmannianParams, Partition,
                            covers, enumerate_partitions, quantum_target)


@dataclass(frozen=True)
class QuantumEdge:
    source: Partition
    target: Partition
    degree: int  # power of q contributed, 0 or 1


@dataclass
class QuantumBruhatGraph:
    params: GrassmannianParams
    vertices: list[Partition]
    edges: list[QuantumEdge]
    vertex_index: dict[Partition, int] = field(repr=False, default_factory=dict)

    @property
    def quantum_edge_count(self) -> int:
        return sum(1 for e in self.edges if e.degree == 1)


def build_graph(params: GrassmannianParams,
                rank_cap: int = DEFAULT_RANK_CAP) -> QuantumBruhatGraph:
    """Apply the divisor multiplication rule at every vertex.

    Edges are emitted in deterministic order: sources in canonical vertex
    order, cover targets by canonical index, then the degree-1 edge.
    """
    vertices = enumerate_partitions(params, rank_cap=rank_cap)
    index = {lam: i for i, lam in enumerate(vertices)}
    edges = []
    for lam in vertices:
        targets = sorted(covers(lam, params), key=index.__getitem__)
        edges.extend(QuantumEdge(lam, mu, 0) for mu in targets)
        star = quantum_target(lam, params)
        if star is not None:
            edges.append(QuantumEdge(lam, star, 1))
    return QuantumBruhatGraph(params, vertices, edges, index)


def incidence_matrix(graph: QuantumBruhatGraph) -> sp.csr_matrix:
    """0/1 matrix with A[target, source] = 1 per edge (canonical indexing).

    Columns are sources so the operator acts on coefficient vectors by left
    multiplication.
    """
    m = len(graph.vertices)
    rows = [graph.vertex_index[e.target] for e in graph.edges]
    cols = [graph.vertex_index[e.source] for e in graph.edges]
    data = np.ones(len(graph.edges), dtype=np.int64)
    return sp.csr_matrix((data, (rows, cols)), shape=(m, m))


def is_strongly_connected(graph: QuantumBruhatGraph) -> bool:
    ncomp, _ = connected_components(incidence_matrix(graph),
                                    directed=True, connection="strong")
    return ncomp == 1


def _fmt(lam: Partition) -> str:
    return "(" + ",".join(str(x) for x in lam) + ")"


def export_graph(graph: QuantumBruhatGraph, format: str) -> str:
    """Serialize to DOT or JSON; byte-deterministic for a fixed instance."""
    if format == "dot":
        lines = ["digraph g {"]
        lines.extend(f'  "{_fmt(lam)}";' for lam in graph.vertices)
        lines.extend(f'  "{_fmt(e.source)}" -> "{_fmt(e.target)}" [q={e.degree}];'
                     for e in graph.edges)
        lines.append("}")
        return "\n".join(lines) + "\n"
    if format == "json":
        obj = {
            "k": graph.params.k,
            "n": graph.params.n,
            "vertex_count": len(graph.vertices),
            "edge_count": len(graph.edges),
            "quantum_edge_count": graph.quantum_edge_count,
            "vertices": [list(lam) for lam in graph.vertices],
            "edges": [{"src": graph.vertex_index[e.source],
                       "dst": graph.vertex_index[e.target],
                       "q": e.degree} for e in graph.edges],
        }
        return json.dumps(obj, separators=(",", ":")) + "\n"
    raise ValueError(f"unknown format {format!r} (expected 'dot' or 'json')")
