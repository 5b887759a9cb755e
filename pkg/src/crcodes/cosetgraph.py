"""Coset multigraph of a linear code and distance-regularity checking.

The vertex set is the syndrome space; a coordinate change by gamma at
position i moves coset s to s + gamma*h_i, so each vertex carries exactly
n(q-1) labeled transitions.  The simple-graph view (multiplicities and
loops collapsed) is what the distance-regularity definition speaks about;
the multigraph view is what matches the code's equitable-partition
counts.  Both are kept.

This module deliberately reimplements its neighbor bookkeeping instead of
reusing spectra's: the two serve as independent witnesses and the test
suite asserts they agree.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from . import codecore as cc
from . import limits as limits_mod
from .errors import DomainError
from .spectra import IntersectionArray

_FULL_PAIRS_CAP = 1 << 13
_SAMPLED_ROOTS = 64
_UNREACHED = 0x7F


@dataclass
class CosetGraph:
    n: int
    q: int
    num_vertices: int
    targets: np.ndarray  # (V, n(q-1)) int64: labeled transition targets
    base_vertex: int = 0

    @property
    def degree(self) -> int:
        return self.targets.shape[1]

    def multiplicity(self, s: int, t: int) -> int:
        return int((self.targets[s] == t).sum())

    def simple_neighbors(self, s: int) -> list[int]:
        out = sorted(set(int(v) for v in self.targets[s]) - {s})
        return out

    def simple_adjacency(self) -> list[list[int]]:
        return [self.simple_neighbors(s) for s in range(self.num_vertices)]

    def is_connected(self) -> bool:
        return not np.any(_bfs_from(self, self.base_vertex) == _UNREACHED)


def build_coset_graph(code: cc.Code,
                      limits: limits_mod.Limits = limits_mod.DEFAULT) -> CosetGraph:
    if not code.is_linear:
        raise DomainError("coset graphs are defined for linear codes")
    f = code.field
    m = code.n - code.k
    V = f.q**m
    limits.check_syndromes(V)
    if V * code.n * (f.q - 1) > (1 << 28):
        from .errors import ResourceError
        raise ResourceError("coset_graph_size",
                            f"{V} vertices x degree {code.n * (f.q - 1)}")
    cols = [tuple(code.H[row][i] for row in range(m)) for i in range(code.n)]
    radix = np.array([f.q**j for j in range(m)], dtype=np.int64)
    idx = np.arange(V, dtype=np.int64)
    digits = np.empty((V, m), dtype=np.int64)
    rem = idx.copy()
    for j in range(m):
        digits[:, j] = rem % f.q
        rem //= f.q
    add = f.add_table
    mul = f.mul_table
    targets = np.empty((V, code.n * (f.q - 1)), dtype=np.int64)
    t = 0
    for col in cols:
        for g in range(1, f.q):
            move = [int(mul[g, v]) for v in col]
            moved = np.zeros(V, dtype=np.int64)
            for j in range(m):
                moved += add[digits[:, j], move[j]].astype(np.int64) * radix[j]
            targets[:, t] = moved
            t += 1
    return CosetGraph(n=code.n, q=f.q, num_vertices=V, targets=targets)


def _simple_neighbor_matrix(graph: CosetGraph) -> tuple[np.ndarray, np.ndarray]:
    """Padded simple-neighbor lists: (nbrs int32 (V, maxdeg), valid bool)."""
    V = graph.num_vertices
    lists = graph.simple_adjacency()
    maxdeg = max(len(l) for l in lists)
    nbrs = np.zeros((V, maxdeg), dtype=np.int32)
    valid = np.zeros((V, maxdeg), dtype=bool)
    for s, l in enumerate(lists):
        nbrs[s, : len(l)] = l
        valid[s, : len(l)] = True
    return nbrs, valid


def _bfs_from(graph: CosetGraph, root: int) -> np.ndarray:
    dist = np.full(graph.num_vertices, _UNREACHED, dtype=np.uint8)
    dist[root] = 0
    frontier = [root]
    level = 0
    targets = graph.targets
    while frontier:
        level += 1
        nxt = np.unique(targets[frontier].ravel())
        fresh = nxt[dist[nxt] == _UNREACHED]
        dist[fresh] = level
        frontier = fresh.tolist()
    return dist


def _all_pairs_distances(graph: CosetGraph, roots: np.ndarray) -> np.ndarray:
    """uint8 distance matrix D[root, v] via simultaneous layered BFS."""
    V = graph.num_vertices
    R = len(roots)
    nbrs, valid = _simple_neighbor_matrix(graph)
    D = np.full((R, V), _UNREACHED, dtype=np.uint8)
    D[np.arange(R), roots] = 0
    level = 0
    while True:
        frontier = D == level
        if not frontier.any():
            break
        # a vertex is reached at level+1 if any simple neighbor is in the frontier
        reached = np.zeros((R, V), dtype=bool)
        chunk = max(1, (1 << 24) // max(nbrs.shape[1] * V, 1))
        for start in range(0, R, chunk):
            block = frontier[start:start + chunk][:, nbrs]  # (chunk, V, maxdeg)
            block &= valid[None, :, :]
            reached[start:start + chunk] = block.any(axis=2)
        newly = reached & (D == _UNREACHED)
        level += 1
        D[newly] = level
    return D


@dataclass
class DistanceRegularityReport:
    is_drg: bool
    ia: IntersectionArray | None
    diameter: int
    connected: bool
    mode: str  # "full" | "sampled"
    witness: tuple[int, int] | None = None


def is_distance_regular(graph: CosetGraph,
                        limits: limits_mod.Limits = limits_mod.DEFAULT) -> DistanceRegularityReport:
    """Check the distance-regularity condition over vertex pairs in the
    simple-graph view.

    All pairs are checked up to 2^13 vertices; beyond that a 64-root sample
    is used and labeled as such in the report.
    """
    V = graph.num_vertices
    if V == 0:
        raise DomainError("empty graph")
    mode = "full" if V <= _FULL_PAIRS_CAP else "sampled"
    if mode == "full":
        roots = np.arange(V, dtype=np.int64)
    else:
        step = max(V // _SAMPLED_ROOTS, 1)
        roots = np.arange(0, V, step, dtype=np.int64)[:_SAMPLED_ROOTS]
    D = _all_pairs_distances(graph, roots)
    if np.any(D[:, :] == _UNREACHED):
        return DistanceRegularityReport(False, None, -1, False, mode)
    diameter = int(D.max())
    nbrs, valid = _simple_neighbor_matrix(graph)

    # degree-regularity in the simple view
    degs = valid.sum(axis=1)
    if len(np.unique(degs)) != 1:
        return DistanceRegularityReport(False, None, diameter, True, mode)

    cs = [None] * (diameter + 1)
    bs = [None] * (diameter + 1)
    chunk = max(1, (1 << 23) // max(V * nbrs.shape[1], 1))
    for start in range(0, len(roots), chunk):
        stop = min(len(roots), start + chunk)
        Dblk = D[start:stop]  # (chunk, V)
        nd = Dblk[:, nbrs]  # (chunk, V, maxdeg): distances root -> neighbors of each delta
        nd = np.where(valid[None, :, :], nd, np.int16(_UNREACHED))
        own = Dblk[:, :, None].astype(np.int16)
        down = (nd == own - 1).sum(axis=2)
        upc = (nd == own + 1).sum(axis=2)
        for level in range(diameter + 1):
            mask = Dblk == level
            if not mask.any():
                continue
            c_vals = np.unique(down[mask])
            b_vals = np.unique(upc[mask])
            if len(c_vals) != 1 or len(b_vals) != 1:
                g_idx, d_idx = np.argwhere(mask)[0]
                return DistanceRegularityReport(
                    False, None, diameter, True, mode,
                    witness=(int(roots[start + g_idx]), int(d_idx)))
            cl, bl = int(c_vals[0]), int(b_vals[0])
            if cs[level] is None:
                cs[level], bs[level] = cl, bl
            elif (cs[level], bs[level]) != (cl, bl):
                return DistanceRegularityReport(False, None, diameter, True, mode)
    k = int(degs[0])
    ia = IntersectionArray(n=k, q=2, bs=tuple(bs[:diameter]), cs=tuple(cs[1:diameter + 1]))
    return DistanceRegularityReport(True, ia, diameter, True, mode)


def graph_intersection_array(graph: CosetGraph, report: DistanceRegularityReport,
                             code_n: int, code_q: int) -> IntersectionArray | None:
    """Re-key the graph IA onto the code's (n, q) so it compares directly
    with the code-side intersection array."""
    if not report.is_drg or report.ia is None:
        return None
    return IntersectionArray(n=code_n, q=code_q, bs=report.ia.bs, cs=report.ia.cs)


def base_cell_counts(graph: CosetGraph) -> list[tuple[int, int, int]]:
    """Multigraph (c, a, b) transition counts per distance-from-base cell.

    This is the graph-side mirror of the code's equitable-partition counts
    and must agree with spectra's syndrome-mode numbers on CR codes.
    """
    dist = _bfs_from(graph, graph.base_vertex).astype(np.int16)
    nd = dist[graph.targets]  # (V, deg) multigraph semantics
    own = dist[:, None]
    down = (nd == own - 1).sum(axis=1)
    same = (nd == own).sum(axis=1)
    upc = (nd == own + 1).sum(axis=1)
    out = []
    for level in range(int(dist.max()) + 1):
        mask = dist == level
        c_vals, a_vals, b_vals = np.unique(down[mask]), np.unique(same[mask]), np.unique(upc[mask])
        if len(c_vals) != 1 or len(a_vals) != 1 or len(b_vals) != 1:
            raise DomainError("base-cell transition counts are not constant per cell")
        out.append((int(c_vals[0]), int(a_vals[0]), int(b_vals[0])))
    return out


# ---------------------------------------------------------------------------
# export
# ---------------------------------------------------------------------------


def export(graph: CosetGraph, fmt: str = "dot") -> bytes:
    """Deterministic DOT or JSON rendering, vertices in syndrome order.

    DOT lists each undirected simple edge once with its multiplicity label;
    JSON carries adjacency with multiplicities.
    """
    if graph.num_vertices == 0:
        raise DomainError("refusing to export an empty graph")
    if fmt == "dot":
        lines = ["graph coset {"]
        for s in range(graph.num_vertices):
            lines.append(f"  v{s};")
        for s in range(graph.num_vertices):
            uniq, counts = np.unique(graph.targets[s], return_counts=True)
            for t, mult in zip(uniq, counts):
                t = int(t)
                if t <= s:
                    continue
                lines.append(f'  v{s} -- v{t} [label="{int(mult)}"];')
        lines.append("}")
        return ("\n".join(lines) + "\n").encode()
    if fmt == "json":
        adj = []
        for s in range(graph.num_vertices):
            uniq, counts = np.unique(graph.targets[s], return_counts=True)
            adj.append({str(int(t)): int(c) for t, c in zip(uniq, counts)})
        doc = {
            "n": graph.n, "q": graph.q, "vertices": graph.num_vertices,
            "base_vertex": graph.base_vertex, "adjacency": adj,
        }
        return (json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n").encode()
    raise DomainError(f"unknown export format {fmt!r}")
