"""GF(2) homology of the colored lattice.

Edge sets are packed ints (bit e = edge e). The boundary space is
spanned by face-boundary rows; cocycles are edge functionals vanishing
on all face boundaries, taken modulo vertex coboundaries; a cycle's
homology class is its 2g-bit pairing signature against the cocycles.
The code distance is twice the minimum, over colors c, of the lightest
noncontractible cycle when color-c edges cost 1 and others cost 0: a
loop-supported logical reaches weight 2 x (#c-edges on the loop) at its
minimal round.
"""

from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from . import gf2
from .lattice import ColoredLattice, COLOR_PAULIS, LatticeError, check_operator
from .pauli import PauliOperator, multiply, product


def boundary_space(lat: ColoredLattice) -> List[int]:
    """Faces x edges incidence matrix over GF(2), one row per face."""
    rows = []
    for f in lat.faces:
        row = 0
        for e in f.boundary_edges:
            row |= 1 << e
        rows.append(row)
    return rows


def vertex_stars(lat: ColoredLattice) -> List[int]:
    """Coboundary generators: star(v) = the three edges at v."""
    stars = []
    for v in range(lat.n):
        s = 0
        for c in range(3):
            s |= 1 << lat.vertex_edge[v][c]
        stars.append(s)
    return stars


@dataclass(frozen=True)
class HomologyBasis:
    """Cycle/boundary/cocycle structure of a lattice."""

    cycle_space_rank: int          # E - V + 1
    boundary_rank: int             # rank of the face-boundary rows
    h1_dim: int                    # 2g
    cocycles: Tuple[int, ...]      # 2g edge-indexed bit-vectors
    cycle_reps: Tuple[int, ...]    # 2g cycles with independent signatures


def cocycle_basis(lat: ColoredLattice) -> HomologyBasis:
    """Solve for the cocycle space and pick homology-class cycle reps.

    Deterministic under the fixed edge ordering. Raises LatticeError if
    the ranks are inconsistent with k = 2g (invalid lattice).
    """
    E = lat.n_edges
    rows = boundary_space(lat)
    b_rank = gf2.rank(rows, E)
    cycle_rank = E - lat.n + 1
    h1 = cycle_rank - b_rank
    expected = lat.n // 8 + 2 if lat.girth == 8 else 2
    if h1 != expected or h1 != 2 * lat.genus:
        raise LatticeError(
            f"homology rank {h1} inconsistent with 2g={2 * lat.genus} "
            f"(expected {expected})")

    elim = gf2.Eliminator(E)
    star_rank = 0
    for s in vertex_stars(lat):
        if elim.add(s):
            star_rank += 1
    if star_rank != lat.n - 1:
        raise LatticeError(f"coboundary rank {star_rank} != V-1")
    cocycles = []
    for vec in gf2.nullspace(rows, E):
        if elim.add(vec):
            cocycles.append(vec)
    if len(cocycles) != h1:
        raise LatticeError(
            f"found {len(cocycles)} independent cocycles, expected {h1}")

    reps = _independent_cycle_reps(lat, cocycles)
    return HomologyBasis(cycle_rank, b_rank, h1, tuple(cocycles), tuple(reps))


def _fundamental_cycles(lat: ColoredLattice):
    """Spanning-tree fundamental cycles, one per co-tree edge."""
    parent_edge = [-1] * lat.n
    parent = [-1] * lat.n
    order = []
    seen = [False] * lat.n
    seen[0] = True
    queue = deque([0])
    tree_edges = set()
    while queue:
        v = queue.popleft()
        order.append(v)
        for c in range(3):
            e = lat.vertex_edge[v][c]
            w = lat.other_endpoint(e, v)
            if not seen[w]:
                seen[w] = True
                parent[w] = v
                parent_edge[w] = e
                tree_edges.add(e)
                queue.append(w)

    def path_to_root(v: int) -> int:
        bits = 0
        while parent[v] != -1:
            bits ^= 1 << parent_edge[v]
            v = parent[v]
        return bits

    for e, (u, v, _) in enumerate(lat.edges):
        if e in tree_edges:
            continue
        yield (1 << e) ^ path_to_root(u) ^ path_to_root(v)


def _independent_cycle_reps(lat: ColoredLattice, cocycles: Sequence[int]) -> List[int]:
    h1 = len(cocycles)
    elim = gf2.Eliminator(h1)
    reps: List[int] = []
    for cyc in _fundamental_cycles(lat):
        sig = _signature(cyc, cocycles)
        if sig and elim.add(sig):
            reps.append(cyc)
            if len(reps) == h1:
                break
    if len(reps) != h1:
        raise LatticeError("cocycle/cycle pairing matrix is rank deficient")
    return reps


def _signature(cycle: int, cocycles: Sequence[int]) -> int:
    sig = 0
    for j, cc in enumerate(cocycles):
        if (cycle & cc).bit_count() & 1:
            sig |= 1 << j
    return sig


def is_cycle(lat: ColoredLattice, edge_set: int) -> bool:
    """Every vertex has even incidence with the edge set."""
    deg = [0] * lat.n
    bits = edge_set
    while bits:
        e = (bits & -bits).bit_length() - 1
        bits &= bits - 1
        u, v, _ = lat.edges[e]
        deg[u] ^= 1
        deg[v] ^= 1
    return not any(deg)


def homology_class(lat: ColoredLattice, cycle: int, basis: HomologyBasis) -> int:
    """2g-bit signature of a cycle; all-zero iff contractible."""
    if not is_cycle(lat, cycle):
        raise ValueError("edge set is not a cycle (odd vertex incidence)")
    return _signature(cycle, basis.cocycles)


# -- shortest noncontractible cycle ------------------------------------------------


def shortest_noncontractible_cycle(
    lat: ColoredLattice,
    basis: HomologyBasis,
    edge_weights: Sequence[int],
) -> Tuple[int, int]:
    """Minimum-weight cycle with a nonzero homology signature.

    For each cocycle j, searches the double cover in which traversing a
    cocycle-j edge flips sheets; the shortest path from a vertex to its
    opposite-sheet copy is the lightest odd-j cycle through it. Returns
    (edge-set, weight); deterministic under the fixed scan order.
    """
    if any(w < 0 for w in edge_weights):
        raise ValueError("edge weights must be nonnegative")
    zero_one = all(w in (0, 1) for w in edge_weights)
    best_weight: Optional[int] = None
    best_cycle = 0
    for cc in basis.cocycles:
        starts = _support_vertices(lat, cc)
        for s in starts:
            res = _double_cover_shortest(lat, cc, edge_weights, s, zero_one,
                                         best_weight)
            if res is None:
                continue
            weight, cycle = res
            if best_weight is None or weight < best_weight:
                best_weight, best_cycle = weight, cycle
    assert best_weight is not None  # closed surface: noncontractible cycles exist
    return best_cycle, best_weight


def _support_vertices(lat: ColoredLattice, cocycle: int) -> List[int]:
    """Any odd cycle contains a cocycle edge, so starts can be restricted
    to the support's endpoints."""
    verts = []
    seen = set()
    bits = cocycle
    while bits:
        e = (bits & -bits).bit_length() - 1
        bits &= bits - 1
        u, v, _ = lat.edges[e]
        for t in (u, v):
            if t not in seen:
                seen.add(t)
                verts.append(t)
    return verts


def _double_cover_shortest(lat, cocycle, weights, start, zero_one, cutoff):
    """Shortest path (start, sheet 0) -> (start, sheet 1).

    Returns (weight, projected edge set) or None if not under cutoff.
    Nodes are v + n*sheet. 0-1 BFS for 0/1 weights, Dijkstra otherwise.
    """
    n = lat.n
    INF = float("inf")
    dist = [INF] * (2 * n)
    pred_edge = [-1] * (2 * n)
    pred_node = [-1] * (2 * n)
    src, dst = start, start + n
    dist[src] = 0
    if zero_one:
        dq = deque([src])
        while dq:
            node = dq.popleft()
            d = dist[node]
            if cutoff is not None and d >= cutoff:
                continue
            if node == dst:
                break
            v, sheet = node % n, node // n
            for c in range(3):
                e = lat.vertex_edge[v][c]
                w = weights[e]
                flip = (cocycle >> e) & 1
                nxt = lat.other_endpoint(e, v) + n * (sheet ^ flip)
                nd = d + w
                if nd < dist[nxt]:
                    dist[nxt] = nd
                    pred_edge[nxt] = e
                    pred_node[nxt] = node
                    if w == 0:
                        dq.appendleft(nxt)
                    else:
                        dq.append(nxt)
    else:
        heap = [(0, src)]
        while heap:
            d, node = heapq.heappop(heap)
            if d > dist[node]:
                continue
            if cutoff is not None and d >= cutoff:
                break
            if node == dst:
                break
            v, sheet = node % n, node // n
            for c in range(3):
                e = lat.vertex_edge[v][c]
                flip = (cocycle >> e) & 1
                nxt = lat.other_endpoint(e, v) + n * (sheet ^ flip)
                nd = d + weights[e]
                if nd < dist[nxt]:
                    dist[nxt] = nd
                    pred_edge[nxt] = e
                    pred_node[nxt] = node
                    heapq.heappush(heap, (nd, nxt))
    if dist[dst] == INF or (cutoff is not None and dist[dst] >= cutoff):
        return None
    cycle = 0
    node = dst
    while node != src:
        cycle ^= 1 << pred_edge[node]
        node = pred_node[node]
    return int(dist[dst]), cycle


# -- code distance -----------------------------------------------------------------


def color_weight_minimum(lat: ColoredLattice, basis: HomologyBasis, color: int,
                         method: str = "contracted") -> int:
    """Minimum number of color-c edges over noncontractible cycles."""
    if method == "double_cover":
        weights = [1 if lat.edge_color(e) == color else 0 for e in range(lat.n_edges)]
        _, w = shortest_noncontractible_cycle(lat, basis, weights)
        return w
    if method != "contracted":
        raise ValueError(f"unknown method {method!r}")
    from . import _kernels
    best = None
    graph = _ContractedGraph(lat, color)
    for cc in basis.cocycles:
        upper = best if best is not None else (lat.n_edges + 1)
        w = graph.min_odd_cycle(cc, upper)
        if w is not None and (best is None or w < best):
            best = w
    assert best is not None
    return best


class _ContractedGraph:
    """Color-c faces as nodes, color-c edges as unit-weight links.

    Paths inside a face (the face is a cycle of the other two colors)
    contribute a cocycle parity that is path-independent because
    cocycles vanish on face boundaries, so each link carries a single
    parity bit and the lightest odd cycle here equals the lightest
    noncontractible cycle under (1 on color-c, 0 elsewhere) weights.
    """

    def __init__(self, lat: ColoredLattice, color: int):
        import numpy as np
        self.lat = lat
        self.color = color
        faces = lat.faces_of_color(color)
        self.face_ids = [f.id for f in faces]
        self.local = {f.id: i for i, f in enumerate(faces)}
        self.n_nodes = len(faces)
        self.links = []  # (node_u, node_v, edge_id, u, v)
        for e, (u, v, c) in enumerate(lat.edges):
            if c != color:
                continue
            fu = self.local[lat.face_at[u][color]]
            fv = self.local[lat.face_at[v][color]]
            self.links.append((fu, fv, e, u, v))
        self._np = np

    def _face_potentials(self, cocycle: int):
        """phi[v] = parity of a within-face path from the face's first
        vertex to v, per color-c face."""
        phi = {}
        for fid in self.face_ids:
            f = self.lat.faces[fid]
            par = 0
            for i, v in enumerate(f.vertices):
                phi[(fid, v)] = par
                par ^= (cocycle >> f.boundary_edges[i]) & 1
        return phi

    def min_odd_cycle(self, cocycle: int, upper_bound: int) -> Optional[int]:
        np = self._np
        phi = self._face_potentials(cocycle)
        m = len(self.links)
        eu = np.empty(m, dtype=np.int32)
        ev = np.empty(m, dtype=np.int32)
        par = np.empty(m, dtype=np.int8)
        for i, (fu, fv, e, u, v) in enumerate(self.links):
            eu[i] = fu
            ev[i] = fv
            p = (cocycle >> e) & 1
            p ^= phi[(self.lat.face_at[u][self.color], u)]
            p ^= phi[(self.lat.face_at[v][self.color], v)]
            par[i] = p
        from ._kernels import min_odd_cycle_bfs
        w = min_odd_cycle_bfs(self.n_nodes, eu, ev, par, upper_bound)
        return int(w) if w < upper_bound else None


def code_distance(lat: ColoredLattice, basis: HomologyBasis,
                  method: str = "contracted") -> int:
    """d = 2 x min over colors of the color-weighted noncontractible
    minimum; always even."""
    return 2 * min(color_weight_minimum(lat, basis, c, method) for c in range(3))


# -- logical representatives ---------------------------------------------------------


@dataclass(frozen=True)
class LoopOperatorPair:
    """The two logical operators supported on one noncontractible loop.

    type_one is the most recent round's Pauli on the loop's
    upcoming-round edges; type_two is the upcoming Pauli on the most
    recent round's edges; their product is the loop operator.
    """

    cycle: int
    type_one: PauliOperator
    type_two: PauliOperator
    phase_round: int  # round index mod 6 at which the expressions hold


def loop_edges_of_color(lat: ColoredLattice, cycle: int, color: int) -> List[int]:
    out = []
    bits = cycle
    while bits:
        e = (bits & -bits).bit_length() - 1
        bits &= bits - 1
        if lat.edge_color(e) == color:
            out.append(e)
    return out


def _pauli_on_edge_endpoints(lat: ColoredLattice, edges: List[int], kind: str) -> PauliOperator:
    ops = []
    for e in edges:
        u, v, _ = lat.edges[e]
        ops.append(multiply(PauliOperator.single(lat.n, u, kind),
                            PauliOperator.single(lat.n, v, kind)))
    return product(ops, n=lat.n)


def initial_loop_pair(lat: ColoredLattice, cycle: int) -> Tuple[PauliOperator, PauliOperator]:
    """Expressions valid in the interval before round 0 (after a virtual
    red round): type one = Z on green loop edges, type two = X on red
    loop edges."""
    t1 = _pauli_on_edge_endpoints(lat, loop_edges_of_color(lat, cycle, 0), "Z")
    t2 = _pauli_on_edge_endpoints(lat, loop_edges_of_color(lat, cycle, 2), "X")
    return t1, t2


def advance_loop_operator(lat: ColoredLattice, cycle: int, op: PauliOperator,
                          measured_color: int) -> PauliOperator:
    """Multiply by the just-measured checks along the loop (the update
    that keeps a loop logical commuting with the next round)."""
    checks = product([check_operator(lat, e)
                      for e in loop_edges_of_color(lat, cycle, measured_color)],
                     n=lat.n)
    return multiply(op, checks)


def logical_representatives(lat: ColoredLattice, basis: HomologyBasis,
                            round: int) -> List[LoopOperatorPair]:
    """2g loop pairs (2k operators) valid immediately after ``round``'s
    measurements, signs initialized to +1 at round 0."""
    if round < 0:
        raise ValueError("round must be nonnegative")
    pairs = []
    for cyc in basis.cycle_reps:
        t1, t2 = initial_loop_pair(lat, cyc)
        # advance through rounds 0..round; types swap at each update
        for r in range(round + 1):
            t1 = advance_loop_operator(lat, cyc, t1, r % 3)
            t2 = advance_loop_operator(lat, cyc, t2, r % 3)
            t1, t2 = t2, t1
        t1 = PauliOperator(lat.n, t1.x_bits, t1.z_bits, 1)
        t2 = PauliOperator(lat.n, t2.x_bits, t2.z_bits, 1)
        pairs.append(LoopOperatorPair(cyc, t1, t2, round % 6))
    return pairs
