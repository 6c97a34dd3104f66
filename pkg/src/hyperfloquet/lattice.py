"""Edge-3-colored trivalent lattices: loading, validation, coloring search.

Colors are green=0, blue=1, red=2; a color-c edge measures the weight-two
check XX/YY/ZZ for c = green/blue/red on its endpoint qubits. Faces are
never read from input: for each color c, the subgraph of the other two
colors is 2-regular and its cycles are exactly the color-c faces.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, List, Optional, Sequence, Tuple

from .pauli import PauliOperator, multiply, product

GREEN, BLUE, RED = 0, 1, 2
COLOR_NAMES = ("green", "blue", "red")
COLOR_CHARS = "gbr"
COLOR_PAULIS = "XYZ"  # measurement type per color

#: Measurement schedule: round r measures all checks of round_color(r).
SCHEDULE_PERIOD = 3


def round_color(r: int) -> int:
    """Color measured at round r (green, blue, red cyclically)."""
    if r < 0:
        raise ValueError("round must be nonnegative")
    return r % 3


class LatticeError(ValueError):
    """Input fails the colored-lattice invariants."""


class UncolorableError(ValueError):
    """Exhaustive search proved no valid coloring exists."""


class SearchBudgetExceededError(RuntimeError):
    """Coloring search hit its node budget before finishing."""


@dataclass(frozen=True)
class Face:
    """One face: a bicolored cycle of the two colors != self.color."""

    id: int
    color: int
    vertices: Tuple[int, ...]          # cyclic order
    boundary_edges: Tuple[int, ...]    # edge ids, aligned with vertices

    def __len__(self):
        return len(self.vertices)


class ColoredLattice:
    """Validated trivalent graph with a proper edge 3-coloring.

    Immutable after construction; safe to share between workers.
    """

    def __init__(self, n: int, girth: int, edges: Sequence[Tuple[int, int, int]],
                 name: str = ""):
        if girth not in (6, 8):
            raise LatticeError(f"unsupported girth {girth} (expected 6 or 8)")
        self.n = n
        self.girth = girth
        self.name = name
        canon = []
        for (u, v, c) in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise LatticeError(f"edge ({u},{v}) references vertex outside 0..{n-1}")
            if u == v:
                raise LatticeError(f"self-loop at vertex {u}")
            if c not in (GREEN, BLUE, RED):
                raise LatticeError(f"bad color {c} on edge ({u},{v})")
            canon.append((min(u, v), max(u, v), c))
        canon.sort()
        for i in range(1, len(canon)):
            if canon[i][:2] == canon[i - 1][:2]:
                raise LatticeError(f"duplicate edge ({canon[i][0]},{canon[i][1]})")
        self.edges: Tuple[Tuple[int, int, int], ...] = tuple(canon)
        self.n_edges = len(self.edges)
        self.edge_index = {(u, v): i for i, (u, v, _) in enumerate(self.edges)}

        # vertex_edge[v][c] = id of the color-c edge at v
        self.vertex_edge: List[List[int]] = [[-1, -1, -1] for _ in range(n)]
        for i, (u, v, c) in enumerate(self.edges):
            for t in (u, v):
                if self.vertex_edge[t][c] != -1:
                    raise LatticeError(
                        f"improper coloring: two {COLOR_NAMES[c]} edges at vertex {t}")
                self.vertex_edge[t][c] = i
        for v in range(n):
            missing = [COLOR_NAMES[c] for c in range(3) if self.vertex_edge[v][c] == -1]
            if missing:
                raise LatticeError(f"vertex {v} has no {', '.join(missing)} edge "
                                   "(degree != 3 or improper coloring)")

        self._check_connected()
        self.faces: Tuple[Face, ...] = tuple(self._derive_faces())
        # face_at[v][c] = id of the color-c face containing v
        self.face_at: List[List[int]] = [[-1, -1, -1] for _ in range(n)]
        for f in self.faces:
            for v in f.vertices:
                if self.face_at[v][f.color] != -1:
                    raise LatticeError(
                        f"vertex {v} lies on two {COLOR_NAMES[f.color]} faces")
                self.face_at[v][f.color] = f.id
        # edge_faces[e] = (face id, face id) of the two faces bordering e
        self.edge_faces: List[Tuple[int, int]] = []
        for i, (u, v, c) in enumerate(self.edges):
            borders = tuple(sorted({self.face_at[u][cc] for cc in range(3) if cc != c}
                                   & {self.face_at[v][cc] for cc in range(3) if cc != c}))
            if len(borders) != 2:
                raise LatticeError(f"edge {i} does not border exactly two faces")
            self.edge_faces.append(borders)

    # -- construction helpers -------------------------------------------------

    def _check_connected(self):
        seen = [False] * self.n
        stack = [0]
        seen[0] = True
        count = 1
        while stack:
            v = stack.pop()
            for c in range(3):
                u2, v2, _ = self.edges[self.vertex_edge[v][c]]
                w = u2 if u2 != v else v2
                if not seen[w]:
                    seen[w] = True
                    count += 1
                    stack.append(w)
        if count != self.n:
            raise LatticeError(f"graph disconnected: reached {count} of {self.n} vertices")

    def _derive_faces(self) -> List[Face]:
        faces: List[Face] = []
        expected_per_color = self.n // (self.girth // 2) // 2  # n/8 or n/6
        for c in range(3):
            a, b = [cc for cc in range(3) if cc != c]
            visited = [False] * self.n
            count_c = 0
            for start in range(self.n):
                if visited[start]:
                    continue
                verts: List[int] = []
                eids: List[int] = []
                v, col = start, a
                while True:
                    visited[v] = True
                    verts.append(v)
                    e = self.vertex_edge[v][col]
                    eids.append(e)
                    u2, v2, _ = self.edges[e]
                    v = u2 if u2 != v else v2
                    col = b if col == a else a
                    if v == start and col == a:
                        break
                    if len(verts) > self.girth:
                        raise LatticeError(
                            f"{COLOR_NAMES[c]} face through vertex {start} has length "
                            f"> declared girth {self.girth}")
                if len(verts) != self.girth:
                    raise LatticeError(
                        f"{COLOR_NAMES[c]} face through vertex {start} has length "
                        f"{len(verts)} != declared girth {self.girth}")
                faces.append(Face(len(faces), c, tuple(verts), tuple(eids)))
                count_c += 1
            if count_c != expected_per_color:
                raise LatticeError(
                    f"{count_c} {COLOR_NAMES[c]} faces, expected {expected_per_color}")
        return faces

    # -- derived quantities ----------------------------------------------------

    @property
    def n_faces(self) -> int:
        return len(self.faces)

    @property
    def genus(self) -> int:
        euler = self.n - self.n_edges + self.n_faces
        if euler % 2:
            raise LatticeError("odd Euler characteristic")
        return (2 - euler) // 2

    def faces_of_color(self, c: int) -> List[Face]:
        return [f for f in self.faces if f.color == c]

    def edge_color(self, e: int) -> int:
        return self.edges[e][2]

    def other_endpoint(self, e: int, v: int) -> int:
        u2, v2, _ = self.edges[e]
        return u2 if u2 != v else v2

    def __repr__(self):  # pragma: no cover - debug aid
        label = self.name or "lattice"
        return (f"ColoredLattice({label}: n={self.n}, E={self.n_edges}, "
                f"F={self.n_faces}, girth={self.girth})")


# -- check and plaquette operators ----------------------------------------------


def check_operator(lat: ColoredLattice, edge: int | Tuple[int, int]) -> PauliOperator:
    """Weight-two measurement check of an edge: XX/YY/ZZ per color."""
    if isinstance(edge, tuple):
        key = (min(edge), max(edge))
        if key not in lat.edge_index:
            raise LatticeError(f"unknown edge {edge}")
        edge = lat.edge_index[key]
    if not 0 <= edge < lat.n_edges:
        raise LatticeError(f"unknown edge id {edge}")
    u, v, c = lat.edges[edge]
    kind = COLOR_PAULIS[c]
    return multiply(PauliOperator.single(lat.n, u, kind),
                    PauliOperator.single(lat.n, v, kind))


def plaquette_operator(lat: ColoredLattice, face: int | Face) -> PauliOperator:
    """Product of the boundary checks of a face, sign normalized to +1.

    For a color-c face this is the uniform color-c Pauli on the face's
    vertices (asserted).
    """
    if isinstance(face, Face):
        face_obj = face
    else:
        if not 0 <= face < lat.n_faces:
            raise LatticeError(f"unknown face id {face}")
        face_obj = lat.faces[face]
    # Multiply the two same-color check groups first: each group has
    # disjoint supports, and the combined product picks up i per vertex,
    # i^girth = +-1, so no intermediate is ever non-Hermitian.
    a, b = [c for c in range(3) if c != face_obj.color]
    group_a = product([check_operator(lat, e) for e in face_obj.boundary_edges
                       if lat.edge_color(e) == a], n=lat.n)
    group_b = product([check_operator(lat, e) for e in face_obj.boundary_edges
                       if lat.edge_color(e) == b], n=lat.n)
    op = multiply(group_a, group_b)
    expect = product([PauliOperator.single(lat.n, v, COLOR_PAULIS[face_obj.color])
                      for v in face_obj.vertices])
    if (op.x_bits, op.z_bits) != (expect.x_bits, expect.z_bits):
        raise LatticeError(f"face {face_obj.id} plaquette is not the uniform "
                           f"{COLOR_PAULIS[face_obj.color]} product")
    return PauliOperator(lat.n, op.x_bits, op.z_bits, 1)


# -- file format -----------------------------------------------------------------


def parse_lattice(text: str, name: str = "") -> ColoredLattice:
    """Parse the line-oriented lattice format.

    line 1: ``n <vertex-count> girth <6|8>``; then ``e <u> <v> <g|b|r>``
    per edge. ``#`` starts a comment.
    """
    n = girth = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "n":
            if n is not None:
                raise LatticeError(f"line {lineno}: duplicate header")
            if len(parts) != 4 or parts[2] != "girth":
                raise LatticeError(f"line {lineno}: expected 'n <count> girth <6|8>'")
            try:
                n, girth = int(parts[1]), int(parts[3])
            except ValueError:
                raise LatticeError(f"line {lineno}: bad integer in header") from None
        elif parts[0] == "e":
            if n is None:
                raise LatticeError(f"line {lineno}: edge before header")
            if len(parts) != 4:
                raise LatticeError(f"line {lineno}: expected 'e <u> <v> <color>'")
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise LatticeError(f"line {lineno}: bad vertex index") from None
            if parts[3] not in COLOR_CHARS:
                raise LatticeError(f"line {lineno}: color must be one of g, b, r")
            edges.append((u, v, COLOR_CHARS.index(parts[3])))
        else:
            raise LatticeError(f"line {lineno}: unknown record '{parts[0]}'")
    if n is None:
        raise LatticeError("missing header line")
    return ColoredLattice(n, girth, edges, name=name)


def load_lattice(path) -> ColoredLattice:
    """Load and validate a lattice file."""
    import os
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    name = os.path.splitext(os.path.basename(str(path)))[0]
    return parse_lattice(text, name=name)


def write_lattice(lat: ColoredLattice) -> str:
    """Serialize bit-exactly: header, then edges sorted by (u, v)."""
    lines = [f"n {lat.n} girth {lat.girth}"]
    for (u, v, c) in lat.edges:  # already canonical-sorted
        lines.append(f"e {u} {v} {COLOR_CHARS[c]}")
    return "\n".join(lines) + "\n"


def save_lattice(lat: ColoredLattice, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(write_lattice(lat))


# -- coloring search ---------------------------------------------------------------


def find_coloring(n: int, edge_list: Sequence[Tuple[int, int]], girth: int,
                  node_budget: int = 5_000_000, name: str = "") -> ColoredLattice:
    """Backtracking search for a proper edge 3-coloring whose bicolored
    cycles all have length ``girth``.

    Deterministic for a fixed vertex/edge ordering; the first solution
    wins. Raises UncolorableError on exhaustion and
    SearchBudgetExceededError when node_budget assignments were tried.
    """
    edges = sorted((min(u, v), max(u, v)) for (u, v) in edge_list)
    m = len(edges)
    if len(set(edges)) != m:
        raise LatticeError("duplicate edges in input")
    adj: List[List[Tuple[int, int]]] = [[] for _ in range(n)]  # (edge id, other vertex)
    for i, (u, v) in enumerate(edges):
        if u == v:
            raise LatticeError(f"self-loop at vertex {u}")
        adj[u].append((i, v))
        adj[v].append((i, u))
    for v in range(n):
        if len(adj[v]) != 3:
            raise LatticeError(f"vertex {v} has degree {len(adj[v])}, expected 3")

    # BFS edge order keeps the assigned region contiguous so the cycle
    # checks prune early.
    order: List[int] = []
    seen_e = [False] * m
    seen_v = [False] * n
    queue = [0]
    seen_v[0] = True
    while queue:
        v = queue.pop(0)
        for (e, w) in adj[v]:
            if not seen_e[e]:
                seen_e[e] = True
                order.append(e)
            if not seen_v[w]:
                seen_v[w] = True
                queue.append(w)

    color = [-1] * m
    nodes = 0

    def bicolor_walk_ok(e: int) -> bool:
        """Check partial bicolored paths through freshly colored edge e."""
        c = color[e]
        u0, v0 = edges[e]
        for other in range(3):
            if other == c:
                continue
            # walk the {c, other} path in both directions from e
            length = 1
            closed = False
            for start, first_col in ((u0, other), (v0, other)):
                v, want = start, first_col
                prev_e = e
                while True:
                    nxt = -1
                    for (e2, w) in adj[v]:
                        if e2 != prev_e and color[e2] == want:
                            nxt = e2
                            other_v = w
                            break
                    if nxt == -1:
                        break
                    if nxt == e:  # walked all the way around
                        closed = True
                        break
                    length += 1
                    prev_e = nxt
                    v = other_v
                    want = c if want == other else other
                if closed:
                    break
            if closed:
                if length != girth:
                    return False
            elif length > girth - 1:
                return False
        return True

    def backtrack(idx: int) -> bool:
        nonlocal nodes
        if idx == m:
            return True
        e = order[idx]
        u, v = edges[e]
        used = set()
        for (e2, _) in adj[u]:
            if color[e2] != -1:
                used.add(color[e2])
        for (e2, _) in adj[v]:
            if color[e2] != -1:
                used.add(color[e2])
        for c in range(3):
            if c in used:
                continue
            nodes += 1
            if nodes > node_budget:
                raise SearchBudgetExceededError(
                    f"coloring search exceeded {node_budget} nodes")
            color[e] = c
            if bicolor_walk_ok(e) and backtrack(idx + 1):
                return True
            color[e] = -1
        return False

    import sys
    old_limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old_limit, 2 * m + 200))
    try:
        found = backtrack(0)
    finally:
        sys.setrecursionlimit(old_limit)
    if found:
        return ColoredLattice(n, girth, [(u, v, color[i]) for i, (u, v) in enumerate(edges)],
                              name=name)
    raise UncolorableError(
        f"no proper 3-edge-coloring with all bicolored cycles of length {girth}")
