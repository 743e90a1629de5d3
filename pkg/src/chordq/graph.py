"""Immutable simple graphs on vertices ``0..n-1`` stored as adjacency bitrows.

Row ``adj[u]`` is an int whose bit ``v`` is set when ``uv`` is an edge.  The
edge-mask encoding used by the enumeration code numbers vertex pairs in
graph6 order ``(0,1), (0,2), (1,2), (0,3), ...``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence, Union

from .errors import CapacityError, Graph6ParseError, InvalidEditError

MAX_ORDER = 64


class Graph:
    """Simple undirected graph; instances are immutable and hashable."""

    __slots__ = ("_n", "_adj", "_hash")

    def __init__(self, n: int, adj: Sequence[int]):
        if not 0 <= n <= MAX_ORDER:
            raise CapacityError(f"graph order {n} outside 0..{MAX_ORDER}")
        if len(adj) != n:
            raise ValueError(f"expected {n} adjacency rows, got {len(adj)}")
        full = (1 << n) - 1
        rows = tuple(int(r) for r in adj)
        for u, row in enumerate(rows):
            if row & ~full or row < 0:
                raise ValueError(f"row {u} references a vertex outside 0..{n - 1}")
            if row >> u & 1:
                raise InvalidEditError(f"self-loop at vertex {u}")
            r = row
            while r:
                low = r & -r
                v = low.bit_length() - 1
                if not rows[v] >> u & 1:
                    raise ValueError(f"adjacency not symmetric at ({u}, {v})")
                r ^= low
        self._n = n
        self._adj = rows
        self._hash = None

    @classmethod
    def _trusted(cls, n: int, rows: tuple) -> "Graph":
        g = object.__new__(cls)
        g._n = n
        g._adj = rows
        g._hash = None
        return g

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if not 0 <= n <= MAX_ORDER:
            raise CapacityError(f"graph order {n} outside 0..{MAX_ORDER}")
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise InvalidEditError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidEditError(f"edge ({u}, {v}) outside 0..{n - 1}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls._trusted(n, tuple(rows))

    @classmethod
    def from_mask(cls, n: int, mask: int) -> "Graph":
        """Decode an edge mask over pairs in graph6 order."""
        rows = [0] * n
        k = 0
        for j in range(1, n):
            for i in range(j):
                if mask >> k & 1:
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
                k += 1
        if mask >> k:
            raise ValueError(f"mask has bits beyond the {k} pairs of order {n}")
        return cls._trusted(n, tuple(rows))

    def to_mask(self) -> int:
        mask = 0
        k = 0
        adj = self._adj
        for j in range(1, self._n):
            for i in range(j):
                if adj[i] >> j & 1:
                    mask |= 1 << k
                k += 1
        return mask

    @property
    def n(self) -> int:
        return self._n

    @property
    def adj(self) -> tuple:
        return self._adj

    def __len__(self) -> int:
        return self._n

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adj[u] >> v & 1)

    def degree(self, u: int) -> int:
        return self._adj[u].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self._adj]

    def neighbors(self, u: int) -> list[int]:
        return bits(self._adj[u])

    def num_edges(self) -> int:
        return sum(r.bit_count() for r in self._adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        out = []
        for u, row in enumerate(self._adj):
            for v in bits(row >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    def non_edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self._n) for v in range(u + 1, self._n)
                if not self._adj[u] >> v & 1]

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph in which old vertex ``u`` becomes ``perm[u]``."""
        if sorted(perm) != list(range(self._n)):
            raise ValueError("perm must be a permutation of the vertex set")
        rows = [0] * self._n
        for u, row in enumerate(self._adj):
            pu = perm[u]
            for v in bits(row):
                rows[pu] |= 1 << perm[v]
        return Graph._trusted(self._n, tuple(rows))

    def induced(self, vertices: Sequence[int]) -> "Graph":
        index = {v: i for i, v in enumerate(vertices)}
        return Graph.from_edges(
            len(vertices),
            [(index[u], index[v]) for u, v in self.edges() if u in index and v in index],
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._adj == other._adj

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._n, self._adj))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, edges={self.edges()})"

    def __reduce__(self):
        return (Graph._trusted, (self._n, self._adj))


def bits(x: int) -> list[int]:
    """Indices of the set bits of ``x`` in increasing order."""
    out = []
    while x:
        low = x & -x
        out.append(low.bit_length() - 1)
        x ^= low
    return out


# --- graph6 -----------------------------------------------------------------

def to_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        header = chr(63 + n)
    else:
        header = "~" + "".join(chr(63 + (n >> s & 63)) for s in (12, 6, 0))
    adj = g.adj
    out = []
    acc = 0
    k = 0
    for j in range(1, n):
        for i in range(j):
            acc = acc << 1 | (adj[i] >> j & 1)
            k += 1
            if k == 6:
                out.append(chr(63 + acc))
                acc = k = 0
    if k:
        out.append(chr(63 + (acc << (6 - k))))
    return header + "".join(out)


def from_graph6(text: Union[str, bytes]) -> Graph:
    if isinstance(text, bytes):
        text = text.decode("ascii", errors="replace")
    if text.startswith(">>graph6<<"):
        text, base = text[10:], 10
    else:
        base = 0
    text = text.rstrip("\r\n")
    if not text:
        raise Graph6ParseError("empty graph6 string", base)
    for i, ch in enumerate(text):
        if not 63 <= ord(ch) <= 126:
            raise Graph6ParseError(f"character {ch!r} outside graph6 range 63..126", base + i)
    if text[0] != "~":
        n, pos = ord(text[0]) - 63, 1
    elif len(text) >= 2 and text[1] == "~":
        raise CapacityError(f"graph order exceeds {MAX_ORDER} (8-byte size header)")
    else:
        if len(text) < 4:
            raise Graph6ParseError("truncated extended size header", base + len(text))
        n = 0
        for ch in text[1:4]:
            n = n << 6 | (ord(ch) - 63)
        pos = 4
        if n <= 62:
            # n <= 62 must use the single-byte header
            raise Graph6ParseError(f"extended size header used for small order {n}", base)
    if n > MAX_ORDER:
        raise CapacityError(f"graph order {n} exceeds {MAX_ORDER}")
    pairs = n * (n - 1) // 2
    need = (pairs + 5) // 6
    body = text[pos:]
    if len(body) < need:
        raise Graph6ParseError(
            f"truncated body: order {n} needs {need} data bytes, got {len(body)}",
            base + len(text),
        )
    if len(body) > need:
        raise Graph6ParseError("trailing bytes after graph6 body", base + pos + need)
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = ord(body[k // 6]) - 63
            if byte >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    if need and pairs % 6:
        pad = 6 - pairs % 6
        if (ord(body[-1]) - 63) & ((1 << pad) - 1):
            raise Graph6ParseError("nonzero padding bits", base + pos + need - 1)
    return Graph._trusted(n, tuple(rows))


# --- constructors -------------------------------------------------------------

def empty_graph(n: int) -> Graph:
    return Graph._trusted(n, (0,) * n) if n <= MAX_ORDER else Graph(n, [0] * n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, [full ^ (1 << u) for u in range(n)])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_bipartite_graph(a: int, b: int) -> Graph:
    return join(empty_graph(a), empty_graph(b))


def star_graph(n: int) -> Graph:
    """K_{1,n-1} with the centre at vertex 0."""
    return complete_bipartite_graph(1, n - 1)


# --- algebra --------------------------------------------------------------

def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph._trusted(g.n, tuple(full ^ r ^ (1 << u) for u, r in enumerate(g.adj)))


def add_edge(g: Graph, u: int, v: int) -> Graph:
    _check_pair(g, u, v)
    if g.has_edge(u, v):
        raise InvalidEditError(f"edge ({u}, {v}) already present")
    rows = list(g.adj)
    rows[u] |= 1 << v
    rows[v] |= 1 << u
    return Graph._trusted(g.n, tuple(rows))


def remove_edge(g: Graph, u: int, v: int) -> Graph:
    _check_pair(g, u, v)
    if not g.has_edge(u, v):
        raise InvalidEditError(f"edge ({u}, {v}) not present")
    rows = list(g.adj)
    rows[u] &= ~(1 << v)
    rows[v] &= ~(1 << u)
    return Graph._trusted(g.n, tuple(rows))


def _check_pair(g: Graph, u: int, v: int) -> None:
    if u == v:
        raise InvalidEditError(f"loop ({u}, {v}) not allowed in a simple graph")
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise InvalidEditError(f"pair ({u}, {v}) outside 0..{g.n - 1}")


def disjoint_union(g: Graph, h: Graph) -> Graph:
    n = g.n + h.n
    if n > MAX_ORDER:
        raise CapacityError(f"combined order {n} exceeds {MAX_ORDER}")
    return Graph._trusted(n, g.adj + tuple(r << g.n for r in h.adj))


def join(g: Graph, h: Graph) -> Graph:
    """``g`` and ``h`` side by side plus every cross edge; g's vertices first."""
    n = g.n + h.n
    if n > MAX_ORDER:
        raise CapacityError(f"combined order {n} exceeds {MAX_ORDER}")
    gmask = (1 << g.n) - 1
    hmask = ((1 << h.n) - 1) << g.n
    return Graph._trusted(
        n, tuple(r | hmask for r in g.adj) + tuple((r << g.n) | gmask for r in h.adj)
    )


def k_copies(g: Graph, k: int) -> Graph:
    if k < 0:
        raise ValueError("k must be nonnegative")
    out = empty_graph(0)
    for _ in range(k):
        out = disjoint_union(out, g)
    return out


# --- structure --------------------------------------------------------------

def components(g: Graph) -> list[list[int]]:
    seen = 0
    comps = []
    for s in range(g.n):
        if seen >> s & 1:
            continue
        comp = frontier = 1 << s
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        comps.append(bits(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(components(g)) == 1


@dataclass(frozen=True)
class BipartitionWitness:
    side_of: tuple[int, ...]

    def check(self, g: Graph) -> bool:
        return len(self.side_of) == g.n and all(
            self.side_of[u] != self.side_of[v] for u, v in g.edges()
        )


def is_bipartite(g: Graph) -> Optional[BipartitionWitness]:
    side = [-1] * g.n
    for s in range(g.n):
        if side[s] >= 0:
            continue
        side[s] = 0
        stack = [s]
        while stack:
            u = stack.pop()
            for v in bits(g.adj[u]):
                if side[v] < 0:
                    side[v] = 1 - side[u]
                    stack.append(v)
                elif side[v] == side[u]:
                    return None
    return BipartitionWitness(tuple(side))


@dataclass(frozen=True)
class Regular:
    degree: int

    def __str__(self) -> str:
        return f"regular({self.degree})"


@dataclass(frozen=True)
class SemiRegularBipartite:
    degree_a: int
    degree_b: int

    def __str__(self) -> str:
        return f"semi-regular-bipartite({self.degree_a},{self.degree_b})"


@dataclass(frozen=True)
class Neither:
    def __str__(self) -> str:
        return "neither"


Regularity = Union[Regular, SemiRegularBipartite, Neither]


def classify_regularity(g: Graph) -> Regularity:
    """Regular is reported first; semi-regular bipartite requires connectivity.

    ``degree_a`` is the common degree on the side containing vertex 0.
    """
    degs = g.degrees()
    if not degs or len(set(degs)) == 1:
        return Regular(degs[0] if degs else 0)
    if not is_connected(g):
        return Neither()
    w = is_bipartite(g)
    if w is None:
        return Neither()
    side_degs = [set(), set()]
    for u, d in enumerate(degs):
        side_degs[w.side_of[u]].add(d)
    if len(side_degs[0]) == 1 and len(side_degs[1]) == 1:
        a = side_degs[w.side_of[0]].pop()
        b = side_degs[1 - w.side_of[0]].pop()
        return SemiRegularBipartite(a, b)
    return Neither()


def iter_graph6_lines(lines: Iterable[str]) -> Iterator[Graph]:
    for line in lines:
        line = line.strip()
        if line:
            yield from_graph6(line)
