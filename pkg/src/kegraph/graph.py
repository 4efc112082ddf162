"""Simple undirected graphs on dense vertex indices, graph6 and edge-list I/O."""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field

from .errors import GraphFormatError, SizeGuardError
from .vertexset import from_members, full, iter_members, members

MAX_VERTICES = 64


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph; ``adj[v]`` is the neighbor bitmask of ``v``.

    ``labels`` is an optional display table (``labels[v]`` names vertex ``v``);
    it does not take part in equality or hashing.
    """

    n: int
    adj: tuple[int, ...]
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_VERTICES:
            raise GraphFormatError(f"vertex count {self.n} outside 0..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise GraphFormatError("adjacency length does not match n")
        everyone = full(self.n)
        for v, nb in enumerate(self.adj):
            if nb & ~everyone:
                raise GraphFormatError(f"vertex {v} has a neighbor out of range")
            if nb >> v & 1:
                raise GraphFormatError(f"self-loop at vertex {v}")
            for u in iter_members(nb):
                if not self.adj[u] >> v & 1:
                    raise GraphFormatError(f"asymmetric adjacency between {u} and {v}")
        if self.labels is not None:
            if len(self.labels) != self.n:
                raise GraphFormatError("label table length does not match n")
            if len(set(self.labels)) != self.n:
                raise GraphFormatError("duplicate vertex labels")

    @property
    def vertices(self) -> int:
        return full(self.n)

    @property
    def m(self) -> int:
        return sum(nb.bit_count() for nb in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_members(self.adj[u] >> (u + 1) << (u + 1))]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def index(self, name: str) -> int:
        if self.labels is None:
            return int(name)
        try:
            return self.labels.index(name)
        except ValueError:
            raise KeyError(name) from None

    def vset(self, names: Iterable[str | int]) -> int:
        """Bitmask of the named vertices; ints are taken as raw indices."""
        return from_members(v if isinstance(v, int) else self.index(v) for v in names)

    def names(self, mask: int) -> list[str]:
        return [self.label(v) for v in iter_members(mask)]

    def with_labels(self, labels: Sequence[str] | None) -> Graph:
        return Graph(self.n, self.adj, tuple(labels) if labels is not None else None)


def from_edge_list(n: int, edges: Iterable[tuple[int, int]], labels: Sequence[str] | None = None) -> Graph:
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"edge {u}-{v} has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphFormatError(f"self-loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj), tuple(labels) if labels is not None else None)


def from_named_edges(labels: Sequence[str], edges: Iterable[tuple[str, str]]) -> Graph:
    pos = {name: i for i, name in enumerate(labels)}
    return from_edge_list(len(labels), ((pos[a], pos[b]) for a, b in edges), labels)


# -- graph6 -----------------------------------------------------------------

def encode_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        head = chr(n + 63)
    else:
        head = "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(g.adj[i] >> j & 1)
    bits.extend([0] * (-len(bits) % 6))
    body = []
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = val << 1 | b
        body.append(chr(val + 63))
    return head + "".join(body)


def parse_graph6(line: str) -> Graph:
    s = line.strip()
    if s.startswith(">>graph6<<"):
        s = s[10:]
    if not s:
        raise GraphFormatError("empty graph6 string")
    for ch in s:
        if not 63 <= ord(ch) <= 126:
            raise GraphFormatError(f"character {ch!r} outside the graph6 range 63..126")
    vals = [ord(ch) - 63 for ch in s]
    if vals[0] < 63:
        n, pos = vals[0], 1
    elif len(vals) >= 4 and vals[1] < 63:
        n = vals[1] << 12 | vals[2] << 6 | vals[3]
        pos = 4
    else:
        raise GraphFormatError("malformed graph6 size header")
    if n > MAX_VERTICES:
        raise GraphFormatError(f"graph6 encodes {n} vertices; at most {MAX_VERTICES} supported")
    nbits = n * (n - 1) // 2
    body = vals[pos:]
    if len(body) != (nbits + 5) // 6:
        raise GraphFormatError(f"graph6 body has {len(body)} characters, expected {(nbits + 5) // 6}")
    bitstream = 0
    for v in body:
        bitstream = bitstream << 6 | v
    pad = 6 * len(body) - nbits
    if bitstream & ((1 << pad) - 1):
        raise GraphFormatError("nonzero padding bits in graph6 body")
    bitstream >>= pad
    adj = [0] * n
    k = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if bitstream >> k & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k -= 1
    return Graph(n, tuple(adj))


# -- edge-list text ---------------------------------------------------------

def parse_edge_text(text: str) -> Graph:
    """Read ``n m`` then ``m`` lines ``u v``; ``label i name`` lines may appear anywhere after the header."""
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise GraphFormatError("empty edge list")
    try:
        n, m = (int(t) for t in lines[0].split())
    except ValueError:
        raise GraphFormatError(f"bad header line {lines[0]!r}; expected 'n m'") from None
    labels: list[str] | None = None
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        try:
            if parts[0] == "label":
                if len(parts) != 3:
                    raise ValueError
                if labels is None:
                    labels = [str(i) for i in range(n)]
                labels[int(parts[1])] = parts[2]
            else:
                if len(parts) != 2:
                    raise ValueError
                edges.append((int(parts[0]), int(parts[1])))
        except (ValueError, IndexError):
            raise GraphFormatError(f"bad line {ln!r}") from None
    if len(edges) != m:
        raise GraphFormatError(f"header announces {m} edges, found {len(edges)}")
    return from_edge_list(n, edges, labels)


def format_edge_text(g: Graph) -> str:
    edges = g.edges()
    out = [f"{g.n} {len(edges)}"]
    out += [f"{u} {v}" for u, v in edges]
    if g.labels is not None:
        out += [f"label {i} {name}" for i, name in enumerate(g.labels)]
    return "\n".join(out) + "\n"


# -- neighborhoods and subgraphs -----------------------------------------------

def neighborhood(g: Graph, a: int) -> int:
    """N(A): every vertex with at least one neighbor in A.  May meet A itself."""
    out = 0
    adj = g.adj
    while a:
        low = a & -a
        out |= adj[low.bit_length() - 1]
        a ^= low
    return out


def closed_neighborhood(g: Graph, a: int) -> int:
    return neighborhood(g, a) | a


def induced_subgraph(g: Graph, x: int) -> tuple[Graph, list[int]]:
    """G[X] plus ``vertex_map`` with ``vertex_map[new] == old``."""
    keep = members(x)
    if keep and keep[-1] >= g.n:
        raise ValueError("vertex set exceeds the graph")
    new_of = {old: new for new, old in enumerate(keep)}
    adj = []
    for old in keep:
        adj.append(from_members(new_of[u] for u in iter_members(g.adj[old] & x)))
    labels = tuple(g.labels[v] for v in keep) if g.labels is not None else None
    return Graph(len(keep), tuple(adj), labels), keep


def component_of(g: Graph, v: int) -> int:
    seen = 1 << v
    frontier = seen
    while frontier:
        frontier = neighborhood(g, frontier) & ~seen
        seen |= frontier
    return seen


def is_connected(g: Graph) -> bool:
    return g.n == 0 or component_of(g, 0) == g.vertices


def is_unicyclic(g: Graph) -> bool:
    return g.n > 0 and is_connected(g) and g.m == g.n


def is_bipartite(g: Graph) -> bool:
    colour = [-1] * g.n
    for s in range(g.n):
        if colour[s] != -1:
            continue
        colour[s] = 0
        stack = [s]
        while stack:
            v = stack.pop()
            for u in iter_members(g.adj[v]):
                if colour[u] == -1:
                    colour[u] = colour[v] ^ 1
                    stack.append(u)
                elif colour[u] == colour[v]:
                    return False
    return True


def join_complete(g: Graph, k: int) -> Graph:
    """G joined to a fresh K_k: new vertices ``n..n+k-1`` see everything."""
    n = g.n
    total = n + k
    if total > MAX_VERTICES:
        raise SizeGuardError(f"join would have {total} vertices; at most {MAX_VERTICES} supported")
    everyone = full(total)
    adj = [nb | (everyone ^ full(n)) for nb in g.adj]
    adj += [everyone ^ (1 << v) for v in range(n, total)]
    labels = None
    if g.labels is not None:
        labels = g.labels + tuple(f"k{i}" for i in range(k))
    return Graph(total, tuple(adj), labels)


# -- standard families ---------------------------------------------------------

def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def complete_graph(n: int) -> Graph:
    everyone = full(n)
    return Graph(n, tuple(everyone ^ (1 << v) for v in range(n)))


def path_graph(n: int) -> Graph:
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphFormatError("a cycle needs at least 3 vertices")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def format_set(g: Graph, mask: int) -> str:
    return "{" + ",".join(g.names(mask)) + "}"
