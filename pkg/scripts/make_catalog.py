"""Regenerate src/kegraph/data/graphs{N}.g6: every graph on N vertices up to isomorphism.

Orderly augmentation: each class on N vertices has a representative obtained by
adding one vertex to a representative on N-1 vertices (delete any vertex of the
larger graph).  Candidates are bucketed by a Weisfeiler-Lehman hash plus degree
sequence and deduplicated exactly with networkx.is_isomorphic.  Lines are
written sorted, so the files are byte-stable.

    python3 scripts/make_catalog.py 8
"""

from __future__ import annotations

import argparse
from collections import defaultdict
from pathlib import Path

import networkx as nx

from kegraph.graph import Graph, encode_graph6

DATA = Path(__file__).resolve().parent.parent / "src" / "kegraph" / "data"


def _nx(adj: tuple[int, ...]) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(len(adj)))
    h.add_edges_from((u, v) for u in range(len(adj)) for v in range(u + 1, len(adj)) if adj[u] >> v & 1)
    return h


def _key(h: nx.Graph) -> tuple:
    return (h.number_of_edges(), tuple(sorted(d for _, d in h.degree())), nx.weisfeiler_lehman_graph_hash(h, iterations=3))


def extend(reps: list[tuple[int, ...]], n: int) -> list[tuple[int, ...]]:
    buckets: dict[tuple, list[nx.Graph]] = defaultdict(list)
    out = []
    for adj in reps:
        for nbrs in range(1 << (n - 1)):
            new = tuple(a | (1 << (n - 1) if nbrs >> v & 1 else 0) for v, a in enumerate(adj)) + (nbrs,)
            h = _nx(new)
            bucket = buckets[_key(h)]
            if any(nx.is_isomorphic(h, other) for other in bucket):
                continue
            bucket.append(h)
            out.append(new)
    return out


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("max_n", type=int, nargs="?", default=8)
    args = ap.parse_args()
    DATA.mkdir(parents=True, exist_ok=True)
    reps: list[tuple[int, ...]] = [()]
    for n in range(1, args.max_n + 1):
        reps = extend(reps, n)
        lines = sorted(encode_graph6(Graph(n, adj)) for adj in reps)
        (DATA / f"graphs{n}.g6").write_text("".join(line + "\n" for line in lines))
        print(f"n={n}: {len(lines)} graphs")


if __name__ == "__main__":
    main()
