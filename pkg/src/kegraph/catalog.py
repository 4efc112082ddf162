"""Packaged catalog of all graphs up to isomorphism on 1..8 vertices, in graph6.

The files are produced by ``scripts/make_catalog.py`` and read here as plain text.
"""

from __future__ import annotations

from collections.abc import Iterator
from importlib import resources
from pathlib import Path

from .errors import GraphFormatError
from .graph import Graph, parse_graph6

CATALOG_MAX_N = 8
# number of unlabeled graphs per order (OEIS A000088)
EXPECTED_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044, 8: 12346}


def catalog_path(n: int) -> Path:
    if not 1 <= n <= CATALOG_MAX_N:
        raise ValueError(f"catalog covers 1..{CATALOG_MAX_N} vertices, not {n}")
    return Path(str(resources.files("kegraph") / "data" / f"graphs{n}.g6"))


def catalog_lines(n: int) -> list[str]:
    return catalog_path(n).read_text().split()


def iter_graph6_file(path: str | Path) -> Iterator[tuple[str, Graph]]:
    """Yield ``(line, graph)`` for each nonblank line; an optional ``>>graph6<<`` header is skipped."""
    with open(path, encoding="ascii") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.strip()
            if line.startswith(">>graph6<<"):
                line = line[len(">>graph6<<"):]
            if not line:
                continue
            try:
                yield line, parse_graph6(line)
            except GraphFormatError as exc:
                raise GraphFormatError(f"{path}:{lineno}: {exc}") from None


def iter_catalog(n_min: int = 1, n_max: int = CATALOG_MAX_N) -> Iterator[tuple[str, Graph]]:
    for n in range(n_min, n_max + 1):
        for line in catalog_lines(n):
            yield line, parse_graph6(line)
