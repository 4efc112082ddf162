"""Reference graphs with known invariants, used as a regression corpus.

Each edge list was transcribed by hand from a line drawing (vertex positions and
segments), keeping the drawing's vertex names; vertices drawn without a name get
``x1, x2, ...`` or ``u1, u2, ...``.  Every assertion below restates a value
published next to the drawing, so a transcription slip shows up as a failing
assertion rather than a silently different graph.
"""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass
from typing import Any

from .critical import critical_profile, difference, is_critical_set
from .families import check_perfect_matching_theorem, f_value, ke_collection_masks
from .graph import Graph, complete_graph, format_set, from_named_edges, induced_subgraph
from .independence import omega
from .ke import is_ke
from .matching import matching_from_into, mu

FIXTURES: dict[str, Graph] = {}


def _add(name: str, labels: str, edges: str) -> Graph:
    g = from_named_edges(labels.split(), [tuple(e.split("-")) for e in edges.split()])
    FIXTURES[name] = g
    return g


# fig2222 left: bottom row b x1 d x2 x3 x4 x5, top row a c e f g x6
_add(
    "g1-fig2222",
    "a b c d e f g x1 x2 x3 x4 x5 x6",
    "b-x1 x1-d d-x2 x2-x3 x3-x4 x4-x5 a-x1 x1-c e-x2 e-f x2-f x3-g x6-x5 x4-x6",
)
# fig2222 right: bottom row y u1 u2 w u3 u4, top row x z u5 u6 u7
_add(
    "g2-fig2222",
    "x y z w u1 u2 u3 u4 u5 u6 u7",
    "y-u1 u1-u2 u2-w w-u3 u3-u4 x-u1 u1-z u2-u5 u2-u6 u5-u6 u3-u7 u7-u4",
)
# fig51 left
_add(
    "g-fig51",
    "v1 v2 v3 v4 v5 v6 v7 v8 v9 v10 v11 v12 v13",
    "v1-v5 v5-v6 v6-v9 v9-v10 v10-v12 v2-v5 v3-v5 v3-v4 v4-v5 v5-v7 v7-v8 v8-v9 v12-v13 v11-v13 v11-v12",
)
# fig51 right
_add("h-fig51", "a b c d e f", "a-b b-c c-d b-e c-f d-f")
# fig11 / fig111: bottom row x1.., top row y1..
_bowtie = ("x1 x2 x3 y1 y2", "x1-x2 x2-x3 x1-y1 y1-x2 x2-y2 x3-y2")
_twin = (
    "x1 x2 x3 x4 y1 y2 y3 y4",
    "x1-x2 x2-x3 x3-x4 x1-y1 y1-x2 x1-y2 x2-y2 y3-y4 x3-y3 x3-y4 y3-x4 x4-y4",
)
_add("g1-fig11", *_bowtie)
_add("g2-fig11", *_twin)
_add(
    "g3-fig11",
    "x1 x2 x3 x4 x5 x6 y1 y2 y3 y4 y5 y6",
    "x1-x2 x2-x3 x3-x4 x4-x5 x5-x6 x1-y1 x1-y2 x2-y3 y3-y4 x4-y4 x5-y5 x6-y6",
)
_add("g1-fig111", *_bowtie)
_add("g2-fig111", *_twin)
_add(
    "g3-fig111",
    "x1 x2 x3 x4 y1 y2 y3 y4",
    "x1-x2 x2-x3 x3-x4 x1-y1 x1-y2 x2-y3 y3-y4 x4-y4",
)
# fig244 left: bottom row x1 x2 x3 d, top row a b c; x1-x3 drawn as an arc
_add(
    "g1-fig244",
    "a b c d x1 x2 x3",
    "x1-x2 x2-x3 x3-d x1-a a-x2 a-x3 x1-b x2-b x3-b d-c x1-x3",
)
# fig244 right: bottom row u x1 v, top row x2 x3
_add("g2-fig244", "u v x1 x2 x3", "u-x1 x1-v u-x2 u-x3 x1-x2 x1-x3 x2-v x2-x3 v-x3")
# fig233
_add("g1-fig233", "a b c d e f g", "a-c c-d d-e e-g b-c a-b e-f f-g")
_add("g2-fig233", "u v w x y z", "u-v v-x x-z v-w x-y y-z")
# fig51111
_add("g-fig51111", "a b c d e f x y", "a-b b-c c-d b-e d-f c-f d-x x-y")


def _k5_two_pendants() -> Graph:
    return from_named_edges(
        "k0 k1 k2 k3 k4 p1 p2".split(),
        [(f"k{i}", f"k{j}") for i in range(5) for j in range(i + 1, 5)] + [("k0", "p1"), ("k0", "p2")],
    )


FIXTURES["k5-two-pendants"] = _k5_two_pendants()
for _n in (1, 2, 3):
    FIXTURES[f"k{2 * _n}"] = complete_graph(2 * _n)


# -- assertions ------------------------------------------------------------------

@dataclass(frozen=True)
class FixtureCheck:
    fixture: str
    key: str
    expected: Any
    source: str
    compute: Callable[[Graph], Any]


@dataclass(frozen=True)
class FixtureOutcome:
    check: FixtureCheck
    got: Any

    @property
    def ok(self) -> bool:
        return self.got == self.check.expected

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        c = self.check
        return f"{status} {c.fixture}.{c.key}: expected {c.expected!r} ({c.source}), got {self.got!r}"


def _names(g: Graph, mask: int) -> frozenset[str]:
    return frozenset(g.names(mask))


def _family(g: Graph, masks) -> frozenset[frozenset[str]]:
    return frozenset(_names(g, s) for s in masks)


def _fs(text: str) -> frozenset[str]:
    return frozenset(text.split())


def _bounds(g: Graph) -> tuple[int, int, int]:
    fam = omega(g)
    return 2 * fam.alpha, fam.corona.bit_count() + fam.core.bit_count(), 2 * (g.n - mu(g))


def _all_collections_ke(g: Graph) -> bool:
    _, ke = ke_collection_masks(g)
    return all(ke[1:])


def _matching_exists(src: str, dst: str) -> Callable[[Graph], bool]:
    def run(g: Graph) -> bool:
        return matching_from_into(g, g.vset(src.split()), g.vset(dst.split())) is not None

    return run


def _outside_union(*sets: str) -> Callable[[Graph], frozenset[str]]:
    def run(g: Graph) -> frozenset[str]:
        u = 0
        for s in sets:
            u |= g.vset(s.split())
        return _names(g, g.vertices & ~u)

    return run


CHECKS: list[FixtureCheck] = []


def _check(fixture: str, key: str, expected: Any, source: str, compute: Callable[[Graph], Any]) -> None:
    CHECKS.append(FixtureCheck(fixture, key, expected, source, compute))


_core = lambda g: _names(g, omega(g).core)  # noqa: E731
_corona = lambda g: _names(g, omega(g).corona)  # noqa: E731

# fig2222
_check("g1-fig2222", "core", _fs("a b c d"), "text: core(G1)={a,b,c,d}", _core)
_check("g1-fig2222", "core-critical", True, "text: core(G1) is a critical set", lambda g: is_critical_set(g, omega(g).core))
_check("g1-fig2222", "ker", _fs("a b c"), "text: ker(G1)={a,b,c}", lambda g: _names(g, critical_profile(g).ker))
_check("g1-fig2222", "nucleus", _fs("a b c d g"), "text: nucleus(G1)={a,b,c,d,g}", lambda g: _names(g, critical_profile(g).nucleus))
_check(
    "g1-fig2222",
    "max-crit",
    frozenset({_fs("a b c d e g"), _fs("a b c d f g")}),
    "text: A1, A2 are all maximum critical independent sets",
    lambda g: _family(g, critical_profile(g).max_crit),
)
_check(
    "g1-fig2222",
    "diadem-proper-subset-of-corona",
    True,
    "text: diadem(G1) ⊊ corona(G1)",
    lambda g: critical_profile(g).diadem != omega(g).corona and critical_profile(g).diadem & ~omega(g).corona == 0,
)
_check("g1-fig2222", "is-ke", False, "caption: not KE", is_ke)
_check("g2-fig2222", "core", _fs("x y z w"), "text: core(G2)={x,y,z,w}", _core)
_check("g2-fig2222", "core-critical", False, "text: core(G2) is not critical", lambda g: is_critical_set(g, omega(g).core))
_check("g2-fig2222", "is-ke", False, "caption: not KE", is_ke)

# fig51
_check("g-fig51", "core", _fs("v1 v2 v6 v10"), "caption: core(G)={v1,v2,v6,v10}", _core)
_check("g-fig51", "d-core", 1, "caption: d(core(G))=1", lambda g: difference(g, omega(g).core))
_check("g-fig51", "d", 1, "caption: d(G)=1", lambda g: critical_profile(g).d)
_check("g-fig51", "core-critical", True, "caption: core(G) is critical", lambda g: is_critical_set(g, omega(g).core))
_check("h-fig51", "core", _fs("a e"), "text: core(H)={a,e}", _core)
_check("h-fig51", "nucleus", _fs("a e"), "text: nucleus(H)={a,e}", lambda g: _names(g, critical_profile(g).nucleus))
_check("h-fig51", "corona", _fs("a e c d f"), "text: corona(H)={a,e,c,d,f}", _corona)
_check("h-fig51", "corona-critical", True, "text: corona(H) is critical", lambda g: is_critical_set(g, omega(g).corona))
_check("h-fig51", "diadem", _fs("a e"), "text: diadem(H)={a,e}", lambda g: _names(g, critical_profile(g).diadem))

# fig11 and fig111: (2α, |corona|+|core|, 2(|V|−μ))
for _fix, _b, _src in (
    ("g1-fig11", (4, 4, 6), "display: 4 = 4 < 6"),
    ("g2-fig11", (6, 8, 8), "display: 6 < 8 = 8"),
    ("g3-fig11", (12, 13, 14), "display: 12 < 13 < 14"),
    ("g1-fig111", (4, 4, 6), "display: 4 = 4 < 6"),
    ("g2-fig111", (6, 8, 8), "display: 6 < 8 = 8"),
    # printed upper bound is 11, which is odd and cannot equal 2(|V|−μ); 10 is the computed value
    ("g3-fig111", (8, 9, 10), "display: 8 < 9 < 2(|V|−μ)"),
):
    _check(_fix, "bounds", _b, _src, _bounds)
    _check(_fix, "is-ke", False, "caption: not KE", is_ke)

# fig244
_check("g1-fig244", "omega", frozenset({_fs("a b c"), _fs("a b d")}), "caption: Ω(G1)={{a,b,c},{a,b,d}}", lambda g: _family(g, omega(g).sets))
_check("g1-fig244", "f-omega", 6, "text: |∪Γ|+|∩Γ| = 2α(G)", lambda g: f_value(omega(g).sets))
_check("g1-fig244", "all-collections-ke", True, "text: every nonempty Γ ⊆ Ω satisfies f(Γ) = 2α", _all_collections_ke)
_check("g1-fig244", "is-ke", False, "text: not KE", is_ke)
# the caption prints Ω(G2) = {u,v}; it is the single set {u,v}
_check("g2-fig244", "omega", frozenset({_fs("u v")}), "caption: Ω(G2)={u,v}", lambda g: _family(g, omega(g).sets))
_check("g2-fig244", "all-collections-ke", True, "text: every nonempty Γ ⊆ Ω satisfies f(Γ) = 2α", _all_collections_ke)
_check("g2-fig244", "is-ke", False, "text: not KE", is_ke)
_check(
    "g2-fig244",
    "perfect-matching-theorem",
    "holds",
    "perfect matching statement with Γ = Ω",
    lambda g: check_perfect_matching_theorem(g, omega(g).sets).verdict.value,
)

# fig233
_check("g1-fig233", "alpha", 3, "caption: α(G1)=3", lambda g: omega(g).alpha)
_check("g1-fig233", "core", _fs("d"), "caption: core(G1)={d}", _core)
_check("g1-fig233", "corona", _fs("a b d f g"), "caption: corona(G1)={a,b,d,f,g}", _corona)
_check("g1-fig233", "f-omega", 6, "text: |corona|+|core| = 2α", lambda g: f_value(omega(g).sets))
_check("g1-fig233", "is-ke", False, "text: not KE", is_ke)
_check(
    "g1-fig233",
    "corona-matching-condition",
    False,
    "remark: the sum condition alone does not give KE",
    lambda g: matching_from_into(g, g.vertices & ~omega(g).corona, omega(g).core) is not None,
)
_check(
    "g1-fig233",
    "induced-corona-ke",
    True,
    "corollary: |corona|+|core| = 2α ⇒ G[corona] is KE",
    lambda g: is_ke(induced_subgraph(g, omega(g).corona)[0]),
)
_check(
    "g1-fig233",
    "perfect-matching-theorem",
    "holds",
    "perfect matching statement with Γ = Ω",
    lambda g: check_perfect_matching_theorem(g, omega(g).sets).verdict.value,
)
_check("g2-fig233", "core", _fs("u w"), "caption: core(G2)={u,w}", _core)
_check("g2-fig233", "outside-corona", _fs("v"), "caption: V(G2)−corona(G2)={v}", lambda g: _names(g, g.vertices & ~omega(g).corona))
_check("g2-fig233", "f-omega-is-2alpha", False, "remark: the matching condition alone does not give KE", lambda g: f_value(omega(g).sets) == 2 * omega(g).alpha)
_check(
    "g2-fig233",
    "corona-matching-condition",
    True,
    "remark: the matching condition alone does not give KE",
    lambda g: matching_from_into(g, g.vertices & ~omega(g).corona, omega(g).core) is not None,
)
_check("g2-fig233", "is-ke", False, "remark: not KE", is_ke)

# fig51111
_S = {
    "S1": "a e f x",
    "S2": "a e c x",
    "S3": "a e d y",
    "S4": "a e f y",
    "S5": "a e c y",
}
_check("g-fig51111", "omega", frozenset(_fs(s) for s in _S.values()), "text: S1..S5", lambda g: _family(g, omega(g).sets))
_check("g-fig51111", "core", _fs("a e"), "caption: core(G)={a,e}", _core)
_check("g-fig51111", "core-critical", True, "caption: core(G) is a critical set", lambda g: is_critical_set(g, omega(g).core))
_check("g-fig51111", "outside-S1-S2-S3", _fs("b"), "text: V−S1∪S2∪S3={b}", _outside_union(_S["S1"], _S["S2"], _S["S3"]))
_check("g-fig51111", "outside-S1-S4-S5", _fs("b d"), "text: V−S1∪S4∪S5={b,d}", _outside_union(_S["S1"], _S["S4"], _S["S5"]))
_check("g-fig51111", "matching-b-into-ae", True, "text: matching from {b} into {a,e}", _matching_exists("b", "a e"))
_check("g-fig51111", "matching-bd-into-ae", False, "text: no matching from {b,d} into {a,e}", _matching_exists("b d", "a e"))
_check("g-fig51111", "is-ke", False, "text: not KE", is_ke)

# remarks on complete graphs
for _n in (1, 2, 3):
    _check(f"k{2 * _n}", "bounds", (2, 2 * _n, 2 * _n), "remark: |corona|+|core| = 2n = 2(|V|−μ)", _bounds)
    _check(f"k{2 * _n}", "mu", _n, "remark: μ(K2n) = n", mu)
    _check(f"k{2 * _n}", "omega-size", 2 * _n, "remark: Ω(K2n) is the 2n singletons", lambda g: len(omega(g)))
# printed value 2+2n disagrees with the computed 2n+4; the equality with 2(|V|−μ) is what matters
_check("k5-two-pendants", "upper-bound-tight", True, "remark: |corona|+|core| = 2(|G|−μ(G))", lambda g: _bounds(g)[1] == _bounds(g)[2])


def run_fixtures() -> list[FixtureOutcome]:
    out = []
    for c in CHECKS:
        try:
            got = c.compute(FIXTURES[c.fixture])
        except Exception as exc:  # reported, never fatal
            got = f"error: {exc}"
        out.append(FixtureOutcome(c, got))
    return out


def describe(name: str) -> str:
    g = FIXTURES[name]
    return f"{name}: n={g.n} m={g.m} core={format_set(g, omega(g).core)}"
