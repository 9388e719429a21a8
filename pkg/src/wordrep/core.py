"""Words, graphs and the primitive word operations.

A word is a tuple of vertex labels (strings).  Most functions also accept a
plain string, in which case every character is one label, or a
whitespace-separated string of tokens.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence


class WordRepError(ValueError):
    """Base class for all errors raised by this package."""


class NotATreeError(WordRepError):
    pass


class UnsupportedPatternError(WordRepError):
    pass


class OpenProblemError(UnsupportedPatternError):
    """The pattern shape has no known construction (a^2 b / a b^2)."""


class UnrepresentableError(WordRepError):
    pass


def as_word(w) -> tuple:
    """Coerce ``w`` to a tuple of string labels.

    >>> as_word("212434")
    ('2', '1', '2', '4', '3', '4')
    >>> as_word("10 2 10")
    ('10', '2', '10')
    """
    if isinstance(w, str):
        if any(ch.isspace() for ch in w):
            return tuple(w.split())
        return tuple(w)
    return tuple(str(x) for x in w)


def format_word(w) -> str:
    w = as_word(w)
    if all(len(x) == 1 for x in w):
        return "".join(w)
    return " ".join(w)


def alphabet(w) -> tuple:
    """Distinct letters of ``w`` in order of first occurrence."""
    return tuple(dict.fromkeys(as_word(w)))


def _label_set(S) -> set:
    if isinstance(S, str):
        return set(as_word(S))
    return {str(x) for x in S}


# ---------------------------------------------------------------------------
# Graphs
# ---------------------------------------------------------------------------


class Graph:
    """Simple undirected graph over string labels.

    Vertex order is the order of first declaration: explicitly listed vertices
    first, then edge endpoints as they appear.  Equality ignores that order.
    """

    __slots__ = ("vertices", "edges", "_index", "_adj")

    def __init__(self, vertices: Iterable = (), edges: Iterable = ()):
        order = dict.fromkeys(str(v) for v in vertices)
        edge_set = set()
        for e in edges:
            u, v = (str(x) for x in e)
            if u == v:
                raise WordRepError(f"self-loop on vertex {u!r}")
            order.setdefault(u)
            order.setdefault(v)
            edge_set.add(frozenset((u, v)))
        for v in order:
            if not v or any(ch.isspace() for ch in v):
                raise WordRepError(f"invalid vertex label {v!r}")
        self.vertices = tuple(order)
        self.edges = frozenset(edge_set)
        self._index = {v: i for i, v in enumerate(self.vertices)}
        adj = {v: set() for v in self.vertices}
        for e in self.edges:
            u, v = tuple(e)
            adj[u].add(v)
            adj[v].add(u)
        self._adj = adj

    def __repr__(self):
        es = ", ".join(f"{u}{v}" if len(u) == len(v) == 1 else f"{u}-{v}"
                       for u, v in self.edge_list())
        return f"Graph(V={list(self.vertices)}, E=[{es}])"

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return set(self.vertices) == set(other.vertices) and self.edges == other.edges

    def __hash__(self):
        return hash((frozenset(self.vertices), self.edges))

    def __len__(self):
        return len(self.vertices)

    @property
    def n(self) -> int:
        return len(self.vertices)

    def index(self, v) -> int:
        return self._index[v]

    def __contains__(self, v) -> bool:
        return v in self._index

    def has_edge(self, u, v) -> bool:
        return frozenset((u, v)) in self.edges

    def neighbors(self, v) -> list:
        return sorted(self._adj[v], key=self._index.__getitem__)

    def degree(self, v) -> int:
        return len(self._adj[v])

    def edge_list(self) -> list[tuple[str, str]]:
        """Edges as ordered pairs, sorted by canonical vertex order."""
        idx = self._index
        out = []
        for e in self.edges:
            u, v = sorted(e, key=idx.__getitem__)
            out.append((u, v))
        out.sort(key=lambda p: (idx[p[0]], idx[p[1]]))
        return out

    def pairs(self):
        """All unordered vertex pairs in canonical lexicographic order."""
        return combinations(self.vertices, 2)

    def non_edges(self) -> list[tuple[str, str]]:
        return [(u, v) for u, v in self.pairs() if not self.has_edge(u, v)]

    def subgraph(self, vs) -> Graph:
        keep = set(vs)
        verts = [v for v in self.vertices if v in keep]
        return Graph(verts, [e for e in self.edges if e <= keep])

    def components(self) -> list[Graph]:
        seen = set()
        comps = []
        for s in self.vertices:
            if s in seen:
                continue
            stack, comp = [s], set()
            while stack:
                v = stack.pop()
                if v in comp:
                    continue
                comp.add(v)
                stack.extend(self._adj[v] - comp)
            seen |= comp
            comps.append(self.subgraph(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n > 0 and len(self.components()) == 1

    def is_tree(self) -> bool:
        return self.n >= 1 and len(self.edges) == self.n - 1 and self.is_connected()

    def is_triangle_free(self) -> bool:
        for u, v in self.edge_list():
            if self._adj[u] & self._adj[v]:
                return False
        return True

    def relabel(self, mapping) -> Graph:
        return Graph([mapping[v] for v in self.vertices],
                     [(mapping[u], mapping[v]) for u, v in self.edge_list()])

    def sort_key(self, w) -> tuple:
        """Key ordering words lexicographically by canonical vertex order."""
        return tuple(self._index[x] for x in w)


def _labels(n: int) -> list[str]:
    return [str(i) for i in range(1, n + 1)]


def path_graph(k: int) -> Graph:
    vs = _labels(k)
    return Graph(vs, zip(vs, vs[1:]))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise WordRepError("a cycle needs at least 3 vertices")
    vs = _labels(n)
    return Graph(vs, list(zip(vs, vs[1:])) + [(vs[-1], vs[0])])


def star_graph(k: int) -> Graph:
    """K_{1,k} with center "1" and leaves "2".."k+1"."""
    vs = _labels(k + 1)
    return Graph(vs, [("1", v) for v in vs[1:]])


def complete_graph(n: int) -> Graph:
    vs = _labels(n)
    return Graph(vs, combinations(vs, 2))


def empty_graph(n: int) -> Graph:
    return Graph(_labels(n))


# ---------------------------------------------------------------------------
# Word primitives
# ---------------------------------------------------------------------------


def restrict(w, S) -> tuple:
    """Subsequence of ``w`` keeping only letters in ``S``."""
    keep = _label_set(S)
    return tuple(x for x in as_word(w) if x in keep)


def initial_permutation(w) -> tuple:
    w = as_word(w)
    if not w:
        raise WordRepError("initial permutation of the empty word")
    return alphabet(w)


def final_permutation(w) -> tuple:
    w = as_word(w)
    if not w:
        raise WordRepError("final permutation of the empty word")
    return alphabet(w[::-1])[::-1]


def reverse_word(w) -> tuple:
    return as_word(w)[::-1]


def alternates(w, x, y) -> bool:
    """True iff ``x`` and ``y`` alternate in ``w``.

    Both letters must occur in ``w``; alternation is undefined otherwise.
    """
    w = as_word(w)
    x, y = str(x), str(y)
    if x == y:
        raise WordRepError("alternation needs two distinct letters")
    r = restrict(w, (x, y))
    if x not in r or y not in r:
        raise WordRepError(f"letter {x if x not in r else y!r} does not occur in the word")
    return all(a != b for a, b in zip(r, r[1:]))


@dataclass(frozen=True)
class UniformityReport:
    is_uniform: bool
    k: int | None = None


def uniformity(w) -> UniformityReport:
    w = as_word(w)
    if not w:
        raise WordRepError("uniformity of the empty word")
    counts = set(Counter(w).values())
    if len(counts) == 1:
        return UniformityReport(True, counts.pop())
    return UniformityReport(False)


def induced_graph_11(w) -> Graph:
    w = as_word(w)
    letters = alphabet(w)
    return Graph(letters, [(x, y) for x, y in combinations(letters, 2)
                           if alternates(w, x, y)])


# ---------------------------------------------------------------------------
# Verification reports
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Witness:
    """Evidence for one mismatched pair.

    ``factor`` is the offending factor of the restriction, or None when the
    restriction avoids the pattern (a spurious edge).
    """
    pair: tuple
    restriction: tuple
    factor: tuple | None


@dataclass(frozen=True)
class RepresentationReport:
    ok: bool
    missing_vertices: tuple = ()
    extra_letters: tuple = ()
    spurious_edges: tuple = ()
    missing_edges: tuple = ()
    witnesses: tuple = field(default=(), repr=False)

    def __bool__(self):
        return self.ok

    @property
    def verdict(self) -> str:
        return "represents" if self.ok else "fails"

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "missing_vertices": list(self.missing_vertices),
            "extra_letters": list(self.extra_letters),
            "spurious_edges": [list(p) for p in self.spurious_edges],
            "missing_edges": [list(p) for p in self.missing_edges],
            "witnesses": [
                {"pair": list(wi.pair),
                 "restriction": format_word(wi.restriction),
                 "factor": None if wi.factor is None else format_word(wi.factor)}
                for wi in self.witnesses
            ],
        }


def _first_repeat(r: Sequence) -> tuple | None:
    for a, b in zip(r, r[1:]):
        if a == b:
            return (a, b)
    return None


def compare_pairs(w, G: Graph, offending) -> RepresentationReport:
    """Build a report given ``offending(restriction) -> factor or None``.

    A pair is an edge of the word's graph exactly when ``offending`` finds
    nothing in its restriction.
    """
    w = as_word(w)
    present = set(w)
    missing_vertices = tuple(v for v in G.vertices if v not in present)
    extra = tuple(x for x in alphabet(w) if x not in G)
    spurious, missing, witnesses = [], [], []
    for x, y in G.pairs():
        if x not in present or y not in present:
            continue
        r = restrict(w, (x, y))
        factor = offending(r)
        is_edge = G.has_edge(x, y)
        if factor is None and not is_edge:
            spurious.append((x, y))
            witnesses.append(Witness((x, y), r, None))
        elif factor is not None and is_edge:
            missing.append((x, y))
            witnesses.append(Witness((x, y), r, factor))
    ok = not (missing_vertices or extra or spurious or missing)
    return RepresentationReport(ok, missing_vertices, extra, tuple(spurious),
                                tuple(missing), tuple(witnesses))


def represents_11(w, G: Graph) -> RepresentationReport:
    return compare_pairs(w, G, _first_repeat)
