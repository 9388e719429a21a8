"""t-representants of arbitrary graphs by deleting edges from K_n one at a time."""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import (
    Graph,
    OpenProblemError,
    UnrepresentableError,
    UnsupportedPatternError,
    WordRepError,
    as_word,
    final_permutation,
    initial_permutation,
    represents_11,
)
from .patterns import ShapeKind, as_pattern, classify_pattern, pair_avoids, represents_t

DEFAULT_MAX_VERTICES = 12


@dataclass(frozen=True)
class DeletionStep:
    edge: tuple
    segment: tuple
    where: str  # "append" | "prepend"


@dataclass
class DeletionTrace:
    start_word: tuple
    steps: list = field(default_factory=list)
    final_word: tuple = ()
    reversed: bool = False

    def replay(self) -> tuple:
        w = self.start_word
        for s in self.steps:
            w = w + s.segment if s.where == "append" else s.segment + w
        return w[::-1] if self.reversed else w


def substitute(t, i, j) -> tuple:
    """``t`` with a -> i and b -> j."""
    i, j = str(i), str(j)
    if i == j:
        raise WordRepError("substitution needs two distinct letters")
    return tuple(i if s == "a" else j for s in as_pattern(t).symbols)


def _check_edge(w, i, j, t):
    if not pair_avoids(w, i, j, t):
        raise WordRepError(f"{i}{j} is not an edge of the word's {as_pattern(t)}-graph")


def _check_shape(t, kind, ok):
    shape = classify_pattern(t)
    if shape.kind is not kind or not ok(shape):
        raise UnsupportedPatternError(f"pattern {as_pattern(t)} has shape {shape}")
    return shape


def delete_edge_akbla(w, i, j, t) -> tuple:
    """w, then each letter of reversed s(w) repeated l+1 times, then t[i,j]."""
    shape = _check_shape(t, ShapeKind.AKBLA, lambda s: True)
    w = as_word(w)
    _check_edge(w, i, j, t)
    block = tuple(x for x in reversed(final_permutation(w)) for _ in range(shape.l + 1))
    return w + block + substitute(t, i, j)


def delete_edge_akbl(w, i, j, t) -> tuple:
    _check_shape(t, ShapeKind.AKBL, lambda s: s.k >= 2 and s.l >= 2)
    w = as_word(w)
    _check_edge(w, i, j, t)
    return w + final_permutation(w) + substitute(t, i, j)


def delete_edge_akb(w, G: Graph, i, j, t) -> tuple:
    """i^(k-1) v i j p(w) w with v the ascending order of V(G) minus {i, j}."""
    shape = _check_shape(t, ShapeKind.AKB, lambda s: s.k >= 3)
    w = as_word(w)
    i, j = str(i), str(j)
    _check_edge(w, i, j, t)
    v = tuple(x for x in G.vertices if x not in (i, j))
    return (i,) * (shape.k - 1) + v + (i, j) + initial_permutation(w) + w


def aab_from_11(w) -> tuple:
    w = as_word(w)
    return w + final_permutation(w)


def build_t_representant(G: Graph, t, representant_11=None,
                         max_vertices=DEFAULT_MAX_VERTICES):
    """Return ``(word, trace)`` with ``word`` t-representing ``G``.

    Starts from the ascending permutation (which t-represents K_n) and deletes
    the non-edges of ``G`` in lexicographic order.  For a^2 b / a b^2 a known
    11-representant of ``G`` must be supplied.
    """
    t = as_pattern(t)
    shape = classify_pattern(t)
    if max_vertices is not None and G.n > max_vertices:
        raise WordRepError(f"graph has {G.n} vertices; the limit is {max_vertices}")
    start = tuple(G.vertices)

    if shape.kind is ShapeKind.ALL_SAME:
        raise UnsupportedPatternError(
            f"pattern {t} is a power of one letter; that is plain word-representability")
    if shape.kind is ShapeKind.OTHER:
        raise UnsupportedPatternError(f"no construction known for pattern {t}")

    if shape.kind is ShapeKind.AKB and shape.k == 1:
        if G.edges:
            raise UnrepresentableError("only empty graphs are ab-representable")
        return start, DeletionTrace(start, [], start)

    if shape.k == 2 and shape.kind in (ShapeKind.AKB, ShapeKind.ABK):
        if representant_11 is None:
            raise OpenProblemError(
                f"{t}-representability is open; supply a word-representant of the graph")
        w = as_word(representant_11)
        report = represents_11(w, G)
        if not report:
            raise WordRepError("the supplied word does not word-represent the graph")
        out = aab_from_11(w)
        trace = DeletionTrace(w, [DeletionStep((), final_permutation(w), "append")], out)
        if shape.kind is ShapeKind.ABK:
            out = out[::-1]
            trace.reversed = True
            trace.final_word = out
        return out, trace

    reverse = shape.kind is ShapeKind.ABK
    if reverse:
        base = as_pattern("a" * shape.k + "b")
        step = lambda w, i, j: delete_edge_akb(w, G, i, j, base)
    elif shape.kind is ShapeKind.AKBLA:
        step = lambda w, i, j: delete_edge_akbla(w, i, j, t)
    elif shape.kind is ShapeKind.AKBL:
        step = lambda w, i, j: delete_edge_akbl(w, i, j, t)
    else:
        step = lambda w, i, j: delete_edge_akb(w, G, i, j, t)

    prepends = reverse or shape.kind is ShapeKind.AKB
    w = start
    trace = DeletionTrace(start)
    for i, j in G.non_edges():
        new = step(w, i, j)
        if prepends:
            seg, where = new[:len(new) - len(w)], "prepend"
        else:
            seg, where = new[len(w):], "append"
        trace.steps.append(DeletionStep((i, j), seg, where))
        w = new
    if reverse:
        w = w[::-1]
        trace.reversed = True
    trace.final_word = w
    assert represents_t(w, G, t), f"construction failed for {t} on {G!r}"
    return w, trace
