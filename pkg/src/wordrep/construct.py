"""Minimal-length word-representants of trees, stars, cycles and forests."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from math import factorial, prod

from .core import (
    Graph,
    NotATreeError,
    WordRepError,
    as_word,
    cycle_graph,
    final_permutation,
)


@dataclass(frozen=True)
class TreeSplit:
    edge: tuple
    side_x: Graph
    side_y: Graph


@dataclass(frozen=True)
class MinRepSummary:
    ell: int
    count: int


def _require_tree(T: Graph, min_n: int = 1) -> None:
    if not T.is_tree():
        raise NotATreeError(f"not a tree: {T!r}")
    if T.n < min_n:
        raise NotATreeError(f"tree needs at least {min_n} vertices, got {T.n}")


def split_tree_at_edge(T: Graph, x, y) -> TreeSplit:
    """The two components of ``T`` minus the edge ``xy``."""
    _require_tree(T, 2)
    x, y = str(x), str(y)
    if not T.has_edge(x, y):
        raise WordRepError(f"{x}{y} is not an edge of the tree")
    cut = Graph(T.vertices, [e for e in T.edge_list() if set(e) != {x, y}])
    side_x = side_y = None
    for comp in cut.components():
        if x in comp:
            side_x = comp
        if y in comp:
            side_y = comp
    return TreeSplit((x, y), side_x, side_y)


# ---------------------------------------------------------------------------
# Single constructions
# ---------------------------------------------------------------------------


def tree_min_representant(T: Graph) -> tuple:
    """A word of length 2n-2 representing the tree ``T`` (n >= 2).

    Leaves are peeled off latest-in-canonical-order first; then each is put
    back by replacing the leftmost occurrence of its parent b with ``a b a``.
    """
    _require_tree(T, 2)
    adj = {v: set(T.neighbors(v)) for v in T.vertices}
    alive = list(T.vertices)
    removed = []
    while len(alive) > 2:
        leaf = next(v for v in reversed(alive) if len(adj[v]) == 1)
        (parent,) = adj[leaf]
        adj[parent].discard(leaf)
        alive.remove(leaf)
        removed.append((leaf, parent))
    w = list(alive)
    for leaf, parent in reversed(removed):
        i = w.index(parent)
        w[i:i + 1] = [leaf, parent, leaf]
    return tuple(w)


def ell_cycle(n: int) -> int:
    if n < 3:
        raise WordRepError("a cycle needs at least 3 vertices")
    return 3 if n == 3 else 2 * n - 2


def cycle_min_representant(n: int) -> tuple:
    """Minimal word-representant of C_n on labels 1..n (i adjacent to i+1 and n to 1)."""
    if n < 3:
        raise WordRepError("a cycle needs at least 3 vertices")
    if n == 3:
        return ("1", "2", "3")
    firsts = [n] + list(range(n - 1, 1, -1))
    seconds = [1] + list(range(n, 2, -1))
    out = []
    for a, b in zip(firsts, seconds):
        out += [str(a), str(b)]
    return tuple(out)


def star_min_representants(k: int, center="1", leaves=None) -> list[tuple]:
    """All 2*k! minimal representants of the star with ``k`` leaves.

    Default labelling: center "1", leaves "2".."k+1".
    """
    if k < 1:
        raise WordRepError("a star needs at least one leaf")
    center = str(center)
    if leaves is None:
        leaves = [str(i) for i in range(2, k + 2)]
    leaves = [str(v) for v in leaves]
    if len(leaves) != k:
        raise WordRepError(f"expected {k} leaf labels, got {len(leaves)}")
    words = []
    for single in leaves:
        rest = [v for v in leaves if v != single]
        for p in permutations(rest):
            core = list(p) + [center] + list(reversed(p))
            words.append(tuple([single] + core))
            words.append(tuple(core + [single]))
    G = Graph([center] + leaves)
    return sorted(words, key=G.sort_key)


def compose_components(words) -> tuple:
    """Join representants of disjoint components as w1 s(w1) w2 s(w2) ... wk.

    The caller puts a component with the most vertices last to get the
    shortest result.
    """
    words = [as_word(w) for w in words]
    if not words:
        return ()
    seen = set()
    for w in words:
        letters = set(w)
        if letters & seen:
            raise WordRepError(f"component alphabets overlap on {sorted(letters & seen)}")
        seen |= letters
    out = []
    for w in words[:-1]:
        out += w
        out += final_permutation(w)
    out += words[-1]
    return tuple(out)


def composition_bound(parts) -> int:
    """Upper bound on ell(G) from (ell(G_i), |V_i|) of the components."""
    parts = list(parts)
    return sum(e + v for e, v in parts) - max(v for _, v in parts)


# ---------------------------------------------------------------------------
# Counting
# ---------------------------------------------------------------------------


def count_tree_min(T: Graph) -> int:
    """Number of minimal-length representants of a tree, in exact integers."""
    _require_tree(T, 2)
    deg = {v: T.degree(v) for v in T.vertices}
    total = prod(factorial(d) for d in deg.values())
    acc = 0
    for x, y in T.edge_list():
        q, r = divmod(total, deg[x] * deg[y])
        assert r == 0
        acc += q
    return 2 * acc


def count_path_min(k: int) -> int:
    if k < 3:
        raise WordRepError("the path formula needs k >= 3")
    return (k + 1) * 2 ** (k - 3)


def count_cycle_min(n: int) -> int:
    if n < 3:
        raise WordRepError("a cycle needs at least 3 vertices")
    return 2 * n


def tree_summary(T: Graph) -> MinRepSummary:
    return MinRepSummary(2 * T.n - 2, count_tree_min(T))


def cycle_summary(n: int) -> MinRepSummary:
    return MinRepSummary(ell_cycle(n), count_cycle_min(n))


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------


def _insert_children(words, z, children, n_occ):
    """Every way of nesting pairs of ``children`` around the occurrences of ``z``.

    Each child goes tightly around an occurrence of ``z`` or around one of the
    children already nested there, so the block around an occurrence stays a
    palindrome  c_m .. c_1 z c_1 .. c_m.
    """
    states = [(list(w), [0] * n_occ) for w in words]
    for c in children:
        nxt = []
        for w, depth in states:
            occ = [i for i, v in enumerate(w) if v == z]
            for o, p in enumerate(occ):
                for j in range(depth[o] + 1):
                    new = w[:p - j] + [c] + w[p - j:p + j + 1] + [c] + w[p + j + 1:]
                    d = list(depth)
                    d[o] += 1
                    nxt.append((new, d))
        states = nxt
    return [w for w, _ in states]


def side_words(side: Graph, root) -> list[tuple]:
    """Representants of ``side`` where ``root`` occurs once and every other vertex twice."""
    root = str(root)
    words = [[root]]
    parent = {root: None}
    queue = [root]
    while queue:
        z = queue.pop(0)
        children = [c for c in side.neighbors(z) if c != parent[z]]
        for c in children:
            parent[c] = z
        queue += children
        if children:
            words = _insert_children(words, z, children, 1 if z == root else 2)
    return [tuple(w) for w in words]


def enumerate_tree_min_representants(T: Graph) -> list[tuple]:
    """All minimal-length representants of a tree, canonically sorted."""
    _require_tree(T, 2)
    out = []
    for x, y in T.edge_list():
        split = split_tree_at_edge(T, x, y)
        wx = side_words(split.side_x, x)
        wy = side_words(split.side_y, y)
        for a in wx:
            for b in wy:
                out.append(a + b)
                out.append(b + a)
    if len(set(out)) != len(out):
        raise AssertionError("tree enumerator produced duplicate words")
    return sorted(out, key=T.sort_key)


def cycle_completion(n: int, first, second) -> tuple:
    """The unique minimal representant of C_n (n >= 4) whose single letters are
    ``first`` then ``second`` (an edge of the cycle).

    Walking the cycle from ``second`` away from ``first`` gives p1, p2, ...;
    p1 surrounds ``second``, each later p_i tightly surrounds the leftmost
    p_{i-1}, and the last one surrounds ``first`` and the leftmost p_{i-1}.
    """
    if n < 4:
        raise WordRepError("completion is defined for n >= 4")
    C = cycle_graph(n)
    first, second = str(first), str(second)
    if not C.has_edge(first, second):
        raise WordRepError(f"{first}{second} is not an edge of C_{n}")
    path = [second]
    prev = first
    while len(path) < n - 1:
        nxt = next(v for v in C.neighbors(path[-1]) if v != prev)
        prev = path[-1]
        path.append(nxt)
    ps = path[1:]
    w = [first, second]
    i = w.index(second)
    w[i:i + 1] = [ps[0], second, ps[0]]
    for a, b in zip(ps[1:-1], ps):
        i = w.index(b)
        w[i:i + 1] = [a, b, a]
    last, before = ps[-1], ps[-2]
    i = w.index(before)
    w.insert(i + 1, last)
    w.insert(0, last)
    return tuple(w)


def enumerate_cycle_min_representants(n: int) -> list[tuple]:
    C = cycle_graph(n)
    if n == 3:
        words = list(permutations(C.vertices))
    else:
        words = []
        for u, v in C.edge_list():
            words.append(cycle_completion(n, u, v))
            words.append(cycle_completion(n, v, u))
    return sorted(words, key=C.sort_key)
