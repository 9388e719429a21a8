"""Exhaustive search for minimal-length (optionally k-uniform) t-representants.

Words of each length L are visited in lexicographic order of vertex indices.
The search space at each length is split by first letter into independent
blocks, so any number of workers gives the same result.

Two engines sit behind the same contract:

* a depth-first search with sound pruning (the default), and
* a vectorised brute force over every word of length L (``prune=False``),
  kept deliberately dumb so the two can be checked against each other.

Pruning rules used by the depth-first search.  Each rejects only prefixes
none of whose completions can verify:

1. coverage: fewer free positions than vertices not yet used;
2. uniformity: a letter already used k times (uniform mode only);
3. edge violation: the restriction of the prefix to an edge pair already
   contains a factor isomorphic to the pattern.  Extending a word never
   removes a factor from a restriction, so the pair can never become an edge.
"""

from __future__ import annotations

import enum
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, product

import numpy as np

from .core import Graph, WordRepError
from .patterns import as_pattern, represents_t

DEFAULT_MAX_EXPLORED = 10**9
_CHUNK = 1 << 18


class Mode(enum.Enum):
    FIRST = "first"
    ALL_MINIMAL = "all"
    AT_LENGTH = "at-length"


@dataclass(frozen=True)
class SearchConfig:
    pattern: str = "aa"
    max_len: int | None = None
    uniform_k: int | None = None
    mode: Mode = Mode.ALL_MINIMAL
    length: int | None = None
    max_explored: int = DEFAULT_MAX_EXPLORED
    prune: bool = True
    workers: int = 1


@dataclass(frozen=True)
class SearchResult:
    ell: int | None
    words: tuple
    # depends on the engine, so it is left out of equality
    explored: int = field(default=0, compare=False)
    truncated: bool = False

    @property
    def count(self) -> int:
        return len(self.words)


class _Capped(Exception):
    pass


def _pattern_bits(t) -> tuple:
    return tuple(0 if s == "a" else 1 for s in as_pattern(t).symbols)


def _dfs_block(n, edge, pat, L, k, first, first_only, cap):
    """Pruned DFS over words of length L starting with letter ``first``.

    ``edge[u][v]`` says whether uv must be an edge.  Returns
    (hits, explored, capped).
    """
    m = len(pat)
    fast = pat == (0, 0)
    pid = [[0] * n for _ in range(n)]
    for p, (u, v) in enumerate(combinations(range(n), 2)):
        pid[u][v] = pid[v][u] = p
    npairs = n * (n - 1) // 2
    is_edge = [False] * npairs
    for u, v in combinations(range(n), 2):
        is_edge[pid[u][v]] = edge[u][v]
    non_edges = [p for p in range(npairs) if not is_edge[p]]
    others = [[pid[x][y] for y in range(n) if y != x] for x in range(n)]

    cont = [False] * npairs
    last = [-1] * npairs
    rest = [[] for _ in range(npairs)]
    counts = [0] * n
    word = []
    hits = []
    explored = 0
    missing = n

    def push(x):
        """Append x; return (undo info, violated-edge flag)."""
        changed = []
        bad = False
        if fast:
            saved = []
            for p in others[x]:
                saved.append(last[p])
                if last[p] == x and not cont[p]:
                    cont[p] = True
                    changed.append(p)
                    if is_edge[p]:
                        bad = True
                last[p] = x
            return (changed, saved), bad
        for p in others[x]:
            r = rest[p]
            r.append(x)
            if not cont[p] and len(r) >= m:
                w0 = r[-m]
                if all((c != w0) == b for c, b in zip(r[-m:], pat)):
                    cont[p] = True
                    changed.append(p)
                    if is_edge[p]:
                        bad = True
        return (changed, None), bad

    def pop(x, undo):
        changed, saved = undo
        for p in changed:
            cont[p] = False
        if fast:
            for p, s in zip(others[x], saved):
                last[p] = s
        else:
            for p in others[x]:
                rest[p].pop()

    def rec(depth):
        nonlocal explored, missing
        if depth == L:
            if all(cont[p] for p in non_edges):
                hits.append(tuple(word))
                if first_only:
                    return True
            return False
        remaining = L - depth
        for x in range(n) if depth else (first,):
            if k is not None and counts[x] >= k:
                continue
            new_missing = missing - (counts[x] == 0)
            if new_missing > remaining - 1:
                continue
            explored += 1
            if explored > cap:
                raise _Capped
            undo, bad = push(x)
            if not bad:
                counts[x] += 1
                word.append(x)
                saved_missing = missing
                missing = new_missing
                done = rec(depth + 1)
                missing = saved_missing
                word.pop()
                counts[x] -= 1
                if done:
                    pop(x, undo)
                    return True
            pop(x, undo)
        return False

    try:
        rec(0)
    except _Capped:
        return hits, explored, True
    return hits, explored, False


def _contains_matrix(W, u, v, pat):
    """Boolean vector: restriction of each row of W to {u, v} contains ``pat``."""
    N, L = W.shape
    m = len(pat)
    found = np.zeros(N, dtype=bool)
    if m == 2 and pat == (0, 0):
        last = np.full(N, -1, dtype=np.int16)
        for j in range(L):
            c = W[:, j]
            hit = (c == u) | (c == v)
            found |= hit & (last == c)
            last = np.where(hit, c, last)
        return found
    hist = np.full((N, m), -1, dtype=np.int16)
    want = np.array(pat, dtype=bool)
    for j in range(L):
        c = W[:, j]
        hit = (c == u) | (c == v)
        hist[hit, :-1] = hist[hit, 1:]
        hist[hit, -1] = c[hit]
        full = hist[:, 0] >= 0
        prof = hist != hist[:, :1]
        found |= hit & full & (prof == want).all(axis=1)
    return found


def _brute_block(n, edge, pat, L, k, first, first_only, cap):
    """Check every word of length L starting with ``first``; no pruning."""
    hits = []
    explored = 0
    free = L - 1
    s = 0
    while s < free and n ** (s + 1) <= _CHUNK:
        s += 1
    grid = np.array(list(product(range(n), repeat=s)), dtype=np.int16).reshape(n ** s, s)
    for prefix in product(range(n), repeat=free - s):
        N = grid.shape[0]
        if explored + N > cap:
            return hits, cap, True
        explored += N
        head = np.tile(np.array((first,) + prefix, dtype=np.int16), (N, 1))
        W = np.hstack([head, grid])
        ok = np.ones(N, dtype=bool)
        for v in range(n):
            cnt = (W == v).sum(axis=1)
            ok &= cnt == k if k is not None else cnt > 0
        for u, v in combinations(range(n), 2):
            if not ok.any():
                break
            ok &= _contains_matrix(W, u, v, pat) != edge[u][v]
        rows = [tuple(int(c) for c in row) for row in W[ok]]
        if first_only and rows:
            return rows[:1], explored, False
        hits += rows
    return hits, explored, False


def _run_block(args):
    engine, rest = args
    return (_dfs_block if engine == "dfs" else _brute_block)(*rest)


def _lengths(G: Graph, cfg: SearchConfig):
    n = G.n
    if cfg.uniform_k is not None:
        if cfg.uniform_k < 1:
            raise WordRepError("uniformity k must be positive")
        L = cfg.uniform_k * n
        if cfg.max_len is not None and L > cfg.max_len:
            raise WordRepError(f"k-uniform length {L} exceeds max_len {cfg.max_len}")
        if cfg.mode is Mode.AT_LENGTH and cfg.length not in (None, L):
            raise WordRepError(f"a {cfg.uniform_k}-uniform word over {n} letters has length {L}")
        return [L]
    if cfg.mode is Mode.AT_LENGTH:
        if cfg.length is None:
            raise WordRepError("AT_LENGTH mode needs a length")
        return [cfg.length]
    max_len = 2 * n if cfg.max_len is None else cfg.max_len
    if max_len < n:
        raise WordRepError(f"max_len {max_len} is below the vertex count {n}")
    return list(range(n, max_len + 1))


def search_min_representants(G: Graph, cfg: SearchConfig | None = None) -> SearchResult:
    """Search for minimal t-representants of ``G`` under ``cfg``."""
    cfg = cfg or SearchConfig()
    n = G.n
    if n < 1:
        raise WordRepError("the graph has no vertices")
    pat = _pattern_bits(cfg.pattern)
    edge = [[G.has_edge(u, v) for v in G.vertices] for u in G.vertices]
    engine = "dfs" if cfg.prune else "brute"
    first_only = cfg.mode is Mode.FIRST
    explored = 0
    pool = ProcessPoolExecutor(cfg.workers) if cfg.workers > 1 else None
    try:
        for L in _lengths(G, cfg):
            cap = cfg.max_explored - explored
            jobs = [(engine, (n, edge, pat, L, cfg.uniform_k, f, first_only, cap))
                    for f in range(n)]
            results = pool.map(_run_block, jobs) if pool else map(_run_block, jobs)
            hits, truncated = [], False
            for block_hits, block_explored, capped in results:
                explored += block_explored
                hits += block_hits
                truncated |= capped
                if first_only and block_hits:
                    hits = hits[:1]
                    break
                if truncated:
                    break
            if truncated:
                return SearchResult(None, _to_words(G, hits), explored, True)
            if hits or cfg.mode is Mode.AT_LENGTH:
                return SearchResult(L if hits else None, _to_words(G, hits, cfg), explored)
    finally:
        if pool:
            pool.shutdown()
    return SearchResult(None, (), explored)


def _to_words(G: Graph, hits, cfg: SearchConfig | None = None) -> tuple:
    words = sorted((tuple(G.vertices[i] for i in h) for h in hits), key=G.sort_key)
    if cfg is not None:
        for w in words:
            if not represents_t(w, G, cfg.pattern):
                raise AssertionError(f"oracle produced a non-representant {w}")
    return tuple(words)


def oracle_ell(G: Graph, pattern="aa", **kw) -> int | None:
    cfg = SearchConfig(pattern=pattern, mode=Mode.FIRST, **kw)
    return search_min_representants(G, cfg).ell


def count_uniform_representants(G: Graph, k: int, pattern="aa", **kw):
    """All k-uniform t-representants of ``G``, as ``(count, words)``."""
    cfg = SearchConfig(pattern=pattern, uniform_k=k, mode=Mode.AT_LENGTH, **kw)
    res = search_min_representants(G, cfg)
    if res.truncated:
        raise WordRepError("search budget exhausted before the count was complete")
    return len(res.words), res.words
