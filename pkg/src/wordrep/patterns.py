"""Pattern isomorphism, containment and t-induced graphs."""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from itertools import combinations

from .core import (
    Graph,
    RepresentationReport,
    WordRepError,
    alphabet,
    as_word,
    compare_pairs,
    restrict,
)

_PATTERN_RE = re.compile(r"[ab12]+")


@dataclass(frozen=True)
class Pattern:
    """A word over {a, b}.

    ``symbols`` is the canonical spelling (first symbol relabelled to ``a``);
    ``raw`` keeps the spelling as given, which the Kitaev variant needs.
    """

    symbols: str
    raw: str

    @classmethod
    def parse(cls, text) -> Pattern:
        if isinstance(text, Pattern):
            return text
        text = str(text).strip()
        if not _PATTERN_RE.fullmatch(text):
            raise WordRepError(f"bad pattern {text!r}: expected letters from 'ab' or '12'")
        if set(text) & set("ab") and set(text) & set("12"):
            raise WordRepError(f"bad pattern {text!r}: mixes the a/b and 1/2 spellings")
        raw = text.translate(str.maketrans("12", "ab"))
        if raw[0] == "b":
            symbols = raw.translate(str.maketrans("ab", "ba"))
        else:
            symbols = raw
        return cls(symbols, raw)

    def __str__(self):
        return self.symbols

    def __len__(self):
        return len(self.symbols)

    @property
    def distinct(self) -> int:
        return len(set(self.symbols))


def as_pattern(t) -> Pattern:
    return Pattern.parse(t)


class ShapeKind(enum.Enum):
    ALL_SAME = "a^k"
    AKB = "a^k b"
    ABK = "a b^k"
    AKBL = "a^k b^l"
    AKBLA = "a^k b^l a"
    OTHER = "other"


@dataclass(frozen=True)
class PatternShape:
    kind: ShapeKind
    k: int | None = None
    l: int | None = None

    def __str__(self):
        if self.kind is ShapeKind.OTHER:
            return "other"
        if self.l is None:
            return f"{self.kind.name}({self.k})"
        return f"{self.kind.name}({self.k},{self.l})"


def classify_pattern(t) -> PatternShape:
    """Classify ``t`` (canonical spelling) into one of the handled shapes.

    ``ab`` is reported as AKB(1); ABK is used only for k >= 2.
    """
    s = as_pattern(t).symbols
    runs = [(m.group(0)[0], len(m.group(0))) for m in re.finditer(r"a+|b+", s)]
    if len(runs) == 1:
        return PatternShape(ShapeKind.ALL_SAME, runs[0][1])
    if len(runs) == 2:
        (_, k), (_, l) = runs
        if l == 1:
            return PatternShape(ShapeKind.AKB, k)
        if k == 1:
            return PatternShape(ShapeKind.ABK, l)
        return PatternShape(ShapeKind.AKBL, k, l)
    if len(runs) == 3 and runs[2][1] == 1:
        return PatternShape(ShapeKind.AKBLA, runs[0][1], runs[1][1])
    return PatternShape(ShapeKind.OTHER)


def _profile(seq) -> tuple:
    first = {}
    return tuple(first.setdefault(x, len(first)) for x in seq)


def is_isomorphic(u, v) -> bool:
    """Positionwise equality profiles of ``u`` and ``v`` agree."""
    u, v = as_word(u), as_word(v)
    return len(u) == len(v) and _profile(u) == _profile(v)


def _find_factor(r, target_profile) -> tuple | None:
    m = len(target_profile)
    for i in range(len(r) - m + 1):
        window = r[i:i + m]
        if _profile(window) == target_profile:
            return window
    return None


def contains(w, u) -> bool:
    """Some restriction of ``w`` to |alphabet(u)| letters has a factor isomorphic to ``u``.

    ``u`` may be a Pattern (or pattern string) or an arbitrary word.
    """
    w = as_word(w)
    if isinstance(u, Pattern):
        u = tuple(u.symbols)
    else:
        u = as_word(u)
    if not u:
        return True
    prof = _profile(u)
    size = len(set(u))
    for S in combinations(alphabet(w), size):
        if _find_factor(restrict(w, S), prof) is not None:
            return True
    return False


def offending_factor(r, t) -> tuple | None:
    """First factor of ``r`` isomorphic to the pattern ``t``, if any."""
    return _find_factor(tuple(r), _profile(as_pattern(t).symbols))


def pair_avoids(w, x, y, t) -> bool:
    w = as_word(w)
    x, y = str(x), str(y)
    if x == y:
        raise WordRepError("pair_avoids needs two distinct letters")
    for z in (x, y):
        if z not in w:
            raise WordRepError(f"letter {z!r} does not occur in the word")
    return offending_factor(restrict(w, (x, y)), t) is None


def induced_graph_t(w, t) -> Graph:
    w = as_word(w)
    prof = _profile(as_pattern(t).symbols)
    letters = alphabet(w)
    return Graph(letters, [(x, y) for x, y in combinations(letters, 2)
                           if _find_factor(restrict(w, (x, y)), prof) is None])


def represents_t(w, G: Graph, t) -> RepresentationReport:
    prof = _profile(as_pattern(t).symbols)
    return compare_pairs(w, G, lambda r: _find_factor(r, prof))


def _natural_key(label: str):
    return (0, int(label), "") if label.isdigit() else (1, 0, label)


def _order_matches(window, lo, hi, raw) -> bool:
    # order-isomorphism: pattern letter a is the smaller vertex, b the larger
    if len(set(window)) != len(set(raw)):
        return False
    if len(set(raw)) == 1:
        return True
    return all((c == lo) == (s == "a") for c, s in zip(window, raw))


def kitaev_offending_factor(r, lo, hi, u) -> tuple | None:
    raw = as_pattern(u).raw
    m = len(raw)
    for i in range(len(r) - m + 1):
        window = tuple(r[i:i + m])
        if _order_matches(window, lo, hi, raw):
            return window
    return None


def kitaev_induced_graph(w, u, order=None) -> Graph:
    """Graph where ``x < y`` are adjacent iff w|xy has no factor order-isomorphic to ``u``.

    ``order`` fixes the vertex ordering (e.g. a graph's declaration order);
    by default labels are sorted numerically when they are all digits.
    """
    w = as_word(w)
    letters = alphabet(w)
    if order is None:
        ranked = sorted(letters, key=_natural_key)
    else:
        order = [str(v) for v in order]
        missing = set(letters) - set(order)
        if missing:
            raise WordRepError(f"letters {sorted(missing)} missing from the vertex order")
        ranked = [v for v in order if v in set(letters)]
    edges = []
    for lo, hi in combinations(ranked, 2):
        if kitaev_offending_factor(restrict(w, (lo, hi)), lo, hi, u) is None:
            edges.append((lo, hi))
    return Graph(ranked, edges)


def represents_kitaev(w, G: Graph, u) -> RepresentationReport:
    """Kitaev-variant verification using ``G``'s declaration order."""
    rank = {v: i for i, v in enumerate(G.vertices)}

    def offending(r):
        pair = sorted(set(r), key=rank.__getitem__)
        if len(pair) < 2:
            return None
        return kitaev_offending_factor(r, pair[0], pair[1], u)

    return compare_pairs(w, G, offending)
