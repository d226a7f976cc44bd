"""Greedy and ordinary m-Tamari posets on D_{m,n}.

Covers are computed by word surgery: at each valley ``0 1`` the down step
is swapped with an m-Dyck factor starting at the following up step.  The
greedy order takes the longest such factor, the ordinary order the
shortest one.  Every cover makes the word lexicographically larger, so
node indices in enumeration order form a topological order of the Hasse
diagram; reachability and longest chains exploit this.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass
from math import factorial, prod
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .paths import (
    DyckWord,
    PathStats,
    compose,
    decompose,
    delete_last_peak,
    enumerate_paths,
    factorize,
    first_factor,
    insert_peak,
    last_up_height,
    star,
    star_fold,
    stats,
)


class Flavor(str, enum.Enum):
    GREEDY = "greedy"
    ORDINARY = "ordinary"


def _factor_end(word: str, start: int, m: int, longest: bool) -> int:
    """End (exclusive) of the longest/shortest nonempty Dyck factor at ``start``."""
    h = 0
    end = -1
    for pos in range(start, len(word)):
        h += m if word[pos] == "1" else -1
        if h < 0:
            break
        if h == 0:
            end = pos + 1
            if not longest:
                break
    return end


def _covers(w: DyckWord, longest: bool) -> List[DyckWord]:
    word, m = w.word, w.m
    out = []
    for p in range(len(word) - 1):
        if word[p] == "0" and word[p + 1] == "1":
            end = _factor_end(word, p + 1, m, longest)
            out.append(DyckWord._trusted(m, word[:p] + word[p + 1:end] + "0" + word[end:]))
    return out


def greedy_covers(w: DyckWord) -> List[DyckWord]:
    return _covers(w, longest=True)


def ordinary_covers(w: DyckWord) -> List[DyckWord]:
    return _covers(w, longest=False)


def covers(w: DyckWord, flavor: Flavor | str) -> List[DyckWord]:
    return _covers(w, longest=Flavor(flavor) is Flavor.GREEDY)


@dataclass
class IntervalRecord:
    lower: DyckWord
    upper: DyckWord
    d_upper: int
    contacts_lower: int
    first_ascent_upper: int
    ascent_profile_upper: Tuple[int, ...]
    chain_length: Optional[int] = None

    @property
    def size(self) -> int:
        return self.upper.n

    def to_json(self) -> dict:
        return {
            "m": self.lower.m,
            "lower": self.lower.word,
            "upper": self.upper.word,
            "d_upper": self.d_upper,
            "contacts_lower": self.contacts_lower,
            "first_ascent_upper": self.first_ascent_upper,
            "ascent_profile_upper": list(self.ascent_profile_upper),
            "chain_length": self.chain_length,
        }


class CoverGraph:
    """Hasse diagram of D_{m,n} for one flavor, with lazy reachability."""

    def __init__(self, m: int, n: int, flavor: Flavor | str):
        if m < 1 or n < 1:
            raise ValueError("need m >= 1 and n >= 1")
        self.m = m
        self.n = n
        self.flavor = Flavor(flavor)
        self.nodes: List[DyckWord] = enumerate_paths(m, n)
        self.index: Dict[DyckWord, int] = {w: k for k, w in enumerate(self.nodes)}
        longest = self.flavor is Flavor.GREEDY
        self.covers: List[List[int]] = [
            sorted(self.index[c] for c in _covers(w, longest)) for w in self.nodes
        ]
        self._up: Optional[List[int]] = None
        self._stats: Optional[List[PathStats]] = None

    def __len__(self) -> int:
        return len(self.nodes)

    @property
    def edge_count(self) -> int:
        return sum(len(c) for c in self.covers)

    def edges(self) -> Iterator[Tuple[int, int]]:
        for a, cs in enumerate(self.covers):
            for b in cs:
                yield a, b

    @property
    def node_stats(self) -> List[PathStats]:
        if self._stats is None:
            self._stats = [stats(w) for w in self.nodes]
        return self._stats

    @property
    def upsets(self) -> List[int]:
        """Bitset of ``{w : v <= w}`` for every node ``v``."""
        if self._up is None:
            up = [0] * len(self.nodes)
            for a in range(len(self.nodes) - 1, -1, -1):
                bits = 1 << a
                for b in self.covers[a]:
                    bits |= up[b]
                up[a] = bits
            self._up = up
        return self._up

    def leq(self, v: DyckWord, w: DyckWord) -> bool:
        return bool(self.upsets[self.index[v]] >> self.index[w] & 1)

    def upper_ideal(self, v: DyckWord) -> List[DyckWord]:
        return [self.nodes[b] for b in _bits(self.upsets[self.index[v]])]

    def interval_count(self) -> int:
        return sum(b.bit_count() for b in self.upsets)

    def chain_lengths_from(self, a: int) -> Dict[int, int]:
        """Longest chain length from node ``a`` to every node above it."""
        dist = {a: 0}
        for b in _bits(self.upsets[a]):
            db = dist[b]
            for c in self.covers[b]:
                if dist.get(c, -1) < db + 1:
                    dist[c] = db + 1
        return dist


def _bits(x: int) -> Iterator[int]:
    # ascending, which is topological order
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def build_poset(m: int, n: int, flavor: Flavor | str) -> CoverGraph:
    return CoverGraph(m, n, flavor)


def intervals(graph: CoverGraph, with_chain: bool = False) -> Iterator[IntervalRecord]:
    """All intervals ``[v, w]`` in (lower index, upper index) order."""
    st = graph.node_stats
    for a, bits in enumerate(graph.upsets):
        chains = graph.chain_lengths_from(a) if with_chain else None
        sa = st[a]
        for b in _bits(bits):
            sb = st[b]
            yield IntervalRecord(
                lower=graph.nodes[a],
                upper=graph.nodes[b],
                d_upper=sb.final_descent,
                contacts_lower=sa.contacts,
                first_ascent_upper=sb.first_ascent,
                ascent_profile_upper=sb.ascent_profile,
                chain_length=chains[b] if chains is not None else None,
            )


def longest_chain(graph: CoverGraph, v: DyckWord, w: DyckWord) -> int:
    if not graph.leq(v, w):
        raise ValueError(f"{v} is not below {w}")
    return graph.chain_lengths_from(graph.index[v])[graph.index[w]]


STATISTICS = ("final-descent", "contacts", "first-ascent", "ascent-profile", "chain-q")


def statistic_value(rec: IntervalRecord, statistic: str):
    if statistic == "final-descent":
        return rec.d_upper
    if statistic == "contacts":
        return rec.contacts_lower
    if statistic == "first-ascent":
        return rec.first_ascent_upper
    if statistic == "ascent-profile":
        return profile_key(rec.ascent_profile_upper)
    if statistic == "chain-q":
        return (rec.d_upper, rec.chain_length)
    raise ValueError(f"unknown statistic {statistic!r}")


def histogram(graph: CoverGraph, statistic: str) -> Counter:
    return Counter(statistic_value(r, statistic)
                   for r in intervals(graph, with_chain=statistic == "chain-q"))


def profile_key(profile: Sequence[int]) -> str:
    """Canonical ``"i^{n_i}"`` key, e.g. ``(1, 1, 2) -> "1^2 2^1"``."""
    c = Counter(profile)
    return " ".join(f"{i}^{c[i]}" for i in sorted(c))


# -- J_i / K_i and the decomposition bijections ----------------------------

def classify(v: DyckWord) -> Tuple[int, frozenset]:
    """``(j_level, k_levels)`` of the lower path of an interval."""
    if v.is_empty:
        raise ValueError("classify needs a nonempty path")
    parts = decompose(v)
    nonempty = [k + 1 for k, p in enumerate(parts) if not p.is_empty]
    if not nonempty:
        return 0, frozenset()
    j = nonempty[-1]
    k_levels = frozenset({j}) if parts[j - 1].is_unit else frozenset()
    return j, k_levels


def split_product(w: DyckWord, right_size: int) -> Tuple[DyckWord, DyckWord]:
    """Recover ``(u, u')`` from ``w = u * u'`` given ``|u'|``."""
    if right_size == 1:
        return w, DyckWord.unit(w.m)
    gens = factorize(w)
    size = 1
    for j in range(len(gens) - 1, -1, -1):
        size += gens[j].n - 1
        if size == right_size:
            left = star_fold(gens[:j]) if j else DyckWord.unit(w.m)
            return left, star_fold(gens[j:])
        if size > right_size:
            break
    raise ValueError(f"{w} has no right factor of size {right_size}")


def split_by_sizes(w: DyckWord, sizes: Sequence[int]) -> List[DyckWord]:
    """Split ``w = w_1 * ... * w_k`` with prescribed ``|w_j|``."""
    out = []
    for j in range(len(sizes) - 1):
        rest = sum(s - 1 for s in sizes[j + 1:]) + 1
        left, w = split_product(w, rest)
        if left.n != sizes[j]:
            raise ValueError("sizes do not match the factorization")
        out.append(left)
    out.append(w)
    return out


Interval = Tuple[DyckWord, DyckWord]


def interval_star(a: Interval, b: Interval) -> Interval:
    return star(a[0], b[0]), star(a[1], b[1])


def interval_factorize(v: DyckWord, w: DyckWord) -> List[Interval]:
    """Factor ``[v, w]`` into generators of the interval monoid."""
    gens = factorize(v)
    uppers = split_by_sizes(w, [g.n for g in gens])
    return list(zip(gens, uppers))


def phi(v: DyckWord, w: DyckWord) -> Tuple[Interval, Interval]:
    """Split an interval of J_i minus J_{i-1} into (K_i part, arbitrary interval)."""
    j, _ = classify(v)
    if j == 0:
        raise ValueError("phi is undefined on J_0")
    # when v is itself a K_j generator the second part is the unit interval
    v1, v2 = first_factor(v)
    w1, w2 = split_product(w, v2.n)
    return (v1, w1), (v2, w2)


def phi_inverse(first: Interval, second: Interval) -> Interval:
    return interval_star(first, second)


def psi(v: DyckWord, w: DyckWord) -> Tuple[Interval, int]:
    """Delete the last peaks of a K_i interval; also return the peak height in ``w``."""
    j, ks = classify(v)
    if j not in ks:
        raise ValueError(f"{v} does not have K_i shape")
    return (delete_last_peak(v), delete_last_peak(w)), last_up_height(w)


def psi_inverse(base: Interval, h: int, i: int) -> Interval:
    """Rebuild the K_i interval from ``([v', w'], h)``."""
    v1, w1 = base
    m = v1.m
    if v1.is_empty:
        raise ValueError("psi_inverse needs a nonempty base interval")
    d = stats(w1).final_descent
    if not m + 1 - i <= h <= d:
        raise ValueError(f"h={h} outside [{m + 1 - i}, {d}]")
    return insert_peak(v1, m + 1 - i), insert_peak(w1, h)


def k_shape(m: int, head: Sequence[DyckWord]) -> DyckWord:
    """``D(head..., 10^m, ∅, ..., ∅)`` with ``len(head) = i - 1``."""
    empty = DyckWord.empty(m)
    parts = list(head) + [DyckWord.unit(m)] + [empty] * (m - len(head))
    return compose(m, parts)


def labelled_weight(w: DyckWord) -> int:
    """Number of labellings of the up steps increasing along each ascent."""
    st = stats(w)
    return factorial(w.n) // prod(factorial(k) for k in st.ascent_profile)
