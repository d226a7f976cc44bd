"""m-Dyck paths as binary words.

A path of size ``n`` is a word with ``n`` ones (up steps of rise ``m``)
and ``m*n`` zeros (unit down steps) whose running height never drops
below zero.  Words are stored as ``'0'``/``'1'`` strings: CPython strings
are immutable, hash in O(1) after the first call, and compare
lexicographically with ``'0' < '1'``, which is exactly the enumeration
order we want.
"""

from __future__ import annotations

import os
from collections import Counter
from dataclasses import dataclass, field
from functools import reduce
from math import comb
from typing import Iterable, List, Sequence, Tuple

DEFAULT_MAX_NODES = 10 ** 7


class ResourceLimitError(RuntimeError):
    """Raised when an enumeration would exceed the configured size cap."""


def max_nodes() -> int:
    """The path-count cap; ``TAMARI_MAX_NODES`` overrides the default."""
    env = os.environ.get("TAMARI_MAX_NODES")
    return int(env) if env else DEFAULT_MAX_NODES


def fuss_catalan(m: int, n: int) -> int:
    return comb((m + 1) * n, n) // (m * n + 1)


def is_valid(m: int, word: str | Sequence[int]) -> bool:
    if m < 1:
        raise ValueError("m must be positive")
    h = 0
    for ch in word:
        if ch in ("1", 1):
            h += m
        elif ch in ("0", 0):
            h -= 1
            if h < 0:
                return False
        else:
            return False
    return h == 0


def _as_str(word: str | Sequence[int]) -> str:
    if isinstance(word, str):
        return word
    return "".join(str(int(b)) for b in word)


@dataclass(frozen=True, order=True)
class DyckWord:
    """An m-Dyck path.  Construction validates the word."""

    m: int
    word: str
    n: int = field(init=False, compare=False)

    def __post_init__(self):
        w = _as_str(self.word)
        object.__setattr__(self, "word", w)
        if not is_valid(self.m, w):
            raise ValueError(f"{w!r} is not a {self.m}-Dyck word")
        object.__setattr__(self, "n", w.count("1"))

    @classmethod
    def _trusted(cls, m: int, word: str) -> "DyckWord":
        obj = object.__new__(cls)
        object.__setattr__(obj, "m", m)
        object.__setattr__(obj, "word", word)
        object.__setattr__(obj, "n", word.count("1"))
        return obj

    @classmethod
    def empty(cls, m: int) -> "DyckWord":
        return cls._trusted(m, "")

    @classmethod
    def unit(cls, m: int) -> "DyckWord":
        return cls._trusted(m, "1" + "0" * m)

    def __str__(self) -> str:
        return self.word or "∅"

    def __len__(self) -> int:
        return len(self.word)

    @property
    def is_empty(self) -> bool:
        return not self.word

    @property
    def is_unit(self) -> bool:
        return self.word == "1" + "0" * self.m

    def heights(self) -> List[int]:
        """Heights of all ``len(word) + 1`` vertices."""
        hs = [0]
        h = 0
        m = self.m
        for ch in self.word:
            h += m if ch == "1" else -1
            hs.append(h)
        return hs

    def to_json(self) -> dict:
        return {"m": self.m, "word": self.word}

    @classmethod
    def from_json(cls, data: dict) -> "DyckWord":
        return cls(int(data["m"]), str(data["word"]))


@dataclass(frozen=True)
class PathStats:
    final_descent: int
    contacts: int
    first_ascent: int
    ascent_profile: Tuple[int, ...]
    is_prime: bool

    def profile_counter(self) -> Counter:
        return Counter(self.ascent_profile)


def enumerate_paths(m: int, n: int) -> List[DyckWord]:
    """All m-Dyck words of size ``n`` in lexicographic order."""
    if m < 1 or n < 0:
        raise ValueError("need m >= 1 and n >= 0")
    count = fuss_catalan(m, n)
    cap = max_nodes()
    if count > cap:
        raise ResourceLimitError(f"D_{{{m},{n}}} has {count} paths, above the cap {cap}")
    length = (m + 1) * n
    out: List[DyckWord] = []
    buf: List[str] = []

    # zeros first so the output comes out sorted
    def extend(h: int, ups: int):
        pos = len(buf)
        if pos == length:
            out.append(DyckWord._trusted(m, "".join(buf)))
            return
        downs_left = length - pos - (n - ups)
        if h > 0:
            buf.append("0")
            extend(h - 1, ups)
            buf.pop()
        if ups < n and h + m <= downs_left:
            buf.append("1")
            extend(h + m, ups + 1)
            buf.pop()

    extend(0, 0)
    return out


def stats(w: DyckWord) -> PathStats:
    word = w.word
    if not word:
        return PathStats(0, 0, 0, (), True)
    final_descent = len(word) - len(word.rstrip("0"))
    hs = w.heights()
    contacts = sum(1 for h in hs[1:-1] if h == 0)
    runs = tuple(len(r) for r in word.split("0") if r)
    return PathStats(
        final_descent=final_descent,
        contacts=contacts,
        first_ascent=runs[0],
        ascent_profile=tuple(sorted(runs)),
        is_prime=contacts == 0,
    )


def decompose(w: DyckWord) -> Tuple[DyckWord, ...]:
    """Parts ``(w_1, ..., w_{m+1})`` with ``w = 1 (w_1 0) ... (w_m 0) w_{m+1}``."""
    if w.is_empty:
        raise ValueError("cannot decompose the empty path")
    m, word = w.m, w.word
    parts = []
    start = 1
    h = m
    target = m - 1
    for pos in range(1, len(word)):
        h += m if word[pos] == "1" else -1
        if h == target:
            parts.append(DyckWord._trusted(m, word[start:pos]))
            start = pos + 1
            target -= 1
            if target < 0:
                break
    parts.append(DyckWord._trusted(m, word[start:]))
    return tuple(parts)


def compose(m: int, parts: Sequence[DyckWord]) -> DyckWord:
    if len(parts) != m + 1:
        raise ValueError(f"compose needs {m + 1} parts, got {len(parts)}")
    for p in parts:
        if p.m != m:
            raise ValueError("part with a different step parameter")
    body = "".join(p.word + "0" for p in parts[:m])
    return DyckWord._trusted(m, "1" + body + parts[m].word)


def _last_peak(word: str) -> int:
    return word.rindex("1")


def star(w1: DyckWord, w2: DyckWord) -> DyckWord:
    """Replace the rightmost peak of ``w1`` by ``w2``."""
    if w1.m != w2.m:
        raise ValueError("step parameters differ")
    if w1.is_empty or w2.is_empty:
        raise ValueError("star product of an empty path")
    p = _last_peak(w1.word)
    return DyckWord._trusted(w1.m, w1.word[:p] + w2.word + w1.word[p + 1 + w1.m:])


def star_fold(factors: Iterable[DyckWord]) -> DyckWord:
    return reduce(star, factors)


def is_generator(w: DyckWord) -> bool:
    """True for ``D(w_1, ..., w_{i-1}, 10^m, ∅, ..., ∅)``."""
    if w.is_empty or w.is_unit:
        return False
    parts = decompose(w)
    i = max(k for k, p in enumerate(parts) if not p.is_empty)
    return parts[i].is_unit


def first_factor(w: DyckWord) -> Tuple[DyckWord, DyckWord]:
    """Split a non-unit path as ``generator * rest`` (``rest`` may be the unit)."""
    parts = decompose(w)
    nonempty = [k for k, p in enumerate(parts) if not p.is_empty]
    if not nonempty:
        raise ValueError("the unit path has no first factor")
    i = nonempty[-1]
    unit = DyckWord.unit(w.m)
    gen = compose(w.m, parts[:i] + (unit,) + parts[i + 1:])
    return gen, parts[i]


def factorize(w: DyckWord) -> List[DyckWord]:
    """Unique factorization into generators of the free monoid (unit -> [unit])."""
    if w.is_empty:
        raise ValueError("cannot factorize the empty path")
    if w.is_unit:
        return [w]
    factors = []
    while not w.is_unit:
        gen, w = first_factor(w)
        factors.append(gen)
    return factors


def embed_unit_steps(w: DyckWord) -> DyckWord:
    """Replace each up step of rise m by m unit up steps."""
    return DyckWord._trusted(1, w.word.replace("1", "1" * w.m))


def delete_last_peak(w: DyckWord) -> DyckWord:
    p = _last_peak(w.word)
    return DyckWord._trusted(w.m, w.word[:p] + w.word[p + 1 + w.m:])


def insert_peak(w: DyckWord, height: int) -> DyckWord:
    """Insert ``10^m`` in the final descent of ``w`` at the given height."""
    d = stats(w).final_descent
    if not 0 <= height <= d:
        raise ValueError(f"height {height} outside the final descent [0, {d}]")
    cut = len(w.word) - height
    return DyckWord._trusted(w.m, w.word[:cut] + "1" + "0" * w.m + w.word[cut:])


def last_up_height(w: DyckWord) -> int:
    """Height at which the last up step starts."""
    p = _last_peak(w.word)
    return w.heights()[p]
