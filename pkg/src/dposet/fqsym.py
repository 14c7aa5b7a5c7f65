"""Permutations, shuffles, cuts: the Hopf algebra of standardized words.

The basis is indexed by permutations written in one-line notation.  The
product shuffles two words (second one shifted), the coproduct cuts a word
and standardizes both halves, and the pairing makes a permutation dual to
its inverse.  Half-coproducts split the cuts of a word according to which
side its maximal letter lands on.
"""

from __future__ import annotations

import itertools
import re
from functools import lru_cache

from .algebra import LinComb, Tensor

__all__ = [
    "Permutation",
    "fq_coproduct",
    "fq_dendriform_coproducts",
    "fq_nwarrow",
    "fq_pairing",
    "fq_reduced_coproduct",
    "format_permutation",
    "inversions",
    "parse_permutation",
    "shuffle_product",
    "standardize",
    "weak_interval_down",
    "weak_order_leq",
]


class Permutation:
    """Permutation of {1..n} in one-line notation."""

    __slots__ = ("word",)

    def __init__(self, word):
        w = tuple(int(a) for a in word)
        if sorted(w) != list(range(1, len(w) + 1)):
            raise ValueError("not a permutation")
        self.word = w

    @property
    def n(self):
        return len(self.word)

    def __call__(self, i):
        return self.word[i - 1]

    def inverse(self):
        inv = [0] * len(self.word)
        for pos, value in enumerate(self.word):
            inv[value - 1] = pos + 1
        return Permutation(inv)

    def compose(self, other):
        """self after other: ``(self.compose(other))(i) == self(other(i))``."""
        return Permutation(self.word[v - 1] for v in other.word)

    def sort_key(self):
        return (len(self.word), self.word)

    def literal(self):
        return format_permutation(self)

    def __eq__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.word == other.word

    def __hash__(self):
        return hash(("perm", self.word))

    def __repr__(self):
        return format_permutation(self)


def format_permutation(p):
    """One-line word: digit string up to n = 9, bracketed list beyond."""
    if p.n == 0:
        return "[]"
    if p.n <= 9:
        return "".join(str(a) for a in p.word)
    return "[" + ",".join(str(a) for a in p.word) + "]"


def parse_permutation(text):
    """Parse ``312``, ``[3,1,2]``, ``[]`` or ``∅``."""
    s = text.strip()
    if s in ("[]", "∅"):
        return Permutation(())
    if s.startswith("[") and s.endswith("]"):
        body = s[1:-1].strip()
        if not body:
            return Permutation(())
        return Permutation(int(part) for part in body.split(","))
    if s.isdigit():
        return Permutation(int(ch) for ch in s)
    raise ValueError(f"bad permutation literal: {text!r}")


def standardize(letters):
    """Standardization: replace distinct integers by their ranks 1..n."""
    values = tuple(int(a) for a in letters)
    if len(set(values)) != len(values):
        raise ValueError("repeated letters")
    rank = {v: i + 1 for i, v in enumerate(sorted(values))}
    return Permutation(rank[v] for v in values)


def _shuffle_words(a, b):
    n, m = len(a), len(b)
    for positions in itertools.combinations(range(n + m), n):
        word = [0] * (n + m)
        taken = set(positions)
        for idx, pos in enumerate(positions):
            word[pos] = a[idx]
        rest = iter(b)
        for pos in range(n + m):
            if pos not in taken:
                word[pos] = next(rest)
        yield positions, word


def shuffle_product(p, q):
    """Shifted shuffle: all interleavings of p with q raised above it."""
    shifted = tuple(v + p.n for v in q.word)
    return LinComb(
        (Permutation(word), 1) for _, word in _shuffle_words(p.word, shifted)
    )


def fq_coproduct(p):
    """All cuts of the word, both halves standardized."""
    return LinComb(
        (
            Tensor(standardize(p.word[:k]), standardize(p.word[k:])),
            1,
        )
        for k in range(p.n + 1)
    )


def fq_reduced_coproduct(p):
    """Cuts with both halves nonempty."""
    return LinComb(
        (Tensor(standardize(p.word[:k]), standardize(p.word[k:])), 1)
        for k in range(1, p.n)
    )


def fq_pairing(p, q):
    """1 when q is the inverse of p, else 0."""
    return 1 if p.word == q.inverse().word else 0


@lru_cache(maxsize=None)
def inversions(p):
    """Pairs of values (a, b) with a < b and a appearing after b in the word."""
    out = set()
    for i, b in enumerate(p.word):
        for a in p.word[i + 1 :]:
            if a < b:
                out.add((a, b))
    return frozenset(out)


def weak_order_leq(p, q):
    """Right weak order by inversion-set containment."""
    if p.n != q.n:
        raise ValueError("degree mismatch")
    return inversions(p) <= inversions(q)


def weak_interval_down(q):
    """All permutations below q in right weak order, in word order."""
    target = inversions(q)
    return [
        p
        for word in itertools.permutations(range(1, q.n + 1))
        if inversions(p := Permutation(word)) <= target
    ]


def fq_nwarrow(p, q):
    """Shuffles of p with shifted q in which every letter of q lands after
    the maximal letter of p."""
    if p.n == 0 or q.n == 0:
        raise ValueError("nwarrow needs nonempty operands")
    shifted = tuple(v + p.n for v in q.word)
    cutoff_index = p.word.index(p.n)
    out = []
    for positions, word in _shuffle_words(p.word, shifted):
        bound = positions[cutoff_index]
        if all(pos > bound for pos in range(p.n + q.n) if pos not in set(positions)):
            out.append((Permutation(word), 1))
    return LinComb(out)


def fq_dendriform_coproducts(p):
    """Half-coproduct pair (prec, succ): cuts keeping the maximal letter in
    the left, resp. right, half.  Trivial cuts are excluded."""
    if p.n == 0:
        raise ValueError("empty permutation")
    top = p.word.index(p.n) + 1
    prec = LinComb(
        (Tensor(standardize(p.word[:k]), standardize(p.word[k:])), 1)
        for k in range(top, p.n)
    )
    succ = LinComb(
        (Tensor(standardize(p.word[:k]), standardize(p.word[k:])), 1)
        for k in range(1, top)
    )
    return prec, succ
