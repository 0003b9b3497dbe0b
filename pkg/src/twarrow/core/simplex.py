"""Eilenberg-Zilber words and the simplex handle type.

Every simplex of a simplicial set is written uniquely as a strictly
decreasing word of degeneracy operators applied to a nondegenerate base:

    s_{j_1} s_{j_2} ... s_{j_k} (base),   j_1 > j_2 > ... > j_k.

A word is stored outermost first.  The word of a simplex of dimension m
over a base of dimension p is equivalently the set of "collapse
positions" of the monotone surjection [m] ->> [p] it encodes, and in the
canonical form the word letters literally are the collapse positions in
decreasing order.  Most of the calculus below exploits that.
"""

from __future__ import annotations

from typing import NamedTuple


class Simplex(NamedTuple):
    """Handle for a (possibly degenerate) simplex of a simplicial set.

    ``base`` is a pair ``(dim, idx)`` naming a nondegenerate simplex,
    ``word`` the degeneracy word applied to it, outermost letter first.
    """

    word: tuple[int, ...]
    base: tuple[int, int]

    @property
    def dim(self) -> int:
        return self.base[0] + len(self.word)

    @property
    def is_degenerate(self) -> bool:
        return bool(self.word)


def nondeg(dim: int, idx: int) -> Simplex:
    return Simplex((), (dim, idx))


def check_word(word: tuple[int, ...], base_dim: int) -> None:
    for a, b in zip(word, word[1:]):
        if a <= b:
            raise ValueError(f"word {word} is not strictly decreasing")
    if word:
        # letters are collapse positions in [0, dim-1]
        if word[-1] < 0 or word[0] > base_dim + len(word) - 1:
            raise ValueError(f"word {word} out of range for base dim {base_dim}")


def word_to_collapses(word: tuple[int, ...]) -> frozenset[int]:
    return frozenset(word)


def collapses_to_word(collapses) -> tuple[int, ...]:
    return tuple(sorted(collapses, reverse=True))


def flag_map(word: tuple[int, ...], base_dim: int) -> tuple[int, ...]:
    """The monotone surjection [m] ->> [base_dim] encoded by ``word``.

    Returned as the tuple of values at 0, 1, ..., m.  Position t is a
    collapse (value repeats at t+1) exactly when t is a word letter.
    """
    m = base_dim + len(word)
    collapses = set(word)
    out = []
    v = 0
    for t in range(m + 1):
        out.append(v)
        if t not in collapses:
            v += 1
    assert out[-1] == base_dim
    return tuple(out)


def degenerate(x: Simplex, j: int) -> Simplex:
    """Apply s_j to a simplex, renormalizing the word."""
    if not 0 <= j <= x.dim:
        raise ValueError(f"s_{j} undefined on a {x.dim}-simplex")
    new = {t if t < j else t + 1 for t in x.word}
    new.add(j)
    return Simplex(collapses_to_word(new), x.base)


def degenerate_word(x: Simplex, word: tuple[int, ...]) -> Simplex:
    """Apply a degeneracy word (outermost first) on top of ``x``."""
    for j in reversed(word):
        x = degenerate(x, j)
    return x


def face_stays_degenerate(x: Simplex, i: int) -> Simplex | None:
    """d_i(x) when it does not touch the base, else None.

    The face misses the base exactly when position i sits in a fiber of
    the flag map of size at least two, i.e. i or i-1 is a word letter.
    """
    s = set(x.word)
    if i not in s and i - 1 not in s:
        return None
    if i in s:
        s.remove(i)
    else:
        s.remove(i - 1)
    s = {t if t < i else t - 1 for t in s}
    return Simplex(collapses_to_word(s), x.base)


def strip_collapse(x: Simplex, j: int) -> Simplex:
    """Remove the collapse at position j (requires j in the word)."""
    assert j in x.word
    out = face_stays_degenerate(x, j)
    assert out is not None
    return out


def op_word(word: tuple[int, ...], dim: int) -> tuple[int, ...]:
    """Degeneracy word of the same simplex read in the opposite complex."""
    return collapses_to_word({dim - 1 - t for t in word})


def all_words(m: int, base_dim: int):
    """All canonical words of simplices of dimension m over a base of
    dimension base_dim, i.e. all (m - base_dim)-subsets of [0, m-1]."""
    from itertools import combinations

    k = m - base_dim
    if k < 0:
        return
    for c in combinations(range(m), k):
        yield tuple(sorted(c, reverse=True))
