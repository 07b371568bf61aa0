"""Alphabets and words.

Letters are small integers.  Over a plain alphabet the letter for the
i-th symbol is ``i``.  Over an involutive alphabet (symbols together with
formal inverses) the symbol ``i`` is encoded as ``2*i`` and its inverse as
``2*i + 1``, so inversion of a letter is ``x ^ 1`` and the integer order
``a < a' < b < b' < ...`` is the letter order used by shortlex.

Words are plain tuples of letters.  :class:`Word` is a thin wrapper used
where a word must remember its alphabet (text round trips, comparisons
that must refuse mixed alphabets).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

_IDENT = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")


class AlphabetError(ValueError):
    pass


@dataclass(frozen=True)
class Alphabet:
    """An ordered finite set of symbol names.

    The order of ``symbols`` is the letter order used for shortlex.
    """

    symbols: tuple[str, ...]
    involutive: bool = False

    def __post_init__(self):
        syms = tuple(self.symbols)
        object.__setattr__(self, "symbols", syms)
        if len(set(syms)) != len(syms):
            raise AlphabetError(f"duplicate symbols in {syms}")
        for s in syms:
            if not _IDENT.match(s):
                raise AlphabetError(f"symbol {s!r} is not an identifier")

    @classmethod
    def of(cls, names: str | Iterable[str], involutive: bool = False) -> "Alphabet":
        """``Alphabet.of("abc")`` or ``Alphabet.of(["x1", "x2"])``."""
        if isinstance(names, str):
            names = names.split() if " " in names else list(names)
        return cls(tuple(names), involutive)

    def __len__(self):
        return len(self.symbols)

    @property
    def letters(self) -> tuple[int, ...]:
        """All letters in order (including inverses when involutive)."""
        if self.involutive:
            return tuple(range(2 * len(self.symbols)))
        return tuple(range(len(self.symbols)))

    def positive(self) -> tuple[int, ...]:
        if self.involutive:
            return tuple(2 * i for i in range(len(self.symbols)))
        return self.letters

    def letter(self, token: str) -> int:
        inv = token.endswith("'")
        name = token[:-1] if inv else token
        try:
            i = self.symbols.index(name)
        except ValueError:
            raise AlphabetError(f"unknown symbol {name!r}") from None
        if self.involutive:
            return 2 * i + (1 if inv else 0)
        if inv:
            raise AlphabetError(f"formal inverse {token!r} over a plain alphabet")
        return i

    def name(self, x: int) -> str:
        if self.involutive:
            return self.symbols[x >> 1] + ("'" if x & 1 else "")
        return self.symbols[x]

    def parse(self, text: str) -> tuple[int, ...]:
        """Parse ``"a b' c"``.  ``""``, ``"1"`` and ``"ε"`` denote the empty word.

        A single token made only of one-character symbol names may be
        written without spaces (``"cac"``).
        """
        text = text.strip()
        if text in ("", "1", "ε"):
            return ()
        tokens = text.split()
        if len(tokens) == 1 and tokens[0] not in self._names_with_inverses():
            tokens = _split_compact(tokens[0])
        return tuple(self.letter(t) for t in tokens)

    def format(self, w: Sequence[int]) -> str:
        return " ".join(self.name(x) for x in w)

    def word(self, text: str) -> "Word":
        return Word(self.parse(text), self)

    def _names_with_inverses(self):
        names = set(self.symbols)
        if self.involutive:
            names |= {s + "'" for s in self.symbols}
        return names


def _split_compact(token: str) -> list[str]:
    out = []
    for ch in token:
        if ch == "'":
            if not out:
                raise AlphabetError(f"dangling inverse mark in {token!r}")
            out[-1] += "'"
        else:
            out.append(ch)
    return out


@dataclass(frozen=True)
class Word:
    letters: tuple[int, ...]
    alphabet: Alphabet

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        _same_alphabet(self, other)
        return Word(self.letters + other.letters, self.alphabet)

    def __str__(self):
        return self.alphabet.format(self.letters)

    def inverse(self) -> "Word":
        return Word(invert(self.letters), self.alphabet)

    def reduced(self) -> "Word":
        return Word(free_reduce(self.letters), self.alphabet)


def _same_alphabet(u, v):
    if isinstance(u, Word) and isinstance(v, Word) and u.alphabet != v.alphabet:
        raise AlphabetError("words over different alphabets")


def _letters(w) -> tuple[int, ...]:
    return w.letters if isinstance(w, Word) else tuple(w)


def inverse_letter(x: int) -> int:
    return x ^ 1


def invert(w):
    """Formal inverse: reverse and invert every letter (no reduction)."""
    if isinstance(w, Word):
        return w.inverse()
    return tuple(x ^ 1 for x in reversed(w))


def free_reduce(w):
    """Cancel adjacent ``x x'`` pairs until none remain (stack based)."""
    if isinstance(w, Word):
        return w.reduced()
    out: list[int] = []
    for x in w:
        if out and out[-1] == x ^ 1:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def is_reduced(w) -> bool:
    w = _letters(w)
    return all(w[k] != w[k + 1] ^ 1 for k in range(len(w) - 1))


def shortlex_key(w) -> tuple:
    w = _letters(w)
    return (len(w), w)


def shortlex_cmp(u, v) -> int:
    """-1, 0 or 1 as ``u`` is shortlex-less, equal or greater than ``v``."""
    _same_alphabet(u, v)
    ku, kv = shortlex_key(u), shortlex_key(v)
    return (ku > kv) - (ku < kv)


def words_of_length(letters: Sequence[int], n: int):
    """All words of length ``n`` in lexicographic order."""
    from itertools import product

    return product(letters, repeat=n)


def reduced_words(rank: int, max_len: int, min_len: int = 1):
    """Reduced words over an involutive alphabet with ``rank`` symbols."""
    letters = range(2 * rank)
    layer = [()]
    for n in range(1, max_len + 1):
        layer = [w + (x,) for w in layer for x in letters if not w or w[-1] != x ^ 1]
        if n >= min_len:
            yield from layer
