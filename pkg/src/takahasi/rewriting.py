"""Length-preserving string rewriting: normal forms and critical pairs."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Sequence

from .words import Alphabet


class OrderViolation(ValueError):
    pass


@dataclass(frozen=True)
class CriticalPair:
    word: tuple
    left: tuple        # one-step rewrite using the first rule
    right: tuple       # one-step rewrite using the second rule
    left_nf: tuple
    right_nf: tuple
    kind: str          # "overlap" or "inclusion"

    @property
    def joinable(self) -> bool:
        return self.left_nf == self.right_nf


@dataclass(frozen=True)
class ConfluenceReport:
    pairs: tuple

    @property
    def locally_confluent(self) -> bool:
        return all(p.joinable for p in self.pairs)

    @property
    def failures(self) -> tuple:
        return tuple(p for p in self.pairs if not p.joinable)


class RewriteSystem:
    """Rules l → r with |l| = |r| and r shortlex-smaller than l.

    Shortlex uses the letter order of the alphabet; since the rules keep
    length, every rewrite step makes the word lexicographically smaller,
    and there are finitely many words of each length, so rewriting stops.
    """

    order = "shortlex"

    def __init__(self, alphabet: Alphabet, rules: Sequence):
        self.alphabet = alphabet
        rules = tuple((tuple(l), tuple(r)) for l, r in rules)
        for l, r in rules:
            if len(l) != len(r):
                raise OrderViolation(f"rule {l} -> {r} changes length")
            if not l or not (l > r):
                raise OrderViolation(
                    f"rule {alphabet.format(l)} -> {alphabet.format(r)} does not decrease in shortlex")
        self.rules = rules

    @classmethod
    def parse(cls, alphabet: Alphabet, text: str) -> "RewriteSystem":
        """``bb -> aa ; baa -> aab``."""
        rules = []
        for part in re.split(r"[;,\n]", text):
            if part.strip():
                l, r = part.split("->")
                rules.append((alphabet.parse(l), alphabet.parse(r)))
        return cls(alphabet, rules)

    def step(self, w):
        """Leftmost single rewrite, or None when w is irreducible."""
        w = tuple(w)
        best = None
        for l, r in self.rules:
            m = len(l)
            for i in range(len(w) - m + 1):
                if w[i:i + m] == l:
                    if best is None or i < best[0]:
                        best = (i, l, r)
                    break
        if best is None:
            return None
        i, l, r = best
        return w[:i] + r + w[i + len(l):]

    def normal_form(self, w):
        w = tuple(w)
        while True:
            nxt = self.step(w)
            if nxt is None:
                return w
            w = nxt

    def is_irreducible(self, w) -> bool:
        return self.step(w) is None

    def critical_pairs(self) -> list[CriticalPair]:
        out = []
        for a, (l1, r1) in enumerate(self.rules):
            for b, (l2, r2) in enumerate(self.rules):
                # proper overlap: a suffix of l1 is a prefix of l2
                for k in range(1, min(len(l1), len(l2))):
                    if l1[-k:] == l2[:k]:
                        w = l1 + l2[k:]
                        x = r1 + l2[k:]
                        y = l1[:-k] + r2
                        out.append(self._pair(w, x, y, "overlap"))
                # inclusion: l2 is a factor of l1
                if a != b and len(l2) <= len(l1):
                    for i in range(len(l1) - len(l2) + 1):
                        if l1[i:i + len(l2)] == l2:
                            x = r1
                            y = l1[:i] + r2 + l1[i + len(l2):]
                            out.append(self._pair(l1, x, y, "inclusion"))
        return out

    def _pair(self, w, x, y, kind) -> CriticalPair:
        return CriticalPair(w, x, y, self.normal_form(x), self.normal_form(y), kind)

    def check_local_confluence(self) -> ConfluenceReport:
        return ConfluenceReport(tuple(self.critical_pairs()))


def a2b2_system() -> RewriteSystem:
    """The system {b² → a², ba² → a²b} for ⟨a, b | a² = b²⟩."""
    ab = Alphabet(("a", "b"))
    return RewriteSystem.parse(ab, "bb -> aa ; baa -> aab")


BLOCK_PATTERN = re.compile(r"^a*(ba)*b?$")


def matches_block_pattern(word: str) -> bool:
    """Is the word in a*(ba)*{1, b}?"""
    return bool(BLOCK_PATTERN.match(word))
