"""Finite-rank checks for subgroups of free groups, subsemigroups of ℕ and
ℤ², completely simple and Clifford semigroups, and fixed points of
endomorphisms of balanced monoid presentations."""

from .words import Alphabet, Word, free_reduce, invert
from .stallings import Automaton, StallingsGraph, pipeline, subgroup
from .numeric import NumSgp, profile
from .groups import FiniteGroup, by_name
from .rees import ReesStructure
from .clifford import SemilatticeOfGroups
from .presentations import Endo, Presentation, presentation
from .rewriting import RewriteSystem

__version__ = "0.1.0"

__all__ = [
    "Alphabet", "Word", "free_reduce", "invert",
    "Automaton", "StallingsGraph", "pipeline", "subgroup",
    "NumSgp", "profile", "FiniteGroup", "by_name",
    "ReesStructure", "SemilatticeOfGroups",
    "Endo", "Presentation", "presentation", "RewriteSystem",
]
