"""
Core value types for word equations: terms, words, equations, system
states, and the elementary narrowing substitutions.

A term is a single character.  Uppercase ASCII characters are alphabet
letters, lowercase ASCII characters are variables, and a word is a plain
string of terms.  Keeping words as strings makes structural equality,
occurrence counting and substitution cheap, and it guarantees that the
serialized node labels used for folding are canonical by construction.

Everything in this module is an immutable value; all operations are pure
functions and safe to share across threads.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, NamedTuple, Tuple

Word = str  # a (possibly empty) string of single-character terms


def is_var(term: str) -> bool:
    """True for variable terms (lowercase)."""
    return term.islower()


def is_letter(term: str) -> bool:
    """True for alphabet letters (uppercase)."""
    return term.isupper()


def variables_of(w: Word) -> frozenset:
    return frozenset(c for c in w if c.islower())


def letters_of(w: Word) -> frozenset:
    return frozenset(c for c in w if c.isupper())


class Equation(NamedTuple):
    lhs: Word
    rhs: Word

    @property
    def length(self) -> int:
        return len(self.lhs) + len(self.rhs)

    def variables(self) -> frozenset:
        return variables_of(self.lhs) | variables_of(self.rhs)

    def letters(self) -> frozenset:
        return letters_of(self.lhs) | letters_of(self.rhs)


EMPTY_EQUATION = Equation("", "")


class StateKind(Enum):
    EQS = "eqs"
    ACCEPTED = "accepted"
    CONTRADICTION = "contradiction"


@dataclass(frozen=True)
class SystemState:
    """Label of a solution-graph node: an equation list, or a leaf state.

    The two leaf states carry no equations; they are exposed as the module
    constants ``ACCEPTED`` and ``CONTRADICTION``.
    """

    kind: StateKind
    equations: Tuple[Equation, ...] = ()

    def __post_init__(self) -> None:
        if self.kind is not StateKind.EQS and self.equations:
            raise ValueError(f"{self.kind.value} state carries no equations")

    @staticmethod
    def of(equations: Iterable[Equation]) -> "SystemState":
        return SystemState(StateKind.EQS, tuple(equations))

    @property
    def is_eqs(self) -> bool:
        return self.kind is StateKind.EQS

    @property
    def is_accepted(self) -> bool:
        return self.kind is StateKind.ACCEPTED

    @property
    def is_contradiction(self) -> bool:
        return self.kind is StateKind.CONTRADICTION


ACCEPTED = SystemState(StateKind.ACCEPTED)
CONTRADICTION = SystemState(StateKind.CONTRADICTION)


@dataclass(frozen=True)
class Narrowing:
    """An elementary substitution on a single variable.

    ``target`` selects the form: the empty string means ``x -> `` (erase
    x), a letter ``a`` means ``x -> a x``, and a variable ``y`` means
    ``x -> y x``.  The degenerate ``x -> x x`` is rejected.
    """

    var: str
    target: str

    def __post_init__(self) -> None:
        if len(self.var) != 1 or not is_var(self.var):
            raise ValueError(f"not a variable: {self.var!r}")
        if self.target:
            if len(self.target) != 1 or not self.target.isalpha():
                raise ValueError(f"not a term: {self.target!r}")
            if self.target == self.var:
                raise ValueError(f"{self.var} -> {self.var} {self.var} is not allowed")

    @property
    def is_eps(self) -> bool:
        return self.target == ""

    @property
    def replacement(self) -> Word:
        return self.target + self.var if self.target else ""

    def __str__(self) -> str:
        if self.is_eps:
            return f"{self.var} ->"
        return f"{self.var} -> {self.target} {self.var}"


def eps(x: str) -> Narrowing:
    return Narrowing(x, "")


def prepend_letter(x: str, a: str) -> Narrowing:
    if not is_letter(a):
        raise ValueError(f"not a letter: {a!r}")
    return Narrowing(x, a)


def prepend_var(x: str, y: str) -> Narrowing:
    if not is_var(y):
        raise ValueError(f"not a variable: {y!r}")
    return Narrowing(x, y)


Program = Tuple[Narrowing, ...]


def count_occurrences(w: Word, t: str) -> int:
    """Number of positions of ``w`` equal to the term ``t``."""
    return w.count(t)


def letter_count(w: Word) -> int:
    """Number of positions of ``w`` holding letters."""
    return sum(map(str.isupper, w))


def erase_letters(w: Word) -> Word:
    """The subsequence of ``w`` consisting of its variables."""
    return "".join(c for c in w if c.islower())


def is_var_permutated(w1: Word, w2: Word) -> bool:
    """True iff the words have equal length and equal per-variable counts.

    Letters need not match position-wise or even as multisets; with equal
    lengths the total letter counts agree automatically.
    """
    if len(w1) != len(w2):
        return False
    return Counter(erase_letters(w1)) == Counter(erase_letters(w2))


def apply_to_word(n: Narrowing, w: Word) -> Word:
    """Apply the substitution to every occurrence of its variable."""
    return w.replace(n.var, n.replacement)


def apply_to_state(n: Narrowing, s: SystemState) -> SystemState:
    """Apply a narrowing to both sides of every equation, order preserved.

    No simplification is performed here.
    """
    if not s.is_eqs:
        raise ValueError(f"cannot substitute into a {s.kind.value} state")
    return SystemState.of(
        Equation(apply_to_word(n, e.lhs), apply_to_word(n, e.rhs)) for e in s.equations
    )


def compose_value(p: Iterable[Narrowing], x: str) -> Word:
    """Value of ``x`` under the left-to-right composition of the program."""
    w: Word = x
    for n in p:
        w = apply_to_word(n, w)
    return w


def ground_words(alphabet: Iterable[str], max_len: int) -> list:
    """All ground words over the alphabet up to the bound, shortest first,
    lexicographic within a length."""
    alphabet = sorted(alphabet)
    out = [""]
    layer = [""]
    for _ in range(max_len):
        layer = [w + a for w in layer for a in alphabet]
        out.extend(layer)
    return out


@dataclass(frozen=True)
class EquationClass:
    quadratic: bool
    strictly_regular_ordered_rep: bool
    one_variable: bool
    linear: bool


def classify(e: Equation) -> EquationClass:
    """Membership flags for the equation classes with termination guarantees."""
    counts = Counter(erase_letters(e.lhs) + erase_letters(e.rhs))
    return EquationClass(
        quadratic=all(k <= 2 for k in counts.values()),
        strictly_regular_ordered_rep=erase_letters(e.lhs) == erase_letters(e.rhs),
        one_variable=len(counts) <= 1,
        linear=all(k <= 1 for k in counts.values()),
    )
