"""
Text formats for equation systems (.eq) and narrowing programs (.nar).

One equation per line, terms separated by whitespace, ``=`` between the
sides, ``#`` starts a comment.  Uppercase A-Z are letters, lowercase a-z
are variables.  Narrowing programs hold one step per line in the forms
``x -> A x``, ``x -> y x`` and ``x ->``.

Serialization is the exact inverse and produces the canonical form used
for node labels: single spaces between terms, no trailing whitespace.
"""

from __future__ import annotations

from typing import List, Tuple

from .core import Equation, Narrowing, Program, is_var


class ParseError(ValueError):
    def __init__(self, message: str, line: int, column: int = 0):
        self.line = line
        self.column = column
        where = f"line {line}" + (f", column {column}" if column else "")
        super().__init__(f"{where}: {message}")


def _strip_comment(line: str) -> str:
    cut = line.find("#")
    return line if cut < 0 else line[:cut]


def parse_system(text: str) -> List[Equation]:
    equations: List[Equation] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw)
        if not line.strip():
            continue
        if "=" not in line:
            raise ParseError("missing '='", lineno)
        sides: Tuple[List[str], List[str]] = ([], [])
        side = 0
        for col, ch in enumerate(line, start=1):
            if ch.isspace():
                continue
            if ch == "=":
                side += 1
                if side > 1:
                    raise ParseError("duplicate '='", lineno, col)
                continue
            if not ("A" <= ch <= "Z" or "a" <= ch <= "z"):
                raise ParseError(f"illegal character {ch!r}", lineno, col)
            sides[side].append(ch)
        equations.append(Equation("".join(sides[0]), "".join(sides[1])))
    if not equations:
        raise ParseError("no equations found", 1)
    return equations


def parse_program(text: str) -> Program:
    steps: List[Narrowing] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw).strip()
        if not line:
            continue
        head, arrow, tail = line.partition("->")
        if not arrow:
            raise ParseError("missing '->'", lineno)
        head = head.strip()
        if len(head) != 1 or not is_var(head):
            raise ParseError(f"bad head variable {head!r}", lineno)
        terms = tail.split()
        if not terms:
            steps.append(Narrowing(head, ""))
            continue
        if len(terms) != 2 or len(terms[0]) != 1 or terms[1] != head:
            raise ParseError(f"bad replacement {tail.strip()!r}", lineno)
        if terms[0] == head:
            raise ParseError(f"{head} -> {head} {head} is not allowed", lineno)
        if not terms[0].isalpha():
            raise ParseError(f"illegal character {terms[0]!r}", lineno)
        steps.append(Narrowing(head, terms[0]))
    return tuple(steps)


def serialize_equation(e: Equation) -> str:
    lhs = " ".join(e.lhs)
    rhs = " ".join(e.rhs)
    out = "="
    if lhs:
        out = lhs + " " + out
    if rhs:
        out = out + " " + rhs
    return out


def serialize_system(equations: List[Equation]) -> str:
    return "\n".join(serialize_equation(e) for e in equations)


def serialize_program(p: Program) -> str:
    return "\n".join(str(n) for n in p)
