"""Word-equation satisfiability via narrowing-based solution graphs."""

from .core import (
    ACCEPTED,
    CONTRADICTION,
    Equation,
    Narrowing,
    SystemState,
    apply_to_state,
    apply_to_word,
    classify,
    compose_value,
    eps,
    prepend_letter,
    prepend_var,
)
from .graph import SAT, UNKNOWN, UNSAT, Budget, build, to_dot, verdict
from .oracle import brute_sat, brute_solutions, gen_instance
from .parse import parse_program, parse_system, serialize_program, serialize_system
from .rewrite import Scheme, simplify
from .solutions import Solution, enumerate_solutions, extract_program, min_witness, path_solution
from .witness import verify

__all__ = [
    "ACCEPTED",
    "CONTRADICTION",
    "Budget",
    "Equation",
    "Narrowing",
    "SAT",
    "Scheme",
    "Solution",
    "SystemState",
    "UNKNOWN",
    "UNSAT",
    "apply_to_state",
    "apply_to_word",
    "brute_sat",
    "brute_solutions",
    "build",
    "classify",
    "compose_value",
    "enumerate_solutions",
    "eps",
    "extract_program",
    "gen_instance",
    "min_witness",
    "parse_program",
    "parse_system",
    "path_solution",
    "prepend_letter",
    "prepend_var",
    "serialize_program",
    "serialize_system",
    "simplify",
    "to_dot",
    "verdict",
    "verify",
]
