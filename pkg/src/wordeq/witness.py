"""
Program verification: does a narrowing sequence drive a system to
all-tautologies?

This is the acceptance semantics the solution graphs are built against:
a program is accepted iff every step is compatible with the simplified
state it is applied to and the final state is accepted.  The verifier is
total and never raises on bad programs; every failure mode is F.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .core import ACCEPTED, Equation, Narrowing, SystemState, apply_to_state
from .narrow import compatible_narrowings
from .rewrite import Scheme, simplify


def verify(p: Iterable[Narrowing], system: Sequence[Equation], scheme: Scheme) -> bool:
    """True iff the program is compatible step by step and solves the system.

    Compatibility is checked against the same narrowing table the search
    uses, so verifier and graph agree by construction.  At most one
    substitution is applied per program step.
    """
    if not system:
        state = ACCEPTED
    else:
        state = simplify(scheme, SystemState.of(system))
    for n in p:
        if not state.is_eqs:
            return False
        if n not in compatible_narrowings(state):
            return False
        state = simplify(scheme, apply_to_state(n, state))
    return state.is_accepted
