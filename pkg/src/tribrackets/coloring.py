"""Counting and listing the region colorings of a diagram by a finite algebra.

The solver orders regions most-constrained-first, propagates forced values
(a crossing with three colored corners forces the fourth; a vertex with two
colored sectors forces the third or kills the branch when the product is
undefined) and backtracks on conflicts.  count_colorings_bruteforce provides
the independent reference semantics.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .algebra import (
    BracketSlot,
    ProductSlot,
    TribracketAlgebra,
    is_idempotent,
    product_solve,
    tribracket_solve,
)
from .diagram import Constraint, ConstraintKind, Diagram, DiagramKind

Coloring = dict[str, int]


class HandlebodyModeError(ValueError):
    """Raised when a handlebody-link diagram meets a non-idempotent algebra.

    Coloring counts of handlebody-link diagrams are only meaningful for
    idempotent algebras, so the computation is refused rather than returning
    a number that the moves do not preserve.
    """


def _check_mode(alg: TribracketAlgebra, dia: Diagram) -> None:
    if dia.kind is DiagramKind.HANDLEBODY_LINK and not is_idempotent(alg):
        raise HandlebodyModeError(
            f"diagram {dia.name!r} is a handlebody-link; the algebra must be idempotent"
        )


def _satisfies(alg: TribracketAlgebra, con: Constraint, env: Coloring) -> bool:
    if con.kind is ConstraintKind.CROSSING:
        a, b, c, d = (env[r] for r in con.refs)
        return alg.tribracket.bracket(a, b, c) == d
    left, middle, right = (env[r] for r in con.refs)
    return alg.product.mul(left, right) == middle


def _propagate(
    alg: TribracketAlgebra,
    constraints: tuple[Constraint, ...],
    env: Coloring,
    trail: list[str],
) -> bool:
    """Assign forced regions until a fixpoint; False on a dead branch."""
    t, p = alg.tribracket, alg.product
    changed = True
    while changed:
        changed = False
        for con in constraints:
            refs = con.refs
            missing = [r for r in refs if r not in env]
            distinct_missing = set(missing)
            if len(distinct_missing) > 1:
                continue
            if not missing:
                if not _satisfies(alg, con, env):
                    return False
                continue
            if len(missing) > 1:
                continue  # one region in several slots; branch on it instead
            gap = missing[0]
            idx = refs.index(gap)
            if con.kind is ConstraintKind.CROSSING:
                vals = [env[r] for r in refs if r != gap]
                slot = (BracketSlot.A, BracketSlot.B, BracketSlot.C, BracketSlot.RESULT)[idx]
                forced = tribracket_solve(t, slot, tuple(vals))
            else:
                left, middle, right = refs
                if gap == middle:
                    forced = product_solve(p, ProductSlot.RESULT, (env[left], env[right]))
                elif gap == left:
                    forced = product_solve(p, ProductSlot.LEFT, (env[right], env[middle]))
                else:
                    forced = product_solve(p, ProductSlot.RIGHT, (env[left], env[middle]))
                if forced is None:
                    return False
            env[gap] = forced
            trail.append(gap)
            changed = True
    return True


def _pick_region(dia: Diagram, env: Coloring) -> str:
    """Most-constrained unassigned region, declaration order breaking ties."""
    best = None
    best_score = (-1, -1)
    for r in dia.regions:
        if r in env:
            continue
        active = sum(
            1
            for con in dia.constraints
            if r in con.refs and any(x in env for x in con.refs)
        )
        total = sum(1 for con in dia.constraints if r in con.refs)
        score = (active, total)
        if best is None or score > best_score:
            best = r
            best_score = score
    assert best is not None
    return best


def enumerate_colorings(alg: TribracketAlgebra, dia: Diagram) -> list[Coloring]:
    """All valid colorings, sorted by their value tuple in region order."""
    _check_mode(alg, dia)
    n = alg.n
    out: list[Coloring] = []

    def rec(env: Coloring) -> None:
        trail: list[str] = []
        if not _propagate(alg, dia.constraints, env, trail):
            for r in trail:
                del env[r]
            return
        if len(env) == len(dia.regions):
            if all(_satisfies(alg, con, env) for con in dia.constraints):
                out.append(dict(env))
            for r in trail:
                del env[r]
            return
        region = _pick_region(dia, env)
        for v in range(1, n + 1):
            env[region] = v
            rec(env)
        del env[region]
        for r in trail:
            del env[r]

    rec({})
    out.sort(key=lambda c: tuple(c[r] for r in dia.regions))
    return out


def count_colorings(alg: TribracketAlgebra, dia: Diagram) -> int:
    """The number of valid region colorings of dia by alg."""
    return len(enumerate_colorings(alg, dia))


class BruteForceCapError(ValueError):
    """The assignment space exceeds the cap; use the backtracking solver."""


def count_colorings_bruteforce(
    alg: TribracketAlgebra, dia: Diagram, cap: int = 10_000_000
) -> int:
    """Reference count: test every one of the n^regions assignments."""
    _check_mode(alg, dia)
    n = alg.n
    space = n ** len(dia.regions)
    if space > cap:
        raise BruteForceCapError(
            f"{space} assignments exceed the cap of {cap}; use count_colorings"
        )
    count = 0
    for values in itertools.product(range(1, n + 1), repeat=len(dia.regions)):
        env = dict(zip(dia.regions, values))
        if all(_satisfies(alg, con, env) for con in dia.constraints):
            count += 1
    return count


@dataclass(frozen=True)
class ObstructionCase:
    """One vertex-admissible triple with the bracket value the clasp forces."""

    triple: tuple[int, int, int]
    value: int
    required: int

    @property
    def satisfied(self) -> bool:
        return self.value == self.required


def verify_k2_obstruction(alg: TribracketAlgebra) -> list[ObstructionCase]:
    """Evaluate the k2 closing condition on the three vertex-admissible triples.

    For each triple (a, b, c) the k2 clasp needs bracket(a, bracket(a,c,b), b)
    to return to a; the listing records the actual value next to a.
    """
    if alg.n != 3:
        raise ValueError("the k2 obstruction concerns the order-3 algebra")
    br = alg.tribracket.bracket
    cases = []
    for a, b, c in ((1, 2, 3), (2, 3, 1), (3, 1, 2)):
        cases.append(ObstructionCase((a, b, c), br(a, br(a, c, b), b), a))
    return cases
