"""Executable invariance checks for the generating diagram moves.

Each move ships as a pair of local constraint systems over a shared set of
boundary regions; a check enumerates every boundary coloring and compares the
number of extensions to the internal regions on both sides.  The fragments
are transcribed so that their algebraic content is exactly one verifier
axiom: the kink and poke moves (R1*/R2*) exercise slot bijectivity, R3a the
two coherence identities, the vertex twists R4.1/R4.10 the r4 compatibility
condition, and the four vertex-slide moves R5.7/R5.10/R5.13/R5.16 the four
r5 compatibility families.  The IH pair passes for every boundary coloring
exactly when the product is defined only on equal operands with aa = a.

A fragment may also merge two boundary regions (the strand-free side of a
poke move joins its two gap regions into one band); boundary colorings that
disagree on merged regions admit no extension on that side.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .algebra import TribracketAlgebra
from .diagram import Constraint, ConstraintKind

_C = ConstraintKind.CROSSING
_V = ConstraintKind.VERTEX


@dataclass(frozen=True)
class MoveFragment:
    internal: tuple[str, ...]
    constraints: tuple[Constraint, ...]
    merges: tuple[tuple[str, str], ...] = ()


@dataclass(frozen=True)
class LocalMovePair:
    move_id: str
    boundary: tuple[str, ...]
    before: MoveFragment
    after: MoveFragment
    requires_idempotent: bool = False
    shadow_axiom: str = ""


@dataclass(frozen=True)
class MoveCheckReport:
    move_id: str
    passed: bool
    witness: tuple[dict[str, int], int, int] | None = None

    def summary(self) -> str:
        if self.passed:
            return f"{self.move_id}  PASS"
        env, before, after = self.witness
        colors = " ".join(f"{k}={v}" for k, v in sorted(env.items()))
        return f"{self.move_id}  FAIL at {colors}: {before} extensions vs {after}"


def _x(a: str, b: str, c: str, d: str) -> Constraint:
    return Constraint(_C, (a, b, c, d))


def _v(left: str, middle: str, right: str) -> Constraint:
    return Constraint(_V, (left, middle, right))


def _frag(internal=(), constraints=(), merges=()) -> MoveFragment:
    return MoveFragment(tuple(internal), tuple(constraints), tuple(merges))


def builtin_move_pairs() -> list[LocalMovePair]:
    """One pair per generating move, plus the oriented kink/poke variants."""
    pairs = []

    # kinks: the loop region sits opposite the doubled outer region
    for move_id, con in (
        ("R1a", _x("w", "e", "e", "l")),
        ("R1b", _x("l", "e", "e", "w")),
        ("R1c", _x("e", "w", "w", "l")),
        ("R1d", _x("l", "w", "w", "e")),
    ):
        pairs.append(
            LocalMovePair(
                move_id,
                ("w", "e"),
                before=_frag(("l",), (con,)),
                after=_frag(),
                shadow_axiom="slot bijectivity",
            )
        )

    # pokes: two crossings sharing the bigon p; removing them merges the gaps
    for move_id, c1, c2 in (
        ("R2a", _x("w", "p", "s", "e"), _x("w", "p", "n", "e")),
        ("R2b", _x("w", "s", "p", "e"), _x("w", "n", "p", "e")),
        ("R2c", _x("s", "w", "p", "e"), _x("n", "w", "p", "e")),
        ("R2d", _x("p", "w", "s", "e"), _x("p", "w", "n", "e")),
    ):
        pairs.append(
            LocalMovePair(
                move_id,
                ("w", "e", "s", "n"),
                before=_frag(("p",), (c1, c2)),
                after=_frag(merges=(("s", "n"),)),
                shadow_axiom="slot bijectivity",
            )
        )

    # third classical move: one internal region on each side, three crossings
    pairs.append(
        LocalMovePair(
            "R3a",
            ("a", "b", "c", "d", "x", "y"),
            before=_frag(
                ("t",),
                (_x("b", "c", "d", "t"), _x("a", "b", "t", "x"), _x("x", "t", "d", "y")),
            ),
            after=_frag(
                ("u",),
                (_x("a", "b", "c", "u"), _x("u", "c", "d", "y"), _x("a", "u", "y", "x")),
            ),
            shadow_axiom="coherence-1 / coherence-2",
        )
    )

    # vertex twists: crossing the prongs above the vertex
    pairs.append(
        LocalMovePair(
            "R4.1",
            ("a", "b", "m"),
            before=_frag(constraints=(_v("a", "m", "b"),)),
            after=_frag(("t",), (_v("a", "t", "b"), _x("a", "t", "b", "m"))),
            shadow_axiom="r4-compat",
        )
    )
    pairs.append(
        LocalMovePair(
            "R4.10",
            ("a", "b", "m"),
            before=_frag(constraints=(_v("a", "m", "b"),)),
            after=_frag(("t",), (_v("a", "t", "b"), _x("a", "m", "b", "t"))),
            shadow_axiom="r4-compat",
        )
    )

    # vertex slides past a strand, one variant per r5 family
    pairs.append(
        LocalMovePair(
            "R5.7",
            ("a", "b", "c", "p"),
            before=_frag(("q",), (_x("a", "b", "c", "q"), _v("a", "p", "q"))),
            after=_frag(("r",), (_v("b", "r", "c"), _x("a", "b", "r", "p"))),
            shadow_axiom="r5-compat-1",
        )
    )
    pairs.append(
        LocalMovePair(
            "R5.10",
            ("a", "b", "c", "p"),
            before=_frag(("q",), (_x("a", "b", "c", "q"), _v("q", "p", "c"))),
            after=_frag(("r",), (_v("a", "r", "b"), _x("r", "b", "c", "p"))),
            shadow_axiom="r5-compat-2",
        )
    )
    pairs.append(
        LocalMovePair(
            "R5.13",
            ("a", "b", "c", "p"),
            before=_frag(("r",), (_v("b", "r", "c"), _x("a", "b", "c", "p"))),
            after=_frag(
                ("r", "s"),
                (_v("b", "r", "c"), _x("a", "b", "r", "s"), _x("s", "r", "c", "p")),
            ),
            shadow_axiom="r5-compat-3",
        )
    )
    pairs.append(
        LocalMovePair(
            "R5.16",
            ("a", "b", "c", "p"),
            before=_frag(("r",), (_v("a", "r", "b"), _x("a", "b", "c", "p"))),
            after=_frag(
                ("r", "s"),
                (_v("a", "r", "b"), _x("r", "b", "c", "s"), _x("a", "r", "s", "p")),
            ),
            shadow_axiom="r5-compat-4",
        )
    )

    # the H-to-I move on the edge joining two vertices
    pairs.append(
        LocalMovePair(
            "IH",
            ("w", "n", "e", "s"),
            before=_frag(constraints=(_v("w", "n", "s"), _v("s", "n", "e"))),
            after=_frag(constraints=(_v("w", "s", "e"), _v("w", "n", "e"))),
            requires_idempotent=True,
            shadow_axiom="idempotency",
        )
    )
    return pairs


def _extensions(alg: TribracketAlgebra, frag: MoveFragment, env: dict[str, int]) -> int:
    for r1, r2 in frag.merges:
        if env[r1] != env[r2]:
            return 0
    n = alg.n
    br = alg.tribracket.bracket
    mul = alg.product.mul
    count = 0
    for values in itertools.product(range(1, n + 1), repeat=len(frag.internal)):
        full = dict(env)
        full.update(zip(frag.internal, values))
        ok = True
        for con in frag.constraints:
            if con.kind is _C:
                a, b, c, d = (full[r] for r in con.refs)
                if br(a, b, c) != d:
                    ok = False
                    break
            else:
                left, middle, right = (full[r] for r in con.refs)
                if mul(left, right) != middle:
                    ok = False
                    break
        if ok:
            count += 1
    return count


def check_move_invariance(alg: TribracketAlgebra, pair: LocalMovePair) -> MoveCheckReport:
    """Compare extension counts of both fragments over every boundary coloring.

    Returns PASS when the counts agree everywhere, otherwise the first failing
    boundary coloring (lexicographic order) with both counts.
    """
    n = alg.n
    for values in itertools.product(range(1, n + 1), repeat=len(pair.boundary)):
        env = dict(zip(pair.boundary, values))
        before = _extensions(alg, pair.before, env)
        after = _extensions(alg, pair.after, env)
        if before != after:
            return MoveCheckReport(pair.move_id, False, (env, before, after))
    return MoveCheckReport(pair.move_id, True)
