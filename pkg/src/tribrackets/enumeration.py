"""Exhaustive search for small tribrackets and compatible partial products.

Both enumerators are deterministic: cells are filled in lexicographic order
and candidate values ascend, so output arrives sorted by flattened table
(undefined cells sorting before 1).  Everything returned has already passed
its verifier.
"""
from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Iterator, Optional

from .algebra import (
    PartialProduct,
    Tribracket,
    TribracketAlgebra,
    is_idempotent,
    verify_algebra,
    verify_tribracket,
)


@dataclass(frozen=True)
class EnumerationBudget:
    """Caps for a search: candidate tables examined and wall-clock seconds."""

    max_candidates: Optional[int] = None
    timeout: Optional[float] = None

    def __post_init__(self):
        if self.max_candidates is not None and self.max_candidates < 1:
            raise ValueError("max_candidates must be positive")
        if self.timeout is not None and self.timeout <= 0:
            raise ValueError("timeout must be positive")


@dataclass
class EnumerationResult:
    """Search output plus a flag telling whether the search ran to completion."""

    items: list
    complete: bool

    def __iter__(self) -> Iterator:
        return iter(self.items)

    def __len__(self) -> int:
        return len(self.items)

    def __getitem__(self, i):
        return self.items[i]


class _BudgetTracker:
    def __init__(self, budget: Optional[EnumerationBudget]):
        self.max_candidates = budget.max_candidates if budget else None
        self.deadline = (
            time.monotonic() + budget.timeout
            if budget and budget.timeout is not None
            else None
        )
        self.candidates = 0
        self.exhausted = False

    def spend(self) -> bool:
        """Account for one examined candidate; False when the budget is gone."""
        self.candidates += 1
        if self.max_candidates is not None and self.candidates > self.max_candidates:
            self.exhausted = True
        elif self.deadline is not None and time.monotonic() > self.deadline:
            self.exhausted = True
        return not self.exhausted


def enumerate_tribrackets(
    n: int, budget: Optional[EnumerationBudget] = None
) -> EnumerationResult:
    """All n-element tribrackets, in lexicographic tensor order.

    Backtracks over tensor cells pruning on slot bijectivity (each partial
    line must stay duplicate-free); complete tensors are kept when both
    coherence identities hold.  Practical for n <= 4 with a budget.
    """
    if n < 1:
        raise ValueError("carrier size must be positive")
    tracker = _BudgetTracker(budget)
    cells = [(a, b, c) for a in range(n) for b in range(n) for c in range(n)]
    table = [[[0] * n for _ in range(n)] for _ in range(n)]
    out: list[Tribracket] = []

    def line_free(a: int, b: int, c: int, v: int) -> bool:
        # lex fill order: earlier cells on the same line have smaller index
        for cc in range(c):
            if table[a][b][cc] == v:
                return False
        for bb in range(b):
            if table[a][bb][c] == v:
                return False
        for aa in range(a):
            if table[aa][b][c] == v:
                return False
        return True

    def rec(i: int) -> bool:
        if i == len(cells):
            if not tracker.spend():
                return False
            t = Tribracket(n, tuple(tuple(tuple(r) for r in m) for m in table))
            if verify_tribracket(t).passed:
                out.append(t)
            return True
        a, b, c = cells[i]
        for v in range(1, n + 1):
            if line_free(a, b, c, v):
                table[a][b][c] = v
                if not rec(i + 1):
                    return False
        return True

    complete = rec(0)
    return EnumerationResult(out, complete)


def _candidate_values(t: Tribracket, a: int, b: int) -> list[int]:
    # the r4 compatibility condition pins each defined cell to a fixpoint
    return [v for v in range(1, t.n + 1) if t.bracket(a, v, b) == v]


def enumerate_products(t: Tribracket) -> list[PartialProduct]:
    """Every partial product compatible with t, empty table included.

    Cells are tried undefined-first then in ascending value order, pruning on
    cancellation and the vertex fixpoint condition; survivors are filtered by
    the full algebra verifier.
    """
    if not verify_tribracket(t).passed:
        raise ValueError("tribracket must pass its axioms before product search")
    n = t.n
    cells = [(a, b) for a in range(1, n + 1) for b in range(1, n + 1)]
    cand = {cell: _candidate_values(t, *cell) for cell in cells}
    grid: dict[tuple[int, int], int] = {}
    out: list[PartialProduct] = []

    def rec(i: int) -> None:
        if i == len(cells):
            table = tuple(
                tuple(grid.get((a, b)) for b in range(1, n + 1))
                for a in range(1, n + 1)
            )
            p = PartialProduct(n, table)
            if verify_algebra(TribracketAlgebra(t, p)).passed:
                out.append(p)
            return
        a, b = cells[i]
        rec(i + 1)  # undefined sorts first
        for v in cand[(a, b)]:
            if any(grid.get((a, bb)) == v for bb in range(1, n + 1)) or any(
                grid.get((aa, b)) == v for aa in range(1, n + 1)
            ):
                continue
            grid[(a, b)] = v
            rec(i + 1)
            del grid[(a, b)]

    rec(0)
    return out


def enumerate_idempotent_products(t: Tribracket) -> list[PartialProduct]:
    """The compatible products defined exactly on the diagonal with aa = a."""
    return [
        p
        for p in enumerate_products(t)
        if is_idempotent(TribracketAlgebra(t, p))
    ]
