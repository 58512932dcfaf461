"""Finite tribrackets and their compatible partial products.

Elements of a size-n carrier are plain integers 1..n.  A tribracket is an
n x n x n operation tensor; the value of bracket(a, b, c) is found in matrix
a, row b, column c.  A partial product is an n x n table whose cells may be
undefined (stored as None).

Every axiom checker returns an :class:`AxiomReport` whose violations carry a
witness tuple; re-evaluating the witness against the structure reproduces the
reported mismatch, so reports are self-certifying.  Checks run in a fixed
order (shape, slot bijectivity, coherence, cancellation, vertex/crossing
compatibility) and witnesses are emitted in lexicographic order, so reports
are byte-stable across runs.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Optional


class ShapeError(ValueError):
    """Structural defect (dimensions, sizes, entry range), not an axiom failure."""


class AlgebraParseError(ValueError):
    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class BracketSlot(Enum):
    A = "a"
    B = "b"
    C = "c"
    RESULT = "result"


class ProductSlot(Enum):
    LEFT = "left"
    RIGHT = "right"
    RESULT = "result"


@dataclass(frozen=True)
class Violation:
    """One axiom failure: the witness inputs plus both evaluated sides.

    ``lhs``/``rhs`` are None when the corresponding side is an undefined
    product.  For bijectivity and cancellation failures the two sides are the
    equal values produced by the two witness inputs that should have differed.
    """

    axiom: str
    witness: tuple[int, ...]
    lhs: Optional[int]
    rhs: Optional[int]


@dataclass(frozen=True)
class AxiomReport:
    violations: tuple[Violation, ...]

    @property
    def passed(self) -> bool:
        return not self.violations

    def summary(self) -> str:
        if self.passed:
            return "PASS"
        lines = [f"FAIL ({len(self.violations)} violations)"]
        for v in self.violations:
            lines.append(
                f"  {v.axiom} at {v.witness}: {_fmt(v.lhs)} vs {_fmt(v.rhs)}"
            )
        return "\n".join(lines)


def _fmt(value: Optional[int]) -> str:
    return "undefined" if value is None else str(value)


@dataclass(frozen=True)
class Tribracket:
    """An n x n x n operation tensor with entries in 1..n."""

    n: int
    table: tuple[tuple[tuple[int, ...], ...], ...]

    def __post_init__(self):
        if self.n < 1:
            raise ShapeError(f"carrier size must be positive, got {self.n}")
        try:
            tab = tuple(tuple(tuple(row) for row in mat) for mat in self.table)
        except TypeError:
            raise ShapeError("table must be nested n x n x n sequences") from None
        if len(tab) != self.n or any(
            len(mat) != self.n or any(len(row) != self.n for row in mat)
            for mat in tab
        ):
            raise ShapeError(f"table is not {self.n}x{self.n}x{self.n}")
        object.__setattr__(self, "table", tab)

    def bracket(self, a: int, b: int, c: int) -> int:
        """Look up matrix a, row b, column c."""
        return self.table[a - 1][b - 1][c - 1]

    def __call__(self, a: int, b: int, c: int) -> int:
        return self.table[a - 1][b - 1][c - 1]


UNDEFINED = None


@dataclass(frozen=True)
class PartialProduct:
    """An n x n partial multiplication table; None marks undefined cells."""

    n: int
    table: tuple[tuple[Optional[int], ...], ...]

    def __post_init__(self):
        if self.n < 1:
            raise ShapeError(f"carrier size must be positive, got {self.n}")
        try:
            tab = tuple(tuple(row) for row in self.table)
        except TypeError:
            raise ShapeError("table must be nested n x n sequences") from None
        if len(tab) != self.n or any(len(row) != self.n for row in tab):
            raise ShapeError(f"table is not {self.n}x{self.n}")
        object.__setattr__(self, "table", tab)

    @classmethod
    def empty(cls, n: int) -> "PartialProduct":
        return cls(n, tuple((None,) * n for _ in range(n)))

    @classmethod
    def diagonal(cls, n: int) -> "PartialProduct":
        return cls(
            n,
            tuple(
                tuple(a if a == b else None for b in range(1, n + 1))
                for a in range(1, n + 1)
            ),
        )

    def mul(self, a: int, b: int) -> Optional[int]:
        return self.table[a - 1][b - 1]

    def defined_cells(self) -> list[tuple[int, int]]:
        return [
            (a, b)
            for a in range(1, self.n + 1)
            for b in range(1, self.n + 1)
            if self.table[a - 1][b - 1] is not None
        ]


@dataclass(frozen=True)
class TribracketAlgebra:
    """A tribracket together with a compatible partial product on the same set."""

    tribracket: Tribracket
    product: PartialProduct

    def __post_init__(self):
        if self.tribracket.n != self.product.n:
            raise ShapeError(
                f"size mismatch: tribracket on {self.tribracket.n} elements, "
                f"product on {self.product.n}"
            )

    @property
    def n(self) -> int:
        return self.tribracket.n

    @cached_property
    def idempotent(self) -> bool:
        return is_idempotent(self)


def _check_entries(t: Tribracket) -> None:
    n = t.n
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            for c in range(1, n + 1):
                v = t.table[a - 1][b - 1][c - 1]
                if not isinstance(v, int) or not 1 <= v <= n:
                    raise ShapeError(f"entry ({a},{b},{c}) = {v!r} is not in 1..{n}")


def verify_tribracket(t: Tribracket) -> AxiomReport:
    """Check slot bijectivity and both coherence identities, with witnesses.

    Raises ShapeError for out-of-range entries; axiom failures go into the
    report.  Violation order: slot-a, slot-b, slot-c bijectivity, then
    coherence-1, coherence-2, each family in lexicographic witness order.
    """
    _check_entries(t)
    n, tab = t.n, t.table
    viol: list[Violation] = []

    fam: list[Violation] = []
    for b in range(1, n + 1):
        for c in range(1, n + 1):
            seen: dict[int, int] = {}
            for a in range(1, n + 1):
                v = tab[a - 1][b - 1][c - 1]
                if v in seen:
                    fam.append(Violation("slot-a-bijection", (b, c, seen[v], a), v, v))
                else:
                    seen[v] = a
    viol.extend(sorted(fam, key=lambda x: x.witness))
    fam = []
    for a in range(1, n + 1):
        for c in range(1, n + 1):
            seen = {}
            for b in range(1, n + 1):
                v = tab[a - 1][b - 1][c - 1]
                if v in seen:
                    fam.append(Violation("slot-b-bijection", (a, c, seen[v], b), v, v))
                else:
                    seen[v] = b
    viol.extend(sorted(fam, key=lambda x: x.witness))
    fam = []
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            seen = {}
            for c in range(1, n + 1):
                v = tab[a - 1][b - 1][c - 1]
                if v in seen:
                    fam.append(Violation("slot-c-bijection", (a, b, seen[v], c), v, v))
                else:
                    seen[v] = c
    viol.extend(sorted(fam, key=lambda x: x.witness))

    coh1: list[Violation] = []
    coh2: list[Violation] = []
    rng = range(1, n + 1)
    for a in rng:
        mat_a = tab[a - 1]
        for b in rng:
            mat_b = tab[b - 1]
            row_ab = mat_a[b - 1]
            for c in rng:
                u = row_ab[c - 1]  # bracket(a, b, c)
                mat_u = tab[u - 1]
                row_bc = mat_b[c - 1]
                row_uc = mat_u[c - 1]
                for d in rng:
                    w = row_bc[d - 1]  # bracket(b, c, d)
                    lhs1 = row_ab[w - 1]  # bracket(a, b, w)
                    rhs1 = mat_a[u - 1][row_uc[d - 1] - 1]
                    if lhs1 != rhs1:
                        coh1.append(Violation("coherence-1", (a, b, c, d), lhs1, rhs1))
                    lhs2 = row_uc[d - 1]  # bracket(u, c, d)
                    rhs2 = tab[lhs1 - 1][w - 1][d - 1]
                    if lhs2 != rhs2:
                        coh2.append(Violation("coherence-2", (a, b, c, d), lhs2, rhs2))
    viol.extend(coh1)
    viol.extend(coh2)
    return AxiomReport(tuple(viol))


def _check_product_entries(p: PartialProduct) -> None:
    for a in range(1, p.n + 1):
        for b in range(1, p.n + 1):
            v = p.table[a - 1][b - 1]
            if v is not None and (not isinstance(v, int) or not 1 <= v <= p.n):
                raise ShapeError(f"product entry ({a},{b}) = {v!r} is not in 1..{p.n}")


def verify_algebra(alg: TribracketAlgebra) -> AxiomReport:
    """Check cancellation and all bracket/product compatibility conditions.

    The four r5-compat families pair each side's definedness with the other:
    a violation whose lhs or rhs is None records a definedness mismatch.
    Assumes the tribracket itself already passes verify_tribracket.
    """
    _check_product_entries(alg.product)
    n = alg.n
    t, p = alg.tribracket, alg.product
    br = t.bracket
    mul = p.mul
    viol: list[Violation] = []

    fam: list[Violation] = []
    for a in range(1, n + 1):
        seen: dict[int, int] = {}
        for b in range(1, n + 1):
            v = mul(a, b)
            if v is None:
                continue
            if v in seen:
                fam.append(Violation("left-cancellation", (a, seen[v], b), v, v))
            else:
                seen[v] = b
    viol.extend(sorted(fam, key=lambda x: x.witness))
    fam = []
    for b in range(1, n + 1):
        seen = {}
        for a in range(1, n + 1):
            v = mul(a, b)
            if v is None:
                continue
            if v in seen:
                fam.append(Violation("right-cancellation", (b, seen[v], a), v, v))
            else:
                seen[v] = a
    viol.extend(sorted(fam, key=lambda x: x.witness))

    for a in range(1, n + 1):
        for b in range(1, n + 1):
            ab = mul(a, b)
            if ab is not None and br(a, ab, b) != ab:
                viol.append(Violation("r4-compat", (a, b), br(a, ab, b), ab))

    fam1: list[Violation] = []
    fam2: list[Violation] = []
    fam3: list[Violation] = []
    fam4: list[Violation] = []
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            ab = mul(a, b)
            for c in range(1, n + 1):
                u = br(a, b, c)
                bc = mul(b, c)
                # both sides must be defined together and then agree
                lhs = mul(a, u)
                rhs = None if bc is None else br(a, b, bc)
                if lhs != rhs:
                    fam1.append(Violation("r5-compat-1", (a, b, c), lhs, rhs))
                lhs = mul(u, c)
                rhs = None if ab is None else br(ab, b, c)
                if lhs != rhs:
                    fam2.append(Violation("r5-compat-2", (a, b, c), lhs, rhs))
                if bc is not None:
                    rhs = br(br(a, b, bc), bc, c)
                    if u != rhs:
                        fam3.append(Violation("r5-compat-3", (a, b, c), u, rhs))
                if ab is not None:
                    rhs = br(a, ab, br(ab, b, c))
                    if u != rhs:
                        fam4.append(Violation("r5-compat-4", (a, b, c), u, rhs))
    viol.extend(fam1)
    viol.extend(fam2)
    viol.extend(fam3)
    viol.extend(fam4)
    return AxiomReport(tuple(viol))


def is_idempotent(alg: TribracketAlgebra) -> bool:
    """True iff the product is defined exactly on the diagonal with aa = a."""
    n = alg.n
    p = alg.product
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            v = p.mul(a, b)
            if a == b:
                if v != a:
                    return False
            elif v is not None:
                return False
    return True


def alexander_tribracket(n: int, x: int, y: int) -> Tribracket:
    """The linear tribracket a, b, c -> x*a - x*y*b + y*c over Z/n.

    x and y must be units mod n; residue 0 is written as the label n.
    """
    if n < 1:
        raise ValueError(f"carrier size must be positive, got {n}")
    if math.gcd(x, n) != 1:
        raise ValueError(f"x = {x} is not a unit mod {n}")
    if math.gcd(y, n) != 1:
        raise ValueError(f"y = {y} is not a unit mod {n}")
    table = [
        [
            [
                (x * a - x * y * b + y * c - 1) % n + 1
                for c in range(1, n + 1)
            ]
            for b in range(1, n + 1)
        ]
        for a in range(1, n + 1)
    ]
    return Tribracket(n, tuple(tuple(tuple(r) for r in m) for m in table))


def tribracket_solve(t: Tribracket, slot: BracketSlot, known: tuple[int, int, int]) -> int:
    """Fill the named slot of bracket(a, b, c) = d from the other three.

    ``known`` lists the three given values in slot order (a, b, c, d) with the
    unknown omitted.  Total on any tensor passing verify_tribracket.
    """
    if slot is BracketSlot.RESULT:
        a, b, c = known
        return t.bracket(a, b, c)
    if slot is BracketSlot.A:
        b, c, d = known
        for a in range(1, t.n + 1):
            if t.bracket(a, b, c) == d:
                return a
        raise LookupError(f"no a with bracket(a,{b},{c}) = {d}")
    if slot is BracketSlot.B:
        a, c, d = known
        for b in range(1, t.n + 1):
            if t.bracket(a, b, c) == d:
                return b
        raise LookupError(f"no b with bracket({a},b,{c}) = {d}")
    a, b, d = known
    for c in range(1, t.n + 1):
        if t.bracket(a, b, c) == d:
            return c
    raise LookupError(f"no c with bracket({a},{b},c) = {d}")


def product_solve(
    p: PartialProduct, slot: ProductSlot, known: tuple[int, int]
) -> Optional[int]:
    """Fill the named slot of a*b = c, or None if no table entry matches.

    RESULT takes (a, b); LEFT takes (b, c); RIGHT takes (a, c).  Uniqueness of
    LEFT/RIGHT answers is guaranteed by cancellation.
    """
    if slot is ProductSlot.RESULT:
        a, b = known
        return p.mul(a, b)
    if slot is ProductSlot.LEFT:
        b, c = known
        for a in range(1, p.n + 1):
            if p.mul(a, b) == c:
                return a
        return None
    a, c = known
    for b in range(1, p.n + 1):
        if p.mul(a, b) == c:
            return b
    return None


def recheck_violation(
    v: Violation, t: Tribracket, p: Optional[PartialProduct] = None
) -> bool:
    """Re-evaluate a violation witness; True iff the failure reproduces."""
    br = t.bracket
    if v.axiom == "slot-a-bijection":
        b, c, a1, a2 = v.witness
        return a1 != a2 and br(a1, b, c) == br(a2, b, c) == v.lhs
    if v.axiom == "slot-b-bijection":
        a, c, b1, b2 = v.witness
        return b1 != b2 and br(a, b1, c) == br(a, b2, c) == v.lhs
    if v.axiom == "slot-c-bijection":
        a, b, c1, c2 = v.witness
        return c1 != c2 and br(a, b, c1) == br(a, b, c2) == v.lhs
    if v.axiom == "coherence-1":
        a, b, c, d = v.witness
        u = br(a, b, c)
        lhs = br(a, b, br(b, c, d))
        rhs = br(a, u, br(u, c, d))
        return lhs != rhs and lhs == v.lhs and rhs == v.rhs
    if v.axiom == "coherence-2":
        a, b, c, d = v.witness
        u = br(a, b, c)
        w = br(b, c, d)
        lhs = br(u, c, d)
        rhs = br(br(a, b, w), w, d)
        return lhs != rhs and lhs == v.lhs and rhs == v.rhs
    assert p is not None, f"product violation {v.axiom} needs the product table"
    mul = p.mul
    if v.axiom == "left-cancellation":
        a, b1, b2 = v.witness
        return b1 != b2 and mul(a, b1) == mul(a, b2) == v.lhs
    if v.axiom == "right-cancellation":
        b, a1, a2 = v.witness
        return a1 != a2 and mul(a1, b) == mul(a2, b) == v.lhs
    if v.axiom == "r4-compat":
        a, b = v.witness
        ab = mul(a, b)
        return ab is not None and br(a, ab, b) != ab and v.lhs == br(a, ab, b)
    if v.axiom == "r5-compat-1":
        a, b, c = v.witness
        u = br(a, b, c)
        bc, au = mul(b, c), mul(a, u)
        lhs = au
        rhs = None if bc is None else br(a, b, bc)
        return lhs != rhs and lhs == v.lhs and rhs == v.rhs
    if v.axiom == "r5-compat-2":
        a, b, c = v.witness
        u = br(a, b, c)
        ab, uc = mul(a, b), mul(u, c)
        lhs = uc
        rhs = None if ab is None else br(ab, b, c)
        return lhs != rhs and lhs == v.lhs and rhs == v.rhs
    if v.axiom == "r5-compat-3":
        a, b, c = v.witness
        bc = mul(b, c)
        if bc is None:
            return False
        lhs = br(a, b, c)
        rhs = br(br(a, b, bc), bc, c)
        return lhs != rhs and lhs == v.lhs and rhs == v.rhs
    if v.axiom == "r5-compat-4":
        a, b, c = v.witness
        ab = mul(a, b)
        if ab is None:
            return False
        lhs = br(a, b, c)
        rhs = br(a, ab, br(ab, b, c))
        return lhs != rhs and lhs == v.lhs and rhs == v.rhs
    raise ValueError(f"unknown axiom id {v.axiom!r}")


# ---------------------------------------------------------------------------
# plain-text algebra files
#
#   n = 3
#   tribracket:
#   1 2 3 / 3 1 2 / 2 3 1        <- matrix 1 (rows separated by /)
#   ...
#   product:                      <- optional block
#   1 3 2 / 3 2 1 / 2 1 3
#
# '#' starts a comment; '-' or '0' in the product block mean undefined.

def _strip(line: str) -> str:
    return line.split("#", 1)[0].strip()


def _parse_matrix(text: str, n: int, lineno: int, allow_undef: bool) -> list[list[Optional[int]]]:
    rows = [r.strip() for r in text.split("/")]
    if len(rows) != n:
        raise AlgebraParseError(f"expected {n} rows separated by '/', got {len(rows)}", lineno)
    out: list[list[Optional[int]]] = []
    for r in rows:
        cells = r.split()
        if len(cells) != n:
            raise AlgebraParseError(f"expected {n} entries per row, got {len(cells)}", lineno)
        row: list[Optional[int]] = []
        for cell in cells:
            if cell in ("-", "0"):
                if not allow_undef:
                    raise AlgebraParseError(
                        f"undefined entry {cell!r} is not allowed in a tribracket", lineno
                    )
                row.append(None)
            else:
                try:
                    v = int(cell)
                except ValueError:
                    raise AlgebraParseError(f"bad entry {cell!r}", lineno) from None
                if not 1 <= v <= n:
                    raise AlgebraParseError(f"entry {v} out of range 1..{n}", lineno)
                row.append(v)
        out.append(row)
    return out


def parse_algebra(text: str) -> tuple[Tribracket, Optional[PartialProduct]]:
    """Parse an algebra file; returns the tensor and the product (None if absent)."""
    lines = text.splitlines()
    i = 0

    def next_content() -> tuple[Optional[str], int]:
        nonlocal i
        while i < len(lines):
            s = _strip(lines[i])
            i += 1
            if s:
                return s, i
        return None, i

    s, ln = next_content()
    if s is None:
        raise AlgebraParseError("empty algebra file")
    m = re.fullmatch(r"n\s*=\s*(\d+)", s)
    if not m:
        raise AlgebraParseError(f"expected 'n = <size>', got {s!r}", ln)
    n = int(m.group(1))
    if n < 1:
        raise AlgebraParseError("size must be positive", ln)

    s, ln = next_content()
    if s != "tribracket:":
        raise AlgebraParseError(f"expected 'tribracket:', got {s!r}", ln)
    mats = []
    for _ in range(n):
        s, ln = next_content()
        if s is None:
            raise AlgebraParseError(f"expected {n} tribracket matrices", ln)
        mats.append(_parse_matrix(s, n, ln, allow_undef=False))
    tribracket = Tribracket(n, tuple(tuple(tuple(r) for r in m) for m in mats))

    s, ln = next_content()
    if s is None:
        return tribracket, None
    if s != "product:":
        raise AlgebraParseError(f"expected 'product:' or end of file, got {s!r}", ln)
    s, ln = next_content()
    if s is None:
        raise AlgebraParseError("missing product table", ln)
    rows = _parse_matrix(s, n, ln, allow_undef=True)
    product = PartialProduct(n, tuple(tuple(r) for r in rows))
    s, ln = next_content()
    if s is not None:
        raise AlgebraParseError(f"unexpected trailing content {s!r}", ln)
    return tribracket, product


def serialize_algebra(t: Tribracket, p: Optional[PartialProduct] = None) -> str:
    """Inverse of parse_algebra (undefined cells rendered as '-')."""
    lines = [f"n = {t.n}", "tribracket:"]
    for mat in t.table:
        lines.append(" / ".join(" ".join(str(v) for v in row) for row in mat))
    if p is not None:
        lines.append("product:")
        lines.append(
            " / ".join(
                " ".join("-" if v is None else str(v) for v in row) for row in p.table
            )
        )
    return "\n".join(lines) + "\n"
