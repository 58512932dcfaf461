"""Region-constraint encodings of trivalent spatial-graph diagrams.

A diagram is stored as the constraint system its planar picture induces on
region colors: a crossing line ``crossing: a b c d`` demands bracket(a,b,c)=d
and a vertex line ``vertex: l m r`` demands l*r = m (the middle region between
the doubled strands is the product of the outer two).  Orientation and
over/under data are resolved when a picture is transcribed into this format,
not by the solver.

The bundled corpus covers an unknotted theta curve, a handcuff graph, a chain
of two genus-1 handlebodies, a genus-2/genus-1 handlebody pair, two order-3
graph diagrams distinguished by a sparse product (k1/k2), and two order-4
diagrams (z4_left/z4_right).
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from importlib import resources

_NAME_RE = re.compile(r"[A-Za-z0-9_]+")


class DiagramParseError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ConstraintKind(Enum):
    CROSSING = "crossing"
    VERTEX = "vertex"


class DiagramKind(Enum):
    SPATIAL_GRAPH = "spatial-graph"
    HANDLEBODY_LINK = "handlebody-link"


_ARITY = {ConstraintKind.CROSSING: 4, ConstraintKind.VERTEX: 3}


@dataclass(frozen=True)
class Constraint:
    kind: ConstraintKind
    refs: tuple[str, ...]

    def __post_init__(self):
        want = _ARITY[self.kind]
        if len(self.refs) != want:
            raise DiagramParseError(
                f"{self.kind.value} constraint needs {want} regions, got {len(self.refs)}"
            )


@dataclass(frozen=True)
class Diagram:
    name: str
    kind: DiagramKind
    regions: tuple[str, ...]
    constraints: tuple[Constraint, ...]

    def __post_init__(self):
        if not _NAME_RE.fullmatch(self.name):
            raise DiagramParseError(f"bad diagram name {self.name!r}")
        if not self.regions:
            raise DiagramParseError("a diagram needs at least one region")
        seen = set()
        for r in self.regions:
            if not r.isalnum():
                raise DiagramParseError(f"bad region name {r!r}")
            if r in seen:
                raise DiagramParseError(f"duplicate region declaration {r!r}")
            seen.add(r)
        for con in self.constraints:
            for r in con.refs:
                if r not in seen:
                    raise DiagramParseError(f"undeclared region {r!r}")


def parse_diagram(text: str) -> Diagram:
    """Parse the plain-text diagram format; '#' starts a comment."""
    name = None
    kind = None
    regions: tuple[str, ...] | None = None
    constraints: list[Constraint] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        m = re.fullmatch(r"name\s*=\s*(\S+)", line)
        if m:
            if name is not None:
                raise DiagramParseError("duplicate name line", lineno)
            name = m.group(1)
            continue
        m = re.fullmatch(r"kind\s*=\s*(\S+)", line)
        if m:
            if kind is not None:
                raise DiagramParseError("duplicate kind line", lineno)
            try:
                kind = DiagramKind(m.group(1))
            except ValueError:
                raise DiagramParseError(
                    f"unknown kind {m.group(1)!r} (expected spatial-graph or handlebody-link)",
                    lineno,
                ) from None
            continue
        m = re.fullmatch(r"regions\s*:\s*(.*)", line)
        if m:
            if regions is not None:
                raise DiagramParseError("duplicate regions line", lineno)
            regions = tuple(m.group(1).split())
            if not regions:
                raise DiagramParseError("empty region list", lineno)
            continue
        m = re.fullmatch(r"(crossing|vertex)\s*:\s*(.*)", line)
        if m:
            ckind = ConstraintKind(m.group(1))
            refs = tuple(m.group(2).split())
            if len(refs) != _ARITY[ckind]:
                raise DiagramParseError(
                    f"{ckind.value} constraint needs {_ARITY[ckind]} regions, got {len(refs)}",
                    lineno,
                )
            if regions is None:
                raise DiagramParseError("constraint before regions line", lineno)
            for r in refs:
                if r not in regions:
                    raise DiagramParseError(f"undeclared region {r!r}", lineno)
            constraints.append(Constraint(ckind, refs))
            continue
        raise DiagramParseError(f"unrecognized line {line!r}", lineno)
    if name is None:
        raise DiagramParseError("missing name line")
    if kind is None:
        raise DiagramParseError("missing kind line")
    if regions is None:
        raise DiagramParseError("missing regions line")
    return Diagram(name, kind, regions, tuple(constraints))


def serialize_diagram(d: Diagram) -> str:
    """Inverse of parse_diagram."""
    lines = [
        f"name = {d.name}",
        f"kind = {d.kind.value}",
        "regions: " + " ".join(d.regions),
    ]
    for con in d.constraints:
        lines.append(f"{con.kind.value}: " + " ".join(con.refs))
    return "\n".join(lines) + "\n"


_BUNDLED = (
    "theta",
    "handcuff",
    "hopf_handlebody",
    "genus2_link",
    "k1",
    "k2",
    "z4_left",
    "z4_right",
)


def load_bundled_diagram(name: str) -> Diagram:
    text = (
        resources.files("tribrackets")
        .joinpath(f"data/diagrams/{name}.dia")
        .read_text(encoding="utf-8")
    )
    return parse_diagram(text)


def builtin_diagrams() -> list[Diagram]:
    """The bundled diagram corpus, parsed from the package data files."""
    return [load_bundled_diagram(name) for name in _BUNDLED]
