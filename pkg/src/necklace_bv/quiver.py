"""Quivers, their doubles, and the arrow indicator pairing.

Arrows of the doubled quiver are addressed by integer codes: the original
arrow with base index ``k`` has code ``2*k`` and its double has code
``2*k + 1``.  Ordering codes numerically orders arrows by base index first,
with the original before its double, which is the order used for every
canonical form downstream.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple


class QuiverError(ValueError):
    """Malformed quiver data or quiver text."""


class DoubledArrow(NamedTuple):
    base: int
    is_double: bool
    source: int
    target: int
    degree: int

    @property
    def code(self) -> int:
        return 2 * self.base + int(self.is_double)


def bar(code: int) -> int:
    """The involution a <-> ~a on arrow codes."""
    return code ^ 1


def is_double(code: int) -> bool:
    return bool(code & 1)


@dataclass(frozen=True)
class Quiver:
    vertices: tuple[str, ...]
    arrows: tuple[tuple[str, str, str], ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "arrows", tuple(tuple(a) for a in self.arrows))
        if len(set(self.vertices)) != len(self.vertices):
            raise QuiverError("duplicate vertex identifier")
        names = [a[0] for a in self.arrows]
        if len(set(names)) != len(names):
            raise QuiverError("duplicate arrow identifier")
        vs = set(self.vertices)
        for name, s, t in self.arrows:
            if name.startswith("~") or not name:
                raise QuiverError(f"invalid arrow name {name!r}")
            if s not in vs or t not in vs:
                raise QuiverError(f"arrow {name!r} uses an undeclared vertex")

    def vertex_index(self, name: str) -> int:
        try:
            return self.vertices.index(name)
        except ValueError:
            raise QuiverError(f"unknown vertex {name!r}") from None


class DoubledQuiver:
    """The double of ``quiver`` with arrow degrees fixed by the parity ``p``.

    Original arrows have degree 0 and doubles have degree ``p``.
    """

    def __init__(self, quiver: Quiver, p: int):
        if p not in (0, 1):
            raise QuiverError("p must be 0 or 1")
        self.quiver = quiver
        self.p = p
        self.n_vertices = len(quiver.vertices)
        src, tgt, names = [], [], []
        for name, s, t in quiver.arrows:
            si, ti = quiver.vertex_index(s), quiver.vertex_index(t)
            src += [si, ti]
            tgt += [ti, si]
            names += [name, "~" + name]
        self.source = tuple(src)
        self.target = tuple(tgt)
        self.names = tuple(names)
        self.degree = tuple((c & 1) * p for c in range(len(names)))
        self._code_of = {n: c for c, n in enumerate(names)}
        self._out: dict[int, list[int]] = {v: [] for v in range(self.n_vertices)}
        for c in range(len(names)):
            self._out[self.source[c]].append(c)

    @property
    def codes(self) -> range:
        return range(len(self.names))

    def arrow(self, code: int) -> DoubledArrow:
        return DoubledArrow(code >> 1, bool(code & 1), self.source[code],
                            self.target[code], self.degree[code])

    def arrows(self) -> list[DoubledArrow]:
        return [self.arrow(c) for c in self.codes]

    def code(self, name: str) -> int:
        try:
            return self._code_of[name]
        except KeyError:
            raise QuiverError(f"unknown arrow {name!r}") from None

    def outgoing(self, vertex: int) -> list[int]:
        return self._out[vertex]

    def vertex_name(self, v: int) -> str:
        return self.quiver.vertices[v]

    def __eq__(self, other):
        return (isinstance(other, DoubledQuiver) and self.p == other.p
                and self.quiver == other.quiver)

    def __hash__(self):
        return hash((self.quiver, self.p))

    def __repr__(self):
        return f"DoubledQuiver({self.quiver!r}, p={self.p})"


def double(q: Quiver, p: int = 0) -> DoubledQuiver:
    return DoubledQuiver(q, p)


def indicator(a: int, b: int, p: int) -> int:
    """<a, b>: 1 for (a, ~a), (-1)^(p+1) for (~a, a), 0 otherwise."""
    if b != bar(a):
        return 0
    if a & 1:
        return 1 if p == 1 else -1
    return 1


# -- text format -------------------------------------------------------------

def parse_quiver(text: str) -> Quiver:
    vertices = None
    arrows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("vertices:"):
            if vertices is not None:
                raise QuiverError(f"line {lineno}: vertices declared twice")
            vertices = line[len("vertices:"):].split()
            continue
        parts = line.split()
        if parts[0] == "arrow":
            if len(parts) != 4:
                raise QuiverError(f"line {lineno}: expected 'arrow <name> <src> <tgt>'")
            arrows.append(tuple(parts[1:]))
        else:
            raise QuiverError(f"line {lineno}: unrecognised directive {parts[0]!r}")
    if vertices is None:
        raise QuiverError("missing 'vertices:' line")
    try:
        return Quiver(tuple(vertices), tuple(arrows))
    except QuiverError as exc:
        raise QuiverError(f"invalid quiver: {exc}") from None


def format_quiver(q: Quiver) -> str:
    lines = ["vertices: " + " ".join(q.vertices)]
    lines += [f"arrow {n} {s} {t}" for n, s, t in q.arrows]
    return "\n".join(lines) + "\n"


def jordan() -> Quiver:
    return Quiver(("v",), (("a", "v", "v"),))


def a2() -> Quiver:
    return Quiver(("v", "w"), (("a", "v", "w"),))


def two_loop() -> Quiver:
    return Quiver(("v",), (("a", "v", "v"), ("b", "v", "v")))

