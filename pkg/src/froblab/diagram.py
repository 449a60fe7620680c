"""Tensor schemes and progressive plane string diagrams in layered form.

A diagram is stored as a sequence of slices read left to right.  Each slice
is a top-to-bottom row of atoms, every atom being either an identity wire or
an occurrence of a generator.  Composition concatenates slices, tensoring
stacks them.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Sequence, Union

Word = tuple[str, ...]


class DiagramError(ValueError):
    """Raised for ill-formed diagrams and interface mismatches."""


@dataclass(frozen=True)
class Generator:
    name: str
    source: Word
    target: Word

    def __post_init__(self):
        object.__setattr__(self, "source", tuple(self.source))
        object.__setattr__(self, "target", tuple(self.target))


@dataclass(frozen=True)
class TensorScheme:
    vertices: frozenset
    edges: tuple[Generator, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "vertices", frozenset(self.vertices))
        object.__setattr__(self, "edges", tuple(self.edges))

    def generator(self, name: str) -> Generator:
        for g in self.edges:
            if g.name == name:
                return g
        raise KeyError(f"unknown generator {name!r}")

    def __contains__(self, name: str) -> bool:
        return any(g.name == name for g in self.edges)

    def union(self, other: "TensorScheme") -> "TensorScheme":
        edges = list(self.edges) + [g for g in other.edges if g.name not in self]
        return TensorScheme(self.vertices | other.vertices, tuple(edges))


@dataclass
class ValidationReport:
    undeclared: list[str] = field(default_factory=list)
    duplicates: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not (self.undeclared or self.duplicates)


def validate_scheme(scheme: TensorScheme) -> ValidationReport:
    report = ValidationReport()
    seen = set()
    for g in scheme.edges:
        if g.name in seen and g.name not in report.duplicates:
            report.duplicates.append(g.name)
        seen.add(g.name)
        for label in g.source + g.target:
            if label not in scheme.vertices and label not in report.undeclared:
                report.undeclared.append(label)
    return report


@dataclass(frozen=True)
class Wire:
    label: str

    @property
    def source(self) -> Word:
        return (self.label,)

    target = source


@dataclass(frozen=True)
class Node:
    symbol: str
    source: Word
    target: Word
    id: int = 0


Atom = Union[Wire, Node]
Slice = tuple  # tuple[Atom, ...]


def slice_input(s: Sequence[Atom]) -> Word:
    return tuple(label for atom in s for label in atom.source)


def slice_output(s: Sequence[Atom]) -> Word:
    return tuple(label for atom in s for label in atom.target)


@dataclass(frozen=True)
class LayeredDiagram:
    input: Word
    output: Word
    slices: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "input", tuple(self.input))
        object.__setattr__(self, "output", tuple(self.output))
        object.__setattr__(self, "slices", tuple(tuple(s) for s in self.slices))
        word = self.input
        for k, s in enumerate(self.slices):
            if slice_input(s) != word:
                raise DiagramError(
                    f"slice {k} expects input {slice_input(s)}, got {word}")
            word = slice_output(s)
        if word != self.output:
            raise DiagramError(f"diagram output {self.output} != final slice output {word}")
        ids = [n.id for n in self.nodes]
        if len(set(ids)) != len(ids):
            raise DiagramError("duplicate node ids")

    @property
    def nodes(self) -> list[Node]:
        return [a for s in self.slices for a in s if isinstance(a, Node)]

    @property
    def node_ids(self) -> list[int]:
        return [n.id for n in self.nodes]

    def interfaces(self) -> list[Word]:
        """Words between consecutive slices, boundary words included."""
        words = [self.input]
        for s in self.slices:
            words.append(slice_output(s))
        return words

    def width(self) -> int:
        return max(len(w) for w in self.interfaces())

    def then(self, other: "LayeredDiagram") -> "LayeredDiagram":
        return compose(self, other)

    def tensor(self, other: "LayeredDiagram") -> "LayeredDiagram":
        return tensor(self, other)

    __rshift__ = then
    __matmul__ = tensor


def identity(word: Iterable[str]) -> LayeredDiagram:
    word = tuple(word)
    return LayeredDiagram(word, word, (tuple(Wire(x) for x in word),))


def generator_diagram(scheme: TensorScheme, symbol: str) -> LayeredDiagram:
    g = scheme.generator(symbol)
    return LayeredDiagram(g.source, g.target, ((Node(g.name, g.source, g.target, 0),),))


def _shift_ids(d: LayeredDiagram, offset: int) -> tuple:
    if offset == 0:
        return d.slices
    return tuple(
        tuple(Node(a.symbol, a.source, a.target, a.id + offset) if isinstance(a, Node) else a
              for a in s)
        for s in d.slices)


def _offset_for(first: LayeredDiagram, second: LayeredDiagram) -> int:
    a, b = set(first.node_ids), set(second.node_ids)
    if not (a & b):
        return 0
    return max(a) + 1 - min(b)


def compose(first: LayeredDiagram, second: LayeredDiagram) -> LayeredDiagram:
    """``first`` followed by ``second``; node ids of ``first`` are kept."""
    if first.output != second.input:
        raise DiagramError(f"cannot compose: {first.output} != {second.input}")
    slices = first.slices + _shift_ids(second, _offset_for(first, second))
    return LayeredDiagram(first.input, second.output, slices)


def tensor(top: LayeredDiagram, bottom: LayeredDiagram) -> LayeredDiagram:
    n = max(len(top.slices), len(bottom.slices))

    def padded(d, slices):
        pad = tuple(Wire(x) for x in d.output)
        return list(slices) + [pad] * (n - len(slices))

    bottom_slices = _shift_ids(bottom, _offset_for(top, bottom))
    slices = [a + b for a, b in zip(padded(top, top.slices), padded(bottom, bottom_slices))]
    return LayeredDiagram(top.input + bottom.input, top.output + bottom.output, slices)


def strip_identities(d: LayeredDiagram) -> LayeredDiagram:
    slices = tuple(s for s in d.slices if any(isinstance(a, Node) for a in s))
    return LayeredDiagram(d.input, d.output, slices)


def canonical(d: LayeredDiagram) -> LayeredDiagram:
    """Identity slices stripped and node ids renumbered in reading order."""
    d = strip_identities(d)
    counter = iter(range(len(d.nodes)))
    slices = tuple(
        tuple(Node(a.symbol, a.source, a.target, next(counter)) if isinstance(a, Node) else a
              for a in s)
        for s in d.slices)
    return LayeredDiagram(d.input, d.output, slices)


def sequentialize(d: LayeredDiagram) -> LayeredDiagram:
    """Split every slice so that each holds at most one node."""
    out = []
    for s in d.slices:
        nodes = [i for i, a in enumerate(s) if isinstance(a, Node)]
        if len(nodes) <= 1:
            out.append(s)
            continue
        # process nodes top to bottom: earlier atoms already emit their outputs
        for i in nodes:
            row = [Wire(x) for a in s[:i] for x in a.target]
            row.append(s[i])
            row += [Wire(x) for a in s[i + 1:] for x in a.source]
            out.append(tuple(row))
    return LayeredDiagram(d.input, d.output, out)


def _single_node(s) -> tuple[int, Node]:
    """Offset (in the slice input word) and node of a one-node slice."""
    nodes = [(i, a) for i, a in enumerate(s) if isinstance(a, Node)]
    if len(nodes) != 1:
        raise DiagramError("exchange needs slices with exactly one node")
    i, node = nodes[0]
    return len(slice_input(s[:i])), node


def _row(word: Word, offset: int, node: Node) -> tuple:
    n_in = len(node.source)
    return (tuple(Wire(x) for x in word[:offset]) + (node,)
            + tuple(Wire(x) for x in word[offset + n_in:]))


def exchange(d: LayeredDiagram, k: int) -> LayeredDiagram:
    """Swap the nodes of slices ``k`` and ``k+1`` when they share no wire.

    Both slices must contain exactly one node.  This is the elementary
    planar deformation available in layered form.
    """
    s1, s2 = d.slices[k], d.slices[k + 1]
    p, n1 = _single_node(s1)
    q, n2 = _single_node(s2)
    words = d.interfaces()
    w0 = words[k]
    out1, in2 = len(n1.target), len(n2.source)
    if q + in2 <= p:  # n2 sits above n1
        first = _row(w0, q, n2)
        mid = slice_output(first)
        second = _row(mid, p - in2 + len(n2.target), n1)
    elif q >= p + out1:  # n2 sits below n1
        q0 = q - out1 + len(n1.source)
        first = _row(w0, q0, n2)
        mid = slice_output(first)
        second = _row(mid, p, n1)
    else:
        raise DiagramError("nodes share a wire; cannot exchange")
    slices = d.slices[:k] + (first, second) + d.slices[k + 2:]
    return LayeredDiagram(d.input, d.output, slices)


class InvarianceClass(str, enum.Enum):
    FROBENIUS_INVARIANT = "FrobeniusInvariant"
    SEPARABLE_ONLY = "SeparableOnly"
    NOT_GUARANTEED = "NotGuaranteed"


@dataclass(frozen=True)
class TopologyReport:
    components: int
    betti1: int
    vertices: int
    edges: int

    @property
    def predicted_class(self) -> InvarianceClass:
        if self.components != 1:
            return InvarianceClass.NOT_GUARANTEED
        if self.betti1 == 0:
            return InvarianceClass.FROBENIUS_INVARIANT
        return InvarianceClass.SEPARABLE_ONLY

    @property
    def connected(self) -> bool:
        return self.components == 1

    def to_dict(self) -> dict:
        return {"components": self.components, "betti1": self.betti1,
                "vertices": self.vertices, "edges": self.edges,
                "predicted_class": self.predicted_class.value}


def underlying_graph(d: LayeredDiagram) -> tuple[list, list[tuple]]:
    """Vertices and wire edges of the undirected graph of ``d``.

    Vertices are nodes plus one port per boundary wire end; every wire is a
    single edge between its two endpoints.
    """
    vertices = [("in", i) for i in range(len(d.input))]
    ends = list(vertices)
    edges = []
    for s in d.slices:
        new_ends = []
        pos = 0
        for atom in s:
            n = len(atom.source)
            if isinstance(atom, Wire):
                new_ends.append(ends[pos])
            else:
                v = ("node", atom.id)
                vertices.append(v)
                edges.extend((e, v) for e in ends[pos:pos + n])
                new_ends.extend([v] * len(atom.target))
            pos += n
        ends = new_ends
    for i, e in enumerate(ends):
        v = ("out", i)
        vertices.append(v)
        edges.append((e, v))
    return vertices, edges


def topology(d: LayeredDiagram) -> TopologyReport:
    vertices, edges = underlying_graph(d)
    parent = {v: v for v in vertices}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for a, b in edges:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
    components = len({find(v) for v in vertices})
    return TopologyReport(components, len(edges) - len(vertices) + components,
                          len(vertices), len(edges))
