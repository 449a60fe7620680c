"""Values of labelled diagrams in the matrix, free and terminal backends."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Optional

import numpy as np

from .diagram import (DiagramError, LayeredDiagram, Node, TensorScheme, Wire,
                      strip_identities)
from .matrix import (MatMorphism, MatObject, ShapeError, _normalize, float_tolerance, int_dot,
                     tensor_objects)


class LabellingError(ValueError):
    pass


@dataclass(frozen=True)
class Labelling:
    """Assignment of objects to wire labels and morphisms to generators.

    ``signatures`` records the source/target label words of each generator;
    it lets conjugation split a node's domain into one part per wire even
    when a wire object is itself a multi-factor word.
    """

    wires: Mapping[str, object]
    nodes: Mapping[str, MatMorphism]
    signatures: Mapping[str, tuple] = field(default_factory=dict)

    def word(self, labels) -> MatObject:
        try:
            return tensor_objects(self.wires[x] for x in labels)
        except KeyError as exc:
            raise LabellingError(f"no object assigned to wire label {exc.args[0]!r}") from None

    def morphism(self, node: Node) -> MatMorphism:
        try:
            f = self.nodes[node.symbol]
        except KeyError:
            raise LabellingError(f"no morphism assigned to generator {node.symbol!r}") from None
        dom, cod = self.word(node.source), self.word(node.target)
        if f.dom != dom or f.cod != cod:
            raise LabellingError(
                f"generator {node.symbol!r}: morphism {f.dom} -> {f.cod} "
                f"does not match {dom} -> {cod}")
        return f

    def parts(self, symbol: str, f: MatMorphism):
        """Per-wire domain and codomain objects of the image of ``symbol``."""
        if symbol in self.signatures:
            src, tgt = self.signatures[symbol]
            return [self.wires[x] for x in src], [self.wires[x] for x in tgt]
        return f.dom.parts(), f.cod.parts()

    def restrict_to(self, d: LayeredDiagram) -> "Labelling":
        used = {x for n in d.nodes for x in n.source + n.target} | set(d.input) | set(d.output)
        symbols = {n.symbol for n in d.nodes}
        return Labelling({k: v for k, v in self.wires.items() if k in used},
                         {k: v for k, v in self.nodes.items() if k in symbols},
                         {k: v for k, v in self.signatures.items() if k in symbols})


def labelling_for(scheme: TensorScheme, dims: Mapping[str, int],
                  nodes: Mapping[str, MatMorphism]) -> Labelling:
    wires = {v: MatObject.named(v, dims[v]) for v in scheme.vertices if v in dims}
    sigs = {g.name: (g.source, g.target) for g in scheme.edges}
    return Labelling(wires, dict(nodes), sigs)


@dataclass(frozen=True)
class BackendHandle:
    kind: str = "matrix"  # matrix | free | terminal
    exact: bool = True
    tolerance: float = 1e-9

    def equal(self, a, b) -> bool:
        if self.kind != "matrix" or self.exact:
            return a == b
        with float_tolerance(self.tolerance):
            return a == b


MATRIX = BackendHandle()
TERMINAL = BackendHandle("terminal")
FREE = BackendHandle("free")


class TerminalMorphism:
    """The unique morphism of the terminal monoidal category."""

    def __eq__(self, other):
        return isinstance(other, TerminalMorphism)

    def __hash__(self):
        return 0

    def __repr__(self):
        return "1"


def _apply_local(num, den, f: MatMorphism, left: int, right: int):
    """Apply ``1_left ⊗ f ⊗ 1_right`` to the columns of ``num/den``."""
    k = num.shape[1]
    a, b = f.dom.dim, f.cod.dim
    state = np.transpose(num.reshape(left, a, right, k), (1, 0, 2, 3)).reshape(a, -1)
    out = int_dot(f.num, state).reshape(b, left, right, k)
    out = np.transpose(out, (1, 0, 2, 3)).reshape(left * b * right, k)
    return out, den * f.den


def evaluate(d: LayeredDiagram, v: Labelling, backend: BackendHandle = MATRIX):
    """The value of ``d`` under ``v``: slices of ``1 ⊗ f ⊗ 1`` composed left to right."""
    if backend.kind == "terminal":
        return TerminalMorphism()
    if backend.kind == "free":
        return free_evaluate(d, v)
    dom, cod = v.word(d.input), v.word(d.output)
    ident = MatMorphism.identity(dom)
    num, den = ident.num, ident.den
    if not backend.exact:
        num = num.astype(float)
    for s in d.slices:
        for i, atom in enumerate(s):
            if isinstance(atom, Wire):
                continue
            f = v.morphism(atom)
            if not backend.exact:
                f = f.to_float()
            elif not f.exact:
                raise ShapeError("float morphism in exact evaluation")
            left = v.word([x for a in s[:i] for x in a.target]).dim
            right = v.word([x for a in s[i + 1:] for x in a.source]).dim
            num, den = _apply_local(num, den, f, left, right)
            if backend.exact:
                num, den = _normalize(num, den)
    return MatMorphism.raw(dom, cod, num, den)


@dataclass(frozen=True)
class SchemeMap:
    """A labelling of a diagram in a target tensor scheme."""

    objects: Mapping[str, str]
    generators: Mapping[str, str]
    target: Optional[TensorScheme] = None


def free_evaluate(d: LayeredDiagram, v) -> LayeredDiagram:
    """Relabel ``d`` along a :class:`SchemeMap`; the result is a morphism of the free category."""
    if not isinstance(v, SchemeMap):
        raise LabellingError("free evaluation needs a SchemeMap")

    def obj(x):
        return v.objects.get(x, x)

    def relabel(atom):
        if isinstance(atom, Wire):
            return Wire(obj(atom.label))
        symbol = v.generators.get(atom.symbol, atom.symbol)
        src, tgt = tuple(map(obj, atom.source)), tuple(map(obj, atom.target))
        if v.target is not None:
            g = v.target.generator(symbol)
            if (g.source, g.target) != (src, tgt):
                raise LabellingError(
                    f"{atom.symbol} -> {symbol}: arity {src}->{tgt} vs {g.source}->{g.target}")
        return Node(symbol, src, tgt, atom.id)

    try:
        out = LayeredDiagram(tuple(map(obj, d.input)), tuple(map(obj, d.output)),
                             tuple(tuple(relabel(a) for a in s) for s in d.slices))
    except DiagramError as exc:
        raise LabellingError(str(exc)) from None
    return strip_identities(out)
