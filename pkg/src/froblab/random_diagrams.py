"""Seeded random diagrams and labellings for fuzzing the invariance theorems.

Connected diagrams are grown by attachment: start from one node and keep
adding a node that shares ``p >= 1`` wires with what is already there.  With
``p = 1`` every step adds a leaf to a tree, so the result is acyclic.  Extra
fresh wires of a new node are threaded to the boundary along the top or
bottom edge, which keeps everything planar.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .diagram import Generator, LayeredDiagram, Node, TensorScheme, Wire, tensor
from .evaluation import Labelling, labelling_for
from .matrix import MatMorphism, MatObject


@dataclass
class GeneratorConfig:
    max_nodes: int = 6
    max_width: int = 3
    max_dim: int = 4
    max_arity: int = 2
    # dim(F A) for the functors under test is dim(A) * base, so
    # interfaces are kept below budget after conjugation
    base: int = 4
    budget: int = 64
    numerators: int = 3
    denominators: int = 3
    nonzero: bool = False


@dataclass
class RandomDiagram:
    diagram: LayeredDiagram
    scheme: TensorScheme
    dims: dict = field(default_factory=dict)


class _Builder:
    def __init__(self, rng: random.Random, cfg: GeneratorConfig, prefix: str):
        self.rng, self.cfg, self.prefix = rng, cfg, prefix
        self.slices: list[list] = []
        self.input: list[str] = []
        self.output: list[str] = []
        self.generators: list[Generator] = []
        self.n_wires = 0

    def fresh(self, k: int) -> list[str]:
        out = [f"{self.prefix}w{self.n_wires + i}" for i in range(k)]
        self.n_wires += k
        return out

    def node(self, source, target) -> Node:
        k = len(self.generators)
        g = Generator(f"{self.prefix}g{k}", tuple(source), tuple(target))
        self.generators.append(g)
        return Node(g.name, g.source, g.target, k)

    def widest(self) -> int:
        words = [self.input] + [[x for a in s for x in a.target] for s in self.slices]
        return max(len(w) for w in words)

    def thread(self, labels, top: bool, at_input: bool) -> None:
        """Run fresh wires along one edge of every slice to a boundary."""
        wires = [Wire(x) for x in labels]
        self.slices = [wires + s if top else s + wires for s in self.slices]
        word = self.input if at_input else self.output
        word[:] = list(labels) + word if top else word + list(labels)

    def start(self) -> None:
        a = self.cfg.max_arity
        n_in, n_out = self.rng.randint(0, a), self.rng.randint(0, a)
        if n_in + n_out == 0:
            n_out = 1
        src, tgt = self.fresh(n_in), self.fresh(n_out)
        self.slices = [[self.node(src, tgt)]]
        self.input, self.output = list(src), list(tgt)

    def attach(self, acyclic: bool) -> bool:
        """One attachment move; False when no move fits the width bound."""
        rng, cfg = self.rng, self.cfg
        sides = [s for s, w in (("right", self.output), ("left", self.input)) if w]
        if not sides:
            return False
        side = rng.choice(sides)
        word = self.output if side == "right" else self.input
        p = 1 if acyclic else rng.randint(1, min(len(word), cfg.max_width))
        i = rng.randint(0, len(word) - p)
        shared = word[i:i + p]
        fresh_far = rng.randint(0, cfg.max_arity)
        # extra inputs (or outputs, on the left) must come from the boundary
        top_extra = rng.randint(0, 1) if i == 0 else 0
        bottom_extra = rng.randint(0, 1) if i + p == len(word) else 0
        new_width = len(word) - p + fresh_far
        if max(new_width, self.widest() + top_extra + bottom_extra) > cfg.max_width:
            return False
        word = list(word)
        top, bottom = self.fresh(top_extra), self.fresh(bottom_extra)
        far = self.fresh(fresh_far)
        if top:
            self.thread(top, True, side == "right")
        if bottom:
            self.thread(bottom, False, side == "right")
        near = top + shared + bottom
        before, after = word[:i], word[i + p:]
        if side == "right":
            n = self.node(near, far)
            self.slices.append([Wire(x) for x in before] + [n] + [Wire(x) for x in after])
            self.output = before + far + after
        else:
            n = self.node(far, near)
            self.slices.insert(0, [Wire(x) for x in before] + [n] + [Wire(x) for x in after])
            self.input = before + far + after
        return True

    def build(self) -> tuple[LayeredDiagram, TensorScheme]:
        d = LayeredDiagram(tuple(self.input), tuple(self.output), self.slices)
        labels = {x for g in self.generators for x in g.source + g.target}
        return d, TensorScheme(labels, tuple(self.generators))


def _grow(rng: random.Random, cfg: GeneratorConfig, acyclic: bool, prefix: str = ""):
    b = _Builder(rng, cfg, prefix)
    b.start()
    target = rng.randint(1, cfg.max_nodes)
    attempts = 0
    while len(b.generators) < target and attempts < 20 * cfg.max_nodes:
        attempts += 1
        if not b.attach(acyclic) and not (b.input or b.output):
            break
    return b.build()


def random_dims(rng: random.Random, d: LayeredDiagram, labels, cfg: GeneratorConfig) -> dict:
    """Random wire dimensions, shrunk until every interface fits the budget."""
    dims = {x: rng.randint(1, cfg.max_dim) for x in sorted(labels)}

    def size(word):
        out = 1
        for x in word:
            out *= dims[x] * cfg.base
        return out

    words = d.interfaces()
    for g in (n for n in d.nodes):
        words.extend([g.source, g.target])
    for w in words:
        while size(w) > cfg.budget:
            big = max(w, key=lambda x: (dims[x], x))
            if dims[big] == 1:
                break
            dims[big] -= 1
    return dims


def random_connected(rng: random.Random, cfg: Optional[GeneratorConfig] = None,
                     acyclic: bool = False, prefix: str = "") -> RandomDiagram:
    cfg = cfg or GeneratorConfig()
    d, scheme = _grow(rng, cfg, acyclic, prefix)
    return RandomDiagram(d, scheme, random_dims(rng, d, scheme.vertices, cfg))


def random_disconnected(rng: random.Random, cfg: Optional[GeneratorConfig] = None,
                        parts: int = 2) -> RandomDiagram:
    """A tensor of ``parts`` independently grown connected diagrams."""
    cfg = cfg or GeneratorConfig()
    each = GeneratorConfig(**{**cfg.__dict__, "max_nodes": max(1, cfg.max_nodes // parts),
                              "max_width": max(1, cfg.max_width // parts)})
    d, scheme = None, None
    for k in range(parts):
        dk, sk = _grow(rng, each, False, prefix=f"c{k}")
        d = dk if d is None else tensor(d, dk)
        scheme = sk if scheme is None else scheme.union(sk)
    return RandomDiagram(d, scheme, random_dims(rng, d, scheme.vertices, cfg))


def random_rational(rng: random.Random, cfg: GeneratorConfig) -> Fraction:
    num = rng.randint(-cfg.numerators, cfg.numerators)
    while cfg.nonzero and num == 0:
        num = rng.randint(-cfg.numerators, cfg.numerators)
    return Fraction(num, rng.randint(1, cfg.denominators))


def random_morphism(rng: random.Random, dom: MatObject, cod: MatObject,
                    cfg: Optional[GeneratorConfig] = None) -> MatMorphism:
    cfg = cfg or GeneratorConfig()
    return MatMorphism(dom, cod, [[random_rational(rng, cfg) for _ in range(dom.dim)]
                                  for _ in range(cod.dim)])


def random_labelling(rng: random.Random, r: RandomDiagram,
                     cfg: Optional[GeneratorConfig] = None) -> Labelling:
    cfg = cfg or GeneratorConfig()
    base = labelling_for(r.scheme, r.dims, {})
    nodes = {g.name: random_morphism(rng, base.word(g.source), base.word(g.target), cfg)
             for g in r.scheme.edges}
    return Labelling(base.wires, nodes, base.signatures)
