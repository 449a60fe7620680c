import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import labelled_diagrams
from froblab.diagram import (DiagramError, Generator, LayeredDiagram, Node, TensorScheme, Wire, compose,
                             exchange, generator_diagram, identity, sequentialize,
                             strip_identities, tensor)
from froblab.evaluation import (FREE, TERMINAL, BackendHandle, Labelling, LabellingError,
                                SchemeMap, TerminalMorphism, evaluate, free_evaluate,
                                labelling_for)
from froblab.matrix import I, MatMorphism, MatObject, braiding, ident, mat_compose, mat_tensor
from froblab.random_diagrams import random_connected, random_labelling, random_morphism

CUT = TensorScheme({"A", "B", "C", "D"}, (Generator("f", ("A",), ("B", "C")),
                                          Generator("g", ("C", "D"), ("B",))))


def cut_diagram():
    return compose(tensor(generator_diagram(CUT, "f"), identity("D")),
                   tensor(identity("B"), generator_diagram(CUT, "g")))


def test_identity_diagram_value():
    v = labelling_for(TensorScheme({"A"}), {"A": 3}, {})
    assert evaluate(identity("A"), v) == ident(MatObject.named("A", 3))


def test_cut_value_matches_direct_composite(rng):
    dims = {"A": 2, "B": 2, "C": 3, "D": 2}
    base = labelling_for(CUT, dims, {})
    f = random_morphism(rng, base.word("A"), base.word("BC"))
    g = random_morphism(rng, base.word("CD"), base.word("B"))
    v = labelling_for(CUT, dims, {"f": f, "g": g})
    A, B, D = (base.wires[x] for x in "ABD")
    direct = mat_compose(mat_tensor(ident(B), g), mat_tensor(f, ident(D)))
    assert evaluate(cut_diagram(), v) == direct
    assert direct.dom == A @ D and direct.cod == B @ B


def test_three_slice_diagram_against_hand_composite(rng):
    s = TensorScheme({"A", "B"}, (Generator("h", ("A", "A"), ("B",)),
                                  Generator("k", ("B",), ("A", "B")),
                                  Generator("m", ("B", "A"), ("A",))))
    d = LayeredDiagram(("A", "A", "A"), ("A", "A"), [
        (Node("h", ("A", "A"), ("B",), 0), Wire("A")),
        (Node("k", ("B",), ("A", "B"), 1), Wire("A")),
        (Wire("A"), Node("m", ("B", "A"), ("A",), 2)),
    ])
    dims = {"A": 2, "B": 3}
    base = labelling_for(s, dims, {})
    w = base.word
    h, k, m = (random_morphism(rng, w(g.source), w(g.target)) for g in s.edges)
    v = labelling_for(s, dims, {"h": h, "k": k, "m": m})
    a = base.wires["A"]
    hand = mat_compose(mat_tensor(ident(a), m),
                       mat_compose(mat_tensor(k, ident(a)), mat_tensor(h, ident(a))))
    assert evaluate(d, v) == hand


def test_closed_diagram_is_a_scalar():
    s = TensorScheme({"A"}, (Generator("u", (), ("A",)), Generator("c", ("A",), ())))
    v = labelling_for(s, {"A": 2}, {"u": MatMorphism(I, MatObject.named("A", 2), [[1], [3]]),
                                    "c": MatMorphism(MatObject.named("A", 2), I, [["1/2", 1]])})
    d = compose(generator_diagram(s, "u"), generator_diagram(s, "c"))
    assert evaluate(d, v).entries() == [[3 + 0.5]]


def test_missing_node_assignment():
    v = labelling_for(CUT, {"A": 1, "B": 1, "C": 1, "D": 1}, {})
    with pytest.raises(LabellingError):
        evaluate(cut_diagram(), v)


def test_missing_wire_assignment():
    v = labelling_for(CUT, {"A": 1}, {})
    with pytest.raises(LabellingError):
        evaluate(cut_diagram(), v)


def test_arity_mismatch_rejected():
    dims = {"A": 2, "B": 2, "C": 2, "D": 2}
    base = labelling_for(CUT, dims, {})
    wrong = MatMorphism(base.word("A"), base.word("B"), [[1, 0], [0, 1]])
    v = labelling_for(CUT, dims, {"f": wrong, "g": MatMorphism.zero(base.word("CD"), base.word("B"))})
    with pytest.raises(LabellingError):
        evaluate(cut_diagram(), v)


def test_terminal_backend():
    assert evaluate(cut_diagram(), Labelling({}, {}), TERMINAL) == TerminalMorphism()


def test_free_identity_labelling():
    d = cut_diagram()
    assert free_evaluate(d, SchemeMap({}, {})) == d


def test_free_relabelling():
    s = TensorScheme({"X"}, (Generator("h", ("X",), ("X",)),))
    t = TensorScheme({"Y"}, (Generator("k", ("Y",), ("Y",)),))
    d = compose(generator_diagram(s, "h"), generator_diagram(s, "h"))
    out = free_evaluate(d, SchemeMap({"X": "Y"}, {"h": "k"}, t))
    assert [n.symbol for n in out.nodes] == ["k", "k"]
    assert out.input == ("Y",) and evaluate(out, SchemeMap({}, {}), FREE) == out


def test_free_arity_mismatch():
    t = TensorScheme({"Y"}, (Generator("k", ("Y", "Y"), ("Y",)),))
    d = generator_diagram(TensorScheme({"X"}, (Generator("h", ("X",), ("X",)),)), "h")
    with pytest.raises(LabellingError):
        free_evaluate(d, SchemeMap({"X": "Y"}, {"h": "k"}, t))


def test_free_evaluation_is_functorial():
    d = cut_diagram()
    m = SchemeMap({"D": "A"}, {})
    first = LayeredDiagram(d.input, d.interfaces()[1], d.slices[:1])
    second = LayeredDiagram(d.interfaces()[1], d.output, d.slices[1:])
    assert free_evaluate(compose(first, second), m) == \
        compose(free_evaluate(first, m), free_evaluate(second, m))


def test_float_backend_agrees_with_exact(rng):
    r = random_connected(rng)
    v = random_labelling(rng, r)
    exact = evaluate(r.diagram, v)
    approx = evaluate(r.diagram, v, BackendHandle("matrix", False, 1e-9))
    assert not approx.exact and approx == exact.to_float()


# properties -----------------------------------------------------------------

def _split(d, k):
    words = d.interfaces()
    return (LayeredDiagram(d.input, words[k], d.slices[:k]),
            LayeredDiagram(words[k], d.output, d.slices[k:]))


@given(labelled_diagrams(), st.integers(0, 10))
def test_evaluation_respects_composition(rv, k):
    r, v = rv
    d = r.diagram
    k = k % (len(d.slices) + 1)
    d1, d2 = _split(d, k)
    assert evaluate(d, v) == mat_compose(evaluate(d2, v), evaluate(d1, v))


@given(labelled_diagrams(max_nodes=3, max_dim=2), labelled_diagrams(max_nodes=3, max_dim=2))
def test_evaluation_respects_tensor(rv1, rv2):
    (r1, v1), (r2, v2) = rv1, rv2
    # keep the two label sets apart
    ren = {x: "t" + x for x in r2.scheme.vertices}
    gren = {g.name: "t" + g.name for g in r2.scheme.edges}
    d2 = free_evaluate(r2.diagram, SchemeMap(ren, gren))
    v2r = Labelling({ren[k]: MatObject.named(ren[k], a.dim) for k, a in v2.wires.items()},
                    {gren[k]: f.retype(MatObject(tuple((ren[n], dd) for n, dd in f.dom.factors)),
                                       MatObject(tuple((ren[n], dd) for n, dd in f.cod.factors)))
                     for k, f in v2.nodes.items()})
    v = Labelling({**v1.wires, **v2r.wires}, {**v1.nodes, **v2r.nodes})
    both = tensor(r1.diagram, d2)
    assert evaluate(both, v) == mat_tensor(evaluate(r1.diagram, v1), evaluate(d2, v2r))


@given(labelled_diagrams())
def test_evaluation_ignores_identity_slices(rv):
    r, v = rv
    d = r.diagram
    padded = LayeredDiagram(d.input, d.output,
                            d.slices + (tuple(Wire(x) for x in d.output),))
    assert evaluate(padded, v) == evaluate(strip_identities(padded), v) == evaluate(d, v)


@given(labelled_diagrams(max_nodes=4, max_dim=2))
def test_evaluation_invariant_under_exchange(rv):
    r, v = rv
    d = sequentialize(r.diagram)
    value = evaluate(d, v)
    for k in range(len(d.slices) - 1):
        try:
            e = exchange(d, k)
        except DiagramError:
            continue
        assert evaluate(e, v) == value


@given(labelled_diagrams(max_nodes=3, max_dim=2))
def test_sequentialize_preserves_value(rv):
    r, v = rv
    assert evaluate(sequentialize(r.diagram), v) == evaluate(r.diagram, v)


def test_braiding_as_a_node_is_natural(rng):
    s = TensorScheme({"A", "B"}, (Generator("c", ("A", "B"), ("B", "A")),
                                  Generator("f", ("A",), ("A",)), Generator("g", ("B",), ("B",))))
    dims = {"A": 2, "B": 3}
    base = labelling_for(s, dims, {})
    a, b = base.wires["A"], base.wires["B"]
    v = labelling_for(s, dims, {"c": braiding(a, b), "f": random_morphism(rng, a, a),
                                "g": random_morphism(rng, b, b)})
    fg = tensor(generator_diagram(s, "f"), generator_diagram(s, "g"))
    gf = LayeredDiagram(("B", "A"), ("B", "A"), [(Node("g", ("B",), ("B",), 0),
                                                  Node("f", ("A",), ("A",), 1))])
    c = generator_diagram(s, "c")
    assert evaluate(compose(fg, c), v) == evaluate(compose(c, gf), v)
