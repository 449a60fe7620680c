"""JSON formats for schemes, diagrams, labellings, functors and structures.

Diagram file::

    {"scheme": {"vertices": [...], "edges": [{"name", "source", "target"}]},
     "diagram": {"input": [...], "output": [...],
                 "slices": [[{"id": label} | {"gen": symbol}, ...], ...]}}

Labelling file::

    {"objects": {label: dim}, "nodes": {symbol: [["p/q", ...], ...]}}

Matrices are lists of rows, entries being rational strings or integers.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Union

from .diagram import (DiagramError, Generator, LayeredDiagram, Node, TensorScheme, Wire,
                      validate_scheme)
from .evaluation import Labelling, LabellingError, labelling_for
from .frobenius import (AlgebraFunctor, FrobeniusAlgebra, FrobeniusFunctor, IdentityFunctor,
                        algebra_by_name, frobenius_algebra_from_form)
from .matrix import I, MatMorphism, MatObject, ShapeError
from .structures import BimonoidData, DistLawData, LaxYBData, WeakYBData


class InputError(ValueError):
    """Malformed or inconsistent input file."""


def load_json(path: Union[str, Path]) -> Any:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        lines = text.splitlines()
        line = lines[exc.lineno - 1] if exc.lineno <= len(lines) else ""
        raise InputError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}\n    {line}") from None


def _get(obj: dict, key: str, where: str):
    if not isinstance(obj, dict) or key not in obj:
        raise InputError(f"{where}: missing field {key!r}")
    return obj[key]


# ---------------------------------------------------------------------------
# diagrams

def scheme_from_json(data: dict) -> TensorScheme:
    edges = []
    for k, e in enumerate(_get(data, "edges", "scheme")):
        edges.append(Generator(_get(e, "name", f"scheme.edges[{k}]"),
                               tuple(e.get("source", ())), tuple(e.get("target", ()))))
    scheme = TensorScheme(frozenset(_get(data, "vertices", "scheme")), tuple(edges))
    report = validate_scheme(scheme)
    if not report.ok:
        raise InputError(f"invalid scheme: undeclared labels {report.undeclared}, "
                         f"duplicate generators {report.duplicates}")
    return scheme


def scheme_to_json(scheme: TensorScheme) -> dict:
    return {"vertices": sorted(scheme.vertices),
            "edges": [{"name": g.name, "source": list(g.source), "target": list(g.target)}
                      for g in scheme.edges]}


def diagram_from_json(data: dict) -> tuple[TensorScheme, LayeredDiagram]:
    scheme = scheme_from_json(_get(data, "scheme", "file"))
    body = _get(data, "diagram", "file")
    slices, ids = [], 0
    for k, s in enumerate(_get(body, "slices", "diagram")):
        row = []
        for j, atom in enumerate(s):
            where = f"diagram.slices[{k}][{j}]"
            if "id" in atom:
                if atom["id"] not in scheme.vertices:
                    raise InputError(f"{where}: undeclared wire label {atom['id']!r}")
                row.append(Wire(atom["id"]))
            elif "gen" in atom:
                try:
                    g = scheme.generator(atom["gen"])
                except KeyError as exc:
                    raise InputError(f"{where}: {exc.args[0]}") from None
                row.append(Node(g.name, g.source, g.target, ids))
                ids += 1
            else:
                raise InputError(f"{where}: atom needs 'id' or 'gen'")
        slices.append(tuple(row))
    try:
        d = LayeredDiagram(tuple(_get(body, "input", "diagram")),
                           tuple(_get(body, "output", "diagram")), tuple(slices))
    except DiagramError as exc:
        raise InputError(f"diagram: {exc}") from None
    return scheme, d


def diagram_to_json(scheme: TensorScheme, d: LayeredDiagram) -> dict:
    slices = [[{"id": a.label} if isinstance(a, Wire) else {"gen": a.symbol} for a in s]
              for s in d.slices]
    return {"scheme": scheme_to_json(scheme),
            "diagram": {"input": list(d.input), "output": list(d.output), "slices": slices}}


# ---------------------------------------------------------------------------
# matrices and labellings

def matrix_from_json(rows, dom: MatObject, cod: MatObject, where: str) -> MatMorphism:
    try:
        return MatMorphism(dom, cod, [[str(x) for x in r] for r in rows])
    except (ShapeError, ValueError, ZeroDivisionError, TypeError) as exc:
        raise InputError(f"{where}: {exc}") from None


def matrix_to_json(f: MatMorphism) -> list:
    return f.to_strings()


def object_from_json(data, where: str = "object") -> MatObject:
    """``{"name": "A", "dim": 2}``, a list of such, or ``[]`` for the unit."""
    if isinstance(data, dict):
        data = [data]
    try:
        return MatObject(tuple((str(_get(f, "name", where)), int(_get(f, "dim", where)))
                               for f in data))
    except (TypeError, ValueError) as exc:
        raise InputError(f"{where}: {exc}") from None


def labelling_from_json(data: dict, scheme: TensorScheme) -> Labelling:
    dims = _get(data, "objects", "labelling")
    missing = sorted(v for v in scheme.vertices if v not in dims)
    if missing:
        raise InputError(f"labelling: no dimension for {missing}")
    base = labelling_for(scheme, dims, {})
    nodes = {}
    given = _get(data, "nodes", "labelling")
    for g in scheme.edges:
        if g.name not in given:
            continue
        nodes[g.name] = matrix_from_json(given[g.name], base.word(g.source),
                                         base.word(g.target), f"labelling.nodes.{g.name}")
    return Labelling(base.wires, nodes, base.signatures)


def labelling_to_json(v: Labelling) -> dict:
    return {"objects": {k: a.dim for k, a in sorted(v.wires.items())},
            "nodes": {k: matrix_to_json(f) for k, f in sorted(v.nodes.items())}}


# ---------------------------------------------------------------------------
# algebras and functors

def algebra_from_json(data) -> FrobeniusAlgebra:
    """A registry name such as ``"complex(2,0)"`` or an inline definition.

    Inline: ``{"name", "dim", "mu": table[i][j] -> coordinates, "unit", "form"}``.
    """
    if isinstance(data, str):
        try:
            return algebra_by_name(data)
        except (KeyError, ValueError, TypeError) as exc:
            raise InputError(f"algebra {data!r}: {exc}") from None
    n = int(_get(data, "dim", "algebra"))
    table = _get(data, "mu", "algebra")
    if len(table) != n or any(len(r) != n for r in table):
        raise InputError(f"algebra: mu table must be {n}x{n}")
    try:
        return frobenius_algebra_from_form(data.get("name", "inline"), table,
                                           _get(data, "unit", "algebra"),
                                           _get(data, "form", "algebra"), label="C")
    except (ValueError, ShapeError) as exc:
        raise InputError(f"algebra: {exc}") from None


def algebra_to_json(alg: FrobeniusAlgebra) -> dict:
    return {"name": alg.name, "dim": alg.carrier.dim,
            "mu": matrix_to_json(alg.mu), "eta": matrix_to_json(alg.eta),
            "delta": matrix_to_json(alg.delta), "epsilon": matrix_to_json(alg.epsilon)}


def functor_from_json(data) -> FrobeniusFunctor:
    """``"identity"``, an algebra name, or ``{"kind": ..., "algebra": ...}``.

    The algebra's laws are not checked here; callers run the law suite and
    report it.
    """
    if data == "identity" or (isinstance(data, dict) and data.get("kind") == "identity"):
        return IdentityFunctor()
    if isinstance(data, dict):
        data = _get(data, "algebra", "functor")
    return AlgebraFunctor(algebra_from_json(data))


# ---------------------------------------------------------------------------
# structures

def _matrix_field(data: dict, key: str, dom: MatObject, cod: MatObject, tag: str):
    return matrix_from_json(_get(data, key, tag), dom, cod, f"{tag}.{key}")


def _monoid(data: dict, key: str, tag: str):
    part = _get(data, key, tag)
    a = object_from_json(_get(part, "carrier", f"{tag}.{key}"), f"{tag}.{key}.carrier")
    return (a, _matrix_field(part, "mu", a @ a, a, f"{tag}.{key}"),
            _matrix_field(part, "eta", I, a, f"{tag}.{key}"))


def structure_from_json(data: dict):
    """Return ``(tag, payload)`` for a tagged structure file."""
    tag = _get(data, "type", "structure")
    if tag == "algebra":
        return tag, algebra_from_json(_get(data, "algebra", tag))
    if tag == "functor":
        samples = [object_from_json(s, f"{tag}.samples") for s in data.get("samples", [[]])]
        return tag, (functor_from_json(_get(data, "functor", tag)), samples)
    if tag in ("yb", "lax-yb"):
        a = object_from_json(_get(data, "carrier", tag), f"{tag}.carrier")
        return tag, LaxYBData(a, _matrix_field(data, "y", a @ a, a @ a, tag))
    if tag == "weak-yb":
        d = object_from_json(_get(data, "carrier", tag), f"{tag}.carrier")
        dd = d @ d
        return tag, WeakYBData(d, *(_matrix_field(data, k, dd, dd, tag)
                                    for k in ("nabla", "y", "y_prime")))
    if tag in ("distributive-law", "weak-distributive-law"):
        a, mu_a, eta_a = _monoid(data, "a", tag)
        b, mu_b, eta_b = _monoid(data, "b", tag)
        lam = _matrix_field(data, "lambda", a @ b, b @ a, tag)
        return tag, DistLawData(a, mu_a, eta_a, b, mu_b, eta_b, lam)
    if tag in ("bimonoid", "weak-bimonoid"):
        a = object_from_json(_get(data, "carrier", tag), f"{tag}.carrier")
        return tag, BimonoidData(a, _matrix_field(data, "mu", a @ a, a, tag),
                                 _matrix_field(data, "eta", I, a, tag),
                                 _matrix_field(data, "delta", a, a @ a, tag),
                                 _matrix_field(data, "epsilon", a, I, tag))
    raise InputError(f"unknown structure type {tag!r}")


__all__ = ["InputError", "LabellingError", "load_json", "scheme_from_json", "scheme_to_json",
           "diagram_from_json", "diagram_to_json", "matrix_from_json", "matrix_to_json",
           "object_from_json", "labelling_from_json", "labelling_to_json", "algebra_from_json",
           "algebra_to_json", "functor_from_json", "structure_from_json"]
