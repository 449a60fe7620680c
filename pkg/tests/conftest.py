import random
from fractions import Fraction

import hypothesis.strategies as st
import pytest
from hypothesis import HealthCheck, settings

from froblab.matrix import MatMorphism, MatObject
from froblab.random_diagrams import GeneratorConfig, random_connected, random_labelling

settings.register_profile("default", max_examples=40, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", max_examples=400, deadline=None)
settings.load_profile("default")

rationals = st.builds(Fraction, st.integers(-5, 5), st.integers(1, 4))


def objects(max_factors=2, max_dim=3):
    factor = st.tuples(st.sampled_from("ABCD"), st.integers(1, max_dim))
    return st.lists(factor, min_size=0, max_size=max_factors).map(lambda fs: MatObject(tuple(fs)))


@st.composite
def morphisms(draw, dom=None, cod=None):
    dom = draw(objects()) if dom is None else dom
    cod = draw(objects()) if cod is None else cod
    rows = [[draw(rationals) for _ in range(dom.dim)] for _ in range(cod.dim)]
    return MatMorphism(dom, cod, rows)


@st.composite
def labelled_diagrams(draw, acyclic=False, max_nodes=4, max_dim=3):
    """A random connected diagram with a random labelling, via a drawn seed."""
    seed = draw(st.integers(0, 2 ** 32))
    rng = random.Random(seed)
    cfg = GeneratorConfig(max_nodes=max_nodes, max_dim=max_dim)
    r = random_connected(rng, cfg, acyclic=acyclic)
    return r, random_labelling(rng, r, cfg)


@pytest.fixture
def rng():
    return random.Random(12345)
