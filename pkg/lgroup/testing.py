# lgroup/testing.py

"""Hypothesis strategies shared by the test modules of every app."""

from hypothesis import strategies as st

from .grading import WeightTriple


def weight_triples(max_weight=8, sorted_only=False):
    weight = st.integers(min_value=2, max_value=max_weight)
    triples = st.tuples(weight, weight, weight)
    if sorted_only:
        triples = triples.map(sorted)
    return triples.map(lambda t: WeightTriple(*t))


def non_tubular_weight_triples(max_weight=8):
    return weight_triples(max_weight).filter(lambda w: not w.is_tubular)


def elements(weights, span=4):
    coefficient = st.integers(min_value=-span * max(weights.weights), max_value=span * max(weights.weights))
    return st.builds(weights.normalize, coefficient, coefficient, coefficient, st.integers(-span, span))


def interiors(weights):
    return st.builds(
        weights.normalize,
        st.integers(0, weights.p1 - 2),
        st.integers(0, weights.p2 - 2),
        st.integers(0, weights.p3 - 2),
    )


@st.composite
def weights_with_elements(draw, count, max_weight=8):
    weights = draw(weight_triples(max_weight))
    return (weights, *(draw(elements(weights)) for _ in range(count)))
