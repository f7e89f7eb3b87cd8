#!/usr/bin/env python
# encoding: utf-8
"""
Created on '16/10/2026'.

Common strategies for hypothesis
"""

from hypothesis import strategies as st

from kostant_whittaker.exactalg import MultiPoly
from kostant_whittaker.uhbar import PBWElem, RepVec, TensorVec, VermaVec, MODULE_VARIABLES, PBW_VARIABLES


def polys(variables, max_degree=2, max_terms=3):
    exponents = st.tuples(*[st.integers(0, max_degree) for _ in variables])
    return st.dictionaries(exponents, st.integers(-5, 5), max_size=max_terms).map(
        lambda terms: MultiPoly.from_terms(variables, terms))


def nonzero_polys(variables, max_degree=2):
    return polys(variables, max_degree).filter(lambda p: not p.is_zero)


def pbw_elements(max_exponent=2):
    keys = st.tuples(*[st.integers(0, max_exponent)] * 3)
    return st.dictionaries(keys, polys(PBW_VARIABLES, 1), min_size=1, max_size=3).map(PBWElem)


@st.composite
def tensor_vectors(draw, max_n=3, depth=3):
    n = draw(st.integers(0, max_n))
    keys = st.tuples(st.integers(0, depth).map(lambda k: -1 - 2 * k), st.sampled_from(range(-n, n + 1, 2)))
    return TensorVec(n, draw(st.dictionaries(keys, polys(MODULE_VARIABLES), min_size=1, max_size=4)))


@st.composite
def rep_vectors(draw, max_n=3):
    n = draw(st.integers(0, max_n))
    labels = st.sampled_from(range(-n, n + 1, 2))
    return RepVec(n, draw(st.dictionaries(labels, polys(PBW_VARIABLES, 1), min_size=1)))


def verma_vectors(depth=3):
    labels = st.integers(0, depth).map(lambda k: -1 - 2 * k)
    return st.dictionaries(labels, polys(MODULE_VARIABLES), min_size=1, max_size=3).map(VermaVec)


@st.composite
def polynomial_systems(draw, max_size=3):
    """
    (matrix, rhs) with rhs = matrix * s for a drawn polynomial vector s, so the system is consistent
    """
    nrows = draw(st.integers(1, max_size))
    ncols = draw(st.integers(1, max_size))
    matrix = [[draw(polys(MODULE_VARIABLES, 1)) for _ in range(ncols)] for _ in range(nrows)]
    solution = [draw(polys(MODULE_VARIABLES, 1)) for _ in range(ncols)]
    rhs = [sum((a * s for a, s in zip(row, solution)), MultiPoly(MODULE_VARIABLES)) for row in matrix]
    return matrix, rhs
