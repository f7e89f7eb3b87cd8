#!/usr/bin/env python
# encoding: utf-8
"""
Created on '10/10/2026'.

Graph modules O(Gamma_lambda), Gamma_lambda = {(t1, t2, a): t2 = t1 + a lambda},
kept as formal sums with multiplicities.
"""

import logging
from collections import Counter

from kostant_whittaker.exactalg import RatFunc, MultiPoly, base_variables
from kostant_whittaker.rootdata import root_system, character
from kostant_whittaker.lib.errors import RootSystemMismatchError, KostantError

logger = logging.getLogger('luigi-interface')


class GraphModel(object):
    """
    sum_lambda O(Gamma_lambda)^{m_lambda}
    :param w_system: RootSystem
    :param multiplicities: dict Weight -> positive int
    """

    def __init__(self, w_system, multiplicities):
        self.system = w_system
        self.multiplicities = {}
        for weight, m in multiplicities.items():
            weight = w_system.weight(weight)
            if m < 0:
                raise KostantError('Negative multiplicity %d at %s' % (m, weight))
            if m:
                self.multiplicities[weight] = self.multiplicities.get(weight, 0) + m

    @property
    def total(self):
        return sum(self.multiplicities.values())

    @property
    def support(self):
        return sorted(self.multiplicities)

    def __eq__(self, other):
        return (isinstance(other, GraphModel) and self.system == other.system
                and self.multiplicities == other.multiplicities)

    def __ne__(self, other):
        return not self == other

    def __add__(self, other):
        if self.system != other.system:
            raise RootSystemMismatchError('Cannot add graph models over %s and %s' % (self.system.tag, other.system.tag))
        return GraphModel(self.system, Counter(self.multiplicities) + Counter(other.multiplicities))

    def to_json(self):
        return {
            'type': self.system.tag,
            'weights': [{'coords': list(w.coords), 'mult': self.multiplicities[w]} for w in self.support],
        }

    def __repr__(self):
        return 'GraphModel(%s, %s)' % (self.system.tag, {w.coords: m for w, m in sorted(self.multiplicities.items())})


def graph_model(w_system, highest):
    """
    Associated graded of phi(V_lambda): one graph per weight, with the weight multiplicity
    :param w_system: RootSystem or tag
    :param highest: dominant weight
    :return: GraphModel
    """
    w_system = root_system(w_system)
    return GraphModel(w_system, character(w_system, w_system.weight(highest)))


def graph_convolve(a, b):
    """
    O(Gamma_mu) * O(Gamma_nu) = O(Gamma_{mu + nu}), extended bilinearly
    :raises RootSystemMismatchError:
    """
    if a.system != b.system:
        raise RootSystemMismatchError('Cannot convolve graph models over %s and %s' % (a.system.tag, b.system.tag))
    result = Counter()
    for mu, m in a.multiplicities.items():
        for nu, k in b.multiplicities.items():
            result[mu + nu] += m * k
    return GraphModel(a.system, result)


class LocalizedElement(object):
    """
    sum_lambda c_lambda 1_lambda with c_lambda in the fraction field of Q[t_1..t_r, hbar]
    :param w_system: RootSystem
    :param terms: dict Weight -> RatFunc
    :param vectors: optional dict Weight -> vector attached to 1_lambda
    """

    def __init__(self, w_system, terms, vectors=None):
        self.system = w_system
        self.variables = base_variables(w_system.rank) if w_system.rank else base_variables(1)
        self.terms = {}
        for weight, coef in terms.items():
            coef = RatFunc.lift(coef, self.variables)
            if coef:
                self.terms[w_system.weight(weight)] = coef
        self.vectors = dict(vectors or {})

    def __add__(self, other):
        if self.system != other.system:
            raise RootSystemMismatchError('Localized elements over different root systems')
        terms = dict(self.terms)
        for weight, coef in other.terms.items():
            terms[weight] = terms[weight] + coef if weight in terms else coef
        vectors = dict(self.vectors)
        for weight, vector in other.vectors.items():
            if weight in self.terms and self.vectors.get(weight) != vector:
                raise KostantError('Localized elements attach different vectors at %s' % (weight,))
            vectors[weight] = vector
        for weight in self.vectors:
            if weight in other.terms and weight not in other.vectors:
                raise KostantError('Localized elements attach different vectors at %s' % (weight,))
        return LocalizedElement(self.system, terms, vectors)

    def scale(self, scalar):
        return LocalizedElement(self.system, {w: c * scalar for w, c in self.terms.items()}, self.vectors)

    def coefficient(self, weight):
        return self.terms.get(weight, RatFunc(self.variables))

    def __eq__(self, other):
        if not isinstance(other, LocalizedElement) or self.system != other.system:
            return False
        keys = set(self.terms) | set(other.terms)
        return all(self.coefficient(k) == other.coefficient(k) for k in keys)

    def __ne__(self, other):
        return not self == other

    def to_json(self):
        return {'terms': [
            {'coords': list(w.coords), 'coef': str(self.terms[w])} for w in sorted(self.terms)
        ]}


def weight_eigenvalue(i):
    """
    Casimir value 1/2 ((x + i hbar)^2 - hbar^2) carried by O(Gamma_i) at rank one
    """
    variables = base_variables(1)
    x, hbar = MultiPoly.gens(variables)
    shifted = x + hbar * i
    return (shifted * shifted - hbar * hbar) * MultiPoly.constant(variables, '1/2')


def casimir_spectrum(model):
    """
    Multiset of Casimir eigenvalues of a rank-one model
    :return: Counter of str(eigenvalue)
    """
    if model.system.rank != 1:
        raise KostantError('Casimir spectrum is only defined for rank one models')
    spectrum = Counter()
    for weight, m in model.multiplicities.items():
        spectrum[str(weight_eigenvalue(weight[0]))] += m
    return spectrum
