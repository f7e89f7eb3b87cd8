#!/usr/bin/env python
# encoding: utf-8
"""
Created on '11/10/2026'.
"""

from kostant_whittaker.exactalg import MultiPoly, RatFunc, HBAR
from kostant_whittaker.rootdata import root_system
from kostant_whittaker.grgraph.model import LocalizedElement
from kostant_whittaker.kostant.split import idiot_expansion
from kostant_whittaker.uhbar import RepVec, rep_act, PBWElem
from kostant_whittaker.lib.errors import WeightError


def coroot_function(alpha, variables):
    """
    h_alpha as a linear function on t*, t = sum t_j omega_j, so <t, h_alpha> = t_alpha
    """
    return MultiPoly.gen(variables, variables[alpha])


def p_alpha_coefficient(h, pairing, k, variables):
    """
    prod_{j = k + pairing}^{2k - 1 + pairing} (h + j hbar)^{-1}
    """
    hbar = MultiPoly.gen(variables, HBAR)
    denominator = MultiPoly.constant(variables, 1)
    for j in range(k + pairing, 2 * k + pairing):
        denominator = denominator * (h + hbar * j)
    return RatFunc.from_polys(MultiPoly.constant(variables, 1), denominator)


def p_alpha(w_system, weight, alpha, chain=None):
    """
    sum_{k=0}^{-lambda(h_alpha)} c_k 1_{lambda + k alpha} (x) e_alpha^k v for v of weight lambda with f_alpha v = 0
    :param w_system: RootSystem or tag
    :param weight: lambda
    :param alpha: 0-based simple root index
    :param chain: optional list [v, e v, e^2 v, ...] attached to the terms
    :return: LocalizedElement
    :raises WeightError: lambda(h_alpha) > 0 or a chain of the wrong length
    """
    w_system = root_system(w_system)
    weight = w_system.weight(weight)
    if not 0 <= alpha < w_system.rank:
        raise WeightError('%s has no simple root %d' % (w_system.tag, alpha + 1))
    pairing = w_system.coroot_pairing(weight, alpha)
    if pairing > 0:
        raise WeightError('p_alpha needs lambda(h_alpha) <= 0, got %d' % pairing)
    if chain is not None and len(chain) != 1 - pairing:
        raise WeightError('Raising chain of length %d, expected %d' % (len(chain), 1 - pairing))
    element = LocalizedElement(w_system, {})
    h = coroot_function(alpha, element.variables)
    root = w_system.simple_roots[alpha]
    terms = {}
    vectors = {}
    for k in range(-pairing + 1):
        target = weight + root * k
        terms[target] = p_alpha_coefficient(h, pairing, k, element.variables)
        if chain is not None:
            vectors[target] = chain[k]
    return LocalizedElement(w_system, terms, vectors)


def denominator_degrees(element):
    """
    Total degree of each coefficient's denominator, by weight
    """
    return {w: c.denom.total_degree() for w, c in sorted(element.terms.items())}


def p_alpha_matches_idiot(n):
    """
    For A1 and v = v_{-n}, the coefficient at weight i equals the split-basis coefficient of i
    """
    vector = RepVec.basis(n, -n)
    chain = [vector]
    for _ in range(n):
        chain.append(rep_act(PBWElem.generator('e'), chain[-1]))
    element = p_alpha('A1', [-n], 0, chain)
    expansion = idiot_expansion(n)
    return all(element.coefficient(element.system.weight([i])) == expansion[i] for i in expansion)
