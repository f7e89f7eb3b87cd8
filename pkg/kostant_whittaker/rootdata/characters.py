#!/usr/bin/env python
# encoding: utf-8
"""
Created on '05/10/2026'.
"""

import functools
import itertools
import logging
from collections import namedtuple

from sympy import Matrix, floor
from sympy.polys.domains import QQ
from sympy.polys.rings import ring
from sympy.polys.ring_series import rs_series_inversion

from kostant_whittaker.rootdata.system import Weight, weyl_orbit
from kostant_whittaker.lib.errors import WeightError, IdentityFailure

logger = logging.getLogger('luigi-interface')

InvariantDegrees = namedtuple('InvariantDegrees', ['degrees', 'order', 'positive_roots'])


def molien_series(w_system, max_degree):
    """
    Average of 1/det(1 - q w) over the Weyl group, truncated
    :return: list of QQ coefficients of q^0..q^max_degree
    """
    R, q = ring('q', QQ)
    group = w_system.weyl_group()
    total = R.zero
    for element in group:
        if w_system.rank:
            # det(1 - q w) = q^r charpoly_w(1/q)
            coeffs = Matrix(element.matrix).charpoly().all_coeffs()
            denominator = sum((QQ.from_sympy(c) * q ** k for k, c in enumerate(coeffs)), R.zero)
        else:
            denominator = R.one
        total += rs_series_inversion(denominator, q, max_degree + 1)
    total = total.quo_ground(QQ(len(group)))
    return [total.get((k,), QQ(0)) for k in range(max_degree + 1)]


def invariant_degrees(w_system):
    """
    Degrees of the fundamental invariants, read off the Molien series
    :param w_system: RootSystem
    :return: InvariantDegrees
    :raises IdentityFailure: the extracted degrees fail prod d = |W| or sum (d - 1) = #roots+
    """
    order = len(w_system.weyl_group())
    positive = len(w_system.positive_roots())
    max_degree = max(order, 2)
    remainder = molien_series(w_system, max_degree)
    degrees = []
    while len(degrees) < w_system.rank:
        d = next((k for k in range(1, max_degree + 1) if remainder[k]), None)
        if d is None:
            raise IdentityFailure('Molien series of %s ran out of generators' % w_system.tag)
        degrees.append(d)
        # multiply by (1 - q^d)
        remainder = [remainder[k] - (remainder[k - d] if k >= d else 0) for k in range(max_degree + 1)]
    product = functools.reduce(lambda a, b: a * b, degrees, 1)
    if product != order or sum(d - 1 for d in degrees) != positive:
        raise IdentityFailure('Degrees %s of %s do not match |W| = %d and %d positive roots' % (
            degrees, w_system.tag, order, positive))
    logger.debug('Invariant degrees of %s: %s', w_system.tag, degrees)
    return InvariantDegrees(tuple(degrees), order, positive)


def dominant_weights(w_system, highest):
    """
    Dominant mu <= highest (highest - mu a non-negative integer combination of simple roots)
    """
    bounds = [int(floor(QQ.to_sympy(c))) for c in w_system.root_coordinates(highest)]
    found = []
    for c in itertools.product(*[range(b + 1) for b in bounds]):
        mu = highest
        for i, k in enumerate(c):
            mu = mu - w_system.simple_roots[i] * k
        if mu.is_dominant:
            found.append((sum(c), mu))
    return [mu for _, mu in sorted(found, key=lambda pair: (pair[0], pair[1].coords))]


@functools.lru_cache(maxsize=None)
def dominant_character(w_system, highest):
    """
    Freudenthal recursion on the dominant weights, by increasing depth below the highest weight
    :return: dict dominant Weight -> multiplicity
    """
    if not highest.is_dominant:
        raise WeightError('%s is not dominant' % (highest,))
    rho = w_system.rho
    roots = w_system.positive_roots()
    norm = w_system.inner(highest + rho, highest + rho)
    table = {}
    for mu in dominant_weights(w_system, highest):
        if mu == highest:
            table[mu] = 1
            continue
        total = QQ(0)
        for alpha in roots:
            k = 1
            while True:
                nu = w_system.dominant_conjugate(mu + alpha * k)
                if nu not in table:
                    break
                total += QQ(table[nu]) * w_system.inner(mu + alpha * k, alpha)
                k += 1
        gap = norm - w_system.inner(mu + rho, mu + rho)
        value = 2 * total / gap
        if QQ.denom(value) != 1:
            raise IdentityFailure('Freudenthal recursion produced %s at %s' % (value, mu))
        if value:
            table[mu] = int(value)
    return table


def weight_multiplicity(w_system, highest, mu):
    """
    Multiplicity of mu in the irreducible representation of highest weight `highest`
    :raises WeightError: highest is not dominant
    """
    highest = w_system.weight(highest)
    mu = w_system.weight(mu)
    if not highest.is_dominant:
        raise WeightError('%s is not dominant' % (highest,))
    return dominant_character(w_system, highest).get(w_system.dominant_conjugate(mu), 0)


def character(w_system, highest):
    """
    Every weight with its multiplicity
    :return: dict Weight -> multiplicity
    """
    highest = w_system.weight(highest)
    weights = {}
    for mu, m in dominant_character(w_system, highest).items():
        for nu in weyl_orbit(w_system, mu):
            weights[nu] = m
    return weights


def weyl_dimension(w_system, highest):
    """
    prod over positive roots of (lambda + rho, alpha) / (rho, alpha)
    """
    highest = w_system.weight(highest)
    rho = w_system.rho
    value = QQ(1)
    for alpha in w_system.positive_roots():
        value *= w_system.inner(highest + rho, alpha) / w_system.inner(rho, alpha)
    return int(value)
