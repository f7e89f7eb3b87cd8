#!/usr/bin/env python
# encoding: utf-8
"""
Created on '10/10/2026'.

Levi coarsening: weights grouped by their class modulo the root lattice of
the Levi, i.e. by their image in the character lattice of Z(L).
"""

import logging
from collections import Counter

from sympy import Matrix
from sympy.polys.domains import QQ

from kostant_whittaker.rootdata import RootSystem, Weight, character
from kostant_whittaker.grgraph.model import GraphModel
from kostant_whittaker.lib.serialize import rational_to_str
from kostant_whittaker.lib.errors import WeightError, IdentityFailure

logger = logging.getLogger('luigi-interface')


def _normalize_levi(w_system, levi):
    levi = tuple(sorted(set(int(i) for i in levi)))
    for i in levi:
        if not 0 <= i < w_system.rank:
            raise WeightError('%s has no simple root %d' % (w_system.tag, i + 1))
    return levi


def levi_system(w_system, levi):
    """
    Root system of the Levi: the Cartan submatrix on the chosen simple roots
    """
    levi = _normalize_levi(w_system, levi)
    cartan = [[w_system.cartan[i][j] for j in levi] for i in levi]
    if not levi:
        tag = 'T'
    elif len(levi) == 1:
        tag = 'A1'
    elif len(levi) == w_system.rank:
        tag = w_system.tag
    else:
        tag = 'cartan'
    return RootSystem(cartan, tag)


def coset_key(w_system, levi, weight):
    """
    Class of a weight modulo the Levi root lattice
    c solves A_LL^T c = weight_L; the key is the residual off L together with c mod 1
    :return: (residual coordinates, fractional parts) as tuples of QQ
    """
    levi = _normalize_levi(w_system, levi)
    if levi:
        sub = Matrix([[w_system.cartan[i][j] for j in levi] for i in levi])
        c = [QQ.from_sympy(v) for v in sub.T.inv() * Matrix([weight[j] for j in levi])]
    else:
        c = []
    residual = tuple(
        QQ(weight[j]) - sum((ci * w_system.cartan[i][j] for ci, i in zip(c, levi)), QQ(0))
        for j in range(w_system.rank) if j not in levi
    )
    fractional = tuple(ci - QQ(int(QQ.numer(ci)) // int(QQ.denom(ci))) for ci in c)
    return residual, fractional


def key_to_str(key):
    residual, fractional = key
    return '(%s | %s)' % (','.join(rational_to_str(r) for r in residual),
                          ','.join(rational_to_str(f) for f in fractional))


def levi_partition(model, levi):
    """
    :return: dict key -> {Weight: multiplicity} of the ambient weights
    """
    parts = {}
    for weight, m in model.multiplicities.items():
        parts.setdefault(coset_key(model.system, levi, weight), {})[weight] = m
    return parts


def restrict(weight, levi):
    return Weight([weight[i] for i in levi])


def levi_coarsen(model, levi):
    """
    :param model: GraphModel
    :param levi: 0-based indices of the Levi simple roots
    :return: dict coset key -> GraphModel over the Levi root system
    """
    levi = _normalize_levi(model.system, levi)
    system = levi_system(model.system, levi)
    cosets = {}
    for key, weights in levi_partition(model, levi).items():
        cosets[key] = GraphModel(system, {restrict(w, levi): m for w, m in weights.items()})
    logger.debug('Levi %s splits %s into %d cosets', levi, model, len(cosets))
    return cosets


def levi_decomposition(model):
    """
    Peel irreducible characters off a W-stable model from the top
    :param model: GraphModel
    :return: sorted list of highest weights (with repetition)
    :raises IdentityFailure: the model is not a sum of irreducible characters
    """
    system = model.system
    remaining = Counter(model.multiplicities)
    highest = []
    while remaining:
        candidates = [w for w, m in remaining.items() if m > 0 and w.is_dominant]
        if not candidates:
            raise IdentityFailure('%s is not W-stable' % (model,))
        top = max(candidates, key=lambda w: (sum(system.root_coordinates(w)), w.coords))
        for weight, m in character(system, top).items():
            remaining[weight] -= m
            if remaining[weight] < 0:
                raise IdentityFailure('%s is not a sum of irreducible characters' % (model,))
            if not remaining[weight]:
                del remaining[weight]
        highest.append(top)
    return sorted(highest)


def transitivity_check(model, levi, sublevi):
    """
    Coarsening to L and then, inside each L-coset and in L's own weight
    lattice, to L' agrees with coarsening straight to L'
    :param levi: indices of L
    :param sublevi: indices of L', a subset of L
    """
    levi = _normalize_levi(model.system, levi)
    sublevi = _normalize_levi(model.system, sublevi)
    if not set(sublevi) <= set(levi):
        raise WeightError('%s is not contained in %s' % (sublevi, levi))
    direct = set(frozenset(part.items()) for part in levi_partition(model, sublevi).values())
    system = levi_system(model.system, levi)
    inner = [levi.index(i) for i in sublevi]
    staged = set()
    for weights in levi_partition(model, levi).values():
        back = {restrict(w, levi): w for w in weights}
        groups = {}
        for levi_weight, ambient in back.items():
            groups.setdefault(coset_key(system, inner, levi_weight), {})[ambient] = weights[ambient]
        staged.update(frozenset(group.items()) for group in groups.values())
    return staged == direct
