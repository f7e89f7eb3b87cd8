#!/usr/bin/env python
# encoding: utf-8
"""
Created on '12/10/2026'.
"""

from collections import namedtuple

from kostant_whittaker.exactalg import free_graded_hilbert
from kostant_whittaker.rootdata import root_system, invariant_degrees

NormalConeSeries = namedtuple('NormalConeSeries', ['tag', 'generator_degrees', 'series'])


def normal_cone_degrees(w_system):
    """
    x's in degree 2 d_i, y's in degree 2 d_i - 2, hbar in degree 2
    """
    degrees = invariant_degrees(root_system(w_system)).degrees
    return [2 * d for d in degrees] + [2 * d - 2 for d in degrees] + [2]


def normal_cone_hilbert(w_system, max_degree):
    """
    Graded dimension of functions on the normal cone to the diagonal in t/W x t/W
    :return: NormalConeSeries
    """
    w_system = root_system(w_system)
    degrees = normal_cone_degrees(w_system)
    return NormalConeSeries(w_system.tag, degrees, free_graded_hilbert(degrees, max_degree))


def series_json(cone):
    return {
        'type': cone.tag,
        'generator_degrees': list(cone.generator_degrees),
        'series': cone.series.to_json(),
    }
