#!/usr/bin/env python
# encoding: utf-8
"""
Created on '13/10/2026'.

Registry of the computations the command line exposes. Each entry turns a
flag dict into a JSON-able payload; serialisation and caching happen elsewhere.
"""

import logging

from kostant_whittaker.kostant import (
    phi_module, idiot_expansion, idiot_report, quasiclassical_jordan, highest_weight_split, clebsch_convolution,
    convolution_passes
)
from kostant_whittaker.grcoh import coh_module, lattice_compare, normal_cone_hilbert, series_json
from kostant_whittaker.grgraph import graph_model, levi_coarsen, levi_decomposition, key_to_str
from kostant_whittaker.rootdata import root_system
from kostant_whittaker.toda import reduced_casimir
from kostant_whittaker.lib.errors import KostantError, WeightError

logger = logging.getLogger('luigi-interface')


def _check_n(flags, name='n'):
    n = flags.get(name)
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise KostantError('--%s must be a non-negative integer, got %s' % (name, n))
    return n


def _ratfunc_map(coefficients):
    return {str(i): str(c) for i, c in sorted(coefficients.items())}


def phi_payload(flags):
    n = _check_n(flags)
    payload = phi_module(n).to_json()
    payload['idiot_coefficients'] = _ratfunc_map(idiot_expansion(n))
    payload['jordan_type'] = quasiclassical_jordan(n)
    return payload


def split_payload(flags):
    n = _check_n(flags)
    normalization = flags.get('normalization', 'filtration')
    split = highest_weight_split(n, normalization)
    report = idiot_report(n, normalization)
    payload = split.to_json()
    payload['upper_unitriangular'] = split.is_upper_unitriangular()
    payload['idiot_coefficients'] = _ratfunc_map(report.coefficients)
    payload['idiot_expected'] = _ratfunc_map(report.expected)
    payload['idiot_holds'] = report.holds
    return payload


def coh_payload(flags):
    n = _check_n(flags)
    module = coh_module(n)
    payload = module.to_json()
    payload['brackets_hold'] = module.brackets_hold()
    payload['e_jordan_type'] = module.e_jordan_type()
    return payload


def compare_payload(flags):
    n = _check_n(flags)
    report = lattice_compare(n)
    return {
        'n': n,
        'holds': report.holds,
        'matches_normal_cone': report.matches_normal_cone,
        'determinant': str(report.determinant),
        'transition': [[str(entry) for entry in row] for row in report.transition],
    }


def hilbert_payload(flags):
    max_degree = _check_n(flags, 'max')
    return series_json(normal_cone_hilbert(flags.get('type'), max_degree))


def graph_payload(flags):
    system = root_system(flags.get('type'))
    return graph_model(system, _dominant(system, flags.get('hw'))).to_json()


def levi_payload(flags):
    system = root_system(flags.get('type'))
    model = graph_model(system, _dominant(system, flags.get('hw')))
    roots = [int(r) - 1 for r in flags.get('roots', [])]
    cosets = levi_coarsen(model, roots)
    return {
        'type': system.tag,
        'levi': [r + 1 for r in sorted(set(roots))],
        'cosets': [
            {
                'key': key_to_str(key),
                'model': cosets[key].to_json(),
                'decomposition': [list(w.coords) for w in levi_decomposition(cosets[key])],
            }
            for key in sorted(cosets, key=key_to_str)
        ],
    }


def toda_casimir_payload(flags):
    return reduced_casimir(flags.get('side', 'left')).to_json()


def convolve_payload(flags):
    m = _check_n(flags, 'm')
    n = _check_n(flags)
    report = clebsch_convolution(m, n)
    return {
        'm': m,
        'n': n,
        'rank': report.rank,
        'annihilator_matches': report.annihilator_matches,
        'annihilator_vanishes': report.annihilator_vanishes,
        'multiplicities': {str(w): {'found': found, 'expected': expected}
                           for w, (found, expected) in sorted(report.multiplicities.items())},
        'right_x_matches': report.right_x_matches,
        'unit_matches': report.unit_matches,
        'passed': convolution_passes(report),
    }


def _dominant(system, coords):
    weight = system.weight(coords or [0] * system.rank)
    if not weight.is_dominant:
        raise WeightError('Highest weight %s is not dominant' % (list(weight.coords),))
    return weight


COMPUTATIONS = {
    'phi': phi_payload,
    'split': split_payload,
    'coh': coh_payload,
    'compare': compare_payload,
    'hilbert': hilbert_payload,
    'graph': graph_payload,
    'levi': levi_payload,
    'toda-casimir': toda_casimir_payload,
    'convolve': convolve_payload,
}


def compute(command, flags):
    """
    :param command: registry name
    :param flags: dict of flag values
    :return: JSON-able payload
    """
    try:
        builder = COMPUTATIONS[command]
    except KeyError:
        raise KostantError('Unknown computation %s' % command)
    logger.debug('Computing %s %s', command, flags)
    return builder(flags)
