#!/usr/bin/env python
# encoding: utf-8
"""
Created on '15/10/2026'.

Computation subcommands. Each prints the canonical JSON payload, served
from the cache unless the group was invoked with --no-cache.

 python commands/compute.py phi --n 2

"""

import json
import logging

import click

from kostant_whittaker.lib.errors import KostantError
from kostant_whittaker.lib.serialize import series_to_csv
from kostant_whittaker.kostant.split import NORMALIZATIONS
from kostant_whittaker.tasks.cache import cached_compute

logger = logging.getLogger('luigi-interface')


def parse_int_list(value):
    """
    '1,0' -> [1, 0]
    :raises KostantError:
    """
    if not value:
        return []
    try:
        return [int(part) for part in value.split(',')]
    except ValueError:
        raise KostantError('Expected comma separated integers, got %s' % value)


def emit(command, flags):
    """
    Print the payload of a computation
    :return: payload text
    """
    ctx = click.get_current_context()
    use_cache = not (ctx.obj or {}).get('no_cache', False)
    try:
        text = cached_compute(command, flags, use_cache=use_cache)
    except KostantError as e:
        raise click.ClickException(str(e))
    click.echo(text, nl=False)
    return text


def n_option(name='--n', help='Highest weight n of V_n.'):
    # validated by the computation so a negative n exits 1, not 2
    return click.option(name, type=int, required=True, help=help)


@click.command()
@n_option()
def phi(n):
    """
    Kostant reduction phi(V_n): Casimir matrix, annihilator, splitting coefficients
    """
    emit('phi', {'n': n})


@click.command()
@n_option()
@click.option('--normalization', type=click.Choice(NORMALIZATIONS), default='filtration',
              help='Choice of splitting vectors.')
def split(n, normalization):
    """
    Highest weight splitting of phi(V_n)
    """
    emit('split', {'n': n, 'normalization': normalization})


@click.command()
@n_option()
def coh(n):
    """
    Equivariant cohomology module of the orbit closure
    """
    emit('coh', {'n': n})


@click.command()
@n_option()
def compare(n):
    """
    Compare the cohomology and coinvariant lattices
    """
    emit('compare', {'n': n})


@click.command()
@click.option('--type', 'w_system', default='A1', help='Root system tag.')
@click.option('--max', 'max_degree', type=int, required=True, help='Truncation degree.')
@click.option('--format', 'output_format', type=click.Choice(['json', 'csv']), default='json')
def hilbert(w_system, max_degree, output_format):
    """
    Graded dimension of functions on the normal cone
    """
    flags = {'type': w_system, 'max': max_degree}
    if output_format == 'json':
        emit('hilbert', flags)
        return
    ctx = click.get_current_context()
    try:
        payload = json.loads(cached_compute('hilbert', flags, use_cache=not (ctx.obj or {}).get('no_cache', False)))
    except KostantError as e:
        raise click.ClickException(str(e))
    coefficients = payload['series']['coefficients']
    click.echo(series_to_csv([(k, c) for k, c in enumerate(coefficients) if not k % 2]), nl=False)


@click.command()
@click.option('--type', 'w_system', default='A1', help='Root system tag.')
@click.option('--hw', default='', help='Dominant highest weight, comma separated.')
def graph(w_system, hw):
    """
    Associated graded graph model of phi(V_hw)
    """
    try:
        flags = {'type': w_system, 'hw': parse_int_list(hw)}
    except KostantError as e:
        raise click.ClickException(str(e))
    emit('graph', flags)


@click.command()
@click.option('--type', 'w_system', default='A1', help='Root system tag.')
@click.option('--hw', default='', help='Dominant highest weight, comma separated.')
@click.option('--roots', default='', help='Simple roots of the Levi, 1-based and comma separated.')
def levi(w_system, hw, roots):
    """
    Coarsen the graph model along a Levi subgroup
    """
    try:
        flags = {'type': w_system, 'hw': parse_int_list(hw), 'roots': parse_int_list(roots)}
    except KostantError as e:
        raise click.ClickException(str(e))
    emit('levi', flags)


@click.group()
def toda():
    """
    Quantized Toda lattice
    """


@toda.command()
@click.option('--side', type=click.Choice(['left', 'right']), default='left',
              help='Invariant fields used to realise the Casimir.')
def casimir(side):
    """
    Reduced Casimir as a differential operator in t
    """
    emit('toda-casimir', {'side': side})


@click.command()
@n_option('--m', help='Highest weight m of the first factor.')
@n_option('--n', help='Highest weight n of the second factor.')
def convolve(m, n):
    """
    Convolution phi(V_m) * phi(V_n) against the Clebsch-Gordan components
    """
    emit('convolve', {'m': m, 'n': n})


if __name__ == "__main__":
    phi()
