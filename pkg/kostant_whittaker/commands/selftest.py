#!/usr/bin/env python
# encoding: utf-8
"""
Created on '15/10/2026'.

 python commands/selftest.py --quick --workers 4

"""

import click

from kostant_whittaker.lib.errors import KostantError
from kostant_whittaker.tasks.selftest import run_selftest


@click.command()
@click.option('--quick', default=False, is_flag=True, help='Only run the small n cases.')
@click.option('--workers', type=int, default=None, help='Number of luigi workers.')
def selftest(quick, workers):
    """
    Run the acceptance suite; exits 1 if any check fails
    :param quick:
    :param workers:
    :return: None
    """
    try:
        results = run_selftest(quick=quick, workers=workers)
    except KostantError as e:
        raise click.ClickException(str(e))
    for result in results:
        label = result['check'] if result['check'] not in ('idiot', 'lattice', 'annihilator', 'jordan', 'convolve') \
            else '%s(m=%d, n=%d)' % (result['check'], result['m'], result['n'])
        click.echo('%s %s: %s' % ('PASS' if result['passed'] else 'FAIL', label, result['detail']))
    failed = [result for result in results if not result['passed']]
    if failed:
        raise click.ClickException('%d of %d checks failed' % (len(failed), len(results)))
    click.echo('All %d checks passed' % len(results))


if __name__ == "__main__":
    selftest()
