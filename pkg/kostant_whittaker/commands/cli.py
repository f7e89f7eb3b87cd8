#!/usr/bin/env python
# encoding: utf-8
"""
Created on '15/10/2026'.

 kostant-whittaker phi --n 3
 kostant-whittaker --no-cache hilbert --type A2 --max 20 --format csv

"""

import sys
import logging

import click

from kostant_whittaker.commands.compute import phi, split, coh, compare, hilbert, graph, levi, toda, convolve
from kostant_whittaker.commands.selftest import selftest
from kostant_whittaker.commands.clear_cache import clear_cache


@click.group()
@click.option('--no-cache', default=False, is_flag=True, help='Recompute and leave the cache untouched.')
@click.option('--verbose', default=False, is_flag=True, help='Log computations at debug level.')
@click.pass_context
def cli(ctx, no_cache, verbose):
    """
    Kostant-Whittaker reduction and the cohomology of affine Grassmannian orbits, at rank one and beyond
    """
    logging.basicConfig(format='%(levelname)s: %(message)s', level=logging.DEBUG if verbose else logging.WARNING)
    ctx.obj = {'no_cache': no_cache}


for command in (phi, split, coh, compare, hilbert, graph, levi, toda, convolve, selftest, clear_cache):
    cli.add_command(command)


def run(argv):
    """
    Run the command line without exiting the process
    :param argv: list of arguments
    :return: exit code - 0, 1 for computation errors, 2 for usage errors
    """
    try:
        cli.main(args=argv, standalone_mode=False)
    except click.ClickException as e:
        e.show()
        return e.exit_code
    except click.exceptions.Abort:
        return 1
    return 0


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
