#!/usr/bin/env python
# encoding: utf-8
"""
Created on '15/10/2026'.
"""

import click
from prompter import yesno

from kostant_whittaker.lib.config import config_cache_dir
from kostant_whittaker.tasks.cache import clear_cache as remove_cache_entries


@click.command('clear-cache')
@click.option('--yes', 'confirmed', default=False, is_flag=True, help='Do not ask for confirmation.')
def clear_cache(confirmed):
    """
    Delete every cached computation
    :return: None
    """
    directory = config_cache_dir()
    if confirmed or yesno('You are deleting all cached computations in %s. Are you sure you want to continue?' % directory):
        count = remove_cache_entries()
        click.echo('Removed %d cache entries' % count)


if __name__ == "__main__":
    clear_cache()
