#!/usr/bin/env python
# encoding: utf-8
"""
Created on '14/10/2026'.

Content addressed cache of computation payloads. A cache entry is the output
of a ComputationTask: a LocalTarget named by the SHA-1 of tool version,
command and canonical flag JSON. LocalTarget writes to a temporary file and
renames it into place.
"""

import os
import json
import shutil
import hashlib
import logging

import luigi

from kostant_whittaker import __version__
from kostant_whittaker.lib.config import Config, config_cache_dir
from kostant_whittaker.lib.payloads import compute
from kostant_whittaker.lib.serialize import dumps

logger = logging.getLogger('luigi-interface')


def canonical_flags(flags):
    return json.dumps(flags, sort_keys=True, separators=(',', ':'))


def cache_key(command, flags):
    digest = hashlib.sha1()
    digest.update('\n'.join([__version__, command, canonical_flags(flags)]).encode('utf-8'))
    return digest.hexdigest()


class ComputationTask(luigi.Task):
    """
    Compute one payload and store its canonical JSON
    """
    command = luigi.Parameter()
    flags = luigi.Parameter(default='{}')
    cache_dir = luigi.Parameter(default='')

    def output(self):
        directory = self.cache_dir or config_cache_dir()
        return luigi.LocalTarget(os.path.join(directory, '%s.json' % cache_key(self.command, json.loads(self.flags))))

    def run(self):
        logger.info('Cache miss: %s %s', self.command, self.flags)
        payload = compute(self.command, json.loads(self.flags))
        with self.output().open('w') as f:
            f.write(dumps(payload))


def cache_enabled():
    return Config.getboolean('cache', 'enabled', fallback=True)


def cached_compute(command, flags, use_cache=True, cache_dir=''):
    """
    Canonical JSON text of a payload, served from the cache when possible
    :param command: registry name
    :param flags: dict
    :param use_cache: False recomputes and leaves the cache untouched
    :param cache_dir: override of the configured directory
    :return: str
    """
    if not use_cache or not (cache_enabled() or cache_dir):
        return dumps(compute(command, flags))
    task = ComputationTask(command=command, flags=canonical_flags(flags), cache_dir=cache_dir)
    if task.complete():
        logger.info('Cache hit: %s %s', command, task.flags)
    else:
        task.run()
    with task.output().open('r') as f:
        return f.read()


def clear_cache(cache_dir=''):
    """
    Remove every cache entry
    :return: number of entries removed
    """
    directory = cache_dir or config_cache_dir()
    if not os.path.isdir(directory):
        return 0
    count = len([name for name in os.listdir(directory) if name.endswith('.json')])
    shutil.rmtree(directory)
    logger.info('Removed %d cache entries from %s', count, directory)
    return count
