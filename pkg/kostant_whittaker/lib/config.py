#!/usr/bin/env python
# encoding: utf-8
"""
Created on '03/10/2026'.
"""

import os
import sys
import configparser

Config = configparser.ConfigParser()
config_files = ['default.cfg']

# Add test config if test flag is set
if 'unittest' in sys.argv[0]:
    config_files.append('test.cfg')

# Build config, looping through all the file options
config_dir = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
for config_file in config_files:
    Config.read(os.path.join(config_dir, config_file))


def config_cache_dir():
    """
    Cache directory - the KW_CACHE environment variable wins over the config
    :return: absolute path
    """
    path = os.environ.get('KW_CACHE') or Config.get('cache', 'dir', fallback='~/.local/share/kostant-whittaker')
    return os.path.abspath(os.path.expanduser(path))


def config_repo_path(relative_path):
    """
    Resolve a path stored in the config relative to the repository root
    :param relative_path:
    :return: absolute path
    """
    return os.path.join(os.path.dirname(config_dir), relative_path)
