#!/usr/bin/env python
# encoding: utf-8
"""
Created on '03/10/2026'.
"""

__version__ = '1.0'
