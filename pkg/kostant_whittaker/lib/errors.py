#!/usr/bin/env python
# encoding: utf-8
"""
Created on '03/10/2026'.

Every failure a computation can report derives from KostantError, so the
command line can tell domain errors (exit 1) from usage errors (exit 2).
"""


class KostantError(Exception):
    pass


class VariableMismatchError(KostantError):
    """
    Operands live in rings with different variable lists
    """
    def __init__(self, left, right):
        super(VariableMismatchError, self).__init__(
            'Variable lists differ: (%s) vs (%s)' % (', '.join(left), ', '.join(right))
        )
        self.left = left
        self.right = right


class DivisionByZeroError(KostantError, ZeroDivisionError):
    pass


class NotDivisibleError(KostantError):
    pass


class InconsistentSystemError(KostantError):
    """
    Linear system has no solution - distinct from an empty kernel
    """
    pass


class DegenerateKernelError(KostantError):
    def __init__(self, expected, found, context=''):
        super(DegenerateKernelError, self).__init__(
            'Expected a kernel of dimension %d, found %d %s' % (expected, found, context)
        )
        self.expected = expected
        self.found = found


class GradingError(KostantError):
    pass


class UnsupportedRootSystemError(KostantError):
    pass


class RootSystemMismatchError(KostantError):
    pass


class WeightError(KostantError):
    pass


class ResidualDependenceError(KostantError):
    """
    kk_reduce left u or v in the normal form
    """
    pass


class IdentityFailure(KostantError):
    """
    An identity the computation asserts does not hold
    """
    pass
