# =========================================================================== #
#                                 EXCEPTIONS                                  #
# =========================================================================== #
# =========================================================================== #
# Project: Lattice Studio                                                     #
# Version: 0.1.0                                                              #
# File: \exceptions.py                                                        #
# Python Version: 3.10.12                                                     #
# ---------------                                                             #
# Author: John James                                                          #
# Company: Decision Scients                                                   #
# Email: jjames@decisionscients.com                                           #
# ---------------                                                             #
# Create Date: Friday August 14th 2026, 10:21:31 pm                           #
# Last Modified: Saturday September 12th 2026, 10:46:26 am                    #
# Modified By: John James (jjames@decisionscients.com)                        #
# ---------------                                                             #
# License: Modified BSD                                                       #
# Copyright (c) 2026 Decision Scients                                         #
# =========================================================================== #

"""Exceptions raised by Lattice Studio.

Parameter validation raises the built-in ``TypeError`` and ``ValueError``.
The classes below cover the failures that carry extra context.
"""

class LatticeStudioError(Exception):
    """Base class for all package specific errors."""

class WindowError(LatticeStudioError, ValueError):
    """Raised when a window or difference quotient escapes its domain.

    Parameters
    ----------
    site : tuple of int
        Integer coordinates of the site being evaluated.

    offset : tuple of int
        Offset whose endpoint could not be resolved.
    """
    def __init__(self, site, offset, message=None):
        self.site = tuple(int(s) for s in site)
        self.offset = tuple(int(o) for o in offset)
        message = message or ("window escapes domain at site %s with offset %s"
                              % (self.site, self.offset))
        super(WindowError, self).__init__(message)

class ConfigurationError(LatticeStudioError, ValueError):
    """Raised for invalid configuration, tables or mismatched inputs."""
    def __init__(self, message, line=None, column=None, path=None):
        self.line = line
        self.column = column
        self.path = path
        self.reason = message
        location = []
        if path is not None:
            location.append(str(path))
        if line is not None:
            location.append("line %d" % line)
        if column is not None:
            location.append("column %s" % column)
        if location:
            message = "%s (%s)" % (message, ", ".join(location))
        super(ConfigurationError, self).__init__(message)

    def to_dict(self):
        return {'error': 'configuration', 'message': str(self),
                'line': self.line, 'column': self.column,
                'path': None if self.path is None else str(self.path)}

class DifferentiabilityError(LatticeStudioError):
    """Raised by strict gradients at a non-differentiable configuration."""

class InstanceTooLargeError(LatticeStudioError, ValueError):
    """Raised when an exhaustive oracle is asked to solve a large instance."""
