# =========================================================================== #
#                               DECAY PROFILES                                #
# =========================================================================== #
# =========================================================================== #
# Project: Lattice Studio                                                     #
# Version: 0.1.0                                                              #
# File: \profiles.py                                                          #
# Python Version: 3.10.12                                                     #
# ---------------                                                             #
# Author: John James                                                          #
# Company: Decision Scients                                                   #
# Email: jjames@decisionscients.com                                           #
# ---------------                                                             #
# Create Date: Monday August 10th 2026, 3:08:15 pm                            #
# Last Modified: Saturday September 5th 2026, 4:32:02 pm                      #
# Modified By: John James (jjames@decisionscients.com)                        #
# ---------------                                                             #
# License: Modified BSD                                                       #
# Copyright (c) 2026 Decision Scients                                         #
# =========================================================================== #

"""Nonnegative coefficient tables C^{j,xi} indexed by site offset and direction.

A profile bounds part of a site density by

    sum_{(j, xi)} C^{j,xi} (|D^xi z(i + j)|^p + 1).

Offsets j are integer lattice offsets relative to the evaluated site;
their length in real units is eps |j|.
"""
import math
import re

import numpy as np
import pandas as pd

from lattice_studio.utils.exceptions import ConfigurationError

_INT = re.compile(r'-?\d+')

def parse_vector(text, line=None, column=None):
    """Parses '(1, -2)', '1 -2' or '1;-2' into a tuple of ints."""
    if isinstance(text, (tuple, list, np.ndarray)):
        return tuple(int(v) for v in text)
    if isinstance(text, (int, np.integer)):
        return (int(text),)
    text = str(text).strip()
    if not text or re.search(r'[^\s\d\-+,;()\[\]]', text):
        raise ConfigurationError("cannot parse integer vector %r" % text,
                                 line=line, column=column)
    return tuple(int(v) for v in _INT.findall(text))

def format_vector(v):
    return "(" + ", ".join(str(int(a)) for a in v) + ")"

class DecayProfile:
    """Sparse table of coefficients C^{j,xi} >= 0.

    Parameters
    ----------
    coefficients : dict, optional
        Maps (j, xi) pairs of integer tuples to nonnegative floats.

    variant : str, optional (default='plain')
        'plain', 'locality' or 'truncation'.

    epsilon, delta, level : optional
        Parameters the table was built for.
    """
    VARIANTS = ('plain', 'locality', 'truncation')

    def __init__(self, coefficients=None, variant='plain', epsilon=None,
                 delta=None, level=None):
        if variant not in self.VARIANTS:
            raise ValueError("variant must be one of %s." % str(self.VARIANTS))
        self.variant = variant
        self.epsilon = epsilon
        self.delta = delta
        self.level = level
        table = {}
        for (j, xi), value in (coefficients or {}).items():
            key = (tuple(int(a) for a in j), tuple(int(a) for a in xi))
            value = float(value)
            if not np.isfinite(value) or value < 0:
                raise ValueError("coefficients must be finite and nonnegative, "
                                 "got %r at %s." % (value, key))
            if not any(key[1]):
                raise ValueError("direction xi must be nonzero at %s." % (key,))
            if value > 0:
                table[key] = table.get(key, 0.0) + value
        self._table = dict(sorted(table.items()))

    # ---------------------------------------------------------------------- #
    def items(self):
        return self._table.items()

    def keys(self):
        return self._table.keys()

    def __len__(self):
        return len(self._table)

    def __getitem__(self, key):
        j, xi = key
        return self._table.get((tuple(j), tuple(xi)), 0.0)

    def __add__(self, other):
        table = dict(self._table)
        for key, value in other.items():
            table[key] = table.get(key, 0.0) + value
        return DecayProfile(table, self.variant, self.epsilon, self.delta, self.level)

    def copy(self, **kwargs):
        params = dict(variant=self.variant, epsilon=self.epsilon,
                      delta=self.delta, level=self.level)
        params.update(kwargs)
        return DecayProfile(dict(self._table), **params)

    def scaled(self, factor):
        """Multiplies every entry by a number or by factor(j, xi)."""
        if callable(factor):
            table = {k: v * float(factor(*k)) for k, v in self._table.items()}
        else:
            table = {k: v * float(factor) for k, v in self._table.items()}
        return DecayProfile(table, self.variant, self.epsilon, self.delta, self.level)

    def restricted(self, predicate):
        table = {k: v for k, v in self._table.items() if predicate(*k)}
        return DecayProfile(table, self.variant, self.epsilon, self.delta, self.level)

    # ---------------------------------------------------------------------- #
    def total_sum(self):
        return math.fsum(self._table.values())

    def tail_sum(self, delta, epsilon=1.0):
        """Sum over entries with max(eps |xi|, eps |j|) > delta."""
        values = [v for (j, xi), v in self._table.items()
                  if epsilon * max(math.sqrt(sum(a * a for a in xi)),
                                   math.sqrt(sum(a * a for a in j))) > delta]
        return math.fsum(values)

    def dominates(self, other, tol=0.0):
        """True when every coefficient of self is >= the one of other."""
        keys = set(self._table) | set(other.keys())
        return all(self[k] >= other[k] - tol for k in keys)

    def reach(self):
        """Largest sup-norm offset touched by the table."""
        best = 0
        for j, xi in self._table:
            end = [a + b for a, b in zip(j, xi)]
            best = max(best, max(abs(a) for a in j), max(abs(a) for a in end))
        return best

    # ---------------------------------------------------------------------- #
    def remainder(self, stencil, p):
        """sum C^{j,xi} (|D^xi z(i+j)|^p + 1) for every site of the stencil."""
        out = np.zeros(stencil.density_shape)
        for (j, xi), c in self._table.items():
            d = np.linalg.norm(stencil.difference(xi, j), axis=-1)
            out += c * (d ** p + 1.0)
        return out

    def nonconvexity_remainder(self, z, w, sup_gradient, p):
        """The remainder R of the controlled non-convexity inequality.

        sum C^{j,xi} [(S^p + 1) |z(j + xi) - w(j + xi)|^p]
        + sum C^{j,xi} (|D^xi z(j)|^p + |D^xi w(j)|^p + 1)

        with S the sup of |D^{e_n} psi|. ``sup_gradient`` may be an array
        broadcasting against the batch.
        """
        S = np.asarray(sup_gradient, dtype=float) ** p + 1.0
        out = np.zeros(z.density_shape)
        for (j, xi), c in self._table.items():
            end = tuple(a + b for a, b in zip(j, xi))
            gap = np.linalg.norm(z.shifted(end) - w.shifted(end), axis=-1) ** p
            dz = np.linalg.norm(z.difference(xi, j), axis=-1) ** p
            dw = np.linalg.norm(w.difference(xi, j), axis=-1) ** p
            out += c * (S.reshape(S.shape + (1,) * (out.ndim - S.ndim)) * gap
                        + dz + dw + 1.0)
        return out

    # ---------------------------------------------------------------------- #
    def to_frame(self):
        rows = [(format_vector(j), format_vector(xi), v) for (j, xi), v in self._table.items()]
        return pd.DataFrame(rows, columns=['j', 'xi', 'value'])

    def to_dict(self):
        return {'variant': self.variant, 'epsilon': self.epsilon,
                'delta': self.delta, 'level': self.level,
                'total_sum': self.total_sum(), 'entries': len(self)}

    @classmethod
    def from_frame(cls, df, variant='plain'):
        missing = {'j', 'xi', 'value'} - set(df.columns)
        if missing:
            raise ConfigurationError("coefficient table is missing columns %s"
                                     % sorted(missing), line=1)
        table = {}
        for row, (j, xi, value) in enumerate(zip(df['j'], df['xi'], df['value'])):
            line = row + 2
            j = parse_vector(j, line=line, column='j')
            xi = parse_vector(xi, line=line, column='xi')
            try:
                value = float(value)
            except (TypeError, ValueError):
                raise ConfigurationError("coefficient %r is not a number" % value,
                                         line=line, column='value')
            if len(j) != len(xi):
                raise ConfigurationError("j and xi have different dimensions",
                                         line=line, column='xi')
            if not np.isfinite(value) or value < 0:
                raise ConfigurationError("coefficient must be finite and nonnegative",
                                         line=line, column='value')
            table[(j, xi)] = table.get((j, xi), 0.0) + value
        return cls(table, variant=variant)

    @classmethod
    def from_csv(cls, path, variant='plain'):
        try:
            df = pd.read_csv(path, dtype=str, skipinitialspace=True)
        except (OSError, pd.errors.ParserError) as e:
            raise ConfigurationError("cannot read coefficient table: %s" % e, path=path)
        try:
            return cls.from_frame(df, variant)
        except ConfigurationError as e:
            raise ConfigurationError(e.reason, line=e.line,
                                     column=e.column, path=path)

    def __repr__(self):
        return ("DecayProfile(variant=%r, entries=%d, total=%g)"
                % (self.variant, len(self), self.total_sum()))
