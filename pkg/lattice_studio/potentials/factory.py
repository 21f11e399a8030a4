# =========================================================================== #
#                              POTENTIAL FACTORY                              #
# =========================================================================== #
# =========================================================================== #
# Project: Lattice Studio                                                     #
# Version: 0.1.0                                                              #
# File: \factory.py                                                           #
# Python Version: 3.10.12                                                     #
# ---------------                                                             #
# Author: John James                                                          #
# Company: Decision Scients                                                   #
# Email: jjames@decisionscients.com                                           #
# ---------------                                                             #
# Create Date: Wednesday August 5th 2026, 7:12:51 pm                          #
# Last Modified: Saturday August 29th 2026, 9:35:30 am                        #
# Modified By: John James (jjames@decisionscients.com)                        #
# ---------------                                                             #
# License: Modified BSD                                                       #
# Copyright (c) 2026 Decision Scients                                         #
# =========================================================================== #

"""Builds potentials from the ``potential`` section of a run configuration."""
import logging

import pandas as pd

from lattice_studio.potentials.determinant import DeterminantPotential, DEFAULT_ETA
from lattice_studio.potentials.lennard_jones import LJLinearizedPotential, LJRawPotential
from lattice_studio.potentials.pair import PairPotential, PowerPairTerm
from lattice_studio.potentials.periodic import make_periodic
from lattice_studio.potentials.profiles import DecayProfile
from lattice_studio.utils.exceptions import ConfigurationError

logger = logging.getLogger(__name__)

MAX_INLINE_ENTRIES = 10 ** 4

# --------------------------------------------------------------------------- #
#                              PAIR FAMILY                                    #
# --------------------------------------------------------------------------- #
class PairFactory():
    """Returns pair potentials from presets, term lists or coefficient tables."""

    def __call__(self, section):
        N = section.get('dimension', 1)
        n = section.get('codomain', 1)
        p = section.get('p', 2.0)
        coercivity = section.get('coercivity')
        name = section.get('name')
        sources = [k for k in ('preset', 'terms', 'table', 'table_path') if k in section]
        if len(sources) != 1:
            raise ConfigurationError("a pair potential needs exactly one of preset, terms, "
                                     "table or table_path, got %s" % (sources or 'none'))
        source = sources[0]
        if source == 'preset':
            potential = self._preset(section, N, n, p)
        elif source == 'terms':
            terms = [PowerPairTerm(t['xi'], anchor=t.get('anchor'),
                                   stiffness=t.get('stiffness', 1.0), p=p)
                     for t in section['terms']]
            potential = PairPotential(terms, N, n, p, coercivity, name)
        else:
            potential = PairPotential.from_profile(self._table(section, source), N, n, p,
                                                   coercivity, name)
        if coercivity is not None:
            potential.coercivity = float(coercivity)
        return potential

    def _preset(self, section, N, n, p):
        preset = section['preset']
        if preset == 'nearest-neighbour':
            return PairPotential.nearest_neighbour(N, n, p, section.get('stiffness', 1.0))
        if N != 1:
            raise ConfigurationError("preset %r is one-dimensional, got dimension %d"
                                     % (preset, N))
        if preset == 'two-spring-chain':
            a, b = section.get('springs', [1.0, 3.0])
            return PairPotential.two_spring_chain(a, b, n)
        if preset == 'next-nearest-window':
            c2, c3 = section.get('window', [1.0, 1.0])
            return PairPotential.next_nearest_window(c2, c3, n)
        raise ConfigurationError("unknown pair preset %r" % preset)

    def _table(self, section, source):
        if source == 'table_path':
            profile = DecayProfile.from_csv(section['table_path'])
        else:
            rows = section['table']
            if len(rows) > MAX_INLINE_ENTRIES:
                raise ConfigurationError("inline tables are limited to %d entries; "
                                         "use table_path" % MAX_INLINE_ENTRIES)
            profile = DecayProfile.from_frame(pd.DataFrame(rows, columns=['j', 'xi', 'value']))
        if not len(profile):
            raise ConfigurationError("the coefficient table has no positive entries")
        return profile

# --------------------------------------------------------------------------- #
#                             OTHER FAMILIES                                  #
# --------------------------------------------------------------------------- #
class DeterminantFactory():
    """Returns determinant potentials from explicit or enumerated tuples."""

    def __call__(self, section):
        N = section.get('dimension', 2)
        n = section.get('codomain', N)
        if 'tuples' in section:
            tuples = [(t['xis'], t.get('weight', 1.0)) for t in section['tuples']]
        else:
            tuples = DeterminantPotential.enumerate_tuples(
                N, n, section.get('r_max', 1), section.get('decay'), section.get('scale', 1.0))
        return DeterminantPotential(tuples, N, n, section.get('p', 2.0), section.get('q', 1.0),
                                    section.get('eta', DEFAULT_ETA),
                                    section.get('nn_stiffness', 1.0), section.get('name'))

class LJFactory():
    """Returns the regrouped or the raw linearized Lennard-Jones potential."""

    def __call__(self, section):
        N = section.get('dimension', 3)
        k = section.get('k', 2)
        variant = section.get('variant', 'regrouped')
        dispatcher = {'regrouped': LJLinearizedPotential, 'raw': LJRawPotential}
        if variant not in dispatcher:
            raise ConfigurationError("unknown Lennard-Jones variant %r" % variant)
        return dispatcher[variant](k=k, N=N, n=section.get('codomain', 1),
                                   name=section.get('name'))

class PotentialFactory():
    """Returns the potential described by a configuration section."""

    def __call__(self, section):
        dispatcher = {'pair': PairFactory(),
                      'determinant': DeterminantFactory(),
                      'lj': LJFactory(),
                      'periodic-composite': self._periodic}
        family = section.get('family')
        if family not in dispatcher:
            raise ConfigurationError("unknown potential family %r" % family)
        try:
            potential = dispatcher[family](section)
        except (TypeError, ValueError) as e:
            if isinstance(e, ConfigurationError):
                raise
            raise ConfigurationError("invalid %s potential: %s" % (family, e))
        logger.info("built potential %s", potential.describe())
        return potential

    def _periodic(self, section):
        if 'base' not in section:
            raise ConfigurationError("a periodic-composite potential needs a base section")
        return make_periodic(self(section['base']), section.get('name'))

def build_potential(section):
    return PotentialFactory()(dict(section))

