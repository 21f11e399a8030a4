# =========================================================================== #
#                                 HYPOTHESES                                  #
# =========================================================================== #
# =========================================================================== #
# Project: Lattice Studio                                                     #
# Version: 0.1.0                                                              #
# File: \__init__.py                                                          #
# Python Version: 3.10.12                                                     #
# ---------------                                                             #
# Author: John James                                                          #
# Company: Decision Scients                                                   #
# Email: jjames@decisionscients.com                                           #
# ---------------                                                             #
# Create Date: Monday July 20th 2026, 6:45:41 am                              #
# Last Modified: Monday August 3rd 2026, 3:49:05 pm                           #
# Modified By: John James (jjames@decisionscients.com)                        #
# ---------------                                                             #
# License: Modified BSD                                                       #
# Copyright (c) 2026 Decision Scients                                         #
# =========================================================================== #

"""Executable checks of the structural hypotheses on concrete potentials."""
from lattice_studio.hypotheses.checks import (check_all, check_H1, check_H2, check_H3,
                                              check_H4, check_H5, check_Hp)
from lattice_studio.hypotheses.report import HypothesisEntry, HypothesisReport, Violation
from lattice_studio.hypotheses.schedule import SampleSchedule
