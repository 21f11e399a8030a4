# =========================================================================== #
#                                  SERVICES                                   #
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
# Create Date: Tuesday August 11th 2026, 1:58:01 pm                           #
# Last Modified: Monday September 7th 2026, 6:07:05 am                        #
# Modified By: John James (jjames@decisionscients.com)                        #
# ---------------                                                             #
# License: Modified BSD                                                       #
# Copyright (c) 2026 Decision Scients                                         #
# =========================================================================== #

"""Run configuration and orchestration."""
from lattice_studio.services.config import CONFIG_SCHEMA, RunConfig, validate
from lattice_studio.services.runner import RunResult, emit_plot_data, run
