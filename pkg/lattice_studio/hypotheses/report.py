# =========================================================================== #
#                             HYPOTHESIS REPORTS                              #
# =========================================================================== #
# =========================================================================== #
# Project: Lattice Studio                                                     #
# Version: 0.1.0                                                              #
# File: \report.py                                                            #
# Python Version: 3.10.12                                                     #
# ---------------                                                             #
# Author: John James                                                          #
# Company: Decision Scients                                                   #
# Email: jjames@decisionscients.com                                           #
# ---------------                                                             #
# Create Date: Wednesday July 22nd 2026, 8:47:39 am                           #
# Last Modified: Thursday August 6th 2026, 11:21:37 pm                        #
# Modified By: John James (jjames@decisionscients.com)                        #
# ---------------                                                             #
# License: Modified BSD                                                       #
# Copyright (c) 2026 Decision Scients                                         #
# =========================================================================== #

"""Per-hypothesis entries and the report assembled from them."""
from dataclasses import dataclass, field
import logging

import numpy as np
import pandas as pd

logger = logging.getLogger(__name__)

PASS, FAIL, NOT_APPLICABLE = 'pass', 'fail', 'not-applicable'

@dataclass
class Violation:
    """Worst sample seen by a check, enough to replay it.

    The sample is number ``sample`` of the batch drawn from
    default_rng([seed, cell]) at lattice spacing ``epsilon``.
    """
    value: float
    site: tuple
    seed: int
    cell: int
    sample: int
    epsilon: float = None
    delta: float = None
    level: int = None
    window: list = None

    def to_dict(self):
        return {'value': float(self.value), 'site': [int(a) for a in self.site],
                'seed': int(self.seed), 'cell': int(self.cell), 'sample': int(self.sample),
                'epsilon': self.epsilon, 'delta': self.delta, 'level': self.level,
                'window': self.window}

@dataclass
class HypothesisEntry:
    """Outcome of one check."""
    hypothesis: str
    status: str
    constants: dict = field(default_factory=dict)
    decay_sums: list = field(default_factory=list)
    worst: Violation = None
    samples: int = 0
    message: str = ''

    def __post_init__(self):
        if self.status not in (PASS, FAIL, NOT_APPLICABLE):
            raise ValueError("status must be 'pass', 'fail' or 'not-applicable'.")
        if self.status == PASS and not all(np.isfinite(v) for v in self.constants.values()
                                           if v is not None):
            raise ValueError("a passing entry must carry finite constants.")

    @property
    def passed(self):
        return self.status != FAIL

    def to_dict(self):
        return {'hypothesis': self.hypothesis, 'status': self.status,
                'constants': {k: (None if v is None else float(v))
                              for k, v in self.constants.items()},
                'decay_sums': self.decay_sums,
                'worst': None if self.worst is None else self.worst.to_dict(),
                'samples': int(self.samples), 'message': self.message}

class HypothesisReport:
    """Entries of every check run on one potential, in a fixed order."""

    def __init__(self, potential, schedule, entries=None):
        self.potential = potential
        self.schedule = schedule
        self.entries = list(entries or [])

    def add(self, entry):
        self.entries.append(entry)
        logger.info("%s: %s %s", entry.hypothesis, entry.status.upper(), entry.message)

    def __getitem__(self, hypothesis):
        for entry in self.entries:
            if entry.hypothesis == hypothesis:
                return entry
        raise KeyError(hypothesis)

    def __iter__(self):
        return iter(self.entries)

    @property
    def passed(self):
        return all(e.passed for e in self.entries)

    @property
    def failures(self):
        return [e.hypothesis for e in self.entries if e.status == FAIL]

    def constant(self, hypothesis, name):
        """A fitted or declared constant, None when missing."""
        try:
            return self[hypothesis].constants.get(name)
        except KeyError:
            return None

    def to_dict(self):
        return {'potential': self.potential.describe(),
                'schedule': self.schedule.to_dict(),
                'passed': self.passed,
                'entries': [e.to_dict() for e in self.entries]}

    def to_frame(self):
        rows = []
        for e in self.entries:
            constants = ", ".join("%s=%.6g" % (k, v) for k, v in e.constants.items()
                                  if v is not None)
            worst = "" if e.worst is None else "%.3e (cell %d, sample %d)" % (
                e.worst.value, e.worst.cell, e.worst.sample)
            rows.append((e.hypothesis, e.status, constants, e.samples, worst, e.message))
        return pd.DataFrame(rows, columns=['hypothesis', 'status', 'constants', 'samples',
                                           'worst', 'message'])

    def to_text(self):
        with pd.option_context('display.max_colwidth', 80, 'display.width', 200):
            return self.to_frame().to_string(index=False)
