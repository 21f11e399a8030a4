# =========================================================================== #
#                                   RUNNER                                    #
# =========================================================================== #
# =========================================================================== #
# Project: Lattice Studio                                                     #
# Version: 0.1.0                                                              #
# File: \runner.py                                                            #
# Python Version: 3.10.12                                                     #
# ---------------                                                             #
# Author: John James                                                          #
# Company: Decision Scients                                                   #
# Email: jjames@decisionscients.com                                           #
# ---------------                                                             #
# Create Date: Thursday August 13th 2026, 5:34:39 pm                          #
# Last Modified: Thursday September 10th 2026, 3:14:17 pm                     #
# Modified By: John James (jjames@decisionscients.com)                        #
# ---------------                                                             #
# License: Modified BSD                                                       #
# Copyright (c) 2026 Decision Scients                                         #
# =========================================================================== #

"""Executes a validated RunConfig and writes its artifacts.

Exit codes: 0 success, 1 failed hypothesis check, 2 a cell solve that did
not converge, 3 configuration error.
"""
from dataclasses import dataclass, field
import logging
import os

import numpy as np
import pandas as pd

from lattice_studio.cellsolver import CellProblem, solve
from lattice_studio.homogenize import estimate_fhom, rank_one_probe, sweep
from lattice_studio.homogenize.sweep import ERROR, OK
from lattice_studio.hypotheses import SampleSchedule, check_all
from lattice_studio.potentials import build_potential, lj_margin_table
from lattice_studio.utils.exceptions import ConfigurationError
from lattice_studio.utils.file_manager import (save_csv, save_field_csv, save_json,
                                               save_plot_data)
from lattice_studio.utils.misc import matrix_label, parse_matrix

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_NOT_CONVERGED = 2
EXIT_CONFIGURATION = 3

@dataclass
class RunResult:
    exit_code: int
    artifacts: list = field(default_factory=list)
    summary: dict = field(default_factory=dict)

# --------------------------------------------------------------------------- #
#                               PLOT DATA                                     #
# --------------------------------------------------------------------------- #
PLOT_FILES = {'F_L': ('F_L versus L', ['L', 'F_L']),
              'f_hom': ('f_hom versus |M|', ['norm_M', 'f_hom', 'error_bar']),
              'margin': ('coercivity margin versus K', ['K', 'margin', 'tail_bound'])}

def emit_plot_data(results, directory, prefix='run'):
    """Writes whitespace separated data files for the curves in ``results``.

    Parameters
    ----------
    results : dict
        Maps 'F_L', 'f_hom' and 'margin' to a list of (label, rows) blocks.
        A key with no blocks produces a header-only file.

    Returns
    -------
    list of str
        Paths written.
    """
    paths = []
    for key, blocks in results.items():
        if key not in PLOT_FILES:
            raise ValueError("unknown plot data %r." % key)
        title, columns = PLOT_FILES[key]
        paths.append(save_plot_data(list(blocks), columns, directory,
                                    "%s_%s.dat" % (prefix, key), title=title))
    return paths

# --------------------------------------------------------------------------- #
#                               COMMANDS                                      #
# --------------------------------------------------------------------------- #
class Runner:
    """Runs one command of a configuration."""

    def __init__(self, config):
        self.config = config
        output = config.section('output')
        self.directory = output['directory']
        self.prefix = output['prefix']
        self.artifacts = []

    def _name(self, suffix):
        return "%s_%s" % (self.prefix, suffix)

    def _json(self, payload, suffix):
        payload = dict(payload)
        payload['config'] = self.config.to_dict()
        self.artifacts.append(save_json(payload, self.directory, self._name(suffix)))

    def _csv(self, df, suffix):
        self.artifacts.append(save_csv(df, self.directory, self._name(suffix)))

    def _plots(self, results):
        self.artifacts.extend(emit_plot_data(results, self.directory, self.prefix))

    def __call__(self):
        dispatcher = {'check': self.check, 'cell': self.cell, 'fhom': self.fhom,
                      'sweep': self.sweep, 'probe': self.probe, 'lj-margin': self.lj_margin}
        return dispatcher[self.config.command]()

    def potential(self):
        return build_potential(self.config.potential)

    def check(self):
        section = self.config.section('check')
        schedule = SampleSchedule(epsilons=tuple(section['epsilons']),
                                  deltas=tuple(section['deltas']),
                                  samples=section['samples'], seed=self.config.seed,
                                  amplitude=section['amplitude'],
                                  large_amplitude=section['large_amplitude'],
                                  matrix_radius=section['matrix_radius'])
        report = check_all(self.potential(), schedule, self.config.threads)
        self._json(report.to_dict(), 'check.json')
        self._csv(report.to_frame(), 'check.csv')
        code = EXIT_OK if report.passed else EXIT_CHECK_FAILED
        return code, {'passed': report.passed, 'failures': report.failures}

    def cell(self):
        section = self.config.section('cell')
        potential = self.potential()
        problem = CellProblem(potential, section['M'], section['L'], section['m'])
        solution = solve(problem, method=section['method'], gtol=section['gtol'],
                         max_iter=section['max_iter'], starts=section['starts'],
                         seed=self.config.seed)
        self._json(solution.to_dict(), 'cell.json')
        if section['dump_field']:
            self.artifacts.append(save_field_csv(solution.field, self.directory,
                                                 self._name('field.csv')))
        code = EXIT_OK if solution.converged else EXIT_NOT_CONVERGED
        return code, {'F_L': solution.per_volume_energy, 'converged': solution.converged,
                      'notes': solution.notes}

    def fhom(self):
        section = self.config.section('fhom')
        potential = self.potential()
        estimate = estimate_fhom(potential, section['M'], section['schedule'],
                                 section['boundary'], section['method'], section['gtol'])
        self._json(estimate.to_dict(), 'fhom.json')
        self._csv(pd.DataFrame(estimate.points), 'fhom.csv')
        self._plots({'F_L': [(matrix_label(estimate.M),
                              [(p['L'], p['F_L']) for p in estimate.points])]})
        code = EXIT_OK if estimate.converged else EXIT_NOT_CONVERGED
        return code, {'f_hom': estimate.f_hom, 'error_bar': estimate.error_bar}

    def sweep(self):
        section = self.config.section('sweep')
        potential = self.potential()
        record = os.path.join(self.directory, self._name('sweep.csv'))
        if not section['resume'] and os.path.exists(record):
            os.remove(record)
        table = sweep(potential, section['grid'], section['schedule'], section['boundary'],
                      section['method'], section['gtol'], record=record,
                      threads=self.config.threads)
        self.artifacts.append(record)
        self._json({'rows': table.to_dict(orient='records')}, 'sweep.json')
        self._plots(sweep_plot_data(table, potential.n, potential.N))
        code = EXIT_OK if (table['status'] == OK).all() else EXIT_NOT_CONVERGED
        return code, {'entries': int(len(table)),
                      'errors': int((table['status'] == ERROR).sum())}

    def probe(self):
        section = self.config.section('probe')
        result = rank_one_probe(self.potential(), section['pairs'], section['lambdas'],
                                section['schedule'], section['boundary'], section['method'],
                                threads=self.config.threads)
        self._json(result.to_dict(), 'probe.json')
        self._csv(result.to_frame(), 'probe.csv')
        return EXIT_OK, {'violations': len(result.violations)}

    def lj_margin(self):
        table = lj_margin_table(self.config.section('lj_margin')['K_max'])
        self._csv(table, 'lj_margin.csv')
        self._plots({'margin': [(None, table.values.tolist())]})
        return EXIT_OK, {'margin': float(table['margin'].iloc[-1]),
                         'positive': bool((table['margin'] > 0).all())}

def sweep_plot_data(table, n, N):
    """F_L versus L blocks per slope and f_hom versus |M| from a sweep table."""
    columns = ['M_%d%d' % (a + 1, b + 1) for a in range(n) for b in range(N)]
    curves, points = [], []
    for key, rows in table[table['status'] != ERROR].groupby(columns, sort=False):
        M = parse_matrix(np.atleast_1d(np.asarray(key, dtype=float)), n, N)
        curves.append((matrix_label(M), rows[['L', 'F_L']].values.tolist()))
        first = rows.iloc[0]
        points.append((float(np.linalg.norm(M)), first['f_hom_extrapolated'],
                       first['error_bar']))
    return {'F_L': curves, 'f_hom': [(None, sorted(points))]}

def run(config):
    """Runs a RunConfig; returns a RunResult with the exit code and artifacts.

    Configuration problems found while building inputs are written to
    ``error.json`` in the output directory.
    """
    runner = Runner(config)
    logger.info("running %s", config.command)
    try:
        code, summary = runner()
    except ConfigurationError as e:
        logger.error("configuration error: %s", e)
        path = save_json(dict(e.to_dict(), config=config.to_dict()), runner.directory,
                         'error.json')
        return RunResult(EXIT_CONFIGURATION, runner.artifacts + [path], e.to_dict())
    except (TypeError, ValueError) as e:
        logger.error("invalid input: %s", e)
        error = ConfigurationError(str(e))
        path = save_json(dict(error.to_dict(), config=config.to_dict()), runner.directory,
                         'error.json')
        return RunResult(EXIT_CONFIGURATION, runner.artifacts + [path], error.to_dict())
    logger.info("%s finished with exit code %d", config.command, code)
    return RunResult(code, runner.artifacts, summary)
