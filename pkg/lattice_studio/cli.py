# =========================================================================== #
#                           COMMAND LINE INTERFACE                            #
# =========================================================================== #
# =========================================================================== #
# Project: Lattice Studio                                                     #
# Version: 0.1.0                                                              #
# File: \cli.py                                                               #
# Python Version: 3.10.12                                                     #
# ---------------                                                             #
# Author: John James                                                          #
# Company: Decision Scients                                                   #
# Email: jjames@decisionscients.com                                           #
# ---------------                                                             #
# Create Date: Monday July 13th 2026, 5:36:35 am                              #
# Last Modified: Thursday July 23rd 2026, 10:08:17 pm                         #
# Modified By: John James (jjames@decisionscients.com)                        #
# ---------------                                                             #
# License: Modified BSD                                                       #
# Copyright (c) 2026 Decision Scients                                         #
# =========================================================================== #

"""Console script for lattice studio."""
import json
import logging
import sys

import click
import yaml

from lattice_studio.services.config import RunConfig
from lattice_studio.services.runner import EXIT_CONFIGURATION, run
from lattice_studio.utils.exceptions import ConfigurationError
from lattice_studio.utils.file_manager import save_json

logger = logging.getLogger(__name__)

def _matrix(value):
    if value is None:
        return None
    try:
        return [float(v) for v in value.replace(';', ',').split(',') if v.strip()]
    except ValueError:
        raise click.BadParameter("expected a comma separated list of numbers, got %r" % value)

def _boundary(value):
    if value is None or value == 'sqrt':
        return value
    try:
        return int(value)
    except ValueError:
        raise click.BadParameter("expected 'sqrt' or a positive integer, got %r" % value)

def _schedule(value):
    if value is None:
        return None
    try:
        return [int(v) for v in value.split(',') if v.strip()]
    except ValueError:
        raise click.BadParameter("expected a comma separated list of integers, got %r" % value)

def _load(ctx, command, section=None, overrides=None):
    """Reads the configuration file, applies the command line overrides and validates."""
    options = ctx.obj
    document = {}
    if options['config']:
        try:
            with open(options['config']) as f:
                document = yaml.safe_load(f) or {}
        except (OSError, yaml.YAMLError) as e:
            raise ConfigurationError("cannot read configuration: %s" % e,
                                     path=options['config'])
        if not isinstance(document, dict):
            raise ConfigurationError("configuration must be a mapping",
                                     path=options['config'])
    document['command'] = command
    for key in ('seed', 'threads'):
        if options[key] is not None:
            document[key] = options[key]
    if options['output'] is not None:
        document.setdefault('output', {})['directory'] = options['output']
    for key, value in (overrides or {}).items():
        if value is not None:
            document.setdefault(section, {})[key] = value
    return RunConfig.from_dict(document)

def _execute(ctx, command, section=None, **overrides):
    directory = ctx.obj['output'] or 'results'
    try:
        config = _load(ctx, command, section, overrides)
    except ConfigurationError as e:
        click.echo("configuration error: %s" % e, err=True)
        save_json(e.to_dict(), directory, 'error.json')
        ctx.exit(EXIT_CONFIGURATION)
    result = run(config)
    if result.exit_code == EXIT_CONFIGURATION:
        click.echo("configuration error: %s" % result.summary.get('message'), err=True)
    else:
        click.echo(json.dumps(result.summary, default=str))
    for path in result.artifacts:
        logger.info("wrote %s", path)
    ctx.exit(result.exit_code)

# --------------------------------------------------------------------------- #
#                                COMMANDS                                     #
# --------------------------------------------------------------------------- #
@click.group()
@click.option('--config', 'config', type=click.Path(dir_okay=False), default=None,
              help='YAML run configuration.')
@click.option('--output', type=click.Path(file_okay=False), default=None,
              help='Directory of the artifacts.')
@click.option('--threads', type=click.IntRange(min=1), default=None,
              help='Worker threads; defaults to LATTICE_STUDIO_THREADS or 1.')
@click.option('--seed', type=click.IntRange(min=0), default=None)
@click.option('-v', '--verbose', is_flag=True, help='Log solver iterations at DEBUG level.')
@click.pass_context
def main(ctx, config, output, threads, seed, verbose):
    """Lattice homogenization toolkit."""
    logging.basicConfig(level=logging.DEBUG if verbose else logging.INFO,
                        format='%(asctime)s :: %(levelname)s :: %(name)s :: %(message)s',
                        datefmt='%Y-%m-%d %H:%M:%S')
    ctx.obj = {'config': config, 'output': output, 'threads': threads, 'seed': seed}

@main.command()
@click.option('--samples', type=click.IntRange(min=4), default=None)
@click.pass_context
def check(ctx, samples):
    """Checks the structural hypotheses of the configured potential."""
    _execute(ctx, 'check', 'check', samples=samples)

@main.command()
@click.option('--M', 'M', default=None, help='Slope, row-major, e.g. 1,0,0,1.')
@click.option('--L', 'L', type=click.IntRange(min=1), default=None)
@click.option('--m', 'm', default=None, help="Boundary layer width or 'sqrt'.")
@click.option('--method', type=click.Choice(['auto', 'exact-quadratic',
                                            'iterative-first-order', 'brute-oracle']),
              default=None)
@click.option('--gtol', type=float, default=None)
@click.option('--max-iter', type=click.IntRange(min=1), default=None)
@click.option('--starts', type=click.IntRange(min=1), default=None)
@click.option('--dump-field', is_flag=True)
@click.pass_context
def cell(ctx, M, L, m, method, gtol, max_iter, starts, dump_field):
    """Minimizes one cell problem."""
    _execute(ctx, 'cell', 'cell', M=_matrix(M), L=L, m=_boundary(m), method=method,
             gtol=gtol, max_iter=max_iter, starts=starts, dump_field=dump_field or None)

@main.command()
@click.option('--M', 'M', default=None, help='Slope, row-major, e.g. 1,0,0,1.')
@click.option('--schedule', default=None, help='Cube sides, e.g. 8,16,32.')
@click.option('--m', 'm', default=None, help="Boundary layer width or 'sqrt'.")
@click.option('--method', default=None)
@click.option('--gtol', type=float, default=None)
@click.pass_context
def fhom(ctx, M, schedule, m, method, gtol):
    """Estimates the homogenized density at one slope."""
    _execute(ctx, 'fhom', 'fhom', M=_matrix(M), schedule=_schedule(schedule),
             boundary=_boundary(m), method=method, gtol=gtol)

@main.command()
@click.option('--schedule', default=None, help='Cube sides, e.g. 8,16,32.')
@click.option('--m', 'm', default=None, help="Boundary layer width or 'sqrt'.")
@click.option('--method', default=None)
@click.option('--fresh', is_flag=True, help='Ignore an existing sweep record.')
@click.pass_context
def sweep(ctx, schedule, m, method, fresh):
    """Estimates the homogenized density over the configured grid."""
    _execute(ctx, 'sweep', 'sweep', schedule=_schedule(schedule), boundary=_boundary(m),
             method=method, resume=False if fresh else None)

@main.command()
@click.option('--schedule', default=None, help='Cube sides, e.g. 8,16,32.')
@click.pass_context
def probe(ctx, schedule):
    """Probes rank-one convexity of the homogenized density."""
    _execute(ctx, 'probe', 'probe', schedule=_schedule(schedule))

@main.command('lj-margin')
@click.option('--K-max', 'K_max', type=click.IntRange(min=2), default=None)
@click.pass_context
def lj_margin(ctx, K_max):
    """Tabulates the Lennard-Jones coercivity margin over K."""
    _execute(ctx, 'lj-margin', 'lj_margin', K_max=K_max)

if __name__ == "__main__":
    sys.exit(main())  # pragma: no cover
