# =========================================================================== #
#                              RUN CONFIGURATION                              #
# =========================================================================== #
# =========================================================================== #
# Project: Lattice Studio                                                     #
# Version: 0.1.0                                                              #
# File: \config.py                                                            #
# Python Version: 3.10.12                                                     #
# ---------------                                                             #
# Author: John James                                                          #
# Company: Decision Scients                                                   #
# Email: jjames@decisionscients.com                                           #
# ---------------                                                             #
# Create Date: Wednesday August 12th 2026, 2:46:49 pm                         #
# Last Modified: Tuesday September 8th 2026, 9:41:10 pm                       #
# Modified By: John James (jjames@decisionscients.com)                        #
# ---------------                                                             #
# License: Modified BSD                                                       #
# Copyright (c) 2026 Decision Scients                                         #
# =========================================================================== #

"""Validated run configuration read from a YAML file.

Every section rejects unknown keys. Defaults are filled in after
validation so that ``RunConfig.to_dict()`` is complete and re-parses to an
equal configuration.
"""
import copy
from dataclasses import dataclass, field
import logging

import jsonschema
import yaml

from lattice_studio.utils.exceptions import ConfigurationError
from lattice_studio.utils.parallel import default_threads

logger = logging.getLogger(__name__)

COMMANDS = ('check', 'cell', 'fhom', 'sweep', 'probe', 'lj-margin')

_NUMBER = {'type': 'number'}
_POSITIVE_INT = {'type': 'integer', 'minimum': 1}
_MATRIX = {'oneOf': [{'type': 'number'},
                     {'type': 'array', 'items': {'type': 'number'}, 'minItems': 1},
                     {'type': 'array', 'minItems': 1,
                      'items': {'type': 'array', 'items': {'type': 'number'}, 'minItems': 1}}]}
_OPTIONAL_MATRIX = {'oneOf': [{'type': 'null'}, _MATRIX]}
_BOUNDARY = {'oneOf': [{'const': 'sqrt'}, {'type': 'integer', 'minimum': 1}]}
_METHOD = {'enum': ['auto', 'exact-quadratic', 'iterative-first-order', 'brute-oracle']}
_TOLERANCE = {'oneOf': [{'type': 'null'}, {'type': 'number', 'exclusiveMinimum': 0}]}
_SCHEDULE = {'oneOf': [{'type': 'null'},
                       {'type': 'array', 'items': _POSITIVE_INT, 'minItems': 1}]}
_VECTOR = {'oneOf': [{'type': 'integer'}, {'type': 'string'},
                     {'type': 'array', 'items': {'type': 'integer'}, 'minItems': 1}]}

def _section(properties, required=()):
    return {'type': 'object', 'properties': properties, 'required': list(required),
            'additionalProperties': False}

POTENTIAL_SCHEMA = _section({
    'family': {'enum': ['pair', 'determinant', 'lj', 'periodic-composite']},
    'name': {'type': 'string'},
    'dimension': _POSITIVE_INT,
    'codomain': _POSITIVE_INT,
    'p': {'type': 'number', 'exclusiveMinimum': 1},
    'coercivity': {'type': 'number', 'exclusiveMinimum': 0},
    # pair
    'preset': {'enum': ['nearest-neighbour', 'two-spring-chain', 'next-nearest-window']},
    'stiffness': {'type': 'number', 'exclusiveMinimum': 0},
    'springs': {'type': 'array', 'items': _NUMBER, 'minItems': 2, 'maxItems': 2},
    'window': {'type': 'array', 'items': _NUMBER, 'minItems': 2, 'maxItems': 2},
    'terms': {'type': 'array', 'items': _section({'xi': _VECTOR, 'anchor': _VECTOR,
                                                  'stiffness': _NUMBER}, ['xi'])},
    'table': {'type': 'array', 'items': {'type': 'array', 'minItems': 3, 'maxItems': 3}},
    'table_path': {'type': 'string'},
    # determinant
    'tuples': {'type': 'array', 'items': _section({'xis': {'type': 'array', 'items': _VECTOR},
                                                   'weight': _NUMBER}, ['xis'])},
    'r_max': _POSITIVE_INT,
    'decay': _NUMBER,
    'scale': _NUMBER,
    'q': _NUMBER,
    'eta': _NUMBER,
    'nn_stiffness': _NUMBER,
    # lj
    'k': _POSITIVE_INT,
    'variant': {'enum': ['regrouped', 'raw']},
    # periodic-composite
    'base': {'type': 'object'},
}, ['family'])

CONFIG_SCHEMA = _section({
    'command': {'enum': list(COMMANDS)},
    'seed': {'type': 'integer', 'minimum': 0},
    'threads': _POSITIVE_INT,
    'potential': POTENTIAL_SCHEMA,
    'cell': _section({'M': _OPTIONAL_MATRIX, 'L': _POSITIVE_INT, 'm': _BOUNDARY, 'method': _METHOD,
                      'gtol': _TOLERANCE, 'max_iter': {'oneOf': [{'type': 'null'}, _POSITIVE_INT]},
                      'starts': _POSITIVE_INT, 'dump_field': {'type': 'boolean'}}),
    'fhom': _section({'M': _OPTIONAL_MATRIX, 'schedule': _SCHEDULE, 'boundary': _BOUNDARY,
                      'method': _METHOD, 'gtol': _TOLERANCE}),
    'sweep': _section({'grid': {'oneOf': [{'type': 'null'},
                                {'type': 'array', 'items': _MATRIX, 'minItems': 1}]},
                       'schedule': _SCHEDULE, 'boundary': _BOUNDARY, 'method': _METHOD,
                       'gtol': _TOLERANCE, 'resume': {'type': 'boolean'}}),
    'probe': _section({'pairs': {'oneOf': [{'type': 'null'},
                                           {'type': 'array', 'minItems': 1,
                                            'items': {'type': 'array', 'items': _MATRIX,
                                                      'minItems': 2, 'maxItems': 2}}]},
                       'lambdas': {'type': 'array', 'items': _NUMBER, 'minItems': 1},
                       'schedule': _SCHEDULE, 'boundary': _BOUNDARY, 'method': _METHOD}),
    'check': _section({'samples': {'type': 'integer', 'minimum': 4},
                       'epsilons': {'type': 'array', 'items': _NUMBER, 'minItems': 1},
                       'deltas': {'type': 'array', 'items': _NUMBER, 'minItems': 1},
                       'amplitude': _NUMBER, 'large_amplitude': _NUMBER,
                       'matrix_radius': _NUMBER}),
    'lj_margin': _section({'K_max': {'type': 'integer', 'minimum': 2}}),
    'output': _section({'directory': {'type': 'string'}, 'prefix': {'type': 'string'}}),
}, ['command'])

DEFAULTS = {
    'seed': 0,
    'cell': {'M': None, 'L': 16, 'm': 'sqrt', 'method': 'auto', 'gtol': None,
             'max_iter': None, 'starts': 1, 'dump_field': False},
    'fhom': {'M': None, 'schedule': None, 'boundary': 'sqrt', 'method': 'auto', 'gtol': None},
    'sweep': {'grid': None, 'schedule': None, 'boundary': 'sqrt', 'method': 'auto',
              'gtol': None, 'resume': True},
    'probe': {'pairs': None, 'lambdas': [0.25, 0.5, 0.75], 'schedule': None,
              'boundary': 'sqrt', 'method': 'auto'},
    'check': {'samples': 1000, 'epsilons': [0.25, 0.125, 0.0625, 0.03125, 0.015625],
              'deltas': [0.5, 0.25, 0.125], 'amplitude': 1.0, 'large_amplitude': 10.0,
              'matrix_radius': 10.0},
    'lj_margin': {'K_max': 1000},
    'output': {'directory': 'results', 'prefix': 'run'},
}

# Sections a command reads; the potential is needed by all but lj-margin.
REQUIRED = {'check': ('potential',), 'cell': ('potential', 'cell'),
            'fhom': ('potential', 'fhom'), 'sweep': ('potential', 'sweep'),
            'probe': ('potential', 'probe'), 'lj-margin': ()}

# A missing sweep grid falls back to the default grid of the potential.
KEYS = {'cell': 'M', 'fhom': 'M', 'probe': 'pairs'}

def _location(error):
    path = "/".join(str(p) for p in error.absolute_path)
    return path or "<root>"

def validate(document):
    """Validates a raw document against CONFIG_SCHEMA, raising ConfigurationError."""
    if not isinstance(document, dict):
        raise ConfigurationError("configuration must be a mapping, got %s"
                                 % type(document).__name__)
    validator = jsonschema.Draft7Validator(CONFIG_SCHEMA)
    errors = sorted(validator.iter_errors(document), key=lambda e: list(e.absolute_path))
    if errors:
        error = errors[0]
        raise ConfigurationError("%s: %s" % (_location(error), error.message),
                                 column=_location(error))
    potential = document.get('potential')
    while potential is not None and potential.get('family') == 'periodic-composite':
        if 'base' not in potential:
            raise ConfigurationError("potential: a periodic-composite needs a base section")
        base_errors = list(jsonschema.Draft7Validator(POTENTIAL_SCHEMA)
                           .iter_errors(potential['base']))
        if base_errors:
            raise ConfigurationError("potential/base/%s: %s" % (
                _location(base_errors[0]), base_errors[0].message))
        potential = potential['base']

@dataclass(frozen=True)
class RunConfig:
    """A validated configuration with every default resolved."""
    command: str
    seed: int
    threads: int
    potential: dict = field(default=None)
    sections: dict = field(default_factory=dict)

    @classmethod
    def from_dict(cls, document):
        document = copy.deepcopy(document)
        validate(document)
        command = document['command']
        for name in REQUIRED[command]:
            if name not in document:
                raise ConfigurationError("command %r needs a %s section" % (command, name))
        sections = {}
        for name, defaults in DEFAULTS.items():
            if name == 'seed':
                continue
            resolved = dict(defaults)
            resolved.update(document.get(name, {}))
            sections[name] = resolved
        key = KEYS.get(command)
        if key is not None and sections[command.replace('-', '_')][key] is None:
            raise ConfigurationError("%s: %s is required" % (command, key), column=command)
        threads = document.get('threads') or default_threads()
        config = cls(command, int(document.get('seed', DEFAULTS['seed'])), int(threads),
                     document.get('potential'), sections)
        logger.debug("resolved configuration for command %s", command)
        return config

    @classmethod
    def from_yaml(cls, text):
        try:
            document = yaml.safe_load(text)
        except yaml.YAMLError as e:
            mark = getattr(e, 'problem_mark', None)
            raise ConfigurationError("invalid YAML: %s" % getattr(e, 'problem', e),
                                     line=None if mark is None else mark.line + 1,
                                     column=None if mark is None else mark.column + 1)
        return cls.from_dict(document or {})

    @classmethod
    def from_file(cls, path):
        try:
            with open(path) as f:
                text = f.read()
        except OSError as e:
            raise ConfigurationError("cannot read configuration: %s" % e, path=path)
        try:
            return cls.from_yaml(text)
        except ConfigurationError as e:
            raise ConfigurationError(e.reason, line=e.line, column=e.column, path=path)

    def section(self, name):
        return self.sections[name.replace('-', '_')]

    def to_dict(self):
        document = {'command': self.command, 'seed': self.seed, 'threads': self.threads}
        if self.potential is not None:
            document['potential'] = copy.deepcopy(self.potential)
        document.update(copy.deepcopy(self.sections))
        return document

    def to_yaml(self):
        return yaml.safe_dump(self.to_dict(), sort_keys=False)
