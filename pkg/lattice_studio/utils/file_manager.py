# =========================================================================== #
#                                FILE MANAGER                                 #
# =========================================================================== #
# =========================================================================== #
# Project: Lattice Studio                                                     #
# Version: 0.1.0                                                              #
# File: \file_manager.py                                                      #
# Python Version: 3.10.12                                                     #
# ---------------                                                             #
# Author: John James                                                          #
# Company: Decision Scients                                                   #
# Email: jjames@decisionscients.com                                           #
# ---------------                                                             #
# Create Date: Sunday August 16th 2026, 5:07:25 am                            #
# Last Modified: Sunday August 23rd 2026, 8:30:57 am                          #
# Modified By: John James (jjames@decisionscients.com)                        #
# ---------------                                                             #
# License: Modified BSD                                                       #
# Copyright (c) 2026 Decision Scients                                         #
# =========================================================================== #

"""Atomic writers for reports, tables and plot data."""
import json
import logging
import os
import tempfile

import numpy as np
import pandas as pd

from lattice_studio.utils.misc import fmt

logger = logging.getLogger(__name__)

FLOAT_FORMAT = '%.17g'

def _atomic_write(path, write):
    """Writes through a temporary file in the target directory, then renames."""
    path = os.path.abspath(path)
    directory = os.path.dirname(path)
    if not os.path.exists(directory):
        os.makedirs(directory)
    fd, tmp = tempfile.mkstemp(dir=directory, prefix='.' + os.path.basename(path),
                               suffix='.tmp')
    try:
        with os.fdopen(fd, 'w', newline='') as f:
            write(f)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.remove(tmp)
        raise
    logger.debug("wrote %s", path)
    return path

def _to_builtin(obj):
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    if isinstance(obj, (np.floating,)):
        return float(obj)
    if isinstance(obj, (np.integer,)):
        return int(obj)
    if isinstance(obj, (np.bool_,)):
        return bool(obj)
    if isinstance(obj, tuple):
        return list(obj)
    raise TypeError("object of type %s is not JSON serializable"
                    % type(obj).__name__)

def save_text(text, directory, filename):
    return _atomic_write(os.path.join(directory, filename),
                         lambda f: f.write(text))

def save_json(obj, directory, filename):
    return _atomic_write(os.path.join(directory, filename),
                         lambda f: json.dump(obj, f, indent=2, sort_keys=False,
                                             default=_to_builtin))

def save_csv(df, directory, filename):
    return _atomic_write(os.path.join(directory, filename),
                         lambda f: df.to_csv(f, index=False,
                                             float_format=FLOAT_FORMAT))

def save_field_csv(field, directory, filename):
    """Dumps a LatticeField as integer coordinates followed by value components."""
    coords = field.domain.indices()
    values = field.values.reshape(-1, field.domain.n)
    columns = {}
    for k in range(coords.shape[1]):
        columns['i%d' % (k + 1)] = coords[:, k]
    for c in range(values.shape[1]):
        columns['u%d' % (c + 1)] = values[:, c]
    return save_csv(pd.DataFrame(columns), directory, filename)

def format_plot_data(blocks, columns, title=None):
    """Formats whitespace separated plot data.

    Parameters
    ----------
    blocks : list of (label, rows)
        Each block is written after a '# label' line; blocks are separated
        by two blank lines so that plotting tools can index them.

    columns : list of str
        Column names written in the header.
    """
    lines = []
    if title:
        lines.append("# " + title)
    lines.append("# columns: " + " ".join(columns))
    for b, (label, rows) in enumerate(blocks):
        if b > 0:
            lines.extend(["", ""])
        if label:
            lines.append("# " + str(label))
        for row in rows:
            lines.append(" ".join(fmt(v) for v in row))
    return "\n".join(lines) + "\n"

def save_plot_data(blocks, columns, directory, filename, title=None):
    return save_text(format_plot_data(blocks, columns, title), directory, filename)
