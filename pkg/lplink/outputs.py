#!/usr/bin/python
"""
Module to write the results of lplink to disk.
* CSV files for the curves, region tables and Monte Carlo summaries
* SVG figures overlaying several curves

Numbers are written with the '%.10g' format, so rerunning a command
gives byte-identical files.
"""
from __future__ import division, absolute_import, print_function

import os
import numpy as np

from lplink.config_lplink import safe_mkdir

RESPONSE_HEADER = ('snr_db', 'prr')
CURVE_HEADER = ('distance_m', 'prr')
REGIONS_HEADER = ('radio', 'modulation', 'frame_bytes',
                  'd_connected_end_m', 'd_transitional_end_m',
                  'p_connected_end_m', 'p_transitional_end_m')
COMPARE_REGIONS_HEADER = ('label', 'd_connected_end_m',
                          'd_transitional_end_m')
SIMULATION_HEADER = ('trials', 'successes', 'empirical_prr',
                     'analytic_prr', 'seed')
ENSEMBLE_HEADER = ('distance_m', 'mean_prr', 'std_prr',
                   'p05', 'p25', 'p50', 'p75', 'p95')

def format_value(value):
    """
    String representation of one CSV cell.

    Examples
    ----------
    >>> print(format_value(0.1 + 0.2), format_value(50), format_value('ncfsk'))
    0.3 50 ncfsk
    >>> print(format_value(np.float64(11.789169826)))
    11.78916983
    """
    if isinstance(value, str):
        return value
    if isinstance(value, (int, np.integer)) and not isinstance(value, bool):
        return str(int(value))
    return '%.10g' % float(value)

def write_csv(fn_out, header, rows, verbose=False):
    """
    Write a table as comma-separated values, one row per line.

    Parameters
    ----------
    fn_out : string
        Name of the output file. Its folder is created if needed.
    header : list of strings
        Names of the columns.
    rows : list of lists
        Values, one list per line.
    verbose : bool, optional
        If True, print the name of the file written.

    Examples
    ----------
    >>> fn = 'mycsv_to_test_/table.csv'
    >>> write_csv(fn, ('a', 'b'), [[1, 0.5], [2, 1./3]], verbose=True)
    Table written to mycsv_to_test_/table.csv
    >>> print(open(fn).read().strip())
    a,b
    1,0.5
    2,0.3333333333
    >>> os.remove(fn); os.rmdir('mycsv_to_test_')

    >>> write_csv(fn, ('a', 'b'), [[1]])
    Traceback (most recent call last):
      ...
    ValueError: Row 0 has 1 values but the header has 2 columns.
    """
    lines = [','.join(header)]
    for i, row in enumerate(rows):
        if len(row) != len(header):
            raise ValueError(
                "Row {} has {} values but the header has {} columns.".format(
                    i, len(row), len(header)))
        lines.append(','.join([format_value(v) for v in row]))

    folder = os.path.dirname(fn_out)
    if folder:
        safe_mkdir(folder)
    with open(fn_out, 'w') as f:
        f.write('\n'.join(lines) + '\n')
    if verbose:
        print("Table written to {}".format(fn_out))

def write_columns(fn_out, header, columns, verbose=False):
    """
    Write 1d arrays of the same length as the columns of a CSV file.

    Parameters
    ----------
    fn_out : string
        Name of the output file.
    header : list of strings
        Names of the columns.
    columns : list of 1d arrays
        One array per column.
    verbose : bool, optional
        If True, print the name of the file written.

    Examples
    ----------
    >>> fn = 'mycolumns_to_test_.csv'
    >>> write_columns(fn, CURVE_HEADER, [np.array([1., 2.]),
    ...     np.array([1., 0.25])])
    >>> print(open(fn).read().strip())
    distance_m,prr
    1,1
    2,0.25
    >>> os.remove(fn)
    """
    lengths = set(len(c) for c in columns)
    if len(lengths) > 1:
        raise ValueError("Columns must have the same length (got {}).".format(
            sorted(lengths)))
    write_csv(fn_out, header, list(zip(*columns)), verbose=verbose)

def plot_curves(curves, fn_out, xlabel, ylabel, title=None, verbose=False):
    """
    Overlay several curves on linear axes and save the figure as SVG.

    The figure carries no date and a fixed hash salt, so that the same
    curves always give the same file.

    Parameters
    ----------
    curves : list of tuples
        (label, x, y) for each curve.
    fn_out : string
        Name of the output file (.svg).
    xlabel : string
        Label of the x axis.
    ylabel : string
        Label of the y axis.
    title : string, optional
        Title of the figure.
    verbose : bool, optional
        If True, print the name of the file written.

    Examples
    ----------
    >>> x = np.linspace(0., 30., 301)
    >>> curves = [('a', x, 1 - np.exp(-x / 5.)), ('b', x, 1 - np.exp(-x))]
    >>> plot_curves(curves, 'myplot_to_test_.svg', 'SNR (dB)', 'PRR')
    >>> first = open('myplot_to_test_.svg').read()
    >>> plot_curves(curves, 'myplot_to_test_.svg', 'SNR (dB)', 'PRR')
    >>> print(first.startswith('<?xml'),
    ...     first == open('myplot_to_test_.svg').read())
    True True
    >>> os.remove('myplot_to_test_.svg')
    """
    import matplotlib as mpl
    mpl.use('Agg')
    import matplotlib.pyplot as pl
    pl.ioff()

    folder = os.path.dirname(fn_out)
    if folder:
        safe_mkdir(folder)

    with mpl.rc_context({'svg.hashsalt': 'lplink'}):
        fig, ax = pl.subplots(1, 1, figsize=(7, 5))
        for label, x, y in curves:
            ax.plot(x, y, label=label)
        ax.set_xlabel(xlabel)
        ax.set_ylabel(ylabel)
        ax.set_ylim(-0.02, 1.02)
        ax.grid(alpha=0.3)
        if title is not None:
            ax.set_title(title)
        ax.legend(loc='best')
        fig.savefig(fn_out, format='svg', metadata={'Date': None})
        pl.close(fig)
    if verbose:
        print("Figure written to {}".format(fn_out))


if __name__ == "__main__":
    import doctest
    doctest.testmod()
