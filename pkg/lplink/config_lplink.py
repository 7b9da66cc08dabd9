#!/usr/bin/python
"""
Module to read and write the JSON files describing radios and channels,
and to prepare output folders. Shared by lplink.profiles and lplink.cli.
"""
from __future__ import division, absolute_import, print_function

import os
import json
import errno
import numpy as np

DATA_PATH = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'data')

def data_file(name):
    """
    Full path of a file shipped in lplink/data.

    Parameters
    ----------
    name : string
        Base name of the file.

    Returns
    ----------
    path : string
        Absolute path of the file.

    Examples
    ----------
    >>> os.path.isfile(data_file('default_channel.json'))
    True
    """
    return os.path.join(DATA_PATH, name)

def finite_float(value, name):
    """
    Cast a parameter to float, rejecting non-numbers, nan and inf.

    Parameters
    ----------
    value : object
        Value to cast.
    name : string
        Name of the field, used in the error message.

    Returns
    ----------
    value : float

    Examples
    ----------
    >>> finite_float(5, 'pt_dbm')
    5.0
    >>> finite_float('abc', 'pt_dbm')
    Traceback (most recent call last):
      ...
    ValueError: pt_dbm must be a number (got 'abc').
    >>> finite_float(np.inf, 'n')
    Traceback (most recent call last):
      ...
    ValueError: n must be finite (got inf).
    """
    if isinstance(value, bool):
        raise ValueError("{} must be a number (got {!r}).".format(name, value))
    try:
        value = float(value)
    except (TypeError, ValueError):
        raise ValueError("{} must be a number (got {!r}).".format(name, value))
    if not np.isfinite(value):
        raise ValueError("{} must be finite (got {}).".format(name, value))
    return value

def read_json_strict(path, allowed_keys, kind='profile', verbose=False):
    """
    Load a JSON object from disk and reject keys not in allowed_keys.

    Parameters
    ----------
    path : string
        Name of the JSON file.
    allowed_keys : list of strings
        Keys accepted in the object. All of them are required.
    kind : string, optional
        What the file describes (radio, channel), for messages.
    verbose : bool, optional
        If True, print the name of the file being read.

    Returns
    ----------
    dic : dictionary
        Content of the file.

    Examples
    ----------
    >>> fn = 'myjson_to_test_.json'
    >>> write_json({'a': 1, 'b': 2.5}, fn)
    >>> read_json_strict(fn, ['a', 'b'], verbose=True)
    Reading profile from myjson_to_test_.json...
    {'a': 1, 'b': 2.5}

    >>> read_json_strict(fn, ['a'], kind='channel')
    Traceback (most recent call last):
      ...
    KeyError: 'Unknown channel key(s) in myjson_to_test_.json: b. Allowed: a.'

    >>> read_json_strict(fn, ['a', 'b', 'c'])
    Traceback (most recent call last):
      ...
    KeyError: 'Missing profile key(s) in myjson_to_test_.json: c.'

    >>> with open(fn, 'w') as f:
    ...     _ = f.write('{"a": ')
    >>> read_json_strict(fn, ['a']) # doctest: +ELLIPSIS
    Traceback (most recent call last):
      ...
    OSError: Could not parse myjson_to_test_.json as JSON: ...
    >>> os.remove(fn)

    >>> read_json_strict('not_there_.json', ['a']) # doctest: +ELLIPSIS
    Traceback (most recent call last):
      ...
    OSError: Could not read not_there_.json: ...
    """
    if verbose:
        print("Reading {} from {}...".format(kind, path))
    try:
        with open(path, 'r') as f:
            text = f.read()
    except (IOError, OSError) as e:
        raise IOError("Could not read {}: {}".format(path, e))
    try:
        dic = json.loads(text)
    except ValueError as e:
        raise IOError("Could not parse {} as JSON: {}".format(path, e))
    if not isinstance(dic, dict):
        raise IOError("{} must contain a JSON object.".format(path))

    unknown = sorted(set(dic) - set(allowed_keys))
    if unknown:
        raise KeyError("Unknown {} key(s) in {}: {}. Allowed: {}.".format(
            kind, path, ', '.join(unknown), ', '.join(allowed_keys)))
    missing = [k for k in allowed_keys if k not in dic]
    if missing:
        raise KeyError("Missing {} key(s) in {}: {}.".format(
            kind, path, ', '.join(missing)))
    return dic

def write_json(dic, path, verbose=False):
    """
    Write a dictionary as indented JSON, keys in insertion order and a
    trailing newline, so that writing the same profile twice gives
    byte-identical files.

    Parameters
    ----------
    dic : dictionary
        Data to store.
    path : string
        Name of the output file.
    verbose : bool, optional
        If True, print the name of the file written.

    Examples
    ----------
    >>> write_json({'name': 'x', 'n': 4.0}, 'myjson_to_test_.json',
    ...     verbose=True)
    Profile written to myjson_to_test_.json
    >>> print(open('myjson_to_test_.json').read().strip())
    {
      "name": "x",
      "n": 4.0
    }
    >>> os.remove('myjson_to_test_.json')
    """
    with open(path, 'w') as f:
        f.write(json.dumps(dic, indent=2) + '\n')
    if verbose:
        print("Profile written to {}".format(path))

def safe_mkdir(path, verbose=False):
    """
    Create a path and catch the race condition between path exists and mkdir.

    Parameters
    ----------
    path : string
        Name of the folder to be created.
    verbose : bool
        If True, print messages about the status.

    Examples
    ----------
    Folders are created
    >>> safe_mkdir('toto/titi/tutu', verbose=True)

    Folders aren't created because they already exist
    >>> safe_mkdir('toto/titi/tutu', verbose=True)
    Folders toto/titi/tutu already exist. Not created.

    >>> os.removedirs('toto/titi/tutu')
    """
    abspath = os.path.abspath(path)
    if not os.path.exists(abspath):
        try:
            os.makedirs(abspath)
        except OSError as exception:
            if exception.errno != errno.EEXIST:
                raise
    else:
        if verbose:
            print("Folders {} already exist. Not created.".format(path))


if __name__ == "__main__":
    import doctest
    doctest.testmod()
