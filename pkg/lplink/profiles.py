#!/usr/bin/python
"""
Module to handle radio and channel profiles.
* built-in radios: MICA2 (Pt = +5 dBm, Pn = -104 dBm) and
  TinyNode (Pt = +12 dBm, Pn = -116 dBm), both NCFSK with 50-byte frames
* default indoor channel (d0 = 1 m, PL(d0) = 55 dB, n = 4, sigma = 4 dB)
* loading and saving of JSON profiles, with strict validation

Both devices carry FSK transceivers, hence ncfsk for the built-in radios.
Override it with RadioProfile.replace(modulation=...).
"""
from __future__ import division, absolute_import, print_function

import os

from lplink.config_lplink import data_file
from lplink.config_lplink import finite_float
from lplink.config_lplink import read_json_strict
from lplink.config_lplink import write_json
from lplink.channel import ChannelProfile
from lplink.channel import CHANNEL_KEYS
from lplink.link import FrameSpec
from lplink.modem import check_modulation

BUILTIN_RADIOS = ('mica2', 'tinynode')
RADIO_KEYS = ('name', 'pt_dbm', 'pn_dbm', 'modulation',
              'frame_bytes', 'preamble_bytes')

def _check_name(name):
    name = str(name)
    if not name or name in ('.', '..') or '/' in name or '\\' in name \
            or os.sep in name:
        raise ValueError(
            "Radio name {!r} must be a plain file name ".format(name) +
            "(no path separator, not empty, not . or ..).")
    return name

class RadioProfile():
    """ Class to handle the parameters of a radio """
    def __init__(self, name, pt_dbm, pn_dbm, modulation='ncfsk', frame=None):
        """
        Parameters
        ----------
        name : string
            Name of the radio.
        pt_dbm : float
            Transmit power in dBm.
        pn_dbm : float
            Noise floor in dBm. Must be below pt_dbm.
        modulation : string, optional
            One of lplink.modem.MODULATIONS. Default is ncfsk.
        frame : FrameSpec instance, optional
            Frame and preamble sizes. Default is 50 bytes with 2 bytes
            of preamble.

        Examples
        ----------
        >>> RadioProfile('test', 0., -100.) # doctest: +NORMALIZE_WHITESPACE
        RadioProfile(name='test', pt_dbm=0.0, pn_dbm=-100.0,
        modulation='ncfsk', frame_bytes=50, preamble_bytes=2)

        >>> RadioProfile('bad', -110., -100.) # doctest: +NORMALIZE_WHITESPACE
        Traceback (most recent call last):
          ...
        ValueError: pn_dbm (-100.0) must be below pt_dbm (-110.0):
        the link margin pt_dbm - pn_dbm has to be positive.

        The name is used in file names, so it must be a plain one
        >>> RadioProfile('../mica2', 5., -104.) # doctest: +NORMALIZE_WHITESPACE
        Traceback (most recent call last):
          ...
        ValueError: Radio name '../mica2' must be a plain file name
        (no path separator, not empty, not . or ..).
        """
        self.name = _check_name(name)
        self.pt_dbm = finite_float(pt_dbm, 'pt_dbm')
        self.pn_dbm = finite_float(pn_dbm, 'pn_dbm')
        self.modulation = check_modulation(modulation)
        if frame is None:
            frame = FrameSpec()
        self.frame = frame

        if not self.pt_dbm > self.pn_dbm:
            raise ValueError(
                "pn_dbm ({}) must be below pt_dbm ({}): ".format(
                    self.pn_dbm, self.pt_dbm) +
                "the link margin pt_dbm - pn_dbm has to be positive.")

    def __repr__(self):
        return ('RadioProfile(name={!r}, pt_dbm={}, pn_dbm={}, ' +
                'modulation={!r}, frame_bytes={}, preamble_bytes={})').format(
                    self.name, self.pt_dbm, self.pn_dbm, self.modulation,
                    self.frame.frame_bytes, self.frame.preamble_bytes)

    def __eq__(self, other):
        return isinstance(other, RadioProfile) and \
            self.to_dict() == other.to_dict()

    def __ne__(self, other):
        return not self == other

    @property
    def margin_db(self):
        """
        Link margin pt_dbm - pn_dbm in dB.

        Examples
        ----------
        >>> print(builtin_radio('tinynode').margin_db)
        128.0
        """
        return self.pt_dbm - self.pn_dbm

    def to_dict(self):
        """
        Serialise the profile using the keys of the JSON schema.

        Examples
        ----------
        >>> print(builtin_radio('mica2').to_dict()) # doctest: +NORMALIZE_WHITESPACE
        {'name': 'mica2', 'pt_dbm': 5.0, 'pn_dbm': -104.0,
         'modulation': 'ncfsk', 'frame_bytes': 50, 'preamble_bytes': 2}
        """
        return {'name': self.name, 'pt_dbm': self.pt_dbm,
                'pn_dbm': self.pn_dbm, 'modulation': self.modulation,
                'frame_bytes': self.frame.frame_bytes,
                'preamble_bytes': self.frame.preamble_bytes}

    @classmethod
    def from_dict(cls, dic):
        """
        Build a profile from a dictionary with the JSON schema keys.

        Examples
        ----------
        >>> r = RadioProfile.from_dict({'name': 'x', 'pt_dbm': 0,
        ...     'pn_dbm': -95, 'modulation': 'bpsk', 'frame_bytes': 30,
        ...     'preamble_bytes': 4})
        >>> print(r.modulation, r.frame)
        bpsk FrameSpec(frame_bytes=30, preamble_bytes=4)
        """
        unknown = sorted(set(dic) - set(RADIO_KEYS))
        if unknown:
            raise KeyError("Unknown radio key(s): {}. Allowed: {}.".format(
                ', '.join(unknown), ', '.join(RADIO_KEYS)))
        missing = [k for k in RADIO_KEYS if k not in dic]
        if missing:
            raise KeyError("Missing radio key(s): {}.".format(
                ', '.join(missing)))
        return cls(dic['name'], dic['pt_dbm'], dic['pn_dbm'],
                   dic['modulation'],
                   FrameSpec(dic['frame_bytes'], dic['preamble_bytes']))

    def replace(self, name=None, modulation=None, frame_bytes=None):
        """
        Copy of the radio with some parameters changed. When only the
        frame size changes, the preamble is kept (clipped to the frame).

        Parameters
        ----------
        name : string, optional
            New name.
        modulation : string, optional
            New modulation.
        frame_bytes : int, optional
            New frame size in bytes.

        Examples
        ----------
        >>> r = builtin_radio('mica2').replace(modulation='cfsk',
        ...     frame_bytes=100)
        >>> print(r.name, r.modulation, r.frame.frame_bytes)
        mica2 cfsk 100
        """
        frame = self.frame
        if frame_bytes is not None:
            frame = FrameSpec(frame_bytes,
                              min(frame.preamble_bytes, int(frame_bytes)))
        return RadioProfile(self.name if name is None else name,
                            self.pt_dbm, self.pn_dbm,
                            self.modulation if modulation is None
                            else modulation, frame)

def builtin_radio(name):
    """
    Return one of the radios shipped with the package.

    Parameters
    ----------
    name : string
        mica2 or tinynode.

    Returns
    ----------
    radio : RadioProfile instance

    Examples
    ----------
    >>> r = builtin_radio('mica2')
    >>> print(r.pt_dbm, r.pn_dbm, r.modulation, r.frame.frame_bytes)
    5.0 -104.0 ncfsk 50
    >>> r = builtin_radio('tinynode')
    >>> print(r.pt_dbm, r.pn_dbm)
    12.0 -116.0

    >>> builtin_radio('mica3')
    Traceback (most recent call last):
      ...
    KeyError: "Unknown radio 'mica3'. Valid built-in radios: mica2, tinynode."
    """
    if name not in BUILTIN_RADIOS:
        raise KeyError("Unknown radio {!r}. Valid built-in radios: {}.".format(
            name, ', '.join(BUILTIN_RADIOS)))
    return load_radio(data_file(name + '.json'))

def default_channel():
    """
    Default indoor channel: d0 = 1 m, PL(d0) = 55 dB, n = 4, sigma = 4 dB.

    Examples
    ----------
    >>> default_channel()
    ChannelProfile(d0=1.0, pl_d0=55.0, n=4.0, sigma=4.0)
    """
    return load_channel(data_file('default_channel.json'))

def load_radio(path, verbose=False):
    """
    Load and validate a radio profile stored as JSON.

    Parameters
    ----------
    path : string
        Name of the JSON file.
    verbose : bool, optional
        If True, print the name of the file being read.

    Returns
    ----------
    radio : RadioProfile instance

    Examples
    ----------
    Saving and loading gives the same profile, and byte-identical files
    >>> fn = 'myradio_to_test_.json'
    >>> save_radio(builtin_radio('tinynode'), fn)
    >>> load_radio(fn) == builtin_radio('tinynode')
    True
    >>> open(fn).read() == open(data_file('tinynode.json')).read()
    True

    Invariants are checked field by field
    >>> write_json(dict(builtin_radio('mica2').to_dict(), pn_dbm=5.0), fn)
    >>> load_radio(fn) # doctest: +NORMALIZE_WHITESPACE
    Traceback (most recent call last):
      ...
    ValueError: pn_dbm (5.0) must be below pt_dbm (5.0):
    the link margin pt_dbm - pn_dbm has to be positive.
    >>> write_json(dict(builtin_radio('mica2').to_dict(), modulation='fsk'),
    ...     fn)
    >>> load_radio(fn) # doctest: +NORMALIZE_WHITESPACE
    Traceback (most recent call last):
      ...
    ValueError: Unknown modulation 'fsk'.
    Choose among ncfsk, cfsk, bpsk, dpsk.
    >>> os.remove(fn)
    """
    dic = read_json_strict(path, RADIO_KEYS, kind='radio', verbose=verbose)
    return RadioProfile.from_dict(dic)

def save_radio(radio, path, verbose=False):
    """
    Write a radio profile as JSON.

    Parameters
    ----------
    radio : RadioProfile instance
        Profile to store.
    path : string
        Name of the output file.
    verbose : bool, optional
        If True, print the name of the file written.
    """
    write_json(radio.to_dict(), path, verbose=verbose)

def load_channel(path, verbose=False):
    """
    Load and validate a channel profile stored as JSON.

    Parameters
    ----------
    path : string
        Name of the JSON file.
    verbose : bool, optional
        If True, print the name of the file being read.

    Returns
    ----------
    ch : ChannelProfile instance

    Examples
    ----------
    >>> fn = 'mychannel_to_test_.json'
    >>> save_channel(ChannelProfile(n=3., sigma=6.), fn, verbose=True)
    Profile written to mychannel_to_test_.json
    >>> load_channel(fn, verbose=True)
    Reading channel from mychannel_to_test_.json...
    ChannelProfile(d0=1.0, pl_d0=55.0, n=3.0, sigma=6.0)

    >>> write_json(dict(default_channel().to_dict(), sigma_db=-1.0), fn)
    >>> load_channel(fn)
    Traceback (most recent call last):
      ...
    ValueError: sigma_db must be >= 0 (got -1.0).
    >>> os.remove(fn)
    """
    dic = read_json_strict(path, CHANNEL_KEYS, kind='channel',
                           verbose=verbose)
    return ChannelProfile.from_dict(dic)

def save_channel(ch, path, verbose=False):
    """
    Write a channel profile as JSON.

    Parameters
    ----------
    ch : ChannelProfile instance
        Profile to store.
    path : string
        Name of the output file.
    verbose : bool, optional
        If True, print the name of the file written.
    """
    write_json(ch.to_dict(), path, verbose=verbose)

def resolve_radio(name_or_path):
    """
    Built-in radio from its name, or radio loaded from a JSON file.

    Examples
    ----------
    >>> print(resolve_radio('tinynode').pt_dbm)
    12.0
    >>> print(resolve_radio(data_file('mica2.json')).name)
    mica2
    """
    if name_or_path in BUILTIN_RADIOS:
        return builtin_radio(name_or_path)
    if not os.path.isfile(name_or_path):
        raise KeyError(
            "{!r} is neither a built-in radio ({}) nor a file.".format(
                name_or_path, ', '.join(BUILTIN_RADIOS)))
    return load_radio(name_or_path)

def resolve_channel(path=None):
    """
    Default channel when path is None, channel loaded from path otherwise.

    Examples
    ----------
    >>> resolve_channel() == default_channel()
    True
    """
    if path is None:
        return default_channel()
    return load_channel(path)


if __name__ == "__main__":
    import doctest
    doctest.testmod()
