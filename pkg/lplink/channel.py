#!/usr/bin/python
"""
Module to model the wireless channel between two low-power nodes.
* log-normal shadowing path loss (deterministic mean and random samples)
* SNR link budget at a distance
* inverse of the mean path loss (distance reached by a given loss)

All powers and losses are in dB (dBm for absolute powers),
distances are in meter.
"""
from __future__ import division, absolute_import, print_function

import numpy as np

from lplink.config_lplink import finite_float

CHANNEL_KEYS = ('d0_m', 'pl_d0_db', 'n', 'sigma_db')

class ChannelProfile():
    """ Class to handle the parameters of the propagation environment """
    def __init__(self, d0=1., pl_d0=55., n=4., sigma=4.):
        """
        Parameters of the log-normal shadowing model

            PL(d) = PL(d0) + 10 n log10(d / d0) + X_sigma

        with X_sigma a zero-mean Gaussian variable (dB) of width sigma.
        A profile with sigma = 0 is exactly the deterministic mean model.
        Defaults correspond to an indoor environment (see
        lplink/data/default_channel.json).

        Parameters
        ----------
        d0 : float, optional
            Reference distance in meter. Must be > 0.
        pl_d0 : float, optional
            Path loss at the reference distance in dB. Must be >= 0.
        n : float, optional
            Path loss exponent (rate at which the signal decays). Must be > 0.
        sigma : float, optional
            Standard deviation of the shadowing in dB. Must be >= 0.

        Examples
        ----------
        >>> ch = ChannelProfile()
        >>> print(ch)
        ChannelProfile(d0=1.0, pl_d0=55.0, n=4.0, sigma=4.0)

        >>> ch = ChannelProfile(sigma=-1.)
        Traceback (most recent call last):
          ...
        ValueError: sigma_db must be >= 0 (got -1.0).
        """
        self.d0 = finite_float(d0, 'd0_m')
        self.pl_d0 = finite_float(pl_d0, 'pl_d0_db')
        self.n = finite_float(n, 'n')
        self.sigma = finite_float(sigma, 'sigma_db')

        if self.d0 <= 0:
            raise ValueError("d0_m must be > 0 (got {}).".format(self.d0))
        if self.pl_d0 < 0:
            raise ValueError(
                "pl_d0_db must be >= 0 (got {}).".format(self.pl_d0))
        if self.n <= 0:
            raise ValueError("n must be > 0 (got {}).".format(self.n))
        if self.sigma < 0:
            raise ValueError(
                "sigma_db must be >= 0 (got {}).".format(self.sigma))

    def __repr__(self):
        return 'ChannelProfile(d0={}, pl_d0={}, n={}, sigma={})'.format(
            self.d0, self.pl_d0, self.n, self.sigma)

    def __eq__(self, other):
        return isinstance(other, ChannelProfile) and \
            self.to_dict() == other.to_dict()

    def __ne__(self, other):
        return not self == other

    def to_dict(self):
        """
        Serialise the profile using the keys of the JSON schema.

        Examples
        ----------
        >>> ChannelProfile().to_dict() == {
        ...     'd0_m': 1.0, 'pl_d0_db': 55.0, 'n': 4.0, 'sigma_db': 4.0}
        True
        """
        return {'d0_m': self.d0, 'pl_d0_db': self.pl_d0,
                'n': self.n, 'sigma_db': self.sigma}

    @classmethod
    def from_dict(cls, dic):
        """
        Build a profile from a dictionary with the JSON schema keys.
        Unknown keys are rejected.

        Examples
        ----------
        >>> ch = ChannelProfile.from_dict({'d0_m': 1.0, 'pl_d0_db': 40.0,
        ...     'n': 3.0, 'sigma_db': 0.0})
        >>> print(ch.n, ch.sigma)
        3.0 0.0

        >>> ch = ChannelProfile.from_dict({'d0_m': 1.0, 'pl_d0_db': 40.0,
        ...     'n': 3.0, 'sigma_db': 0.0, 'alpha': 2})
        Traceback (most recent call last):
          ...
        KeyError: 'Unknown channel key(s): alpha. Allowed: d0_m, pl_d0_db, n, sigma_db.'
        """
        unknown = sorted(set(dic) - set(CHANNEL_KEYS))
        if unknown:
            raise KeyError(
                "Unknown channel key(s): {}. Allowed: {}.".format(
                    ', '.join(unknown), ', '.join(CHANNEL_KEYS)))
        missing = [k for k in CHANNEL_KEYS if k not in dic]
        if missing:
            raise KeyError("Missing channel key(s): {}.".format(
                ', '.join(missing)))
        return cls(d0=dic['d0_m'], pl_d0=dic['pl_d0_db'],
                   n=dic['n'], sigma=dic['sigma_db'])

    def deterministic(self):
        """
        Return a copy of the profile without shadowing (sigma = 0).

        Examples
        ----------
        >>> print(ChannelProfile(sigma=6.).deterministic().sigma)
        0.0
        """
        return ChannelProfile(self.d0, self.pl_d0, self.n, 0.)

def _check_distance(d):
    d = np.asarray(d, dtype=float)
    if np.any(~np.isfinite(d)) or np.any(d <= 0):
        raise ValueError("Distances must be finite and > 0 " +
                         "(got min={}).".format(float(np.min(d))))
    return d

def _scalar_or_array(x):
    x = np.asarray(x)
    if x.ndim == 0:
        return float(x)
    return x

def mean_path_loss(d, ch):
    """
    Deterministic part of the log-normal shadowing model.
    Distances shorter than d0 are allowed (the formula extrapolates).

    Parameters
    ----------
    d : float or ndarray
        Transmitter-receiver distance in meter. Must be > 0.
    ch : ChannelProfile instance
        Environment parameters.

    Returns
    ----------
    pl : float or ndarray
        Mean path loss in dB, pl_d0 + 10 n log10(d / d0).

    Examples
    ----------
    >>> ch = ChannelProfile(d0=1., pl_d0=55., n=4.)
    >>> print(mean_path_loss(1., ch))
    55.0
    >>> print(round(mean_path_loss(7.5, ch), 2))
    90.0

    One decade at exponent 2 costs 20 dB
    >>> print(mean_path_loss(10., ChannelProfile(pl_d0=40., n=2.)))
    60.0

    Strictly increasing with the distance
    >>> pl = mean_path_loss(np.linspace(0.1, 100., 1000), ch)
    >>> print(bool(np.all(np.diff(pl) > 0)))
    True

    >>> mean_path_loss(0., ch)
    Traceback (most recent call last):
      ...
    ValueError: Distances must be finite and > 0 (got min=0.0).
    """
    d = _check_distance(d)
    return _scalar_or_array(ch.pl_d0 + 10. * ch.n * np.log10(d / ch.d0))

def sample_shadowing(ch, rng, size=None):
    """
    Draw shadowing offsets X ~ N(0, sigma**2) in dB.

    Draws come from the normal sampler of the generator provided
    (numpy.random.Generator uses the ziggurat method on top of PCG64).
    A given seed always produces the same sequence on a given platform.
    With sigma = 0 the generator is left untouched and 0 is returned.

    Parameters
    ----------
    ch : ChannelProfile instance
        Environment parameters.
    rng : numpy.random.Generator or numpy.random.RandomState
        Generator initialised from an explicit seed.
    size : None or int, optional
        Number of draws. None returns a single float.

    Returns
    ----------
    x : float or ndarray
        Shadowing offsets in dB.

    Examples
    ----------
    >>> print(sample_shadowing(ChannelProfile(sigma=0.),
    ...     np.random.default_rng(1)))
    0.0

    >>> x = sample_shadowing(ChannelProfile(sigma=4.),
    ...     np.random.default_rng(5847), size=10**6)
    >>> print(abs(np.mean(x)) < 0.02, abs(np.std(x) / 4. - 1) < 0.01)
    True True

    Same seed, same draws
    >>> a = sample_shadowing(ChannelProfile(), np.random.default_rng(3), 5)
    >>> b = sample_shadowing(ChannelProfile(), np.random.default_rng(3), 5)
    >>> print(bool(np.all(a == b)))
    True
    """
    if ch.sigma == 0:
        if size is None:
            return 0.
        return np.zeros(size)
    x = rng.normal(0., ch.sigma, size)
    if size is None:
        return float(x)
    return x

def sampled_path_loss(d, ch, rng):
    """
    Path loss including one shadowing draw per distance.

    Parameters
    ----------
    d : float or ndarray
        Transmitter-receiver distance in meter. Must be > 0.
    ch : ChannelProfile instance
        Environment parameters.
    rng : numpy.random.Generator or numpy.random.RandomState
        Seeded generator.

    Returns
    ----------
    pl : float or ndarray
        mean_path_loss(d) + X_sigma, in dB.

    Examples
    ----------
    Without shadowing this is the mean model
    >>> ch = ChannelProfile(sigma=0.)
    >>> print(sampled_path_loss(7.5, ch, np.random.default_rng(0)) ==
    ...     mean_path_loss(7.5, ch))
    True

    The ensemble average converges to the mean model
    >>> ch = ChannelProfile(sigma=4.)
    >>> pl = sampled_path_loss(np.full(10**5, 7.5), ch,
    ...     np.random.default_rng(2017))
    >>> print(abs(np.mean(pl) - mean_path_loss(7.5, ch)) < 0.05)
    True
    """
    pl = mean_path_loss(d, ch)
    size = None if np.ndim(pl) == 0 else np.shape(pl)
    return _scalar_or_array(pl + sample_shadowing(ch, rng, size))

def snr_db(d, pt, pn, ch, pl=None):
    """
    Signal-to-noise ratio at a distance d (all powers in dB).

        snr = pt - PL(d) - pn

    Parameters
    ----------
    d : float or ndarray
        Transmitter-receiver distance in meter.
    pt : float
        Transmit power in dBm.
    pn : float
        Noise floor in dBm.
    ch : ChannelProfile instance
        Environment parameters.
    pl : None, float or ndarray, optional
        Path loss computed for this d (mean or sampled, caller's choice).
        If None, the mean path loss is used.

    Returns
    ----------
    snr : float or ndarray
        SNR in dB.

    Examples
    ----------
    >>> ch = ChannelProfile()
    >>> print(snr_db(7.5, 5., -104., ch, pl=90.))
    19.0
    >>> print(snr_db(1., 12., -116., ch, pl=128.))
    0.0

    Zero margin is reached where the mean path loss equals 109 dB
    >>> d = distance_for_path_loss(109., ch)
    >>> print(abs(snr_db(d, 5., -104., ch)) < 1e-9)
    True
    >>> print(snr_db(1.01 * d, 5., -104., ch) < 0)
    True
    """
    if pl is None:
        pl = mean_path_loss(d, ch)
    return _scalar_or_array(pt - np.asarray(pl, dtype=float) - pn)

def received_power_dbm(pt, pl):
    """
    Received signal strength, that is the transmit power minus the path loss.

    Parameters
    ----------
    pt : float
        Transmit power in dBm.
    pl : float or ndarray
        Path loss in dB.

    Returns
    ----------
    pr : float or ndarray
        Received power in dBm.

    Examples
    ----------
    >>> print(received_power_dbm(5., 90.))
    -85.0
    """
    return _scalar_or_array(pt - np.asarray(pl, dtype=float))

def distance_for_path_loss(pl, ch):
    """
    Distance at which the mean path loss reaches a given value.

    Parameters
    ----------
    pl : float or ndarray
        Path loss in dB.
    ch : ChannelProfile instance
        Environment parameters.

    Returns
    ----------
    d : float or ndarray
        d0 * 10**((pl - pl_d0) / (10 n)), in meter.

    Examples
    ----------
    >>> ch = ChannelProfile(d0=1., pl_d0=55., n=4.)
    >>> print(distance_for_path_loss(55., ch))
    1.0
    >>> print(round(distance_for_path_loss(95., ch), 12))
    10.0

    Inverse of mean_path_loss
    >>> state = np.random.RandomState(439)
    >>> ok = []
    >>> for i in range(100):
    ...     ch = ChannelProfile(d0=state.uniform(0.1, 10.),
    ...         pl_d0=state.uniform(0., 80.), n=state.uniform(1.5, 6.))
    ...     d = state.uniform(0.01, 1000.)
    ...     back = distance_for_path_loss(mean_path_loss(d, ch), ch)
    ...     ok.append(abs(back - d) / d < 1e-9)
    >>> print(all(ok))
    True
    """
    pl = np.asarray(pl, dtype=float)
    return _scalar_or_array(ch.d0 * 10.**((pl - ch.pl_d0) / (10. * ch.n)))


if __name__ == "__main__":
    import doctest
    doctest.testmod()
