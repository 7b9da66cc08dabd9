#!/usr/bin/python
"""
Module to compute the packet reception rate (PRR) of a low-power link
and the extent of its reception regions.
* PRR from the bit error rate, NRZ encoding: (1 - Pe)**(8 f)
* inverse solvers (SNR needed for a PRR, distance where PRR crosses a level)
* connected / transitional / disconnected regions on the mean channel
* receiver response and PRR vs distance sweeps

Radios are duck-typed: anything with pt_dbm, pn_dbm, modulation and frame
attributes works (see lplink.profiles.RadioProfile).
"""
from __future__ import division, absolute_import, print_function

import numpy as np
from scipy import optimize

from lplink.modem import ber
from lplink.modem import check_modulation
from lplink.modem import snr_db_to_linear
from lplink.modem import snr_linear_to_db
from lplink.channel import snr_db
from lplink.channel import distance_for_path_loss

## Numerical settings of the solvers
PRR_FLOOR = 1e-300
SNR_XTOL_DB = 1e-12
SNR_BRACKET_DB = (-20., 40.)
SNR_BRACKET_LIMIT_DB = 300.
DISTANCE_TOL = 1e-6
BRACKET_FACTOR = 2.
MAX_DISTANCE = 1e6
DEFAULT_PREAMBLE_BYTES = 2

class UnboundedRegionError(RuntimeError):
    """ The PRR stays above a threshold beyond MAX_DISTANCE """
    pass

class FrameSpec():
    """ Class to handle the size of the frames sent over the link """
    def __init__(self, frame_bytes=50, preamble_bytes=None):
        """
        With NRZ encoding 1 baud = 1 bit, so the preamble counts like any
        other byte of the frame and its length does not change the PRR:
        (1 - Pe)**(8 l) * (1 - Pe)**(8 (f - l)) = (1 - Pe)**(8 f).

        Parameters
        ----------
        frame_bytes : int, optional
            Total frame size f in bytes, preamble included. Must be >= 1.
        preamble_bytes : int, optional
            Preamble length l in bytes. 0 <= l <= f. Default is
            DEFAULT_PREAMBLE_BYTES, clipped to the frame size.

        Examples
        ----------
        >>> FrameSpec(50, 2)
        FrameSpec(frame_bytes=50, preamble_bytes=2)

        A one-byte frame keeps a one-byte preamble
        >>> FrameSpec(1)
        FrameSpec(frame_bytes=1, preamble_bytes=1)

        >>> FrameSpec(10, 12) # doctest: +NORMALIZE_WHITESPACE
        Traceback (most recent call last):
          ...
        ValueError: preamble_bytes must be between 0 and frame_bytes
        (got preamble_bytes=12, frame_bytes=10).
        """
        self.frame_bytes = _integer(frame_bytes, 'frame_bytes')
        if preamble_bytes is None:
            preamble_bytes = max(0, min(DEFAULT_PREAMBLE_BYTES,
                                        self.frame_bytes))
        self.preamble_bytes = _integer(preamble_bytes, 'preamble_bytes')
        if self.frame_bytes < 1:
            raise ValueError("frame_bytes must be >= 1 (got {}).".format(
                self.frame_bytes))
        if not 0 <= self.preamble_bytes <= self.frame_bytes:
            raise ValueError(
                "preamble_bytes must be between 0 and frame_bytes " +
                "(got preamble_bytes={}, frame_bytes={}).".format(
                    self.preamble_bytes, self.frame_bytes))

    def __repr__(self):
        return 'FrameSpec(frame_bytes={}, preamble_bytes={})'.format(
            self.frame_bytes, self.preamble_bytes)

    def __eq__(self, other):
        return isinstance(other, FrameSpec) and \
            (self.frame_bytes, self.preamble_bytes) == \
            (other.frame_bytes, other.preamble_bytes)

    def __ne__(self, other):
        return not self == other

    @property
    def nbits(self):
        """ Number of bits on air, 8 f """
        return 8 * self.frame_bytes

def _integer(value, name):
    if isinstance(value, bool) or int(value) != value:
        raise ValueError("{} must be an integer (got {!r}).".format(
            name, value))
    return int(value)

class RegionThresholds():
    """ PRR levels bounding the reception regions """
    def __init__(self, connected=0.9, disconnected=0.1):
        """
        The connected region is where PRR > connected, the transitional
        region is where disconnected <= PRR <= connected, and the link is
        disconnected below.

        Parameters
        ----------
        connected : float, optional
            PRR level of the connected region. Default is 0.9.
        disconnected : float, optional
            PRR level of the disconnected region. Default is 0.1.

        Examples
        ----------
        >>> th = RegionThresholds()
        >>> print(th.connected, th.disconnected)
        0.9 0.1

        >>> th = RegionThresholds(0.1, 0.9) # doctest: +NORMALIZE_WHITESPACE
        Traceback (most recent call last):
          ...
        ValueError: Thresholds must satisfy 0 < disconnected < connected < 1
        (got connected=0.1, disconnected=0.9).
        """
        self.connected = float(connected)
        self.disconnected = float(disconnected)
        if not 0 < self.disconnected < self.connected < 1:
            raise ValueError(
                "Thresholds must satisfy 0 < disconnected < connected < 1 " +
                "(got connected={}, disconnected={}).".format(
                    self.connected, self.disconnected))

    def __repr__(self):
        return 'RegionThresholds(connected={}, disconnected={})'.format(
            self.connected, self.disconnected)

class LinkRegions():
    """ Radii of the connected and transitional regions """
    def __init__(self, d_connected_end, d_transitional_end, thresholds=None):
        """
        Parameters
        ----------
        d_connected_end : float
            End of the connected region in meter (0 if empty).
        d_transitional_end : float
            End of the transitional region in meter.
        thresholds : RegionThresholds instance, optional
            PRR levels used to define the regions.

        Examples
        ----------
        >>> LinkRegions(10., 30.)
        LinkRegions(d_connected_end=10.0, d_transitional_end=30.0)

        >>> LinkRegions(10., 3.) # doctest: +NORMALIZE_WHITESPACE
        Traceback (most recent call last):
          ...
        ValueError: Regions must satisfy
        0 <= d_connected_end <= d_transitional_end (got 10.0, 3.0).
        """
        self.d_connected_end = float(d_connected_end)
        self.d_transitional_end = float(d_transitional_end)
        if thresholds is None:
            thresholds = RegionThresholds()
        self.thresholds = thresholds
        if not 0 <= self.d_connected_end <= self.d_transitional_end:
            raise ValueError(
                "Regions must satisfy 0 <= d_connected_end <= " +
                "d_transitional_end (got {}, {}).".format(
                    self.d_connected_end, self.d_transitional_end))

    def __repr__(self):
        return 'LinkRegions(d_connected_end={}, d_transitional_end={})'.format(
            self.d_connected_end, self.d_transitional_end)

    @property
    def transitional_width(self):
        """
        Width of the transitional region in meter.

        Examples
        ----------
        >>> print(LinkRegions(11., 29.).transitional_width)
        18.0
        """
        return self.d_transitional_end - self.d_connected_end

def prr(modulation, snr_lin, frame):
    """
    Packet reception rate for NRZ encoding, (1 - Pe)**(8 f).
    Values below PRR_FLOOR are set to 0.

    Parameters
    ----------
    modulation : string
        One of lplink.modem.MODULATIONS.
    snr_lin : float or ndarray
        Linear SNR, nonnegative.
    frame : FrameSpec instance
        Frame size.

    Returns
    ----------
    p : float or ndarray
        PRR in [0, 1].

    Examples
    ----------
    >>> frame = FrameSpec(50)
    >>> print(prr('bpsk', 1e4, frame))
    1.0
    >>> print(abs(prr('ncfsk', 0., frame) - 0.5**400) < 1e-130)
    True
    >>> print(round(prr('ncfsk', 15.097, frame), 3))
    0.9

    The preamble does not change the PRR
    >>> print(prr('cfsk', 10., FrameSpec(50, 0)) ==
    ...     prr('cfsk', 10., FrameSpec(50, 50)))
    True

    Longer frames are received less often
    >>> print(prr('dpsk', 5., FrameSpec(100)) < prr('dpsk', 5., FrameSpec(50)))
    True
    """
    pe = ber(modulation, snr_lin)
    p = np.exp(frame.nbits * np.log1p(-np.asarray(pe)))
    p = np.where(p < PRR_FLOOR, 0., p)
    if p.ndim == 0:
        return float(p)
    return p

def _check_target(target, name='target'):
    target = float(target)
    if not 0 < target < 1:
        raise ValueError(
            "{} PRR must be strictly between 0 and 1 (got {}).".format(
                name, target))
    return target

def snr_for_prr(modulation, frame, target, verbose=False):
    """
    Linear SNR at which the PRR reaches a target value.
    The PRR increases with the SNR, so a bracket in dB is grown until it
    contains the target and then bisected to SNR_XTOL_DB.

    Parameters
    ----------
    modulation : string
        One of lplink.modem.MODULATIONS.
    frame : FrameSpec instance
        Frame size.
    target : float
        Target PRR, 0 < target < 1.
    verbose : bool, optional
        If True, print the solution.

    Returns
    ----------
    snr_lin : float
        Linear SNR such that |prr(snr_lin) - target| <= 1e-9.

    Examples
    ----------
    >>> from lplink.modem import snr_linear_to_db
    >>> frame = FrameSpec(50)
    >>> g = snr_for_prr('ncfsk', frame, 0.9, verbose=True)
    ncfsk f=50: PRR=0.9 reached at 11.789 dB
    >>> print(round(g, 2), round(snr_linear_to_db(g), 2))
    15.1 11.79
    >>> print([round(float(snr_linear_to_db(snr_for_prr(m, frame, 0.9))), 2)
    ...     for m in ['cfsk', 'bpsk', 'dpsk']])
    [10.8, 7.79, 8.78]
    >>> print(abs(prr('bpsk', snr_for_prr('bpsk', frame, 0.9), frame)
    ...     - 0.9) <= 1e-9)
    True

    Agreement with the closed-form inverses of the kernels
    >>> from scipy.special import erfcinv
    >>> pe = -np.expm1(np.log(0.9) / 400.)
    >>> x = np.sqrt(2.) * erfcinv(2 * pe)
    >>> oracle = {'ncfsk': -2 * np.log(2 * pe), 'dpsk': -np.log(2 * pe),
    ...     'cfsk': x**2, 'bpsk': x**2 / 2.}
    >>> print(all(abs(snr_linear_to_db(snr_for_prr(m, frame, 0.9)) -
    ...     snr_linear_to_db(oracle[m])) < 1e-6 for m in oracle))
    True

    Bigger frames or higher targets need more SNR
    >>> from lplink.modem import MODULATIONS
    >>> print(all(np.all(np.diff([snr_for_prr(m, FrameSpec(f), 0.9)
    ...     for f in [25, 50, 100, 200]]) > 0) for m in MODULATIONS))
    True
    >>> print(all(snr_for_prr(m, frame, 0.99) > snr_for_prr(m, frame, 0.9)
    ...     for m in MODULATIONS))
    True

    >>> snr_for_prr('ncfsk', frame, 1.)
    Traceback (most recent call last):
      ...
    ValueError: target PRR must be strictly between 0 and 1 (got 1.0).
    """
    check_modulation(modulation)
    target = _check_target(target)

    def excess(s):
        return prr(modulation, snr_db_to_linear(s), frame) - target

    lo, hi = SNR_BRACKET_DB
    while excess(lo) > 0:
        lo -= 20.
        if lo < -SNR_BRACKET_LIMIT_DB:
            raise ValueError(
                "target PRR {} is below the PRR at zero SNR ".format(target) +
                "for a {} bytes frame.".format(frame.frame_bytes))
    while excess(hi) < 0:
        hi += 20.
        if hi > SNR_BRACKET_LIMIT_DB:
            raise ValueError(
                "target PRR {} cannot be reached at finite SNR.".format(
                    target))

    s = optimize.bisect(excess, lo, hi, xtol=SNR_XTOL_DB, maxiter=200)
    if verbose:
        print("{} f={}: PRR={} reached at {:.3f} dB".format(
            modulation, frame.frame_bytes, target, s))
    return float(snr_db_to_linear(s))

def snr_thresholds(modulation, frame, thresholds=None):
    """
    SNR bounds (dB) of the receiver response: the SNR above which the link
    is connected, and the SNR below which it is disconnected.

    Parameters
    ----------
    modulation : string
        One of lplink.modem.MODULATIONS.
    frame : FrameSpec instance
        Frame size.
    thresholds : RegionThresholds instance, optional
        PRR levels. Default is (0.9, 0.1).

    Returns
    ----------
    snr_connected_db : float
        SNR in dB where PRR = thresholds.connected.
    snr_disconnected_db : float
        SNR in dB where PRR = thresholds.disconnected.

    Examples
    ----------
    >>> hi, lo = snr_thresholds('ncfsk', FrameSpec(50))
    >>> print(round(hi, 2), round(lo, 2))
    11.79 9.51
    """
    if thresholds is None:
        thresholds = RegionThresholds()
    return (float(snr_linear_to_db(
                snr_for_prr(modulation, frame, thresholds.connected))),
            float(snr_linear_to_db(
                snr_for_prr(modulation, frame, thresholds.disconnected))))

def prr_at_distance(d, radio, ch):
    """
    PRR at a distance d on the mean channel (shadowing ignored).

    Parameters
    ----------
    d : float or ndarray
        Transmitter-receiver distance in meter.
    radio : RadioProfile instance
        Radio parameters (pt_dbm, pn_dbm, modulation, frame).
    ch : ChannelProfile instance
        Environment parameters.

    Returns
    ----------
    p : float or ndarray
        PRR in [0, 1].

    Examples
    ----------
    >>> from lplink.profiles import builtin_radio, default_channel
    >>> mica2, ch = builtin_radio('mica2'), default_channel()
    >>> print(prr_at_distance(1., mica2, ch) > 0.999999)
    True

    Zero SNR, where the path loss equals the link margin
    >>> d = distance_for_path_loss(mica2.pt_dbm - mica2.pn_dbm, ch)
    >>> print(prr_at_distance(d, mica2, ch) < 1e-20)
    True

    >>> p = prr_at_distance(np.linspace(1., 60., 500), mica2, ch)
    >>> print(bool(np.all(np.diff(p) <= 0)))
    True
    """
    snr = snr_db(d, radio.pt_dbm, radio.pn_dbm, ch)
    return prr(radio.modulation, snr_db_to_linear(snr), radio.frame)

def outermost_distance(inside, d0, verbose=False, label='region'):
    """
    Largest distance at which a monotone predicate still holds.

    Starting from d0, the bracket is doubled until the predicate fails,
    then bisected down to DISTANCE_TOL (or 1e-10 relative, whichever is
    tighter).

    Parameters
    ----------
    inside : callable
        inside(d) is True close to the transmitter and False far from it.
    d0 : float
        Reference distance where the search starts.
    verbose : bool, optional
        If True, print the bracket and the solution.
    label : string, optional
        Name of the region, for messages.

    Returns
    ----------
    d : float
        Boundary distance in meter, 0 if inside(d0) is False.

    Examples
    ----------
    >>> d = outermost_distance(lambda x: x < 42.5, 1.)
    >>> print(abs(d - 42.5) < 1e-6)
    True
    >>> print(outermost_distance(lambda x: False, 1.))
    0.0

    >>> d = outermost_distance(lambda x: True, 1.)
    ... # doctest: +ELLIPSIS, +IGNORE_EXCEPTION_DETAIL
    Traceback (most recent call last):
      ...
    UnboundedRegionError: region extends beyond 1000000.0 m ...
    """
    if not inside(d0):
        if verbose:
            print("{} is empty (predicate fails at d0={} m)".format(
                label, d0))
        return 0.

    lo, hi = d0, d0 * BRACKET_FACTOR
    while inside(hi):
        if hi > MAX_DISTANCE:
            raise UnboundedRegionError(
                "{} extends beyond {} m ".format(label, MAX_DISTANCE) +
                "(predicate still holds at {} m).".format(hi))
        lo, hi = hi, hi * BRACKET_FACTOR

    if verbose:
        print("{} boundary bracketed in [{}, {}] m".format(label, lo, hi))

    def sign(d):
        return 1. if inside(d) else -1.

    xtol = min(DISTANCE_TOL, 1e-10 * lo)
    return float(optimize.bisect(sign, lo, hi, xtol=xtol, maxiter=200))

def region_bounds(radio, ch, thresholds=None, verbose=False):
    """
    Radii of the connected and transitional regions on the mean channel.

    Parameters
    ----------
    radio : RadioProfile instance
        Radio parameters.
    ch : ChannelProfile instance
        Environment parameters (sigma is ignored).
    thresholds : RegionThresholds instance, optional
        PRR levels. Default is (0.9, 0.1).
    verbose : bool, optional
        If True, print the progress of the searches.

    Returns
    ----------
    regions : LinkRegions instance
        d_connected_end is where the PRR crosses thresholds.connected, and
        d_transitional_end where it crosses thresholds.disconnected.

    Examples
    ----------
    >>> from lplink.profiles import builtin_radio, default_channel
    >>> from lplink.profiles import RadioProfile
    >>> mica2, ch = builtin_radio('mica2'), default_channel()
    >>> r = region_bounds(mica2, ch)
    >>> print(round(r.d_connected_end, 2), abs(r.d_transitional_end - 12.95)
    ...     < 0.01)
    11.36 True

    Adding 10 n dB to the transmit power multiplies the radii by 10
    >>> louder = RadioProfile('louder', mica2.pt_dbm + 10 * ch.n,
    ...     mica2.pn_dbm, mica2.modulation, mica2.frame)
    >>> r10 = region_bounds(louder, ch)
    >>> print(abs(r10.d_connected_end / r.d_connected_end - 10) < 1e-5,
    ...     abs(r10.d_transitional_end / r.d_transitional_end - 10) < 1e-5)
    True True

    A weak radio has an empty connected region
    >>> weak = RadioProfile('weak', -40., -105., 'ncfsk', FrameSpec(50))
    >>> r = region_bounds(weak, ch, verbose=True) # doctest: +ELLIPSIS
    connected region is empty (predicate fails at d0=1.0 m)
    transitional region boundary bracketed in [1.0, 2.0] m
    >>> print(r.d_connected_end, round(r.d_transitional_end, 2))
    0.0 1.03
    """
    if thresholds is None:
        thresholds = RegionThresholds()

    def above(level):
        return lambda d: prr_at_distance(d, radio, ch) >= level

    d_connected = outermost_distance(
        above(thresholds.connected), ch.d0, verbose, 'connected region')
    d_transitional = outermost_distance(
        above(thresholds.disconnected), ch.d0, verbose, 'transitional region')
    return LinkRegions(d_connected, d_transitional, thresholds)

def region_radius_closed_form(radio, ch, gamma_star_db):
    """
    Analytic distance at which the mean SNR falls to gamma_star_db,
    d0 * 10**((pt - pn - PL(d0) - gamma_star) / (10 n)).

    Parameters
    ----------
    radio : RadioProfile instance
        Radio parameters.
    ch : ChannelProfile instance
        Environment parameters.
    gamma_star_db : float
        SNR threshold in dB.

    Returns
    ----------
    d : float
        Radius in meter.

    Examples
    ----------
    >>> from lplink.profiles import builtin_radio, default_channel
    >>> from lplink.profiles import RadioProfile
    >>> from lplink.modem import snr_linear_to_db, MODULATIONS
    >>> from lplink.channel import ChannelProfile
    >>> mica2, tiny = builtin_radio('mica2'), builtin_radio('tinynode')
    >>> ch = default_channel()
    >>> print(region_radius_closed_form(mica2, ch, 109. - 55.))
    1.0

    Same modulation and frame: the ratio only depends on the margins
    >>> ratio = (region_radius_closed_form(tiny, ch, 11.) /
    ...     region_radius_closed_form(mica2, ch, 11.))
    >>> print(abs(ratio - 10**(19. / 40)) < 1e-9, round(ratio, 3))
    True 2.985

    Agreement with the bisection of region_bounds on random profiles
    >>> state = np.random.RandomState(95834)
    >>> ok = []
    >>> for i in range(100):
    ...     ch = ChannelProfile(d0=state.uniform(0.5, 2.),
    ...         pl_d0=state.uniform(30., 60.), n=state.uniform(2., 5.))
    ...     radio = RadioProfile('r', state.uniform(-10., 15.),
    ...         state.uniform(-120., -90.),
    ...         MODULATIONS[state.randint(4)],
    ...         FrameSpec(state.randint(10, 200)))
    ...     r = region_bounds(radio, ch)
    ...     hi, lo = snr_thresholds(radio.modulation, radio.frame)
    ...     dc = region_radius_closed_form(radio, ch, hi)
    ...     dt = region_radius_closed_form(radio, ch, lo)
    ...     ok.append(abs(r.d_connected_end - dc) / dc <= 1e-6 and
    ...         abs(r.d_transitional_end - dt) / dt <= 1e-6)
    >>> print(all(ok))
    True
    """
    return float(distance_for_path_loss(
        radio.pt_dbm - radio.pn_dbm - gamma_star_db, ch))

def _grid(lo, hi, step, name):
    lo, hi, step = float(lo), float(hi), float(step)
    if not (np.isfinite(lo) and np.isfinite(hi) and np.isfinite(step)):
        raise ValueError("{} range must be finite.".format(name))
    if not lo < hi:
        raise ValueError("{} range is empty or inverted ({} >= {}).".format(
            name, lo, hi))
    if not step > 0:
        raise ValueError("{} step must be > 0 (got {}).".format(name, step))
    npoints = int(np.floor((hi - lo) / step + 1e-9)) + 1
    return lo + step * np.arange(npoints)

def receiver_response_curve(modulation, frame, snr_min_db, snr_max_db,
                            step_db):
    """
    Sweep of the PRR over a grid of SNR values (receiver response).

    Parameters
    ----------
    modulation : string
        One of lplink.modem.MODULATIONS.
    frame : FrameSpec instance
        Frame size.
    snr_min_db : float
        First SNR of the grid in dB.
    snr_max_db : float
        Last SNR of the grid in dB (included if on the grid).
    step_db : float
        Spacing of the grid in dB.

    Returns
    ----------
    snr : 1d array
        SNR grid in dB.
    p : 1d array
        PRR at each SNR, nondecreasing.

    Examples
    ----------
    >>> snr, p = receiver_response_curve('ncfsk', FrameSpec(50), 0., 30., 0.01)
    >>> print(len(snr), bool(np.all(np.diff(p) >= 0)))
    3001 True
    >>> print(abs(snr[np.argmax(p >= 0.9)] - 11.79) < 0.05)
    True

    Bigger frames shift the curve to the right
    >>> snr, p100 = receiver_response_curve('ncfsk', FrameSpec(100),
    ...     0., 30., 0.01)
    >>> print(snr[np.argmax(p100 >= 0.9)] > snr[np.argmax(p >= 0.9)])
    True

    >>> receiver_response_curve('ncfsk', FrameSpec(50), 10., 0., 0.1)
    Traceback (most recent call last):
      ...
    ValueError: SNR range is empty or inverted (10.0 >= 0.0).
    """
    snr = _grid(snr_min_db, snr_max_db, step_db, 'SNR')
    return snr, prr(modulation, snr_db_to_linear(snr), frame)

def prr_distance_curve(radio, ch, d_min, d_max, step):
    """
    Sweep of the mean-channel PRR over a grid of distances.

    Parameters
    ----------
    radio : RadioProfile instance
        Radio parameters.
    ch : ChannelProfile instance
        Environment parameters.
    d_min : float
        First distance in meter, > 0.
    d_max : float
        Last distance in meter.
    step : float
        Spacing of the grid in meter.

    Returns
    ----------
    d : 1d array
        Distances in meter.
    p : 1d array
        PRR at each distance, nonincreasing.

    Examples
    ----------
    >>> from lplink.profiles import builtin_radio, default_channel
    >>> mica2, tiny = builtin_radio('mica2'), builtin_radio('tinynode')
    >>> ch = default_channel()
    >>> d, p = prr_distance_curve(mica2, ch, 0.5, 60., 0.5)
    >>> print(p[d == 5.][0] > 0.99, p[d == 50.][0] < 0.01)
    True True
    >>> print(bool(np.all(np.diff(p) <= 0)))
    True

    TinyNode has a larger margin and dominates MICA2
    >>> d, p_tiny = prr_distance_curve(tiny, ch, 0.5, 60., 0.5)
    >>> print(bool(np.all(p_tiny >= p)))
    True

    >>> prr_distance_curve(mica2, ch, 0., 60., 0.5)
    Traceback (most recent call last):
      ...
    ValueError: Distances must be > 0 (got d_min=0.0).
    """
    if not float(d_min) > 0:
        raise ValueError("Distances must be > 0 (got d_min={}).".format(
            float(d_min)))
    d = _grid(d_min, d_max, step, 'Distance')
    return d, prr_at_distance(d, radio, ch)

def unreliable_link_fraction(regions, deployment_radius):
    """
    Fraction of receivers falling in the transitional region when they are
    deployed uniformly in a disc around the transmitter.

    Parameters
    ----------
    regions : LinkRegions instance
        Region radii.
    deployment_radius : float
        Radius of the deployment disc in meter.

    Returns
    ----------
    fraction : float
        Area of the transitional annulus inside the disc over the disc area.

    Examples
    ----------
    >>> print(round(unreliable_link_fraction(LinkRegions(10., 30.), 30.), 4))
    0.8889
    >>> print(unreliable_link_fraction(LinkRegions(10., 30.), 5.))
    0.0
    """
    radius = float(deployment_radius)
    if not radius > 0:
        raise ValueError("deployment_radius must be > 0 (got {}).".format(
            radius))
    outer = min(radius, regions.d_transitional_end)
    inner = min(radius, regions.d_connected_end)
    return (outer**2 - inner**2) / radius**2


if __name__ == "__main__":
    import doctest
    doctest.testmod()
