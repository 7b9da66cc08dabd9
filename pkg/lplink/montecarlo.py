#!/usr/bin/python
"""
Module to validate the analytic link model with seeded Monte Carlo.
* packet-level Bernoulli simulation of the PRR
* ensembles of PRR under log-normal shadowing
* probabilistic extent of the reception regions

All draws come from numpy.random.Generator (PCG64) sub-streams derived
from a root seed: the work is cut into fixed blocks, and block i always
uses substream(seed, i). Results are therefore bit-identical whatever
the number of processes, and blocks can be spread over MPI ranks by
passing an mpi4py communicator.
"""
from __future__ import division, absolute_import, print_function

import numpy as np

from lplink.channel import mean_path_loss
from lplink.channel import sample_shadowing
from lplink.channel import snr_db
from lplink.link import prr
from lplink.link import prr_at_distance
from lplink.link import outermost_distance
from lplink.link import LinkRegions
from lplink.link import RegionThresholds
from lplink.modem import check_modulation
from lplink.modem import snr_db_to_linear

## Number of packets and of shadowing draws per sub-stream
BLOCK_PACKETS = 65536
BLOCK_DRAWS = 4096

QUANTILES = (5, 25, 50, 75, 95)

def substream(seed, index):
    """
    Generator of the index-th block of a simulation seeded by seed.

    The stream is PCG64 initialised from
    SeedSequence(entropy=seed, spawn_key=(index,)), which is also the
    index-th child of SeedSequence(seed).spawn(...).

    Parameters
    ----------
    seed : int
        Root seed, >= 0.
    index : int
        Index of the block, >= 0.

    Returns
    ----------
    rng : numpy.random.Generator instance

    Examples
    ----------
    >>> a = substream(42, 3).random(4)
    >>> b = np.random.default_rng(np.random.SeedSequence(42).spawn(4)[3])
    >>> print(bool(np.all(a == b.random(4))))
    True
    >>> print(bool(np.all(a == substream(42, 2).random(4))))
    False
    """
    seed = _check_count(seed, 'seed', minimum=0)
    index = _check_count(index, 'index', minimum=0)
    return np.random.Generator(np.random.PCG64(
        np.random.SeedSequence(entropy=seed, spawn_key=(index,))))

def _check_count(value, name, minimum=1):
    if isinstance(value, bool) or int(value) != value:
        raise ValueError("{} must be an integer (got {!r}).".format(
            name, value))
    value = int(value)
    if value < minimum:
        raise ValueError("{} must be >= {} (got {}).".format(
            name, minimum, value))
    return value

def block_sizes(total, block):
    """
    Cut total items into blocks of fixed size (the last one may be shorter).

    Examples
    ----------
    >>> block_sizes(10, 4)
    [4, 4, 2]
    >>> block_sizes(8, 4)
    [4, 4]
    """
    nfull, rest = divmod(total, block)
    return [block] * nfull + ([rest] if rest else [])

def _rank_size(comm):
    if comm is None:
        return 0, 1
    return comm.Get_rank(), comm.Get_size()

class SimulationResult():
    """ Outcome of r simulated packet transmissions """
    def __init__(self, trials, successes, seed, analytic_prr=None):
        """
        Parameters
        ----------
        trials : int
            Number of packets sent, >= 1.
        successes : int
            Number of packets received, 0 <= successes <= trials.
        seed : int
            Root seed of the simulation.
        analytic_prr : float, optional
            PRR predicted by the model, kept for the report.

        Examples
        ----------
        >>> res = SimulationResult(1000, 904, seed=1)
        >>> print(res.empirical_prr)
        0.904
        >>> res # doctest: +NORMALIZE_WHITESPACE
        SimulationResult(trials=1000, successes=904, empirical_prr=0.904,
        seed=1)

        >>> SimulationResult(10, 11, seed=1)
        Traceback (most recent call last):
          ...
        ValueError: successes must be between 0 and trials (got 11 > 10).
        """
        self.trials = _check_count(trials, 'trials')
        self.successes = _check_count(successes, 'successes', minimum=0)
        self.seed = _check_count(seed, 'seed', minimum=0)
        self.analytic_prr = analytic_prr
        if self.successes > self.trials:
            raise ValueError(
                "successes must be between 0 and trials " +
                "(got {} > {}).".format(self.successes, self.trials))

    def __repr__(self):
        return ('SimulationResult(trials={}, successes={}, ' +
                'empirical_prr={}, seed={})').format(
                    self.trials, self.successes, self.empirical_prr,
                    self.seed)

    def __eq__(self, other):
        return isinstance(other, SimulationResult) and \
            (self.trials, self.successes, self.seed) == \
            (other.trials, other.successes, other.seed)

    def __ne__(self, other):
        return not self == other

    @property
    def empirical_prr(self):
        """ Fraction of packets received """
        return self.successes / self.trials

    def binomial_sigma(self, p=None):
        """
        Standard deviation of the empirical PRR for a true PRR p,
        sqrt(p (1 - p) / r). p defaults to analytic_prr.

        Examples
        ----------
        >>> print(round(SimulationResult(10**5, 0, 0).binomial_sigma(0.9), 6))
        0.000949

        Without an analytic PRR, p has to be given
        >>> SimulationResult(10, 5, 0).binomial_sigma()
        Traceback (most recent call last):
          ...
        ValueError: binomial_sigma needs p when analytic_prr is unknown.
        """
        if p is None:
            p = self.analytic_prr
        if p is None:
            raise ValueError(
                "binomial_sigma needs p when analytic_prr is unknown.")
        return float(np.sqrt(p * (1. - p) / self.trials))

def count_packet_successes(p, trials, seed, rank=0, size=1):
    """
    Number of packets received in the blocks owned by one worker.

    Blocks of BLOCK_PACKETS packets are dealt round-robin: worker rank
    out of size handles blocks rank, rank + size, ... Each packet is
    received when a uniform draw from its block stream falls below p.

    Parameters
    ----------
    p : float
        Probability of receiving a packet.
    trials : int
        Total number of packets of the simulation.
    seed : int
        Root seed.
    rank : int, optional
        Index of the worker.
    size : int, optional
        Number of workers.

    Returns
    ----------
    successes : int
        Packets received in the blocks of this worker.

    Examples
    ----------
    The total does not depend on how the blocks are spread
    >>> totals = [sum(count_packet_successes(0.7, 300000, 11, rank, size)
    ...     for rank in range(size)) for size in [1, 2, 8]]
    >>> print(totals[0] == totals[1] == totals[2])
    True
    """
    successes = 0
    for i, n in enumerate(block_sizes(trials, BLOCK_PACKETS)):
        if i % size != rank:
            continue
        rng = substream(seed, i)
        successes += int(np.count_nonzero(rng.random(n) < p))
    return successes

def simulate_packets(modulation, snr_lin, frame, trials, seed, comm=None,
                     verbose=False):
    """
    Send r packets over a link of fixed SNR and count the receptions.

    Each packet is one Bernoulli draw with p = (1 - Pe)**(8 f), which has
    the same distribution as 8 f independent bit draws, and the empirical
    PRR converges to p with r (weak law of large numbers).

    Parameters
    ----------
    modulation : string
        One of lplink.modem.MODULATIONS.
    snr_lin : float
        Linear SNR of the link.
    frame : FrameSpec instance
        Frame size.
    trials : int
        Number of packets r, >= 1.
    seed : int
        Root seed, >= 0.
    comm : mpi4py communicator, optional
        If given, blocks are spread over the ranks and the counts summed.
    verbose : bool, optional
        If True, print the result.

    Returns
    ----------
    result : SimulationResult instance

    Examples
    ----------
    >>> from lplink.link import FrameSpec, snr_for_prr
    >>> frame = FrameSpec(50)
    >>> print(simulate_packets('bpsk', 1e4, frame, 1000, seed=0).successes)
    1000
    >>> print(simulate_packets('ncfsk', 0., frame, 1000, seed=0).successes)
    0

    At the 0.9 threshold, the estimates stay in the 4-sigma binomial band
    >>> g = snr_for_prr('ncfsk', frame, 0.9)
    >>> ok = []
    >>> for r in [10**3, 10**4, 10**5]:
    ...     res = simulate_packets('ncfsk', g, frame, r, seed=42)
    ...     ok.append(abs(res.empirical_prr - 0.9) <= 4 * res.binomial_sigma())
    >>> print(ok)
    [True, True, True]
    >>> res = simulate_packets('ncfsk', g, frame, 10**5, seed=42,
    ...     verbose=True) # doctest: +ELLIPSIS
    ncfsk f=50: ... / 100000 packets received (analytic PRR 0...)

    Same seed, same result. Running through MPI does not change it
    >>> from mpi4py import MPI
    >>> res_mpi = simulate_packets('ncfsk', g, frame, 10**5, seed=42,
    ...     comm=MPI.COMM_WORLD)
    >>> print(res_mpi == res)
    True
    """
    check_modulation(modulation)
    trials = _check_count(trials, 'trials')
    seed = _check_count(seed, 'seed', minimum=0)
    p = prr(modulation, snr_lin, frame)

    rank, size = _rank_size(comm)
    successes = count_packet_successes(p, trials, seed, rank, size)
    if comm is not None:
        successes = comm.allreduce(successes)

    result = SimulationResult(trials, successes, seed, analytic_prr=p)
    if verbose:
        print("{} f={}: {} / {} packets received (analytic PRR {})".format(
            modulation, frame.frame_bytes, successes, trials, p))
    return result

def shadowing_blocks(ch, draws, seed, rank=0, size=1):
    """
    Shadowing offsets (dB) of the blocks owned by one worker.

    Parameters
    ----------
    ch : ChannelProfile instance
        Environment parameters.
    draws : int
        Total number of draws.
    seed : int
        Root seed.
    rank : int, optional
        Index of the worker.
    size : int, optional
        Number of workers.

    Returns
    ----------
    blocks : dictionary
        Block index -> array of draws.

    Examples
    ----------
    >>> from lplink.channel import ChannelProfile
    >>> blocks = shadowing_blocks(ChannelProfile(), 10000, 3, rank=1, size=2)
    >>> print(sorted(blocks), len(blocks[1]))
    [1] 4096
    """
    blocks = {}
    for i, n in enumerate(block_sizes(draws, BLOCK_DRAWS)):
        if i % size == rank:
            blocks[i] = sample_shadowing(ch, substream(seed, i), n)
    return blocks

def merge_blocks(partials):
    """
    Concatenate, in block order, the dictionaries of several workers.

    Examples
    ----------
    >>> merge_blocks([{1: np.array([3., 4.])}, {0: np.array([1., 2.])}])
    array([1., 2., 3., 4.])
    """
    merged = {}
    for part in partials:
        merged.update(part)
    return np.concatenate([merged[i] for i in sorted(merged)])

def shadowing_draws(ch, draws, seed, comm=None):
    """
    All the shadowing offsets of a simulation, in block order.

    Parameters
    ----------
    ch : ChannelProfile instance
        Environment parameters.
    draws : int
        Number of draws k, >= 1.
    seed : int
        Root seed, >= 0.
    comm : mpi4py communicator, optional
        If given, blocks are drawn by the different ranks and gathered.

    Returns
    ----------
    x : 1d array
        k offsets in dB.

    Examples
    ----------
    Identical draws with 1, 2 or 8 workers
    >>> from lplink.channel import ChannelProfile
    >>> ch = ChannelProfile(sigma=4.)
    >>> ref = shadowing_draws(ch, 20000, 7)
    >>> same = [np.array_equal(ref, merge_blocks(
    ...     [shadowing_blocks(ch, 20000, 7, rank, size)
    ...     for rank in range(size)])) for size in [1, 2, 8]]
    >>> print(same, len(ref))
    [True, True, True] 20000
    """
    draws = _check_count(draws, 'draws')
    seed = _check_count(seed, 'seed', minimum=0)
    rank, size = _rank_size(comm)
    partial = shadowing_blocks(ch, draws, seed, rank, size)
    if comm is None:
        return merge_blocks([partial])
    return merge_blocks(comm.allgather(partial))

class PrrEnsemble():
    """ Distribution of the PRR at one distance under shadowing """
    def __init__(self, distance, prr_values):
        """
        Parameters
        ----------
        distance : float
            Transmitter-receiver distance in meter.
        prr_values : 1d array
            One PRR per shadowing draw, in [0, 1].

        Examples
        ----------
        >>> e = PrrEnsemble(5., np.array([0., 0.5, 1.]))
        >>> print(e.draws, e.mean, e.quantiles[2])
        3 0.5 0.5

        >>> PrrEnsemble(5., np.array([0.2, 1.2]))
        Traceback (most recent call last):
          ...
        ValueError: PRR values must lie in [0, 1].
        """
        self.distance = float(distance)
        self.prr_values = np.asarray(prr_values, dtype=float)
        if self.prr_values.size == 0:
            raise ValueError("An ensemble needs at least one draw.")
        if np.any(self.prr_values < 0) or np.any(self.prr_values > 1):
            raise ValueError("PRR values must lie in [0, 1].")

        self.draws = len(self.prr_values)
        self.mean = float(np.mean(self.prr_values))
        self.std = float(np.std(self.prr_values))
        self.quantiles = [float(q) for q in
                          np.percentile(self.prr_values, QUANTILES)]

    def __repr__(self):
        return 'PrrEnsemble(distance={}, draws={}, mean={:.4f}, std={:.4f})'.format(
            self.distance, self.draws, self.mean, self.std)

    def summary(self):
        """
        Distance, mean, std and quantiles, in the order of the CSV columns.

        Examples
        ----------
        >>> print(PrrEnsemble(2., np.ones(4)).summary())
        [2.0, 1.0, 0.0, 1.0, 1.0, 1.0, 1.0, 1.0]
        """
        return [self.distance, self.mean, self.std] + list(self.quantiles)

    def jensen_gap(self, analytic):
        """
        Ensemble mean minus the PRR of the mean channel.

        The PRR is a nonlinear function of the SNR in dB, so averaging over
        shadowing does not give back the mean-channel PRR. The sign depends
        on the side of the response curve where the distance lies.

        Examples
        ----------
        >>> print(PrrEnsemble(2., np.array([0., 1.])).jensen_gap(0.9))
        -0.4
        """
        return self.mean - float(analytic)

def shadowed_prr_ensemble(d, radio, ch, draws, seed, comm=None,
                          verbose=False):
    """
    PRR at a distance d for k independent shadowing draws.

    Parameters
    ----------
    d : float
        Transmitter-receiver distance in meter.
    radio : RadioProfile instance
        Radio parameters.
    ch : ChannelProfile instance
        Environment parameters.
    draws : int
        Number of draws k, >= 1.
    seed : int
        Root seed, >= 0.
    comm : mpi4py communicator, optional
        If given, the draws are spread over the ranks.
    verbose : bool, optional
        If True, print the summary of the ensemble.

    Returns
    ----------
    ensemble : PrrEnsemble instance

    Examples
    ----------
    >>> from lplink.profiles import builtin_radio, default_channel
    >>> from lplink.link import region_bounds
    >>> mica2, ch = builtin_radio('mica2'), default_channel()

    Without shadowing every draw gives the mean-channel PRR
    >>> e = shadowed_prr_ensemble(9., mica2, ch.deterministic(), 100, 0)
    >>> p = prr_at_distance(9., mica2, ch)
    >>> print(e.std < 1e-12, abs(e.mean - p) < 1e-12)
    True True

    Where the mean PRR crosses 0.9, 4 dB of shadowing spans the whole
    transition
    >>> d_star = region_bounds(mica2, ch).d_connected_end
    >>> e = shadowed_prr_ensemble(d_star, mica2, ch, 10**4, seed=7,
    ...     verbose=True) # doctest: +ELLIPSIS
    d=11.35... m, 10000 draws: mean PRR 0..., std 0...
    >>> print(bool(np.any(e.prr_values > 0.99)),
    ...     bool(np.any(e.prr_values < 0.01)))
    True True
    >>> print(e.quantiles[0] < 0.01, e.quantiles[-1] > 0.99)
    True True

    The spread peaks in the transitional region
    >>> near = shadowed_prr_ensemble(d_star / 2., mica2, ch, 10**4, seed=7)
    >>> far = shadowed_prr_ensemble(2. * d_star, mica2, ch, 10**4, seed=7)
    >>> print(near.std < e.std, far.std < e.std)
    True True
    >>> print(all(0 <= x <= 1 for x in [near.mean, e.mean, far.mean]))
    True
    """
    d = float(d)
    x = shadowing_draws(ch, draws, seed, comm)
    pl = mean_path_loss(d, ch) + x
    snr = snr_db(d, radio.pt_dbm, radio.pn_dbm, ch, pl=pl)
    p = prr(radio.modulation, snr_db_to_linear(snr), radio.frame)
    ensemble = PrrEnsemble(d, np.atleast_1d(p))
    if verbose:
        print("d={} m, {} draws: mean PRR {:.4f}, std {:.4f}".format(
            d, ensemble.draws, ensemble.mean, ensemble.std))
    return ensemble

def probabilistic_region_bounds(radio, ch, thresholds=None, confidence=0.95,
                                draws=10000, seed=0, comm=None,
                                verbose=False):
    """
    Radii of the reception regions when the shadowing is accounted for.

    The connected region ends at the largest distance where
    P[PRR >= thresholds.connected] >= confidence, and the transitional
    region at the largest distance where
    P[PRR >= thresholds.disconnected] >= 1 - confidence. Probabilities are
    estimated from k shadowing draws, the same draws being used at every
    distance so that the estimates decrease with the distance.

    Parameters
    ----------
    radio : RadioProfile instance
        Radio parameters.
    ch : ChannelProfile instance
        Environment parameters.
    thresholds : RegionThresholds instance, optional
        PRR levels. Default is (0.9, 0.1).
    confidence : float, optional
        Probability level, 0 < confidence < 1. Default is 0.95.
    draws : int, optional
        Number of shadowing draws k. Default is 10000.
    seed : int, optional
        Root seed. Default is 0.
    comm : mpi4py communicator, optional
        If given, the draws are spread over the ranks.
    verbose : bool, optional
        If True, print the progress of the searches.

    Returns
    ----------
    regions : LinkRegions instance
        With confidence < 0.5 the connected radius is capped by the
        transitional one.

    Examples
    ----------
    >>> from lplink.profiles import builtin_radio, default_channel
    >>> from lplink.link import region_bounds
    >>> mica2, ch = builtin_radio('mica2'), default_channel()
    >>> det = region_bounds(mica2, ch)

    Without shadowing the deterministic regions are recovered
    >>> r0 = probabilistic_region_bounds(mica2, ch.deterministic(),
    ...     draws=100)
    >>> print(abs(r0.d_connected_end - det.d_connected_end) < 1e-6,
    ...     abs(r0.d_transitional_end - det.d_transitional_end) < 1e-6)
    True True

    Shadowing widens the transitional region on both sides
    >>> r = probabilistic_region_bounds(mica2, ch, confidence=0.95,
    ...     draws=10**4, seed=1)
    >>> print(r.d_connected_end < det.d_connected_end,
    ...     r.d_transitional_end > det.d_transitional_end)
    True True
    >>> print(r.transitional_width > 2 * det.transitional_width)
    True

    Fixed seed, fixed bounds
    >>> r2 = probabilistic_region_bounds(mica2, ch, confidence=0.95,
    ...     draws=10**4, seed=1)
    >>> print(r2.d_connected_end == r.d_connected_end,
    ...     r2.d_transitional_end == r.d_transitional_end)
    True True

    >>> probabilistic_region_bounds(mica2, ch, confidence=1.)
    Traceback (most recent call last):
      ...
    ValueError: confidence must be strictly between 0 and 1 (got 1.0).
    """
    if thresholds is None:
        thresholds = RegionThresholds()
    confidence = float(confidence)
    if not 0 < confidence < 1:
        raise ValueError(
            "confidence must be strictly between 0 and 1 (got {}).".format(
                confidence))
    x = shadowing_draws(ch, draws, seed, comm)

    def probably_above(level, probability):
        def inside(d):
            pl = mean_path_loss(d, ch) + x
            snr = snr_db(d, radio.pt_dbm, radio.pn_dbm, ch, pl=pl)
            p = prr(radio.modulation, snr_db_to_linear(snr), radio.frame)
            return np.mean(p >= level) >= probability
        return inside

    d_connected = outermost_distance(
        probably_above(thresholds.connected, confidence), ch.d0, verbose,
        'probable connected region')
    d_transitional = outermost_distance(
        probably_above(thresholds.disconnected, 1. - confidence), ch.d0,
        verbose, 'probable transitional region')
    return LinkRegions(min(d_connected, d_transitional), d_transitional,
                       thresholds)


if __name__ == "__main__":
    import doctest
    doctest.testmod()
