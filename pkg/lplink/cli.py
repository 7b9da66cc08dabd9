#!/usr/bin/python
"""
Command line interface of lplink.

    lplink response --mod ncfsk,cfsk --frame 25,50,100 --svg
    lplink curve --radio mica2
    lplink regions --radio tinynode --confidence 0.95 --seed 0
    lplink compare --radios mica2,tinynode
    lplink simulate --mod ncfsk --snr-db 11.79 --trials 100000 --seed 42
    lplink ensemble --radio mica2 --distance 11.4 --draws 10000 --seed 7

Results go to --out-dir (default ./out). Exit code is 0 on success,
2 for invalid flags or profiles, and 3 when a region search does not
terminate.
"""
from __future__ import division, absolute_import, print_function

import os
import sys
import argparse

from lplink.channel import ChannelProfile
from lplink.link import FrameSpec
from lplink.link import UnboundedRegionError
from lplink.link import receiver_response_curve
from lplink.link import prr_distance_curve
from lplink.link import region_bounds
from lplink.link import snr_thresholds
from lplink.modem import MODULATIONS
from lplink.modem import check_modulation
from lplink.modem import snr_db_to_linear
from lplink.montecarlo import simulate_packets
from lplink.montecarlo import shadowed_prr_ensemble
from lplink.montecarlo import probabilistic_region_bounds
from lplink.profiles import resolve_radio
from lplink.profiles import resolve_channel
from lplink.profiles import save_channel
from lplink import outputs

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_NUMERIC = 3

DB_NOTE = "dB (axes labelled dBm in the literature are treated as dB)"

def parse_list(text, name):
    """
    Split a comma-separated flag value, rejecting empty lists.

    Examples
    ----------
    >>> parse_list('ncfsk, cfsk', '--mod')
    ['ncfsk', 'cfsk']
    >>> parse_list('', '--mod')
    Traceback (most recent call last):
      ...
    ValueError: --mod needs at least one value.
    """
    items = [x.strip() for x in text.split(',') if x.strip()]
    if not items:
        raise ValueError("{} needs at least one value.".format(name))
    return items

def parse_frames(text):
    """
    Frame sizes given as a comma-separated list of integers.

    Examples
    ----------
    >>> parse_frames('25,50,100')
    [25, 50, 100]
    >>> parse_frames('50.5')
    Traceback (most recent call last):
      ...
    ValueError: --frame must be a list of integers (got '50.5').
    """
    try:
        frames = [int(x) for x in parse_list(text, '--frame')]
    except ValueError as e:
        if 'at least one' in str(e):
            raise
        raise ValueError(
            "--frame must be a list of integers (got {!r}).".format(text))
    for f in frames:
        FrameSpec(f, 0)
    return frames

def check_sampling_flags(args):
    """
    Validate the Monte Carlo flags of a command before any computation.

    Examples
    ----------
    >>> check_sampling_flags(argparse.Namespace(confidence=0.95, draws=10,
    ...     seed=0))
    >>> check_sampling_flags(argparse.Namespace(confidence=2., draws=10,
    ...     seed=0))
    Traceback (most recent call last):
      ...
    ValueError: --confidence must be strictly between 0 and 1 (got 2.0).
    >>> check_sampling_flags(argparse.Namespace(trials=0, seed=0))
    Traceback (most recent call last):
      ...
    ValueError: --trials must be >= 1 (got 0).
    """
    confidence = getattr(args, 'confidence', None)
    if confidence is not None and not 0 < confidence < 1:
        raise ValueError(
            "--confidence must be strictly between 0 and 1 (got {}).".format(
                confidence))
    for name in ['draws', 'trials']:
        value = getattr(args, name, None)
        if value is not None and value < 1:
            raise ValueError("--{} must be >= 1 (got {}).".format(name, value))
    seed = getattr(args, 'seed', None)
    if seed is not None and seed < 0:
        raise ValueError("--seed must be >= 0 (got {}).".format(seed))

def _radio_from_flags(args):
    radio = resolve_radio(args.radio)
    if args.mod is not None:
        check_modulation(args.mod)
    return radio.replace(modulation=args.mod, frame_bytes=args.frame)

def _out(args, name):
    return os.path.join(args.out_dir, name)

def cmd_response(args):
    """
    Receiver response PRR(SNR), one CSV per (modulation, frame) pair.
    """
    mods = [check_modulation(m) for m in parse_list(args.mod, '--mod')]
    frames = parse_frames(args.frame)
    curves = []
    for m in mods:
        for f in frames:
            snr, p = receiver_response_curve(
                m, FrameSpec(f), args.snr_min, args.snr_max, args.step)
            outputs.write_columns(
                _out(args, 'response_{}_f{}.csv'.format(m, f)),
                outputs.RESPONSE_HEADER, [snr, p], verbose=True)
            curves.append(('{} f={}'.format(m, f), snr, p))
    if args.svg:
        outputs.plot_curves(curves, _out(args, 'response.svg'),
                            'SNR (dB)', 'PRR', 'Receiver response',
                            verbose=True)
    return EXIT_OK

def cmd_curve(args):
    """
    PRR as a function of the distance on the mean channel.
    """
    radio = _radio_from_flags(args)
    ch = resolve_channel(args.channel)
    d, p = prr_distance_curve(radio, ch, args.d_min, args.d_max, args.d_step)
    outputs.write_columns(
        _out(args, 'curve_{}_{}_f{}.csv'.format(
            radio.name, radio.modulation, radio.frame.frame_bytes)),
        outputs.CURVE_HEADER, [d, p], verbose=True)
    if args.svg:
        outputs.plot_curves(
            [('{} {}'.format(radio.name, radio.modulation), d, p)],
            _out(args, 'curve.svg'), 'Distance (m)', 'PRR',
            'PRR vs distance', verbose=True)
    return EXIT_OK

def _format_regions(regions):
    return ('connected up to {:.2f} m, transitional up to {:.2f} m ' +
            '(width {:.2f} m)').format(
                regions.d_connected_end, regions.d_transitional_end,
                regions.transitional_width)

def cmd_regions(args):
    """
    Extent of the connected and transitional regions, on the mean channel
    and with shadowing.
    """
    check_sampling_flags(args)
    radio = _radio_from_flags(args)
    ch = resolve_channel(args.channel)
    det = region_bounds(radio, ch)
    prob = probabilistic_region_bounds(
        radio, ch, confidence=args.confidence, draws=args.draws,
        seed=args.seed)
    snr_hi, snr_lo = snr_thresholds(radio.modulation, radio.frame)

    print("{} ({}, f={} bytes)".format(
        radio.name, radio.modulation, radio.frame.frame_bytes))
    print("  SNR bounds: connected above {:.2f} dB, ".format(snr_hi) +
          "disconnected below {:.2f} dB".format(snr_lo))
    print("  mean channel: " + _format_regions(det))
    print("  shadowed channel (confidence {}, {} draws, seed {}): ".format(
        args.confidence, args.draws, args.seed) + _format_regions(prob))

    outputs.write_csv(
        _out(args, 'regions_{}.csv'.format(radio.name)),
        outputs.REGIONS_HEADER,
        [[radio.name, radio.modulation, radio.frame.frame_bytes,
          det.d_connected_end, det.d_transitional_end,
          prob.d_connected_end, prob.d_transitional_end]], verbose=True)
    return EXIT_OK

def cmd_compare(args):
    """
    Side-by-side PRR curves and regions of several radios or modulations.
    """
    if (args.radios is None) == (args.mods is None):
        raise ValueError("compare needs exactly one of --radios or --mods.")
    if args.radios is not None:
        names = parse_list(args.radios, '--radios')
        variants = []
        for name in names:
            radio = resolve_radio(name)
            if args.mod is not None:
                check_modulation(args.mod)
            variants.append((radio.name, radio.replace(
                modulation=args.mod, frame_bytes=args.frame)))
    else:
        base = resolve_radio(args.radio)
        variants = [(m, base.replace(modulation=check_modulation(m),
                                     frame_bytes=args.frame))
                    for m in parse_list(args.mods, '--mods')]

    labels = [label for label, radio in variants]
    if len(variants) < 2:
        raise ValueError("compare needs at least two variants (got {}).".format(
            ', '.join(labels)))
    if len(set(labels)) != len(labels):
        raise ValueError("compare variants must be distinct (got {}).".format(
            ', '.join(labels)))

    ch = resolve_channel(args.channel)
    columns, rows, curves = [], [], []
    for label, radio in variants:
        d, p = prr_distance_curve(radio, ch, args.d_min, args.d_max,
                                  args.d_step)
        columns.append(p)
        curves.append((label, d, p))
        regions = region_bounds(radio, ch)
        rows.append([label, regions.d_connected_end,
                     regions.d_transitional_end])
        print("{}: {}".format(label, _format_regions(regions)))

    outputs.write_columns(_out(args, 'compare.csv'),
                          ['distance_m'] + labels, [d] + columns,
                          verbose=True)
    outputs.write_csv(_out(args, 'compare_regions.csv'),
                      outputs.COMPARE_REGIONS_HEADER, rows, verbose=True)
    if args.svg:
        outputs.plot_curves(curves, _out(args, 'compare.svg'),
                            'Distance (m)', 'PRR', 'PRR vs distance',
                            verbose=True)
    return EXIT_OK

def cmd_simulate(args):
    """
    Bernoulli simulation of packets sent at a fixed SNR.
    """
    check_sampling_flags(args)
    modulation = check_modulation(args.mod)
    frame = FrameSpec(args.frame)
    res = simulate_packets(modulation, snr_db_to_linear(args.snr_db), frame,
                           args.trials, args.seed, verbose=True)
    band = 4 * res.binomial_sigma()
    print("empirical PRR {:.6f}, analytic PRR {:.6f} (4-sigma band {:.6f})".format(
        res.empirical_prr, res.analytic_prr, band))
    outputs.write_csv(
        _out(args, 'simulate_{}_f{}.csv'.format(modulation, args.frame)),
        outputs.SIMULATION_HEADER,
        [[res.trials, res.successes, res.empirical_prr, res.analytic_prr,
          res.seed]], verbose=True)
    return EXIT_OK

def cmd_ensemble(args):
    """
    Distribution of the PRR at one distance under shadowing.
    """
    check_sampling_flags(args)
    radio = _radio_from_flags(args)
    ch = resolve_channel(args.channel)
    ens = shadowed_prr_ensemble(args.distance, radio, ch, args.draws,
                                args.seed, verbose=True)
    outputs.write_csv(_out(args, 'ensemble_{}.csv'.format(radio.name)),
                      outputs.ENSEMBLE_HEADER, [ens.summary()], verbose=True)
    return EXIT_OK

def _add_radio_flags(parser):
    parser.add_argument('--radio', default='mica2',
                        help='Built-in radio ({}) or JSON profile. '.format(
                            ', '.join(['mica2', 'tinynode'])) +
                        'Default is mica2.')
    parser.add_argument('--channel', default=None,
                        help='JSON channel profile. Default is the ' +
                        'indoor channel (d0=1 m, PL(d0)=55 dB, n=4, ' +
                        'sigma=4 dB).')
    parser.add_argument('--mod', default=None,
                        help='Override the modulation of the radio ' +
                        '({}).'.format(', '.join(MODULATIONS)))
    parser.add_argument('--frame', type=int, default=None,
                        help='Override the frame size of the radio (bytes).')

def _add_distance_flags(parser):
    parser.add_argument('--d-min', type=float, default=0.5,
                        help='First distance (m). Default is 0.5.')
    parser.add_argument('--d-max', type=float, default=60.,
                        help='Last distance (m). Default is 60.')
    parser.add_argument('--d-step', type=float, default=0.1,
                        help='Distance step (m). Default is 0.1.')

def build_parser():
    """
    Parser of the lplink command line.

    Examples
    ----------
    >>> args = build_parser().parse_args(['simulate', '--mod', 'bpsk',
    ...     '--snr-db', '7.8', '--seed', '3'])
    >>> print(args.command, args.frame, args.trials, args.out_dir)
    simulate 50 100000 out
    """
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--out-dir', default='out',
                        help='Folder for the output files. Default is ./out.')

    parser = argparse.ArgumentParser(
        prog='lplink',
        description='Analytic model of low-power wireless links: ' +
        'packet reception rate vs SNR and distance, reception regions ' +
        'and Monte Carlo validation. SNR values are in ' + DB_NOTE + '.')
    sub = parser.add_subparsers(dest='command')
    sub.required = True

    p = sub.add_parser('response', parents=[common],
                       help='Receiver response PRR(SNR).')
    p.add_argument('--mod', required=True,
                   help='Comma-separated modulations ({}).'.format(
                       ', '.join(MODULATIONS)))
    p.add_argument('--frame', default='50',
                   help='Comma-separated frame sizes (bytes). Default is 50.')
    p.add_argument('--snr-min', type=float, default=0.,
                   help='First SNR, in ' + DB_NOTE + '. Default is 0.')
    p.add_argument('--snr-max', type=float, default=30.,
                   help='Last SNR, in ' + DB_NOTE + '. Default is 30.')
    p.add_argument('--step', type=float, default=0.1,
                   help='SNR step (dB). Default is 0.1.')
    p.add_argument('--svg', action='store_true',
                   help='Also write response.svg.')
    p.set_defaults(func=cmd_response)

    p = sub.add_parser('curve', parents=[common],
                       help='PRR vs distance on the mean channel.')
    _add_radio_flags(p)
    _add_distance_flags(p)
    p.add_argument('--svg', action='store_true', help='Also write curve.svg.')
    p.set_defaults(func=cmd_curve)

    p = sub.add_parser('regions', parents=[common],
                       help='Connected and transitional region radii.')
    _add_radio_flags(p)
    p.add_argument('--confidence', type=float, default=0.95,
                   help='Probability level of the shadowed regions. ' +
                   'Default is 0.95.')
    p.add_argument('--draws', type=int, default=10000,
                   help='Shadowing draws. Default is 10000.')
    p.add_argument('--seed', type=int, default=0,
                   help='Root seed of the shadowing draws. Default is 0.')
    p.set_defaults(func=cmd_regions)

    p = sub.add_parser('compare', parents=[common],
                       help='Compare radios or modulations.')
    _add_radio_flags(p)
    _add_distance_flags(p)
    p.add_argument('--radios', default=None,
                   help='Comma-separated radios (names or JSON profiles).')
    p.add_argument('--mods', default=None,
                   help='Comma-separated modulations applied to --radio.')
    p.add_argument('--svg', action='store_true',
                   help='Also write compare.svg.')
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser('simulate', parents=[common],
                       help='Bernoulli simulation of packets.')
    p.add_argument('--mod', required=True,
                   help='Modulation ({}).'.format(', '.join(MODULATIONS)))
    p.add_argument('--snr-db', type=float, required=True,
                   help='SNR of the link, in ' + DB_NOTE + '.')
    p.add_argument('--frame', type=int, default=50,
                   help='Frame size (bytes). Default is 50.')
    p.add_argument('--trials', type=int, default=100000,
                   help='Number of packets. Default is 100000.')
    p.add_argument('--seed', type=int, required=True, help='Root seed.')
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser('ensemble', parents=[common],
                       help='PRR distribution under shadowing.')
    _add_radio_flags(p)
    p.add_argument('--distance', type=float, required=True,
                   help='Distance (m).')
    p.add_argument('--draws', type=int, default=10000,
                   help='Shadowing draws. Default is 10000.')
    p.add_argument('--seed', type=int, required=True, help='Root seed.')
    p.set_defaults(func=cmd_ensemble)
    return parser

def main(argv=None):
    """
    Run one lplink command and return the exit code.

    Parameters
    ----------
    argv : list of strings, optional
        Command line arguments. Default is sys.argv[1:].

    Returns
    ----------
    code : int
        0 on success, 2 for invalid flags or profiles, 3 if a region
        search does not terminate.

    Examples
    ----------
    >>> import tempfile, shutil
    >>> tmp = tempfile.mkdtemp()

    Receiver response of two modulations
    >>> main(['response', '--mod', 'ncfsk,cfsk', '--frame', '50',
    ...     '--out-dir', tmp]) # doctest: +ELLIPSIS
    Table written to .../response_ncfsk_f50.csv
    Table written to .../response_cfsk_f50.csv
    0
    >>> lines = open(os.path.join(tmp, 'response_ncfsk_f50.csv')).readlines()
    >>> print(lines[0].strip(), len(lines) - 1)
    snr_db,prr 301

    Bigger frames cross PRR = 0.9 at higher SNR
    >>> main(['response', '--mod', 'ncfsk', '--frame', '25,50,100',
    ...     '--step', '0.01', '--svg', '--out-dir', tmp]) # doctest: +ELLIPSIS
    Table written to .../response_ncfsk_f25.csv
    Table written to .../response_ncfsk_f50.csv
    Table written to .../response_ncfsk_f100.csv
    Figure written to .../response.svg
    0
    >>> crossings = []
    >>> for f in [25, 50, 100]:
    ...     rows = [l.split(',') for l in open(os.path.join(tmp,
    ...         'response_ncfsk_f{}.csv'.format(f))).readlines()[1:]]
    ...     crossings.append(min(float(s) for s, p in rows if float(p) >= 0.9))
    >>> print(crossings[0] < crossings[1] < crossings[2])
    True

    Regions of MICA2, deterministic and shadowed
    >>> main(['regions', '--radio', 'mica2', '--draws', '2000',
    ...     '--out-dir', tmp]) # doctest: +ELLIPSIS, +NORMALIZE_WHITESPACE
    mica2 (ncfsk, f=50 bytes)
      SNR bounds: connected above 11.79 dB, disconnected below 9.51 dB
      mean channel: connected up to 11.36 m, transitional up to 12.95 m
      (width 1.59 m)
      shadowed channel (confidence 0.95, 2000 draws, seed 0): connected
      up to ... m, transitional up to ... m (width ... m)
    Table written to .../regions_mica2.csv
    0
    >>> print(open(os.path.join(tmp, 'regions_mica2.csv')).readline().strip())
    radio,modulation,frame_bytes,d_connected_end_m,d_transitional_end_m,p_connected_end_m,p_transitional_end_m

    TinyNode reaches further than MICA2, BPSK further than DPSK
    >>> main(['compare', '--radios', 'mica2,tinynode', '--d-step', '0.5',
    ...     '--out-dir', tmp]) # doctest: +ELLIPSIS
    mica2: connected up to 11.36 m, ...
    tinynode: connected up to ...
    Table written to .../compare.csv
    Table written to .../compare_regions.csv
    0
    >>> def regions_table():
    ...     rows = open(os.path.join(tmp, 'compare_regions.csv')).readlines()
    ...     return [[float(x) for x in r.split(',')[1:]] for r in rows[1:]]
    >>> (m_conn, m_trans), (t_conn, t_trans) = regions_table()
    >>> print(t_conn > m_conn, t_trans > m_trans,
    ...     abs(t_conn / m_conn - 10**(19. / 40)) < 1e-6)
    True True True
    >>> print(open(os.path.join(tmp, 'compare.csv')).readline().strip())
    distance_m,mica2,tinynode
    >>> main(['compare', '--mods', 'bpsk,dpsk', '--frame', '50',
    ...     '--out-dir', tmp]) # doctest: +ELLIPSIS
    bpsk: ...
    dpsk: ...
    0
    >>> (b_conn, b_trans), (d_conn, d_trans) = regions_table()
    >>> print(b_conn >= d_conn, b_trans >= d_trans)
    True True

    Monte Carlo, byte-identical when rerun with the same seed
    >>> argv = ['simulate', '--mod', 'ncfsk', '--snr-db', '11.79',
    ...     '--frame', '50', '--trials', '100000', '--seed', '42',
    ...     '--out-dir', tmp]
    >>> main(argv) # doctest: +ELLIPSIS
    ncfsk f=50: ... / 100000 packets received (analytic PRR 0.9...)
    empirical PRR 0..., analytic PRR 0.90... (4-sigma band 0.003...)
    Table written to .../simulate_ncfsk_f50.csv
    0
    >>> fn = os.path.join(tmp, 'simulate_ncfsk_f50.csv')
    >>> first = open(fn).read()
    >>> _ = main(argv) # doctest: +ELLIPSIS
    ncfsk f=50: ...
    >>> print(first == open(fn).read())
    True
    >>> trials, successes, emp, ana, seed = first.splitlines()[1].split(',')
    >>> print(abs(float(emp) - 0.9) <= 4 * (0.09 / 1e5)**0.5)
    True

    >>> main(['ensemble', '--radio', 'mica2', '--distance', '11.4',
    ...     '--draws', '10000', '--seed', '7', '--out-dir', tmp])
    ... # doctest: +ELLIPSIS
    d=11.4 m, 10000 draws: mean PRR 0..., std 0...
    Table written to .../ensemble_mica2.csv
    0
    >>> lines = open(os.path.join(tmp, 'ensemble_mica2.csv')).readlines()
    >>> print(lines[0].strip())
    distance_m,mean_prr,std_prr,p05,p25,p50,p75,p95
    >>> values = [float(x) for x in lines[1].split(',')]
    >>> print(values[3] < 0.01, values[7] > 0.99)
    True True

    One-byte frames are valid
    >>> main(['response', '--mod', 'ncfsk', '--frame', '1',
    ...     '--out-dir', tmp]) # doctest: +ELLIPSIS
    Table written to .../response_ncfsk_f1.csv
    0
    >>> main(['simulate', '--mod', 'ncfsk', '--snr-db', '12',
    ...     '--frame', '1', '--trials', '1000', '--seed', '1',
    ...     '--out-dir', tmp]) # doctest: +ELLIPSIS
    ncfsk f=1: ...
    Table written to .../simulate_ncfsk_f1.csv
    0

    Invalid flags and profiles give exit code 2
    >>> main(['response', '--mod', '', '--out-dir', tmp])
    2
    >>> main(['response', '--mod', 'qpsk', '--out-dir', tmp])
    2
    >>> main(['simulate', '--mod', 'ncfsk', '--snr-db', '10'])
    2
    >>> main(['curve', '--radio', 'mica3', '--out-dir', tmp])
    2
    >>> main(['compare', '--radios', 'mica2', '--out-dir', tmp])
    2
    >>> fn = os.path.join(tmp, 'bad_radio.json')
    >>> with open(fn, 'w') as f:
    ...     _ = f.write('{"name": "bad", "pt_dbm": 5.0}')
    >>> main(['curve', '--radio', fn, '--out-dir', tmp])
    2

    Radio names that are not plain file names are rejected
    >>> fn = os.path.join(tmp, 'sneaky_radio.json')
    >>> with open(fn, 'w') as f:
    ...     _ = f.write('{"name": "../x", "pt_dbm": 5.0, "pn_dbm": -104.0, ' +
    ...         '"modulation": "ncfsk", "frame_bytes": 50, "preamble_bytes": 2}')
    >>> main(['curve', '--radio', fn, '--out-dir', tmp])
    2

    A region that never ends gives exit code 3
    >>> fn = os.path.join(tmp, 'open_field.json')
    >>> save_channel(ChannelProfile(pl_d0=30., n=1.), fn)
    >>> main(['regions', '--channel', fn, '--out-dir', tmp])
    3

    Flags are checked before the search starts
    >>> main(['regions', '--channel', fn, '--confidence', '2',
    ...     '--out-dir', tmp])
    2
    >>> main(['regions', '--channel', fn, '--draws', '0',
    ...     '--out-dir', tmp])
    2

    Nothing is written outside the output folder
    >>> print(sorted(os.listdir(tmp))) # doctest: +NORMALIZE_WHITESPACE
    ['bad_radio.json', 'compare.csv', 'compare_regions.csv',
     'ensemble_mica2.csv', 'open_field.json', 'regions_mica2.csv',
     'response.svg', 'response_cfsk_f50.csv', 'response_ncfsk_f1.csv',
     'response_ncfsk_f100.csv', 'response_ncfsk_f25.csv',
     'response_ncfsk_f50.csv', 'simulate_ncfsk_f1.csv',
     'simulate_ncfsk_f50.csv', 'sneaky_radio.json']
    >>> shutil.rmtree(tmp)
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_USAGE

    try:
        return args.func(args)
    except UnboundedRegionError as e:
        print("lplink {}: {}".format(args.command, e), file=sys.stderr)
        return EXIT_NUMERIC
    except (ValueError, IOError, OSError) as e:
        parser.print_usage(sys.stderr)
        print("lplink {}: {}".format(args.command, e), file=sys.stderr)
        return EXIT_USAGE
    except KeyError as e:
        parser.print_usage(sys.stderr)
        print("lplink {}: {}".format(args.command, e.args[0]),
              file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    import doctest
    doctest.testmod()
