#!/bin/python
# -*- coding: utf-8 -*-

"""command line: verification runs, the genus-8 experiment, Betti tables and divisor classes
"""

import sys
import json
import argparse
from .ff import ParameterError
from .linalg import FeasibilityError
from .betti import BettiTable, expected_table, render_table
from .divclass import KINDS as CLASS_KINDS, class_formula, derive_class_by_sums, odd_genus_combination, g12_combination_report
from .runner import load_config, verify_prym_green, verify_torsion_bundle, verify_canonical, experiment_g8, PATHS


def _output_flags(parser):

    parser.add_argument('--json', metavar='FILE',
                        help='write the report as JSON to FILE')
    parser.add_argument('--quiet', action='store_true',
                        help='suppress tables and per-trial listings')
    parser.add_argument('--verbose', action='store_true',
                        help='print progress and timings')
    parser.add_argument('--config', metavar='FILE',
                        help='YAML file overriding the packaged defaults')


def _run_flags(parser, path=True):

    parser.add_argument('--genus', type=int, required=True)
    parser.add_argument('--level', type=int, required=True)
    parser.add_argument('--prime', type=int,
                        help='use this prime instead of searching the configured range')
    parser.add_argument('--seed', type=int, default=0)
    parser.add_argument('--trials', type=int)
    parser.add_argument('--threads', type=int,
                        help='worker processes, 1 runs trials in-process')
    if path:
        parser.add_argument('--path', choices=PATHS, default='artinian')
    _output_flags(parser)


def build_parser():

    parser = argparse.ArgumentParser(
        prog='syzlab', description='Finite-field verification of syzygy conjectures for paracanonical curves.')
    sub = parser.add_subparsers(dest='command', required=True)

    verify = sub.add_parser('verify', help='verify a conjecture on random nodal curves')
    vsub = verify.add_subparsers(dest='target', required=True)
    _run_flags(vsub.add_parser('prym-green', help='K_{g/2-2,1}(C, K (x) eta) = 0'))
    tb = vsub.add_parser('torsion-bundle', help='K_{g/2-1,1}(C; eta^k, K (x) eta)')
    tb.add_argument('--k', type=int, required=True)
    _run_flags(tb)
    _run_flags(vsub.add_parser('canonical', help='the eta twist of the canonical ring'), path=False)

    betti = sub.add_parser('betti', help='print the expected Betti table')
    betti.add_argument('--genus', type=int, required=True)
    betti.add_argument('--level', type=int)
    betti.add_argument('--kind', choices=('ring', 'torsion', 'canonical'), default='ring')
    betti.add_argument('--k', type=int)
    _output_flags(betti)

    experiment = sub.add_parser('experiment', help='sampling experiments')
    esub = experiment.add_subparsers(dest='name', required=True)
    g8 = esub.add_parser('g8', help='linear syzygies of random genus-8 bundles')
    g8.add_argument('--samples', type=int)
    g8.add_argument('--prime', type=int, default=10007)
    g8.add_argument('--seed', type=int, default=0)
    g8.add_argument('--two-torsion', action='store_true')
    g8.add_argument('--threads', type=int)
    _output_flags(g8)

    dc = sub.add_parser('divclass', help='divisor classes on the level moduli space')
    dc.add_argument('kind', nargs='?', choices=CLASS_KINDS)
    dc.add_argument('--genus', type=int)
    dc.add_argument('--level', type=int, default=3)
    dc.add_argument('--derive', action='store_true',
                    help='recompute the class from the alternating Chern class sums')
    dc.add_argument('--normalized', action='store_true',
                    help='drop the binomial prefactor')
    dc.add_argument('--combo-odd', type=int, metavar='I')
    dc.add_argument('--combo-g12', action='store_true')
    _output_flags(dc)

    return parser


def _write_json(args, doc):

    if not args.json:
        return

    with open(args.json, 'w') as f:
        f.write(doc if isinstance(doc, str) else json.dumps(doc, sort_keys=True, indent=2, default=str))
        f.write('\n')


def _print_report(report, quiet):

    par = report['parameters']
    print('[%s]' % report['command'], ' '.join('%s=%s' % (k, par[k]) for k in sorted(par)))

    if not quiet:
        if report.get('trials'):
            print(report.summary().to_string(index=False))
        for name in ('expected', 'observed'):
            if name in report:
                d = report[name]
                print('%s:' % name)
                print(render_table(BettiTable(d['rows'], d['kind'], d['g'])))
        if report.get('rank_counts') is not None:
            print('hits: %s of %s (rate %.3g, 1/p = %.3g)' % (
                report['hits'], par['samples'], report['hit_rate'], report['expected_rate']))
            print('ranks:', ', '.join('%s: %s' % kv for kv in report['rank_counts'].items()) or 'none')

    print('verdict: %s' % report.verdict)


def _verify(args, config):

    kwargs = dict(prime=args.prime, seed=args.seed, trials=args.trials,
                  config=config, ncores=args.threads, verbose=args.verbose)

    if args.target == 'prym-green':
        return verify_prym_green(args.genus, args.level, path=args.path, **kwargs)
    if args.target == 'torsion-bundle':
        return verify_torsion_bundle(args.genus, args.level, args.k, path=args.path, **kwargs)

    return verify_canonical(args.genus, args.level, **kwargs)


def _betti(args):

    table = expected_table(args.genus, args.kind, args.level, args.k)
    if not args.quiet:
        print(render_table(table))
    _write_json(args, table.to_dict())

    return 0


def _divclass(args):

    out = {}

    if args.kind:
        if args.genus is None and args.kind not in ('Kcanonical', 'pullback_delta0'):
            raise ParameterError('%s needs --genus' % args.kind)
        if args.derive:
            D = derive_class_by_sums(args.kind, args.genus, args.level)
        else:
            D = class_formula(args.kind, args.genus, args.level, args.normalized)
        out['class'] = D.to_dict()
        print('%s(g=%s, ell=%s) = %s' % (args.kind, args.genus, args.level, D.expr))

    if args.combo_odd is not None:
        combo = odd_genus_combination(args.combo_odd)
        out['combo_odd'] = {k: (v.to_dict() if k == 'class' else v) for k, v in combo.items()}
        print('i=%s: alpha=%s beta=%s lambda=%s (%s)' % (
            combo['i'], combo['alpha'], combo['beta'], combo['lam'], combo['verdict']))

    if args.combo_g12:
        rep = g12_combination_report()
        out['combo_g12'] = rep
        if not args.quiet:
            for row in rep['candidates']:
                print('Z %-16s D %-16s -> %s%s' % (row['Z'], row['D'], ', '.join(row['result']),
                                                   '  (target)' if row['matches'] else ''))
        print('target reproduced: %s' % rep['reproduces_target'])

    if not out:
        raise ParameterError('nothing to compute: give a class kind, --combo-odd or --combo-g12')

    _write_json(args, out)

    return 0


def main(argv=None):
    """Entry point. Returns the exit code: 0 consistent, 2 extra syzygy or inconclusive, 1 error."""

    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 0 if e.code == 0 else 1

    try:
        if args.command == 'betti':
            return _betti(args)
        if args.command == 'divclass':
            return _divclass(args)

        config = load_config(args.config)
        if args.command == 'verify':
            report = _verify(args, config)
        else:
            report = experiment_g8(args.samples, args.prime, args.seed, args.two_torsion,
                                   config=config, ncores=args.threads, verbose=args.verbose)

    except (ParameterError, FeasibilityError) as e:
        print('syzlab: error: %s' % e, file=sys.stderr)
        return 1

    _print_report(report, args.quiet)
    _write_json(args, report.to_json())

    return report.exit_code
