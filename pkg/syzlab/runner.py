#!/bin/python
# -*- coding: utf-8 -*-

"""trial engine: seeded curves, verification runs and the genus-8 sampling experiment
"""

import os
import json
import time
import yaml
import numpy as np
import pandas as pd
import scipy.stats as sst
from functools import partial
from collections import Counter
from .ff import ParameterError, SplitMix64, derive_seed, select_prime_and_root, field_for_prime
from .curve import random_curve, torsion_bundle, paracanonical, canonical_multipliers, random_bundle, power, section_space
from .koszul import koszul_dim_ring, koszul_dim_twisted, linear_syzygy_space, syzygy_rank
from .artinian import RegularPairError, choose_regular_pair, prym_green_kernel_dim, torsion_module_kernel_dim
from .betti import expected_table, with_excess, is_exceptional

from . import default_config

PATHS = ('direct', 'artinian', 'both')


def load_config(path=None, **overrides):
    """Read the packaged defaults, then a user file, then `SYZLAB_THREADS`, then explicit overrides.

    Parameters
    ----------
    path : str, optional
        a YAML file with some of the default keys
    overrides : dict
        keyword overrides; `None` values are ignored

    Returns
    -------
    dict
    """

    with open(default_config) as f:
        config = yaml.safe_load(f)

    if path:
        with open(path) as f:
            user = yaml.safe_load(f) or {}
        unknown = set(user) - set(config)
        if unknown:
            raise ParameterError('unknown configuration keys %s' %
                                 sorted(unknown))
        config.update(user)

    env = os.environ.get('SYZLAB_THREADS')
    if env:
        config['threads'] = int(env)

    config.update({k: v for k, v in overrides.items() if v is not None})
    config['prime_range'] = list(config['prime_range'])

    return config


def create_pool(ncores=None):
    """Creates a process pool for independent trials

    Parameters
    ----------
    ncores : int, optional
        Number of processes. Defaults to the number of cores, capped by `SYZLAB_THREADS`.
    """

    import pathos

    cap = os.environ.get('SYZLAB_THREADS')
    ncores = ncores or pathos.multiprocessing.cpu_count()
    if cap:
        ncores = min(ncores, int(cap))

    try:
        import threadpoolctl
    except ImportError:
        print('[create_pool:]'.ljust(
            15, ' ') + " threadpoolctl not available, BLAS threads in the workers are not capped.")

    pool = pathos.pools.ProcessPool(ncores)
    pool.clear()

    return pool


def close_pool(pool):

    if pool is not None:
        pool.close()
        pool.join()
        pool.clear()


def _capped(fn, limit, arg):
    """run fn(arg) with at most `limit` BLAS threads in this process"""

    try:
        from threadpoolctl import threadpool_limits
    except ImportError:
        return fn(arg)

    with threadpool_limits(limits=limit):
        return fn(arg)


def mapper(pool, threadpool_limit=1):
    """`map` in-process, or an imap over the pool whose tasks cap their BLAS threads"""

    if pool is None:
        return map

    return lambda fn, it: pool.imap(partial(_capped, fn, threadpool_limit), it)


def _pool_for(ncores, config):

    ncores = ncores if ncores is not None else config.get('threads')
    if ncores is None or ncores > 1:
        return create_pool(ncores)

    return None


def _field(ell, prime, config):
    if prime:
        return field_for_prime(prime, ell)
    return select_prime_and_root(ell, config['prime_range'])


def paracanonical_setup(g, ell, seed, config, k=None, prime=None, field=None):
    """Seeded curve with a torsion bundle eta on all nodes and L = K (x) eta.

    Curves are redrawn from derive_seed(seed, attempt) until h^0(L) = g-1 and the section basis admits a regular pair.

    Parameters
    ----------
    g : int
    ell : int
        order of eta
    seed : int
    config : dict
    k : int, optional
        twist of the torsion module, validated against `ell`
    prime : int, optional
        fixes the field instead of searching `prime_range`
    field : FieldParams, optional
        an already selected field

    Returns
    -------
    tuple
        (field, curve, eta, L). The accepted seed is stored as curve['seed'].
    """

    if k is not None and not 1 <= k <= ell - 2:
        raise ParameterError(
            'k=%s is outside 1..%s for level %s' % (k, ell - 2, ell))

    field = field or _field(ell, prime, config)

    for attempt in range(config['max_resamples']):
        s = derive_seed(seed, attempt) if attempt else seed
        curve = random_curve(g, field, s)
        eta = torsion_bundle(curve, field)
        L = paracanonical(curve, eta)
        V = section_space(curve, L)
        if V.dim != g - 1:
            continue
        try:
            choose_regular_pair(V, s, config['regular_pair_attempts'])
        except RegularPairError:
            continue

        curve['seed'] = s
        curve.bundles.update(eta=eta, L=L)
        return field, curve, eta, L

    raise RegularPairError('[paracanonical_setup:] no usable curve after %s draws from seed %s.' % (
        config['max_resamples'], seed))


def _linalg_args(config, artinian=False):
    return dict(guard=config['artinian_guard' if artinian else 'feasibility_guard'], blocked_threshold=config['blocked_threshold'], block_size=config['block_size'])


def _trial(compute, index, g, ell, field, seed, config, k=None):
    """run `compute(curve, eta, L)` on the curve of trial `index`; regular pair failures are recorded, not raised"""

    st = time.time()
    try:
        _, curve, eta, L = paracanonical_setup(
            g, ell, derive_seed(seed, index), config, k=k, field=field)
        out = compute(curve, eta, L)
        out['seed'] = curve['seed']
    except RegularPairError as e:
        out = {'seed': derive_seed(seed, index), 'excess': None, 'error': str(e)}

    out['trial'] = index
    out['seconds'] = time.time() - st

    return out


def _compare_paths(dims):
    if len(set(dims.values())) > 1:
        raise RuntimeError(
            '[verify:] direct and artinian paths disagree: %s' % dims)


def _prym_green_trial(index, g, ell, field, seed, path, config, verbose):

    la, lr = _linalg_args(config), _linalg_args(config, artinian=True)

    def compute(curve, eta, L):

        dims = {}
        if g % 2:
            e1 = koszul_dim_ring(curve, L, (g - 3) // 2, 1, verbose=verbose, **la)
            e2 = koszul_dim_ring(curve, L, (g - 7) // 2, 2, verbose=verbose, **la) if g >= 7 else 0
            dims['direct'] = [e1, e2]
            return {'dims': dims, 'excess': e1 + e2, 'parts': [e1, e2]}

        if path in ('artinian', 'both'):
            dims['artinian'] = prym_green_kernel_dim(
                curve, eta, seed=curve['seed'], attempts=config['regular_pair_attempts'], verbose=verbose, **lr)
        if path in ('direct', 'both'):
            dims['direct'] = koszul_dim_ring(curve, L, g // 2 - 2, 1, verbose=verbose, **la)
        _compare_paths(dims)

        excess = list(dims.values())[0]
        out = {'dims': dims, 'excess': excess, 'parts': [excess]}

        if excess and g == config['syzygy_genus']:
            _, gammas = linear_syzygy_space(curve, L)
            out['syzygy_ranks'] = [syzygy_rank(gm, field.p) for gm in gammas]

        return out

    return _trial(compute, index, g, ell, field, seed, config)


def _torsion_trial(index, g, ell, k, field, seed, path, config, verbose):

    la, lr = _linalg_args(config), _linalg_args(config, artinian=True)

    def compute(curve, eta, L):

        dims = {}
        if path in ('artinian', 'both'):
            dims['artinian'] = torsion_module_kernel_dim(
                curve, eta, k, ell, seed=curve['seed'], attempts=config['regular_pair_attempts'], verbose=verbose, **lr)
        if path in ('direct', 'both'):
            dims['direct'] = koszul_dim_twisted(curve, power(eta, k), L, g // 2 - 1, verbose=verbose, **la)
        _compare_paths(dims)

        excess = list(dims.values())[0]
        return {'dims': dims, 'excess': excess, 'parts': [excess]}

    return _trial(compute, index, g, ell, field, seed, config, k)


def canonical_strand(g):
    """the vanishing strand of the eta twist of the canonical ring: (g-1)/2 for odd g, g/2 for even g"""
    return (g - 1) // 2 if g % 2 else g // 2


def _canonical_trial(index, g, ell, field, seed, config, verbose):

    la = _linalg_args(config)

    def compute(curve, eta, L):
        K = canonical_multipliers(curve)
        dim = koszul_dim_twisted(curve, eta, K, canonical_strand(g), verbose=verbose, **la)
        return {'dims': {'direct': dim}, 'excess': dim, 'parts': [dim]}

    return _trial(compute, index, g, ell, field, seed, config)


def aggregate_verdict(excesses):
    """Semicontinuity: one clean trial verifies vanishing, a nonzero value needs every trial to agree.
    """

    done = [e for e in excesses if e is not None]
    if not done:
        return 'error'
    if min(done) == 0:
        return 'verified'
    if len(set(done)) == 1:
        return 'extra_syzygy'

    return 'inconclusive'


EXIT_CODES = {'verified': 0, 'extra_syzygy': 2, 'inconclusive': 2, 'error': 1}


class RunReport(dict):
    """Result of a verification run or experiment. Timing fields live under `timings`.
    """

    @property
    def verdict(self):
        return self['verdict']

    @property
    def exit_code(self):
        return EXIT_CODES[self['verdict']]

    def to_json(self, timings=True):
        doc = dict(self) if timings else {k: v for k, v in self.items() if k != 'timings'}
        return json.dumps(doc, sort_keys=True, indent=2, default=str)

    def summary(self):
        """one row per trial"""

        rows = [{k: v for k, v in t.items() if k not in ('dims', 'parts')} for t in self.get('trials', [])]
        for row, t in zip(rows, self.get('trials', [])):
            for path, d in t.get('dims', {}).items():
                row[path] = d

        return pd.DataFrame(rows)


def _run_trials(trial, trials, pool, verbose):

    st = time.time()
    try:
        results = list(mapper(pool)(trial, range(trials)))
    finally:
        close_pool(pool)
    results.sort(key=lambda r: r['trial'])

    if verbose:
        print('[run_trials:]'.ljust(15, ' ') + ' %s trial(s) done after %ss.' %
              (trials, np.round(time.time() - st, 3)))

    return results


def _finish(report, results, expected, natural, positions, predicted, st):

    for r in results:
        report['timings']['trial_%s' % r['trial']] = r.pop('seconds')

    excesses = [r['excess'] for r in results]
    report['trials'] = results
    report['verdict'] = aggregate_verdict(excesses)
    report['expected'] = expected.to_dict()

    done = [r for r in results if r['excess'] is not None]
    if done:
        best = min(done, key=lambda r: r['excess'])
        observed = natural
        for pos, e in zip(positions, best['parts']):
            observed = with_excess(observed, pos, e)
        report['observed'] = observed.to_dict()
        report['min_excess'] = best['excess']
        report['consistent'] = best['excess'] == predicted
    report['predicted_excess'] = predicted
    report['timings']['total'] = time.time() - st

    return report


def _base_report(command, g, ell, field, seed, trials, path, config, k=None):

    params = {'g': g, 'ell': ell, 'p': field.p, 'r': field.r, 'seed': seed, 'trials': trials, 'path': path}
    if k is not None:
        params['k'] = k

    return RunReport(command=command, parameters=params, config=config, timings={})


def verify_prym_green(g, ell, prime=None, seed=0, trials=None, path='artinian', config=None, ncores=None, verbose=False):
    """Check that the paracanonical curve has a natural resolution.

    Even genus tests K_{g/2-2,1}(C, K (x) eta) = 0 along the artinian or the direct path. Odd genus tests K_{(g-3)/2,1} = 0 and K_{(g-7)/2,2} = 0 directly.

    Returns
    -------
    RunReport
    """

    st = time.time()
    config = config or load_config()
    trials = trials or config['trials']

    if path not in PATHS:
        raise ParameterError('unknown path %s' % path)
    if g < 6:
        raise ParameterError('Prym-Green needs g >= 6, got %s' % g)
    if g % 2:
        path = 'direct'

    field = _field(ell, prime, config)
    report = _base_report('verify prym-green', g, ell,
                          field, seed, trials, path, config)

    trial = partial(_prym_green_trial, g=g, ell=ell, field=field, seed=seed,
                    path=path, config=config, verbose=verbose)
    results = _run_trials(trial, trials, _pool_for(ncores, config), verbose)

    natural = expected_table(g, 'ring')
    positions = [(g - 3) // 2, (g - 5) // 2] if g % 2 else [g // 2 - 2]
    predicted = 1 if (g, ell) == (8, 2) else 0

    return _finish(report, results, natural, natural, positions, predicted, st)


def verify_torsion_bundle(g, ell, k, prime=None, seed=0, trials=None, path='artinian', config=None, ncores=None, verbose=False):
    """Check K_{g/2-1,1}(C; eta^k, K (x) eta) against the torsion bundle prediction, exception included.
    """

    st = time.time()
    config = config or load_config()
    trials = trials or config['trials']

    if path not in PATHS:
        raise ParameterError('unknown path %s' % path)
    if g % 2 or g < 4:
        raise ParameterError('torsion bundles need even g >= 4, got %s' % g)

    field = _field(ell, prime, config)
    exceptional = is_exceptional(g, ell, k)
    report = _base_report('verify torsion-bundle', g, ell,
                          field, seed, trials, path, config, k)
    report['exceptional'] = exceptional

    trial = partial(_torsion_trial, g=g, ell=ell, k=k, field=field, seed=seed,
                    path=path, config=config, verbose=verbose)
    results = _run_trials(trial, trials, _pool_for(ncores, config), verbose)

    expected = expected_table(g, 'torsion', ell, k)
    natural = expected_table(g, 'torsion')

    return _finish(report, results, expected, natural, [g // 2 - 1], int(exceptional), st)


def verify_canonical(g, ell, prime=None, seed=0, trials=None, config=None, ncores=None, verbose=False):
    """Check that the eta twist of the canonical ring has a natural resolution.
    """

    st = time.time()
    config = config or load_config()
    trials = trials or config['trials']

    if g < 4:
        raise ParameterError('need g >= 4, got %s' % g)

    field = _field(ell, prime, config)
    report = _base_report('verify canonical', g, ell,
                          field, seed, trials, 'direct', config)
    report['strand'] = canonical_strand(g)

    trial = partial(_canonical_trial, g=g, ell=ell, field=field,
                    seed=seed, config=config, verbose=verbose)
    results = _run_trials(trial, trials, _pool_for(ncores, config), verbose)

    natural = expected_table(g, 'canonical')
    return _finish(report, results, natural, natural, [canonical_strand(g)], 0, st)


def _g8_sample(index, field, seed, two_torsion, genus):

    s = derive_seed(seed, index)
    curve = random_curve(genus, field, s)

    if two_torsion:
        L = paracanonical(curve, torsion_bundle(curve, field))
    else:
        L = random_bundle(curve, 2 * genus - 2, SplitMix64(derive_seed(s, 1)))

    dim, gammas = linear_syzygy_space(curve, L)

    return {'sample': index, 'seed': s, 'dim': dim, 'ranks': [syzygy_rank(gm, field.p) for gm in gammas]}


def sampling_verdict(hits, rank_counts, samples, p, genus=8, alpha=0.01, share=0.2):
    """Judge a random-bundle sampling run against a hit probability of 1/p.

    The hit count is tested two-sided against Poisson(samples/p) at level `alpha`. Among the syzygies found, both ranks genus-2 and genus-1 must each make up at least `share`.

    Returns
    -------
    tuple
        (verdict, details) where details holds the Poisson tails, the rank shares and the plain window [N/(2p), 2N/p]
    """

    mean = samples / p
    lower, upper = float(sst.poisson.cdf(hits, mean)), float(sst.poisson.sf(hits - 1, mean))
    total = sum(rank_counts.values())
    shares = {str(rk): (rank_counts.get(rk, 0) / total if total else 0.) for rk in (genus - 2, genus - 1)}

    lo, hi = samples / (2 * p), 2 * samples / p
    details = {'mean_hits': mean, 'poisson_tails': [lower, upper], 'rank_shares': shares,
               'window': [lo, hi], 'in_window': bool(lo <= hits <= hi)}

    consistent = min(lower, upper) > alpha / 2
    mixed = all(s >= share for s in shares.values())

    return ('verified' if hits and consistent and mixed else 'inconclusive'), details


def experiment_g8(samples=None, prime=10007, seed=0, two_torsion=False, config=None, ncores=None, verbose=False):
    """Count genus-8 bundles of degree 14 with a linear syzygy among their quadrics, and the ranks of those syzygies.

    Parameters
    ----------
    samples : int, optional
        number of random curves, defaults to the configuration
    prime : int, optional
    seed : int, optional
    two_torsion : bool, optional
        use K (x) eta with eta of order two instead of a random bundle

    Returns
    -------
    RunReport
        'verified' when `sampling_verdict` accepts the hit count and the rank mix. With `two_torsion` every sample is expected to be a hit.
    """

    st = time.time()
    config = config or load_config()
    samples = samples or config['samples']
    genus = config['syzygy_genus']

    field = field_for_prime(prime, 2)
    pool = _pool_for(ncores, config)

    sample = partial(_g8_sample, field=field, seed=seed,
                     two_torsion=two_torsion, genus=genus)
    wrap = tqdm_wrapper(verbose)
    try:
        results = list(wrap(mapper(pool)(sample, range(samples)),
                            total=samples, unit=' sample(s)', dynamic_ncols=True))
    finally:
        close_pool(pool)
    results.sort(key=lambda r: r['sample'])

    hits = [r for r in results if r['dim'] > 0]
    ranks = Counter(rk for r in hits for rk in r['ranks'])

    verdict, details = sampling_verdict(len(hits), ranks, samples, field.p, genus,
                                        config['hit_alpha'], config['rank_share'])
    if two_torsion:
        verdict = 'extra_syzygy' if len(hits) == samples else 'inconclusive'

    return RunReport(command='experiment g8', config=config,
                     parameters={'samples': samples, 'p': field.p, 'seed': seed,
                                 'two_torsion': two_torsion, 'g': genus},
                     hits=len(hits), hit_rate=len(hits) / samples, expected_rate=1 / field.p,
                     rank_counts={str(k): v for k, v in sorted(ranks.items())},
                     hit_samples=[{k: r[k] for k in ('sample', 'seed', 'dim', 'ranks')} for r in hits],
                     statistics=details, verdict=verdict, timings={'total': time.time() - st})


def tqdm_wrapper(verbose):

    if verbose:
        import tqdm
        return tqdm.tqdm

    return lambda x, **kwargs: x
