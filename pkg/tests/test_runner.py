#!/bin/python
# -*- coding: utf-8 -*-

import json
import pytest
from syzlab.ff import ParameterError
from syzlab.runner import (RunReport, _run_trials, aggregate_verdict, canonical_strand, experiment_g8, load_config, mapper,
                           paracanonical_setup, sampling_verdict, verify_canonical, verify_prym_green, verify_torsion_bundle)


def test_defaults(monkeypatch):

    monkeypatch.delenv('SYZLAB_THREADS', raising=False)
    config = load_config()
    assert config['prime_range'] == [10001, 29999]
    assert config['trials'] == 3
    assert config['feasibility_guard'] == 50000000
    assert config['threads'] is None


def test_config_layers(tmp_path, monkeypatch):

    user = tmp_path / 'user.yaml'
    user.write_text('trials: 5\nthreads: 2\n')
    monkeypatch.setenv('SYZLAB_THREADS', '3')

    config = load_config(str(user), trials=None, block_size=64)
    assert config['trials'] == 5
    assert config['threads'] == 3
    assert config['block_size'] == 64

    user.write_text('bogus: 1\n')
    with pytest.raises(ParameterError):
        load_config(str(user))


def test_verdicts():

    assert aggregate_verdict([0, 1, 1]) == 'verified'
    assert aggregate_verdict([1, 1, None]) == 'extra_syzygy'
    assert aggregate_verdict([1, 2]) == 'inconclusive'
    assert aggregate_verdict([None, None]) == 'error'

    codes = [RunReport(verdict=v).exit_code for v in ('verified', 'extra_syzygy', 'inconclusive', 'error')]
    assert codes == [0, 2, 2, 1]


def test_setup_is_seeded(config):

    a = paracanonical_setup(8, 3, 17, config)
    b = paracanonical_setup(8, 3, 17, config)
    assert a[0] == b[0]
    assert (a[1].nodes == b[1].nodes).all()
    assert a[3] == b[3]
    with pytest.raises(ParameterError):
        paracanonical_setup(8, 3, 17, config, k=2)


def test_genus_ten_run(config):

    rep = verify_prym_green(10, 3, trials=1, config=config)
    assert rep.verdict == 'verified' and rep.exit_code == 0
    assert rep['observed']['rows'][1][:4] == [0, 18, 42, 0]
    assert rep['observed']['rows'][2][3:] == [126, 210, 162, 63, 10]
    assert rep['parameters']['p'] == 10009
    assert rep['consistent']


def test_genus_eight_level_two_run(config):

    rep = verify_prym_green(8, 2, trials=2, path='both', config=config)
    assert rep.verdict == 'extra_syzygy' and rep.exit_code == 2
    assert rep['observed']['totals'] == [1, 8, 36, 56, 35, 8]
    assert all(t['syzygy_ranks'] == [6] for t in rep['trials'])
    assert all(t['dims']['artinian'] == t['dims']['direct'] == 1 for t in rep['trials'])
    assert rep['consistent']


def test_reports_are_reproducible(config):

    a = verify_prym_green(6, 3, seed=5, trials=2, config=config)
    b = verify_prym_green(6, 3, seed=5, trials=2, config=config)
    assert a.to_json(timings=False) == b.to_json(timings=False)
    assert 'timings' in json.loads(a.to_json())
    assert 'seconds' not in json.dumps(a['trials'])
    assert len(a.summary()) == 2


def test_odd_genus_uses_direct_path(config):

    rep = verify_prym_green(7, 3, trials=1, config=config)
    assert rep['parameters']['path'] == 'direct'
    assert rep.verdict == 'verified'
    assert rep['trials'][0]['dims']['direct'] == [0, 0]


def test_torsion_runs(config):

    rep = verify_torsion_bundle(10, 3, 1, trials=2, config=config)
    assert rep['exceptional']
    assert rep.verdict == 'extra_syzygy'
    assert rep['consistent']
    assert rep['observed'] == rep['expected']

    rep = verify_torsion_bundle(8, 3, 1, trials=1, path='both', config=config)
    assert rep.verdict == 'verified'

    with pytest.raises(ParameterError):
        verify_torsion_bundle(9, 3, 1, config=config)


@pytest.mark.parametrize('g', [5, 7, 9])
@pytest.mark.parametrize('ell', [2, 3])
def test_canonical_twist(config, g, ell):

    rep = verify_canonical(g, ell, trials=5, config=config)
    assert rep['strand'] == (g - 1) // 2
    assert rep.verdict == 'verified'


def test_canonical_strand():
    assert [canonical_strand(g) for g in (8, 9, 10, 11)] == [4, 4, 5, 5]


@pytest.mark.slow
@pytest.mark.parametrize('ell', [2, 3])
def test_canonical_twist_genus_eleven(config, ell):
    assert verify_canonical(11, ell, trials=5, config=config).verdict == 'verified'


def test_artinian_path_ignores_the_direct_guard(config):

    rep = verify_prym_green(8, 3, trials=1, config=dict(config, feasibility_guard=10))
    assert rep.verdict == 'verified'
    assert rep['trials'][0]['dims'] == {'artinian': 0}


class ListPool(object):

    def __init__(self):
        self.calls = []

    def imap(self, fn, it):
        return map(fn, it)

    def close(self):
        self.calls.append('close')

    def join(self):
        self.calls.append('join')

    def clear(self):
        self.calls.append('clear')


def test_pools_are_closed_after_the_trials():

    pool = ListPool()
    results = _run_trials(lambda i: {'trial': i}, 3, pool, False)
    assert [r['trial'] for r in results] == [0, 1, 2]
    assert pool.calls == ['close', 'join', 'clear']
    assert mapper(None) is map


def test_sampling_verdict():

    verdict, stats = sampling_verdict(5, {6: 2, 7: 3}, 20000, 10007)
    assert verdict == 'verified'
    assert not stats['in_window']
    assert stats['rank_shares'] == {'6': 0.4, '7': 0.6}

    assert sampling_verdict(2, {6: 1, 7: 1}, 20000, 10007)[1]['in_window']
    # one rank only, no hits, far too many hits
    assert sampling_verdict(5, {7: 5}, 20000, 10007)[0] == 'inconclusive'
    assert sampling_verdict(0, {}, 20000, 10007)[0] == 'inconclusive'
    assert sampling_verdict(12, {6: 6, 7: 6}, 20000, 10007)[0] == 'inconclusive'


def test_two_torsion_experiment(config):

    rep = experiment_g8(samples=6, seed=1, two_torsion=True, config=config)
    assert rep['hits'] == 6
    assert rep['rank_counts'] == {'6': 6}
    assert rep.verdict == 'extra_syzygy'


@pytest.mark.slow
def test_sampling_experiment(config):

    # seed 0 gives 5 hits against a Poisson mean of 2.0; the tail P(X >= 5) is about 0.05
    rep = experiment_g8(samples=20000, prime=10007, config=dict(config, threads=None))
    assert rep['hits'] == 5
    assert rep['rank_counts'] == {'6': 2, '7': 3}
    assert not rep['statistics']['in_window']
    assert rep.verdict == 'verified'
