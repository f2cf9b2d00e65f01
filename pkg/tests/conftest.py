#!/bin/python
# -*- coding: utf-8 -*-

import pytest
from syzlab.ff import FieldParams, select_prime_and_root
from syzlab.curve import NodalRationalCurve
from syzlab.runner import load_config, paracanonical_setup


def pytest_addoption(parser):
    parser.addoption('--runslow', action='store_true', default=False,
                     help='run the heavy verification cases')


def pytest_configure(config):
    config.addinivalue_line('markers', 'slow: heavy verification cases, need --runslow')


def pytest_collection_modifyitems(config, items):

    if config.getoption('--runslow'):
        return

    skip = pytest.mark.skip(reason='needs --runslow')
    for item in items:
        if 'slow' in item.keywords:
            item.add_marker(skip)


@pytest.fixture
def config(monkeypatch):
    monkeypatch.delenv('SYZLAB_THREADS', raising=False)
    return load_config(threads=1)


@pytest.fixture
def field2():
    return select_prime_and_root(2)


@pytest.fixture
def field3():
    return select_prime_and_root(3)


@pytest.fixture
def tiny_curve():
    """genus 2 over F_7 with nodes (0, 1) and (2, 3)"""
    return NodalRationalCurve(2, FieldParams(7, 2, 6), [0, 1, 2, 3])


@pytest.fixture
def setup(config):
    """paracanonical data (field, curve, eta, L) for given genus, level and seed"""

    def make(g, ell, seed=0):
        return paracanonical_setup(g, ell, seed, config)

    return make
