#!/bin/python
# -*- coding: utf-8 -*-

import json
import pytest
from syzlab.cli import main


@pytest.fixture(autouse=True)
def single_process(monkeypatch):
    monkeypatch.setenv('SYZLAB_THREADS', '1')


def test_betti_command(capsys):

    assert main(['betti', '--genus', '8']) == 0
    out = capsys.readouterr().out
    assert ' total: 1 7 35 56 35 8' in out
    assert '     2: . . 35 56 35 8' in out


def test_betti_torsion_json(tmp_path):

    path = tmp_path / 'table.json'
    assert main(['betti', '--genus', '10', '--level', '3', '--kind', 'torsion', '--k', '1', '--quiet', '--json', str(path)]) == 0
    doc = json.loads(path.read_text())
    assert doc['kind'] == 'torsion'
    assert doc['rows'][0][4] == 1


def test_verify_writes_report(tmp_path, capsys):

    path = tmp_path / 'report.json'
    code = main(['verify', 'prym-green', '--genus', '10', '--level', '3', '--trials', '1', '--threads', '1', '--json', str(path)])
    assert code == 0
    out = capsys.readouterr().out
    assert 'verdict: verified' in out
    assert ' total: 1 18 42 126 210 162 63 10' in out

    doc = json.loads(path.read_text())
    assert doc['verdict'] == 'verified'
    assert doc['config']['trials'] == 3
    assert doc['parameters']['seed'] == 0


def test_extra_syzygy_exit_code(capsys):

    code = main(['verify', 'prym-green', '--genus', '8', '--level', '2', '--trials', '1', '--threads', '1', '--quiet'])
    assert code == 2
    out = capsys.readouterr().out
    assert 'verdict: extra_syzygy' in out
    assert 'total:' not in out


def test_parameter_errors_exit_one(capsys):

    assert main(['verify', 'torsion-bundle', '--genus', '9', '--level', '3', '--k', '1']) == 1
    assert 'syzlab: error:' in capsys.readouterr().err
    assert main(['verify', 'prym-green', '--genus', '8']) == 1
    assert main(['divclass']) == 1


def test_feasibility_refusal(tmp_path, capsys):

    cfg = tmp_path / 'small.yaml'
    cfg.write_text('feasibility_guard: 100\n')
    code = main(['verify', 'prym-green', '--genus', '6', '--level', '3', '--trials', '1', '--path', 'direct', '--config', str(cfg)])
    assert code == 1
    assert 'entries' in capsys.readouterr().err


def test_divclass_commands(tmp_path, capsys):

    assert main(['divclass', 'Zvirt', '--genus', '8', '--level', '2']) == 0
    assert '27*lambda' in capsys.readouterr().out

    path = tmp_path / 'combo.json'
    assert main(['divclass', '--combo-odd', '6', '--combo-g12', '--json', str(path)]) == 0
    out = capsys.readouterr().out
    assert '(big)' in out
    assert 'target reproduced: True' in out
    doc = json.loads(path.read_text())
    assert doc['combo_g12']['reproduces_target'] is True

    assert main(['divclass', 'Dvirt', '--genus', '4', '--level', '3', '--derive']) == 0
