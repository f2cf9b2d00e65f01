#!/bin/python
# -*- coding: utf-8 -*-

import logging
import os
from .ff import FieldParams, ParameterError, select_prime_and_root
from .curve import NodalRationalCurve, random_curve, section_space
from .betti import BettiTable, expected_table, render_table
from .divclass import DivisorClass, class_formula

logging.basicConfig(level=logging.INFO)

pth = os.path.dirname(__file__)

default_config = os.path.join(pth, 'examples', 'defaults.yaml')
