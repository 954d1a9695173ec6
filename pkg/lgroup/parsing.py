# lgroup/parsing.py

"""
Text syntax for weights and grading-group elements.

Weights are written ``p1,p2,p3``.  Elements are signed integer combinations
of the tokens ``x1 x2 x3 c w`` (``w`` is omega), e.g. ``2x2+4x3-c`` or
``-3*w + x1``, or the quadruple ``(l1,l2,l3,l)``.  Whitespace is ignored and
``*`` is optional.
"""

import re

from .exceptions import ElementSyntaxError, InvalidWeightsError
from .grading import WeightTriple

QUADRUPLE_RE = re.compile(r'^\((-?\d+),(-?\d+),(-?\d+),(-?\d+)\)$')
TERM_RE = re.compile(r'([+-]?)(\d*)\*?(x1|x2|x3|c|w)')
ZERO_RE = re.compile(r'^[+-]?0+$')


def parse_weights(text):
    parts = [part.strip() for part in str(text).replace(' ', '').split(',') if part.strip()]
    if len(parts) != 3:
        raise InvalidWeightsError(f"expected three weights 'p1,p2,p3', got {text!r}")
    try:
        values = [int(part) for part in parts]
    except ValueError:
        raise InvalidWeightsError(f"weights must be integers, got {text!r}") from None
    return WeightTriple(*values)


def parse_element(weights, text):
    compact = re.sub(r'\s+', '', str(text))
    if not compact:
        raise ElementSyntaxError("empty element")

    match = QUADRUPLE_RE.match(compact)
    if match:
        return weights.normalize(*(int(group) for group in match.groups()))
    if ZERO_RE.match(compact):
        return weights.zero

    raw = {'x1': 0, 'x2': 0, 'x3': 0, 'c': 0, 'w': 0}
    pos = 0
    while pos < len(compact):
        term = TERM_RE.match(compact, pos)
        if term is None or term.end() == pos:
            raise ElementSyntaxError(f"cannot parse {text!r} at position {pos}")
        sign, digits, token = term.groups()
        if pos > 0 and not sign:
            raise ElementSyntaxError(f"missing '+' or '-' before {token!r} in {text!r}")
        coefficient = int(digits) if digits else 1
        raw[token] += -coefficient if sign == '-' else coefficient
        pos = term.end()

    element = weights.normalize(raw['x1'], raw['x2'], raw['x3'], raw['c'])
    return element + raw['w'] * weights.omega()
