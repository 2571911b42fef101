"""Brute-force weighted model count by enumerating every assignment."""

import math

import numpy as np

from .exceptions import TooManyVariables

MAX_VARS = 25
_CHUNK_BITS = 16


def brute_force_count(formula, weights, max_vars=MAX_VARS):
    """Sum the weight of every satisfying assignment.

    Assignments are enumerated in binary-counting order (bit ``x - 1`` set
    means ``x`` is true) and summed with ``math.fsum`` chunk by chunk.
    """
    n = formula.num_vars
    if n > max_vars:
        raise TooManyVariables(f"{n} variables exceeds the oracle limit of {max_vars}")
    masks = []
    for c in formula.clauses:
        pos = neg = 0
        for l in c.literals:
            if l > 0:
                pos |= 1 << (l - 1)
            else:
                neg |= 1 << (-l - 1)
        masks.append((pos, neg))

    total = 2 ** n
    chunk = min(total, 2 ** _CHUNK_BITS)
    parts = []
    for base in range(0, total, chunk):
        tau = np.arange(base, base + chunk, dtype=np.int64)
        sat = np.ones(chunk, dtype=bool)
        for pos, neg in masks:
            sat &= ((tau & pos) != 0) | ((~tau & neg) != 0)
        w = np.ones(chunk, dtype=np.float64)
        for x in range(1, n + 1):
            bit = (tau >> (x - 1)) & 1
            w *= np.where(bit == 1, weights.pos[x], weights.neg[x])
        parts.append(math.fsum(w[sat].tolist()))
    return math.fsum(parts)
