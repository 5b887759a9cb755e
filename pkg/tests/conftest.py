from __future__ import annotations

import itertools

import pytest

from crcodes import codecore as cc
from crcodes.fieldkit import field


@pytest.fixture(scope="session")
def hamming74():
    H = [[0, 0, 0, 1, 1, 1, 1], [0, 1, 1, 0, 0, 1, 1], [1, 0, 1, 0, 1, 0, 1]]
    return cc.Code.from_parity_check(field(2), H)


@pytest.fixture(scope="session")
def golay():
    return cc.binary_golay()


@pytest.fixture(scope="session")
def ternary_golay():
    return cc.ternary_golay()


@pytest.fixture(scope="session")
def extended_golay(golay):
    return cc.extend(golay)


@pytest.fixture(scope="session")
def half_golay(golay):
    return cc.even_half(golay)


def build_nordstrom_robinson() -> tuple[cc.Code, cc.Code]:
    """(15,256,5) and (16,256,6) codes via the Gray map of the extended
    cyclic self-dual length-8 code over Z4 (generator x^3 + 2x^2 + x + 3).

    This is a test fixture standing in for a user-supplied Preparata-like
    codeword file; the toolkit itself has no builder for these.
    """
    g = [3, 1, 2, 1]
    rows = []
    for shift in range(4):
        row = [0] * 7
        for i, coeff in enumerate(g):
            row[shift + i] = coeff
        rows.append(row)
    words = set()
    for coeffs in itertools.product(range(4), repeat=4):
        w = [0] * 7
        for c, row in zip(coeffs, rows):
            w = [(a + c * b) % 4 for a, b in zip(w, row)]
        words.add(tuple(w))
    assert len(words) == 256
    extended = [w + ((-sum(w)) % 4,) for w in sorted(words)]
    gray = {0: (0, 0), 1: (0, 1), 2: (1, 1), 3: (1, 0)}
    binary = [sum((gray[v] for v in w), ()) for w in extended]
    nr16 = cc.Code.from_codewords(field(2), binary)
    nr15 = cc.puncture(nr16, 15)
    return nr15, nr16


@pytest.fixture(scope="session")
def nordstrom_robinson():
    return build_nordstrom_robinson()
