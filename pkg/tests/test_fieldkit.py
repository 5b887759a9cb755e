from __future__ import annotations

import math
from fractions import Fraction

import pytest

from crcodes import fieldkit as fk
from crcodes.errors import DomainError


def test_gf2_characteristic():
    f = fk.field(2)
    assert f.add(1, 1) == 0


def test_gf4_generator_square():
    # alpha * alpha = alpha + 1 under the canonical modulus x^2 + x + 1
    f = fk.field(4)
    assert f.modulus == (1, 1, 1)
    assert f.mul(2, 2) == 3


def test_gf3_inverse():
    assert fk.field(3).inv(2) == 2


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9, 11, 13, 16])
def test_field_axioms_exhaustive(q):
    f = fk.field(q)
    elements = range(q)
    for a in elements:
        assert f.add(a, 0) == a
        assert f.mul(a, 1) == a
        assert f.add(a, f.neg(a)) == 0
        if a != 0:
            assert f.mul(a, f.inv(a)) == 1
    for a in elements:
        for b in elements:
            assert f.add(a, b) == f.add(b, a)
            assert f.mul(a, b) == f.mul(b, a)
            for c in elements:
                assert f.add(f.add(a, b), c) == f.add(a, f.add(b, c))
                assert f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c))
                assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))


def test_inversion_of_zero_rejected():
    with pytest.raises(DomainError):
        fk.field(5).inv(0)


def test_subfield_embedding_is_homomorphism():
    small, big = fk.field(4), fk.field(16)
    emb = small.subfield_embedding(big)
    for a in range(4):
        for b in range(4):
            assert emb[small.add(a, b)] == big.add(int(emb[a]), int(emb[b]))
            assert emb[small.mul(a, b)] == big.mul(int(emb[a]), int(emb[b]))


def test_incompatible_embedding_rejected():
    with pytest.raises(DomainError):
        fk.field(4).subfield_embedding(fk.field(8))


def test_cyclotomic_coset_examples():
    assert fk.cyclotomic_coset(1, 7, 2) == {1, 2, 4}
    assert fk.cyclotomic_coset(3, 7, 2) == {3, 6, 5}
    assert fk.cyclotomic_coset(5, 15, 2) == {5, 10}


def test_cyclotomic_coset_gcd_guard():
    with pytest.raises(DomainError):
        fk.cyclotomic_coset(1, 6, 2)


@pytest.mark.parametrize("n,q", [(7, 2), (15, 2), (8, 3), (13, 3)])
def test_cyclotomic_cosets_partition(n, q):
    seen = set()
    for ell in range(n):
        coset = fk.cyclotomic_coset(ell, n, q)
        if ell == min(coset):
            assert not (seen & coset)
            seen |= coset
    assert seen == set(range(n))


def test_minimal_polynomial_examples():
    f8 = fk.field(8)
    assert fk.minimal_polynomial(1, 7, f8) == (1, 1, 0, 1)  # x^3 + x + 1
    assert fk.minimal_polynomial(3, 7, f8) == (1, 0, 1, 1)  # x^3 + x^2 + 1
    assert fk.minimal_polynomial(0, 7, f8) == (1, 1)  # x + 1


@pytest.mark.parametrize("n,qm", [(7, 8), (15, 16), (5, 16)])
def test_minimal_polynomial_divides_xn_minus_1(n, qm):
    f = fk.field(qm)
    p = f.p
    # multiply all minimal polynomials of coset leaders; product must be x^n - 1
    prod = (1,)
    for ell in range(n):
        coset = fk.cyclotomic_coset(ell, n, p)
        if ell == min(coset):
            prod = fk._polymul_modp(prod, fk.minimal_polynomial(ell, n, f), p)
    target = tuple([p - 1] + [0] * (n - 1) + [1])
    assert prod == target


def test_generalized_binomial():
    assert fk.binomial(5, 2) == 10
    assert fk.binomial(Fraction(7, 3), 0) == 1
    assert fk.binomial(Fraction(3, 2), 2) == Fraction(3, 8)
    assert fk.binomial(2, 5) == 0  # integer a with 0 <= a < i


def test_krawtchouk_values():
    assert fk.krawtchouk(0, 9, 2, Fraction(17, 5)) == 1
    assert fk.krawtchouk(1, 7, 2, 1) == 5
    assert fk.krawtchouk(2, 7, 2, 1) == 9


@pytest.mark.parametrize("n", range(1, 11))
@pytest.mark.parametrize("q", [2, 3, 4])
def test_krawtchouk_orthogonality(n, q):
    tab = fk.krawtchouk_table(n, q)
    for r in range(n + 1):
        for s in range(r, n + 1):
            total = sum(math.comb(n, x) * (q - 1) ** x * tab[r][x] * tab[s][x]
                        for x in range(n + 1))
            expect = q**n * (q - 1) ** r * math.comb(n, r) if r == s else 0
            assert total == expect


def test_krawtchouk_table_matches_definition():
    tab = fk.krawtchouk_table(12, 3)
    for r in (0, 1, 5, 12):
        for x in (0, 3, 12):
            assert Fraction(tab[r][x]) == fk.krawtchouk(r, 12, 3, x)


def test_rational_linear_algebra():
    sol, unique = fk.rat_solve([[1, 2], [3, 4]], [5, 6])
    assert unique and sol == [Fraction(-4), Fraction(9, 2)]
    sol, unique = fk.rat_solve([[1, 1], [2, 2]], [1, 3])
    assert sol is None
    assert fk.rat_rank([[1, 2], [2, 4], [0, 1]]) == 2


def test_gf_nullspace_roundtrip():
    f = fk.field(4)
    H = [[1, 2, 3, 0], [0, 1, 1, 1]]
    basis = fk.gf_nullspace(f, H)
    assert len(basis) == 2
    for vec in basis:
        for row in H:
            assert f.dot(row, vec) == 0
