from __future__ import annotations

import json

import pytest

from crcodes import codecore as cc
from crcodes.errors import DomainError, EmptyCodeError, FormatError
from crcodes.fieldkit import field

F2 = field(2)
F3 = field(3)
F4 = field(4)


def test_even_weight_code_from_parity():
    code = cc.Code.from_parity_check(F2, [[1, 1, 1]])
    assert (code.n, code.k) == (3, 2)
    assert code.minimum_distance() == 2


def test_hamming_from_parity(hamming74):
    assert hamming74.size == 16
    assert hamming74.minimum_distance() == 3
    assert hamming74.weight_distribution() == (1, 0, 0, 7, 7, 0, 0, 1)


def test_repetition_from_codewords():
    rep = cc.Code.from_codewords(F2, [(0, 0, 0), (1, 1, 1)])
    assert rep.minimum_distance() == 3


def test_inconsistent_rows_rejected():
    with pytest.raises(FormatError):
        cc.Code.from_parity_check(F2, [[1, 1], [1, 1, 1]])


def test_rank_deficient_parity_reported():
    code = cc.Code.from_parity_check(F2, [[1, 1, 0], [1, 1, 0]])
    assert code.rank_deficient_input
    assert code.k == 2


def test_golay_constants(golay, ternary_golay):
    assert golay.minimum_distance() == 7
    assert golay.covering_radius() == 3
    assert golay.weight_distribution()[7] == 253
    assert ternary_golay.minimum_distance() == 5
    assert ternary_golay.covering_radius() == 2


def test_even_code_covering_radius():
    code = cc.Code.from_parity_check(F2, [[1] * 6])
    assert code.minimum_distance() == 2
    assert code.covering_radius() == 1


def test_extend_examples(hamming74, golay, ternary_golay):
    assert cc.extend(hamming74).minimum_distance() == 4
    assert cc.extend(golay).minimum_distance() == 8
    assert cc.extend(ternary_golay).minimum_distance() == 6


def test_extend_preserves_size(hamming74, ternary_golay):
    assert cc.extend(hamming74).size == hamming74.size
    assert cc.extend(ternary_golay).size == ternary_golay.size


def test_puncture_extend_roundtrip(hamming74, golay, ternary_golay):
    for code in (hamming74, golay, ternary_golay):
        back = cc.puncture(cc.extend(code), code.n)
        assert back == code


def test_puncture_golay(golay):
    punct = cc.puncture(golay, 0)
    assert (punct.n, punct.k, punct.minimum_distance()) == (22, 12, 6)
    assert punct.covering_radius() == 3
    assert not punct.collapsed


def test_puncture_collapse_flag():
    code = cc.Code.from_codewords(F2, [(0, 0), (0, 1)])
    punct = cc.puncture(code, 1)
    assert punct.collapsed
    assert punct.size == 1


def test_punctured_half_golay_weight_table(half_golay):
    wd = cc.puncture(half_golay, 0).weight_distribution()
    assert (wd[7], wd[8], wd[11], wd[12], wd[15], wd[16]) == (176, 330, 672, 616, 176, 77)


def test_shorten(hamming74):
    short = cc.shorten(hamming74, 0)
    assert (short.n, short.k, short.minimum_distance()) == (6, 3, 3)


def test_s_shorten_stays_linear(extended_golay):
    s7 = cc.s_shorten(extended_golay, [(0, 0), (1, 1)], (0, 1))
    assert s7.is_linear
    assert (s7.n, s7.k, s7.minimum_distance()) == (22, 11, 6)
    s8 = cc.s_shorten(extended_golay, [(0, 0, 0), (1, 1, 1)], (0, 1, 2))
    assert (s8.n, s8.k, s8.minimum_distance()) == (21, 10, 5)
    assert s8.covering_radius() == 6


def test_s_shorten_nonlinear_patterns():
    even = cc.Code.from_parity_check(F2, [[1, 1, 1, 1]])
    out = cc.s_shorten(even, [(0, 1), (1, 0)], (0, 1))
    assert not out.is_linear
    assert out.size == 4


def test_s_shorten_empty():
    rep = cc.Code.from_codewords(F2, [(0, 0, 0), (1, 1, 1)])
    with pytest.raises(EmptyCodeError):
        cc.s_shorten(rep, [(0, 1)], (0, 1))


def test_tau_transform_examples(golay):
    even4 = cc.Code.from_parity_check(F2, [[1, 1, 1, 1]])
    for i in range(4):
        assert cc.tau_transform(even4, i) == even4  # even words have parity 0
    rep = cc.Code.from_codewords(F2, [(0, 0, 0), (1, 1, 1)])
    assert cc.tau_transform(rep, 0) == rep
    tau_golay = cc.tau_transform(golay, 0)
    assert tau_golay.weight_distribution() == golay.weight_distribution()


def test_tau_requires_binary(ternary_golay):
    with pytest.raises(DomainError):
        cc.tau_transform(ternary_golay, 0)


def test_direct_sum(hamming74):
    double = cc.direct_sum([hamming74, hamming74])
    assert (double.n, double.k, double.minimum_distance()) == (14, 8, 3)
    assert double.covering_radius() == 2
    assert cc.direct_sum([hamming74]) is hamming74
    rep = cc.Code.from_codewords(F2, [(0, 0, 0), (1, 1, 1)])
    rep2 = cc.direct_sum([rep, rep])
    assert rep2.size == 4 and rep2.minimum_distance() == 3
    assert rep2.covering_radius() == 2


def test_direct_sum_field_mismatch(hamming74, ternary_golay):
    with pytest.raises(DomainError):
        cc.direct_sum([hamming74, ternary_golay])


def test_direct_sum_min_distance_rule(hamming74):
    even = cc.Code.from_parity_check(F2, [[1, 1, 1]])
    both = cc.direct_sum([hamming74, even])
    assert both.minimum_distance() == min(hamming74.minimum_distance(), 2)


def test_lift(hamming74):
    lifted = cc.lift(F2, [list(r) for r in hamming74.H], 2)
    assert lifted.field.q == 4
    assert (lifted.n, lifted.k, lifted.minimum_distance()) == (7, 4, 3)
    assert lifted.covering_radius() == 2


def test_kronecker_parity():
    H = [[1, 0, 1], [0, 1, 1]]
    fld, HK = cc.kronecker_parity(F2, H, F2, H)
    code = cc.Code.from_parity_check(fld, HK)
    assert (code.n, code.k, code.minimum_distance()) == (9, 5, 3)
    assert code.covering_radius() == 2
    # identity block leaves the parity check unchanged
    fld, HK = cc.kronecker_parity(F2, [[1]], F2, H)
    assert HK == H


def test_kronecker_incomparable_fields():
    with pytest.raises(DomainError):
        cc.kronecker_parity(F4, [[1]], field(8), [[1]])


def test_self_complementary(hamming74, extended_golay):
    assert cc.is_self_complementary(hamming74)
    assert cc.is_self_complementary(extended_golay)
    # binomial code on weight-2 columns of even m is non-self-complementary
    from crcodes.atlas import binomial_code
    assert not cc.is_self_complementary(binomial_code(6, 2))


def test_union_with_cover(half_golay, golay, extended_golay):
    assert cc.union_with_cover(half_golay) == golay
    with pytest.raises(DomainError):
        cc.union_with_cover(extended_golay)  # self-complementary
    not_cr = cc.Code.from_codewords(F2, [(0, 0, 0), (1, 1, 0)])
    with pytest.raises(DomainError):
        cc.union_with_cover(not_cr)


def test_dual(hamming74):
    simplex = hamming74.dual()
    assert simplex.weight_distribution() == (1, 0, 0, 0, 7, 0, 0, 0)
    assert simplex.dual() == hamming74
    full = cc.Code.from_generator(F2, [[1, 0], [0, 1]])
    assert full.dual().size == 1


def test_dual_of_explicit_rejected():
    rep = cc.Code.from_codewords(F2, [(0, 0), (1, 1)])
    with pytest.raises(DomainError):
        rep.dual()


def test_lifted_tetracode_self_dual():
    from crcodes.atlas import hamming_parity
    lifted = cc.lift(F3, hamming_parity(3, 2), 2)
    assert lifted.dual() == lifted


def test_distance_invariance(nordstrom_robinson):
    nr15, _ = nordstrom_robinson
    assert nr15.is_distance_invariant()
    lopsided = cc.Code.from_codewords(F2, [(0, 0, 0), (1, 1, 0), (1, 0, 0)])
    assert not lopsided.is_distance_invariant()


def test_json_roundtrip(tmp_path, hamming74, nordstrom_robinson):
    path = tmp_path / "ham.json"
    cc.save_code(hamming74, path)
    assert cc.load_code(path) == hamming74
    nr15, _ = nordstrom_robinson
    path2 = tmp_path / "nr.json"
    cc.save_code(nr15, path2)
    assert cc.load_code(path2) == nr15


def test_json_reader_accepts_generator_only(tmp_path, hamming74):
    doc = cc.to_json_dict(hamming74)
    del doc["parity"]
    path = tmp_path / "gen_only.json"
    path.write_text(json.dumps(doc))
    assert cc.load_code(path) == hamming74


def test_json_malformed(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{not json")
    with pytest.raises(FormatError) as err:
        cc.load_code(path)
    assert "line" in str(err.value)


def test_macwilliams_agrees_with_enumeration(hamming74):
    wd = hamming74.weight_distribution()
    dual_wd = cc.macwilliams_transform(wd, 7, 2)
    assert dual_wd == hamming74.dual().weight_distribution()
