from __future__ import annotations

from fractions import Fraction

import numpy as np
import pytest

from crcodes import codecore as cc
from crcodes import spectra as sp
from crcodes.atlas import hamming_parity, hyperoval_code
from crcodes.errors import DomainError
from crcodes.fieldkit import field

F2 = field(2)


def thm59_code():
    hrep = [[1, 1, 0, 0], [1, 0, 1, 0], [1, 0, 0, 1]]
    fld, H = cc.kronecker_parity(F2, hamming_parity(2, 2), F2, hrep)
    return cc.Code.from_parity_check(fld, H)


def test_hamming_partition(hamming74):
    part = sp.distance_partition(hamming74)
    assert part.mode == "syndrome"
    assert part.cell_counts == (1, 7)
    assert part.sizes == (16, 112)


def test_golay_partition(golay):
    part = sp.distance_partition(golay)
    assert part.cell_counts == (1, 23, 253, 1771)
    assert sum(part.cell_counts) == 2**11


def test_hadamard_partition_cells():
    from crcodes.atlas import hadamard_11_code
    part = sp.distance_partition(hadamard_11_code())
    assert part.mode == "vector"
    # K_l b_l = K_{l+1} c_{l+1} forces these from IA {11,10,3;1,2,9}
    assert part.sizes == (24, 264, 1320, 440)
    assert sum(part.sizes) == 2**11


def test_outer_profile_hamming(hamming74):
    prof = sp.outer_profile(hamming74)
    assert prof.b + 1 == 2
    assert [r.multiplicity for r in prof.rows] == [16, 112]


def test_outer_profile_golay(golay):
    prof = sp.outer_profile(golay)
    assert prof.b == 3  # equals rho: completely regular


def test_outer_profile_thm59_has_extra_rows():
    code = thm59_code()
    prof = sp.outer_profile(code)
    part = sp.distance_partition(code)
    assert part.rho == 3
    assert prof.b > part.rho


def test_external_distance_examples(hamming74, golay):
    assert sp.external_distance(hamming74) == 1
    assert sp.external_distance(golay) == 3
    dual_weights = [i for i, a in enumerate(golay.dual().weight_distribution()) if a and i]
    assert dual_weights == [8, 12, 16]


def test_t_regularity(golay):
    assert sp.t_regularity_degree(golay) == 3
    assert sp.t_regularity_degree(thm59_code()) < 3
    # any distance-invariant code is at least 0-regular
    rep = cc.Code.from_codewords(F2, [(0, 0, 0), (1, 1, 1)])
    assert sp.t_regularity_degree(rep) >= 0


def test_is_completely_regular_examples(golay, half_golay):
    cr, ia = sp.is_completely_regular(golay)
    assert cr and ia == sp.IntersectionArray(23, 2, (23, 22, 21), (1, 2, 3))
    cr, ia = sp.is_completely_regular(half_golay)
    assert cr
    assert ia.bs == (23, 22, 21, 20, 3, 2, 1)
    assert ia.cs == (1, 2, 3, 20, 21, 22, 23)
    dpg = cc.puncture(cc.puncture(golay, 0), 0)
    cr, _ = sp.is_completely_regular(cc.extend(dpg))
    assert not cr


def test_packing_parameters_examples(golay):
    from crcodes.atlas import two_zero_cyclic
    bch = two_zero_cyclic(5, 3)
    betas = sp.packing_parameters(bch)
    assert betas.betas == (1, 1, Fraction(1, 5), Fraction(1, 5))
    perfect = sp.packing_parameters(cc.binary_golay())
    assert perfect.betas == (1, 1, 1, 1)
    dpg = cc.puncture(cc.puncture(golay, 0), 0)
    assert sp.packing_parameters(cc.extend(dpg)) is None


def test_classification_flags(hamming74, golay):
    cls = sp.classify(hamming74)
    assert cls.perfect and cls.completely_regular
    assert cls.e == cls.s == 1
    cls = sp.classify(thm59_code())
    assert cls.up_wide and not cls.completely_regular
    assert cls.rho == cls.s == 3 and cls.b > 3


def test_classification_hadamard():
    from crcodes.atlas import hadamard_11_code
    cls = sp.classify(hadamard_11_code())
    assert cls.completely_regular and cls.up_gvt and cls.up_narrow
    assert cls.s == cls.e + 1 == 3
    assert not cls.perfect and cls.quasi_perfect


def test_classify_json_shape(hamming74):
    doc = sp.classify(hamming74).as_json_dict()
    assert set(doc) >= {"e", "d", "rho", "s", "b", "flags", "ia", "beta"}
    assert doc["beta"] == ["1", "1"]
    assert doc["ia"] == [[7], [1]]


def test_rank_of_outer_distribution(golay, hamming74):
    from crcodes import fieldkit as fk
    for code in (golay, hamming74, thm59_code()):
        prof = sp.outer_profile(code)
        s = sp.external_distance(code)
        assert fk.rat_rank(prof.distinct_row_matrix()) == s + 1


def test_up_extension_criterion_bch():
    from crcodes.atlas import two_zero_cyclic
    bch = two_zero_cyclic(5, 3)
    betas = sp.packing_parameters(bch)
    ok, gam = sp.up_extension_criterion(betas, 31)
    assert ok
    direct = sp.packing_parameters(cc.extend(bch))
    assert gam.betas == direct.betas


def test_up_extension_criterion_counterexample(golay):
    dpg = cc.puncture(cc.puncture(golay, 0), 0)
    betas = sp.packing_parameters(dpg)
    ok, gam = sp.up_extension_criterion(betas, 21)
    assert not ok and gam is None


def test_up_extension_criterion_perfect():
    ok, gam = sp.up_extension_criterion(sp.PackingParameters((Fraction(1), Fraction(1))), 7)
    assert ok
    assert gam.betas == (1, 1, Fraction(1, 4))


def test_up_extension_criterion_binary_only():
    with pytest.raises(DomainError):
        sp.up_extension_criterion(sp.PackingParameters((Fraction(1), Fraction(1))), 7, q=3)


def test_self_complementary_extension_block(golay, extended_golay):
    assert sp.self_complementary_extension_block(extended_golay)
    assert not sp.self_complementary_extension_block(golay)


def test_reversed_ia_of_covering_cell():
    # for a non-self-complementary binary CR code, C(rho) = C + 1 and its
    # intersection array is the reversal of the code's
    from crcodes.atlas import half_hamming_code
    code = half_hamming_code(4, (0, 1))
    assert not cc.is_self_complementary(code)
    cr, ia = sp.is_completely_regular(code)
    assert cr
    cover = cc.translate(code, (1,) * code.n)
    cr2, ia2 = sp.is_completely_regular(cover)
    assert cr2
    assert ia2 == ia.reversed()
    # and the cell really is the translate
    part = sp.distance_partition(code, mode="vector")
    cell = {int(v) for v in np.nonzero(part.labels == part.rho)[0]}
    translate_idx = {part.space.encode(w) for w in cover.words()}
    assert cell == translate_idx


def test_hyperoval_code_is_cr():
    cr, ia = sp.is_completely_regular(hyperoval_code(4))
    assert cr and ia == sp.IntersectionArray(6, 4, (18, 15), (1, 6))


def test_verdict_consistency_is_enforced(golay):
    # both CR tests run and agree on every call; a disagreement would raise
    sp.is_completely_regular(golay)
    sp.is_completely_regular(thm59_code())


def test_kronecker_counterexample_external_distance():
    # mixed-alphabet Kronecker products are rejected outright
    from crcodes.errors import DomainError as DE
    with pytest.raises(DE):
        cc.kronecker_parity(field(4), [[1, 2]], field(8), [[1, 3]])
