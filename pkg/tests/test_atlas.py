from __future__ import annotations

import json

import pytest

from crcodes import atlas
from crcodes import codecore as cc
from crcodes import spectra as sp
from crcodes.errors import CatalogError, ResourceError
from crcodes.fieldkit import field
from crcodes.spectra import IntersectionArray

from conftest import build_nordstrom_robinson


def test_catalog_size():
    feasible = [(eid, params) for eid, params in atlas.REGRESSION_SET]
    assert len(feasible) >= 30
    ids = {eid for eid, _ in feasible}
    for required in [f"S.{i}" for i in range(1, 28)] + [
            "F.1", "F.2", "F.3", "F.7", "F.8", "F.16", "F.20", "F.21",
            "F.24", "F.25", "F.30", "F.33", "F.34", "F.35"]:
        assert required in ids, f"{required} missing from the regression set"


def test_build_golay():
    code, expected = atlas.build("S.1")
    assert expected == IntersectionArray(23, 2, (23, 22, 21), (1, 2, 3))
    cr, ia = sp.is_completely_regular(code)
    assert cr and ia == expected


def test_expected_ia_anchors():
    assert atlas.expected_ia("F.20", {"m": 2}) == IntersectionArray(
        31, 2, (31, 30, 17), (1, 2, 15))
    assert atlas.expected_ia("S.22") == IntersectionArray(15, 2, (15, 12, 1), (1, 4, 15))
    assert atlas.expected_ia("F.24", {"q": 2, "m": 3, "r": 2}) == IntersectionArray(
        7, 4, (21, 12), (1, 6))
    assert atlas.expected_ia("F.24", {"q": 4, "m": 3, "r": 2}).bs == (315, 240)
    assert atlas.expected_ia("F.24", {"q": 2, "m": 6, "r": 2}).bs == (189, 124)
    assert atlas.expected_ia("F.34", {"q": 2, "k": 3, "c": 2}) == IntersectionArray(
        35, 2, (35, 16), (1, 20))


def test_aliases_resolve():
    assert atlas.resolve("F.28").id == "F.30"
    assert atlas.expected_ia("F.28", {"m": 4}) == atlas.expected_ia("F.30", {"m": 4})
    with pytest.raises(CatalogError):
        atlas.resolve("F.99")


def test_list_filters():
    rho3_binary = {e["id"] for e in atlas.list_entries(rho=3, q=2)}
    assert {"F.7", "F.16", "F.20", "S.1", "S.22"} <= rho3_binary


def test_infeasible_params_raise():
    with pytest.raises(ResourceError):
        atlas.build("F.20", {"m": 5})
    with pytest.raises(ResourceError):
        atlas.build("F.5", {"q": 3})


def test_f7_f8_builder_degenerations():
    from crcodes.atlas import half_hamming_code, hamming_code
    ham = hamming_code(2, 4)
    assert half_hamming_code(4, (0, 2)) == cc.even_half(ham)
    assert half_hamming_code(4, (1, 3)) == ham


def test_nested_union_is_hamming():
    import numpy as np
    from crcodes.atlas import hamming_code, nested_code
    ham = hamming_code(2, 4)
    for i in (1, 2):
        code = nested_code(4, i)
        part = sp.distance_partition(code, mode="vector")
        cell3 = {part.space.decode(int(v)) for v in np.nonzero(part.labels == 3)[0]}
        assert set(code.words()) | cell3 == set(ham.words())


def test_extension_coherence_bch():
    code20, _ = atlas.build("F.20", {"m": 2})
    code21, expected21 = atlas.build("F.21", {"m": 2})
    assert cc.extend(code20) == code21
    cr, ia = sp.is_completely_regular(code21)
    assert cr and ia == expected21


def test_s23_matches_s22_parameters():
    c22, ia22 = atlas.build("S.22")
    c23, ia23 = atlas.build("S.23")
    assert ia22 == ia23
    assert (c22.n, c22.k) == (c23.n, c23.k)
    assert c22.weight_distribution() == c23.weight_distribution()


def test_f31_equals_union_with_cover():
    from crcodes.atlas import binomial_code
    code, _ = atlas.build("F.31", {"m": 6})
    base = binomial_code(6, 2)
    assert code == cc.union_with_cover(base)
    # m = 6 union is a perfect [15,11,3] code
    assert (code.n, code.k, code.minimum_distance()) == (15, 11, 3)
    assert code.covering_radius() == 1


def test_external_entry_requires_file(tmp_path):
    with pytest.raises(CatalogError):
        atlas.build("F.18", {"m": 2})
    nr15, nr16 = build_nordstrom_robinson()
    p15 = tmp_path / "nr15.json"
    cc.save_code(nr15, p15)
    code, expected = atlas.build("F.18", {"m": 2, "file": str(p15)})
    cr, ia = sp.is_completely_regular(code)
    assert cr and ia == expected
    p16 = tmp_path / "nr16.json"
    cc.save_code(nr16, p16)
    code, expected = atlas.build("F.19", {"m": 2, "file": str(p16)})
    cr, ia = sp.is_completely_regular(code)
    assert cr and ia == expected


def test_regress_subset_and_controls():
    report = atlas.regress([("S.1", {}), ("S.10", {}), ("F.1", {"q": 2, "m": 3})],
                           include_controls=True)
    assert report.ok
    ids = [r.id for r in report.results]
    assert ids[:3] == ["S.1", "S.10", "F.1"]
    assert {"N.1", "N.2", "N.3", "N.4"} <= set(ids)


def test_regress_detects_mutation(monkeypatch):
    entry = atlas.ENTRIES["S.1"]
    orig = entry.expected
    monkeypatch.setattr(entry, "expected",
                        lambda p: IntersectionArray(23, 2, (23, 22, 21), (1, 2, 4)))
    report = atlas.regress([("S.1", {})], include_controls=False)
    assert not report.ok
    assert "mismatch" in report.results[0].detail
    monkeypatch.setattr(entry, "expected", orig)


def test_manifest(tmp_path):
    path = tmp_path / "atlas.json"
    atlas.write_manifest(path)
    doc = json.loads(path.read_text())
    ids = {e["id"] for e in doc["entries"]}
    assert {"S.1", "F.24", "F.52"} <= ids
    assert doc["aliases"]["F.28"] == "F.30"
    s1 = next(e for e in doc["entries"] if e["id"] == "S.1")
    assert s1["defaults"][0]["expected_ia"] == [[23, 22, 21], [1, 2, 3]]
    controls = {c["id"] for c in doc["controls"]}
    assert controls == {"N.1", "N.2", "N.3", "N.4"}


def test_f52_inverse_exponent_excluded():
    with pytest.raises(ResourceError):
        atlas.build("F.52", {"m": 5, "ell": 15})


def test_sporadic_builders_are_pure():
    a, _ = atlas.build("S.22")
    b, _ = atlas.build("S.22")
    assert a == b
