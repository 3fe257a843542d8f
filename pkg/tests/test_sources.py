import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from steinquot.charring import Character, chi, decompose_weyl_basis, orbit_sum
from steinquot.rootdata import build_root_datum
from steinquot.sources import (
    SourceError,
    character_from_weyl_factors,
    dump_character_file,
    list_fixtures,
    load_character_file,
    parse_character_source,
    sl2_tilting_character,
    source_from_character,
    steinberg_character,
)
from steinquot.steinberg import make_quotient, steinberg_quotient, verify_theorem

A1 = build_root_datum("A1")
A2 = build_root_datum("A2")
G2 = build_root_datum("G2")


def base(**extra):
    data = {
        "group": "A1",
        "rank": 1,
        "p": 3,
        "module_kind": "tilting",
        "highest_weight": [4],
        "weyl_factors": [{"weight": [4], "mult": 1}, {"weight": [0], "mult": 1}],
    }
    data.update(extra)
    return data


def write(tmp_path, data, name="c.json"):
    path = tmp_path / name
    path.write_text(data if isinstance(data, str) else json.dumps(data))
    return path


def test_steinberg_character_examples():
    st3 = steinberg_character(A1, 3)
    assert st3 == Character(A1, {(2,): 1, (0,): 1, (-2,): 1}) and st3.dim == 3
    st2 = steinberg_character(A1, 2)
    assert st2 == Character(A1, {(1,): 1, (-1,): 1}) and st2.dim == 2
    assert steinberg_character(G2, 2).dim == 64
    with pytest.raises(SourceError):
        steinberg_character(A1, 1)


def test_sl2_tilting_examples():
    assert sl2_tilting_character(3, 2) == chi(A1, (2,))
    assert sl2_tilting_character(3, 4) == chi(A1, (4,)) + chi(A1, (0,))
    assert sl2_tilting_character(5, 8) == chi(A1, (8,)) + chi(A1, (0,))
    with pytest.raises(SourceError):
        sl2_tilting_character(3, 5)
    with pytest.raises(SourceError):
        sl2_tilting_character(3, -1)


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_sl2_quotients_are_orbit_sums(p):
    for n in range(p):
        q = steinberg_quotient(A1, p, sl2_tilting_character(p, p - 1 + n))
        assert q == orbit_sum(A1, (n,))


def test_sl2_dimensions():
    # dim T(m) = 2p for p <= m <= 2p-2
    for p in (3, 5, 7):
        for m in range(p, 2 * p - 1):
            assert sl2_tilting_character(p, m).dim == 2 * p


def test_weyl_factor_examples():
    c = character_from_weyl_factors(A1, [((4,), 1), ((0,), 1)])
    assert c == Character(A1, {(4,): 1, (2,): 1, (0,): 2, (-2,): 1, (-4,): 1})
    assert character_from_weyl_factors(A1, [((0,), 1)]) == Character.e(A1, (0,))
    with pytest.raises(SourceError):
        character_from_weyl_factors(A1, [((-2,), 1)])
    with pytest.raises(SourceError):
        character_from_weyl_factors(A1, [((2,), 0)])


def test_sl3_fixture():
    src = load_character_file("a2_p3_tilting_44.json")
    q = steinberg_quotient(A2, 3, src.character)
    assert q == orbit_sum(A2, (2, 2)) + orbit_sum(A2, (1, 1))


@settings(max_examples=25, deadline=None)
@given(st.dictionaries(st.tuples(st.integers(0, 4), st.integers(0, 4)), st.integers(1, 3), min_size=1, max_size=4))
def test_weyl_factors_round_trip(factors):
    c = character_from_weyl_factors(G2, factors.items())
    assert decompose_weyl_basis(c).coeffs == factors


def test_fixture_list():
    assert list_fixtures() == [
        "a2_p3_tilting_34.json",
        "a2_p3_tilting_44.json",
        "a2_p5_tilting_87.json",
        "g2_p2_pim_00.json",
        "g2_p2_pim_01.json",
        "g2_p2_pim_10.json",
        "g2_p2_pim_11.json",
    ]


@pytest.mark.parametrize("name", list_fixtures())
def test_fixtures_load_and_verify(name):
    src = load_character_file(name)
    assert "not independent" in src.provenance
    assert src.conventions
    sq = make_quotient(src.datum, src.p, src.character, src.lam, src.module_kind)
    report = verify_theorem(src.datum, src.p, sq)
    assert report.ok
    expected = "conjecture-consistent" if src.module_kind == "pim" else "theorem-consistent"
    assert report.status == expected


def test_g2_fixture_quotient():
    src = load_character_file("g2_p2_pim_00.json")
    assert src.lam == (1, 1)
    sq = make_quotient(G2, 2, src.character, src.lam, "pim")
    assert sq.orbit_coeffs.coeffs == {(1, 1): 1, (0, 1): 2, (1, 0): 2}


def test_load_valid(tmp_path):
    src = load_character_file(write(tmp_path, base()))
    assert src.character == chi(A1, (4,)) + chi(A1, (0,))
    assert src.lam == (2,)


def test_load_requested_datum(tmp_path):
    path = write(tmp_path, base())
    assert load_character_file(path, A1).group == "A1"
    with pytest.raises(SourceError, match="expected A2"):
        load_character_file(path, A2)


@pytest.mark.parametrize(
    "data,match",
    [
        ("{not json", "parse error"),
        ("[1, 2]", "JSON object"),
        (base(colour="red"), "unknown field"),
        ({k: v for k, v in base().items() if k != "p"}, "missing field"),
        (base(terms=[{"weight": [0], "mult": 1}]), "exactly one of"),
        (base(group="Q2"), "unsupported"),
        (base(rank=2), "rank mismatch"),
        (base(p=1), "p must be"),
        (base(p=3.0), "integer"),
        (base(module_kind="simple"), "module_kind"),
        (base(highest_weight=[4, 0]), "length"),
        (base(weyl_factors=[{"weight": [4], "mult": 1}, {"weight": [-2], "mult": 1}]), "not dominant"),
        (base(weyl_factors=[{"weight": [4], "mult": 1}, {"weight": [0], "mult": 0}]), "multiplicity"),
        (base(weyl_factors=[{"weight": [4], "mult": 2}]), "exactly once"),
        (base(weyl_factors=[{"weight": [4], "mult": 1}, {"weight": [6], "mult": 1}]), "not below"),
        (base(weyl_factors=[{"weight": [4], "mult": 1}, {"weight": [3], "mult": 1}]), "not below"),
        (base(weyl_factors=[{"weight": [4], "multiplicity": 1}]), "exactly 'weight' and 'mult'"),
        (base(provenance=3), "strings"),
    ],
)
def test_load_rejects(tmp_path, data, match):
    with pytest.raises(SourceError, match=match):
        load_character_file(write(tmp_path, data))


def test_asymmetric_terms_name_the_orbit(tmp_path):
    data = base(terms=[{"weight": [2, 2], "mult": 1}, {"weight": [-2, 4], "mult": 1}])
    del data["weyl_factors"]
    data.update(group="A2", rank=2, highest_weight=[2, 2])
    with pytest.raises(SourceError, match=r"orbit of \[2, 2\]") as info:
        load_character_file(write(tmp_path, data))
    assert info.value.weight == (2, 2)


def test_terms_variant(tmp_path):
    data = base(terms=[{"weight": [2], "mult": 1}, {"weight": [0], "mult": 1}, {"weight": [-2], "mult": 1}])
    del data["weyl_factors"]
    data["highest_weight"] = [2]
    src = load_character_file(write(tmp_path, data))
    assert src.character == chi(A1, (2,))
    data["highest_weight"] = [0]
    with pytest.raises(SourceError, match="top weight"):
        load_character_file(write(tmp_path, data))


def test_missing_file(tmp_path):
    with pytest.raises(SourceError, match="cannot read"):
        load_character_file(tmp_path / "nope.json")


def test_dump_round_trip(tmp_path):
    ch = sl2_tilting_character(5, 7)
    src = source_from_character(A1, 5, ch, "tilting", provenance="test")
    assert src.weyl_factors == [((7,), 1), ((1,), 1)]
    path = tmp_path / "t.json"
    dump_character_file(src, path)
    back = load_character_file(path)
    assert back.character == ch and back.provenance == "test"


def test_dump_raw_terms(tmp_path):
    # s(2) has a negative Weyl coefficient, so it is written as raw terms
    src = source_from_character(A1, 3, orbit_sum(A1, (2,)), "raw")
    assert src.weyl_factors is None
    path = tmp_path / "r.json"
    dump_character_file(src, path)
    assert "terms" in json.loads(path.read_text())
    assert load_character_file(path).character == orbit_sum(A1, (2,))


def test_result_sections_checked(tmp_path):
    data = base(**{
        "lambda": [2],
        "quotient": [{"weight": [2], "coeff": 1}, {"weight": [-2], "coeff": 1}],
        "orbit_coeffs": [{"weight": [2], "coeff": 1}],
    })
    assert parse_character_source(data).lam == (2,)
    data["orbit_coeffs"] = [{"weight": [2], "coeff": 2}]
    with pytest.raises(SourceError, match="orbit_coeffs"):
        parse_character_source(data)
    data = base(**{"lambda": [1]})
    with pytest.raises(SourceError, match="lambda"):
        parse_character_source(data)
