import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from steinquot.charring import Character, chi, frobenius_twist, minus_w0, multiply, orbit_sum, relabel
from steinquot.linkage import linkage_down_set
from steinquot.rootdata import build_root_datum
from steinquot.sources import load_character_file, sl2_tilting_character
from steinquot.steinberg import (
    NotDivisibleError,
    QuotientError,
    baby_verma_multiplicities,
    compare_pim_vs_tilting,
    hom_character,
    hom_character_by_pairing,
    is_plausible_module_character,
    is_plausible_tilting_character,
    make_quotient,
    quotient_from_orbits,
    restricted_weights,
    steinberg_chi,
    steinberg_quotient,
    tilting_lower_bounds,
    twisted_tensor_weyl_coeffs,
    verify_theorem,
)

A1 = build_root_datum("A1")
A2 = build_root_datum("A2")
B2 = build_root_datum("B2")
G2 = build_root_datum("G2")


def t_sl2(p, n):
    return make_quotient(A1, p, sl2_tilting_character(p, p - 1 + n), (n,))


def t_sl3(p, a, b):
    coeffs = {(a, b): 1}
    if a + b > p:
        coeffs[(p - b, p - a)] = 1
    return quotient_from_orbits(A2, p, (a, b), coeffs)


def g2_pim(lam):
    x, y = lam
    src = load_character_file(f"g2_p2_pim_{1 - x}{1 - y}.json")
    return make_quotient(G2, 2, src.character, lam, "pim")


def test_quotient_examples():
    assert steinberg_quotient(A1, 3, chi(A1, (2,))) == Character.e(A1, (0,))
    q = steinberg_quotient(A1, 3, chi(A1, (4,)) + chi(A1, (0,)))
    assert q == orbit_sum(A1, (2,))
    with pytest.raises(NotDivisibleError) as info:
        steinberg_quotient(A1, 3, chi(A1, (3,)))
    assert info.value.remainder
    with pytest.raises(QuotientError):
        steinberg_quotient(A1, 3, Character.zero(A1))


def test_baby_verma_examples():
    assert baby_verma_multiplicities(A1, 3, sl2_tilting_character(3, 4)) == {(2,): 1, (-2,): 1}
    assert baby_verma_multiplicities(A1, 3, chi(A1, (2,))) == {(0,): 1}
    src = load_character_file("g2_p2_pim_00.json")
    mults = baby_verma_multiplicities(G2, 2, src.character)
    # 36 baby Verma factors over 24 distinct weights: 12 + 2*6 + 2*6
    assert sum(mults.values()) == 36
    assert len(mults) == 24


def test_steinberg_dimension():
    for d in (A1, A2, B2, G2):
        for p in (2, 3):
            assert steinberg_chi(d, p).dim == p ** len(d.positive_roots)


def test_make_quotient_validation():
    with pytest.raises(QuotientError):
        make_quotient(A1, 3, chi(A1, (2,)), kind="bogus")
    # coefficient at lam must be 1
    with pytest.raises(QuotientError):
        make_quotient(A1, 3, 2 * chi(A1, (2,)), (0,))
    # negative orbit coefficient
    bad = multiply(orbit_sum(A1, (2,)) - Character.e(A1, (0,)), steinberg_chi(A1, 3))
    with pytest.raises(QuotientError):
        make_quotient(A1, 3, bad, (2,))


def test_verify_theorem_examples():
    rep = verify_theorem(A1, 3, t_sl2(3, 2))
    assert rep.ok and rep.predicted_support == [(2,)]
    assert rep.status == "theorem-consistent"
    rep = verify_theorem(A2, 3, t_sl3(3, 2, 2))
    assert rep.support_ok and rep.monotonicity_ok
    assert rep.predicted_support == [(2, 2), (1, 1)]
    rep = verify_theorem(G2, 2, g2_pim((1, 1)))
    assert rep.ok and rep.status == "conjecture-consistent"
    assert [g2_pim((1, 1)).coeff(mu) for mu in rep.predicted_support] == [1, 2, 2]


def test_verify_theorem_reports_violations():
    # support too large: s(0,0) is not linked to (2,2) for p = 3
    sq = quotient_from_orbits(A2, 3, (2, 2), {(2, 2): 1, (1, 1): 1, (0, 0): 1})
    rep = verify_theorem(A2, 3, sq)
    assert not rep.support_ok
    assert ("support", (0, 0), 1) in rep.violations
    # monotonicity fails when a lower linked weight has a smaller coefficient
    sq = quotient_from_orbits(A2, 3, (2, 2), {(2, 2): 2, (1, 1): 1})
    rep = verify_theorem(A2, 3, sq)
    assert rep.support_ok and not rep.monotonicity_ok
    assert rep.status == "THEOREM-VIOLATION"
    sq = quotient_from_orbits(A2, 3, (2, 2), {(2, 2): 2, (1, 1): 1}, "pim")
    assert verify_theorem(A2, 3, sq).status == "CONJECTURE-VIOLATION"


def test_hom_examples():
    t2 = t_sl2(3, 2)
    assert hom_character(A1, 3, t2, t2) == 2 * Character.e(A1, (0,))
    for d, p in ((A1, 3), (A2, 5), (G2, 2)):
        t0 = make_quotient(d, p, steinberg_chi(d, p))
        assert hom_character(d, p, t0, t0) == Character.e(d, (0,) * d.rank)
    q11 = g2_pim((1, 1))
    h = hom_character(G2, 2, q11, q11)
    assert h == hom_character_by_pairing(G2, 2, q11, q11)
    assert is_plausible_module_character(h)


def test_hom_rejects_mixed_inputs():
    with pytest.raises(QuotientError):
        hom_character(A1, 3, t_sl2(3, 2), t_sl2(5, 2))


def test_plausible_tilting_examples():
    assert is_plausible_tilting_character(2 * Character.e(A1, (0,)))
    assert not is_plausible_tilting_character(orbit_sum(A1, (2,)))
    assert is_plausible_tilting_character(chi(A1, (4,)) + chi(A1, (0,)))
    # T(1,0) is tilting though not self-dual
    assert is_plausible_tilting_character(chi(A2, (1, 0)))
    assert not is_plausible_tilting_character(Character.e(A2, (1, 0)))


def test_twisted_tensor_examples():
    t2, t0 = t_sl2(3, 2), t_sl2(3, 0)
    assert twisted_tensor_weyl_coeffs(A1, 3, t2, (0,)).coeffs == {(4,): 1, (0,): 1}
    assert twisted_tensor_weyl_coeffs(A1, 3, t2, (1,)).coeffs == {(7,): 1, (3,): 1}
    for sigma in range(4):
        assert twisted_tensor_weyl_coeffs(A1, 3, t0, (sigma,)).coeffs == {(2 + 3 * sigma,): 1}
    with pytest.raises(QuotientError):
        twisted_tensor_weyl_coeffs(A1, 3, t2, (-1,))


def test_twisted_tensor_matches_expansion():
    sq = t_sl3(3, 2, 2)
    sigma = (1, 0)
    dec = twisted_tensor_weyl_coeffs(A2, 3, sq, sigma)
    tilting = multiply(sq.quotient, steinberg_chi(A2, 3))
    direct = multiply(tilting, frobenius_twist(chi(A2, sigma), 3))
    assert dec.reconstruct() == direct


@pytest.mark.parametrize("p", [2, 3, 5])
def test_twisted_tensor_nonnegative_sl3(p):
    for a, b in restricted_weights(A2, p):
        sq = t_sl3(p, a, b)
        for sigma in itertools.product(range(4), repeat=2):
            assert twisted_tensor_weyl_coeffs(A2, p, sq, sigma).is_nonnegative(), (a, b, sigma)


def test_twisted_tensor_nonnegative_sl2():
    for p in (2, 3, 5, 7):
        for n in range(p):
            sq = t_sl2(p, n)
            for sigma in range(4):
                assert twisted_tensor_weyl_coeffs(A1, p, sq, (sigma,)).is_nonnegative()


def test_compare_examples():
    t2 = t_sl2(3, 2)
    rep = compare_pim_vs_tilting(A1, 3, t2, t2)
    assert rep.equal and rep.dominated
    q = g2_pim((1, 1))
    assert compare_pim_vs_tilting(G2, 2, q, q).equal
    hypothetical = quotient_from_orbits(G2, 2, (1, 1), {(1, 1): 1, (0, 1): 2, (1, 0): 3})
    rep = compare_pim_vs_tilting(G2, 2, q, hypothetical)
    assert not rep.equal and rep.dominated
    assert rep.strict == [(1, 0)]
    rep = compare_pim_vs_tilting(G2, 2, hypothetical, q)
    assert rep.violations == [(1, 0)]
    with pytest.raises(QuotientError):
        compare_pim_vs_tilting(G2, 2, q, g2_pim((0, 1)))


def test_tilting_lower_bounds_g2():
    bounds = tilting_lower_bounds(G2, 2, g2_pim((1, 1)))
    # only lower bounds; the s(1,0) multiplicity is not pinned down
    assert bounds == {(1, 1): 1, (0, 1): 2, (1, 0): 2}


@pytest.mark.parametrize("datum", [A1, A2, B2, G2], ids=lambda d: d.type_label)
@settings(max_examples=15, deadline=None)
@given(data=st.data())
def test_round_trip(datum, data):
    p = data.draw(st.sampled_from([2, 3, 5]))
    w = st.tuples(*([st.integers(0, 4)] * datum.rank))
    coeffs = data.draw(st.dictionaries(w, st.integers(1, 3), min_size=1, max_size=4))
    q = sum((c * orbit_sum(datum, mu) for mu, c in coeffs.items()), Character.zero(datum))
    assert steinberg_quotient(datum, p, multiply(q, steinberg_chi(datum, p))) == q


@pytest.mark.parametrize("p", [2, 3, 5])
def test_sl3_quotient_invariants(p):
    for a, b in restricted_weights(A2, p):
        sq = t_sl3(p, a, b)
        assert sq.coeff((a, b)) == 1
        assert all(c >= 0 for c in sq.orbit_coeffs.coeffs.values())
        assert set(sq.orbit_coeffs.coeffs) <= set(linkage_down_set(A2, p, (a, b)))


@pytest.mark.parametrize("p", [2, 3, 5])
def test_hom_of_tilting_dual_symmetry(p):
    # -w0(a, b) = (b, a) for SL3
    for (a, b), (c, d) in itertools.product(restricted_weights(A2, p), repeat=2):
        h = hom_character(A2, p, t_sl3(p, a, b), t_sl3(p, c, d))
        assert relabel(h, A2.w0) == h
        assert minus_w0(h) == hom_character(A2, p, t_sl3(p, b, a), t_sl3(p, d, c))
        if a == b and c == d:
            assert minus_w0(h) == h
        assert h == hom_character_by_pairing(A2, p, t_sl3(p, a, b), t_sl3(p, c, d))
        assert is_plausible_tilting_character(h)


def test_hom_not_self_dual_in_general():
    sq = t_sl3(2, 1, 0)
    h = hom_character(A2, 2, sq, sq)
    assert h == orbit_sum(A2, (1, 0))
    assert minus_w0(h) == orbit_sum(A2, (0, 1))
