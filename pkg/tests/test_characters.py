"""Dimensions, the multiplicity recursion, and the character-formula check."""

import itertools

import pytest

from splintbr.characters import (
    CharStore,
    _dense_product_equals,
    clear_memo,
    configure_disk_cache,
    dim_weyl,
    freudenthal_character,
    wcf_consistency,
    weyl_denominator,
    weyl_numerator,
)
from splintbr.errors import InvalidLabel
from splintbr.lattice import FormalCharacter, char_mul, char_to_obj
from splintbr.rootsystems import CATALOG_LABELS, build, to_lattice, weyl_group


def dim_a2(a, b):
    return (a + 1) * (b + 1) * (a + b + 2) // 2


def dim_g2(k, l):
    return ((k + 1) * (k + l + 2) * (2 * k + 3 * l + 5) * (k + 2 * l + 3)
            * (k + 3 * l + 4) * (l + 1)) // 120


def dim_b2(k, l):
    return (k + 1) * (l + 1) * (k + l + 2) * (2 * k + l + 3) // 6


def dim_c3(a, b, c):
    aa, bb, cc = a + 1, b + 1, c + 1
    return (aa * bb * cc * (aa + bb) * (bb + cc) * (aa + bb + cc)
            * (bb + 2 * cc) * (aa + bb + 2 * cc) * (aa + 2 * bb + 2 * cc)) // 720


def test_dim_values_from_tables():
    a2, g2 = build("A2"), build("G2")
    assert dim_weyl(a2, (2, 2)) == 27
    assert dim_weyl(g2, (1, 1)) == 64
    assert dim_weyl(g2, (3, 2)) == 1547
    assert dim_weyl(build("F4"), (0, 0, 0, 1)) == 26
    assert dim_weyl(build("F4"), (1, 0, 0, 0)) == 52
    assert dim_weyl(build("B4"), (0, 0, 0, 1)) == 16
    assert dim_weyl(build("D4"), (0, 1, 0, 0)) == 28


def test_dim_closed_forms_sweep():
    a2, g2, b2 = build("A2"), build("G2"), build("B2")
    for x in range(7):
        for y in range(7):
            assert dim_weyl(a2, (x, y)) == dim_a2(x, y)
            assert dim_weyl(g2, (x, y)) == dim_g2(x, y)
            assert dim_weyl(b2, (x, y)) == dim_b2(x, y)
    c3 = build("C3")
    for w in itertools.product(range(4), repeat=3):
        assert dim_weyl(c3, w) == dim_c3(*w)
    a13 = build("A1^3")
    for w in itertools.product(range(7), repeat=3):
        assert dim_weyl(a13, w) == (w[0] + 1) * (w[1] + 1) * (w[2] + 1)


def test_dim_rejects_bad_labels():
    with pytest.raises(InvalidLabel):
        dim_weyl(build("A2"), (1, -1))
    with pytest.raises(InvalidLabel):
        dim_weyl(build("A2"), (1, 2, 3))


def test_g2_adjoint_character():
    irr = freudenthal_character(build("G2"), (0, 1))
    assert irr.dimension == 14
    assert irr.character.mass() == 14
    assert irr.character[(0, 0)] == 2
    assert len(irr.character) == 13


def test_a2_defining_characters():
    irr = freudenthal_character(build("A2"), (0, 1))
    assert irr.dimension == 3
    assert sorted(irr.character.terms.items()) == [
        ((-2, -2), 1), ((0, 2), 1), ((2, 0), 1),
    ]
    dual = freudenthal_character(build("A2"), (1, 0))
    assert dual.dimension == 3
    assert set(dual.character.terms.values()) == {1}


def test_b2_mass_16():
    irr = freudenthal_character(build("B2"), (1, 1))
    assert irr.character.mass() == 16


@pytest.mark.parametrize("label", CATALOG_LABELS)
def test_mass_equals_dimension(label):
    rs = build(label)
    for coeffs in itertools.product(range(3), repeat=rs.rank):
        irr = freudenthal_character(rs, coeffs)
        assert irr.character.mass() == dim_weyl(rs, coeffs)
        assert irr.character[to_lattice(rs, coeffs)] == 1


@pytest.mark.parametrize("label", ["A2", "B2", "G2", "C3", "D3"])
def test_weyl_invariance(label):
    rs = build(label)
    wg = weyl_group(rs)
    for coeffs in itertools.product(range(2), repeat=rs.rank):
        char = freudenthal_character(rs, coeffs).character
        for i in range(wg.order):
            for w2, c in char.terms.items():
                assert char[wg.apply(i, w2)] == c


def test_wcf_trivial_numerator_is_denominator():
    a2 = build("A2")
    assert weyl_numerator(a2, (0, 0)) == weyl_denominator(a2)
    assert wcf_consistency(a2, (0, 0))


def test_wcf_g2_adjoint_numerator_terms():
    # Twelve signed terms, the signed orbit of lattice point (5, 3).
    g2 = build("G2")
    numer = weyl_numerator(g2, (0, 1))
    expected = {
        (10, 6): 1, (-4, -10): 1, (-6, 4): 1, (-10, -6): 1, (6, -4): 1, (4, 10): 1,
        (4, -6): -1, (-10, -4): -1, (6, 10): -1, (-4, 6): -1, (-6, -10): -1,
        (10, 4): -1,
    }
    assert numer.terms == expected
    assert wcf_consistency(g2, (0, 1))


@pytest.mark.parametrize("label", ["A1", "A2", "A3", "B2", "B3", "C3", "D2",
                                  "D3", "G2", "A1^3"])
def test_wcf_small_sweep(label):
    rs = build(label)
    for coeffs in itertools.product(range(3), repeat=rs.rank):
        assert wcf_consistency(rs, coeffs)


def test_dense_product_matches_pure_convolution():
    # The accelerated path must agree with the dict convolution exactly.
    for label in ("B2", "G2", "C3", "D3"):
        rs = build(label)
        delta = weyl_denominator(rs)
        for coeffs in itertools.product(range(2), repeat=rs.rank):
            chi = freudenthal_character(rs, coeffs).character
            numer = weyl_numerator(rs, coeffs)
            pure = char_mul(delta, chi) == numer
            dense = _dense_product_equals(delta, chi, numer)
            assert pure and dense


def test_dense_product_detects_mismatch():
    rs = build("B2")
    delta = weyl_denominator(rs)
    chi = freudenthal_character(rs, (1, 0)).character
    wrong = weyl_numerator(rs, (0, 1))
    assert not _dense_product_equals(delta, chi, wrong)
    bad = FormalCharacter(2, dict(weyl_numerator(rs, (1, 0)).terms))
    bad = FormalCharacter(2, {**bad.terms, (20, 20): 1})
    assert not _dense_product_equals(delta, chi, bad)


def test_disk_cache_round_trip(tmp_path):
    store = CharStore(tmp_path)
    irr = freudenthal_character(build("G2"), (0, 1))
    store.put("G2", (0, 1), irr.character)
    again = store.get("G2", (0, 1))
    assert again == irr.character


def test_disk_cache_skips_corrupt_lines(tmp_path):
    store = CharStore(tmp_path)
    irr = freudenthal_character(build("G2"), (1, 0))
    store.put("G2", (1, 0), irr.character)
    path = tmp_path / "G2.jsonl"
    good = path.read_text()
    path.write_text("not json at all\n" + good.replace('"rank":2', '"rank":3', 1))
    fresh = CharStore(tmp_path)
    assert fresh.get("G2", (1, 0)) is None  # checksum mismatch ignored
    path.write_text("garbage\n" + good)
    fresh = CharStore(tmp_path)
    assert fresh.get("G2", (1, 0)) == irr.character


def test_configured_cache_used_and_validated(tmp_path):
    try:
        configure_disk_cache(tmp_path)
        clear_memo()
        a = freudenthal_character(build("B2"), (2, 2)).character
        clear_memo()
        b = freudenthal_character(build("B2"), (2, 2)).character
        assert a == b
        assert (tmp_path / "B2.jsonl").exists()
        # poison the stored entry; the checksum guard forces a recompute
        path = tmp_path / "B2.jsonl"
        path.write_text(path.read_text().replace('"c":1', '"c":7'))
        clear_memo()
        c = freudenthal_character(build("B2"), (2, 2)).character
        assert c == a
    finally:
        configure_disk_cache(None)
        clear_memo()


def test_char_json_deterministic():
    irr = freudenthal_character(build("G2"), (2, 1))
    assert char_to_obj(irr.character) == char_to_obj(irr.character)
