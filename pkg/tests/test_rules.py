"""Closed-form rules: hexagon, quadrant, interlacing, level stacks, series."""

import itertools

import pytest

from splintbr.characters import dim_weyl
from splintbr.errors import (
    InvalidLabel,
    InvalidPartition,
    UnsupportedCase,
    UnsupportedPattern,
)
from splintbr.rootsystems import build
from splintbr.rules import (
    HexagonSpec,
    hexagon_multiplicity,
    rule_b2_d2,
    rule_c3,
    rule_f4_b4,
    rule_f4_d4,
    rule_g2_a2,
    rule_gt_typeI,
    rule_gt_typeII,
    verify_rule,
)

# Multiplicity grid for ambient label (3,2), rows indexed by beta = 0..6,
# columns by alpha = 0..6, zeros included.
GRID_32 = [
    [0, 0, 1, 1, 1, 1, 0],
    [0, 1, 2, 2, 2, 1, 0],
    [1, 2, 3, 3, 2, 1, 0],
    [1, 2, 3, 2, 1, 0, 0],
    [1, 2, 2, 1, 0, 0, 0],
    [1, 1, 1, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0],
]


def test_hexagon_grid_32_all_49_points():
    for beta in range(7):
        for alpha in range(7):
            assert hexagon_multiplicity(3, 2, alpha, beta) == GRID_32[beta][alpha], (
                alpha, beta)


def test_hexagon_trivial_case():
    assert hexagon_multiplicity(0, 0, 0, 0) == 1
    assert sum(
        hexagon_multiplicity(0, 0, a, b) for a in range(3) for b in range(3)
    ) == 1


def test_hexagon_vertices():
    spec = HexagonSpec(3, 2)
    assert spec.vertices == ((5, 2), (5, 0), (2, 0), (0, 2), (0, 5), (2, 5))
    for v in spec.vertices:
        assert spec.multiplicity(*v) == 1


def test_hexagon_degenerate_triangles_all_ones():
    # one label coordinate zero: every point weight is 1
    for k in range(5):
        spec = HexagonSpec(k, 0)
        pts = [
            (a, b) for a in range(k + 1) for b in range(k + 1)
            if spec.multiplicity(a, b)
        ]
        assert all(spec.multiplicity(a, b) == 1 for a, b in pts)
        assert len(pts) == (k + 1) * (k + 2) // 2  # triangle (0,0),(k,0),(0,k)


def test_hexagon_weighted_sum_is_a2_dimension():
    for k in range(7):
        for l in range(7):
            s = sum(
                hexagon_multiplicity(k, l, a, b)
                for a in range(k + l + 1) for b in range(k + l + 1)
            )
            assert s == (k + 1) * (l + 1) * (k + l + 2) // 2


def test_rule_g2_a2_examples():
    assert rule_g2_a2(0, 1).summands == {(0, 1): 1, (1, 0): 1, (1, 1): 1}
    res = rule_g2_a2(3, 2)
    assert res.coefficient_sum == 42
    total = sum(m * dim_weyl(build("A2"), nu) for nu, m in res.summands.items())
    assert total == 1547
    res = rule_g2_a2(3, 0)
    assert set(res.summands) == {
        (a, b) for a in range(4) for b in range(4) if a + b <= 3
    }
    assert set(res.summands.values()) == {1}


def test_rule_g2_a2_dimension_sums_reproduce_small_table():
    fig1b = [
        [1, 7, 27, 77],
        [14, 64, 189, 448],
        [77, 286, 729, 1547],
        [273, 896, 2079, 4096],
    ]
    a2 = build("A2")
    for k in range(4):
        for l in range(4):
            res = rule_g2_a2(k, l)
            total = sum(m * dim_weyl(a2, nu) for nu, m in res.summands.items())
            assert total == fig1b[l][k]


def test_rule_b2_d2_examples():
    assert rule_b2_d2(0, 0).summands == {(0, 0): 1}
    assert rule_b2_d2(1, 1).summands == {(0, 1): 1, (1, 0): 1, (1, 2): 1, (2, 1): 1}
    assert rule_b2_d2(3, 0).summands == {(r, r): 1 for r in range(4)}


def test_rule_gt_typeI_examples():
    res = rule_gt_typeI(2, (1, 0))
    assert res.summands == {(1,): 1, (0,): 1}
    assert rule_gt_typeI(2, (0, 0)).summands == {(0,): 1}
    res = rule_gt_typeI(3, (2, 1, 0))
    total = sum(m * dim_weyl(build("A2"), nu) for nu, m in res.summands.items())
    assert total == dim_weyl(build("A3"), (1, 1, 0))
    with pytest.raises(InvalidPartition):
        rule_gt_typeI(2, (0, 1))
    with pytest.raises(UnsupportedCase):
        rule_gt_typeI(4, (1, 1, 1, 0))


def test_rule_gt_typeII_display_form_b3():
    # direct triple-sum form of the restriction in fundamental labels
    def display(a, b, c):
        out = {}
        for t in range(a + 1):
            for r in range(b + 1):
                for s in range(c + 1):
                    nu = (a + b - t - r, r + s, r + c - s)
                    out[nu] = out.get(nu, 0) + 1
        return out

    b3 = build("B3")
    from splintbr.lattice import weight_coords
    from splintbr.rootsystems import to_lattice

    for a, b, c in itertools.product(range(3), repeat=3):
        f = weight_coords(to_lattice(b3, (a, b, c)))
        res = rule_gt_typeII(3, f)
        assert res.summands == display(a, b, c), (a, b, c)


def test_rule_gt_typeII_r2_matches_quadrant_rule():
    from splintbr.lattice import weight_coords
    from splintbr.rules import _f_from_b_label

    for k, l in itertools.product(range(5), repeat=2):
        via_gt = rule_gt_typeII(2, weight_coords(_f_from_b_label(2, (k, l))))
        assert via_gt.summands == rule_b2_d2(k, l).summands


def test_rule_gt_typeII_trivial_and_spinor():
    import fractions
    res = rule_gt_typeII(3, (0, 0, 0))
    assert res.summands == {(0, 0, 0): 1}
    h = fractions.Fraction(1, 2)
    res = rule_gt_typeII(4, (h, h, h, h))  # 16-dim spinor
    assert res.summands == {(0, 0, 0, 1): 1, (0, 0, 1, 0): 1}
    with pytest.raises(InvalidLabel):
        rule_gt_typeII(3, (1, 2, 0))  # not weakly decreasing
    with pytest.raises(InvalidLabel):
        rule_gt_typeII(3, (1, h, 0))  # mixed integrality


def test_rule_c3_examples():
    assert rule_c3(1, 0, 0).summands == {
        (1, 0, 0): 1, (0, 1, 0): 1, (0, 0, 1): 1,
    }
    assert rule_c3(0, 1, 0).summands == {
        (0, 0, 0): 2, (1, 1, 0): 1, (1, 0, 1): 1, (0, 1, 1): 1,
    }
    res = rule_c3(0, 0, 1)
    assert res.summands == {
        (1, 1, 1): 1, (1, 0, 0): 1, (0, 1, 0): 1, (0, 0, 1): 1,
    }
    assert res.dim_check  # 8 + 2 + 2 + 2 = 14
    with pytest.raises(UnsupportedPattern):
        rule_c3(1, 1, 1)


def test_rule_c3_dimension_checks():
    for a, b in itertools.product(range(4), repeat=2):
        assert rule_c3(a, b, 0).dim_check, (a, b)
    for c in range(4):
        assert rule_c3(0, 0, c).dim_check, c


def test_rule_f4_b4_series():
    assert rule_f4_b4("first", 1).summands == {(0, 1, 0, 0): 1, (0, 0, 0, 1): 1}
    assert rule_f4_b4("last", 1).summands == {
        (0, 0, 0, 0): 1, (1, 0, 0, 0): 1, (0, 0, 0, 1): 1,
    }
    assert rule_f4_b4("first", 0).summands == {(0, 0, 0, 0): 1}
    with pytest.raises(UnsupportedCase):
        rule_f4_b4("middle", 1)


def test_rule_f4_d4_examples():
    assert rule_f4_d4("last", 1).summands == {
        (0, 0, 0, 0): 2, (1, 0, 0, 0): 1, (0, 0, 1, 0): 1, (0, 0, 0, 1): 1,
    }
    assert rule_f4_d4("first", 1).summands == {
        (0, 1, 0, 0): 1, (1, 0, 0, 0): 1, (0, 0, 1, 0): 1, (0, 0, 0, 1): 1,
    }
    res = rule_f4_d4("first", 2)
    assert res.summands == {
        (0, 2, 0, 0): 1, (2, 0, 0, 0): 1, (0, 0, 2, 0): 1, (0, 0, 0, 2): 1,
        (1, 1, 0, 0): 1, (0, 1, 1, 0): 1, (0, 1, 0, 1): 1,
        (1, 0, 1, 0): 1, (1, 0, 0, 1): 1, (0, 0, 1, 1): 1,
    }
    assert res.dim_check


def triality_symmetric(summands):
    out = True
    for (a, b, c, d), m in summands.items():
        for p in itertools.permutations((a, c, d)):
            out = out and summands.get((p[0], b, p[1], p[2]), 0) == m
    return out


def test_f4_d4_series_have_triality_symmetry():
    for k in range(4):
        assert triality_symmetric(rule_f4_d4("first", k).summands)
        assert triality_symmetric(rule_f4_d4("last", k).summands)


@pytest.mark.parametrize("tag,weights", [
    ("IV", [(0, 0), (2, 1), (1, 2)]),
    ("II2", [(2, 2), (0, 3)]),
    ("I2", [(2, 2)]),
    ("I3", [(1, 0, 2)]),
    ("II3", [(1, 1, 1)]),
    ("III", [(2, 2, 0), (0, 0, 2)]),
    ("V_F4_B4", [(2, 0, 0, 0), (0, 0, 0, 2)]),
    ("V_F4_D4", [(1, 0, 0, 0), (0, 0, 0, 2)]),
    ("V_B4_D4", [(1, 1, 0, 1), (0, 0, 0, 1), (0, 0, 1, 0)]),
])
def test_verify_rule_agrees(tag, weights):
    for w in weights:
        rep = verify_rule(tag, w)
        assert rep.equal, (tag, w)
        assert rep.oracle_result.dim_check


def test_verify_rule_report_json():
    rep = verify_rule("IV", (1, 1))
    obj = rep.to_obj()
    assert obj["equal"] is True
    assert obj["expected"] == "theorem"
    assert obj["case"] == "IV"
    assert "rule" in obj and "summands" in obj
    conj = verify_rule("III", (1, 1, 0)).to_obj()
    assert conj["expected"] == "conjecture"


def test_rule_for_unsupported_f4_pattern():
    with pytest.raises(UnsupportedPattern):
        verify_rule("V_F4_B4", (1, 0, 1, 0))
