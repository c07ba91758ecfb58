"""Schur-function calculus on three variables modulo x1*x2*x3 = 1.

In this quotient every Schur function s_{a,b,c} with a >= b >= c >= 0
normalizes to s_{a-c,b-c,0}, so a basis element is just a pair (a, b) with
a >= b >= 0; anything violating the partition order is zero.  The module
implements the two Pieri products against e1 and e2, the six-term signed
operator H attached to a lattice point, its aggregate over hexagon layers,
and mechanical verification of the layer-collapse identities that prove
the hexagon branching rule.  Elements stay in the index basis throughout;
expansion into honest characters happens only at the bridge functions.
"""

from __future__ import annotations

from .branching import peel
from .characters import freudenthal_character
from .errors import (
    InvalidLabel,
    LayerOutOfRange,
    NondominantLeadingTerm,
    NotACharacter,
    NotIntegral,
)
from .lattice import FormalCharacter, char_add, char_scale
from .rootsystems import build
from .rules import HexagonSpec

SchurIndex = tuple[int, int]
SchurSum = dict[SchurIndex, int]


def schur_normalize(a: int, b: int, c: int) -> SchurIndex | None:
    """Normalized index of s_{a,b,c}, or None when the term is zero."""
    if a >= b >= c >= 0:
        return (a - c, b - c)
    return None


def _accum(acc: SchurSum, idx: SchurIndex | None, coeff: int) -> None:
    if idx is None or coeff == 0:
        return
    t = acc.get(idx, 0) + coeff
    if t:
        acc[idx] = t
    else:
        del acc[idx]


def sum_add(a: SchurSum, b: SchurSum, scale: int = 1) -> SchurSum:
    out = dict(a)
    for idx, c in b.items():
        _accum(out, idx, scale * c)
    return out


def _check_index(s: SchurIndex) -> SchurIndex:
    a, b = s
    if not a >= b >= 0:
        raise InvalidLabel(f"({a},{b}) is not a valid normalized index")
    return (a, b)


def pieri_e1(s: SchurIndex) -> SchurSum:
    """Product with e1 = s_{1,0,0}: one box added, in three possible rows."""
    a, b = _check_index(s)
    acc: SchurSum = {}
    _accum(acc, schur_normalize(a + 1, b, 0), 1)
    _accum(acc, schur_normalize(a, b + 1, 0), 1)
    _accum(acc, schur_normalize(a, b, 1), 1)
    return acc


def pieri_e2(s: SchurIndex) -> SchurSum:
    """Product with e2 = s_{1,1,0}: two boxes added in distinct rows."""
    a, b = _check_index(s)
    acc: SchurSum = {}
    _accum(acc, schur_normalize(a + 1, b + 1, 0), 1)
    _accum(acc, schur_normalize(a + 1, b, 1), 1)
    _accum(acc, schur_normalize(a, b + 1, 1), 1)
    return acc


def h_point(alpha: int, beta: int) -> SchurSum:
    """The six-term signed sum (e2 - e1) * s_{alpha+beta, alpha, 0}.

    Terms sit at the six neighbours of (alpha+beta, alpha) in the index
    plane; invalid corners drop out through the zero convention.
    """
    if alpha < 0 or beta < 0:
        raise InvalidLabel(f"negative point ({alpha},{beta})")
    s = alpha + beta
    acc: SchurSum = {}
    _accum(acc, schur_normalize(s + 1, alpha + 1, 0), 1)
    _accum(acc, schur_normalize(s, alpha + 1, 0), -1)
    _accum(acc, schur_normalize(s - 1, alpha, 0), 1)
    _accum(acc, schur_normalize(s - 1, alpha - 1, 0), -1)
    _accum(acc, schur_normalize(s, alpha - 1, 0), 1)
    _accum(acc, schur_normalize(s + 1, alpha, 0), -1)
    return acc


# ----------------------------------------------------------------------
# Hexagon layers
# ----------------------------------------------------------------------


def layer_points(i: int, k: int, l: int) -> list[tuple[int, int]]:
    """Points of the i-th layer: the ring at depth i, or the core triangle.

    Layers 0 .. min(k,l)-1 are hexagonal rings; layer min(k,l) is the
    boundary plus interior of the degenerate triangle.
    """
    m = min(k, l)
    if not 0 <= i <= m:
        raise LayerOutOfRange(f"layer {i} outside 0..{m} for ({k},{l})")
    spec = HexagonSpec(k, l)
    pts = []
    for alpha in range(k + l + 1):
        for beta in range(k + l + 1):
            d = spec.depth(alpha, beta)
            if d == i or (i == m and d > m):
                pts.append((alpha, beta))
    return pts


def schur_dual(s: SchurSum) -> SchurSum:
    """Index involution (a, b) -> (a, a-b), from inverting the variables."""
    return {(a, a - b): c for (a, b), c in s.items()}


def h_layer(i: int, k: int, l: int) -> SchurSum:
    """Aggregate layer operator H_{L_i(k,l)}; empty at layer min(k,l)+1.

    The six terms correspond to the six vertices of the depth-i ring.  The
    vertex coordinates come out of the same six constraint intersections
    whichever of k, l is smaller, so one closed form covers both
    orientations; the zero convention silently removes the terms that a
    degenerate ring does not have.
    """
    m = min(k, l)
    if not 0 <= i <= m + 1:
        raise LayerOutOfRange(f"layer {i} outside 0..{m + 1} for ({k},{l})")
    if i == m + 1:
        return {}
    acc: SchurSum = {}
    _accum(acc, schur_normalize(k + 2 * l - i + 1, k + l - i + 1, 0), 1)
    _accum(acc, schur_normalize(k + l, k + l - i + 1, 0), -1)
    _accum(acc, schur_normalize(l + i - 1, l, 0), 1)
    _accum(acc, schur_normalize(l + i - 1, i - 1, 0), -1)
    _accum(acc, schur_normalize(k + l, i - 1, 0), 1)
    _accum(acc, schur_normalize(k + 2 * l - i + 1, l, 0), -1)
    return acc


def _layer_h_sum(i: int, k: int, l: int) -> SchurSum:
    acc: SchurSum = {}
    for alpha, beta in layer_points(i, k, l):
        acc = sum_add(acc, h_point(alpha, beta))
    return acc


def verify_lemma_triangle(k: int, l: int) -> bool:
    """Check that the core-triangle H sum collapses to the layer operator."""
    m = min(k, l)
    return _layer_h_sum(m, k, l) == h_layer(m, k, l)


def verify_lemma_hex(i: int, k: int, l: int) -> bool:
    """Check the ring identity: sum over layer i of H equals the
    second difference H_{L_{i+2}} - 2 H_{L_{i+1}} + H_{L_i}."""
    m = min(k, l)
    if not 0 <= i < m:
        raise LayerOutOfRange(f"ring index {i} outside 0..{m - 1} for ({k},{l})")
    lhs = _layer_h_sum(i, k, l)
    rhs = sum_add(
        sum_add(h_layer(i + 2, k, l), h_layer(i + 1, k, l), -2),
        h_layer(i, k, l),
    )
    return lhs == rhs


def verify_theorem(k: int, l: int) -> bool:
    """Check the telescoped identity behind the hexagon branching rule.

    s_{k+2l+1, k+l+1} - s_{k+2l+1, l} must equal the multiplicity-weighted
    sum of H over all hexagon points; everything interior telescopes away.
    """
    spec = HexagonSpec(k, l)
    rhs: SchurSum = {}
    for alpha in range(k + l + 1):
        for beta in range(k + l + 1):
            n = spec.multiplicity(alpha, beta)
            if n:
                rhs = sum_add(rhs, h_point(alpha, beta), n)
    lhs: SchurSum = {}
    _accum(lhs, schur_normalize(k + 2 * l + 1, k + l + 1, 0), 1)
    _accum(lhs, schur_normalize(k + 2 * l + 1, l, 0), -1)
    return lhs == rhs


# ----------------------------------------------------------------------
# Bridge to honest characters on the rank-2 lattice
# ----------------------------------------------------------------------


def schur_to_a2_character(s: SchurIndex) -> FormalCharacter:
    """Expand a normalized index into the character it represents.

    The index (a, b) is the irreducible with hexagon-plane label
    (alpha, beta) = (b, a - b).
    """
    a, b = _check_index(s)
    rs = build("A2")
    return freudenthal_character(rs, (b, a - b)).character


def schur_sum_to_character(s: SchurSum) -> FormalCharacter:
    """Linear extension of the bridge to integer combinations."""
    rs = build("A2")
    acc = FormalCharacter(rs.rank, {})
    for idx, coeff in s.items():
        acc = char_add(acc, char_scale(coeff, schur_to_a2_character(idx)))
    return acc


def a2_character_to_schur(c: FormalCharacter) -> SchurSum:
    """Write a virtual rank-2 character in the normalized index basis."""
    rs = build("A2")
    try:
        labels = peel(c, rs, allow_negative=True)
    except (NondominantLeadingTerm, NotIntegral) as exc:
        raise NotACharacter(str(exc)) from exc
    return {(alpha + beta, alpha): m for (alpha, beta), m in labels.items()}
