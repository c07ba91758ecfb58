"""Catalog of root systems with exact realizations and Weyl groups.

Each system is realized on a fixed coordinate lattice, with all data stored
as doubled integers (see lattice.py).  Rank-2 systems tied to the splint
pairs (A2, B2, D2, G2) use the coordinates in which the hexagon and
quadrant branching rules are usually drawn; the classical series B, C, D
and F4 use standard orthonormal epsilon coordinates; A-series systems use
L-coordinates on the traceless hyperplane with the last L eliminated.

The bilinear form is normalized so long roots have squared length 2
wherever a standard choice exists.  Every formula downstream (dimension,
multiplicity recursion, dominance) is invariant under the overall scale, so
internally we work with an integer-rescaled form on doubled coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

import numpy as np

from .errors import (
    ClosureOverflow,
    InvalidLabel,
    NotDominant,
    NotIntegral,
    UnsupportedLabel,
)
from .lattice import Weight

CATALOG_LABELS = (
    "A1", "A2", "A3", "B2", "B3", "B4", "C3",
    "D2", "D3", "D4", "G2", "F4", "A1^3", "A1^4",
)

# |W| and |Phi^+| per label, confirmed by closure generation at build time.
WEYL_ORDERS = {
    "A1": 2, "A2": 6, "A3": 24, "B2": 8, "B3": 48, "B4": 384, "C3": 48,
    "D2": 4, "D3": 24, "D4": 192, "G2": 12, "F4": 1152, "A1^3": 8, "A1^4": 16,
}
POSITIVE_COUNTS = {
    "A1": 1, "A2": 3, "A3": 6, "B2": 4, "B3": 9, "B4": 16, "C3": 9,
    "D2": 2, "D3": 6, "D4": 12, "G2": 6, "F4": 24, "A1^3": 3, "A1^4": 4,
}


@dataclass(frozen=True)
class RootSystem:
    """Immutable root datum: roots, fundamental weights, rho, invariant form.

    All weights are doubled-coordinate tuples.  ``gram`` is the exact
    invariant form on true coordinates.
    """

    label: str
    rank: int
    simple_roots: tuple[Weight, ...]
    positive_roots: tuple[Weight, ...]
    fundamental_weights: tuple[Weight, ...]
    rho2: Weight
    gram: tuple[tuple[Fraction, ...], ...]

    @cached_property
    def form2(self) -> tuple[tuple[int, ...], ...]:
        """Integer-rescaled form on doubled coordinates (positive scale)."""
        den = 1
        for row in self.gram:
            for x in row:
                den = den * x.denominator // _gcd(den, x.denominator)
        return tuple(
            tuple(int(x * den) for x in row) for row in self.gram
        )

    @cached_property
    def coroot_rows(self) -> tuple[tuple[int, ...], ...]:
        """Integer rows R_i with <v, alpha_i^vee> = (R_i . v2) / 2."""
        rows = []
        for a2 in self.simple_roots:
            ma = [sum(m * x for m, x in zip(row, a2)) for row in self.form2]
            naa = sum(x * y for x, y in zip(a2, ma))
            row = []
            for x in ma:
                num = 4 * x
                if num % naa:
                    raise NotIntegral(f"non-integral coroot row for {self.label}")
                row.append(num // naa)
            rows.append(tuple(row))
        return tuple(rows)

    @cached_property
    def _simple_inverse(self) -> tuple[np.ndarray, int]:
        """(N, d) with expansion in simple roots given by N @ v2 / d."""
        n = self.rank
        cols = [[Fraction(x) for x in a2] for a2 in self.simple_roots]
        aug = [
            [cols[j][i] for j in range(n)] + [Fraction(int(i == j)) for j in range(n)]
            for i in range(n)
        ]
        for col in range(n):
            piv = next(r for r in range(col, n) if aug[r][col] != 0)
            aug[col], aug[piv] = aug[piv], aug[col]
            inv = 1 / aug[col][col]
            aug[col] = [x * inv for x in aug[col]]
            for r in range(n):
                if r != col and aug[r][col] != 0:
                    f = aug[r][col]
                    aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
        den = 1
        for row in aug:
            for x in row[n:]:
                den = den * x.denominator // _gcd(den, x.denominator)
        num = np.array(
            [[int(x * den) for x in row[n:]] for row in aug], dtype=np.int64
        )
        return num, den

    @cached_property
    def np_form2(self) -> np.ndarray:
        return np.array(self.form2, dtype=np.int64)

    @cached_property
    def np_fund2(self) -> np.ndarray:
        return np.array(self.fundamental_weights, dtype=np.int64)


@dataclass(frozen=True)
class WeylGroup:
    """Explicit Weyl group: doubled matrices and sign characters.

    ``mats2`` holds 2*w for each element w, acting on doubled coordinates
    by v2 -> (mats2[i] @ v2) / 2.  ``signs`` holds (-1)^{l(w)}.
    """

    label: str
    mats2: np.ndarray
    signs: np.ndarray

    @property
    def order(self) -> int:
        return self.mats2.shape[0]

    def apply(self, i: int, w2: Weight) -> Weight:
        v = self.mats2[i] @ np.array(w2, dtype=np.int64)
        if np.any(v & 1):
            raise NotIntegral("Weyl image leaves the doubled-integer lattice")
        return tuple(int(x) for x in v >> 1)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def inner2(rs: RootSystem, v2: Weight, w2: Weight) -> int:
    """Rescaled invariant form on doubled coordinates (fixed positive scale)."""
    m = rs.form2
    return sum(v2[i] * sum(m[i][j] * w2[j] for j in range(rs.rank)) for i in range(rs.rank))


def pairing(rs: RootSystem, v2: Weight, i: int) -> int:
    """Cartan pairing <v, alpha_i^vee>, exact; integral on the weight lattice."""
    num = sum(r * d for r, d in zip(rs.coroot_rows[i], v2))
    q, rem = divmod(num, 2)
    if rem:
        raise NotIntegral(f"{v2} is not a weight of {rs.label}")
    return q


def is_dominant(rs: RootSystem, v2: Weight) -> bool:
    """True when the vector pairs nonnegatively with every simple coroot."""
    try:
        return all(pairing(rs, v2, i) >= 0 for i in range(rs.rank))
    except NotIntegral:
        return False


def reflect(rs: RootSystem, v2: Weight, i: int) -> Weight:
    p = pairing(rs, v2, i)
    a2 = rs.simple_roots[i]
    return tuple(x - p * a for x, a in zip(v2, a2))


def dominant_rep(rs: RootSystem, v2: Weight) -> Weight:
    """The unique dominant point of the Weyl orbit of v."""
    v = tuple(v2)
    while True:
        for i in range(rs.rank):
            if pairing(rs, v, i) < 0:
                v = reflect(rs, v, i)
                break
        else:
            return v


def to_lattice(rs: RootSystem, coeffs) -> Weight:
    """Lattice point of a dominant weight given in fundamental coefficients."""
    coeffs = tuple(int(c) for c in coeffs)
    if len(coeffs) != rs.rank:
        raise InvalidLabel(f"{rs.label} expects {rs.rank} coefficients, got {len(coeffs)}")
    if any(c < 0 for c in coeffs):
        raise InvalidLabel(f"negative coefficient in {coeffs}")
    out = [0] * rs.rank
    for c, fw in zip(coeffs, rs.fundamental_weights):
        for k in range(rs.rank):
            out[k] += c * fw[k]
    return tuple(out)


def from_lattice(rs: RootSystem, v2: Weight) -> tuple[int, ...]:
    """Fundamental coefficients of a dominant lattice point.

    Raises NotIntegral for points outside the weight lattice and
    NotDominant for points outside the dominant chamber.
    """
    coeffs = tuple(pairing(rs, v2, i) for i in range(rs.rank))
    if any(c < 0 for c in coeffs):
        raise NotDominant(f"{v2} is not dominant for {rs.label}")
    if to_lattice(rs, coeffs) != tuple(v2):
        raise NotIntegral(f"{v2} is not on the {rs.label} weight lattice")
    return coeffs


def root_coords(rs: RootSystem, d2: Weight) -> tuple[Fraction, ...]:
    """Expansion of a (doubled) lattice vector in the simple roots."""
    num, den = rs._simple_inverse
    vals = num @ np.array(d2, dtype=np.int64)
    return tuple(Fraction(int(x), den) for x in vals)


# ----------------------------------------------------------------------
# Catalog realizations
# ----------------------------------------------------------------------

def _frac_matrix(rows) -> tuple[tuple[Fraction, ...], ...]:
    return tuple(tuple(Fraction(x) for x in row) for row in rows)


def _eps(rank: int, *pairs) -> Weight:
    """Doubled vector with entries 2*value at the given (index, value) pairs."""
    v = [0] * rank
    for i, val in pairs:
        v[i] = int(2 * Fraction(val))
    return tuple(v)


def _build_a1_power(label: str, r: int) -> RootSystem:
    roots = tuple(_eps(r, (i, 1)) for i in range(r))
    fund = tuple(_eps(r, (i, Fraction(1, 2))) for i in range(r))
    return RootSystem(
        label=label, rank=r,
        simple_roots=roots, positive_roots=roots,
        fundamental_weights=fund,
        rho2=tuple([1] * r),
        gram=_frac_matrix([[2 * int(i == j) for j in range(r)] for i in range(r)]),
    )


def _build_a1() -> RootSystem:
    # Rank-1 member of the A-family in L-coordinates (L2 eliminated):
    # the root is 2*L1, so partitions (m1, m2) sit at coordinate m1 - m2.
    return RootSystem(
        label="A1", rank=1,
        simple_roots=((4,),),
        positive_roots=((4,),),
        fundamental_weights=((2,),),
        rho2=(2,),
        gram=_frac_matrix([[Fraction(1, 2)]]),
    )


def _build_a2() -> RootSystem:
    # L-coordinates with L3 = -L1-L2; long-root plane of G2.
    return RootSystem(
        label="A2", rank=2,
        simple_roots=((2, 4), (2, -2)),
        positive_roots=((2, -2), (4, 2), (2, 4)),
        fundamental_weights=((2, 2), (2, 0)),
        rho2=(4, 2),
        gram=_frac_matrix([[Fraction(2, 3), Fraction(-1, 3)],
                           [Fraction(-1, 3), Fraction(2, 3)]]),
    )


def _build_a3() -> RootSystem:
    simple = ((2, -2, 0), (0, 2, -2), (2, 2, 4))
    positive = ((2, -2, 0), (2, 0, -2), (0, 2, -2), (4, 2, 2), (2, 4, 2), (2, 2, 4))
    fund = ((2, 0, 0), (2, 2, 0), (2, 2, 2))
    gram = [[Fraction(int(i == j)) - Fraction(1, 4) for j in range(3)] for i in range(3)]
    return RootSystem(
        label="A3", rank=3, simple_roots=simple, positive_roots=positive,
        fundamental_weights=fund, rho2=(6, 4, 2), gram=_frac_matrix(gram),
    )


def _build_b2() -> RootSystem:
    # L1 = eps1 short, L2 = eps2 - eps1 long; quadrant picture coordinates.
    return RootSystem(
        label="B2", rank=2,
        simple_roots=((0, 2), (2, 0)),
        positive_roots=((2, 0), (2, 2), (4, 2), (0, 2)),
        fundamental_weights=((2, 2), (2, 1)),
        rho2=(4, 3),
        gram=_frac_matrix([[1, -1], [-1, 2]]),
    )


def _build_b(r: int) -> RootSystem:
    positive = [_eps(r, (i, 1)) for i in range(r)]
    for i in range(r):
        for j in range(i + 1, r):
            positive.append(_eps(r, (i, 1), (j, -1)))
            positive.append(_eps(r, (i, 1), (j, 1)))
    simple = [_eps(r, (i, 1), (i + 1, -1)) for i in range(r - 1)] + [_eps(r, (r - 1, 1))]
    fund = [_eps(r, *((j, 1) for j in range(i + 1))) for i in range(r - 1)]
    fund.append(tuple([1] * r))
    rho2 = tuple(2 * (r - i) - 1 for i in range(r))
    gram = [[Fraction(int(i == j)) for j in range(r)] for i in range(r)]
    return RootSystem(
        label=f"B{r}", rank=r, simple_roots=tuple(simple),
        positive_roots=tuple(positive), fundamental_weights=tuple(fund),
        rho2=rho2, gram=_frac_matrix(gram),
    )


def _build_c3() -> RootSystem:
    positive = []
    for i in range(3):
        for j in range(i + 1, 3):
            positive.append(_eps(3, (i, 1), (j, -1)))
            positive.append(_eps(3, (i, 1), (j, 1)))
    positive += [_eps(3, (i, 2)) for i in range(3)]
    simple = (_eps(3, (0, 1), (1, -1)), _eps(3, (1, 1), (2, -1)), _eps(3, (2, 2)))
    fund = ((2, 0, 0), (2, 2, 0), (2, 2, 2))
    gram = [[Fraction(1, 2) * int(i == j) for j in range(3)] for i in range(3)]
    return RootSystem(
        label="C3", rank=3, simple_roots=simple, positive_roots=tuple(positive),
        fundamental_weights=fund, rho2=(6, 4, 2), gram=_frac_matrix(gram),
    )


def _build_d(r: int) -> RootSystem:
    positive = []
    for i in range(r):
        for j in range(i + 1, r):
            positive.append(_eps(r, (i, 1), (j, -1)))
            positive.append(_eps(r, (i, 1), (j, 1)))
    simple = [_eps(r, (i, 1), (i + 1, -1)) for i in range(r - 1)]
    simple.append(_eps(r, (r - 2, 1), (r - 1, 1)))
    fund = [_eps(r, *((j, 1) for j in range(i + 1))) for i in range(r - 2)]
    fund.append(tuple([1] * (r - 1) + [-1]))
    fund.append(tuple([1] * r))
    rho2 = tuple(2 * (r - 1 - i) for i in range(r))
    gram = [[Fraction(int(i == j)) for j in range(r)] for i in range(r)]
    return RootSystem(
        label=f"D{r}", rank=r, simple_roots=tuple(simple),
        positive_roots=tuple(positive), fundamental_weights=tuple(fund),
        rho2=rho2, gram=_frac_matrix(gram),
    )


def _build_g2() -> RootSystem:
    # L-coordinates shared with the embedded A2 long-root plane.
    return RootSystem(
        label="G2", rank=2,
        simple_roots=((0, 2), (2, -2)),
        positive_roots=((2, 0), (0, 2), (2, 2), (2, -2), (4, 2), (2, 4)),
        fundamental_weights=((2, 2), (4, 2)),
        rho2=(6, 4),
        gram=_frac_matrix([[Fraction(2, 3), Fraction(-1, 3)],
                           [Fraction(-1, 3), Fraction(2, 3)]]),
    )


def _build_f4() -> RootSystem:
    positive = [_eps(4, (i, 1)) for i in range(4)]
    for i in range(4):
        for j in range(i + 1, 4):
            positive.append(_eps(4, (i, 1), (j, -1)))
            positive.append(_eps(4, (i, 1), (j, 1)))
    for s2 in (1, -1):
        for s3 in (1, -1):
            for s4 in (1, -1):
                positive.append((1, s2, s3, s4))
    simple = ((0, 2, -2, 0), (0, 0, 2, -2), (0, 0, 0, 2), (1, -1, -1, -1))
    fund = ((2, 2, 0, 0), (4, 2, 2, 0), (3, 1, 1, 1), (2, 0, 0, 0))
    gram = [[Fraction(int(i == j)) for j in range(4)] for i in range(4)]
    return RootSystem(
        label="F4", rank=4, simple_roots=simple, positive_roots=tuple(positive),
        fundamental_weights=fund, rho2=(11, 5, 3, 1), gram=_frac_matrix(gram),
    )


_BUILDERS = {
    "A1": _build_a1,
    "A2": _build_a2,
    "A3": _build_a3,
    "B2": _build_b2,
    "B3": lambda: _build_b(3),
    "B4": lambda: _build_b(4),
    "C3": _build_c3,
    "D2": lambda: _build_a1_power("D2", 2),
    "D3": lambda: _build_d(3),
    "D4": lambda: _build_d(4),
    "G2": _build_g2,
    "F4": _build_f4,
    "A1^3": lambda: _build_a1_power("A1^3", 3),
    "A1^4": lambda: _build_a1_power("A1^4", 4),
}

_CACHE: dict[str, RootSystem] = {}
_WEYL_CACHE: dict[str, WeylGroup] = {}


def _validate(rs: RootSystem) -> RootSystem:
    assert len(rs.positive_roots) == POSITIVE_COUNTS[rs.label]
    two_rho = [0] * rs.rank
    for a2 in rs.positive_roots:
        for k in range(rs.rank):
            two_rho[k] += a2[k]
    assert tuple(x // 2 for x in two_rho) == rs.rho2 and all(x % 2 == 0 for x in two_rho)
    for i in range(rs.rank):
        assert pairing(rs, rs.rho2, i) == 1
        for j in range(rs.rank):
            assert pairing(rs, rs.fundamental_weights[j], i) == int(i == j)
    return rs


def build(label: str) -> RootSystem:
    """Root system for a catalog label; raises UnsupportedLabel otherwise."""
    if label not in _BUILDERS:
        raise UnsupportedLabel(f"unknown root system {label!r}")
    if label not in _CACHE:
        _CACHE[label] = _validate(_BUILDERS[label]())
    return _CACHE[label]


def weyl_group(rs: RootSystem) -> WeylGroup:
    """Closure of the simple reflections, with signs (-1)^{l(w)}.

    Elements are stored as doubled matrices; the guard bound protects
    against runaway closures (largest catalog group is F4 with 1152).
    """
    if rs.label in _WEYL_CACHE:
        return _WEYL_CACHE[rs.label]
    r = rs.rank
    gens = []
    for a2, row in zip(rs.simple_roots, rs.coroot_rows):
        t = [[2 * int(k == l) - a2[k] * row[l] for l in range(r)] for k in range(r)]
        gens.append(tuple(tuple(x) for x in t))
    ident = tuple(tuple(2 * int(k == l) for l in range(r)) for k in range(r))
    seen = {ident: 1}
    frontier = [ident]
    while frontier:
        nxt = []
        for t in frontier:
            for g in gens:
                prod = []
                ok = True
                for k in range(r):
                    rowv = []
                    for l in range(r):
                        s = sum(g[k][m] * t[m][l] for m in range(r))
                        if s % 2:
                            ok = False
                            break
                        rowv.append(s // 2)
                    if not ok:
                        break
                    prod.append(tuple(rowv))
                if not ok:
                    raise NotIntegral("Weyl closure left the half-integer matrices")
                key = tuple(prod)
                if key not in seen:
                    seen[key] = -seen[t]
                    nxt.append(key)
                    if len(seen) > 10_000:
                        raise ClosureOverflow("Weyl closure exceeded 10^4 elements")
        frontier = nxt
    mats = sorted(seen)
    wg = WeylGroup(
        label=rs.label,
        mats2=np.array(mats, dtype=np.int64),
        signs=np.array([seen[m] for m in mats], dtype=np.int64),
    )
    assert wg.order == WEYL_ORDERS[rs.label]
    _WEYL_CACHE[rs.label] = wg
    return wg


def orbit(rs: RootSystem, v2: Weight) -> list[Weight]:
    """Weyl orbit of a vector, as a sorted list of doubled tuples."""
    wg = weyl_group(rs)
    pts = wg.mats2 @ np.array(v2, dtype=np.int64)
    if np.any(pts & 1):
        raise NotIntegral("orbit leaves the doubled-integer lattice")
    pts >>= 1
    uniq = np.unique(pts, axis=0)
    return [tuple(int(x) for x in row) for row in uniq]


def rs_to_obj(rs: RootSystem) -> dict:
    """JSON-ready dump with doubled-integer coordinate arrays."""
    return {
        "label": rs.label,
        "rank": rs.rank,
        "simple_roots_w2": [list(a) for a in rs.simple_roots],
        "positive_roots_w2": [list(a) for a in rs.positive_roots],
        "fundamental_weights_w2": [list(a) for a in rs.fundamental_weights],
        "rho_w2": list(rs.rho2),
        "gram": [[str(x) for x in row] for row in rs.gram],
        "weyl_order": WEYL_ORDERS[rs.label],
    }


def long_short_lengths(rs: RootSystem) -> tuple[set[int], int]:
    """Distinct squared lengths (rescaled) of the positive roots, plus scale.

    Returns the set of values of the rescaled form on the roots and the
    rescale factor q such that true squared length = value / q.
    """
    lengths = {inner2(rs, a2, a2) for a2 in rs.positive_roots}
    den = 1
    for row in rs.gram:
        for x in row:
            den = den * x.denominator // _gcd(den, x.denominator)
    return lengths, 4 * den
