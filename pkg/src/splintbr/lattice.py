"""Exact arithmetic for weight-lattice points and formal characters.

A weight is a point of a rank-r lattice whose coordinates are integers or
half-integers.  Every coordinate is stored doubled, so a weight is just a
tuple of ints: the vector (3/2, -1) is stored as (3, -2).  This keeps all
arithmetic in plain integers; no floating point is used anywhere.

A formal character is a finitely supported integer-valued function on such
a lattice, held as a dict from doubled-coordinate tuples to nonzero
coefficients.  Genuine characters have nonnegative coefficients whose sum
is the dimension of the module; differences of characters (virtual
characters) are equally valid values.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import NotIntegral, RankMismatch

Weight = tuple[int, ...]


def weight_from_coords(coords) -> Weight:
    """Build a doubled-integer weight from exact coordinates.

    Accepts ints and Fractions; every coordinate times 2 must be an integer.
    """
    out = []
    for c in coords:
        d = 2 * Fraction(c)
        if d.denominator != 1:
            raise NotIntegral(f"coordinate {c} is not a half-integer")
        out.append(int(d))
    return tuple(out)


def weight_coords(w2: Weight) -> tuple[Fraction, ...]:
    """Exact coordinates of a doubled-integer weight."""
    return tuple(Fraction(d, 2) for d in w2)


def wadd(a: Weight, b: Weight) -> Weight:
    return tuple(x + y for x, y in zip(a, b))


def wsub(a: Weight, b: Weight) -> Weight:
    return tuple(x - y for x, y in zip(a, b))


def wneg(a: Weight) -> Weight:
    return tuple(-x for x in a)


def wscale(n: int, a: Weight) -> Weight:
    return tuple(n * x for x in a)


@dataclass(frozen=True)
class FormalCharacter:
    """Finitely supported integer function on a weight lattice.

    ``terms`` maps doubled-coordinate tuples to nonzero integers.  The dict
    is never mutated after construction; all operations return new values,
    so instances are safe to share across threads.
    """

    rank: int
    terms: dict[Weight, int] = field(default_factory=dict)

    def __post_init__(self):
        for w2, c in self.terms.items():
            if len(w2) != self.rank:
                raise RankMismatch(f"term {w2} has rank {len(w2)}, expected {self.rank}")
            if c == 0:
                raise ValueError(f"stored zero coefficient at {w2}")

    @classmethod
    def from_items(cls, rank: int, items) -> "FormalCharacter":
        """Accumulate (weight, coefficient) pairs, pruning zeros."""
        acc: dict[Weight, int] = {}
        for w2, c in items:
            t = acc.get(w2, 0) + c
            if t:
                acc[w2] = t
            else:
                acc.pop(w2, None)
        return cls(rank, acc)

    def mass(self) -> int:
        """Sum of all coefficients (the dimension, for a genuine character)."""
        return sum(self.terms.values())

    def __len__(self) -> int:
        return len(self.terms)

    def __getitem__(self, w2: Weight) -> int:
        return self.terms.get(tuple(w2), 0)


def char_single(rank: int, w2: Weight, c: int = 1) -> FormalCharacter:
    """The one-term character c * e^w."""
    return FormalCharacter(rank, {tuple(w2): c} if c else {})


def char_add(a: FormalCharacter, b: FormalCharacter) -> FormalCharacter:
    """Pointwise sum; coefficients that cancel are pruned."""
    if a.rank != b.rank:
        raise RankMismatch(f"rank {a.rank} != rank {b.rank}")
    acc = dict(a.terms)
    for w2, c in b.terms.items():
        t = acc.get(w2, 0) + c
        if t:
            acc[w2] = t
        else:
            acc.pop(w2, None)
    return FormalCharacter(a.rank, acc)


def char_neg(a: FormalCharacter) -> FormalCharacter:
    return FormalCharacter(a.rank, {w2: -c for w2, c in a.terms.items()})


def char_scale(n: int, a: FormalCharacter) -> FormalCharacter:
    if n == 0:
        return FormalCharacter(a.rank, {})
    return FormalCharacter(a.rank, {w2: n * c for w2, c in a.terms.items()})


def char_mul(a: FormalCharacter, b: FormalCharacter) -> FormalCharacter:
    """Product of exponential sums: convolution of the supports.

    (a*b)[mu] = sum over nu of a[nu] * b[mu - nu], computed exactly.
    """
    if a.rank != b.rank:
        raise RankMismatch(f"rank {a.rank} != rank {b.rank}")
    if len(a.terms) > len(b.terms):
        a, b = b, a
    acc: dict[Weight, int] = {}
    for wa, ca in a.terms.items():
        for wb, cb in b.terms.items():
            w = tuple(x + y for x, y in zip(wa, wb))
            t = acc.get(w, 0) + ca * cb
            if t:
                acc[w] = t
            else:
                del acc[w]
    return FormalCharacter(a.rank, acc)


@dataclass(frozen=True)
class LatticeMap:
    """Exact linear map between weight lattices.

    ``matrix`` is rank_out x rank_in with Fraction entries, acting on true
    (not doubled) coordinates; since the map is linear it acts on doubled
    coordinates by the same matrix.  Equal-rank embeddings are invertible
    changes of fundamental-weight basis.
    """

    matrix: tuple[tuple[Fraction, ...], ...]
    src: str = ""
    dst: str = ""

    @property
    def rank_in(self) -> int:
        return len(self.matrix[0])

    @property
    def rank_out(self) -> int:
        return len(self.matrix)

    def apply_weight(self, w2: Weight) -> Weight:
        """Image of a doubled-coordinate weight; must land on the lattice."""
        if len(w2) != self.rank_in:
            raise RankMismatch(f"weight rank {len(w2)}, map expects {self.rank_in}")
        out = []
        for row in self.matrix:
            v = sum(q * d for q, d in zip(row, w2))
            if v.denominator != 1:
                raise NotIntegral(f"image of {w2} leaves the doubled-integer lattice")
            out.append(int(v))
        return tuple(out)

    def inverse(self) -> "LatticeMap":
        """Exact inverse of a square invertible map."""
        n = self.rank_out
        if n != self.rank_in:
            raise RankMismatch("only square maps can be inverted")
        aug = [
            [Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
            for i, row in enumerate(self.matrix)
        ]
        for col in range(n):
            piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
            if piv is None:
                raise ValueError("map is singular")
            aug[col], aug[piv] = aug[piv], aug[col]
            inv = 1 / aug[col][col]
            aug[col] = [x * inv for x in aug[col]]
            for r in range(n):
                if r != col and aug[r][col] != 0:
                    f = aug[r][col]
                    aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
        mat = tuple(tuple(row[n:]) for row in aug)
        return LatticeMap(mat, src=self.dst, dst=self.src)


def apply_map(m: LatticeMap, c: FormalCharacter) -> FormalCharacter:
    """Pushforward of a character; coefficients of coinciding images add."""
    if m.rank_in != c.rank:
        raise RankMismatch(f"character rank {c.rank}, map expects {m.rank_in}")
    acc: dict[Weight, int] = {}
    for w2, coeff in c.terms.items():
        img = m.apply_weight(w2)
        t = acc.get(img, 0) + coeff
        if t:
            acc[img] = t
        else:
            del acc[img]
    return FormalCharacter(m.rank_out, acc)


def identity_map(rank: int, src: str = "", dst: str = "") -> LatticeMap:
    mat = tuple(
        tuple(Fraction(int(i == j)) for j in range(rank)) for i in range(rank)
    )
    return LatticeMap(mat, src=src, dst=dst)


def char_to_obj(c: FormalCharacter) -> dict:
    """JSON-ready form, terms sorted lexicographically by doubled coords."""
    return {
        "rank": c.rank,
        "terms": [
            {"w2": list(w2), "c": c.terms[w2]} for w2 in sorted(c.terms)
        ],
    }


def char_from_obj(obj: dict) -> FormalCharacter:
    terms = {tuple(t["w2"]): int(t["c"]) for t in obj["terms"]}
    return FormalCharacter(int(obj["rank"]), terms)
