"""Irreducible characters, dimensions, and the character-formula cross-check.

The production engine is the division-free multiplicity recursion: starting
from the highest weight, the multiplicity of each lower dominant weight is
determined by an exact integer recursion over root strings, and the full
character is obtained by Weyl-orbit expansion.  The alternating-sum form of
the character formula is kept as an independent consistency check: the
product of the character with the Weyl denominator, computed by exact
convolution, must equal the signed orbit sum of lambda + rho term by term.

All arithmetic is exact.  numpy is used only for bulk integer operations
(orbit expansion and large convolutions), with explicit overflow guards.
"""

from __future__ import annotations

import hashlib
import json
import threading
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

import numpy as np

from .errors import NonIntegerResult, ZeroDenominator
from .lattice import (
    FormalCharacter,
    Weight,
    char_from_obj,
    char_mul,
    char_to_obj,
    wadd,
)
from .rootsystems import (
    RootSystem,
    inner2,
    to_lattice,
    weyl_group,
)


@dataclass(frozen=True)
class IrrepCharacter:
    """An irreducible character with its highest weight and dimension."""

    system: str
    highest: tuple[int, ...]
    character: FormalCharacter
    dimension: int

    def __post_init__(self):
        if self.character.mass() != self.dimension:
            raise NonIntegerResult(
                f"{self.system} {self.highest}: character mass "
                f"{self.character.mass()} != dimension {self.dimension}"
            )


def dim_weyl(rs: RootSystem, coeffs) -> int:
    """Dimension of the irreducible with the given highest weight.

    Product over positive roots of (lambda+rho, alpha) / (rho, alpha); the
    rational product must clear denominators, anything else signals a
    broken realization.
    """
    lam2 = to_lattice(rs, coeffs)
    lamrho = wadd(lam2, rs.rho2)
    out = Fraction(1)
    for a2 in rs.positive_roots:
        out *= Fraction(inner2(rs, lamrho, a2), inner2(rs, rs.rho2, a2))
    if out.denominator != 1:
        raise NonIntegerResult(f"dimension for {rs.label} {coeffs} is {out}")
    return int(out)


def _dominant_below(rs: RootSystem, lam2: Weight) -> tuple[np.ndarray, np.ndarray]:
    """All dominant weights mu <= lambda, with their depths.

    Depth is the number of simple roots in lambda - mu counted with
    multiplicity.  Enumeration scans a box in fundamental-coefficient space
    cut out by the norm bound |mu + rho| <= |lambda + rho|, which contains
    every dominant weight below lambda, then keeps the points whose
    difference from lambda is a nonnegative integer root combination.
    """
    r = rs.rank
    m = rs.np_form2
    rho2 = np.array(rs.rho2, dtype=np.int64)
    lam = np.array(lam2, dtype=np.int64)
    lamrho = lam + rho2
    bound = int(lamrho @ m @ lamrho)
    fund = rs.np_fund2
    caps = []
    for i in range(r):
        k = 0
        while True:
            v = (k + 1) * fund[i] + rho2
            if int(v @ m @ v) > bound:
                break
            k += 1
        caps.append(k)
    grids = np.meshgrid(*[np.arange(c + 1, dtype=np.int64) for c in caps], indexing="ij")
    coeffs = np.stack(grids, axis=-1).reshape(-1, r)
    mu2 = coeffs @ fund
    v = mu2 + rho2
    keep = np.einsum("ni,ij,nj->n", v, m, v) <= bound
    mu2 = mu2[keep]
    num, den = rs._simple_inverse
    d = (lam - mu2) @ num.T
    ok = np.all(d % den == 0, axis=1) & np.all(d >= 0, axis=1)
    mu2 = mu2[ok]
    depths = (d[ok] // den).sum(axis=1)
    return mu2, depths


def _expand_orbits(wg, pts: list[Weight], vals: list[int], full: dict[Weight, int]):
    """Write the Weyl orbits of dominant points into the support dict."""
    arr = np.array(pts, dtype=np.int64)
    big = np.einsum("wkl,nl->wnk", wg.mats2, arr)
    if np.any(big & 1):
        raise NonIntegerResult("orbit expansion left the weight lattice")
    big >>= 1
    flat = big.reshape(-1, arr.shape[1])
    fvals = np.broadcast_to(
        np.array(vals, dtype=np.int64)[None, :], (wg.order, len(pts))
    ).reshape(-1)
    uniq, idx = np.unique(flat, axis=0, return_index=True)
    for row, val in zip(uniq.tolist(), fvals[idx].tolist()):
        full[tuple(row)] = val


def _freudenthal(rs: RootSystem, coeffs: tuple[int, ...]) -> IrrepCharacter:
    lam2 = to_lattice(rs, coeffs)
    dim = dim_weyl(rs, coeffs)
    wg = weyl_group(rs)
    mu_arr, depth_arr = _dominant_below(rs, lam2)

    levels: dict[int, list[Weight]] = {}
    for row, dep in zip(mu_arr.tolist(), depth_arr.tolist()):
        levels.setdefault(int(dep), []).append(tuple(row))

    form = rs.form2
    r = rs.rank

    def mrow(v2):
        return tuple(sum(form[i][j] * v2[j] for j in range(r)) for i in range(r))

    roots = []
    for a2 in rs.positive_roots:
        ma = mrow(a2)
        aa = sum(x * y for x, y in zip(a2, ma))
        roots.append((a2, ma, aa))

    lamrho = wadd(lam2, rs.rho2)
    nlam = inner2(rs, lamrho, lamrho)

    full: dict[Weight, int] = {}
    for depth in sorted(levels):
        pts, vals = [], []
        for mu2 in levels[depth]:
            if depth == 0:
                mult = 1
            else:
                acc = 0
                for a2, ma, aa in roots:
                    base = sum(x * y for x, y in zip(ma, mu2))
                    j = 1
                    v = wadd(mu2, a2)
                    while True:
                        mv = full.get(v)
                        if mv is None:
                            break
                        acc += mv * (base + j * aa)
                        j += 1
                        v = wadd(v, a2)
                murho = wadd(mu2, rs.rho2)
                den = nlam - inner2(rs, murho, murho)
                if den == 0:
                    raise ZeroDenominator(f"degenerate weight {mu2} below {coeffs}")
                mult, rem = divmod(2 * acc, den)
                if rem:
                    raise NonIntegerResult(f"fractional multiplicity at {mu2}")
            pts.append(mu2)
            vals.append(mult)
        _expand_orbits(wg, pts, vals, full)

    char = FormalCharacter(rs.rank, full)
    if char[lam2] != 1:
        raise NonIntegerResult(f"highest weight coefficient is {char[lam2]}")
    return IrrepCharacter(rs.label, tuple(coeffs), char, dim)


# ----------------------------------------------------------------------
# Memoization and the optional on-disk character store
# ----------------------------------------------------------------------

_MEMO: dict[tuple[str, tuple[int, ...]], IrrepCharacter] = {}
_MEMO_LOCK = threading.Lock()
_STORE: "CharStore | None" = None


def _char_checksum(obj: dict) -> str:
    blob = json.dumps(obj, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode()).hexdigest()


class CharStore:
    """Content-checked JSON-lines character cache, one file per system.

    Entries carry a sha256 checksum; corrupt or stale lines are skipped on
    read and the character is recomputed, never trusted.  Writes append, so
    concurrent readers stay safe and the last valid write wins.
    """

    def __init__(self, root):
        self.root = Path(root)
        self.root.mkdir(parents=True, exist_ok=True)
        self._index: dict[str, dict[tuple[int, ...], dict]] = {}

    def _load(self, label: str) -> dict:
        if label in self._index:
            return self._index[label]
        idx: dict[tuple[int, ...], dict] = {}
        path = self.root / f"{label}.jsonl"
        if path.exists():
            for line in path.read_text().splitlines():
                try:
                    rec = json.loads(line)
                    obj = rec["char"]
                    if _char_checksum(obj) != rec["sha256"]:
                        continue
                    idx[tuple(rec["key"])] = obj
                except (ValueError, KeyError, TypeError):
                    continue
        self._index[label] = idx
        return idx

    def get(self, label: str, coeffs) -> FormalCharacter | None:
        obj = self._load(label).get(tuple(coeffs))
        return char_from_obj(obj) if obj is not None else None

    def put(self, label: str, coeffs, char: FormalCharacter) -> None:
        obj = char_to_obj(char)
        rec = {"key": list(coeffs), "sha256": _char_checksum(obj), "char": obj}
        path = self.root / f"{label}.jsonl"
        with path.open("a") as fh:
            fh.write(json.dumps(rec, sort_keys=True, separators=(",", ":")) + "\n")
        self._load(label)[tuple(coeffs)] = obj


def configure_disk_cache(path=None) -> None:
    """Set (or clear) the process-wide on-disk character store."""
    global _STORE
    _STORE = CharStore(path) if path else None


def clear_memo() -> None:
    with _MEMO_LOCK:
        _MEMO.clear()


def freudenthal_character(rs: RootSystem, coeffs) -> IrrepCharacter:
    """Irreducible character by the exact multiplicity recursion, memoized."""
    key = (rs.label, tuple(int(c) for c in coeffs))
    hit = _MEMO.get(key)
    if hit is not None:
        return hit
    irr = None
    if _STORE is not None:
        cached = _STORE.get(*key)
        if cached is not None:
            try:
                irr = IrrepCharacter(rs.label, key[1], cached, dim_weyl(rs, key[1]))
            except NonIntegerResult:
                irr = None
    if irr is None:
        irr = _freudenthal(rs, key[1])
        if _STORE is not None:
            _STORE.put(rs.label, key[1], irr.character)
    with _MEMO_LOCK:
        _MEMO.setdefault(key, irr)
    return irr


# ----------------------------------------------------------------------
# Weyl character formula consistency
# ----------------------------------------------------------------------

_DENOM_MEMO: dict[str, FormalCharacter] = {}


def weyl_denominator(rs: RootSystem) -> FormalCharacter:
    """The denominator e^rho * prod over positive roots of (1 - e^{-alpha})."""
    if rs.label in _DENOM_MEMO:
        return _DENOM_MEMO[rs.label]
    acc: dict[Weight, int] = {rs.rho2: 1}
    for a2 in rs.positive_roots:
        new: dict[Weight, int] = {}
        for w2, c in acc.items():
            for shift, sign in ((w2, c), (tuple(x - a for x, a in zip(w2, a2)), -c)):
                t = new.get(shift, 0) + sign
                if t:
                    new[shift] = t
                else:
                    del new[shift]
        acc = new
    out = FormalCharacter(rs.rank, acc)
    _DENOM_MEMO[rs.label] = out
    return out


def weyl_numerator(rs: RootSystem, coeffs) -> FormalCharacter:
    """Signed orbit sum of lambda + rho over the Weyl group."""
    wg = weyl_group(rs)
    lamrho = np.array(wadd(to_lattice(rs, coeffs), rs.rho2), dtype=np.int64)
    pts = wg.mats2 @ lamrho
    if np.any(pts & 1):
        raise NonIntegerResult("numerator orbit left the weight lattice")
    pts >>= 1
    acc: dict[Weight, int] = {}
    for row, sign in zip(pts.tolist(), wg.signs.tolist()):
        w2 = tuple(row)
        t = acc.get(w2, 0) + sign
        if t:
            acc[w2] = t
        else:
            del acc[w2]
    return FormalCharacter(rs.rank, acc)


def _dense_product_equals(
    a: FormalCharacter, b: FormalCharacter, expect: FormalCharacter
) -> bool:
    """Exact test a * b == expect via a dense int64 accumulator.

    Semantically identical to char_mul followed by comparison, but shifts
    the larger factor through a flat integer array instead of convolving
    dicts.  Falls back to the pure path when int64 bounds cannot be
    guaranteed.
    """
    ka = np.array(list(a.terms.keys()), dtype=np.int64)
    va = np.array(list(a.terms.values()), dtype=np.int64)
    kb = np.array(list(b.terms.keys()), dtype=np.int64)
    vb = np.array(list(b.terms.values()), dtype=np.int64)
    peak = int(np.abs(vb).max()) * int(np.abs(va).sum())
    lo = ka.min(axis=0) + kb.min(axis=0)
    hi = ka.max(axis=0) + kb.max(axis=0)
    shape = hi - lo + 1
    size = int(np.prod(shape))
    if peak >= 2**62 or size > 80_000_000:
        return char_mul(a, b) == expect
    strides = np.ones(len(shape), dtype=np.int64)
    for i in range(len(shape) - 2, -1, -1):
        strides[i] = strides[i + 1] * shape[i + 1]
    acc = np.zeros(size, dtype=np.int64)
    base = kb @ strides - int(lo @ strides)
    offs = ka @ strides
    for off, coeff in zip(offs.tolist(), va.tolist()):
        acc[base + off] += coeff * vb
    for w2, c in expect.terms.items():
        w = np.array(w2, dtype=np.int64)
        if np.any(w < lo) or np.any(w > hi):
            return False
        acc[int((w - lo) @ strides)] -= c
    return not np.any(acc)


def wcf_consistency(rs: RootSystem, coeffs) -> bool:
    """Check delta * chi(lambda) == signed orbit sum of lambda + rho, exactly.

    True means the recursion engine and the alternating-sum formula agree
    term by term; false signals an engine bug.
    """
    chi = freudenthal_character(rs, coeffs).character
    delta = weyl_denominator(rs)
    numer = weyl_numerator(rs, coeffs)
    if len(delta) * len(chi) <= 1_000_000:
        return char_mul(delta, chi) == numer
    return _dense_product_equals(delta, chi, numer)
