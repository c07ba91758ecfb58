"""Splint embeddings and the generic branching oracle.

For the equal-rank pairs (B2/D2, B3/D3, C3/(A1)^3, G2/A2, F4/B4, B4/D4,
F4/D4) the two Cartan tori coincide, so restricting a character is a pure
change of coordinates on the weight lattice.  For the A-series pairs the
map drops to the smaller traceless hyperplane.  The oracle restricts the
ambient character along that map and peels off subalgebra irreducibles
greedily from the top, which decomposes any genuine character exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .characters import dim_weyl, freudenthal_character
from .errors import (
    NegativeMultiplicity,
    NondominantLeadingTerm,
    NotACharacter,
    NotDominant,
    NotIntegral,
    UnsupportedCase,
)
from .lattice import FormalCharacter, LatticeMap, apply_map, identity_map
from .rootsystems import RootSystem, build, from_lattice, inner2, is_dominant


@dataclass(frozen=True)
class SplintCase:
    """One splint pair: ambient system, subalgebra, and the lattice map.

    ``aux`` names the system whose module dimensions the branching
    coefficient sums are expected to match, where that is known; the F4
    chains and the C3 case carry no such assertion and report sums only.
    """

    tag: str
    ambient: str
    sub: str
    embedding: LatticeMap
    aux: str | None = None
    expected: str = "theorem"


_CASES: dict[str, SplintCase] = {}


def _register(case: SplintCase) -> None:
    _CASES[case.tag] = case


def _init_cases() -> None:
    if _CASES:
        return
    # A2 -> A1: difference of the first two L-coordinates.
    _register(SplintCase(
        "I2", "A2", "A1",
        LatticeMap(((Fraction(1), Fraction(-1)),), src="A2", dst="A1"),
        aux="D2",
    ))
    # A3 -> A2: L-coordinate differences against the dropped slot.
    _register(SplintCase(
        "I3", "A3", "A2",
        LatticeMap((
            (Fraction(1), Fraction(0), Fraction(-1)),
            (Fraction(0), Fraction(1), Fraction(-1)),
        ), src="A3", dst="A2"),
        aux="A1^3",
    ))
    # B2 -> D2: project onto the two orthogonal long roots.
    _register(SplintCase(
        "II2", "B2", "D2",
        LatticeMap((
            (Fraction(-1, 2), Fraction(1)),
            (Fraction(1, 2), Fraction(0)),
        ), src="B2", dst="D2"),
        aux="D2",
    ))
    _register(SplintCase("II3", "B3", "D3", identity_map(3, "B3", "D3"), aux="A1^3"))
    # C3 -> (A1)^3: the three long roots 2*eps_i, label a_i = eps-coordinate.
    _register(SplintCase(
        "III", "C3", "A1^3",
        LatticeMap((
            (Fraction(1, 2), Fraction(0), Fraction(0)),
            (Fraction(0), Fraction(1, 2), Fraction(0)),
            (Fraction(0), Fraction(0), Fraction(1, 2)),
        ), src="C3", dst="A1^3"),
        expected="conjecture",
    ))
    # G2 -> A2: same L-lattice, identity on coordinates.
    _register(SplintCase("IV", "G2", "A2", identity_map(2, "G2", "A2"), aux="A2"))
    _register(SplintCase(
        "V_F4_B4", "F4", "B4", identity_map(4, "F4", "B4"), expected="conjecture",
    ))
    _register(SplintCase("V_B4_D4", "B4", "D4", identity_map(4, "B4", "D4"), aux="A1^4"))
    _register(SplintCase(
        "V_F4_D4", "F4", "D4", identity_map(4, "F4", "D4"), expected="conjecture",
    ))


def splint_case(tag: str) -> SplintCase:
    _init_cases()
    if tag not in _CASES:
        raise UnsupportedCase(f"unknown splint case {tag!r}")
    return _CASES[tag]


def case_tags() -> tuple[str, ...]:
    _init_cases()
    return tuple(sorted(_CASES))


def embedding_map(case: SplintCase) -> LatticeMap:
    """The exact lattice map carrying ambient weights to subalgebra labels."""
    return case.embedding


@dataclass(frozen=True)
class BranchingResult:
    """Decomposition of one restricted irreducible.

    ``summands`` maps subalgebra highest-weight labels to positive
    multiplicities; ``coefficient_sum`` is their total and ``dim_check``
    records whether multiplicity-weighted subalgebra dimensions add up to
    the ambient dimension (they always must).
    """

    case: str
    ambient: str
    sub: str
    lam: tuple[int, ...]
    summands: dict[tuple[int, ...], int]
    coefficient_sum: int
    dim_check: bool

    def to_obj(self) -> dict:
        return {
            "case": self.case,
            "ambient": self.ambient,
            "lambda": list(self.lam),
            "summands": [
                {"nu": list(nu), "m": self.summands[nu]} for nu in sorted(self.summands)
            ],
            "coefficient_sum": self.coefficient_sum,
            "dim_check": self.dim_check,
        }


def make_result(case_tag: str, ambient: str, sub_label: str, lam,
                summands: dict[tuple[int, ...], int]) -> BranchingResult:
    """Assemble a BranchingResult and verify dimension conservation."""
    sub = build(sub_label)
    total = sum(m * dim_weyl(sub, nu) for nu, m in summands.items())
    amb_dim = dim_weyl(build(ambient), lam)
    return BranchingResult(
        case=case_tag, ambient=ambient, sub=sub_label, lam=tuple(lam),
        summands=dict(summands),
        coefficient_sum=sum(summands.values()),
        dim_check=(total == amb_dim),
    )


def peel(c: FormalCharacter, sub: RootSystem, allow_negative: bool = False
         ) -> dict[tuple[int, ...], int]:
    """Write a character as an integer combination of irreducibles of sub.

    Repeatedly picks the support weight maximizing (mu, rho) with a
    lexicographic tie-break; it must be dominant, and its coefficient is
    the multiplicity of that irreducible.  With allow_negative the input
    may be any virtual character.
    """
    work = dict(c.terms)
    out: dict[tuple[int, ...], int] = {}
    rho2 = sub.rho2
    while work:
        mu2 = max(work, key=lambda w2: (inner2(sub, w2, rho2), w2))
        mult = work[mu2]
        if not is_dominant(sub, mu2):
            raise NondominantLeadingTerm(
                f"leading weight {mu2} not dominant for {sub.label}"
            )
        if mult < 0 and not allow_negative:
            raise NegativeMultiplicity(
                f"multiplicity {mult} at {mu2} while peeling over {sub.label}"
            )
        try:
            nu = from_lattice(sub, mu2)
        except (NotDominant, NotIntegral) as exc:
            raise NondominantLeadingTerm(str(exc)) from exc
        chi = freudenthal_character(sub, nu).character
        for w2, cc in chi.terms.items():
            t = work.get(w2, 0) - mult * cc
            if t:
                work[w2] = t
            else:
                work.pop(w2, None)
        if nu in out:
            raise NotACharacter(f"label {nu} recurred while peeling")
        out[nu] = mult
    return out


def decompose(c: FormalCharacter, sub: RootSystem) -> dict[tuple[int, ...], int]:
    """Decompose a genuine character of sub into irreducibles, exactly."""
    return peel(c, sub, allow_negative=False)


def branch_oracle(case: SplintCase, coeffs) -> BranchingResult:
    """Restrict along the embedding and decompose; exact in every step."""
    ambient = build(case.ambient)
    sub = build(case.sub)
    chi = freudenthal_character(ambient, coeffs).character
    restricted = apply_map(case.embedding, chi)
    summands = decompose(restricted, sub)
    res = make_result(case.tag, case.ambient, case.sub, tuple(coeffs), summands)
    assert res.dim_check, f"dimension conservation failed for {case.tag} {coeffs}"
    return res


@dataclass(frozen=True)
class CoefficientSumReport:
    """Comparison of a coefficient sum against an auxiliary module dimension."""

    coefficient_sum: int
    aux_dim: int
    equal: bool

    def to_obj(self) -> dict:
        return {
            "coefficient_sum": self.coefficient_sum,
            "aux_dim": self.aux_dim,
            "equal": self.equal,
        }


def coefficient_sum_report(result: BranchingResult, aux: RootSystem, omega
                           ) -> CoefficientSumReport:
    """Compare the number of summands (with multiplicity) to dim of omega."""
    d = dim_weyl(aux, omega)
    return CoefficientSumReport(result.coefficient_sum, d, result.coefficient_sum == d)
