"""Exact branching rules for splint root-system pairs.

A splint of a root system is a disjoint decomposition into two embedded
root systems; restriction of irreducibles along the corresponding
subalgebra then admits closed combinatorial rules.  This package computes
characters and dimensions exactly, implements the closed-form rules for
all splint types, and verifies each against an independent
character-restriction oracle.
"""

from .branching import (
    BranchingResult,
    SplintCase,
    branch_oracle,
    case_tags,
    coefficient_sum_report,
    decompose,
    embedding_map,
    splint_case,
)
from .characters import (
    IrrepCharacter,
    configure_disk_cache,
    dim_weyl,
    freudenthal_character,
    wcf_consistency,
)
from .errors import SplintError
from .lattice import FormalCharacter, LatticeMap, apply_map, char_add, char_mul
from .rootsystems import RootSystem, build, from_lattice, to_lattice, weyl_group
from .rules import (
    HexagonSpec,
    RuleReport,
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

__version__ = "0.1.0"

__all__ = [
    "BranchingResult",
    "FormalCharacter",
    "HexagonSpec",
    "IrrepCharacter",
    "LatticeMap",
    "RootSystem",
    "RuleReport",
    "SplintCase",
    "SplintError",
    "apply_map",
    "branch_oracle",
    "build",
    "case_tags",
    "char_add",
    "char_mul",
    "coefficient_sum_report",
    "configure_disk_cache",
    "decompose",
    "dim_weyl",
    "embedding_map",
    "freudenthal_character",
    "from_lattice",
    "hexagon_multiplicity",
    "rule_b2_d2",
    "rule_c3",
    "rule_f4_b4",
    "rule_f4_d4",
    "rule_g2_a2",
    "rule_gt_typeI",
    "rule_gt_typeII",
    "splint_case",
    "to_lattice",
    "verify_rule",
    "wcf_consistency",
    "weyl_group",
]
