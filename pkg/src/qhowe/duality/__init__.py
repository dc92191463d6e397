"""Representations, monogenics, projection, Fischer decomposition and symmetries."""

from qhowe.duality.checks import (
    adjoint_table,
    check_ad_F_powers,
    check_adjoint_table,
    check_commuting_pair,
    check_fe_power_lemma,
    check_fischer,
    check_projector,
    check_sl2_relations,
    check_symmetries,
    check_z1_projection,
)
from qhowe.duality.monogenics import (
    check_monogenic_generators,
    check_weight_multiplicities,
    lowest_weight_exponents,
    monogenic_spanning_set,
    p_minus,
    p_minus_by_recurrence,
    p_plus,
    predicted_multiplicity,
)
from qhowe.duality.projection import (
    FischerComponents,
    candidate_support,
    e_preimage,
    fischer_decompose,
    project,
    projection_coefficient,
)
from qhowe.duality.reps import (
    Sl2Triple,
    ad_F_powers_of_mu1,
    adjoint,
    build_sigma_delta,
    build_sigma_dual,
    build_sigma_s,
    build_sigma_w,
    build_Z1,
    build_Z2,
    raising_symmetry,
    trivial_triple,
)

__all__ = [
    "FischerComponents",
    "Sl2Triple",
    "ad_F_powers_of_mu1",
    "adjoint",
    "adjoint_table",
    "build_Z1",
    "build_Z2",
    "build_sigma_delta",
    "build_sigma_dual",
    "build_sigma_s",
    "build_sigma_w",
    "candidate_support",
    "check_ad_F_powers",
    "check_adjoint_table",
    "check_commuting_pair",
    "check_fe_power_lemma",
    "check_fischer",
    "check_monogenic_generators",
    "check_projector",
    "check_sl2_relations",
    "check_symmetries",
    "check_weight_multiplicities",
    "check_z1_projection",
    "e_preimage",
    "fischer_decompose",
    "lowest_weight_exponents",
    "monogenic_spanning_set",
    "p_minus",
    "p_minus_by_recurrence",
    "p_plus",
    "predicted_multiplicity",
    "project",
    "projection_coefficient",
    "raising_symmetry",
    "trivial_triple",
]
