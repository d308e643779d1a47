from .linalg_util import Snf_result, snf, saturate, hermite_basis, kernel_basis, det, signature
from .lattice import Lattice, Lattice_vector, Sublattice
from .lattice import make_U, make_E8, make_rank_one, rescale, direct_sum
from .lattice import inner, norm, divisibility, is_primitive, orthogonal_complement
from .represent import represent, isometry_search
from .eichler import residue, eichler_invariant, eichler_equivalent, is_hyperbolic_plane

from .disc_form import Finite_quadratic_form, Isotropic_subgroup, Rank2_class
from .disc_form import discriminant_group, is_two_elementary, two_elementary_invariants, classify_rank2
from .disc_form import isotropic_subgroups, overlattice, is_primitive_in

from .involution import K3_two_lattice, Involution, Involution_class, k3_two_lattice
from .involution import class_embedding, involution_from_fixed_sublattice, component_swap_isometry
from .involution import admissible_hodge_orders, verify_g_complement
from .walls import Class_row, verify_class, walls_and_chambers, wall_reflection, ns_isometries, extendable_ns_actions

from .mukai import Mukai_vector, mukai_pairing, mukai_square, mukai_vector_of_sheaf
from .mukai import ogrady_invariant_lattice, beauville_invariants, trace_from_invariant_rank
from .mukai import hilbert_scheme_vector, moduli_dimension, impossibility_u2, impossibility_no4
from .fixed_locus import Weierstrass_divisor_class, jacobian_fixed_classes, r_invariant, monodromy_orbits

from .report import Report

__all__ = [
    "Snf_result",
    "snf",
    "saturate",
    "hermite_basis",
    "kernel_basis",
    "det",
    "signature",
    "Lattice",
    "Lattice_vector",
    "Sublattice",
    "make_U",
    "make_E8",
    "make_rank_one",
    "rescale",
    "direct_sum",
    "inner",
    "norm",
    "divisibility",
    "is_primitive",
    "orthogonal_complement",
    "represent",
    "isometry_search",
    "residue",
    "eichler_invariant",
    "eichler_equivalent",
    "is_hyperbolic_plane",
    "Finite_quadratic_form",
    "Isotropic_subgroup",
    "Rank2_class",
    "discriminant_group",
    "is_two_elementary",
    "two_elementary_invariants",
    "classify_rank2",
    "isotropic_subgroups",
    "overlattice",
    "is_primitive_in",
    "K3_two_lattice",
    "Involution",
    "Involution_class",
    "k3_two_lattice",
    "class_embedding",
    "involution_from_fixed_sublattice",
    "component_swap_isometry",
    "admissible_hodge_orders",
    "verify_g_complement",
    "Class_row",
    "verify_class",
    "walls_and_chambers",
    "wall_reflection",
    "ns_isometries",
    "extendable_ns_actions",
    "Mukai_vector",
    "mukai_pairing",
    "mukai_square",
    "mukai_vector_of_sheaf",
    "ogrady_invariant_lattice",
    "beauville_invariants",
    "trace_from_invariant_rank",
    "hilbert_scheme_vector",
    "moduli_dimension",
    "impossibility_u2",
    "impossibility_no4",
    "Weierstrass_divisor_class",
    "jacobian_fixed_classes",
    "r_invariant",
    "monodromy_orbits",
    "Report",
]
