//! Hopf algebras given by structure constants.

mod algebra;
pub mod builtins;
mod double;
mod integrals;
mod pivotal;
mod structure;

pub use algebra::{Element, Functional, HopfAlgebra, TensorElem};
pub use double::{
    drinfeld_double, drinfeld_element, drinfeld_map, factorizable_implies_unimodular_check, is_factorizable,
    r_matrix_check, RMatrix,
};
pub use integrals::{
    convolution_inverse, distinguished_element, distinguished_functional, dual_unimodular, is_semisimple,
    is_unimodular, left_integral, left_integrals, radford_check, right_integral, right_integrals, two_sided_hit,
};
pub use pivotal::{pivot_candidates, pivotal_extension, PivotCandidates, PivotalExtension};
pub use structure::{change_basis, compute_antipode, corrupt_constant, dual_hopf};
