//! Orthogonal representations: construction, the named catalog, analysis.

pub mod analysis;
pub mod builders;
pub mod catalog;
pub mod complex;
pub mod lie;
pub mod rep;
pub mod stabilizer;
pub mod symmetric;

pub use analysis::{
    center, centralizer_in_so, commutant, cyclic_submodule, decompose_rep, equivalent, intertwiners, is_irreducible,
    restrict_to_invariant, self_adjoint_commutant, Component, Decomposition, Irreducibility,
};
pub use builders::{add_center_line, direct_sum_rep, standard_so, tensor_product_rep, trivial_rep, RepFactor};
pub use catalog::{CatalogEntry, Column};
pub use complex::{realify, su2_irrep, CMatrix, ComplexRep, StructureKind};
pub use lie::{adjoint_rep, LieAlgebraSpec};
pub use rep::{OrthRep, RepJson};
pub use stabilizer::{stabilizer_subalgebra, Tensor};
pub use symmetric::so3_sym_power;
