//! Minkowski model: type algebras in so(V)_{ℝp}, canonical curvature
//! tensors, and their decomposition.

mod algebra;
mod canonical;
mod frame;
mod theorem;

pub use algebra::{build_type_algebra, orthogonal_part, AlgebraType, LorentzAlgebra, TypeParams};
pub use canonical::{
    assemble, canonical_curvature, decompose_curvature, CanonicalKind, CurvatureComponents, LemmaCheck,
};
pub use frame::{wedge_metric_pairing, MinkowskiFrame};
pub use theorem::{corollary1_crosscheck, theorem3_verify, Corollary1Report, Theorem3Report};
