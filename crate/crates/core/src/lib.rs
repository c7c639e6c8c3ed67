//! Exact computation of curvature-tensor spaces for subalgebras of
//! orthogonal and Lorentzian Lie algebras.

pub mod bianchi;
pub mod cli;
pub mod error;
pub mod exactq;
pub mod lorentz;
pub mod repkit;
pub mod torus;
