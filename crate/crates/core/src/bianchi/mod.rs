//! Bianchi systems for weak-curvature tensors P(h) and curvature tensors R(g).

mod checks;
mod curvature;
mod weak;

use serde::{Serialize, Serializer};

pub use checks::{curvature_to_weak, lp_is_ideal, pspace_direct_sum_check, xi_twist, DirectSumReport};
pub use curvature::{
    berger_check, build_curvature_matrix, build_curvature_rows, curvature_residual_zero, curvature_space, l_of_r,
    pair_index, pair_symmetry_holds, pairs, value as curvature_value, BergerReport, CurvatureBasis,
};
pub use weak::{
    build_weak_bianchi_matrix, build_weak_bianchi_rows, l_of_p, weak_berger_check, weak_curvature_space,
    weak_residual_zero, WeakBergerReport, WeakCurvatureBasis,
};

/// Outcome of a Berger or weak-Berger test; the zero algebra is vacuous.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    True,
    False,
    Vacuous,
}

impl Verdict {
    pub fn from_bool(b: bool) -> Self {
        if b {
            Verdict::True
        } else {
            Verdict::False
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::True => "true",
            Verdict::False => "false",
            Verdict::Vacuous => "vacuous",
        }
    }
}

impl Serialize for Verdict {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Verdict::True => s.serialize_bool(true),
            Verdict::False => s.serialize_bool(false),
            Verdict::Vacuous => s.serialize_str("vacuous"),
        }
    }
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}
