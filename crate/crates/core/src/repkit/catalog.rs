use serde::Serialize;
use serde_json::json;

use crate::error::RepError;

use super::builders::{add_center_line, standard_so, tensor_product_rep, RepFactor};
use super::complex::{realify, su2_irrep, ComplexRep, StructureKind};
use super::lie::{adjoint_rep, LieAlgebraSpec};
use super::rep::OrthRep;
use super::stabilizer::{g2, quaternionic_structure, special_unitary, symplectic};
use super::symmetric::so3_sym_power;

/// Which list an entry belongs to: holonomy algebras of Riemannian manifolds,
/// or the other irreducible subalgebras.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Column {
    Holonomy,
    Other,
}

#[derive(Clone, Copy, Debug)]
enum Recipe {
    So(usize),
    SymPower(usize),
    Su2Fundamental,
    SpecialUnitary(usize),
    Sp2,
    G2,
    TensorSu2(usize, usize),
    TensorSo3Vectors,
    Sp2Sp1,
    AdjointSu3,
    Su2Realified(usize),
    WithCenter(&'static str),
}

/// One catalog row.
#[derive(Clone, Copy, Debug)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub aliases: &'static [&'static str],
    pub n: usize,
    pub column: Column,
    pub note: Option<&'static str>,
    recipe: Recipe,
}

impl CatalogEntry {
    /// Expected weak-Berger verdict implied by the column.
    pub fn expected_weak_berger(&self) -> bool {
        self.column == Column::Holonomy
    }

    pub fn build(&self) -> Result<OrthRep, RepError> {
        let rep = build_recipe(self.recipe)?;
        let mut prov = json!({
            "catalog": self.name,
            "row": self.n,
            "column": self.column,
            "construction": rep.provenance().clone(),
        });
        if let Some(note) = self.note {
            prov["note"] = json!(note);
        }
        debug_assert_eq!(rep.n(), self.n);
        Ok(rep.with_name(self.name).with_provenance(prov))
    }
}

macro_rules! entry {
    ($name:expr, [$($alias:expr),*], $n:expr, $col:ident, $recipe:expr) => {
        CatalogEntry { name: $name, aliases: &[$($alias),*], n: $n, column: Column::$col, note: None, recipe: $recipe }
    };
    ($name:expr, [$($alias:expr),*], $n:expr, $col:ident, $recipe:expr, $note:expr) => {
        CatalogEntry { name: $name, aliases: &[$($alias),*], n: $n, column: Column::$col, note: Some($note), recipe: $recipe }
    };
}

const ENTRIES: &[CatalogEntry] = &[
    entry!("so_2", [], 2, Holonomy, Recipe::So(2)),
    entry!("pi_R_2_so3", ["so_3"], 3, Holonomy, Recipe::So(3)),
    entry!("pi_R_11_so3so3", ["so_4"], 4, Holonomy, Recipe::So(4)),
    entry!("pi_C_1_su2", ["su_2"], 4, Holonomy, Recipe::Su2Fundamental),
    entry!("pi_C_1_su2_t", ["u_2"], 4, Holonomy, Recipe::WithCenter("pi_C_1_su2")),
    entry!("pi_R_10_so5", ["so_5"], 5, Holonomy, Recipe::So(5)),
    entry!("pi_R_4_so3", [], 5, Holonomy, Recipe::SymPower(2)),
    entry!("pi_R_100_so6", ["so_6"], 6, Holonomy, Recipe::So(6)),
    entry!("pi_C_10_su3", ["su_3"], 6, Holonomy, Recipe::SpecialUnitary(3)),
    entry!("pi_C_10_su3_t", ["u_3"], 6, Holonomy, Recipe::WithCenter("pi_C_10_su3")),
    entry!("pi_R_100_so7", ["so_7"], 7, Holonomy, Recipe::So(7)),
    entry!("pi_R_10_g2", ["g2"], 7, Holonomy, Recipe::G2),
    entry!("pi_R_6_so3", [], 7, Other, Recipe::SymPower(3)),
    entry!("pi_R_1000_so8", ["so_8"], 8, Holonomy, Recipe::So(8)),
    entry!("pi_C_10_su4", ["su_4"], 8, Holonomy, Recipe::SpecialUnitary(4)),
    entry!("pi_C_10_su4_t", ["u_4"], 8, Holonomy, Recipe::WithCenter("pi_C_10_su4")),
    entry!("pi_H_10_sp2", ["sp_2"], 8, Holonomy, Recipe::Sp2),
    entry!("pi_R_101_sp2sp1", ["sp_2_sp_1"], 8, Holonomy, Recipe::Sp2Sp1),
    entry!(
        "pi_R_13_so3so3",
        [],
        8,
        Holonomy,
        Recipe::TensorSu2(1, 3),
        "real form of the product of the weight-1 and weight-3 complex su(2) irreps; compared only by dimension and irreducibility"
    ),
    entry!("pi_R_11_su3", ["ad_su3"], 8, Holonomy, Recipe::AdjointSu3),
    entry!(
        "pi_C_3_so3",
        [],
        8,
        Other,
        Recipe::Su2Realified(3),
        "highest weight 3 is symplectic, so the full realification is used"
    ),
    entry!("pi_C_3_so3_t", [], 8, Other, Recipe::WithCenter("pi_C_3_so3")),
    entry!("pi_H_10_sp2_t", ["sp_2_t"], 8, Other, Recipe::WithCenter("pi_H_10_sp2")),
    entry!("pi_R_1000_so9", ["so_9"], 9, Holonomy, Recipe::So(9)),
    entry!("pi_R_22_so3so3", ["so_3_x_so_3"], 9, Holonomy, Recipe::TensorSo3Vectors),
    entry!("pi_R_8_so3", [], 9, Other, Recipe::SymPower(4)),
];

fn sp2_complex() -> Result<ComplexRep, RepError> {
    let sp2 = symplectic(2)?;
    ComplexRep::from_real(&sp2, StructureKind::Symplectic, Some(&quaternionic_structure(2)))
}

fn build_recipe(r: Recipe) -> Result<OrthRep, RepError> {
    match r {
        Recipe::So(n) => Ok(standard_so(n)),
        Recipe::SymPower(k) => so3_sym_power(k),
        Recipe::Su2Fundamental => realify(&su2_irrep(1)),
        Recipe::SpecialUnitary(m) => special_unitary(m),
        Recipe::Sp2 => symplectic(2),
        Recipe::G2 => g2(),
        Recipe::TensorSu2(a, b) => {
            tensor_product_rep(RepFactor::Complex(&su2_irrep(a)), RepFactor::Complex(&su2_irrep(b)))
        }
        Recipe::TensorSo3Vectors => {
            let so3 = standard_so(3);
            tensor_product_rep(RepFactor::Real(&so3), RepFactor::Real(&so3))
        }
        Recipe::Sp2Sp1 => tensor_product_rep(RepFactor::Complex(&sp2_complex()?), RepFactor::Complex(&su2_irrep(1))),
        Recipe::AdjointSu3 => adjoint_rep(&LieAlgebraSpec::su(3)),
        Recipe::Su2Realified(k) => realify(&su2_irrep(k)),
        Recipe::WithCenter(base) => add_center_line(&lookup(base)?.build()?),
    }
}

pub fn entries() -> &'static [CatalogEntry] {
    ENTRIES
}

/// Finds an entry by canonical name or alias.
pub fn lookup(name: &str) -> Result<&'static CatalogEntry, RepError> {
    ENTRIES
        .iter()
        .find(|e| e.name == name || e.aliases.contains(&name))
        .ok_or_else(|| RepError::UnknownRep(name.to_string()))
}

pub fn build(name: &str) -> Result<OrthRep, RepError> {
    lookup(name)?.build()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repkit::analysis::{is_irreducible, Irreducibility};

    #[test]
    fn catalog_builds_with_expected_sizes() {
        let expected: &[(&str, usize)] = &[
            ("so_2", 1),
            ("pi_R_2_so3", 3),
            ("pi_R_11_so3so3", 6),
            ("pi_C_1_su2", 3),
            ("pi_C_1_su2_t", 4),
            ("pi_R_4_so3", 3),
            ("pi_C_10_su3", 8),
            ("pi_C_10_su3_t", 9),
            ("pi_R_10_g2", 14),
            ("pi_R_6_so3", 3),
            ("pi_C_10_su4", 15),
            ("pi_C_10_su4_t", 16),
            ("pi_H_10_sp2", 10),
            ("pi_R_101_sp2sp1", 13),
            ("pi_R_13_so3so3", 6),
            ("pi_R_11_su3", 8),
            ("pi_C_3_so3", 3),
            ("pi_C_3_so3_t", 4),
            ("pi_H_10_sp2_t", 11),
            ("pi_R_22_so3so3", 6),
            ("pi_R_8_so3", 3),
        ];
        for (name, nn) in expected {
            let e = lookup(name).unwrap();
            let r = e.build().unwrap();
            assert_eq!(r.dim(), *nn, "{name}");
            assert_eq!(r.n(), e.n, "{name}");
        }
    }

    #[test]
    fn all_entries_irreducible() {
        for e in entries() {
            let r = e.build().unwrap();
            assert_eq!(is_irreducible(&r), Irreducibility::CertifiedIrreducible, "{}", e.name);
        }
    }

    #[test]
    fn unknown_name() {
        assert_eq!(build("nope").unwrap_err(), RepError::UnknownRep("nope".into()));
    }
}
