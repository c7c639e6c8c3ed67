//! Command-line front end.

pub mod args;
pub mod cache;
pub mod report;

use std::ffi::OsString;
use std::io::Write;
use std::path::Path;

use clap::Parser;
use rayon::prelude::*;
use thiserror::Error;

use crate::error::{ExactError, LorentzError, RepError};
use crate::exactq::{parse_q, NumberField, QMatrix, Q};
use crate::lorentz::{build_type_algebra, orthogonal_part, theorem3_verify, AlgebraType, TypeParams};
use crate::repkit::{catalog, OrthRep, RepJson};
use crate::torus::{is_closed, ClosedReport, TorusSubspace};

pub use args::{Cli, Command, LorentzArgs, Output, RepAction, SpaceArgs};
pub use cache::Cache;
pub use report::{Report, TableRow};

/// Largest catalog dimension accepted by `table` without `--allow-large`.
pub const N_MAX_GUARD: usize = 9;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Invalid(String),
    #[error("{0}")]
    Precondition(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Invalid(_) => 2,
            CliError::Precondition(_) => 3,
        }
    }
}

impl From<ExactError> for CliError {
    fn from(e: ExactError) -> Self {
        CliError::Invalid(e.to_string())
    }
}

impl From<RepError> for CliError {
    fn from(e: RepError) -> Self {
        match e {
            RepError::NoCentralizer | RepError::Undecided => CliError::Precondition(e.to_string()),
            _ => CliError::Invalid(e.to_string()),
        }
    }
}

impl From<LorentzError> for CliError {
    fn from(e: LorentzError) -> Self {
        match e {
            LorentzError::Rep(r) => r.into(),
            LorentzError::InvalidParams(_) => CliError::Invalid(e.to_string()),
            _ => CliError::Precondition(e.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Invalid(e.to_string())
    }
}

/// Parses arguments, runs the command and returns the process exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                write!(out, "{text}")
            } else {
                write!(err, "{text}")
            };
            return code;
        }
    };
    let cache = if cli.no_cache {
        Cache::disabled()
    } else {
        Cache::resolve(cli.cache_dir.as_deref(), std::env::var(cache::ENV_VAR).ok())
    };
    match execute(&cli, &cache) {
        Ok(s) => match out.write_all(s.as_bytes()) {
            Ok(()) => 0,
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                2
            }
        },
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

/// Runs a parsed command and returns its standard output.
pub fn execute(cli: &Cli, cache: &Cache) -> Result<String, CliError> {
    match &cli.command {
        Command::Rep { action } => cmd_rep(action),
        Command::Pspace(a) => cmd_space(a, cache, false),
        Command::Rspace(a) => cmd_space(a, cache, true),
        Command::Table {
            n_max,
            allow_large,
            output,
        } => cmd_table(*n_max, *allow_large, *output, cache),
        Command::Lorentz(a) => cmd_lorentz(a, cache),
        Command::TorusClosed { min_poly, basis, dim } => cmd_torus(min_poly, basis, *dim),
    }
}

/// Resolves `catalog:NAME`, `file:PATH`, an existing JSON path, or a catalog name.
pub fn resolve_rep(r: &str) -> Result<OrthRep, CliError> {
    if let Some(name) = r.strip_prefix("catalog:") {
        return Ok(catalog::build(name)?);
    }
    if let Some(path) = r.strip_prefix("file:") {
        return read_rep(Path::new(path));
    }
    let p = Path::new(r);
    if p.is_file() {
        return read_rep(p);
    }
    Ok(catalog::build(r)?)
}

fn read_rep(p: &Path) -> Result<OrthRep, CliError> {
    let s = std::fs::read_to_string(p).map_err(|e| CliError::Invalid(format!("{}: {e}", p.display())))?;
    let j: RepJson = serde_json::from_str(&s).map_err(|e| CliError::Invalid(format!("{}: {e}", p.display())))?;
    Ok(OrthRep::from_json(&j)?)
}

fn rep_json(rep: &OrthRep) -> String {
    serde_json::to_string_pretty(&rep.to_json()).expect("rep serializes") + "\n"
}

fn cmd_rep(action: &RepAction) -> Result<String, CliError> {
    match action {
        RepAction::List { output } => {
            let rows: Vec<_> = catalog::entries()
                .iter()
                .map(|e| {
                    serde_json::json!({
                        "name": e.name,
                        "aliases": e.aliases,
                        "n": e.n,
                        "column": e.column,
                    })
                })
                .collect();
            Ok(match output {
                Output::Json => serde_json::to_string_pretty(&rows).expect("list serializes") + "\n",
                Output::Csv => {
                    let mut s = String::from("n,name,column,aliases\n");
                    for e in catalog::entries() {
                        s += &format!("{},{},{},{}\n", e.n, e.name, column_str(e), e.aliases.join(" "));
                    }
                    s
                }
                Output::Text => {
                    let mut s = String::new();
                    for e in catalog::entries() {
                        let aliases = if e.aliases.is_empty() {
                            String::new()
                        } else {
                            format!("  ({})", e.aliases.join(", "))
                        };
                        s += &format!("{:>2}  {:<18} {:<8}{}\n", e.n, e.name, column_str(e), aliases);
                    }
                    s
                }
            })
        }
        RepAction::Show { name } => Ok(rep_json(&resolve_rep(name)?)),
        RepAction::Export { name, out } => {
            let s = rep_json(&resolve_rep(name)?);
            match out {
                Some(path) => {
                    std::fs::write(path, s)?;
                    Ok(String::new())
                }
                None => Ok(s),
            }
        }
    }
}

fn column_str(e: &catalog::CatalogEntry) -> &'static str {
    match e.column {
        catalog::Column::Holonomy => "holonomy",
        catalog::Column::Other => "other",
    }
}

fn render(r: &Report, json: bool) -> String {
    if json {
        r.to_json() + "\n"
    } else {
        r.to_text()
    }
}

/// Weak-curvature report, with the curvature space when `with_r` is set.
pub fn space_report(rep: &OrthRep, with_r: bool, with_basis: bool, cache: &Cache) -> Report {
    let p = report::weak_summary(cache, rep);
    let mut r = Report::from_weak(rep.name(), rep.n(), &p);
    let mut basis = report::BasisOut {
        p: Some(p.basis.clone()),
        r: None,
    };
    if with_r {
        let rs = report::curvature_summary(cache, rep);
        r.set_curvature(&rs);
        basis.r = Some(rs.basis);
    }
    if with_basis {
        r.basis = Some(basis);
    }
    r
}

fn cmd_space(a: &SpaceArgs, cache: &Cache, with_r: bool) -> Result<String, CliError> {
    let rep = resolve_rep(&a.rep)?;
    Ok(render(&space_report(&rep, with_r, a.basis, cache), a.json))
}

/// Computes the catalog table for every entry with `n ≤ n_max`, in catalog order.
pub fn table_rows(n_max: usize, cache: &Cache) -> Result<Vec<TableRow>, CliError> {
    let selected: Vec<_> = catalog::entries().iter().filter(|e| e.n <= n_max).collect();
    selected
        .par_iter()
        .map(|e| {
            let rep = e.build()?;
            let p = report::weak_summary(cache, &rep);
            Ok(TableRow {
                n: e.n,
                name: e.name.to_string(),
                dim_h: p.dim_alg,
                dim_p: p.dim_space,
                dim_lp: p.dim_l,
                weak_berger: p.verdict(),
            })
        })
        .collect()
}

fn cmd_table(n_max: usize, allow_large: bool, output: Output, cache: &Cache) -> Result<String, CliError> {
    if n_max > N_MAX_GUARD && !allow_large {
        return Err(CliError::Usage(format!(
            "--n-max {n_max} exceeds {N_MAX_GUARD}; pass --allow-large to proceed"
        )));
    }
    let rows = table_rows(n_max, cache)?;
    Ok(match output {
        Output::Text => report::table_text(&rows),
        Output::Json => report::table_json(&rows),
        Output::Csv => report::table_csv(&rows),
    })
}

pub fn parse_vector(s: &str) -> Result<Vec<Q>, CliError> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| parse_q(t).map_err(CliError::from))
        .collect()
}

pub fn parse_matrix(s: &str) -> Result<QMatrix, CliError> {
    let rows = s
        .split(';')
        .map(str::trim)
        .filter(|r| !r.is_empty())
        .map(parse_vector)
        .collect::<Result<Vec<_>, _>>()?;
    Ok(QMatrix::from_rows(rows)?)
}

/// Report for the type algebra built from `h`; P fields describe its orthogonal part.
pub fn lorentz_report(
    h: &OrthRep,
    ty: u8,
    params: TypeParams,
    verify_thm3: bool,
    berger: bool,
    cache: &Cache,
) -> Result<Report, CliError> {
    let kind = AlgebraType::from_index(ty).ok_or_else(|| CliError::Usage(format!("unknown type {ty}")))?;
    let g = build_type_algebra(kind, h, params.clone())?;
    let hg = orthogonal_part(&g)?;
    let p = report::weak_summary(cache, &hg);
    let mut r = Report::from_weak(g.rep.name(), g.n(), &p);
    r.ty = Some(ty);
    r.dim_g = Some(g.dim());
    if berger {
        r.set_curvature(&report::curvature_summary(cache, &g.rep));
    }
    if verify_thm3 {
        let t = theorem3_verify(h, kind, params)?;
        r.thm3_lhs = Some(t.thm3_lhs);
        r.thm3_rhs = Some(t.thm3_rhs);
        r.thm3_ok = Some(t.thm3_ok);
    }
    Ok(r)
}

fn cmd_lorentz(a: &LorentzArgs, cache: &Cache) -> Result<String, CliError> {
    let h = resolve_rep(&a.h)?;
    let params = TypeParams {
        phi: a.phi.as_deref().map(parse_vector).transpose()?,
        psi: a.psi.as_deref().map(parse_matrix).transpose()?,
        e0_dim: a.e0_dim,
    };
    let r = lorentz_report(&h, a.ty, params, a.verify_thm3, a.berger, cache)?;
    Ok(render(&r, a.json))
}

/// Closedness report for a basis in `torus-closed` syntax.
pub fn torus_report(min_poly: &str, basis: &str, dim: Option<usize>) -> Result<ClosedReport, CliError> {
    let field = if min_poly.trim() == "x" {
        NumberField::rationals()
    } else {
        NumberField::parse(min_poly)?
    };
    let w = TorusSubspace::parse(field, dim, basis)?;
    Ok(is_closed(&w)?)
}

fn cmd_torus(min_poly: &str, basis: &str, dim: Option<usize>) -> Result<String, CliError> {
    let rep = torus_report(min_poly, basis, dim)?;
    Ok(serde_json::to_string(&rep).expect("report serializes") + "\n")
}
