use serde::{Deserialize, Serialize};

use crate::bianchi::{berger_check, weak_berger_check, Verdict};
use crate::exactq::{fmt_q, Q};
use crate::repkit::OrthRep;

use super::cache::Cache;

fn verdict_from_str(s: &str) -> Option<Verdict> {
    match s {
        "true" => Some(Verdict::True),
        "false" => Some(Verdict::False),
        "vacuous" => Some(Verdict::Vacuous),
        _ => None,
    }
}

fn strings(basis: &[Vec<Q>]) -> Vec<Vec<String>> {
    basis.iter().map(|v| v.iter().map(fmt_q).collect()).collect()
}

/// Solution-space summary as stored in the cache.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpaceSummary {
    pub dim_alg: usize,
    pub dim_space: usize,
    pub dim_l: usize,
    pub verdict: String,
    pub basis: Vec<Vec<String>>,
}

impl SpaceSummary {
    pub fn verdict(&self) -> Verdict {
        verdict_from_str(&self.verdict).unwrap_or(Verdict::False)
    }

    fn valid(&self) -> bool {
        verdict_from_str(&self.verdict).is_some() && self.basis.len() == self.dim_space
    }
}

fn cached(cache: &Cache, rep: &OrthRep, kind: &str, compute: impl FnOnce() -> SpaceSummary) -> SpaceSummary {
    let key = Cache::key(&rep.canonical_json());
    if let Some(s) = cache.load::<SpaceSummary>(&key, kind).filter(SpaceSummary::valid) {
        return s;
    }
    let s = compute();
    cache.store(&key, kind, &s);
    s
}

pub fn weak_summary(cache: &Cache, rep: &OrthRep) -> SpaceSummary {
    cached(cache, rep, "pspace", || {
        let (r, b, _) = weak_berger_check(rep);
        SpaceSummary {
            dim_alg: r.dim_h,
            dim_space: r.dim_p,
            dim_l: r.dim_lp,
            verdict: r.verdict.as_str().to_string(),
            basis: strings(&b.space.basis),
        }
    })
}

pub fn curvature_summary(cache: &Cache, rep: &OrthRep) -> SpaceSummary {
    cached(cache, rep, "rspace", || {
        let (r, b, _) = berger_check(rep);
        SpaceSummary {
            dim_alg: r.dim_g,
            dim_space: r.dim_r,
            dim_l: r.dim_lr,
            verdict: r.verdict.as_str().to_string(),
            basis: strings(&b.space.basis),
        }
    })
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct BasisOut {
    #[serde(rename = "P", skip_serializing_if = "Option::is_none")]
    pub p: Option<Vec<Vec<String>>>,
    #[serde(rename = "R", skip_serializing_if = "Option::is_none")]
    pub r: Option<Vec<Vec<String>>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub rep: String,
    pub n: usize,
    pub dim_h: usize,
    #[serde(rename = "dim_P")]
    pub dim_p: usize,
    #[serde(rename = "dim_LP")]
    pub dim_lp: usize,
    pub weak_berger: Verdict,
    #[serde(rename = "dim_R", skip_serializing_if = "Option::is_none")]
    pub dim_r: Option<usize>,
    #[serde(rename = "dim_LR", skip_serializing_if = "Option::is_none")]
    pub dim_lr: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub berger: Option<Verdict>,
    #[serde(rename = "type", skip_serializing_if = "Option::is_none")]
    pub ty: Option<u8>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dim_g: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub thm3_lhs: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub thm3_rhs: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub thm3_ok: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub basis: Option<BasisOut>,
}

impl Report {
    pub fn from_weak(name: &str, n: usize, p: &SpaceSummary) -> Self {
        Report {
            rep: name.to_string(),
            n,
            dim_h: p.dim_alg,
            dim_p: p.dim_space,
            dim_lp: p.dim_l,
            weak_berger: p.verdict(),
            dim_r: None,
            dim_lr: None,
            berger: None,
            ty: None,
            dim_g: None,
            thm3_lhs: None,
            thm3_rhs: None,
            thm3_ok: None,
            basis: None,
        }
    }

    pub fn set_curvature(&mut self, r: &SpaceSummary) {
        self.dim_r = Some(r.dim_space);
        self.dim_lr = Some(r.dim_l);
        self.berger = Some(r.verdict());
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// `key: value` lines; basis vectors are listed one per line.
    pub fn to_text(&self) -> String {
        let mut lines = vec![
            format!("rep: {}", self.rep),
            format!("n: {}", self.n),
            format!("dim_h: {}", self.dim_h),
            format!("dim_P: {}", self.dim_p),
            format!("dim_LP: {}", self.dim_lp),
            format!("weak_berger: {}", self.weak_berger),
        ];
        let mut opt = |k: &str, v: Option<String>| {
            if let Some(v) = v {
                lines.push(format!("{k}: {v}"));
            }
        };
        opt("dim_R", self.dim_r.map(|x| x.to_string()));
        opt("dim_LR", self.dim_lr.map(|x| x.to_string()));
        opt("berger", self.berger.map(|x| x.to_string()));
        opt("type", self.ty.map(|t| t.to_string()));
        opt("dim_g", self.dim_g.map(|x| x.to_string()));
        opt("thm3_lhs", self.thm3_lhs.map(|x| x.to_string()));
        opt("thm3_rhs", self.thm3_rhs.map(|x| x.to_string()));
        opt("thm3_ok", self.thm3_ok.map(|x| x.to_string()));
        if let Some(b) = &self.basis {
            for (label, vs) in [("P", &b.p), ("R", &b.r)] {
                if let Some(vs) = vs {
                    lines.push(format!("basis {label}:"));
                    lines.extend(vs.iter().map(|v| format!("  [{}]", v.join(", "))));
                }
            }
        }
        lines.join("\n") + "\n"
    }
}

/// One row of the catalog table.
#[derive(Clone, Debug, Serialize)]
pub struct TableRow {
    pub n: usize,
    pub name: String,
    pub dim_h: usize,
    #[serde(rename = "dim_P")]
    pub dim_p: usize,
    #[serde(rename = "dim_LP")]
    pub dim_lp: usize,
    pub weak_berger: Verdict,
}

pub const TABLE_HEADER: [&str; 6] = ["n", "name", "dim_h", "dim_P", "dim_LP", "weak_berger"];

impl TableRow {
    fn cells(&self) -> [String; 6] {
        [
            self.n.to_string(),
            self.name.clone(),
            self.dim_h.to_string(),
            self.dim_p.to_string(),
            self.dim_lp.to_string(),
            self.weak_berger.to_string(),
        ]
    }
}

pub fn table_csv(rows: &[TableRow]) -> String {
    let mut out = TABLE_HEADER.join(",") + "\n";
    for r in rows {
        out += &(r.cells().join(",") + "\n");
    }
    out
}

pub fn table_text(rows: &[TableRow]) -> String {
    let cells: Vec<[String; 6]> = rows.iter().map(TableRow::cells).collect();
    let mut width: Vec<usize> = TABLE_HEADER.iter().map(|h| h.len()).collect();
    for c in &cells {
        for (w, s) in width.iter_mut().zip(c) {
            *w = (*w).max(s.chars().count());
        }
    }
    let fmt = |c: Vec<&str>| {
        let parts: Vec<String> = c.iter().zip(&width).map(|(s, w)| format!("{s:<w$}")).collect();
        parts.join("  ").trim_end().to_string() + "\n"
    };
    let mut out = fmt(TABLE_HEADER.to_vec());
    for c in &cells {
        out += &fmt(c.iter().map(String::as_str).collect());
    }
    out
}

pub fn table_json(rows: &[TableRow]) -> String {
    serde_json::to_string_pretty(rows).expect("table serializes") + "\n"
}
