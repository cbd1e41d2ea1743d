//! Serializable report shapes and the code that fills them from the engine.

use std::collections::HashMap;

use mics_core::{
    ConjectureReport, ConjectureRow, ConjectureScope, FamilyTag, LengthClass, RootId, RootSet,
    RootSystem,
};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{Map, Value};

use crate::CliError;

fn roots(rs: &RootSystem, ids: impl IntoIterator<Item = RootId>) -> Vec<String> {
    ids.into_iter().map(|g| rs.format_root(g)).collect()
}

fn set(rs: &RootSystem, s: &RootSet) -> Vec<String> {
    roots(rs, s.iter())
}

#[derive(Serialize)]
pub struct RootRow {
    pub index: usize,
    pub coeffs: String,
    pub height: i32,
    pub length: LengthClass,
    pub in_h: bool,
}

#[derive(Serialize)]
pub struct ComponentRow {
    #[serde(rename = "type")]
    pub type_label: String,
    /// 1-based simple indices.
    pub simple: Vec<usize>,
    pub coxeter_number: i32,
}

#[derive(Serialize)]
pub struct LeviRow {
    pub alpha: usize,
    pub theta_height: i32,
    pub components: Vec<ComponentRow>,
}

#[derive(Serialize)]
pub struct ShowReport {
    pub system: String,
    pub labeling: String,
    pub rank: usize,
    pub coxeter_number: i32,
    pub highest_root: String,
    pub roots: Vec<RootRow>,
    pub levi: Vec<LeviRow>,
}

pub fn show(rs: &RootSystem) -> Result<ShowReport, CliError> {
    let h = rs.h_set();
    let rows = rs
        .ids()
        .map(|g| RootRow {
            index: g.0,
            coeffs: rs.format_root(g),
            height: rs.height(g),
            length: rs.root(g).length_class(),
            in_h: h.contains(g),
        })
        .collect();
    let mut levi = Vec::new();
    for alpha in 0..rs.rank() {
        let components = rs
            .levi_components(alpha)?
            .into_iter()
            .map(|c| ComponentRow {
                type_label: c.type_label,
                simple: c.simple.iter().map(|i| i + 1).collect(),
                coxeter_number: c.coxeter_number,
            })
            .collect();
        levi.push(LeviRow {
            alpha: alpha + 1,
            theta_height: rs.alpha_height(rs.highest_root(), alpha),
            components,
        });
    }
    Ok(ShowReport {
        system: rs.name(),
        labeling: rs.labeling().to_string(),
        rank: rs.rank(),
        coxeter_number: rs.coxeter_number(),
        highest_root: rs.format_root(rs.highest_root()),
        roots: rows,
        levi,
    })
}

#[derive(Serialize)]
pub struct IdealRow {
    pub index: usize,
    pub size: usize,
    pub generators: Vec<String>,
    pub roots: Vec<String>,
    /// Base root of the fibre; `null` for the zero ideal.
    pub fiber: Option<String>,
    pub is_min: bool,
    pub is_max: bool,
}

#[derive(Serialize)]
pub struct FiberRow {
    pub mu: String,
    pub size: usize,
    /// Indices into `ideals`.
    pub min: usize,
    pub max: usize,
}

#[derive(Serialize)]
pub struct MaximalRow {
    pub alpha: usize,
    pub size: usize,
    pub roots: Vec<String>,
}

#[derive(Serialize)]
pub struct IdealsReport {
    pub system: String,
    pub labeling: String,
    pub count: usize,
    pub ideals: Vec<IdealRow>,
    pub fibers: Vec<FiberRow>,
    pub maximal: Vec<MaximalRow>,
}

pub fn ideals(rs: &RootSystem) -> Result<IdealsReport, CliError> {
    let lattice = rs.fiber_decomposition()?;
    let index: HashMap<&RootSet, usize> = lattice
        .ideals()
        .iter()
        .enumerate()
        .map(|(k, i)| (i.roots(), k))
        .collect();
    let mut rows: Vec<IdealRow> = lattice
        .ideals()
        .iter()
        .enumerate()
        .map(|(k, i)| IdealRow {
            index: k,
            size: i.len(),
            generators: roots(rs, i.generators().iter().copied()),
            roots: set(rs, i.roots()),
            fiber: None,
            is_min: false,
            is_max: false,
        })
        .collect();
    let mut fibers = Vec::new();
    for f in lattice.fibers() {
        for ideal in &f.ideals {
            rows[index[ideal.roots()]].fiber = Some(rs.format_root(f.mu));
        }
        let (min, max) = (index[f.minimal().roots()], index[f.maximal().roots()]);
        rows[min].is_min = true;
        rows[max].is_max = true;
        fibers.push(FiberRow {
            mu: rs.format_root(f.mu),
            size: f.ideals.len(),
            min,
            max,
        });
    }
    let mut maximal = Vec::new();
    for alpha in 0..rs.rank() {
        if !rs.is_long(rs.simple_root(alpha)?) {
            continue;
        }
        let m = lattice.maximal_ideal(rs, alpha)?;
        maximal.push(MaximalRow {
            alpha: alpha + 1,
            size: m.len(),
            roots: set(rs, m.roots()),
        });
    }
    Ok(IdealsReport {
        system: rs.name(),
        labeling: rs.labeling().to_string(),
        count: rows.len(),
        ideals: rows,
        fibers,
        maximal,
    })
}

#[derive(Serialize)]
pub struct MemberRow {
    pub gamma: String,
    pub word: String,
    pub length: usize,
}

#[derive(Serialize)]
pub struct Checks {
    pub complete: bool,
    pub minimal: bool,
    pub thm41: Option<bool>,
    pub thm45: Option<bool>,
    pub conj51: Option<bool>,
    pub conj52: Option<bool>,
    pub bstable: bool,
}

#[derive(Serialize)]
pub struct MicsReport {
    pub system: String,
    pub labeling: String,
    pub construction: String,
    /// 1-based simple index, or `"i,j"` for the F4 families.
    pub alpha: Value,
    pub size: usize,
    pub words: Vec<String>,
    pub members: Vec<MemberRow>,
    pub multiplicities: Map<String, Value>,
    pub essential: Vec<String>,
    pub defect: i64,
    pub checks: Checks,
}

pub enum Selector {
    Simple(usize),
    F4(usize, usize),
}

pub fn mics(rs: &RootSystem, selector: Selector) -> Result<MicsReport, CliError> {
    let (family, extra) = match selector {
        Selector::Simple(alpha) => {
            rs.simple_root(alpha)?;
            let lattice = rs.fiber_decomposition()?;
            let family = rs.build_canonical_mics_with(&lattice, alpha)?;
            let thm41 = if rs.alpha_height(rs.highest_root(), alpha) == 1 {
                Some(rs.multiplicity_check(&lattice, alpha)?.holds())
            } else {
                None
            };
            let thm45 = if rs.alpha_hat() == Some(alpha) {
                Some(rs.fundamental_essential_check(&lattice)?.holds())
            } else {
                None
            };
            let row = rs.conjecture_row(&lattice, alpha)?;
            (family, (thm41, thm45, row))
        }
        Selector::F4(i, j) => (rs.build_f4_mics(i, j)?, (None, None, None)),
    };
    let (thm41, thm45, row) = extra;
    let words = family.words();
    let verdict = rs.verify_mics(&words)?;
    let stats = rs.family_stats(&family)?;
    let multiplicities = rs
        .ids()
        .map(|g| (rs.format_root(g), Value::from(stats.multiplicity_of(g))))
        .collect();
    let alpha = match family.tag() {
        FamilyTag::Simple(a) => Value::from(a + 1),
        FamilyTag::F4Pair { short, long } => Value::from(format!("{},{}", short + 1, long + 1)),
    };
    Ok(MicsReport {
        system: rs.name(),
        labeling: rs.labeling().to_string(),
        construction: family.construction().tag().to_string(),
        alpha,
        size: family.len(),
        words: words.iter().map(|w| w.to_string()).collect(),
        members: family
            .members()
            .iter()
            .map(|m| MemberRow {
                gamma: rs.format_root(m.gamma),
                word: m.word.to_string(),
                length: m.word.len(),
            })
            .collect(),
        multiplicities,
        essential: set(rs, &stats.essential),
        defect: stats.defect,
        checks: Checks {
            complete: verdict.complete,
            minimal: verdict.minimal,
            thm41,
            thm45,
            conj51: row.as_ref().map(|r| r.ess_in_h),
            conj52: row.as_ref().map(ConjectureRow::defect_pattern),
            bstable: rs.is_upward_closed(&stats.essential),
        },
    })
}

#[derive(Serialize)]
pub struct VerdictRow {
    pub alpha: usize,
    pub is_hat: bool,
    pub is_endpoint: bool,
    pub size: usize,
    pub ess_size: usize,
    pub defect: i64,
    pub bound: i64,
    pub conj51: bool,
    pub conj51_witnesses: Vec<String>,
    pub conj52: bool,
    pub defect_bounded: bool,
    pub hat_iff: bool,
    pub zero_iff: bool,
    pub bstable: bool,
}

#[derive(Serialize)]
pub struct SystemVerdicts {
    pub system: String,
    pub labeling: String,
    pub scope: &'static str,
    pub coxeter_number: i32,
    pub alpha_hat: Option<usize>,
    pub rows: Vec<VerdictRow>,
}

#[derive(Serialize)]
pub struct ConjecturesReport {
    pub systems: Vec<SystemVerdicts>,
    pub all_hold: bool,
}

fn verdicts(rs: &RootSystem, report: &ConjectureReport) -> SystemVerdicts {
    let scope = match report.scope {
        ConjectureScope::Checked => "checked",
        ConjectureScope::TheoremCovered => "theorem-covered",
        ConjectureScope::OutsideRange => "outside-range",
    };
    SystemVerdicts {
        system: rs.name(),
        labeling: rs.labeling().to_string(),
        scope,
        coxeter_number: report.coxeter_number,
        alpha_hat: report.alpha_hat.map(|a| a + 1),
        rows: report
            .rows
            .iter()
            .map(|r| VerdictRow {
                alpha: r.alpha + 1,
                is_hat: r.is_hat,
                is_endpoint: r.is_endpoint,
                size: r.size,
                ess_size: r.ess_size,
                defect: r.defect,
                bound: r.bound,
                conj51: r.ess_in_h,
                conj51_witnesses: roots(rs, r.outside_h.iter().copied()),
                conj52: r.defect_pattern(),
                defect_bounded: r.defect_bounded,
                hat_iff: r.hat_iff,
                zero_iff: r.zero_iff,
                bstable: r.bstable,
            })
            .collect(),
    }
}

/// Runs the sweep in parallel; output order follows `systems`.
pub fn conjectures(systems: &[RootSystem]) -> Result<ConjecturesReport, CliError> {
    let results: Vec<Result<(SystemVerdicts, bool), CliError>> = systems
        .par_iter()
        .map(|rs| {
            let report = rs.conjecture_report()?;
            Ok((verdicts(rs, &report), report.all_hold()))
        })
        .collect();
    let mut out = Vec::new();
    let mut all_hold = true;
    for r in results {
        let (v, ok) = r?;
        all_hold &= ok;
        out.push(v);
    }
    Ok(ConjecturesReport {
        systems: out,
        all_hold,
    })
}
