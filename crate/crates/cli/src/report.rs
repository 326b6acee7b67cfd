//! Serializable command reports and their plain-text rendering.

use std::fmt::Write;

use findom_core::approx::{ResdimStatus, TiltingKind, TiltingModule};
use findom_core::suites::{resdim_text, SuiteReport};
use findom_core::verdicts::{Classification, Condition4Report, ScanReport, ScanStatus};
use findom_core::{ExtNat, Provenance, Quantity, Tri};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraSummary {
    pub kind: String,
    pub characteristic: u32,
    pub dim: usize,
    pub simples: usize,
    pub series: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalyzeReport {
    pub algebra: AlgebraSummary,
    pub classification: Classification,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    Proj,
    Inj,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResolveStep {
    pub step: usize,
    pub dim: usize,
    pub dim_vector: Vec<usize>,
    /// Multiplicity of each indecomposable projective (or injective) in the term covering this step.
    pub term: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResolveReport {
    pub module: String,
    pub direction: Direction,
    pub steps: Vec<ResolveStep>,
    /// Set when a syzygy (cosyzygy) became zero: the projective (injective) dimension.
    pub dimension: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtReport {
    pub from: String,
    pub to: String,
    pub hom: usize,
    /// `dim Ext^k` for `k = 1, 2, …`.
    pub ext: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MuellerReport {
    pub summands: Vec<String>,
    pub generator_dims: Vec<usize>,
    pub domdim_end: Quantity,
    pub condition4: Option<Condition4Report>,
    pub finitistic_auslander: Tri,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TiltingReport {
    pub kind: TiltingKind,
    pub indecomposables: Vec<String>,
    pub modules: Vec<TiltingModule>,
    pub complete: bool,
    pub cutoff: u32,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[allow(clippy::large_enum_variant)]
#[serde(tag = "command", rename_all = "kebab-case")]
pub enum Report {
    Analyze(AnalyzeReport),
    Resolve(ResolveReport),
    Ext(ExtReport),
    Mueller(MuellerReport),
    Tilting(TiltingReport),
    ScanNakayama(ScanReport),
    Verify(SuiteReport),
}

fn quantity(q: &Quantity) -> String {
    match q.provenance {
        Provenance::Combinatorial => format!("{} (exact)", q.value),
        Provenance::Bounded { cutoff } => match q.value {
            ExtNat::AtLeast(_) => q.value.to_string(),
            v => format!("{v} (bounded, cutoff {cutoff})"),
        },
    }
}

fn status(s: ScanStatus) -> &'static str {
    match s {
        ScanStatus::Verified => "verified",
        ScanStatus::Falsified => "falsified",
        ScanStatus::Inconclusive => "inconclusive",
    }
}

fn status_text(s: &ResdimStatus) -> String {
    resdim_text(*s)
}

impl Report {
    /// 0 success, 1 falsified, 2 inconclusive.
    pub fn exit_code(&self) -> i32 {
        let from_status = |s: ScanStatus| match s {
            ScanStatus::Verified => 0,
            ScanStatus::Falsified => 1,
            ScanStatus::Inconclusive => 2,
        };
        match self {
            Report::Analyze(r) => {
                let v = &r.classification.verdict;
                if v.flags().iter().any(|(_, f)| f.value == Tri::Unknown) {
                    2
                } else {
                    0
                }
            }
            Report::Resolve(_) | Report::Ext(_) => 0,
            Report::Mueller(r) => {
                if r.finitistic_auslander == Tri::Unknown || !r.domdim_end.value.is_exact() {
                    2
                } else {
                    0
                }
            }
            Report::Tilting(r) => {
                if r.complete {
                    0
                } else {
                    2
                }
            }
            Report::ScanNakayama(r) => from_status(r.status),
            Report::Verify(r) => from_status(r.status),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        match self {
            Report::Analyze(r) => {
                let a = &r.algebra;
                let _ = writeln!(
                    out,
                    "algebra: {} over GF({}), dim {}, {} simples",
                    a.kind, a.characteristic, a.dim, a.simples
                );
                if let Some(s) = &a.series {
                    let _ = writeln!(out, "kupisch series: {s}");
                }
                let rep = &r.classification.report;
                let _ = writeln!(
                    out,
                    "selfinjective: {}",
                    if rep.selfinjective { "yes" } else { "no" }
                );
                let _ = writeln!(
                    out,
                    "projective non-injective: {}",
                    rep.proj_noninjective_count
                );
                for (name, q) in [
                    ("domdim", &rep.domdim),
                    ("codomdim", &rep.codomdim),
                    ("findim", &rep.findim),
                    ("inj-findim", &rep.inj_findim),
                    ("gdim", &rep.gdim),
                    ("gldim", &rep.gldim),
                ] {
                    let _ = writeln!(out, "{name:<26} {}", quantity(q));
                }
                for (name, f) in r.classification.verdict.flags() {
                    let _ = writeln!(out, "{name:<26} {:<8} {}", f.value.to_string(), f.witness);
                }
            }
            Report::Resolve(r) => {
                let what = match r.direction {
                    Direction::Proj => "syzygy",
                    Direction::Inj => "cosyzygy",
                };
                let _ = writeln!(out, "module {}: minimal {} sequence", r.module, what);
                for s in &r.steps {
                    let _ = writeln!(
                        out,
                        "step {:>2}  dim {:>4}  dims {:?}  term {:?}",
                        s.step, s.dim, s.dim_vector, s.term
                    );
                }
                if let Some(d) = r.dimension {
                    let _ = writeln!(
                        out,
                        "{} dimension {d}",
                        if r.direction == Direction::Proj {
                            "projective"
                        } else {
                            "injective"
                        }
                    );
                }
            }
            Report::Ext(r) => {
                let _ = writeln!(out, "Hom({}, {}) = {}", r.from, r.to, r.hom);
                for (k, d) in r.ext.iter().enumerate() {
                    let _ = writeln!(out, "Ext^{}({}, {}) = {d}", k + 1, r.from, r.to);
                }
            }
            Report::Mueller(r) => {
                let _ = writeln!(out, "M = {}", r.summands.join(" + "));
                let _ = writeln!(out, "basic summand dims {:?}", r.generator_dims);
                let _ = writeln!(out, "domdim End(M) = {}", quantity(&r.domdim_end));
                if let Some(c) = &r.condition4 {
                    let _ = writeln!(
                        out,
                        "{} indecomposables, {} in add(M), {} checked",
                        c.indecomposables,
                        c.in_add.len(),
                        c.entries.len()
                    );
                    for e in &c.entries {
                        let _ = writeln!(
                            out,
                            "  #{:<3} resdim {}",
                            e.index + 1,
                            status_text(&e.status)
                        );
                    }
                }
                let _ = writeln!(out, "finitistic Auslander: {}", r.finitistic_auslander);
            }
            Report::Tilting(r) => {
                let word = match r.kind {
                    TiltingKind::Tilting => "tilting",
                    TiltingKind::Cotilting => "cotilting",
                };
                let _ = writeln!(
                    out,
                    "{} indecomposables, {} basic {word} modules",
                    r.indecomposables.len(),
                    r.modules.len()
                );
                for m in &r.modules {
                    let names: Vec<&str> = m
                        .summands
                        .iter()
                        .map(|&i| r.indecomposables[i].as_str())
                        .collect();
                    let _ = writeln!(out, "  {}  dims {:?}", names.join(" + "), m.dims);
                }
                if !r.complete {
                    let _ = writeln!(out, "incomplete: some checks hit the cutoff {}", r.cutoff);
                }
            }
            Report::ScanNakayama(r) => {
                let _ = writeln!(
                    out,
                    "predicate {}, n {}..={}, {} tested, {} relevant",
                    r.predicate, r.region.n_min, r.region.n_max, r.tested, r.filtered
                );
                let _ = writeln!(
                    out,
                    "{} counterexamples, {} inconclusive",
                    r.counterexamples.len(),
                    r.inconclusive.len()
                );
                for s in &r.counterexamples {
                    let _ = writeln!(out, "  {s}");
                }
                let _ = writeln!(out, "status: {}", status(r.status));
            }
            Report::Verify(r) => {
                let _ = writeln!(out, "suite {}", r.suite);
                for c in &r.checks {
                    let mark = match c.outcome {
                        Tri::True => "PASS",
                        Tri::False => "FAIL",
                        Tri::Unknown => "OPEN",
                    };
                    let _ = writeln!(out, "[{mark}] {}: {}", c.name, c.detail);
                }
                let _ = writeln!(out, "status: {}", status(r.status));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use findom_core::verdicts::{scan_nakayama, ScanPredicate, ScanRegion};
    use findom_core::SeriesKind;

    #[test]
    fn empty_scan_is_well_formed() {
        let region = ScanRegion {
            n_min: 3,
            n_max: 2,
            max_entry: Some(4),
            kinds: vec![SeriesKind::Cyclic],
        };
        let r = Report::ScanNakayama(scan_nakayama(ScanPredicate::NgasConjecture, &region, 1));
        assert!(r.render().contains("0 tested"));
        let back: Report = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn cutoff_values_are_labelled() {
        let q = Quantity::bounded(ExtNat::AtLeast(24), 24);
        assert_eq!(quantity(&q), "≥24 (cutoff)");
        assert!(!quantity(&q).contains('∞'));
        assert_eq!(
            quantity(&Quantity::bounded(ExtNat::Finite(2), 24)),
            "2 (bounded, cutoff 24)"
        );
    }

    #[test]
    fn witnesses_survive_round_trip() {
        let c = Condition4Report {
            d: 2,
            indecomposables: 3,
            in_add: vec![0, 2],
            entries: vec![findom_core::verdicts::Condition4Entry {
                index: 1,
                status: ResdimStatus::InfiniteCycle { at: 1, matches: 0 },
            }],
            holds: Tri::True,
        };
        let r = Report::Mueller(MuellerReport {
            summands: vec!["A".into(), "M(1,1)".into()],
            generator_dims: vec![3, 1],
            domdim_end: Quantity::bounded(ExtNat::Finite(2), 24),
            condition4: Some(c),
            finitistic_auslander: Tri::True,
        });
        let text = r.to_json();
        assert!(text.contains("\"matches\": 0"));
        assert!(r.render().contains("step 1 ≅ step 0"));
        let back: Report = serde_json::from_str(&text).unwrap();
        assert_eq!(back, r);
    }
}
