//! Named verification suites, each a list of pass/fail checks over a fixed corpus.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::approx::{
    add_resdim, enumerate_indecomposables, enumerate_tilting, shifted_tilting_modules, AddClosure,
    ResdimStatus, TiltingKind,
};
use crate::catalog::{cyclic_group, dihedral_group, hopf_example, quaternion_group, GroupTable};
use crate::exactmat::PrimeField;
use crate::extnat::{ExtNat, Tri};
use crate::finalg::homological::{
    cosyzygy_with_injectives, domdim_module_bounded, ext_dim, ext_dim_by_coresolution,
    proj_dim_bounded, resolution, syzygy, syzygy_with_projectives, times_radical,
};
use crate::finalg::{is_isomorphic, FiniteAlgebra, Limits, RightModule};
use crate::nakayama::{enumerate_series, KupischSeries, SeriesKind};
use crate::par;
use crate::verdicts::{
    bounded_report, classify_series, endomorphism_side, fa_condition4, matches_ngas_pattern,
    mueller_domdim, scan_nakayama, ScanPredicate, ScanRegion, ScanStatus,
};
use crate::{Error, Result};

pub const SUITES: [&str; 10] = [
    "hopf-omega4",
    "group-contrasts",
    "nakayama-ngas",
    "domdim-scan",
    "findim-identity",
    "approx-criterion",
    "truncated-resdim",
    "cotilting-count",
    "cross-engine",
    "tensor-rules",
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub outcome: Tri,
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, outcome: Tri, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            outcome,
            detail: detail.into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub status: ScanStatus,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    fn from_checks(suite: &str, checks: Vec<Check>) -> Self {
        let status = if checks.iter().any(|c| c.outcome == Tri::False) {
            ScanStatus::Falsified
        } else if checks.iter().any(|c| c.outcome == Tri::Unknown) {
            ScanStatus::Inconclusive
        } else {
            ScanStatus::Verified
        };
        SuiteReport {
            suite: suite.to_string(),
            status,
            checks,
        }
    }
}

pub fn run_suite(name: &str, limits: Limits, workers: usize) -> Result<SuiteReport> {
    let checks = match name {
        "hopf-omega4" => hopf_omega4(),
        "group-contrasts" => group_contrasts(limits),
        "nakayama-ngas" => nakayama_ngas(6, 8, workers),
        "domdim-scan" => domdim_scan(6, workers),
        "findim-identity" => findim_identity(5, 6, workers),
        "approx-criterion" => approx_criterion(4, 5, limits, workers),
        "truncated-resdim" => truncated_resdim(6, limits),
        "cotilting-count" => cotilting_count(5, 6, limits, workers),
        "cross-engine" => cross_engine(4, 5, limits, workers),
        "tensor-rules" => tensor_rules(limits),
        other => {
            return Err(Error::Input(format!(
                "unknown suite '{other}' (known: {})",
                SUITES.join(", ")
            )));
        }
    };
    Ok(SuiteReport::from_checks(name, checks))
}

fn gf2() -> PrimeField {
    PrimeField::gf2()
}

fn both_kinds() -> [SeriesKind; 2] {
    [SeriesKind::Linear, SeriesKind::Cyclic]
}

fn corpus(n_max: usize, max_entry: usize) -> Vec<KupischSeries> {
    let mut out = Vec::new();
    for kind in both_kinds() {
        for n in 1..=n_max {
            out.extend(enumerate_series(n, max_entry, kind));
        }
    }
    out
}

fn show(s: &KupischSeries) -> String {
    let kind = if s.is_cyclic() { "cyclic" } else { "linear" };
    format!("{kind} {:?}", s.entries())
}

fn list_some(items: &[String]) -> String {
    if items.is_empty() {
        return String::new();
    }
    let head: Vec<&str> = items.iter().take(5).map(String::as_str).collect();
    let more = if items.len() > 5 {
        format!(" (+{} more)", items.len() - 5)
    } else {
        String::new()
    };
    format!(": {}{more}", head.join("; "))
}

/// Dimensions of the stripped syzygies `Ω^1 S, …, Ω^k S`.
pub fn syzygy_dims(s: &RightModule, k: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut cur = s.clone();
    for _ in 0..k {
        cur = syzygy(&cur);
        out.push(cur.dim());
    }
    out
}

fn hopf_omega4() -> Vec<Check> {
    let a = hopf_example(gf2()).expect("valid table");
    let dims = syzygy_dims(&a.simple(0).expect("local"), 4);
    vec![
        Check::new(
            "hopf algebra dimension 8",
            Tri::from_bool(a.dim() == 8 && a.is_local()),
            format!("dim {}", a.dim()),
        ),
        Check::new(
            "dim Ω⁴(S) = 9",
            Tri::from_bool(dims[3] == 9),
            format!("syzygy dims {dims:?}"),
        ),
    ]
}

fn group_contrasts(limits: Limits) -> Vec<Check> {
    let d8 = dihedral_group(4).algebra(gf2()).expect("2-group");
    let dd = syzygy_dims(&d8.simple(0).expect("local"), 4);
    let q8 = quaternion_group().algebra(gf2()).expect("2-group");
    let s = q8.simple(0).expect("local");
    let qd = syzygy_dims(&s, 4);
    let mut omega = s.clone();
    for _ in 0..4 {
        omega = syzygy(&omega);
    }
    let iso = is_isomorphic(&omega, &s, limits.seed);
    vec![
        Check::new(
            "dihedral 8: dim Ω⁴(S) = 17",
            Tri::from_bool(dd[3] == 17),
            format!("syzygy dims {dd:?}"),
        ),
        Check::new(
            "quaternion: Ω⁴(S) ≅ S",
            if iso.is_yes() {
                Tri::True
            } else if iso.is_certain() {
                Tri::False
            } else {
                Tri::Unknown
            },
            format!(
                "syzygy dims {qd:?}, witness {}",
                if iso.is_yes() {
                    "invertible intertwiner"
                } else {
                    "none"
                }
            ),
        ),
    ]
}

fn nakayama_ngas(n_max: usize, max_entry: usize, workers: usize) -> Vec<Check> {
    let all = corpus(n_max, max_entry);
    let res = par::map(&all, workers, |s| s.is_ngas() == matches_ngas_pattern(s));
    let bad: Vec<String> = all
        .iter()
        .zip(&res)
        .filter(|(_, ok)| !**ok)
        .map(|(s, _)| show(s))
        .collect();
    let ngas = all.iter().filter(|s| matches_ngas_pattern(s)).count();
    vec![Check::new(
        format!("NGAS ⟺ pattern, n ≤ {n_max}, entries ≤ {max_entry}"),
        Tri::from_bool(bad.is_empty()),
        format!(
            "{} series, {ngas} NGAS, {} mismatches{}",
            all.len(),
            bad.len(),
            list_some(&bad)
        ),
    )]
}

fn domdim_scan(n_max: usize, workers: usize) -> Vec<Check> {
    let region = ScanRegion {
        n_min: 1,
        n_max,
        max_entry: None,
        kinds: both_kinds().to_vec(),
    };
    let r = scan_nakayama(ScanPredicate::Combined, &region, workers);
    let bad: Vec<String> = r.counterexamples.iter().map(show).collect();
    vec![Check::new(
        format!("domdim ≥ n ⇒ NGAS and findim = domdim, n ≤ {n_max}, entries ≤ 2n+2"),
        Tri::from_bool(bad.is_empty()),
        format!(
            "{} tested, {} with domdim ≥ n, {} counterexamples{}",
            r.tested,
            r.filtered,
            bad.len(),
            list_some(&bad)
        ),
    )]
}

fn findim_identity(n_max: usize, max_entry: usize, workers: usize) -> Vec<Check> {
    let region = ScanRegion {
        n_min: 1,
        n_max,
        max_entry: Some(max_entry),
        kinds: both_kinds().to_vec(),
    };
    let r = scan_nakayama(ScanPredicate::FindimFormula, &region, workers);
    let bad: Vec<String> = r.counterexamples.iter().map(show).collect();
    vec![Check::new(
        format!("findim = d + max pd over domdim ≥ d, n ≤ {n_max}, entries ≤ {max_entry}"),
        Tri::from_bool(bad.is_empty()),
        format!(
            "{} tested, {} with 1 ≤ domdim < ∞, {} failures{}",
            r.tested,
            r.filtered,
            bad.len(),
            list_some(&bad)
        ),
    )]
}

/// Outcome of comparing the approximation criterion with the invariants of `End(A ⊕ DA)`.
#[derive(Clone, Debug, PartialEq, Eq)]
enum Agreement {
    Skipped,
    Agree,
    Disagree(String),
    Unknown(String),
}

fn approx_case(s: &KupischSeries, limits: Limits) -> Agreement {
    if s.is_selfinjective() {
        return Agreement::Skipped;
    }
    let b = s.realize(gf2());
    let m = match AddClosure::from_summands(&b, &[b.regular(), b.dual_regular()], limits.seed) {
        Ok(m) => m,
        Err(e) => return Agreement::Disagree(format!("{}: {e}", show(s))),
    };
    let d = match mueller_domdim(&m, limits) {
        Ok(ExtNat::Finite(d)) => d,
        Ok(other) => return Agreement::Unknown(format!("{}: d = {other}", show(s))),
        Err(e) => return Agreement::Disagree(format!("{}: {e}", show(s))),
    };
    if d < 2 {
        return Agreement::Disagree(format!("{}: d = {d} < 2", show(s)));
    }
    let c4 = match fa_condition4(&m, d, limits, 1) {
        Ok(r) => r.holds,
        Err(e) => return Agreement::Disagree(format!("{}: {e}", show(s))),
    };
    let end = match endomorphism_side(&m, limits) {
        Ok(r) => r,
        Err(e) => return Agreement::Disagree(format!("{}: {e}", show(s))),
    };
    if end.domdim != ExtNat::Finite(d) {
        return Agreement::Disagree(format!(
            "{}: domdim End = {} but d = {d}",
            show(s),
            end.domdim
        ));
    }
    match (c4, end.finitistic_auslander) {
        (Tri::Unknown, _) | (_, Tri::Unknown) => Agreement::Unknown(show(s)),
        (x, y) if x == y => Agreement::Agree,
        (x, y) => Agreement::Disagree(format!(
            "{}: approximations say {x}, End side says {y}",
            show(s)
        )),
    }
}

fn approx_criterion(n_max: usize, max_entry: usize, limits: Limits, workers: usize) -> Vec<Check> {
    let all = corpus(n_max, max_entry);
    let res = par::map(&all, workers, |s| approx_case(s, limits));
    let cases = res.iter().filter(|r| **r != Agreement::Skipped).count();
    let bad: Vec<String> = res
        .iter()
        .filter_map(|r| {
            if let Agreement::Disagree(w) = r {
                Some(w.clone())
            } else {
                None
            }
        })
        .collect();
    let unk: Vec<String> = res
        .iter()
        .filter_map(|r| {
            if let Agreement::Unknown(w) = r {
                Some(w.clone())
            } else {
                None
            }
        })
        .collect();
    let outcome = if !bad.is_empty() {
        Tri::False
    } else if !unk.is_empty() {
        Tri::Unknown
    } else {
        Tri::True
    };
    vec![Check::new(
        format!("resdim criterion for A ⊕ DA agrees with End-side findim = domdim, n ≤ {n_max}, entries ≤ {max_entry}"),
        outcome,
        format!(
            "{cases} algebras, {} disagreements{}, {} inconclusive{}",
            bad.len(),
            list_some(&bad),
            unk.len(),
            list_some(&unk)
        ),
    )]
}

fn truncated_resdim(n_max: usize, limits: Limits) -> Vec<Check> {
    let mut checks = Vec::new();
    for n in 2..=n_max {
        let b = FiniteAlgebra::truncated_polynomial(gf2(), n).expect("n ≥ 1");
        let inds = enumerate_indecomposables(&b).expect("uniserial local");
        for i in 1..n {
            let m = AddClosure::new(
                &b,
                vec![inds[n - 1].clone(), inds[i - 1].clone()],
                limits.seed,
            )
            .expect("basic");
            let mut worst = Tri::True;
            let mut notes = Vec::new();
            for (j, x) in inds.iter().enumerate() {
                if j + 1 == n || j + 1 == i {
                    continue;
                }
                let st = add_resdim(&m, x, limits).status;
                let t = match st {
                    ResdimStatus::InfiniteCycle { .. } => Tri::True,
                    ResdimStatus::Finite { .. } => Tri::False,
                    ResdimStatus::Unknown { .. } => Tri::Unknown,
                };
                worst = worst.and(t);
                notes.push(format!("x^{}: {}", j + 1, resdim_text(st)));
            }
            let ext1 = ext_dim(1, &inds[i - 1], &inds[i - 1]);
            let rigid = Tri::from_bool(ext1 != 0);
            checks.push(Check::new(
                format!("K[x]/x^{n}, M = A ⊕ K[x]/x^{i}"),
                worst.and(rigid),
                format!(
                    "Ext¹ dim {ext1}; {}",
                    if notes.is_empty() {
                        "no X outside add(M)".to_string()
                    } else {
                        notes.join(", ")
                    }
                ),
            ));
        }
    }
    checks
}

pub fn resdim_text(s: ResdimStatus) -> String {
    match s {
        ResdimStatus::Finite { value } => format!("finite {value}"),
        ResdimStatus::InfiniteCycle { at, matches } => format!("∞ (step {at} ≅ step {matches})"),
        ResdimStatus::Unknown { cutoff } => format!("≥{cutoff} (cutoff)"),
    }
}

fn tilting_case(s: &KupischSeries, limits: Limits) -> Agreement {
    let d = match s.domdim() {
        ExtNat::Finite(d) if d >= 1 && !s.is_selfinjective() => d,
        _ => return Agreement::Skipped,
    };
    let a = s.realize(gf2());
    let t = match enumerate_tilting(&a, TiltingKind::Tilting, limits, 1) {
        Ok(t) => t,
        Err(e) => return Agreement::Disagree(format!("{}: {e}", show(s))),
    };
    if !t.is_complete() {
        return Agreement::Unknown(show(s));
    }
    let count = t.count() as u32;
    if s.is_ngas() {
        if count != d + 1 {
            return Agreement::Disagree(format!(
                "{}: {count} tilting modules, domdim {d}",
                show(s)
            ));
        }
        let shifted = match shifted_tilting_modules(&a, d, &t.indecomposables) {
            Ok(x) => x,
            Err(e) => return Agreement::Disagree(format!("{}: {e}", show(s))),
        };
        let found: BTreeSet<Vec<usize>> = t.modules.iter().map(|m| m.summands.clone()).collect();
        let want: BTreeSet<Vec<usize>> = shifted.into_iter().collect();
        if found != want {
            return Agreement::Disagree(format!(
                "{}: tilting modules differ from the shifted ones",
                show(s)
            ));
        }
        Agreement::Agree
    } else if count > d + 1 {
        Agreement::Agree
    } else {
        Agreement::Disagree(format!(
            "{}: non-NGAS with {count} tilting modules, domdim {d}",
            show(s)
        ))
    }
}

fn cotilting_count(n_max: usize, max_entry: usize, limits: Limits, workers: usize) -> Vec<Check> {
    let all = corpus(n_max, max_entry);
    let res = par::map(&all, workers, |s| tilting_case(s, limits));
    let mut checks = Vec::new();
    for ngas in [true, false] {
        let sel: Vec<&Agreement> = all
            .iter()
            .zip(&res)
            .filter(|(s, _)| s.is_ngas() == ngas)
            .map(|(_, r)| r)
            .collect();
        let cases = sel.iter().filter(|r| ***r != Agreement::Skipped).count();
        let bad: Vec<String> = sel
            .iter()
            .filter_map(|r| {
                if let Agreement::Disagree(w) = r {
                    Some(w.clone())
                } else {
                    None
                }
            })
            .collect();
        let unk: Vec<String> = sel
            .iter()
            .filter_map(|r| {
                if let Agreement::Unknown(w) = r {
                    Some(w.clone())
                } else {
                    None
                }
            })
            .collect();
        let outcome = if !bad.is_empty() {
            Tri::False
        } else if !unk.is_empty() {
            Tri::Unknown
        } else {
            Tri::True
        };
        let name = if ngas {
            "NGAS: count = domdim + 1, all shifted"
        } else {
            "non-NGAS, domdim ≥ 1: count > domdim + 1"
        };
        checks.push(Check::new(
            format!("{name}, n ≤ {n_max}, entries ≤ {max_entry}"),
            outcome,
            format!(
                "{cases} algebras, {} failures{}, {} cutoff-limited{}",
                bad.len(),
                list_some(&bad),
                unk.len(),
                list_some(&unk)
            ),
        ));
    }
    checks
}

/// Disagreements between the interval calculus and the structure-constant engine on one series.
fn cross_engine_series(s: &KupischSeries, limits: Limits) -> Vec<String> {
    let a = s.realize(gf2());
    let ivs = s.intervals();
    let mods: Vec<RightModule> = ivs.iter().map(|&m| s.realize_module(&a, m)).collect();
    let mut bad = Vec::new();
    let realize_opt = |m: Option<crate::nakayama::Interval>| match m {
        Some(x) => s.realize_module(&a, x),
        None => RightModule::zero(&a),
    };
    for (k, (&m, x)) in ivs.iter().zip(&mods).enumerate() {
        let tag = format!("{} {m}", show(s));
        let om = syzygy_with_projectives(x);
        if !is_isomorphic(&om, &realize_opt(s.syzygy(m)), limits.seed).is_yes() {
            bad.push(format!("{tag}: syzygy"));
        }
        let co = cosyzygy_with_injectives(x);
        if !is_isomorphic(&co, &realize_opt(s.cosyzygy(m)), limits.seed).is_yes() {
            bad.push(format!("{tag}: cosyzygy"));
        }
        if proj_dim_bounded(x, limits) != s.proj_dim(m) {
            bad.push(format!("{tag}: pd"));
        }
        if domdim_module_bounded(x, limits) != s.domdim_module(m) {
            bad.push(format!("{tag}: domdim"));
        }
        let steps = resolution(x, 3);
        for (deg, st) in steps.iter().enumerate() {
            for (&n, y) in ivs.iter().zip(&mods) {
                if st.ext1(y) != s.ext_dim(deg + 1, m, n) {
                    bad.push(format!("{tag}: Ext^{}(-, {n})", deg + 1));
                }
            }
        }
        for deg in steps.len()..3 {
            for &n in &ivs {
                if s.ext_dim(deg + 1, m, n) != 0 {
                    bad.push(format!("{tag}: Ext^{}(-, {n}) past pd", deg + 1));
                }
            }
        }
        let _ = k;
    }
    bad
}

/// Radical quotients and radical powers of the regular module of a local algebra.
fn local_test_modules(a: &FiniteAlgebra, max_dim: usize) -> Vec<RightModule> {
    let p = a.regular();
    let mut out = vec![a.simple(0).expect("local")];
    let mut u = crate::exactmat::Matrix::identity(a.field(), p.dim());
    loop {
        u = times_radical(&p, &u);
        if u.cols() == 0 {
            break;
        }
        let sub = p.submodule(&u);
        let (q, _) = p.quotient(&u);
        for x in [sub, q] {
            if x.dim() <= max_dim && !x.is_zero() {
                out.push(x);
            }
        }
    }
    let s = out[0].clone();
    for x in [syzygy(&s), crate::finalg::homological::cosyzygy(&s)] {
        if x.dim() <= max_dim && !x.is_zero() {
            out.push(x);
        }
    }
    out
}

fn ext_balance(a: &FiniteAlgebra, mods: &[RightModule], label: &str) -> Vec<String> {
    let mut bad = Vec::new();
    for (i, m) in mods.iter().enumerate() {
        for (j, n) in mods.iter().enumerate() {
            for k in 1..=3 {
                if ext_dim(k, m, n) != ext_dim_by_coresolution(k, m, n) {
                    bad.push(format!("{label}: Ext^{k}(#{i}, #{j})"));
                }
            }
        }
    }
    let _ = a;
    bad
}

fn cross_engine(n_max: usize, max_entry: usize, limits: Limits, workers: usize) -> Vec<Check> {
    let all = corpus(n_max, max_entry);
    let res = par::map(&all, workers, |s| cross_engine_series(s, limits));
    let bad: Vec<String> = res.into_iter().flatten().collect();
    let mut checks = vec![Check::new(
        format!("syzygy, cosyzygy, pd, domdim, Ext^1..3 on all intervals, n ≤ {n_max}, entries ≤ {max_entry}"),
        Tri::from_bool(bad.is_empty()),
        format!("{} series, {} disagreements{}", all.len(), bad.len(), list_some(&bad)),
    )];
    let mut algebras: Vec<(String, FiniteAlgebra, Vec<RightModule>)> = Vec::new();
    for s in &all {
        let a = s.realize(gf2());
        if a.dim() <= 8 {
            let mods: Vec<RightModule> = enumerate_indecomposables(&a)
                .expect("kupisch")
                .into_iter()
                .filter(|m| m.dim() <= 6)
                .collect();
            algebras.push((show(s), a, mods));
        }
    }
    let groups: [(&str, GroupTable, u32); 4] = [
        ("C4", cyclic_group(4), 2),
        ("C2×C2", klein_four(), 2),
        ("C3", cyclic_group(3), 3),
        ("dihedral 8", dihedral_group(4), 2),
    ];
    for (name, g, p) in groups {
        let a = g
            .algebra(PrimeField::new(p).expect("prime"))
            .expect("p-group");
        let mods = local_test_modules(&a, 6);
        algebras.push((name.to_string(), a, mods));
    }
    let h = hopf_example(gf2()).expect("valid");
    let hm = local_test_modules(&h, 6);
    algebras.push(("hopf".to_string(), h, hm));
    let pairs: usize = algebras.iter().map(|(_, _, m)| m.len() * m.len()).sum();
    let res = par::map(&algebras, workers, |(l, a, m)| ext_balance(a, m, l));
    let bad: Vec<String> = res.into_iter().flatten().collect();
    checks.push(Check::new(
        "Ext balance: resolution of M vs coresolution of N, dim ≤ 6, algebras of dim ≤ 8",
        Tri::from_bool(bad.is_empty()),
        format!(
            "{} algebras, {pairs} pairs, {} disagreements{}",
            algebras.len(),
            bad.len(),
            list_some(&bad)
        ),
    ));
    checks
}

pub fn klein_four() -> GroupTable {
    let elements = ["e", "a", "b", "ab"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    let table = (0..4).map(|i| (0..4).map(|j| i ^ j).collect()).collect();
    GroupTable { elements, table }
}

fn tensor_rules(limits: Limits) -> Vec<Check> {
    let f = gf2();
    let a21 = KupischSeries::linear(&[2, 1]).expect("valid");
    let k2 = KupischSeries::cyclic(&[2]).expect("valid");
    let cases = [
        (a21.clone(), k2.clone(), "linear [2,1] ⊗ K[x]/x²"),
        (k2.clone(), k2.clone(), "K[x]/x² ⊗ K[x]/x²"),
    ];
    let mut checks = Vec::new();
    for (x, y, label) in cases {
        let rx = classify_series(&x).report;
        let ry = classify_series(&y).report;
        let t = x.realize(f).tensor(&y.realize(f)).expect("same field");
        let rt = bounded_report(&t, limits);
        let want_dd = rx.domdim.value.min(ry.domdim.value);
        let (fx, fy) = (rx.findim.value.finite(), ry.findim.value.finite());
        let dd_ok = if rt.domdim.value.is_exact() {
            Tri::from_bool(rt.domdim.value == want_dd)
        } else {
            Tri::Unknown
        };
        let fd_ok = match (rt.findim.value, fx, fy) {
            (ExtNat::Finite(v), Some(a), Some(b)) => Tri::from_bool(v == a + b),
            _ => Tri::Unknown,
        };
        checks.push(Check::new(
            format!("{label}: domdim = min"),
            dd_ok,
            format!(
                "{} vs min({}, {})",
                rt.domdim.value, rx.domdim.value, ry.domdim.value
            ),
        ));
        checks.push(Check::new(
            format!("{label}: findim = sum"),
            fd_ok,
            format!(
                "{} vs {} + {}",
                rt.findim.value, rx.findim.value, ry.findim.value
            ),
        ));
    }
    checks
}
