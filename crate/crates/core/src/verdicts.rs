//! Classification flags, Mueller's formula, the add(M)-resolution test and the
//! Nakayama scanners.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::approx::{add_resdim, enumerate_indecomposables, AddClosure, EndAlgebra, ResdimStatus};
use crate::extnat::{ExtNat, Quantity, Tri};
use crate::finalg::decompose::multiplicities;
use crate::finalg::homological::{
    ar_translate, codomdim_algebra_bounded, domdim_algebra_bounded, domdim_module_bounded,
    inj_dim_bounded, is_injective, is_projective, is_selfinjective, proj_dim_bounded, resolution,
    strip_projectives, syzygy, ResolutionStep,
};
use crate::finalg::{FiniteAlgebra, Limits, RightModule};
use crate::nakayama::{enumerate_series, KupischSeries, SeriesKind};
use crate::par;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub simple_count: usize,
    pub selfinjective: bool,
    pub proj_noninjective_count: usize,
    pub domdim: Quantity,
    pub codomdim: Quantity,
    pub findim: Quantity,
    pub inj_findim: Quantity,
    pub gdim: Quantity,
    pub gldim: Quantity,
}

/// A decided (or undecided) flag and what decided it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Flag {
    pub value: Tri,
    pub witness: String,
}

impl Flag {
    fn new(value: Tri, witness: impl Into<String>) -> Self {
        Flag {
            value,
            witness: witness.into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub qf3: Flag,
    pub ngas: Flag,
    pub weak_finitistic_auslander: Flag,
    pub finitistic_auslander: Flag,
    pub higher_auslander: Flag,
    pub auslander_gorenstein: Flag,
}

/// `a = b` with both finite; `domdim = ∞` never counts.
fn finite_equal(a: ExtNat, b: ExtNat) -> Tri {
    match (a, b) {
        (ExtNat::Infinite, _) => Tri::False,
        (ExtNat::Finite(x), ExtNat::Finite(y)) => Tri::from_bool(x == y),
        (ExtNat::Finite(_), ExtNat::Infinite) => Tri::False,
        (x, y) => Tri::from_option(x.same_as(y)),
    }
}

impl Verdict {
    pub fn from_report(r: &InvariantReport) -> Verdict {
        let dd = r.domdim.value;
        let qf3 = Flag::new(Tri::from_option(dd.at_least(1)), format!("domdim = {dd}"));
        if r.selfinjective {
            let no = || Flag::new(Tri::False, "selfinjective");
            return Verdict {
                qf3,
                ngas: no(),
                weak_finitistic_auslander: no(),
                finitistic_auslander: no(),
                higher_auslander: no(),
                auslander_gorenstein: no(),
            };
        }
        let d1 = Tri::from_option(dd.at_least(1));
        let d2 = Tri::from_option(dd.at_least(2));
        let ngas = Flag::new(
            d1.and(Tri::from_bool(r.proj_noninjective_count == 1)),
            format!(
                "domdim = {dd}, {} projective non-injective",
                r.proj_noninjective_count
            ),
        );
        let eq_f = finite_equal(dd, r.findim.value);
        let wit_f = format!("domdim = {dd}, findim = {}", r.findim.value);
        Verdict {
            qf3,
            ngas,
            weak_finitistic_auslander: Flag::new(eq_f.and(d1), wit_f.clone()),
            finitistic_auslander: Flag::new(eq_f.and(d2), wit_f),
            higher_auslander: Flag::new(
                finite_equal(dd, r.gldim.value).and(d2),
                format!("domdim = {dd}, gldim = {}", r.gldim.value),
            ),
            auslander_gorenstein: Flag::new(
                finite_equal(dd, r.gdim.value).and(d2),
                format!("domdim = {dd}, Gdim = {}", r.gdim.value),
            ),
        }
    }

    pub fn flags(&self) -> [(&'static str, &Flag); 6] {
        [
            ("qf3", &self.qf3),
            ("ngas", &self.ngas),
            ("weak_finitistic_auslander", &self.weak_finitistic_auslander),
            ("finitistic_auslander", &self.finitistic_auslander),
            ("higher_auslander", &self.higher_auslander),
            ("auslander_gorenstein", &self.auslander_gorenstein),
        ]
    }

    /// HA ⇒ AG ⇒ FA ⇒ WFA ⇒ QF-3 on all decided flags.
    pub fn chain_holds(&self) -> bool {
        let chain = [
            &self.higher_auslander,
            &self.auslander_gorenstein,
            &self.finitistic_auslander,
            &self.weak_finitistic_auslander,
            &self.qf3,
        ];
        chain
            .windows(2)
            .all(|w| !(w[0].value == Tri::True && w[1].value == Tri::False))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub report: InvariantReport,
    pub verdict: Verdict,
}

pub fn classify_series(s: &KupischSeries) -> Classification {
    let report = s.invariants();
    let verdict = Verdict::from_report(&report);
    Classification { report, verdict }
}

fn fold_max(xs: impl Iterator<Item = ExtNat>) -> ExtNat {
    xs.fold(ExtNat::Finite(0), ExtNat::max)
}

/// Lower bound (or exact value) for the finitistic dimension of one side.
fn findim_side(
    alg: &FiniteAlgebra,
    selfinj: bool,
    gdim: ExtNat,
    gldim: ExtNat,
    limits: Limits,
) -> ExtNat {
    if selfinj {
        return ExtNat::Finite(0);
    }
    if let Some(g) = gldim.finite().or(gdim.finite()) {
        return ExtNat::Finite(g);
    }
    let n = alg.simple_count();
    let candidates: Vec<RightModule> = match enumerate_indecomposables(alg) {
        Ok(list) => list,
        Err(_) => (0..n)
            .flat_map(|v| {
                [
                    alg.simple(v).expect("in range"),
                    alg.injective(v).expect("in range"),
                ]
            })
            .collect(),
    };
    let complete = alg.strategy().is_some();
    let pds: Vec<ExtNat> = candidates
        .iter()
        .map(|x| proj_dim_bounded(x, limits))
        .collect();
    let best = pds.iter().filter_map(|p| p.finite()).max().unwrap_or(0);
    if complete && pds.iter().all(|p| p.is_exact()) {
        ExtNat::Finite(best)
    } else {
        ExtNat::AtLeast(best)
    }
}

/// Invariants of an algebra given by structure constants, every value cutoff-limited.
pub fn bounded_report(alg: &FiniteAlgebra, limits: Limits) -> InvariantReport {
    let n = alg.simple_count();
    let selfinjective = is_selfinjective(alg);
    let projs: Vec<RightModule> = (0..n)
        .map(|v| alg.projective(v).expect("in range"))
        .collect();
    let injs: Vec<RightModule> = (0..n)
        .map(|v| alg.injective(v).expect("in range"))
        .collect();
    let proj_noninjective_count = projs.iter().filter(|p| !is_injective(p)).count();
    let (domdim, codomdim) = if selfinjective {
        (ExtNat::Infinite, ExtNat::Infinite)
    } else {
        (
            domdim_algebra_bounded(alg, limits),
            codomdim_algebra_bounded(alg, limits),
        )
    };
    let gldim =
        fold_max((0..n).map(|v| proj_dim_bounded(&alg.simple(v).expect("in range"), limits)));
    let injdim_a = fold_max(projs.iter().map(|p| inj_dim_bounded(p, limits)));
    let pd_da = fold_max(injs.iter().map(|i| proj_dim_bounded(i, limits)));
    let gdim = match (injdim_a, pd_da) {
        (ExtNat::Finite(a), ExtNat::Finite(b)) => ExtNat::Finite(a.max(b)),
        (ExtNat::Infinite, _) | (_, ExtNat::Infinite) => ExtNat::Infinite,
        (a, b) => a.max(b),
    };
    let floor = |x: ExtNat| match (x, domdim) {
        (ExtNat::AtLeast(k), ExtNat::Finite(d)) if !selfinjective => ExtNat::AtLeast(k.max(d)),
        _ => x,
    };
    let findim = floor(findim_side(alg, selfinjective, gdim, gldim, limits));
    let inj_findim = floor(findim_side(
        &alg.opposite(),
        selfinjective,
        gdim,
        gldim,
        limits,
    ));
    let q = |v| Quantity::bounded(v, limits.cutoff);
    InvariantReport {
        simple_count: n,
        selfinjective,
        proj_noninjective_count,
        domdim: q(domdim),
        codomdim: q(codomdim),
        findim: q(findim),
        inj_findim: q(inj_findim),
        gdim: q(gdim),
        gldim: q(gldim),
    }
}

pub fn classify_algebra(alg: &FiniteAlgebra, limits: Limits) -> Classification {
    let report = bounded_report(alg, limits);
    let verdict = Verdict::from_report(&report);
    Classification { report, verdict }
}

/// `findim ≤ 2n − 2`; `None` unless findim is a finite number.
pub fn standstrat_bound_check(report: &InvariantReport) -> Option<bool> {
    let f = report.findim.value.finite()?;
    Some(f as usize + 2 <= 2 * report.simple_count.max(1))
}

/// `dim Ext^i(M, M)` for `i = 1..=cutoff`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RigidityProfile {
    pub dims: Vec<usize>,
    /// Projective dimension of `M` when reached below the cutoff; later entries are then zero.
    pub finite_pd: Option<u32>,
}

impl RigidityProfile {
    /// Whether `Ext^i(M, M) = 0` for `1 ≤ i ≤ d`.
    pub fn is_rigid(&self, d: usize) -> Option<bool> {
        if self.dims.iter().take(d).any(|&x| x != 0) {
            return Some(false);
        }
        if d <= self.dims.len() || self.finite_pd.is_some() {
            Some(true)
        } else {
            None
        }
    }

    /// Least `i` with `Ext^i(M, M) ≠ 0`.
    pub fn first_nonzero(&self) -> Option<u32> {
        self.dims.iter().position(|&x| x != 0).map(|i| i as u32 + 1)
    }
}

fn ext_profile(m: &RightModule, cutoff: u32, stop_at_nonzero: bool) -> RigidityProfile {
    let mut dims = Vec::new();
    let mut z = strip_projectives(m).0;
    let mut finite_pd = None;
    for i in 1..=cutoff {
        if z.is_zero() {
            finite_pd = Some(i - 1);
            dims.resize(cutoff as usize, 0);
            break;
        }
        let st = ResolutionStep::of(&z);
        let e = st.ext1(m);
        dims.push(e);
        if e != 0 && stop_at_nonzero {
            break;
        }
        z = strip_projectives(&st.kernel).0;
    }
    if finite_pd.is_none() && z.is_zero() && dims.len() == cutoff as usize {
        finite_pd = Some(cutoff);
    }
    RigidityProfile { dims, finite_pd }
}

pub fn rigidity_profile(m: &RightModule, cutoff: u32) -> RigidityProfile {
    ext_profile(m, cutoff, false)
}

/// `P_v` or `I_v` missing from `add(M)`, if any.
pub fn missing_for_generator_cogenerator(m: &AddClosure, seed: u64) -> Option<String> {
    let alg = m.algebra();
    for v in 0..alg.simple_count() {
        if m.position(&alg.projective(v).expect("in range"), seed)
            .is_none()
        {
            return Some(format!("P{}", v + 1));
        }
    }
    for v in 0..alg.simple_count() {
        if m.position(&alg.injective(v).expect("in range"), seed)
            .is_none()
        {
            return Some(format!("I{}", v + 1));
        }
    }
    None
}

/// Dominant dimension of `End(M)` for a generator-cogenerator `M`: least `i ≥ 1`
/// with `Ext^i(M, M) ≠ 0`, plus one.
pub fn mueller_domdim(m: &AddClosure, limits: Limits) -> Result<ExtNat> {
    if let Some(miss) = missing_for_generator_cogenerator(m, limits.seed) {
        return Err(Error::NotGeneratorCogenerator(miss));
    }
    let profile = ext_profile(&m.module(), limits.cutoff, true);
    Ok(match profile.first_nonzero() {
        Some(i) => ExtNat::Finite(i + 1),
        None if profile.finite_pd.is_some() => ExtNat::Infinite,
        None => ExtNat::AtLeast(limits.cutoff + 1),
    })
}

/// Indices of the listed modules `X` with `Ext^k(M, X) = 0` for `1 ≤ k ≤ depth`.
pub fn perp_indices(m: &RightModule, list: &[RightModule], depth: u32) -> Vec<usize> {
    let steps = resolution(m, depth as usize);
    (0..list.len())
        .filter(|&i| steps.iter().all(|st| st.ext1(&list[i]) == 0))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Condition4Entry {
    pub index: usize,
    pub status: ResdimStatus,
}

/// Resolution dimensions of every indecomposable in `M^{⊥ d−2}` outside `add(M)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Condition4Report {
    pub d: u32,
    pub indecomposables: usize,
    pub in_add: Vec<usize>,
    pub entries: Vec<Condition4Entry>,
    pub holds: Tri,
}

pub fn fa_condition4(
    m: &AddClosure,
    d: u32,
    limits: Limits,
    workers: usize,
) -> Result<Condition4Report> {
    if d < 2 {
        return Err(Error::Input(format!("d must be at least 2, got {d}")));
    }
    let inds = enumerate_indecomposables(m.algebra())?;
    let in_add: Vec<usize> = (0..inds.len())
        .filter(|&i| m.position(&inds[i], limits.seed).is_some())
        .collect();
    let perp = perp_indices(&m.module(), &inds, d - 2);
    let targets: Vec<usize> = perp.into_iter().filter(|i| !in_add.contains(i)).collect();
    let statuses = par::map(&targets, workers, |&i| {
        add_resdim(m, &inds[i], limits).status
    });
    let mut holds = Tri::True;
    for s in &statuses {
        holds = holds.and(match s {
            ResdimStatus::InfiniteCycle { .. } => Tri::True,
            ResdimStatus::Finite { .. } => Tri::False,
            ResdimStatus::Unknown { .. } => Tri::Unknown,
        });
    }
    let entries = targets
        .into_iter()
        .zip(statuses)
        .map(|(index, status)| Condition4Entry { index, status })
        .collect();
    Ok(Condition4Report {
        d,
        indecomposables: inds.len(),
        in_add,
        entries,
        holds,
    })
}

/// Set comparisons of add-closures over the indecomposable list.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorrespondenceReport {
    pub add_m: Vec<usize>,
    pub perp: Vec<usize>,
    /// Non-projective indecomposable summands of `τ Ω^{d−2}(M ⊕ D A)`.
    pub tau_summands: Vec<usize>,
    pub higher_auslander: bool,
    /// Compared after discarding projective summands.
    pub auslander_gorenstein: bool,
}

pub fn correspondence_checks(
    m: &AddClosure,
    d: u32,
    limits: Limits,
) -> Result<CorrespondenceReport> {
    if d < 2 {
        return Err(Error::Input(format!("d must be at least 2, got {d}")));
    }
    let alg = m.algebra();
    let inds = enumerate_indecomposables(alg)?;
    let add_m: Vec<usize> = (0..inds.len())
        .filter(|&i| m.position(&inds[i], limits.seed).is_some())
        .collect();
    let perp = perp_indices(&m.module(), &inds, d - 2);
    let mut parts: Vec<RightModule> = m.generators().to_vec();
    parts.extend((0..alg.simple_count()).map(|v| alg.injective(v).expect("in range")));
    let mut shifted = RightModule::direct_sum(alg, &parts);
    for _ in 0..d - 2 {
        shifted = syzygy(&shifted);
    }
    let tau = ar_translate(&shifted);
    let mult = multiplicities(&tau, &inds)?;
    let tau_summands: Vec<usize> = (0..inds.len()).filter(|&i| mult[i] > 0).collect();
    let nonproj = |v: &[usize]| -> Vec<usize> {
        v.iter()
            .copied()
            .filter(|&i| !is_projective(&inds[i]))
            .collect()
    };
    Ok(CorrespondenceReport {
        higher_auslander: add_m == perp,
        auslander_gorenstein: nonproj(&add_m) == nonproj(&tau_summands),
        add_m,
        perp,
        tau_summands,
    })
}

/// Invariants of `B = End(M)` computed on `B` itself: its dominant dimension and
/// `findim B = domdim B + max pd` over the modules `Hom(M, X)` of dominant dimension `≥ domdim B`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EndSideReport {
    pub end_dim: usize,
    pub domdim: ExtNat,
    pub findim: ExtNat,
    pub finitistic_auslander: Tri,
}

pub fn endomorphism_side(m: &AddClosure, limits: Limits) -> Result<EndSideReport> {
    let e = EndAlgebra::new(m)?;
    let b = e.algebra();
    let domdim = if is_selfinjective(b) {
        ExtNat::Infinite
    } else {
        domdim_algebra_bounded(b, limits)
    };
    let inds = enumerate_indecomposables(m.algebra())?;
    let d = match domdim {
        ExtNat::Finite(d) if d >= 1 => d,
        ExtNat::AtLeast(_) => {
            return Ok(EndSideReport {
                end_dim: b.dim(),
                domdim,
                findim: ExtNat::AtLeast(0),
                finitistic_auslander: Tri::Unknown,
            })
        }
        _ => {
            return Ok(EndSideReport {
                end_dim: b.dim(),
                domdim,
                findim: ExtNat::AtLeast(0),
                finitistic_auslander: Tri::False,
            })
        }
    };
    let mut best = 0;
    let mut exact = true;
    for x in &inds {
        let hx = e.hom_functor(x);
        match domdim_module_bounded(&hx, limits).at_least(d) {
            Some(false) => continue,
            None => {
                exact = false;
                continue;
            }
            Some(true) => {}
        }
        match proj_dim_bounded(&hx, limits) {
            ExtNat::Finite(p) => best = best.max(p),
            ExtNat::Infinite => {}
            ExtNat::AtLeast(_) => exact = false,
        }
    }
    let findim = if exact {
        ExtNat::Finite(d + best)
    } else {
        ExtNat::AtLeast(d + best)
    };
    let fa = if d < 2 {
        Tri::False
    } else {
        finite_equal(domdim, findim)
    };
    Ok(EndSideReport {
        end_dim: b.dim(),
        domdim,
        findim,
        finitistic_auslander: fa,
    })
}

/// Both sides of `findim = d + sup{pd N : domdim N ≥ d, pd N < ∞}` for a Nakayama algebra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FindimFormula {
    pub domdim: ExtNat,
    pub lhs: u32,
    /// `None` when `domdim` is `0` or `∞` and the identity does not apply.
    pub rhs: Option<u32>,
}

impl FindimFormula {
    pub fn holds(&self) -> bool {
        self.rhs.is_none_or(|r| r == self.lhs)
    }
}

pub fn findim_formula_check(s: &KupischSeries) -> FindimFormula {
    let domdim = s.domdim();
    let lhs = s.findim();
    let rhs = match domdim {
        ExtNat::Finite(d) if d >= 1 => {
            let sup = s
                .intervals()
                .into_iter()
                .filter(|&m| s.domdim_module(m).at_least(d) == Some(true))
                .filter_map(|m| s.proj_dim(m).finite())
                .max()
                .unwrap_or(0);
            Some(d + sup)
        }
        _ => None,
    };
    FindimFormula { domdim, lhs, rhs }
}

/// Rotations of `[2,…,2,1]` (linear) or `[a,…,a,a+1,…,a+1]` with both values present (cyclic).
pub fn matches_ngas_pattern(s: &KupischSeries) -> bool {
    let c = s.entries();
    let n = c.len();
    match s.kind() {
        SeriesKind::Linear => n >= 2 && c[n - 1] == 1 && c[..n - 1].iter().all(|&x| x == 2),
        SeriesKind::Cyclic => (0..n).any(|r| {
            let rot: Vec<usize> = (0..n).map(|k| c[(r + k) % n]).collect();
            let a = rot[0];
            let split = rot.iter().position(|&x| x != a).unwrap_or(n);
            a >= 2 && split < n && rot[split..].iter().all(|&x| x == a + 1)
        }),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ScanPredicate {
    /// non-selfinjective with `domdim ≥ n` ⇒ NGAS
    NgasConjecture,
    /// non-selfinjective with `domdim ≥ n` ⇒ `findim = domdim`
    WeakFa,
    /// `n = 2`, non-selfinjective, `domdim ≥ 2` ⇒ finitistic Auslander
    TwoSimpleFa,
    /// the findim identity wherever `1 ≤ domdim < ∞`
    FindimFormula,
    /// non-selfinjective with `domdim ≥ n` ⇒ NGAS and `findim = domdim`
    Combined,
}

impl ScanPredicate {
    pub const ALL: [ScanPredicate; 5] = [
        ScanPredicate::NgasConjecture,
        ScanPredicate::WeakFa,
        ScanPredicate::TwoSimpleFa,
        ScanPredicate::FindimFormula,
        ScanPredicate::Combined,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ScanPredicate::NgasConjecture => "ngas-conjecture",
            ScanPredicate::WeakFa => "weak-fa",
            ScanPredicate::TwoSimpleFa => "two-simple-fa",
            ScanPredicate::FindimFormula => "findim-formula",
            ScanPredicate::Combined => "combined",
        }
    }

    /// `None` when the hypothesis fails, else whether the conclusion holds.
    pub fn evaluate(self, s: &KupischSeries) -> Option<bool> {
        let n = s.n() as u32;
        let big_domdim =
            |s: &KupischSeries| !s.is_selfinjective() && s.domdim().at_least(n) == Some(true);
        let fd_eq = |s: &KupischSeries| s.domdim().finite() == Some(s.findim());
        match self {
            ScanPredicate::NgasConjecture => big_domdim(s).then(|| s.is_ngas()),
            ScanPredicate::WeakFa => big_domdim(s).then(|| fd_eq(s)),
            ScanPredicate::Combined => big_domdim(s).then(|| s.is_ngas() && fd_eq(s)),
            ScanPredicate::TwoSimpleFa => {
                (n == 2 && !s.is_selfinjective() && s.domdim().at_least(2) == Some(true))
                    .then(|| fd_eq(s))
            }
            ScanPredicate::FindimFormula => {
                let f = findim_formula_check(s);
                f.rhs.map(|_| f.holds())
            }
        }
    }
}

impl fmt::Display for ScanPredicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ScanPredicate {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        ScanPredicate::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::Input(format!("unknown predicate '{s}'")))
    }
}

/// The searched region; `max_entry = None` means `2n + 2` for each `n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanRegion {
    pub n_min: usize,
    pub n_max: usize,
    pub max_entry: Option<usize>,
    pub kinds: Vec<SeriesKind>,
}

impl ScanRegion {
    pub fn entry_bound(&self, n: usize) -> usize {
        self.max_entry.unwrap_or(2 * n + 2)
    }

    pub fn series(&self) -> Vec<KupischSeries> {
        let mut out = Vec::new();
        for &kind in &self.kinds {
            for n in self.n_min..=self.n_max {
                out.extend(enumerate_series(n, self.entry_bound(n), kind));
            }
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ScanStatus {
    Verified,
    Falsified,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanReport {
    pub predicate: ScanPredicate,
    pub region: ScanRegion,
    pub tested: usize,
    pub filtered: usize,
    pub counterexamples: Vec<KupischSeries>,
    pub inconclusive: Vec<KupischSeries>,
    pub status: ScanStatus,
}

fn series_key(s: &KupischSeries) -> (u8, usize, Vec<usize>) {
    (s.is_cyclic() as u8, s.n(), s.entries().to_vec())
}

pub fn scan_nakayama(predicate: ScanPredicate, region: &ScanRegion, workers: usize) -> ScanReport {
    let all = region.series();
    let outcomes = par::map(&all, workers, |s| predicate.evaluate(s));
    let filtered = outcomes.iter().filter(|o| o.is_some()).count();
    let mut counterexamples: Vec<KupischSeries> = all
        .iter()
        .zip(&outcomes)
        .filter(|(_, o)| **o == Some(false))
        .map(|(s, _)| s.clone())
        .collect();
    counterexamples.sort_by_key(series_key);
    let status = if counterexamples.is_empty() {
        ScanStatus::Verified
    } else {
        ScanStatus::Falsified
    };
    ScanReport {
        predicate,
        region: region.clone(),
        tested: all.len(),
        filtered,
        counterexamples,
        inconclusive: Vec::new(),
        status,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmat::PrimeField;

    fn lin(c: &[usize]) -> KupischSeries {
        KupischSeries::linear(c).unwrap()
    }
    fn cyc(c: &[usize]) -> KupischSeries {
        KupischSeries::cyclic(c).unwrap()
    }
    fn kx(n: usize) -> FiniteAlgebra {
        FiniteAlgebra::truncated_polynomial(PrimeField::gf2(), n).unwrap()
    }
    fn plus_simple(b: &FiniteAlgebra, i: usize) -> AddClosure {
        let inds = enumerate_indecomposables(b).unwrap();
        let top = inds.len() - 1;
        AddClosure::new(b, vec![inds[top].clone(), inds[i - 1].clone()], 0).unwrap()
    }

    #[test]
    fn classify_examples() {
        let v = classify_series(&lin(&[2, 2, 1])).verdict;
        assert!(v.finitistic_auslander.value.is_true());
        assert!(v.higher_auslander.value.is_true());
        assert!(v.chain_holds());
        let c = classify_series(&cyc(&[2, 2]));
        assert!(c.report.selfinjective);
        assert_eq!(c.report.domdim.value, ExtNat::Infinite);
        assert_eq!(c.verdict.finitistic_auslander.value, Tri::False);
        assert_eq!(c.verdict.weak_finitistic_auslander.value, Tri::False);
        let v = classify_series(&lin(&[2, 1])).verdict;
        assert!(v.weak_finitistic_auslander.value.is_true());
        assert_eq!(v.finitistic_auslander.value, Tri::False);
    }

    #[test]
    fn bounded_path_agrees_on_small_series() {
        let f = PrimeField::gf2();
        for s in [
            lin(&[2, 2, 1]),
            lin(&[2, 1]),
            cyc(&[3, 2]),
            cyc(&[2, 2]),
            lin(&[3, 2, 1]),
            cyc(&[2, 3, 3]),
        ] {
            let exact = classify_series(&s);
            let bounded = classify_algebra(&s.realize(f), Limits::default());
            let r = &bounded.report;
            assert_eq!(r.domdim.value, exact.report.domdim.value, "{s:?}");
            assert_eq!(r.codomdim.value, exact.report.codomdim.value, "{s:?}");
            assert_eq!(r.gldim.value, exact.report.gldim.value, "{s:?}");
            assert_eq!(r.gdim.value, exact.report.gdim.value, "{s:?}");
            assert_eq!(r.findim.value, exact.report.findim.value, "{s:?}");
            assert_eq!(r.inj_findim.value, exact.report.inj_findim.value, "{s:?}");
            for ((_, a), (_, b)) in bounded
                .verdict
                .flags()
                .iter()
                .zip(exact.verdict.flags().iter())
            {
                assert_eq!(a.value, b.value, "{s:?}");
            }
        }
    }

    #[test]
    fn mueller_examples() {
        let l = Limits::default();
        assert_eq!(
            mueller_domdim(&plus_simple(&kx(2), 1), l).unwrap(),
            ExtNat::Finite(2)
        );
        assert_eq!(
            mueller_domdim(&plus_simple(&kx(4), 2), l).unwrap(),
            ExtNat::Finite(2)
        );
        let b = kx(3);
        let inds = enumerate_indecomposables(&b).unwrap();
        let bad = AddClosure::new(&b, vec![inds[0].clone()], 0).unwrap();
        assert!(matches!(
            mueller_domdim(&bad, l),
            Err(Error::NotGeneratorCogenerator(_))
        ));
    }

    #[test]
    fn mueller_over_enveloping_algebra() {
        let a = kx(2);
        let env = a.enveloping().unwrap();
        let bim = a.as_bimodule(&env).unwrap();
        let c = AddClosure::new(&env, vec![env.regular(), bim], 0).unwrap();
        assert_eq!(
            mueller_domdim(&c, Limits::default()).unwrap(),
            ExtNat::Finite(2)
        );
    }

    #[test]
    fn rigidity_examples() {
        let b = kx(2);
        let p = rigidity_profile(&b.regular(), 5);
        assert!(p.dims.iter().all(|&x| x == 0));
        assert_eq!(p.finite_pd, Some(0));
        let m = plus_simple(&b, 1).module();
        assert_ne!(rigidity_profile(&m, 3).dims[0], 0);
        let b6 = kx(6);
        let c = plus_simple(&b6, 3);
        let prof = rigidity_profile(&c.module(), 6);
        let mu = mueller_domdim(&c, Limits::default()).unwrap();
        assert_eq!(mu, ExtNat::Finite(prof.first_nonzero().unwrap() + 1));
    }

    #[test]
    fn condition4_examples() {
        let l = Limits::default();
        let c = plus_simple(&kx(3), 1);
        let r = fa_condition4(&c, 2, l, 1).unwrap();
        assert_eq!(r.entries.len(), 1);
        assert!(matches!(
            r.entries[0].status,
            ResdimStatus::InfiniteCycle { .. }
        ));
        assert_eq!(r.holds, Tri::True);
        let r = fa_condition4(&plus_simple(&kx(2), 1), 2, l, 1).unwrap();
        assert!(r.entries.is_empty());
        assert_eq!(r.holds, Tri::True);
        let s = lin(&[2, 2, 1]);
        let a = s.realize(PrimeField::gf2());
        let m = AddClosure::from_summands(&a, &[a.regular(), a.dual_regular()], 0).unwrap();
        let d = mueller_domdim(&m, l).unwrap().finite().unwrap();
        let r = fa_condition4(&m, d, l, 1).unwrap();
        assert_eq!(r.indecomposables, 5);
    }

    #[test]
    fn correspondence_examples() {
        let l = Limits::default();
        let r = correspondence_checks(&plus_simple(&kx(2), 1), 2, l).unwrap();
        assert!(r.higher_auslander);
        assert!(r.auslander_gorenstein);
        let r = correspondence_checks(&plus_simple(&kx(3), 1), 2, l).unwrap();
        assert!(!r.higher_auslander);
        assert!(r.auslander_gorenstein);
    }

    #[test]
    fn endomorphism_side_examples() {
        let l = Limits::default();
        let r = endomorphism_side(&plus_simple(&kx(3), 1), l).unwrap();
        assert_eq!(r.domdim, ExtNat::Finite(2));
        assert_eq!(r.findim, ExtNat::Finite(2));
        assert_eq!(r.finitistic_auslander, Tri::True);
        let s = lin(&[2, 1]);
        let a = s.realize(PrimeField::gf2());
        let m = AddClosure::from_summands(&a, &[a.regular(), a.dual_regular()], 0).unwrap();
        let r = endomorphism_side(&m, l).unwrap();
        assert_eq!(r.domdim, mueller_domdim(&m, l).unwrap());
    }

    #[test]
    fn findim_formula_examples() {
        let f = findim_formula_check(&lin(&[2, 2, 1]));
        assert_eq!((f.lhs, f.rhs), (2, Some(2)));
        let f = findim_formula_check(&lin(&[2, 1]));
        assert_eq!((f.lhs, f.rhs), (1, Some(1)));
        assert!(findim_formula_check(&cyc(&[3])).holds());
    }

    #[test]
    fn ngas_pattern_matches_small_range() {
        for kind in [SeriesKind::Linear, SeriesKind::Cyclic] {
            for n in 1..=4 {
                for s in enumerate_series(n, 6, kind) {
                    assert_eq!(s.is_ngas(), matches_ngas_pattern(&s), "{s:?}");
                }
            }
        }
    }

    #[test]
    fn scans_are_worker_independent() {
        let region = ScanRegion {
            n_min: 1,
            n_max: 4,
            max_entry: None,
            kinds: vec![SeriesKind::Cyclic, SeriesKind::Linear],
        };
        let a = scan_nakayama(ScanPredicate::Combined, &region, 1);
        let b = scan_nakayama(ScanPredicate::Combined, &region, 3);
        assert_eq!(a, b);
        assert_eq!(a.status, ScanStatus::Verified);
        let one = ScanRegion {
            n_min: 1,
            n_max: 1,
            max_entry: Some(6),
            kinds: vec![SeriesKind::Cyclic],
        };
        let r = scan_nakayama(ScanPredicate::NgasConjecture, &one, 1);
        assert_eq!(r.filtered, 0);
        assert!(r.tested > 0);
    }

    #[test]
    fn standstrat_bound_examples() {
        assert_eq!(
            standstrat_bound_check(&lin(&[2, 2, 1]).invariants()),
            Some(true)
        );
        assert_eq!(
            standstrat_bound_check(&cyc(&[3, 3]).invariants()),
            Some(true)
        );
        let mut r = lin(&[2, 2, 1]).invariants();
        r.findim = Quantity::exact(ExtNat::Finite(5));
        assert_eq!(standstrat_bound_check(&r), Some(false));
    }

    #[test]
    fn predicate_names_round_trip() {
        for p in ScanPredicate::ALL {
            assert_eq!(p.name().parse::<ScanPredicate>().unwrap(), p);
            assert_eq!(
                serde_json::to_string(&p).unwrap(),
                format!("\"{}\"", p.name())
            );
        }
    }
}
