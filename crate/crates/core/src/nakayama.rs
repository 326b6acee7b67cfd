//! Combinatorial calculus for connected Nakayama algebras given by Kupisch series.
//!
//! Quiver convention: arrow `i → i+1` (mod `n` for cyclic series). The projective
//! `P_i` is uniserial with composition factors `S_i, S_{i+1}, …` from top to socle.
//! Every value returned here is exact: resolutions live in the finite set of
//! intervals, so repetition of a state means an infinite dimension.

use std::collections::{HashMap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::exactmat::{Matrix, PrimeField};
use crate::extnat::{ExtNat, Quantity};
use crate::finalg::algebra::{AlgebraParts, EnumerationStrategy};
use crate::finalg::{FiniteAlgebra, RightModule};
use crate::verdicts::InvariantReport;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SeriesKind {
    Linear,
    Cyclic,
}

/// Kupisch series `c_1..c_n` of a connected Nakayama algebra.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "SeriesRepr", into = "SeriesRepr")]
pub struct KupischSeries {
    kind: SeriesKind,
    entries: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct SeriesRepr {
    cyclic: bool,
    series: Vec<usize>,
}

impl TryFrom<SeriesRepr> for KupischSeries {
    type Error = Error;
    fn try_from(r: SeriesRepr) -> Result<Self> {
        let kind = if r.cyclic {
            SeriesKind::Cyclic
        } else {
            SeriesKind::Linear
        };
        KupischSeries::new(kind, r.series)
    }
}

impl From<KupischSeries> for SeriesRepr {
    fn from(s: KupischSeries) -> Self {
        SeriesRepr {
            cyclic: s.kind == SeriesKind::Cyclic,
            series: s.entries,
        }
    }
}

/// The uniserial module `M(top, len)`; `top` is 0-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "[usize; 2]", into = "[usize; 2]")]
pub struct Interval {
    pub top: usize,
    pub len: usize,
}

impl Interval {
    pub fn new(top: usize, len: usize) -> Self {
        Interval { top, len }
    }
}

impl TryFrom<[usize; 2]> for Interval {
    type Error = Error;
    fn try_from(v: [usize; 2]) -> Result<Self> {
        if v[0] == 0 || v[1] == 0 {
            return Err(Error::InvalidInterval {
                top: v[0],
                len: v[1],
            });
        }
        Ok(Interval {
            top: v[0] - 1,
            len: v[1],
        })
    }
}

impl From<Interval> for [usize; 2] {
    fn from(m: Interval) -> Self {
        [m.top + 1, m.len]
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "M({},{})", self.top + 1, self.len)
    }
}

impl fmt::Display for KupischSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.kind {
            SeriesKind::Linear => "linear",
            SeriesKind::Cyclic => "cyclic",
        };
        let body: Vec<String> = self.entries.iter().map(|c| c.to_string()).collect();
        write!(f, "{kind} [{}]", body.join(","))
    }
}

/// Why a series is or is not NGAS.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NgasWitness {
    pub ngas: bool,
    pub selfinjective: bool,
    pub domdim: ExtNat,
    pub proj_noninjective: Vec<Interval>,
}

impl KupischSeries {
    pub fn new(kind: SeriesKind, entries: Vec<usize>) -> Result<Self> {
        let s = KupischSeries { kind, entries };
        s.validate()?;
        Ok(s)
    }

    pub fn linear(entries: &[usize]) -> Result<Self> {
        Self::new(SeriesKind::Linear, entries.to_vec())
    }

    pub fn cyclic(entries: &[usize]) -> Result<Self> {
        Self::new(SeriesKind::Cyclic, entries.to_vec())
    }

    /// Checks the admissibility inequalities; the error carries a 1-based index.
    pub fn validate(&self) -> Result<()> {
        let c = &self.entries;
        let n = c.len();
        if n == 0 {
            return Err(Error::Input("empty Kupisch series".into()));
        }
        match self.kind {
            SeriesKind::Cyclic => {
                for (i, &ci) in c.iter().enumerate() {
                    if ci < 2 {
                        return Err(Error::ViolatedKupischCondition { index: i + 1 });
                    }
                }
                for i in 0..n {
                    let next = (i + 1) % n;
                    if c[next] + 1 < c[i] {
                        return Err(Error::ViolatedKupischCondition { index: next + 1 });
                    }
                }
            }
            SeriesKind::Linear => {
                if n == 1 {
                    return if c[0] == 1 {
                        Err(Error::Semisimple)
                    } else {
                        Err(Error::ViolatedKupischCondition { index: 1 })
                    };
                }
                for (i, &ci) in c.iter().enumerate().take(n - 1) {
                    if ci < 2 {
                        return Err(Error::ViolatedKupischCondition { index: i + 1 });
                    }
                }
                for i in 0..n - 1 {
                    if c[i + 1] + 1 < c[i] {
                        return Err(Error::ViolatedKupischCondition { index: i + 2 });
                    }
                }
                if c[n - 1] != 1 {
                    return Err(Error::ViolatedKupischCondition { index: n });
                }
            }
        }
        Ok(())
    }

    pub fn kind(&self) -> SeriesKind {
        self.kind
    }
    pub fn entries(&self) -> &[usize] {
        &self.entries
    }
    pub fn n(&self) -> usize {
        self.entries.len()
    }
    pub fn is_cyclic(&self) -> bool {
        self.kind == SeriesKind::Cyclic
    }

    /// The vertex reached from 0 after `x` arrows.
    pub fn vertex(&self, x: usize) -> usize {
        match self.kind {
            SeriesKind::Cyclic => x % self.n(),
            SeriesKind::Linear => x,
        }
    }

    pub fn c(&self, i: usize) -> usize {
        self.entries[self.vertex(i)]
    }

    pub fn is_valid_interval(&self, m: Interval) -> bool {
        m.top < self.n() && m.len >= 1 && m.len <= self.entries[m.top]
    }

    pub fn check_interval(&self, m: Interval) -> Result<()> {
        if self.is_valid_interval(m) {
            Ok(())
        } else {
            Err(Error::InvalidInterval {
                top: m.top + 1,
                len: m.len,
            })
        }
    }

    pub fn projective(&self, i: usize) -> Interval {
        Interval::new(i, self.entries[i])
    }

    pub fn simple(&self, i: usize) -> Interval {
        Interval::new(i, 1)
    }

    /// All intervals, ordered by top then length.
    pub fn intervals(&self) -> Vec<Interval> {
        (0..self.n())
            .flat_map(|i| (1..=self.entries[i]).map(move |l| Interval::new(i, l)))
            .collect()
    }

    pub fn socle(&self, m: Interval) -> usize {
        self.vertex(m.top + m.len - 1)
    }

    pub fn is_projective(&self, m: Interval) -> bool {
        m.len == self.entries[m.top]
    }

    /// Length of the injective envelope of `S_j`, the longest interval with socle `j`.
    pub fn injective_len(&self, j: usize) -> usize {
        let n = self.n();
        let max = *self.entries.iter().max().unwrap_or(&1);
        let mut l = 0;
        loop {
            let next = l + 1;
            let top = match self.kind {
                SeriesKind::Linear => {
                    if next > j + 1 {
                        break;
                    }
                    j + 1 - next
                }
                SeriesKind::Cyclic => {
                    if next > max {
                        break;
                    }
                    (j + n * next - (next - 1)) % n
                }
            };
            if self.entries[top] >= next {
                l = next;
            } else {
                break;
            }
        }
        l
    }

    /// `I_j` computed directly from the injective length.
    fn envelope(&self, j: usize) -> Interval {
        let l = self.injective_len(j);
        let top = match self.kind {
            SeriesKind::Linear => j + 1 - l,
            SeriesKind::Cyclic => (j + self.n() * l + 1 - l) % self.n(),
        };
        Interval::new(top, l)
    }

    pub fn is_injective(&self, m: Interval) -> bool {
        m.len == self.injective_len(self.socle(m))
    }

    /// Vertex relabelling between `A` and the opposite series.
    fn sigma(&self, j: usize) -> usize {
        let n = self.n();
        match self.kind {
            SeriesKind::Linear => n - 1 - j,
            SeriesKind::Cyclic => (n - j % n) % n,
        }
    }

    /// Kupisch series of `A^op`, indexed so that arrows again go `i → i+1`.
    pub fn opposite(&self) -> KupischSeries {
        let n = self.n();
        let mut entries = vec![0; n];
        for j in 0..n {
            entries[self.sigma(j)] = self.injective_len(j);
        }
        KupischSeries {
            kind: self.kind,
            entries,
        }
    }

    /// `D(M)` as an interval of the opposite series (and back, applied on the opposite).
    pub fn dual(&self, m: Interval) -> Interval {
        Interval::new(self.sigma(self.socle(m)), m.len)
    }

    /// `Ω M`: kernel of `P_top ↠ M`; `None` for projectives.
    pub fn syzygy(&self, m: Interval) -> Option<Interval> {
        let c = self.entries[m.top];
        if m.len == c {
            None
        } else {
            Some(Interval::new(self.vertex(m.top + m.len), c - m.len))
        }
    }

    /// The indecomposable injectives `I_j`, obtained by dualizing projectives of the opposite.
    pub fn injective_intervals(&self) -> Vec<Interval> {
        let op = self.opposite();
        (0..self.n())
            .map(|j| op.dual(op.projective(self.sigma(j))))
            .collect()
    }

    pub fn injective(&self, j: usize) -> Interval {
        let op = self.opposite();
        op.dual(op.projective(self.sigma(j)))
    }

    /// `Ω⁻ M`: cokernel of the injective envelope; `None` for injectives.
    pub fn cosyzygy(&self, m: Interval) -> Option<Interval> {
        self.cosyzygy_with(&self.opposite(), m)
    }

    fn cosyzygy_with(&self, op: &KupischSeries, m: Interval) -> Option<Interval> {
        op.syzygy(self.dual(m)).map(|x| op.dual(x))
    }

    /// Projective dimension; exact thanks to cycle detection on intervals.
    pub fn proj_dim(&self, m: Interval) -> ExtNat {
        let mut seen = HashSet::new();
        let mut cur = m;
        let mut steps = 0;
        loop {
            if self.is_projective(cur) {
                return ExtNat::Finite(steps);
            }
            if !seen.insert(cur) {
                return ExtNat::Infinite;
            }
            cur = self.syzygy(cur).expect("non-projective has a syzygy");
            steps += 1;
        }
    }

    pub fn inj_dim(&self, m: Interval) -> ExtNat {
        let op = self.opposite();
        op.proj_dim(self.dual(m))
    }

    /// Number of initial projective terms of the minimal injective coresolution.
    pub fn domdim_module(&self, m: Interval) -> ExtNat {
        self.domdim_module_with(&self.opposite(), m)
    }

    fn domdim_module_with(&self, op: &KupischSeries, m: Interval) -> ExtNat {
        let mut seen = HashSet::new();
        let mut cur = m;
        let mut count = 0;
        loop {
            let env = self.envelope(self.socle(cur));
            if !self.is_projective(env) {
                return ExtNat::Finite(count);
            }
            count += 1;
            if !seen.insert(cur) {
                return ExtNat::Infinite;
            }
            match self.cosyzygy_with(op, cur) {
                None => return ExtNat::Infinite,
                Some(next) => cur = next,
            }
        }
    }

    pub fn is_selfinjective(&self) -> bool {
        let mut p: Vec<Interval> = (0..self.n()).map(|i| self.projective(i)).collect();
        let mut q = self.injective_intervals();
        p.sort();
        q.sort();
        p == q
    }

    pub fn domdim(&self) -> ExtNat {
        let op = self.opposite();
        (0..self.n())
            .map(|i| self.domdim_module_with(&op, self.projective(i)))
            .fold(ExtNat::Infinite, ExtNat::min)
    }

    pub fn proj_noninjective(&self) -> Vec<Interval> {
        (0..self.n())
            .map(|i| self.projective(i))
            .filter(|&p| !self.is_injective(p))
            .collect()
    }

    /// Maximum of the finite values among `dims` (0 if none).
    fn max_finite(dims: impl Iterator<Item = ExtNat>) -> u32 {
        dims.filter_map(ExtNat::finite).max().unwrap_or(0)
    }

    pub fn findim(&self) -> u32 {
        Self::max_finite(self.intervals().into_iter().map(|m| self.proj_dim(m)))
    }

    pub fn gldim(&self) -> ExtNat {
        self.intervals()
            .into_iter()
            .map(|m| self.proj_dim(m))
            .fold(ExtNat::Finite(0), ExtNat::max)
    }

    pub fn invariants(&self) -> InvariantReport {
        let op = self.opposite();
        let n = self.n();
        let projs: Vec<Interval> = (0..n).map(|i| self.projective(i)).collect();
        let injs = self.injective_intervals();
        let selfinjective = self.is_selfinjective();
        let domdim = self.domdim();
        let codomdim = op.domdim();
        let findim = self.findim();
        let inj_findim = op.findim();
        let injdim_a = projs
            .iter()
            .map(|&p| self.inj_dim(p))
            .fold(ExtNat::Finite(0), ExtNat::max);
        let pd_da = injs
            .iter()
            .map(|&i| self.proj_dim(i))
            .fold(ExtNat::Finite(0), ExtNat::max);
        let gdim = if injdim_a.is_finite() && pd_da.is_finite() {
            injdim_a.max(pd_da)
        } else {
            ExtNat::Infinite
        };
        InvariantReport {
            simple_count: n,
            selfinjective,
            proj_noninjective_count: self.proj_noninjective().len(),
            domdim: Quantity::exact(domdim),
            codomdim: Quantity::exact(codomdim),
            findim: Quantity::exact(ExtNat::Finite(findim)),
            inj_findim: Quantity::exact(ExtNat::Finite(inj_findim)),
            gdim: Quantity::exact(gdim),
            gldim: Quantity::exact(self.gldim()),
        }
    }

    pub fn ngas_witness(&self) -> NgasWitness {
        let selfinjective = self.is_selfinjective();
        let domdim = self.domdim();
        let proj_noninjective = self.proj_noninjective();
        let ngas =
            !selfinjective && domdim.at_least(1) == Some(true) && proj_noninjective.len() == 1;
        NgasWitness {
            ngas,
            selfinjective,
            domdim,
            proj_noninjective,
        }
    }

    pub fn is_ngas(&self) -> bool {
        self.ngas_witness().ngas
    }

    /// Lexicographically smallest rotation (identity for linear series).
    pub fn canonical(&self) -> KupischSeries {
        if self.kind == SeriesKind::Linear {
            return self.clone();
        }
        let n = self.n();
        let best = (0..n)
            .map(|r| {
                (0..n)
                    .map(|k| self.entries[(r + k) % n])
                    .collect::<Vec<_>>()
            })
            .min()
            .expect("nonempty");
        KupischSeries {
            kind: self.kind,
            entries: best,
        }
    }

    pub fn is_canonical(&self) -> bool {
        self.canonical().entries == self.entries
    }

    /// `dim Hom(M(i,l), M(j,m))`: one map per common quotient/sub of length `r`.
    pub fn hom_dim(&self, a: Interval, b: Interval) -> usize {
        (1..=a.len.min(b.len))
            .filter(|&r| self.vertex(a.top) == self.vertex(b.top + b.len - r))
            .count()
    }

    /// `dim Ext^k(a, b)` from the interval calculus.
    pub fn ext_dim(&self, k: usize, a: Interval, b: Interval) -> usize {
        if k == 0 {
            return self.hom_dim(a, b);
        }
        let mut z = a;
        for _ in 0..k - 1 {
            match self.syzygy(z) {
                None => return 0,
                Some(next) => z = next,
            }
        }
        let Some(omega) = self.syzygy(z) else {
            return 0;
        };
        let cover = self.projective(z.top);
        (self.hom_dim(omega, b) + self.hom_dim(z, b)) - self.hom_dim(cover, b)
    }

    /// Index of the path of length `k` starting at `i` in the realized algebra.
    fn path_indices(&self) -> HashMap<(usize, usize), usize> {
        let n = self.n();
        let mut idx = HashMap::new();
        for i in 0..n {
            idx.insert((i, 0), i);
        }
        let mut next = n;
        let max = *self.entries.iter().max().unwrap_or(&1);
        for k in 1..max {
            for i in 0..n {
                if k < self.entries[i] {
                    idx.insert((i, k), next);
                    next += 1;
                }
            }
        }
        idx
    }

    /// The path algebra modulo the Kupisch relations, tagged for interval enumeration.
    pub fn realize(&self, field: PrimeField) -> FiniteAlgebra {
        let n = self.n();
        let idx = self.path_indices();
        let dim = idx.len();
        let mut names = vec![String::new(); dim];
        for (&(i, k), &id) in &idx {
            names[id] = if k == 0 {
                format!("e{}", i + 1)
            } else {
                (0..k)
                    .map(|s| format!("a{}", self.vertex(i + s) + 1))
                    .collect()
            };
        }
        let mut mult = vec![Vec::new(); dim * dim];
        for (&(i, k), &x) in &idx {
            for (&(j, k2), &y) in &idx {
                if self.vertex(i + k) == j && k + k2 < self.entries[i] {
                    mult[x * dim + y] = vec![(idx[&(i, k + k2)], 1)];
                }
            }
        }
        let basis = |t: usize| {
            let mut v = vec![0; dim];
            v[t] = 1;
            v
        };
        let mut unit = vec![0; dim];
        unit[..n].iter_mut().for_each(|u| *u = 1);
        let parts = AlgebraParts {
            field,
            names,
            mult,
            unit,
            idempotents: (0..n).map(basis).collect(),
            radical: (n..dim).map(basis).collect(),
        };
        FiniteAlgebra::from_structure_tagged(
            parts,
            false,
            Some(EnumerationStrategy::Kupisch(self.clone())),
        )
        .expect("Kupisch realization is a valid split algebra")
    }

    /// Matrix representation of `M(i,l)` over `alg`, which must be `self.realize(..)`.
    pub fn realize_module(&self, alg: &FiniteAlgebra, m: Interval) -> RightModule {
        assert!(self.is_valid_interval(m), "invalid interval {m}");
        let idx = self.path_indices();
        let f = alg.field();
        let l = m.len;
        let mut action = vec![Matrix::zeros(f, l, l); alg.dim()];
        for (&(j, k2), &y) in &idx {
            for k in 0..l {
                if self.vertex(m.top + k) == j && k + k2 < l {
                    action[y].set(k + k2, k, 1);
                }
            }
        }
        let verts = (0..l).map(|k| self.vertex(m.top + k)).collect();
        RightModule::from_actions(alg.clone(), verts, action)
    }
}

/// Every valid series with `n` vertices and entries `≤ max_entry`, cyclic ones
/// up to rotation (minimal-rotation representative), in lexicographic order.
pub fn enumerate_series(n: usize, max_entry: usize, kind: SeriesKind) -> Vec<KupischSeries> {
    let mut out = Vec::new();
    if n == 0 || max_entry < 2 {
        return out;
    }
    match kind {
        SeriesKind::Linear => {
            if n == 1 {
                return out;
            }
            let mut cur = Vec::with_capacity(n);
            linear_dfs(n, max_entry, &mut cur, &mut out);
        }
        SeriesKind::Cyclic => {
            for first in 2..=max_entry {
                let mut cur = vec![first];
                cyclic_dfs(n, max_entry, &mut cur, &mut out);
            }
        }
    }
    out
}

fn linear_dfs(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<KupischSeries>) {
    let k = cur.len();
    if k == n - 1 {
        if let Some(&last) = cur.last() {
            if last > 2 {
                return;
            }
        }
        cur.push(1);
        out.push(KupischSeries {
            kind: SeriesKind::Linear,
            entries: cur.clone(),
        });
        cur.pop();
        return;
    }
    let lo = cur.last().map_or(2, |&p| p.saturating_sub(1).max(2));
    // c_k ≤ n − k is forced by c_n = 1
    let hi = max.min(n - k);
    for c in lo..=hi {
        cur.push(c);
        linear_dfs(n, max, cur, out);
        cur.pop();
    }
}

fn cyclic_dfs(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<KupischSeries>) {
    if cur.len() == n {
        let first = cur[0];
        let last = cur[n - 1];
        if first + 1 < last {
            return;
        }
        let s = KupischSeries {
            kind: SeriesKind::Cyclic,
            entries: cur.clone(),
        };
        if s.is_canonical() {
            out.push(s);
        }
        return;
    }
    let prev = *cur.last().expect("nonempty");
    let lo = prev.saturating_sub(1).max(cur[0]);
    for c in lo..=max {
        cur.push(c);
        cyclic_dfs(n, max, cur, out);
        cur.pop();
    }
}
