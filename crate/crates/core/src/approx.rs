//! add(M)-approximations, add(M)-resolution dimension, faithful dimension and
//! (co)tilting enumeration.

use serde::{Deserialize, Serialize};

use crate::exactmat::Matrix;
use crate::extnat::ExtNat;
use crate::finalg::algebra::AlgebraParts;
use crate::finalg::decompose::{basic_summands, fitting_split, multiplicities};
use crate::finalg::homological::{
    cosyzygy_with_injectives, hom_space, is_injective, proj_dim_bounded, resolution, split_off,
    ResolutionStep,
};
use crate::finalg::iso::is_isomorphic;
use crate::finalg::module::{homogeneous_kernel, ModuleMap, RightModule};
use crate::finalg::{FiniteAlgebra, Limits};
use crate::par;
use crate::{Error, Result};

pub use crate::finalg::decompose::enumerate_indecomposables;

/// `add(M)` given by pairwise non-isomorphic indecomposable generators.
#[derive(Clone, Debug)]
pub struct AddClosure {
    alg: FiniteAlgebra,
    generators: Vec<RightModule>,
}

impl AddClosure {
    /// Checks indecomposability (no Fitting splitting found) and pairwise non-isomorphism.
    pub fn new(alg: &FiniteAlgebra, generators: Vec<RightModule>, seed: u64) -> Result<Self> {
        for (i, g) in generators.iter().enumerate() {
            if g.algebra() != alg {
                return Err(Error::AlgebraMismatch);
            }
            if g.is_zero() {
                return Err(Error::InvalidModule("zero generator".into()));
            }
            if fitting_split(g, seed).is_some() {
                return Err(Error::InvalidModule(format!(
                    "generator {} is decomposable",
                    i + 1
                )));
            }
            for (j, h) in generators[..i].iter().enumerate() {
                if is_isomorphic(g, h, seed).is_yes() {
                    return Err(Error::InvalidModule(format!(
                        "generators {} and {} are isomorphic",
                        j + 1,
                        i + 1
                    )));
                }
            }
        }
        Ok(AddClosure {
            alg: alg.clone(),
            generators,
        })
    }

    /// Generators taken as the basic version of the given modules.
    pub fn from_summands(alg: &FiniteAlgebra, parts: &[RightModule], seed: u64) -> Result<Self> {
        if parts.iter().any(|p| p.algebra() != alg) {
            return Err(Error::AlgebraMismatch);
        }
        Ok(AddClosure {
            alg: alg.clone(),
            generators: basic_summands(parts, seed),
        })
    }

    /// Trusted constructor for generator lists already known to be basic.
    pub(crate) fn from_basic(alg: &FiniteAlgebra, generators: Vec<RightModule>) -> Self {
        AddClosure {
            alg: alg.clone(),
            generators,
        }
    }

    pub fn projectives(alg: &FiniteAlgebra) -> Self {
        let gens = (0..alg.simple_count())
            .map(|v| alg.projective(v).expect("in range"))
            .collect();
        AddClosure {
            alg: alg.clone(),
            generators: gens,
        }
    }

    pub fn algebra(&self) -> &FiniteAlgebra {
        &self.alg
    }
    pub fn generators(&self) -> &[RightModule] {
        &self.generators
    }
    pub fn len(&self) -> usize {
        self.generators.len()
    }
    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    /// `add(D M)` over the opposite algebra.
    pub fn dual(&self) -> AddClosure {
        AddClosure {
            alg: self.alg.opposite(),
            generators: self.generators.iter().map(RightModule::dual).collect(),
        }
    }

    pub fn module(&self) -> RightModule {
        RightModule::direct_sum(&self.alg, &self.generators)
    }

    /// Index of the generator isomorphic to the indecomposable `x`.
    pub fn position(&self, x: &RightModule, seed: u64) -> Option<usize> {
        self.generators
            .iter()
            .position(|g| is_isomorphic(g, x, seed).is_yes())
    }

    /// Splits off all summands in `add(C)`; returns the rest and the multiplicities removed.
    pub fn strip(&self, x: &RightModule) -> (RightModule, Vec<usize>) {
        let mut cur = x.clone();
        let mut counts = vec![0; self.len()];
        for (i, g) in self.generators.iter().enumerate() {
            while !cur.is_zero() {
                match split_off(&cur, g) {
                    Some(rest) => {
                        counts[i] += 1;
                        cur = rest;
                    }
                    None => break,
                }
            }
        }
        (cur, counts)
    }
}

/// A right approximation `f: N → X` with `N = ⊕ G_j^{m_j}`.
#[derive(Clone, Debug)]
pub struct Approximation {
    pub map: ModuleMap,
    pub multiplicities: Vec<usize>,
    /// Generator index of each summand of `N`, in basis order.
    pub summands: Vec<usize>,
}

impl Approximation {
    pub fn kernel(&self) -> RightModule {
        let k = homogeneous_kernel(&self.map.matrix, &self.map.source, &self.map.target);
        self.map.source.submodule(&k)
    }
}

fn flatten(m: &Matrix) -> Vec<u32> {
    m.to_vec()
}

/// Span of `{h ∘ ψ}` over kept maps `h: G_j → X` and `ψ ∈ Hom(G_l, G_j)` fills `Hom(G_l, X)`.
fn spans(
    h: &[Vec<Matrix>],
    e: &[Vec<Vec<Matrix>>],
    kept: &[(usize, usize)],
    l: usize,
    target: usize,
) -> bool {
    if target == 0 {
        return true;
    }
    let mut rows: Vec<Vec<u32>> = Vec::new();
    for &(j, a) in kept {
        for psi in &e[l][j] {
            rows.push(flatten(&h[j][a].mul(psi)));
        }
    }
    if rows.len() < target {
        return false;
    }
    let f = h
        .iter()
        .flatten()
        .next()
        .map(|m| m.field())
        .expect("nonempty");
    let width = rows[0].len();
    let data: Vec<u32> = rows.concat();
    Matrix::from_raw(f, rows.len(), width, data).rank() == target
}

/// Minimal right `add(C)`-approximation of `X`, by greedy stripping of redundant maps.
pub fn minimal_right_approx(c: &AddClosure, x: &RightModule) -> Approximation {
    let alg = c.algebra();
    let k = c.len();
    let h: Vec<Vec<Matrix>> = c.generators.iter().map(|g| hom_space(g, x)).collect();
    let e: Vec<Vec<Vec<Matrix>>> = c
        .generators
        .iter()
        .map(|gl| c.generators.iter().map(|gj| hom_space(gl, gj)).collect())
        .collect();
    let targets: Vec<usize> = h.iter().map(Vec::len).collect();
    let mut kept: Vec<(usize, usize)> = (0..k)
        .flat_map(|j| (0..h[j].len()).map(move |a| (j, a)))
        .collect();
    let all = kept.clone();
    for cand in all {
        let trial: Vec<(usize, usize)> = kept.iter().copied().filter(|&p| p != cand).collect();
        if (0..k).all(|l| spans(&h, &e, &trial, l, targets[l])) {
            kept = trial;
        }
    }
    let parts: Vec<RightModule> = kept.iter().map(|&(j, _)| c.generators[j].clone()).collect();
    let source = RightModule::direct_sum(alg, &parts);
    let mut matrix = Matrix::zeros(alg.field(), x.dim(), 0);
    for &(j, a) in &kept {
        matrix = matrix.hstack(&h[j][a]);
    }
    let mut mult = vec![0; k];
    for &(j, _) in &kept {
        mult[j] += 1;
    }
    Approximation {
        map: ModuleMap {
            source,
            target: x.clone(),
            matrix,
        },
        multiplicities: mult,
        summands: kept.iter().map(|&(j, _)| j).collect(),
    }
}

/// Re-checks from scratch that every `G → X` factors through the approximation.
pub fn certify_right_approx(c: &AddClosure, ap: &Approximation) -> bool {
    let x = &ap.map.target;
    c.generators.iter().all(|g| {
        let want = hom_space(g, x).len();
        let through = hom_space(g, &ap.map.source);
        if want == 0 {
            return true;
        }
        let rows: Vec<Vec<u32>> = through
            .iter()
            .map(|psi| flatten(&ap.map.matrix.mul(psi)))
            .collect();
        if rows.len() < want {
            return false;
        }
        let width = rows[0].len();
        Matrix::from_raw(x.algebra().field(), rows.len(), width, rows.concat()).rank() == want
    }) && ap.map.is_homomorphism()
}

/// Minimal left approximation `X → N`, obtained through duality.
pub fn minimal_left_approx(c: &AddClosure, x: &RightModule) -> Approximation {
    let dual = minimal_right_approx(&c.dual(), &x.dual());
    Approximation {
        map: ModuleMap {
            source: x.clone(),
            target: dual.map.source.dual(),
            matrix: dual.map.matrix.transpose(),
        },
        multiplicities: dual.multiplicities,
        summands: dual.summands,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "status")]
pub enum ResdimStatus {
    Finite {
        value: u32,
    },
    /// The kernel at step `at` is isomorphic to the one at step `matches`.
    InfiniteCycle {
        at: u32,
        matches: u32,
    },
    Unknown {
        cutoff: u32,
    },
}

impl ResdimStatus {
    pub fn as_extnat(self) -> ExtNat {
        match self {
            ResdimStatus::Finite { value } => ExtNat::Finite(value),
            ResdimStatus::InfiniteCycle { .. } => ExtNat::Infinite,
            ResdimStatus::Unknown { cutoff } => ExtNat::AtLeast(cutoff),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceStep {
    pub multiplicities: Vec<usize>,
    pub source_dim: usize,
    pub kernel_dim: usize,
    /// Dimension left after splitting off `add(C)` summands.
    pub reduced_kernel_dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResolutionTrace {
    pub steps: Vec<TraceStep>,
    pub status: ResdimStatus,
}

/// `add(C)-resdim(X)` with certified cycle detection.
pub fn add_resdim(c: &AddClosure, x: &RightModule, limits: Limits) -> ResolutionTrace {
    let (x0, _) = c.strip(x);
    let mut steps = Vec::new();
    if x0.is_zero() {
        return ResolutionTrace {
            steps,
            status: ResdimStatus::Finite { value: 0 },
        };
    }
    let mut history = vec![x0.clone()];
    let mut cur = x0;
    for step in 1..=limits.cutoff {
        let ap = minimal_right_approx(c, &cur);
        let k = ap.kernel();
        let (reduced, _) = c.strip(&k);
        steps.push(TraceStep {
            multiplicities: ap.multiplicities.clone(),
            source_dim: ap.map.source.dim(),
            kernel_dim: k.dim(),
            reduced_kernel_dim: reduced.dim(),
        });
        if reduced.is_zero() {
            return ResolutionTrace {
                steps,
                status: ResdimStatus::Finite { value: step },
            };
        }
        if let Some(j) = history
            .iter()
            .position(|h| is_isomorphic(h, &reduced, limits.seed).is_yes())
        {
            return ResolutionTrace {
                steps,
                status: ResdimStatus::InfiniteCycle {
                    at: step,
                    matches: j as u32,
                },
            };
        }
        history.push(reduced.clone());
        cur = reduced;
    }
    ResolutionTrace {
        steps,
        status: ResdimStatus::Unknown {
            cutoff: limits.cutoff,
        },
    }
}

/// Faithful dimension of `M`: number of initial injective maps in the chain of
/// minimal left `add(M)`-approximations starting at `A`.
pub fn faithful_dim(m: &AddClosure, limits: Limits) -> ExtNat {
    let dual = m.dual();
    let mut y = m.algebra().regular().dual();
    for i in 0..limits.cutoff {
        if y.is_zero() {
            return ExtNat::Infinite;
        }
        let ap = minimal_right_approx(&dual, &y);
        if !ap.map.is_surjective() {
            return ExtNat::Finite(i);
        }
        y = ap.kernel();
    }
    if y.is_zero() {
        ExtNat::Infinite
    } else {
        ExtNat::AtLeast(limits.cutoff)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TiltingKind {
    Tilting,
    Cotilting,
}

/// One basic (co)tilting module, with the data certifying it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TiltingModule {
    /// Indices into the indecomposable list, increasing.
    pub summands: Vec<usize>,
    /// Projective (resp. injective) dimension of each summand.
    pub dims: Vec<u32>,
    /// Length of the `add(T)`-coresolution of `A` (resp. resolution of `D A`).
    pub coresolution_length: u32,
}

#[derive(Clone, Debug)]
pub struct TiltingEnumeration {
    pub kind: TiltingKind,
    pub indecomposables: Vec<RightModule>,
    pub modules: Vec<TiltingModule>,
    /// Indecomposables whose (co)resolution hit the cutoff.
    pub cutoff_candidates: Vec<usize>,
    /// Ext-orthogonal summand sets whose coresolution check hit the cutoff.
    pub cutoff_sets: Vec<Vec<usize>>,
}

impl TiltingEnumeration {
    pub fn count(&self) -> usize {
        self.modules.len()
    }
    pub fn is_complete(&self) -> bool {
        self.cutoff_candidates.is_empty() && self.cutoff_sets.is_empty()
    }
}

pub fn enumerate_tilting(
    alg: &FiniteAlgebra,
    kind: TiltingKind,
    limits: Limits,
    workers: usize,
) -> Result<TiltingEnumeration> {
    let inds = enumerate_indecomposables(alg)?;
    let (side_alg, side_inds) = match kind {
        TiltingKind::Tilting => (alg.clone(), inds.clone()),
        TiltingKind::Cotilting => (alg.opposite(), inds.iter().map(RightModule::dual).collect()),
    };
    let core = tilting_core(&side_alg, &side_inds, limits, workers);
    Ok(TiltingEnumeration {
        kind,
        indecomposables: inds,
        modules: core.0,
        cutoff_candidates: core.1,
        cutoff_sets: core.2,
    })
}

type CoreResult = (Vec<TiltingModule>, Vec<usize>, Vec<Vec<usize>>);

fn tilting_core(
    alg: &FiniteAlgebra,
    inds: &[RightModule],
    limits: Limits,
    workers: usize,
) -> CoreResult {
    let n = alg.simple_count();
    let pds: Vec<ExtNat> = par::map(inds, workers, |x| proj_dim_bounded(x, limits));
    let cutoff_candidates: Vec<usize> = (0..inds.len())
        .filter(|&i| matches!(pds[i], ExtNat::AtLeast(_)))
        .collect();
    let finite: Vec<usize> = (0..inds.len()).filter(|&i| pds[i].is_finite()).collect();
    let chains: Vec<Vec<ResolutionStep>> = par::map(&finite, workers, |&i| {
        resolution(&inds[i], pds[i].finite().unwrap_or(0) as usize)
    });
    let vanishes = |a: usize, b: usize| -> bool {
        // Ext^k(X_a, X_b) = 0 for 1 ≤ k ≤ pd X_a
        chains[a].iter().all(|st| st.ext1(&inds[finite[b]]) == 0)
    };
    let self_orth: Vec<bool> = (0..finite.len()).map(|a| vanishes(a, a)).collect();
    let cand: Vec<usize> = (0..finite.len()).filter(|&a| self_orth[a]).collect();
    let pairs: Vec<(usize, usize)> = (0..cand.len())
        .flat_map(|i| (i + 1..cand.len()).map(move |j| (i, j)))
        .collect();
    let compat: Vec<bool> = par::map(&pairs, workers, |&(i, j)| {
        vanishes(cand[i], cand[j]) && vanishes(cand[j], cand[i])
    });
    let mut adj = vec![vec![false; cand.len()]; cand.len()];
    for (&(i, j), &ok) in pairs.iter().zip(&compat) {
        adj[i][j] = ok;
        adj[j][i] = ok;
    }
    let mut cliques = Vec::new();
    let mut cur = Vec::new();
    cliques_of_size(&adj, n, 0, &mut cur, &mut cliques);
    let checked: Vec<Option<std::result::Result<u32, ()>>> = par::map(&cliques, workers, |cl| {
        let gens: Vec<RightModule> = cl.iter().map(|&c| inds[finite[cand[c]]].dual()).collect();
        coresolution_length(alg, gens, limits)
    });
    let mut modules = Vec::new();
    let mut cutoff_sets = Vec::new();
    for (cl, res) in cliques.iter().zip(checked) {
        let mut summands: Vec<usize> = cl.iter().map(|&c| finite[cand[c]]).collect();
        summands.sort();
        match res {
            Some(Ok(len)) => modules.push(TiltingModule {
                dims: summands
                    .iter()
                    .map(|&i| pds[i].finite().unwrap_or(0))
                    .collect(),
                summands,
                coresolution_length: len,
            }),
            Some(Err(())) => {}
            None => cutoff_sets.push(summands),
        }
    }
    modules.sort_by(|a, b| a.summands.cmp(&b.summands));
    (modules, cutoff_candidates, cutoff_sets)
}

fn cliques_of_size(
    adj: &[Vec<bool>],
    size: usize,
    start: usize,
    cur: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if cur.len() == size {
        out.push(cur.clone());
        return;
    }
    for v in start..adj.len() {
        if cur.iter().all(|&u| adj[u][v]) {
            cur.push(v);
            cliques_of_size(adj, size, v + 1, cur, out);
            cur.pop();
        }
    }
}

/// Length of the `add(T)`-coresolution of `A`, with `dual_gens` = `D` of the summands of `T`.
/// `Some(Err)` when a left approximation fails to be injective, `None` at the cutoff.
fn coresolution_length(
    alg: &FiniteAlgebra,
    dual_gens: Vec<RightModule>,
    limits: Limits,
) -> Option<std::result::Result<u32, ()>> {
    let c = AddClosure::from_basic(&alg.opposite(), dual_gens);
    let mut y = alg.regular().dual();
    for len in 0..=limits.cutoff {
        let ap = minimal_right_approx(&c, &y);
        if !ap.map.is_surjective() {
            return Some(Err(()));
        }
        let k = ap.kernel();
        if k.is_zero() {
            return Some(Ok(len));
        }
        y = k;
    }
    None
}

/// Basic versions of `eA ⊕ Ω^{-i}(A)` for `0 ≤ i ≤ d`, as sorted index sets into `inds`.
pub fn shifted_tilting_modules(
    alg: &FiniteAlgebra,
    d: u32,
    inds: &[RightModule],
) -> Result<Vec<Vec<usize>>> {
    let projs: Vec<RightModule> = (0..alg.simple_count())
        .map(|v| alg.projective(v))
        .collect::<Result<_>>()?;
    let ea: Vec<RightModule> = projs.iter().filter(|p| is_injective(p)).cloned().collect();
    let mut out = Vec::new();
    let mut shifted = projs.clone();
    for i in 0..=d {
        if i > 0 {
            shifted = shifted.iter().map(cosyzygy_with_injectives).collect();
        }
        let mut parts = ea.clone();
        parts.extend(shifted.iter().cloned());
        let total = RightModule::direct_sum(alg, &parts);
        let mult = multiplicities(&total, inds)?;
        out.push((0..inds.len()).filter(|&j| mult[j] > 0).collect());
    }
    Ok(out)
}

fn matrix_pow(m: &Matrix, mut e: u64) -> Matrix {
    let mut acc = Matrix::identity(m.field(), m.rows());
    let mut base = m.clone();
    while e > 0 {
        if e & 1 == 1 {
            acc = acc.mul(&base);
        }
        base = base.mul(&base);
        e >>= 1;
    }
    acc
}

/// The scalar `λ` with `φ − λ` nilpotent, read off from `φ^q = λ` for `q` a large enough power of `p`.
fn scalar_part(phi: &Matrix) -> Option<u32> {
    let f = phi.field();
    let d = phi.rows();
    let mut q = f.p() as u64;
    while q < d as u64 {
        q *= f.p() as u64;
    }
    let pw = matrix_pow(phi, q);
    let lam = if d == 0 { 0 } else { pw.get(0, 0) };
    (pw == Matrix::identity(f, d).scale(lam)).then_some(lam)
}

fn flat_cols(f: crate::exactmat::PrimeField, mats: &[Matrix], rows: usize) -> Matrix {
    let cols: Vec<Vec<u32>> = mats.iter().map(Matrix::to_vec).collect();
    Matrix::from_cols(f, rows, &cols)
}

/// `End(M)` for `M = ⊕ G_i` with product `f·g = f∘g`; vertex `i` is the projection onto `G_i`.
#[derive(Clone, Debug)]
pub struct EndAlgebra {
    algebra: FiniteAlgebra,
    closure: AddClosure,
    /// `(r, c, φ)` with `φ: G_c → G_r`.
    basis: Vec<(usize, usize, Matrix)>,
}

impl EndAlgebra {
    pub fn new(c: &AddClosure) -> Result<Self> {
        let f = c.algebra().field();
        let gens = c.generators();
        let k = gens.len();
        if k == 0 {
            return Err(Error::InvalidModule("empty generator list".into()));
        }
        let mut basis: Vec<(usize, usize, Matrix)> = Vec::new();
        let mut blocks = vec![vec![Vec::new(); k]; k];
        for r in 0..k {
            for col in 0..k {
                let hs = hom_space(&gens[col], &gens[r]);
                let mats = if r == col {
                    let d = gens[r].dim();
                    let id = Matrix::identity(f, d);
                    let mut rad = Vec::new();
                    for h in &hs {
                        let lam = scalar_part(h).ok_or_else(|| {
                            Error::NotSplit(format!(
                                "End of generator {} is not split local",
                                r + 1
                            ))
                        })?;
                        rad.push(h.sub(&id.scale(lam)));
                    }
                    let keep = flat_cols(f, &rad, d * d).independent_columns();
                    std::iter::once(id)
                        .chain(keep.into_iter().map(|i| rad[i].clone()))
                        .collect()
                } else {
                    hs
                };
                for m in mats {
                    blocks[r][col].push(basis.len());
                    basis.push((r, col, m));
                }
            }
        }
        let inv: Vec<Vec<Option<Matrix>>> = (0..k)
            .map(|r| {
                (0..k)
                    .map(|col| {
                        let mats: Vec<Matrix> =
                            blocks[r][col].iter().map(|&i| basis[i].2.clone()).collect();
                        if mats.is_empty() {
                            None
                        } else {
                            flat_cols(f, &mats, gens[r].dim() * gens[col].dim()).left_inverse()
                        }
                    })
                    .collect()
            })
            .collect();
        let dim = basis.len();
        let mut mult = vec![Vec::new(); dim * dim];
        for (i, (r1, c1, a)) in basis.iter().enumerate() {
            for (j, (r2, c2, b)) in basis.iter().enumerate() {
                if c1 != r2 {
                    continue;
                }
                let prod = a.mul(b);
                if prod.is_zero() {
                    continue;
                }
                let li = inv[*r1][*c2]
                    .as_ref()
                    .ok_or_else(|| Error::InvalidModule("composite outside Hom".into()))?;
                let x = li.mul_vec(&prod.to_vec());
                mult[i * dim + j] = x
                    .iter()
                    .enumerate()
                    .filter(|(_, &v)| v != 0)
                    .map(|(t, &v)| (blocks[*r1][*c2][t], v))
                    .collect();
            }
        }
        let unit_vec = |idx: &[usize]| {
            let mut v = vec![0; dim];
            for &i in idx {
                v[i] = 1;
            }
            v
        };
        let ids: Vec<usize> = (0..k).map(|i| blocks[i][i][0]).collect();
        let names = basis
            .iter()
            .enumerate()
            .map(|(i, (r, col, _))| format!("h{}:{}>{}", i, col + 1, r + 1))
            .collect();
        let parts = AlgebraParts {
            field: f,
            names,
            mult,
            unit: unit_vec(&ids),
            idempotents: ids.iter().map(|&i| unit_vec(&[i])).collect(),
            radical: (0..dim)
                .filter(|i| !ids.contains(i))
                .map(|i| unit_vec(&[i]))
                .collect(),
        };
        let algebra = FiniteAlgebra::from_structure_tagged(parts, false, None)?;
        Ok(EndAlgebra {
            algebra,
            closure: c.clone(),
            basis,
        })
    }

    pub fn algebra(&self) -> &FiniteAlgebra {
        &self.algebra
    }

    /// `Hom(M, X)` as a right module, acting by precomposition.
    pub fn hom_functor(&self, x: &RightModule) -> RightModule {
        let f = self.algebra.field();
        let gens = self.closure.generators();
        let hs: Vec<Vec<Matrix>> = gens.iter().map(|g| hom_space(g, x)).collect();
        let mut offsets = Vec::with_capacity(gens.len());
        let mut verts = Vec::new();
        for (c, h) in hs.iter().enumerate() {
            offsets.push(verts.len());
            verts.extend(std::iter::repeat_n(c, h.len()));
        }
        let total = verts.len();
        let inv: Vec<Option<Matrix>> = hs
            .iter()
            .zip(gens)
            .map(|(h, g)| {
                if h.is_empty() {
                    None
                } else {
                    flat_cols(f, h, x.dim() * g.dim()).left_inverse()
                }
            })
            .collect();
        let action = self
            .basis
            .iter()
            .map(|(r, col, phi)| {
                let mut a = Matrix::zeros(f, total, total);
                for (t, h) in hs[*r].iter().enumerate() {
                    let comp = h.mul(phi);
                    if comp.is_zero() {
                        continue;
                    }
                    let li = inv[*col].as_ref().expect("composite lies in Hom(G, X)");
                    for (s, v) in li.mul_vec(&comp.to_vec()).into_iter().enumerate() {
                        a.set(offsets[*col] + s, offsets[*r] + t, v);
                    }
                }
                a
            })
            .collect();
        RightModule::from_actions(self.algebra.clone(), verts, action)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmat::PrimeField;
    use crate::nakayama::KupischSeries;

    fn gf2() -> PrimeField {
        PrimeField::gf2()
    }

    fn kx(n: usize) -> FiniteAlgebra {
        FiniteAlgebra::truncated_polynomial(gf2(), n).unwrap()
    }

    #[test]
    fn approximation_of_member_is_identity_like() {
        let a = kx(3);
        let inds = enumerate_indecomposables(&a).unwrap();
        let c = AddClosure::new(&a, vec![inds[2].clone(), inds[0].clone()], 0).unwrap();
        for x in [&inds[0], &inds[2]] {
            let ap = minimal_right_approx(&c, x);
            assert_eq!(ap.map.source.dim(), x.dim());
            assert!(ap.map.is_surjective());
            assert!(certify_right_approx(&c, &ap));
        }
    }

    #[test]
    fn cubic_truncation_resdims_cycle() {
        let a = kx(3);
        let inds = enumerate_indecomposables(&a).unwrap();
        let c = AddClosure::new(&a, vec![inds[2].clone(), inds[0].clone()], 0).unwrap();
        let x = &inds[1];
        let ap = minimal_right_approx(&c, x);
        assert_eq!(ap.multiplicities, vec![1, 1]);
        assert!(certify_right_approx(&c, &ap));
        let k = ap.kernel();
        assert!(is_isomorphic(&k, x, 0).is_yes());
        let tr = add_resdim(&c, x, Limits::default());
        assert_eq!(tr.status, ResdimStatus::InfiniteCycle { at: 1, matches: 0 });
        assert_eq!(
            add_resdim(&c, &inds[0], Limits::default()).status,
            ResdimStatus::Finite { value: 0 }
        );
    }

    #[test]
    fn projective_approximation_is_the_cover() {
        let s = KupischSeries::linear(&[2, 2, 1]).unwrap();
        let a = s.realize(gf2());
        let c = AddClosure::projectives(&a);
        for m in s.intervals() {
            let x = s.realize_module(&a, m);
            let ap = minimal_right_approx(&c, &x);
            let cover = crate::finalg::projective_cover(&x);
            assert_eq!(ap.map.source.dim(), cover.cover.dim(), "{m}");
        }
        let tr = add_resdim(&c, &a.simple(0).unwrap(), Limits::default());
        assert_eq!(tr.status, ResdimStatus::Finite { value: 2 });
    }

    #[test]
    fn faithful_dimension_examples() {
        let s = KupischSeries::linear(&[2, 2, 1]).unwrap();
        let a = s.realize(gf2());
        let c = AddClosure::new(
            &a,
            vec![a.projective(0).unwrap(), a.projective(1).unwrap()],
            0,
        )
        .unwrap();
        assert_eq!(faithful_dim(&c, Limits::default()), ExtNat::Finite(2));
        let b = KupischSeries::linear(&[2, 1]).unwrap().realize(gf2());
        let c = AddClosure::new(&b, vec![b.projective(0).unwrap()], 0).unwrap();
        assert_eq!(faithful_dim(&c, Limits::default()), ExtNat::Finite(1));
        let q = kx(3);
        assert_eq!(
            faithful_dim(&AddClosure::projectives(&q), Limits::default()),
            ExtNat::Infinite
        );
    }

    #[test]
    fn tilting_examples() {
        let s = KupischSeries::linear(&[2, 2, 1]).unwrap();
        let a = s.realize(gf2());
        let t = enumerate_tilting(&a, TiltingKind::Tilting, Limits::default(), 1).unwrap();
        assert!(t.is_complete());
        assert_eq!(t.count(), 3);
        let shifted = shifted_tilting_modules(&a, 2, &t.indecomposables).unwrap();
        let mut found: Vec<Vec<usize>> = t.modules.iter().map(|m| m.summands.clone()).collect();
        let mut want = shifted.clone();
        found.sort();
        want.sort();
        assert_eq!(found, want);
        let b = KupischSeries::linear(&[2, 1]).unwrap().realize(gf2());
        assert_eq!(
            enumerate_tilting(&b, TiltingKind::Tilting, Limits::default(), 1)
                .unwrap()
                .count(),
            2
        );
        let q = kx(3);
        assert_eq!(
            enumerate_tilting(&q, TiltingKind::Tilting, Limits::default(), 1)
                .unwrap()
                .count(),
            1
        );
        assert_eq!(
            enumerate_tilting(&q, TiltingKind::Cotilting, Limits::default(), 1)
                .unwrap()
                .count(),
            1
        );
    }

    #[test]
    fn add_closure_rejects_bad_generators() {
        let a = kx(3);
        let inds = enumerate_indecomposables(&a).unwrap();
        assert!(AddClosure::new(&a, vec![inds[0].clone(), inds[0].clone()], 0).is_err());
        assert!(AddClosure::new(&a, vec![inds[0].sum(&inds[1])], 0).is_err());
        let c =
            AddClosure::from_summands(&a, &[inds[0].sum(&inds[1]), inds[1].clone()], 0).unwrap();
        assert_eq!(c.len(), 2);
    }

    #[test]
    fn endomorphism_algebra_of_generator_cogenerator() {
        let a = kx(2);
        let inds = enumerate_indecomposables(&a).unwrap();
        let c = AddClosure::new(&a, vec![inds[1].clone(), inds[0].clone()], 0).unwrap();
        let e = EndAlgebra::new(&c).unwrap();
        // Auslander algebra of K[x]/x²: dimension 5, two simples
        assert_eq!(e.algebra().dim(), 5);
        assert_eq!(e.algebra().simple_count(), 2);
        let b = e.algebra();
        assert_eq!(
            crate::finalg::domdim_algebra_bounded(b, Limits::default()),
            ExtNat::Finite(2)
        );
        for x in &inds {
            let hx = e.hom_functor(x);
            assert!(hx.satisfies_axioms());
            assert!(crate::finalg::is_projective(&hx));
        }
        let gl = (0..2)
            .map(|v| proj_dim_bounded(&b.simple(v).unwrap(), Limits::default()))
            .fold(ExtNat::Finite(0), ExtNat::max);
        assert_eq!(gl, ExtNat::Finite(2));
    }

    #[test]
    fn hom_functor_turns_approximations_into_covers() {
        let a = kx(3);
        let inds = enumerate_indecomposables(&a).unwrap();
        let c = AddClosure::new(&a, vec![inds[2].clone(), inds[0].clone()], 0).unwrap();
        let e = EndAlgebra::new(&c).unwrap();
        let hx = e.hom_functor(&inds[1]);
        assert!(hx.satisfies_axioms());
        assert_eq!(proj_dim_bounded(&hx, Limits::default()), ExtNat::Infinite);
    }
}
