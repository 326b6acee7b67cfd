//! Right modules as action matrices, with bases adapted to the idempotents.

use std::sync::Arc;

use crate::exactmat::{extend_by_standard, Matrix};
use crate::finalg::algebra::{combine, FiniteAlgebra};
use crate::{Error, Result};

/// A finite-dimensional right module.
///
/// Every basis vector lies in `M e_v` for exactly one vertex `v` (recorded in
/// `verts`), so module maps are block diagonal by vertex.
#[derive(Clone)]
pub struct RightModule {
    alg: FiniteAlgebra,
    verts: Vec<usize>,
    action: Arc<Vec<Matrix>>,
    gens: Arc<Vec<Matrix>>,
}

impl std::fmt::Debug for RightModule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "RightModule(dim {}, dimvec {:?})",
            self.dim(),
            self.dim_vector()
        )
    }
}

/// A linear map between modules over the same algebra; `matrix` is `target × source`.
#[derive(Clone, Debug)]
pub struct ModuleMap {
    pub source: RightModule,
    pub target: RightModule,
    pub matrix: Matrix,
}

impl ModuleMap {
    /// Checks the intertwining property on every algebra basis element.
    pub fn new(source: RightModule, target: RightModule, matrix: Matrix) -> Result<Self> {
        if source.algebra() != target.algebra() {
            return Err(Error::AlgebraMismatch);
        }
        if matrix.rows() != target.dim() || matrix.cols() != source.dim() {
            return Err(Error::InvalidModule("map has the wrong shape".into()));
        }
        let map = ModuleMap {
            source,
            target,
            matrix,
        };
        if !map.is_homomorphism() {
            return Err(Error::InvalidModule(
                "matrix does not intertwine the actions".into(),
            ));
        }
        Ok(map)
    }

    pub fn is_homomorphism(&self) -> bool {
        (0..self.source.algebra().dim()).all(|b| {
            self.matrix.mul(self.source.action(b)) == self.target.action(b).mul(&self.matrix)
        })
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn is_surjective(&self) -> bool {
        self.rank() == self.target.dim()
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.source.dim()
    }
}

impl RightModule {
    /// Builds a module from arbitrary action matrices, checking the module axioms
    /// and changing basis so that it is adapted to the idempotents.
    pub fn new(alg: FiniteAlgebra, action: Vec<Matrix>) -> Result<Self> {
        let f = alg.field();
        if action.len() != alg.dim() {
            return Err(Error::InvalidModule(format!(
                "expected {} action matrices, got {}",
                alg.dim(),
                action.len()
            )));
        }
        let d = action.first().map_or(0, |m| m.rows());
        if action
            .iter()
            .any(|m| m.rows() != d || m.cols() != d || m.field() != f)
        {
            return Err(Error::InvalidModule(
                "action matrices must be square of equal size".into(),
            ));
        }
        let rho = |x: &[u32]| combine(f, &action, x, d);
        if rho(alg.unit()) != Matrix::identity(f, d) {
            return Err(Error::InvalidModule(
                "unit does not act as the identity".into(),
            ));
        }
        for i in 0..alg.dim() {
            for j in 0..alg.dim() {
                let lhs = rho(&alg.product_of_basis(i, j));
                let rhs = action[j].mul(&action[i]);
                if lhs != rhs {
                    return Err(Error::InvalidModule(format!(
                        "action of {}·{} is not the composite",
                        alg.names()[i],
                        alg.names()[j]
                    )));
                }
            }
        }
        let mut cols = Vec::new();
        let mut verts = Vec::new();
        for v in 0..alg.simple_count() {
            let ev = rho(alg.idempotent(v));
            for c in ev.column_space().columns() {
                cols.push(c);
                verts.push(v);
            }
        }
        let t = Matrix::from_cols(f, d, &cols);
        let tinv = t
            .inverse()
            .ok_or_else(|| Error::InvalidModule("idempotent images do not span".into()))?;
        let adapted = action.iter().map(|m| tinv.mul(&m.mul(&t))).collect();
        Ok(RightModule::from_actions(alg, verts, adapted))
    }

    /// Internal constructor: the basis is already adapted.
    pub(crate) fn from_actions(alg: FiniteAlgebra, verts: Vec<usize>, action: Vec<Matrix>) -> Self {
        let f = alg.field();
        let d = verts.len();
        let gens = alg
            .gens_ref()
            .map(|(_, _, c)| combine(f, &action, c, d))
            .collect();
        RightModule {
            alg,
            verts,
            action: Arc::new(action),
            gens: Arc::new(gens),
        }
    }

    pub(crate) fn from_parts(
        alg: FiniteAlgebra,
        verts: Vec<usize>,
        action: Arc<Vec<Matrix>>,
        gens: Arc<Vec<Matrix>>,
    ) -> Self {
        RightModule {
            alg,
            verts,
            action,
            gens,
        }
    }

    pub fn zero(alg: &FiniteAlgebra) -> Self {
        let f = alg.field();
        let action = vec![Matrix::zeros(f, 0, 0); alg.dim()];
        RightModule::from_actions(alg.clone(), Vec::new(), action)
    }

    pub fn algebra(&self) -> &FiniteAlgebra {
        &self.alg
    }
    pub fn dim(&self) -> usize {
        self.verts.len()
    }
    pub fn is_zero(&self) -> bool {
        self.verts.is_empty()
    }
    pub fn verts(&self) -> &[usize] {
        &self.verts
    }
    pub fn action(&self, b: usize) -> &Matrix {
        &self.action[b]
    }
    pub fn actions(&self) -> &[Matrix] {
        &self.action
    }
    /// Actions of the radical generators, in the order of `arrow_generators()`.
    pub fn gen_actions(&self) -> &[Matrix] {
        &self.gens
    }

    /// Action matrix of an arbitrary algebra element.
    pub fn act(&self, x: &[u32]) -> Matrix {
        combine(self.alg.field(), &self.action, x, self.dim())
    }

    pub fn dim_vector(&self) -> Vec<usize> {
        let mut v = vec![0; self.alg.simple_count()];
        for &w in &self.verts {
            v[w] += 1;
        }
        v
    }

    pub fn indices_at(&self, v: usize) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.verts[i] == v).collect()
    }

    /// Checks `ρ(ab) = ρ(b)ρ(a)` on all basis pairs.
    pub fn satisfies_axioms(&self) -> bool {
        let a = &self.alg;
        let f = a.field();
        if self.act(a.unit()) != Matrix::identity(f, self.dim()) {
            return false;
        }
        (0..a.dim()).all(|i| {
            (0..a.dim())
                .all(|j| self.act(&a.product_of_basis(i, j)) == self.action[j].mul(&self.action[i]))
        })
    }

    /// `D M = Hom_K(M, K)`, a right module over the opposite algebra.
    pub fn dual(&self) -> RightModule {
        RightModule {
            alg: self.alg.opposite(),
            verts: self.verts.clone(),
            action: Arc::new(self.action.iter().map(Matrix::transpose).collect()),
            gens: Arc::new(self.gens.iter().map(Matrix::transpose).collect()),
        }
    }

    /// Direct sum; the basis is the concatenation of the summands' bases.
    pub fn direct_sum(alg: &FiniteAlgebra, parts: &[RightModule]) -> RightModule {
        let f = alg.field();
        let d: usize = parts.iter().map(RightModule::dim).sum();
        let block = |mats: &dyn Fn(&RightModule) -> &[Matrix], count: usize| -> Vec<Matrix> {
            (0..count)
                .map(|b| {
                    let mut m = Matrix::zeros(f, d, d);
                    let mut off = 0;
                    for p in parts {
                        let a = &mats(p)[b];
                        for r in 0..p.dim() {
                            for c in 0..p.dim() {
                                let v = a.get(r, c);
                                if v != 0 {
                                    m.set(off + r, off + c, v);
                                }
                            }
                        }
                        off += p.dim();
                    }
                    m
                })
                .collect()
        };
        let action = block(&|p: &RightModule| p.actions(), alg.dim());
        let ngens = alg.gens_ref().count();
        let gens = block(&|p: &RightModule| p.gen_actions(), ngens);
        let verts = parts.iter().flat_map(|p| p.verts.iter().copied()).collect();
        RightModule::from_parts(alg.clone(), verts, Arc::new(action), Arc::new(gens))
    }

    pub fn sum(&self, other: &RightModule) -> RightModule {
        RightModule::direct_sum(&self.alg, &[self.clone(), other.clone()])
    }

    /// The submodule spanned by the columns of `basis`, each supported on one vertex.
    pub fn submodule(&self, basis: &Matrix) -> RightModule {
        let verts = homogeneous_verts(self, basis);
        if basis.cols() == 0 {
            return RightModule::zero(&self.alg);
        }
        let l = basis
            .left_inverse()
            .expect("submodule basis must be independent");
        let restrict = |m: &Matrix| l.mul(&m.mul(basis));
        let action = self.action.iter().map(restrict).collect();
        let gens = self.gens.iter().map(restrict).collect();
        RightModule::from_parts(self.alg.clone(), verts, Arc::new(action), Arc::new(gens))
    }

    /// `M / U` for a submodule spanned by homogeneous columns, with the projection.
    pub fn quotient(&self, sub: &Matrix) -> (RightModule, Matrix) {
        let f = self.alg.field();
        let n = self.dim();
        let chosen = extend_by_standard(f, sub, &(0..n).collect::<Vec<_>>());
        let mut c = Matrix::zeros(f, n, chosen.len());
        for (j, &i) in chosen.iter().enumerate() {
            c.set(i, j, 1);
        }
        let t = sub.column_space().hstack(&c);
        let tinv = t.inverse().expect("sub and complement span the module");
        let k = t.cols() - chosen.len();
        let q = tinv.select_rows(&(k..n).collect::<Vec<_>>());
        let restrict = |m: &Matrix| q.mul(&m.mul(&c));
        let action = self.action.iter().map(restrict).collect();
        let gens = self.gens.iter().map(restrict).collect();
        let verts = chosen.iter().map(|&i| self.verts[i]).collect();
        (
            RightModule::from_parts(self.alg.clone(), verts, Arc::new(action), Arc::new(gens)),
            q,
        )
    }
}

/// Vertex of each column of a homogeneous basis (zero columns are not allowed).
pub(crate) fn homogeneous_verts(m: &RightModule, basis: &Matrix) -> Vec<usize> {
    (0..basis.cols())
        .map(|j| {
            let col = basis.col(j);
            let i = col
                .iter()
                .position(|&x| x != 0)
                .expect("nonzero basis column");
            let v = m.verts[i];
            debug_assert!(col
                .iter()
                .enumerate()
                .all(|(r, &x)| x == 0 || m.verts[r] == v));
            v
        })
        .collect()
}

/// Kernel of a block-diagonal map, as homogeneous columns in source coordinates.
pub(crate) fn homogeneous_kernel(map: &Matrix, src: &RightModule, tgt: &RightModule) -> Matrix {
    let f = src.algebra().field();
    let mut cols = Vec::new();
    for v in 0..src.algebra().simple_count() {
        let si = src.indices_at(v);
        if si.is_empty() {
            continue;
        }
        let ti = tgt.indices_at(v);
        let sub = map.submatrix(&ti, &si);
        let k = sub.kernel_basis();
        for j in 0..k.cols() {
            let mut col = vec![0u32; src.dim()];
            for (r, &i) in si.iter().enumerate() {
                col[i] = k.get(r, j);
            }
            cols.push(col);
        }
    }
    Matrix::from_cols(f, src.dim(), &cols)
}

/// Image of a block-diagonal map, as homogeneous columns in target coordinates.
pub(crate) fn homogeneous_image(map: &Matrix, src: &RightModule, tgt: &RightModule) -> Matrix {
    let f = src.algebra().field();
    let mut cols = Vec::new();
    for v in 0..src.algebra().simple_count() {
        let si = src.indices_at(v);
        if si.is_empty() {
            continue;
        }
        cols.extend(map.select_cols(&si).column_space().columns());
    }
    Matrix::from_cols(f, tgt.dim(), &cols)
}

impl FiniteAlgebra {
    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.simple_count() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: v + 1,
                max: self.simple_count(),
            })
        }
    }

    /// `P_v = e_v A`.
    pub fn projective(&self, v: usize) -> Result<RightModule> {
        self.check_vertex(v)?;
        let pd = self.proj_data(v);
        Ok(RightModule::from_parts(
            self.clone(),
            pd.verts.clone(),
            pd.action.clone(),
            pd.gens.clone(),
        ))
    }

    /// The regular module, as `⊕ P_v`.
    pub fn regular(&self) -> RightModule {
        let parts: Vec<RightModule> = (0..self.simple_count())
            .map(|v| self.projective(v).expect("in range"))
            .collect();
        RightModule::direct_sum(self, &parts)
    }

    /// `S_v = P_v / P_v J`.
    pub fn simple(&self, v: usize) -> Result<RightModule> {
        self.check_vertex(v)?;
        let f = self.field();
        let action = (0..self.dim())
            .map(|b| Matrix::from_raw(f, 1, 1, vec![self.idem_coeff(b)[v]]))
            .collect();
        Ok(RightModule::from_actions(self.clone(), vec![v], action))
    }

    /// `I_v = D(A e_v)`, the dual of the projective `e_v A^op`.
    pub fn injective(&self, v: usize) -> Result<RightModule> {
        Ok(self.opposite().projective(v)?.dual())
    }

    /// `D(A)`.
    pub fn dual_regular(&self) -> RightModule {
        self.opposite().regular().dual()
    }

    /// `A` as a right module over `A^op ⊗ A`: `x · (b ⊗ c) = b x c`.
    pub fn as_bimodule(&self, enveloping: &FiniteAlgebra) -> Result<RightModule> {
        let d = self.dim();
        if enveloping.dim() != d * d || enveloping.field() != self.field() {
            return Err(Error::AlgebraMismatch);
        }
        let f = self.field();
        let left = |b: usize| {
            let mut m = Matrix::zeros(f, d, d);
            for j in 0..d {
                for (k, &c) in self.product_of_basis(b, j).iter().enumerate() {
                    if c != 0 {
                        m.set(k, j, c);
                    }
                }
            }
            m
        };
        let right = self.right_mult();
        let mut action = Vec::with_capacity(d * d);
        for b in 0..d {
            let lb = left(b);
            for c in 0..d {
                action.push(lb.mul(&right[c]));
            }
        }
        RightModule::new(enveloping.clone(), action)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmat::PrimeField;
    use crate::nakayama::KupischSeries;

    #[test]
    fn dual_numbers_basic_modules() {
        let a = FiniteAlgebra::truncated_polynomial(PrimeField::gf2(), 2).unwrap();
        assert_eq!(a.simple(0).unwrap().dim(), 1);
        assert_eq!(a.projective(0).unwrap().dim(), 2);
        assert_eq!(a.injective(0).unwrap().dim(), 2);
        assert!(a.injective(0).unwrap().satisfies_axioms());
        assert!(a.simple(1).is_err());
    }

    #[test]
    fn path_algebra_projective_dims() {
        let s = KupischSeries::linear(&[2, 2, 1]).unwrap();
        let a = s.realize(PrimeField::gf2());
        let dims: Vec<usize> = (0..3).map(|v| a.projective(v).unwrap().dim()).collect();
        assert_eq!(dims, vec![2, 2, 1]);
        for v in 0..3 {
            assert!(a.projective(v).unwrap().satisfies_axioms());
            assert!(a.injective(v).unwrap().satisfies_axioms());
            assert!(a.simple(v).unwrap().satisfies_axioms());
        }
        assert_eq!(a.regular().dim(), 5);
        assert_eq!(a.dual_regular().dim(), 5);
    }

    #[test]
    fn new_adapts_an_unadapted_basis() {
        let s = KupischSeries::linear(&[2, 1]).unwrap();
        let a = s.realize(PrimeField::gf2());
        let p = a.projective(0).unwrap();
        // conjugate by a non-homogeneous change of basis
        let f = a.field();
        let t = Matrix::from_rows(f, &[vec![1, 1], vec![0, 1]]);
        let ti = t.inverse().unwrap();
        let action = p.actions().iter().map(|m| ti.mul(&m.mul(&t))).collect();
        let q = RightModule::new(a.clone(), action).unwrap();
        assert!(q.satisfies_axioms());
        assert_eq!(q.dim_vector(), vec![1, 1]);
    }

    #[test]
    fn new_rejects_non_module() {
        let a = FiniteAlgebra::truncated_polynomial(PrimeField::gf2(), 3).unwrap();
        let f = a.field();
        // x acting as the identity is not nilpotent: x·x = x² must act as x²'s matrix
        let action = vec![
            Matrix::identity(f, 1),
            Matrix::identity(f, 1),
            Matrix::zeros(f, 1, 1),
        ];
        assert!(RightModule::new(a, action).is_err());
    }

    #[test]
    fn interval_modules_satisfy_axioms() {
        let s = KupischSeries::cyclic(&[3, 2]).unwrap();
        let a = s.realize(PrimeField::gf2());
        for m in s.intervals() {
            let x = s.realize_module(&a, m);
            assert_eq!(x.dim(), m.len);
            assert!(x.satisfies_axioms(), "{m}");
        }
    }

    #[test]
    fn double_dual_is_same_module() {
        let s = KupischSeries::cyclic(&[3, 2]).unwrap();
        let a = s.realize(PrimeField::gf2());
        let x = s.realize_module(&a, s.simple(1));
        let dd = x.dual().dual();
        assert_eq!(dd.algebra(), x.algebra());
        assert_eq!(dd.actions(), x.actions());
    }

    #[test]
    fn bimodule_of_dual_numbers() {
        let a = FiniteAlgebra::truncated_polynomial(PrimeField::gf2(), 2).unwrap();
        let e = a.enveloping().unwrap();
        let m = a.as_bimodule(&e).unwrap();
        assert_eq!(m.dim(), 2);
        assert!(m.satisfies_axioms());
    }
}
