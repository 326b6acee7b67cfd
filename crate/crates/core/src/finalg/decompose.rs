//! Indecomposable enumeration and Krull-Schmidt decompositions.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exactmat::Matrix;
use crate::finalg::algebra::{EnumerationStrategy, FiniteAlgebra};
use crate::finalg::homological::{hom_space, split_off, times_radical};
use crate::finalg::iso::is_isomorphic;
use crate::finalg::module::{homogeneous_image, homogeneous_kernel, RightModule};
use crate::{Error, Result};

/// The complete list of indecomposables, for algebras with an enumeration strategy.
pub fn enumerate_indecomposables(alg: &FiniteAlgebra) -> Result<Vec<RightModule>> {
    match alg.strategy() {
        None => Err(Error::NoEnumerationStrategy),
        Some(EnumerationStrategy::Kupisch(series)) => {
            if alg.is_opposite_side() {
                let base = enumerate_indecomposables(&alg.opposite())?;
                Ok(base.iter().map(RightModule::dual).collect())
            } else {
                Ok(series
                    .intervals()
                    .into_iter()
                    .map(|m| series.realize_module(alg, m))
                    .collect())
            }
        }
        Some(EnumerationStrategy::UniserialLocal) => {
            let p = alg.projective(0)?;
            let mut out = Vec::new();
            // radical powers P J^k, k = 1.. until zero
            let mut powers = Vec::new();
            let mut u = Matrix::identity(alg.field(), p.dim());
            loop {
                u = times_radical(&p, &u);
                powers.push(u.clone());
                if u.cols() == 0 {
                    break;
                }
            }
            for pk in &powers {
                out.push(p.quotient(pk).0);
            }
            Ok(out)
        }
    }
}

/// Multiplicities of the listed indecomposables in `m`; errors if `m` is not exhausted.
pub fn multiplicities(m: &RightModule, indecomposables: &[RightModule]) -> Result<Vec<usize>> {
    let mut cur = m.clone();
    let mut mult = vec![0; indecomposables.len()];
    for (i, x) in indecomposables.iter().enumerate() {
        while !cur.is_zero() {
            match split_off(&cur, x) {
                Some(rest) => {
                    mult[i] += 1;
                    cur = rest;
                }
                None => break,
            }
        }
    }
    if cur.is_zero() {
        Ok(mult)
    } else {
        Err(Error::InvalidModule(
            "module not exhausted by the listed indecomposables".into(),
        ))
    }
}

/// Index of the listed indecomposable isomorphic to `x`.
pub fn find_isomorphic(x: &RightModule, list: &[RightModule], seed: u64) -> Option<usize> {
    list.iter().position(|y| is_isomorphic(x, y, seed).is_yes())
}

fn power_stable(phi: &Matrix) -> Matrix {
    let mut psi = phi.clone();
    let mut r = psi.rank();
    loop {
        let next = psi.mul(&psi);
        let rn = next.rank();
        if rn == r {
            return next;
        }
        psi = next;
        r = rn;
    }
}

/// A nontrivial decomposition `M = im φ^N ⊕ ker φ^N` from some endomorphism φ.
pub fn fitting_split(m: &RightModule, seed: u64) -> Option<(RightModule, RightModule)> {
    let f = m.algebra().field();
    let d = m.dim();
    if d <= 1 {
        return None;
    }
    let end = hom_space(m, m);
    let mut candidates: Vec<Matrix> = end.clone();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (d as u64).wrapping_mul(0x2545_f491_4f6c_dd1d));
    for _ in 0..16 {
        let mut x = Matrix::zeros(f, d, d);
        for b in &end {
            x.add_scaled(b, rng.gen_range(0..f.p()));
        }
        candidates.push(x);
    }
    let id = Matrix::identity(f, d);
    let shifts = f.p().min(8);
    for phi in &candidates {
        for lambda in 0..shifts {
            let shifted = phi.sub(&id.scale(lambda));
            let psi = power_stable(&shifted);
            let r = psi.rank();
            if r > 0 && r < d {
                let im = homogeneous_image(&psi, m, m);
                let ker = homogeneous_kernel(&psi, m, m);
                return Some((m.submodule(&im), m.submodule(&ker)));
            }
        }
    }
    None
}

/// Indecomposable summands by repeated Fitting splitting.
pub fn decompose_fitting(m: &RightModule, seed: u64) -> Vec<RightModule> {
    if m.is_zero() {
        return Vec::new();
    }
    match fitting_split(m, seed) {
        None => vec![m.clone()],
        Some((a, b)) => {
            let mut out = decompose_fitting(&a, seed);
            out.extend(decompose_fitting(&b, seed));
            out
        }
    }
}

/// Indecomposable summands of `m`, using the enumeration when one exists.
pub fn decompose(m: &RightModule, seed: u64) -> Vec<RightModule> {
    if let Ok(list) = enumerate_indecomposables(m.algebra()) {
        if let Ok(mult) = multiplicities(m, &list) {
            return list
                .iter()
                .zip(mult)
                .flat_map(|(x, k)| std::iter::repeat_n(x.clone(), k))
                .collect();
        }
    }
    decompose_fitting(m, seed)
}

/// Pairwise non-isomorphic indecomposable summands of the given modules, in order of appearance.
pub fn basic_summands(parts: &[RightModule], seed: u64) -> Vec<RightModule> {
    let mut out: Vec<RightModule> = Vec::new();
    for p in parts {
        for x in decompose(p, seed) {
            if find_isomorphic(&x, &out, seed).is_none() {
                out.push(x);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmat::PrimeField;
    use crate::nakayama::KupischSeries;

    #[test]
    fn uniserial_local_enumeration() {
        let a = FiniteAlgebra::truncated_polynomial(PrimeField::gf2(), 3).unwrap();
        let list = enumerate_indecomposables(&a).unwrap();
        let dims: Vec<usize> = list.iter().map(RightModule::dim).collect();
        assert_eq!(dims, vec![1, 2, 3]);
    }

    #[test]
    fn kupisch_enumeration_count() {
        let s = KupischSeries::linear(&[2, 2, 1]).unwrap();
        let a = s.realize(PrimeField::gf2());
        assert_eq!(enumerate_indecomposables(&a).unwrap().len(), 5);
        assert_eq!(enumerate_indecomposables(&a.opposite()).unwrap().len(), 5);
    }

    #[test]
    fn no_strategy_for_group_of_order_four() {
        let a = FiniteAlgebra::from_group_table(
            PrimeField::gf2(),
            vec!["e".into(), "a".into(), "b".into(), "c".into()],
            &[
                vec![0, 1, 2, 3],
                vec![1, 0, 3, 2],
                vec![2, 3, 0, 1],
                vec![3, 2, 1, 0],
            ],
        )
        .unwrap();
        assert_eq!(
            enumerate_indecomposables(&a).err(),
            Some(Error::NoEnumerationStrategy)
        );
    }

    #[test]
    fn regular_decomposes_into_projectives() {
        let s = KupischSeries::cyclic(&[3, 2]).unwrap();
        let a = s.realize(PrimeField::gf2());
        let parts = decompose(&a.regular(), 0);
        assert_eq!(parts.len(), 2);
        let fit = decompose_fitting(&a.regular(), 0);
        assert_eq!(fit.len(), 2);
        let local = FiniteAlgebra::truncated_polynomial(PrimeField::gf2(), 4).unwrap();
        let m = local.simple(0).unwrap().sum(&local.regular());
        let fit = decompose_fitting(&m, 3);
        let mut dims: Vec<usize> = fit.iter().map(RightModule::dim).collect();
        dims.sort();
        assert_eq!(dims, vec![1, 4]);
    }
}
