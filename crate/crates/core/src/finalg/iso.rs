//! Isomorphism testing: invariant fingerprints, then a search for an invertible map.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exactmat::Matrix;
use crate::finalg::homological::{hom_dim, hom_space, radical_layers, times_radical};
use crate::finalg::module::RightModule;

/// Maximal `|Hom(M,N)|` scanned exhaustively.
pub const EXHAUSTIVE_LIMIT: u64 = 4096;
/// Random combinations tried before (or instead of) the exhaustive scan.
pub const RANDOM_TRIALS: usize = 64;

#[derive(Clone, Debug)]
pub enum IsoResult {
    /// An invertible intertwiner `M → N`.
    Isomorphic(Matrix),
    /// Certified: an invariant differs, or no element of `Hom(M,N)` is invertible.
    NotIsomorphic(&'static str),
    /// Random sampling found no invertible map; `Hom(M,N)` too large to scan.
    ProbablyNot,
}

impl IsoResult {
    pub fn is_yes(&self) -> bool {
        matches!(self, IsoResult::Isomorphic(_))
    }
    pub fn is_certain(&self) -> bool {
        !matches!(self, IsoResult::ProbablyNot)
    }
}

/// Dimension vector, radical layers per vertex, and `dim Hom(M, P_i)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Fingerprint {
    pub dim_vector: Vec<usize>,
    pub layers: Vec<Vec<usize>>,
    pub hom_to_projectives: Vec<usize>,
}

pub fn fingerprint(m: &RightModule) -> Fingerprint {
    let alg = m.algebra();
    let n = alg.simple_count();
    let mut layers = Vec::new();
    let mut u = Matrix::identity(alg.field(), m.dim());
    while u.cols() > 0 {
        let mut per = vec![0; n];
        for j in 0..u.cols() {
            let col = u.col(j);
            if let Some(i) = col.iter().position(|&x| x != 0) {
                per[m.verts()[i]] += 1;
            }
        }
        layers.push(per);
        u = times_radical(m, &u);
    }
    let hom_to_projectives = (0..n)
        .map(|v| hom_dim(m, &alg.projective(v).expect("in range")))
        .collect();
    Fingerprint {
        dim_vector: m.dim_vector(),
        layers,
        hom_to_projectives,
    }
}

fn quick_mismatch(m: &RightModule, n: &RightModule) -> bool {
    m.dim_vector() != n.dim_vector() || radical_layers(m) != radical_layers(n)
}

fn invertible_by_blocks(x: &Matrix, m: &RightModule, n: &RightModule) -> bool {
    let k = m.algebra().simple_count();
    (0..k).all(|v| {
        let cols = m.indices_at(v);
        cols.is_empty() || x.submatrix(&n.indices_at(v), &cols).is_invertible()
    })
}

fn seed_for(seed: u64, m: &RightModule, h: usize) -> u64 {
    let mut s = seed ^ 0x9e37_79b9_7f4a_7c15;
    for &d in &m.dim_vector() {
        s = s.rotate_left(7) ^ (d as u64).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    }
    s ^ (h as u64)
}

/// Decides `M ≅ N` (same algebra assumed; callers check).
pub fn is_isomorphic(m: &RightModule, n: &RightModule, seed: u64) -> IsoResult {
    if m.algebra() != n.algebra() {
        return IsoResult::NotIsomorphic("different algebras");
    }
    if m.dim() != n.dim() {
        return IsoResult::NotIsomorphic("dimension");
    }
    if m.is_zero() {
        return IsoResult::Isomorphic(Matrix::zeros(m.algebra().field(), 0, 0));
    }
    if quick_mismatch(m, n) {
        return IsoResult::NotIsomorphic("fingerprint");
    }
    if fingerprint(m) != fingerprint(n) {
        return IsoResult::NotIsomorphic("fingerprint");
    }
    let basis = hom_space(m, n);
    let h = basis.len();
    if h == 0 || h != hom_dim(m, m) {
        return IsoResult::NotIsomorphic("fingerprint");
    }
    let f = m.algebra().field();
    let p = f.p() as u64;
    let combine = |coeffs: &[u32]| {
        let mut x = Matrix::zeros(f, n.dim(), m.dim());
        for (b, &c) in basis.iter().zip(coeffs) {
            if c != 0 {
                x.add_scaled(b, c);
            }
        }
        x
    };
    for b in &basis {
        if invertible_by_blocks(b, m, n) {
            return IsoResult::Isomorphic(b.clone());
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed_for(seed, m, h));
    for _ in 0..RANDOM_TRIALS {
        let coeffs: Vec<u32> = (0..h).map(|_| rng.gen_range(0..f.p())).collect();
        let x = combine(&coeffs);
        if invertible_by_blocks(&x, m, n) {
            return IsoResult::Isomorphic(x);
        }
    }
    let total = p.checked_pow(h as u32);
    match total {
        Some(t) if t <= EXHAUSTIVE_LIMIT => {
            let mut coeffs = vec![0u32; h];
            for code in 1..t {
                let mut c = code;
                for slot in coeffs.iter_mut() {
                    *slot = (c % p) as u32;
                    c /= p;
                }
                let x = combine(&coeffs);
                if invertible_by_blocks(&x, m, n) {
                    return IsoResult::Isomorphic(x);
                }
            }
            IsoResult::NotIsomorphic("exhaustive")
        }
        _ => IsoResult::ProbablyNot,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmat::PrimeField;
    use crate::finalg::homological::syzygy;
    use crate::finalg::module::ModuleMap;
    use crate::nakayama::KupischSeries;

    #[test]
    fn module_is_isomorphic_to_itself_and_witness_intertwines() {
        let s = KupischSeries::cyclic(&[3, 2]).unwrap();
        let a = s.realize(PrimeField::gf2());
        for m in s.intervals() {
            let x = s.realize_module(&a, m);
            match is_isomorphic(&x, &x, 0) {
                IsoResult::Isomorphic(w) => {
                    let map = ModuleMap::new(x.clone(), x.clone(), w).unwrap();
                    assert!(map.is_surjective());
                }
                other => panic!("{m}: {other:?}"),
            }
        }
    }

    #[test]
    fn distinct_intervals_are_not_isomorphic() {
        let s = KupischSeries::cyclic(&[3, 3]).unwrap();
        let a = s.realize(PrimeField::gf2());
        let ints = s.intervals();
        for (i, &x) in ints.iter().enumerate() {
            for &y in &ints[i + 1..] {
                let r = is_isomorphic(&s.realize_module(&a, x), &s.realize_module(&a, y), 1);
                assert!(matches!(r, IsoResult::NotIsomorphic(_)), "{x} vs {y}");
            }
        }
    }

    #[test]
    fn different_dimension_is_certified_no() {
        let a = crate::finalg::FiniteAlgebra::truncated_polynomial(PrimeField::gf2(), 3).unwrap();
        let r = is_isomorphic(&a.simple(0).unwrap(), &a.regular(), 0);
        assert!(matches!(r, IsoResult::NotIsomorphic("dimension")));
    }

    #[test]
    fn syzygy_of_simple_over_truncated_polynomial() {
        let a = crate::finalg::FiniteAlgebra::truncated_polynomial(PrimeField::gf2(), 3).unwrap();
        let s = a.simple(0).unwrap();
        let om = syzygy(&s);
        assert_eq!(om.dim(), 2);
        let om2 = syzygy(&om);
        assert!(is_isomorphic(&om2, &s, 5).is_yes());
    }
}
