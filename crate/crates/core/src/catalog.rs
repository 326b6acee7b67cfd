//! Small algebras used by the suites, tests and bundled data files.

use crate::exactmat::PrimeField;
use crate::finalg::algebra::{AlgebraParts, FiniteAlgebra};
use crate::Result;

/// Multiplication table of a finite group with named elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupTable {
    pub elements: Vec<String>,
    pub table: Vec<Vec<usize>>,
}

impl GroupTable {
    pub fn algebra(&self, field: PrimeField) -> Result<FiniteAlgebra> {
        FiniteAlgebra::from_group_table(field, self.elements.clone(), &self.table)
    }
}

pub fn cyclic_group(n: usize) -> GroupTable {
    let elements = (0..n)
        .map(|i| {
            if i == 0 {
                "e".to_string()
            } else {
                format!("g{i}")
            }
        })
        .collect();
    let table = (0..n)
        .map(|i| (0..n).map(|j| (i + j) % n).collect())
        .collect();
    GroupTable { elements, table }
}

/// Dihedral group of order `2m`: elements `r^i s^a`.
pub fn dihedral_group(m: usize) -> GroupTable {
    let idx = |i: usize, a: usize| a * m + i;
    let mut elements = vec![String::new(); 2 * m];
    for a in 0..2 {
        for i in 0..m {
            elements[idx(i, a)] = match (i, a) {
                (0, 0) => "e".to_string(),
                (0, 1) => "s".to_string(),
                (1, 0) => "r".to_string(),
                (i, 0) => format!("r{i}"),
                (1, 1) => "rs".to_string(),
                (i, _) => format!("r{i}s"),
            };
        }
    }
    let mut table = vec![vec![0; 2 * m]; 2 * m];
    for a in 0..2 {
        for i in 0..m {
            for b in 0..2 {
                for k in 0..m {
                    // r^i s^a · r^k s^b = r^{i ± k} s^{a+b}
                    let e = if a == 0 { (i + k) % m } else { (i + m - k) % m };
                    table[idx(i, a)][idx(k, b)] = idx(e, (a + b) % 2);
                }
            }
        }
    }
    GroupTable { elements, table }
}

/// Quaternion group `{±1, ±i, ±j, ±k}`.
pub fn quaternion_group() -> GroupTable {
    // unit u ∈ {1,i,j,k} with sign; index = 4·sign + u
    let names = ["1", "i", "j", "k"];
    let mut elements = Vec::new();
    for s in 0..2 {
        for u in names {
            elements.push(if s == 0 {
                u.to_string()
            } else {
                format!("-{u}")
            });
        }
    }
    // products of units: (sign, unit)
    let unit_mul = |x: usize, y: usize| -> (usize, usize) {
        match (x, y) {
            (0, y) => (0, y),
            (x, 0) => (0, x),
            (x, y) if x == y => (1, 0),
            (1, 2) => (0, 3),
            (2, 3) => (0, 1),
            (3, 1) => (0, 2),
            (2, 1) => (1, 3),
            (3, 2) => (1, 1),
            (1, 3) => (1, 2),
            _ => unreachable!(),
        }
    };
    let mut table = vec![vec![0; 8]; 8];
    for a in 0..8 {
        for b in 0..8 {
            let (s, u) = unit_mul(a % 4, b % 4);
            let sign = (a / 4 + b / 4 + s) % 2;
            table[a][b] = sign * 4 + u;
        }
    }
    GroupTable { elements, table }
}

/// Basis names and nonzero products of `K⟨a,b⟩/(a², b² − aba)`.
pub const HOPF_BASIS: [&str; 8] = ["1", "a", "b", "ab", "ba", "bb", "bab", "bbb"];
pub const HOPF_PRODUCTS: [(&str, &str, &str); 15] = [
    ("a", "b", "ab"),
    ("b", "a", "ba"),
    ("b", "b", "bb"),
    ("a", "ba", "bb"),
    ("ab", "a", "bb"),
    ("b", "ab", "bab"),
    ("ba", "b", "bab"),
    ("bb", "b", "bbb"),
    ("b", "bb", "bbb"),
    ("bab", "a", "bbb"),
    ("a", "bab", "bbb"),
    ("ab", "ab", "bbb"),
    ("ba", "ba", "bbb"),
    ("a", "bb", "0"),
    ("bb", "a", "0"),
];

/// The 8-dimensional local algebra `K⟨a,b⟩/(a², b² − aba)`.
pub fn hopf_example(field: PrimeField) -> Result<FiniteAlgebra> {
    let d = HOPF_BASIS.len();
    let pos = |s: &str| HOPF_BASIS.iter().position(|&b| b == s);
    let mut mult = vec![Vec::new(); d * d];
    for i in 0..d {
        mult[i] = vec![(i, 1)];
        mult[i * d] = vec![(i, 1)];
    }
    for (x, y, z) in HOPF_PRODUCTS {
        let (i, j) = (pos(x).expect("basis"), pos(y).expect("basis"));
        mult[i * d + j] = match pos(z) {
            Some(k) => vec![(k, 1)],
            None => Vec::new(),
        };
    }
    let basis = |i: usize| {
        let mut v = vec![0; d];
        v[i] = 1;
        v
    };
    FiniteAlgebra::from_structure(AlgebraParts {
        field,
        names: HOPF_BASIS.iter().map(|s| s.to_string()).collect(),
        mult,
        unit: basis(0),
        idempotents: vec![basis(0)],
        radical: (1..d).map(basis).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn groups_are_groups() {
        let f = PrimeField::gf2();
        for g in [cyclic_group(4), dihedral_group(4), quaternion_group()] {
            let a = g.algebra(f).unwrap();
            assert!(a.is_local());
        }
        assert_eq!(dihedral_group(4).elements.len(), 8);
    }

    #[test]
    fn quaternion_is_not_dihedral() {
        // Q8 has a unique element of order 2, D8 has five
        let order_two = |g: &GroupTable| {
            (1..g.elements.len())
                .filter(|&x| g.table[x][x] == 0)
                .count()
        };
        assert_eq!(order_two(&quaternion_group()), 1);
        assert_eq!(order_two(&dihedral_group(4)), 5);
    }

    #[test]
    fn hopf_table_is_a_local_algebra_of_dimension_eight() {
        let a = hopf_example(PrimeField::gf2()).unwrap();
        assert_eq!(a.dim(), 8);
        assert!(a.is_local());
        assert_eq!(a.arrow_generators().len(), 2);
    }
}
