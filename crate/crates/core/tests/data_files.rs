use std::path::PathBuf;

use findom_core::catalog::{dihedral_group, hopf_example, quaternion_group};
use findom_core::finalg::FiniteAlgebra;
use findom_core::input::{InputDocument, InputKind};
use findom_core::verdicts::bounded_report;
use findom_core::{KupischSeries, Limits, PrimeField};

fn load(name: &str) -> InputDocument {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../data")
        .join(name);
    InputDocument::load(&path).unwrap_or_else(|e| panic!("{name}: {e}"))
}

#[test]
fn every_bundled_file_parses() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data");
    let mut count = 0;
    for entry in std::fs::read_dir(dir).unwrap() {
        let path = entry.unwrap().path();
        if path.extension().is_some_and(|e| e == "json") {
            let doc =
                InputDocument::load(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
            for spec in doc.modules.values() {
                doc.module(spec).unwrap();
            }
            count += 1;
        }
    }
    assert!(count >= 8);
}

#[test]
fn tables_match_the_catalog() {
    let f = PrimeField::gf2();
    assert!(load("hopf.json")
        .algebra
        .structure_eq(&hopf_example(f).unwrap()));
    assert!(load("d8.json")
        .algebra
        .structure_eq(&dihedral_group(4).algebra(f).unwrap()));
    assert!(load("q8.json")
        .algebra
        .structure_eq(&quaternion_group().algebra(f).unwrap()));
    assert!(load("kx3.json")
        .algebra
        .structure_eq(&FiniteAlgebra::truncated_polynomial(f, 3).unwrap()));
}

#[test]
fn kupisch_files_carry_their_series() {
    for (name, s) in [
        (
            "kupisch-2-2-1.json",
            KupischSeries::linear(&[2, 2, 1]).unwrap(),
        ),
        ("kupisch-2-1.json", KupischSeries::linear(&[2, 1]).unwrap()),
        (
            "kupisch-cyclic-3-2.json",
            KupischSeries::cyclic(&[3, 2]).unwrap(),
        ),
    ] {
        let doc = load(name);
        assert_eq!(doc.kind, InputKind::Kupisch);
        assert_eq!(doc.series.as_ref().unwrap().canonical(), s.canonical());
        assert_eq!(doc.algebra.dim(), s.entries().iter().sum::<usize>());
    }
}

#[test]
fn monomial_file_is_the_radical_square_zero_a3() {
    let doc = load("a3-monomial.json");
    assert_eq!(doc.field.p(), 3);
    let s = KupischSeries::linear(&[2, 2, 1]).unwrap();
    let b = bounded_report(&doc.algebra, Limits::default());
    let e = s.invariants();
    assert_eq!(b.domdim.value, e.domdim.value);
    assert_eq!(b.findim.value, e.findim.value);
    assert_eq!(b.gldim.value, e.gldim.value);
}
