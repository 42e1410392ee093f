mod common;

use std::collections::BTreeSet;

use common::{bipyramid, parabola_polygon, quad};
use proptest::prelude::*;
use tropaint::config::PointConfiguration;
use tropaint::secondary::{
    face_lattice_from_poset, gkz_vector, lattice_isomorphic, secondary_polytope_vertices, FaceLattice,
};
use tropaint::subdivision::{enumerate_coherent_subdivisions, induce_subdivision, is_triangulation, Lifting};

fn configs() -> Vec<PointConfiguration> {
    vec![quad(), bipyramid(), parabola_polygon(5)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn induced_triangulation_minimizes_pairing(raw in prop::collection::vec(-9i64..=9, 5)) {
        for c in configs() {
            let eta = Lifting::from_ints(&raw[..c.len()]);
            let s = induce_subdivision(&c, &eta).unwrap();
            prop_assume!(is_triangulation(&s));
            let mine = gkz_vector(&c, &s).unwrap().pair(&eta.0);
            for (v, t) in secondary_polytope_vertices(&c).unwrap() {
                if t != s {
                    prop_assert!(v.pair(&eta.0) > mine);
                }
            }
        }
    }

    #[test]
    fn relabelled_lattices_are_isomorphic(shift in 0usize..50) {
        let poset = enumerate_coherent_subdivisions(&parabola_polygon(6)).unwrap();
        let l = face_lattice_from_poset(&poset);
        let n = l.len();
        let perm: Vec<usize> = (0..n).map(|i| (i * 7 + shift) % n).collect();
        let mut labels = vec![String::new(); n];
        let mut ranks = vec![0; n];
        for i in 0..n {
            labels[perm[i]] = l.labels[i].clone();
            ranks[perm[i]] = l.ranks[i];
        }
        let covers = l.covers.iter().map(|&(a, b)| (perm[a], perm[b])).collect();
        let other = FaceLattice::new(labels, ranks, covers);
        let iso = lattice_isomorphic(&l, &other).unwrap();
        let mapped: BTreeSet<(usize, usize)> = l.covers.iter().map(|&(a, b)| (iso[a], iso[b])).collect();
        prop_assert_eq!(mapped, other.covers.iter().copied().collect::<BTreeSet<_>>());
    }
}

#[test]
fn gkz_vectors_are_distinct() {
    for c in configs() {
        let vertices = secondary_polytope_vertices(&c).unwrap();
        let distinct: BTreeSet<_> = vertices.iter().map(|(v, _)| v.0.clone()).collect();
        assert_eq!(distinct.len(), vertices.len());
    }
}

#[test]
fn non_isomorphic_lattices_are_told_apart() {
    let five = face_lattice_from_poset(&enumerate_coherent_subdivisions(&parabola_polygon(5)).unwrap());
    let quad = face_lattice_from_poset(&enumerate_coherent_subdivisions(&quad()).unwrap());
    assert!(lattice_isomorphic(&five, &quad).is_none());
}
