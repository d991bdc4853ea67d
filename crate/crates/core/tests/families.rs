mod common;

use eccentric::enumeration::{canonical_cert, is_isomorphic};
use eccentric::{FamilySpec, Graph};
use rand::{seq::index::sample, SeedableRng};

#[test]
fn extremal_and_matching_deleted_diameters() {
    for n in 4..=30 {
        for d in 3..n {
            for k in 0..n - d {
                let g = FamilySpec::Extremal { n, d, k }.make().unwrap();
                assert_eq!(g.diameter().unwrap(), d as u32, "G({n},{d},{k})");
                assert_eq!(g.size(), FamilySpec::Extremal { n, d, k }.edge_count().unwrap());
            }
        }
        assert_eq!(FamilySpec::MatchingDeleted { n }.make().unwrap().diameter().unwrap(), 2, "M_{n}");
    }
}

#[test]
fn figure_presentation_of_h2() {
    // K_4 on {1,2,3,4}; a joined to 3 and 4; b joined to 1 and 2
    let (a, b) = (0, 5);
    let mut edges = vec![(a, 3), (a, 4), (1, b), (2, b)];
    for i in 1..=4 {
        for j in i + 1..=4 {
            edges.push((i, j));
        }
    }
    let figure = Graph::new(6, edges).unwrap();
    let h2 = FamilySpec::H2.make().unwrap();
    assert!(is_isomorphic(&figure, &h2).unwrap());
    // the version described with a path: one outside vertex on u_0,u_1,u_2
    // and the other on u_1,u_2,u_3
    let described = FamilySpec::TwoSided { n: 6, i: 1 }.make().unwrap();
    assert!(is_isomorphic(&described, &h2).unwrap());
    assert!(!is_isomorphic(&h2, &FamilySpec::Extremal { n: 6, d: 3, k: 2 }.make().unwrap()).unwrap());
}

#[test]
fn figure_presentation_of_h3() {
    // a -- {1,2,3} -- complete bipartite -- {4,5} -- b, 4-5, triangle 1-2-3
    let (a, b) = (0, 6);
    let mut edges = vec![(a, 1), (a, 2), (a, 3), (4, b), (5, b), (4, 5), (1, 2), (2, 3), (1, 3)];
    for x in 1..=3 {
        for y in 4..=5 {
            edges.push((x, y));
        }
    }
    let figure = Graph::new(7, edges).unwrap();
    let h3 = FamilySpec::H3.make().unwrap();
    assert!(is_isomorphic(&figure, &h3).unwrap());
    assert_eq!(canonical_cert(&h3).unwrap(), canonical_cert(&FamilySpec::TwoSided { n: 7, i: 2 }.make().unwrap()).unwrap());
    for k in 0..4 {
        let g = FamilySpec::Extremal { n: 7, d: 3, k }.make().unwrap();
        assert!(!is_isomorphic(&h3, &g).unwrap());
    }
}

#[test]
fn wheel() {
    let h1 = FamilySpec::H1.make().unwrap();
    assert_eq!(h1.degree(4), 4);
    assert!((0..4).all(|v| h1.degree(v) == 3));
}

#[test]
fn lollipop_identities() {
    for n in 4..=12 {
        for d in 3..n {
            let lollipop = FamilySpec::Lollipop { n, d }.make().unwrap();
            let g0 = FamilySpec::Extremal { n, d, k: 0 }.make().unwrap();
            assert!(is_isomorphic(&lollipop, &g0).unwrap());
            // k = n-d-1 plus the edge u_0 u_2 closes a bigger clique
            if d >= 4 {
                let mut full = FamilySpec::Extremal { n, d, k: n - d - 1 }.make().unwrap();
                full.add_edge(0, 2).unwrap();
                let shorter = FamilySpec::Lollipop { n, d: d - 1 }.make().unwrap();
                assert!(is_isomorphic(&full, &shorter).unwrap(), "n={n} d={d}");
            }
        }
    }
}

#[test]
fn choice_of_attached_clique_vertices_is_irrelevant() {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
    for n in 5..=12 {
        for d in 3..n {
            for k in 0..n - d {
                let reference = FamilySpec::Extremal { n, d, k }.make().unwrap();
                // rebuild with a random k-subset of the clique joined to u_2
                let clique: Vec<usize> = (d + 1..n).collect();
                let chosen = sample(&mut rng, clique.len(), k);
                let mut g = Graph::new(n, (1..=d).map(|i| (i - 1, i))).unwrap();
                for (idx, &a) in clique.iter().enumerate() {
                    for &b in &clique[idx + 1..] {
                        g.add_edge(a, b).unwrap();
                    }
                    g.add_edge(a, 0).unwrap();
                    g.add_edge(a, 1).unwrap();
                }
                for idx in chosen.iter() {
                    g.add_edge(clique[idx], 2).unwrap();
                }
                assert_eq!(canonical_cert(&g).unwrap(), canonical_cert(&reference).unwrap());
                assert_eq!(g.eci().unwrap(), reference.eci().unwrap());
            }
        }
    }
}

#[test]
fn two_sided_reversal_symmetry() {
    for n in 6..=12 {
        for i in 1..=n - 5 {
            let a = FamilySpec::TwoSided { n, i }.make().unwrap();
            let mirror = n - 4 - i;
            let b = if mirror == 0 {
                continue;
            } else {
                FamilySpec::TwoSided { n, i: mirror }.make().unwrap()
            };
            assert_eq!(canonical_cert(&a).unwrap(), canonical_cert(&b).unwrap(), "n={n} i={i}");
        }
    }
}

#[test]
fn two_sided_end_case_is_extremal() {
    // all n-4 clique vertices on u_0,u_1,u_2 is G_{n,3,n-4}
    for n in 5..=12 {
        let mut g = Graph::new(n, [(0, 1), (1, 2), (2, 3)]).unwrap();
        for a in 4..n {
            for b in a + 1..n {
                g.add_edge(a, b).unwrap();
            }
            for p in [0, 1, 2] {
                g.add_edge(a, p).unwrap();
            }
        }
        let extremal = FamilySpec::Extremal { n, d: 3, k: n - 4 }.make().unwrap();
        assert!(is_isomorphic(&g, &extremal).unwrap());
    }
}
