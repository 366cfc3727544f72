//! Canonical-form guarantees: invariance under relabeling, and completeness
//! (distinct forms really are non-isomorphic) checked against explicit
//! permutation search.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use statseq::canonical_form;
use statseq::graph::Graph;
use statseq::oracle::{assert_canonical_separates, connected_classes_brute};

fn random_graph(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(0.4) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

#[test]
fn invariant_under_100_random_relabelings() {
    let mut rng = ChaCha8Rng::seed_from_u64(1234);
    for n in [3usize, 5, 8, 11] {
        let g = random_graph(&mut rng, n);
        let form = canonical_form(&g).unwrap();
        let mut perm: Vec<usize> = (0..n).collect();
        for _ in 0..100 {
            perm.shuffle(&mut rng);
            assert_eq!(canonical_form(&g.relabeled(&perm)).unwrap(), form);
        }
    }
}

#[test]
fn complete_against_permutation_search_up_to_6() {
    for n in 1..=6 {
        let classes = connected_classes_brute(n);
        assert_canonical_separates(&classes);
    }
}

#[test]
fn no_collisions_across_order_7_stream() {
    // distinct canonical forms among the enumerator's own output
    let classes = connected_classes_brute(7);
    let mut forms: Vec<_> = classes
        .iter()
        .map(|g| canonical_form(g).unwrap())
        .collect();
    let before = forms.len();
    forms.sort();
    forms.dedup();
    assert_eq!(forms.len(), before);
}

#[test]
fn canonical_form_decodes_to_an_isomorphic_graph() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for _ in 0..20 {
        let n = rng.gen_range(2..=8);
        let g = random_graph(&mut rng, n);
        let form = canonical_form(&g).unwrap();
        let decoded = statseq::codec::from_graph6(form.as_graph6()).unwrap();
        assert_eq!(canonical_form(&decoded).unwrap(), form);
        assert_eq!(decoded.edge_count(), g.edge_count());
    }
}
