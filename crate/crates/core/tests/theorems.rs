use schubert_core::bruhat::{self, IntervalKind};
use schubert_core::poly::{self, Coeff, IndexTail};
use schubert_core::verify;
use schubert_core::{qorder, Partition, Permutation, VarSplit};

fn p(s: &str) -> Permutation {
    s.parse().unwrap()
}

fn part(v: &[u32]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

#[test]
fn pieri_chains_match_products_on_s4() {
    for v in Permutation::all_of_degree(4) {
        for q in 1..=4 {
            assert_eq!(
                bruhat::pieri_targets(&v, q),
                bruhat::pieri_targets_by_product(&v, q).unwrap(),
                "v={v} p={q}"
            );
        }
    }
}

#[test]
fn chain_counts_agree_on_s4() {
    let e = Permutation::identity();
    for u in Permutation::all_of_degree(4) {
        for w in Permutation::all_of_degree(4) {
            for colours in [vec![1], vec![2], vec![1, 3], vec![1, 2, 3]] {
                let by_chains = bruhat::count_i_chains(&u, &w, &colours, 4);
                let by_monk = bruhat::count_i_chains_monk(&u, &w, &colours).unwrap();
                assert_eq!(by_chains, by_monk, "u={u} w={w} I={colours:?}");
            }
        }
    }
    assert_eq!(bruhat::count_i_chains(&e, &p("2413"), &[2], 4), Coeff::from(2));
}

#[test]
fn chain_identity_small_cases() {
    let r = verify::check_chain_identity(2, &[1]);
    assert!(r.passed());
    assert_eq!(r.instances, 3);
    assert!(verify::check_chain_identity(4, &[2]).passed());
    assert!(verify::check_chain_identity(4, &[1, 3]).passed());
}

#[test]
fn minimal_cosets_match_nonvanishing() {
    assert!(verify::check_minimal_cosets(5).passed());
}

#[test]
fn k_bruhat_conditions_on_small_groups() {
    for n in 3..=4 {
        assert!(verify::check_k_bruhat_equiv(n).passed());
    }
}

#[test]
fn skew_invariance_on_s3() {
    let r = verify::check_skew_invariance(3);
    assert!(r.passed(), "{:?}", r.failures.first());
}

#[test]
fn schensted_counting_grassmannian_cases() {
    for k in 1..=3u32 {
        for nu in Partition::all_in_box(k, 3) {
            for mu in Partition::all_in_box(k, 3).into_iter().filter(|m| nu.contains(m)) {
                let u = Permutation::grassmannian(&mu, k).unwrap();
                let w = Permutation::grassmannian(&nu, k).unwrap();
                let r = verify::check_schensted_counting(&u, &w, k);
                assert!(r.passed(), "μ={mu} ν={nu} k={k}: {:?}", r.failures);
                assert!(!r.notes[0].starts_with("hypothesis not established"));
            }
        }
    }
}

#[test]
fn schensted_counting_beyond_hypothesis() {
    let zeta = p("(1,4,3,6,5,2)");
    assert!(verify::skew_shape_quotient(&zeta).is_none());
    let (u, k) = poly::find_witness(&zeta, 1, 8).unwrap();
    let r = verify::check_schensted_counting(&u, &zeta.compose(&u), k);
    assert!(r.passed());
    assert!(r.notes.iter().any(|n| n.starts_with("bonus pass")), "{:#?}", r.notes);
}

#[test]
fn grassmannian_restriction_uses_the_permutations_themselves() {
    // v((1),2) = 132 and v((1,1),2) = 231 are comparable, while their
    // compressed forms 21 and 231 are not.
    let small = Permutation::grassmannian(&part(&[1]), 2).unwrap();
    let big = Permutation::grassmannian(&part(&[1, 1]), 2).unwrap();
    assert!(qorder::q_leq(&small, &big));
    assert!(!qorder::q_leq(&qorder::compress(&small), &qorder::compress(&big)));
}

#[test]
fn order_interval_matches_k_bruhat_interval() {
    let zeta = p("(2,4)(1,5,3)");
    let q = qorder::q_interval(&zeta);
    let k = bruhat::interval(&p("21345"), &p("45123"), IntervalKind::KBruhat(2)).unwrap();
    let eta_side = bruhat::interval(&p("3215764"), &p("5273461"), IntervalKind::KBruhat(3)).unwrap();
    assert!(q.is_isomorphic(&k));
    assert!(k.is_isomorphic(&eta_side));
    assert_eq!(q.chain_count(), k.chain_count());
}

#[test]
fn disjoint_product_interval_is_a_square() {
    let q = qorder::q_interval(&p("(1,2)(3,4)"));
    assert_eq!(q.rank_sizes(), vec![1, 2, 1]);
    for (zeta, eta) in verify::sample_disjoint_pairs(3, 3, 5, 1) {
        assert!(qorder::is_disjoint_product(&zeta, &eta));
        assert!(verify::check_disjointness(&zeta, &eta).passed());
    }
}

#[test]
fn psi_set_with_tail_is_exact() {
    let odd = VarSplit::new(vec![1, 3, 5, 7], IndexTail::AllAbove(7)).unwrap();
    let r = verify::check_psi_set(4, &odd);
    assert!(r.passed(), "{:?}", r.failures);
    assert_eq!(r.instances, 24);
    let r = verify::check_psi_set(4, &VarSplit::prefix(4));
    assert!(r.passed());
    assert!(r.notes.is_empty());
}

#[test]
fn identity_substitution_is_trivial() {
    let g = poly::psi_set(&poly::schubert(&Permutation::identity()), &VarSplit::prefix(4)).unwrap();
    let e = poly::expand_two_alphabet(&g).unwrap();
    assert_eq!(e.len(), 1);
    assert_eq!(e[&(Permutation::identity(), Permutation::identity())], Coeff::from(1));
}

#[test]
fn deletion_theorem_example_instance() {
    let (u, w) = (p("2134"), p("2314"));
    assert_eq!(u.apply(4), w.apply(4));
    assert!(verify::check_deletion_theorem(4).passed());
}

#[test]
fn greedy_and_zeta_forms_agree_on_s4() {
    assert!(verify::check_greedy_chains(4).passed());
}
