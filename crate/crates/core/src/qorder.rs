//! The graded order `⪯` on `S_∞`: `η ⪯ ζ` when some `u, k` give
//! `u ≤_k ηu ≤_k ζu`.
//!
//! Comparability and rank are computed from the permutations alone; the
//! witness-based definitions are kept alongside for cross-checking.

use serde::{Deserialize, Serialize};

use crate::bruhat::{self, IntervalKind, LabeledInterval};
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// The points moved up and down by a permutation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UpDownProfile {
    pub up: Vec<u32>,
    pub down: Vec<u32>,
}

impl UpDownProfile {
    pub fn of(zeta: &Permutation) -> Self {
        let (up, down) = zeta
            .support()
            .into_iter()
            .partition(|&a| zeta.apply(a) > a);
        UpDownProfile { up, down }
    }

    /// All moved points, increasing.
    pub fn support(&self) -> Vec<u32> {
        let mut s: Vec<u32> = self.up.iter().chain(&self.down).copied().collect();
        s.sort_unstable();
        s
    }
}

/// Relabels the support of `ζ` order-preservingly onto `1..=m`.
pub fn compress(zeta: &Permutation) -> Permutation {
    let support = zeta.support();
    let pos = |v: u32| support.binary_search(&v).expect("support is closed") as u32 + 1;
    let w = support.iter().map(|&a| pos(zeta.apply(a))).collect();
    Permutation::from_window(w).expect("compression is a bijection")
}

pub fn shape_equivalent(zeta: &Permutation, eta: &Permutation) -> bool {
    compress(zeta) == compress(eta)
}

/// `η ⪯ ζ` by the three pointwise conditions.
pub fn q_leq(eta: &Permutation, zeta: &Permutation) -> bool {
    for a in eta.support() {
        let (e, z) = (eta.apply(a), zeta.apply(a));
        if (a < e && e > z) || (a > e && e < z) {
            return false;
        }
    }
    let profile = UpDownProfile::of(zeta);
    for side in [&profile.up, &profile.down] {
        for (i, &a) in side.iter().enumerate() {
            for &b in &side[i + 1..] {
                if zeta.apply(a) < zeta.apply(b) && eta.apply(a) > eta.apply(b) {
                    return false;
                }
            }
        }
    }
    true
}

/// `|ζ|` by the closed counting formula.
pub fn rank(zeta: &Permutation) -> usize {
    let UpDownProfile { up, down } = UpDownProfile::of(zeta);
    let z = |a: u32| zeta.apply(a);
    let crossing = up
        .iter()
        .flat_map(|&a| down.iter().map(move |&b| (z(a), z(b))))
        .filter(|(x, y)| x > y)
        .count();
    let up_down = up
        .iter()
        .flat_map(|&a| down.iter().map(move |&b| (a, b)))
        .filter(|(a, b)| a > b)
        .count();
    let same_side = |s: &[u32]| {
        s.iter()
            .flat_map(|&a| s.iter().map(move |&b| (a, b)))
            .filter(|&(a, b)| a > b && z(a) < z(b))
            .count()
    };
    crossing - (up_down + same_side(&up) + same_side(&down))
}

/// `ℓ(ζu) - ℓ(u)` for the first witness `u ≤_k ζu` in `S_n`, `n ≤ max_n`.
pub fn witness_rank(zeta: &Permutation, max_n: u32) -> Option<usize> {
    let (u, _) = crate::poly::find_witness(zeta, 1, max_n)?;
    Some(zeta.compose(&u).length() - u.length())
}

/// All witnesses `(u, k)` with `u ∈ S_n`, `k < n` and `u ≤_k ζu`.
pub fn witnesses(zeta: &Permutation, n: u32) -> Vec<(Permutation, u32)> {
    if zeta.degree() > n {
        return Vec::new();
    }
    Permutation::all_of_degree(n)
        .into_iter()
        .flat_map(|u| {
            let top = zeta.compose(&u);
            (1..n)
                .filter(|&k| bruhat::leq_k(&u, &top, k))
                .map(|k| (u.clone(), k))
                .collect::<Vec<_>>()
        })
        .collect()
}

/// `η ⪯ ζ` by searching for `u ∈ S_n` and `k` with `u ≤_k ηu ≤_k ζu`.
pub fn q_leq_by_witness(eta: &Permutation, zeta: &Permutation, n: u32) -> bool {
    witnesses(zeta, n).iter().any(|(u, k)| {
        let mid = eta.compose(u);
        bruhat::leq_k(u, &mid, *k) && bruhat::leq_k(&mid, &zeta.compose(u), *k)
    })
}

/// Every permutation of the given points, fixing everything else.
pub fn permutations_of(points: &[u32]) -> Vec<Permutation> {
    let m = points.len() as u32;
    Permutation::all_of_degree(m)
        .into_iter()
        .map(|s| {
            if points.is_empty() {
                Permutation::identity()
            } else {
                s.relabel(points).expect("points are increasing")
            }
        })
        .collect()
}

/// `[e, ζ]_⪯`.
pub fn q_interval(zeta: &Permutation) -> LabeledInterval {
    q_between(&Permutation::identity(), zeta).expect("e ⪯ ζ")
}

/// `[η, ζ]_⪯`. Candidates range over permutations of `supp ζ`; the first
/// two conditions force any `ξ ⪯ ζ` to fix every point `ζ` fixes.
pub fn q_between(eta: &Permutation, zeta: &Permutation) -> Result<LabeledInterval> {
    if !q_leq(eta, zeta) {
        return Err(Error::Incomparable {
            lower: eta.to_string(),
            upper: zeta.to_string(),
            order: IntervalKind::QOrder.to_string(),
        });
    }
    let base = rank(eta);
    let members: Vec<Permutation> = permutations_of(&zeta.support())
        .into_iter()
        .filter(|x| q_leq(eta, x) && q_leq(x, zeta))
        .collect();
    let ranks: Vec<usize> = members.iter().map(rank).collect();
    let mut covers = Vec::new();
    for (i, a) in members.iter().enumerate() {
        for (j, b) in members.iter().enumerate() {
            if ranks[j] == ranks[i] + 1 && q_leq(a, b) {
                covers.push((a.clone(), b.clone()));
            }
        }
    }
    let elements = ranks
        .into_iter()
        .zip(members)
        .map(|(r, p)| (r - base, p))
        .collect();
    Ok(LabeledInterval::from_parts(IntervalKind::QOrder, elements, covers))
}

/// Whether `ζ·η` is a disjoint product: disjoint supports and additive rank.
pub fn is_disjoint_product(zeta: &Permutation, eta: &Permutation) -> bool {
    let (s, t) = (zeta.support(), eta.support());
    s.iter().all(|a| t.binary_search(a).is_err())
        && rank(&zeta.compose(eta)) == rank(zeta) + rank(eta)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tabx::Partition;
    use proptest::prelude::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn v(parts: &[u32], k: u32) -> Permutation {
        Permutation::grassmannian(&Partition::new(parts.to_vec()).unwrap(), k).unwrap()
    }

    #[test]
    fn shape_equivalence() {
        let zeta = p("(2,4)(1,5,3)");
        let eta = p("(3,5)(1,7,4)");
        assert!(shape_equivalent(&zeta, &zeta));
        assert!(shape_equivalent(&zeta, &eta));
        assert!(shape_equivalent(&p("(1,2)"), &p("(1,3)")));
        assert!(!shape_equivalent(&p("(1,2)"), &p("(1,2,3)")));
        assert_eq!(compress(&p("(3,5)")), p("21"));
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&Permutation::identity()), 0);
        assert_eq!(rank(&p("(1,2)")), 1);
        let zeta = p("(2,4)(1,5,3)");
        assert_eq!(rank(&zeta), 5);
        assert_eq!(p("45123").length() - p("21345").length(), 5);
        assert_eq!(witness_rank(&zeta, 7), Some(5));
    }

    #[test]
    fn comparisons() {
        let zeta = p("(2,4)(1,5,3)");
        assert!(q_leq(&Permutation::identity(), &zeta));
        assert_eq!(q_leq(&p("(1,2)"), &zeta), q_leq_by_witness(&p("(1,2)"), &zeta, 6));
        assert!(q_leq(&v(&[1], 2), &v(&[2, 1], 2)));
        assert!(q_leq(&v(&[1], 2), &v(&[1, 1], 2)));
        // Compressing the Grassmannian permutations first loses the relation.
        assert!(!q_leq(&compress(&v(&[1], 2)), &compress(&v(&[1, 1], 2))));
    }

    #[test]
    fn intervals() {
        assert_eq!(q_interval(&Permutation::identity()).len(), 1);
        let zeta = p("(2,4)(1,5,3)");
        let q = q_interval(&zeta);
        let k = bruhat::interval(&p("21345"), &p("45123"), IntervalKind::KBruhat(2)).unwrap();
        assert!(q.is_isomorphic(&k));
        let u = p("21345");
        assert!(q.maps_onto(&k, |x| x.compose(&u)));
        let square = q_interval(&p("2143"));
        assert_eq!(square.rank_sizes(), vec![1, 2, 1]);
        assert_eq!(square.covers().len(), 4);
    }

    #[test]
    fn disjoint_products() {
        assert!(is_disjoint_product(&Permutation::identity(), &p("(1,3)")));
        assert!(is_disjoint_product(&p("(1,2)"), &p("(3,4)")));
        assert!(!is_disjoint_product(&p("(1,2)"), &p("(2,3)")));
    }

    #[test]
    fn support_of_lower_elements() {
        for zeta in Permutation::all_of_degree(4) {
            let s = zeta.support();
            for eta in Permutation::all_of_degree(4) {
                if q_leq(&eta, &zeta) {
                    assert!(eta.support().iter().all(|a| s.contains(a)), "{eta} {zeta}");
                }
            }
        }
    }

    proptest! {
        #[test]
        fn rank_is_shape_invariant(w in proptest::sample::subsequence((1u32..=9).collect::<Vec<_>>(), 5),
                                   seed in any::<u64>()) {
            use rand::{seq::SliceRandom, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let mut window: Vec<u32> = (1..=5).collect();
            window.shuffle(&mut rng);
            let zeta = Permutation::from_window(window).unwrap();
            let image = zeta.relabel(&w).unwrap();
            prop_assert_eq!(rank(&zeta), rank(&image));
            prop_assert!(shape_equivalent(&zeta, &image));
        }
    }
}
