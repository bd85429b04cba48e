//! Expansion in the Schubert basis and the structure constants it defines.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::polynomial::{coeff_json, Coeff, Monomial, SparsePolynomial, TwoAlphabetPolynomial};
use super::schubert::{global_cache, schubert};
use crate::bruhat;
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::tabx::Partition;

/// Finitely supported map `w ↦ c_w` standing for `Σ c_w 𝔖_w`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SchubertExpansion {
    coeffs: BTreeMap<Permutation, Coeff>,
}

impl SchubertExpansion {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, w: Permutation, c: Coeff) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.entry(w) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Coefficient of `𝔖_w` (zero when absent).
    pub fn get(&self, w: &Permutation) -> Coeff {
        self.coeffs.get(w).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Permutation, &Coeff)> {
        self.coeffs.iter()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn support(&self) -> Vec<Permutation> {
        self.coeffs.keys().cloned().collect()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.values().all(|c| !c.is_negative())
    }

    /// `Σ c_w 𝔖_w` as a polynomial.
    pub fn recombine(&self) -> SparsePolynomial {
        self.coeffs
            .iter()
            .fold(SparsePolynomial::zero(), |acc, (w, c)| {
                acc.add(&schubert(w).scale(c))
            })
    }
}

impl FromIterator<(Permutation, Coeff)> for SchubertExpansion {
    fn from_iter<I: IntoIterator<Item = (Permutation, Coeff)>>(iter: I) -> Self {
        let mut e = SchubertExpansion::new();
        for (w, c) in iter {
            e.add(w, c);
        }
        e
    }
}

impl fmt::Display for SchubertExpansion {
    /// `c*S[w]` terms joined by ` + `; `0` when empty.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .map(|(w, c)| {
                if c.is_one() {
                    format!("S[{w}]")
                } else {
                    format!("{c}*S[{w}]")
                }
            })
            .collect();
        f.write_str(&terms.join(" + "))
    }
}

#[derive(Serialize, Deserialize)]
struct ExpansionRecord {
    #[serde(with = "coeff_json")]
    coeff: Coeff,
    perm: Permutation,
}

impl Serialize for SchubertExpansion {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let records: Vec<ExpansionRecord> = self
            .coeffs
            .iter()
            .map(|(w, c)| ExpansionRecord {
                coeff: c.clone(),
                perm: w.clone(),
            })
            .collect();
        records.serialize(s)
    }
}

impl<'de> Deserialize<'de> for SchubertExpansion {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let records = Vec::<ExpansionRecord>::deserialize(d)?;
        Ok(records.into_iter().map(|r| (r.perm, r.coeff)).collect())
    }
}

/// Writes `f` in the Schubert basis.
///
/// Repeatedly takes the colex-largest monomial `x^a` of the remainder, reads
/// `a` as the Lehmer code of some `w` and subtracts the matching multiple of
/// `𝔖_w`, whose colex-leading term is `x^{code(w)}` with coefficient one.
pub fn expand_in_schubert(f: &SparsePolynomial) -> Result<SchubertExpansion> {
    let mut remainder: BTreeMap<Monomial, Coeff> = f.clone().into_terms();
    let mut seen = remainder.len();
    let mut steps = 0usize;
    let mut out = SchubertExpansion::new();
    while let Some((lead, c)) = remainder.pop_last() {
        steps += 1;
        if steps > seen {
            return Err(Error::Internal(format!(
                "Schubert expansion did not terminate after {steps} steps"
            )));
        }
        let w = Permutation::from_code(lead.exponents());
        let s = schubert(&w);
        match s.leading_term() {
            Some((m, one)) if *m == lead && one.is_one() => {}
            _ => {
                return Err(Error::Internal(format!(
                    "leading monomial of S[{w}] is not x^code"
                )))
            }
        }
        for (m, a) in s.terms().rev().skip(1) {
            let delta = -(a * &c);
            match remainder.entry(m.clone()) {
                std::collections::btree_map::Entry::Vacant(e) => {
                    seen += 1;
                    e.insert(delta);
                }
                std::collections::btree_map::Entry::Occupied(mut e) => {
                    *e.get_mut() += delta;
                    if e.get().is_zero() {
                        e.remove();
                    }
                }
            }
        }
        out.add(w, c);
    }
    Ok(out)
}

/// `c^w_{u,v}` for all `w`: the Schubert expansion of `𝔖_u · 𝔖_v`.
pub fn structure_constants(u: &Permutation, v: &Permutation) -> Result<SchubertExpansion> {
    Ok((*global_cache().product(u, v)?).clone())
}

/// A single structure constant `c^w_{u,v}`.
pub fn structure_constant(u: &Permutation, v: &Permutation, w: &Permutation) -> Result<Coeff> {
    if w.length() != u.length() + v.length() {
        return Ok(Coeff::zero());
    }
    Ok(global_cache().product(u, v)?.get(w))
}

/// First pair `(u, k)` with `u ≤_k ζu` and `k ≥ min_k`, searching `S_n` for
/// increasing `n` up to `max_n`, `u` lexicographically, then `k`.
pub fn find_witness(zeta: &Permutation, min_k: u32, max_n: u32) -> Option<(Permutation, u32)> {
    let start = zeta.degree().max(2);
    (start..=max_n).find_map(|n| {
        Permutation::iter_degree(n).find_map(|u| {
            let top = zeta.compose(&u);
            (min_k.max(1)..n)
                .find(|&k| bruhat::leq_k(&u, &top, k))
                .map(|k| (u, k))
        })
    })
}

/// First `u` in `S_n`, `n ≤ max_n`, with `u ≤_k ζu` for this exact `k`.
pub fn find_witness_exact(zeta: &Permutation, k: u32, max_n: u32) -> Option<Permutation> {
    let start = zeta.degree().max(k + 1);
    (start..=max_n).find_map(|n| {
        Permutation::iter_degree(n).find(|u| bruhat::leq_k(u, &zeta.compose(u), k))
    })
}

/// Raises the cut of a witness: if `u ≤_k ζu` then prefixing `j` values
/// larger than anything `u` or `ζ` moves gives a witness for `k + j`.
pub fn shift_witness(zeta: &Permutation, u: &Permutation, j: u32) -> Permutation {
    let m = u.degree().max(zeta.degree());
    let mut w: Vec<u32> = (m + 1..=m + j).collect();
    w.extend(u.padded(m as usize));
    Permutation::from_window(w).expect("shifted window is a permutation")
}

/// The skew coefficient `c^ζ_λ = c^{ζu}_{u, v(λ,k)}` for a witness
/// `u ≤_k ζu` with `k ≥ ℓ(λ)`.
///
/// The witness is the first one found in `S_n` for `n ≤ deg ζ + 2`, shifted
/// when its cut is below `ℓ(λ)`. Returns zero when `|λ|` differs from the
/// rank of `ζ`.
pub fn skew_coefficient(zeta: &Permutation, lambda: &Partition) -> Result<Coeff> {
    let (u, k) = find_witness(zeta, 1, zeta.degree() + 2)
        .ok_or_else(|| Error::Internal(format!("no witness found for {zeta}")))?;
    let need = lambda.len() as u32;
    if need <= k {
        skew_coefficient_with(zeta, lambda, &u, k)
    } else {
        skew_coefficient_with(zeta, lambda, &shift_witness(zeta, &u, need - k), need)
    }
}

/// `c^{ζu}_{u, v(λ,k)}` for a caller-supplied witness.
pub fn skew_coefficient_with(
    zeta: &Permutation,
    lambda: &Partition,
    u: &Permutation,
    k: u32,
) -> Result<Coeff> {
    let top = zeta.compose(u);
    if !bruhat::leq_k(u, &top, k) {
        return Err(Error::Incomparable {
            lower: u.to_string(),
            upper: top.to_string(),
            order: format!("{k}-Bruhat order"),
        });
    }
    if lambda.size() as usize + u.length() != top.length() || lambda.len() > k as usize {
        return Ok(Coeff::zero());
    }
    let v = Permutation::grassmannian(lambda, k)?;
    structure_constant(u, &v, &top)
}

/// Coefficients `d_{u,v}` with `g = Σ d_{u,v} 𝔖_u(y) 𝔖_v(z)`.
pub type TwoAlphabetExpansion = BTreeMap<(Permutation, Permutation), Coeff>;

/// Expands a two-alphabet polynomial first in the `y` Schubert basis with
/// `z`-polynomial coefficients, then each coefficient in the `z` basis.
pub fn expand_two_alphabet(g: &TwoAlphabetPolynomial) -> Result<TwoAlphabetExpansion> {
    let mut by_z: BTreeMap<Monomial, SparsePolynomial> = BTreeMap::new();
    for (m, c) in g.terms() {
        by_z.entry(m.z.clone())
            .or_default()
            .add_term(m.y.clone(), c.clone());
    }
    let mut z_parts: BTreeMap<Permutation, SparsePolynomial> = BTreeMap::new();
    for (zm, ypoly) in by_z {
        for (u, c) in expand_in_schubert(&ypoly)?.iter() {
            z_parts
                .entry(u.clone())
                .or_default()
                .add_term(zm.clone(), c.clone());
        }
    }
    let mut out = TwoAlphabetExpansion::new();
    for (u, zpoly) in z_parts {
        for (v, c) in expand_in_schubert(&zpoly)?.iter() {
            out.insert((u.clone(), v.clone()), c.clone());
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::polynomial::BiMonomial;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn poly(s: &str) -> SparsePolynomial {
        s.parse().unwrap()
    }

    fn part(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn single(w: &str) -> SchubertExpansion {
        [(p(w), Coeff::one())].into_iter().collect()
    }

    #[test]
    fn expansion_examples() {
        for w in Permutation::all_of_degree(4) {
            assert_eq!(expand_in_schubert(&schubert(&w)).unwrap(), single(&w.to_string()));
        }
        assert_eq!(expand_in_schubert(&poly("x1*x1")).unwrap(), single("312"));
        assert_eq!(expand_in_schubert(&SparsePolynomial::zero()).unwrap(), SchubertExpansion::new());
        // x2 = S[132] - S[213]
        let e = expand_in_schubert(&poly("x2")).unwrap();
        assert_eq!(e.get(&p("132")), Coeff::one());
        assert_eq!(e.get(&p("213")), -Coeff::one());
    }

    #[test]
    fn schur_product_restricted_to_grassmannians() {
        let product = crate::poly::schur(&part(&[1]), 2)
            .unwrap()
            .mul(&crate::poly::schur(&part(&[1, 1]), 2).unwrap());
        let e = expand_in_schubert(&product).unwrap();
        assert_eq!(e.get(&Permutation::grassmannian(&part(&[2, 1]), 2).unwrap()), Coeff::one());
        assert_eq!(e.get(&Permutation::grassmannian(&part(&[3]), 2).unwrap()), Coeff::zero());
        assert!(e.support().iter().all(|w| w.descents() == vec![2]));
    }

    #[test]
    fn structure_constant_examples() {
        let u = p("312645");
        assert_eq!(structure_constants(&u, &Permutation::identity()).unwrap(), single("312645"));
        for (lambda, expected) in [
            (part(&[4]), 1),
            (part(&[3, 1]), 1),
            (part(&[2, 2]), 1),
        ] {
            let v = Permutation::grassmannian(&lambda, 2).unwrap();
            assert_eq!(structure_constant(&u, &v, &p("561234")).unwrap(), Coeff::from(expected));
        }
        assert_eq!(structure_constants(&p("213"), &p("213")).unwrap(), single("312"));
        // |λ| = 3 cannot reach a length gap of 4.
        assert!(structure_constant(&u, &p("24135"), &p("561234")).unwrap().is_zero());
    }

    #[test]
    fn round_trip_random_combinations() {
        let basis = Permutation::all_of_degree(5);
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let combo: SchubertExpansion = (0..6)
                .map(|_| {
                    let w = basis[rng.gen_range(0..basis.len())].clone();
                    (w, Coeff::from(rng.gen_range(-9i64..=9)))
                })
                .collect();
            assert_eq!(expand_in_schubert(&combo.recombine()).unwrap(), combo);
        }
    }

    #[test]
    fn structure_constant_symmetries_in_s4() {
        let s4 = Permutation::all_of_degree(4);
        let w0 = p("4321");
        for u in &s4 {
            for v in &s4 {
                let uv = structure_constants(u, v).unwrap();
                let vu = structure_constants(v, u).unwrap();
                assert_eq!(uv, vu);
                assert!(uv.is_nonnegative());
                for w in &s4 {
                    let lhs = uv.get(w);
                    let rhs = structure_constant(v, &w0.compose(w), &w0.compose(u)).unwrap();
                    assert_eq!(lhs, rhs, "u={u} v={v} w={w}");
                }
            }
        }
    }

    #[test]
    fn skew_coefficient_examples() {
        assert_eq!(skew_coefficient(&Permutation::identity(), &Partition::empty()).unwrap(), Coeff::one());
        let zeta = p("(1243)");
        assert_eq!(skew_coefficient(&zeta, &part(&[2, 1])).unwrap(), Coeff::one());
        assert!(skew_coefficient(&zeta, &part(&[3])).unwrap().is_zero());
        assert!(skew_coefficient(&zeta, &part(&[1, 1, 1])).unwrap().is_zero());
        assert!(skew_coefficient(&zeta, &part(&[2])).unwrap().is_zero());
        let zeta = p("(2,4)(1,5,3)");
        for lambda in Partition::all_of_size(5) {
            let direct = skew_coefficient_with(&zeta, &lambda, &p("21345"), 2).unwrap();
            if lambda.len() <= 2 {
                assert_eq!(skew_coefficient(&zeta, &lambda).unwrap(), direct, "{lambda}");
            }
        }
        assert!(skew_coefficient_with(&zeta, &part(&[5]), &p("12345"), 2).is_err());
    }

    #[test]
    fn skew_coefficient_is_witness_independent() {
        for zeta in Permutation::all_of_degree(4) {
            let rank = crate::qorder::rank(&zeta);
            for lambda in Partition::all_of_size(rank as u32) {
                let mut values = Vec::new();
                for u in Permutation::all_of_degree(5) {
                    let top = zeta.compose(&u);
                    for k in (lambda.len().max(1) as u32)..5 {
                        if bruhat::leq_k(&u, &top, k) {
                            values.push(skew_coefficient_with(&zeta, &lambda, &u, k).unwrap());
                        }
                    }
                }
                values.dedup();
                assert!(values.len() <= 1, "{zeta} {lambda}: {values:?}");
            }
        }
    }

    #[test]
    fn two_alphabet_expansion() {
        let one = TwoAlphabetPolynomial::one();
        let e = expand_two_alphabet(&one).unwrap();
        assert_eq!(e.len(), 1);
        assert_eq!(e[&(Permutation::identity(), Permutation::identity())], Coeff::one());
        let y1z1 = TwoAlphabetPolynomial::term(
            BiMonomial {
                y: Monomial::variable(1),
                z: Monomial::variable(1),
            },
            1,
        );
        let e = expand_two_alphabet(&y1z1).unwrap();
        assert_eq!(e.len(), 1);
        assert_eq!(e[&(p("21"), p("21"))], Coeff::one());
    }

    #[test]
    fn expansion_json() {
        let e = structure_constants(&p("132"), &p("132")).unwrap();
        let json = serde_json::to_string(&e).unwrap();
        assert_eq!(serde_json::from_str::<SchubertExpansion>(&json).unwrap(), e);
        assert_eq!(e.to_string(), "S[1423] + S[231]");
    }
}
