//! Schubert polynomials by divided differences, with a shared memo cache.

use std::collections::HashMap;
use std::sync::{Arc, LazyLock, RwLock};

use num_traits::One;

use super::expand::{expand_in_schubert, SchubertExpansion};
use super::polynomial::{Coeff, Monomial, SparsePolynomial};
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::tabx::{self, Partition};

/// `∂_i f = (f - s_i f) / (x_i - x_{i+1})`, computed monomial by monomial.
pub fn divided_difference(f: &SparsePolynomial, i: u32) -> SparsePolynomial {
    let (ii, jj) = (i as usize - 1, i as usize);
    let mut out = SparsePolynomial::zero();
    for (m, c) in f.terms() {
        let mut e = m.exponents().to_vec();
        if e.len() <= jj {
            e.resize(jj + 1, 0);
        }
        let (p, q) = (e[ii], e[jj]);
        if p == q {
            continue;
        }
        // x_i^p x_{i+1}^q - x_i^q x_{i+1}^p over x_i - x_{i+1}: a geometric
        // sum of x_i^{hi-1-t} x_{i+1}^{lo+t}, negated when p < q.
        let (lo, hi, sign) = if p > q { (q, p, c.clone()) } else { (p, q, -c) };
        for t in 0..hi - lo {
            e[ii] = hi - 1 - t;
            e[jj] = lo + t;
            out.add_term(Monomial::new(e.clone()), sign.clone());
        }
    }
    out
}

/// `x1^{n-1} x2^{n-2} ... x_{n-1}`, the Schubert polynomial of the longest
/// element of `S_n`.
pub fn staircase(n: u32) -> SparsePolynomial {
    let e = (1..n).map(|i| n - i).collect();
    SparsePolynomial::term(Monomial::new(e), 1)
}

fn longest_element(n: u32) -> Permutation {
    Permutation::from_window_unchecked((1..=n).rev().collect())
}

/// Memo tables for Schubert polynomials and Schubert-basis products.
///
/// Reads run concurrently; inserts take the write lock briefly. Values are
/// pure functions of their keys, so racing computations agree.
#[derive(Default)]
pub struct SchubertCache {
    polys: RwLock<HashMap<Permutation, Arc<SparsePolynomial>>>,
    products: RwLock<HashMap<(Permutation, Permutation), Arc<SchubertExpansion>>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CacheStats {
    pub polynomials: usize,
    pub products: usize,
}

static GLOBAL: LazyLock<SchubertCache> = LazyLock::new(SchubertCache::default);

/// Process-wide cache used by the free functions of this module.
pub fn global_cache() -> &'static SchubertCache {
    &GLOBAL
}

impl SchubertCache {
    fn lookup(&self, w: &Permutation) -> Option<Arc<SparsePolynomial>> {
        self.polys.read().unwrap().get(w).cloned()
    }

    pub fn insert_polynomial(&self, w: Permutation, p: SparsePolynomial) {
        self.polys.write().unwrap().entry(w).or_insert_with(|| Arc::new(p));
    }

    pub fn insert_product(&self, u: Permutation, v: Permutation, e: SchubertExpansion) {
        self.products
            .write()
            .unwrap()
            .entry((u, v))
            .or_insert_with(|| Arc::new(e));
    }

    /// `𝔖_w`. Climbs by ascents to the longest element of `S_n`
    /// (`n` = degree of `w`) or to the nearest cached permutation, then
    /// descends with divided differences, caching every step.
    pub fn schubert(&self, w: &Permutation) -> Arc<SparsePolynomial> {
        if let Some(p) = self.lookup(w) {
            return p;
        }
        if w.is_identity() {
            let one = Arc::new(SparsePolynomial::one());
            self.polys
                .write()
                .unwrap()
                .insert(w.clone(), one.clone());
            return one;
        }
        let n = w.degree();
        let top = longest_element(n);
        let mut path = Vec::new();
        let mut current = w.clone();
        let mut poly = loop {
            if let Some(p) = self.lookup(&current) {
                break p;
            }
            if current == top {
                break Arc::new(staircase(n));
            }
            let i = (1..n)
                .find(|&i| current.apply(i) < current.apply(i + 1))
                .expect("only the longest element has no ascent");
            let up = current.swap_positions(i, i + 1);
            path.push((std::mem::replace(&mut current, up), i));
        };
        let mut fresh = vec![(current, poly.clone())];
        for (perm, i) in path.into_iter().rev() {
            poly = Arc::new(divided_difference(&poly, i));
            fresh.push((perm, poly.clone()));
        }
        let mut table = self.polys.write().unwrap();
        for (perm, p) in fresh {
            table.entry(perm).or_insert(p);
        }
        poly
    }

    /// Schubert expansion of `𝔖_u · 𝔖_v`.
    pub fn product(&self, u: &Permutation, v: &Permutation) -> Result<Arc<SchubertExpansion>> {
        let key = (u.clone(), v.clone());
        if let Some(e) = self.products.read().unwrap().get(&key) {
            return Ok(e.clone());
        }
        let product = self.schubert(u).mul(&self.schubert(v));
        let expansion = expand_in_schubert(&product)?;
        let degree = u.length() + v.length();
        if let Some((w, _)) = expansion.iter().find(|(w, _)| w.length() != degree) {
            return Err(Error::Internal(format!(
                "{w} appears in the product of {u} and {v} with the wrong length"
            )));
        }
        let expansion = Arc::new(expansion);
        self.products
            .write()
            .unwrap()
            .entry(key)
            .or_insert(expansion.clone());
        Ok(expansion)
    }

    pub fn polynomial_entries(&self) -> Vec<(Permutation, Arc<SparsePolynomial>)> {
        let mut v: Vec<_> = self
            .polys
            .read()
            .unwrap()
            .iter()
            .map(|(k, p)| (k.clone(), p.clone()))
            .collect();
        v.sort_by(|a, b| a.0.cmp(&b.0));
        v
    }

    pub fn product_entries(&self) -> Vec<((Permutation, Permutation), Arc<SchubertExpansion>)> {
        let mut v: Vec<_> = self
            .products
            .read()
            .unwrap()
            .iter()
            .map(|(k, e)| (k.clone(), e.clone()))
            .collect();
        v.sort_by(|a, b| a.0.cmp(&b.0));
        v
    }

    pub fn stats(&self) -> CacheStats {
        CacheStats {
            polynomials: self.polys.read().unwrap().len(),
            products: self.products.read().unwrap().len(),
        }
    }

    pub fn clear(&self) {
        self.polys.write().unwrap().clear();
        self.products.write().unwrap().clear();
    }
}

/// `𝔖_w`, memoised in the global cache.
pub fn schubert(w: &Permutation) -> Arc<SparsePolynomial> {
    global_cache().schubert(w)
}

/// `𝔖_w` computed from scratch in `S_n` (`n` at least the degree of `w`),
/// bypassing every cache. Used to test stability in `n`.
pub fn schubert_in(w: &Permutation, n: u32) -> SparsePolynomial {
    let n = n.max(w.degree()).max(1);
    let mut path = Vec::new();
    let mut current = w.clone();
    let top = longest_element(n);
    while current != top {
        let i = (1..n)
            .find(|&i| current.apply(i) < current.apply(i + 1))
            .expect("only the longest element has no ascent");
        path.push(i);
        current = current.swap_positions(i, i + 1);
    }
    path.into_iter()
        .rev()
        .fold(staircase(n), |p, i| divided_difference(&p, i))
}

/// The Schur polynomial `S_λ(x1..xk)`, as the Schubert polynomial of the
/// Grassmannian permutation `v(λ,k)`.
pub fn schur(lambda: &Partition, k: u32) -> Result<SparsePolynomial> {
    let v = Permutation::grassmannian(lambda, k)?;
    Ok((*schubert(&v)).clone())
}

/// `S_λ(x1..xk)` as the generating function of semistandard tableaux with
/// entries at most `k`.
pub fn schur_by_tableaux(lambda: &Partition, k: u32) -> Result<SparsePolynomial> {
    if lambda.len() > k as usize {
        return Err(Error::TooManyParts {
            parts: lambda.parts().to_vec(),
            k,
        });
    }
    Ok(SparsePolynomial::from_terms(
        tabx::semistandard_tableaux(lambda, k)
            .into_iter()
            .map(|t| (Monomial::new(t.content()), Coeff::one())),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn poly(s: &str) -> SparsePolynomial {
        s.parse().unwrap()
    }

    fn part(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn small_schubert_polynomials() {
        assert_eq!(*schubert(&Permutation::identity()), SparsePolynomial::one());
        assert_eq!(*schubert(&p("213")), poly("x1"));
        assert_eq!(*schubert(&p("132")), poly("x1 + x2"));
        assert_eq!(*schubert(&p("231")), poly("x1*x2"));
        assert_eq!(*schubert(&p("312")), poly("x1^2"));
        assert_eq!(*schubert(&p("321")), poly("x1^2*x2"));
        assert_eq!(*schubert(&p("1432")), poly("x1^2*x2 + x1^2*x3 + x1*x2^2 + x1*x2*x3 + x2^2*x3"));
    }

    #[test]
    fn schubert_413652_matches_listed_monomials() {
        let expected = poly(
            "x1^4*x2*x4*x5 + x1^3*x2^2*x4*x5 + x1^3*x2*x4^2*x5 + \
             x1^4*x2*x3*x4 + x1^4*x2*x3*x5 + x1^4*x3*x4*x5 + \
             x1^3*x2^2*x3*x4 + x1^3*x2^2*x3*x5 + x1^3*x2*x3^2*x4 + \
             x1^3*x2*x3^2*x5 + x1^3*x2*x3*x4^2 + \
             x1^3*x3^2*x4*x5 + x1^3*x3*x4^2*x5 + 2*x1^3*x2*x3*x4*x5",
        );
        let s = schubert(&p("413652"));
        assert_eq!(*s, expected);
        assert_eq!(s.len(), 14);
        assert_eq!(s.homogeneous_degree(), Some(7));
        assert_eq!(*schubert(&p("52341")), poly("x1^4*x2*x3*x4"));
        assert_eq!(*schubert(&p("42531")), poly("x1^3*x2^2*x3*x4 + x1^3*x2*x3^2*x4"));
    }

    #[test]
    fn stable_in_ambient_size() {
        for w in Permutation::all_of_degree(4) {
            let reference = schubert_in(&w, 4);
            for n in 5..=6 {
                assert_eq!(schubert_in(&w, n), reference, "{w} in S_{n}");
            }
            assert_eq!(*schubert(&w), reference);
        }
    }

    #[test]
    fn leading_monomial_is_the_code() {
        for w in Permutation::all_of_degree(5) {
            let s = schubert(&w);
            let (m, c) = s.leading_term().unwrap();
            assert_eq!(m.exponents(), w.code().as_slice(), "{w}");
            assert!(c.is_one());
            assert_eq!(s.homogeneous_degree(), Some(w.length() as u32));
        }
    }

    #[test]
    fn monk_formula() {
        for u in Permutation::all_of_degree(5) {
            for k in 1..=4 {
                let lhs = schubert(&u).mul(&SparsePolynomial::variable_sum(k));
                let mut rhs = SparsePolynomial::zero();
                for a in 1..=k {
                    for b in k + 1..=6 {
                        let t = u.swap_positions(a, b);
                        if t.length() == u.length() + 1 {
                            rhs = rhs.add(&schubert(&t));
                        }
                    }
                }
                assert_eq!(lhs, rhs, "u = {u}, k = {k}");
            }
        }
    }

    #[test]
    fn schur_examples() {
        assert_eq!(schur(&Partition::empty(), 3).unwrap(), SparsePolynomial::one());
        assert_eq!(schur(&part(&[1]), 2).unwrap(), poly("x1 + x2"));
        assert_eq!(schur(&part(&[2, 1]), 2).unwrap(), poly("x1^2*x2 + x1*x2^2"));
        assert!(schur(&part(&[1, 1, 1]), 2).is_err());
    }

    #[test]
    fn schur_matches_tableau_sum() {
        for k in 1..=3 {
            for lambda in Partition::all_in_box(3, 3).into_iter().filter(|l| l.len() <= k as usize) {
                assert_eq!(
                    schur(&lambda, k).unwrap(),
                    schur_by_tableaux(&lambda, k).unwrap(),
                    "{lambda}, k = {k}"
                );
            }
        }
    }

    #[test]
    fn cache_bookkeeping() {
        let cache = SchubertCache::default();
        let w = p("2413");
        let a = cache.schubert(&w);
        assert!(cache.stats().polynomials >= 2);
        assert_eq!(*a, schubert_in(&w, 4));
        cache.clear();
        assert_eq!(cache.stats().polynomials, 0);
        cache.insert_polynomial(w.clone(), (*a).clone());
        assert_eq!(*cache.schubert(&w), *a);
    }
}
