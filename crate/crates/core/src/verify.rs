//! Executable checkers. Each computes both sides of an identity
//! independently (chains on one side, polynomials on the other, wherever
//! possible) and returns a [`Report`] listing every failing instance.
//!
//! Instances run in parallel; results are gathered in instance order, so a
//! report is a pure function of its parameters.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::bruhat::{self, IntervalKind, LabeledInterval};
use crate::perm::Permutation;
use crate::poly::{
    self, BiMonomial, Coeff, Monomial, SchubertExpansion, TwoAlphabetPolynomial, VarSplit,
};
use crate::qorder;
use crate::tabx::{self, Partition, Tableau};

/// Outcome of one checker run.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub checker: String,
    pub params: serde_json::Value,
    pub instances: u64,
    pub failures: Vec<Failure>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    /// Wall-clock seconds; left empty unless the caller records it, so that
    /// reports stay byte-identical across runs.
    pub elapsed: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub witness: String,
    pub reason: String,
}

impl Failure {
    fn new(witness: impl Into<String>, reason: impl Into<String>) -> Self {
        Failure {
            witness: witness.into(),
            reason: reason.into(),
        }
    }
}

impl Report {
    fn new(checker: &str, params: serde_json::Value) -> Self {
        Report {
            checker: checker.to_string(),
            params,
            instances: 0,
            failures: Vec::new(),
            notes: Vec::new(),
            elapsed: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Runs `check` on every item in parallel and records the outcomes in
    /// item order.
    fn run<T: Sync>(&mut self, items: &[T], check: impl Fn(&T) -> Vec<Failure> + Sync + Send) {
        let found: Vec<Vec<Failure>> = items.par_iter().map(check).collect();
        self.instances += items.len() as u64;
        self.failures.extend(found.into_iter().flatten());
    }

    fn check(&mut self, ok: bool, witness: impl Into<String>, reason: impl Into<String>) {
        self.instances += 1;
        if !ok {
            self.failures.push(Failure::new(witness, reason));
        }
    }

    /// Folds another report's instances and failures into this one.
    pub fn absorb(&mut self, other: Report) {
        self.instances += other.instances;
        self.failures.extend(other.failures);
        self.notes.extend(other.notes);
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    /// One-line summary.
    pub fn summary(&self) -> String {
        format!(
            "{}: {} instances, {} failures",
            self.checker,
            self.instances,
            self.failures.len()
        )
    }
}

fn grass(lambda: &Partition, k: u32) -> Permutation {
    Permutation::grassmannian(lambda, k).expect("caller bounds the number of parts")
}

fn partitions_with_at_most(size: u32, parts: u32) -> Vec<Partition> {
    Partition::all_of_size(size)
        .into_iter()
        .filter(|l| l.len() <= parts as usize)
        .collect()
}

/// `f^w_u(I) = Σ_v c^w_{uv} f^v_e(I)` for every `u ≤ w` in `S_n`, with the
/// left side computed both by weighted chain counting and by powers of the
/// Monk operator.
pub fn check_chain_identity(n: u32, colours: &[u32]) -> Report {
    let mut report = Report::new("chain_identity", json!({ "n": n, "colours": colours }));
    let perms = Permutation::all_of_degree(n);
    let e = Permutation::identity();
    let from_e: HashMap<Permutation, Coeff> = perms
        .par_iter()
        .map(|v| (v.clone(), bruhat::count_i_chains(&e, v, colours, n)))
        .collect();
    let top_length = (n * n.saturating_sub(1) / 2) as usize;
    let per_u: Vec<Vec<Failure>> = perms
        .par_iter()
        .map(|u| {
            let mut fails = Vec::new();
            let m = top_length - u.length();
            let powers = match bruhat::monk_powers(u, colours, m as u32) {
                Ok(p) => p,
                Err(err) => return vec![Failure::new(u.to_string(), err.to_string())],
            };
            for w in perms.iter().filter(|w| bruhat::bruhat_leq(u, w)) {
                let d = w.length() - u.length();
                let chains = bruhat::count_i_chains(u, w, colours, n);
                let monk = powers[d].get(w);
                let mut sum = Coeff::zero();
                for v in perms.iter().filter(|v| v.length() == d) {
                    match poly::structure_constant(u, v, w) {
                        Ok(c) if !c.is_zero() => sum += c * &from_e[v],
                        Ok(_) => {}
                        Err(err) => fails.push(Failure::new(format!("u={u} v={v}"), err.to_string())),
                    }
                }
                if chains != monk || chains != sum {
                    fails.push(Failure::new(
                        format!("u={u} w={w}"),
                        format!("chains {chains}, Monk powers {monk}, Σ c·f {sum}"),
                    ));
                }
            }
            fails
        })
        .collect();
    report.instances = perms
        .iter()
        .map(|u| perms.iter().filter(|w| bruhat::bruhat_leq(u, w)).count() as u64)
        .sum();
    report.failures = per_u.into_iter().flatten().collect();
    report
}

/// `f^v_e(I) ≠ 0` exactly when every descent of `v` lies in `I`, for all
/// `v ∈ S_n` and `I ⊆ {1, ..., n-1}`.
pub fn check_minimal_cosets(n: u32) -> Report {
    let mut report = Report::new("minimal_cosets", json!({ "n": n }));
    let e = Permutation::identity();
    let subsets: Vec<Vec<u32>> = (0u32..1 << n.saturating_sub(1))
        .map(|mask| (1..n).filter(|i| mask >> (i - 1) & 1 == 1).collect())
        .collect();
    let items: Vec<(Permutation, Vec<u32>)> = Permutation::all_of_degree(n)
        .into_iter()
        .flat_map(|v| subsets.iter().map(move |s| (v.clone(), s.clone())))
        .collect();
    report.run(&items, |(v, colours)| {
        let nonzero = !bruhat::count_i_chains(&e, v, colours, n).is_zero();
        if nonzero == bruhat::is_minimal_coset_rep(v, colours) {
            vec![]
        } else {
            vec![Failure::new(
                format!("v={v} I={colours:?}"),
                format!("chain count nonzero: {nonzero}"),
            )]
        }
    });
    report
}

/// The position conditions for `≤_k` agree with reachability by k-Bruhat
/// covers on `S_n`, for every `k < n`.
pub fn check_k_bruhat_equiv(n: u32) -> Report {
    let mut report = Report::new("k_bruhat_equiv", json!({ "n": n }));
    let perms = Permutation::all_of_degree(n);
    let items: Vec<(Permutation, u32)> = perms
        .iter()
        .flat_map(|u| (1..n).map(move |k| (u.clone(), k)))
        .collect();
    report.run(&items, |(u, k)| {
        let mut reach = BTreeSet::from([u.clone()]);
        let mut stack = vec![u.clone()];
        while let Some(p) = stack.pop() {
            for (_, q) in bruhat::k_covers(&p, *k) {
                if q.degree() <= n && reach.insert(q.clone()) {
                    stack.push(q);
                }
            }
        }
        perms
            .iter()
            .filter(|w| reach.contains(w) != bruhat::leq_k(u, w, *k))
            .map(|w| {
                Failure::new(
                    format!("u={u} w={w} k={k}"),
                    format!("reachable: {}", reach.contains(w)),
                )
            })
            .collect()
    });
    report.instances *= perms.len() as u64;
    report
}

/// The greedy chain is a saturated k-Bruhat chain of the right length whose
/// steps keep the two position conditions, and the `ζ` form reproduces it.
pub fn check_greedy_chains(n: u32) -> Report {
    let mut report = Report::new("greedy_chains", json!({ "n": n }));
    let perms = Permutation::all_of_degree(n);
    let items: Vec<(Permutation, Permutation, u32)> = perms
        .iter()
        .flat_map(|u| {
            let perms = &perms;
            (1..n).flat_map(move |k| {
                perms
                    .iter()
                    .filter(move |w| bruhat::leq_k(u, w, k))
                    .map(move |w| (u.clone(), w.clone(), k))
            })
        })
        .collect();
    report.run(&items, |(u, w, k)| {
        let tag = || format!("u={u} w={w} k={k}");
        let chain = match bruhat::greedy_chain(u, w, *k) {
            Ok(c) => c,
            Err(err) => return vec![Failure::new(tag(), err.to_string())],
        };
        let mut fails = Vec::new();
        if chain.len() != w.length() - u.length() + 1 {
            fails.push(Failure::new(tag(), format!("chain has {} elements", chain.len())));
        }
        for pair in chain.windows(2) {
            let step = bruhat::cover_transposition(&pair[1], &pair[0]);
            if !step.is_some_and(|t| t.a() <= *k && *k < t.b()) {
                fails.push(Failure::new(tag(), format!("{} to {} is not a cover", pair[1], pair[0])));
            }
            if !bruhat::leq_k(u, &pair[1], *k) {
                fails.push(Failure::new(tag(), format!("conditions fail at {}", pair[1])));
            }
        }
        let zeta = w.compose(&u.inverse());
        let lifted: Vec<Permutation> = bruhat::greedy_chain_zeta(&zeta)
            .iter()
            .map(|z| z.compose(u))
            .collect();
        if lifted != chain {
            fails.push(Failure::new(tag(), "ζ form differs"));
        }
        fails
    });
    report
}

/// Closed-form rank equals `ℓ(ζu) - ℓ(u)` at the first witness, for all
/// `ζ ∈ S_n`.
pub fn check_rank_formula(n: u32) -> Report {
    let mut report = Report::new("rank_formula", json!({ "n": n }));
    let perms = Permutation::all_of_degree(n);
    report.run(&perms, |zeta| {
        let closed = qorder::rank(zeta);
        match qorder::witness_rank(zeta, zeta.degree() + 2) {
            Some(r) if r == closed => vec![],
            Some(r) => vec![Failure::new(zeta.to_string(), format!("formula {closed}, witness {r}"))],
            None => vec![Failure::new(zeta.to_string(), "no witness found")],
        }
    });
    report
}

/// `[u, w]_k ≅ [x, z]_l` and `c^w_{u,v(λ,k)} = c^z_{x,v(λ,l)}` for all
/// `|λ| = ℓ(w) - ℓ(u)` with at most `min(k, l)` parts, given that `wu⁻¹` and
/// `zx⁻¹` are shape equivalent.
pub fn check_skew_pair(
    (u, w, k): (&Permutation, &Permutation, u32),
    (x, z, l): (&Permutation, &Permutation, u32),
) -> Report {
    let mut report = Report::new(
        "skew_pair",
        json!({ "first": [u.one_line(), w.one_line(), k], "second": [x.one_line(), z.one_line(), l] }),
    );
    let tag = format!("[{u},{w}]_{k} vs [{x},{z}]_{l}");
    let zeta = w.compose(&u.inverse());
    let eta = z.compose(&x.inverse());
    if !qorder::shape_equivalent(&zeta, &eta) {
        report.check(false, tag, "quotients are not shape equivalent");
        return report;
    }
    let (a, b) = match (
        bruhat::interval(u, w, IntervalKind::KBruhat(k)),
        bruhat::interval(x, z, IntervalKind::KBruhat(l)),
    ) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(err), _) | (_, Err(err)) => {
            report.check(false, tag, err.to_string());
            return report;
        }
    };
    report.check(a.is_isomorphic(&b), &tag, "intervals are not isomorphic");
    if zeta == eta {
        let shift = u.inverse().compose(x);
        report.check(
            a.maps_onto(&b, |v| v.compose(&shift)),
            &tag,
            "v ↦ v·u⁻¹·x is not an isomorphism",
        );
    }
    let size = (w.length() - u.length()) as u32;
    for lambda in partitions_with_at_most(size, k.min(l)) {
        let lhs = poly::structure_constant(u, &grass(&lambda, k), w);
        let rhs = poly::structure_constant(x, &grass(&lambda, l), z);
        match (lhs, rhs) {
            (Ok(p), Ok(q)) => report.check(p == q, format!("{tag} λ={lambda}"), format!("{p} ≠ {q}")),
            (Err(err), _) | (_, Err(err)) => report.check(false, format!("{tag} λ={lambda}"), err.to_string()),
        }
    }
    report
}

/// Index sets used to produce shape-equivalent copies.
fn sample_index_sets(len: u32) -> Vec<Vec<u32>> {
    let evens: Vec<u32> = (1..=len).map(|i| 2 * i).collect();
    let skip_two: Vec<u32> = (1..=len).map(|i| if i == 1 { 1 } else { i + 1 }).collect();
    let shifted: Vec<u32> = (1..=len).map(|i| i + 2).collect();
    vec![evens, skip_two, shifted]
}

/// Interval isomorphism and equal Grassmannian coefficients for every
/// `ζ ∈ S_bound` against its relabellings `φ_P(ζ)` and against a second
/// witness for `ζ` itself.
pub fn check_skew_invariance(bound: u32) -> Report {
    let mut report = Report::new("skew_invariance", json!({ "bound": bound }));
    let items: Vec<(Permutation, Vec<u32>)> = Permutation::all_of_degree(bound)
        .into_iter()
        .flat_map(|z| sample_index_sets(bound).into_iter().map(move |p| (z.clone(), p)))
        .collect();
    let sub: Vec<Report> = items
        .par_iter()
        .map(|(zeta, set)| {
            let mut r = Report::new("skew_invariance", json!(null));
            let eta = zeta.relabel(set).expect("index sets are long enough");
            let first = poly::find_witness(zeta, 1, zeta.degree() + 2);
            let second = poly::find_witness(&eta, 1, eta.degree() + 2);
            let (Some((u, k)), Some((x, l))) = (first, second) else {
                r.check(false, format!("ζ={zeta} P={set:?}"), "no witness found");
                return r;
            };
            r.absorb(check_skew_pair((&u, &zeta.compose(&u), k), (&x, &eta.compose(&x), l)));
            // The same ζ at a shifted witness, where the explicit map applies.
            let y = poly::shift_witness(zeta, &u, 1);
            r.absorb(check_skew_pair((&u, &zeta.compose(&u), k), (&y, &zeta.compose(&y), k + 1)));
            r
        })
        .collect();
    for r in sub {
        report.absorb(r);
    }
    report
}

/// Whether `ζ` is shape equivalent to `v(ν,l)·v(μ,l)⁻¹` for some `l ≤ m` and
/// `μ ⊆ ν` inside an `l × m` box with `|ν/μ| = m`, `m = |ζ|`.
pub fn skew_shape_quotient(zeta: &Permutation) -> Option<(u32, Partition, Partition)> {
    let m = qorder::rank(zeta) as u32;
    let target = qorder::compress(zeta);
    if m == 0 {
        return zeta.is_identity().then(|| (1, Partition::empty(), Partition::empty()));
    }
    for l in 1..=m {
        for nu in Partition::all_in_box(l, m) {
            if nu.size() < m {
                continue;
            }
            let vn = grass(&nu, l);
            for mu in Partition::all_of_size(nu.size() - m) {
                if mu.len() > l as usize || !nu.contains(&mu) {
                    continue;
                }
                let q = vn.compose(&grass(&mu, l).inverse());
                if qorder::compress(&q) == target {
                    return Some((l, mu, nu));
                }
            }
        }
    }
    None
}

/// Recording-tableau counts of the chains of `[u, w]_k` against
/// `c^w_{u,v(λ,k)}`.
///
/// Mismatches count as failures only when `wu⁻¹` is recognised as a skew
/// shape quotient; otherwise both sides are reported in the notes, and a
/// full match is recorded as a pass beyond the hypothesis.
pub fn check_schensted_counting(u: &Permutation, w: &Permutation, k: u32) -> Report {
    let mut report = Report::new(
        "schensted_counting",
        json!({ "u": u.one_line(), "w": w.one_line(), "k": k }),
    );
    let iv = match bruhat::interval(u, w, IntervalKind::KBruhat(k)) {
        Ok(iv) => iv,
        Err(err) => {
            report.check(false, format!("u={u} w={w} k={k}"), err.to_string());
            return report;
        }
    };
    let zeta = w.compose(&u.inverse());
    let hypothesis = skew_shape_quotient(&zeta);
    match &hypothesis {
        Some((l, mu, nu)) => report.notes.push(format!(
            "wu⁻¹ = {} is shape equivalent to v({nu},{l})·v({mu},{l})⁻¹",
            zeta.cycle_string()
        )),
        None => report.notes.push(format!(
            "hypothesis not established: {} is not a skew shape quotient",
            zeta.cycle_string()
        )),
    }
    let mut counts: BTreeMap<String, u64> = BTreeMap::new();
    for chain in iv.maximal_chains() {
        let word = bruhat::chain_word(&chain, k).expect("interval covers are k-Bruhat covers");
        *counts.entry(tabx::schensted(&word).1.to_string()).or_default() += 1;
    }
    let size = (w.length() - u.length()) as u32;
    let mut mismatches = Vec::new();
    let mut seen = BTreeSet::new();
    let mut compared = 0;
    for lambda in Partition::all_of_size(size) {
        let c = if lambda.len() <= k as usize {
            match poly::structure_constant(u, &grass(&lambda, k), w) {
                Ok(c) => c,
                Err(err) => {
                    report.check(false, format!("λ={lambda}"), err.to_string());
                    continue;
                }
            }
        } else {
            Coeff::zero()
        };
        for t in tabx::standard_tableaux(&lambda) {
            let key = t.to_string();
            let chains = counts.get(&key).copied().unwrap_or(0);
            seen.insert(key.clone());
            compared += 1;
            report.notes.push(format!("T=[{key}]: chains {chains}, coefficient {c}"));
            if Coeff::from(chains) != c {
                mismatches.push(Failure::new(
                    format!("u={u} w={w} k={k} T=[{key}]"),
                    format!("{chains} chains, coefficient {c}"),
                ));
            }
        }
    }
    for (key, chains) in counts.iter().filter(|(key, _)| !seen.contains(*key)) {
        mismatches.push(Failure::new(
            format!("u={u} w={w} k={k} T=[{key}]"),
            format!("{chains} chains with a non-standard recording tableau"),
        ));
    }
    report.instances += compared;
    if hypothesis.is_some() {
        report.failures.extend(mismatches);
    } else if mismatches.is_empty() {
        report.notes.push("bonus pass: conclusion holds without the hypothesis".into());
    } else {
        report.notes.extend(
            mismatches
                .into_iter()
                .map(|f| format!("outside hypothesis: {} ({})", f.witness, f.reason)),
        );
    }
    report
}

/// For a disjoint product `ζ·η`: `[e,ζ]_⪯ × [e,η]_⪯ ≅ [e,ζη]_⪯` through
/// `(α, β) ↦ αβ`, and `c^{ζη}_λ = Σ c^λ_{μν} c^ζ_μ c^η_ν` for `|λ| = |ζη|`.
pub fn check_disjointness(zeta: &Permutation, eta: &Permutation) -> Report {
    let mut report = Report::new(
        "disjointness",
        json!({ "zeta": zeta.cycle_string(), "eta": eta.cycle_string() }),
    );
    let tag = format!("ζ={} η={}", zeta.cycle_string(), eta.cycle_string());
    if !qorder::is_disjoint_product(zeta, eta) {
        report.check(false, tag, "not a disjoint product");
        return report;
    }
    let a = qorder::q_interval(zeta);
    let b = qorder::q_interval(eta);
    let prod = zeta.compose(eta);
    let c = qorder::q_interval(&prod);
    let mut image = BTreeSet::new();
    let mut covers_ok = true;
    for x in a.nodes() {
        for y in b.nodes() {
            image.insert(x.compose(y));
        }
    }
    for cov in a.covers() {
        for y in b.nodes() {
            let (lo, hi) = (&a.nodes()[cov.lower], &a.nodes()[cov.upper]);
            covers_ok &= c.has_cover(&lo.compose(y), &hi.compose(y));
        }
    }
    for cov in b.covers() {
        for x in a.nodes() {
            let (lo, hi) = (&b.nodes()[cov.lower], &b.nodes()[cov.upper]);
            covers_ok &= c.has_cover(&x.compose(lo), &x.compose(hi));
        }
    }
    let expected_covers = a.covers().len() * b.len() + a.len() * b.covers().len();
    report.check(
        image.len() == a.len() * b.len()
            && image.len() == c.len()
            && image.iter().all(|p| c.contains(p))
            && covers_ok
            && c.covers().len() == expected_covers,
        &tag,
        "product map is not an isomorphism of intervals",
    );
    let (rz, re) = (qorder::rank(zeta) as u32, qorder::rank(eta) as u32);
    let skew = |p: &Permutation, l: &Partition| poly::skew_coefficient(p, l);
    for lambda in Partition::all_of_size(rz + re) {
        let result = (|| -> crate::Result<(Coeff, Coeff)> {
            let lhs = skew(&prod, &lambda)?;
            let mut rhs = Coeff::zero();
            for mu in Partition::all_of_size(rz) {
                let cz = skew(zeta, &mu)?;
                if cz.is_zero() {
                    continue;
                }
                for nu in Partition::all_of_size(re) {
                    let ce = skew(eta, &nu)?;
                    if ce.is_zero() {
                        continue;
                    }
                    let k = lambda.len().max(mu.len()).max(nu.len()) as u32;
                    let lr = tabx::lr_coefficient(&mu, &nu, &lambda, k)?;
                    rhs += Coeff::from(lr) * &cz * &ce;
                }
            }
            Ok((lhs, rhs))
        })();
        match result {
            Ok((l, r)) => report.check(l == r, format!("{tag} λ={lambda}"), format!("{l} ≠ {r}")),
            Err(err) => report.check(false, format!("{tag} λ={lambda}"), err.to_string()),
        }
    }
    report
}

/// Deterministically sampled disjoint products with total rank at most
/// `max_rank`, supports inside `[1, span]`.
pub fn sample_disjoint_pairs(count: usize, max_rank: usize, span: u32, seed: u64) -> Vec<(Permutation, Permutation)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    let mut attempts = 0;
    while out.len() < count && attempts < 100_000 {
        attempts += 1;
        let mut points: Vec<u32> = (1..=span).collect();
        rand::seq::SliceRandom::shuffle(points.as_mut_slice(), &mut rng);
        let split = rng.gen_range(1..span as usize);
        let (mut left, mut right) = (points[..split].to_vec(), points[split..].to_vec());
        left.sort_unstable();
        right.sort_unstable();
        let random_on = |pts: &[u32], rng: &mut ChaCha8Rng| {
            let perms = qorder::permutations_of(pts);
            perms[rng.gen_range(0..perms.len())].clone()
        };
        let zeta = random_on(&left, &mut rng);
        let eta = random_on(&right, &mut rng);
        if zeta.is_identity() || eta.is_identity() {
            continue;
        }
        if qorder::is_disjoint_product(&zeta, &eta)
            && qorder::rank(&zeta.compose(&eta)) <= max_rank
            && !out.contains(&(zeta.clone(), eta.clone()))
        {
            out.push((zeta, eta));
        }
    }
    out
}

/// Skew coefficients of `ζ` and `σζσ⁻¹` (`σ = (1 2 ... n)`) agree for all
/// `ζ ∈ S_n`, and their witness intervals for a common `k` have equally many
/// maximal chains.
pub fn check_cyclic_shift(n: u32) -> Report {
    let mut report = Report::new("cyclic_shift", json!({ "n": n }));
    let perms = Permutation::all_of_degree(n);
    report.run(&perms, |zeta| {
        let eta = zeta.conj_cycle(n).expect("ζ ∈ S_n");
        let tag = format!("ζ={} η={}", zeta.cycle_string(), eta.cycle_string());
        let mut fails = Vec::new();
        let r = qorder::rank(zeta);
        if r != qorder::rank(&eta) {
            return vec![Failure::new(tag, "ranks differ")];
        }
        for lambda in Partition::all_of_size(r as u32) {
            match (poly::skew_coefficient(zeta, &lambda), poly::skew_coefficient(&eta, &lambda)) {
                (Ok(a), Ok(b)) if a == b => {}
                (Ok(a), Ok(b)) => fails.push(Failure::new(format!("{tag} λ={lambda}"), format!("{a} ≠ {b}"))),
                (Err(err), _) | (_, Err(err)) => fails.push(Failure::new(format!("{tag} λ={lambda}"), err.to_string())),
            }
        }
        let k = [zeta, &eta]
            .iter()
            .filter_map(|z| poly::find_witness(z, 1, z.degree() + 2).map(|(_, k)| k))
            .max()
            .unwrap_or(1);
        let counts: Vec<Option<Coeff>> = [zeta, &eta]
            .iter()
            .map(|z| {
                let u = poly::find_witness_exact(z, k, z.degree().max(k + 1) + 2)?;
                let iv = bruhat::interval(&u, &z.compose(&u), IntervalKind::KBruhat(k)).ok()?;
                Some(iv.chain_count())
            })
            .collect();
        match (&counts[0], &counts[1]) {
            (Some(a), Some(b)) if a == b => {}
            (a, b) => fails.push(Failure::new(format!("{tag} k={k}"), format!("chain counts {a:?} vs {b:?}"))),
        }
        fails
    });
    report
}

/// The cyclic-shift example in `S_4`: `ζ = (1243)`, its two shifts, and the
/// witnesses `1234`, `2134`, `1324` for `k = 2` give intervals with the
/// expected number of maximal chains.
pub fn check_cyclic_example(expected: u64) -> Report {
    let mut report = Report::new("cyclic_example", json!({ "expected": expected }));
    let zeta: Permutation = "(1,2,4,3)".parse().expect("valid cycle");
    let eta = zeta.conj_cycle(4).expect("ζ ∈ S_4");
    let xi = eta.conj_cycle(4).expect("η ∈ S_4");
    let witnesses = ["1234", "2134", "1324"].map(|s| s.parse::<Permutation>().expect("valid"));
    for (z, u) in [&zeta, &eta, &xi].into_iter().zip(&witnesses) {
        let top = z.compose(u);
        let tag = format!("[{u},{top}]_2 for {}", z.cycle_string());
        match bruhat::interval(u, &top, IntervalKind::KBruhat(2)) {
            Ok(iv) => report.check(
                iv.chain_count() == Coeff::from(expected),
                tag,
                format!("{} maximal chains", iv.chain_count()),
            ),
            Err(err) => report.check(false, tag, err.to_string()),
        }
    }
    report
}

/// For all `u ≤ w` in `S_n` and `p` with `u(p) = w(p)` and
/// `ℓ(w) - ℓ(u) = ℓ(w/_p) - ℓ(u/_p)`: `ε_{p,u(p)}` maps `[u/_p, w/_p]` onto
/// `[u, w]`, and `c^w_{uv} = Σ c^{w/_p}_{u/_p, y}` over `v →^{c_p} ε_{p,1}(y)`
/// for every `v ∈ S_{n-1}`. Also `Ψ_p(𝔖_v) = Σ 𝔖_y` over the same `y`, for
/// every `v ∈ S_n` and `p ≤ n`.
pub fn check_deletion_theorem(n: u32) -> Report {
    let mut report = Report::new("deletion_theorem", json!({ "n": n }));
    let perms = Permutation::all_of_degree(n);
    let small = Permutation::all_of_degree(n.saturating_sub(1));
    let deleted_targets = |v: &Permutation, p: u32| -> Vec<Permutation> {
        bruhat::pieri_targets(v, p)
            .into_iter()
            .filter(|t| t.apply(p) == 1)
            .map(|t| t.delete_at(p))
            .collect()
    };
    let target_table: HashMap<(Permutation, u32), Vec<Permutation>> = small
        .iter()
        .flat_map(|v| (1..=n).map(move |p| (v.clone(), p)))
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|(v, p)| {
            let t = deleted_targets(&v, p);
            ((v, p), t)
        })
        .collect();
    let triples: Vec<(Permutation, Permutation, u32)> = perms
        .iter()
        .flat_map(|u| {
            perms.iter().flat_map(move |w| {
                (1..=n).filter_map(move |p| {
                    let ok = u.apply(p) == w.apply(p)
                        && bruhat::bruhat_leq(u, w)
                        && w.length() - u.length() == w.delete_at(p).length() - u.delete_at(p).length();
                    ok.then(|| (u.clone(), w.clone(), p))
                })
            })
        })
        .collect();
    report.run(&triples, |(u, w, p)| {
        let tag = || format!("u={u} w={w} p={p}");
        let mut fails = Vec::new();
        let (ud, wd) = (u.delete_at(*p), w.delete_at(*p));
        let q = u.apply(*p);
        match (
            bruhat::interval(&ud, &wd, IntervalKind::Bruhat(n - 1)),
            bruhat::interval(u, w, IntervalKind::Bruhat(n)),
        ) {
            (Ok(a), Ok(b)) => {
                if !a.maps_onto(&b, |y| y.insert_at(*p, q)) {
                    fails.push(Failure::new(tag(), "ε is not an interval isomorphism"));
                }
            }
            (Err(err), _) | (_, Err(err)) => fails.push(Failure::new(tag(), err.to_string())),
        }
        for v in &small {
            let direct = poly::structure_constant(u, v, w);
            let recursive = target_table[&(v.clone(), *p)]
                .iter()
                .map(|y| poly::structure_constant(&ud, y, &wd))
                .sum::<crate::Result<Coeff>>();
            match (direct, recursive) {
                (Ok(a), Ok(b)) if a == b => {}
                (Ok(a), Ok(b)) => fails.push(Failure::new(format!("{} v={v}", tag()), format!("direct {a}, recursion {b}"))),
                (Err(err), _) | (_, Err(err)) => fails.push(Failure::new(tag(), err.to_string())),
            }
        }
        fails
    });
    let substitutions: Vec<(Permutation, u32)> = perms
        .iter()
        .flat_map(|v| (1..=n).map(move |p| (v.clone(), p)))
        .collect();
    report.run(&substitutions, |(v, p)| {
        let image = poly::psi_p(&poly::schubert(v), *p);
        let lhs = match poly::expand_in_schubert(&image) {
            Ok(e) => e,
            Err(err) => return vec![Failure::new(format!("v={v} p={p}"), err.to_string())],
        };
        let rhs: SchubertExpansion = deleted_targets(v, *p)
            .into_iter()
            .map(|y| (y, Coeff::from(1)))
            .collect();
        if lhs == rhs {
            vec![]
        } else {
            vec![Failure::new(format!("v={v} p={p}"), format!("Ψ_p gives {lhs}, targets give {rhs}"))]
        }
    });
    report
}

/// `Ψ_P(𝔖_w)` for `w ∈ S_n` expands exactly in products `𝔖_u(y)𝔖_v(z)`;
/// when `P` is an initial segment `{1, ..., m}` all coefficients must be
/// nonnegative, otherwise negative coefficients are only noted.
pub fn check_psi_set(n: u32, split: &VarSplit) -> Report {
    let mut report = Report::new(
        "psi_set",
        json!({ "n": n, "listed": split.listed(), "tail": split.tail() }),
    );
    let initial = matches!(split.tail(), poly::IndexTail::Finite)
        && split.listed().iter().enumerate().all(|(i, &p)| p == i as u32 + 1);
    let perms = Permutation::all_of_degree(n);
    let negatives: Vec<usize> = perms
        .par_iter()
        .map(|w| {
            let Ok(g) = poly::psi_set(&poly::schubert(w), split) else {
                return usize::MAX;
            };
            let Ok(e) = poly::expand_two_alphabet(&g) else {
                return usize::MAX;
            };
            let mut back = TwoAlphabetPolynomial::zero();
            for ((u, v), c) in &e {
                let y = poly::schubert(u).map_terms(|m| Some(BiMonomial { y: m.clone(), z: Monomial::default() }));
                let z = poly::schubert(v).map_terms(|m| Some(BiMonomial { y: Monomial::default(), z: m.clone() }));
                back = back.add(&y.mul(&z).scale(c));
            }
            if back != g {
                return usize::MAX - 1;
            }
            e.values().filter(|c| c.is_negative()).count()
        })
        .collect();
    for (w, neg) in perms.iter().zip(negatives) {
        match neg {
            usize::MAX => report.check(false, format!("w={w}"), "substitution or expansion failed"),
            x if x == usize::MAX - 1 => report.check(false, format!("w={w}"), "expansion does not recombine"),
            0 => report.check(true, "", ""),
            k if initial => report.check(false, format!("w={w}"), format!("{k} negative coefficients")),
            k => {
                report.check(true, "", "");
                report.notes.push(format!("w={w}: {k} negative coefficients"));
            }
        }
    }
    report
}

/// Structural properties of `⪯` on `S_n`: Young's lattice inside
/// `k × (n-k)` boxes, translation, relabelling, order reversal, conjugation
/// by `w0`, and the rank generating function against witness ranks.
pub fn check_order_properties(n: u32) -> Report {
    let mut report = Report::new("order_properties", json!({ "n": n }));
    let perms = Permutation::all_of_degree(n);
    let leq: HashMap<(Permutation, Permutation), bool> = perms
        .par_iter()
        .flat_map_iter(|a| perms.iter().map(move |b| ((a.clone(), b.clone()), qorder::q_leq(a, b))))
        .collect();
    let le = |a: &Permutation, b: &Permutation| leq[&(a.clone(), b.clone())];

    // Young's lattice.
    for k in 1..n {
        let box_parts = Partition::all_in_box(k, n - k);
        for mu in &box_parts {
            for lambda in &box_parts {
                let q = qorder::q_leq(&grass(mu, k), &grass(lambda, k));
                report.check(
                    q == lambda.contains(mu),
                    format!("k={k} μ={mu} λ={lambda}"),
                    format!("⪯ gives {q}"),
                );
            }
        }
    }

    // Translation: [η, ζ] → [e, ζη⁻¹], ξ ↦ ξη⁻¹.
    for zeta in &perms {
        for eta in perms.iter().filter(|e| le(e, zeta)) {
            let tag = format!("η={eta} ζ={zeta}");
            let inv = eta.inverse();
            let (Ok(a), b) = (qorder::q_between(eta, zeta), qorder::q_interval(&zeta.compose(&inv))) else {
                report.check(false, tag, "interval construction failed");
                continue;
            };
            report.check(a.maps_onto(&b, |x| x.compose(&inv)), tag, "translation is not an isomorphism");
        }
    }

    // Relabelling preserves rank and order.
    for set in sample_index_sets(n) {
        let image: Vec<Permutation> = perms.iter().map(|p| p.relabel(&set).expect("long enough")).collect();
        for (i, a) in perms.iter().enumerate() {
            report.check(
                qorder::rank(a) == qorder::rank(&image[i]),
                format!("ζ={a} P={set:?}"),
                "rank changed under relabelling",
            );
            for (j, b) in perms.iter().enumerate() {
                report.check(
                    le(a, b) == qorder::q_leq(&image[i], &image[j]),
                    format!("η={a} ζ={b} P={set:?}"),
                    "order changed under relabelling",
                );
            }
        }
    }

    // Order reversal η ↦ ηζ⁻¹ from [e, ζ] to [e, ζ⁻¹].
    for zeta in &perms {
        let zi = zeta.inverse();
        let below: Vec<&Permutation> = perms.iter().filter(|e| le(e, zeta)).collect();
        let targets: BTreeSet<Permutation> = below.iter().map(|e| e.compose(&zi)).collect();
        let expected: BTreeSet<Permutation> = perms.iter().filter(|e| le(e, &zi)).cloned().collect();
        report.check(targets == expected, format!("ζ={zeta}"), "η ↦ ηζ⁻¹ is not a bijection");
        for a in &below {
            for b in &below {
                let (x, y) = (a.compose(&zi), b.compose(&zi));
                report.check(
                    le(a, b) == qorder::q_leq(&y, &x),
                    format!("ζ={zeta} η={a} η'={b}"),
                    "η ↦ ηζ⁻¹ does not reverse order",
                );
            }
        }
    }

    // Conjugation by w0.
    let bar: HashMap<&Permutation, Permutation> =
        perms.iter().map(|p| (p, p.conj_w0(n).expect("p ∈ S_n"))).collect();
    for a in &perms {
        for b in &perms {
            report.check(
                le(a, b) == le(&bar[a], &bar[b]),
                format!("η={a} ζ={b}"),
                "conjugation by w0 changes the order",
            );
        }
    }

    // Rank generating function against witness ranks.
    let mut closed = BTreeMap::new();
    let mut witnessed = BTreeMap::new();
    for p in &perms {
        *closed.entry(qorder::rank(p)).or_insert(0u64) += 1;
        if let Some(r) = qorder::witness_rank(p, n + 2) {
            *witnessed.entry(r).or_insert(0u64) += 1;
        }
    }
    report.check(
        closed == witnessed,
        format!("S_{n}"),
        format!("rank sizes {closed:?} vs witness ranks {witnessed:?}"),
    );
    report.notes.push(format!("rank sizes {closed:?}"));
    report
}

/// `q_leq` agrees with the existence of `u ∈ S_ambient`, `k`, with
/// `u ≤_k ηu ≤_k ζu`, for all `η, ζ ∈ S_n`.
pub fn check_order_witnesses(n: u32, ambient: u32) -> Report {
    let mut report = Report::new("order_witnesses", json!({ "n": n, "ambient": ambient }));
    let perms = Permutation::all_of_degree(n);
    report.run(&perms, |zeta| {
        let witnesses = qorder::witnesses(zeta, ambient);
        let tops: Vec<Permutation> = witnesses.iter().map(|(u, _)| zeta.compose(u)).collect();
        perms
            .iter()
            .filter_map(|eta| {
                let by_witness = witnesses.iter().zip(&tops).any(|((u, k), top)| {
                    let mid = eta.compose(u);
                    bruhat::leq_k(u, &mid, *k) && bruhat::leq_k(&mid, top, *k)
                });
                let direct = qorder::q_leq(eta, zeta);
                (direct != by_witness).then(|| {
                    Failure::new(
                        format!("η={eta} ζ={zeta}"),
                        format!("conditions {direct}, witness search {by_witness}"),
                    )
                })
            })
            .collect()
    });
    report.instances *= perms.len() as u64;
    report
}

/// Expansion round trip on random integer combinations of `{𝔖_w : w ∈
/// S_n}`, and nonnegative, degree-homogeneous structure constants on
/// `S_m × S_m`.
pub fn check_expansion(n: u32, samples: usize, seed: u64, m: u32) -> Report {
    let mut report = Report::new(
        "expansion",
        json!({ "n": n, "samples": samples, "seed": seed, "m": m }),
    );
    let basis = Permutation::all_of_degree(n);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let combos: Vec<SchubertExpansion> = (0..samples)
        .map(|_| {
            let terms = rng.gen_range(1..=6);
            (0..terms)
                .map(|_| {
                    let w = basis[rng.gen_range(0..basis.len())].clone();
                    let c = loop {
                        let c: i64 = rng.gen_range(-9..=9);
                        if c != 0 {
                            break c;
                        }
                    };
                    (w, Coeff::from(c))
                })
                .collect()
        })
        .collect();
    report.run(&combos, |combo| {
        let f = combo.recombine();
        match poly::expand_in_schubert(&f) {
            Ok(e) if e == *combo => vec![],
            Ok(e) => vec![Failure::new(combo.to_string(), format!("expanded to {e}"))],
            Err(err) => vec![Failure::new(combo.to_string(), err.to_string())],
        }
    });
    let small = Permutation::all_of_degree(m);
    let pairs: Vec<(Permutation, Permutation)> = small
        .iter()
        .flat_map(|u| small.iter().map(move |v| (u.clone(), v.clone())))
        .collect();
    report.run(&pairs, |(u, v)| {
        let tag = || format!("u={u} v={v}");
        let product = poly::schubert(u).mul(&poly::schubert(v));
        let degree = (u.length() + v.length()) as u32;
        let mut fails = Vec::new();
        if !product.is_zero() && product.homogeneous_degree() != Some(degree) {
            fails.push(Failure::new(tag(), "product is not homogeneous of degree ℓ(u)+ℓ(v)"));
        }
        match poly::structure_constants(u, v) {
            Ok(e) => {
                if !e.is_nonnegative() {
                    fails.push(Failure::new(tag(), format!("negative constant in {e}")));
                }
                if e.iter().any(|(w, _)| w.length() as u32 != degree) {
                    fails.push(Failure::new(tag(), "constant outside degree ℓ(u)+ℓ(v)"));
                }
            }
            Err(err) => fails.push(Failure::new(tag(), err.to_string())),
        }
        fails
    });
    report
}

/// `P(diagonal word) = T` and `P(reading word) = T` for every semistandard
/// tableau with at most `max_cells` cells and entries at most `max_entry`.
pub fn check_tableau_words(max_cells: u32, max_entry: u32) -> Report {
    let mut report = Report::new(
        "tableau_words",
        json!({ "max_cells": max_cells, "max_entry": max_entry }),
    );
    let tableaux: Vec<Tableau> = (0..=max_cells)
        .flat_map(Partition::all_of_size)
        .filter(|l| l.len() <= max_entry as usize)
        .flat_map(|l| tabx::semistandard_tableaux(&l, max_entry))
        .collect();
    report.run(&tableaux, |t| {
        let mut fails = Vec::new();
        match tabx::diagonal_word(t) {
            Ok(word) if tabx::schensted(&word).0 == *t => {}
            Ok(word) => fails.push(Failure::new(t.to_string(), format!("diagonal word {word} inserts elsewhere"))),
            Err(err) => fails.push(Failure::new(t.to_string(), err.to_string())),
        }
        if tabx::schensted(&tabx::reading_word(t)).0 != *t {
            fails.push(Failure::new(t.to_string(), "reading word inserts elsewhere"));
        }
        fails
    });
    report
}

/// Names accepted by [`run_named`], with their default parameters.
pub const CHECKERS: &[&str] = &[
    "chain_identity",
    "minimal_cosets",
    "k_bruhat_equiv",
    "greedy_chains",
    "rank_formula",
    "skew_invariance",
    "skew_pair",
    "schensted_counting",
    "disjointness",
    "cyclic_shift",
    "cyclic_example",
    "deletion_theorem",
    "psi_set",
    "order_properties",
    "order_witnesses",
    "expansion",
    "tableau_words",
];

/// Runs a checker by name. Parameters are given as `key=value` pairs;
/// permutations accept any notation understood by the parser.
pub fn run_named(name: &str, params: &BTreeMap<String, String>) -> crate::Result<Report> {
    use crate::error::Error;
    let get = |key: &str| params.get(key).map(String::as_str);
    let num = |key: &str, default: u32| -> crate::Result<u32> {
        get(key)
            .map(|s| s.parse().map_err(|_| Error::Parse(format!("{key}={s}: expected an integer"))))
            .unwrap_or(Ok(default))
    };
    let perm = |key: &str, default: &str| -> crate::Result<Permutation> { get(key).unwrap_or(default).parse() };
    let list = |key: &str, default: &str| -> crate::Result<Vec<u32>> {
        get(key)
            .unwrap_or(default)
            .split(',')
            .filter(|s| !s.trim().is_empty())
            .map(|s| s.trim().parse().map_err(|_| Error::Parse(format!("{key}: bad entry {s:?}"))))
            .collect()
    };
    Ok(match name {
        "chain_identity" => check_chain_identity(num("n", 4)?, &list("colours", "2")?),
        "minimal_cosets" => check_minimal_cosets(num("n", 4)?),
        "k_bruhat_equiv" => check_k_bruhat_equiv(num("n", 4)?),
        "greedy_chains" => check_greedy_chains(num("n", 4)?),
        "rank_formula" => check_rank_formula(num("n", 4)?),
        "skew_invariance" => check_skew_invariance(num("bound", 3)?),
        "skew_pair" => check_skew_pair(
            (&perm("u", "21345")?, &perm("w", "45123")?, num("k", 2)?),
            (&perm("x", "3215764")?, &perm("z", "5273461")?, num("l", 3)?),
        ),
        "schensted_counting" => check_schensted_counting(&perm("u", "132")?, &perm("w", "2413")?, num("k", 2)?),
        "disjointness" => check_disjointness(&perm("zeta", "(1,2)")?, &perm("eta", "(3,4)")?),
        "cyclic_shift" => check_cyclic_shift(num("n", 4)?),
        "cyclic_example" => check_cyclic_example(num("expected", 2)? as u64),
        "deletion_theorem" => check_deletion_theorem(num("n", 4)?),
        "psi_set" => {
            let tail = match get("tail") {
                None | Some("finite") => poly::IndexTail::Finite,
                Some("unspecified") => poly::IndexTail::Unspecified,
                Some(s) => poly::IndexTail::AllAbove(
                    s.strip_prefix("above:")
                        .and_then(|b| b.parse().ok())
                        .ok_or_else(|| Error::Parse(format!("tail={s}: expected finite, unspecified or above:N")))?,
                ),
            };
            check_psi_set(num("n", 4)?, &VarSplit::new(list("P", "1,2,3,4")?, tail)?)
        }
        "order_properties" => check_order_properties(num("n", 4)?),
        "order_witnesses" => check_order_witnesses(num("n", 4)?, num("ambient", 6)?),
        "expansion" => check_expansion(num("n", 5)?, num("samples", 100)? as usize, num("seed", 7)? as u64, num("m", 4)?),
        "tableau_words" => check_tableau_words(num("cells", 8)?, num("entries", 4)?),
        other => {
            return Err(Error::Parse(format!(
                "unknown checker {other:?}; expected one of {}",
                CHECKERS.join(", ")
            )))
        }
    })
}

/// Sorted copy of a multiset of tableaux, for comparisons in tests.
pub fn recording_tableaux(iv: &LabeledInterval, k: u32) -> Vec<Tableau> {
    let mut out: Vec<Tableau> = iv
        .maximal_chains()
        .iter()
        .map(|c| tabx::schensted(&bruhat::chain_word(c, k).expect("k-Bruhat interval")).1)
        .collect();
    out.sort_by_key(|t| t.to_string());
    out
}
