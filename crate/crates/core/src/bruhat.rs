//! Bruhat order, the k-Bruhat suborders, coloured chains and labelled
//! intervals.
//!
//! A cover `u ⋖ u(a,b)` multiplies on the right by a transposition of
//! positions, which is the same as swapping the values `u(a) < u(b)`. In the
//! k-Bruhat order the cover additionally needs `a ≤ k < b`, and it is labelled
//! by `u(b)`.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt::Write as _;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{Permutation, Transposition};
use crate::poly::{self, Coeff, SparsePolynomial};
use crate::poset::{self, Hasse};
use crate::tabx::Word;

/// Covers of `u` inside `S_n`, in increasing `(a, b)` order.
pub fn bruhat_covers(u: &Permutation, n: u32) -> Vec<(Transposition, Permutation)> {
    covers_in_range(u, 1..=n, n)
}

/// Covers `u ⋖_k u(a,b)` in `S_∞`.
///
/// Any such `b` is at most `max(deg u, k) + 1`: beyond that, position `b - 1`
/// holds a value strictly between `u(a)` and `u(b) = b`.
pub fn k_covers(u: &Permutation, k: u32) -> Vec<(Transposition, Permutation)> {
    let n = u.degree().max(k) + 1;
    covers_in_range(u, 1..=k, n)
        .into_iter()
        .filter(|(t, _)| t.b() > k)
        .collect()
}

fn covers_in_range(
    u: &Permutation,
    firsts: std::ops::RangeInclusive<u32>,
    n: u32,
) -> Vec<(Transposition, Permutation)> {
    let w = u.padded(n as usize);
    let mut out = Vec::new();
    for a in firsts {
        if a > n {
            break;
        }
        let lo = w[a as usize - 1];
        // Walk right keeping the smallest value above `lo` seen so far; a
        // cover occurs exactly when the new value undercuts it.
        let mut ceiling = u32::MAX;
        for b in a + 1..=n {
            let v = w[b as usize - 1];
            if v > lo && v < ceiling {
                let t = Transposition::new(a, b).expect("a < b");
                out.push((t, u.swap_positions(a, b)));
                ceiling = v;
            }
        }
    }
    out
}

/// The transposition `(a,b)` with `lower ⋖ upper = lower(a,b)` in the Bruhat
/// order, if `upper` covers `lower`.
pub fn cover_transposition(lower: &Permutation, upper: &Permutation) -> Option<Transposition> {
    if upper.length() != lower.length() + 1 {
        return None;
    }
    let n = lower.degree().max(upper.degree()) as usize;
    let (l, h) = (lower.padded(n), upper.padded(n));
    let diff: Vec<u32> = (0..n).filter(|&i| l[i] != h[i]).map(|i| i as u32 + 1).collect();
    match diff.as_slice() {
        &[a, b] if l[a as usize - 1] == h[b as usize - 1] && l[a as usize - 1] < l[b as usize - 1] => {
            Transposition::new(a, b).ok()
        }
        _ => None,
    }
}

/// Bruhat order by the rank-matrix criterion:
/// `#{i ≤ p : u(i) ≥ q} ≤ #{i ≤ p : w(i) ≥ q}` for all `p, q`.
pub fn bruhat_leq(u: &Permutation, w: &Permutation) -> bool {
    let n = u.degree().max(w.degree()) as usize;
    if u.length() > w.length() {
        return false;
    }
    let (uw, ww) = (u.padded(n), w.padded(n));
    for q in 1..=n as u32 {
        let (mut cu, mut cw) = (0, 0);
        for p in 0..n {
            cu += (uw[p] >= q) as u32;
            cw += (ww[p] >= q) as u32;
            if cu > cw {
                return false;
            }
        }
    }
    true
}

/// `u ≤_k w`, decided by the two position conditions:
/// `a ≤ k < b ⇒ u(a) ≤ w(a), u(b) ≥ w(b)`, and every inversion of `w` that is
/// not an inversion of `u` straddles `k`.
pub fn leq_k(u: &Permutation, w: &Permutation, k: u32) -> bool {
    let n = u.degree().max(w.degree()).max(k) as usize;
    let (uw, ww) = (u.padded(n), w.padded(n));
    let k = k as usize;
    if (0..n).any(|i| if i < k { uw[i] > ww[i] } else { uw[i] < ww[i] }) {
        return false;
    }
    for a in 0..n {
        for b in a + 1..n {
            if uw[a] < uw[b] && ww[a] > ww[b] && !(a < k && b >= k) {
                return false;
            }
        }
    }
    true
}

/// A saturated k-Bruhat chain `w = w_0 ⋗_k w_1 ⋗_k ... ⋗_k w_m = u`, built by
/// repeatedly pairing the position `a ≤ k` of minimal `u(a)` with `u(a) < w(a)`
/// against the position `b > k` of maximal `u(b)` with `w(b) < w(a) ≤ u(b)`.
pub fn greedy_chain(u: &Permutation, w: &Permutation, k: u32) -> Result<Vec<Permutation>> {
    if !leq_k(u, w, k) {
        return Err(Error::Incomparable {
            lower: u.to_string(),
            upper: w.to_string(),
            order: format!("{k}-Bruhat order"),
        });
    }
    let n = u.degree().max(w.degree()).max(k);
    let steps = w.length() - u.length();
    let mut current = w.clone();
    let mut out = vec![current.clone()];
    while current != *u {
        if out.len() > steps {
            return Err(Error::Internal(format!(
                "greedy chain from {w} to {u} exceeded {steps} steps"
            )));
        }
        let a = (1..=k)
            .filter(|&a| u.apply(a) < current.apply(a))
            .min_by_key(|&a| u.apply(a));
        let Some(a) = a else {
            return Err(Error::Internal(format!("no position a at {current}")));
        };
        let wa = current.apply(a);
        let b = (k + 1..=n)
            .filter(|&b| current.apply(b) < wa && wa <= u.apply(b))
            .max_by_key(|&b| u.apply(b));
        let Some(b) = b else {
            return Err(Error::Internal(format!("no position b at {current}")));
        };
        current = current.swap_positions(a, b);
        out.push(current.clone());
    }
    Ok(out)
}

/// The same chain expressed through `ζ = wu⁻¹`: returns `ζ, ζ_1, ..., e`, so
/// that `ζ_i u` runs down any k-Bruhat interval `[u, ζu]_k`.
pub fn greedy_chain_zeta(zeta: &Permutation) -> Vec<Permutation> {
    let mut current = zeta.clone();
    let mut out = vec![current.clone()];
    while !current.is_identity() {
        let n = current.degree();
        let alpha = (1..=n)
            .find(|&a| a < current.apply(a))
            .expect("a non-identity permutation moves some point up");
        let za = current.apply(alpha);
        let beta = (za..=n)
            .rev()
            .find(|&b| current.apply(b) < za)
            .expect("some position at or after ζ(α) holds a smaller value");
        current = current.swap_positions(alpha, beta);
        out.push(current.clone());
    }
    out
}

/// The labels `lower(b)` of the covers along an ascending k-Bruhat chain.
pub fn chain_word(chain: &[Permutation], k: u32) -> Result<Word> {
    let mut letters = Vec::with_capacity(chain.len().saturating_sub(1));
    for pair in chain.windows(2) {
        let t = cover_transposition(&pair[0], &pair[1])
            .filter(|t| t.a() <= k && k < t.b())
            .ok_or_else(|| Error::NotACover(format!("{} to {} in {k}-Bruhat order", pair[0], pair[1])))?;
        letters.push(pair[0].apply(t.b()));
    }
    Ok(Word(letters))
}

/// `f^w_u(I)`: saturated Bruhat chains from `u` to `w` in `S_n`, each cover
/// `u ⋖ u(a,b)` weighted by `#({a, ..., b-1} ∩ I)`.
pub fn count_i_chains(u: &Permutation, w: &Permutation, colours: &[u32], n: u32) -> Coeff {
    if u == w {
        return Coeff::one();
    }
    let Ok(iv) = interval(u, w, IntervalKind::Bruhat(n)) else {
        return Coeff::zero();
    };
    let colours: BTreeSet<u32> = colours.iter().copied().collect();
    iv.weighted_chain_count(|c| {
        let t = c.transposition;
        colours.range(t.a()..t.b()).count() as u64
    })
}

/// `f^w_u(I)` as the coefficient of `𝔖_w` in `𝔖_u · (Σ_{i∈I} 𝔖_{s_i})^m`,
/// `m = ℓ(w) - ℓ(u)`, computed with polynomial arithmetic.
pub fn count_i_chains_monk(u: &Permutation, w: &Permutation, colours: &[u32]) -> Result<Coeff> {
    let Some(m) = w.length().checked_sub(u.length()) else {
        return Ok(Coeff::zero());
    };
    Ok(monk_powers(u, colours, m as u32)?
        .pop()
        .expect("m + 1 entries")
        .get(w))
}

/// Expansions of `𝔖_u · (Σ_{i∈I} (x_1 + ... + x_i))^j` for `j = 0..=m`.
pub fn monk_powers(
    u: &Permutation,
    colours: &[u32],
    m: u32,
) -> Result<Vec<poly::SchubertExpansion>> {
    let step = colours
        .iter()
        .fold(SparsePolynomial::zero(), |acc, &i| acc.add(&SparsePolynomial::variable_sum(i)));
    let mut f = (*poly::schubert(u)).clone();
    let mut out = vec![poly::expand_in_schubert(&f)?];
    for _ in 0..m {
        f = f.mul(&step);
        out.push(poly::expand_in_schubert(&f)?);
    }
    Ok(out)
}

/// Whether every descent of `v` lies in `I`, i.e. `v` is the shortest element
/// of `v W_J` where `J` is generated by the `s_i` with `i ∉ I`.
pub fn is_minimal_coset_rep(v: &Permutation, colours: &[u32]) -> bool {
    v.descents().iter().all(|d| colours.contains(d))
}

/// All `w` with `v →^{c_p} w`: ends of `(p-1)`-Bruhat chains of length `p-1`
/// above `v` whose labels strictly decrease.
pub fn pieri_targets(v: &Permutation, p: u32) -> BTreeSet<Permutation> {
    fn walk(u: &Permutation, k: u32, left: u32, below: u32, out: &mut BTreeSet<Permutation>) {
        if left == 0 {
            out.insert(u.clone());
            return;
        }
        for (t, next) in k_covers(u, k) {
            let label = u.apply(t.b());
            if label < below {
                walk(&next, k, left - 1, label, out);
            }
        }
    }
    let mut out = BTreeSet::new();
    let k = p.saturating_sub(1);
    walk(v, k, k, u32::MAX, &mut out);
    out
}

/// The support of `𝔖_v · x_1 ⋯ x_{p-1}` in the Schubert basis.
pub fn pieri_targets_by_product(v: &Permutation, p: u32) -> Result<BTreeSet<Permutation>> {
    let monomial = (1..p).fold(SparsePolynomial::one(), |acc, i| {
        acc.mul(&SparsePolynomial::variable(i))
    });
    let e = poly::expand_in_schubert(&poly::schubert(v).mul(&monomial))?;
    Ok(e.support().into_iter().collect())
}

/// Which order an interval lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum IntervalKind {
    /// Bruhat order of `S_n`.
    Bruhat(u32),
    /// The k-Bruhat order.
    KBruhat(u32),
    /// The graded order `⪯`.
    QOrder,
}

impl std::fmt::Display for IntervalKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            IntervalKind::Bruhat(n) => write!(f, "Bruhat order of S_{n}"),
            IntervalKind::KBruhat(k) => write!(f, "{k}-Bruhat order"),
            IntervalKind::QOrder => write!(f, "⪯ order"),
        }
    }
}

/// A cover relation between two nodes of an interval.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Cover {
    pub lower: usize,
    pub upper: usize,
    /// `(a, b)` with `upper = lower·(a,b)`; for the `⪯` order this is the
    /// transposition `τ` with `upper = lower·τ`.
    pub transposition: Transposition,
    /// `lower(b)` for k-Bruhat covers.
    pub label: Option<u32>,
}

/// A finite interval with its Hasse diagram. Nodes are sorted by rank, then
/// by one-line notation; node 0 is the bottom and the last node the top.
#[derive(Clone, Debug)]
pub struct LabeledInterval {
    kind: IntervalKind,
    nodes: Vec<Permutation>,
    ranks: Vec<usize>,
    covers: Vec<Cover>,
    index: HashMap<Permutation, usize>,
}

impl LabeledInterval {
    /// Builds an interval from its elements, a rank function and the cover
    /// pairs. The caller guarantees the elements form an interval.
    pub(crate) fn from_parts(
        kind: IntervalKind,
        mut elements: Vec<(usize, Permutation)>,
        cover_pairs: impl IntoIterator<Item = (Permutation, Permutation)>,
    ) -> Self {
        elements.sort();
        elements.dedup();
        let ranks = elements.iter().map(|(r, _)| *r).collect();
        let nodes: Vec<Permutation> = elements.into_iter().map(|(_, p)| p).collect();
        let index: HashMap<Permutation, usize> =
            nodes.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let mut covers: Vec<Cover> = cover_pairs
            .into_iter()
            .map(|(lo, hi)| {
                let transposition = transposition_between(&lo, &hi);
                let label = match kind {
                    IntervalKind::KBruhat(_) => Some(lo.apply(transposition.b())),
                    _ => None,
                };
                Cover {
                    lower: index[&lo],
                    upper: index[&hi],
                    transposition,
                    label,
                }
            })
            .collect();
        covers.sort_by_key(|c| (c.lower, c.upper));
        covers.dedup_by_key(|c| (c.lower, c.upper));
        LabeledInterval {
            kind,
            nodes,
            ranks,
            covers,
            index,
        }
    }

    pub fn kind(&self) -> IntervalKind {
        self.kind
    }

    pub fn bottom(&self) -> &Permutation {
        &self.nodes[0]
    }

    pub fn top(&self) -> &Permutation {
        self.nodes.last().expect("intervals are non-empty")
    }

    pub fn nodes(&self) -> &[Permutation] {
        &self.nodes
    }

    /// Rank of each node relative to the bottom.
    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    pub fn covers(&self) -> &[Cover] {
        &self.covers
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.index.contains_key(p)
    }

    /// Whether `lower ⋖ upper` is a cover of this interval.
    pub fn has_cover(&self, lower: &Permutation, upper: &Permutation) -> bool {
        match (self.index_of(lower), self.index_of(upper)) {
            (Some(l), Some(u)) => self
                .covers
                .binary_search_by_key(&(l, u), |c| (c.lower, c.upper))
                .is_ok(),
            _ => false,
        }
    }

    /// Number of maximal chains, by dynamic programming over ranks.
    pub fn chain_count(&self) -> Coeff {
        self.weighted_chain_count(|_| 1)
    }

    /// Sum over maximal chains of the product of `weight(cover)`.
    pub fn weighted_chain_count(&self, mut weight: impl FnMut(&Cover) -> u64) -> Coeff {
        let mut ways = vec![Coeff::zero(); self.nodes.len()];
        ways[0] = Coeff::one();
        // Covers are sorted by lower index and nodes by rank, so every
        // lower node is final before its outgoing covers are read.
        for c in &self.covers {
            let w = weight(c);
            if w != 0 {
                let add = &ways[c.lower] * w;
                ways[c.upper] += add;
            }
        }
        ways.pop().unwrap_or_default()
    }

    /// Every maximal chain, bottom first, in lexicographic order of node
    /// indices.
    pub fn maximal_chains(&self) -> Vec<Vec<Permutation>> {
        let mut up: Vec<Vec<usize>> = vec![Vec::new(); self.nodes.len()];
        for c in &self.covers {
            up[c.lower].push(c.upper);
        }
        let top = self.nodes.len() - 1;
        let mut out = Vec::new();
        let mut path = vec![0];
        fn walk(
            at: usize,
            top: usize,
            up: &[Vec<usize>],
            path: &mut Vec<usize>,
            out: &mut Vec<Vec<usize>>,
        ) {
            if at == top {
                out.push(path.clone());
                return;
            }
            for &next in &up[at] {
                path.push(next);
                walk(next, top, up, path, out);
                path.pop();
            }
        }
        walk(0, top, &up, &mut path, &mut out);
        out.into_iter()
            .map(|p| p.into_iter().map(|i| self.nodes[i].clone()).collect())
            .collect()
    }

    /// The Hasse diagram with node indices.
    pub fn hasse(&self) -> Hasse {
        Hasse {
            ranks: self.ranks.clone(),
            edges: self.covers.iter().map(|c| (c.lower, c.upper)).collect(),
        }
    }

    /// An order isomorphism onto `other`, as a map of node indices.
    pub fn isomorphism(&self, other: &LabeledInterval) -> Option<Vec<usize>> {
        poset::isomorphism(&self.hasse(), &other.hasse())
    }

    pub fn is_isomorphic(&self, other: &LabeledInterval) -> bool {
        self.isomorphism(other).is_some()
    }

    /// Whether `f` maps this interval's nodes bijectively onto `other`'s and
    /// carries covers exactly onto covers.
    pub fn maps_onto(&self, other: &LabeledInterval, f: impl Fn(&Permutation) -> Permutation) -> bool {
        if self.len() != other.len() || self.covers.len() != other.covers.len() {
            return false;
        }
        let image: Vec<Permutation> = self.nodes.iter().map(&f).collect();
        let distinct: HashSet<&Permutation> = image.iter().collect();
        if distinct.len() != image.len() || !image.iter().all(|p| other.contains(p)) {
            return false;
        }
        self.covers
            .iter()
            .all(|c| other.has_cover(&image[c.lower], &image[c.upper]))
    }

    /// Graphviz rendering; edges carry their label when present.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph interval {\n  rankdir=BT;\n  node [shape=plaintext];\n");
        for (i, p) in self.nodes.iter().enumerate() {
            let _ = writeln!(s, "  n{i} [label=\"{}\"];", p.one_line());
        }
        for c in &self.covers {
            match c.label {
                Some(l) => {
                    let _ = writeln!(s, "  n{} -> n{} [label=\"{l}\"];", c.lower, c.upper);
                }
                None => {
                    let _ = writeln!(s, "  n{} -> n{};", c.lower, c.upper);
                }
            }
        }
        s.push_str("}\n");
        s
    }

    /// `{kind, bottom, top, nodes, covers: [[lower, upper, label], ...]}` with
    /// permutations in one-line notation.
    pub fn to_json(&self) -> serde_json::Value {
        let covers: Vec<serde_json::Value> = self
            .covers
            .iter()
            .map(|c| {
                serde_json::json!([
                    self.nodes[c.lower].one_line(),
                    self.nodes[c.upper].one_line(),
                    c.label
                ])
            })
            .collect();
        serde_json::json!({
            "kind": self.kind,
            "bottom": self.bottom().one_line(),
            "top": self.top().one_line(),
            "nodes": self.nodes.iter().map(Permutation::one_line).collect::<Vec<_>>(),
            "covers": covers,
        })
    }

    /// Number of nodes at each rank.
    pub fn rank_sizes(&self) -> Vec<usize> {
        let mut sizes = BTreeMap::new();
        for &r in &self.ranks {
            *sizes.entry(r).or_insert(0) += 1;
        }
        sizes.into_values().collect()
    }
}

/// The transposition `τ = (a,b)` with `hi = lo·τ`, for permutations differing
/// in exactly two positions.
fn transposition_between(lo: &Permutation, hi: &Permutation) -> Transposition {
    let n = lo.degree().max(hi.degree()) as usize;
    let (l, h) = (lo.padded(n), hi.padded(n));
    let diff: Vec<u32> = (0..n).filter(|&i| l[i] != h[i]).map(|i| i as u32 + 1).collect();
    match diff.as_slice() {
        &[a, b] => Transposition::new(a, b).expect("a < b"),
        // Covers of ⪯ may move more than two points; record the first pair.
        [a, b, ..] => Transposition::new(*a, *b).expect("a < b"),
        _ => Transposition::new(1, 2).expect("1 < 2"),
    }
}

/// The interval `[u, w]` in a Bruhat-type order.
///
/// Nodes are the elements reachable upward from `u` by covers that can
/// still reach `w` downward, so the construction relies only on covers. For
/// `⪯` the endpoints are `η` and `ζ`.
pub fn interval(u: &Permutation, w: &Permutation, kind: IntervalKind) -> Result<LabeledInterval> {
    let incomparable = || Error::Incomparable {
        lower: u.to_string(),
        upper: w.to_string(),
        order: kind.to_string(),
    };
    let up_covers = |p: &Permutation| -> Vec<Permutation> {
        match kind {
            IntervalKind::Bruhat(n) => bruhat_covers(p, n).into_iter().map(|(_, q)| q).collect(),
            IntervalKind::KBruhat(k) => k_covers(p, k).into_iter().map(|(_, q)| q).collect(),
            IntervalKind::QOrder => unreachable!(),
        }
    };
    match kind {
        IntervalKind::QOrder => return crate::qorder::q_between(u, w),
        IntervalKind::Bruhat(n) => {
            if u.degree() > n || w.degree() > n {
                return Err(Error::SupportExceeds {
                    perm: if u.degree() > n { u } else { w }.to_string(),
                    n,
                });
            }
        }
        IntervalKind::KBruhat(_) => {}
    }
    let (lu, lw) = (u.length(), w.length());
    if lw < lu || !bruhat_leq(u, w) {
        return Err(incomparable());
    }
    // Upward sweep from u, pruned by the Bruhat order below w.
    let mut seen: HashMap<Permutation, usize> = HashMap::from([(u.clone(), 0)]);
    let mut edges: Vec<(Permutation, Permutation)> = Vec::new();
    let mut queue = VecDeque::from([u.clone()]);
    while let Some(p) = queue.pop_front() {
        if p.length() == lw {
            continue;
        }
        for q in up_covers(&p) {
            if !bruhat_leq(&q, w) {
                continue;
            }
            edges.push((p.clone(), q.clone()));
            if !seen.contains_key(&q) {
                seen.insert(q.clone(), q.length() - lu);
                queue.push_back(q);
            }
        }
    }
    if !seen.contains_key(w) {
        return Err(incomparable());
    }
    // Keep the elements from which w is reachable.
    let mut down: HashMap<&Permutation, Vec<&Permutation>> = HashMap::new();
    for (p, q) in &edges {
        down.entry(q).or_default().push(p);
    }
    let mut alive: HashSet<&Permutation> = HashSet::from([w]);
    let mut stack = vec![w];
    while let Some(q) = stack.pop() {
        for &p in down.get(q).into_iter().flatten() {
            if alive.insert(p) {
                stack.push(p);
            }
        }
    }
    let elements = alive.iter().map(|&p| (seen[p], p.clone())).collect();
    let covers: Vec<(Permutation, Permutation)> = edges
        .iter()
        .filter(|(p, q)| alive.contains(p) && alive.contains(q))
        .cloned()
        .collect();
    Ok(LabeledInterval::from_parts(kind, elements, covers))
}

/// A saturated Bruhat chain with a colour in `{a, ..., b-1}` at each cover.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoredChain {
    pub steps: Vec<ColoredStep>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoredStep {
    pub lower: Permutation,
    pub upper: Permutation,
    pub transposition: Transposition,
    pub colour: u32,
}

/// Every `I`-chain from `u` to `w` in `S_n`. The count grows quickly; prefer
/// [`count_i_chains`] when only the number is needed.
pub fn colored_chains(
    u: &Permutation,
    w: &Permutation,
    colours: &[u32],
    n: u32,
) -> Result<Vec<ColoredChain>> {
    let iv = interval(u, w, IntervalKind::Bruhat(n))?;
    let colours: BTreeSet<u32> = colours.iter().copied().collect();
    let mut out = Vec::new();
    for chain in iv.maximal_chains() {
        let mut partial: Vec<Vec<ColoredStep>> = vec![Vec::new()];
        for pair in chain.windows(2) {
            let t = transposition_between(&pair[0], &pair[1]);
            partial = partial
                .into_iter()
                .flat_map(|steps| {
                    colours.range(t.a()..t.b()).map(move |&c| {
                        let mut s = steps.clone();
                        s.push(ColoredStep {
                            lower: pair[0].clone(),
                            upper: pair[1].clone(),
                            transposition: t,
                            colour: c,
                        });
                        s
                    })
                })
                .collect();
        }
        out.extend(partial.into_iter().map(|steps| ColoredChain { steps }));
    }
    Ok(out)
}
