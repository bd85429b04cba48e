//! Finitely supported permutations of the positive integers.
//!
//! A [`Permutation`] is stored as its one-line window `w(1), ..., w(n)` with
//! the trailing run of fixed points removed, so the same element of the
//! infinite symmetric group has one representation no matter which `S_n` it
//! was built in. Composition follows function composition:
//! `s.compose(&t)` maps `i` to `s(t(i))`.

use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tabx::Partition;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "RawPermutation", into = "RawPermutation")]
pub struct Permutation {
    window: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
struct RawPermutation {
    window: Vec<u32>,
}

impl TryFrom<RawPermutation> for Permutation {
    type Error = Error;

    fn try_from(raw: RawPermutation) -> Result<Self> {
        Permutation::from_window(raw.window)
    }
}

impl From<Permutation> for RawPermutation {
    fn from(p: Permutation) -> Self {
        RawPermutation { window: p.window }
    }
}

/// The transposition `(a,b)` with `a < b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Transposition {
    a: u32,
    b: u32,
}

impl Transposition {
    pub fn new(a: u32, b: u32) -> Result<Self> {
        if a == 0 || a >= b {
            return Err(Error::BadTransposition(a, b));
        }
        Ok(Transposition { a, b })
    }

    pub fn a(&self) -> u32 {
        self.a
    }

    pub fn b(&self) -> u32 {
        self.b
    }

    pub fn to_permutation(&self) -> Permutation {
        Permutation::identity().swap_positions(self.a, self.b)
    }
}

impl fmt::Display for Transposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

impl Permutation {
    pub fn identity() -> Self {
        Permutation { window: Vec::new() }
    }

    /// Builds a permutation from a one-line window, which must be a
    /// rearrangement of `1..=n`.
    pub fn from_window(window: Vec<u32>) -> Result<Self> {
        let n = window.len();
        let mut seen = vec![false; n + 1];
        for &v in &window {
            let v = v as usize;
            if v == 0 || v > n || seen[v] {
                return Err(Error::NotBijective(window));
            }
            seen[v] = true;
        }
        Ok(Self::from_window_unchecked(window))
    }

    pub(crate) fn from_window_unchecked(mut window: Vec<u32>) -> Self {
        while let Some(&last) = window.last() {
            if last as usize == window.len() {
                window.pop();
            } else {
                break;
            }
        }
        Permutation { window }
    }

    /// Product of cycles, written left to right and applied right to left.
    pub fn from_cycles(cycles: &[Vec<u32>]) -> Result<Self> {
        let mut acc = Permutation::identity();
        for cycle in cycles.iter().rev() {
            if cycle.contains(&0) {
                return Err(Error::Parse(format!("cycle {cycle:?} contains 0")));
            }
            let mut sorted = cycle.clone();
            sorted.sort_unstable();
            if sorted.windows(2).any(|p| p[0] == p[1]) {
                return Err(Error::Parse(format!("cycle {cycle:?} repeats an entry")));
            }
            let n = cycle.iter().copied().max().unwrap_or(0) as usize;
            let mut w: Vec<u32> = (1..=n as u32).collect();
            for (i, &c) in cycle.iter().enumerate() {
                let next = cycle[(i + 1) % cycle.len()];
                w[c as usize - 1] = next;
            }
            acc = acc.compose(&Self::from_window_unchecked(w));
        }
        Ok(acc)
    }

    pub fn window(&self) -> &[u32] {
        &self.window
    }

    pub fn is_identity(&self) -> bool {
        self.window.is_empty()
    }

    /// Largest moved point (0 for the identity).
    pub fn degree(&self) -> u32 {
        self.window.len() as u32
    }

    pub fn apply(&self, i: u32) -> u32 {
        match self.window.get((i as usize).wrapping_sub(1)) {
            Some(&v) if i > 0 => v,
            _ => i,
        }
    }

    /// One-line notation padded to length `n` (or the degree, if larger).
    pub fn padded(&self, n: usize) -> Vec<u32> {
        let mut w = self.window.clone();
        let len = w.len();
        w.extend((len as u32 + 1)..=(n.max(len) as u32));
        w
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.window.len()];
        for (i, &v) in self.window.iter().enumerate() {
            inv[v as usize - 1] = i as u32 + 1;
        }
        Permutation { window: inv }
    }

    /// `self ∘ other`, i.e. `i ↦ self(other(i))`.
    pub fn compose(&self, other: &Self) -> Self {
        let n = self.window.len().max(other.window.len());
        let w = (1..=n as u32).map(|i| self.apply(other.apply(i))).collect();
        Self::from_window_unchecked(w)
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.window;
        let mut count = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Lehmer code `c_i = #{j > i : w(j) < w(i)}`, trailing zeros trimmed.
    pub fn code(&self) -> Vec<u32> {
        let w = &self.window;
        let mut code: Vec<u32> = (0..w.len())
            .map(|i| w[i + 1..].iter().filter(|&&x| x < w[i]).count() as u32)
            .collect();
        while code.last() == Some(&0) {
            code.pop();
        }
        code
    }

    /// The unique permutation with the given Lehmer code.
    pub fn from_code(code: &[u32]) -> Self {
        let max = code.iter().copied().max().unwrap_or(0) as usize;
        let total = code.len() + max + 1;
        let mut free: Vec<u32> = (1..=total as u32).collect();
        let mut w = Vec::with_capacity(total);
        for &c in code {
            w.push(free.remove(c as usize));
        }
        w.extend(free);
        Self::from_window_unchecked(w)
    }

    /// Positions `i` with `w(i) > w(i+1)`.
    pub fn descents(&self) -> Vec<u32> {
        self.window
            .windows(2)
            .enumerate()
            .filter(|(_, p)| p[0] > p[1])
            .map(|(i, _)| i as u32 + 1)
            .collect()
    }

    /// `w·(a,b)`: exchange the entries in positions `a` and `b`.
    pub fn swap_positions(&self, a: u32, b: u32) -> Self {
        let n = self.window.len().max(a as usize).max(b as usize);
        let mut w = self.padded(n);
        w.swap(a as usize - 1, b as usize - 1);
        Self::from_window_unchecked(w)
    }

    /// `(α,β)·w`: exchange the values `α` and `β`.
    pub fn swap_values(&self, alpha: u32, beta: u32) -> Self {
        let n = self.window.len().max(alpha as usize).max(beta as usize);
        let w = self
            .padded(n)
            .into_iter()
            .map(|v| {
                if v == alpha {
                    beta
                } else if v == beta {
                    alpha
                } else {
                    v
                }
            })
            .collect();
        Self::from_window_unchecked(w)
    }

    /// Points moved by the permutation, increasing.
    pub fn support(&self) -> Vec<u32> {
        (1..=self.degree()).filter(|&i| self.apply(i) != i).collect()
    }

    /// All elements of `S_n` in lexicographic order of their windows.
    pub fn all_of_degree(n: u32) -> Vec<Permutation> {
        Self::iter_degree(n).collect()
    }

    /// Lazy form of [`all_of_degree`](Self::all_of_degree).
    pub fn iter_degree(n: u32) -> impl Iterator<Item = Permutation> {
        let mut w: Option<Vec<u32>> = Some((1..=n).collect());
        std::iter::from_fn(move || {
            let current = w.take()?;
            let mut next = current.clone();
            if next_permutation(&mut next) {
                w = Some(next);
            }
            Some(Self::from_window_unchecked(current))
        })
    }

    /// The Grassmannian permutation `v(λ,k)`: `v(j) = j + λ_{k+1-j}` for
    /// `j ≤ k`, remaining values in increasing order.
    pub fn grassmannian(lambda: &Partition, k: u32) -> Result<Self> {
        let parts = lambda.parts();
        if parts.len() > k as usize {
            return Err(Error::TooManyParts {
                parts: parts.to_vec(),
                k,
            });
        }
        let part = |i: usize| parts.get(i.wrapping_sub(1)).copied().unwrap_or(0);
        let head: Vec<u32> = (1..=k).map(|j| j + part((k + 1 - j) as usize)).collect();
        let top = head.last().copied().unwrap_or(0);
        let mut w = head.clone();
        w.extend((1..=top).filter(|v| !head.contains(v)));
        Ok(Self::from_window_unchecked(w))
    }

    /// Recovers `(λ, k)` with `grassmannian(λ, k) == self`. The identity
    /// yields the empty partition with `k = None` (any `k` works).
    pub fn is_grassmannian(&self) -> Option<(Partition, Option<u32>)> {
        let d = self.descents();
        match d.as_slice() {
            [] => Some((Partition::empty(), None)),
            &[k] => {
                let parts: Vec<u32> = (1..=k).rev().map(|j| self.apply(j) - j).collect();
                Some((Partition::new(parts).ok()?, Some(k)))
            }
            _ => None,
        }
    }

    /// `w/_p`: delete row `p` and column `w(p)` of the permutation matrix.
    pub fn delete_at(&self, p: u32) -> Self {
        let n = self.window.len().max(p as usize);
        let w = self.padded(n);
        let removed = w[p as usize - 1];
        let out = w
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != p as usize - 1)
            .map(|(_, &v)| if v > removed { v - 1 } else { v })
            .collect();
        Self::from_window_unchecked(out)
    }

    /// `ε_{p,q}(y)`: the permutation `x` with `x/_p = y` and `x(p) = q`.
    pub fn insert_at(&self, p: u32, q: u32) -> Self {
        let n = self
            .window
            .len()
            .max(p as usize - 1)
            .max(q as usize - 1);
        let y = self.padded(n);
        let lift = |v: u32| if v >= q { v + 1 } else { v };
        let mut out = Vec::with_capacity(n + 1);
        out.extend(y[..p as usize - 1].iter().map(|&v| lift(v)));
        out.push(q);
        out.extend(y[p as usize - 1..].iter().map(|&v| lift(v)));
        Self::from_window_unchecked(out)
    }

    /// `φ_P(ζ)`: the permutation fixing everything outside `P` with
    /// `p_i ↦ p_{ζ(i)}`.
    pub fn relabel(&self, index_set: &[u32]) -> Result<Self> {
        if index_set.first() == Some(&0) || index_set.windows(2).any(|p| p[0] >= p[1]) {
            return Err(Error::BadIndexSet(format!(
                "{index_set:?} is not a strictly increasing set of positive integers"
            )));
        }
        let d = self.degree();
        if index_set.len() < d as usize {
            return Err(Error::IndexSetTooShort {
                len: index_set.len(),
                needed: d,
            });
        }
        if d == 0 {
            return Ok(Permutation::identity());
        }
        let n = index_set[d as usize - 1] as usize;
        let mut w: Vec<u32> = (1..=n as u32).collect();
        for i in 1..=d {
            let target = index_set[self.apply(i) as usize - 1];
            w[index_set[i as usize - 1] as usize - 1] = target;
        }
        Ok(Self::from_window_unchecked(w))
    }

    fn check_inside(&self, n: u32) -> Result<()> {
        if self.degree() > n {
            Err(Error::SupportExceeds {
                perm: self.to_string(),
                n,
            })
        } else {
            Ok(())
        }
    }

    /// `w0 ζ w0` for the longest element `w0` of `S_n`.
    pub fn conj_w0(&self, n: u32) -> Result<Self> {
        self.check_inside(n)?;
        let w = (1..=n).map(|i| n + 1 - self.apply(n + 1 - i)).collect();
        Ok(Self::from_window_unchecked(w))
    }

    /// `σ ζ σ⁻¹` for the n-cycle `σ = (1 2 ... n)`.
    pub fn conj_cycle(&self, n: u32) -> Result<Self> {
        self.check_inside(n)?;
        let sigma = |i: u32| if i == n { 1 } else { i + 1 };
        let mut w = vec![0; n as usize];
        for i in 1..=n {
            w[sigma(i) as usize - 1] = sigma(self.apply(i));
        }
        Ok(Self::from_window_unchecked(w))
    }

    /// Nontrivial cycles, each starting at its smallest element.
    pub fn to_cycles(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.window.len() + 1];
        let mut cycles = Vec::new();
        for start in 1..=self.degree() {
            if seen[start as usize] || self.apply(start) == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start as usize] = true;
            let mut next = self.apply(start);
            while next != start {
                seen[next as usize] = true;
                cycle.push(next);
                next = self.apply(next);
            }
            cycles.push(cycle);
        }
        cycles
    }

    pub fn one_line(&self) -> String {
        if self.window.is_empty() {
            "1".to_string()
        } else if self.window.iter().all(|&v| v <= 9) {
            self.window.iter().map(|v| v.to_string()).collect()
        } else {
            let parts: Vec<String> = self.window.iter().map(|v| v.to_string()).collect();
            format!("[{}]", parts.join(","))
        }
    }

    pub fn cycle_string(&self) -> String {
        let cycles = self.to_cycles();
        if cycles.is_empty() {
            return "()".to_string();
        }
        cycles
            .iter()
            .map(|c| {
                let parts: Vec<String> = c.iter().map(|v| v.to_string()).collect();
                format!("({})", parts.join(","))
            })
            .collect()
    }
}

fn next_permutation(w: &mut [u32]) -> bool {
    if w.len() < 2 {
        return false;
    }
    let mut i = w.len() - 1;
    while i > 0 && w[i - 1] >= w[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = w.len() - 1;
    while w[j] <= w[i - 1] {
        j -= 1;
    }
    w.swap(i - 1, j);
    w[i..].reverse();
    true
}

impl Mul for &Permutation {
    type Output = Permutation;

    fn mul(self, rhs: &Permutation) -> Permutation {
        self.compose(rhs)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.one_line())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.one_line())
    }
}

fn parse_number(s: &str) -> Result<u32> {
    s.trim()
        .parse::<u32>()
        .map_err(|_| Error::Parse(format!("bad integer {s:?}")))
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts `413652`, `[4,1,3,6,5,2]`, `(2,4)(1,5,3)`, `(1243)`, `e`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "e" || s == "id" {
            return Ok(Permutation::identity());
        }
        if s.is_empty() {
            return Err(Error::Parse("empty permutation".into()));
        }
        if s.starts_with('(') {
            let mut cycles = Vec::new();
            let mut rest = s;
            while !rest.is_empty() {
                let body = rest
                    .strip_prefix('(')
                    .ok_or_else(|| Error::Parse(format!("expected '(' in {s:?}")))?;
                let close = body
                    .find(')')
                    .ok_or_else(|| Error::Parse(format!("unclosed cycle in {s:?}")))?;
                let inner = body[..close].trim();
                let cycle: Vec<u32> = if inner.is_empty() {
                    Vec::new()
                } else if inner.contains(',') {
                    inner.split(',').map(parse_number).collect::<Result<_>>()?
                } else if inner.contains(char::is_whitespace) {
                    inner.split_whitespace().map(parse_number).collect::<Result<_>>()?
                } else {
                    inner
                        .chars()
                        .map(|c| parse_number(&c.to_string()))
                        .collect::<Result<_>>()?
                };
                if !cycle.is_empty() {
                    cycles.push(cycle);
                }
                rest = body[close + 1..].trim_start();
            }
            return Permutation::from_cycles(&cycles);
        }
        if let Some(body) = s.strip_prefix('[') {
            let body = body
                .strip_suffix(']')
                .ok_or_else(|| Error::Parse(format!("unclosed bracket in {s:?}")))?;
            let window = if body.trim().is_empty() {
                Vec::new()
            } else {
                body.split(',').map(parse_number).collect::<Result<_>>()?
            };
            return Permutation::from_window(window);
        }
        if s.chars().all(|c| c.is_ascii_digit()) {
            let window = s.chars().map(|c| c.to_digit(10).unwrap()).collect();
            return Permutation::from_window(window);
        }
        Err(Error::Parse(format!("unrecognised permutation {s:?}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn part(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn canonical_form_trims_fixed_tail() {
        assert_eq!(p("21345"), p("21"));
        assert_eq!(p("12345"), Permutation::identity());
        assert_eq!(p("21345").window(), &[2, 1]);
    }

    #[test]
    fn compose_matches_left_action_convention() {
        let zeta = p("(2,4)(1,5,3)");
        assert_eq!(zeta.window(), &[5, 4, 1, 2, 3]);
        assert_eq!(zeta.compose(&p("21345")), p("45123"));
        assert_eq!(Permutation::identity().compose(&p("413652")), p("413652"));
        assert_eq!(p("213").compose(&p("213")), Permutation::identity());
    }

    #[test]
    fn lengths_and_codes() {
        assert_eq!(Permutation::identity().length(), 0);
        assert_eq!(p("45123").length(), 6);
        assert_eq!(p("413652").length(), 7);
        assert_eq!(p("413652").code(), vec![3, 0, 1, 2, 1]);
        assert_eq!(p("2413").code(), vec![1, 2]);
        assert!(Permutation::identity().code().is_empty());
    }

    #[test]
    fn grassmannian_examples() {
        assert_eq!(Permutation::grassmannian(&part(&[]), 3).unwrap(), Permutation::identity());
        assert_eq!(Permutation::grassmannian(&part(&[2, 1]), 2).unwrap(), p("2413"));
        assert_eq!(Permutation::grassmannian(&part(&[4]), 2).unwrap(), p("162345"));
        assert!(Permutation::grassmannian(&part(&[1, 1, 1]), 2).is_err());
        assert_eq!(p("2413").is_grassmannian(), Some((part(&[2, 1]), Some(2))));
        assert_eq!(p("2431").is_grassmannian(), None);
        assert_eq!(Permutation::identity().is_grassmannian(), Some((part(&[]), None)));
    }

    #[test]
    fn grassmannian_round_trip_in_box() {
        for k in 1..=4u32 {
            for lambda in Partition::all_in_box(k, 4) {
                let v = Permutation::grassmannian(&lambda, k).unwrap();
                assert_eq!(v.length() as u32, lambda.size());
                match v.is_grassmannian() {
                    Some((mu, Some(j))) => {
                        assert_eq!(mu, lambda);
                        assert_eq!(j, k);
                    }
                    Some((mu, None)) => assert!(mu.is_empty() && lambda.is_empty()),
                    None => panic!("{v} should be Grassmannian"),
                }
            }
        }
    }

    #[test]
    fn deletion_and_insertion_examples() {
        assert_eq!(p("631452").delete_at(3), p("52341"));
        assert_eq!(p("531642").delete_at(3), p("42531"));
        assert_eq!(Permutation::identity().delete_at(4), Permutation::identity());
        assert_eq!(p("52341").insert_at(3, 1), p("631452"));
        assert_eq!(p("42531").insert_at(3, 1), p("531642"));
        assert_eq!(Permutation::identity().insert_at(1, 1), Permutation::identity());
        assert_eq!(Permutation::identity().insert_at(3, 1), p("231"));
    }

    #[test]
    fn relabel_examples() {
        let zeta = p("(2,4)(1,5,3)");
        assert_eq!(zeta.relabel(&[1, 3, 4, 5, 7]).unwrap(), p("(3,5)(1,7,4)"));
        assert_eq!(p("21").relabel(&[4, 9]).unwrap(), p("(4,9)"));
        assert_eq!(Permutation::identity().relabel(&[2, 5]).unwrap(), Permutation::identity());
        assert!(zeta.relabel(&[1, 2, 3]).is_err());
        assert!(p("21").relabel(&[3, 3]).is_err());
    }

    #[test]
    fn conjugations() {
        assert_eq!(Permutation::identity().conj_w0(4).unwrap(), Permutation::identity());
        assert_eq!(p("213").conj_w0(3).unwrap(), p("132"));
        // w0 (1243) w0 sends w0(i) to w0(ζ(i)): the cycle (4,3,1,2) = (1,2,4,3).
        assert_eq!(p("(1243)").conj_w0(4).unwrap(), p("(1,2,4,3)"));
        assert_eq!(p("(1243)").conj_cycle(4).unwrap(), p("(1423)"));
        assert_eq!(p("(1423)").conj_cycle(4).unwrap(), p("(1342)"));
        assert_eq!(Permutation::identity().conj_cycle(5).unwrap(), Permutation::identity());
        assert!(p("54321").conj_cycle(4).is_err());
    }

    #[test]
    fn parsing_and_formatting() {
        assert_eq!(p("(2,4)(1,5,3)").window(), &[5, 4, 1, 2, 3]);
        assert_eq!(p("21345"), Permutation::from_window(vec![2, 1]).unwrap());
        let ten = p("[10,1,2,3,4,5,6,7,8,9]");
        assert_eq!(ten.to_cycles().len(), 1);
        assert_eq!(ten.one_line(), "[10,1,2,3,4,5,6,7,8,9]");
        assert_eq!(p("e"), Permutation::identity());
        assert_eq!(p("()"), Permutation::identity());
        assert_eq!(Permutation::identity().to_string(), "1");
        assert!("2234".parse::<Permutation>().is_err());
        assert!("(1,2".parse::<Permutation>().is_err());
        assert!("abc".parse::<Permutation>().is_err());
        assert!("[1,3]".parse::<Permutation>().is_err());
        let json = serde_json::to_string(&p("413652")).unwrap();
        assert_eq!(json, r#"{"window":[4,1,3,6,5,2]}"#);
        assert_eq!(serde_json::from_str::<Permutation>(&json).unwrap(), p("413652"));
        assert!(serde_json::from_str::<Permutation>(r#"{"window":[1,1]}"#).is_err());
    }

    #[test]
    fn code_round_trip_on_s5() {
        for w in Permutation::all_of_degree(5) {
            assert_eq!(Permutation::from_code(&w.code()), w);
            assert_eq!(w.code().iter().sum::<u32>() as usize, w.length());
        }
    }

    fn arb_perm(n: u32) -> impl Strategy<Value = Permutation> {
        Just((1..=n).collect::<Vec<u32>>())
            .prop_shuffle()
            .prop_map(|w| Permutation::from_window(w).unwrap())
    }

    proptest! {
        #[test]
        fn length_is_subadditive(s in arb_perm(6), t in arb_perm(6)) {
            prop_assert!(s.compose(&t).length() <= s.length() + t.length());
            prop_assert_eq!(s.length(), s.inverse().length());
            prop_assert_eq!(s.compose(&s.inverse()), Permutation::identity());
        }

        #[test]
        fn delete_undoes_insert(y in arb_perm(5), pos in 1u32..=6, q in 1u32..=6) {
            let x = y.insert_at(pos, q);
            prop_assert_eq!(x.delete_at(pos), y);
            prop_assert_eq!(x.apply(pos), q);
        }

        #[test]
        fn text_round_trip(w in arb_perm(7)) {
            prop_assert_eq!(w.one_line().parse::<Permutation>().unwrap(), w.clone());
            prop_assert_eq!(w.cycle_string().parse::<Permutation>().unwrap(), w);
        }

        #[test]
        fn cyclic_conjugation_has_order_n(w in arb_perm(5)) {
            let mut x = w.clone();
            for _ in 0..5 {
                x = x.conj_cycle(5).unwrap();
            }
            prop_assert_eq!(x, w);
        }
    }
}
