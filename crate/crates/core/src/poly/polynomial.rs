//! Sparse polynomials with exact integer coefficients.
//!
//! A polynomial is a map from monomials to nonzero [`Coeff`]s. The monomial
//! type is a parameter so one- and two-alphabet polynomials share the
//! arithmetic and the text/JSON formats.

use std::collections::BTreeMap;
use std::cmp::Ordering;
use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Coeff = BigInt;

/// Exponent data of a monomial.
pub trait Term: Clone + Ord + Eq + Hash + fmt::Debug + Serialize + DeserializeOwned {
    fn one() -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn degree(&self) -> u32;
    /// Factors such as `x1^3`, in printing order.
    fn factors(&self) -> Vec<(char, u32, u32)>;
    /// Multiplies in `letter_index^power`.
    fn push_factor(&mut self, letter: char, index: u32, power: u32) -> Result<()>;
}

/// Exponent vector over `x1, x2, ...`, trailing zeros trimmed.
///
/// Ordered colexicographically: vectors are compared at the largest index
/// where they differ. The greedy Schubert expansion relies on this order.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(from = "Vec<u32>", into = "Vec<u32>")]
pub struct Monomial(Vec<u32>);

impl From<Vec<u32>> for Monomial {
    fn from(v: Vec<u32>) -> Self {
        Monomial::new(v)
    }
}

impl From<Monomial> for Vec<u32> {
    fn from(m: Monomial) -> Self {
        m.0
    }
}

impl Monomial {
    pub fn new(mut exponents: Vec<u32>) -> Self {
        while exponents.last() == Some(&0) {
            exponents.pop();
        }
        Monomial(exponents)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    /// Exponent of `x_i` (1-based).
    pub fn exponent(&self, i: usize) -> u32 {
        self.0.get(i.wrapping_sub(1)).copied().unwrap_or(0)
    }

    /// `x_i`.
    pub fn variable(i: u32) -> Self {
        let mut e = vec![0; i as usize];
        e[i as usize - 1] = 1;
        Monomial(e)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.iter().rev().cmp(other.0.iter().rev()))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x{:?}", self.0)
    }
}

fn add_exponents(a: &[u32], b: &[u32]) -> Vec<u32> {
    let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let mut out = long.to_vec();
    for (o, s) in out.iter_mut().zip(short) {
        *o += s;
    }
    out
}

fn factors_of(letter: char, e: &[u32]) -> impl Iterator<Item = (char, u32, u32)> + '_ {
    e.iter()
        .enumerate()
        .filter(|(_, &p)| p > 0)
        .map(move |(i, &p)| (letter, i as u32 + 1, p))
}

fn bump(e: &mut Vec<u32>, index: u32, power: u32) -> Result<()> {
    if index == 0 {
        return Err(Error::Parse("variable index 0".into()));
    }
    if e.len() < index as usize {
        e.resize(index as usize, 0);
    }
    e[index as usize - 1] += power;
    while e.last() == Some(&0) {
        e.pop();
    }
    Ok(())
}

impl Term for Monomial {
    fn one() -> Self {
        Monomial::default()
    }

    fn mul(&self, other: &Self) -> Self {
        Monomial(add_exponents(&self.0, &other.0))
    }

    fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn factors(&self) -> Vec<(char, u32, u32)> {
        factors_of('x', &self.0).collect()
    }

    fn push_factor(&mut self, letter: char, index: u32, power: u32) -> Result<()> {
        if letter != 'x' {
            return Err(Error::Parse(format!("unexpected variable {letter}{index}")));
        }
        bump(&mut self.0, index, power)
    }
}

/// Monomial in two alphabets `y1, y2, ...` and `z1, z2, ...`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
pub struct BiMonomial {
    pub y: Monomial,
    pub z: Monomial,
}

impl Term for BiMonomial {
    fn one() -> Self {
        BiMonomial::default()
    }

    fn mul(&self, other: &Self) -> Self {
        BiMonomial {
            y: self.y.mul(&other.y),
            z: self.z.mul(&other.z),
        }
    }

    fn degree(&self) -> u32 {
        self.y.degree() + self.z.degree()
    }

    fn factors(&self) -> Vec<(char, u32, u32)> {
        factors_of('y', &self.y.0)
            .chain(factors_of('z', &self.z.0))
            .collect()
    }

    fn push_factor(&mut self, letter: char, index: u32, power: u32) -> Result<()> {
        match letter {
            'y' => bump(&mut self.y.0, index, power),
            'z' => bump(&mut self.z.0, index, power),
            _ => Err(Error::Parse(format!("unexpected variable {letter}{index}"))),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial<M: Term> {
    terms: BTreeMap<M, Coeff>,
}

pub type SparsePolynomial = Polynomial<Monomial>;
pub type TwoAlphabetPolynomial = Polynomial<BiMonomial>;

impl<M: Term> Default for Polynomial<M> {
    fn default() -> Self {
        Polynomial {
            terms: BTreeMap::new(),
        }
    }
}

impl<M: Term> Polynomial<M> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::term(M::one(), Coeff::one())
    }

    pub fn term(m: M, c: impl Into<Coeff>) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c.into());
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (M, Coeff)>) -> Self {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    /// Adds `c·m`, dropping the entry if it cancels.
    pub fn add_term(&mut self, m: M, c: Coeff) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
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

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&M, &Coeff)> {
        self.terms.iter()
    }

    pub(crate) fn into_terms(self) -> BTreeMap<M, Coeff> {
        self.terms
    }

    pub fn coefficient(&self, m: &M) -> Coeff {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of monomials with nonzero coefficient.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest monomial in the monomial order, with its coefficient.
    pub fn leading_term(&self) -> Option<(&M, &Coeff)> {
        self.terms.last_key_value()
    }

    /// Common degree of all terms, if homogeneous (`None` for zero).
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degrees = self.terms.keys().map(Term::degree);
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }

    pub fn scale(&self, c: &Coeff) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, a)| (m.clone(), a * c)))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| acc.mul(self))
    }

    /// Applies `f` to every monomial; `None` sends the monomial to zero.
    pub fn map_terms<N: Term>(&self, mut f: impl FnMut(&M) -> Option<N>) -> Polynomial<N> {
        Polynomial::from_terms(
            self.terms
                .iter()
                .filter_map(|(m, c)| f(m).map(|n| (n, c.clone()))),
        )
    }

    /// Fallible variant of [`map_terms`](Self::map_terms).
    pub fn try_map_terms<N: Term>(
        &self,
        mut f: impl FnMut(&M) -> Result<Option<N>>,
    ) -> Result<Polynomial<N>> {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            if let Some(n) = f(m)? {
                out.add_term(n, c.clone());
            }
        }
        Ok(out)
    }
}

impl SparsePolynomial {
    /// `x_i`.
    pub fn variable(i: u32) -> Self {
        Self::term(Monomial::variable(i), 1)
    }

    /// `x1 + ... + xk`.
    pub fn variable_sum(k: u32) -> Self {
        Self::from_terms((1..=k).map(|i| (Monomial::variable(i), Coeff::one())))
    }
}

impl<M: Term> fmt::Display for Polynomial<M> {
    /// Terms `c*x1^3*x2` joined by ` + `, largest monomial first; unit
    /// coefficients are omitted, the zero polynomial prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let factors: Vec<String> = m
                .factors()
                .into_iter()
                .map(|(l, i, p)| {
                    if p == 1 {
                        format!("{l}{i}")
                    } else {
                        format!("{l}{i}^{p}")
                    }
                })
                .collect();
            if factors.is_empty() {
                write!(f, "{c}")?;
            } else if c.is_one() {
                f.write_str(&factors.join("*"))?;
            } else if (-c).is_one() {
                write!(f, "-{}", factors.join("*"))?;
            } else {
                write!(f, "{c}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl<M: Term> fmt::Debug for Polynomial<M> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn parse_term<M: Term>(text: &str) -> Result<(M, Coeff)> {
    let text = text.trim();
    let (negate, body) = match text.strip_prefix('-') {
        Some(rest) if rest.starts_with(|c: char| c.is_ascii_alphabetic()) => (true, rest),
        _ => (false, text),
    };
    let mut coeff = Coeff::one();
    let mut m = M::one();
    for factor in body.split('*') {
        let factor = factor.trim();
        if factor.is_empty() {
            return Err(Error::Parse(format!("empty factor in {text:?}")));
        }
        let first = factor.chars().next().unwrap();
        if first.is_ascii_alphabetic() {
            let rest = &factor[1..];
            let (index, power) = match rest.split_once('^') {
                Some((i, p)) => (i, p),
                None => (rest, "1"),
            };
            let index = index
                .parse::<u32>()
                .map_err(|_| Error::Parse(format!("bad variable {factor:?}")))?;
            let power = power
                .parse::<u32>()
                .map_err(|_| Error::Parse(format!("bad exponent {factor:?}")))?;
            m.push_factor(first, index, power)?;
        } else {
            let c = factor
                .parse::<Coeff>()
                .map_err(|_| Error::Parse(format!("bad coefficient {factor:?}")))?;
            coeff *= c;
        }
    }
    if negate {
        coeff = -coeff;
    }
    Ok((m, coeff))
}

impl<M: Term> FromStr for Polynomial<M> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut p = Self::zero();
        for chunk in s.split('+') {
            let (m, c) = parse_term::<M>(chunk)?;
            p.add_term(m, c);
        }
        Ok(p)
    }
}

/// Coefficient as a JSON number when it fits in `i64`, else a decimal string.
pub(crate) mod coeff_json {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(c: &Coeff, s: S) -> std::result::Result<S::Ok, S::Error> {
        match c.to_i64() {
            Some(v) => s.serialize_i64(v),
            None => s.serialize_str(&c.to_string()),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Coeff, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Int(i64),
            Text(String),
        }
        match Raw::deserialize(d)? {
            Raw::Int(v) => Ok(Coeff::from(v)),
            Raw::Text(t) => t.parse().map_err(serde::de::Error::custom),
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(bound = "M: Term")]
struct TermRecord<M: Term> {
    #[serde(with = "coeff_json")]
    coeff: Coeff,
    exps: M,
}

impl<M: Term> Serialize for Polynomial<M> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let records: Vec<TermRecord<M>> = self
            .terms
            .iter()
            .map(|(m, c)| TermRecord {
                coeff: c.clone(),
                exps: m.clone(),
            })
            .collect();
        records.serialize(s)
    }
}

impl<'de, M: Term> Deserialize<'de> for Polynomial<M> {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let records = Vec::<TermRecord<M>>::deserialize(d)?;
        Ok(Self::from_terms(records.into_iter().map(|r| (r.exps, r.coeff))))
    }
}
