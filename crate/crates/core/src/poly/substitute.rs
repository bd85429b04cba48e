//! Variable specialisations `Ψ_p` and `Ψ_P`.

use serde::{Deserialize, Serialize};

use super::polynomial::{BiMonomial, Monomial, SparsePolynomial, TwoAlphabetPolynomial};
use crate::error::{Error, Result};

/// `Ψ_p`: `x_j ↦ x_j` for `j < p`, `x_p ↦ 0`, `x_j ↦ x_{j-1}` for `j > p`.
pub fn psi_p(f: &SparsePolynomial, p: u32) -> SparsePolynomial {
    let idx = p as usize - 1;
    f.map_terms(|m| {
        let e = m.exponents();
        if e.get(idx).copied().unwrap_or(0) > 0 {
            return None;
        }
        let mut e = e.to_vec();
        if idx < e.len() {
            e.remove(idx);
        }
        Some(Monomial::new(e))
    })
}

/// How membership continues past the listed elements of `P`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum IndexTail {
    /// `P` is exactly the listed elements.
    Finite,
    /// `P` also contains every integer greater than the bound.
    AllAbove(u32),
    /// Membership is only known up to the largest listed element.
    Unspecified,
}

/// A subset `P ⊆ ℕ` given by a finite list plus a tail rule.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VarSplit {
    listed: Vec<u32>,
    tail: IndexTail,
}

/// Image of `x_j` under `Ψ_P`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Y(u32),
    Z(u32),
}

impl VarSplit {
    pub fn new(listed: Vec<u32>, tail: IndexTail) -> Result<Self> {
        if listed.first() == Some(&0) || listed.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::BadIndexSet(format!(
                "{listed:?} is not strictly increasing and positive"
            )));
        }
        if let IndexTail::AllAbove(n) = tail {
            if listed.last().is_some_and(|&l| l > n) {
                return Err(Error::BadIndexSet(format!(
                    "listed elements {listed:?} exceed the tail bound {n}"
                )));
            }
        }
        Ok(VarSplit { listed, tail })
    }

    /// `P = {1, ..., n}`.
    pub fn prefix(n: u32) -> Self {
        VarSplit {
            listed: (1..=n).collect(),
            tail: IndexTail::Finite,
        }
    }

    pub fn listed(&self) -> &[u32] {
        &self.listed
    }

    pub fn tail(&self) -> IndexTail {
        self.tail
    }

    fn contains(&self, j: u32) -> Result<bool> {
        if self.listed.binary_search(&j).is_ok() {
            return Ok(true);
        }
        match self.tail {
            IndexTail::Finite => Ok(false),
            IndexTail::AllAbove(n) => Ok(j > n),
            IndexTail::Unspecified => {
                if self.listed.last().is_some_and(|&l| j <= l) {
                    Ok(false)
                } else {
                    Err(Error::Unclassified(j))
                }
            }
        }
    }

    /// `x_j ↦ y_i` when `j = p_i`, `x_j ↦ z_i` when `j = p^c_i`.
    pub fn classify(&self, j: u32) -> Result<Side> {
        let below = (1..j)
            .map(|i| self.contains(i))
            .collect::<Result<Vec<bool>>>()?
            .into_iter()
            .filter(|&b| b)
            .count() as u32;
        if self.contains(j)? {
            Ok(Side::Y(below + 1))
        } else {
            Ok(Side::Z(j - below))
        }
    }
}

/// `Ψ_P`: `x_{p_j} ↦ y_j`, `x_{p^c_j} ↦ z_j`.
pub fn psi_set(f: &SparsePolynomial, split: &VarSplit) -> Result<TwoAlphabetPolynomial> {
    f.try_map_terms(|m| {
        let mut y = Vec::new();
        let mut z = Vec::new();
        for (i, &e) in m.exponents().iter().enumerate() {
            if e == 0 {
                continue;
            }
            let (target, idx) = match split.classify(i as u32 + 1)? {
                Side::Y(idx) => (&mut y, idx),
                Side::Z(idx) => (&mut z, idx),
            };
            if target.len() < idx as usize {
                target.resize(idx as usize, 0);
            }
            target[idx as usize - 1] += e;
        }
        Ok(Some(BiMonomial {
            y: Monomial::new(y),
            z: Monomial::new(z),
        }))
    })
}
