//! Exact Schubert-polynomial calculus on the infinite symmetric group.
//!
//! The crate is organised bottom-up:
//!
//! - [`perm`]: finitely supported permutations and the surgeries on them
//!   (deletion/insertion of a matrix row, support relabelling, conjugations).
//! - [`tabx`]: partitions, tableaux, Schensted insertion and
//!   Littlewood-Richardson coefficients.
//! - [`poly`]: exact sparse polynomials, Schubert and Schur polynomials,
//!   expansion in the Schubert basis, structure constants and variable
//!   substitutions.
//! - [`bruhat`]: Bruhat and k-Bruhat orders, labelled intervals, coloured
//!   chain counts, the greedy chain algorithm and the Pieri relation.
//! - [`qorder`]: the graded order on permutations induced by k-Bruhat
//!   intervals, shape equivalence and closed-form ranks.
//! - [`verify`]: executable checkers that compare the chain side against the
//!   polynomial side of each identity and report witnesses.

pub mod bruhat;
pub mod error;
pub mod perm;
pub mod poly;
pub mod poset;
pub mod qorder;
pub mod tabx;
pub mod verify;

pub use bruhat::{IntervalKind, LabeledInterval};
pub use error::{Error, Result};
pub use perm::{Permutation, Transposition};
pub use poly::{
    BiMonomial, Coeff, Monomial, Polynomial, SchubertExpansion, SparsePolynomial,
    TwoAlphabetPolynomial, VarSplit,
};
pub use tabx::{Partition, SkewShape, Tableau, Word};
pub use verify::Report;
