//! Exact polynomial arithmetic and the Schubert basis.

mod expand;
mod polynomial;
mod schubert;
mod substitute;

pub use expand::{
    expand_in_schubert, expand_two_alphabet, find_witness, find_witness_exact, shift_witness,
    skew_coefficient,
    skew_coefficient_with, structure_constant, structure_constants, SchubertExpansion,
    TwoAlphabetExpansion,
};
pub use polynomial::{
    BiMonomial, Coeff, Monomial, Polynomial, SparsePolynomial, Term, TwoAlphabetPolynomial,
};
pub use schubert::{
    divided_difference, global_cache, schubert, schubert_in, schur, schur_by_tableaux, staircase,
    CacheStats, SchubertCache,
};
pub use substitute::{psi_p, psi_set, IndexTail, VarSplit};
