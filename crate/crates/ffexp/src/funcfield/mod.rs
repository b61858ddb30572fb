//! Arithmetic in `F_p[t]` and its quotients, valuations and norms of rational
//! functions, matrix heights, and the admissible-modulus family.

mod admissible;
mod crt;
mod modulus;
mod poly;
mod quotient;
mod ratfunc;
mod valuation;

pub use admissible::{enumerate_admissible, is_admissible, AdmissibleSpec, AdmissibleViolation};
pub use crt::{crt_combine, crt_split};
pub use modulus::{count_irreducibles, factor, factor_squarefree, monic_irreducibles, Modulus};
pub use poly::{FieldParams, Poly};
pub use quotient::QuotRing;
pub use ratfunc::{matrix_height, RatFunc, RatMat};
pub use valuation::{v_norm, valuation_of, QPow, Val, Valuation};

use thiserror::Error;

/// Errors from the function-field layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FuncFieldError {
    #[error("division by zero polynomial")]
    DivisionByZero,
    #[error("operands over different prime fields ({0} vs {1})")]
    FieldMismatch(u64, u64),
    #[error("irreducibility is undefined for constant polynomials")]
    ConstantInput,
    #[error("polynomial is not square-free (gcd with derivative is {0})")]
    NotSquareFree(String),
    #[error("factoring budget exceeded at degree {0}")]
    FactorBudget(usize),
    #[error("residue of degree {0} does not fit modulus of degree {1}")]
    ResidueTooLarge(usize, usize),
    #[error("{0} is not invertible modulo {1}")]
    NotInvertible(String, String),
    #[error("denominator {0} has an irreducible factor outside D(r0)")]
    DenominatorOutsideSupport(String),
    #[error("zero polynomial is not a valid modulus or denominator")]
    ZeroModulus,
    #[error("{0} is not a subfield size of the ambient field of order {1}")]
    NotASubfield(u64, u64),
}
