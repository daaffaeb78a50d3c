//! Diagram algebras for finite type link concordance invariants.
//!
//! The B side works with colored unitrivalent forests modulo AS, IHX, the
//! link relation and the same-color strut ideal; the A side is an independent
//! oracle built from bounded diagrams on labeled skeleton segments with STU,
//! 1T and the cyclic relation.  All linear algebra is exact over arbitrary
//! precision rationals, with a mod-p fast path used as a cross-check.

pub mod bounded;
pub mod chord;
pub mod diagram;
pub mod lincomb;
pub mod linalg;
pub mod relations;
pub mod spaces;

use thiserror::Error;

pub type Rational = num_rational::BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed diagram: {0}")]
    Structural(String),
    #[error("invalid argument: {0}")]
    Argument(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("rank mismatch between backends: rational={rational} mod {prime}={modp}")]
    RankMismatch {
        rational: usize,
        modp: usize,
        prime: u64,
    },
    #[error("computation infeasible: {0}")]
    Resource(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
