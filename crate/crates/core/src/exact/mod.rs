//! Exact arithmetic: rationals, sparse polynomials, truncated ℏ-series and
//! the hemisphere coordinate ring.

mod poly;
mod scalar;
mod series;
mod sphere;

pub use poly::{Mono, Poly, PolyRing};
pub use scalar::{parse_q, q, qi, Q};
pub use series::HSeries;
pub use sphere::SphereElem;

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExactError {
    #[error("variable list mismatch: polynomial uses {used} variables, ring has {ring}")]
    VarMismatch { used: usize, ring: usize },
    #[error("unknown variable `{0}`")]
    UnknownVar(String),
    #[error("truncation orders differ ({0} vs {1})")]
    OrderMismatch(usize, usize),
    #[error("constant term is not invertible")]
    NotInvertible,
    #[error("malformed rational `{0}`")]
    BadRational(String),
}

/// Commutative or not, every coefficient domain used by the series and
/// tensor layers implements this.  Method names avoid clashing with
/// `std::ops` so both can be implemented on the same type.
pub trait Ring: Clone + PartialEq + fmt::Debug + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn scale(&self, c: &Q) -> Self;

    fn negate(&self) -> Self {
        self.scale(&qi(-1))
    }
    fn minus(&self, other: &Self) -> Self {
        self.plus(&other.negate())
    }
    fn try_inverse(&self) -> Option<Self> {
        None
    }
}

impl Ring for Q {
    fn zero() -> Self {
        qi(0)
    }
    fn one() -> Self {
        qi(1)
    }
    fn is_zero(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn scale(&self, c: &Q) -> Self {
        self * c
    }
    fn negate(&self) -> Self {
        -self
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn try_inverse(&self) -> Option<Self> {
        if Ring::is_zero(self) {
            None
        } else {
            Some(num_traits::Inv::inv(self.clone()))
        }
    }
}
