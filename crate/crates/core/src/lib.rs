//! Exact computations on convex hulls of polynomial curves: Schur
//! polynomials, diagonal-ideal membership, extreme rays of cones of
//! nonnegative polynomials, and moment-curve LMI descriptions.

pub mod diagonal;
pub mod error;
pub mod exact;
pub mod extreme;
pub mod hull;
pub mod schur;
pub mod sdp;

pub use error::{Error, Result};
pub use exact::{Enclosure, Interval, MultiPoly, Rational, SymMatrix, UniPoly};

/// Serde adapter writing a rational as a `"p/q"` string.
pub mod serde_rational {
    use serde::{de::Error as _, Deserialize, Deserializer, Serializer};

    use crate::exact::rational::{format_rational, parse_rational, Rational};

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s).map_err(D::Error::custom)
    }
}
