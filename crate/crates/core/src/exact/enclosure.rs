use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::rational::{format_rational, Rational};
use super::upoly::UniPoly;
use crate::error::{Error, Result};

/// Closed interval `[lo, hi]` with `lo < hi`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    lo: Rational,
    hi: Rational,
}

impl Interval {
    pub fn new(lo: Rational, hi: Rational) -> Result<Self> {
        if lo < hi {
            Ok(Interval { lo, hi })
        } else {
            Err(Error::InvalidInterval { lo: format_rational(&lo), hi: format_rational(&hi) })
        }
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn contains_interior(&self, x: &Rational) -> bool {
        &self.lo < x && x < &self.hi
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / Rational::from_integer(2.into())
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    /// `count` equally spaced points including both endpoints.
    pub fn grid(&self, count: usize) -> Vec<Rational> {
        assert!(count >= 2);
        let steps = Rational::from_integer(((count - 1) as i64).into());
        (0..count)
            .map(|k| &self.lo + self.width() * Rational::from_integer((k as i64).into()) / &steps)
            .collect()
    }
}

/// Rational enclosure `[lo, hi]` with `lo <= hi`, with exact interval arithmetic.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Enclosure {
    #[serde(with = "crate::serde_rational")]
    pub lo: Rational,
    #[serde(with = "crate::serde_rational")]
    pub hi: Rational,
}

impl Enclosure {
    pub fn new(lo: Rational, hi: Rational) -> Self {
        debug_assert!(lo <= hi);
        Enclosure { lo, hi }
    }

    pub fn point(x: Rational) -> Self {
        Enclosure { lo: x.clone(), hi: x }
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn contains_zero(&self) -> bool {
        self.contains(&Rational::from_integer(0.into()))
    }

    pub fn intersects(&self, other: &Enclosure) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    /// Hull of `self` enlarged by `slack` on both sides.
    pub fn widened(&self, slack: &Rational) -> Enclosure {
        Enclosure { lo: &self.lo - slack, hi: &self.hi + slack }
    }

    /// Horner evaluation of `p` over the enclosure.
    pub fn eval_poly(p: &UniPoly, x: &Enclosure) -> Enclosure {
        p.coeffs()
            .iter()
            .rev()
            .fold(Enclosure::point(Rational::from_integer(0.into())), |acc, c| {
                &(&acc * x) + &Enclosure::point(c.clone())
            })
    }
}

impl Add for &Enclosure {
    type Output = Enclosure;
    fn add(self, rhs: &Enclosure) -> Enclosure {
        Enclosure { lo: &self.lo + &rhs.lo, hi: &self.hi + &rhs.hi }
    }
}

impl Sub for &Enclosure {
    type Output = Enclosure;
    fn sub(self, rhs: &Enclosure) -> Enclosure {
        Enclosure { lo: &self.lo - &rhs.hi, hi: &self.hi - &rhs.lo }
    }
}

impl Mul for &Enclosure {
    type Output = Enclosure;
    fn mul(self, rhs: &Enclosure) -> Enclosure {
        let products = [&self.lo * &rhs.lo, &self.lo * &rhs.hi, &self.hi * &rhs.lo, &self.hi * &rhs.hi];
        let lo = products.iter().min().cloned().expect("nonempty");
        let hi = products.iter().max().cloned().expect("nonempty");
        Enclosure { lo, hi }
    }
}

impl Neg for &Enclosure {
    type Output = Enclosure;
    fn neg(self) -> Enclosure {
        Enclosure { lo: -&self.hi, hi: -&self.lo }
    }
}
