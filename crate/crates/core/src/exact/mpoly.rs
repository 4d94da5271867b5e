use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::rational::{format_rational, Rational};
use super::upoly::UniPoly;
use crate::error::{Error, Result};

/// Exponent vector `(a_0, ..., a_n)` of a monomial `t_0^a_0 ... t_n^a_n`.
pub type Exponent = Vec<u32>;

/// `a` divides `b` as monomials.
pub fn mono_divides(a: &[u32], b: &[u32]) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| x <= y)
}

/// `a` divides `b` and `a != b`.
pub fn mono_properly_divides(a: &[u32], b: &[u32]) -> bool {
    mono_divides(a, b) && a != b
}

/// Sparse multivariate polynomial over the rationals with a fixed number of
/// variables. Terms are kept in a `BTreeMap`, so the largest key is the
/// leading term in lexicographic order with `t_0 > t_1 > ...`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    arity: usize,
    terms: BTreeMap<Exponent, Rational>,
}

impl MultiPoly {
    pub fn zero(arity: usize) -> Self {
        MultiPoly { arity, terms: BTreeMap::new() }
    }

    pub fn constant(arity: usize, c: Rational) -> Self {
        Self::monomial(vec![0; arity], c)
    }

    pub fn one(arity: usize) -> Self {
        Self::constant(arity, Rational::one())
    }

    pub fn monomial(exp: Exponent, c: Rational) -> Self {
        let arity = exp.len();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        MultiPoly { arity, terms }
    }

    /// The variable `t_i`.
    pub fn var(i: usize, arity: usize) -> Self {
        let mut e = vec![0; arity];
        e[i] = 1;
        Self::monomial(e, Rational::one())
    }

    /// Builds from `(exponent, coefficient)` pairs, summing repeats.
    pub fn from_terms(arity: usize, terms: impl IntoIterator<Item = (Exponent, Rational)>) -> Self {
        let mut p = Self::zero(arity);
        for (e, c) in terms {
            assert_eq!(e.len(), arity, "exponent arity");
            p.add_term(e, c);
        }
        p
    }

    /// `p(t_slot)` as a polynomial in `arity` variables.
    pub fn from_unipoly(p: &UniPoly, slot: usize, arity: usize) -> Self {
        Self::from_terms(
            arity,
            p.coeffs().iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, c)| {
                let mut e = vec![0; arity];
                e[slot] = k as u32;
                (e, c.clone())
            }),
        )
    }

    /// `t_i - t_j`
    pub fn difference(i: usize, j: usize, arity: usize) -> Self {
        &Self::var(i, arity) - &Self::var(j, arity)
    }

    fn add_term(&mut self, e: Exponent, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &Rational)> {
        self.terms.iter()
    }

    pub fn exponents(&self) -> impl Iterator<Item = &Exponent> {
        self.terms.keys()
    }

    pub fn coeff(&self, e: &[u32]) -> Rational {
        self.terms.get(e).cloned().unwrap_or_else(Rational::zero)
    }

    /// Leading term in lex order.
    pub fn leading_term(&self) -> Option<(&Exponent, &Rational)> {
        self.terms.last_key_value()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.arity);
        }
        MultiPoly {
            arity: self.arity,
            terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect(),
        }
    }

    /// Multiplies by the single term `c * t^e`.
    pub fn times_term(&self, e: &[u32], c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.arity);
        }
        MultiPoly {
            arity: self.arity,
            terms: self
                .terms
                .iter()
                .map(|(f, x)| (f.iter().zip(e).map(|(a, b)| a + b).collect(), x * c))
                .collect(),
        }
    }

    pub fn pow(&self, k: usize) -> Self {
        (0..k).fold(Self::one(self.arity), |acc, _| &acc * self)
    }

    /// Exact quotient `self / g`. Fails with `ZeroDivisor` or `NotDivisible`.
    ///
    /// Lex leading terms multiply in an integral domain, so reducing only the
    /// leading term of the remainder finds the quotient whenever one exists.
    pub fn exact_divide(&self, g: &Self) -> Result<Self> {
        if g.arity != self.arity {
            return Err(Error::ArityMismatch { expected: self.arity, found: g.arity });
        }
        let (g_lead_e, g_lead_c) = g.leading_term().ok_or(Error::ZeroDivisor)?;
        let g_lead_e = g_lead_e.clone();
        let g_lead_inv = g_lead_c.recip();
        let mut rem = self.clone();
        let mut quot = Self::zero(self.arity);
        while let Some((e, c)) = rem.leading_term() {
            if !mono_divides(&g_lead_e, e) {
                return Err(Error::NotDivisible);
            }
            let qe: Exponent = e.iter().zip(&g_lead_e).map(|(a, b)| a - b).collect();
            let qc = c * &g_lead_inv;
            for (ge, gc) in g.terms.iter() {
                let pe: Exponent = ge.iter().zip(&qe).map(|(a, b)| a + b).collect();
                rem.add_term(pe, -(gc * &qc));
            }
            quot.add_term(qe, qc);
        }
        Ok(quot)
    }

    pub fn eval(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.arity {
            return Err(Error::ArityMismatch { expected: self.arity, found: point.len() });
        }
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut v = c.clone();
            for (x, k) in point.iter().zip(e) {
                if *k > 0 {
                    v *= num_traits::pow(x.clone(), *k as usize);
                }
            }
            acc += v;
        }
        Ok(acc)
    }

    /// Applies `t_i -> t_{perm[i]}`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        Self::from_terms(
            self.arity,
            self.terms.iter().map(|(e, c)| {
                let mut f = vec![0; self.arity];
                for (i, k) in e.iter().enumerate() {
                    f[perm[i]] = *k;
                }
                (f, c.clone())
            }),
        )
    }

    /// Keeps the first `keep` variables and sets all later ones to 1.
    pub fn set_tail_to_one(&self, keep: usize) -> Self {
        Self::from_terms(keep, self.terms.iter().map(|(e, c)| (e[..keep].to_vec(), c.clone())))
    }

    /// Ring map that multiplies the variables of each block together:
    /// exponent `a` goes to `(sum_{j in B_0} a_j, ..., sum_{j in B_r} a_j)`.
    pub fn collapse(&self, block_sizes: &[usize]) -> Result<Self> {
        let total: usize = block_sizes.iter().sum();
        if total != self.arity {
            return Err(Error::BadPartition(block_sizes.to_vec()));
        }
        Ok(Self::from_terms(
            block_sizes.len(),
            self.terms.iter().map(|(e, c)| (collapse_exponent(e, block_sizes), c.clone())),
        ))
    }

    /// Renders with variables `{prefix}0, {prefix}1, ...`.
    pub fn display_with(&self, prefix: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (e, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = format_monomial(e, prefix);
            if mono.is_empty() {
                out.push_str(&format_rational(&mag));
            } else if mag.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{}*{}", format_rational(&mag), mono));
            }
        }
        out
    }
}

pub fn collapse_exponent(e: &[u32], block_sizes: &[usize]) -> Exponent {
    let mut out = Vec::with_capacity(block_sizes.len());
    let mut start = 0;
    for &b in block_sizes {
        out.push(e[start..start + b].iter().sum());
        start += b;
    }
    out
}

pub fn format_monomial(e: &[u32], prefix: &str) -> String {
    e.iter()
        .enumerate()
        .filter(|(_, k)| **k > 0)
        .map(|(i, k)| if *k == 1 { format!("{prefix}{i}") } else { format!("{prefix}{i}^{k}") })
        .collect::<Vec<_>>()
        .join("*")
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("t"))
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly[{}]({self})", self.arity)
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.arity, rhs.arity, "arity mismatch");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.arity, rhs.arity, "arity mismatch");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c);
        }
        out
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.arity, rhs.arity, "arity mismatch");
        let (small, large) = if self.len() <= rhs.len() { (self, rhs) } else { (rhs, self) };
        let mut out = MultiPoly::zero(self.arity);
        for (e, c) in &small.terms {
            for (f, d) in &large.terms {
                out.add_term(e.iter().zip(f).map(|(a, b)| a + b).collect(), c * d);
            }
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.scale(&-Rational::one())
    }
}

impl Add for MultiPoly {
    type Output = MultiPoly;
    fn add(mut self, rhs: MultiPoly) -> MultiPoly {
        assert_eq!(self.arity, rhs.arity, "arity mismatch");
        for (e, c) in rhs.terms {
            self.add_term(e, c);
        }
        self
    }
}

impl<'a> Mul<&'a MultiPoly> for MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &'a MultiPoly) -> MultiPoly {
        &self * rhs
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::int;
    use proptest::prelude::*;

    fn t(i: usize, n: usize) -> MultiPoly {
        MultiPoly::var(i, n)
    }

    #[test]
    fn difference_of_squares() {
        let f = &t(0, 2).pow(2) - &t(1, 2).pow(2);
        let g = MultiPoly::difference(0, 1, 2);
        assert_eq!(f.exact_divide(&g).unwrap(), &t(0, 2) + &t(1, 2));
    }

    #[test]
    fn not_divisible_and_zero_divisor() {
        let f = &t(0, 2) * &t(1, 2);
        let g = MultiPoly::difference(0, 1, 2);
        assert_eq!(f.exact_divide(&g), Err(Error::NotDivisible));
        assert_eq!(f.exact_divide(&MultiPoly::zero(2)), Err(Error::ZeroDivisor));
        assert!(matches!(f.exact_divide(&MultiPoly::one(3)), Err(Error::ArityMismatch { .. })));
    }

    #[test]
    fn three_variable_quotient() {
        let d = MultiPoly::difference(0, 1, 3);
        let s = &t(0, 3) + &t(2, 3);
        let f = &(&d * &d) * &s;
        assert_eq!(f.exact_divide(&d).unwrap(), &d * &s);
    }

    #[test]
    fn collapse_and_specialize() {
        let f = &(&t(0, 3) * &t(1, 3)) + &t(2, 3).pow(2);
        let c = f.collapse(&[1, 2]).unwrap();
        assert_eq!(c, &(&t(0, 2) * &t(1, 2)) + &t(1, 2).pow(2));
        assert_eq!(f.set_tail_to_one(2), &(&t(0, 2) * &t(1, 2)) + &MultiPoly::one(2));
        assert!(f.collapse(&[1, 1]).is_err());
    }

    #[test]
    fn display() {
        let f = &(&t(0, 2).pow(2) * &t(1, 2)).scale(&int(3)) - &MultiPoly::one(2);
        assert_eq!(f.display_with("x"), "3*x0^2*x1 - 1");
        assert_eq!(MultiPoly::one(4).to_string(), "1");
    }

    fn small_mpoly(arity: usize) -> impl Strategy<Value = MultiPoly> {
        prop::collection::vec((prop::collection::vec(0u32..3, arity), -4i64..=4), 0..6)
            .prop_map(move |ts| MultiPoly::from_terms(arity, ts.into_iter().map(|(e, c)| (e, int(c)))))
    }

    proptest! {
        #[test]
        fn divide_then_multiply_round_trips(q in small_mpoly(3), g in small_mpoly(3)) {
            prop_assume!(!g.is_zero());
            let f = &q * &g;
            let back = f.exact_divide(&g).unwrap();
            prop_assert_eq!(&(&back * &g), &f);
            prop_assert_eq!(back, q);
        }
    }
}
