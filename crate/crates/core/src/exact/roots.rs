//! Exact real-root counting and isolation via Sturm sequences.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::enclosure::Interval;
use super::rational::{simplest_between, Rational};
use super::upoly::UniPoly;
use crate::error::{Error, Result};

/// Sturm sequence `p, p', -rem(p, p'), ...` of a nonzero polynomial.
pub fn sturm_sequence(p: &UniPoly) -> Vec<UniPoly> {
    let mut seq = vec![p.clone()];
    let mut next = p.derivative(1);
    while !next.is_zero() {
        let prev = seq.last().expect("nonempty").clone();
        seq.push(next.clone());
        let (_, r) = prev.div_rem(&next).expect("nonzero divisor");
        next = -r;
    }
    seq
}

fn sign_variations(seq: &[UniPoly], x: &Rational) -> usize {
    let signs: Vec<bool> = seq
        .iter()
        .map(|q| q.eval(x))
        .filter(|v| !v.is_zero())
        .map(|v| v.is_positive())
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Sturm chain of a squarefree polynomial, reusable for many counts.
pub struct SturmChain {
    poly: UniPoly,
    seq: Vec<UniPoly>,
}

impl SturmChain {
    pub fn new(squarefree: &UniPoly) -> Self {
        SturmChain { poly: squarefree.clone(), seq: sturm_sequence(squarefree) }
    }

    pub fn poly(&self) -> &UniPoly {
        &self.poly
    }

    /// Distinct roots in the half-open interval `(a, b]`.
    pub fn count_half_open(&self, a: &Rational, b: &Rational) -> usize {
        if a >= b {
            return 0;
        }
        sign_variations(&self.seq, a) - sign_variations(&self.seq, b)
    }

    /// Distinct roots in the closed interval `[a, b]`.
    pub fn count_closed(&self, a: &Rational, b: &Rational) -> usize {
        let at_a = usize::from(self.poly.eval(a).is_zero());
        self.count_half_open(a, b) + at_a
    }

    /// Distinct roots in the open interval `(a, b)`.
    pub fn count_open(&self, a: &Rational, b: &Rational) -> usize {
        let at_b = usize::from(self.poly.eval(b).is_zero());
        self.count_half_open(a, b) - at_b
    }
}

/// Location of one real root of a squarefree polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RootLoc {
    /// The root is this rational number.
    Exact(Rational),
    /// Exactly one root lies in the open interval `(lo, hi)` and neither
    /// endpoint is a root.
    Open(Rational, Rational),
}

impl RootLoc {
    pub fn lo(&self) -> &Rational {
        match self {
            RootLoc::Exact(r) => r,
            RootLoc::Open(lo, _) => lo,
        }
    }

    pub fn hi(&self) -> &Rational {
        match self {
            RootLoc::Exact(r) => r,
            RootLoc::Open(_, hi) => hi,
        }
    }

    pub fn width(&self) -> Rational {
        self.hi() - self.lo()
    }
}

/// Isolates the distinct real roots of `p` in the closed interval `s`,
/// sorted increasingly.
pub fn isolate_roots(p: &UniPoly, s: &Interval) -> Result<Vec<RootLoc>> {
    let q = p.squarefree_part()?;
    let chain = SturmChain::new(&q);
    let mut out = Vec::new();
    if q.eval(s.lo()).is_zero() {
        out.push(RootLoc::Exact(s.lo().clone()));
    }
    let k = chain.count_half_open(s.lo(), s.hi());
    split(&chain, s.lo().clone(), s.hi().clone(), k, &mut out);
    Ok(out)
}

// Roots in (a, b], k of them, a not counted.
fn split(chain: &SturmChain, a: Rational, b: Rational, k: usize, out: &mut Vec<RootLoc>) {
    if k == 0 {
        return;
    }
    let b_is_root = chain.poly.eval(&b).is_zero();
    if k == 1 && b_is_root {
        out.push(RootLoc::Exact(b));
        return;
    }
    if k == 1 && !chain.poly.eval(&a).is_zero() {
        out.push(RootLoc::Open(a, b));
        return;
    }
    let mid = (&a + &b) / Rational::from_integer(2.into());
    let left = chain.count_half_open(&a, &mid);
    split(chain, a, mid.clone(), left, out);
    split(chain, mid, b, k - left, out);
}

/// Halves an isolating interval, keeping the root inside.
pub fn refine(chain: &SturmChain, loc: &RootLoc) -> RootLoc {
    match loc {
        RootLoc::Exact(_) => loc.clone(),
        RootLoc::Open(a, b) => {
            let mid = (a + b) / Rational::from_integer(2.into());
            let fm = chain.poly.eval(&mid);
            if fm.is_zero() {
                return RootLoc::Exact(mid);
            }
            let fa = chain.poly.eval(a);
            if fa.is_positive() != fm.is_positive() {
                RootLoc::Open(a.clone(), mid)
            } else {
                RootLoc::Open(mid, b.clone())
            }
        }
    }
}

pub fn refine_to_width(chain: &SturmChain, loc: &RootLoc, width: &Rational) -> RootLoc {
    let mut cur = loc.clone();
    while &cur.width() > width {
        cur = refine(chain, &cur);
    }
    cur
}

/// Tries to identify the root in `loc` as a rational number.
///
/// For a primitive integer polynomial with leading coefficient `L`, a
/// rational root has denominator dividing `L`; two such fractions differ by
/// at least `1/L^2`, so after refining below that width the simplest
/// fraction in the interval is the only candidate.
pub fn rationalize(chain: &SturmChain, loc: &RootLoc) -> Option<Rational> {
    if let RootLoc::Exact(r) = loc {
        return Some(r.clone());
    }
    let ints = chain.poly.primitive_integer();
    let lead: BigInt = ints.last()?.abs();
    let bound = Rational::new(BigInt::from(1), &lead * &lead * BigInt::from(2));
    let fine = refine_to_width(chain, loc, &bound);
    if let RootLoc::Exact(r) = fine {
        return Some(r);
    }
    let candidate = simplest_between(fine.lo(), fine.hi());
    chain.poly.eval(&candidate).is_zero().then_some(candidate)
}

/// Number of roots of `p` in the closed interval `s`, counted with multiplicity.
pub fn count_roots_with_multiplicity(p: &UniPoly, s: &Interval) -> Result<usize> {
    let (_, parts) = p.squarefree_decomposition()?;
    Ok(parts
        .iter()
        .map(|(q, mult)| mult * SturmChain::new(q).count_closed(s.lo(), s.hi()))
        .sum())
}

/// Number of roots of `p` in the open interval `(lo, hi)`, with multiplicity.
pub fn count_interior_roots_with_multiplicity(p: &UniPoly, s: &Interval) -> Result<usize> {
    let (_, parts) = p.squarefree_decomposition()?;
    Ok(parts
        .iter()
        .map(|(q, mult)| mult * SturmChain::new(q).count_open(s.lo(), s.hi()))
        .sum())
}

/// Exact test of `p >= 0` on `s`.
///
/// With `p = c * prod q_i^i`, the sign of `p` off its roots is the sign of
/// `c * prod_{i odd} q_i`, a squarefree polynomial that must have no roots
/// strictly inside `s` and be positive there.
pub fn is_nonnegative_on(p: &UniPoly, s: &Interval) -> bool {
    let Ok((content, parts)) = p.squarefree_decomposition() else {
        return true;
    };
    let odd = parts
        .iter()
        .filter(|(_, m)| m % 2 == 1)
        .fold(UniPoly::constant(content), |acc, (q, _)| &acc * q);
    if odd.is_constant() {
        return odd.leading().is_positive();
    }
    let chain = SturmChain::new(&odd);
    if chain.count_open(s.lo(), s.hi()) > 0 {
        return false;
    }
    odd.eval(&s.midpoint()).is_positive()
}

/// Rejects zero input for callers that need a nonzero polynomial.
pub fn require_nonzero(p: &UniPoly) -> Result<()> {
    if p.is_zero() {
        Err(Error::ZeroPolynomial)
    } else {
        Ok(())
    }
}
