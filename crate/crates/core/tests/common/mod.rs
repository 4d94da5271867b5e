#![allow(dead_code)]

use curvehull::exact::rational::rat;
use curvehull::{Rational, UniPoly};
use num_traits::Zero;
use rand::Rng;

/// Small rational with numerator in `-3..=3` and denominator in `1..=3`.
pub fn small_rational<R: Rng>(rng: &mut R) -> Rational {
    rat(rng.gen_range(-3..=3), rng.gen_range(1..=3))
}

/// Strictly decreasing sequence of length `len` with entries at most `max`.
pub fn random_orders<R: Rng>(rng: &mut R, len: usize, max: u32) -> Vec<u32> {
    let mut pool: Vec<u32> = (0..=max).collect();
    let mut picked = Vec::new();
    for _ in 0..len {
        let i = rng.gen_range(0..pool.len());
        picked.push(pool.remove(i));
    }
    picked.sort_unstable_by(|a, b| b.cmp(a));
    picked
}

/// `p_i = t^{m_i} + ` sparse higher-order terms up to degree `top`.
pub fn perturbed_basis<R: Rng>(rng: &mut R, orders: &[u32], top: u32) -> Vec<UniPoly> {
    orders
        .iter()
        .map(|&m| {
            let mut coeffs = vec![Rational::zero(); top as usize + 1];
            coeffs[m as usize] = rat(1, 1);
            for c in coeffs.iter_mut().skip(m as usize + 1) {
                if rng.gen_bool(0.5) {
                    *c = small_rational(rng);
                }
            }
            UniPoly::new(coeffs)
        })
        .collect()
}

/// Random rational in `(0, 1)` with denominator at most `den`.
pub fn unit_point<R: Rng>(rng: &mut R, den: i64) -> Rational {
    let d = rng.gen_range(2..=den);
    rat(rng.gen_range(1..d), d)
}
