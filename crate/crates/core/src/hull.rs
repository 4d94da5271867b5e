//! Ground-truth oracles for convex hulls of curve segments: exact support
//! values, exact LP membership in hulls of finite samples, and a randomized
//! cross-check against an LMI description.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{precondition, Error, Result};
use crate::exact::rational::format_rational;
use crate::exact::roots::{isolate_roots, refine, RootLoc, SturmChain};
use crate::exact::{Enclosure, Interval, Rational, UniPoly};
use crate::sdp::{lmi_membership, BlockLmi};

/// `{(p_1(t), ..., p_n(t)) : t in domain}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveSegment {
    components: Vec<UniPoly>,
    domain: Interval,
}

impl CurveSegment {
    pub fn new(components: Vec<UniPoly>, domain: Interval) -> Result<Self> {
        if components.iter().all(UniPoly::is_constant) {
            return precondition("curve has no nonconstant component");
        }
        Ok(CurveSegment { components, domain })
    }

    /// `(t, t^2, ..., t^n)` on `domain`.
    pub fn moment(n: usize, domain: Interval) -> Result<Self> {
        Self::new((1..=n).map(|k| UniPoly::monomial(k, Rational::one())).collect(), domain)
    }

    pub fn components(&self) -> &[UniPoly] {
        &self.components
    }

    pub fn domain(&self) -> &Interval {
        &self.domain
    }

    pub fn dim(&self) -> usize {
        self.components.len()
    }

    pub fn point(&self, t: &Rational) -> Vec<Rational> {
        self.components.iter().map(|p| p.eval(t)).collect()
    }

    /// `sum_i l_i p_i`
    pub fn functional(&self, l: &[Rational]) -> Result<UniPoly> {
        if l.len() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: l.len() });
        }
        Ok(self.components.iter().zip(l).fold(UniPoly::zero(), |acc, (p, c)| &acc + &p.scale(c)))
    }
}

/// Curve points at `count` equally spaced parameters, endpoints included.
pub fn sample_curve(c: &CurveSegment, count: usize) -> Result<Vec<Vec<Rational>>> {
    if count < 2 {
        return precondition("need at least two samples");
    }
    Ok(c.domain.grid(count).iter().map(|t| c.point(t)).collect())
}

/// Encloses `min_{t in domain} l . c(t)` within `width`.
pub fn support_min_exact(l: &[Rational], c: &CurveSegment, width: &Rational) -> Result<Enclosure> {
    if !width.is_positive() {
        return precondition("width must be positive");
    }
    let phi = c.functional(l)?;
    let s = &c.domain;
    let mut candidates = vec![Enclosure::point(phi.eval(s.lo())), Enclosure::point(phi.eval(s.hi()))];
    let dphi = phi.derivative(1);
    if !dphi.is_zero() {
        let chain = SturmChain::new(&dphi.squarefree_part()?);
        for loc in isolate_roots(&dphi, s)? {
            candidates.push(enclose_value(&phi, &chain, loc, width));
        }
    }
    let lo = candidates.iter().map(|e| e.lo.clone()).min().expect("nonempty");
    let hi = candidates.iter().map(|e| e.hi.clone()).min().expect("nonempty");
    Ok(Enclosure::new(lo, hi))
}

fn enclose_value(phi: &UniPoly, chain: &SturmChain, mut loc: RootLoc, width: &Rational) -> Enclosure {
    loop {
        let e = match &loc {
            RootLoc::Exact(x) => return Enclosure::point(phi.eval(x)),
            RootLoc::Open(a, b) => Enclosure::eval_poly(phi, &Enclosure::new(a.clone(), b.clone())),
        };
        if &e.width() <= width {
            return e;
        }
        loc = refine(chain, &loc);
    }
}

/// Is `x` a convex combination of `points`? Decided by an exact phase-one
/// simplex with Bland's rule.
pub fn finite_hull_membership(points: &[Vec<Rational>], x: &[Rational]) -> Result<bool> {
    if points.is_empty() {
        return precondition("need at least one point");
    }
    if let Some(bad) = points.iter().find(|p| p.len() != x.len()) {
        return Err(Error::DimensionMismatch { expected: x.len(), found: bad.len() });
    }
    // Rows: sum_j lambda_j p_j = x, sum_j lambda_j = 1.
    let mut a: Vec<Vec<Rational>> = (0..x.len())
        .map(|i| points.iter().map(|p| p[i].clone()).collect())
        .collect();
    a.push(vec![Rational::one(); points.len()]);
    let mut rhs: Vec<Rational> = x.to_vec();
    rhs.push(Rational::one());
    Ok(phase_one_feasible(a, rhs))
}

/// Feasibility of `A y = b, y >= 0`.
fn phase_one_feasible(a: Vec<Vec<Rational>>, rhs: Vec<Rational>) -> bool {
    let m = a.len();
    let nvars = a[0].len();
    let total = nvars + m;
    // Tableau columns: original variables, then artificials, then rhs.
    let mut tab: Vec<Vec<Rational>> = a
        .into_iter()
        .zip(rhs)
        .enumerate()
        .map(|(i, (mut row, b))| {
            let flip = b.is_negative();
            if flip {
                row.iter_mut().for_each(|v| *v = -v.clone());
            }
            row.extend((0..m).map(|k| if k == i { Rational::one() } else { Rational::zero() }));
            row.push(if flip { -b } else { b });
            row
        })
        .collect();
    let mut basis: Vec<usize> = (nvars..total).collect();
    loop {
        // Reduced costs of minimizing the sum of artificials.
        let entering = (0..total).find(|&j| {
            if basis.contains(&j) {
                return false;
            }
            let cost = if j >= nvars { Rational::one() } else { Rational::zero() };
            let dual: Rational = (0..m).filter(|&r| basis[r] >= nvars).map(|r| tab[r][j].clone()).sum();
            (cost - dual).is_negative()
        });
        let Some(j) = entering else { break };
        let leaving = (0..m)
            .filter(|&r| tab[r][j].is_positive())
            .map(|r| (&tab[r][total] / &tab[r][j], basis[r], r))
            .min_by(|x, y| x.0.cmp(&y.0).then(x.1.cmp(&y.1)));
        let Some((_, _, r)) = leaving else { break };
        pivot(&mut tab, r, j);
        basis[r] = j;
    }
    (0..m).filter(|&r| basis[r] >= nvars).all(|r| tab[r][total].is_zero())
}

fn pivot(tab: &mut [Vec<Rational>], r: usize, c: usize) {
    let inv = tab[r][c].recip();
    tab[r].iter_mut().for_each(|v| *v *= &inv);
    let pivot_row = tab[r].clone();
    for (i, row) in tab.iter_mut().enumerate() {
        if i == r || row[c].is_zero() {
            continue;
        }
        let f = row[c].clone();
        for (v, p) in row.iter_mut().zip(&pivot_row) {
            *v -= &f * p;
        }
    }
}

/// One row of the support comparison.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SupportRow {
    pub l: Vec<String>,
    pub curve_enclosure: Enclosure,
    pub lmi_enclosure: Enclosure,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrossValidation {
    pub trials: usize,
    pub hull_members: usize,
    pub lmi_members: usize,
    pub failures: Vec<String>,
    pub support_table: Vec<SupportRow>,
    /// The LMI-side support value is only bounded from above by verified
    /// members found along the curve.
    pub lmi_support_one_sided: bool,
}

fn random_rational<R: Rng>(rng: &mut R, lo: &Rational, hi: &Rational) -> Rational {
    let k: i64 = rng.gen_range(0..=1000);
    lo + (hi - lo) * Rational::new(BigInt::from(k), BigInt::from(1000))
}

/// Minimizer of `phi` over curve points found by a grid scan and bisection
/// on the sign of `phi'`, returned as a parameter value.
fn curve_search(phi: &UniPoly, s: &Interval, width: &Rational) -> Rational {
    let grid = s.grid(65);
    let best = grid.iter().min_by(|a, b| phi.eval(a).cmp(&phi.eval(b))).expect("nonempty").clone();
    let dphi = phi.derivative(1);
    let step = s.width() / Rational::from_integer(64.into());
    let mut best_t = best.clone();
    let mut best_v = phi.eval(&best);
    for (a, b) in [(&best - &step, best.clone()), (best.clone(), &best + &step)] {
        let a = a.max(s.lo().clone());
        let b = b.min(s.hi().clone());
        if a >= b || dphi.eval(&a).is_positive() == dphi.eval(&b).is_positive() {
            continue;
        }
        let (mut lo, mut hi) = (a, b);
        let target = width * width;
        while hi.clone() - &lo > target {
            let mid = (&lo + &hi) / Rational::from_integer(2.into());
            if dphi.eval(&mid).is_negative() == dphi.eval(&lo).is_negative() {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        for t in [lo, hi] {
            let v = phi.eval(&t);
            if v < best_v {
                best_v = v;
                best_t = t;
            }
        }
    }
    best_t
}

/// LMI-side support bound: bisection on `gamma` where feasibility of
/// `{x : lmi(x) >= 0, l . x <= gamma}` is witnessed by curve points that
/// pass the exact membership test.
pub fn lmi_support_enclosure(
    l: &[Rational],
    c: &CurveSegment,
    lmi: &BlockLmi,
    below: &Rational,
    width: &Rational,
) -> Result<Enclosure> {
    let phi = c.functional(l)?;
    let t = curve_search(&phi, &c.domain, width);
    let witness = c.point(&t);
    if !lmi_membership(lmi, &witness)? {
        return precondition("curve point outside the LMI set");
    }
    let value = phi.eval(&t);
    let feasible = |gamma: &Rational| &value <= gamma;
    let mut lo = below.clone().min(&value - width);
    let mut hi = phi.eval(c.domain.lo()).max(value.clone());
    while &(&hi - &lo) > width {
        let mid = (&lo + &hi) / Rational::from_integer(2.into());
        if feasible(&mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(Enclosure::new(lo, hi))
}

/// Randomized comparison of the sample hull, the LMI set and the support
/// functions of a moment curve.
pub fn cross_validate(
    c: &CurveSegment,
    lmi: &BlockLmi,
    trials: usize,
    seed: u64,
    width: &Rational,
) -> Result<CrossValidation> {
    if c.dim() != lmi.n {
        return Err(Error::DimensionMismatch { expected: lmi.n, found: c.dim() });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let samples = sample_curve(c, 21)?;
    let lows: Vec<Rational> = (0..c.dim()).map(|i| samples.iter().map(|p| p[i].clone()).min().expect("nonempty")).collect();
    let highs: Vec<Rational> = (0..c.dim()).map(|i| samples.iter().map(|p| p[i].clone()).max().expect("nonempty")).collect();
    let mut report = CrossValidation {
        trials,
        hull_members: 0,
        lmi_members: 0,
        failures: Vec::new(),
        support_table: Vec::new(),
        lmi_support_one_sided: true,
    };
    for trial in 0..trials {
        let x: Vec<Rational> = match trial % 3 {
            // Random convex combination of three samples.
            0 => {
                let w: Vec<Rational> = (0..3).map(|_| Rational::from_integer(rng.gen_range(1..=1000).into())).collect();
                let total: Rational = w.iter().sum();
                let picks: Vec<&Vec<Rational>> = (0..3).map(|_| &samples[rng.gen_range(0..samples.len())]).collect();
                (0..c.dim()).map(|i| picks.iter().zip(&w).map(|(p, wk)| &p[i] * wk).sum::<Rational>() / &total).collect()
            }
            // Uniform point of the bounding box.
            1 => (0..c.dim()).map(|i| random_rational(&mut rng, &lows[i], &highs[i])).collect(),
            // A sample nudged in one coordinate.
            _ => {
                let mut p = samples[rng.gen_range(0..samples.len())].clone();
                let i = rng.gen_range(0..c.dim());
                p[i] += Rational::new(BigInt::from(rng.gen_range(-50..=50)), BigInt::from(1000));
                p
            }
        };
        let in_hull = finite_hull_membership(&samples, &x)?;
        let in_lmi = lmi_membership(lmi, &x)?;
        report.hull_members += usize::from(in_hull);
        report.lmi_members += usize::from(in_lmi);
        if in_hull && !in_lmi {
            let shown: Vec<String> = x.iter().map(format_rational).collect();
            report.failures.push(format!("sample-hull member outside LMI set: ({})", shown.join(", ")));
        }

        let l: Vec<Rational> = (0..c.dim()).map(|_| Rational::from_integer(rng.gen_range(-5..=5).into())).collect();
        let curve_enclosure = support_min_exact(&l, c, width)?;
        let lmi_enclosure = lmi_support_enclosure(&l, c, lmi, &curve_enclosure.lo, width)?;
        if !curve_enclosure.intersects(&lmi_enclosure.widened(width)) {
            let shown: Vec<String> = l.iter().map(format_rational).collect();
            report.failures.push(format!("support enclosures disagree for l = ({})", shown.join(", ")));
        }
        report.support_table.push(SupportRow {
            l: l.iter().map(format_rational).collect(),
            curve_enclosure,
            lmi_enclosure,
        });
    }
    Ok(report)
}
