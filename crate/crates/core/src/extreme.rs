//! Linear systems `V` of univariate polynomials, their vanishing-order
//! profiles, the determinantal candidates for extreme rays of the cone of
//! polynomials in `V` nonnegative on an interval, and supporting faces.

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::diagonal::{build_m, vandermonde_cofactor, BlockPartition};
use crate::error::{precondition, Error, Result};
use crate::exact::linalg::{det, kernel, laplace_det, rank, rref, solve_combination};
use crate::exact::mpoly::{mono_properly_divides, Exponent};
use crate::exact::rational::format_rational;
use crate::exact::roots::{
    count_interior_roots_with_multiplicity, count_roots_with_multiplicity, is_nonnegative_on, isolate_roots,
    rationalize, refine_to_width, RootLoc, SturmChain,
};
use crate::exact::{Enclosure, Interval, MultiPoly, Rational, UniPoly};
use crate::schur::{schur_via_tableaux, DecreasingSeq};

/// A basis of `V` adapted to a base point `xi`: `p_i = (t - xi)^{m_i} + `
/// higher-order terms, with `m` strictly decreasing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearSystem {
    basis: Vec<UniPoly>,
    base_point: Rational,
    orders: DecreasingSeq,
    stripped: usize,
}

impl LinearSystem {
    pub fn basis(&self) -> &[UniPoly] {
        &self.basis
    }

    pub fn base_point(&self) -> &Rational {
        &self.base_point
    }

    pub fn orders(&self) -> &DecreasingSeq {
        &self.orders
    }

    /// Power of `(t - xi)` divided out of the input basis.
    pub fn stripped(&self) -> usize {
        self.stripped
    }

    /// `dim V = n + 1`.
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// The basis in the local coordinate `t - xi`.
    pub fn local_basis(&self) -> Vec<UniPoly> {
        self.basis.iter().map(|p| p.taylor_shift(&self.base_point)).collect()
    }

    /// Coordinates of `f` in the basis.
    pub fn coordinates(&self, f: &UniPoly) -> Result<Vec<Rational>> {
        coordinates_in(&self.basis, f)
    }

    pub fn combination(&self, coords: &[Rational]) -> UniPoly {
        combine(&self.basis, coords)
    }
}

fn coefficient_columns(polys: &[UniPoly], len: usize) -> Vec<Vec<Rational>> {
    polys.iter().map(|p| (0..len).map(|k| p.coeff(k)).collect()).collect()
}

fn coordinates_in(basis: &[UniPoly], f: &UniPoly) -> Result<Vec<Rational>> {
    let len = basis.iter().chain(std::iter::once(f)).filter_map(UniPoly::degree).max().unwrap_or(0) + 1;
    let cols = coefficient_columns(basis, len);
    let target: Vec<Rational> = (0..len).map(|k| f.coeff(k)).collect();
    solve_combination(&cols, &target).ok_or(Error::NotInSpan)
}

fn combine(basis: &[UniPoly], coords: &[Rational]) -> UniPoly {
    basis.iter().zip(coords).fold(UniPoly::zero(), |acc, (p, c)| &acc + &p.scale(c))
}

/// Triangularizes `basis` at `xi` so vanishing orders are strictly
/// decreasing with unit leading Taylor coefficients, and divides out the
/// common factor `(t - xi)^e` if `xi` is a base point.
pub fn profile_and_normalize(basis: &[UniPoly], xi: &Rational) -> Result<LinearSystem> {
    if basis.is_empty() {
        return precondition("empty basis");
    }
    let local: Vec<UniPoly> = basis.iter().map(|p| p.taylor_shift(xi)).collect();
    let len = local.iter().filter_map(UniPoly::degree).max().unwrap_or(0) + 1;
    let rows: Vec<Vec<Rational>> = local.iter().map(|p| (0..len).map(|k| p.coeff(k)).collect()).collect();
    // Columns in increasing order, so each pivot is a row's lowest order.
    let (reduced, pivots) = rref(&rows);
    if pivots.len() < basis.len() {
        return Err(Error::LinearlyDependent);
    }
    let e = pivots[0];
    let mut out: Vec<(usize, UniPoly)> = reduced
        .into_iter()
        .zip(&pivots)
        .map(|(row, &m)| (m - e, UniPoly::new(row[e..].to_vec())))
        .collect();
    out.sort_by_key(|(m, _)| std::cmp::Reverse(*m));
    let orders = DecreasingSeq::new(out.iter().map(|(m, _)| *m as u32).collect())?;
    let neg = -xi.clone();
    Ok(LinearSystem {
        basis: out.into_iter().map(|(_, p)| p.taylor_shift(&neg)).collect(),
        base_point: xi.clone(),
        orders,
        stripped: e,
    })
}

/// `{p in V : p(point) = 0}`, renormalized at the same base point.
pub fn vanishing_subsystem(v: &LinearSystem, point: &Rational) -> Result<LinearSystem> {
    let rows = vec![v.basis.iter().map(|p| p.eval(point)).collect::<Vec<_>>()];
    let ker = kernel(&rows, v.dim());
    if ker.is_empty() {
        return precondition("subsystem is zero");
    }
    let sub: Vec<UniPoly> = ker.iter().map(|c| v.combination(c)).collect();
    profile_and_normalize(&sub, &v.base_point)
}

/// Distinct points `xi_1 < ... < xi_r` with positive multiplicities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZeroPattern {
    points: Vec<Rational>,
    mults: Vec<usize>,
}

impl ZeroPattern {
    pub fn new(points: Vec<Rational>, mults: Vec<usize>) -> Result<Self> {
        if points.len() != mults.len() {
            return Err(Error::DimensionMismatch { expected: points.len(), found: mults.len() });
        }
        if mults.contains(&0) {
            return precondition("multiplicities must be positive");
        }
        let mut pairs: Vec<(Rational, usize)> = points.into_iter().zip(mults).collect();
        pairs.sort_by(|a, b| a.0.cmp(&b.0));
        if pairs.windows(2).any(|w| w[0].0 == w[1].0) {
            return precondition("points must be pairwise distinct");
        }
        let (points, mults) = pairs.into_iter().unzip();
        Ok(ZeroPattern { points, mults })
    }

    pub fn points(&self) -> &[Rational] {
        &self.points
    }

    pub fn mults(&self) -> &[usize] {
        &self.mults
    }

    pub fn total(&self) -> usize {
        self.mults.iter().sum()
    }

    /// All multiplicities even and all points inside the open interval.
    pub fn is_even_interior(&self, s: &Interval) -> bool {
        self.mults.iter().all(|m| m % 2 == 0) && self.points.iter().all(|x| s.contains_interior(x))
    }
}

/// Rows `(p_j^(k)(x_i))_j` for each point and `k < mult_i`.
pub fn confluent_rows(basis: &[UniPoly], points: &[Rational], mults: &[usize]) -> Vec<Vec<Rational>> {
    let mut rows = Vec::new();
    for (x, &b) in points.iter().zip(mults) {
        for k in 0..b {
            rows.push(basis.iter().map(|p| p.derivative(k).eval(x)).collect());
        }
    }
    rows
}

/// Matrix with the symbolic row `(p_0, ..., p_n)` on top of the derivative
/// rows at the pattern points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZMatrix {
    pub top: Vec<UniPoly>,
    pub rows: Vec<Vec<Rational>>,
}

pub fn build_z(v: &LinearSystem, zp: &ZeroPattern) -> Result<ZMatrix> {
    let n = v.dim() - 1;
    if zp.total() != n {
        return Err(Error::DimensionMismatch { expected: n, found: zp.total() });
    }
    Ok(ZMatrix { top: v.basis.clone(), rows: confluent_rows(&v.basis, &zp.points, &zp.mults) })
}

impl ZMatrix {
    /// Expands the determinant along the symbolic row.
    pub fn det(&self) -> UniPoly {
        let size = self.top.len();
        (0..size).fold(UniPoly::zero(), |acc, j| {
            let minor: Vec<Vec<Rational>> = self
                .rows
                .iter()
                .map(|r| r.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, x)| x.clone()).collect())
                .collect();
            let mut c = det(&minor);
            if j % 2 == 1 {
                c = -c;
            }
            &acc + &self.top[j].scale(&c)
        })
    }
}

/// Lowest-order nonzero Taylor coefficient of `f` at `x`.
fn lowest_taylor_coefficient(f: &UniPoly, x: &Rational) -> Rational {
    let local = f.taylor_shift(x);
    local.coeffs().iter().find(|c| !c.is_zero()).cloned().unwrap_or_else(Rational::zero)
}

/// `det Z`, scaled to be positive just to the right of the base point.
/// Returns the zero polynomial when the pattern does not cut out a line.
pub fn extreme_candidate(v: &LinearSystem, zp: &ZeroPattern) -> Result<UniPoly> {
    let f = build_z(v, zp)?.det();
    if lowest_taylor_coefficient(&f, &v.base_point).is_negative() {
        Ok(-f)
    } else {
        Ok(f)
    }
}

/// `dim {f in V : ord_{xi_i}(f) >= b_i for all i}`.
pub fn vanishing_space_dim(v: &LinearSystem, zp: &ZeroPattern) -> usize {
    let rows = confluent_rows(&v.basis, &zp.points, &zp.mults);
    v.dim() - if rows.is_empty() { 0 } else { rank(&rows) }
}

/// The face `V_f = {g in V : ord_rho(g) >= ord_rho(f) at every zero rho of f in s}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub dim: usize,
    /// `None` when the face is cut out by conditions at irrational zeros
    /// that are not implied by a rational divisor.
    pub basis: Option<Vec<UniPoly>>,
    /// Rational polynomial every element of `V_f` is divisible by.
    pub divisor: UniPoly,
    pub irrational_conditions: usize,
}

struct Mixed {
    rest: UniPoly,
    mult: usize,
    chain: SturmChain,
    roots: Vec<RootLoc>,
}

/// Elements of `span(basis)` divisible by `d`.
fn divisible_subspace(basis: &[UniPoly], d: &UniPoly) -> Vec<UniPoly> {
    if d.is_constant() {
        return basis.to_vec();
    }
    let deg = d.degree().expect("nonzero divisor");
    let rems: Vec<UniPoly> = basis.iter().map(|p| p.div_rem(d).expect("nonzero").1).collect();
    let rows: Vec<Vec<Rational>> = (0..deg).map(|k| rems.iter().map(|r| r.coeff(k)).collect()).collect();
    kernel(&rows, basis.len()).iter().map(|c| combine(basis, c)).collect()
}

/// Computes `V_f`. Conditions at rational zeros, and at irrational zeros
/// whose squarefree factor lies entirely in `s`, are divisibility by a
/// rational polynomial. Remaining irrational zeros are handled by certifying
/// the rank of their condition matrix with interval arithmetic.
pub fn supporting_face(v: &LinearSystem, f: &UniPoly, s: &Interval) -> Result<Face> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    v.coordinates(f)?;
    let (_, parts) = f.squarefree_decomposition()?;
    let mut divisor = UniPoly::one();
    let mut mixed = Vec::new();
    for (q, mult) in parts {
        let chain = SturmChain::new(&q);
        let mut rest = q.clone();
        let mut irrational = Vec::new();
        for loc in isolate_roots(&q, s)? {
            match rationalize(&chain, &loc) {
                Some(r) => {
                    let lin = UniPoly::linear_root(&r);
                    divisor = &divisor * &lin.pow(mult);
                    rest = rest.exact_div(&lin)?;
                }
                None => irrational.push(loc),
            }
        }
        if irrational.is_empty() {
            continue;
        }
        let deg = rest.degree().unwrap_or(0);
        let all_inside = SturmChain::new(&rest).count_closed(s.lo(), s.hi()) == deg;
        if all_inside {
            divisor = &divisor * &rest.pow(mult);
        } else {
            mixed.push(Mixed { rest, mult, chain, roots: irrational });
        }
    }
    let w_rat = divisible_subspace(&v.basis, &divisor);
    if mixed.is_empty() {
        return Ok(Face { dim: w_rat.len(), basis: Some(w_rat), divisor, irrational_conditions: 0 });
    }
    let full = mixed.iter().fold(divisor.clone(), |acc, m| &acc * &m.rest.pow(m.mult));
    let w_full = divisible_subspace(&w_rat, &full);
    let conditions: usize = mixed.iter().map(|m| m.mult * m.roots.len()).sum();
    let target = w_rat.len() - w_full.len();
    let upper = conditions.min(target);
    if !certify_rank(&w_rat, &mixed, s, upper) {
        return Err(Error::Undetermined);
    }
    let basis = (upper == target).then_some(w_full);
    Ok(Face { dim: w_rat.len() - upper, basis, divisor, irrational_conditions: conditions })
}

// Looks for a `k x k` minor of the interval condition matrix that excludes
// zero, refining the root enclosures between attempts.
fn certify_rank(w: &[UniPoly], mixed: &[Mixed], s: &Interval, k: usize) -> bool {
    if k == 0 {
        return true;
    }
    let mut width = s.width();
    for _ in 0..8 {
        width /= Rational::from_integer(1024.into());
        let mut rows: Vec<Vec<Enclosure>> = Vec::new();
        for m in mixed {
            for loc in &m.roots {
                let fine = refine_to_width(&m.chain, loc, &width);
                let x = Enclosure::new(fine.lo().clone(), fine.hi().clone());
                for order in 0..m.mult {
                    rows.push(w.iter().map(|g| Enclosure::eval_poly(&g.derivative(order), &x)).collect());
                }
            }
        }
        if has_nonsingular_minor(&rows, w.len(), k) {
            return true;
        }
    }
    false
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..(1 << n))
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (0..n).filter(|i| m & (1 << i) != 0).collect())
        .collect()
}

fn has_nonsingular_minor(rows: &[Vec<Enclosure>], ncols: usize, k: usize) -> bool {
    let zero = Enclosure::point(Rational::zero());
    let one = Enclosure::point(Rational::one());
    let col_sets = subsets(ncols, k);
    subsets(rows.len(), k).iter().any(|rs| {
        col_sets.iter().any(|cs| {
            let minor: Vec<Vec<Enclosure>> =
                rs.iter().map(|&r| cs.iter().map(|&c| rows[r][c].clone()).collect()).collect();
            !laplace_det(&minor, &zero, &one).contains_zero()
        })
    })
}

/// Basis of `V_f`.
pub fn supporting_face_basis(v: &LinearSystem, f: &UniPoly, s: &Interval) -> Result<Vec<UniPoly>> {
    supporting_face(v, f, s)?.basis.ok_or(Error::IrrationalFace)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtremeReport {
    pub nonneg: bool,
    /// Zeros in the open interval, with multiplicity.
    pub zero_count: usize,
    /// Zeros in the closed interval, with multiplicity.
    pub zeros_in_s: usize,
    pub face_dim: usize,
    pub extreme: bool,
    pub positive_endpoints: bool,
    /// An extreme ray has at least `n` zeros in `s`.
    pub lower_bound_holds: bool,
    /// With positive endpoint values an extreme ray has exactly `n` interior
    /// zeros. `None` when that case does not apply.
    pub exact_count_holds: Option<bool>,
}

pub fn verify_extreme(v: &LinearSystem, f: &UniPoly, s: &Interval) -> Result<ExtremeReport> {
    v.coordinates(f)?;
    let n = v.dim() - 1;
    let nonneg = is_nonnegative_on(f, s);
    let zero_count = count_interior_roots_with_multiplicity(f, s)?;
    let zeros_in_s = count_roots_with_multiplicity(f, s)?;
    let face_dim = supporting_face(v, f, s)?.dim;
    let extreme = nonneg && face_dim == 1;
    let positive_endpoints = f.eval(s.lo()).is_positive() && f.eval(s.hi()).is_positive();
    Ok(ExtremeReport {
        nonneg,
        zero_count,
        zeros_in_s,
        face_dim,
        extreme,
        positive_endpoints,
        lower_bound_holds: !extreme || zeros_in_s >= n,
        exact_count_holds: (extreme && positive_endpoints).then_some(zero_count == n),
    })
}

/// Sign of the determinant of the confluent evaluation matrix.
pub fn chebyshev_det_sign(v: &LinearSystem, points: &[Rational], mults: &[usize], s: &Interval) -> Result<i8> {
    let zp = ZeroPattern::new(points.to_vec(), mults.to_vec())?;
    if zp.total() != v.dim() {
        return Err(Error::DimensionMismatch { expected: v.dim(), found: zp.total() });
    }
    if let Some(x) = zp.points.iter().find(|x| !s.contains(x) || *x == &v.base_point) {
        return precondition(format!("point {} must lie in the interval and differ from the base point", format_rational(x)));
    }
    let d = det(&confluent_rows(&v.basis, &zp.points, &zp.mults));
    Ok(if d.is_positive() {
        1
    } else if d.is_negative() {
        -1
    } else {
        0
    })
}

/// Where a sampled positivity condition failed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SampleFailure {
    pub blocks: Vec<usize>,
    pub monomial: Exponent,
    pub point: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IntervalReport {
    pub base_point_at_lo: bool,
    /// No common zero of the basis in `s`.
    pub s0: bool,
    /// `t - xi >= 0` on `s`.
    pub s2: bool,
    /// Every `1 + g_alpha` positive at all sampled configurations.
    pub s1_sampled: bool,
    pub s1_exhaustive: bool,
    pub configurations: usize,
    pub failure: Option<SampleFailure>,
}

impl IntervalReport {
    pub fn passed(&self) -> bool {
        self.base_point_at_lo && self.s0 && self.s2 && self.s1_sampled
    }
}

/// Splits the Vandermonde cofactor `G` of the local basis as
/// `sum_alpha c_alpha t^alpha (1 + g_alpha)` over the monomials of
/// `sigma_m`; each other monomial of `G` goes to the first `alpha` that
/// properly divides it.
pub fn cofactor_decomposition(v: &LinearSystem) -> Result<Vec<(Exponent, Rational, MultiPoly)>> {
    let local = v.local_basis();
    let g = vandermonde_cofactor(&build_m(&local).det())?;
    let sigma = schur_via_tableaux(&v.orders);
    let arity = v.dim();
    let mut parts: Vec<(Exponent, Rational, MultiPoly)> =
        sigma.terms().map(|(e, c)| (e.clone(), c.clone(), MultiPoly::one(arity))).collect();
    for (e, c) in g.terms() {
        if let Some((_, ca, _)) = parts.iter().find(|(a, _, _)| a == e) {
            if ca != c {
                return precondition("basis is not normalized at the base point");
            }
            continue;
        }
        let Some(part) = parts.iter_mut().find(|(a, _, _)| mono_properly_divides(a, e)) else {
            return precondition("cofactor term outside the Schur ideal");
        };
        let shift: Exponent = e.iter().zip(&part.0).map(|(x, y)| x - y).collect();
        let term = MultiPoly::monomial(shift, c / &part.1);
        part.2 = &part.2 + &term;
    }
    Ok(parts)
}

/// Checks the conditions on `s` under which extreme rays with positive
/// endpoint values have exactly `n` zeros. The positivity condition is only
/// sampled on a grid of `samples` points per coordinate.
pub fn validate_interval(v: &LinearSystem, s: &Interval, samples: usize) -> Result<IntervalReport> {
    let xi = &v.base_point;
    let common = v.basis.iter().fold(UniPoly::zero(), |acc, p| acc.gcd(p));
    let s0 = common.is_constant() || count_roots_with_multiplicity(&common, s)? == 0;
    let s2 = s.lo() >= xi;
    let grid: Vec<Rational> = match samples {
        0 | 1 => vec![s.midpoint() - xi],
        k => s.grid(k).into_iter().map(|x| x - xi).collect(),
    };
    let parts = cofactor_decomposition(v)?;
    let mut configurations = 0;
    let mut failure = None;
    'outer: for b in BlockPartition::compositions(v.dim()) {
        let collapsed: Vec<(Exponent, MultiPoly)> = parts
            .iter()
            .map(|(a, _, g)| Ok((a.clone(), g.collapse(b.sizes())?)))
            .collect::<Result<_>>()?;
        let r = b.sizes().len();
        let mut idx = vec![0usize; r];
        loop {
            let point: Vec<Rational> = idx.iter().map(|&i| grid[i].clone()).collect();
            configurations += 1;
            for (a, g) in &collapsed {
                if !g.eval(&point)?.is_positive() {
                    failure = Some(SampleFailure {
                        blocks: b.sizes().to_vec(),
                        monomial: a.clone(),
                        point: point.iter().map(|x| format_rational(&(x + xi))).collect(),
                    });
                    break 'outer;
                }
            }
            let Some(pos) = idx.iter().position(|&i| i + 1 < grid.len()) else { break };
            idx[pos] += 1;
            for i in idx.iter_mut().take(pos) {
                *i = 0;
            }
        }
    }
    Ok(IntervalReport {
        base_point_at_lo: s.lo() == xi,
        s0,
        s2,
        s1_sampled: failure.is_none(),
        s1_exhaustive: false,
        configurations,
        failure,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::parse::parse_unipoly_list;
    use crate::exact::rational::{int, rat};

    fn sys(src: &str, xi: Rational) -> LinearSystem {
        profile_and_normalize(&parse_unipoly_list(src).unwrap(), &xi).unwrap()
    }

    fn p(s: &str) -> UniPoly {
        UniPoly::parse(s).unwrap()
    }

    fn unit() -> Interval {
        Interval::new(int(0), int(1)).unwrap()
    }

    #[test]
    fn normalization_examples() {
        let v = sys("1, t, t^2", int(0));
        assert_eq!(v.orders().entries(), &[2, 1, 0]);
        assert_eq!(v.basis(), &parse_unipoly_list("t^2, t, 1").unwrap()[..]);

        let w = sys("1+t, 1-t, t^2", int(0));
        assert_eq!(w.orders().entries(), &[2, 1, 0]);
        assert_eq!(w.basis(), &parse_unipoly_list("t^2, t, 1").unwrap()[..]);

        let stripped = sys("t, t^2", int(0));
        assert_eq!(stripped.orders().entries(), &[1, 0]);
        assert_eq!(stripped.basis(), &parse_unipoly_list("t, 1").unwrap()[..]);
        assert_eq!(stripped.stripped(), 1);

        assert_eq!(profile_and_normalize(&parse_unipoly_list("t, 2*t").unwrap(), &int(0)), Err(Error::LinearlyDependent));
    }

    #[test]
    fn normalization_at_shifted_point() {
        let v = sys("1, t, t^2", rat(1, 2));
        assert_eq!(v.basis()[0], p("(t-1/2)^2"));
        assert_eq!(v.basis()[1], p("t-1/2"));
        assert_eq!(v.local_basis(), parse_unipoly_list("t^2, t, 1").unwrap());
    }

    #[test]
    fn z_matrix_examples() {
        let v = sys("t^2, t, 1", int(0));
        let z = build_z(&v, &ZeroPattern::new(vec![rat(1, 2)], vec![2]).unwrap()).unwrap();
        assert_eq!(z.rows, vec![vec![rat(1, 4), rat(1, 2), int(1)], vec![int(1), int(1), int(0)]]);
        assert_eq!(z.det(), -p("(t-1/2)^2"));
        let z0 = build_z(&v, &ZeroPattern::new(vec![int(0)], vec![2]).unwrap()).unwrap();
        assert_eq!(z0.rows, vec![vec![int(0), int(0), int(1)], vec![int(0), int(1), int(0)]]);
        assert!(build_z(&v, &ZeroPattern::new(vec![int(0)], vec![3]).unwrap()).is_err());
    }

    #[test]
    fn candidate_examples() {
        let v = sys("t^2, t, 1", int(0));
        let zp = |pts: Vec<Rational>, m: Vec<usize>| ZeroPattern::new(pts, m).unwrap();
        assert_eq!(extreme_candidate(&v, &zp(vec![rat(1, 2)], vec![2])).unwrap(), p("(t-1/2)^2"));
        assert_eq!(extreme_candidate(&v, &zp(vec![int(0)], vec![2])).unwrap(), p("t^2"));

        let moment = sys("t^4, t^3, t^2, t, 1", int(0));
        let f = extreme_candidate(&moment, &zp(vec![rat(1, 3), rat(2, 3)], vec![2, 2])).unwrap();
        let g = p("(t-1/3)^2*(t-2/3)^2");
        assert!(!f.is_zero());
        assert_eq!(f.monic(), g);
        assert!(f.leading().is_positive());
    }

    #[test]
    fn face_examples() {
        let v = sys("t^2, t, 1", int(0));
        let f = p("(t-1/2)^2");
        let face = supporting_face_basis(&v, &f, &unit()).unwrap();
        assert_eq!(face.len(), 1);
        assert_eq!(face[0].monic(), f);
        assert_eq!(supporting_face_basis(&v, &p("1"), &unit()).unwrap().len(), 3);
        let moment = sys("t^4, t^3, t^2, t, 1", int(0));
        assert_eq!(supporting_face(&moment, &p("(t-1/3)^2*(t-2/3)^2"), &unit()).unwrap().dim, 1);
        assert_eq!(supporting_face(&v, &UniPoly::zero(), &unit()), Err(Error::ZeroPolynomial));
        assert_eq!(supporting_face(&v, &p("t^3"), &unit()), Err(Error::NotInSpan));
    }

    #[test]
    fn face_with_irrational_zeros() {
        let moment = sys("t^4, t^3, t^2, t, 1", int(0));
        let s = Interval::new(int(-2), int(2)).unwrap();
        // Both roots of t^2 - 2 lie in s, so the divisor is rational.
        let f = p("(t^2-2)^2");
        let face = supporting_face(&moment, &f, &s).unwrap();
        assert_eq!(face.dim, 1);
        assert_eq!(face.basis.unwrap()[0].monic(), f);
        // Only sqrt(2) lies in [0, 3/2]: two real conditions on a 5-dim space,
        // with no rational basis for the kernel.
        let half = Interval::new(int(0), rat(3, 2)).unwrap();
        let face = supporting_face(&moment, &f, &half).unwrap();
        assert_eq!(face.dim, 3);
        assert_eq!(face.irrational_conditions, 2);
        assert!(face.basis.is_none());
        assert_eq!(supporting_face_basis(&moment, &f, &half), Err(Error::IrrationalFace));
    }

    #[test]
    fn verify_examples() {
        let v = sys("t^2, t, 1", int(0));
        let r = verify_extreme(&v, &p("(t-1/2)^2"), &unit()).unwrap();
        assert!(r.nonneg && r.extreme);
        assert_eq!((r.zero_count, r.face_dim), (2, 1));
        assert_eq!(r.exact_count_holds, Some(true));
        let one = verify_extreme(&v, &p("1"), &unit()).unwrap();
        assert!(one.nonneg && !one.extreme);
        assert_eq!((one.zero_count, one.face_dim), (0, 3));
        assert_eq!(verify_extreme(&v, &p("(t-1/2)^2*(1/10+t)"), &unit()), Err(Error::NotInSpan));
    }

    #[test]
    fn chebyshev_examples() {
        let v = sys("t^2, t, 1", int(0));
        let s = unit();
        let sign = chebyshev_det_sign(&v, &[rat(1, 4), rat(1, 2), rat(3, 4)], &[1, 1, 1], &s).unwrap();
        assert_ne!(sign, 0);
        // det [[1/4,1/2,1],[1,1,0],[2,0,0]] = 2 * (1/2*0 - 1*1) = -2
        assert_eq!(chebyshev_det_sign(&v, &[rat(1, 2)], &[3], &s).unwrap(), -1);
        assert!(chebyshev_det_sign(&v, &[rat(1, 2), rat(1, 2)], &[1, 2], &s).is_err());
        assert!(chebyshev_det_sign(&v, &[int(0), rat(1, 2)], &[1, 2], &s).is_err());
    }

    #[test]
    fn interval_validation_examples() {
        let v = sys("t^2, t, 1", int(0));
        let ok = validate_interval(&v, &unit(), 5).unwrap();
        assert!(ok.s0 && ok.s2 && ok.s1_sampled && ok.passed());
        assert!(!ok.s1_exhaustive);
        let wide = validate_interval(&v, &Interval::new(int(-1), int(1)).unwrap(), 5).unwrap();
        assert!(!wide.s2);
        let common = sys("(t-1/2)*t^2, (t-1/2)*t, t-1/2", int(0));
        assert!(!validate_interval(&common, &unit(), 3).unwrap().s0);
    }

    #[test]
    fn vanishing_space_and_subsystem() {
        let v = sys("t^2, t, 1", int(0));
        let zp = ZeroPattern::new(vec![rat(1, 2)], vec![2]).unwrap();
        assert_eq!(vanishing_space_dim(&v, &zp), 1);
        let sub = vanishing_subsystem(&v, &int(1)).unwrap();
        assert_eq!(sub.dim(), 2);
        assert!(sub.basis().iter().all(|q| q.eval(&int(1)).is_zero()));
    }
}
