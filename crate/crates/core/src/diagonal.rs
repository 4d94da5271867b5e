//! Determinants of evaluation matrices `M(p) = (p_j(t_i))` over
//! `Q[t_0, ..., t_n]`, their Vandermonde cofactors, membership of the
//! cofactor in the monomial ideal spanned by Schur monomials, and the
//! derivative-row ("Taylor") variant for blocks of coalescing points.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::linalg::laplace_det;
use crate::exact::mpoly::{collapse_exponent, Exponent};
use crate::exact::rational::factorial;
use crate::exact::{MultiPoly, Rational, UniPoly};
use crate::schur::{divide_by_vandermonde, in_monomial_ideal, schur_via_tableaux, DecreasingSeq, DivisibilityReport};

/// Which variable a row is evaluated at and which derivative it carries.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RowLabel {
    pub slot: usize,
    pub order: usize,
}

impl RowLabel {
    /// `(-1)^k k!`: the raw derivative row equals this factor times the row
    /// normalized by `(-1)^k / k!`.
    pub fn factor(&self) -> Rational {
        let f = Rational::from_integer(factorial(self.order));
        if self.order % 2 == 1 {
            -f
        } else {
            f
        }
    }
}

/// Square matrix of polynomials in `t_0, ..., t_{arity-1}` with labelled rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorMatrix {
    arity: usize,
    basis: Vec<UniPoly>,
    entries: Vec<Vec<MultiPoly>>,
    labels: Vec<RowLabel>,
}

impl TensorMatrix {
    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn basis(&self) -> &[UniPoly] {
        &self.basis
    }

    pub fn entries(&self) -> &[Vec<MultiPoly>] {
        &self.entries
    }

    pub fn labels(&self) -> &[RowLabel] {
        &self.labels
    }

    /// Product of the row factors: `det(self)` over the determinant with
    /// normalized derivative rows.
    pub fn scale(&self) -> Rational {
        self.labels.iter().map(RowLabel::factor).product()
    }

    pub fn det(&self) -> MultiPoly {
        laplace_det(&self.entries, &MultiPoly::zero(self.arity), &MultiPoly::one(self.arity))
    }
}

/// `M(p)` with entry `(i, j) = p_j(t_i)`.
pub fn build_m(p: &[UniPoly]) -> TensorMatrix {
    let arity = p.len();
    let entries = (0..arity)
        .map(|i| p.iter().map(|pj| MultiPoly::from_unipoly(pj, i, arity)).collect())
        .collect();
    let labels = (0..arity).map(|slot| RowLabel { slot, order: 0 }).collect();
    TensorMatrix { arity, basis: p.to_vec(), entries, labels }
}

/// Exact quotient of `f` by `prod_{i<j} (t_i - t_j)`.
pub fn vandermonde_cofactor(f: &MultiPoly) -> Result<MultiPoly> {
    divide_by_vandermonde(f)
}

/// Block sizes `(b_0, ..., b_r)`, all positive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockPartition(Vec<usize>);

impl BlockPartition {
    pub fn new(sizes: Vec<usize>) -> Result<Self> {
        if sizes.is_empty() || sizes.contains(&0) {
            return Err(Error::BadPartition(sizes));
        }
        Ok(BlockPartition(sizes))
    }

    /// The partition `(1, ..., 1)` of `total`.
    pub fn singletons(total: usize) -> Self {
        BlockPartition(vec![1; total])
    }

    pub fn sizes(&self) -> &[usize] {
        &self.0
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    /// All compositions of `total` into positive parts.
    pub fn compositions(total: usize) -> Vec<BlockPartition> {
        if total == 0 {
            return Vec::new();
        }
        (0u32..(1 << (total - 1)))
            .map(|cuts| {
                let mut sizes = Vec::new();
                let mut run = 1;
                for i in 0..total - 1 {
                    if cuts & (1 << i) != 0 {
                        sizes.push(run);
                        run = 1;
                    } else {
                        run += 1;
                    }
                }
                sizes.push(run);
                BlockPartition(sizes)
            })
            .collect()
    }

    fn check_total(&self, total: usize) -> Result<()> {
        if self.total() != total {
            return Err(Error::BadPartition(self.0.clone()));
        }
        Ok(())
    }
}

/// Generators of the monomial ideal spanned by the monomials of `sigma_m`,
/// optionally pushed through the block product map.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SchurMonomialIdeal {
    pub arity: usize,
    pub generators: Vec<Exponent>,
}

impl SchurMonomialIdeal {
    pub fn new(m: &DecreasingSeq) -> Self {
        SchurMonomialIdeal { arity: m.len(), generators: schur_via_tableaux(m).exponents().cloned().collect() }
    }

    /// Image under `t^a -> prod_nu t_nu^{a(B_nu)}`.
    pub fn collapsed(m: &DecreasingSeq, b: &BlockPartition) -> Result<Self> {
        b.check_total(m.len())?;
        let mut generators: Vec<Exponent> = schur_via_tableaux(m)
            .exponents()
            .map(|e| collapse_exponent(e, b.sizes()))
            .collect();
        generators.sort();
        generators.dedup();
        Ok(SchurMonomialIdeal { arity: b.sizes().len(), generators })
    }
}

pub fn in_schur_ideal(g: &MultiPoly, ideal: &SchurMonomialIdeal) -> Result<DivisibilityReport> {
    if g.arity() != ideal.arity {
        return Err(Error::ArityMismatch { expected: ideal.arity, found: g.arity() });
    }
    in_monomial_ideal(g, &ideal.generators)
}

/// Checks that `f(x) - f(y) - sum_{k=1}^{r} f^(k)(y)/k! (x-y)^k` is divisible
/// by `(x-y)^{r+1}`.
pub fn taylor_remainder_check(f: &UniPoly, r: usize) -> bool {
    let x = |p: &UniPoly| MultiPoly::from_unipoly(p, 0, 2);
    let y = |p: &UniPoly| MultiPoly::from_unipoly(p, 1, 2);
    let delta = MultiPoly::difference(0, 1, 2);
    let mut rem = &x(f) - &y(f);
    for k in 1..=r {
        let coeff = y(&f.derivative(k)).scale(&Rational::from_integer(factorial(k)).recip());
        rem = &rem - &(coeff * &delta.pow(k));
    }
    (0..=r).try_fold(rem, |acc, _| acc.exact_divide(&delta)).is_ok()
}

/// Derivative-row matrix `T_b(p)`: block `nu` contributes the rows
/// `(p_j^(k)(t_nu))_j` for `k < b_nu`, in `r + 1` variables.
pub fn taylor_process(m: &TensorMatrix, b: &BlockPartition) -> Result<TensorMatrix> {
    b.check_total(m.basis.len())?;
    let arity = b.sizes().len();
    let mut entries = Vec::new();
    let mut labels = Vec::new();
    for (slot, &size) in b.sizes().iter().enumerate() {
        for order in 0..size {
            entries.push(m.basis.iter().map(|p| MultiPoly::from_unipoly(&p.derivative(order), slot, arity)).collect());
            labels.push(RowLabel { slot, order });
        }
    }
    Ok(TensorMatrix { arity, basis: m.basis.clone(), entries, labels })
}

/// `prod_{i<j} (t_i - t_j)^{b_i b_j}`
pub fn block_vandermonde(b: &BlockPartition) -> MultiPoly {
    let r = b.sizes().len();
    let mut v = MultiPoly::one(r);
    for i in 0..r {
        for j in (i + 1)..r {
            v = v * &MultiPoly::difference(i, j, r).pow(b.sizes()[i] * b.sizes()[j]);
        }
    }
    v
}

#[derive(Clone, Debug, Serialize)]
pub struct TaylorFactorization {
    pub orders: Vec<u32>,
    #[serde(serialize_with = "display_poly")]
    pub cofactor: MultiPoly,
    #[serde(with = "crate::serde_rational")]
    pub scale: Rational,
    /// Cofactor lies in the collapsed Schur ideal.
    pub checked: bool,
    /// Cofactor equals `scale` times the collapsed Vandermonde cofactor of `det M(p)`.
    pub dual_route_agrees: bool,
    pub membership: DivisibilityReport,
}

fn display_poly<S: serde::Serializer>(p: &MultiPoly, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&p.display_with("t"))
}

/// Vanishing orders at 0, required to be strictly decreasing.
pub fn orders_at_zero(p: &[UniPoly]) -> Result<DecreasingSeq> {
    let orders = p
        .iter()
        .map(|q| q.order_at_zero().map(|k| k as u32).ok_or(Error::ZeroPolynomial))
        .collect::<Result<Vec<u32>>>()?;
    DecreasingSeq::new(orders)
}

/// Divides `det T_b(p)` by `prod_{i<j}(t_i - t_j)^{b_i b_j}` and checks the
/// cofactor against the collapsed Schur ideal of the vanishing orders of `p`.
pub fn factor_det_t(p: &[UniPoly], b: &BlockPartition) -> Result<TaylorFactorization> {
    b.check_total(p.len())?;
    let m = orders_at_zero(p)?;
    let big = build_m(p);
    let t = taylor_process(&big, b)?;
    let r = b.sizes().len();
    let mut cofactor = t.det();
    for i in 0..r {
        for j in (i + 1)..r {
            let d = MultiPoly::difference(i, j, r);
            for _ in 0..b.sizes()[i] * b.sizes()[j] {
                cofactor = cofactor.exact_divide(&d)?;
            }
        }
    }
    let ideal = SchurMonomialIdeal::collapsed(&m, b)?;
    let membership = in_schur_ideal(&cofactor, &ideal)?;
    let g = vandermonde_cofactor(&big.det())?;
    let scale = t.scale();
    let dual_route_agrees = g.collapse(b.sizes())?.scale(&scale) == cofactor;
    Ok(TaylorFactorization {
        orders: m.entries().to_vec(),
        cofactor,
        scale,
        checked: membership.holds,
        dual_route_agrees,
        membership,
    })
}
