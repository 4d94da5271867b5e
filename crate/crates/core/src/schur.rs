//! Schur polynomials `sigma_m` of strictly decreasing exponent sequences,
//! built from semistandard tableaux and from the bialternant formula, and
//! the monomial divisibility checks between them.

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::linalg::laplace_det;
use crate::exact::mpoly::{mono_divides, mono_properly_divides, Exponent};
use crate::exact::{MultiPoly, Rational};

/// Strictly decreasing sequence `m_0 > m_1 > ... > m_n >= 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DecreasingSeq(Vec<u32>);

impl DecreasingSeq {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        if entries.is_empty() || entries.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::NotStrictlyDecreasing(entries));
        }
        Ok(DecreasingSeq(entries))
    }

    /// The staircase `(n, ..., 1, 0)`, whose Schur polynomial is 1.
    pub fn staircase(len: usize) -> Self {
        DecreasingSeq((0..len as u32).rev().collect())
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    /// Number of variables `n + 1`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Partition `lambda_i = m_i - (n - i)`, the row lengths of the diagram.
    pub fn partition(&self) -> Vec<usize> {
        let n = self.0.len() - 1;
        self.0.iter().enumerate().map(|(i, &m)| m as usize - (n - i)).collect()
    }

    /// All strictly decreasing sequences of length `len` with `m_0 <= max`.
    pub fn all(len: usize, max: u32) -> Vec<DecreasingSeq> {
        fn go(len: usize, below: u32, cur: &mut Vec<u32>, out: &mut Vec<DecreasingSeq>) {
            if cur.len() == len {
                out.push(DecreasingSeq(cur.clone()));
                return;
            }
            let remaining = (len - cur.len() - 1) as u32;
            for m in (remaining..below).rev() {
                cur.push(m);
                go(len, m, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if len > 0 {
            go(len, max + 1, &mut Vec::new(), &mut out);
        }
        out
    }
}

impl std::fmt::Display for DecreasingSeq {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Semistandard filling of the diagram of `partition` with entries in `0..=n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tableau {
    pub shape: Vec<usize>,
    pub rows: Vec<Vec<u32>>,
}

impl Tableau {
    /// Exponent vector of `x^T`: how often each value occurs.
    pub fn weight(&self, nvars: usize) -> Exponent {
        let mut e = vec![0; nvars];
        for v in self.rows.iter().flatten() {
            e[*v as usize] += 1;
        }
        e
    }
}

/// Enumerates admissible fillings column by column: rows weakly increase,
/// columns strictly increase.
pub fn admissible_fillings(m: &DecreasingSeq) -> Vec<Tableau> {
    let shape = m.partition();
    let n = (m.len() - 1) as u32;
    let width = shape.first().copied().unwrap_or(0);
    let heights: Vec<usize> = (0..width).map(|j| shape.iter().filter(|&&l| l > j).count()).collect();
    let cells: Vec<(usize, usize)> = (0..width).flat_map(|j| (0..heights[j]).map(move |i| (i, j))).collect();
    let mut rows: Vec<Vec<u32>> = shape.iter().map(|&l| vec![0; l]).collect();
    let mut out = Vec::new();
    fill(&cells, 0, &heights, n, &mut rows, &shape, &mut out);
    out
}

fn fill(
    cells: &[(usize, usize)],
    k: usize,
    heights: &[usize],
    n: u32,
    rows: &mut Vec<Vec<u32>>,
    shape: &[usize],
    out: &mut Vec<Tableau>,
) {
    let Some(&(i, j)) = cells.get(k) else {
        out.push(Tableau { shape: shape.to_vec(), rows: rows.clone() });
        return;
    };
    let left = if j > 0 { rows[i][j - 1] } else { 0 };
    let above = if i > 0 { rows[i - 1][j] + 1 } else { 0 };
    // Leave room for the strictly larger entries below in this column.
    let top = n - (heights[j] - 1 - i) as u32;
    for v in left.max(above)..=top {
        rows[i][j] = v;
        fill(cells, k + 1, heights, n, rows, shape, out);
    }
}

/// `sigma_m(x_0, ..., x_n) = sum_T x^T` over admissible fillings.
pub fn schur_via_tableaux(m: &DecreasingSeq) -> MultiPoly {
    let nvars = m.len();
    MultiPoly::from_terms(
        nvars,
        admissible_fillings(m).iter().map(|t| (t.weight(nvars), Rational::from_integer(1.into()))),
    )
}

/// `prod_{i<j} (x_i - x_j)` in `arity` variables.
pub fn vandermonde(arity: usize) -> MultiPoly {
    let mut v = MultiPoly::one(arity);
    for i in 0..arity {
        for j in (i + 1)..arity {
            v = v * &MultiPoly::difference(i, j, arity);
        }
    }
    v
}

/// Divides by `prod_{i<j} (x_i - x_j)` one linear factor at a time.
pub fn divide_by_vandermonde(f: &MultiPoly) -> Result<MultiPoly> {
    let arity = f.arity();
    let mut q = f.clone();
    for i in 0..arity {
        for j in (i + 1)..arity {
            q = q.exact_divide(&MultiPoly::difference(i, j, arity))?;
        }
    }
    Ok(q)
}

/// `det(x_i^{m_j}) / prod_{i<j} (x_i - x_j)`.
pub fn schur_via_bialternant(m: &DecreasingSeq) -> MultiPoly {
    let nvars = m.len();
    let matrix: Vec<Vec<MultiPoly>> = (0..nvars)
        .map(|i| {
            m.entries()
                .iter()
                .map(|&mj| {
                    let mut e = vec![0; nvars];
                    e[i] = mj;
                    MultiPoly::monomial(e, Rational::from_integer(1.into()))
                })
                .collect()
        })
        .collect();
    let det = laplace_det(&matrix, &MultiPoly::zero(nvars), &MultiPoly::one(nvars));
    divide_by_vandermonde(&det).expect("alternating polynomials are divisible by the Vandermonde")
}

/// One monomial of the dividend and the generator found to divide it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub monomial: Exponent,
    pub divisor: Option<Exponent>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DivisibilityReport {
    pub holds: bool,
    pub witnesses: Vec<Witness>,
}

impl DivisibilityReport {
    fn build<'a>(
        targets: impl Iterator<Item = &'a Exponent>,
        gens: &[Exponent],
        rel: impl Fn(&[u32], &[u32]) -> bool,
    ) -> Self {
        let witnesses: Vec<Witness> = targets
            .map(|e| Witness { monomial: e.clone(), divisor: gens.iter().find(|g| rel(g, e)).cloned() })
            .collect();
        let holds = witnesses.iter().all(|w| w.divisor.is_some());
        DivisibilityReport { holds, witnesses }
    }
}

/// For `b >= a` entrywise and `a != b`: is every monomial of `sigma_b`
/// properly divisible by a monomial of `sigma_a`?
pub fn proper_dominance_check(a: &DecreasingSeq, b: &DecreasingSeq) -> Result<DivisibilityReport> {
    if a.len() != b.len() {
        return Err(Error::DimensionMismatch { expected: a.len(), found: b.len() });
    }
    if a == b || a.entries().iter().zip(b.entries()).any(|(x, y)| y < x) {
        return crate::error::precondition(format!("need {b} >= {a} entrywise and {a} != {b}"));
    }
    let gens: Vec<Exponent> = schur_via_tableaux(a).exponents().cloned().collect();
    let sb = schur_via_tableaux(b);
    Ok(DivisibilityReport::build(sb.exponents(), &gens, mono_properly_divides))
}

/// For the subsequence `b = (a_{i(0)}, ..., a_{i(r)})`: is every monomial of
/// `sigma_b(x_0..x_r)` divisible by a monomial of `sigma_a(x_0..x_r, 1..1)`?
pub fn subsequence_divisibility_check(a: &DecreasingSeq, indices: &[usize]) -> Result<DivisibilityReport> {
    let valid = !indices.is_empty()
        && indices.windows(2).all(|w| w[0] < w[1])
        && indices.last().is_some_and(|&i| i < a.len());
    if !valid {
        return Err(Error::InvalidIndices(indices.to_vec()));
    }
    let b = DecreasingSeq::new(indices.iter().map(|&i| a.entries()[i]).collect())?;
    let substituted = schur_via_tableaux(a).set_tail_to_one(indices.len());
    let gens: Vec<Exponent> = substituted.exponents().cloned().collect();
    let sb = schur_via_tableaux(&b);
    Ok(DivisibilityReport::build(sb.exponents(), &gens, mono_divides))
}

/// Monomial-ideal membership: every monomial of `g` is divisible by a generator.
pub fn in_monomial_ideal(g: &MultiPoly, gens: &[Exponent]) -> Result<DivisibilityReport> {
    if let Some(bad) = gens.iter().find(|e| e.len() != g.arity()) {
        return Err(Error::ArityMismatch { expected: g.arity(), found: bad.len() });
    }
    Ok(DivisibilityReport::build(g.exponents(), gens, mono_divides))
}

/// `sigma_m(1, ..., 1)`.
pub fn value_at_ones(p: &MultiPoly) -> Rational {
    p.terms().fold(Rational::zero(), |acc, (_, c)| acc + c)
}
