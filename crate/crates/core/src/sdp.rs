//! Linear matrix inequalities for the moment curve, SDPA export, and
//! square-root certificates for extreme rays.

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{precondition, Error, Result};
use crate::exact::rational::{format_rational, parse_rational, to_decimal};
use crate::exact::{Interval, Rational, SymMatrix, UniPoly};
use crate::extreme::ZeroPattern;

/// One pencil `A + sum_i x_i B_i` of size `size`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LmiBlock {
    pub a: SymMatrix,
    pub b: Vec<SymMatrix>,
}

impl LmiBlock {
    pub fn size(&self) -> usize {
        self.a.dim()
    }

    pub fn evaluate(&self, x: &[Rational]) -> SymMatrix {
        self.b.iter().zip(x).fold(self.a.clone(), |acc, (bi, xi)| acc.add_scaled(bi, xi))
    }
}

/// Intersection of pencils `A_nu + sum_i x_i B_{nu i} >= 0` in `x in Q^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockLmi {
    pub n: usize,
    pub blocks: Vec<LmiBlock>,
}

impl BlockLmi {
    pub fn new(n: usize, blocks: Vec<LmiBlock>) -> Result<Self> {
        for block in &blocks {
            if block.b.len() != n {
                return Err(Error::DimensionMismatch { expected: n, found: block.b.len() });
            }
            if let Some(bad) = block.b.iter().find(|m| m.dim() != block.size()) {
                return Err(Error::DimensionMismatch { expected: block.size(), found: bad.dim() });
            }
        }
        Ok(BlockLmi { n, blocks })
    }

    pub fn max_block_size(&self) -> usize {
        self.blocks.iter().map(LmiBlock::size).max().unwrap_or(0)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&LmiJson::from(self)).expect("serializable")
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(LmiJson::from(self)).expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: LmiJson = serde_json::from_str(text)
            .map_err(|e| Error::Parse { token: "lmi json".into(), reason: e.to_string() })?;
        raw.try_into()
    }
}

#[derive(Serialize, Deserialize)]
struct BlockJson {
    size: usize,
    #[serde(rename = "A")]
    a: Vec<Vec<String>>,
    #[serde(rename = "B")]
    b: Vec<Vec<Vec<String>>>,
}

#[derive(Serialize, Deserialize)]
struct LmiJson {
    n: usize,
    blocks: Vec<BlockJson>,
}

fn matrix_to_strings(m: &SymMatrix) -> Vec<Vec<String>> {
    m.rows().iter().map(|r| r.iter().map(format_rational).collect()).collect()
}

fn matrix_from_strings(rows: &[Vec<String>], size: usize) -> Result<SymMatrix> {
    if rows.len() != size {
        return Err(Error::DimensionMismatch { expected: size, found: rows.len() });
    }
    let parsed = rows
        .iter()
        .map(|r| r.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    SymMatrix::new(parsed)
}

impl From<&BlockLmi> for LmiJson {
    fn from(lmi: &BlockLmi) -> Self {
        LmiJson {
            n: lmi.n,
            blocks: lmi
                .blocks
                .iter()
                .map(|b| BlockJson {
                    size: b.size(),
                    a: matrix_to_strings(&b.a),
                    b: b.b.iter().map(matrix_to_strings).collect(),
                })
                .collect(),
        }
    }
}

impl TryFrom<LmiJson> for BlockLmi {
    type Error = Error;
    fn try_from(raw: LmiJson) -> Result<Self> {
        let blocks = raw
            .blocks
            .iter()
            .map(|b| {
                Ok(LmiBlock {
                    a: matrix_from_strings(&b.a, b.size)?,
                    b: b.b.iter().map(|m| matrix_from_strings(m, b.size)).collect::<Result<_>>()?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        BlockLmi::new(raw.n, blocks)
    }
}

/// Localizing matrix of the moment sequence `(1, x_1, ..., x_n)` for the
/// weight `w`: entry `(i, j)` is `sum_l w_l x_{i+j+l}`.
fn localizing_block(n: usize, size: usize, w: &UniPoly) -> LmiBlock {
    let mut a = SymMatrix::zeros(size);
    let mut b = vec![SymMatrix::zeros(size); n];
    for i in 0..size {
        for j in i..size {
            for (l, wl) in w.coeffs().iter().enumerate() {
                let k = i + j + l;
                if k == 0 {
                    a.set(i, j, a.get(i, j) + wl);
                } else {
                    assert!(k <= n, "moment index out of range");
                    let cur = b[k - 1].get(i, j).clone();
                    b[k - 1].set(i, j, cur + wl);
                }
            }
        }
    }
    LmiBlock { a, b }
}

/// The Hankel pencil `(x_{i+j})_{0 <= i, j <= k}` with `x_0 = 1`, `n = 2k`.
pub fn hankel_lmi(n: usize) -> Result<BlockLmi> {
    if n == 0 || n % 2 == 1 {
        return Err(Error::OddDimension(n));
    }
    BlockLmi::new(n, vec![localizing_block(n, n / 2 + 1, &UniPoly::one())])
}

/// Moment description of `conv{(t, ..., t^n) : t in [a, b]}` by two blocks
/// of size at most `1 + floor(n/2)`.
pub fn interval_moment_lmi(n: usize, s: &Interval) -> Result<BlockLmi> {
    if n == 0 {
        return precondition("n must be positive");
    }
    let (a, b) = (s.lo(), s.hi());
    let t_minus_a = UniPoly::new(vec![-a.clone(), Rational::one()]);
    let b_minus_t = UniPoly::new(vec![b.clone(), -Rational::one()]);
    let k = n / 2;
    let blocks = if n % 2 == 0 {
        vec![localizing_block(n, k + 1, &UniPoly::one()), localizing_block(n, k, &(&t_minus_a * &b_minus_t))]
    } else {
        vec![localizing_block(n, k + 1, &t_minus_a), localizing_block(n, k + 1, &b_minus_t)]
    };
    BlockLmi::new(n, blocks)
}

/// Every block evaluated at `x` is positive semidefinite.
pub fn lmi_membership(lmi: &BlockLmi, x: &[Rational]) -> Result<bool> {
    if x.len() != lmi.n {
        return Err(Error::DimensionMismatch { expected: lmi.n, found: x.len() });
    }
    Ok(lmi.blocks.iter().all(|b| b.evaluate(x).is_psd()))
}

/// `f = c * g^2` with `g = prod_j (t - xi_j)^{b_j / 2}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SosxCertificate {
    #[serde(with = "crate::serde_rational")]
    pub scale: Rational,
    #[serde(serialize_with = "display_unipoly")]
    pub square_root: UniPoly,
    pub declared_rank: usize,
}

fn display_unipoly<S: serde::Serializer>(p: &UniPoly, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&p.to_string())
}

pub fn sosx_certificate(f: &UniPoly, zp: &ZeroPattern, c: &Rational) -> Result<SosxCertificate> {
    if let Some(m) = zp.mults().iter().find(|m| *m % 2 == 1) {
        return precondition(format!("odd multiplicity {m}"));
    }
    if !c.is_positive() {
        return precondition("scale must be positive");
    }
    let g = zp
        .points()
        .iter()
        .zip(zp.mults())
        .fold(UniPoly::one(), |acc, (x, m)| &acc * &UniPoly::linear_root(x).pow(m / 2));
    if &g.pow(2).scale(c) != f {
        return Err(Error::CertificateMismatch);
    }
    let declared_rank = 1 + g.degree().unwrap_or(0);
    Ok(SosxCertificate { scale: c.clone(), square_root: g, declared_rank })
}

/// SDPA sparse text for `lmi`. SDPA reads `sum_i x_i F_i - F_0 >= 0`, so
/// `F_0 = -A` and `F_i = B_i`.
pub fn emit_sdpa(lmi: &BlockLmi, objective: &[Rational]) -> Result<String> {
    if objective.len() != lmi.n {
        return Err(Error::DimensionMismatch { expected: lmi.n, found: objective.len() });
    }
    let mut lossy = false;
    let mut dec = |r: &Rational| {
        let (s, exact) = to_decimal(r, 30);
        lossy |= !exact;
        s
    };
    let objective_line = objective.iter().map(&mut dec).collect::<Vec<_>>().join(" ");
    let mut entries = Vec::new();
    for matno in 0..=lmi.n {
        for (blk, block) in lmi.blocks.iter().enumerate() {
            let m = if matno == 0 {
                SymMatrix::zeros(block.size()).add_scaled(&block.a, &-Rational::one())
            } else {
                block.b[matno - 1].clone()
            };
            for i in 0..m.dim() {
                for j in i..m.dim() {
                    let v = m.get(i, j);
                    if !v.is_zero() {
                        entries.push(format!("{} {} {} {} {}", matno, blk + 1, i + 1, j + 1, dec(v)));
                    }
                }
            }
        }
    }
    let mut out = String::from("* SDPA sparse format: sum_i x_i F_i - F_0 >= 0 with F_0 = -A, F_i = B_i\n");
    if lossy {
        out.push_str("* lossy: some values rounded to 30 significant digits\n");
    }
    let sizes: Vec<String> = lmi.blocks.iter().map(|b| b.size().to_string()).collect();
    out.push_str(&format!("{}\n{}\n{}\n{}\n", lmi.n, lmi.blocks.len(), sizes.join(" "), objective_line));
    for e in entries {
        out.push_str(&e);
        out.push('\n');
    }
    Ok(out)
}
