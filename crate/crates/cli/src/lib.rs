//! Command-line front end for the `curvehull` library.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use curvehull::diagonal::{factor_det_t, BlockPartition};
use curvehull::exact::parse::parse_unipoly_list;
use curvehull::exact::rational::{format_rational, parse_rational, to_decimal};
use curvehull::extreme::{
    extreme_candidate, profile_and_normalize, verify_extreme, LinearSystem, ZeroPattern,
};
use curvehull::hull::{cross_validate, support_min_exact, CurveSegment};
use curvehull::schur::{
    proper_dominance_check, schur_via_bialternant, schur_via_tableaux, subsequence_divisibility_check,
    DecreasingSeq,
};
use curvehull::sdp::{emit_sdpa, hankel_lmi, interval_moment_lmi, lmi_membership, sosx_certificate, BlockLmi};
use curvehull::{Error, Interval, Rational, UniPoly};
use num_traits::Zero;
use serde_json::{json, Value};

#[derive(Parser, Debug)]
#[command(name = "curvehull", version, about = "Exact tools for convex hulls of polynomial curves")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Both,
    Tableaux,
    Bialternant,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum LmiKind {
    Hankel,
    Interval,
}

// Aliases keep clap from treating these as repeated arguments; each one is
// parsed from a single comma-separated value.
type Polys = Vec<UniPoly>;
type Rats = Vec<Rational>;
type Indices = Vec<usize>;

#[derive(Subcommand, Debug)]
enum Command {
    /// Schur polynomial of a strictly decreasing sequence.
    Schur {
        #[arg(long, value_parser = parse_seq)]
        seq: DecreasingSeq,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
    },
    /// Checks the bialternant identity and the monomial divisibility lemmas,
    /// exhaustively or for one given pair.
    VerifySchur {
        #[arg(long, default_value_t = 4)]
        max_len: usize,
        #[arg(long, default_value_t = 6)]
        max_entry: u32,
        /// Smaller sequence of a single check.
        #[arg(long, value_parser = parse_seq)]
        a: Option<DecreasingSeq>,
        /// Larger sequence for a single dominance check.
        #[arg(long, value_parser = parse_seq, requires = "a")]
        b: Option<DecreasingSeq>,
        /// Subsequence positions for a single subsequence check.
        #[arg(long, value_parser = parse_usizes, requires = "a", conflicts_with = "b")]
        indices: Option<Indices>,
    },
    /// Factors the derivative-row determinant of a basis and checks the
    /// cofactor against the collapsed Schur ideal.
    VerifyDiagonal {
        #[arg(long, value_parser = parse_polys)]
        basis: Polys,
        #[arg(long, value_parser = parse_usizes)]
        blocks: Indices,
    },
    /// Builds the determinantal candidate for a zero pattern and verifies it.
    Extreme {
        #[arg(long, value_parser = parse_polys)]
        basis: Polys,
        #[arg(long, value_parser = parse_interval)]
        interval: Interval,
        /// Pattern such as "1/3:2,2/3:2".
        #[arg(long, value_parser = parse_zeros)]
        zeros: ZeroPattern,
        /// Base point; defaults to the left end of the interval.
        #[arg(long, value_parser = parse_rat, allow_hyphen_values = true)]
        xi: Option<Rational>,
    },
    /// Reports nonnegativity, zeros and face dimension of an element.
    VerifyExtreme {
        #[arg(long, value_parser = parse_polys)]
        basis: Polys,
        #[arg(long, value_parser = parse_interval)]
        interval: Interval,
        #[arg(long, value_parser = parse_poly, allow_hyphen_values = true)]
        f: UniPoly,
        #[arg(long, value_parser = parse_rat, allow_hyphen_values = true)]
        xi: Option<Rational>,
    },
    /// Prints an LMI as JSON and optionally writes it in SDPA format.
    Lmi {
        #[arg(long, value_enum)]
        kind: LmiKind,
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = parse_interval, required_if_eq("kind", "interval"))]
        interval: Option<Interval>,
        #[arg(long)]
        sdpa: Option<PathBuf>,
        /// Objective for the SDPA file; defaults to the last coordinate.
        #[arg(long, value_parser = parse_rats, allow_hyphen_values = true)]
        objective: Option<Rats>,
    },
    /// Exact membership of a point in an LMI read from JSON.
    Member {
        #[arg(long)]
        lmi: PathBuf,
        #[arg(long, value_parser = parse_rats, allow_hyphen_values = true)]
        point: Rats,
    },
    /// Encloses the minimum of a linear functional over a curve segment.
    Support {
        /// Moment curve dimension; ignored when --curve is given.
        #[arg(long)]
        n: Option<usize>,
        /// Curve components such as "t, t^2".
        #[arg(long, value_parser = parse_polys, required_unless_present = "n")]
        curve: Option<Polys>,
        #[arg(long, value_parser = parse_interval)]
        interval: Interval,
        #[arg(long, value_parser = parse_rats, allow_hyphen_values = true)]
        functional: Rats,
        #[arg(long, value_parser = parse_rat, default_value = "1/1000000")]
        width: Rational,
    },
    /// Compares the sample hull, the interval moment LMI and support values.
    CrossValidate {
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = parse_interval)]
        interval: Interval,
        #[arg(long, default_value_t = 25)]
        trials: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, value_parser = parse_rat, default_value = "1/1000000")]
        width: Rational,
    },
}

fn parse_rat(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

fn parse_rats(s: &str) -> Result<Vec<Rational>, String> {
    s.split(',').map(|p| parse_rat(p.trim())).collect()
}

fn parse_usizes(s: &str) -> Result<Vec<usize>, String> {
    s.split(',').map(|p| p.trim().parse::<usize>().map_err(|e| format!("{p:?}: {e}"))).collect()
}

fn parse_seq(s: &str) -> Result<DecreasingSeq, String> {
    let entries = s
        .split(',')
        .map(|p| p.trim().parse::<u32>().map_err(|e| format!("{p:?}: {e}")))
        .collect::<Result<Vec<_>, _>>()?;
    DecreasingSeq::new(entries).map_err(|e| e.to_string())
}

fn parse_interval(s: &str) -> Result<Interval, String> {
    let ends = parse_rats(s)?;
    let [lo, hi] = <[Rational; 2]>::try_from(ends).map_err(|_| format!("expected lo,hi, got {s:?}"))?;
    Interval::new(lo, hi).map_err(|e| e.to_string())
}

fn parse_poly(s: &str) -> Result<UniPoly, String> {
    UniPoly::parse(s).map_err(|e| e.to_string())
}

fn parse_polys(s: &str) -> Result<Vec<UniPoly>, String> {
    parse_unipoly_list(s).map_err(|e| e.to_string())
}

fn parse_zeros(s: &str) -> Result<ZeroPattern, String> {
    let mut points = Vec::new();
    let mut mults = Vec::new();
    for item in s.split(',') {
        let (x, m) = item.trim().split_once(':').ok_or_else(|| format!("expected point:mult, got {item:?}"))?;
        points.push(parse_rat(x.trim())?);
        mults.push(m.trim().parse::<usize>().map_err(|e| format!("{m:?}: {e}"))?);
    }
    ZeroPattern::new(points, mults).map_err(|e| e.to_string())
}

fn system(basis: &[UniPoly], xi: Option<Rational>, s: &Interval) -> Result<LinearSystem, Error> {
    profile_and_normalize(basis, &xi.unwrap_or_else(|| s.lo().clone()))
}

fn system_json(v: &LinearSystem) -> Value {
    json!({
        "base_point": format_rational(v.base_point()),
        "orders": v.orders().entries(),
        "basis": v.basis().iter().map(ToString::to_string).collect::<Vec<_>>(),
        "stripped": v.stripped(),
    })
}

fn execute(command: Command) -> Result<Value, Error> {
    match command {
        Command::Schur { seq, method } => {
            let show = |p: curvehull::MultiPoly| p.display_with("x");
            Ok(match method {
                Method::Tableaux => json!({ "tableaux": show(schur_via_tableaux(&seq)) }),
                Method::Bialternant => json!({ "bialternant": show(schur_via_bialternant(&seq)) }),
                Method::Both => {
                    let t = schur_via_tableaux(&seq);
                    let b = schur_via_bialternant(&seq);
                    let equal = t == b;
                    json!({ "tableaux": show(t), "bialternant": show(b), "equal": equal })
                }
            })
        }
        Command::VerifySchur { max_len, max_entry, a, b, indices } => match (a, b, indices) {
            (Some(a), Some(b), _) => Ok(serde_json::to_value(proper_dominance_check(&a, &b)?).expect("json")),
            (Some(a), None, Some(idx)) => {
                Ok(serde_json::to_value(subsequence_divisibility_check(&a, &idx)?).expect("json"))
            }
            (Some(_), None, None) => Err(Error::Precondition("--a needs --b or --indices".into())),
            _ => verify_schur_exhaustive(max_len, max_entry),
        },
        Command::VerifyDiagonal { basis, blocks } => {
            let b = BlockPartition::new(blocks)?;
            Ok(serde_json::to_value(factor_det_t(&basis, &b)?).expect("json"))
        }
        Command::Extreme { basis, interval, zeros, xi } => {
            let v = system(&basis, xi, &interval)?;
            let f = extreme_candidate(&v, &zeros)?;
            let mut out = json!({ "system": system_json(&v), "candidate": f.to_string() });
            if f.is_zero() {
                out["report"] = Value::Null;
                return Ok(out);
            }
            out["report"] = serde_json::to_value(verify_extreme(&v, &f, &interval)?).expect("json");
            if zeros.mults().iter().all(|m| m % 2 == 0) {
                out["certificate"] = match sosx_certificate(&f, &zeros, &f.leading()) {
                    Ok(c) => serde_json::to_value(c).expect("json"),
                    Err(_) => Value::Null,
                };
            }
            Ok(out)
        }
        Command::VerifyExtreme { basis, interval, f, xi } => {
            let v = system(&basis, xi, &interval)?;
            Ok(serde_json::to_value(verify_extreme(&v, &f, &interval)?).expect("json"))
        }
        Command::Lmi { kind, n, interval, sdpa, objective } => {
            let lmi = match kind {
                LmiKind::Hankel => hankel_lmi(n)?,
                LmiKind::Interval => interval_moment_lmi(n, &interval.expect("required by the parser"))?,
            };
            if let Some(path) = sdpa {
                let objective = objective
                    .unwrap_or_else(|| (1..=n).map(|k| Rational::from_integer(i64::from(k == n).into())).collect());
                let text = emit_sdpa(&lmi, &objective)?;
                std::fs::write(&path, text)
                    .map_err(|e| Error::Precondition(format!("cannot write {}: {e}", path.display())))?;
            }
            Ok(lmi.to_json_value())
        }
        Command::Member { lmi, point } => {
            let text = std::fs::read_to_string(&lmi)
                .map_err(|e| Error::Precondition(format!("cannot read {}: {e}", lmi.display())))?;
            let lmi = BlockLmi::from_json(&text)?;
            Ok(json!({ "member": lmi_membership(&lmi, &point)? }))
        }
        Command::Support { n, curve, interval, functional, width } => {
            let c = match curve {
                Some(components) => CurveSegment::new(components, interval)?,
                None => CurveSegment::moment(n.expect("required by the parser"), interval)?,
            };
            let e = support_min_exact(&functional, &c, &width)?;
            Ok(json!({
                "lo": format_rational(&e.lo),
                "hi": format_rational(&e.hi),
                "lo_decimal": to_decimal(&e.lo, 20).0,
                "hi_decimal": to_decimal(&e.hi, 20).0,
            }))
        }
        Command::CrossValidate { n, interval, trials, seed, width } => {
            let c = CurveSegment::moment(n, interval.clone())?;
            let lmi = interval_moment_lmi(n, &interval)?;
            Ok(serde_json::to_value(cross_validate(&c, &lmi, trials, seed, &width)?).expect("json"))
        }
    }
}

fn verify_schur_exhaustive(max_len: usize, max_entry: u32) -> Result<Value, Error> {
    let mut sequences = 0;
    let mut bialternant_equal = true;
    let mut dominance_pairs = 0;
    let mut dominance_failures = Vec::new();
    let mut subsequences = 0;
    let mut subsequence_failures = Vec::new();
    for len in 1..=max_len {
        let seqs = DecreasingSeq::all(len, max_entry);
        for a in &seqs {
            sequences += 1;
            bialternant_equal &= schur_via_tableaux(a) == schur_via_bialternant(a);
            for b in &seqs {
                if a != b && a.entries().iter().zip(b.entries()).all(|(x, y)| y >= x) {
                    dominance_pairs += 1;
                    if !proper_dominance_check(a, b)?.holds {
                        dominance_failures.push(format!("{a} {b}"));
                    }
                }
            }
            for mask in 1u32..(1 << len) {
                let idx: Vec<usize> = (0..len).filter(|i| mask & (1 << i) != 0).collect();
                subsequences += 1;
                if !subsequence_divisibility_check(a, &idx)?.holds {
                    subsequence_failures.push(format!("{a} {idx:?}"));
                }
            }
        }
    }
    Ok(json!({
        "sequences": sequences,
        "bialternant_equal": bialternant_equal,
        "dominance_pairs": dominance_pairs,
        "dominance_failures": dominance_failures,
        "subsequences": subsequences,
        "subsequence_failures": subsequence_failures,
    }))
}

fn render_text(v: &Value, prefix: &str, out: &mut String) {
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                let key = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                render_text(x, &key, out);
            }
        }
        Value::Array(items) if items.iter().any(|x| x.is_object()) => {
            for (i, x) in items.iter().enumerate() {
                render_text(x, &format!("{prefix}[{i}]"), out);
            }
        }
        Value::String(s) => out.push_str(&format!("{prefix}: {s}\n")),
        other => out.push_str(&format!("{prefix}: {other}\n")),
    }
}

/// Runs the CLI on `argv` (program name first). Returns the exit code:
/// 0 on success, 1 on domain errors, 2 on usage errors.
pub fn run(argv: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(text.as_bytes());
                    0
                }
                _ => {
                    let _ = err.write_all(text.as_bytes());
                    2
                }
            };
        }
    };
    match execute(cli.command) {
        Ok(value) => {
            let text = match cli.format {
                Format::Json => format!("{value}\n"),
                Format::Text => {
                    let mut s = String::new();
                    render_text(&value, "", &mut s);
                    s
                }
            };
            let _ = out.write_all(text.as_bytes());
            0
        }
        Err(e) => {
            let _ = writeln!(err, "{}", json!({ "error": e.to_string() }));
            1
        }
    }
}
