//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line per
//! criterion and exits nonzero if any fails.

mod common;

use std::time::Instant;

use curvehull::diagonal::{
    build_m, factor_det_t, in_schur_ideal, taylor_remainder_check, vandermonde_cofactor, BlockPartition,
    SchurMonomialIdeal,
};
use curvehull::exact::mpoly::Exponent;
use curvehull::exact::parse::parse_unipoly_list;
use curvehull::exact::rational::{int, rat};
use curvehull::extreme::{
    chebyshev_det_sign, extreme_candidate, profile_and_normalize, supporting_face, validate_interval,
    vanishing_space_dim, verify_extreme, LinearSystem, ZeroPattern,
};
use curvehull::hull::{cross_validate, CurveSegment};
use curvehull::schur::{
    proper_dominance_check, schur_via_bialternant, schur_via_tableaux, subsequence_divisibility_check,
    DecreasingSeq,
};
use curvehull::sdp::{emit_sdpa, hankel_lmi, interval_moment_lmi, sosx_certificate};
use curvehull::{Interval, MultiPoly, Rational, UniPoly};
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn unit() -> Interval {
    Interval::new(int(0), int(1)).unwrap()
}

fn moment_system(n: usize) -> LinearSystem {
    let basis: Vec<UniPoly> = (0..=n).rev().map(|k| UniPoly::monomial(k, Rational::one())).collect();
    profile_and_normalize(&basis, &int(0)).unwrap()
}

fn bialternant_equivalence() -> Outcome {
    let mut cases = 0;
    for len in 1..=5 {
        for m in DecreasingSeq::all(len, 8) {
            ensure(schur_via_tableaux(&m) == schur_via_bialternant(&m), || format!("mismatch at {m}"))?;
            cases += 1;
        }
    }
    ensure(cases == 381, || format!("expected 381 sequences, got {cases}"))?;
    Ok(format!("{cases} sequences agree"))
}

fn fourth_elementary() -> Outcome {
    let terms = (0u32..32).filter(|m| m.count_ones() == 4).map(|mask| {
        let e: Exponent = (0..5).map(|i| (mask >> i) & 1).collect();
        (e, int(1))
    });
    let e4 = MultiPoly::from_terms(5, terms);
    let m = DecreasingSeq::new(vec![5, 4, 3, 2, 0]).unwrap();
    ensure(schur_via_tableaux(&m) == e4, || "tableaux differ from e_4".into())?;
    ensure(schur_via_bialternant(&m) == e4, || "bialternant differs from e_4".into())?;
    Ok("sigma_(5,4,3,2,0) = e_4".into())
}

fn divisibility_lemmas() -> Outcome {
    let mut dominance = 0;
    let mut subsequence = 0;
    for len in 1..=4 {
        let seqs = DecreasingSeq::all(len, 6);
        for a in &seqs {
            for b in &seqs {
                if a != b && a.entries().iter().zip(b.entries()).all(|(x, y)| y >= x) {
                    let r = proper_dominance_check(a, b).map_err(|e| e.to_string())?;
                    ensure(r.holds, || format!("proper divisibility fails for {a} <= {b}"))?;
                    ensure(r.witnesses.iter().all(|w| w.divisor.is_some()), || "missing witness".into())?;
                    dominance += 1;
                }
            }
            for mask in 1u32..(1 << len) {
                let idx: Vec<usize> = (0..len).filter(|i| mask & (1 << i) != 0).collect();
                let r = subsequence_divisibility_check(a, &idx).map_err(|e| e.to_string())?;
                ensure(r.holds, || format!("subsequence divisibility fails for {a} at {idx:?}"))?;
                subsequence += 1;
            }
        }
    }
    Ok(format!("{dominance} dominance pairs, {subsequence} subsequences"))
}

fn taylor_congruence() -> Outcome {
    // The remainder is linear in f, so monomials cover every f of degree <= 8;
    // random dense polynomials are checked as well.
    let mut checks = 0;
    for d in 0..=8 {
        for r in 1..=6 {
            ensure(taylor_remainder_check(&UniPoly::monomial(d, int(1)), r), || format!("t^{d}, r={r}"))?;
            checks += 1;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..40 {
        let f = UniPoly::new((0..=8).map(|_| common::small_rational(&mut rng)).collect());
        let r = rng.gen_range(1..=6);
        ensure(taylor_remainder_check(&f, r), || format!("{f}, r={r}"))?;
        checks += 1;
    }
    Ok(format!("{checks} divisibility checks"))
}

fn schur_ideal_membership() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut done = 0;
    while done < 200 {
        let n = rng.gen_range(1..=4);
        let orders = common::random_orders(&mut rng, n + 1, 7);
        let top = orders[0] + 1;
        let mut basis = common::perturbed_basis(&mut rng, &orders, top);
        // Every other case goes through normalization of a mixed basis.
        if done % 2 == 1 {
            let mixed: Vec<UniPoly> = (0..basis.len())
                .map(|i| {
                    basis[i..].iter().fold(UniPoly::zero(), |acc, p| &acc + &p.scale(&common::small_rational(&mut rng)))
                })
                .collect();
            match profile_and_normalize(&mixed, &int(0)) {
                Ok(v) if v.orders().entries()[0] <= 7 => basis = v.basis().to_vec(),
                _ => continue,
            }
        }
        let m = curvehull::diagonal::orders_at_zero(&basis).map_err(|e| e.to_string())?;
        let g = vandermonde_cofactor(&build_m(&basis).det()).map_err(|e| e.to_string())?;
        let report = in_schur_ideal(&g, &SchurMonomialIdeal::new(&m)).map_err(|e| e.to_string())?;
        ensure(report.holds, || format!("cofactor outside J({m}) for {basis:?}"))?;
        done += 1;
    }
    Ok(format!("{done} random bases"))
}

fn taylor_factorization() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let fixed = factor_det_t(
        &parse_unipoly_list("t^5+t^6, t^4, t^3, t^2, 1").unwrap(),
        &BlockPartition::new(vec![1, 2, 2]).unwrap(),
    )
    .map_err(|e| e.to_string())?;
    ensure(fixed.checked && fixed.dual_route_agrees, || "fixed example fails".into())?;
    let mut done = 1;
    while done < 60 {
        let n = rng.gen_range(1..=4);
        let orders = common::random_orders(&mut rng, n + 1, 6);
        let basis = common::perturbed_basis(&mut rng, &orders, orders[0] + 1);
        let comps = BlockPartition::compositions(n + 1);
        let b = &comps[rng.gen_range(0..comps.len())];
        let f = factor_det_t(&basis, b).map_err(|e| format!("{e} for {basis:?}, {:?}", b.sizes()))?;
        ensure(f.checked, || format!("cofactor outside collapsed ideal: {basis:?}, {:?}", b.sizes()))?;
        ensure(f.dual_route_agrees, || format!("dual route disagrees: {basis:?}, {:?}", b.sizes()))?;
        done += 1;
    }
    Ok(format!("{done} (basis, blocks) pairs"))
}

fn determinantal_candidates() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let (mut nonzero, mut zero) = (0, 0);
    for trial in 0..140 {
        let n = rng.gen_range(2..=4);
        let (v, zp) = if trial % 4 == 3 {
            // Two basis elements share the factor (t - xi)^n, so the
            // pattern {(xi, n)} leaves a space of dimension >= 2.
            let xi = common::unit_point(&mut rng, 6);
            let lin = UniPoly::linear_root(&xi);
            let mut basis = vec![lin.pow(n), &lin.pow(n) * &UniPoly::t()];
            basis.extend((0..n - 1).map(|k| UniPoly::monomial(k, int(1))));
            let v = profile_and_normalize(&basis, &int(0)).map_err(|e| e.to_string())?;
            (v, ZeroPattern::new(vec![xi], vec![n]).unwrap())
        } else {
            let orders = common::random_orders(&mut rng, n + 1, 5);
            let basis = common::perturbed_basis(&mut rng, &orders, orders[0] + 1);
            let v = profile_and_normalize(&basis, &int(0)).map_err(|e| e.to_string())?;
            let mut points = Vec::new();
            let mut mults = Vec::new();
            let mut left = n;
            while left > 0 {
                let x = common::unit_point(&mut rng, 5);
                if points.contains(&x) {
                    continue;
                }
                let b = rng.gen_range(1..=left);
                points.push(x);
                mults.push(b);
                left -= b;
            }
            (v, ZeroPattern::new(points, mults).unwrap())
        };
        let f = extreme_candidate(&v, &zp).map_err(|e| e.to_string())?;
        let dim = vanishing_space_dim(&v, &zp);
        ensure(!f.is_zero() == (dim == 1), || format!("det Z vs dim V_0 = {dim} for {:?}", v.basis()))?;
        if f.is_zero() {
            zero += 1;
        } else {
            for (x, &b) in zp.points().iter().zip(zp.mults()) {
                ensure(f.order_at(x).unwrap() >= b, || format!("order below {b} at {x}"))?;
            }
            nonzero += 1;
        }
    }
    ensure(zero > 0 && nonzero > 0, || "both directions must be exercised".into())?;
    Ok(format!("{} instances ({nonzero} nonzero, {zero} degenerate)", nonzero + zero))
}

fn moment_candidates() -> Vec<(ZeroPattern, UniPoly)> {
    let v = moment_system(4);
    let mut out = Vec::new();
    for i in 1..=10 {
        for j in (i + 1)..=10 {
            let zp = ZeroPattern::new(vec![rat(i, 11), rat(j, 11)], vec![2, 2]).unwrap();
            let f = extreme_candidate(&v, &zp).unwrap();
            out.push((zp, f));
        }
    }
    out
}

fn precisely_n_zeros() -> Outcome {
    let v = moment_system(4);
    let s = unit();
    let report = validate_interval(&v, &s, 5).map_err(|e| e.to_string())?;
    ensure(report.passed(), || format!("interval validation failed: {report:?}"))?;
    let candidates = moment_candidates();
    for (zp, f) in &candidates {
        let r = verify_extreme(&v, f, &s).map_err(|e| e.to_string())?;
        ensure(r.nonneg && r.extreme, || format!("{f} is not extreme"))?;
        ensure(r.zero_count == 4 && r.face_dim == 1, || format!("{f}: {r:?}"))?;
        ensure(r.exact_count_holds == Some(true), || format!("{f}: {r:?}"))?;
        let mut pts = zp.points().to_vec();
        pts.push(int(1));
        let sign = chebyshev_det_sign(&v, &pts, &[2, 2, 1], &s).map_err(|e| e.to_string())?;
        ensure(sign != 0, || format!("confluent determinant vanishes at {pts:?}"))?;
    }
    Ok(format!("{} patterns, each with 4 zeros and face dimension 1", candidates.len()))
}

fn few_zeros_probe() -> Outcome {
    let v = moment_system(4);
    let s = unit();
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut found = 0;
    let mut tries = 0;
    while found < 100 && tries < 2000 {
        tries += 1;
        let f = if tries % 2 == 0 {
            // Dense random element of V.
            UniPoly::new((0..=4).map(|_| common::small_rational(&mut rng)).collect())
        } else {
            // Rational zeros in s times a factor positive on s.
            let k = rng.gen_range(0..=1);
            let mut f = UniPoly::constant(rat(rng.gen_range(1..=3), 1));
            for _ in 0..k {
                f = &f * &UniPoly::linear_root(&common::unit_point(&mut rng, 7)).pow(rng.gen_range(1..=2));
            }
            let shift = rat(rng.gen_range(1..=4), 1);
            while f.degree().unwrap_or(0) < 4 && rng.gen_bool(0.7) {
                f = &f * &UniPoly::new(vec![shift.clone(), int(1)]);
            }
            f
        };
        if f.is_zero() {
            continue;
        }
        let zeros = curvehull::exact::roots::count_roots_with_multiplicity(&f, &s).map_err(|e| e.to_string())?;
        if zeros >= 4 {
            continue;
        }
        let face = supporting_face(&v, &f, &s).map_err(|e| format!("{e} for {f}"))?;
        ensure(face.dim >= 2, || format!("{f} has {zeros} zeros but face dimension {}", face.dim))?;
        found += 1;
    }
    ensure(found >= 100, || format!("only {found} probes found"))?;
    Ok(format!("{found} elements with fewer than 4 zeros, all with face dimension >= 2"))
}

fn block_bound() -> Outcome {
    for n in 1..=10 {
        let lmi = interval_moment_lmi(n, &unit()).map_err(|e| e.to_string())?;
        ensure(lmi.max_block_size() == 1 + n / 2, || format!("n={n}: max block {}", lmi.max_block_size()))?;
        ensure(lmi.blocks.iter().all(|b| b.size() <= 1 + n / 2), || format!("n={n}"))?;
    }
    for n in [2usize, 4] {
        let lmi = hankel_lmi(n).map_err(|e| e.to_string())?;
        let block = &lmi.blocks[0];
        ensure(block.size() == n / 2 + 1, || format!("hankel {n} size"))?;
        for i in 0..block.size() {
            for j in 0..block.size() {
                let want_a = if i + j == 0 { int(1) } else { int(0) };
                ensure(block.a.get(i, j) == &want_a, || format!("hankel {n} constant at ({i},{j})"))?;
                for k in 1..=n {
                    let want = if i + j == k { int(1) } else { int(0) };
                    ensure(block.b[k - 1].get(i, j) == &want, || format!("hankel {n} x{k} at ({i},{j})"))?;
                }
            }
        }
    }
    Ok("block sizes 1 + floor(n/2) for n <= 10; Hankel n = 2, 4 match".into())
}

fn sosx_certificates() -> Outcome {
    let mut count = 0;
    let mut check = |zp: &ZeroPattern, f: &UniPoly, n: usize| -> Result<(), String> {
        let cert = sosx_certificate(f, zp, &f.leading()).map_err(|e| format!("{e} for {f}"))?;
        ensure(&cert.square_root.pow(2).scale(&cert.scale) == f, || format!("reconstruction of {f}"))?;
        ensure(cert.declared_rank == 1 + n / 2, || format!("rank {} for {f}", cert.declared_rank))?;
        count += 1;
        Ok(())
    };
    for (zp, f) in moment_candidates() {
        check(&zp, &f, 4)?;
    }
    let v2 = moment_system(2);
    for i in 1..=10 {
        let zp = ZeroPattern::new(vec![rat(i, 11)], vec![2]).unwrap();
        check(&zp, &extreme_candidate(&v2, &zp).map_err(|e| e.to_string())?, 2)?;
    }
    let v6 = moment_system(6);
    for i in 1..=6 {
        for j in (i + 1)..=6 {
            for k in (j + 1)..=6 {
                let zp = ZeroPattern::new(vec![rat(i, 7), rat(j, 7), rat(k, 7)], vec![2, 2, 2]).unwrap();
                check(&zp, &extreme_candidate(&v6, &zp).map_err(|e| e.to_string())?, 6)?;
            }
        }
    }
    Ok(format!("{count} certificates reconstruct exactly"))
}

fn cross_validation() -> Outcome {
    let width = rat(1, 1_000_000);
    let mut summary = Vec::new();
    for n in [2usize, 4] {
        let c = CurveSegment::moment(n, unit()).map_err(|e| e.to_string())?;
        let lmi = interval_moment_lmi(n, &unit()).map_err(|e| e.to_string())?;
        let r = cross_validate(&c, &lmi, 50, 12, &width).map_err(|e| e.to_string())?;
        ensure(r.failures.is_empty(), || format!("n={n}: {:?}", r.failures))?;
        summary.push(format!("n={n}: {} hull / {} LMI members", r.hull_members, r.lmi_members));
    }
    Ok(summary.join("; "))
}

fn sdpa_golden() -> Outcome {
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/golden/");
    let unit_objective = |n: usize| -> Vec<Rational> { (1..=n).map(|k| if k == n { int(1) } else { int(0) }).collect() };
    let cases = [
        ("hankel2.dat-s", hankel_lmi(2)),
        ("hankel4.dat-s", hankel_lmi(4)),
        ("interval3.dat-s", interval_moment_lmi(3, &unit())),
    ];
    for (file, lmi) in cases {
        let lmi = lmi.map_err(|e| e.to_string())?;
        let golden = std::fs::read_to_string(format!("{dir}{file}")).map_err(|e| format!("{file}: {e}"))?;
        let emitted = emit_sdpa(&lmi, &unit_objective(lmi.n)).map_err(|e| e.to_string())?;
        ensure(emitted == golden, || format!("{file} differs:\n{emitted}"))?;
    }
    Ok("3 files match byte-for-byte".into())
}

fn main() {
    let criteria: Vec<(&str, fn() -> Outcome)> = vec![
        ("bialternant equivalence", bialternant_equivalence),
        ("fourth elementary symmetric polynomial", fourth_elementary),
        ("monomial divisibility lemmas", divisibility_lemmas),
        ("Taylor congruence", taylor_congruence),
        ("Schur ideal membership of Vandermonde cofactors", schur_ideal_membership),
        ("derivative-row determinant factorization", taylor_factorization),
        ("determinantal candidates vs vanishing spaces", determinantal_candidates),
        ("moment extreme rays have exactly n zeros", precisely_n_zeros),
        ("fewer than n zeros gives a face of dimension >= 2", few_zeros_probe),
        ("LMI block-size bound", block_bound),
        ("square-root certificates", sosx_certificates),
        ("sample hull / LMI cross-validation", cross_validation),
        ("SDPA golden files", sdpa_golden),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} ({secs:.1}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why} ({secs:.1}s)", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
