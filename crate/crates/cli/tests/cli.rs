use curvehull_cli::run;
use serde_json::Value;

fn call(args: &[&str]) -> (i32, String, String) {
    let argv: Vec<String> = std::iter::once("curvehull").chain(args.iter().copied()).map(String::from).collect();
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(&argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str]) -> Value {
    let (code, out, err) = call(args);
    assert_eq!(code, 0, "stderr: {err}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn schur_staircase_is_one() {
    let v = json(&["schur", "--seq", "2,1,0"]);
    assert_eq!(v["tableaux"], "1");
    assert_eq!(v["bialternant"], "1");
    assert_eq!(v["equal"], true);
}

#[test]
fn schur_single_method() {
    let v = json(&["schur", "--seq", "2,0", "--method", "tableaux"]);
    assert_eq!(v["tableaux"], "x0 + x1");
    assert!(v.get("bialternant").is_none());
}

#[test]
fn verify_schur_small_exhaustive_has_no_failures() {
    let v = json(&["verify-schur", "--max-len", "3", "--max-entry", "4"]);
    assert_eq!(v["bialternant_equal"], true);
    assert_eq!(v["dominance_failures"].as_array().unwrap().len(), 0);
    assert_eq!(v["subsequence_failures"].as_array().unwrap().len(), 0);
}

#[test]
fn verify_schur_single_pairs() {
    let v = json(&["verify-schur", "--a", "2,1,0", "--b", "3,1,0"]);
    assert_eq!(v["holds"], true);
    let v = json(&["verify-schur", "--a", "4,2,0", "--indices", "0,2"]);
    assert_eq!(v["holds"], true);
    let (code, _, _) = call(&["verify-schur", "--a", "2,1,0"]);
    assert_eq!(code, 1);
}

#[test]
fn verify_diagonal_reports_both_routes() {
    let v = json(&["verify-diagonal", "--basis", "t^3,t,1", "--blocks", "1,2"]);
    assert_eq!(v["checked"], true);
    assert_eq!(v["dual_route_agrees"], true);
    assert_eq!(v["membership"]["holds"], true);
}

#[test]
fn extreme_candidate_with_double_zeros() {
    let v = json(&["extreme", "--basis", "t^4,t^3,t^2,t,1", "--interval", "0,1", "--zeros", "1/3:2,2/3:2"]);
    assert_eq!(v["report"]["extreme"], true);
    assert_eq!(v["report"]["face_dim"], 1);
    assert_eq!(v["certificate"]["square_root"], "t^2 - t + 2/9");
}

#[test]
fn verify_extreme_flags_non_extreme() {
    let v = json(&["verify-extreme", "--basis", "t^2,t,1", "--interval", "0,1", "--f", "t^2 + 1"]);
    assert_eq!(v["nonneg"], true);
    assert_eq!(v["extreme"], false);
}

#[test]
fn lmi_json_round_trips_into_member() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("lmi.json");
    let (code, out, _) = call(&["lmi", "--kind", "interval", "--n", "3", "--interval", "0,1"]);
    assert_eq!(code, 0);
    std::fs::write(&path, out).unwrap();
    let p = path.to_str().unwrap();
    // (1/2, 1/4, 1/8) lies on the curve; (1/2, 1/8, 1/8) violates x2 >= x1^2.
    assert_eq!(json(&["member", "--lmi", p, "--point", "1/2,1/4,1/8"])["member"], true);
    assert_eq!(json(&["member", "--lmi", p, "--point", "1/2,1/8,1/8"])["member"], false);
    let (code, _, err) = call(&["member", "--lmi", p, "--point", "1,2"]);
    assert_eq!(code, 1, "{err}");
}

#[test]
fn lmi_writes_sdpa_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("h2.dat-s");
    let (code, _, _) = call(&["lmi", "--kind", "hankel", "--n", "2", "--sdpa", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    let text = std::fs::read_to_string(&path).unwrap();
    let data: Vec<&str> = text.lines().filter(|l| !l.starts_with('*')).collect();
    assert_eq!(&data[..4], &["2", "1", "2", "0 1"]);
}

#[test]
fn support_of_moment_curve() {
    let v = json(&["support", "--n", "2", "--interval", "0,1", "--functional", "-1,1"]);
    assert_eq!(v["lo"], "-1/4");
    assert_eq!(v["hi"], "-1/4");
    let v = json(&["support", "--curve", "t,t^2", "--interval", "0,1", "--functional", "1,0"]);
    assert_eq!(v["lo"], "0");
}

#[test]
fn cross_validate_is_deterministic_per_seed() {
    let args = ["cross-validate", "--n", "3", "--interval", "0,1", "--trials", "4", "--seed", "7"];
    let (a, b) = (json(&args), json(&args));
    assert_eq!(a, b);
    assert_eq!(a["failures"].as_array().unwrap().len(), 0);
}

#[test]
fn exit_codes() {
    assert_eq!(call(&["bogus"]).0, 2);
    assert_eq!(call(&["schur", "--seq", "1,2"]).0, 2);
    assert_eq!(call(&["support", "--n", "2", "--interval", "1,0", "--functional", "1,1"]).0, 2);
    assert_eq!(call(&["lmi", "--kind", "hankel", "--n", "3"]).0, 1);
    let (code, out, _) = call(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("cross-validate"));
}

#[test]
fn text_format_flattens_keys() {
    let (code, out, _) = call(&["schur", "--seq", "2,1,0", "--format", "text"]);
    assert_eq!(code, 0);
    assert!(out.lines().any(|l| l == "equal: true"));
}

#[test]
fn hankel_two_block_is_one_x1_x1_x2() {
    let v = json(&["lmi", "--kind", "hankel", "--n", "2"]);
    let block = &v["blocks"][0];
    assert_eq!(block["A"], serde_json::json!([["1", "0"], ["0", "0"]]));
    assert_eq!(block["B"][0], serde_json::json!([["0", "1"], ["1", "0"]]));
    assert_eq!(block["B"][1], serde_json::json!([["0", "0"], ["0", "1"]]));
}

#[test]
fn hankel_four_rejects_negative_top_moment() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("hankel4.json");
    let (_, out, _) = call(&["lmi", "--kind", "hankel", "--n", "4"]);
    std::fs::write(&path, out).unwrap();
    let p = path.to_str().unwrap();
    assert_eq!(json(&["member", "--lmi", p, "--point", "0,0,0,-1"])["member"], false);
    assert_eq!(json(&["member", "--lmi", p, "--point", "0,1,0,3"])["member"], true);
}

#[test]
fn decimal_points_parse_exactly() {
    let v = json(&["support", "--n", "2", "--interval", "0,1", "--functional", "-1,1", "--width", "0.001"]);
    assert_eq!(v["lo"], "-1/4");
    assert_eq!(call(&["member", "--lmi", "x.json", "--point", "1/0"]).0, 2);
}
