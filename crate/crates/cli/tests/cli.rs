use std::process::{Command, Output};

fn algebrae(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_algebrae")).args(args).env_remove("ALGEBRAE_TOL").output().unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = algebrae(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn quaternion_product() {
    assert_eq!(stdout(&["algebra", "mul", "--alg", "H", "--a", "0,1,0,0", "--b", "0,0,1,0"]), "{\"result\":[0,0,0,1]}\n");
}

#[test]
fn split_complex_zero_divisor() {
    assert_eq!(stdout(&["algebra", "unit", "--alg", "Cs", "--a", "1,1"]), "{\"unit\":false}\n");
    let out = algebrae(&["algebra", "inv", "--alg", "Cs", "--a", "1,1"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(out.stdout.is_empty());
}

#[test]
fn parse_errors_exit_2() {
    for args in [
        &["algebra", "inv", "--alg", "Q", "--a", "1"][..],
        &["algebra", "mul", "--alg", "C", "--a", "1,x", "--b", "1,0"],
        &["tance", "--alg", "C", "--sig", "+*", "--p", "1,0,0,0", "--q", "0,0,1,0"],
        &["frobnicate"],
    ] {
        assert_eq!(algebrae(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn csv_trace() {
    let text = stdout(&["--format", "csv", "geodesic-trace", "--alg", "R", "--sig", "++", "--p", "1,0", "--tp", "0,1", "--range", "0,pi/2", "--steps", "2"]);
    let mut lines = text.lines();
    assert!(lines.next().unwrap().starts_with("theta,point_0,point_1,"));
    assert!(lines.next().unwrap().starts_with("0.0,1,0,"));
    assert!(lines.next().unwrap().starts_with("1.5707963267948966,0,1,"));
    assert!(lines.next().is_none());
}

#[test]
fn sampling_ignores_thread_count() {
    let base = ["--seed", "11", "curvature", "--space", "hc2", "--samples", "200"];
    let one = stdout(&[&base[..], &["--jobs", "1"]].concat());
    let many = stdout(&[&base[..], &["--jobs", "4"]].concat());
    assert_eq!(one, many);
    assert_ne!(one, stdout(&["--seed", "12", "curvature", "--space", "hc2", "--samples", "200"]));
}

#[test]
fn tolerance_from_environment() {
    let args = ["algebra", "unit", "--alg", "D", "--a", "0.1,1"];
    assert_eq!(stdout(&args), "{\"unit\":true}\n");
    let out = Command::new(env!("CARGO_BIN_EXE_algebrae")).args(args).env("ALGEBRAE_TOL", "0.5").output().unwrap();
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "{\"unit\":false}\n");
    assert_eq!(algebrae(&["--tol", "-1", "algebra", "unit", "--alg", "R", "--a", "1"]).status.code(), Some(2));
}

#[test]
fn split_sphere_curvature() {
    assert_eq!(stdout(&["curvature", "--space", "ps1-split"]), "{\"K\":4.0}\n");
}

#[test]
fn signatures() {
    assert_eq!(stdout(&["signature", "--space", "pd1"]), "{\"signature\":\"+0\"}\n");
    assert_eq!(stdout(&["signature", "--space", "pcs1"]), "{\"signature\":\"+-\"}\n");
}

#[test]
fn hyperbolic_conversion_round_trip() {
    let fwd = stdout(&["convert", "h2", "--point", "(1,1),(0,0)"]);
    assert_eq!(fwd, "{\"A\":[1,1,0],\"B\":[1,-1,0],\"ds\":[0,0,1]}\n");
    let back = stdout(&["convert", "h2", "--ds", "0,0,1"]);
    let there = stdout(&["convert", "h2", "--point", &point_of(&back)]);
    assert!(there.contains("\"ds\":[0,0,1]"), "{back} -> {there}");
}

// `{"point":[[a,a'],[b,b']],...}` back to `(a,a'),(b,b')`
fn point_of(record: &str) -> String {
    let v: serde_json::Value = serde_json::from_str(record.trim()).unwrap();
    let pairs = v["point"].as_array().unwrap();
    pairs
        .iter()
        .map(|p| format!("({},{})", p[0], p[1]))
        .collect::<Vec<_>>()
        .join(",")
}

#[test]
fn bidisc_balls() {
    assert_eq!(stdout(&["bidisc", "classify", "--point", "(0.5,0.5i),(1,1)"]), "{\"ball\":\"B++\"}\n");
    let swapped = stdout(&["bidisc", "tau", "--point", "(0.5,0.5i),(1,1)"]);
    assert_eq!(swapped, "{\"point\":[0.0,0.5,0.5,0.0,1.0,0.0,1.0,0.0]}\n");
}
