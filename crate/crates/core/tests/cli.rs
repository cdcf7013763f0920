mod common;

use std::process::Command;

use common::data_path;

fn ybq(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = ybq::cli::run(std::iter::once("ybq").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn invariant_prints_the_polynomial() {
    let (code, out, _) = ybq(&[
        "invariant",
        "--code",
        &data_path("kishino.gauss"),
        "--biquandle",
        &data_path("kishino_T.bq"),
        "--cocycle",
        &data_path("phi1.cyc"),
    ]);
    assert_eq!((code, out.as_str()), (0, "12 + 2*t^-1 + 2*t\n"));
    let (_, out, _) = ybq(&[
        "invariant",
        "-c",
        &data_path("kishino.gauss"),
        "-b",
        &data_path("kishino_T.bq"),
        "--cocycle",
        &data_path("phi2.cyc"),
        "--porcelain",
    ]);
    assert_eq!(out, "[[-2,2],[0,12],[2,2]]\n");
}

#[test]
fn invariant_rejects_non_cocycles() {
    let (code, _, err) = ybq(&[
        "invariant",
        "-c",
        &data_path("kishino.gauss"),
        "-b",
        &data_path("kishino_T.bq"),
        "--cocycle",
        &data_path("phi1_uncorrected.cyc"),
    ]);
    assert_eq!(code, 1);
    assert!(err.contains("cocycle condition"), "{err}");
}

#[test]
fn suite_on_unknot_is_four_for_every_cocycle() {
    let (code, out, _) = ybq(&["suite", "-c", &data_path("unknot.gauss"), "-b", &data_path("kishino_T.bq"), "--field", "Q"]);
    assert_eq!((code, out.as_str()), (0, "phi[1]: 4\nphi[2]: 4\n"));
}

#[test]
fn alexander_non_unit_is_a_domain_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.bq");
    let (code, _, err) = ybq(&["alexander", "4", "2", "1", "-o", path.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(err.contains("s not invertible"), "{err}");
    assert!(!path.exists());
    let (code, _, _) = ybq(&["alexander", "5", "2", "3", "-o", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    let (code, out, _) = ybq(&["validate", path.to_str().unwrap()]);
    assert_eq!((code, out.as_str()), (0, "valid biquandle of order 5\n"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(ybq(&[]).0, 2);
    assert_eq!(ybq(&["frobnicate"]).0, 2);
    assert_eq!(ybq(&["suite", "-c", "x"]).0, 2);
    assert_eq!(ybq(&["cohomology", "-b", &data_path("kishino_T.bq"), "--field", "Zp:4"]).0, 2);
    assert_eq!(ybq(&["--jobs", "0", "validate", &data_path("kishino_T.bq")]).0, 2);
    let (code, out, _) = ybq(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("Usage"));
}

#[test]
fn domain_errors_exit_one() {
    let (code, out, err) = ybq(&["validate", &data_path("kishino_T_uncorrected.bq")]);
    assert_eq!(code, 1);
    assert!(out.starts_with("axiom 1.i fails at (3,4)\n"), "{out}");
    assert!(err.ends_with("not a biquandle\n"), "{err}");
    let (code, _, err) = ybq(&["colorings", "-c", &data_path("trefoil.gauss"), "-b", &data_path("kishino_T_uncorrected.bq")]);
    assert_eq!(code, 1);
    assert!(err.contains("not a biquandle: axiom 1.i fails at (3,4)"), "{err}");
    let (code, _, err) = ybq(&["colorings", "-c", "/nonexistent.gauss", "-b", &data_path("kishino_T.bq")]);
    assert_eq!(code, 1);
    assert!(err.contains("cannot read"));
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.gauss");
    std::fs::write(&bad, "1,2,-1,0").unwrap();
    let (code, _, _) = ybq(&["colorings", "-c", bad.to_str().unwrap(), "-b", &data_path("kishino_T.bq")]);
    assert_eq!(code, 1);
}

#[test]
fn cohomology_output() {
    let (code, out, _) = ybq(&["cohomology", "-b", &data_path("kishino_T.bq")]);
    assert_eq!(code, 0);
    assert_eq!(
        out,
        "field Q\ndim Z2 = 6\ndim B2 = 3\ndim H2 = 3\ndim reduced H2 = 2\n\
         phi[1]: X(1,3)+X(2,1)+X(2,2)+X(3,2)\n\
         phi[2]: X(1,3)+X(1,4)+X(2,1)-X(2,3)+X(3,1)-X(3,4)\n"
    );
    let (_, out, _) = ybq(&["cohomology", "-b", &data_path("kishino_T.bq"), "--classify", &data_path("phi2.cyc")]);
    assert_eq!(out, "NONTRIVIAL_COCYCLE RI-reduced\n");
    let (_, out, _) = ybq(&["cohomology", "-b", &data_path("kishino_T.bq"), "--classify", &data_path("phi1_uncorrected.cyc")]);
    assert!(out.starts_with("NOT_COCYCLE"), "{out}");
}

#[test]
fn colorings_and_presentation() {
    let (code, out, _) = ybq(&["colorings", "-c", &data_path("trefoil.gauss"), "-b", &data_path("kishino_T.bq"), "--show-presentation"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "presentation: < 1, 2, 3, 4, 5, 6 | 1^4 = 2, 2_5 = 3, 3^6 = 4, 4_1 = 5, 5^2 = 6, 6_3 = 1 >");
    assert!(lines[1].starts_with("reduced: < 1, 4 |"));
    assert_eq!(lines[2], "1:1 2:1 3:1 4:1 5:1 6:1");
    assert_eq!(lines.len(), 6);
    let (_, fast, _) = ybq(&["colorings", "-c", &data_path("link2.gauss"), "-b", &data_path("kishino_T.bq")]);
    let (_, slow, _) = ybq(&["colorings", "-c", &data_path("link2.gauss"), "-b", &data_path("kishino_T.bq"), "--oracle"]);
    assert_eq!(fast, slow);
    let (_, n, _) = ybq(&["colorings", "-c", &data_path("kishino.gauss"), "-b", &data_path("kishino_T.bq"), "--count"]);
    assert_eq!(n, "16\n");
}

#[test]
fn enumerate_writes_numbered_files() {
    let dir = tempfile::tempdir().unwrap();
    let (code, out, _) = ybq(&["enumerate", "3", "-o", dir.path().to_str().unwrap()]);
    assert_eq!((code, out.as_str()), (0, "36\n"));
    let mut names: Vec<String> = std::fs::read_dir(dir.path())
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .collect();
    names.sort();
    assert_eq!(names.first().map(String::as_str), Some("0001.bq"));
    assert_eq!(names.len(), 36);
    for name in &names {
        let (code, _, _) = ybq(&["validate", dir.path().join(name).to_str().unwrap()]);
        assert_eq!(code, 0);
    }
    assert_eq!(ybq(&["enumerate", "5"]).0, 1);
}

#[test]
fn listing_convention_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("a.bq");
    let (code, _, _) = ybq(&["--block-convention", "listing", "alexander", "3", "2", "2", "-o", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(ybq(&["--block-convention", "listing", "validate", path.to_str().unwrap()]).0, 0);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_ybq");
    let ok = Command::new(bin)
        .args(["suite", "-c", &data_path("kishino.gauss"), "-b", &data_path("kishino_T.bq")])
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&ok.stdout), "phi[1]: 12 + 2*t^-1 + 2*t\nphi[2]: 12 + 2*t^-2 + 2*t^2\n");
    let bad = Command::new(bin).args(["alexander", "4", "2", "1"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(1));
    let usage = Command::new(bin).arg("--nope").output().unwrap();
    assert_eq!(usage.status.code(), Some(2));
}
