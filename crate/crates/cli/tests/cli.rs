use std::process::{Command, Output};

fn qpsum(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qpsum")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = qpsum(args);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn expand_power_sum_in_fundamentals_as_json() {
    let out = stdout(&[
        "expand",
        "--basis",
        "P",
        "--order",
        "descending",
        "--index",
        "1,2,1,1",
        "--to",
        "F",
        "--format",
        "json",
    ]);
    assert_eq!(
        out.trim(),
        r#"{"basis":"F","terms":[{"index":[1,4],"coeff":"3"},{"index":[1,1,3],"coeff":"-3"},{"index":[1,3,1],"coeff":"3"},{"index":[1,1,2,1],"coeff":"-3"}]}"#
    );
}

#[test]
fn expand_text_forms() {
    assert_eq!(stdout(&["expand", "--basis", "P", "--index", "2,1,2"]).trim(), "2*M(3,2) + 2*M(2,1,2)");
    assert_eq!(
        stdout(&["expand", "--basis", "sym-p", "--index", "2,2,1"]).trim(),
        "m(5) + 2*m(3,2) + m(4,1) + 2*m(2,2,1)"
    );
    assert_eq!(stdout(&["expand", "--basis", "P_nc", "--index", "3,4/1,5/2"]).trim(), "M_nc(34|125) + M_nc(34|15|2)");
    assert_eq!(
        stdout(&["expand", "--basis", "P_nc", "--index", "1,5/3,4/2", "--to", "F"]).trim(),
        "F(5) - F(1,4) - F(3,2) + F(1,2,2)"
    );
    assert_eq!(stdout(&["expand", "--basis", "P_nc", "--index", "4,5/1/2", "--to", "F"]).trim(), "F(4) - F(1,3)");
}

#[test]
fn fillings_sd_shows_two_grids_with_multiplicities() {
    let out = stdout(&["fillings", "--kind", "SD", "--index", "2,1,2"]);
    assert!(out.starts_with("2 fillings\n"));
    assert_eq!(out.matches("row permutations: 2").count(), 2);
    assert!(out.contains("2 | 2 . .\n1 | . 1 .\n2 | . . 2\n"));
    let json = stdout(&["fillings", "--kind", "SD", "--index", "2,1,2", "--format", "json"]);
    assert!(
        json.starts_with(r#"[{"rows":[{"value":2,"col":1},{"value":1,"col":1},{"value":2,"col":2}],"row_perms":"2"}"#)
    );
}

#[test]
fn fillings_counts() {
    assert!(stdout(&["fillings", "--kind", "A", "--index", "2,2,1"]).starts_with("6 fillings\n"));
    assert!(stdout(&["fillings", "--kind", "LDD", "--index", "3,4/1,5/2"]).starts_with("2 fillings\n"));
    assert!(stdout(&["fillings", "--kind", "LDD", "--index", "1,5/3,4/2"]).starts_with("4 fillings\n"));
}

#[test]
fn mnrule_reports_heights_and_sdr_counts() {
    let out = stdout(&["mnrule", "--index", "1,2,1,1"]);
    assert!(out.contains("beta = (1,1,3): ht = 1, SDR = 3, coeff = -3"));
    assert!(out.contains("P(1,2,1,1) = 3*F(1,4) - 3*F(1,1,3) + 3*F(1,3,1) - 3*F(1,1,2,1)"));
    let json = stdout(&["mnrule", "--index", "1,2,1,1", "--format", "json"]);
    assert!(json.contains(r#""lower":[1,1,2,1],"upper":[1,4]"#));
}

#[test]
fn products_and_coproducts() {
    assert_eq!(
        stdout(&["product", "--basis", "Ptilde", "--left", "1", "--right", "2,1"]).trim(),
        "Ptilde(1,2,1) + 2*Ptilde(2,1,1)"
    );
    assert_eq!(
        stdout(&["product", "--basis", "P", "--left", "1", "--right", "1", "--to", "M"]).trim(),
        "M(2) + 2*M(1,1)"
    );
    assert_eq!(
        stdout(&["product", "--basis", "P_nc", "--left", "1", "--right", "2/1"]).trim(),
        "P_nc(1|3|2) + P_nc(3|1|2) + P_nc(3|2|1)"
    );
    assert_eq!(
        stdout(&["coproduct", "--basis", "P", "--index", "2,1"]).trim(),
        "P() ⊗ P(2,1) + P(2) ⊗ P(1) + P(2,1) ⊗ P()"
    );
}

#[test]
fn convert_round_trips_through_json() {
    let p = stdout(&[
        "expand",
        "--basis",
        "F",
        "--index",
        "2,1",
        "--to",
        "P",
        "--to-order",
        "ascending",
        "--format",
        "json",
    ]);
    let back = stdout(&["convert", "--input", p.trim(), "--to", "F", "--format", "json"]);
    assert_eq!(back.trim(), r#"{"basis":"F","terms":[{"index":[2,1],"coeff":"1"}]}"#);
}

#[test]
fn custom_order_file() {
    let dir = std::env::temp_dir().join(format!("qpsum-order-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("order.txt");
    std::fs::write(&path, "3 1\n").unwrap();
    let p = path.to_str().unwrap();
    // With 3 above 1 the pair (1,3) has no merged column.
    assert_eq!(stdout(&["expand", "--basis", "P", "--order-file", p, "--index", "1,3"]).trim(), "M(1,3)");
    assert_eq!(stdout(&["expand", "--basis", "P", "--index", "1,3"]).trim(), "M(1,3)");
    assert_eq!(stdout(&["expand", "--basis", "P", "--order-file", p, "--index", "3,1"]).trim(), "M(4) + M(3,1)");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn output_is_deterministic() {
    let args = ["expand", "--basis", "P", "--index", "3,1,2", "--to", "F", "--format", "json"];
    assert_eq!(stdout(&args), stdout(&args));
}

#[test]
fn domain_errors_exit_one() {
    for args in [
        &["expand", "--basis", "P", "--index", "1,0"][..],
        &["expand", "--basis", "P", "--index", "1,x"],
        &["expand", "--basis", "Q", "--index", "1"],
        &["expand", "--basis", "P", "--order", "dtilde", "--index", "1"],
        &["expand", "--basis", "P_nc", "--index", "1,2/2"],
        &["product", "--basis", "sym-p", "--left", "1", "--right", "1"],
        &["verify", "--suite", "nope"],
        &["bogus"],
    ] {
        let out = qpsum(args);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn verify_passes_with_exit_zero() {
    let out = stdout(&["verify", "--suite", "refine", "--max-weight", "6"]);
    assert!(out.starts_with("refine: ok"));
}
