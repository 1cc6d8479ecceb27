use hecke_center::cli::run;
use hecke_center::export::{matrix_from_csv, matrix_from_json, matrix_to_csv, matrix_to_json};

fn ok(args: &[&str]) -> String {
    let mut argv = vec!["hecke-center"];
    argv.extend_from_slice(args);
    let out = run(argv);
    assert_eq!(out.code, 0, "{args:?}: {}", out.stderr);
    out.stdout
}

#[test]
fn verify_n1_prints_matrix() {
    let out = ok(&["verify", "--n", "4", "--theorem", "n1"]);
    assert!(out.starts_with("n1 n=4 pass"), "{out}");
    assert!(out.contains("Q^2  2*Q"), "{out}");
}

#[test]
fn verify_all_trivial() {
    let out = ok(&["verify", "--n", "1", "--theorem", "all", "--format", "csv"]);
    assert!(out.lines().skip(1).all(|l| !l.contains(",fail,")), "{out}");
}

#[test]
fn transition_h_to_m() {
    let out = ok(&[
        "transition",
        "--n",
        "5",
        "--from",
        "h",
        "--to",
        "m",
        "--format",
        "json",
    ]);
    let m = matrix_from_json(out.trim()).unwrap();
    assert_eq!(m.nrows(), 7);
    assert_eq!(m.get(2, 6).to_string(), "10");
}

#[test]
fn matrix_output_round_trips() {
    for pretty in [false, true] {
        let mut args = vec!["char-table", "--n", "4", "--format", "json"];
        if pretty {
            args.push("--pretty-Q");
        }
        let out = ok(&args);
        let m = matrix_from_json(out.trim()).unwrap();
        assert_eq!(matrix_to_json(&m, pretty), out.trim());
        args[4] = "csv";
        let out = ok(&args);
        let m = matrix_from_csv(&out).unwrap();
        assert_eq!(matrix_to_csv(&m, pretty), out);
    }
}

#[test]
fn specialization() {
    let out = ok(&["char-table", "--n", "3", "--at-q", "1", "--format", "csv"]);
    assert!(out.contains("21,-1,0,2"), "{out}");
}

#[test]
fn central_basis_in_gamma() {
    let out = ok(&[
        "central-basis",
        "--n",
        "4",
        "--kind",
        "n1",
        "--in-gamma",
        "--pretty-Q",
        "--format",
        "json",
    ]);
    assert!(out.contains(r#"["0","0","Q^2","2*Q","6"]"#), "{out}");
    let out = ok(&[
        "central-basis",
        "--n",
        "3",
        "--kind",
        "gr",
        "--format",
        "json",
    ]);
    assert!(out.starts_with(r#"{"111":{"[1,2,3]":"1"}"#), "{out}");
}

#[test]
fn element_subcommand() {
    let out = ok(&[
        "element",
        "--n",
        "5",
        "--spec",
        "word:2.1.1.2.4.4",
        "--normalize",
        "32",
        "--format",
        "json",
    ]);
    assert!(out.contains(r#""[2,1,4,3,5]":"2*q^2-4+2*q^-2""#), "{out}");
    let out = ok(&["element", "--n", "4", "--spec", "e:3", "--in-gamma"]);
    assert!(out.contains("Gamma_4: 1"), "{out}");
}

#[test]
fn exit_codes() {
    assert_eq!(
        run(["hecke-center", "verify", "--n", "3", "--theorem", "bogus"]).code,
        2
    );
    assert_eq!(run(["hecke-center", "char-table", "--n", "7"]).code, 2);
    assert_eq!(
        run(["hecke-center", "char-table", "--n", "3", "--at-q", "0"]).code,
        2
    );
    let out = run([
        "hecke-center",
        "transition",
        "--n",
        "3",
        "--from",
        "q",
        "--to",
        "m",
    ]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("--from"), "{}", out.stderr);
    let large = run([
        "hecke-center",
        "transition",
        "--n",
        "6",
        "--from",
        "h",
        "--to",
        "m",
    ]);
    assert_eq!(large.code, 0);
    assert!(large.stderr.contains("warning"));
}

#[test]
fn verify_list_needs_no_size() {
    let out = ok(&["verify", "--list"]);
    assert!(out.lines().any(|l| l.starts_with("phi-upsilon")));
    assert_eq!(run(["hecke-center", "verify"]).code, 2);
}
