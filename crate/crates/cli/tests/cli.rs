use std::process::{Command, Output};

fn restrict(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_restrict"))
        .args(args)
        .output()
        .expect("restrict binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = restrict(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn restrict_examples() {
    let hook = ["restrict", "--family", "hook", "--rep", "sign"];
    assert_eq!(
        stdout(&[&hook[..], &["--a", "3", "--b", "2", "--n", "5"]].concat()),
        "2\n"
    );
    assert_eq!(
        stdout(&[&hook[..], &["--a", "2", "--b", "1", "--n", "3"]].concat()),
        "3\n"
    );
    let two_column = [
        "restrict",
        "--family",
        "two-column",
        "--k",
        "4",
        "--l",
        "1",
        "--n",
        "5",
    ];
    assert_eq!(
        stdout(&[&two_column[..], &["--rep", "sign"]].concat()),
        "1\n"
    );
}

#[test]
fn restrict_check_lists_every_method() {
    let text = stdout(&[
        "restrict", "--family", "hook", "--a", "3", "--b", "2", "--n", "5", "--check", "--method",
        "all", "--format", "csv",
    ]);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "family,params,n,rep,method,multiplicity");
    assert_eq!(lines.len(), 5);
    for (line, method) in lines[1..]
        .iter()
        .zip(["formula", "moment", "series", "oracle"])
    {
        assert_eq!(*line, format!("hook,a=3;b=2,5,sign,{method},2"));
    }
}

#[test]
fn restrict_oracle_only_lambda() {
    assert_eq!(
        stdout(&["restrict", "--lambda", "3,1", "--n", "3", "--rep", "trivial"]),
        "2\n"
    );
    let out = restrict(&[
        "restrict", "--lambda", "3,1", "--n", "3", "--method", "moment",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["restrict", "--family", "hook", "--a", "1", "--n", "3"][..],
        &[
            "restrict", "--family", "hook", "--a", "1", "--b", "5", "--n", "3",
        ],
        &["restrict", "--family", "pentagon", "--n", "3"],
        &["charpoly", "--family", "h"],
        &[
            "table",
            "--family",
            "hook",
            "--out",
            "/nonexistent/dir/t.csv",
        ],
    ] {
        assert_eq!(restrict(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn charpoly_examples() {
    assert_eq!(
        stdout(&["charpoly", "--family", "h", "--k", "2"]),
        "X1 + C(X1,2) + X2\n"
    );
    assert_eq!(stdout(&["charpoly", "--family", "e", "--l", "1"]), "X1\n");
    assert_eq!(
        stdout(&["charpoly", "--family", "e", "--l", "2"]),
        "C(X1,2) - X2\n"
    );
    assert_eq!(
        stdout(&["charpoly", "--family", "hook", "--a", "0", "--b", "0"]),
        "X1\n"
    );
}

#[test]
fn table_csv_matches_the_counts() {
    let text = stdout(&[
        "table", "--family", "hook", "--a-max", "4", "--b-max", "2", "--n-max", "6", "--rep",
        "sign", "--format", "csv",
    ]);
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("family,params,n,rep,method,multiplicity")
    );
    let mut rows = 0;
    for line in lines {
        let cells: Vec<&str> = line.split(',').collect();
        let params: Vec<u32> = cells[1]
            .split(';')
            .map(|kv| kv.split_once('=').unwrap().1.parse().unwrap())
            .collect();
        let n: u32 = cells[2].parse().unwrap();
        let expected = restriction::counts::hook_sign_mult(n, params[0], params[1]).unwrap();
        assert_eq!(cells[5].parse::<u64>().unwrap(), expected, "{line}");
        rows += 1;
    }
    // b = 0, 1, 2 contribute 6, 5, 4 values of n for each of 5 arms
    assert_eq!(rows, 5 * (6 + 5 + 4));
}

#[test]
fn table_json_and_empty_range() {
    let text = stdout(&[
        "table",
        "--family",
        "two-column",
        "--n-max",
        "4",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert!(v
        .as_array()
        .unwrap()
        .iter()
        .all(|r| r["family"] == "two-column"));
    let empty = stdout(&[
        "table", "--family", "hook", "--n-max", "0", "--format", "csv",
    ]);
    assert_eq!(empty, "family,params,n,rep,method,multiplicity\n");
}

#[test]
fn table_writes_to_file() {
    let path = std::env::temp_dir().join(format!("restrict-table-{}.csv", std::process::id()));
    let p = path.to_str().unwrap();
    stdout(&[
        "table", "--family", "hook", "--a-max", "1", "--b-max", "1", "--n-max", "3", "--format",
        "csv", "--out", p,
    ]);
    let text = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert!(text.starts_with("family,params,n,rep,method,multiplicity\n"));
    assert!(text.contains("hook,a=1;b=1,3,sign,formula,"));
}

#[test]
fn verify_quick_and_injected_fault() {
    let out = restrict(&["verify", "--level", "quick"]);
    assert_eq!(out.status.code(), Some(0));
    let out = restrict(&[
        "verify",
        "--level",
        "quick",
        "--inject-fault",
        "q-star-closed",
    ]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stdout).contains("first counterexample: q*_4"));
}
