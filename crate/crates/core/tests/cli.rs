use std::process::{Command, Output};

fn hypermaps(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hypermaps"))
        .args(args)
        .output()
        .expect("run binary")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn count_with_oracle_matches() {
    let o = hypermaps(&["count", "--l", "3", "--b", "3,3,3", "--oracle"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("g=1: 152/3"), "{s}");
    assert!(s.contains("MATCH"), "{s}");
}

#[test]
fn genus_filter() {
    let o = hypermaps(&[
        "count", "--l", "3", "--b", "3,3", "--genus", "1", "--format", "csv",
    ]);
    assert_eq!(stdout(&o), "g,value\n1,3\n");
}

#[test]
fn json_round_trips() {
    for args in [
        vec!["count", "--l", "6", "--b", "1,3,3,5", "--format", "json"],
        vec![
            "table", "--l", "4", "--b", "4", "--kmax", "2", "--gmax", "2", "--format", "json",
        ],
        vec![
            "series", "--l", "3", "--k", "2", "--order", "6", "--format", "json",
        ],
    ] {
        let text = stdout(&hypermaps(&args));
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(format!("{v}\n"), text);
    }
}

#[test]
fn output_is_independent_of_jobs() {
    let a = hypermaps(&[
        "count", "--l", "3", "--b", "2,2,2,3", "--oracle", "--jobs", "1", "--format", "json",
    ]);
    let b = hypermaps(&[
        "count", "--l", "3", "--b", "2,2,2,3", "--oracle", "--jobs", "3", "--format", "json",
    ]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn table_csv() {
    let o = hypermaps(&[
        "table", "--l", "3", "--b", "3", "--kmax", "4", "--gmax", "2", "--format", "csv",
    ]);
    assert_eq!(
        stdout(&o),
        "k,g0,g1,g2\n1,1/3,1/3,0\n2,1,3,0\n3,8,152/3,16\n4,112,1256,1416\n"
    );
}

#[test]
fn series_heads() {
    let s = stdout(&hypermaps(&[
        "series", "--l", "3", "--k", "1", "--order", "7",
    ]));
    assert!(s.contains("λ^-4: n^3 + n"), "{s}");
    let v: serde_json::Value = serde_json::from_slice(
        &hypermaps(&[
            "series", "--l", "3", "--k", "2", "--order", "6", "--format", "json",
        ])
        .stdout,
    )
    .unwrap();
    for t in v["terms"].as_array().unwrap() {
        assert!(t["exp"]
            .as_array()
            .unwrap()
            .iter()
            .all(|e| e.as_i64().unwrap() <= -2));
    }
}

#[test]
fn exit_codes() {
    assert_eq!(
        hypermaps(&["count", "--l", "3", "--b", "2"]).status.code(),
        Some(0)
    );
    assert_eq!(
        hypermaps(&["count", "--l", "3", "--b", "6,6,3", "--oracle"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        hypermaps(&["verify", "unknown-suite"]).status.code(),
        Some(2)
    );
    assert_eq!(
        hypermaps(&["table", "--l", "3", "--b", "30", "--kmax", "3", "--gmax", "1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(hypermaps(&["count", "--l", "3"]).status.code(), Some(2));
}

#[test]
fn verify_examples() {
    for args in [
        vec!["verify", "tcfin", "--lmax", "5", "--smax", "6"],
        vec!["verify", "dualpath", "--l", "4", "--bmax", "8"],
        vec!["verify", "duality", "--l", "3", "--b", "2", "--k", "3"],
    ] {
        let o = hypermaps(&args);
        assert_eq!(o.status.code(), Some(0), "{args:?}: {}", stdout(&o));
    }
}
