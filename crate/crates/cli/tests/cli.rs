use std::path::PathBuf;
use std::process::Command;

use lonely_cli::spec::{ClosedFormSpec, LatticeSpec, TermSpec};
use lonely_cli::run;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
        .display()
        .to_string()
}

fn lonely(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_lonely")).args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn documented_examples() {
    let (code, out, _) = lonely(&["ultimate", "--lattice", &data("fig3-left.json")]);
    assert_eq!((code, out.trim()), (0, r#"{"count":9}"#));
    let (code, out, _) = lonely(&["enumerate", "--lattice", &data("fig3-right.json"), "--dilation", "5"]);
    assert_eq!((code, out.trim()), (0, "[[0,4],[0,5],[4,0],[5,0]]"));
    let (code, out, _) = lonely(&["reduce", "--closedform", &data("ex11.json"), "--degree", "2"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(code, 0);
    assert_eq!(v, serde_json::json!({"q": ["-1", "-2", "1"], "order": 2}));
}

#[test]
fn other_subcommands() {
    let (_, out, _) = lonely(&["infinite", "--lattice", &data("example4.json"), "--corner", "0"]);
    assert_eq!(out.trim(), r#"{"infinite":true}"#);
    let (_, out, _) = lonely(&["count", "--lattice", &data("fig3-left.json"), "--corner", "0"]);
    assert_eq!(out.trim(), r#"{"count":6}"#);
    let (_, out, _) = lonely(&["count", "--lattice", &data("trivial2.json"), "--corner", "0"]);
    assert_eq!(out.trim(), r#"{"count":"infinity"}"#);
    let (_, out, _) = lonely(&["exponent-lattice", "--bases", "4,8"]);
    assert_eq!(out.trim(), r#"{"ambient_dimension":2,"generators":[[3,-2]]}"#);
    let (_, out, _) = lonely(&["exponent-lattice", "--bases", "-1,2"]);
    assert_eq!(out.trim(), r#"{"ambient_dimension":2,"generators":[[2,0]]}"#);
    let (_, out, _) = lonely(&["bound-check", "--lattice", &data("fig3-left.json")]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["guarantee"], "none");
    let (_, out, _) = lonely(&["reduce", "--closedform", &data("ex12.json"), "--degree", "2", "--ansatz", "full"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["q"], serde_json::json!(["-1", "1"]));
}

#[test]
fn exit_codes() {
    let (code, out, err) = lonely(&["ultimate", "--lattice", "/nonexistent.json"]);
    assert_eq!(code, 1);
    assert!(out.is_empty() && err.contains("cannot read"));
    let (code, _, _) = lonely(&["count", "--lattice", &data("fig3-left.json"), "--corner", "3"]);
    assert_eq!(code, 1);
    let (code, _, _) = lonely(&["enumerate", "--lattice", &data("fig3-left.json")]);
    assert_eq!(code, 1);
    let (code, _, _) = lonely(&["exponent-lattice", "--bases", "2,0"]);
    assert_eq!(code, 1);
    let (code, _, err) = lonely(&["enumerate", "--lattice", &data("example4.json"), "--dilation", "30", "--max-box", "1000"]);
    assert_eq!(code, 2, "{err}");
    let (code, out, _) = lonely(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("enumerate"));
}

#[test]
fn malformed_files() {
    let dir = tempfile::tempdir().unwrap();
    let bad_len = dir.path().join("bad.json");
    std::fs::write(&bad_len, r#"{"ambient_dimension": 3, "generators": [[1, 2]]}"#).unwrap();
    let (code, _, err) = lonely(&["ultimate", "--lattice", bad_len.to_str().unwrap()]);
    assert_eq!(code, 1, "{err}");
    let not_json = dir.path().join("x.json");
    std::fs::write(&not_json, "ambient_dimension = 2").unwrap();
    assert_eq!(lonely(&["ultimate", "--lattice", not_json.to_str().unwrap()]).0, 1);
    let zero_base = dir.path().join("z.json");
    std::fs::write(&zero_base, r#"{"terms": [{"base": "0", "poly": ["1"]}]}"#).unwrap();
    assert_eq!(lonely(&["reduce", "--closedform", zero_base.to_str().unwrap(), "--degree", "2"]).0, 1);
}

#[test]
fn output_is_deterministic() {
    let cases: Vec<Vec<String>> = vec![
        vec!["lonely".into(), "enumerate".into(), "--lattice".into(), data("example4.json"), "--dilation".into(), "6".into()],
        vec!["lonely".into(), "ultimate".into(), "--lattice".into(), data("fig3-left.json")],
        vec!["lonely".into(), "reduce".into(), "--closedform".into(), data("ex12.json"), "--degree".into(), "2".into()],
        vec!["lonely".into(), "exponent-lattice".into(), "--bases".into(), "2,3,4,6".into()],
    ];
    for args in cases {
        let first = run(&args);
        assert_eq!(first.code, 0, "{}", first.stderr);
        for _ in 0..3 {
            assert_eq!(run(&args), first);
        }
        let (_, out, _) = lonely(&args[1..].iter().map(String::as_str).collect::<Vec<_>>());
        assert_eq!(out, first.stdout);
    }
}

#[test]
fn specs_round_trip() {
    let mut rng = StdRng::seed_from_u64(41);
    for _ in 0..100 {
        let m = rng.gen_range(0..=5);
        let spec = LatticeSpec {
            ambient_dimension: m,
            generators: (0..rng.gen_range(0..=3))
                .map(|_| (0..m).map(|_| rng.gen_range(-1000..=1000)).collect())
                .collect(),
        };
        let text = serde_json::to_string(&spec).unwrap();
        assert_eq!(serde_json::from_str::<LatticeSpec>(&text).unwrap(), spec);

        let spec = ClosedFormSpec {
            terms: (0..rng.gen_range(0..=4))
                .map(|_| TermSpec {
                    base: format!("{}/{}", rng.gen_range(-50..=50), rng.gen_range(1..=50)),
                    poly: (0..rng.gen_range(0..=3)).map(|_| rng.gen_range(-9..=9).to_string()).collect(),
                })
                .collect(),
        };
        let text = serde_json::to_string(&spec).unwrap();
        assert_eq!(serde_json::from_str::<ClosedFormSpec>(&text).unwrap(), spec);

        // through the library types: normalized forms survive exactly
        if let Ok(cf) = spec.to_closed_form() {
            let cf = cf.normalize();
            let back = ClosedFormSpec::from_closed_form(&cf);
            assert_eq!(back.to_closed_form().unwrap(), cf);
        }
    }
}

#[test]
fn lattice_spec_preserves_lattice() {
    let spec = LatticeSpec {
        ambient_dimension: 3,
        generators: vec![vec![2, 1, 0], vec![0, 2, 1], vec![2, 3, 1]],
    };
    let l = spec.to_lattice().unwrap();
    let back = LatticeSpec::from_lattice(&l).unwrap();
    assert_eq!(back.to_lattice().unwrap().basis(), l.basis());
}
