use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use proptest::prelude::*;
use serde_json::Value;
use threetypes_cli::commands::{self, DEMOS};
use threetypes_cli::{load, parse_file, serialize, to_json, Structure};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_threetypes"))
}

fn run(args: &[&str]) -> (i32, String, String) {
    let Output { status, stdout, stderr } = bin().args(args).output().unwrap();
    (
        status.code().unwrap(),
        String::from_utf8(stdout).unwrap(),
        String::from_utf8(stderr).unwrap(),
    )
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("threetypes-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn write_demo(name: &str) -> PathBuf {
    let path = scratch(&format!("{name}.json"));
    let (code, _, err) = run(&["demo", name, "--out", path.to_str().unwrap()]);
    assert_eq!(code, 0, "{err}");
    path
}

fn group_orders(path: &Path) -> Vec<usize> {
    let v: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    let mut orders: Vec<usize> = v["groups"]
        .as_object()
        .unwrap()
        .values()
        .map(|g| g["table"].as_array().unwrap().len())
        .collect();
    orders.sort();
    orders
}

#[test]
fn demos_pass_check() {
    for name in DEMOS {
        let path = write_demo(name);
        let (code, out, _) = run(&["check", path.to_str().unwrap()]);
        assert_eq!(code, 0, "{name}: {out}");
    }
}

#[test]
fn demo_group_orders() {
    assert_eq!(group_orders(&write_demo("square-a3-s3")), [3, 3, 3, 6]);
    assert_eq!(group_orders(&write_demo("trivial-c2")), [1, 1, 1, 2]);
}

#[test]
fn unknown_demo_lists_names() {
    let (code, _, err) = run(&["demo", "unknown"]);
    assert_eq!(code, 2);
    assert!(err.contains("square-a3-s3") && err.contains("nerve-a3-s3-depth3"), "{err}");
}

#[test]
fn tampered_h_is_reported() {
    let path = write_demo("square-a3-s3");
    let mut v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let old = v["tables"]["h"][1][2].as_u64().unwrap();
    v["tables"]["h"][1][2] = Value::from((old + 1) % 3);
    let bad = scratch("tampered.json");
    std::fs::write(&bad, v.to_string()).unwrap();
    let (code, out, _) = run(&["check", bad.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(out.contains("FAIL iv:"), "{out}");
    assert!(out.contains("witness [1, 2]"), "{out}");
}

#[test]
fn empty_and_malformed_files() {
    let empty = scratch("empty.json");
    std::fs::write(&empty, "").unwrap();
    let (code, _, err) = run(&["check", empty.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("parse error"), "{err}");

    let broken = scratch("broken.json");
    std::fs::write(&broken, "{\n  \"groups\": {\n    \"G\": {\"builtin\": \"cyclic\"}\n  },\n  \"structure\": {\"kind\": \"cat1\", \"refs\": {}}\n}").unwrap();
    let (code, _, err) = run(&["check", broken.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("groups.G"), "{err}");
}

#[test]
fn builtin_groups_load() {
    let text = r#"{
        "groups": {"G": {"builtin": "symmetric", "n": 3}},
        "homs": {"id": {"from": "G", "to": "G", "map": [0, 1, 2, 3, 4, 5]}},
        "structure": {"kind": "cat1", "refs": {"group": "G", "s": "id", "t": "id"}}
    }"#;
    let s = load(&parse_file(text).unwrap()).unwrap();
    assert!(commands::check(&s).is_ok());
    let sig = commands::homotopy(&s).unwrap();
    assert_eq!(sig.pi1.order(), 6);
}

#[test]
fn conversions() {
    let square = write_demo("square-a3-s3");
    let sq = square.to_str().unwrap();
    for (kind, order) in [("two_crossed", 9), ("cat2", 162), ("quadratic", 9)] {
        let out = scratch(&format!("a3-{kind}.json"));
        let (code, _, err) = run(&["convert", "--to", kind, "--out", out.to_str().unwrap(), sq]);
        assert_eq!(code, 0, "{err}");
        assert!(group_orders(&out).contains(&order), "{kind}");
        let (code, report, _) = run(&["check", out.to_str().unwrap()]);
        assert_eq!(code, 0, "{kind}: {report}");
    }
    let tc = scratch("a3-two_crossed.json");
    let (code, _, err) = run(&["convert", "--to", "simplicial", "--out", "/dev/null", tc.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("unsupported conversion"), "{err}");
}

#[test]
fn every_routed_conversion_rechecks() {
    let routes = [
        ("square-c4-c2", &["two_crossed", "quadratic", "cat2"][..]),
        ("xmod-a3-s3", &["cat1"][..]),
        ("nerve-a3-s3-depth3", &["crossed_square", "two_crossed", "quadratic"][..]),
    ];
    for (demo, kinds) in routes {
        let s = commands::demo(demo).unwrap();
        for kind in kinds {
            let t = commands::convert(&s, kind).unwrap();
            assert!(commands::check(&t).is_ok(), "{demo} -> {kind}");
            let back = load(&parse_file(&to_json(&serialize(&t))).unwrap()).unwrap();
            assert_eq!(back, t);
        }
    }
    let cat1 = commands::convert(&commands::demo("xmod-c4-c2").unwrap(), "cat1").unwrap();
    let xm = commands::convert(&cat1, "crossed_module").unwrap();
    assert_eq!(xm, commands::demo("xmod-c4-c2").unwrap());
}

#[test]
fn homotopy_output() {
    let (code, out, _) = run(&["homotopy", write_demo("square-a3-s3").to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.contains("π1 = C2") && out.contains("π2 = 1") && out.contains("π3 = 1"), "{out}");
    let (_, out, _) = run(&["homotopy", write_demo("square-c4-c2").to_str().unwrap()]);
    assert!(out.contains("π1 = 1") && out.contains("π2 = C2") && out.contains("π3 = 1"), "{out}");
}

#[test]
fn diagram_on_demo_squares() {
    for name in ["trivial-c2", "square-a3-s3", "square-c4-c2", "square-klein-diagonal"] {
        let (code, out, err) = run(&["diagram", write_demo(name).to_str().unwrap()]);
        assert_eq!(code, 0, "{name}: {out}{err}");
        assert_eq!(out.matches("route ").count(), 4, "{out}");
    }
    let (code, _, _) = run(&["diagram", write_demo("xmod-a3-s3").to_str().unwrap()]);
    assert_eq!(code, 2);
}

fn any_builtin() -> impl Strategy<Value = Structure> {
    (0..DEMOS.len(), 0usize..4).prop_map(|(i, hop)| {
        let s = commands::demo(DEMOS[i]).unwrap();
        let targets: &[&str] = match &s {
            Structure::CrossedSquare(_) => &["crossed_square", "two_crossed", "quadratic", "cat2"],
            Structure::CrossedModule(_) => &["crossed_module", "cat1"],
            _ => &["simplicial"],
        };
        let to = targets[hop % targets.len()];
        if to == s.kind() {
            s
        } else {
            commands::convert(&s, to).unwrap()
        }
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn serialization_round_trips(s in any_builtin()) {
        let text = to_json(&serialize(&s));
        let back = load(&parse_file(&text).unwrap()).unwrap();
        prop_assert_eq!(back, s);
    }
}

#[test]
fn bisimplicial_files() {
    use threetypes_core::crossed::cat2_from_crossed_square;
    use threetypes_core::simplicial::binerve;
    let k = cat2_from_crossed_square(&threetypes_core::corpus::square_c4_c2()).unwrap();
    let s = Structure::Bisimplicial(binerve(&k, 2).unwrap());
    let back = load(&parse_file(&to_json(&serialize(&s))).unwrap()).unwrap();
    assert_eq!(back, s);
    assert!(commands::check(&s).is_ok());
    let sig = commands::homotopy(&s).unwrap();
    assert_eq!(sig.pi2.order(), 2);
    assert!(sig.pi3_unquotiented);
}
