//! End-to-end checks of the command-line surface: exit codes, golden
//! agreement with direct library calls, functor round trips, and the shipped
//! data files staying in sync with the built-in constructors.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_picard2"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn workspace_root() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../..").canonicalize().unwrap()
}

#[test]
fn validate_builtin_passes() {
    let out = run(&["validate", "examples/sigma_cex"]);
    assert!(out.status.success(), "{out:?}");
    assert!(stdout(&out).contains("ok ("));
}

#[test]
fn validate_corrupted_manifest_exits_one_with_violations() {
    let dir = std::env::temp_dir().join("picard2-cli-test-corrupt");
    std::fs::create_dir_all(&dir).unwrap();
    // Corrupt a single compose entry of the cex manifest.
    let text = run(&["functor", "suspend", "cex"]); // any command to warm up
    assert!(text.status.success());
    let out = run(&["examples", "--write", dir.to_str().unwrap()]);
    assert!(out.status.success());
    let path = dir.join("cex.json");
    let mut manifest: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let beta = manifest["payload"]["beta"].as_array_mut().unwrap();
    // Break the unit axiom: β(0,1) becomes the twist.
    for entry in beta.iter_mut() {
        let e = entry.as_array().unwrap();
        if e[0] == 0 && e[1] == 1 {
            *entry = serde_json::json!([0, 1, 3]);
        }
    }
    std::fs::write(&path, serde_json::to_string(&manifest).unwrap()).unwrap();
    let out = run(&["validate", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1), "{out:?}");
    assert!(stdout(&out).contains("beta-unit") || stdout(&out).contains("beta-boundary"));
}

#[test]
fn validate_malformed_json_exits_two() {
    let path = std::env::temp_dir().join("picard2-cli-test-malformed.json");
    std::fs::write(&path, "{this is not json").unwrap();
    let out = run(&["validate", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2), "{out:?}");
}

#[test]
fn missing_input_exits_two() {
    let out = run(&["postnikov", "/nonexistent/nowhere.json"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn postnikov_sphere_reports_windowed_pi0_and_parity_k0() {
    let out = run(&["postnikov", "examples/sphere1", "--json"]);
    assert!(out.status.success(), "{out:?}");
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let report = &v["report"];
    assert!(report["pi0"]["presentation"].to_string().contains("WindowedZ"));
    assert_eq!(report["pi1"]["presentation"]["Finite"]["invariant_factors"], serde_json::json!([2]));
    assert_eq!(report["k0_surjective"], serde_json::json!(true));
    assert_eq!(v["noskel"]["applicable"], serde_json::json!(true));
}

#[test]
fn postnikov_non_picard_exits_one() {
    // A perfectly valid monoid that is not a Picard category.
    let dir = std::env::temp_dir().join("picard2-cli-test-nonpicard");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("monoid.json");
    // One object, morphisms {id, t} with t∘t = t; tensor = composition.
    let manifest = serde_json::json!({
        "kind": "permutative_category",
        "payload": {
            "base": {
                "objects": 1,
                "morphisms": [{"src": 0, "tgt": 0}, {"src": 0, "tgt": 0}],
                "identity": [0],
                "compose": [[0,0,0],[0,1,1],[1,0,1],[1,1,1]]
            },
            "unit": 0,
            "tensor_obj": [[0,0,0]],
            "tensor_mor": [[0,0,0],[0,1,1],[1,0,1],[1,1,1]],
            "beta": [[0,0,0]]
        }
    });
    std::fs::write(&path, serde_json::to_string(&manifest).unwrap()).unwrap();
    let out = run(&["validate", path.to_str().unwrap()]);
    assert!(out.status.success(), "{out:?}");
    let out = run(&["postnikov", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1), "{out:?}");
}

#[test]
fn gamma_guard_exits_three() {
    let out = run(&["gamma", "sphere1", "compare", "--levels", "3", "--simplicial", "3"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn gamma_segal_passes_at_default_bounds() {
    let out = run(&["gamma", "cex", "segal", "--levels", "4"]);
    assert!(out.status.success(), "{out:?}");
    assert_eq!(stdout(&out).matches("isomorphism").count(), 4);
}

#[test]
fn gamma_zero_bound_is_trivial_pass() {
    let out = run(&["gamma", "cex", "compare", "--levels", "0", "--simplicial", "0"]);
    assert!(out.status.success(), "{out:?}");
}

#[test]
fn functor_round_trip_is_byte_identical() {
    let dir = std::env::temp_dir().join("picard2-cli-test-roundtrip");
    std::fs::create_dir_all(&dir).unwrap();
    let out = run(&["examples", "--write", dir.to_str().unwrap()]);
    assert!(out.status.success());
    let cex = dir.join("cex.json");
    let s = dir.join("suspended.json");
    let back = dir.join("back.json");
    assert!(run(&["functor", "suspend", cex.to_str().unwrap(), "-o", s.to_str().unwrap()])
        .status
        .success());
    assert!(run(&["functor", "loop", s.to_str().unwrap(), "-o", back.to_str().unwrap()])
        .status
        .success());
    assert_eq!(
        std::fs::read(&cex).unwrap(),
        std::fs::read(&back).unwrap(),
        "suspend-then-loop must restore the manifest byte for byte"
    );
}

/// The CLI is a thin adapter: its JSON equals the direct library call.
#[test]
fn golden_validate_matches_library_call() {
    let out = run(&["validate", "d_sphere1", "--json", "--window", "4"]);
    assert!(out.status.success());
    let via_cli: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let rep = picard2::monoidal::validate_pgm(&picard2::library::d_sphere1(4));
    let direct: serde_json::Value =
        serde_json::from_str(&serde_json::to_string(&rep).unwrap()).unwrap();
    assert_eq!(via_cli, direct);
}

#[test]
fn golden_postnikov_matches_library_call() {
    let out = run(&["postnikov", "sigma_cex", "--json"]);
    assert!(out.status.success());
    let via_cli: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let data = picard2::postnikov::analyze_pgm(&picard2::library::sigma_cex()).unwrap();
    let direct: serde_json::Value =
        serde_json::from_str(&serde_json::to_string(&data.report()).unwrap()).unwrap();
    assert_eq!(via_cli["report"], direct);
}

/// The data files shipped in `library/` stay in sync with the constructors.
#[test]
fn shipped_library_files_are_current() {
    let lib = workspace_root().join("library");
    for name in picard2::library::builtin_names() {
        let path = lib.join(format!("{name}.json"));
        let text = std::fs::read_to_string(&path)
            .unwrap_or_else(|e| panic!("missing shipped manifest {}: {e}", path.display()));
        let m = picard2::manifest::parse(&text).unwrap();
        let expected = match picard2::library::builtin(name, picard2::library::DEFAULT_WINDOW) {
            Some(picard2::library::BuiltIn::PermCat(c)) => picard2::manifest::to_canonical_json(
                &picard2::manifest::from_structure(&picard2::manifest::Structure::PermCat(c)),
            ),
            Some(picard2::library::BuiltIn::Pgm(d)) => picard2::manifest::to_canonical_json(
                &picard2::manifest::from_structure(&picard2::manifest::Structure::Pgm(d)),
            ),
            None => unreachable!(),
        };
        assert_eq!(
            picard2::manifest::to_canonical_json(&m),
            expected,
            "{name}: regenerate with `picard2 examples --write library`"
        );
    }
}

#[test]
fn plain_category_and_two_category_manifests_validate() {
    let dir = std::env::temp_dir().join("picard2-cli-test-kinds");
    std::fs::create_dir_all(&dir).unwrap();
    let cat = picard2::manifest::from_structure(&picard2::manifest::Structure::Category(
        picard2::library::cex().base,
    ));
    let cat_path = dir.join("cat.json");
    std::fs::write(&cat_path, picard2::manifest::to_canonical_json(&cat)).unwrap();
    let out = run(&["validate", cat_path.to_str().unwrap()]);
    assert!(out.status.success(), "{out:?}");
    assert!(stdout(&out).contains("kind: category"));

    let two = picard2::manifest::from_structure(&picard2::manifest::Structure::TwoCategory(
        picard2::library::sigma_cex().base,
    ));
    let two_path = dir.join("two.json");
    std::fs::write(&two_path, picard2::manifest::to_canonical_json(&two)).unwrap();
    let out = run(&["validate", two_path.to_str().unwrap()]);
    assert!(out.status.success(), "{out:?}");
    assert!(stdout(&out).contains("kind: 2category"));

    // Break an identity entry in the plain category: exit 1.
    let mut v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&cat_path).unwrap()).unwrap();
    v["payload"]["identity"][0] = serde_json::json!(1);
    std::fs::write(&cat_path, serde_json::to_string(&v).unwrap()).unwrap();
    let out = run(&["validate", cat_path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
}

/// Crafted malformed tables must be reported, never crash the process.
#[test]
fn adversarial_pgm_manifests_are_rejected_not_crashed() {
    let dir = std::env::temp_dir().join("picard2-cli-test-adversarial");
    std::fs::create_dir_all(&dir).unwrap();
    let base = picard2::manifest::to_canonical_json(&picard2::manifest::from_structure(
        &picard2::manifest::Structure::Pgm(picard2::library::sigma_cex()),
    ));
    let cases: Vec<(&str, Box<dyn Fn(&mut serde_json::Value)>)> = vec![
        (
            "sigma-value-out-of-range",
            Box::new(|v| {
                v["payload"]["sigma"][0][6] = serde_json::json!(999);
            }),
        ),
        (
            "sigma-key-nonexistent-cell",
            Box::new(|v| {
                v["payload"]["sigma"][0][2] = serde_json::json!(999);
            }),
        ),
        (
            "whisker-value-out-of-range",
            Box::new(|v| {
                v["payload"]["lwhisker"][0]["one"][0][1] = serde_json::json!(999);
            }),
        ),
        (
            "beta-cell-out-of-range",
            Box::new(|v| {
                v["payload"]["beta_cell"][0][2] = serde_json::json!(999);
            }),
        ),
    ];
    for (name, mutate) in cases {
        let mut v: serde_json::Value = serde_json::from_str(&base).unwrap();
        mutate(&mut v);
        let path = dir.join(format!("{name}.json"));
        std::fs::write(&path, serde_json::to_string(&v).unwrap()).unwrap();
        let out = run(&["validate", path.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(1), "{name}: {out:?}");
        let out = run(&["postnikov", path.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(1), "{name} via postnikov: {out:?}");
        let out = run(&["functor", "loop", path.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(1), "{name} via functor: {out:?}");
    }
}

#[test]
fn builder_manifest_feeds_gamma_and_postnikov() {
    let dir = std::env::temp_dir().join("picard2-cli-test-builder");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("z4.json");
    std::fs::write(
        &path,
        r#"{"kind":"builder","payload":{"pi0":{"cyclic":[4]},"pi1":[2],"bilinear":[[1]]}}"#,
    )
    .unwrap();
    let out = run(&["gamma", path.to_str().unwrap(), "segal", "--levels", "3"]);
    assert!(out.status.success(), "{out:?}");
    let out = run(&["postnikov", path.to_str().unwrap(), "--json"]);
    assert!(out.status.success(), "{out:?}");
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["report"]["k0"]["values"], serde_json::json!([0, 1, 0, 1]));
}
