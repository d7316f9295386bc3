use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn photon(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_photon")).args(args).current_dir(dir).output().unwrap()
}

fn report(out: &Output) -> Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn vec3(v: &Value) -> [f64; 3] {
    let a = v.as_array().unwrap();
    [a[0].as_f64().unwrap(), a[1].as_f64().unwrap(), a[2].as_f64().unwrap()]
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn tensor_make_follows_reference_convention() {
    let dir = TempDir::new().unwrap();
    let r = report(&photon(&["tensor", "make", "--k", "1,0,0", "--helicity", "+1", "--omega", "1"], dir.path()));
    assert_eq!(vec3(&r["e"]), [0.0, 1.0, 0.0]);
    assert_eq!(vec3(&r["b"]), [0.0, 0.0, 1.0]);
    assert!(r["wall_time_s"].is_number());
    assert!(r["tolerances"]["construction"].is_number());
}

#[test]
fn negative_values_parse() {
    let dir = TempDir::new().unwrap();
    let r = report(&photon(
        &["tensor", "make", "--k", "-1,0,0", "--helicity", "-1", "--omega", "2", "--phase", "-0.5"],
        dir.path(),
    ));
    assert_eq!(r["helicity"], -1);
}

#[test]
fn superluminal_boost_fails_before_reading_input() {
    let dir = TempDir::new().unwrap();
    let out = photon(&["tensor", "boost", "--beta", "1.2,0,0", "--in", "f.json"], dir.path());
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("beta magnitude must be < 1"));
}

#[test]
fn tensor_pipeline() {
    let dir = TempDir::new().unwrap();
    let p = dir.path();
    report(&photon(&["tensor", "make", "--k", "1,0,0", "--helicity", "+1", "--omega", "1", "--out", "f.json"], p));
    let boosted = report(&photon(&["tensor", "boost", "--beta", "0.6,0,0", "--in", "f.json", "--out", "g.json"], p));
    assert!((vec3(&boosted["e"])[1] - 0.5).abs() < 1e-15);
    assert!((vec3(&boosted["b"])[2] - 0.5).abs() < 1e-15);
    assert!((boosted["omega"].as_f64().unwrap() - 0.5).abs() < 1e-15);

    let inv = report(&photon(&["tensor", "invariants", "--in", "g.json"], p));
    assert!(inv["ff"].as_f64().unwrap().abs() < 1e-15);
    let tr = report(&photon(&["tensor", "transversality", "--in", "g.json"], p));
    assert_eq!(tr["transverse"], true);

    let dual = report(&photon(&["tensor", "dual", "--in", "f.json"], p));
    assert_eq!(vec3(&dual["e"]), [0.0, 0.0, -1.0]);
    assert_eq!(vec3(&dual["b"]), [0.0, 1.0, 0.0]);
    let t = report(&photon(&["tensor", "symmetry", "--op", "T", "--in", "f.json"], p));
    assert_eq!(vec3(&t["b"]), [0.0, 0.0, -1.0]);
}

#[test]
fn general_tensor_documents() {
    let dir = TempDir::new().unwrap();
    let p = dir.path();
    fs::write(p.join("f.json"), r#"{"e":[2,0,0],"b":[0,1,0]}"#).unwrap();
    let inv = report(&photon(&["tensor", "invariants", "--in", "f.json"], p));
    assert_eq!(inv["ff"], 6.0);
    let tr = report(&photon(&["tensor", "transversality", "--k", "1,0,0", "--in", "f.json"], p));
    assert!(tr["residual"][0].as_f64().unwrap() > 0.0);
    let missing = photon(&["tensor", "transversality", "--in", "f.json"], p);
    assert_eq!(missing.status.code(), Some(2));
}

#[test]
fn schema_errors_name_the_field() {
    let dir = TempDir::new().unwrap();
    let p = dir.path();
    fs::write(p.join("f.json"), r#"{"e":[1,0,0]}"#).unwrap();
    let out = photon(&["tensor", "dual", "--in", "f.json"], p);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("`b`"), "{}", stderr(&out));
    fs::write(p.join("bad.json"), "{not json").unwrap();
    assert_eq!(photon(&["tensor", "dual", "--in", "bad.json"], p).status.code(), Some(2));
}

#[test]
fn unknown_subcommand_is_a_usage_error() {
    let dir = TempDir::new().unwrap();
    assert_eq!(photon(&["teleport"], dir.path()).status.code(), Some(2));
    assert_eq!(photon(&["toymodel", "--model", "cube", "--omega0", "1"], dir.path()).status.code(), Some(2));
}

#[test]
fn helicity_basis_report() {
    let dir = TempDir::new().unwrap();
    let r = report(&photon(&["helicity", "--k", "0,0,1"], dir.path()));
    assert_eq!(r["chi_plus"][0], serde_json::json!([0.5, -0.5]));
    assert_eq!(r["branch"], "closed_form");
    let s = 1.0 / 3f64.sqrt();
    let k = format!("{s},{s},{s}");
    let r = report(&photon(&["helicity", "--k", &k], dir.path()));
    assert_eq!(r["branch"], "fallback");
    assert_eq!(photon(&["helicity", "--k", "1,1,0"], dir.path()).status.code(), Some(2));
}

#[test]
fn toymodels() {
    let dir = TempDir::new().unwrap();
    let p = dir.path();
    let disk = report(&photon(&["toymodel", "--model", "disk", "--omega0", "1"], p));
    for key in ["model", "omega0", "params", "E", "S", "sigma_T", "rel_err_E", "rel_err_S"] {
        assert!(disk.get(key).is_some(), "{key}");
    }
    assert!((disk["E"].as_f64().unwrap() - 1.0).abs() < 1e-8);
    assert!((disk["S"].as_f64().unwrap() - 1.0).abs() < 1e-8);
    let string = report(&photon(&["toymodel", "--model", "string", "--omega0", "2"], p));
    assert!((string["E"].as_f64().unwrap() - 2.0).abs() < 1e-8);
    let ring = report(&photon(&["toymodel", "--model", "ring", "--omega0", "1", "--k", "0.1"], p));
    assert!((ring["S"].as_f64().unwrap() - 1.0).abs() < 1e-8);
    assert_eq!(photon(&["toymodel", "--model", "ring", "--omega0", "1"], p).status.code(), Some(2));
    assert_eq!(photon(&["toymodel", "--model", "disk", "--omega0", "1", "--k", "1"], p).status.code(), Some(2));
    assert_eq!(photon(&["toymodel", "--model", "disk", "--omega0", "0"], p).status.code(), Some(2));
}

#[test]
fn reproducible_reports_are_byte_identical() {
    let dir = TempDir::new().unwrap();
    let args = ["--reproducible", "toymodel", "--model", "ring", "--omega0", "2", "--k", "3"];
    let a = photon(&args, dir.path());
    let b = photon(&args, dir.path());
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert!(!String::from_utf8_lossy(&a.stdout).contains("wall_time"));
}

#[test]
fn evolve_round_trip() {
    let dir = TempDir::new().unwrap();
    let p = dir.path();
    let made = report(&photon(
        &["state", "gaussian", "--n", "16", "--p-max", "4", "--p0", "2,0,0", "--sigma", "0.3", "--helicity", "+1",
          "--out", "s.bin"],
        p,
    ));
    assert!((made["helicity"].as_f64().unwrap() - 1.0).abs() < 1e-10);
    fs::write(p.join("c.json"), r#"{"dt":0.05,"steps":40,"observables_every":10}"#).unwrap();
    let r = report(&photon(
        &["--reproducible", "evolve", "--config", "c.json", "--state", "s.bin", "--out", "obs.csv",
          "--final-state", "t.json"],
        p,
    ));
    assert_eq!(r["rows"], 5);
    let csv = fs::read_to_string(p.join("obs.csv")).unwrap();
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "step,time,norm,energy,helicity,defect");
    assert_eq!(lines.len(), 6);
    assert!(lines[5].starts_with("40,"));
    let first: Vec<f64> = lines[1].split(',').map(|x| x.parse().unwrap()).collect();
    let last: Vec<f64> = lines[5].split(',').map(|x| x.parse().unwrap()).collect();
    assert!((first[2] - last[2]).abs() < 1e-12);
    assert!((first[3] - last[3]).abs() < 1e-10);
    assert!(p.join("t.json").exists());

    let again = photon(
        &["--reproducible", "evolve", "--config", "c.json", "--state", "s.bin", "--out", "obs2.csv"],
        p,
    );
    assert!(again.status.success());
    assert_eq!(fs::read(p.join("obs2.csv")).unwrap(), fs::read(p.join("obs.csv")).unwrap());

    fs::write(p.join("bad.json"), r#"{"dt":-1,"steps":4}"#).unwrap();
    let out = photon(&["evolve", "--config", "bad.json", "--state", "s.bin", "--out", "o.csv"], p);
    assert_eq!(out.status.code(), Some(2));
    fs::write(p.join("extra.json"), r#"{"dt":1,"steps":4,"speed":3}"#).unwrap();
    let out = photon(&["evolve", "--config", "extra.json", "--state", "s.bin", "--out", "o.csv"], p);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("speed"));
}

#[test]
fn maxwell_demo_reports_second_order_and_verdict() {
    let dir = TempDir::new().unwrap();
    let p = dir.path();
    fs::write(
        p.join("m.json"),
        r#"{"n":16,"p_max":4,"p0":[1.5,0.5,0],"sigma":0.3,"helicity":1,"dt":0.02,"contamination":[1e-8,1e-3]}"#,
    )
    .unwrap();
    let r = report(&photon(&["maxwell-demo", "--config", "m.json"], p));
    let ratio = r["curl_ratio"][0].as_f64().unwrap();
    assert!((ratio - 4.0).abs() < 0.2, "{ratio}");
    assert!(r["residuals"]["div_e"].as_f64().unwrap() < 1e-10);
    assert!(r["note"].as_str().unwrap().contains("not a derivation"));
    assert!(r["contamination"][1]["rejected"].is_string());
}
