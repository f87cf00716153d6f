use kschur_cli::run;
use kschur_core::cores::TableauChain;
use kschur_core::kschur::{par_k_ell, KExpansion};
use kschur_core::{Partition, SymFunc};
use serde::de::DeserializeOwned;
use serde::Serialize;

fn kcat(args: &[&str]) -> (i32, String) {
    run(std::iter::once("kcat").chain(args.iter().copied()))
}

fn ok(args: &[&str]) -> String {
    let (code, out) = kcat(args);
    assert_eq!(code, 0, "{args:?}: {out}");
    out
}

fn with_json<'a>(args: &[&'a str]) -> Vec<&'a str> {
    let mut v = args.to_vec();
    v.extend(["--format", "json"]);
    v
}

/// parse -> re-emit is the identity on the printed JSON.
fn round_trips<T: Serialize + DeserializeOwned>(args: &[&str]) {
    let out = ok(&with_json(args));
    let parsed: T = serde_json::from_str(&out).unwrap();
    assert_eq!(serde_json::to_string(&parsed).unwrap() + "\n", out, "{args:?}");
}

#[test]
fn goldens() {
    assert_eq!(ok(&["kschur", "expand", "--k", "9", "--mu", "2,1"]), "s[2,1]\n");
    assert_eq!(ok(&["cores", "to-bounded", "--k", "4", "--shape", "5,3,2,2,1"]), "3,2,2,2,1\n");
    assert_eq!(ok(&["cores", "to-core", "--k", "4", "--shape", "3,2,2,2,1"]), "5,3,2,2,1\n");
    assert_eq!(
        ok(&["kschur", "expand", "--k", "4", "--mu", "3,3,2,1"]),
        "s[3,3,2,1] + (1*t)*s[4,3,2] + (1*t)*s[4,3,1,1] + (1*t^2)*s[5,3,1] + (1*t^2)*s[4,4,1] + (1*t^3)*s[5,4]\n"
    );
    assert_eq!(
        ok(&["kschur", "straighten", "--k", "4", "--lambda", "3,3,3,2,1", "--z", "2"]),
        "(1*t)*s^(4)[4,2,2,2,1]\n"
    );
    assert_eq!(ok(&["catalan", "eval", "--ell", "3", "--rowcounts", "1,0,0", "--gamma", "2,1,1"]), "s[2,1,1] + (1*t)*s[3,1]\n");
    assert_eq!(
        ok(&["catalan", "eval", "--ell", "3", "--rowcounts", "1,0,0", "--gamma", "2,1,1", "--t1"]),
        "s[3,1] + s[2,1,1]\n"
    );
}

#[test]
fn pieri_and_restriction() {
    let v = ok(&["kschur", "pieri", "--k", "4", "--mu", "3,3,3,3,2", "--d", "5", "--direction", "vertical"]);
    assert_eq!(v, "s^(4)[2,2,2,2,1] + (1*t^2)*s^(4)[3,3,1,1,1] + (1*t^2)*s^(4)[3,2,2,2] + (1*t^3)*s^(4)[3,3,2,1]\n");
    let r = ok(&["kschur", "pieri", "--k", "3", "--mu", "2,2,2,2,2,2", "--d", "2", "--direction", "vertical", "--max-mark", "4"]);
    assert_eq!(r, "(1*t^2 + 1*t^3 + 1*t^4)*s^(3)[2,2,2,2,1,1] + (1*t^3)*s^(3)[2,2,2,2,2] + (1*t^4)*s^(3)[3,2,2,1,1,1]\n");
    ok(&["kschur", "pieri", "--k", "3", "--mu", "2,1", "--d", "2", "--direction", "horizontal"]);
}

#[test]
fn validation_errors_exit_one() {
    let bad: &[&[&str]] = &[
        &["kschur", "expand", "--k", "4", "--mu", "3,x"],
        &["kschur", "expand", "--k", "2", "--mu", "3,1"],
        &["kschur", "pieri", "--k", "3", "--mu", "2,1", "--d", "1", "--direction", "horizontal", "--max-mark", "2"],
        &["cores", "to-bounded", "--k", "2", "--shape", "3"],
        &["catalan", "eval", "--ell", "3", "--rowcounts", "1,0", "--gamma", "1,1,1"],
        &["catalan", "eval", "--ell", "3", "--rowcounts", "0,1,0", "--gamma", "1,1,1"],
        &["verify", "--suite", "no-such-suite"],
        &["kschur", "expand", "--k", "4", "--mu", "2,1", "--format", "yaml"],
        &["frobnicate"],
    ];
    for args in bad {
        let (code, out) = kcat(args);
        assert_eq!(code, 1, "{args:?}: {out}");
        assert!(!out.is_empty());
    }
    assert_eq!(kcat(&["--help"]).0, 0);
}

#[test]
fn verify_exit_codes() {
    let (code, out) = kcat(&["verify", "--suite", "stability", "--size-max", "4"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("stability: "), "{out}");
    let (code, out) = kcat(&["verify", "--suite", "kostka", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v[0]["suite"], "kostka");
    assert_eq!(v[0]["passed"], true);
    assert!(ok(&["verify", "--list"]).lines().any(|l| l == "hall-pairing"));
}

#[test]
fn via_tableaux_matches_via_catalan() {
    for k in 1..=3 {
        for ell in 1..=3 {
            for mu in par_k_ell(k, ell, 7) {
                let m = mu.to_weight(ell).to_string();
                let ks = k.to_string();
                for fmt in ["text", "json"] {
                    let a = ok(&["kschur", "expand", "--k", &ks, "--mu", &m, "--via", "tableaux", "--format", fmt]);
                    let b = ok(&["kschur", "expand", "--k", &ks, "--mu", &m, "--via", "catalan", "--format", fmt]);
                    assert_eq!(a, b, "k={k} mu={m}");
                }
            }
        }
    }
}

#[test]
fn json_round_trips() {
    round_trips::<SymFunc>(&["kschur", "expand", "--k", "4", "--mu", "3,3,2,1"]);
    round_trips::<SymFunc>(&["catalan", "eval", "--ell", "4", "--rowcounts", "2,1,0,0", "--gamma", "2,2,1,-1"]);
    round_trips::<KExpansion>(&["kschur", "branch", "--k", "3", "--mu", "2,2,2,2,1"]);
    round_trips::<KExpansion>(&["kschur", "straighten", "--k", "4", "--lambda", "2,2,2,2,2,2,2,2,2", "--z", "6"]);
    round_trips::<KExpansion>(&["kschur", "pieri", "--k", "3", "--mu", "3,2,1", "--d", "2", "--direction", "horizontal"]);
    round_trips::<Partition>(&["cores", "to-bounded", "--k", "4", "--shape", "5,3,2,2,1"]);
    round_trips::<Vec<TableauChain>>(&["tableaux", "enumerate", "--k", "4", "--outside", "3,3,3,3,2", "--weight", "5", "--vertical"]);
    let core = ok(&with_json(&["cores", "to-core", "--k", "4", "--shape", "3,2,2,2,1"]));
    assert_eq!(core, "{\"shape\":[5,3,2,2,1],\"n\":5}\n");
}

#[test]
fn tableaux_text() {
    let out = ok(&["tableaux", "enumerate", "--k", "4", "--outside", "3,3,3,3,2", "--weight", "5", "--vertical"]);
    assert!(out.starts_with("4 tableaux\n"));
    let spins: Vec<&str> = out.lines().filter_map(|l| l.split("spin ").nth(1)).collect();
    assert_eq!(spins.len(), 4);
    let empty = ok(&["tableaux", "enumerate", "--k", "3", "--outside", "2,1", "--weight", ""]);
    assert!(empty.starts_with("1 tableaux\n"), "{empty}");
}
