//! Acceptance gate: one verdict line per criterion, exact arithmetic throughout.
//!
//! Runs without the test harness so the verdict lines always appear in the log. Each criterion's
//! verdict is compared against the outcome pinned in `EXPECTED`; any change in either direction
//! makes this target fail.

use std::process::Command;

use jjrb_core::catalog::verify::{
    constraint_claims, construction_claims, dim2_claims, dim3_claims, family_claims, h0_claims, property_claims,
    TRIALS_PER_ALGEBRA,
};
use jjrb_core::catalog::{self, instantiate_named};
use jjrb_core::report::{ClaimResult, Status};
use jjrb_core::InstanceFile;

/// Criteria 3, 4 and 5 are red because the stated results do not hold:
/// 3: the displayed class representative (diag(1,-2), (3,0)) is not a cocycle; (diag(1,-2), (-3,0)) is.
/// 4, 5: on the four-dimensional algebra with only e1*e1 = e2 the operator identity forces
///       (2a1 + lambda) b3 = 0 and (2a1 + lambda) b4 = 0, not the single condition (2a1 + lambda)(b3 - b4) = 0,
///       so the families built on the weaker condition contain non-operators.
const EXPECTED: [bool; 8] = [true, true, false, false, false, true, true, true];

struct Verdict {
    pass: bool,
    detail: String,
}

fn all_pass(claims: &[ClaimResult]) -> Verdict {
    let bad: Vec<&ClaimResult> = claims.iter().filter(|c| c.status != Status::Pass).collect();
    Verdict {
        pass: bad.is_empty() && !claims.is_empty(),
        detail: match bad.first() {
            None if claims.len() == 1 => claims[0].detail.clone().unwrap_or_else(|| "1 check".into()),
            None => format!("{} checks", claims.len()),
            Some(c) => format!(
                "{} of {} checks fail; first: {}{}",
                bad.len(),
                claims.len(),
                c.claim,
                c.witness.as_ref().map(|w| format!(" at {w}")).unwrap_or_default()
            ),
        },
    }
}

fn criterion_1() -> Verdict {
    all_pass(&h0_claims())
}

fn criterion_2() -> Verdict {
    let claims: Vec<ClaimResult> =
        dim3_claims().into_iter().filter(|c| c.claim.starts_with("dim3-main: dim")).collect();
    all_pass(&claims)
}

fn criterion_3() -> Verdict {
    let claims = dim2_claims();
    let dims_and_rep: Vec<ClaimResult> = claims
        .iter()
        .filter(|c| c.claim.contains("dim Z1") || c.claim.contains("displayed representative"))
        .cloned()
        .collect();
    let five = claims.iter().find(|c| c.claim.contains("dimension 5")).expect("dimension claim");
    let mut v = all_pass(&dims_and_rep);
    let five_ok = five.status == Status::Flagged;
    v.detail =
        format!("{}; dimension-5 claim {:?} ({})", v.detail, five.status, five.detail.clone().unwrap_or_default());
    v.pass &= five_ok && dims_and_rep.len() == 2;
    v
}

fn criterion_4() -> Verdict {
    all_pass(&family_claims())
}

fn criterion_5() -> Verdict {
    let claims: Vec<ClaimResult> = constraint_claims()
        .into_iter()
        .filter(|c| c.claim.starts_with("dim2:") || c.claim.starts_with("dim4-G:"))
        .collect();
    let mut v = all_pass(&claims);
    v.pass &= claims.len() == 2;
    v
}

fn criterion_6() -> Verdict {
    all_pass(&property_claims(TRIALS_PER_ALGEBRA))
}

fn criterion_7() -> Verdict {
    let claims = construction_claims();
    let (suite, signs): (Vec<ClaimResult>, Vec<ClaimResult>) =
        claims.into_iter().partition(|c| c.claim.starts_with("construction re-validates"));
    let mut v = all_pass(&suite);
    let minus = signs.iter().find(|c| c.claim.contains("fails the representation identity")).expect("sign claim");
    v.pass &= suite.len() == 11 && minus.status == Status::Flagged && minus.witness.is_some();
    v.detail = format!(
        "{}; sign -1 fails the representation identity at {}",
        v.detail,
        minus.witness.clone().unwrap_or_else(|| "no witness".into())
    );
    v
}

fn jjrb(args: &[&str]) -> (i32, Vec<u8>) {
    let out = Command::new(env!("CARGO_BIN_EXE_jjrb")).args(args).output().expect("binary runs");
    (out.status.code().unwrap_or(-1), out.stdout)
}

fn criterion_8() -> Verdict {
    let dir = std::path::Path::new(env!("CARGO_TARGET_TMPDIR")).join("acceptance");
    std::fs::create_dir_all(&dir).expect("temp dir");
    let mut failures = Vec::new();
    let mut exports: Vec<(String, Vec<String>)> = catalog::catalog()
        .iter()
        .map(|e| (e.id.to_string(), vec!["catalog".into(), "export".into(), e.id.into()]))
        .collect();
    for e in catalog::catalog() {
        for i in &e.instances {
            exports.push((
                i.name.to_string(),
                ["catalog", "instantiate", e.id, "--instance", i.name].map(String::from).to_vec(),
            ));
            let lib = InstanceFile::from_rb(&instantiate_named(i, e.id).expect("named instance")).to_json();
            let again = InstanceFile::parse(&lib, true).map(|f| f.to_json());
            if again.as_deref() != Ok(lib.as_str()) {
                failures.push(format!("{} library round trip", i.name));
            }
        }
    }
    for (name, args) in &exports {
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        let (code, first) = jjrb(&args);
        let path = dir.join(format!("{name}.json"));
        std::fs::write(&path, &first).expect("write export");
        let parsed = InstanceFile::parse(std::str::from_utf8(&first).unwrap_or(""), true);
        let again = parsed.as_ref().map(|f| f.to_json().into_bytes());
        if code != 0 || again.as_ref().ok() != Some(&first) {
            failures.push(format!("{name} export round trip"));
        }
    }
    let (c1, r1) = jjrb(&["verify-paper"]);
    let (c2, r2) = jjrb(&["verify-paper"]);
    if r1 != r2 || c1 != c2 || r1.is_empty() {
        failures.push("verify-paper output differs between runs".into());
    }
    Verdict {
        pass: failures.is_empty(),
        detail: if failures.is_empty() {
            format!(
                "{} exports round-trip byte-identically; verify-paper twice gives {} identical bytes",
                exports.len(),
                r1.len()
            )
        } else {
            failures.join("; ")
        },
    }
}

type Criterion = (&'static str, fn() -> Verdict);

fn main() {
    let criteria: [Criterion; 8] = [
        ("H0 vanishes on every catalog instance", criterion_1),
        ("three-dimensional instance has dim Z1 = 4, dim B1 = 3, dim H1 = 1", criterion_2),
        ("two-dimensional instance: dim H1 = 1, displayed representative, dimension-5 flag", criterion_3),
        ("operator identity on 10 samples of every family", criterion_4),
        ("displayed constraint systems match the generated ones", criterion_5),
        ("randomized property suite", criterion_6),
        ("construction-validity suite and the gl(V) sign", criterion_7),
        ("export round trip and verify-paper determinism", criterion_8),
    ];
    let mut unexpected = Vec::new();
    for (k, (name, run)) in criteria.iter().enumerate() {
        let v = run();
        println!("criterion {}: {} - {name} ({})", k + 1, if v.pass { "PASS" } else { "FAIL" }, v.detail);
        if v.pass != EXPECTED[k] {
            unexpected.push(k + 1);
        }
    }
    if !unexpected.is_empty() {
        eprintln!("criteria with an unexpected verdict: {unexpected:?}");
        std::process::exit(1);
    }
    println!("acceptance: verdicts match the expected outcomes");
}
