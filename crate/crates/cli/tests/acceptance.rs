//! Acceptance run: one PASS/FAIL line per criterion, non-zero exit on any
//! failure. Set `REGULUS_SLOW=1` for the extended Example 2.3 cross-check.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use regulus_cli::{run_command, EXIT_OK};
use regulus_core::asymptotics::*;
use regulus_core::gb::Ring;
use regulus_core::monomial::{monomials_of_degree, MonomialIdeal};
use regulus_core::regularity::{reg_monomial_ideal, Engine};
use serde_json::Value;

type Outcome = Result<String, String>;
type Criterion = (u32, &'static str, fn() -> Outcome);

const NAMES: [&str; 3] = ["x", "y", "z"];

fn ring(n: usize) -> Ring {
    Ring::standard(&NAMES[..n], 32003).unwrap()
}

fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
    MonomialIdeal::new(&ring(n), gens.iter().map(|g| g.to_vec()).collect()).unwrap()
}

fn pure_powers(n: usize, a: u32) -> MonomialIdeal {
    MonomialIdeal::new(
        &ring(n),
        (0..n)
            .map(|j| {
                let mut v = vec![0; n];
                v[j] = a;
                v
            })
            .collect(),
    )
    .unwrap()
}

fn first_ideal() -> MonomialIdeal {
    ideal(2, &[&[20, 0], &[3, 17], &[12, 8], &[0, 20]])
}

fn second_ideal_literal() -> MonomialIdeal {
    ideal(2, &[&[20, 0], &[3, 17], &[25, 5], &[0, 20]])
}

/// Runs `regulus repro <id> --format json` and returns the parsed report.
fn repro(id: &str, extra: &[&str]) -> Result<Value, String> {
    let mut argv = vec!["regulus", "repro", id, "--format", "json"];
    argv.extend_from_slice(extra);
    let out = run_command(argv);
    let v: Value = serde_json::from_str(&out.stdout).map_err(|e| format!("{id}: {e}; {}", out.stderr))?;
    if out.code != EXIT_OK {
        let failed: Vec<String> = v["outputs"]["outcomes"][0]["checks"]
            .as_array()
            .into_iter()
            .flatten()
            .filter(|c| c["pass"] == false)
            .map(|c| format!("{} = {} (expected {})", c["name"], c["actual"], c["expected"]))
            .collect();
        return Err(format!("{id} exited {}: {}", out.code, failed.join("; ")));
    }
    Ok(v)
}

fn count_class(v: &Value, class: &str) -> usize {
    v["findings"]
        .as_array()
        .map_or(0, |fs| fs.iter().filter(|f| f["class"] == class).count())
}

fn criterion_1() -> Outcome {
    let v = repro("example-1.8a", &[])?;
    let checks = v["outputs"]["outcomes"][0]["checks"].as_array().map_or(0, Vec::len);
    Ok(format!("{checks} checks: reg I^m = 20m+7 for m = 2..6, reg I > 27, reg_y = reg k[I_20] = 7, reg H^1(N_7) = 1"))
}

fn criterion_2() -> Outcome {
    let v = repro("example-1.8b", &[])?;
    let flagged = count_class(&v, "PAPER-DISCREPANCY");
    if flagged == 0 {
        return Err("literal ideal differs from the stated values but no discrepancy was filed".into());
    }
    Ok(format!(
        "pass with flag: {flagged} paper-discrepancy findings (x^25*y^5 is redundant; the x^15*y^5 reading reproduces e = 4, m0 = 4, reg_y = 7, reg H^1 = 3)"
    ))
}

fn criterion_3() -> Outcome {
    let slow = std::env::var_os("REGULUS_SLOW").is_some();
    let extra: &[&str] = if slow { &["--slow"] } else { &[] };
    repro("example-2.3", extra)?;
    Ok(format!(
        "predicted e_m = 1,2,2,1,1,1,1,1,0,0,0; direct reg I^m agrees for m <= {}",
        if slow { 6 } else { 3 }
    ))
}

fn criterion_4() -> Outcome {
    repro("example-2.6", &[])?;
    Ok("e_m = 1,2,2,2,2; d = 4; gr_I(S) has positive depth".into())
}

fn random_ideal(rng: &mut ChaCha8Rng) -> MonomialIdeal {
    let n = rng.gen_range(1..=3);
    let k = rng.gen_range(1..=8);
    let gens: Vec<Vec<u32>> = (0..k)
        .map(|_| loop {
            let g: Vec<u32> = (0..n).map(|_| rng.gen_range(0..=4)).collect();
            if g.iter().any(|&e| e > 0) {
                break g;
            }
        })
        .collect();
    MonomialIdeal::new(&ring(n), gens).unwrap()
}

fn criterion_5() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0005);
    let total = 150;
    let mut disagreements = Vec::new();
    for _ in 0..total {
        let i = random_ideal(&mut rng);
        let t = reg_monomial_ideal(&i, Engine::Takayama).map_err(|e| e.to_string())?;
        let r = reg_monomial_ideal(&i, Engine::Resolution).map_err(|e| e.to_string())?;
        if t != r {
            disagreements.push(format!("{i}: scanner {t}, resolution {r}"));
        }
    }
    if !disagreements.is_empty() {
        return Err(disagreements.join("; "));
    }
    Ok(format!("{total}/{total} random ideals agree"))
}

fn criterion_6() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0006);
    let total = 24;
    let mut compared = 0;
    for _ in 0..total {
        let n = rng.gen_range(2..=3);
        let d = rng.gen_range(1..=4u32);
        let k = rng.gen_range(0..=2u32);
        let mut gens: Vec<Vec<u32>> = pure_powers(n, d).gens().to_vec();
        let pool = monomials_of_degree(n, d);
        for _ in 0..rng.gen_range(0..=5 - n) {
            gens.push(pool[rng.gen_range(0..pool.len())].clone());
        }
        let j = MonomialIdeal::new(&ring(n), gens).unwrap();
        let rep = mixed_degree_predict(&j, k, 5, 5, Engine::Auto, None).map_err(|e| e.to_string())?;
        for row in &rep.rows {
            compared += 1;
            if row.direct_reg != Some(row.predicted_reg) {
                return Err(format!(
                    "J = {j}, k = {k}, m = {}: predicted {} direct {:?}",
                    row.m, row.predicted_reg, row.direct_reg
                ));
            }
        }
    }
    Ok(format!("{total} instances, {compared} powers, prediction = direct"))
}

fn criterion_7() -> Outcome {
    repro("prop-1.5-veronese", &[])?;
    Ok("reg N_i(m^d) = max{0, floor(((d-1)n - i)/d)} for n, d in {2,3}, i = 0..10".into())
}

fn criterion_8() -> Outcome {
    let mut cases: Vec<(String, MonomialIdeal, u32)> = vec![
        ("Example 1.8 first".into(), first_ideal(), 6),
        ("Example 1.8 second, literal".into(), second_ideal_literal(), 6),
        (
            "Example 1.8 second, x^15*y^5 reading".into(),
            ideal(2, &[&[20, 0], &[3, 17], &[15, 5], &[0, 20]]),
            6,
        ),
        ("(x^2,y^2,z^2)".into(), pure_powers(3, 2), 4),
        ("(x^3,y^3)".into(), pure_powers(2, 3), 4),
    ];
    for n in [2, 3] {
        for d in [2, 3] {
            cases.push((format!("m^{d}, n = {n}"), MonomialIdeal::max_power(&ring(n), d), 4));
        }
    }
    let mut part2 = 0;
    for (name, i, m_max) in &cases {
        let rep = e_sequence(i, *m_max, Engine::Auto, None).map_err(|e| e.to_string())?;
        let d = rep.d as i64;
        for w in rep.e_sequence.windows(2) {
            if !(w[0].e_m >= w[1].e_m && w[1].e_m >= w[0].e_m - d) {
                return Err(format!("{name}: e_{} = {}, e_{} = {}", w[0].m, w[0].e_m, w[1].m, w[1].e_m));
            }
        }
        let b = evaluate_bounds(i, &rep).map_err(|e| e.to_string())?;
        if has_violation(&b.findings()) {
            return Err(format!("{name}: {:?}", b.findings()));
        }
        for p in &rep.e_sequence {
            let m = p.m as i64;
            if (b.main.threshold.admits(m) || b.simple.threshold.admits(m)) && p.e_m != rep.e {
                return Err(format!("{name}: e_{m} = {} above a threshold", p.e_m));
            }
        }
        if b.main.part2_applicable {
            part2 += 1;
            let h = b.main.reg_h1_n_e.expect("part 2 needs a finite reg H^1");
            if rep.m0_observed as i64 != h + 1 {
                return Err(format!("{name}: m0 = {} but reg H^1 + 1 = {}", rep.m0_observed, h + 1));
            }
        }
    }
    Ok(format!("{} regression ideals; part 2 exact on {part2}", cases.len()))
}

fn criterion_9() -> Outcome {
    repro("prop-2.1-ci", &[])?;
    Ok("(x^2,y^3), (x^2,y^2,z^2), (x^3,y^3): reg I^m = dm + e for m = 1..4".into())
}

fn criterion_10() -> Outcome {
    let mut cases: Vec<(String, MonomialIdeal, u32)> = vec![
        ("Example 1.8 first".into(), first_ideal(), 9),
        ("Example 1.8 second, literal".into(), second_ideal_literal(), 7),
    ];
    for n in [2, 3] {
        for d in [2, 3] {
            cases.push((format!("m^{d}, n = {n}"), MonomialIdeal::max_power(&ring(n), d), 10));
        }
    }
    let fixtures: [(&str, Vec<i64>); 2] = [
        ("Example 1.8 first", vec![7, 5, 4, 4, 3, 2, 2, 2, 1, 1]),
        ("Example 1.8 second, literal", vec![19, 12, 6, 6, 5, 5, 5, 4]),
    ];
    let mut artifact = Vec::new();
    for (name, i, i_max) in &cases {
        let rep = e_sequence(i, 5, Engine::Auto, None).map_err(|e| e.to_string())?;
        let c = conjecture_scan(i, *i_max, Some(&rep)).map_err(|e| e.to_string())?;
        let regs: Vec<i64> = c.reg_n.iter().map(|r| r.1.unwrap_or(i64::MIN)).collect();
        if let Some((_, want)) = fixtures.iter().find(|f| f.0 == name) {
            if &regs != want {
                return Err(format!("{name}: reg N_i = {regs:?}, fixture {want:?}"));
            }
        }
        if regs.windows(2).any(|w| w[1] > w[0]) && c.findings.is_empty() {
            return Err(format!("{name}: increase in {regs:?} was not surfaced"));
        }
        if !c.findings.is_empty() {
            return Err(format!("{name}: {} finding(s), first: {}", c.findings.len(), c.findings[0].detail));
        }
        artifact.extend(c.findings);
    }
    // An injected rise in e_m - e_(m+1) must surface as a candidate.
    let m2 = MonomialIdeal::max_power(&ring(2), 2);
    let mut rep = e_sequence(&m2, 4, Engine::Auto, None).map_err(|e| e.to_string())?;
    for (p, e) in rep.e_sequence.iter_mut().zip([3, 3, 1, 0]) {
        p.e_m = e;
    }
    let c = conjecture_scan(&m2, 2, Some(&rep)).map_err(|e| e.to_string())?;
    let surfaced = c
        .findings
        .iter()
        .filter(|f| f.class == FindingClass::CounterexampleCandidate)
        .count();
    if surfaced == 0 {
        return Err("an injected increase of first differences was swallowed".into());
    }
    artifact.extend(c.findings);
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let path = dir.path().join("conjecture-findings.json");
    std::fs::write(&path, serde_json::to_string_pretty(&artifact).unwrap()).map_err(|e| e.to_string())?;
    let back: Vec<Value> = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    if back.len() != artifact.len() || back.iter().any(|f| f["class"] != "COUNTEREXAMPLE-CANDIDATE") {
        return Err("candidate artifact did not round-trip".into());
    }
    Ok(format!(
        "{} ideals non-increasing, fixtures match; injected rise surfaced as {surfaced} candidate(s)",
        cases.len()
    ))
}

fn main() {
    let criteria: [Criterion; 10] = [
        (1, "Example 1.8 first ideal", criterion_1),
        (2, "Example 1.8 second ideal, literal", criterion_2),
        (3, "Example 2.3 via mixed degrees", criterion_3),
        (4, "Example 2.6", criterion_4),
        (5, "dual-engine oracle", criterion_5),
        (6, "mixed-degree property suite", criterion_6),
        (7, "Veronese slice regularity", criterion_7),
        (8, "decreasing e_m and bound thresholds", criterion_8),
        (9, "regular-sequence formula", criterion_9),
        (10, "slice conjecture explorer", criterion_10),
    ];
    let mut failed = 0;
    for (n, name, f) in criteria {
        let start = Instant::now();
        let outcome = f();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {n:>2} PASS [{secs:6.2}s] {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("criterion {n:>2} FAIL [{secs:6.2}s] {name}: {detail}");
            }
        }
    }
    println!("acceptance: {} of 10 criteria pass", 10 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
