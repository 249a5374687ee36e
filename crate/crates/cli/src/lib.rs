//! The `regulus` command line: argument parsing, dispatch and output.
//!
//! Exit codes: 0 success, 1 usage or internal error, 2 expectation mismatch
//! (a failed reproduction or a VIOLATION finding).

pub mod dsl;
pub mod report;
pub mod repro;

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::time::Instant;

use anyhow::{anyhow, Context, Result};
use clap::{Parser, Subcommand};
use regulus_core::asymptotics::*;
use regulus_core::cache::{PowerCache, CACHE_ENV};
use regulus_core::monomial::MonomialIdeal;
use regulus_core::rees::*;
use regulus_core::regularity::{reg_monomial_ideal, Engine};
use serde_json::json;

use crate::dsl::{parse_ideal, print_ideal};
use crate::report::{crossing_table, reg_text, rows_of, rows_of_mixed, Format, Report};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_MISMATCH: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "regulus", version, about = "Regularity of powers of monomial ideals")]
pub struct Cli {
    /// Regularity engine for monomial ideals.
    #[arg(long, global = true, default_value = "auto", value_parser = parse_engine)]
    pub engine: Engine,
    /// Field characteristic, overriding the one in the ideal file.
    #[arg(long = "char", global = true)]
    pub char: Option<u32>,
    /// Directory of the power cache; REGULUS_CACHE takes precedence.
    #[arg(long, global = true)]
    pub cache: Option<PathBuf>,
    /// Worker threads for independent powers and slices.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[arg(long, global = true, value_enum, default_value = "text")]
    pub format: Format,
    /// Extends the Example 2.3 direct check to m <= 6.
    #[arg(long, global = true)]
    pub slow: bool,
    #[command(subcommand)]
    pub command: Command,
}

fn parse_engine(s: &str) -> Result<Engine, String> {
    s.parse().map_err(|e: regulus_core::CoreError| e.to_string())
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// reg I for one ideal.
    Reg {
        /// Ideal file, or inline text starting with `ring`.
        #[arg(long)]
        ideal: String,
    },
    /// reg I^m for m = 1..max-m.
    Powers {
        #[arg(long)]
        ideal: String,
        #[arg(long, default_value_t = 5)]
        max_m: u32,
        /// Also write the `m,reg,d,e_m` table to this file.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// The e_m sequence, its stable value and the monotonicity checks.
    Asymptote {
        #[arg(long)]
        ideal: String,
        #[arg(long, default_value_t = 6)]
        max_m: u32,
        /// Trailing equal values required before `e` is reported.
        #[arg(long, default_value_t = 2)]
        min_stable: u32,
        /// Decide positive depth of gr_I(S) for the monotonicity hypotheses.
        #[arg(long)]
        gr_depth: bool,
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Fiber ring, Rees algebra and slice-module invariants.
    Rees {
        #[arg(long)]
        ideal: String,
        #[arg(long, default_value_t = 0)]
        i_max: u32,
        #[arg(long)]
        gr_depth: bool,
    },
    /// Thresholds from the main theorem and the reg_y corollary.
    Bounds {
        #[arg(long)]
        ideal: String,
        #[arg(long, default_value_t = 6)]
        max_m: u32,
    },
    /// Closed-form reg of powers of J + m^{d+k}.
    Mixed {
        #[arg(long = "J")]
        j: String,
        #[arg(long)]
        k: u32,
        #[arg(long, default_value_t = 11)]
        max_m: u32,
        /// Direct cross-check up to this power (6 with --slow).
        #[arg(long)]
        direct_max: Option<u32>,
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Slice regularities and first differences of e_m.
    Conjecture {
        #[arg(long)]
        ideal: String,
        #[arg(long, default_value_t = 10)]
        i_max: u32,
        #[arg(long, default_value_t = 6)]
        max_m: u32,
    },
    /// Runs a named example end to end against pinned expectations.
    Repro {
        /// One of the example ids, or `all`.
        id: String,
    },
}

#[derive(Debug)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `argv` (program name first) and runs the command.
pub fn run_command<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    match execute(&cli) {
        Ok((report, code)) => Outcome {
            code,
            stdout: report.emit(cli.format),
            stderr: String::new(),
        },
        Err(e) => Outcome {
            code: EXIT_ERROR,
            stdout: String::new(),
            stderr: format!("error: {e:#}\n"),
        },
    }
}

fn execute(cli: &Cli) -> Result<(Report, i32)> {
    let pool = {
        let mut b = rayon::ThreadPoolBuilder::new();
        if let Some(n) = cli.threads {
            b = b.num_threads(n);
        }
        b.build().context("building the worker pool")?
    };
    let cache = open_cache(cli)?;
    let out = pool.install(|| dispatch(cli, cache.as_ref()))?;
    if let Some(c) = &cache {
        c.flush()?;
    }
    Ok(out)
}

fn open_cache(cli: &Cli) -> Result<Option<PowerCache>> {
    if cli.cache.is_none() && std::env::var_os(CACHE_ENV).is_none() {
        return Ok(None);
    }
    let dir = PowerCache::resolve_dir(cli.cache.as_deref());
    Ok(Some(PowerCache::open(&dir)?))
}

/// Reads an ideal from a file, or from the argument itself when it starts
/// with `ring`.
pub fn load_ideal(arg: &str, char_override: Option<u32>) -> Result<MonomialIdeal> {
    let (text, origin) = if arg.trim_start().starts_with("ring") {
        (arg.to_string(), "<inline>")
    } else {
        let t = std::fs::read_to_string(arg).with_context(|| format!("reading {arg}"))?;
        (t, arg)
    };
    let spec = parse_ideal(&text).map_err(|e| anyhow!("{origin}:{e}"))?;
    Ok(spec.ideal(char_override)?)
}

fn engine_name(e: Engine) -> String {
    serde_json::to_value(e).unwrap().as_str().unwrap_or("auto").to_string()
}

fn ideal_inputs(i: &MonomialIdeal) -> serde_json::Value {
    json!({ "ideal": print_ideal(i), "ideal_hash": i.hash() })
}

fn write_csv(path: &Option<PathBuf>, report: &Report) -> Result<()> {
    if let Some(p) = path {
        write_file(p, &report::sequence_csv(&report.rows))?;
    }
    Ok(())
}

fn write_file(p: &Path, text: &str) -> Result<()> {
    std::fs::write(p, text).with_context(|| format!("writing {}", p.display()))
}

fn exit_for(findings: &[Finding]) -> i32 {
    if has_violation(findings) {
        EXIT_MISMATCH
    } else {
        EXIT_OK
    }
}

fn sequence_text(rep: &AsymptoteReport, min_stable: u32) -> String {
    let mut s = format!("d = {}\n{:>4} {:>8} {:>6}\n", rep.d, "m", "reg", "e_m");
    for p in &rep.e_sequence {
        writeln!(s, "{:>4} {:>8} {:>6}", p.m, p.reg, p.e_m).unwrap();
    }
    match rep.stable_e(min_stable) {
        Some(e) => writeln!(s, "e = {e} from m0 = {}", rep.m0_observed).unwrap(),
        None => writeln!(
            s,
            "e undetermined: {} trailing equal value(s), {min_stable} required",
            rep.stable_suffix_length
        )
        .unwrap(),
    }
    s
}

fn dispatch(cli: &Cli, cache: Option<&PowerCache>) -> Result<(Report, i32)> {
    let start = Instant::now();
    let engine = cli.engine;
    let new_report = |cmd: &str, char: u32| Report::new(cmd, char, &engine_name(engine));
    let (mut report, code) = match &cli.command {
        Command::Reg { ideal } => {
            let i = load_ideal(ideal, cli.char)?;
            let reg = reg_monomial_ideal(&i, engine)?;
            let mut r = new_report("reg", i.ring().char());
            r.inputs = ideal_inputs(&i);
            r.outputs = json!({ "reg": reg });
            r.text = format!("{reg}\n");
            (r, EXIT_OK)
        }
        Command::Powers { ideal, max_m, csv } => {
            let i = load_ideal(ideal, cli.char)?;
            let rep = e_sequence(&i, *max_m, engine, cache)?;
            let mut r = new_report("powers", i.ring().char());
            r.inputs = ideal_inputs(&i);
            r.inputs["max_m"] = json!(max_m);
            r.outputs = json!({ "d": rep.d, "powers": rep.e_sequence });
            r.rows = rows_of(&rep);
            r.text = sequence_text(&rep, u32::MAX);
            r.text = r.text.lines().filter(|l| !l.starts_with("e ")).map(|l| format!("{l}\n")).collect();
            write_csv(csv, &r)?;
            (r, EXIT_OK)
        }
        Command::Asymptote {
            ideal,
            max_m,
            min_stable,
            gr_depth,
            csv,
        } => {
            let i = load_ideal(ideal, cli.char)?;
            let rep = e_sequence(&i, *max_m, engine, cache)?;
            let mono = monotonicity_check(&rep, &i, *gr_depth)?;
            let mut r = new_report("asymptote", i.ring().char());
            r.inputs = ideal_inputs(&i);
            r.inputs["max_m"] = json!(max_m);
            r.outputs = json!({
                "report": rep,
                "e": rep.stable_e(*min_stable),
                "hypotheses": mono.hypotheses,
            });
            r.rows = rows_of(&rep);
            r.text = sequence_text(&rep, *min_stable);
            r.findings = mono.findings;
            write_csv(csv, &r)?;
            let code = exit_for(&r.findings);
            (r, code)
        }
        Command::Rees { ideal, i_max, gr_depth } => {
            let i = load_ideal(ideal, cli.char)?;
            let fiber = fiber_ring(&i)?;
            let rees = rees_presentation(&i)?;
            let betti = rees.betti()?;
            let reg_y = y_regularity(&rees)?;
            let reg_fiber = fiber.regularity()?;
            let slices = (0..=*i_max)
                .map(|k| {
                    let s = slice_module(&fiber, k)?;
                    Ok(json!({ "i": k, "reg": reg_slice(&s)?, "reg_h1": reg_h1(&s)? }))
                })
                .collect::<Result<Vec<_>, regulus_core::CoreError>>()?;
            let depth = if *gr_depth { Some(gr_positive_depth(&i)?) } else { None };
            let mut r = new_report("rees", i.ring().char());
            r.inputs = ideal_inputs(&i);
            let betti_rows: Vec<_> = betti
                .entries
                .iter()
                .map(|(&(k, deg), &v)| json!({ "i": k, "deg": [deg.0, deg.1], "beta": v }))
                .collect();
            r.outputs = json!({
                "reg_fiber": reg_fiber,
                "reg_y": reg_y,
                "rees_betti": betti_rows,
                "slices": slices,
                "gr_depth": depth,
            });
            let mut t = format!("reg k[I_d] = {}\nreg_y R(I) = {}\n", reg_text(reg_fiber), reg_text(reg_y));
            for s in &slices {
                writeln!(
                    t,
                    "N_{}: reg {}, reg H^1 {}",
                    s["i"],
                    reg_text(s["reg"].as_i64()),
                    reg_text(s["reg_h1"].as_i64())
                )
                .unwrap();
            }
            if let Some(d) = &depth {
                writeln!(t, "gr_I(S) positive depth: {} ({:?})", d.positive, d.witness).unwrap();
            }
            r.text = t;
            (r, EXIT_OK)
        }
        Command::Bounds { ideal, max_m } => {
            let i = load_ideal(ideal, cli.char)?;
            let rep = e_sequence(&i, *max_m, engine, cache)?;
            let b = evaluate_bounds(&i, &rep)?;
            let mut r = new_report("bounds", i.ring().char());
            r.inputs = ideal_inputs(&i);
            r.inputs["max_m"] = json!(max_m);
            r.outputs = json!({ "report": rep, "bounds": b });
            r.rows = rows_of(&rep);
            r.text = format!(
                "{}reg H^1(N_e) = {}\nthreshold_main = {} (part 2 {})\nreg_y R(I) = {}, reg N_e = {}\nthreshold_simple = {}\nreg k[I_d] = {}\n",
                sequence_text(&rep, 2),
                reg_text(b.main.reg_h1_n_e),
                b.main.threshold,
                if b.main.part2_applicable { "applies" } else { "does not apply" },
                reg_text(b.simple.reg_y),
                reg_text(b.simple.reg_n_e),
                b.simple.threshold,
                reg_text(b.simple.reg_fiber),
            );
            r.findings = b.findings();
            let code = exit_for(&r.findings);
            (r, code)
        }
        Command::Mixed {
            j,
            k,
            max_m,
            direct_max,
            csv,
        } => {
            let jj = load_ideal(j, cli.char)?;
            let direct = direct_max.unwrap_or(if cli.slow { 6 } else { 0 });
            let rep = mixed_degree_predict(&jj, *k, *max_m, direct, engine, cache)?;
            let mut r = new_report("mixed", jj.ring().char());
            r.inputs = json!({ "J": print_ideal(&jj), "J_hash": jj.hash(), "k": k, "max_m": max_m });
            r.rows = rows_of_mixed(&rep);
            r.text = crossing_table(&rep);
            let mismatches: Vec<&MixedRow> = rep
                .rows
                .iter()
                .filter(|x| x.direct_reg.is_some_and(|d| d != x.predicted_reg))
                .collect();
            for m in &mismatches {
                r.findings.push(Finding::new(
                    FindingClass::Violation,
                    "mixed-degrees",
                    format!("m = {}: predicted {} but direct {:?}", m.m, m.predicted_reg, m.direct_reg),
                    json!({ "m": m.m, "predicted": m.predicted_reg, "direct": m.direct_reg }),
                ));
            }
            r.outputs = json!(rep);
            write_csv(csv, &r)?;
            let code = exit_for(&r.findings);
            (r, code)
        }
        Command::Conjecture { ideal, i_max, max_m } => {
            let i = load_ideal(ideal, cli.char)?;
            let rep = e_sequence(&i, *max_m, engine, cache)?;
            let c = conjecture_scan(&i, *i_max, Some(&rep))?;
            let mut r = new_report("conjecture", i.ring().char());
            r.inputs = ideal_inputs(&i);
            r.inputs["i_max"] = json!(i_max);
            r.inputs["max_m"] = json!(max_m);
            let mut t = String::new();
            for (k, reg) in &c.reg_n {
                writeln!(t, "reg N_{k} = {}", reg_text(*reg)).unwrap();
            }
            writeln!(t, "e_m - e_(m+1): {:?}", c.first_differences).unwrap();
            r.text = t;
            r.rows = rows_of(&rep);
            r.findings = c.findings.clone();
            r.outputs = json!({ "report": rep, "scan": c });
            let code = exit_for(&r.findings);
            (r, code)
        }
        Command::Repro { id } => {
            let ctx = repro::Ctx {
                char: cli.char.unwrap_or(repro::FIXTURE_CHAR),
                engine,
                slow: cli.slow,
                cache,
            };
            let ids: Vec<&str> = if id == "all" { repro::IDS.to_vec() } else { vec![id.as_str()] };
            let outcomes = ids
                .iter()
                .map(|id| repro::run(id, ctx))
                .collect::<Result<Vec<_>, _>>()?;
            let mut r = new_report("repro", ctx.char);
            r.inputs = json!({ "ids": ids, "slow": cli.slow });
            r.text = outcomes.iter().map(|o| o.text()).collect();
            r.findings = outcomes.iter().flat_map(|o| o.findings.clone()).collect();
            let ok = outcomes.iter().all(|o| o.passed());
            r.outputs = json!({ "passed": ok, "outcomes": outcomes });
            (r, if ok { EXIT_OK } else { EXIT_MISMATCH })
        }
    };
    report.timings_ms = json!({ "total": start.elapsed().as_millis() });
    Ok((report, code))
}
