//! Asymptotic regularity of powers: `reg I^m = d m + e_m`.
//!
//! Everything here takes `M = S`, so `reg M = 0` and `H^0_m(M) = 0`.
//! Thresholds are exact rationals; a threshold of `None` is minus infinity
//! and holds for every `m`.

use std::fmt;

use num_rational::Ratio;
use rayon::prelude::*;
use serde::{Serialize, Serializer};
use serde_json::json;

use crate::cache::PowerCache;
use crate::monomial::MonomialIdeal;
use crate::rees::{
    fiber_ring, gr_positive_depth, reg_h1, reg_slice, rees_presentation, slice_module, y_regularity,
    GrDepthReport,
};
use crate::regularity::{reg_monomial_ideal, Engine};
use crate::{CoreError, Reg};

/// An exact rational lower bound on `m`; `None` is minus infinity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Threshold(pub Option<Ratio<i64>>);

impl Threshold {
    pub fn integer(v: i64) -> Self {
        Threshold(Some(Ratio::from_integer(v)))
    }

    pub fn ratio(num: i64, den: i64) -> Self {
        Threshold(Some(Ratio::new(num, den)))
    }

    pub fn minus_infinity() -> Self {
        Threshold(None)
    }

    pub fn from_reg(r: Reg) -> Self {
        Threshold(r.map(Ratio::from_integer))
    }

    pub fn max(self, o: Self) -> Self {
        if self >= o {
            self
        } else {
            o
        }
    }

    /// `m ≥ threshold`, compared exactly.
    pub fn admits(&self, m: i64) -> bool {
        self.0.is_none_or(|t| Ratio::from_integer(m) >= t)
    }
}

impl fmt::Display for Threshold {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            None => write!(f, "-inf"),
            Some(r) if r.is_integer() => write!(f, "{}", r.numer()),
            Some(r) => write!(f, "{}/{}", r.numer(), r.denom()),
        }
    }
}

impl Serialize for Threshold {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING-KEBAB-CASE")]
pub enum FindingClass {
    /// A theorem's conclusion fails although its hypotheses hold.
    Violation,
    /// The conclusion fails and a hypothesis is known to fail.
    HypothesisNotMet,
    /// The conclusion fails and a hypothesis could not be decided.
    Unresolved,
    /// An increase where a conjecture or open question predicts none.
    CounterexampleCandidate,
    /// A computed value differs from a value stated in the literature.
    PaperDiscrepancy,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Finding {
    pub class: FindingClass,
    pub check: String,
    pub detail: String,
    pub witness: serde_json::Value,
}

impl Finding {
    pub fn new(class: FindingClass, check: &str, detail: String, witness: serde_json::Value) -> Self {
        Finding {
            class,
            check: check.into(),
            detail,
            witness,
        }
    }
}

/// Whether the run as a whole must fail.
pub fn has_violation(findings: &[Finding]) -> bool {
    findings.iter().any(|f| f.class == FindingClass::Violation)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PowerEntry {
    pub m: u32,
    pub reg: i64,
    pub e_m: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AsymptoteReport {
    pub ideal_hash: String,
    pub char: u32,
    pub d: u64,
    /// The last computed `e_m`; trustworthy only with a long stable suffix.
    pub e: i64,
    pub e_sequence: Vec<PowerEntry>,
    /// Least `m` from which `e_m = e` throughout the window.
    pub m0_observed: u32,
    pub stable_suffix_length: u32,
    /// The last two values differ.
    pub unstable_at_window_end: bool,
}

impl AsymptoteReport {
    pub fn e_values(&self) -> Vec<i64> {
        self.e_sequence.iter().map(|p| p.e_m).collect()
    }

    pub fn e_at(&self, m: u32) -> Option<i64> {
        self.e_sequence.iter().find(|p| p.m == m).map(|p| p.e_m)
    }

    /// `e` when at least `min_tail` trailing values agree.
    pub fn stable_e(&self, min_tail: u32) -> Option<i64> {
        (self.stable_suffix_length >= min_tail).then_some(self.e)
    }
}

/// `I^1 .. I^{m_max}`, from the cache when one is given.
pub fn powers(
    i: &MonomialIdeal,
    m_max: u32,
    cache: Option<&PowerCache>,
) -> Result<Vec<MonomialIdeal>, CoreError> {
    let mut out: Vec<MonomialIdeal> = Vec::with_capacity(m_max as usize);
    for m in 1..=m_max {
        let p = match cache {
            Some(c) => c.power(i, m)?,
            None if m == 1 => i.clone(),
            None => out.last().expect("previous power").product(i)?,
        };
        out.push(p);
    }
    Ok(out)
}

/// `reg I^m` for `m = 1..m_max`, in parallel across `m`.
pub fn power_regularities(
    i: &MonomialIdeal,
    m_max: u32,
    engine: Engine,
    cache: Option<&PowerCache>,
) -> Result<Vec<i64>, CoreError> {
    let ps = powers(i, m_max, cache)?;
    ps.par_iter().map(|p| reg_monomial_ideal(p, engine)).collect()
}

pub fn e_sequence(
    i: &MonomialIdeal,
    m_max: u32,
    engine: Engine,
    cache: Option<&PowerCache>,
) -> Result<AsymptoteReport, CoreError> {
    if i.is_zero() || i.is_unit() {
        return Err(CoreError::Invalid("powers of a proper nonzero ideal are required".into()));
    }
    if m_max == 0 {
        return Err(CoreError::Invalid("the window needs m_max >= 1".into()));
    }
    let d = i.asymptotic_degree()?;
    let regs = power_regularities(i, m_max, engine, cache)?;
    let e_sequence: Vec<PowerEntry> = regs
        .iter()
        .enumerate()
        .map(|(k, &reg)| {
            let m = k as u32 + 1;
            PowerEntry {
                m,
                reg,
                e_m: reg - d as i64 * m as i64,
            }
        })
        .collect();
    let e = e_sequence.last().expect("m_max >= 1").e_m;
    let mut m0 = m_max;
    while m0 > 1 && e_sequence[m0 as usize - 2].e_m == e {
        m0 -= 1;
    }
    let unstable = m_max >= 2 && e_sequence[m_max as usize - 2].e_m != e;
    Ok(AsymptoteReport {
        ideal_hash: i.hash(),
        char: i.ring().char(),
        d,
        e,
        e_sequence,
        m0_observed: m0,
        stable_suffix_length: m_max - m0 + 1,
        unstable_at_window_end: unstable,
    })
}

fn main_hypotheses(i: &MonomialIdeal) -> Result<u32, CoreError> {
    let prof = i.profile();
    if !prof.equigenerated {
        return Err(CoreError::Hypothesis(format!("{i} is not generated in a single degree")));
    }
    if !i.is_m_primary() {
        return Err(CoreError::Hypothesis(format!("S/I has infinite length for I = {i}")));
    }
    Ok(prof.min_gen_degree as u32)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MainBound {
    pub reg_h1_n_e: Reg,
    /// `max{reg H^1(N_e) + 1, (reg M - e + 1)/d}`.
    pub threshold: Threshold,
    pub part2_applicable: bool,
    pub findings: Vec<Finding>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SimpleBound {
    pub reg_y: Reg,
    pub reg_n_e: Reg,
    /// `max{reg_y R(I), (reg M + 1)/d}`.
    pub threshold: Threshold,
    /// `reg k[I_d]`, the threshold of the `e = 0` corollary.
    pub reg_fiber: Reg,
    pub findings: Vec<Finding>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundEvaluation {
    pub d: u32,
    pub e: i64,
    pub main: MainBound,
    pub simple: SimpleBound,
}

impl BoundEvaluation {
    pub fn findings(&self) -> Vec<Finding> {
        self.main
            .findings
            .iter()
            .chain(&self.simple.findings)
            .cloned()
            .collect()
    }
}

fn stable_from(report: &AsymptoteReport, t: Threshold, check: &str) -> Vec<Finding> {
    report
        .e_sequence
        .iter()
        .filter(|p| t.admits(p.m as i64) && p.e_m != report.e)
        .map(|p| {
            Finding::new(
                FindingClass::Violation,
                check,
                format!("e_{} = {} differs from e = {} although m >= {t}", p.m, p.e_m, report.e),
                json!({ "m": p.m, "e_m": p.e_m, "e": report.e, "threshold": t.to_string() }),
            )
        })
        .collect()
}

/// Part 1 (`e_m = e` above the threshold) and, when it applies, part 2
/// (`e_m = e` exactly for `m ≥ reg H^1(N_e) + 1`).
pub fn evaluate_main_bound(i: &MonomialIdeal, report: &AsymptoteReport) -> Result<MainBound, CoreError> {
    let d = main_hypotheses(i)?;
    let e = report.e;
    if e < 0 {
        return Err(CoreError::Invalid(format!("e = {e} is negative")));
    }
    let fiber = fiber_ring(i)?;
    let h1 = reg_h1(&slice_module(&fiber, e as u32)?)?;
    let bound2 = Threshold::ratio(1 - e, d as i64);
    let threshold = bound2.max(Threshold::from_reg(h1.map(|h| h + 1)));
    let part2_applicable = h1.is_some_and(|h| Threshold::integer(h) >= bound2);
    let mut findings = stable_from(report, threshold, "main-part-1");
    if let (true, Some(h)) = (part2_applicable, h1) {
        for p in &report.e_sequence {
            let expect = p.m as i64 > h;
            if (p.e_m == e) != expect {
                findings.push(Finding::new(
                    FindingClass::Violation,
                    "main-part-2",
                    format!(
                        "e_{} = {} but equality with e = {e} should hold iff m >= {}",
                        p.m,
                        p.e_m,
                        h + 1
                    ),
                    json!({ "m": p.m, "e_m": p.e_m, "e": e, "reg_h1": h }),
                ));
            }
        }
    }
    Ok(MainBound {
        reg_h1_n_e: h1,
        threshold,
        part2_applicable,
        findings,
    })
}

/// The corollary threshold `max{reg_y, 1/d}`, the chain
/// `reg H^1(N_e) + 1 ≤ reg N_e ≤ reg_y`, and the `e = 0` fiber corollary.
pub fn evaluate_simple_bound(
    i: &MonomialIdeal,
    report: &AsymptoteReport,
    reg_h1_n_e: Reg,
) -> Result<SimpleBound, CoreError> {
    let d = main_hypotheses(i)?;
    let e = report.e;
    if e < 0 {
        return Err(CoreError::Invalid(format!("e = {e} is negative")));
    }
    let reg_y = y_regularity(&rees_presentation(i)?)?;
    let fiber = fiber_ring(i)?;
    let reg_n_e = reg_slice(&slice_module(&fiber, e as u32)?)?;
    let reg_fiber = fiber.regularity()?;
    let threshold = Threshold::ratio(1, d as i64).max(Threshold::from_reg(reg_y));
    let mut findings = stable_from(report, threshold, "simple-bound");
    let chain_ok = reg_h1_n_e.map(|h| h + 1) <= reg_n_e && reg_n_e <= reg_y;
    if !chain_ok {
        findings.push(Finding::new(
            FindingClass::Violation,
            "simple-bound-chain",
            "reg H^1(N_e) + 1 <= reg N_e <= reg_y fails".into(),
            json!({ "reg_h1": reg_h1_n_e, "reg_n_e": reg_n_e, "reg_y": reg_y }),
        ));
    }
    if e == 0 {
        findings.extend(stable_from(report, Threshold::from_reg(reg_fiber), "fiber-corollary"));
    }
    Ok(SimpleBound {
        reg_y,
        reg_n_e,
        threshold,
        reg_fiber,
        findings,
    })
}

pub fn evaluate_bounds(i: &MonomialIdeal, report: &AsymptoteReport) -> Result<BoundEvaluation, CoreError> {
    let d = main_hypotheses(i)?;
    let main = evaluate_main_bound(i, report)?;
    let simple = evaluate_simple_bound(i, report, main.reg_h1_n_e)?;
    Ok(BoundEvaluation {
        d,
        e: report.e,
        main,
        simple,
    })
}

/// `(d, e)` with `d = d_1` and `e = reg M + Σ_{i≥2} (d_i - 1)` for a regular
/// sequence of degrees `d_1 ≥ ... ≥ d_t`.
pub fn regular_sequence_e(degrees: &[u32], reg_m: i64) -> Result<(u32, i64), CoreError> {
    if degrees.is_empty() {
        return Err(CoreError::Invalid("a regular sequence needs at least one element".into()));
    }
    if degrees.windows(2).any(|w| w[0] < w[1]) || degrees.contains(&0) {
        return Err(CoreError::Invalid("degrees must be positive and non-increasing".into()));
    }
    let e = reg_m + degrees[1..].iter().map(|&d| d as i64 - 1).sum::<i64>();
    Ok((degrees[0], e))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrossingRow {
    pub p: u32,
    pub reg_j_p: i64,
    pub f_m_p: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MixedRow {
    pub m: u32,
    pub p_m: u32,
    pub predicted_reg: i64,
    pub predicted_e: i64,
    pub direct_reg: Option<i64>,
    pub crossing: Vec<CrossingRow>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MixedDegreeReport {
    pub j: String,
    pub ideal: String,
    pub d: u32,
    pub k: u32,
    pub reg_j_powers: Vec<i64>,
    pub rows: Vec<MixedRow>,
}

impl MixedDegreeReport {
    pub fn predicted_e(&self) -> Vec<i64> {
        self.rows.iter().map(|r| r.predicted_e).collect()
    }
}

/// `reg I^m = min{reg J^{p_m}, f_m(p_m - 1)}` for `I = J + m^{d+k}`, with
/// `f_m(p) = (d + k) m - k p` and `p_m` the least `p ≥ 1` with
/// `reg J^p ≥ f_m(p)`. Direct values are computed for `m ≤ direct_max`.
pub fn mixed_degree_predict(
    j: &MonomialIdeal,
    k: u32,
    m_max: u32,
    direct_max: u32,
    engine: Engine,
    cache: Option<&PowerCache>,
) -> Result<MixedDegreeReport, CoreError> {
    let d = main_hypotheses(j)?;
    if m_max == 0 {
        return Err(CoreError::Invalid("the window needs m_max >= 1".into()));
    }
    let i = j.sum(&MonomialIdeal::max_power(j.ring(), d + k))?;
    let reg_j = power_regularities(j, m_max, engine, cache)?;
    let direct = if direct_max > 0 {
        power_regularities(&i, direct_max.min(m_max), engine, cache)?
    } else {
        Vec::new()
    };
    let f = |m: u32, p: u32| (d + k) as i64 * m as i64 - k as i64 * p as i64;
    let mut rows = Vec::with_capacity(m_max as usize);
    for m in 1..=m_max {
        let p_m = (1..=m)
            .find(|&p| reg_j[p as usize - 1] >= f(m, p))
            .ok_or_else(|| CoreError::Invalid(format!("no crossing for m = {m}: reg J^m < d m")))?;
        let predicted = reg_j[p_m as usize - 1].min(f(m, p_m - 1));
        rows.push(MixedRow {
            m,
            p_m,
            predicted_reg: predicted,
            predicted_e: predicted - d as i64 * m as i64,
            direct_reg: direct.get(m as usize - 1).copied(),
            crossing: (1..=m)
                .map(|p| CrossingRow {
                    p,
                    reg_j_p: reg_j[p as usize - 1],
                    f_m_p: f(m, p),
                })
                .collect(),
        });
    }
    Ok(MixedDegreeReport {
        j: j.to_string(),
        ideal: i.to_string(),
        d,
        k,
        reg_j_powers: reg_j,
        rows,
    })
}

/// Which monotonicity hypotheses hold for `I` (with `M = S`).
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Hypotheses {
    pub m_primary: bool,
    pub equigenerated: bool,
    pub generated_in_degrees_le_d: bool,
    /// `None` when the depth test was skipped.
    pub gr_positive_depth: Option<bool>,
    pub gr_depth: Option<GrDepthReport>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MonotonicityReport {
    pub hypotheses: Hypotheses,
    pub findings: Vec<Finding>,
}

fn classify(h: Option<bool>) -> FindingClass {
    match h {
        Some(true) => FindingClass::Violation,
        Some(false) => FindingClass::HypothesisNotMet,
        None => FindingClass::Unresolved,
    }
}

fn all_of(hs: &[Option<bool>]) -> Option<bool> {
    if hs.contains(&Some(false)) {
        Some(false)
    } else if hs.contains(&None) {
        None
    } else {
        Some(true)
    }
}

/// Checks every monotonicity statement against the computed window and
/// reports each failure, classified by whether its hypotheses hold.
pub fn monotonicity_check(
    report: &AsymptoteReport,
    i: &MonomialIdeal,
    test_gr_depth: bool,
) -> Result<MonotonicityReport, CoreError> {
    let prof = i.profile();
    let d = report.d;
    let gr_depth = if test_gr_depth {
        Some(gr_positive_depth(i)?)
    } else {
        None
    };
    let hyp = Hypotheses {
        m_primary: i.is_m_primary(),
        equigenerated: prof.equigenerated,
        generated_in_degrees_le_d: prof.max_gen_degree <= d,
        gr_positive_depth: gr_depth.as_ref().map(|g| g.positive),
        gr_depth,
    };
    let primary = Some(hyp.m_primary);
    let equi = all_of(&[primary, Some(hyp.equigenerated)]);
    let low_degrees = all_of(&[primary, Some(hyp.generated_in_degrees_le_d)]);
    let depth = all_of(&[primary, hyp.gr_positive_depth]);
    let constancy = all_of(&[primary, Some(hyp.generated_in_degrees_le_d), hyp.gr_positive_depth]);

    let seq = &report.e_sequence;
    let mut findings = Vec::new();
    let mut push = |class: FindingClass, check: &str, detail: String, witness: serde_json::Value| {
        findings.push(Finding::new(class, check, detail, witness));
    };
    for w in seq.windows(2) {
        let (a, b) = (&w[0], &w[1]);
        let wit = json!({ "m": a.m, "e_m": a.e_m, "e_next": b.e_m, "d": d });
        if b.e_m > a.e_m {
            push(
                classify(equi),
                "decreasing-part-1",
                format!("e_{} = {} < e_{} = {}", a.m, a.e_m, b.m, b.e_m),
                wit.clone(),
            );
            // Threshold (reg M + 1)/d ≤ 1 for M = S, so every m counts.
            push(
                classify(low_degrees),
                "depth1-part-1",
                format!("e_m rises from {} to {} at m = {}", a.e_m, b.e_m, a.m),
                wit.clone(),
            );
        }
        if b.e_m < a.e_m - d as i64 {
            push(
                classify(equi),
                "decreasing-part-1-step",
                format!("e drops by more than d = {d} at m = {}", a.m),
                wit.clone(),
            );
        }
        if b.e_m < a.e_m {
            push(
                classify(depth),
                "depth1-part-2",
                format!("e_m falls from {} to {} at m = {}", a.e_m, b.e_m, a.m),
                wit.clone(),
            );
        }
        if b.e_m != a.e_m {
            push(
                classify(constancy),
                "constancy",
                format!("e_{} = {} but e_{} = {}", a.m, a.e_m, b.m, b.e_m),
                wit,
            );
        }
    }
    for p in seq {
        if p.e_m < 0 {
            push(
                FindingClass::Violation,
                "lower-bound",
                format!("reg I^{} = {} < d m", p.m, p.reg),
                json!({ "m": p.m, "reg": p.reg, "d": d }),
            );
        }
    }
    // Pure powers x_j^{a_j} form a regular sequence of length n; with
    // max a_j = d they bound e_m by Σ_{i≥2} (d_i - 1).
    if hyp.m_primary {
        let mut pure: Vec<u32> = (0..i.nvars())
            .map(|j| {
                i.gens()
                    .iter()
                    .filter(|g| g.iter().enumerate().all(|(k, &x)| k == j || x == 0))
                    .map(|g| g[j])
                    .min()
                    .expect("m-primary")
            })
            .collect();
        pure.sort_unstable_by(|a, b| b.cmp(a));
        if pure[0] as u64 == d {
            let (_, bound) = regular_sequence_e(&pure, 0)?;
            for p in seq.iter().filter(|p| p.e_m > bound) {
                push(
                    FindingClass::Violation,
                    "regular-sequence-bound",
                    format!("e_{} = {} exceeds {bound}", p.m, p.e_m),
                    json!({ "m": p.m, "e_m": p.e_m, "bound": bound, "degrees": pure }),
                );
            }
        }
    }
    Ok(MonotonicityReport {
        hypotheses: hyp,
        findings,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConjectureReport {
    pub reg_n: Vec<(u32, Reg)>,
    /// `e_m - e_{m+1}` for consecutive computed `m`.
    pub first_differences: Vec<i64>,
    pub findings: Vec<Finding>,
}

/// `reg N_i` for `i = 0..=i_max` and the first differences of `e_m`.
///
/// Increases in `reg N_i` are counterexample candidates for the slice
/// conjecture, except for `i ≥ e` where monotonicity is a theorem and an
/// increase is a violation. Increases of `e_m - e_{m+1}` are candidates for
/// the open question on first differences.
pub fn conjecture_scan(
    i: &MonomialIdeal,
    i_max: u32,
    report: Option<&AsymptoteReport>,
) -> Result<ConjectureReport, CoreError> {
    main_hypotheses(i)?;
    let fiber = fiber_ring(i)?;
    let reg_n: Vec<(u32, Reg)> = (0..=i_max)
        .into_par_iter()
        .map(|k| Ok((k, reg_slice(&slice_module(&fiber, k)?)?)))
        .collect::<Result<_, CoreError>>()?;
    let e = report.map(|r| r.e);
    let mut findings = Vec::new();
    for w in reg_n.windows(2) {
        let ((a, ra), (b, rb)) = (w[0], w[1]);
        if rb > ra {
            let theorem = e.is_some_and(|e| a as i64 >= e);
            let class = if theorem {
                FindingClass::Violation
            } else {
                FindingClass::CounterexampleCandidate
            };
            findings.push(Finding::new(
                class,
                if theorem { "decreasing-part-2" } else { "slice-conjecture" },
                format!("reg N_{b} = {rb:?} exceeds reg N_{a} = {ra:?}"),
                json!({ "ideal": i.to_string(), "i": a, "reg_n_i": ra, "reg_n_next": rb, "e": e }),
            ));
        }
    }
    let first_differences: Vec<i64> = report
        .map(|r| r.e_sequence.windows(2).map(|w| w[0].e_m - w[1].e_m).collect())
        .unwrap_or_default();
    for (k, w) in first_differences.windows(2).enumerate() {
        if w[1] > w[0] {
            findings.push(Finding::new(
                FindingClass::CounterexampleCandidate,
                "first-differences",
                format!("e_m - e_(m+1) increases from {} to {} at m = {}", w[0], w[1], k + 2),
                json!({ "ideal": i.to_string(), "m": k + 2, "differences": first_differences }),
            ));
        }
    }
    Ok(ConjectureReport {
        reg_n,
        first_differences,
        findings,
    })
}

/// `max{0, floor(((d - 1) n - i) / d)}`, the regularity of `N_i(m^d, S)`.
pub fn veronese_slice_formula(n: u32, d: u32, i: u32) -> i64 {
    let num = (d as i64 - 1) * n as i64 - i as i64;
    num.div_euclid(d as i64).max(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use regulus_gb::Ring;

    fn ring(n: usize) -> Ring {
        Ring::standard(&["x", "y", "z", "w"][..n], 32003).unwrap()
    }

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::new(&ring(n), gens.iter().map(|g| g.to_vec()).collect()).unwrap()
    }

    #[test]
    fn thresholds_compare_exactly() {
        let t = Threshold::ratio(-6, 20);
        assert!(t.admits(0));
        assert_eq!(t.to_string(), "-3/10");
        assert_eq!(Threshold::integer(2).max(t), Threshold::integer(2));
        assert!(Threshold::minus_infinity().admits(-100));
        assert!(!Threshold::ratio(1, 2).admits(0));
    }

    #[test]
    fn powers_of_the_maximal_ideal() {
        let m2 = MonomialIdeal::max_power(&ring(2), 2);
        let r = e_sequence(&m2, 5, Engine::Auto, None).unwrap();
        assert_eq!(r.e_values(), vec![0; 5]);
        assert_eq!(r.d, 2);
        assert_eq!(r.m0_observed, 1);
        assert_eq!(r.stable_suffix_length, 5);
        let b = evaluate_bounds(&m2, &r).unwrap();
        assert_eq!(b.main.reg_h1_n_e, None);
        assert_eq!(b.main.threshold, Threshold::ratio(1, 2));
        assert_eq!(b.simple.reg_y, Some(1));
        assert!(b.findings().is_empty());
        let m = MonomialIdeal::max_power(&ring(2), 1);
        let rm = e_sequence(&m, 4, Engine::Auto, None).unwrap();
        let s = evaluate_bounds(&m, &rm).unwrap();
        assert_eq!(s.simple.reg_y, Some(0));
        assert_eq!(s.simple.threshold, Threshold::integer(1));
    }

    #[test]
    fn regular_sequences() {
        assert_eq!(regular_sequence_e(&[3, 2], 0).unwrap(), (3, 1));
        assert_eq!(regular_sequence_e(&[1, 1], 0).unwrap(), (1, 0));
        assert_eq!(regular_sequence_e(&[2, 2, 2], 0).unwrap(), (2, 2));
        assert!(regular_sequence_e(&[2, 3], 0).is_err());
        assert!(regular_sequence_e(&[], 0).is_err());
    }

    #[test]
    fn mixed_degrees_small_cases() {
        let j = ideal(2, &[&[2, 0], &[0, 2]]);
        let r = mixed_degree_predict(&j, 1, 5, 5, Engine::Auto, None).unwrap();
        for row in &r.rows {
            assert_eq!(row.predicted_reg, 2 * row.m as i64 + 1);
            assert_eq!(row.direct_reg, Some(row.predicted_reg));
        }
        let m3 = MonomialIdeal::max_power(&ring(2), 3);
        let r = mixed_degree_predict(&m3, 0, 4, 0, Engine::Auto, None).unwrap();
        assert!(r.rows.iter().all(|row| row.predicted_reg == 3 * row.m as i64));
        assert!(mixed_degree_predict(&ideal(2, &[&[2, 0], &[0, 3]]), 1, 2, 0, Engine::Auto, None).is_err());
    }

    #[test]
    fn veronese_formula() {
        assert_eq!(veronese_slice_formula(2, 2, 0), 1);
        assert_eq!(veronese_slice_formula(2, 2, 1), 0);
        assert_eq!(veronese_slice_formula(3, 3, 0), 2);
        assert_eq!(veronese_slice_formula(3, 3, 7), 0);
    }

    #[test]
    fn conjecture_scan_on_a_square() {
        let m2 = MonomialIdeal::max_power(&ring(2), 2);
        let c = conjecture_scan(&m2, 4, None).unwrap();
        let regs: Vec<Reg> = c.reg_n.iter().map(|x| x.1).collect();
        assert_eq!(regs, vec![Some(1), Some(0), Some(0), Some(0), Some(0)]);
        assert!(c.findings.is_empty());
    }

    #[test]
    fn classification_of_a_rise() {
        // A synthetic window with a rise: equigenerated, so the rise is a
        // violation of the decreasing statement.
        let m2 = MonomialIdeal::max_power(&ring(2), 2);
        let mut r = e_sequence(&m2, 2, Engine::Auto, None).unwrap();
        r.e_sequence[1].e_m = 1;
        let mono = monotonicity_check(&r, &m2, false).unwrap();
        assert!(mono
            .findings
            .iter()
            .any(|f| f.check == "decreasing-part-1" && f.class == FindingClass::Violation));
        assert!(mono
            .findings
            .iter()
            .any(|f| f.check == "constancy" && f.class == FindingClass::Unresolved));
    }
}
