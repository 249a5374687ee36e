//! Hilbert series numerators of monomial ideals and monomial submodules.
//!
//! For a monomial ideal `I` in a ring with positive weights `w`, the Hilbert
//! series of `R/I` is `K(z) / prod_j (1 - z^{w_j})`. The numerator is
//! computed by the pivot recursion `K(I) = K(I + (p)) + z^{|p|} K(I : p)`.

use std::collections::BTreeMap;

use crate::mono::Mono;

/// A Laurent polynomial with integer coefficients, stored sparsely.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HilbertNumerator {
    coeffs: BTreeMap<i64, i128>,
}

impl HilbertNumerator {
    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    pub fn monomial(deg: i64, c: i128) -> Self {
        let mut coeffs = BTreeMap::new();
        if c != 0 {
            coeffs.insert(deg, c);
        }
        HilbertNumerator { coeffs }
    }

    pub fn coeffs(&self) -> &BTreeMap<i64, i128> {
        &self.coeffs
    }

    pub fn coeff(&self, deg: i64) -> i128 {
        self.coeffs.get(&deg).copied().unwrap_or(0)
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut coeffs = self.coeffs.clone();
        for (&d, &c) in &o.coeffs {
            let e = coeffs.entry(d).or_insert(0);
            *e += c;
            if *e == 0 {
                coeffs.remove(&d);
            }
        }
        HilbertNumerator { coeffs }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut acc = HilbertNumerator::default();
        for (&d, &c) in &self.coeffs {
            for (&e, &f) in &o.coeffs {
                acc = acc.add(&HilbertNumerator::monomial(d + e, c * f));
            }
        }
        acc
    }

    pub fn shift(&self, by: i64) -> Self {
        HilbertNumerator {
            coeffs: self.coeffs.iter().map(|(&d, &c)| (d + by, c)).collect(),
        }
    }

    /// `1 - z^d`.
    pub fn one_minus(d: i64) -> Self {
        HilbertNumerator::one().add(&HilbertNumerator::monomial(d, -1))
    }

    /// Coefficients of `K(z) / prod (1 - z^{w_j})` in degrees `lo..=hi`.
    pub fn expand(&self, weights: &[u32], lo: i64, hi: i64) -> Vec<i128> {
        if hi < lo {
            return Vec::new();
        }
        let start = self.coeffs.keys().next().copied().unwrap_or(lo).min(lo);
        let len = (hi - start + 1) as usize;
        let mut series = vec![0i128; len];
        for (&d, &c) in &self.coeffs {
            if d <= hi {
                series[(d - start) as usize] += c;
            }
        }
        for &w in weights {
            let w = w as usize;
            for k in w..len {
                series[k] += series[k - w];
            }
        }
        series[(lo - start) as usize..].to_vec()
    }
}

fn minimalize(mut gens: Vec<Mono>) -> Vec<Mono> {
    gens.sort_by_key(|m| m.total_degree());
    gens.dedup();
    let mut out: Vec<Mono> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|h| h.divides(&g)) {
            out.push(g);
        }
    }
    out
}

fn numerator_rec(gens: Vec<Mono>, w: &[u32]) -> HilbertNumerator {
    if gens.is_empty() {
        return HilbertNumerator::one();
    }
    if gens.iter().any(|g| g.is_one()) {
        return HilbertNumerator::default();
    }
    let pairwise_coprime = {
        let mut seen = 0u64;
        let mut ok = gens[0].nvars() <= 64;
        for g in &gens {
            let m = g.mask();
            if seen & m != 0 {
                ok = false;
                break;
            }
            seen |= m;
        }
        ok
    };
    if pairwise_coprime {
        let mut k = HilbertNumerator::one();
        for g in &gens {
            k = k.mul(&HilbertNumerator::one_minus(g.weighted_degree(w) as i64));
        }
        return k;
    }
    // Pivot on the variable occurring in the most generators, at the median
    // of its positive exponents.
    let n = gens[0].nvars();
    let mut best = (0usize, 0usize);
    for j in 0..n {
        let c = gens.iter().filter(|g| g.get(j) > 0).count();
        if c > best.1 {
            best = (j, c);
        }
    }
    let j = best.0;
    let mut exps: Vec<u32> = gens.iter().map(|g| g.get(j)).filter(|&e| e > 0).collect();
    exps.sort_unstable();
    // The pivot must stay outside the ideal so that both branches shrink.
    let pure = gens
        .iter()
        .filter(|g| g.total_degree() == g.get(j) as u64)
        .map(|g| g.get(j))
        .min()
        .unwrap_or(u32::MAX);
    let e = exps[exps.len() / 2].min(pure - 1);
    let p = Mono::var(n, j, e);

    let mut plus = gens.clone();
    plus.push(p.clone());
    let plus = minimalize(plus);
    let colon = minimalize(
        gens.iter()
            .map(|g| {
                let mut ex = g.exps_u32();
                ex[j] = ex[j].saturating_sub(e);
                Mono::from_exps(&ex).expect("exponent in range")
            })
            .collect(),
    );
    numerator_rec(plus, w).add(&numerator_rec(colon, w).shift(p.weighted_degree(w) as i64))
}

/// Numerator of the Hilbert series of `R / (leads)` under the weights `w`.
pub fn hilbert_numerator(leads: &[Mono], weights: &[u32]) -> HilbertNumerator {
    numerator_rec(minimalize(leads.to_vec()), weights)
}

/// Numerator for `F / (leads)` where `F` has basis elements in degrees `twists`.
pub fn module_hilbert_numerator(
    leads: &[(u32, Mono)],
    twists: &[i64],
    weights: &[u32],
) -> HilbertNumerator {
    let mut acc = HilbertNumerator::default();
    for (c, &t) in twists.iter().enumerate() {
        let comp: Vec<Mono> = leads
            .iter()
            .filter(|(k, _)| *k as usize == c)
            .map(|(_, m)| m.clone())
            .collect();
        acc = acc.add(&hilbert_numerator(&comp, weights).shift(t));
    }
    acc
}
