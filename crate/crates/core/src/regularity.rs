//! Castelnuovo–Mumford regularity by two independent routes.
//!
//! The resolution engine resolves a presentation with Schreyer syzygies and
//! reads minimal Betti numbers off the complex tensored with the residue
//! field. The scanner evaluates local cohomology of `S/I` for monomial `I`
//! through degree complexes: for `a ∈ Z^n` with negative support `G`,
//! `H^i_m(S/I)_a ≅ H̃_{i-|G|-1}(Δ_a)`.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;
use regulus_gb::{
    ideal_relations, schreyer_resolution, Deg, FreeModule, ModElem, PrimeField, Ring,
    SchreyerResolution,
};
use serde::{Deserialize, Serialize};

use crate::monomial::MonomialIdeal;
use crate::simplicial::{rank_mod_p, reduced_homology, SimplicialComplex};
use crate::{CoreError, Reg};

/// A cokernel presentation `ambient / <relations>`.
#[derive(Clone, Debug)]
pub struct GradedModulePresentation {
    pub ring: Ring,
    pub ambient: FreeModule,
    pub relations: Vec<ModElem>,
}

impl GradedModulePresentation {
    pub fn new(ring: Ring, ambient: FreeModule, relations: Vec<ModElem>) -> Self {
        GradedModulePresentation {
            ring,
            ambient,
            relations,
        }
    }

    /// `S/I` for a homogeneous ideal given by its generators.
    pub fn quotient(ring: Ring, polys: &[regulus_gb::Poly]) -> Self {
        GradedModulePresentation {
            ambient: FreeModule::new(vec![Deg(0, 0)]),
            relations: ideal_relations(polys),
            ring,
        }
    }
}

/// Minimal graded Betti numbers, keyed by (homological index, degree).
/// Single gradings use degrees `Deg(a, 0)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiTable {
    pub entries: BTreeMap<(usize, Deg), u64>,
    pub minimal: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Axis {
    Single,
    SecondOfPair,
}

impl BettiTable {
    pub fn get(&self, i: usize, d: Deg) -> u64 {
        self.entries.get(&(i, d)).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Largest homological index with a nonzero entry.
    pub fn length(&self) -> Option<usize> {
        self.entries.keys().map(|k| k.0).max()
    }

    /// Total Betti number at homological index `i`.
    pub fn total(&self, i: usize) -> u64 {
        self.entries
            .iter()
            .filter(|(k, _)| k.0 == i)
            .map(|(_, v)| *v)
            .sum()
    }
}

/// Resolves `p` and minimalizes degreewise.
pub fn graded_betti(p: &GradedModulePresentation) -> Result<BettiTable, CoreError> {
    let res = schreyer_resolution(&p.ring, &p.ambient, &p.relations, p.ring.nvars())?;
    Ok(betti_of_resolution(&res))
}

/// Ranks of the constant parts of each differential, split by degree.
fn constant_ranks(res: &SchreyerResolution, field: PrimeField) -> Vec<BTreeMap<Deg, usize>> {
    // out[i][D]: rank of d_i: F_i -> F_{i-1} restricted to degree D; out[0] is empty.
    let mut out = vec![BTreeMap::new(); res.modules.len()];
    for (k, map) in res.maps.iter().enumerate() {
        let src = &res.modules[k + 1];
        let tgt = &res.modules[k];
        let mut degs: Vec<Deg> = src.twists.clone();
        degs.sort_unstable();
        degs.dedup();
        for d in degs {
            let cols: Vec<usize> = (0..tgt.rank()).filter(|&c| tgt.twists[c] == d).collect();
            if cols.is_empty() {
                continue;
            }
            let col_of: HashMap<usize, usize> = cols.iter().enumerate().map(|(i, &c)| (c, i)).collect();
            let rows: Vec<Vec<u32>> = (0..src.rank())
                .filter(|&b| src.twists[b] == d)
                .map(|b| {
                    let mut row = vec![0u32; cols.len()];
                    for (c, m, v) in map[b].terms() {
                        if m.is_one() {
                            if let Some(&i) = col_of.get(&(*c as usize)) {
                                row[i] = *v;
                            }
                        }
                    }
                    row
                })
                .filter(|r| r.iter().any(|&v| v != 0))
                .collect();
            if !rows.is_empty() {
                out[k + 1].insert(d, rank_mod_p(field, rows));
            }
        }
    }
    out
}

/// `β_{i,D} = n_i(D) - rank(d_i)_D - rank(d_{i+1})_D` over the residue field.
pub fn betti_of_resolution(res: &SchreyerResolution) -> BettiTable {
    let ranks = constant_ranks(res, res.ring.field());
    let mut entries = BTreeMap::new();
    for (i, module) in res.modules.iter().enumerate() {
        let mut counts: BTreeMap<Deg, usize> = BTreeMap::new();
        for &d in &module.twists {
            *counts.entry(d).or_default() += 1;
        }
        for (d, n) in counts {
            let r_out = ranks[i].get(&d).copied().unwrap_or(0);
            let r_in = ranks.get(i + 1).and_then(|m| m.get(&d)).copied().unwrap_or(0);
            let b = n - r_out - r_in;
            if b > 0 {
                entries.insert((i, d), b as u64);
            }
        }
    }
    BettiTable {
        entries,
        minimal: true,
    }
}

/// `max{a - i}` or `max{b - i}` over the entries; `None` for the zero module.
pub fn regularity_from_betti(b: &BettiTable, axis: Axis) -> Reg {
    b.entries
        .keys()
        .map(|(i, d)| {
            let a = match axis {
                Axis::Single => d.0,
                Axis::SecondOfPair => d.1,
            };
            a as i64 - *i as i64
        })
        .max()
}

/// The degree complex `Δ_a` on the vertices outside `negatives`.
///
/// Vertices are renumbered consecutively in increasing order of the
/// surviving variables. Coordinates of `a` inside `negatives` are ignored.
pub fn degree_complex(
    i: &MonomialIdeal,
    a: &[i64],
    negatives: &[usize],
) -> Result<SimplicialComplex, CoreError> {
    let n = i.nvars();
    if a.len() != n {
        return Err(CoreError::Invalid("degree vector has the wrong length".into()));
    }
    let g_mask: u32 = negatives.iter().fold(0, |m, &j| m | (1 << j));
    let verts: Vec<usize> = (0..n).filter(|j| g_mask & (1 << j) == 0).collect();
    if verts.iter().any(|&j| a[j] < 0) {
        return Err(CoreError::Invalid("negative coordinate outside the negative set".into()));
    }
    let k = verts.len();
    let mut faces = Vec::new();
    for f in 0u32..(1 << k) {
        let mut u = g_mask;
        for (v, &j) in verts.iter().enumerate() {
            if f & (1 << v) != 0 {
                u |= 1 << j;
            }
        }
        let below = i
            .gens()
            .iter()
            .any(|g| (0..n).all(|j| u & (1 << j) != 0 || g[j] as i64 <= a[j]));
        if !below {
            faces.push(f);
        }
    }
    if faces.first() != Some(&0) {
        return Ok(SimplicialComplex::void(k));
    }
    SimplicialComplex::from_faces(k, faces)
}

/// Top degrees of `H^i_m(S/I)` and the resulting `reg(S/I)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalCohomologyProfile {
    /// `top_degrees[i] = a_i(S/I)`, `None` when `H^i` vanishes.
    pub top_degrees: Vec<Reg>,
    pub reg: Reg,
}

impl LocalCohomologyProfile {
    fn from_tops(top_degrees: Vec<Reg>) -> Self {
        let reg = top_degrees
            .iter()
            .enumerate()
            .filter_map(|(i, a)| a.map(|a| a + i as i64))
            .max();
        LocalCohomologyProfile { top_degrees, reg }
    }
}

fn merge_tops(mut a: Vec<Reg>, b: Vec<Reg>) -> Vec<Reg> {
    for (x, y) in a.iter_mut().zip(b) {
        *x = (*x).max(y);
    }
    a
}

/// Face-mask scanner over compressed cells. Supports up to six variables so
/// that a face set fits in a `u64`.
struct Scanner<'a> {
    ideal: &'a MonomialIdeal,
    n: usize,
    /// Per axis: cell values `e - 1` for the distinct positive exponents `e`.
    values: Vec<Vec<i64>>,
    /// `contains[U]`: upward-closed membership over the axes outside `U`.
    contains: Vec<Vec<bool>>,
    /// `strides[U][j]`, zero for `j ∈ U`.
    strides: Vec<Vec<usize>>,
    field: PrimeField,
}

const MAX_SCAN_VARS: usize = 6;

impl<'a> Scanner<'a> {
    fn new(ideal: &'a MonomialIdeal) -> Self {
        let n = ideal.nvars();
        let mut exps: Vec<Vec<u32>> = vec![Vec::new(); n];
        for g in ideal.gens() {
            for j in 0..n {
                if g[j] > 0 {
                    exps[j].push(g[j]);
                }
            }
        }
        for e in exps.iter_mut() {
            e.sort_unstable();
            e.dedup();
        }
        let values: Vec<Vec<i64>> = exps
            .iter()
            .map(|e| e.iter().map(|&x| x as i64 - 1).collect())
            .collect();
        // Index of the first cell whose value is at least g_j.
        let thresholds: Vec<Vec<usize>> = ideal
            .gens()
            .iter()
            .map(|g| (0..n).map(|j| exps[j].partition_point(|&e| e <= g[j])).collect())
            .collect();
        let mut contains = Vec::with_capacity(1 << n);
        let mut strides = Vec::with_capacity(1 << n);
        for u in 0u32..(1 << n) {
            let mut stride = vec![0usize; n];
            let mut size = 1usize;
            for j in 0..n {
                if u & (1 << j) == 0 {
                    stride[j] = size;
                    size *= values[j].len();
                }
            }
            let mut arr = vec![false; size];
            if size > 0 {
                for t in &thresholds {
                    if (0..n).all(|j| u & (1 << j) != 0 || t[j] < values[j].len()) {
                        let idx: usize = (0..n).map(|j| t[j] * stride[j]).sum();
                        arr[idx] = true;
                    }
                }
                // Prefix-OR along each free axis makes the array upward closed.
                for j in 0..n {
                    if u & (1 << j) != 0 || values[j].len() < 2 {
                        continue;
                    }
                    let s = stride[j];
                    let len = values[j].len();
                    for idx in 0..size {
                        let c = (idx / s) % len;
                        if c > 0 && arr[idx - s] {
                            arr[idx] = true;
                        }
                    }
                }
            }
            contains.push(arr);
            strides.push(stride);
        }
        Scanner {
            ideal,
            n,
            values,
            contains,
            strides,
            field: ideal.ring().field(),
        }
    }

    fn scan(&self) -> Vec<Reg> {
        let n = self.n;
        let mut tops: Vec<Reg> = vec![None; n + 1];
        for g_mask in 0u32..(1 << n) {
            // I_G is the unit ideal when a generator is supported in G.
            let unit = self
                .ideal
                .gens()
                .iter()
                .any(|g| (0..n).all(|j| g[j] == 0 || g_mask & (1 << j) != 0));
            if unit {
                continue;
            }
            tops = merge_tops(tops, self.scan_negative_set(g_mask));
        }
        tops
    }

    fn scan_negative_set(&self, g_mask: u32) -> Vec<Reg> {
        let n = self.n;
        let gsize = g_mask.count_ones() as usize;
        let verts: Vec<usize> = (0..n).filter(|j| g_mask & (1 << j) == 0).collect();
        let k = verts.len();
        let dims: Vec<usize> = verts.iter().map(|&j| self.values[j].len()).collect();
        let cells: usize = dims.iter().product();
        let empty = vec![None; n + 1];
        if cells == 0 {
            return empty;
        }
        // For each face F (subset of verts): the array for U = F ∪ G.
        let face_u: Vec<usize> = (0u32..(1 << k))
            .map(|f| {
                let mut u = g_mask;
                for (v, &j) in verts.iter().enumerate() {
                    if f & (1 << v) != 0 {
                        u |= 1 << j;
                    }
                }
                u as usize
            })
            .collect();
        let field = self.field;
        (0..cells)
            .into_par_iter()
            .with_min_len(4096)
            .fold(
                || (vec![None; n + 1], HashMap::<u64, Vec<usize>>::new()),
                |(mut tops, mut cache), cell| {
                    let mut coords = [0usize; MAX_SCAN_VARS];
                    let mut rest = cell;
                    for (v, &d) in dims.iter().enumerate() {
                        coords[v] = rest % d;
                        rest /= d;
                    }
                    let mut mask = 0u64;
                    for (f, &u) in face_u.iter().enumerate() {
                        let stride = &self.strides[u];
                        let idx: usize = verts
                            .iter()
                            .enumerate()
                            .map(|(v, &j)| coords[v] * stride[j])
                            .sum();
                        if !self.contains[u][idx] {
                            mask |= 1 << f;
                        }
                    }
                    if mask & 1 == 0 {
                        return (tops, cache);
                    }
                    let h = cache.entry(mask).or_insert_with(|| {
                        let faces = (0u32..(1 << k)).filter(|f| mask & (1 << f) != 0).collect();
                        let c = SimplicialComplex::from_faces(k, faces).expect("degree complexes are closed");
                        reduced_homology(&c, field)
                    });
                    let deg: i64 = verts
                        .iter()
                        .enumerate()
                        .map(|(v, &j)| self.values[j][coords[v]])
                        .sum::<i64>()
                        - gsize as i64;
                    for (idx, &dim) in h.iter().enumerate() {
                        // H̃_{idx-1} contributes to H^{idx + |G|}.
                        if dim > 0 {
                            let i = idx + gsize;
                            tops[i] = tops[i].max(Some(deg));
                        }
                    }
                    (tops, cache)
                },
            )
            .map(|(tops, _)| tops)
            .reduce(|| empty.clone(), merge_tops)
    }
}

fn check_proper(i: &MonomialIdeal) -> Result<(), CoreError> {
    if i.is_zero() {
        return Err(CoreError::Invalid("the zero ideal has no regularity here".into()));
    }
    if i.is_unit() {
        return Err(CoreError::Invalid("the unit ideal has no local cohomology".into()));
    }
    Ok(())
}

/// Local cohomology profile of `S/I` by the compressed degree-complex scan.
pub fn takayama_reg(i: &MonomialIdeal) -> Result<LocalCohomologyProfile, CoreError> {
    check_proper(i)?;
    if i.nvars() > MAX_SCAN_VARS {
        return Err(CoreError::Unsupported(format!(
            "the scanner handles at most {MAX_SCAN_VARS} variables"
        )));
    }
    Ok(LocalCohomologyProfile::from_tops(Scanner::new(i).scan()))
}

/// Uncompressed scan over an explicit box: nonnegative coordinates
/// `0 ..= ρ_j - 1 + extra` and the given negative values. Slow; used to
/// cross-check the compressed scanner.
pub fn takayama_box_scan(
    i: &MonomialIdeal,
    extra: u32,
    negative_values: &[i64],
) -> Result<LocalCohomologyProfile, CoreError> {
    check_proper(i)?;
    let n = i.nvars();
    let rho = i.profile().per_variable_max;
    let field = i.ring().field();
    let axis: Vec<Vec<i64>> = (0..n)
        .map(|j| {
            negative_values
                .iter()
                .copied()
                .chain(0..(rho[j] + extra) as i64)
                .collect()
        })
        .collect();
    let mut tops: Vec<Reg> = vec![None; n + 1];
    let mut idx = vec![0usize; n];
    loop {
        let a: Vec<i64> = (0..n).map(|j| axis[j][idx[j]]).collect();
        let neg: Vec<usize> = (0..n).filter(|&j| a[j] < 0).collect();
        let c = degree_complex(i, &a, &neg)?;
        let h = reduced_homology(&c, field);
        let deg: i64 = a.iter().sum();
        for (t, &dim) in h.iter().enumerate() {
            if dim > 0 {
                let k = t + neg.len();
                tops[k] = tops[k].max(Some(deg));
            }
        }
        let mut j = 0;
        loop {
            if j == n {
                return Ok(LocalCohomologyProfile::from_tops(tops));
            }
            idx[j] += 1;
            if idx[j] < axis[j].len() {
                break;
            }
            idx[j] = 0;
            j += 1;
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Engine {
    Auto,
    Takayama,
    Resolution,
}

impl std::str::FromStr for Engine {
    type Err = CoreError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "auto" => Ok(Engine::Auto),
            "takayama" => Ok(Engine::Takayama),
            "resolution" => Ok(Engine::Resolution),
            _ => Err(CoreError::Invalid(format!("unknown engine {s:?}"))),
        }
    }
}

/// `reg(S/I)` from the Betti table of a Schreyer resolution.
pub fn resolution_reg_quotient(i: &MonomialIdeal) -> Result<i64, CoreError> {
    check_proper(i)?;
    let p = GradedModulePresentation::quotient(i.ring().clone(), &i.to_polys());
    let b = graded_betti(&p)?;
    Ok(regularity_from_betti(&b, Axis::Single).expect("S/I is nonzero"))
}

/// `reg I` as a module. The unit ideal is `S` itself, of regularity 0.
pub fn reg_monomial_ideal(i: &MonomialIdeal, engine: Engine) -> Result<i64, CoreError> {
    if i.is_zero() {
        return Err(CoreError::Invalid("the zero ideal has regularity minus infinity".into()));
    }
    if i.is_unit() {
        return Ok(0);
    }
    let quotient = match engine {
        Engine::Auto | Engine::Takayama if i.nvars() <= MAX_SCAN_VARS => {
            takayama_reg(i)?.reg.expect("S/I is nonzero")
        }
        Engine::Takayama => {
            return Err(CoreError::Unsupported(format!(
                "the scanner handles at most {MAX_SCAN_VARS} variables"
            )))
        }
        Engine::Auto | Engine::Resolution => resolution_reg_quotient(i)?,
    };
    Ok(quotient + 1)
}

/// Runs both engines and fails loudly if they disagree.
pub fn cross_validate(i: &MonomialIdeal) -> Result<i64, CoreError> {
    let scanner = reg_monomial_ideal(i, Engine::Takayama)?;
    let resolution = reg_monomial_ideal(i, Engine::Resolution)?;
    if scanner != resolution {
        return Err(CoreError::EngineMismatch {
            ideal: i.to_string(),
            scanner,
            resolution,
        });
    }
    Ok(scanner)
}

#[cfg(test)]
mod tests {
    use super::*;
    use regulus_gb::{Grading, Poly};

    fn ring(n: usize) -> Ring {
        Ring::standard(&["x", "y", "z", "w"][..n], 32003).unwrap()
    }

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::new(&ring(n), gens.iter().map(|g| g.to_vec()).collect()).unwrap()
    }

    fn quotient_betti(i: &MonomialIdeal) -> BettiTable {
        graded_betti(&GradedModulePresentation::quotient(i.ring().clone(), &i.to_polys())).unwrap()
    }

    #[test]
    fn koszul_betti_table() {
        let b = quotient_betti(&ideal(2, &[&[2, 0], &[0, 3]]));
        let expect: BTreeMap<(usize, Deg), u64> = [
            ((0, Deg(0, 0)), 1),
            ((1, Deg(2, 0)), 1),
            ((1, Deg(3, 0)), 1),
            ((2, Deg(5, 0)), 1),
        ]
        .into_iter()
        .collect();
        assert_eq!(b.entries, expect);
        // As an ideal, shift by one homological step: max(2, 3, 5 - 1).
        assert_eq!(regularity_from_betti(&b, Axis::Single), Some(3));
        assert_eq!(reg_monomial_ideal(&ideal(2, &[&[2, 0], &[0, 3]]), Engine::Resolution).unwrap(), 4);
    }

    #[test]
    fn slice_module_betti_table() {
        let t = Ring::indexed("y", 3, 32003).unwrap();
        let rels = vec![
            ModElem::from_polys(&t, &[Poly::parse(&t, "y1").unwrap(), Poly::parse(&t, "-y0").unwrap()]),
            ModElem::from_polys(&t, &[Poly::parse(&t, "y2").unwrap(), Poly::parse(&t, "-y1").unwrap()]),
        ];
        let p = GradedModulePresentation::new(t, FreeModule::trivial(2), rels);
        let b = graded_betti(&p).unwrap();
        // The relation matrix has determinant y0*y2 - y1^2, so it is injective.
        let expect: BTreeMap<(usize, Deg), u64> =
            [((0, Deg(0, 0)), 2), ((1, Deg(1, 0)), 2)].into_iter().collect();
        assert_eq!(b.entries, expect);
        // Oracle: N_1 is the odd part of k[x, y], of dimension 2j + 2 in degree j.
        let binom2 = |a: i64| if a < 2 { 0 } else { a * (a - 1) / 2 };
        for j in 0..10i64 {
            let mut h = 0i64;
            for ((i, d), v) in &b.entries {
                let sign = if i % 2 == 0 { 1 } else { -1 };
                h += sign * *v as i64 * binom2(j - d.0 as i64 + 2);
            }
            assert_eq!(h, 2 * j + 2);
        }
        assert_eq!(regularity_from_betti(&b, Axis::Single), Some(0));
    }

    #[test]
    fn free_and_zero_modules() {
        let r = ring(2);
        let p = GradedModulePresentation::new(r.clone(), FreeModule::trivial(1), vec![]);
        let b = graded_betti(&p).unwrap();
        assert_eq!(b.entries.len(), 1);
        assert_eq!(b.get(0, Deg(0, 0)), 1);
        let unit = GradedModulePresentation::quotient(r, &[Poly::parse(&ring(2), "1").unwrap()]);
        let z = graded_betti(&unit).unwrap();
        assert!(z.is_zero());
        assert_eq!(regularity_from_betti(&z, Axis::Single), None);
    }

    #[test]
    fn nonminimal_resolution_is_minimalized() {
        // The Schreyer resolution of (x^2, xy, y^2) has the Hilbert–Burch shape.
        let b = quotient_betti(&ideal(2, &[&[2, 0], &[1, 1], &[0, 2]]));
        assert_eq!(b.total(1), 3);
        assert_eq!(b.get(2, Deg(3, 0)), 2);
        // (x, y, z)^2 has a linear resolution with Betti numbers 1, 6, 8, 3.
        let m2 = MonomialIdeal::max_power(&ring(3), 2);
        let b = quotient_betti(&m2);
        assert_eq!((0..4).map(|i| b.total(i)).collect::<Vec<_>>(), vec![1, 6, 8, 3]);
        assert_eq!(regularity_from_betti(&b, Axis::Single), Some(1));
    }

    #[test]
    fn double_grading_axis() {
        let r = Ring::new(
            vec!["x".into(), "y".into(), "y0".into(), "y1".into()],
            32003,
            Grading::Double(vec![(1, 0), (1, 0), (1, 1), (1, 1)]),
        )
        .unwrap();
        let k = Poly::parse(&r, "x*y1 - y*y0").unwrap();
        let b = graded_betti(&GradedModulePresentation::quotient(r, &[k])).unwrap();
        assert_eq!(b.get(1, Deg(2, 1)), 1);
        assert_eq!(regularity_from_betti(&b, Axis::SecondOfPair), Some(0));
        assert_eq!(regularity_from_betti(&b, Axis::Single), Some(1));
    }

    #[test]
    fn degree_complex_examples() {
        let xy = ideal(2, &[&[1, 1]]);
        let c = degree_complex(&xy, &[0, 0], &[]).unwrap();
        assert_eq!(c.faces(), &[0, 0b01, 0b10]);
        let x2 = ideal(1, &[&[2]]);
        let c = degree_complex(&x2, &[1], &[]).unwrap();
        assert_eq!(c, SimplicialComplex::irrelevant(1));
        assert_eq!(reduced_homology(&c, PrimeField::new(32003).unwrap()), vec![1, 0]);
        assert!(degree_complex(&x2, &[-1], &[0]).unwrap().is_void());
    }

    #[test]
    fn scanner_examples() {
        let x2 = ideal(2, &[&[2, 0]]);
        assert_eq!(takayama_reg(&x2).unwrap().reg, Some(1));
        assert_eq!(reg_monomial_ideal(&x2, Engine::Takayama).unwrap(), 2);
        for d in 1..5 {
            let m = MonomialIdeal::max_power(&ring(3), d);
            assert_eq!(reg_monomial_ideal(&m, Engine::Takayama).unwrap(), d as i64);
        }
        let ci = ideal(3, &[&[4, 0, 0], &[0, 4, 0], &[0, 0, 4]]);
        let p = takayama_reg(&ci).unwrap();
        assert_eq!(p.top_degrees, vec![Some(9), None, None, None]);
        assert_eq!(cross_validate(&ci).unwrap(), 10);
        let e26 = ci.sum(&MonomialIdeal::max_power(&ring(3), 5)).unwrap();
        assert_eq!(reg_monomial_ideal(&e26, Engine::Takayama).unwrap(), 5);
        assert!(takayama_reg(&MonomialIdeal::unit(&ring(2))).is_err());
        assert!(takayama_reg(&MonomialIdeal::zero(&ring(2))).is_err());
        assert_eq!(reg_monomial_ideal(&MonomialIdeal::unit(&ring(2)), Engine::Auto).unwrap(), 0);
    }

    #[test]
    fn example_one_eight_square() {
        let i = ideal(2, &[&[20, 0], &[3, 17], &[12, 8], &[0, 20]]);
        assert_eq!(reg_monomial_ideal(&i.power(2).unwrap(), Engine::Auto).unwrap(), 47);
    }

    #[test]
    fn scanner_matches_resolution_on_non_primary_ideals() {
        for gens in [
            vec![vec![1, 1, 0], vec![0, 1, 1]],
            vec![vec![2, 1, 0], vec![0, 3, 1], vec![1, 0, 2]],
            vec![vec![1, 1, 1]],
            vec![vec![2, 0, 0], vec![1, 1, 0]],
        ] {
            let i = MonomialIdeal::new(&ring(3), gens).unwrap();
            cross_validate(&i).unwrap();
        }
    }

    #[test]
    fn box_scan_agrees_with_compressed_scan() {
        for i in [
            ideal(2, &[&[3, 0], &[1, 2], &[0, 4]]),
            ideal(3, &[&[1, 1, 0], &[0, 2, 1]]),
            ideal(3, &[&[2, 0, 0], &[0, 2, 0], &[1, 1, 1]]),
        ] {
            let fast = takayama_reg(&i).unwrap();
            assert_eq!(takayama_box_scan(&i, 0, &[-1]).unwrap(), fast);
            assert_eq!(takayama_box_scan(&i, 2, &[-1]).unwrap(), fast);
            assert_eq!(takayama_box_scan(&i, 0, &[-2, -1]).unwrap(), fast);
        }
    }
}
