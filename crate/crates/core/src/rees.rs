//! The Rees-algebra side: fiber rings `A = k[I_d t]`, slice modules
//! `N_i = A · S_i`, the bigraded presentation of `R(I)`, `reg H^1` of a slice
//! by graded local duality, and positive depth of `gr_I(S)`.
//!
//! The t-degree of `N_i` is carried by the standard grading of
//! `T = k[y_0..y_r]`: a variable image `g_j` of degree `d` has T-degree 1.

use rand::{Rng as _, SeedableRng};
use rand_chacha::ChaCha8Rng;
use regulus_gb::{
    colon_ideal, eliminate, hilbert_numerator, module_map_kernel, schreyer_resolution,
    syzygies_with_degrees, Deg, FreeModule, Grading, GroebnerBasis, HilbertNumerator, ModElem,
    ModuleOrder, Mono, MonomialOrder, Poly, Ring,
};
use serde::{Deserialize, Serialize};

use crate::monomial::{degree, monomials_of_degree, ExpVec, MonomialIdeal};
use crate::regularity::{graded_betti, regularity_from_betti, Axis, BettiTable, GradedModulePresentation};
use crate::{CoreError, Reg};

/// `prefix0, prefix1, ...`, padded with underscores until none of the names
/// is already taken.
fn fresh_names(prefix: &str, count: usize, taken: &[String]) -> Vec<String> {
    let mut p = prefix.to_string();
    loop {
        let names: Vec<String> = (0..count).map(|j| format!("{p}{j}")).collect();
        if names.iter().all(|n| !taken.contains(n)) {
            return names;
        }
        p.push('_');
    }
}

fn equigenerated_degree(i: &MonomialIdeal) -> Result<u32, CoreError> {
    let prof = i.profile();
    if !prof.equigenerated || i.is_unit() {
        return Err(CoreError::Hypothesis(format!(
            "{i} is not generated in a single positive degree"
        )));
    }
    Ok(prof.min_gen_degree as u32)
}

fn mono_poly(e: &[u32]) -> Poly {
    Poly::monomial(Mono::from_exps(e).expect("exponent in range"), 1)
}

/// `A = k[I_d t] ≅ T / toric_kernel`.
#[derive(Clone, Debug)]
pub struct FiberRing {
    pub ideal: MonomialIdeal,
    pub degree: u32,
    pub t_ring: Ring,
    pub toric_kernel: Vec<Poly>,
}

pub fn fiber_ring(i: &MonomialIdeal) -> Result<FiberRing, CoreError> {
    let d = equigenerated_degree(i)?;
    let s = i.ring();
    let t_ring = Ring::standard(&fresh_names("y", i.len(), &[]), s.char())?;
    let images = i.to_polys();
    let k = module_map_kernel(s, &[Poly::constant(s, 1)], &t_ring, &images)?;
    let toric_kernel = k.gens.iter().map(|g| g.component(0)).collect();
    Ok(FiberRing {
        ideal: i.clone(),
        degree: d,
        t_ring,
        toric_kernel,
    })
}

impl FiberRing {
    pub fn presentation(&self) -> GradedModulePresentation {
        GradedModulePresentation::quotient(self.t_ring.clone(), &self.toric_kernel)
    }

    /// `reg k[I_d]` as a `T`-module.
    pub fn regularity(&self) -> Result<Reg, CoreError> {
        Ok(regularity_from_betti(&graded_betti(&self.presentation())?, Axis::Single))
    }

    /// Every kernel element vanishes under `y_j ↦ g_j`.
    pub fn verify_witness(&self) -> bool {
        let s = self.ideal.ring();
        let images = self.ideal.to_polys();
        self.toric_kernel
            .iter()
            .all(|p| p.substitute(&self.t_ring, &images, s).is_zero())
    }
}

/// `N_i(I, S) = A · S_i`, presented over `T` with generators in degree 0.
#[derive(Clone, Debug)]
pub struct SliceModule {
    pub fiber: FiberRing,
    pub i: u32,
    pub generators: Vec<ExpVec>,
    pub presentation: GradedModulePresentation,
}

pub fn slice_module(f: &FiberRing, i: u32) -> Result<SliceModule, CoreError> {
    let s = f.ideal.ring();
    let generators = monomials_of_degree(s.nvars(), i);
    let targets: Vec<Poly> = generators.iter().map(|e| mono_poly(e)).collect();
    let k = module_map_kernel(s, &targets, &f.t_ring, &f.ideal.to_polys())?;
    Ok(SliceModule {
        fiber: f.clone(),
        i,
        generators,
        presentation: GradedModulePresentation::new(f.t_ring.clone(), k.module, k.gens),
    })
}

impl SliceModule {
    /// Substituting the generators for the `y`'s maps every relation to zero.
    pub fn verify_witness(&self) -> bool {
        let s = self.fiber.ideal.ring();
        let t = &self.fiber.t_ring;
        let images = self.fiber.ideal.to_polys();
        self.presentation.relations.iter().all(|r| {
            let mut acc = Poly::zero();
            for (k, e) in self.generators.iter().enumerate() {
                let c = r.component(k as u32);
                if !c.is_zero() {
                    acc = acc.add(&c.substitute(t, &images, s).mul(&mono_poly(e), s), s);
                }
            }
            acc.is_zero()
        })
    }
}

pub fn reg_slice(s: &SliceModule) -> Result<Reg, CoreError> {
    Ok(regularity_from_betti(&graded_betti(&s.presentation)?, Axis::Single))
}

/// `R(I) = S[y] / rees_kernel`, bigraded by `deg x = (1, 0)`, `deg y = (d, 1)`.
#[derive(Clone, Debug)]
pub struct ReesPresentation {
    pub ideal: MonomialIdeal,
    pub degree: u32,
    pub big_ring: Ring,
    pub rees_kernel: Vec<Poly>,
}

/// Kernel of `S[y] → S[t]`, `y_j ↦ g_j t`, inside a ring built from the
/// variable names of `S`, fresh `y` names and the given weights.
fn rees_kernel_in(
    i: &MonomialIdeal,
    grading_for: impl Fn(&[Deg]) -> Grading,
) -> Result<(Ring, Vec<Poly>), CoreError> {
    let s = i.ring();
    let n = s.nvars();
    let r = i.len();
    let snames = s.names().to_vec();
    let ynames = fresh_names("y", r, &snames);
    let mut taken = snames.clone();
    taken.extend(ynames.iter().cloned());
    let tname = fresh_names("t", 1, &taken).remove(0);

    let gdeg: Vec<i32> = i.gens().iter().map(|g| degree(g) as i32).collect();
    let mut big_degs: Vec<Deg> = vec![Deg(1, 0); n];
    big_degs.extend(gdeg.iter().map(|&d| Deg(d, 1)));
    let mut aux_degs = vec![Deg(0, 1)];
    aux_degs.extend_from_slice(&big_degs);

    let mut aux_names = vec![tname];
    aux_names.extend(snames.iter().cloned());
    aux_names.extend(ynames.iter().cloned());
    let aux = Ring::new(aux_names, s.char(), grading_for(&aux_degs))?;
    let mut big_names = snames;
    big_names.extend(ynames);
    let big = Ring::new(big_names, s.char(), grading_for(&big_degs))?;

    let total = 1 + n + r;
    let field = aux.field();
    let gens: Vec<Poly> = i
        .gens()
        .iter()
        .enumerate()
        .map(|(j, g)| {
            let mut e = vec![1u32];
            e.extend_from_slice(g);
            e.resize(total, 0);
            Poly::from_terms(
                &aux,
                [
                    (Mono::var(total, 1 + n + j, 1), 1),
                    (Mono::from_exps(&e).expect("exponent in range"), field.neg(1)),
                ],
            )
        })
        .collect();
    let kernel = eliminate(&aux, &gens, n + r)?
        .into_iter()
        .map(|p| Poly::from_terms(&big, p.terms().iter().map(|(m, c)| (m.project(1..total), *c))))
        .collect();
    Ok((big, kernel))
}

pub fn rees_presentation(i: &MonomialIdeal) -> Result<ReesPresentation, CoreError> {
    let d = equigenerated_degree(i)?;
    let (big_ring, rees_kernel) = rees_kernel_in(i, |degs| {
        Grading::Double(degs.iter().map(|d| (d.0 as u32, d.1 as u32)).collect())
    })?;
    Ok(ReesPresentation {
        ideal: i.clone(),
        degree: d,
        big_ring,
        rees_kernel,
    })
}

impl ReesPresentation {
    pub fn betti(&self) -> Result<BettiTable, CoreError> {
        graded_betti(&GradedModulePresentation::quotient(
            self.big_ring.clone(),
            &self.rees_kernel,
        ))
    }

    /// Substituting `y_j ↦ g_j` (at `t = 1`) annihilates the kernel.
    pub fn verify_witness(&self) -> bool {
        let s = self.ideal.ring();
        let n = s.nvars();
        let mut images: Vec<Poly> = (0..n).map(|j| Poly::monomial(Mono::var(n, j, 1), 1)).collect();
        images.extend(self.ideal.to_polys());
        self.rees_kernel
            .iter()
            .all(|p| p.substitute(&self.big_ring, &images, s).is_zero())
    }
}

/// `reg_y R(I, S)`: `max{b - i}` over bigraded Betti entries `(i, (a, b))`.
pub fn y_regularity(r: &ReesPresentation) -> Result<Reg, CoreError> {
    Ok(regularity_from_betti(&r.betti()?, Axis::SecondOfPair))
}

/// Largest `x`-degree `a - d b` of a Betti entry `(i, (a, b))` of `R(I)`.
pub fn x_degree_window(b: &BettiTable, d: u32) -> Option<i64> {
    b.entries
        .keys()
        .map(|(_, deg)| deg.0 as i64 - d as i64 * deg.1 as i64)
        .max()
}

/// `reg H^1_n(N)` by local duality over `T` of dimension `r + 1`:
/// `H^1_n(N)_j` is dual to `Ext^r_T(N, T(-r-1))_{-j}`.
///
/// `Ext^r = Z / B` with `Z` the kernel of `F_r^* → F_{r+1}^*` (syzygies of the
/// rows of `d_{r+1}`) and `B` the image of `F_{r-1}^*`. The least degree of a
/// generator of `Z` outside `B` is the least degree of `Ext^r`.
pub fn reg_h1(s: &SliceModule) -> Result<Reg, CoreError> {
    let p = &s.presentation;
    let t = &p.ring;
    let nt = t.nvars();
    let r = nt - 1;
    let dd = nt as i32;
    let res = schreyer_resolution(t, &p.ambient, &p.relations, nt)?;
    if r >= res.modules.len() {
        return Ok(None);
    }
    let dual = |m: &FreeModule| FreeModule::new(m.twists.iter().map(|&a| Deg(dd - a.0, 0)).collect());
    let fr = &res.modules[r];
    let fr_dual = dual(fr);
    let z: Vec<ModElem> = if r + 1 < res.modules.len() {
        let next = &res.modules[r + 1];
        let d_next = &res.maps[r];
        let rows: Vec<ModElem> = (0..fr.rank())
            .map(|c| {
                let polys: Vec<Poly> = d_next.iter().map(|img| img.component(c as u32)).collect();
                ModElem::from_polys(t, &polys)
            })
            .collect();
        let degs: Vec<Deg> = fr_dual.twists.clone();
        syzygies_with_degrees(t, &dual(next), &rows, &degs)?.1
    } else {
        (0..fr.rank()).map(|c| ModElem::basis(t, c as u32)).collect()
    };
    let b: Vec<ModElem> = if r == 0 {
        Vec::new()
    } else {
        let prev = &res.modules[r - 1];
        let d_r = &res.maps[r - 1];
        (0..prev.rank())
            .map(|a| {
                let polys: Vec<Poly> = d_r.iter().map(|img| img.component(a as u32)).collect();
                ModElem::from_polys(t, &polys)
            })
            .filter(|e| !e.is_zero())
            .collect()
    };
    let order = ModuleOrder::top(MonomialOrder::GRevLex, fr.rank());
    let gb = GroebnerBasis::compute_graded(t, &order, &fr_dual, &b)?;
    let mut least: Option<i64> = None;
    for e in &z {
        if !gb.contains(e)? {
            let deg = e
                .homogeneous_degree(t, &fr_dual)
                .ok_or_else(|| CoreError::Invalid("inhomogeneous Ext cycle".into()))?;
            least = Some(least.map_or(deg.0 as i64, |l| l.min(deg.0 as i64)));
        }
    }
    Ok(least.map(|l| -l))
}

/// How positive depth of `gr_I(S)` was decided.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum DepthWitness {
    /// A homogeneous form whose Hilbert series drops by exactly `1 - z^δ`.
    NonZeroDivisor,
    /// `Q : M = Q` for the presentation ideal `Q` and the maximal ideal `M`.
    SocleFree,
    /// `Q : M ≠ Q`.
    Socle,
    /// `I^{k+1} : I ≠ I^k`, so `I^k` is not Ratliff–Rush closed.
    RatliffRush { power: u32 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GrDepthReport {
    pub positive: bool,
    pub witness: DepthWitness,
}

fn ideal_gb(ring: &Ring, polys: &[Poly]) -> Result<GroebnerBasis, CoreError> {
    let order = ModuleOrder::top(MonomialOrder::GRevLex, 1);
    let elems: Vec<ModElem> = polys
        .iter()
        .filter(|p| !p.is_zero())
        .map(|p| ModElem::from_poly(0, p))
        .collect();
    Ok(GroebnerBasis::compute(ring, &order, &elems)?)
}

fn numerator(ring: &Ring, gb: &GroebnerBasis) -> HilbertNumerator {
    let leads: Vec<Mono> = gb.leads().into_iter().map(|(_, m)| m).collect();
    hilbert_numerator(&leads, ring.order_weights())
}

/// Least `k <= up_to` with `I^{k+1} : I ≠ I^k`. Any such `k` forces
/// `depth gr_I(S) = 0`, since positive depth means every power is
/// Ratliff–Rush closed.
pub fn ratliff_rush_failure(i: &MonomialIdeal, up_to: u32) -> Result<Option<u32>, CoreError> {
    let mut pk = i.clone();
    for k in 1..=up_to {
        let next = pk.product(i)?;
        if next.colon_ideal(i)? != pk {
            return Ok(Some(k));
        }
        pk = next;
    }
    Ok(None)
}

const RATLIFF_RUSH_POWERS: u32 = 3;

/// Positive depth of `gr_I(S)` with respect to its maximal homogeneous ideal.
///
/// A Ratliff–Rush failure among the first powers decides `false` cheaply;
/// otherwise the presentation is examined.
pub fn gr_positive_depth(i: &MonomialIdeal) -> Result<GrDepthReport, CoreError> {
    if i.is_zero() || i.is_unit() {
        return Err(CoreError::Invalid("gr is defined here for proper nonzero ideals".into()));
    }
    if let Some(power) = ratliff_rush_failure(i, RATLIFF_RUSH_POWERS)? {
        return Ok(GrDepthReport {
            positive: false,
            witness: DepthWitness::RatliffRush { power },
        });
    }
    gr_depth_from_presentation(i)
}

/// Works with `gr_I(S) = S[y] / (rees_kernel + I S[y])`, where `y_j` has
/// weight `deg g_j + 1` so that mixed generator degrees are allowed. Either
/// a homogeneous non-zerodivisor is found, or `Q : M` is compared with `Q`.
pub fn gr_depth_from_presentation(i: &MonomialIdeal) -> Result<GrDepthReport, CoreError> {
    if i.is_zero() || i.is_unit() {
        return Err(CoreError::Invalid("gr is defined here for proper nonzero ideals".into()));
    }
    let (ring, kernel) = rees_kernel_in(i, |degs| {
        Grading::Single(degs.iter().map(|d| (d.0 + d.1) as u32).collect())
    })?;
    let n = i.nvars();
    let nv = ring.nvars();
    let mut q = kernel;
    for g in i.gens() {
        let mut e = g.clone();
        e.resize(nv, 0);
        q.push(mono_poly(&e));
    }
    let gb = ideal_gb(&ring, &q)?;
    let k = numerator(&ring, &gb);

    // Candidate forms: a random linear form in x, and a random combination
    // of the y's in each weight class.
    let mut rng = ChaCha8Rng::seed_from_u64(0x9e37_79b9);
    let p = ring.char();
    let mut classes: Vec<(u32, Vec<usize>)> = Vec::new();
    classes.push((1, (0..n).collect()));
    for j in n..nv {
        let w = ring.order_weights()[j];
        match classes.iter_mut().skip(1).find(|c| c.0 == w) {
            Some(c) => c.1.push(j),
            None => classes.push((w, vec![j])),
        }
    }
    for (w, vars) in &classes {
        let form = Poly::from_terms(
            &ring,
            vars.iter()
                .map(|&j| (Mono::var(nv, j, 1), rng.gen_range(1..p))),
        );
        let mut gens = q.clone();
        gens.push(form);
        let k2 = numerator(&ring, &ideal_gb(&ring, &gens)?);
        if k2 == k.mul(&HilbertNumerator::one_minus(*w as i64)) {
            return Ok(GrDepthReport {
                positive: true,
                witness: DepthWitness::NonZeroDivisor,
            });
        }
    }

    let vars: Vec<Poly> = (0..nv).map(|j| Poly::monomial(Mono::var(nv, j, 1), 1)).collect();
    let gb_elems: Vec<Poly> = gb.elements().iter().map(|e| e.component(0)).collect();
    let colon = colon_ideal(&ring, &gb_elems, &vars)?;
    let mut socle_free = true;
    for f in &colon {
        if !gb.contains(&ModElem::from_poly(0, f))? {
            socle_free = false;
            break;
        }
    }
    Ok(GrDepthReport {
        positive: socle_free,
        witness: if socle_free {
            DepthWitness::SocleFree
        } else {
            DepthWitness::Socle
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(n: usize) -> Ring {
        Ring::standard(&["x", "y", "z"][..n], 32003).unwrap()
    }

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::new(&ring(n), gens.iter().map(|g| g.to_vec()).collect()).unwrap()
    }

    #[test]
    fn fiber_ring_examples() {
        let m = ideal(2, &[&[1, 0], &[0, 1]]);
        assert!(fiber_ring(&m).unwrap().toric_kernel.is_empty());
        let m2 = MonomialIdeal::max_power(&ring(2), 2);
        let f = fiber_ring(&m2).unwrap();
        assert_eq!(f.toric_kernel.len(), 1);
        let t = &f.t_ring;
        let q = Poly::parse(t, "y0*y2 - y1^2").unwrap();
        let k = &f.toric_kernel[0];
        assert!(*k == q || *k == q.neg(t));
        assert!(f.verify_witness());
        assert!(fiber_ring(&ideal(2, &[&[2, 0], &[0, 2]])).unwrap().toric_kernel.is_empty());
        assert!(fiber_ring(&ideal(2, &[&[2, 0], &[0, 3]])).is_err());
    }

    #[test]
    fn slice_examples() {
        let m2 = MonomialIdeal::max_power(&ring(2), 2);
        let f = fiber_ring(&m2).unwrap();
        let n0 = slice_module(&f, 0).unwrap();
        assert_eq!(n0.presentation.ambient.rank(), 1);
        assert_eq!(n0.presentation.relations.len(), 1);
        assert_eq!(reg_slice(&n0).unwrap(), Some(1));
        let n1 = slice_module(&f, 1).unwrap();
        assert_eq!(n1.presentation.relations.len(), 2);
        assert!(n1.verify_witness());
        assert_eq!(reg_slice(&n1).unwrap(), Some(0));
        let ci = fiber_ring(&ideal(2, &[&[2, 0], &[0, 2]])).unwrap();
        let s1 = slice_module(&ci, 1).unwrap();
        assert_eq!(s1.presentation.ambient.rank(), 2);
        assert!(s1.presentation.relations.is_empty());
    }

    #[test]
    fn rees_examples() {
        let m = ideal(2, &[&[1, 0], &[0, 1]]);
        let r = rees_presentation(&m).unwrap();
        assert_eq!(r.rees_kernel.len(), 1);
        let k = Poly::parse(&r.big_ring, "x*y1 - y*y0").unwrap();
        assert!(r.rees_kernel[0] == k || r.rees_kernel[0] == k.neg(&r.big_ring));
        assert_eq!(y_regularity(&r).unwrap(), Some(0));
        let ci = rees_presentation(&ideal(2, &[&[2, 0], &[0, 2]])).unwrap();
        assert_eq!(ci.rees_kernel.len(), 1);
        assert!(ci.verify_witness());
        let k = Poly::parse(&ci.big_ring, "x^2*y1 - y^2*y0").unwrap();
        assert!(ci.rees_kernel[0] == k || ci.rees_kernel[0] == k.neg(&ci.big_ring));
        let principal = rees_presentation(&ideal(2, &[&[1, 1]])).unwrap();
        assert!(principal.rees_kernel.is_empty());
    }

    #[test]
    fn reg_h1_of_cohen_macaulay_fiber_vanishes() {
        let f = fiber_ring(&MonomialIdeal::max_power(&ring(2), 2)).unwrap();
        assert_eq!(reg_h1(&slice_module(&f, 0).unwrap()).unwrap(), None);
    }

    #[test]
    fn reg_h1_of_veronese_truncations() {
        // N_i(m^d) ≅ (S(i)_{>=0})^{(d)}; for n = 2 its H^1 is the Veronese of
        // S(i)_{<0}, nonzero exactly in t-degree -1 once i >= d.
        for d in 2..=3u32 {
            let f = fiber_ring(&MonomialIdeal::max_power(&ring(2), d)).unwrap();
            for i in 0..=d + 1 {
                let expect = if i >= d { Some(-1) } else { None };
                assert_eq!(reg_h1(&slice_module(&f, i).unwrap()).unwrap(), expect, "d={d} i={i}");
            }
        }
        // N_0 of (x^2, y^2) is k[y0, y1], free: no H^1.
        let g = fiber_ring(&ideal(2, &[&[2, 0], &[0, 2]])).unwrap();
        assert_eq!(reg_h1(&slice_module(&g, 0).unwrap()).unwrap(), None);
    }

    #[test]
    fn gr_depth_examples() {
        assert!(gr_positive_depth(&ideal(2, &[&[1, 0]])).unwrap().positive);
        assert!(gr_positive_depth(&MonomialIdeal::max_power(&ring(2), 1)).unwrap().positive);
        // x^2 y^2 lies in I^2 : I but not in I.
        let bad = ideal(2, &[&[4, 0], &[3, 1], &[1, 3], &[0, 4]]);
        let r = gr_positive_depth(&bad).unwrap();
        assert!(!r.positive);
        assert_eq!(r.witness, DepthWitness::RatliffRush { power: 1 });
        let r = gr_depth_from_presentation(&bad).unwrap();
        assert_eq!(r.witness, DepthWitness::Socle);
        let good = ideal(2, &[&[3, 0], &[1, 2], &[0, 3]]);
        let r = gr_positive_depth(&good).unwrap();
        assert_eq!(r.positive, ratliff_rush_failure(&good, 4).unwrap().is_none());
    }
}
