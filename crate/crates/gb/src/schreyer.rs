//! Free resolutions by iterated Schreyer syzygies.
//!
//! Level one is a Gröbner basis `g_1..g_t` of the relations. Each level's
//! syzygies come from S-pairs of the previous level reduced to zero with
//! quotient tracking; under the induced Schreyer order they again form a
//! Gröbner basis, so no further Buchberger run is needed. Elements of a level
//! are kept sorted by (lead component, lead monomial lex-descending), which
//! makes the variables absent from lead terms grow by one per level and
//! bounds the length by the number of variables.

use crate::groebner::GroebnerBasis;
use crate::kernel::{reduce_tracked, Ctx, Reducers, Term, Vector};
use crate::mono::Mono;
use crate::order::{ModuleOrder, MonomialOrder};
use crate::poly::{FreeModule, ModElem, Poly};
use crate::ring::Ring;
use crate::GbError;

/// `F_0 <- F_1 <- ... <- F_L`, where `maps[k]` lists the images of the basis
/// of `F_{k+1}` in `F_k`.
#[derive(Clone, Debug)]
pub struct SchreyerResolution {
    pub ring: Ring,
    pub modules: Vec<FreeModule>,
    pub maps: Vec<Vec<ModElem>>,
}

impl SchreyerResolution {
    pub fn length(&self) -> usize {
        self.maps.len()
    }

    /// Checks that consecutive differentials compose to zero.
    pub fn is_complex(&self) -> bool {
        for k in 1..self.maps.len() {
            let prev = &self.maps[k - 1];
            for z in &self.maps[k] {
                let coeffs = z.to_polys(prev.len());
                if !ModElem::combination(&self.ring, &coeffs, prev).is_zero() {
                    return false;
                }
            }
        }
        true
    }
}

fn level_sort(v: &mut [Vector]) {
    v.sort_by(|a, b| a[0].comp.cmp(&b[0].comp).then_with(|| b[0].mono.cmp(&a[0].mono)));
}

/// Minimal elements of a set of monomials, keeping the first occurrence.
fn minimal_with_index(mut cands: Vec<(Mono, usize)>) -> Vec<(Mono, usize)> {
    cands.sort_by(|a, b| a.0.total_degree().cmp(&b.0.total_degree()).then(a.1.cmp(&b.1)));
    let mut out: Vec<(Mono, usize)> = Vec::with_capacity(cands.len());
    for (m, b) in cands {
        if !out.iter().any(|(h, _)| h.divides(&m)) {
            out.push((m, b));
        }
    }
    out
}

/// Resolves `coker(relations -> ambient)`.
pub fn schreyer_resolution(
    ring: &Ring,
    ambient: &FreeModule,
    relations: &[ModElem],
    max_length: usize,
) -> Result<SchreyerResolution, GbError> {
    let mut modules = vec![ambient.clone()];
    let mut maps: Vec<Vec<ModElem>> = Vec::new();
    for r in relations {
        if !r.is_zero() && r.homogeneous_degree(ring, ambient).is_none() {
            return Err(GbError::NotHomogeneous(r.display(ring)));
        }
    }
    let rels: Vec<ModElem> = relations.iter().filter(|r| !r.is_zero()).cloned().collect();
    if rels.is_empty() {
        return Ok(SchreyerResolution {
            ring: ring.clone(),
            modules,
            maps,
        });
    }

    let mut order = ModuleOrder::top(MonomialOrder::GRevLex, ambient.rank());
    let gb = GroebnerBasis::compute_graded(ring, &order, ambient, &rels)?;
    let ctx = Ctx::new(ring, &order);
    let mut level: Vec<Vector> = gb.elements().iter().map(|e| ctx.import(e)).collect();
    level_sort(&mut level);
    let mut shifts: Vec<Mono> = vec![Mono::one(ring.nvars()); ambient.rank()];
    let mut tiebreak: Vec<u32> = (0..ambient.rank() as u32).collect();

    loop {
        let ctx = Ctx::new(ring, &order);
        let prev = modules.last().unwrap();
        let twists = level
            .iter()
            .map(|v| ctx.export(v).homogeneous_degree(ring, prev).expect("homogeneous"))
            .collect();
        modules.push(FreeModule::new(twists));
        maps.push(level.iter().map(|v| ctx.export(v)).collect());
        if maps.len() > max_length {
            return Err(GbError::ResolutionTooLong(max_length));
        }

        // Schreyer order on the new free module.
        let t = level.len();
        let new_shifts: Vec<Mono> = level
            .iter()
            .map(|v| v[0].mono.mul(&shifts[v[0].comp as usize]))
            .collect();
        let mut keys: Vec<(u32, usize)> = level
            .iter()
            .enumerate()
            .map(|(a, v)| (tiebreak[v[0].comp as usize], a))
            .collect();
        keys.sort_unstable();
        let mut new_tb = vec![0u32; t];
        for (rank, &(_, a)) in keys.iter().enumerate() {
            new_tb[a] = rank as u32;
        }
        let new_order = ModuleOrder::schreyer(MonomialOrder::GRevLex, new_shifts.clone(), new_tb.clone());

        let mut red = Reducers::default();
        for v in &level {
            red.push(v.clone());
        }
        let field = ring.field();
        let new_ctx = Ctx::new(ring, &new_order);
        let mut next: Vec<Vector> = Vec::new();
        for a in 0..t {
            let (ca, ma) = (level[a][0].comp, &level[a][0].mono);
            let cands: Vec<(Mono, usize)> = (a + 1..t)
                .filter(|&b| level[b][0].comp == ca)
                .map(|b| (ma.lcm(&level[b][0].mono).div(ma), b))
                .collect();
            for (ua, b) in minimal_with_index(cands) {
                let mb = &level[b][0].mono;
                let ub = ma.mul(&ua).div(mb);
                let left = ctx.mul_term(1, &ua, &level[a]);
                let s = ctx.sub_mul(&left, 1, &ub, &level[b]);
                let (rem, quots) = reduce_tracked(&ctx, s, &red);
                if !rem.is_empty() {
                    return Err(GbError::Structure(
                        "S-pair of a Gröbner basis failed to reduce to zero".into(),
                    ));
                }
                let mut terms = vec![
                    Term {
                        comp: a as u32,
                        mono: ua,
                        coeff: 1,
                    },
                    Term {
                        comp: b as u32,
                        mono: ub,
                        coeff: field.neg(1),
                    },
                ];
                terms.extend(quots.into_iter().map(|(l, c, q)| Term {
                    comp: l as u32,
                    mono: q,
                    coeff: field.neg(c),
                }));
                next.push(new_ctx.normalize(terms));
            }
        }
        if next.is_empty() {
            break;
        }
        level_sort(&mut next);
        level = next;
        order = new_order;
        shifts = new_shifts;
        tiebreak = new_tb;
    }
    Ok(SchreyerResolution {
        ring: ring.clone(),
        modules,
        maps,
    })
}

/// Convenience: the relations of `S/I` for polynomials generating `I`.
pub fn ideal_relations(polys: &[Poly]) -> Vec<ModElem> {
    polys.iter().map(|p| ModElem::from_poly(0, p)).collect()
}
