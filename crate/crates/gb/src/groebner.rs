//! Buchberger's algorithm for submodules of free modules.
//!
//! Pairs are selected by the normal strategy (smallest weighted lcm degree,
//! shifted by the component twist) and pruned with the Gebauer–Möller
//! installation of Buchberger's chain criterion. The coprime-lead criterion is
//! only sound for ideals and is applied when the ambient rank is one.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap};

use crate::kernel::{reduce, Ctx, Reducers, Term, Vector};
use crate::mono::Mono;
use crate::order::ModuleOrder;
use crate::poly::{FreeModule, ModElem};
use crate::ring::Ring;
use crate::GbError;

struct Pair {
    i: usize,
    j: usize,
    comp: u32,
    lcm: Mono,
}

enum Item {
    Input(usize, Vector),
    Pair(Pair),
}

fn spoly(ctx: &Ctx, f: &[Term], g: &[Term]) -> Vector {
    let lcm = f[0].mono.lcm(&g[0].mono);
    let qf = lcm.div(&f[0].mono);
    let qg = lcm.div(&g[0].mono);
    let field = ctx.ring.field();
    let c = field.mul(f[0].coeff, field.inv(g[0].coeff));
    let left = ctx.mul_term(1, &qf, f);
    ctx.sub_mul(&left, c, &qg, g)
}

/// Runs Buchberger and returns the reduced basis sorted by ascending lead
/// term, together with the indices of inputs that did not reduce to zero.
///
/// Within one degree, pairs are processed before inputs, so for homogeneous
/// input the surviving inputs are a minimal generating set.
pub(crate) fn buchberger(
    ctx: &Ctx,
    inputs: Vec<Vector>,
    sel_shift: &[i64],
) -> (Vec<Vector>, Vec<usize>) {
    let weights = ctx.ring.order_weights();
    let ideal_case = ctx.order.rank() == 1;
    let mut red = Reducers::default();
    let mut redundant: Vec<bool> = Vec::new();
    let mut items: HashMap<u64, Item> = HashMap::new();
    let mut queue: BinaryHeap<Reverse<(i64, u8, u64)>> = BinaryHeap::new();
    let mut survivors = Vec::new();
    let mut seq = 0u64;

    let degree_of = |comp: u32, m: &Mono| -> i64 {
        m.weighted_degree(weights) as i64 + sel_shift.get(comp as usize).copied().unwrap_or(0)
    };

    for (k, v) in inputs.into_iter().enumerate() {
        if v.is_empty() {
            continue;
        }
        let d = degree_of(v[0].comp, &v[0].mono);
        items.insert(seq, Item::Input(k, v));
        queue.push(Reverse((d, 1, seq)));
        seq += 1;
    }

    while let Some(Reverse((_, _, id))) = queue.pop() {
        let Some(item) = items.remove(&id) else {
            continue;
        };
        let (candidate, origin) = match item {
            Item::Input(k, v) => (v, Some(k)),
            Item::Pair(p) => (spoly(ctx, &red.elems[p.i], &red.elems[p.j]), None),
        };
        let mut h = reduce(ctx, candidate, &red, true);
        if h.is_empty() {
            continue;
        }
        survivors.extend(origin);
        ctx.make_monic(&mut h);
        let (hc, hm) = (h[0].comp, h[0].mono.clone());
        let hidx = red.push(h);
        redundant.push(false);

        // Gebauer–Möller update.
        let mut cands: Vec<(usize, Mono, bool)> = Vec::new();
        for g in 0..hidx {
            if redundant[g] || red.elems[g][0].comp != hc {
                continue;
            }
            let gm = &red.elems[g][0].mono;
            cands.push((g, gm.lcm(&hm), ideal_case && gm.is_coprime(&hm)));
        }
        let mut kept: Vec<(usize, Mono, bool)> = Vec::new();
        for k in 0..cands.len() {
            let (g, ref l, cop) = cands[k];
            let dominated = cands[k + 1..].iter().any(|(_, l2, _)| l2.divides(l))
                || kept.iter().any(|(_, l2, _)| l2.divides(l));
            if cop || !dominated {
                kept.push((g, l.clone(), cop));
            }
        }
        // Chain criterion on pending pairs.
        let mut dead = Vec::new();
        for (&pid, it) in items.iter() {
            if let Item::Pair(p) = it {
                if p.comp == hc && hm.divides(&p.lcm) {
                    let li = red.elems[p.i][0].mono.lcm(&hm);
                    let lj = red.elems[p.j][0].mono.lcm(&hm);
                    if li != p.lcm && lj != p.lcm {
                        dead.push(pid);
                    }
                }
            }
        }
        for pid in dead {
            items.remove(&pid);
        }
        for g in 0..hidx {
            if !redundant[g] && red.elems[g][0].comp == hc && hm.divides(&red.elems[g][0].mono) {
                redundant[g] = true;
            }
        }
        for (g, l, cop) in kept {
            if cop {
                continue;
            }
            let d = degree_of(hc, &l);
            items.insert(
                seq,
                Item::Pair(Pair {
                    i: g,
                    j: hidx,
                    comp: hc,
                    lcm: l,
                }),
            );
            queue.push(Reverse((d, 0, seq)));
            seq += 1;
        }
    }

    (interreduce(ctx, red.elems), survivors)
}

/// Keeps minimal leads, tail-reduces, makes monic and sorts ascending.
pub(crate) fn interreduce(ctx: &Ctx, elems: Vec<Vector>) -> Vec<Vector> {
    let mut elems: Vec<Vector> = elems.into_iter().filter(|v| !v.is_empty()).collect();
    // Ascending by lead so that divisors come first.
    elems.sort_by(|a, b| ctx.cmp(&a[0], &b[0]));
    let mut minimal: Vec<Vector> = Vec::new();
    let mut red = Reducers::default();
    for v in elems {
        if red.find(v[0].comp, &v[0].mono).is_some() {
            continue;
        }
        red.push(v.clone());
        minimal.push(v);
    }
    let mut out = Vec::with_capacity(minimal.len());
    for v in &minimal {
        let lead = v[0].clone();
        let tail = reduce(ctx, v[1..].to_vec(), &red, true);
        let mut w = Vec::with_capacity(tail.len() + 1);
        w.push(lead);
        w.extend(tail);
        ctx.make_monic(&mut w);
        out.push(w);
    }
    out
}

/// A Gröbner basis together with its order, ready for normal forms.
pub struct GroebnerBasis {
    ring: Ring,
    order: ModuleOrder,
    red: Reducers,
}

impl GroebnerBasis {
    /// Computes the reduced Gröbner basis of the submodule generated by `gens`.
    pub fn compute(ring: &Ring, order: &ModuleOrder, gens: &[ModElem]) -> Result<Self, GbError> {
        Self::compute_with_shift(ring, order, gens, &vec![0; order.rank()])
    }

    /// As [`GroebnerBasis::compute`], using the module twists for pair selection.
    pub fn compute_graded(
        ring: &Ring,
        order: &ModuleOrder,
        module: &FreeModule,
        gens: &[ModElem],
    ) -> Result<Self, GbError> {
        if module.rank() != order.rank() {
            return Err(GbError::Structure(format!(
                "module rank {} differs from order rank {}",
                module.rank(),
                order.rank()
            )));
        }
        let shift: Vec<i64> = module.twists.iter().map(|&d| ring.order_weight_of(d)).collect();
        Self::compute_with_shift(ring, order, gens, &shift)
    }

    fn compute_with_shift(
        ring: &Ring,
        order: &ModuleOrder,
        gens: &[ModElem],
        shift: &[i64],
    ) -> Result<Self, GbError> {
        order.monomial.validate(ring.nvars())?;
        for g in gens {
            check_elem(ring, order.rank(), g)?;
        }
        let ctx = Ctx::new(ring, order);
        let inputs = gens.iter().map(|g| ctx.import(g)).collect();
        let (basis, _) = buchberger(&ctx, inputs, shift);
        Ok(Self::assemble(ring, order, basis))
    }

    /// Wraps elements already known to form a Gröbner basis.
    pub fn from_basis(ring: &Ring, order: &ModuleOrder, gb: &[ModElem]) -> Result<Self, GbError> {
        for g in gb {
            check_elem(ring, order.rank(), g)?;
        }
        let ctx = Ctx::new(ring, order);
        let elems: Vec<Vector> = gb
            .iter()
            .map(|g| ctx.import(g))
            .filter(|v| !v.is_empty())
            .collect();
        Ok(Self::assemble(ring, order, elems))
    }

    pub(crate) fn assemble(ring: &Ring, order: &ModuleOrder, elems: Vec<Vector>) -> Self {
        let mut red = Reducers::default();
        for v in elems {
            red.push(v);
        }
        GroebnerBasis {
            ring: ring.clone(),
            order: order.clone(),
            red,
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn order(&self) -> &ModuleOrder {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.red.len()
    }

    pub fn is_empty(&self) -> bool {
        self.red.len() == 0
    }

    pub fn elements(&self) -> Vec<ModElem> {
        let ctx = Ctx::new(&self.ring, &self.order);
        self.red.elems.iter().map(|v| ctx.export(v)).collect()
    }

    /// Leading `(component, monomial)` of every element, in basis order.
    pub fn leads(&self) -> Vec<(u32, Mono)> {
        self.red
            .elems
            .iter()
            .map(|v| (v[0].comp, v[0].mono.clone()))
            .collect()
    }

    pub fn normal_form(&self, f: &ModElem) -> Result<ModElem, GbError> {
        check_elem(&self.ring, self.order.rank(), f)?;
        let ctx = Ctx::new(&self.ring, &self.order);
        let r = reduce(&ctx, ctx.import(f), &self.red, true);
        Ok(ctx.export(&r))
    }

    pub fn contains(&self, f: &ModElem) -> Result<bool, GbError> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// Adds generators and completes to a reduced basis again.
    pub fn extend(&self, gens: &[ModElem]) -> Result<Self, GbError> {
        let mut all = self.elements();
        all.extend_from_slice(gens);
        Self::compute(&self.ring, &self.order, &all)
    }

    pub(crate) fn raw(&self) -> &[Vector] {
        &self.red.elems
    }
}

/// A minimal generating set of the submodule of `module` generated by the
/// homogeneous elements `gens`, chosen among `gens` in input order.
pub fn minimal_generators(
    ring: &Ring,
    module: &FreeModule,
    gens: &[ModElem],
) -> Result<Vec<ModElem>, GbError> {
    for g in gens {
        check_elem(ring, module.rank(), g)?;
        if !g.is_zero() && g.homogeneous_degree(ring, module).is_none() {
            return Err(GbError::NotHomogeneous(g.display(ring)));
        }
    }
    let order = ModuleOrder::top(crate::order::MonomialOrder::GRevLex, module.rank());
    let ctx = Ctx::new(ring, &order);
    let shift: Vec<i64> = module.twists.iter().map(|&d| ring.order_weight_of(d)).collect();
    let inputs = gens.iter().map(|g| ctx.import(g)).collect();
    let (_, mut keep) = buchberger(&ctx, inputs, &shift);
    keep.sort_unstable();
    Ok(keep.into_iter().map(|k| gens[k].clone()).collect())
}

pub(crate) fn check_elem(ring: &Ring, rank: usize, g: &ModElem) -> Result<(), GbError> {
    for (c, m, _) in g.terms() {
        if *c as usize >= rank {
            return Err(GbError::Structure(format!(
                "component {c} outside a module of rank {rank}"
            )));
        }
        if m.nvars() != ring.nvars() {
            return Err(GbError::Structure(format!(
                "monomial with {} variables in a ring with {}",
                m.nvars(),
                ring.nvars()
            )));
        }
    }
    Ok(())
}

/// Reduced Gröbner basis of the submodule generated by `gens`, sorted by lead term.
pub fn buchberger_gb(
    ring: &Ring,
    gens: &[ModElem],
    order: &ModuleOrder,
) -> Result<Vec<ModElem>, GbError> {
    Ok(GroebnerBasis::compute(ring, order, gens)?.elements())
}

/// Remainder of `f` modulo the Gröbner basis `gb`.
pub fn normal_form(
    ring: &Ring,
    f: &ModElem,
    gb: &[ModElem],
    order: &ModuleOrder,
) -> Result<ModElem, GbError> {
    GroebnerBasis::from_basis(ring, order, gb)?.normal_form(f)
}

/// Checks Buchberger's criterion directly: every S-vector reduces to zero.
pub fn is_groebner_basis(ring: &Ring, gb: &[ModElem], order: &ModuleOrder) -> Result<bool, GbError> {
    let basis = GroebnerBasis::from_basis(ring, order, gb)?;
    let ctx = Ctx::new(ring, order);
    let elems = basis.raw();
    for i in 0..elems.len() {
        for j in i + 1..elems.len() {
            if elems[i][0].comp != elems[j][0].comp {
                continue;
            }
            let s = spoly(&ctx, &elems[i], &elems[j]);
            if !reduce(&ctx, s, &basis.red, true).is_empty() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::MonomialOrder;
    use crate::poly::Poly;

    fn ideal(ring: &Ring, gens: &[&str]) -> Vec<ModElem> {
        gens.iter()
            .map(|s| ModElem::from_poly(0, &Poly::parse(ring, s).unwrap()))
            .collect()
    }

    fn polys(ring: &Ring, v: &[ModElem]) -> Vec<String> {
        v.iter().map(|e| e.component(0).display(ring)).collect()
    }

    #[test]
    fn substitution_example() {
        let r = Ring::standard(&["x", "y"], 32003).unwrap();
        let o = ModuleOrder::top(MonomialOrder::GRevLex, 1);
        let gb = buchberger_gb(&r, &ideal(&r, &["x^2 - y", "y"]), &o);
        // x^2 - y is inhomogeneous; the engine still handles it here.
        assert_eq!(polys(&r, &gb.unwrap()), vec!["y", "x^2"]);
    }

    #[test]
    fn unit_ideal() {
        let r = Ring::standard(&["x", "y"], 32003).unwrap();
        let o = ModuleOrder::top(MonomialOrder::GRevLex, 1);
        let gb = buchberger_gb(&r, &ideal(&r, &["x*y - 1", "x^2"]), &o).unwrap();
        assert_eq!(polys(&r, &gb), vec!["1"]);
    }

    #[test]
    fn monomial_ideal_is_its_own_basis() {
        let r = Ring::standard(&["x", "y", "z"], 32003).unwrap();
        for o in [MonomialOrder::GRevLex, MonomialOrder::Lex] {
            let o = ModuleOrder::top(o, 1);
            let gens = ideal(&r, &["x^2", "x*y", "y^3", "z"]);
            let gb = buchberger_gb(&r, &gens, &o).unwrap();
            assert_eq!(gb.len(), 4);
            for g in &gens {
                assert!(gb.contains(g));
            }
        }
    }

    #[test]
    fn normal_forms() {
        let r = Ring::standard(&["x", "y"], 32003).unwrap();
        let o = ModuleOrder::top(MonomialOrder::GRevLex, 1);
        let p = |s: &str| ModElem::from_poly(0, &Poly::parse(&r, s).unwrap());
        let nf = normal_form(&r, &p("x^3"), &ideal(&r, &["x^2"]), &o).unwrap();
        assert!(nf.is_zero());
        let nf = normal_form(&r, &p("x*y"), &ideal(&r, &["x^2", "y^2"]), &o).unwrap();
        assert_eq!(nf, p("x*y"));
        let nf = normal_form(&r, &p("x^2 + x*y"), &ideal(&r, &["x^2 - y"]), &o).unwrap();
        assert_eq!(nf, p("x*y + y"));
    }

    #[test]
    fn buchberger_criterion_holds() {
        let r = Ring::standard(&["x", "y", "z", "w"], 32003).unwrap();
        let o = ModuleOrder::top(MonomialOrder::GRevLex, 1);
        let gens = ideal(&r, &["x*z - y^2", "y*w - z^2", "x*w - y*z"]);
        let gb = buchberger_gb(&r, &gens, &o).unwrap();
        assert!(is_groebner_basis(&r, &gb, &o).unwrap());
        let basis = GroebnerBasis::from_basis(&r, &o, &gb).unwrap();
        for g in &gens {
            assert!(basis.contains(g).unwrap());
        }
    }

    #[test]
    fn structural_errors() {
        let r = Ring::standard(&["x", "y"], 32003).unwrap();
        let o = ModuleOrder::top(MonomialOrder::GRevLex, 1);
        let bad = ModElem::from_poly(3, &Poly::parse(&r, "x").unwrap());
        assert!(buchberger_gb(&r, &[bad], &o).is_err());
    }
}
