//! Term-level arithmetic shared by the Gröbner and Schreyer kernels.
//!
//! Vectors are `Vec<Term>` sorted strictly descending under the active
//! module order. The leading term is element 0.

use std::cmp::Ordering;
use std::collections::HashMap;

use crate::mono::Mono;
use crate::order::ModuleOrder;
use crate::poly::ModElem;
use crate::ring::Ring;

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Term {
    pub comp: u32,
    pub mono: Mono,
    pub coeff: u32,
}

pub(crate) type Vector = Vec<Term>;

#[derive(Clone, Copy)]
pub(crate) struct Ctx<'a> {
    pub ring: &'a Ring,
    pub order: &'a ModuleOrder,
}

impl<'a> Ctx<'a> {
    pub fn new(ring: &'a Ring, order: &'a ModuleOrder) -> Self {
        Ctx { ring, order }
    }

    #[inline]
    pub fn cmp_parts(&self, ca: u32, a: &Mono, cb: u32, b: &Mono) -> Ordering {
        self.order
            .cmp_terms(self.ring.order_weights(), ca, a, cb, b)
    }

    #[inline]
    pub fn cmp(&self, a: &Term, b: &Term) -> Ordering {
        self.cmp_parts(a.comp, &a.mono, b.comp, &b.mono)
    }

    /// Sorts descending and merges equal terms.
    pub fn normalize(&self, mut v: Vector) -> Vector {
        v.sort_by(|a, b| self.cmp(b, a));
        let f = self.ring.field();
        let mut out: Vector = Vec::with_capacity(v.len());
        for t in v {
            match out.last_mut() {
                Some(last) if last.comp == t.comp && last.mono == t.mono => {
                    last.coeff = f.add(last.coeff, t.coeff);
                }
                _ => out.push(t),
            }
        }
        out.retain(|t| t.coeff != 0);
        out
    }

    pub fn import(&self, e: &ModElem) -> Vector {
        self.normalize(
            e.terms()
                .iter()
                .map(|(c, m, v)| Term {
                    comp: *c,
                    mono: m.clone(),
                    coeff: *v,
                })
                .collect(),
        )
    }

    pub fn export(&self, v: &[Term]) -> ModElem {
        ModElem::from_terms(self.ring, v.iter().map(|t| (t.comp, t.mono.clone(), t.coeff)))
    }

    /// `f - c * m * g`.
    pub fn sub_mul(&self, f: &[Term], c: u32, m: &Mono, g: &[Term]) -> Vector {
        let field = self.ring.field();
        let mut out = Vec::with_capacity(f.len() + g.len());
        let (mut i, mut j) = (0, 0);
        let mut cur: Option<Mono> = None;
        while j < g.len() {
            let mg = cur.get_or_insert_with(|| m.mul(&g[j].mono));
            if i < f.len() {
                match self.cmp_parts(f[i].comp, &f[i].mono, g[j].comp, mg) {
                    Ordering::Greater => {
                        out.push(f[i].clone());
                        i += 1;
                        continue;
                    }
                    Ordering::Equal => {
                        let v = field.sub(f[i].coeff, field.mul(c, g[j].coeff));
                        if v != 0 {
                            out.push(Term {
                                comp: f[i].comp,
                                mono: cur.take().unwrap(),
                                coeff: v,
                            });
                        }
                        cur = None;
                        i += 1;
                        j += 1;
                        continue;
                    }
                    Ordering::Less => {}
                }
            }
            out.push(Term {
                comp: g[j].comp,
                mono: cur.take().unwrap(),
                coeff: field.neg(field.mul(c, g[j].coeff)),
            });
            j += 1;
        }
        out.extend_from_slice(&f[i..]);
        out
    }

    pub fn mul_term(&self, c: u32, m: &Mono, g: &[Term]) -> Vector {
        let field = self.ring.field();
        g.iter()
            .map(|t| Term {
                comp: t.comp,
                mono: m.mul(&t.mono),
                coeff: field.mul(c, t.coeff),
            })
            .collect()
    }

    pub fn make_monic(&self, v: &mut Vector) {
        if let Some(lc) = v.first().map(|t| t.coeff) {
            if lc != 1 {
                let field = self.ring.field();
                let inv = field.inv(lc);
                for t in v.iter_mut() {
                    t.coeff = field.mul(t.coeff, inv);
                }
            }
        }
    }
}

/// Leading-term index over a growing list of vectors.
#[derive(Default)]
pub(crate) struct Reducers {
    pub elems: Vec<Vector>,
    masks: Vec<u64>,
    by_comp: HashMap<u32, Vec<usize>>,
}

impl Reducers {
    pub fn push(&mut self, v: Vector) -> usize {
        let lead = &v[0];
        let k = self.elems.len();
        self.masks.push(lead.mono.mask());
        self.by_comp.entry(lead.comp).or_default().push(k);
        self.elems.push(v);
        k
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    #[inline]
    pub fn find(&self, comp: u32, mono: &Mono) -> Option<usize> {
        let cands = self.by_comp.get(&comp)?;
        let mask = mono.mask();
        cands.iter().copied().find(|&k| {
            self.masks[k] & !mask == 0 && self.elems[k][0].mono.divides(mono)
        })
    }
}

/// Reduces `f` by `red`. With `full` every term is reduced, otherwise only
/// the leading term is driven to irreducibility.
pub(crate) fn reduce(ctx: &Ctx, mut f: Vector, red: &Reducers, full: bool) -> Vector {
    let field = ctx.ring.field();
    let mut out = Vec::new();
    let mut start = 0;
    while start < f.len() {
        let t = &f[start];
        if let Some(k) = red.find(t.comp, &t.mono) {
            let g = &red.elems[k];
            let q = t.mono.div(&g[0].mono);
            let c = field.mul(t.coeff, field.inv(g[0].coeff));
            f = ctx.sub_mul(&f[start..], c, &q, g);
            start = 0;
        } else if full {
            out.push(f[start].clone());
            start += 1;
        } else {
            out.extend_from_slice(&f[start..]);
            break;
        }
    }
    out
}

/// Full reduction recording the quotients `(reducer, coeff, monomial)`.
pub(crate) fn reduce_tracked(
    ctx: &Ctx,
    mut f: Vector,
    red: &Reducers,
) -> (Vector, Vec<(usize, u32, Mono)>) {
    let field = ctx.ring.field();
    let mut out = Vec::new();
    let mut quotients = Vec::new();
    let mut start = 0;
    while start < f.len() {
        let t = &f[start];
        if let Some(k) = red.find(t.comp, &t.mono) {
            let g = &red.elems[k];
            let q = t.mono.div(&g[0].mono);
            let c = field.mul(t.coeff, field.inv(g[0].coeff));
            f = ctx.sub_mul(&f[start..], c, &q, g);
            quotients.push((k, c, q));
            start = 0;
        } else {
            out.push(f[start].clone());
            start += 1;
        }
    }
    (out, quotients)
}
