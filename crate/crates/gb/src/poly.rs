//! Sparse polynomials and free-module elements in canonical form.
//!
//! Canonical form sorts terms by component (ascending) and then by exponent
//! vector (lexicographically descending) and never stores zero coefficients.
//! The Gröbner kernels re-sort into whatever order they work with.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::mono::Mono;
use crate::ring::{Deg, Ring};
use crate::GbError;

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Poly {
    terms: Vec<(Mono, u32)>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { terms: Vec::new() }
    }

    pub fn monomial(m: Mono, c: u32) -> Self {
        if c == 0 {
            Poly::zero()
        } else {
            Poly { terms: vec![(m, c)] }
        }
    }

    pub fn constant(ring: &Ring, c: u32) -> Self {
        Poly::monomial(Mono::one(ring.nvars()), c % ring.char())
    }

    /// Collects terms, combining duplicates modulo the ring characteristic.
    pub fn from_terms<I: IntoIterator<Item = (Mono, u32)>>(ring: &Ring, terms: I) -> Self {
        let f = ring.field();
        let mut acc: BTreeMap<Mono, u32> = BTreeMap::new();
        for (m, c) in terms {
            let e = acc.entry(m).or_insert(0);
            *e = f.add(*e, c % f.modulus());
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| *c != 0).collect();
        terms.reverse();
        Poly { terms }
    }

    /// Binomial `x^a - x^b`.
    pub fn binomial(ring: &Ring, a: Mono, b: Mono) -> Self {
        let f = ring.field();
        Poly::from_terms(ring, [(a, 1), (b, f.neg(1))])
    }

    pub fn terms(&self) -> &[(Mono, u32)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The common degree of all terms, or `None` if inhomogeneous or zero.
    pub fn homogeneous_degree(&self, ring: &Ring) -> Option<Deg> {
        let mut it = self.terms.iter().map(|(m, _)| ring.mono_degree(m));
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    pub fn is_homogeneous(&self, ring: &Ring) -> bool {
        self.is_zero() || self.homogeneous_degree(ring).is_some()
    }

    pub fn add(&self, other: &Poly, ring: &Ring) -> Poly {
        Poly::from_terms(ring, self.terms.iter().chain(other.terms.iter()).cloned())
    }

    pub fn neg(&self, ring: &Ring) -> Poly {
        let f = ring.field();
        Poly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), f.neg(*c))).collect(),
        }
    }

    pub fn sub(&self, other: &Poly, ring: &Ring) -> Poly {
        self.add(&other.neg(ring), ring)
    }

    pub fn mul(&self, other: &Poly, ring: &Ring) -> Poly {
        let f = ring.field();
        Poly::from_terms(
            ring,
            self.terms.iter().flat_map(|(a, c)| {
                other.terms.iter().map(move |(b, d)| (a.mul(b), f.mul(*c, *d)))
            }),
        )
    }

    pub fn scale(&self, c: u32, ring: &Ring) -> Poly {
        let f = ring.field();
        Poly::from_terms(ring, self.terms.iter().map(|(m, d)| (m.clone(), f.mul(c, *d))))
    }

    /// Evaluates the ring map sending variable `j` to `images[j]`.
    pub fn substitute(&self, ring: &Ring, images: &[Poly], target: &Ring) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let mut t = Poly::constant(target, *c);
            for (j, &e) in m.exps().iter().enumerate() {
                for _ in 0..e {
                    t = t.mul(&images[j], target);
                }
            }
            out = out.add(&t, target);
        }
        let _ = ring;
        out
    }

    pub fn display(&self, ring: &Ring) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let f = ring.field();
        let mut s = String::new();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let v = f.to_signed(*c);
            let body = mono_string(ring, m);
            if k == 0 {
                if v < 0 {
                    s.push('-');
                }
            } else {
                s.push_str(if v < 0 { " - " } else { " + " });
            }
            let a = v.unsigned_abs();
            match (a, body.is_empty()) {
                (_, true) => write!(s, "{a}").unwrap(),
                (1, false) => s.push_str(&body),
                _ => write!(s, "{a}*{body}").unwrap(),
            }
        }
        s
    }

    /// Parses `3*x^2*y - z + 1` style input. Whitespace between factors
    /// is accepted as multiplication.
    pub fn parse(ring: &Ring, text: &str) -> Result<Poly, GbError> {
        let f = ring.field();
        let mut terms = Vec::new();
        let mut sign = 1i64;
        let mut current = String::new();
        let flush = |cur: &mut String, sign: i64, terms: &mut Vec<(Mono, u32)>| -> Result<(), GbError> {
            let t = cur.trim();
            if t.is_empty() {
                cur.clear();
                return Ok(());
            }
            let mut coeff: i64 = sign;
            let mut exps = vec![0u32; ring.nvars()];
            for factor in t.split(|c: char| c == '*' || c.is_whitespace()).filter(|s| !s.is_empty()) {
                if let Ok(v) = factor.parse::<i64>() {
                    coeff = (coeff * (v % f.modulus() as i64)) % f.modulus() as i64;
                    continue;
                }
                let (name, e) = match factor.split_once('^') {
                    Some((n, e)) => (
                        n,
                        e.parse::<u32>()
                            .map_err(|_| GbError::Parse(format!("bad exponent in {factor:?}")))?,
                    ),
                    None => (factor, 1),
                };
                let j = ring
                    .var_index(name)
                    .ok_or_else(|| GbError::Parse(format!("unknown variable {name:?}")))?;
                exps[j] += e;
            }
            let m = Mono::from_exps(&exps).ok_or_else(|| GbError::Parse("exponent overflow".into()))?;
            terms.push((m, f.from_i64(coeff)));
            cur.clear();
            Ok(())
        };
        let mut prev_nonspace: Option<char> = None;
        for ch in text.chars() {
            if (ch == '+' || ch == '-') && prev_nonspace != Some('^') {
                if !current.trim().is_empty() {
                    flush(&mut current, sign, &mut terms)?;
                    sign = 1;
                }
                if ch == '-' {
                    sign = -sign;
                }
            } else {
                current.push(ch);
            }
            if !ch.is_whitespace() {
                prev_nonspace = Some(ch);
            }
        }
        flush(&mut current, sign, &mut terms)?;
        Ok(Poly::from_terms(ring, terms))
    }
}

pub(crate) fn mono_string(ring: &Ring, m: &Mono) -> String {
    let mut parts = Vec::new();
    for (j, &e) in m.exps().iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(ring.names()[j].clone()),
            _ => parts.push(format!("{}^{}", ring.names()[j], e)),
        }
    }
    parts.join("*")
}

/// A graded free module: one degree shift per basis element. The basis
/// element `e_i` lives in degree `twists[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct FreeModule {
    pub twists: Vec<Deg>,
}

impl FreeModule {
    pub fn new(twists: Vec<Deg>) -> Self {
        FreeModule { twists }
    }

    pub fn rank(&self) -> usize {
        self.twists.len()
    }

    pub fn trivial(rank: usize) -> Self {
        FreeModule {
            twists: vec![Deg::ZERO; rank],
        }
    }
}

/// An element of a free module: finitely many `(component, monomial, coeff)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ModElem {
    terms: Vec<(u32, Mono, u32)>,
}

impl ModElem {
    pub fn zero() -> Self {
        ModElem { terms: Vec::new() }
    }

    pub fn from_terms<I: IntoIterator<Item = (u32, Mono, u32)>>(ring: &Ring, terms: I) -> Self {
        let f = ring.field();
        let mut acc: BTreeMap<(u32, std::cmp::Reverse<Mono>), u32> = BTreeMap::new();
        for (c, m, v) in terms {
            let e = acc.entry((c, std::cmp::Reverse(m))).or_insert(0);
            *e = f.add(*e, v % f.modulus());
        }
        ModElem {
            terms: acc
                .into_iter()
                .filter(|(_, v)| *v != 0)
                .map(|((c, m), v)| (c, m.0, v))
                .collect(),
        }
    }

    /// Builds from one polynomial per component.
    pub fn from_polys(ring: &Ring, polys: &[Poly]) -> Self {
        ModElem::from_terms(
            ring,
            polys.iter().enumerate().flat_map(|(c, p)| {
                p.terms().iter().map(move |(m, v)| (c as u32, m.clone(), *v))
            }),
        )
    }

    pub fn from_poly(comp: u32, p: &Poly) -> Self {
        let mut terms: Vec<_> = p.terms().iter().map(|(m, v)| (comp, m.clone(), *v)).collect();
        terms.sort_by(|a, b| b.1.cmp(&a.1));
        ModElem { terms }
    }

    /// The unit vector `e_comp`.
    pub fn basis(ring: &Ring, comp: u32) -> Self {
        ModElem::from_poly(comp, &Poly::constant(ring, 1))
    }

    pub fn terms(&self) -> &[(u32, Mono, u32)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn max_component(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.0).max()
    }

    pub fn component(&self, comp: u32) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .filter(|t| t.0 == comp)
                .map(|t| (t.1.clone(), t.2))
                .collect(),
        }
    }

    pub fn to_polys(&self, rank: usize) -> Vec<Poly> {
        (0..rank as u32).map(|c| self.component(c)).collect()
    }

    pub fn homogeneous_degree(&self, ring: &Ring, module: &FreeModule) -> Option<Deg> {
        let mut it = self
            .terms
            .iter()
            .map(|(c, m, _)| ring.mono_degree(m) + module.twists[*c as usize]);
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    pub fn add(&self, other: &ModElem, ring: &Ring) -> ModElem {
        ModElem::from_terms(ring, self.terms.iter().chain(other.terms.iter()).cloned())
    }

    pub fn scale_poly(&self, p: &Poly, ring: &Ring) -> ModElem {
        let f = ring.field();
        ModElem::from_terms(
            ring,
            self.terms.iter().flat_map(|(c, m, v)| {
                p.terms().iter().map(move |(n, w)| (*c, m.mul(n), f.mul(*v, *w)))
            }),
        )
    }

    /// `sum_i coeffs[i] * gens[i]`.
    pub fn combination(ring: &Ring, coeffs: &[Poly], gens: &[ModElem]) -> ModElem {
        let mut acc = ModElem::zero();
        for (c, g) in coeffs.iter().zip(gens) {
            if !c.is_zero() {
                acc = acc.add(&g.scale_poly(c, ring), ring);
            }
        }
        acc
    }

    /// Moves every component index by `delta`.
    pub fn shift_components(&self, delta: i64) -> ModElem {
        ModElem {
            terms: self
                .terms
                .iter()
                .map(|(c, m, v)| ((*c as i64 + delta) as u32, m.clone(), *v))
                .collect(),
        }
    }

    pub fn display(&self, ring: &Ring) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let comps: std::collections::BTreeSet<u32> = self.terms.iter().map(|t| t.0).collect();
        comps
            .into_iter()
            .map(|c| format!("({})*e{}", self.component(c).display(ring), c))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        let r = Ring::standard(&["x", "y"], 32003).unwrap();
        let p = Poly::parse(&r, "x^2 - 3*x*y + y^2 - 1").unwrap();
        assert_eq!(p.len(), 4);
        assert_eq!(p.display(&r), "x^2 - 3*x*y + y^2 - 1");
        let q = Poly::parse(&r, "-x y + x y").unwrap();
        assert!(q.is_zero());
        assert!(Poly::parse(&r, "z").is_err());
    }

    #[test]
    fn arithmetic() {
        let r = Ring::standard(&["x", "y"], 32003).unwrap();
        let a = Poly::parse(&r, "x + y").unwrap();
        let b = Poly::parse(&r, "x - y").unwrap();
        assert_eq!(a.mul(&b, &r), Poly::parse(&r, "x^2 - y^2").unwrap());
        assert!(a.is_homogeneous(&r));
        assert!(!Poly::parse(&r, "x + 1").unwrap().is_homogeneous(&r));
    }

    #[test]
    fn module_elements() {
        let r = Ring::standard(&["x", "y"], 32003).unwrap();
        let v = ModElem::from_polys(
            &r,
            &[Poly::parse(&r, "y").unwrap(), Poly::parse(&r, "-x").unwrap()],
        );
        let fm = FreeModule::new(vec![Deg(2, 0), Deg(2, 0)]);
        assert_eq!(v.homogeneous_degree(&r, &fm), Some(Deg(3, 0)));
        assert_eq!(v.component(1), Poly::parse(&r, "-x").unwrap());
    }
}
