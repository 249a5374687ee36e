//! Monomial orders and their extensions to free modules.
//!
//! All degree comparisons use the ring's ordering weights, so the orders are
//! weighted versions of the familiar ones.

use std::cmp::Ordering;

use crate::mono::Mono;
use crate::GbError;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    /// Weighted degree, then reverse lexicographic.
    GRevLex,
    /// Pure lexicographic with `x_0 > x_1 > ...`.
    Lex,
    /// Block order eliminating the first `k` variables: weighted grevlex on
    /// the first block, ties broken by weighted grevlex on the rest.
    Elimination(usize),
}

impl MonomialOrder {
    #[inline]
    pub(crate) fn cmp_with<A, B>(&self, w: &[u32], a: A, b: B) -> Ordering
    where
        A: Fn(usize) -> u32,
        B: Fn(usize) -> u32,
    {
        let n = w.len();
        match self {
            MonomialOrder::GRevLex => grevlex_block(w, 0..n, &a, &b),
            MonomialOrder::Lex => {
                for j in 0..n {
                    match a(j).cmp(&b(j)) {
                        Ordering::Equal => {}
                        o => return o,
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::Elimination(k) => {
                let k = (*k).min(n);
                match grevlex_block(w, 0..k, &a, &b) {
                    Ordering::Equal => grevlex_block(w, k..n, &a, &b),
                    o => o,
                }
            }
        }
    }

    pub fn cmp(&self, w: &[u32], a: &Mono, b: &Mono) -> Ordering {
        self.cmp_with(w, |j| a.get(j), |j| b.get(j))
    }

    pub fn validate(&self, nvars: usize) -> Result<(), GbError> {
        if let MonomialOrder::Elimination(k) = self {
            if *k == 0 || *k >= nvars {
                return Err(GbError::Order(format!(
                    "elimination block {k} must lie strictly between 0 and {nvars}"
                )));
            }
        }
        Ok(())
    }
}

#[inline]
fn grevlex_block<A, B>(w: &[u32], r: std::ops::Range<usize>, a: &A, b: &B) -> Ordering
where
    A: Fn(usize) -> u32,
    B: Fn(usize) -> u32,
{
    let (mut da, mut db) = (0u64, 0u64);
    for j in r.clone() {
        da += a(j) as u64 * w[j] as u64;
        db += b(j) as u64 * w[j] as u64;
    }
    match da.cmp(&db) {
        Ordering::Equal => {}
        o => return o,
    }
    for j in r.rev() {
        let (x, y) = (a(j), b(j));
        if x != y {
            return if x < y { Ordering::Greater } else { Ordering::Less };
        }
    }
    Ordering::Equal
}

/// How a monomial order is extended to a free module `R^rank`.
///
/// Comparison of `m e_i` and `n e_j` proceeds as:
/// 1. component priority (higher priority is larger), if set;
/// 2. for position-over-term, the component rank;
/// 3. the monomials `m * s_i` and `n * s_j` where `s` are the Schreyer
///    shifts (identity when unset);
/// 4. the component rank (a smaller rank is the larger term).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleOrder {
    pub monomial: MonomialOrder,
    rank: usize,
    position_first: bool,
    priority: Option<Vec<u8>>,
    shifts: Option<Vec<Mono>>,
    tiebreak: Option<Vec<u32>>,
}

impl ModuleOrder {
    /// Term over position, components ranked by index.
    pub fn top(monomial: MonomialOrder, rank: usize) -> Self {
        ModuleOrder {
            monomial,
            rank,
            position_first: false,
            priority: None,
            shifts: None,
            tiebreak: None,
        }
    }

    /// Position over term, components ranked by index.
    pub fn pot(monomial: MonomialOrder, rank: usize) -> Self {
        ModuleOrder {
            position_first: true,
            ..ModuleOrder::top(monomial, rank)
        }
    }

    /// Schreyer-induced order: `m e_i` is compared through `m * shifts[i]`,
    /// ties broken by `tiebreak` (smaller value = larger term).
    pub fn schreyer(monomial: MonomialOrder, shifts: Vec<Mono>, tiebreak: Vec<u32>) -> Self {
        assert_eq!(shifts.len(), tiebreak.len());
        ModuleOrder {
            monomial,
            rank: shifts.len(),
            position_first: false,
            priority: None,
            shifts: Some(shifts),
            tiebreak: Some(tiebreak),
        }
    }

    /// Components with higher priority dominate every term in lower ones.
    pub fn with_priority(mut self, priority: Vec<u8>) -> Self {
        assert_eq!(priority.len(), self.rank);
        self.priority = Some(priority);
        self
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_schreyer(&self) -> bool {
        self.shifts.is_some()
    }

    pub fn shifts(&self) -> Option<&[Mono]> {
        self.shifts.as_deref()
    }

    #[inline]
    pub fn tiebreak(&self, c: u32) -> u32 {
        match &self.tiebreak {
            Some(t) => t[c as usize],
            None => c,
        }
    }

    /// Compares the terms `a e_ca` and `b e_cb`.
    #[inline]
    pub fn cmp_terms(&self, w: &[u32], ca: u32, a: &Mono, cb: u32, b: &Mono) -> Ordering {
        if let Some(p) = &self.priority {
            match p[ca as usize].cmp(&p[cb as usize]) {
                Ordering::Equal => {}
                o => return o,
            }
        }
        if self.position_first && ca != cb {
            return self.tiebreak(cb).cmp(&self.tiebreak(ca));
        }
        let o = match &self.shifts {
            None => self.monomial.cmp_with(w, |j| a.get(j), |j| b.get(j)),
            Some(s) => {
                let (sa, sb) = (&s[ca as usize], &s[cb as usize]);
                self.monomial
                    .cmp_with(w, |j| a.get(j) + sa.get(j), |j| b.get(j) + sb.get(j))
            }
        };
        match o {
            Ordering::Equal if ca != cb => self.tiebreak(cb).cmp(&self.tiebreak(ca)),
            o => o,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Mono {
        Mono::from_exps(e).unwrap()
    }

    #[test]
    fn grevlex_basics() {
        let w = [1, 1, 1];
        let o = MonomialOrder::GRevLex;
        // x*z < y^2 in grevlex
        assert_eq!(o.cmp(&w, &m(&[1, 0, 1]), &m(&[0, 2, 0])), Ordering::Less);
        assert_eq!(o.cmp(&w, &m(&[2, 0, 0]), &m(&[1, 1, 0])), Ordering::Greater);
        assert_eq!(o.cmp(&w, &m(&[0, 0, 3]), &m(&[2, 0, 0])), Ordering::Greater);
    }

    #[test]
    fn elimination_dominates() {
        let w = [1, 1, 1];
        let o = MonomialOrder::Elimination(1);
        assert_eq!(o.cmp(&w, &m(&[1, 0, 0]), &m(&[0, 5, 5])), Ordering::Greater);
        assert!(o.validate(3).is_ok());
        assert!(o.validate(1).is_err());
    }

    #[test]
    fn module_priority_and_tiebreak() {
        let w = [1, 1];
        let o = ModuleOrder::top(MonomialOrder::GRevLex, 3).with_priority(vec![1, 0, 0]);
        assert_eq!(
            o.cmp_terms(&w, 0, &m(&[0, 0]), 1, &m(&[4, 4])),
            Ordering::Greater
        );
        assert_eq!(
            o.cmp_terms(&w, 1, &m(&[1, 0]), 2, &m(&[1, 0])),
            Ordering::Greater
        );
    }
}
