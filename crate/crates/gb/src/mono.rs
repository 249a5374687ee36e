//! Dense exponent vectors.

use smallvec::SmallVec;

/// Exponent storage for polynomial terms. Exponents inside the Gröbner
/// kernels are bounded by `u16::MAX`; multiplication panics past that.
pub type Exp = u16;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Mono(SmallVec<[Exp; 24]>);

impl Mono {
    pub fn one(nvars: usize) -> Self {
        Mono(SmallVec::from_elem(0, nvars))
    }

    /// Builds a monomial from 32-bit exponents; `None` when an entry does not fit.
    pub fn from_exps(exps: &[u32]) -> Option<Self> {
        exps.iter()
            .map(|&e| Exp::try_from(e).ok())
            .collect::<Option<SmallVec<_>>>()
            .map(Mono)
    }

    pub fn var(nvars: usize, j: usize, e: u32) -> Self {
        let mut m = Mono::one(nvars);
        m.0[j] = Exp::try_from(e).expect("exponent overflow");
        m
    }

    #[inline]
    pub fn exps(&self) -> &[Exp] {
        &self.0
    }

    pub fn exps_u32(&self) -> Vec<u32> {
        self.0.iter().map(|&e| e as u32).collect()
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn get(&self, j: usize) -> u32 {
        self.0[j] as u32
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn weighted_degree(&self, w: &[u32]) -> u64 {
        self.0
            .iter()
            .zip(w)
            .map(|(&e, &w)| e as u64 * w as u64)
            .sum()
    }

    #[inline]
    pub fn mul(&self, other: &Mono) -> Mono {
        Mono(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(&a, &b)| a.checked_add(b).expect("exponent overflow"))
                .collect(),
        )
    }

    /// `self / other`; the caller guarantees divisibility.
    #[inline]
    pub fn div(&self, other: &Mono) -> Mono {
        debug_assert!(other.divides(self));
        Mono(self.0.iter().zip(other.0.iter()).map(|(&a, &b)| a - b).collect())
    }

    #[inline]
    pub fn divides(&self, other: &Mono) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(&a, &b)| a <= b)
    }

    pub fn lcm(&self, other: &Mono) -> Mono {
        Mono(self.0.iter().zip(other.0.iter()).map(|(&a, &b)| a.max(b)).collect())
    }

    pub fn gcd(&self, other: &Mono) -> Mono {
        Mono(self.0.iter().zip(other.0.iter()).map(|(&a, &b)| a.min(b)).collect())
    }

    pub fn is_coprime(&self, other: &Mono) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(&a, &b)| a == 0 || b == 0)
    }

    /// Support bitmask used to reject divisibility tests early.
    #[inline]
    pub fn mask(&self) -> u64 {
        let mut m = 0u64;
        for (j, &e) in self.0.iter().enumerate() {
            if e > 0 {
                m |= 1 << (j % 64);
            }
        }
        m
    }

    /// Keeps the variables in `range`, dropping the others.
    pub fn project(&self, range: std::ops::Range<usize>) -> Mono {
        Mono(self.0[range].iter().copied().collect())
    }

    /// Embeds into a larger ring, placing these exponents at `offset`.
    pub fn embed(&self, nvars: usize, offset: usize) -> Mono {
        let mut m = Mono::one(nvars);
        m.0[offset..offset + self.0.len()].copy_from_slice(&self.0);
        m
    }

    pub fn support_within(&self, range: std::ops::Range<usize>) -> bool {
        self.0
            .iter()
            .enumerate()
            .all(|(j, &e)| e == 0 || range.contains(&j))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divisibility_and_lcm() {
        let a = Mono::from_exps(&[2, 0, 1]).unwrap();
        let b = Mono::from_exps(&[1, 3, 1]).unwrap();
        let l = a.lcm(&b);
        assert_eq!(l.exps(), &[2, 3, 1]);
        assert!(a.divides(&l) && b.divides(&l));
        assert_eq!(l.div(&a).exps(), &[0, 3, 0]);
        assert!(!a.is_coprime(&b));
        assert_eq!(a.mask() & !l.mask(), 0);
    }

    #[test]
    fn oversized_exponent_rejected() {
        assert!(Mono::from_exps(&[70000]).is_none());
    }
}
