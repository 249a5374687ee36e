//! Monomial ideals as antichains of exponent vectors.
//!
//! Generators are kept minimal and sorted by total degree, then
//! lexicographically descending. The zero ideal has no generators; the unit
//! ideal is generated by the zero vector.

use std::fmt;

use num_integer::Integer;
use num_traits::{One, ToPrimitive};
use regulus_gb::{Mono, Poly, Ring};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::lp::convex_combination_below;
use crate::CoreError;

pub type ExpVec = Vec<u32>;

pub fn degree(e: &[u32]) -> u64 {
    e.iter().map(|&x| x as u64).sum()
}

pub fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// Trie over exponent vectors answering "does some stored vector divide `a`".
#[derive(Default)]
pub(crate) struct DivTree {
    n: usize,
    nodes: Vec<Vec<(u32, usize)>>,
}

impl DivTree {
    pub fn new(n: usize) -> Self {
        DivTree {
            n,
            nodes: vec![Vec::new()],
        }
    }

    pub fn insert(&mut self, e: &[u32]) {
        let mut node = 0;
        for &x in e.iter().take(self.n) {
            node = match self.nodes[node].binary_search_by_key(&x, |c| c.0) {
                Ok(k) => self.nodes[node][k].1,
                Err(k) => {
                    let id = self.nodes.len();
                    self.nodes.push(Vec::new());
                    self.nodes[node].insert(k, (x, id));
                    id
                }
            };
        }
    }

    pub fn divides_any(&self, a: &[u32]) -> bool {
        self.walk(0, 0, a)
    }

    fn walk(&self, node: usize, depth: usize, a: &[u32]) -> bool {
        if depth == self.n {
            return true;
        }
        for &(x, child) in &self.nodes[node] {
            if x > a[depth] {
                break;
            }
            if self.walk(child, depth + 1, a) {
                return true;
            }
        }
        false
    }
}

fn canonical_sort(gens: &mut [ExpVec]) {
    gens.sort_by(|a, b| degree(a).cmp(&degree(b)).then_with(|| b.cmp(a)));
}

/// A monomial ideal of `k[x_1..x_n]` with minimal generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialIdeal {
    ring: Ring,
    gens: Vec<ExpVec>,
}

/// Witness that `x^{N a}` lies in `I^N`: `N` generators (with multiplicity)
/// whose exponent sum is at most `N a`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionCertificate {
    pub member: ExpVec,
    pub multiplier: u64,
    /// Generators with their multiplicities; multiplicities sum to `multiplier`.
    pub factorization: Vec<(ExpVec, u64)>,
}

impl ReductionCertificate {
    /// Checks the witness against the generators of `ideal`.
    pub fn verify(&self, ideal: &MonomialIdeal) -> bool {
        let n = self.member.len();
        let total: u64 = self.factorization.iter().map(|f| f.1).sum();
        if total != self.multiplier || self.multiplier == 0 {
            return false;
        }
        let mut sum = vec![0u64; n];
        for (g, k) in &self.factorization {
            if !ideal.gens.contains(g) {
                return false;
            }
            for j in 0..n {
                sum[j] += g[j] as u64 * k;
            }
        }
        (0..n).all(|j| sum[j] <= self.member[j] as u64 * self.multiplier)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeProfile {
    pub min_gen_degree: u64,
    pub max_gen_degree: u64,
    pub equigenerated: bool,
    pub per_variable_max: Vec<u32>,
}

impl MonomialIdeal {
    /// The ideal generated by `raw`, minimalized.
    pub fn new(ring: &Ring, raw: Vec<ExpVec>) -> Result<Self, CoreError> {
        for e in &raw {
            if e.len() != ring.nvars() {
                return Err(CoreError::Invalid(format!(
                    "exponent vector of length {} in a ring with {} variables",
                    e.len(),
                    ring.nvars()
                )));
            }
            if e.iter().any(|&x| x > u16::MAX as u32) {
                return Err(CoreError::Invalid("exponent exceeds 65535".into()));
            }
        }
        Ok(Self::minimalize(ring, raw))
    }

    /// Divisibility antichain of `raw`.
    pub fn minimalize(ring: &Ring, mut raw: Vec<ExpVec>) -> Self {
        canonical_sort(&mut raw);
        raw.dedup();
        let mut tree = DivTree::new(ring.nvars());
        let mut gens = Vec::new();
        for e in raw {
            if !tree.divides_any(&e) {
                tree.insert(&e);
                gens.push(e);
            }
        }
        MonomialIdeal {
            ring: ring.clone(),
            gens,
        }
    }

    pub fn zero(ring: &Ring) -> Self {
        MonomialIdeal {
            ring: ring.clone(),
            gens: Vec::new(),
        }
    }

    pub fn unit(ring: &Ring) -> Self {
        MonomialIdeal {
            ring: ring.clone(),
            gens: vec![vec![0; ring.nvars()]],
        }
    }

    /// `m^d`, all monomials of degree `d`.
    pub fn max_power(ring: &Ring, d: u32) -> Self {
        Self::minimalize(ring, monomials_of_degree(ring.nvars(), d))
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars()
    }

    pub fn gens(&self) -> &[ExpVec] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(|g| g.iter().all(|&x| x == 0))
    }

    pub fn contains(&self, a: &[u32]) -> bool {
        self.gens.iter().any(|g| divides(g, a))
    }

    fn same_ring(&self, o: &Self) -> Result<(), CoreError> {
        if self.ring.names() != o.ring.names() {
            return Err(CoreError::Invalid("ideals live in different rings".into()));
        }
        Ok(())
    }

    pub fn sum(&self, o: &Self) -> Result<Self, CoreError> {
        self.same_ring(o)?;
        let raw = self.gens.iter().chain(&o.gens).cloned().collect();
        Ok(Self::minimalize(&self.ring, raw))
    }

    pub fn product(&self, o: &Self) -> Result<Self, CoreError> {
        self.same_ring(o)?;
        let mut raw = Vec::with_capacity(self.gens.len() * o.gens.len());
        for a in &self.gens {
            for b in &o.gens {
                let mut c = Vec::with_capacity(a.len());
                for (x, y) in a.iter().zip(b) {
                    let s = x + y;
                    if s > u16::MAX as u32 {
                        return Err(CoreError::Invalid("exponent overflow in product".into()));
                    }
                    c.push(s);
                }
                raw.push(c);
            }
        }
        Ok(Self::minimalize(&self.ring, raw))
    }

    /// `I ∩ J`, generated by the lcms of generator pairs.
    pub fn intersection(&self, o: &Self) -> Result<Self, CoreError> {
        self.same_ring(o)?;
        let mut raw = Vec::with_capacity(self.gens.len() * o.gens.len());
        for a in &self.gens {
            for b in &o.gens {
                raw.push(a.iter().zip(b).map(|(x, y)| *x.max(y)).collect());
            }
        }
        Ok(Self::minimalize(&self.ring, raw))
    }

    /// `I : J`, the intersection of `I : g` over the generators `g` of `J`.
    pub fn colon_ideal(&self, j: &Self) -> Result<Self, CoreError> {
        self.same_ring(j)?;
        let mut acc = Self::unit(&self.ring);
        for g in &j.gens {
            acc = acc.intersection(&self.colon(g))?;
        }
        Ok(acc)
    }

    /// `I^m` by repeated multiplication.
    pub fn power(&self, m: u32) -> Result<Self, CoreError> {
        if m == 0 {
            return Err(CoreError::Invalid("power exponent must be at least 1".into()));
        }
        let mut acc = self.clone();
        for _ in 1..m {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// `I : x^b`.
    pub fn colon(&self, b: &[u32]) -> Self {
        let raw = self
            .gens
            .iter()
            .map(|g| g.iter().zip(b).map(|(x, y)| x.saturating_sub(*y)).collect())
            .collect();
        Self::minimalize(&self.ring, raw)
    }

    /// True iff every variable has a pure power among the generators.
    pub fn is_m_primary(&self) -> bool {
        let n = self.nvars();
        (0..n).all(|j| {
            self.gens
                .iter()
                .any(|g| g[j] > 0 && g.iter().enumerate().all(|(k, &x)| k == j || x == 0))
        }) || self.is_unit()
    }

    /// Number of standard monomials, `None` when infinite.
    pub fn colength(&self) -> Option<u64> {
        if self.is_unit() {
            return Some(0);
        }
        if !self.is_m_primary() {
            return None;
        }
        let rho = self.profile().per_variable_max;
        let mut count = 0u64;
        let mut a = vec![0u32; self.nvars()];
        loop {
            if !self.contains(&a) {
                count += 1;
            }
            let mut j = 0;
            loop {
                if j == a.len() {
                    return Some(count);
                }
                a[j] += 1;
                if a[j] < rho[j] {
                    break;
                }
                a[j] = 0;
                j += 1;
            }
        }
    }

    pub fn profile(&self) -> DegreeProfile {
        let degs: Vec<u64> = self.gens.iter().map(|g| degree(g)).collect();
        let min = degs.iter().copied().min().unwrap_or(0);
        let max = degs.iter().copied().max().unwrap_or(0);
        let per_variable_max = (0..self.nvars())
            .map(|j| self.gens.iter().map(|g| g[j]).max().unwrap_or(0))
            .collect();
        DegreeProfile {
            min_gen_degree: min,
            max_gen_degree: max,
            equigenerated: min == max && !self.gens.is_empty(),
            per_variable_max,
        }
    }

    /// The subideal generated by the generators of degree at most `d`.
    pub fn truncate_degree(&self, d: u64) -> Self {
        MonomialIdeal {
            ring: self.ring.clone(),
            gens: self.gens.iter().filter(|g| degree(g) <= d).cloned().collect(),
        }
    }

    /// Integral-closure membership: `a` lies in the Newton polyhedron.
    pub fn np_membership(&self, a: &[u32]) -> Option<ReductionCertificate> {
        if self.gens.is_empty() {
            return None;
        }
        if let Some(g) = self.gens.iter().find(|g| divides(g, a)) {
            return Some(ReductionCertificate {
                member: a.to_vec(),
                multiplier: 1,
                factorization: vec![(g.clone(), 1)],
            });
        }
        let lambda = convex_combination_below(&self.gens, a)?;
        let mut n = num_bigint::BigInt::one();
        for l in &lambda {
            n = n.lcm(l.denom());
        }
        let factorization: Vec<(ExpVec, u64)> = self
            .gens
            .iter()
            .zip(&lambda)
            .filter(|(_, l)| !num_traits::Zero::is_zero(*l))
            .map(|(g, l)| {
                let k = (l * num_rational::BigRational::from_integer(n.clone())).to_integer();
                (g.clone(), k.to_u64().expect("multiplicity fits"))
            })
            .collect();
        Some(ReductionCertificate {
            member: a.to_vec(),
            multiplier: n.to_u64().expect("multiplier fits"),
            factorization,
        })
    }

    /// True iff `self` (contained in `i`) has the same integral closure as `i`.
    pub fn is_reduction_of(&self, i: &Self) -> Result<bool, CoreError> {
        self.same_ring(i)?;
        if !self.gens.iter().all(|g| i.contains(g)) {
            return Err(CoreError::Invalid("candidate reduction is not contained in the ideal".into()));
        }
        Ok(i
            .gens
            .iter()
            .all(|g| self.contains(g) || self.np_membership(g).is_some()))
    }

    /// Least `D` such that the generators of degree at most `D` generate a reduction.
    pub fn asymptotic_degree(&self) -> Result<u64, CoreError> {
        if self.gens.is_empty() {
            return Err(CoreError::Invalid("the zero ideal has no generator degree".into()));
        }
        let mut degs: Vec<u64> = self.gens.iter().map(|g| degree(g)).collect();
        degs.sort_unstable();
        degs.dedup();
        for &d in &degs {
            if self.truncate_degree(d).is_reduction_of(self)? {
                return Ok(d);
            }
        }
        unreachable!("the ideal is a reduction of itself")
    }

    pub fn to_polys(&self) -> Vec<Poly> {
        self.gens
            .iter()
            .map(|g| Poly::monomial(Mono::from_exps(g).expect("exponent in range"), 1))
            .collect()
    }

    /// Stable digest of the variable names and the sorted generators.
    pub fn hash(&self) -> String {
        let mut h = Sha256::new();
        h.update(self.canonical_string().as_bytes());
        hex::encode(h.finalize())
    }

    fn canonical_string(&self) -> String {
        let gens: Vec<String> = self
            .gens
            .iter()
            .map(|g| g.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
            .collect();
        format!("vars={};gens={}", self.ring.names().join(","), gens.join(";"))
    }

    pub fn term_string(&self, g: &[u32]) -> String {
        let parts: Vec<String> = g
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(j, &e)| {
                let name = &self.ring.names()[j];
                if e == 1 {
                    name.clone()
                } else {
                    format!("{name}^{e}")
                }
            })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.gens.iter().map(|g| self.term_string(g)).collect();
        write!(f, "({})", gens.join(", "))
    }
}

/// All exponent vectors of total degree `d` in `n` variables, lex-descending.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<ExpVec> {
    fn rec(n: usize, left: u32, cur: &mut ExpVec, out: &mut Vec<ExpVec>) {
        if cur.len() + 1 == n {
            cur.push(left);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for e in (0..=left).rev() {
            cur.push(e);
            rec(n, left - e, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        rec(n, d, &mut Vec::new(), &mut out);
    }
    out
}
