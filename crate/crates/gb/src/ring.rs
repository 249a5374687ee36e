//! Graded polynomial rings over prime fields.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::field::PrimeField;
use crate::mono::Mono;
use crate::GbError;

/// A (possibly bi-)degree. Single gradings use the first slot and keep the
/// second at zero.
#[derive(
    Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize,
)]
pub struct Deg(pub i32, pub i32);

impl Deg {
    pub const ZERO: Deg = Deg(0, 0);

    pub fn single(a: i32) -> Deg {
        Deg(a, 0)
    }
}

impl Add for Deg {
    type Output = Deg;
    fn add(self, o: Deg) -> Deg {
        Deg(self.0 + o.0, self.1 + o.1)
    }
}

impl Sub for Deg {
    type Output = Deg;
    fn sub(self, o: Deg) -> Deg {
        Deg(self.0 - o.0, self.1 - o.1)
    }
}

impl Neg for Deg {
    type Output = Deg;
    fn neg(self) -> Deg {
        Deg(-self.0, -self.1)
    }
}

impl fmt::Display for Deg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.0, self.1)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Grading {
    /// Positive integer weight per variable.
    Single(Vec<u32>),
    /// Weight pair per variable; each pair has a positive entry.
    Double(Vec<(u32, u32)>),
}

impl Grading {
    pub fn is_double(&self) -> bool {
        matches!(self, Grading::Double(_))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ring {
    names: Vec<String>,
    field: PrimeField,
    grading: Grading,
    /// Positive weights used by degree-compatible orders and pair selection.
    order_weights: Vec<u32>,
}

impl Ring {
    pub fn new(names: Vec<String>, char: u32, grading: Grading) -> Result<Ring, GbError> {
        if names.is_empty() {
            return Err(GbError::Ring("a ring needs at least one variable".into()));
        }
        let mut seen = std::collections::HashSet::new();
        for n in &names {
            if n.is_empty() || !seen.insert(n.as_str()) {
                return Err(GbError::Ring(format!("bad or repeated variable name {n:?}")));
            }
        }
        let field = PrimeField::new(char)?;
        let order_weights = match &grading {
            Grading::Single(w) => {
                if w.len() != names.len() || w.contains(&0) {
                    return Err(GbError::Ring("single grading needs one weight >= 1 per variable".into()));
                }
                w.clone()
            }
            Grading::Double(w) => {
                if w.len() != names.len() || w.iter().any(|&(a, b)| a == 0 && b == 0) {
                    return Err(GbError::Ring(
                        "double grading needs one nonzero weight pair per variable".into(),
                    ));
                }
                w.iter().map(|&(a, b)| a + b).collect()
            }
        };
        Ok(Ring {
            names,
            field,
            grading,
            order_weights,
        })
    }

    /// Standard graded ring with the given variable names.
    pub fn standard<S: AsRef<str>>(names: &[S], char: u32) -> Result<Ring, GbError> {
        Ring::new(
            names.iter().map(|s| s.as_ref().to_string()).collect(),
            char,
            Grading::Single(vec![1; names.len()]),
        )
    }

    /// Ring with variables named `prefix0 .. prefix{n-1}` and standard grading.
    pub fn indexed(prefix: &str, n: usize, char: u32) -> Result<Ring, GbError> {
        let names: Vec<String> = (0..n).map(|i| format!("{prefix}{i}")).collect();
        Ring::standard(&names, char)
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn char(&self) -> u32 {
        self.field.modulus()
    }

    pub fn grading(&self) -> &Grading {
        &self.grading
    }

    #[inline]
    pub fn order_weights(&self) -> &[u32] {
        &self.order_weights
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn var_degree(&self, j: usize) -> Deg {
        match &self.grading {
            Grading::Single(w) => Deg(w[j] as i32, 0),
            Grading::Double(w) => Deg(w[j].0 as i32, w[j].1 as i32),
        }
    }

    pub fn mono_degree(&self, m: &Mono) -> Deg {
        let mut d = Deg::ZERO;
        for (j, &e) in m.exps().iter().enumerate() {
            if e > 0 {
                let v = self.var_degree(j);
                d = Deg(d.0 + v.0 * e as i32, d.1 + v.1 * e as i32);
            }
        }
        d
    }

    /// Scalar weight of a degree under the ordering weights.
    pub fn order_weight_of(&self, d: Deg) -> i64 {
        d.0 as i64 + d.1 as i64
    }

    /// Same variables and field with a new grading.
    pub fn regraded(&self, grading: Grading) -> Result<Ring, GbError> {
        Ring::new(self.names.clone(), self.char(), grading)
    }
}
