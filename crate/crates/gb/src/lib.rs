//! Exact Gröbner-basis machinery over prime fields.
//!
//! Polynomials live in graded rings `F_p[x_0..x_{n-1}]` with single or double
//! gradings. Submodules of graded free modules are handled uniformly: an
//! ideal is a submodule of rank one. On top of Buchberger's algorithm the
//! crate provides syzygies, elimination, kernels of module maps, Hilbert
//! series numerators and Schreyer resolutions.

mod field;
mod groebner;
mod hilbert;
mod kernel;
mod mono;
mod ops;
mod order;
mod poly;
mod ring;
mod schreyer;

pub use field::{is_prime, PrimeField, DEFAULT_CHAR};
pub use groebner::{
    buchberger_gb, is_groebner_basis, minimal_generators, normal_form, GroebnerBasis,
};
pub use hilbert::{hilbert_numerator, module_hilbert_numerator, HilbertNumerator};
pub use mono::Mono;
pub use ops::{
    colon_ideal, eliminate, intersect_ideals, module_map_kernel, syzygies, syzygies_with_degrees,
    MapKernel,
};
pub use order::{ModuleOrder, MonomialOrder};
pub use poly::{FreeModule, ModElem, Poly};
pub use ring::{Deg, Grading, Ring};
pub use schreyer::{ideal_relations, schreyer_resolution, SchreyerResolution};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GbError {
    #[error("characteristic {0} is not a prime below 2^31")]
    BadCharacteristic(u32),
    #[error("ring: {0}")]
    Ring(String),
    #[error("order: {0}")]
    Order(String),
    #[error("parse: {0}")]
    Parse(String),
    #[error("structure: {0}")]
    Structure(String),
    #[error("input is not homogeneous: {0}")]
    NotHomogeneous(String),
    #[error("degree-incompatible data: {0}")]
    DegreeIncompatible(String),
    #[error("argument out of range: {0}")]
    OutOfRange(String),
    #[error("resolution did not terminate within length {0}")]
    ResolutionTooLong(usize),
}
