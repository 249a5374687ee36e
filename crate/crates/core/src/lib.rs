//! Regularity of powers of monomial ideals and the Rees-algebra invariants
//! that control them.
//!
//! * [`monomial`]: monomial ideal arithmetic, Newton polyhedra, reductions.
//! * [`regularity`]: Betti tables from Schreyer resolutions and a
//!   local-cohomology scanner for `S/I`, cross-checkable against each other.
//! * [`rees`]: fiber rings, slice modules `N_i`, the Rees algebra and its
//!   `y`-regularity, `reg H^1` by local duality, depth of `gr_I(S)`.
//! * [`asymptotics`]: `e_m` sequences, bound evaluation, the mixed-degree
//!   predictor, monotonicity checks and the slice-regularity explorer.

pub mod asymptotics;
pub mod cache;
mod lp;
pub mod monomial;
pub mod rees;
pub mod regularity;
pub mod simplicial;

pub use regulus_gb as gb;

/// A regularity value: `None` stands for minus infinity (zero module).
pub type Reg = Option<i64>;

#[derive(Debug, thiserror::Error)]
pub enum CoreError {
    #[error(transparent)]
    Gb(#[from] regulus_gb::GbError),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("hypothesis not met: {0}")]
    Hypothesis(String),
    #[error("regularity engines disagree on {ideal}: scanner {scanner}, resolution {resolution}")]
    EngineMismatch {
        ideal: String,
        scanner: i64,
        resolution: i64,
    },
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("cache: {0}")]
    Cache(String),
}
