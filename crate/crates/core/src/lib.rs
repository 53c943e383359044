//! Exact q-series engine for the modular differential equation
//!
//! ```text
//! f'' - (2πi(k+1)/6) E₂ f' + (2πi k(k+1)/12) E₂' f = 0
//! ```
//!
//! its normal form `y'' + π²((k+1)/6)² E₄ y = 0`, and the associated
//! Schwarzian equation `{h, τ} = 2π² r² E₄`.
//!
//! Everything exact is done in the derivation `D = q·d/dq = (1/2πi)·d/dτ`,
//! so every coefficient stays rational. The numeric layer ([`numerics`])
//! evaluates truncated series on the upper half-plane in arbitrary precision.

pub mod classify;
pub mod error;
pub mod frobenius;
pub mod modular;
pub mod numerics;
pub mod rat;
pub mod schwarz;
pub mod series;
pub mod workbench;

pub use classify::{classify, level5_ks, ModularityClass, ModularityTag};
pub use error::{Error, Result};
pub use frobenius::{solve, FrobeniusBasis};
pub use rat::Rat;
pub use schwarz::{q_schwarz, SchwarzInput};
pub use series::{LogSeries, PuiseuxSeries};
