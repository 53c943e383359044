//! Exact truncated series in fractional powers of `q`, with a depth-one
//! logarithmic extension.

pub mod format;
mod log;
mod puiseux;

pub use self::log::LogSeries;
pub use self::puiseux::PuiseuxSeries;
