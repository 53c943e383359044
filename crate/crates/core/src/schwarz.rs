//! The Schwarz derivative in the `q`-domain.
//!
//! With `' = d/dτ = 2πi·D`, the Schwarzian `{h,τ} = (h''/h')' − ½(h''/h')²`
//! becomes `{h,τ} = −4π²·S_q(h)` where
//!
//! ```text
//! S_q(h) = D(u) − ½u²,   u = D²h / Dh.
//! ```
//!
//! The factor `−4π²` is never materialized. The equation `{h,τ} = 2π²r²E₄`
//! therefore reads `S_q(h) = −(r²/2)·E₄`.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::modular::{haupt_t, named, SeriesName};
use crate::rat::{int, Rat};
use crate::series::{LogSeries, PuiseuxSeries};

/// Admissible argument of [`q_schwarz`]: a pure series, or `c·L + p` whose
/// log part is a constant (the shape of `y₂/y₁` in the resonant case).
#[derive(Clone, Debug, PartialEq)]
pub enum SchwarzInput {
    Pure(PuiseuxSeries),
    Log { c: Rat, pure: PuiseuxSeries },
}

impl SchwarzInput {
    /// `D(h)`, always a pure series.
    pub fn derivative(&self) -> PuiseuxSeries {
        match self {
            SchwarzInput::Pure(p) => p.d(),
            SchwarzInput::Log { c, pure } => pure.d().add_scalar(c),
        }
    }

    pub fn known_to(&self) -> Rat {
        match self {
            SchwarzInput::Pure(p) | SchwarzInput::Log { pure: p, .. } => p.known_to(),
        }
    }
}

impl From<PuiseuxSeries> for SchwarzInput {
    fn from(p: PuiseuxSeries) -> Self {
        SchwarzInput::Pure(p)
    }
}

impl TryFrom<LogSeries> for SchwarzInput {
    type Error = Error;

    fn try_from(s: LogSeries) -> Result<Self> {
        if s.log_part.is_zero() {
            return Ok(SchwarzInput::Pure(s.pure_part));
        }
        let c = s.log_part.leading_coeff().cloned().unwrap_or_else(Rat::zero);
        if s.log_part.terms().count() != 1 || s.log_part.valuation() != Some(Rat::zero()) {
            return Err(Error::NonConstantLogPart);
        }
        Ok(SchwarzInput::Log { c, pure: s.pure_part })
    }
}

/// `S_q(h) = D(u) − ½u²` with `u = D²h/Dh`.
pub fn q_schwarz(h: &SchwarzInput) -> Result<PuiseuxSeries> {
    let dh = h.derivative();
    if dh.is_zero() {
        return Err(Error::ZeroDerivative);
    }
    let u = dh.d().div_series(&dh)?;
    let half_sq = (&u * &u).scale(&Rat::new(1.into(), 2.into()));
    Ok(&u.d() - &half_sq)
}

/// A 2×2 rational matrix `[[a, b], [c, d]]`.
pub type RatMatrix = [[Rat; 2]; 2];

/// `(a·h + b)/(c·h + d)`.
pub fn mobius_of_series(m: &RatMatrix, h: &SchwarzInput) -> Result<SchwarzInput> {
    let [[a, b], [c, d]] = m;
    if (a * d - b * c).is_zero() {
        return Err(Error::SingularMatrix);
    }
    match h {
        SchwarzInput::Pure(p) => {
            let num = p.scale(a).add_scalar(b);
            let den = p.scale(c).add_scalar(d);
            if den.is_zero() {
                return Err(Error::DivisionByZeroSeries);
            }
            Ok(SchwarzInput::Pure(num.div_series(&den)?))
        }
        SchwarzInput::Log { c: lc, pure } => {
            if !c.is_zero() {
                return Err(Error::LogInDenominator);
            }
            let dinv = d.recip();
            Ok(SchwarzInput::Log {
                c: lc * a * &dinv,
                pure: pure.scale(&(a * &dinv)).add_scalar(&(b * &dinv)),
            })
        }
    }
}

/// Outcome of comparing `S_q(h)` with `−(r²/2)·E₄`.
#[derive(Clone, Debug)]
pub struct SchwarzCheck {
    /// `S_q(h) + (r²/2)·E₄`, truncated to the certified bound.
    pub residual: PuiseuxSeries,
    pub requested: Rat,
}

impl SchwarzCheck {
    pub fn certified_to(&self) -> Rat {
        self.residual.known_to()
    }

    pub fn passes(&self) -> bool {
        self.residual.is_zero() && self.certified_to() >= self.requested
    }
}

/// Checks `S_q(h) + (r²/2)·E₄ = O(q^order)`.
///
/// The comparison stops one row below the smaller certified bound of the two
/// sides, and never claims more than that.
pub fn check_schwarz_eq(h: &SchwarzInput, r: &Rat, order: usize) -> Result<SchwarzCheck> {
    if r.is_zero() {
        return Err(Error::NonPositiveR(r.to_string()));
    }
    let s = q_schwarz(h)?;
    let rows = crate::rat::ceil_to_i64(&s.known_to()).max(1) as usize;
    let e4 = named(&SeriesName::E4, rows).series;
    let coef = r * r / int(2);
    let raw = &s + &e4.scale(&coef);
    let bound = raw.known_to() - Rat::one();
    Ok(SchwarzCheck {
        residual: raw.truncated(&bound),
        requested: int(order as i64),
    })
}

pub fn verify_schwarz_eq(h: &SchwarzInput, r: &Rat, order: usize) -> bool {
    check_schwarz_eq(h, r, order).is_ok_and(|c| c.passes())
}

/// Numerator and denominator polynomials (ascending coefficients) of the
/// level-5 solution with `r = n/5`, `n ∈ {1, 2, 3}`, as rational maps of `t`.
pub fn level5_map(n: u32) -> Option<(Vec<Rat>, Vec<Rat>)> {
    let poly = |cs: &[i64]| cs.iter().map(|&c| int(c)).collect::<Vec<_>>();
    match n {
        1 => Some((poly(&[0, 1]), poly(&[1]))),
        // t²(t⁵ − 7) / (7t⁵ + 1)
        2 => Some((poly(&[0, 0, -7, 0, 0, 0, 0, 1]), poly(&[1, 0, 0, 0, 0, 7]))),
        // t³(t¹⁰ − 39t⁵ − 26) / (26t¹⁰ − 39t⁵ − 1)
        3 => Some((
            poly(&[0, 0, 0, -26, 0, 0, 0, 0, -39, 0, 0, 0, 0, 1]),
            poly(&[-1, 0, 0, 0, 0, -39, 0, 0, 0, 0, 26]),
        )),
        _ => None,
    }
}

/// The level-5 solution `h_n` expanded so that `S_q(h_n)` is certified
/// beyond `O(q^order)`.
pub fn level5_solution(n: u32, order: usize) -> Result<PuiseuxSeries> {
    let (p, q) = level5_map(n).ok_or_else(|| Error::OutOfRange(format!("level-5 map n = {n}")))?;
    let t = haupt_t(order + 1);
    if n == 1 {
        return Ok(t);
    }
    PuiseuxSeries::compose_rational(&p, &q, &t)
}
