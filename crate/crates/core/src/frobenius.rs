//! Frobenius solutions at the cusp of
//!
//! ```text
//! D²y = (r²/4)·E₄·y          (normal form, r = (k+1)/6)
//! D²f − ((k+1)/6)·E₂·Df + (k(k+1)/12)·D(E₂)·f = 0
//! ```
//!
//! The indicial roots are `±r/2`. For integer `r` they differ by an integer
//! and the second solution picks up a logarithm:
//! `y₂ = c·L·y₁ + q^{−r/2} Σ βₙ qⁿ` with `L = log q`. Normalization is
//! `α₀ = β₀ = 1` and, in the resonant case, `β_r = 0`.
//!
//! The logarithmic basis relates to the `τ·y₁ + …` normalization by
//! `τ·y₁ + … = y₂/(2πi·c)` up to adding a multiple of `y₁`.

use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::modular::{eta_pow, named, SeriesName};
use crate::rat::{ceil_to_i64, format_rat, int, Rat};
use crate::series::{LogSeries, PuiseuxSeries};

/// Solved basis of the normal-form equation for parameter `r`.
#[derive(Clone, Debug)]
pub struct FrobeniusBasis {
    pub r: Rat,
    /// `q^{r/2}(1 + α₁q + …)`.
    pub y1: PuiseuxSeries,
    /// `c·L·y₁ + q^{−r/2}(1 + β₁q + …)`.
    pub y2: LogSeries,
    /// Resonance constant; zero unless `r` is an integer.
    pub c: Rat,
    pub order: usize,
}

/// `r = (k+1)/6`.
pub fn r_of_k(k: &Rat) -> Rat {
    (k + Rat::one()) / int(6)
}

/// `k = 6r − 1`.
pub fn k_of_r(r: &Rat) -> Rat {
    r * int(6) - Rat::one()
}

/// Solves `D²y = (r²/4)E₄y` through `q^{±r/2 + order}`.
pub fn solve(r: &Rat, order: usize) -> Result<FrobeniusBasis> {
    if *r <= Rat::zero() {
        return Err(Error::NonPositiveR(format_rat(r)));
    }
    let resonant = r.is_integer();
    let ri = if resonant {
        Some(r.to_integer().to_usize().ok_or_else(|| Error::OutOfRange(format_rat(r)))?)
    } else {
        None
    };
    if let Some(ri) = ri {
        if order < ri + 2 {
            return Err(Error::OrderTooSmall {
                order,
                needed: ri + 2,
            });
        }
    }
    let e4 = named(&SeriesName::E4, order).series;
    let e: Vec<Rat> = (0..=order).map(|m| e4.coeffs()[m].clone()).collect();
    let quarter_r2 = r * r / int(4);

    // y1: n(n + r)αₙ = (r²/4) Σ_{m=1..n} e_m α_{n−m}
    let mut alpha: Vec<Rat> = vec![Rat::one()];
    for n in 1..=order {
        let nr = int(n as i64);
        let s = convolve_tail(&e, &alpha, n);
        alpha.push(&quarter_r2 * s / (&nr * (&nr + r)));
    }

    // y2: n(n − r)βₙ = (r²/4) Σ e_m β_{n−m} [− 2c(n − r/2)α_{n−r}]
    let mut beta: Vec<Rat> = vec![Rat::one()];
    let mut c = Rat::zero();
    for n in 1..=order {
        let nr = int(n as i64);
        let s = &quarter_r2 * convolve_tail(&e, &beta, n);
        match ri {
            Some(ri) if n == ri => {
                // consistency row: 0·β_r = s − c·r·α₀
                c = s / (r * &alpha[0]);
                beta.push(Rat::zero());
            }
            Some(ri) if n > ri => {
                let corr = int(2) * &c * (&nr - r / int(2)) * &alpha[n - ri];
                beta.push((s - corr) / (&nr * (&nr - r)));
            }
            _ => beta.push(s / (&nr * (&nr - r))),
        }
    }

    let half = r / int(2);
    let y1 = PuiseuxSeries::from_parts(1, 0, alpha).shift(&half);
    let g = PuiseuxSeries::from_parts(1, 0, beta).shift(&-&half);
    let y2 = LogSeries::new(y1.scale(&c), g);
    Ok(FrobeniusBasis {
        r: r.clone(),
        y1,
        y2,
        c,
        order,
    })
}

fn convolve_tail(e: &[Rat], v: &[Rat], n: usize) -> Rat {
    let mut acc = Rat::zero();
    for m in 1..=n {
        let x = &v[n - m];
        if !x.is_zero() {
            acc += &e[m] * x;
        }
    }
    acc
}

/// Rows of an auxiliary series needed to keep `s·aux` at `s`'s relative precision.
fn rows_for(s: &LogSeries) -> usize {
    let rel = |p: &PuiseuxSeries| {
        if p.is_zero() {
            0
        } else {
            ceil_to_i64(&(p.known_to() - p.lead_exponent()))
        }
    };
    rel(&s.log_part).max(rel(&s.pure_part)).max(1) as usize
}

/// Smallest exponent present in either component, `0` for the zero series.
fn lead_of(s: &LogSeries) -> Rat {
    [&s.log_part, &s.pure_part]
        .into_iter()
        .filter_map(|p| p.valuation())
        .min()
        .unwrap_or_else(Rat::zero)
}

/// Residual together with the bound it is certified to.
///
/// `requested` is `order` integer rows past the leading exponent of the
/// tested function, the same row convention [`solve`] uses.
#[derive(Clone, Debug)]
pub struct ResidualCheck {
    pub residual: LogSeries,
    pub requested: Rat,
}

impl ResidualCheck {
    pub fn certified_to(&self) -> Rat {
        self.residual.known_to()
    }

    pub fn passes(&self) -> bool {
        self.residual.is_zero() && self.certified_to() >= self.requested
    }
}

/// `D²y − (r²/4)E₄y`, componentwise in `{L, 1}`.
pub fn ode_residual_check(y: &LogSeries, r: &Rat, order: usize) -> ResidualCheck {
    let e4 = named(&SeriesName::E4, rows_for(y)).series;
    let rhs = y.mul_pure(&e4).scale(&(r * r / int(4)));
    ResidualCheck {
        residual: &y.d().d() - &rhs,
        requested: lead_of(y) + int(order as i64),
    }
}

pub fn ode_residual(y: &LogSeries, r: &Rat, order: usize) -> bool {
    ode_residual_check(y, r, order).passes()
}

/// `D²f − ((k+1)/6)E₂·Df + (k(k+1)/12)·D(E₂)·f`, componentwise in `{L, 1}`.
pub fn kk_residual_check(f: &LogSeries, k: &Rat, order: usize) -> ResidualCheck {
    let e2 = named(&SeriesName::E2, rows_for(f) + 1).series;
    let k1 = k + Rat::one();
    let df = f.d();
    let t1 = df.d();
    let t2 = df.mul_pure(&e2).scale(&(&k1 / int(6)));
    let t3 = f.mul_pure(&e2.d()).scale(&(k * &k1 / int(12)));
    ResidualCheck {
        residual: &(&t1 - &t2) + &t3,
        requested: lead_of(f) + int(order as i64),
    }
}

pub fn kk_residual(f: &LogSeries, k: &Rat, order: usize) -> bool {
    kk_residual_check(f, k, order).passes()
}

/// `y₂ = (Dh)^{−1/2}`, `y₁ = h·y₂`, with the generally irrational scalar
/// `(lead coeff of Dh)^{−1/2}` dropped.
pub fn solutions_from_h(h: &PuiseuxSeries) -> Result<(PuiseuxSeries, PuiseuxSeries)> {
    let dh = h.d();
    if dh.is_zero() {
        return Err(Error::ZeroDerivative);
    }
    let (_, e, m) = dh.monicize()?;
    let y2 = m.pow_rat(&Rat::new((-1).into(), 2.into()))?.shift(&(-e / int(2)));
    let y1 = h * &y2;
    Ok((y1, y2))
}

/// `f = η^w·y`.
pub fn with_eta_power(y: &LogSeries, w: &Rat) -> LogSeries {
    let eta = eta_pow(w, rows_for(y));
    y.mul_pure(&eta)
}

/// `f = η^{2(k+1)}·y`.
pub fn to_f(y: &LogSeries, k: &Rat) -> LogSeries {
    with_eta_power(y, &(int(2) * (k + Rat::one())))
}

impl FrobeniusBasis {
    /// The pair `(η^{2(k+1)}y₁, η^{2(k+1)}y₂)`; `k` must equal `6r − 1`.
    pub fn to_f(&self, k: &Rat) -> Result<(LogSeries, LogSeries)> {
        if k_of_r(&self.r) != *k {
            return Err(Error::InconsistentKR {
                k: format_rat(k),
                r: format_rat(&self.r),
            });
        }
        Ok((to_f(&self.y1.clone().into(), k), to_f(&self.y2, k)))
    }

    /// `W = y₁·D(y₂) − y₂·D(y₁)`: its exponent-0 coefficient and whether
    /// every other coefficient (and the log part) vanishes.
    pub fn wronskian(&self) -> (Rat, bool) {
        let w = self.wronskian_series();
        let c0 = w.pure_part.coeff(&Rat::zero()).unwrap_or_else(Rat::zero);
        let rest = w.pure_part.add_scalar(&-&c0);
        (c0, rest.is_zero() && w.log_part.is_zero())
    }

    pub fn wronskian_series(&self) -> LogSeries {
        let y1 = LogSeries::from_pure(self.y1.clone());
        let a = self.y2.d().mul_pure(&self.y1);
        let b = self.y2.mul_pure(&y1.pure_part.d());
        &a - &b
    }

    /// Writes `v = a·y₁ + b·y₂` (both pure; non-resonant `r` only) by matching
    /// the coefficients at `q^{∓r/2}`, then checks every certified row.
    pub fn decompose(&self, v: &PuiseuxSeries) -> Option<(Rat, Rat)> {
        if self.y2.has_log() {
            return None;
        }
        let half = &self.r / int(2);
        let y2 = &self.y2.pure_part;
        let b = v.coeff(&-&half)? / y2.coeff(&-&half)?;
        let a = (v.coeff(&half)? - &b * y2.coeff(&half)?) / self.y1.coeff(&half)?;
        let combo = &self.y1.scale(&a) + &y2.scale(&b);
        (&combo - v).is_zero().then_some((a, b))
    }
}
