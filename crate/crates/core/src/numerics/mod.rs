//! Arbitrary-precision evaluation of truncated q-series on the upper
//! half-plane, Möbius actions, Γ(5)-invariance of the Hauptmodul and
//! cross-ratio equivariance of `h = y₂/y₁`.
//!
//! `q^{1/N}` is always the principal branch `exp(2πiτ/N)` and `L = 2πiτ`;
//! each side of a comparison is evaluated from its own `τ`.

mod complex;

use std::f64::consts::PI;

use astro_float::BigFloat;
use num_integer::Integer;
use num_traits::Zero;
use serde::Serialize;

pub use self::complex::{log10_abs, sci, to_f64, Arith, BigComplex};
use self::complex::rat_to_f64;
use crate::error::{Error, Result};
use crate::frobenius::{solve, FrobeniusBasis};
use crate::modular::{named, SeriesName};
use crate::rat::{int, rat, Rat};
use crate::series::{LogSeries, PuiseuxSeries};

/// Integer matrix of determinant one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct UniModularMatrix {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
}

impl UniModularMatrix {
    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Result<Self> {
        if a * d - b * c != 1 {
            return Err(Error::NotUnimodular);
        }
        Ok(UniModularMatrix { a, b, c, d })
    }

    pub const IDENTITY: Self = UniModularMatrix { a: 1, b: 0, c: 0, d: 1 };
    pub const S: Self = UniModularMatrix { a: 0, b: -1, c: 1, d: 0 };
    pub const T: Self = UniModularMatrix { a: 1, b: 1, c: 0, d: 1 };

    pub fn mul(&self, o: &Self) -> Self {
        UniModularMatrix {
            a: self.a * o.a + self.b * o.c,
            b: self.a * o.b + self.b * o.d,
            c: self.c * o.a + self.d * o.c,
            d: self.c * o.b + self.d * o.d,
        }
    }

    /// Membership in the principal congruence subgroup `Γ(n)`.
    pub fn in_gamma(&self, n: i64) -> bool {
        self.a.mod_floor(&n) == 1 % n
            && self.d.mod_floor(&n) == 1 % n
            && self.b.mod_floor(&n) == 0
            && self.c.mod_floor(&n) == 0
    }

    pub fn entries(&self) -> [i64; 4] {
        [self.a, self.b, self.c, self.d]
    }

    /// `Im(γτ) = Im τ / |cτ + d|²` for rational `τ`.
    pub fn image_im(&self, re: &Rat, im: &Rat) -> Rat {
        let x = re * int(self.c) + int(self.d);
        let y = im * int(self.c);
        im / (&x * &x + &y * &y)
    }
}

/// Precision, truncation rows and comparison tolerance of a numeric check.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EvalContext {
    /// Decimal digits.
    pub precision: u32,
    /// Integer-`q` rows summed past the leading exponent.
    pub terms: usize,
    /// Absolute tolerance.
    pub tol: f64,
}

impl Default for EvalContext {
    fn default() -> Self {
        EvalContext {
            precision: 60,
            terms: 0,
            tol: 1e-8,
        }
    }
}

impl EvalContext {
    /// Chooses `terms` so that `|q|^terms` at the lowest point is below
    /// `min(tol/10, 10^{−precision/2})`.
    pub fn adaptive(precision: u32, tol: f64, min_im: f64) -> Self {
        let target_log = (tol / 10.0).ln().min(-(precision as f64 / 2.0) * 10f64.ln());
        let per_row = 2.0 * PI * min_im;
        let terms = (-target_log / per_row).ceil().max(1.0) as usize;
        EvalContext {
            precision,
            terms,
            tol,
        }
    }

    /// [`EvalContext::adaptive`], then more rows until every series in
    /// `series` has `|cₙ qⁿ|` below the same target over a window of rows
    /// past `terms`. The Frobenius solutions grow like `exp(C√n)`, so the
    /// plain `|q|^terms` bound is not enough for them.
    pub fn adaptive_for(series: &[&LogSeries], precision: u32, tol: f64, min_im: f64) -> Result<Self> {
        let mut ctx = Self::adaptive(precision, tol, min_im);
        let target = (tol / 10.0).log10().min(-(precision as f64) / 2.0);
        loop {
            let mut worst = f64::NEG_INFINITY;
            for s in series {
                for p in [&s.log_part, &s.pure_part] {
                    let avail = available_rows(p);
                    if avail < ctx.terms + TAIL_WINDOW {
                        return Err(Error::InsufficientSeries {
                            known_to: p.known_to().to_string(),
                            needed: format!("{} rows", ctx.terms + TAIL_WINDOW),
                        });
                    }
                    worst = worst.max(row_magnitude(p, min_im, ctx.terms, ctx.terms + TAIL_WINDOW));
                }
            }
            if worst < target {
                return Ok(ctx);
            }
            ctx.terms += 1;
        }
    }

    /// Twice the digits and twice the rows.
    pub fn doubled(&self) -> Self {
        EvalContext {
            precision: self.precision * 2,
            terms: self.terms * 2,
            tol: self.tol,
        }
    }

    pub fn arith(&self) -> Arith {
        Arith::with_digits(self.precision)
    }

    /// `|q(τ)|^terms < tol/10`.
    pub fn check_tail(&self, im: f64) -> Result<()> {
        let log_tail = -2.0 * PI * im * self.terms as f64;
        if log_tail < (self.tol / 10.0).ln() {
            Ok(())
        } else {
            Err(Error::TailBoundViolated(format!("{im}")))
        }
    }
}

/// Hard cap for [`BasisQuotient::adaptive`].
const MAX_ROWS: usize = 4096;

/// Rows inspected past `terms` by [`EvalContext::adaptive_for`].
pub const TAIL_WINDOW: usize = 8;

fn available_rows(p: &PuiseuxSeries) -> usize {
    if p.is_zero() {
        return usize::MAX / 2;
    }
    crate::rat::ceil_to_i64(&(p.known_to() - p.lead_exponent())).max(0) as usize
}

fn log10_rat(x: &Rat) -> f64 {
    (x.numer().bits() as f64 - x.denom().bits() as f64) * std::f64::consts::LOG10_2
}

/// `max log₁₀|cₑ qᵉ|` over rows `from..to` past the lead, at `Im τ = im`.
fn row_magnitude(p: &PuiseuxSeries, im: f64, from: usize, to: usize) -> f64 {
    let lead = p.lead_exponent();
    let decay = 2.0 * PI * im * std::f64::consts::LOG10_E;
    p.terms()
        .filter(|(e, _)| {
            let rel = e - &lead;
            rel >= int(from as i64) && rel < int(to as i64)
        })
        .map(|(e, c)| log10_rat(c) - decay * rat_to_f64(&e))
        .fold(f64::NEG_INFINITY, f64::max)
}

/// Image of `z` under `γ`.
pub fn mobius(g: &UniModularMatrix, z: &BigComplex, ar: &mut Arith) -> Result<BigComplex> {
    let num = ar.add(&scale_i(z, g.a, ar), &BigComplex::new(ar.int(g.b), ar.int(0)));
    let den = ar.add(&scale_i(z, g.c, ar), &BigComplex::new(ar.int(g.d), ar.int(0)));
    if den.is_zero() {
        return Err(Error::PoleHit);
    }
    ar.div(&num, &den).ok_or(Error::PoleHit)
}

fn scale_i(z: &BigComplex, n: i64, ar: &Arith) -> BigComplex {
    ar.scale(z, &ar.int(n))
}

fn eval_pure(s: &PuiseuxSeries, tau: &BigComplex, ctx: &EvalContext, ar: &mut Arith) -> Result<BigComplex> {
    if s.is_zero() {
        return Ok(BigComplex::zero(ar));
    }
    let lead = s.lead_exponent();
    let needed = &lead + int(ctx.terms as i64);
    if s.known_to() < needed {
        return Err(Error::InsufficientSeries {
            known_to: s.known_to().to_string(),
            needed: needed.to_string(),
        });
    }
    let l = ar.two_pi_i(tau);
    let ram = ar.int(s.ram() as i64);
    let step = ar.exp(&ar.div_real(&l, &ram));
    let lead_f = ar.rat(&lead);
    let mut power = ar.exp(&ar.scale(&l, &lead_f));
    let rows = (ctx.terms as u64 * s.ram()) as usize;
    let mut acc = BigComplex::zero(ar);
    for (j, c) in s.coeffs().iter().enumerate().take(rows) {
        if j > 0 {
            power = ar.mul(&power, &step);
        }
        if !c.is_zero() {
            let cf = ar.rat(c);
            acc = ar.add(&acc, &ar.scale(&power, &cf));
        }
    }
    Ok(acc)
}

fn check_point(tau: &BigComplex, ctx: &EvalContext) -> Result<()> {
    if !tau.im.is_positive() || tau.im.is_zero() {
        return Err(Error::NonUpperHalfPlane);
    }
    ctx.check_tail(to_f64(&tau.im))
}

/// `Σ coeffs·q^{(a+j)/N}` over the first `ctx.terms` integer rows, plus
/// `L·(log part)` with `L = 2πiτ`.
pub fn eval_series(s: &LogSeries, tau: &BigComplex, ctx: &EvalContext, ar: &mut Arith) -> Result<BigComplex> {
    check_point(tau, ctx)?;
    let pure = eval_pure(&s.pure_part, tau, ctx, ar)?;
    if !s.has_log() {
        return Ok(pure);
    }
    let lp = eval_pure(&s.log_part, tau, ctx, ar)?;
    let l = ar.two_pi_i(tau);
    Ok(ar.add(&pure, &ar.mul(&l, &lp)))
}

/// A function on the upper half-plane computable from its cusp expansion.
pub trait HalfPlaneFunction {
    fn eval(&self, tau: &BigComplex, ctx: &EvalContext, ar: &mut Arith) -> Result<BigComplex>;
}

/// The Hauptmodul `t`, expanded to the rows a context asks for.
pub struct Hauptmodul;

impl HalfPlaneFunction for Hauptmodul {
    fn eval(&self, tau: &BigComplex, ctx: &EvalContext, ar: &mut Arith) -> Result<BigComplex> {
        let t = named(&SeriesName::HauptT, ctx.terms).series;
        eval_series(&LogSeries::from_pure((*t).clone()), tau, ctx, ar)
    }
}

/// `h = y₂/y₁` from a solved basis. Both solutions are evaluated on their
/// own and divided numerically: `g/y₁` as a series would only converge up to
/// the first zero of `y₁`.
pub struct BasisQuotient {
    pub y1: LogSeries,
    pub y2: LogSeries,
}

impl BasisQuotient {
    pub fn from_basis(b: &FrobeniusBasis) -> Self {
        BasisQuotient {
            y1: LogSeries::from_pure(b.y1.clone()),
            y2: b.y2.clone(),
        }
    }

    /// Solves for `r` with enough rows for `terms`.
    pub fn for_r(r: &Rat, terms: usize) -> Result<Self> {
        let rows = terms + crate::rat::ceil_to_i64(r).max(0) as usize + 2;
        Ok(Self::from_basis(&solve(r, rows)?))
    }

    /// Solves for `r` and picks `terms` with [`EvalContext::adaptive_for`],
    /// leaving enough rows for a doubled context.
    pub fn adaptive(r: &Rat, precision: u32, tol: f64, min_im: f64) -> Result<(Self, EvalContext)> {
        let mut rows = 64;
        loop {
            let h = Self::for_r(r, rows)?;
            match EvalContext::adaptive_for(&[&h.y1, &h.y2], precision, tol, min_im) {
                Ok(ctx) if 2 * ctx.terms + TAIL_WINDOW <= rows => return Ok((h, ctx)),
                Ok(ctx) => rows = 2 * ctx.terms + TAIL_WINDOW,
                Err(Error::InsufficientSeries { .. }) if rows < MAX_ROWS => rows *= 2,
                Err(e) => return Err(e),
            }
        }
    }
}

impl HalfPlaneFunction for BasisQuotient {
    fn eval(&self, tau: &BigComplex, ctx: &EvalContext, ar: &mut Arith) -> Result<BigComplex> {
        let a = eval_series(&self.y1, tau, ctx, ar)?;
        let b = eval_series(&self.y2, tau, ctx, ar)?;
        ar.div(&b, &a).ok_or(Error::PoleHit)
    }
}

/// Result of a numeric check.
#[derive(Clone, Debug, Serialize)]
pub struct NumericReport {
    pub check: String,
    pub gamma: [i64; 4],
    pub tau: String,
    /// Rendered like `1.2e-11`.
    pub residual: String,
    #[serde(skip)]
    pub residual_log10: f64,
    pub pass: bool,
}

impl NumericReport {
    fn new(check: &str, g: &UniModularMatrix, tau: String, residual: &BigFloat, tol: f64) -> Self {
        let l = log10_abs(residual);
        NumericReport {
            check: check.to_string(),
            gamma: g.entries(),
            tau,
            residual: sci(residual),
            residual_log10: l,
            pass: l < tol.log10(),
        }
    }
}

fn tau_label(pts: &[(Rat, Rat)]) -> String {
    pts.iter()
        .map(|(x, y)| format!("{}+{}i", rat_to_f64(x), rat_to_f64(y)))
        .collect::<Vec<_>>()
        .join(", ")
}

/// `|t(γτ) − t(τ)| < tol` for `γ ∈ Γ(5)`.
pub fn check_gamma5_invariance(g: &UniModularMatrix, tau: (&Rat, &Rat), ctx: &EvalContext) -> Result<NumericReport> {
    if !g.in_gamma(5) {
        return Err(Error::NotInGamma5);
    }
    let mut ar = ctx.arith();
    let z = BigComplex::from_rats(tau.0, tau.1, &mut ar);
    let w = mobius(g, &z, &mut ar)?;
    let tz = Hauptmodul.eval(&z, ctx, &mut ar)?;
    let tw = Hauptmodul.eval(&w, ctx, &mut ar)?;
    let res = ar.abs(&ar.sub(&tw, &tz));
    Ok(NumericReport::new(
        "gamma5-invariance",
        g,
        tau_label(&[(tau.0.clone(), tau.1.clone())]),
        &res,
        ctx.tol,
    ))
}

/// `(z₁ − z₃)(z₂ − z₄) / ((z₁ − z₄)(z₂ − z₃))`.
pub fn cross_ratio(z: &[BigComplex; 4], ar: &Arith) -> Option<BigComplex> {
    let n = ar.mul(&ar.sub(&z[0], &z[2]), &ar.sub(&z[1], &z[3]));
    let d = ar.mul(&ar.sub(&z[0], &z[3]), &ar.sub(&z[1], &z[2]));
    ar.div(&n, &d)
}

fn distinct(vals: &[BigComplex; 4], tol: f64, ar: &Arith) -> bool {
    let tol = ar.from_f64(tol);
    for i in 0..4 {
        for j in i + 1..4 {
            if ar.lt(&ar.abs(&ar.sub(&vals[i], &vals[j])), &tol) {
                return false;
            }
        }
    }
    true
}

fn values_at(
    h: &dyn HalfPlaneFunction,
    g: &UniModularMatrix,
    taus: &[(Rat, Rat)],
    ctx: &EvalContext,
    ar: &mut Arith,
) -> Result<(Vec<BigComplex>, Vec<BigComplex>)> {
    let mut before = Vec::with_capacity(taus.len());
    let mut after = Vec::with_capacity(taus.len());
    for (x, y) in taus {
        let z = BigComplex::from_rats(x, y, ar);
        let w = mobius(g, &z, ar)?;
        before.push(h.eval(&z, ctx, ar)?);
        after.push(h.eval(&w, ctx, ar)?);
    }
    Ok((before, after))
}

/// `|CR(h(γτ₁..₄)) − CR(h(τ₁..₄))| < tol`: `h∘γ` is a Möbius image of `h`
/// exactly when all cross-ratios agree, whatever `ρ(γ)` is.
pub fn cross_ratio_equivariance(
    h: &dyn HalfPlaneFunction,
    g: &UniModularMatrix,
    taus: &[(Rat, Rat); 4],
    ctx: &EvalContext,
) -> Result<NumericReport> {
    let mut ar = ctx.arith();
    let (before, after) = values_at(h, g, taus, ctx, &mut ar)?;
    let before: [BigComplex; 4] = before.try_into().expect("four points");
    let after: [BigComplex; 4] = after.try_into().expect("four points");
    if !distinct(&before, ctx.tol, &ar) || !distinct(&after, ctx.tol, &ar) {
        return Err(Error::DegeneratePoints);
    }
    let c0 = cross_ratio(&before, &ar).ok_or(Error::DegeneratePoints)?;
    let c1 = cross_ratio(&after, &ar).ok_or(Error::DegeneratePoints)?;
    let res = ar.abs(&ar.sub(&c1, &c0));
    Ok(NumericReport::new("equivariance", g, tau_label(taus), &res, ctx.tol))
}

/// Projective fit of `ρ(γ)` from three point pairs.
#[derive(Clone, Debug)]
pub struct RhoFit {
    /// `[a, b, c, d]`, scaled so the largest entry has modulus one.
    pub matrix: [BigComplex; 4],
    /// `|M(h(τ₄)) − h(γτ₄)|`.
    pub residual: BigFloat,
    pub residual_log10: f64,
}

impl RhoFit {
    pub fn matrix_f64(&self) -> [(f64, f64); 4] {
        self.matrix
            .clone()
            .map(|z| (to_f64(&z.re), to_f64(&z.im)))
    }
}

/// Möbius map sending `z₁, z₂, z₃` to `0, 1, ∞`, as `[a, b, c, d]`.
fn to_standard(z: &[BigComplex], ar: &Arith) -> [BigComplex; 4] {
    let z23 = ar.sub(&z[1], &z[2]);
    let z21 = ar.sub(&z[1], &z[0]);
    [
        z23.clone(),
        ar.mul(&ar.mul(&z[0], &z23), &BigComplex::new(ar.int(-1), ar.int(0))),
        z21.clone(),
        ar.mul(&ar.mul(&z[2], &z21), &BigComplex::new(ar.int(-1), ar.int(0))),
    ]
}

fn apply(m: &[BigComplex; 4], z: &BigComplex, ar: &Arith) -> Option<BigComplex> {
    let n = ar.add(&ar.mul(&m[0], z), &m[1]);
    let d = ar.add(&ar.mul(&m[2], z), &m[3]);
    ar.div(&n, &d)
}

fn compose(x: &[BigComplex; 4], y: &[BigComplex; 4], ar: &Arith) -> [BigComplex; 4] {
    [
        ar.add(&ar.mul(&x[0], &y[0]), &ar.mul(&x[1], &y[2])),
        ar.add(&ar.mul(&x[0], &y[1]), &ar.mul(&x[1], &y[3])),
        ar.add(&ar.mul(&x[2], &y[0]), &ar.mul(&x[3], &y[2])),
        ar.add(&ar.mul(&x[2], &y[1]), &ar.mul(&x[3], &y[3])),
    ]
}

/// Reconstructs `M` with `M(h(τᵢ)) = h(γτᵢ)` for `i = 1..3` and reports how
/// well it predicts the fourth point.
pub fn fit_rho(
    h: &dyn HalfPlaneFunction,
    g: &UniModularMatrix,
    taus: &[(Rat, Rat); 4],
    ctx: &EvalContext,
) -> Result<RhoFit> {
    let mut ar = ctx.arith();
    let (before, after) = values_at(h, g, taus, ctx, &mut ar)?;
    let b4: [BigComplex; 4] = before.clone().try_into().expect("four points");
    let a4: [BigComplex; 4] = after.clone().try_into().expect("four points");
    if !distinct(&b4, ctx.tol, &ar) || !distinct(&a4, ctx.tol, &ar) {
        return Err(Error::DegeneratePoints);
    }
    let a = to_standard(&before[..3], &ar);
    let b = to_standard(&after[..3], &ar);
    let neg = |z: &BigComplex| BigComplex::new(z.re.neg(), z.im.neg());
    let b_inv = [b[3].clone(), neg(&b[1]), neg(&b[2]), b[0].clone()];
    let m = compose(&b_inv, &a, &ar);
    let predicted = apply(&m, &before[3], &ar).ok_or(Error::DegeneratePoints)?;
    let residual = ar.abs(&ar.sub(&predicted, &after[3]));
    // normalize by the entry of largest modulus
    let mut big = 0;
    let mut big_abs = ar.abs(&m[0]);
    for (i, z) in m.iter().enumerate().skip(1) {
        let v = ar.abs(z);
        if ar.lt(&big_abs, &v) {
            big = i;
            big_abs = v;
        }
    }
    let pivot = m[big].clone();
    let matrix = m.map(|z| ar.div(&z, &pivot).expect("nonzero pivot"));
    Ok(RhoFit {
        residual_log10: log10_abs(&residual),
        residual,
        matrix,
    })
}

/// Five elements of `Γ(5)`, two of them translations.
pub fn gamma5_test_set() -> Vec<UniModularMatrix> {
    vec![
        UniModularMatrix { a: 1, b: 5, c: 0, d: 1 },
        UniModularMatrix { a: 1, b: -5, c: 0, d: 1 },
        UniModularMatrix { a: 1, b: 0, c: 5, d: 1 },
        UniModularMatrix { a: 1, b: 0, c: -5, d: 1 },
        UniModularMatrix { a: 6, b: -5, c: 5, d: -4 },
    ]
}

/// Three base points that keep both `Im τ` and `Im γτ` large: for `c ≠ 0`
/// they sit around `−d/c + i/|c|`, where `Im τ = Im γτ = 1/|c|`.
pub fn base_points(g: &UniModularMatrix) -> Vec<(Rat, Rat)> {
    if g.c == 0 {
        return vec![(int(0), int(1)), (rat(1, 3), rat(4, 5)), (rat(-1, 4), rat(6, 5))];
    }
    let x0 = rat(-g.d, g.c);
    let y0 = rat(1, g.c.abs());
    let dx = &y0 / int(10);
    vec![
        (x0.clone(), y0.clone()),
        (&x0 + &dx, y0.clone()),
        (&x0 - &dx, y0.clone()),
    ]
}

/// `min(Im τ, Im γτ)` over a point set.
pub fn min_im(g: &UniModularMatrix, pts: &[(Rat, Rat)]) -> f64 {
    pts.iter()
        .flat_map(|(x, y)| [rat_to_f64(y), rat_to_f64(&g.image_im(x, y))])
        .fold(f64::INFINITY, f64::min)
}

/// Four points near `1.1i`.
pub fn equivariance_points() -> [(Rat, Rat); 4] {
    [
        (int(0), rat(11, 10)),
        (rat(1, 10), rat(11, 10)),
        (rat(-1, 20), rat(6, 5)),
        (rat(1, 20), int(1)),
    ]
}

/// Group elements under which `h_r` is tested: `S` and `ST` for even `r`
/// (full modular group), `ST` and `(ST)²` for odd `r` (the index-2 subgroup
/// of squares).
pub fn parity_elements(r: i64) -> Vec<UniModularMatrix> {
    let st = UniModularMatrix::S.mul(&UniModularMatrix::T);
    if r % 2 == 0 {
        vec![UniModularMatrix::S, st]
    } else {
        vec![st, st.mul(&st)]
    }
}
