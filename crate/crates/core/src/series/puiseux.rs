use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rat::{scaled_to_i64, small_denom, Rat};

/// Truncated Puiseux series `Σ coeffs[j]·q^{(lead+j)/ram} + O(q^{(lead+len)/ram})`
/// with exact rational coefficients.
///
/// Values are always stored in canonical form: the ramification is minimal
/// for the support and the truncation bound, and a nonzero series has a
/// nonzero first coefficient. A zero series keeps its truncation bound in
/// `lead` (so `lead/ram == known_to`).
#[derive(Clone)]
pub struct PuiseuxSeries {
    ram: u64,
    lead: i64,
    coeffs: Vec<Rat>,
}

/// Nonzero terms placed on a grid of step `1/ram`, plus the truncation
/// position on that grid.
struct Grid {
    ram: u64,
    end: i64,
    terms: Vec<(i64, Rat)>,
}

impl Grid {
    fn build(self) -> PuiseuxSeries {
        let Grid { ram, end, terms } = self;
        debug_assert!(ram > 0);
        let mut g = ram.gcd(&end.unsigned_abs());
        for (p, c) in &terms {
            if g == 1 {
                break;
            }
            if !c.is_zero() {
                g = g.gcd(&p.unsigned_abs());
            }
        }
        let g_i = g as i64;
        let ram = ram / g;
        let end = end / g_i;
        let mut iter = terms.into_iter().filter(|(_, c)| !c.is_zero()).peekable();
        let lead = match iter.peek() {
            Some((p, _)) => p / g_i,
            None => {
                return PuiseuxSeries {
                    ram,
                    lead: end,
                    coeffs: Vec::new(),
                }
            }
        };
        let len = (end - lead).max(0) as usize;
        let mut coeffs = vec![Rat::zero(); len];
        for (p, c) in iter {
            let idx = p / g_i - lead;
            debug_assert!(idx >= 0);
            if (idx as usize) < len {
                coeffs[idx as usize] = c;
            }
        }
        PuiseuxSeries { ram, lead, coeffs }
    }
}

impl PuiseuxSeries {
    /// Builds a series from raw parts, canonicalizing.
    pub fn from_parts(ram: u64, lead: i64, coeffs: Vec<Rat>) -> Self {
        assert!(ram > 0, "ramification index must be positive");
        let end = lead + coeffs.len() as i64;
        let terms = coeffs
            .into_iter()
            .enumerate()
            .map(|(j, c)| (lead + j as i64, c))
            .collect();
        Grid { ram, end, terms }.build()
    }

    /// `O(q^{known_to})`.
    pub fn zero(known_to: &Rat) -> Self {
        let ram = small_denom(known_to).expect("truncation bound denominator");
        let end = scaled_to_i64(known_to, ram).expect("truncation bound");
        Grid {
            ram,
            end,
            terms: Vec::new(),
        }
        .build()
    }

    pub fn constant(c: Rat, known_to: &Rat) -> Self {
        Self::monomial(c, &Rat::zero(), known_to)
    }

    /// `c·q^e + O(q^{known_to})`.
    pub fn monomial(c: Rat, e: &Rat, known_to: &Rat) -> Self {
        Self::from_terms(vec![(e.clone(), c)], known_to)
    }

    /// Builds a series from `(exponent, coefficient)` pairs; pairs at or
    /// beyond `known_to` are dropped.
    pub fn from_terms(terms: Vec<(Rat, Rat)>, known_to: &Rat) -> Self {
        let mut ram = small_denom(known_to).expect("denominator");
        for (e, _) in &terms {
            ram = ram.lcm(&small_denom(e).expect("denominator"));
        }
        let end = scaled_to_i64(known_to, ram).expect("bound");
        let mut placed: Vec<(i64, Rat)> = Vec::with_capacity(terms.len());
        for (e, c) in terms {
            let p = scaled_to_i64(&e, ram).expect("exponent");
            if p < end {
                placed.push((p, c));
            }
        }
        placed.sort_by_key(|(p, _)| *p);
        let mut merged: Vec<(i64, Rat)> = Vec::with_capacity(placed.len());
        for (p, c) in placed {
            match merged.last_mut() {
                Some((q, acc)) if *q == p => *acc += c,
                _ => merged.push((p, c)),
            }
        }
        Grid {
            ram,
            end,
            terms: merged,
        }
        .build()
    }

    /// Ramification index `N`: exponents live in `(1/N)ℤ`.
    pub fn ram(&self) -> u64 {
        self.ram
    }

    /// Leading grid position `a`; the first stored exponent is `a/N`.
    pub fn lead(&self) -> i64 {
        self.lead
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// The series is exact modulo `O(q^{known_to})`.
    pub fn known_to(&self) -> Rat {
        Rat::new(BigInt::from(self.end()), BigInt::from(self.ram))
    }

    /// Leading exponent of a nonzero series; the truncation bound of a zero one.
    pub fn lead_exponent(&self) -> Rat {
        Rat::new(BigInt::from(self.lead), BigInt::from(self.ram))
    }

    /// `None` when the series vanishes to its truncation order.
    pub fn valuation(&self) -> Option<Rat> {
        (!self.is_zero()).then(|| self.lead_exponent())
    }

    pub fn leading_coeff(&self) -> Option<&Rat> {
        self.coeffs.first()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn end(&self) -> i64 {
        self.lead + self.coeffs.len() as i64
    }

    /// Coefficient of `q^e`; `None` when `e` lies at or beyond the truncation.
    pub fn coeff(&self, e: &Rat) -> Option<Rat> {
        if *e >= self.known_to() {
            return None;
        }
        let scaled = e * Rat::from_integer(BigInt::from(self.ram));
        if !scaled.is_integer() {
            return Some(Rat::zero());
        }
        let p: i64 = scaled.to_integer().try_into().ok()?;
        let idx = p - self.lead;
        if idx < 0 {
            return Some(Rat::zero());
        }
        Some(self.coeffs[idx as usize].clone())
    }

    /// Nonzero terms as `(exponent, coefficient)`.
    pub fn terms(&self) -> impl Iterator<Item = (Rat, &Rat)> + '_ {
        let ram = BigInt::from(self.ram);
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(j, c)| (Rat::new(BigInt::from(self.lead + j as i64), ram.clone()), c))
    }

    /// Nonzero terms with positions on a grid of step `1/m` (`m` a multiple of `ram`).
    fn placed(&self, m: u64) -> impl Iterator<Item = (i64, &Rat)> + '_ {
        let f = (m / self.ram) as i64;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(j, c)| ((self.lead + j as i64) * f, c))
    }

    fn end_on(&self, m: u64) -> i64 {
        self.end() * (m / self.ram) as i64
    }

    fn lead_on(&self, m: u64) -> i64 {
        self.lead * (m / self.ram) as i64
    }

    /// Re-canonicalizes; a no-op on values built through the public API.
    pub fn normalize(&self) -> Self {
        Self::from_parts(self.ram, self.lead, self.coeffs.clone())
    }

    /// Lowers the truncation bound to `min(known_to, bound)`.
    pub fn truncated(&self, bound: &Rat) -> Self {
        if *bound >= self.known_to() {
            return self.clone();
        }
        let m = self.ram.lcm(&small_denom(bound).expect("denominator"));
        let end = scaled_to_i64(bound, m).expect("bound");
        Grid {
            ram: m,
            end,
            terms: self
                .placed(m)
                .take_while(|(p, _)| *p < end)
                .map(|(p, c)| (p, c.clone()))
                .collect(),
        }
        .build()
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero(&self.known_to());
        }
        PuiseuxSeries {
            ram: self.ram,
            lead: self.lead,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Adds `c·q^0`; ignored when the constant lies beyond the truncation.
    pub fn add_scalar(&self, c: &Rat) -> Self {
        if c.is_zero() || self.end() <= 0 {
            return self.clone();
        }
        let mut terms: Vec<(i64, Rat)> = self.placed(self.ram).map(|(p, x)| (p, x.clone())).collect();
        match terms.binary_search_by_key(&0, |(p, _)| *p) {
            Ok(i) => terms[i].1 += c,
            Err(i) => terms.insert(i, (0, c.clone())),
        }
        Grid {
            ram: self.ram,
            end: self.end(),
            terms,
        }
        .build()
    }

    /// Multiplication by `q^e`.
    pub fn shift(&self, e: &Rat) -> Self {
        let m = self.ram.lcm(&small_denom(e).expect("denominator"));
        let s = scaled_to_i64(e, m).expect("exponent");
        Grid {
            ram: m,
            end: self.end_on(m) + s,
            terms: self.placed(m).map(|(p, c)| (p + s, c.clone())).collect(),
        }
        .build()
    }

    /// Substitution `q ↦ q^f` for rational `f > 0`: the exponent `x` becomes `f·x`.
    pub fn scale_exponents(&self, f: &Rat) -> Self {
        assert!(f.is_positive_rat(), "exponent scale must be positive");
        let num: i64 = f.numer().try_into().expect("numerator");
        let den: u64 = f.denom().try_into().expect("denominator");
        Grid {
            ram: self.ram * den,
            end: self.end() * num,
            terms: self
                .placed(self.ram)
                .map(|(p, c)| (p * num, c.clone()))
                .collect(),
        }
        .build()
    }

    /// The derivation `D = q·d/dq`: `D(q^e) = e·q^e`.
    pub fn d(&self) -> Self {
        let ram = BigInt::from(self.ram);
        Grid {
            ram: self.ram,
            end: self.end(),
            terms: self
                .placed(self.ram)
                .map(|(p, c)| (p, c * Rat::new(BigInt::from(p), ram.clone())))
                .collect(),
        }
        .build()
    }

    fn add_impl(&self, other: &Self, negate: bool) -> Self {
        let m = self.ram.lcm(&other.ram);
        let end = self.end_on(m).min(other.end_on(m));
        let mut terms: Vec<(i64, Rat)> = Vec::with_capacity(self.coeffs.len() + other.coeffs.len());
        let mut a = self.placed(m).take_while(|(p, _)| *p < end).peekable();
        let mut b = other.placed(m).take_while(|(p, _)| *p < end).peekable();
        loop {
            let next = match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => Ordering::Less,
                (None, Some(_)) => Ordering::Greater,
                (Some((pa, _)), Some((pb, _))) => pa.cmp(pb),
            };
            match next {
                Ordering::Less => {
                    let (p, c) = a.next().unwrap();
                    terms.push((p, c.clone()));
                }
                Ordering::Greater => {
                    let (p, c) = b.next().unwrap();
                    terms.push((p, if negate { -c } else { c.clone() }));
                }
                Ordering::Equal => {
                    let (p, x) = a.next().unwrap();
                    let (_, y) = b.next().unwrap();
                    terms.push((p, if negate { x - y } else { x + y }));
                }
            }
        }
        Grid { ram: m, end, terms }.build()
    }

    /// Cauchy product. The truncation bound follows the min-rule
    /// `min(known_to(s) + lead(t), known_to(t) + lead(s))`.
    pub fn mul_series(&self, other: &Self) -> Self {
        let m = self.ram.lcm(&other.ram);
        let lead = self.lead_on(m) + other.lead_on(m);
        let end = (self.end_on(m) + other.lead_on(m)).min(other.end_on(m) + self.lead_on(m));
        let len = (end - lead).max(0) as usize;
        if len == 0 {
            return Grid {
                ram: m,
                end,
                terms: Vec::new(),
            }
            .build();
        }
        let (sl, tl) = (self.lead_on(m), other.lead_on(m));
        let a: Vec<(usize, &Rat)> = self.placed(m).map(|(p, c)| ((p - sl) as usize, c)).collect();
        let b: Vec<(usize, &Rat)> = other.placed(m).map(|(p, c)| ((p - tl) as usize, c)).collect();
        let acc = convolve(&a, &b, len);
        Grid {
            ram: m,
            end,
            terms: acc
                .into_iter()
                .enumerate()
                .map(|(j, c)| (lead + j as i64, c))
                .collect(),
        }
        .build()
    }

    /// `self / other`, exact up to the smaller relative precision of the two.
    pub fn div_series(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::DivisionByZeroSeries);
        }
        let m = self.ram.lcm(&other.ram);
        let (sl, tl) = (self.lead_on(m), other.lead_on(m));
        let rel = (self.end_on(m) - sl).min(other.end_on(m) - tl).max(0);
        let lead = sl - tl;
        let len = rel as usize;
        let mut rem = vec![Rat::zero(); len];
        for (p, c) in self.placed(m) {
            let j = (p - sl) as usize;
            if j < len {
                rem[j] = c.clone();
            }
        }
        let divisor: Vec<(usize, &Rat)> = other
            .placed(m)
            .map(|(p, c)| ((p - tl) as usize, c))
            .take_while(|(k, _)| *k < len.max(1))
            .collect();
        let inv0 = divisor[0].1.recip();
        let mut quot = Vec::new();
        for j in 0..len {
            if rem[j].is_zero() {
                continue;
            }
            let qj = &rem[j] * &inv0;
            for (k, tk) in &divisor[1..] {
                let idx = j + k;
                if idx >= len {
                    break;
                }
                rem[idx] -= &qj * *tk;
            }
            quot.push((lead + j as i64, qj));
        }
        Ok(Grid {
            ram: m,
            end: lead + rel,
            terms: quot,
        }
        .build())
    }

    /// Writes `s = c·q^e·m` with `m = 1 + (higher terms)`.
    pub fn monicize(&self) -> Result<(Rat, Rat, Self)> {
        let c = self.leading_coeff().ok_or(Error::ZeroSeries)?.clone();
        let e = self.lead_exponent();
        let m = self.scale(&c.recip()).shift(&-&e);
        Ok((c, e, m))
    }

    /// `m^α` for monic `m`, via the recurrence obtained from `m·D(b) = α·b·D(m)`.
    pub fn pow_rat(&self, alpha: &Rat) -> Result<Self> {
        if self.lead != 0 || self.coeffs.first().is_none_or(|c| !c.is_one()) {
            return Err(Error::NotMonic);
        }
        let end = self.end();
        let offsets: Vec<(i64, &Rat)> = self.placed(self.ram).skip(1).collect();
        let g = offsets.iter().fold(0u64, |g, (p, _)| g.gcd(&p.unsigned_abs()));
        if g == 0 || alpha.is_zero() {
            return Ok(Self::constant(Rat::one(), &self.known_to()));
        }
        let gi = g as i64;
        // compressed index n stands for grid position n·g
        let len = ((end + gi - 1) / gi) as usize;
        let m: Vec<(usize, &Rat)> = offsets.iter().map(|(p, c)| ((p / gi) as usize, *c)).collect();
        let alpha1 = alpha + Rat::one();
        let mut b: Vec<Rat> = Vec::with_capacity(len);
        b.push(Rat::one());
        for n in 1..len {
            let nr = Rat::from_integer(BigInt::from(n));
            let mut acc = Rat::zero();
            for (k, mk) in &m {
                if *k > n {
                    break;
                }
                let prev = &b[n - k];
                if prev.is_zero() {
                    continue;
                }
                let w = &alpha1 * Rat::from_integer(BigInt::from(*k)) - &nr;
                acc += w * *mk * prev;
            }
            b.push(acc / nr);
        }
        Ok(Grid {
            ram: self.ram,
            end,
            terms: b
                .into_iter()
                .enumerate()
                .map(|(n, c)| (n as i64 * gi, c))
                .collect(),
        }
        .build())
    }

    /// `self^n` for integer `n`, by repeated squaring (inverse for negative `n`).
    pub fn pow_int(&self, n: i64) -> Result<Self> {
        let base = if n < 0 {
            Self::constant(Rat::one(), &self.known_to()).div_series(self)?
        } else {
            self.clone()
        };
        let mut e = n.unsigned_abs();
        let mut result: Option<Self> = None;
        let mut power = base;
        while e > 0 {
            if e & 1 == 1 {
                result = Some(match result {
                    None => power.clone(),
                    Some(r) => r.mul_series(&power),
                });
            }
            e >>= 1;
            if e > 0 {
                power = power.mul_series(&power);
            }
        }
        Ok(result.unwrap_or_else(|| Self::constant(Rat::one(), &self.known_to())))
    }

    /// Evaluates `P(s)/Q(s)` for polynomials given by ascending coefficients.
    pub fn compose_rational(p: &[Rat], q: &[Rat], s: &Self) -> Result<Self> {
        if !s.lead_exponent().is_positive_rat() {
            return Err(Error::NonPositiveLead);
        }
        let num = poly_eval(p, s);
        let den = poly_eval(q, s);
        num.div_series(&den)
    }
}

/// Horner evaluation; a constant polynomial inherits `s`'s truncation.
fn poly_eval(coeffs: &[Rat], s: &PuiseuxSeries) -> PuiseuxSeries {
    let degree = coeffs.iter().rposition(|c| !c.is_zero());
    let Some(d) = degree else {
        return PuiseuxSeries::zero(&s.known_to());
    };
    if d == 0 {
        return PuiseuxSeries::constant(coeffs[0].clone(), &s.known_to());
    }
    let mut h = s.scale(&coeffs[d]).add_scalar(&coeffs[d - 1]);
    for c in coeffs[..d - 1].iter().rev() {
        h = h.mul_series(s).add_scalar(c);
    }
    h
}

/// Sparse convolution truncated to `len` rows.
///
/// Coefficients are brought to a common denominator so that the inner loop
/// runs on integers only.
fn convolve(a: &[(usize, &Rat)], b: &[(usize, &Rat)], len: usize) -> Vec<Rat> {
    let (ai, ad) = integerize(a);
    let (bi, bd) = integerize(b);
    let mut acc = vec![BigInt::zero(); len];
    for (i, x) in &ai {
        if *i >= len {
            break;
        }
        for (j, y) in &bi {
            let k = i + j;
            if k >= len {
                break;
            }
            acc[k] += x * y;
        }
    }
    let den = ad * bd;
    acc.into_iter()
        .map(|n| {
            if n.is_zero() {
                Rat::zero()
            } else {
                Rat::new(n, den.clone())
            }
        })
        .collect()
}

fn integerize(v: &[(usize, &Rat)]) -> (Vec<(usize, BigInt)>, BigInt) {
    let den = v.iter().fold(BigInt::one(), |d, (_, c)| d.lcm(c.denom()));
    let ints = v
        .iter()
        .map(|(i, c)| (*i, c.numer() * (&den / c.denom())))
        .collect();
    (ints, den)
}

trait PositiveRat {
    fn is_positive_rat(&self) -> bool;
}

impl PositiveRat for Rat {
    fn is_positive_rat(&self) -> bool {
        *self > Rat::zero()
    }
}

impl PartialEq for PuiseuxSeries {
    /// Coefficientwise agreement below the smaller truncation bound.
    fn eq(&self, other: &Self) -> bool {
        let diff = self - other;
        diff.is_zero()
    }
}

impl fmt::Debug for PuiseuxSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::series::format::to_text(self))
    }
}

impl fmt::Display for PuiseuxSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::series::format::to_text(self))
    }
}

impl Add for &PuiseuxSeries {
    type Output = PuiseuxSeries;
    fn add(self, rhs: Self) -> PuiseuxSeries {
        self.add_impl(rhs, false)
    }
}

impl Sub for &PuiseuxSeries {
    type Output = PuiseuxSeries;
    fn sub(self, rhs: Self) -> PuiseuxSeries {
        self.add_impl(rhs, true)
    }
}

impl Neg for &PuiseuxSeries {
    type Output = PuiseuxSeries;
    fn neg(self) -> PuiseuxSeries {
        PuiseuxSeries {
            ram: self.ram,
            lead: self.lead,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &PuiseuxSeries {
    type Output = PuiseuxSeries;
    fn mul(self, rhs: Self) -> PuiseuxSeries {
        self.mul_series(rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{int, rat};

    fn poly(terms: &[(i64, i64)], known_to: i64) -> PuiseuxSeries {
        PuiseuxSeries::from_terms(
            terms.iter().map(|&(e, c)| (int(e), int(c))).collect(),
            &int(known_to),
        )
    }

    #[test]
    fn addition_cancels() {
        let s = &poly(&[(0, 1), (1, -1)], 10) + &poly(&[(1, 1)], 10);
        assert_eq!(s, poly(&[(0, 1)], 10));
        assert_eq!(s.ram(), 1);
    }

    #[test]
    fn addition_common_ramification() {
        let a = PuiseuxSeries::monomial(int(1), &rat(1, 2), &int(2));
        let b = PuiseuxSeries::monomial(int(1), &rat(1, 3), &int(2));
        let s = &a + &b;
        assert_eq!(s.ram(), 6);
        let exps: Vec<Rat> = s.terms().map(|(e, _)| e).collect();
        assert_eq!(exps, vec![rat(2, 6), rat(3, 6)]);
    }

    #[test]
    fn add_zero_is_identity() {
        let s = poly(&[(0, 3), (2, 5)], 6);
        let z = PuiseuxSeries::zero(&int(6));
        assert_eq!(&s + &z, s);
    }

    #[test]
    fn products() {
        let p = &poly(&[(0, 1), (1, 1)], 8) * &poly(&[(0, 1), (1, -1)], 8);
        assert_eq!(p, poly(&[(0, 1), (2, -1)], 8));
        let f = PuiseuxSeries::monomial(int(1), &rat(1, 5), &int(3));
        let sq = &f * &f;
        assert_eq!(sq.valuation(), Some(rat(2, 5)));
        assert_eq!(sq.ram(), 5);
        assert_eq!(sq.known_to(), rat(16, 5));
    }

    #[test]
    fn geometric_series() {
        let one = PuiseuxSeries::constant(int(1), &int(6));
        let q = one.div_series(&poly(&[(0, 1), (1, -1)], 6)).unwrap();
        assert_eq!(q, poly(&[(0, 1), (1, 1), (2, 1), (3, 1), (4, 1), (5, 1)], 6));
        let r = poly(&[(0, 1), (2, -1)], 6)
            .div_series(&poly(&[(0, 1), (1, -1)], 6))
            .unwrap();
        assert_eq!(r, poly(&[(0, 1), (1, 1)], 6));
    }

    #[test]
    fn explicit_zeros_do_not_block_canonical_form() {
        let a = PuiseuxSeries::from_parts(2, -3, vec![int(0)]);
        assert_eq!((a.ram(), a.lead()), (1, -1));
        let b = PuiseuxSeries::from_parts(4, 1, vec![int(0), int(3), int(0), int(0), int(0), int(7), int(0)]);
        assert_eq!((b.ram(), b.lead(), b.coeffs().len()), (2, 1, 3));
    }

    #[test]
    fn fractional_quotient() {
        let a = PuiseuxSeries::monomial(int(1), &rat(3, 5), &int(4));
        let b = PuiseuxSeries::monomial(int(1), &rat(1, 5), &int(4));
        let q = a.div_series(&b).unwrap();
        assert_eq!(q.valuation(), Some(rat(2, 5)));
        assert_eq!(q.leading_coeff(), Some(&int(1)));
    }

    #[test]
    fn division_by_zero() {
        let z = PuiseuxSeries::zero(&int(4));
        assert_eq!(
            poly(&[(0, 1)], 4).div_series(&z).unwrap_err(),
            Error::DivisionByZeroSeries
        );
    }

    #[test]
    fn derivation() {
        let f = PuiseuxSeries::monomial(int(1), &rat(1, 5), &int(2));
        assert_eq!(f.d(), PuiseuxSeries::monomial(rat(1, 5), &rat(1, 5), &int(2)));
        assert!(PuiseuxSeries::constant(int(7), &int(3)).d().is_zero());
    }

    #[test]
    fn monicize_examples() {
        let s = PuiseuxSeries::from_terms(
            vec![(rat(1, 5), rat(1, 5)), (rat(6, 5), rat(2, 5))],
            &int(3),
        );
        let (c, e, m) = s.monicize().unwrap();
        assert_eq!((c, e), (rat(1, 5), rat(1, 5)));
        assert_eq!(m, poly(&[(0, 1), (1, 2)], 2));

        let (c, e, m) = PuiseuxSeries::constant(int(7), &int(3)).monicize().unwrap();
        assert_eq!((c, e), (int(7), int(0)));
        assert_eq!(m, PuiseuxSeries::constant(int(1), &int(3)));

        let (c, e, m) = poly(&[(2, -1), (3, 1)], 6).monicize().unwrap();
        assert_eq!((c, e), (int(-1), int(2)));
        assert_eq!(m, poly(&[(0, 1), (1, -1)], 4));

        assert_eq!(
            PuiseuxSeries::zero(&int(3)).monicize().unwrap_err(),
            Error::ZeroSeries
        );
    }

    #[test]
    fn rational_powers() {
        let m = poly(&[(0, 1), (1, -1)], 12);
        assert_eq!(m.pow_rat(&int(2)).unwrap(), poly(&[(0, 1), (1, -2), (2, 1)], 12));
        assert_eq!(m.pow_rat(&int(0)).unwrap(), PuiseuxSeries::constant(int(1), &int(12)));
        let root = m.pow_rat(&rat(1, 2)).unwrap();
        assert_eq!(&root * &root, m);
        assert_eq!(
            poly(&[(0, 2), (1, 1)], 4).pow_rat(&rat(1, 2)).unwrap_err(),
            Error::NotMonic
        );
    }

    #[test]
    fn composition() {
        let s = PuiseuxSeries::monomial(int(1), &rat(1, 5), &int(3));
        let r = PuiseuxSeries::compose_rational(&[int(0), int(0), int(1)], &[int(1)], &s).unwrap();
        assert_eq!(r.valuation(), Some(rat(2, 5)));
        assert_eq!(r.terms().count(), 1);

        let q = poly(&[(1, 1)], 6);
        let r = PuiseuxSeries::compose_rational(&[int(0), int(1)], &[int(1), int(-1)], &q).unwrap();
        assert_eq!(r, poly(&[(1, 1), (2, 1), (3, 1), (4, 1), (5, 1)], 6));

        let c = PuiseuxSeries::constant(int(1), &int(3));
        assert_eq!(
            PuiseuxSeries::compose_rational(&[int(1)], &[int(1)], &c).unwrap_err(),
            Error::NonPositiveLead
        );
    }

    #[test]
    fn truncation_min_rule() {
        let a = poly(&[(1, 1)], 5);
        let b = poly(&[(0, 1)], 3);
        assert_eq!((&a * &b).known_to(), int(4));
        assert_eq!((&a + &b).known_to(), int(3));
    }

    #[test]
    fn coefficient_lookup() {
        let s = poly(&[(0, 1), (2, 5)], 4);
        assert_eq!(s.coeff(&int(2)), Some(int(5)));
        assert_eq!(s.coeff(&int(1)), Some(int(0)));
        assert_eq!(s.coeff(&rat(1, 3)), Some(int(0)));
        assert_eq!(s.coeff(&int(4)), None);
    }

    #[test]
    fn exponent_scaling() {
        let s = poly(&[(0, 1), (1, 3)], 3);
        let w = s.scale_exponents(&rat(1, 5));
        assert_eq!(w.ram(), 5);
        assert_eq!(w.coeff(&rat(1, 5)), Some(int(3)));
        assert_eq!(w.scale_exponents(&int(5)), s);
    }
}
