use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::rat::Rat;
use crate::series::PuiseuxSeries;

/// `log_part·L + pure_part` with `L = log q = 2πiτ`.
///
/// `L` is transcendental over the series field, so equality is componentwise
/// and `D(L) = 1`.
#[derive(Clone, PartialEq)]
pub struct LogSeries {
    pub log_part: PuiseuxSeries,
    pub pure_part: PuiseuxSeries,
}

impl LogSeries {
    pub fn new(log_part: PuiseuxSeries, pure_part: PuiseuxSeries) -> Self {
        LogSeries {
            log_part,
            pure_part,
        }
    }

    /// Lifts a pure series; the (exactly zero) log part carries the same
    /// truncation bound.
    pub fn from_pure(pure: PuiseuxSeries) -> Self {
        LogSeries {
            log_part: PuiseuxSeries::zero(&pure.known_to()),
            pure_part: pure,
        }
    }

    pub fn has_log(&self) -> bool {
        !self.log_part.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.log_part.is_zero() && self.pure_part.is_zero()
    }

    /// Smaller of the two components' truncation bounds.
    pub fn known_to(&self) -> Rat {
        self.log_part.known_to().min(self.pure_part.known_to())
    }

    /// `D(a·L + b) = D(a)·L + (a + D(b))`.
    pub fn d(&self) -> Self {
        LogSeries {
            log_part: self.log_part.d(),
            pure_part: &self.log_part + &self.pure_part.d(),
        }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        LogSeries {
            log_part: self.log_part.scale(c),
            pure_part: self.pure_part.scale(c),
        }
    }

    pub fn mul_pure(&self, s: &PuiseuxSeries) -> Self {
        LogSeries {
            log_part: &self.log_part * s,
            pure_part: &self.pure_part * s,
        }
    }

    /// Product of two log series; fails when both carry a log part (`L²`).
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        match (self.has_log(), other.has_log()) {
            (true, true) => Err(Error::LogTimesLog),
            (false, _) => Ok(LogSeries {
                log_part: &other.log_part * &self.pure_part,
                pure_part: &other.pure_part * &self.pure_part,
            }),
            (true, false) => Ok(self.mul_pure(&other.pure_part)),
        }
    }
}

impl From<PuiseuxSeries> for LogSeries {
    fn from(s: PuiseuxSeries) -> Self {
        LogSeries::from_pure(s)
    }
}

impl Add for &LogSeries {
    type Output = LogSeries;
    fn add(self, rhs: Self) -> LogSeries {
        LogSeries {
            log_part: &self.log_part + &rhs.log_part,
            pure_part: &self.pure_part + &rhs.pure_part,
        }
    }
}

impl Sub for &LogSeries {
    type Output = LogSeries;
    fn sub(self, rhs: Self) -> LogSeries {
        LogSeries {
            log_part: &self.log_part - &rhs.log_part,
            pure_part: &self.pure_part - &rhs.pure_part,
        }
    }
}

impl Neg for &LogSeries {
    type Output = LogSeries;
    fn neg(self) -> LogSeries {
        LogSeries {
            log_part: -&self.log_part,
            pure_part: -&self.pure_part,
        }
    }
}

impl Mul<&PuiseuxSeries> for &LogSeries {
    type Output = LogSeries;
    fn mul(self, rhs: &PuiseuxSeries) -> LogSeries {
        self.mul_pure(rhs)
    }
}

impl fmt::Debug for LogSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})·L + ({})", self.log_part, self.pure_part)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{int, rat};

    fn one(known_to: i64) -> PuiseuxSeries {
        PuiseuxSeries::constant(int(1), &int(known_to))
    }

    #[test]
    fn log_times_log_rejected() {
        let l = LogSeries::new(one(4), PuiseuxSeries::zero(&int(4)));
        assert_eq!(l.try_mul(&l).unwrap_err(), Error::LogTimesLog);
        let p = LogSeries::from_pure(one(4));
        assert_eq!(l.try_mul(&p).unwrap(), l);
        assert_eq!(p.try_mul(&l).unwrap(), l);
    }

    #[test]
    fn derivation_of_log_term() {
        let y = PuiseuxSeries::monomial(int(1), &rat(1, 2), &int(3));
        let s = LogSeries::new(y.clone(), PuiseuxSeries::zero(&int(3)));
        let ds = s.d();
        assert_eq!(ds.log_part, y.scale(&rat(1, 2)));
        assert_eq!(ds.pure_part, y);
    }

    #[test]
    fn componentwise_equality() {
        let a = LogSeries::new(one(3), one(3));
        let b = LogSeries::new(PuiseuxSeries::zero(&int(3)), &one(3) + &one(3));
        assert_ne!(a, b);
        assert_eq!(&a + &a, a.scale(&int(2)));
    }
}
