use std::fmt;

use astro_float::{BigFloat, Consts, Radix, RoundingMode, Sign};
use num_traits::Zero;

use crate::rat::Rat;

/// Working precision plus the constants cache that `astro-float` needs for
/// transcendental functions. Passed explicitly to every operation.
pub struct Arith {
    pub(crate) p: usize,
    rm: RoundingMode,
    cc: Consts,
}

impl Arith {
    /// Precision in decimal digits, rounded up to whole 64-bit words plus one
    /// guard word.
    pub fn with_digits(digits: u32) -> Self {
        let bits = (digits as f64 * std::f64::consts::LOG2_10).ceil() as usize;
        let p = (bits / 64 + 2) * 64;
        Arith {
            p,
            rm: RoundingMode::ToEven,
            cc: Consts::new().expect("constants cache"),
        }
    }

    pub fn bits(&self) -> usize {
        self.p
    }

    pub fn int(&self, n: i64) -> BigFloat {
        BigFloat::from_i64(n, self.p)
    }

    pub fn rat(&mut self, r: &Rat) -> BigFloat {
        let num = BigFloat::parse(&r.numer().to_string(), Radix::Dec, self.p, self.rm, &mut self.cc);
        if r.is_integer() {
            return num;
        }
        let den = BigFloat::parse(&r.denom().to_string(), Radix::Dec, self.p, self.rm, &mut self.cc);
        num.div(&den, self.p, self.rm)
    }

    pub fn pi(&mut self) -> BigFloat {
        self.cc.pi(self.p, self.rm)
    }

    pub fn add(&self, a: &BigComplex, b: &BigComplex) -> BigComplex {
        BigComplex {
            re: a.re.add(&b.re, self.p, self.rm),
            im: a.im.add(&b.im, self.p, self.rm),
        }
    }

    pub fn sub(&self, a: &BigComplex, b: &BigComplex) -> BigComplex {
        BigComplex {
            re: a.re.sub(&b.re, self.p, self.rm),
            im: a.im.sub(&b.im, self.p, self.rm),
        }
    }

    pub fn mul(&self, a: &BigComplex, b: &BigComplex) -> BigComplex {
        let (p, rm) = (self.p, self.rm);
        let rr = a.re.mul(&b.re, p, rm);
        let ii = a.im.mul(&b.im, p, rm);
        let ri = a.re.mul(&b.im, p, rm);
        let ir = a.im.mul(&b.re, p, rm);
        BigComplex {
            re: rr.sub(&ii, p, rm),
            im: ri.add(&ir, p, rm),
        }
    }

    pub fn scale(&self, a: &BigComplex, s: &BigFloat) -> BigComplex {
        BigComplex {
            re: a.re.mul(s, self.p, self.rm),
            im: a.im.mul(s, self.p, self.rm),
        }
    }

    pub fn div_real(&self, a: &BigComplex, s: &BigFloat) -> BigComplex {
        BigComplex {
            re: a.re.div(s, self.p, self.rm),
            im: a.im.div(s, self.p, self.rm),
        }
    }

    pub fn div(&self, a: &BigComplex, b: &BigComplex) -> Option<BigComplex> {
        let (p, rm) = (self.p, self.rm);
        let den = b.re.mul(&b.re, p, rm).add(&b.im.mul(&b.im, p, rm), p, rm);
        if den.is_zero() {
            return None;
        }
        let conj = BigComplex {
            re: b.re.clone(),
            im: b.im.neg(),
        };
        let n = self.mul(a, &conj);
        Some(BigComplex {
            re: n.re.div(&den, p, rm),
            im: n.im.div(&den, p, rm),
        })
    }

    pub fn abs(&self, a: &BigComplex) -> BigFloat {
        let (p, rm) = (self.p, self.rm);
        a.re.mul(&a.re, p, rm)
            .add(&a.im.mul(&a.im, p, rm), p, rm)
            .sqrt(p, rm)
    }

    /// `exp(z) = e^{Re z}(cos Im z + i sin Im z)`.
    pub fn exp(&mut self, z: &BigComplex) -> BigComplex {
        let (p, rm) = (self.p, self.rm);
        let m = z.re.exp(p, rm, &mut self.cc);
        let c = z.im.cos(p, rm, &mut self.cc);
        let s = z.im.sin(p, rm, &mut self.cc);
        BigComplex {
            re: m.mul(&c, p, rm),
            im: m.mul(&s, p, rm),
        }
    }

    /// `2πi·z`.
    pub fn two_pi_i(&mut self, z: &BigComplex) -> BigComplex {
        let two_pi = self.pi().mul(&self.int(2), self.p, self.rm);
        BigComplex {
            re: z.im.mul(&two_pi, self.p, self.rm).neg(),
            im: z.re.mul(&two_pi, self.p, self.rm),
        }
    }

    pub fn lt(&self, a: &BigFloat, b: &BigFloat) -> bool {
        matches!(a.cmp(b), Some(x) if x < 0)
    }

    pub fn from_f64(&self, x: f64) -> BigFloat {
        BigFloat::from_f64(x, self.p)
    }
}

/// Complex number with `astro-float` components.
#[derive(Clone, Debug)]
pub struct BigComplex {
    pub re: BigFloat,
    pub im: BigFloat,
}

impl BigComplex {
    pub fn new(re: BigFloat, im: BigFloat) -> Self {
        BigComplex { re, im }
    }

    pub fn from_rats(re: &Rat, im: &Rat, ar: &mut Arith) -> Self {
        BigComplex {
            re: ar.rat(re),
            im: ar.rat(im),
        }
    }

    pub fn zero(ar: &Arith) -> Self {
        BigComplex {
            re: ar.int(0),
            im: ar.int(0),
        }
    }

    pub fn one(ar: &Arith) -> Self {
        BigComplex {
            re: ar.int(1),
            im: ar.int(0),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl fmt::Display for BigComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (re, im) = (to_f64(&self.re), to_f64(&self.im));
        if im < 0.0 {
            write!(f, "{re} - {}i", -im)
        } else {
            write!(f, "{re} + {im}i")
        }
    }
}

/// Nearest `f64`; underflows to zero below the subnormal range.
pub fn to_f64(x: &BigFloat) -> f64 {
    let Some((m, _, sign, e, _)) = x.as_raw_parts() else {
        return f64::NAN;
    };
    let Some(top) = m.last() else { return 0.0 };
    if *top == 0 {
        return 0.0;
    }
    let mant = *top as f64 / 2f64.powi(64);
    let e = e as i64;
    let v = if e < -1100 {
        0.0
    } else if e > 1100 {
        f64::INFINITY
    } else {
        mant * 2f64.powi(e as i32)
    };
    match sign {
        Sign::Neg => -v,
        Sign::Pos => v,
    }
}

/// `log₁₀|x|`, exact in the exponent even where `f64` would underflow.
pub fn log10_abs(x: &BigFloat) -> f64 {
    let Some((m, _, _, e, _)) = x.as_raw_parts() else {
        return f64::NAN;
    };
    match m.last() {
        Some(top) if *top != 0 => {
            let mant = *top as f64 / 2f64.powi(64);
            (mant.log2() + e as f64) * std::f64::consts::LOG10_2
        }
        _ => f64::NEG_INFINITY,
    }
}

/// Compact scientific rendering such as `1.2e-11`.
pub fn sci(x: &BigFloat) -> String {
    if x.is_zero() {
        return "0".to_string();
    }
    let l = log10_abs(x);
    let exp = l.floor();
    let mant = 10f64.powf(l - exp);
    format!("{mant:.1}e{}", exp as i64)
}

pub(crate) fn rat_to_f64(r: &Rat) -> f64 {
    use num_traits::ToPrimitive;
    if r.is_zero() {
        0.0
    } else {
        r.to_f64().unwrap_or(f64::NAN)
    }
}
