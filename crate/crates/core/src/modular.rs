//! q-expansions of E₂, E₄, the Dedekind eta function and its rational powers,
//! and the Γ(5) Hauptmodul
//!
//! ```text
//! t = q^{1/5} ∏_{n≥1} (1 − qⁿ)^{(n/5)}
//! ```
//!
//! `order` always counts integer-`q` rows beyond the (possibly fractional)
//! leading exponent: `e4(3)` is `1 + 240q + 2160q² + 6720q³ + O(q⁴)`, and
//! `eta(3)` is `q^{1/24}(1 − q − q² + 0·q³) + O(q^{1/24+4})`.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Pow, Zero};

use crate::error::{Error, Result};
use crate::rat::{format_rat, int, parse_rat, rat, Rat};
use crate::series::PuiseuxSeries;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum SeriesName {
    E2,
    E4,
    Eta,
    EtaPow(Rat),
    HauptT,
}

impl SeriesName {
    /// Accepts `E2`, `E4`, `eta`, `eta_pow:w` and `t`.
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "E2" | "e2" => Ok(SeriesName::E2),
            "E4" | "e4" => Ok(SeriesName::E4),
            "eta" => Ok(SeriesName::Eta),
            "t" => Ok(SeriesName::HauptT),
            _ => match s.strip_prefix("eta_pow:") {
                Some(w) => Ok(SeriesName::EtaPow(
                    parse_rat(w).map_err(|_| Error::UnknownSeries(s.to_string()))?,
                )),
                None => Err(Error::UnknownSeries(s.to_string())),
            },
        }
    }

    /// File-name friendly key.
    pub fn key(&self) -> String {
        match self {
            SeriesName::E2 => "E2".into(),
            SeriesName::E4 => "E4".into(),
            SeriesName::Eta => "eta".into(),
            SeriesName::EtaPow(w) => format!("eta_pow_{}", format_rat(w).replace('/', "_")),
            SeriesName::HauptT => "t".into(),
        }
    }

    pub fn compute(&self, order: usize) -> PuiseuxSeries {
        match self {
            SeriesName::E2 => e2(order),
            SeriesName::E4 => e4(order),
            SeriesName::Eta => eta(order),
            SeriesName::EtaPow(w) => eta_pow(w, order),
            SeriesName::HauptT => haupt_t(order),
        }
    }
}

impl fmt::Display for SeriesName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeriesName::E2 => write!(f, "E2"),
            SeriesName::E4 => write!(f, "E4"),
            SeriesName::Eta => write!(f, "eta"),
            SeriesName::EtaPow(w) => write!(f, "eta_pow:{}", format_rat(w)),
            SeriesName::HauptT => write!(f, "t"),
        }
    }
}

/// A named q-expansion together with the number of rows it was computed to.
#[derive(Clone, Debug)]
pub struct NamedSeries {
    pub name: SeriesName,
    pub series: Arc<PuiseuxSeries>,
    pub order: usize,
}

type Memo = RwLock<HashMap<(SeriesName, usize), Arc<PuiseuxSeries>>>;

fn memo() -> &'static Memo {
    static MEMO: OnceLock<Memo> = OnceLock::new();
    MEMO.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Process-wide memoized lookup. Concurrent readers share results; a racing
/// writer may recompute, which is harmless since the value is deterministic.
pub fn named(name: &SeriesName, order: usize) -> NamedSeries {
    let key = (name.clone(), order);
    if let Some(s) = memo().read().expect("memo poisoned").get(&key) {
        return NamedSeries {
            name: name.clone(),
            series: Arc::clone(s),
            order,
        };
    }
    let s = Arc::new(name.compute(order));
    memo()
        .write()
        .expect("memo poisoned")
        .entry(key)
        .or_insert_with(|| Arc::clone(&s));
    NamedSeries {
        name: name.clone(),
        series: s,
        order,
    }
}

/// `σ_k(n) = Σ_{d|n} d^k`.
pub fn sigma(k: u32, n: u64) -> BigInt {
    assert!(n >= 1, "sigma is defined for n ≥ 1");
    let mut total = BigInt::zero();
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            total += BigInt::from(d).pow(k);
            let e = n / d;
            if e != d {
                total += BigInt::from(e).pow(k);
            }
        }
        d += 1;
    }
    total
}

/// `σ_k(1..=order)` by a divisor sieve.
fn sigma_table(k: u32, order: usize) -> Vec<BigInt> {
    let mut table = vec![BigInt::zero(); order + 1];
    for d in 1..=order {
        let dk = BigInt::from(d).pow(k);
        for m in (d..=order).step_by(d) {
            table[m] += &dk;
        }
    }
    table
}

fn eisenstein(k: u32, scale: i64, order: usize) -> PuiseuxSeries {
    let table = sigma_table(k, order);
    let mut coeffs = Vec::with_capacity(order + 1);
    coeffs.push(Rat::one());
    for s in table.into_iter().skip(1) {
        coeffs.push(Rat::from_integer(s * scale));
    }
    PuiseuxSeries::from_parts(1, 0, coeffs)
}

/// `E₂ = 1 − 24 Σ σ₁(n) qⁿ`, rows `0..=order`.
pub fn e2(order: usize) -> PuiseuxSeries {
    eisenstein(1, -24, order)
}

/// `E₄ = 1 + 240 Σ σ₃(n) qⁿ`, rows `0..=order`.
pub fn e4(order: usize) -> PuiseuxSeries {
    eisenstein(3, 240, order)
}

/// Integer coefficients of `∏ (1 − qⁿ)^{e(n)}` through `q^order`, where each
/// factor is applied as a sparse binomial multiplication or division.
fn product_expansion(order: usize, exponent: impl Fn(usize) -> i64) -> Vec<BigInt> {
    let mut p = vec![BigInt::zero(); order + 1];
    p[0] = BigInt::one();
    for n in 1..=order {
        let e = exponent(n);
        for _ in 0..e.max(0) {
            for j in (n..=order).rev() {
                let (lo, hi) = p.split_at_mut(j);
                hi[0] -= &lo[j - n];
            }
        }
        for _ in 0..(-e).max(0) {
            for j in n..=order {
                let (lo, hi) = p.split_at_mut(j);
                hi[0] += &lo[j - n];
            }
        }
    }
    p
}

fn with_lead(lead_num: i64, ram: u64, product: Vec<BigInt>) -> PuiseuxSeries {
    let base = PuiseuxSeries::from_parts(1, 0, product.into_iter().map(Rat::from_integer).collect());
    base.shift(&rat(lead_num, ram as i64))
}

/// `∏_{n=1..order}(1 − qⁿ)` as a ram-1 series through `q^order`.
pub fn euler_product(order: usize) -> PuiseuxSeries {
    PuiseuxSeries::from_parts(
        1,
        0,
        product_expansion(order, |_| 1)
            .into_iter()
            .map(Rat::from_integer)
            .collect(),
    )
}

/// `η = q^{1/24} ∏ (1 − qⁿ)`.
pub fn eta(order: usize) -> PuiseuxSeries {
    with_lead(1, 24, product_expansion(order, |_| 1))
}

/// `η^w = q^{w/24} · (∏ (1 − qⁿ))^w` for rational `w`.
pub fn eta_pow(w: &Rat, order: usize) -> PuiseuxSeries {
    let monic = euler_product(order);
    let body = monic.pow_rat(w).expect("Euler product is monic");
    body.shift(&(w / int(24)))
}

/// Legendre symbol `(n/5)`.
pub fn legendre5(n: i64) -> i8 {
    match n.rem_euclid(5) {
        0 => 0,
        1 | 4 => 1,
        _ => -1,
    }
}

/// The Γ(5) Hauptmodul `t = q^{1/5} ∏ (1 − qⁿ)^{(n/5)}`.
pub fn haupt_t(order: usize) -> PuiseuxSeries {
    with_lead(1, 5, product_expansion(order, |n| legendre5(n as i64) as i64))
}

/// Residual of an identity together with the bound it was checked to.
#[derive(Clone, Debug)]
pub struct IdentityCheck {
    pub residual: PuiseuxSeries,
    pub requested: Rat,
}

impl IdentityCheck {
    /// Certified bound of the comparison.
    pub fn certified_to(&self) -> Rat {
        self.residual.known_to()
    }

    /// First exponent at which the residual is nonzero, if any.
    pub fn first_failure(&self) -> Option<Rat> {
        self.residual.valuation()
    }

    pub fn passes(&self) -> bool {
        self.residual.is_zero() && self.certified_to() >= self.requested
    }
}

/// `E₂ − 24·Dη/η` for supplied series.
pub fn check_e2_eta_with(e2: &PuiseuxSeries, eta: &PuiseuxSeries, order: usize) -> Result<IdentityCheck> {
    let log_deriv = eta.d().div_series(eta)?;
    Ok(IdentityCheck {
        residual: (e2 - &log_deriv.scale(&int(24))).truncated(&int(order as i64)),
        requested: int(order as i64),
    })
}

/// `12·D(E₂) − (E₂² − E₄)` for supplied series.
pub fn check_ramanujan_with(e2: &PuiseuxSeries, e4: &PuiseuxSeries, order: usize) -> IdentityCheck {
    let lhs = e2.d().scale(&int(12));
    let rhs = &(e2 * e2) - e4;
    IdentityCheck {
        residual: (&lhs - &rhs).truncated(&int(order as i64)),
        requested: int(order as i64),
    }
}

/// `E₂ = 24·Dη/η` modulo `O(q^order)`.
pub fn verify_e2_eta(order: usize) -> bool {
    let e2 = named(&SeriesName::E2, order).series;
    let eta = named(&SeriesName::Eta, order).series;
    check_e2_eta_with(&e2, &eta, order).is_ok_and(|c| c.passes())
}

/// `12·D(E₂) = E₂² − E₄` modulo `O(q^order)`.
pub fn verify_ramanujan(order: usize) -> bool {
    let e2 = named(&SeriesName::E2, order).series;
    let e4 = named(&SeriesName::E4, order).series;
    check_ramanujan_with(&e2, &e4, order).passes()
}
