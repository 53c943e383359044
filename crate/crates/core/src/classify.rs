//! Modularity of the solutions as a function of the rational parameter `k`.
//!
//! Write `r = (k+1)/6 = n/m` in lowest terms. Two independent modular
//! solutions exist exactly when `2 ≤ m ≤ 5`, with invariance group `Γ(m)`.
//! For integer `k`: `k ≡ 0, 4 (mod 6)` gives `m = 6` and only a
//! one-dimensional modular space; `k ≡ 5 (mod 6)` gives integer `r` and a
//! quasi-modular solution of weight `k + 1` and depth 1.

use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::frobenius::r_of_k;
use crate::rat::{format_rat, int, Rat};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ModularityTag {
    FullyModular,
    PartiallyModular,
    QuasiModular,
    NoFullModularity,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModularityClass {
    pub tag: ModularityTag,
    /// Denominator of `r` in lowest terms.
    pub m: u64,
    /// Numerator of `r` in lowest terms.
    pub n: u64,
    /// `Some(m)` for the fully modular case: the invariance group is `Γ(m)`.
    pub level: Option<u64>,
    pub r: Rat,
    /// Weight `k + 1` of the depth-one quasi-modular solution.
    pub quasi_weight: Option<Rat>,
}

impl ModularityClass {
    pub fn to_json(&self) -> serde_json::Value {
        let mut v = serde_json::json!({
            "tag": self.tag,
            "m": self.m,
            "n": self.n,
            "level": self.level,
            "r": format_rat(&self.r),
        });
        if let Some(w) = &self.quasi_weight {
            v["weight"] = serde_json::Value::String(format_rat(w));
            v["depth"] = serde_json::Value::from(1);
        }
        v
    }
}

pub fn classify(k: &Rat) -> Result<ModularityClass> {
    let r = r_of_k(k);
    if r <= Rat::zero() {
        return Err(Error::NonPositiveR(format_rat(&r)));
    }
    let too_big = || Error::OutOfRange(format!("k = {}", format_rat(k)));
    let n = r.numer().to_u64().ok_or_else(too_big)?;
    let m = r.denom().to_u64().ok_or_else(too_big)?;
    let k_integral = k.is_integer();
    let tag = match m {
        1 => ModularityTag::QuasiModular,
        2..=5 => ModularityTag::FullyModular,
        6 if k_integral => ModularityTag::PartiallyModular,
        _ => ModularityTag::NoFullModularity,
    };
    Ok(ModularityClass {
        tag,
        m,
        n,
        level: (tag == ModularityTag::FullyModular).then_some(m),
        quasi_weight: (tag == ModularityTag::QuasiModular).then(|| k + Rat::one()),
        r,
    })
}

/// `k = 6n/5 − 1` for `1 ≤ n ≤ bound`, `5 ∤ n`.
pub fn level5_ks(bound: u64) -> Vec<Rat> {
    (1..=bound)
        .filter(|n| !n.is_multiple_of(&5))
        .map(|n| Rat::new((6 * n as i64).into(), 5.into()) - Rat::one())
        .collect()
}

/// `k mod 6` for integral `k`.
pub fn residue_mod6(k: &Rat) -> Option<i64> {
    k.is_integer()
        .then(|| k.to_integer().mod_floor(&6.into()).to_i64())
        .flatten()
}

/// `true` when `k` is a half-integer congruent to `1/2` modulo 3.
pub fn is_half_integer_one_half_mod3(k: &Rat) -> bool {
    if *k.denom() != 2.into() {
        return false;
    }
    let shifted = k - Rat::new(1.into(), 2.into());
    let ratio = shifted / int(3);
    ratio.is_integer()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    #[test]
    fn paper_cases() {
        let c = classify(&rat(1, 5)).unwrap();
        assert_eq!((c.tag, c.m, c.n, c.level), (ModularityTag::FullyModular, 5, 1, Some(5)));
        assert_eq!(classify(&int(4)).unwrap().tag, ModularityTag::PartiallyModular);
        let q = classify(&int(5)).unwrap();
        assert_eq!(q.tag, ModularityTag::QuasiModular);
        assert_eq!(q.r, int(1));
        assert_eq!(q.quasi_weight, Some(int(6)));
        let c = classify(&int(2)).unwrap();
        assert_eq!((c.tag, c.m), (ModularityTag::FullyModular, 2));
        let c = classify(&rat(1, 2)).unwrap();
        assert_eq!((c.tag, c.m), (ModularityTag::FullyModular, 4));
        let c = classify(&rat(7, 6)).unwrap();
        assert_eq!((c.tag, c.m, c.n), (ModularityTag::NoFullModularity, 36, 13));
        let c = classify(&rat(3, 2)).unwrap();
        assert_eq!(c.tag, ModularityTag::NoFullModularity);
    }

    #[test]
    fn domain() {
        assert!(matches!(classify(&int(-1)), Err(Error::NonPositiveR(_))));
        assert!(matches!(classify(&int(-2)), Err(Error::NonPositiveR(_))));
        assert!(classify(&rat(-1, 2)).is_ok());
    }

    #[test]
    fn level5_list() {
        assert_eq!(level5_ks(4), vec![rat(1, 5), rat(7, 5), rat(13, 5), rat(19, 5)]);
        assert!(!level5_ks(10).contains(&int(5)));
        for k in level5_ks(30) {
            assert_eq!(classify(&k).unwrap().m, 5);
        }
    }

    #[test]
    fn helpers() {
        assert_eq!(residue_mod6(&int(11)), Some(5));
        assert_eq!(residue_mod6(&rat(1, 2)), None);
        assert!(is_half_integer_one_half_mod3(&rat(1, 2)));
        assert!(is_half_integer_one_half_mod3(&rat(7, 2)));
        assert!(!is_half_integer_one_half_mod3(&rat(3, 2)));
    }
}
