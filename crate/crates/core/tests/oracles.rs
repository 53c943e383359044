//! Comparisons against independent constructions.

use num_bigint::BigInt;
use qmodular::classify::{classify, ModularityTag};
use qmodular::modular::{eta, haupt_t};
use qmodular::rat::{int, rat, Rat};

/// Euler's pentagonal theorem: ∏(1 − qⁿ) = Σ_j (−1)^j q^{j(3j−1)/2}.
#[test]
fn eta_matches_pentagonal_numbers() {
    let order = 400usize;
    let mut expect = vec![0i64; order + 1];
    for j in -40i64..=40 {
        let p = j * (3 * j - 1) / 2;
        if (0..=order as i64).contains(&p) {
            expect[p as usize] += if j % 2 == 0 { 1 } else { -1 };
        }
    }
    let s = eta(order);
    for (n, c) in expect.iter().enumerate() {
        let e = rat(1, 24) + int(n as i64);
        assert_eq!(s.coeff(&e), Some(int(*c)), "row {n}");
    }
}

fn legendre5(n: usize) -> i64 {
    match n % 5 {
        1 | 4 => 1,
        2 | 3 => -1,
        _ => 0,
    }
}

/// Dense expansion of ∏(1 − qⁿ)^{(n/5)} with the geometric series for the
/// inverse factors.
#[test]
fn hauptmodul_matches_direct_product() {
    let order = 80usize;
    let mut p = vec![BigInt::from(0); order + 1];
    p[0] = BigInt::from(1);
    for n in 1..=order {
        match legendre5(n) {
            1 => {
                for i in (n..=order).rev() {
                    let t = p[i - n].clone();
                    p[i] -= t;
                }
            }
            -1 => {
                for i in n..=order {
                    let t = p[i - n].clone();
                    p[i] += t;
                }
            }
            _ => {}
        }
    }
    let t = haupt_t(order);
    for (n, c) in p.iter().enumerate() {
        let e = rat(1, 5) + int(n as i64);
        assert_eq!(t.coeff(&e), Some(Rat::from_integer(c.clone())), "row {n}");
    }
    let head: Vec<i64> = p[..6].iter().map(|c| c.try_into().unwrap()).collect();
    assert_eq!(head, [1, -1, 1, 0, -1, 1]);
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 { a.abs() } else { gcd(b, a % b) }
}

#[test]
fn integer_table() {
    for k in 0..=600i64 {
        let m = 6 / gcd(k + 1, 6);
        let c = classify(&int(k)).unwrap();
        let expect = match k % 6 {
            5 => ModularityTag::QuasiModular,
            0 | 4 => ModularityTag::PartiallyModular,
            _ => ModularityTag::FullyModular,
        };
        assert_eq!(c.tag, expect, "k = {k}");
        assert_eq!(c.m as i64, m, "k = {k}");
        if expect == ModularityTag::FullyModular {
            assert_eq!(c.level, Some(m as u64));
        }
    }
}

#[test]
fn half_integer_table() {
    for j in (1..=599i64).step_by(2) {
        let c = classify(&rat(j, 2)).unwrap();
        // j/2 ≡ 1/2 (mod 3) ⇔ j ≡ 1 (mod 3)
        if j % 3 == 1 {
            assert_eq!((c.tag, c.level), (ModularityTag::FullyModular, Some(4)), "k = {j}/2");
        } else {
            assert_eq!(c.tag, ModularityTag::NoFullModularity, "k = {j}/2");
        }
    }
}
