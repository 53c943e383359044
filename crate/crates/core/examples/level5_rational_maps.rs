//! The r = 2/5 and r = 3/5 solutions as rational functions of t.

use std::time::Instant;

use qmodular::rat::rat;
use qmodular::schwarz::{check_schwarz_eq, level5_solution};

fn main() {
    let order: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(200);

    for (n, label) in [(2, "t^2(t^5-7)/(7t^5+1)"), (3, "t^3(t^10-39t^5-26)/(26t^10-39t^5-1)")] {
        let start = Instant::now();
        let h = level5_solution(n, order).expect("composition");
        let r = rat(n as i64, 5);
        let check = check_schwarz_eq(&h.clone().into(), &r, order).expect("valid input");
        println!("h = {label}");
        println!("  leading terms: {}", h.truncated(&(h.lead_exponent() + rat(3, 1))));
        println!(
            "  r = {r}: residual zero through q^{} -> {} ({:.2?})",
            check.certified_to(),
            check.passes(),
            start.elapsed()
        );
    }
}
