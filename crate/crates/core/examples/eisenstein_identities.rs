//! E₂, E₄, η and the two identities tying them together.
//!
//!     cargo run --example eisenstein_identities -- 300

use qmodular::modular::{e2, e4, eta, verify_e2_eta, verify_ramanujan};

fn main() {
    let order: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(200);

    println!("E2  = {}", e2(6));
    println!("E4  = {}", e4(6));
    println!("eta = {}", eta(6));

    println!("E2 = 24 Dη/η       to O(q^{order}): {}", verify_e2_eta(order));
    println!("12 DE2 = E2² − E4  to O(q^{order}): {}", verify_ramanujan(order));
}
