//! The Γ(5) Hauptmodul t and its q-Schwarzian.

use qmodular::modular::haupt_t;
use qmodular::rat::rat;
use qmodular::schwarz::{check_schwarz_eq, q_schwarz, SchwarzInput};

fn main() {
    let order: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(300);

    let t = haupt_t(8);
    println!("t      = {t}");
    let s = q_schwarz(&SchwarzInput::Pure(t)).expect("Dt is nonzero");
    println!("S_q(t) = {s}");
    println!("       = -(1/50) E4 up to truncation");

    let h = SchwarzInput::Pure(haupt_t(order + 1));
    let check = check_schwarz_eq(&h, &rat(1, 5), order).expect("valid input");
    println!(
        "S_q(t) + E4/50 vanishes through q^{}: {}",
        check.certified_to(),
        check.passes()
    );
}
