//! Frobenius bases at the cusp, including the logarithmic case r ∈ ℤ.

use qmodular::frobenius::{ode_residual, solve};
use qmodular::rat::{int, rat};

fn main() {
    for r in [rat(1, 5), rat(1, 2), int(1), int(2), int(3)] {
        let b = solve(&r, 40).expect("r > 0");
        let (w, single) = b.wronskian();
        println!("r = {r}");
        println!("  c  = {}", b.c);
        println!("  y1 = {}", b.y1.truncated(&(b.y1.lead_exponent() + int(3))));
        println!(
            "  y2 = {}{}",
            if b.y2.has_log() { format!("{}·L·y1 + ", b.c) } else { String::new() },
            b.y2.pure_part.truncated(&(b.y2.pure_part.lead_exponent() + int(3)))
        );
        println!("  W  = {w} (single term: {single})");
        println!(
            "  residuals vanish: {} {}",
            ode_residual(&b.y1.clone().into(), &r, 40),
            ode_residual(&b.y2, &r, 40)
        );
    }
}
