//! From the normal form back to the E₂ form via f = η^{2(k+1)}·y, and the
//! probe that separates the exponents 2k+1 and 2(k+1).

use qmodular::frobenius::{kk_residual, r_of_k, solutions_from_h, solve, with_eta_power};
use qmodular::rat::{int, rat};
use qmodular::schwarz::level5_solution;

fn main() {
    let order = 100;
    for k in [rat(1, 5), rat(7, 5), rat(13, 5), int(2), int(5)] {
        let b = solve(&r_of_k(&k), order).expect("k > -1");
        let (f1, f2) = b.to_f(&k).expect("consistent k");
        println!(
            "k = {k}: f1 {}, f2 {}{}",
            kk_residual(&f1, &k, order),
            kk_residual(&f2, &k, order),
            if f2.has_log() { " (logarithmic)" } else { "" }
        );
    }

    let k = rat(1, 5);
    let (y1, y2) = solutions_from_h(&level5_solution(1, order + 1).unwrap()).unwrap();
    for w in [int(2) * &k + int(1), int(2) * (&k + int(1))] {
        let ok = kk_residual(&with_eta_power(&y1.clone().into(), &w), &k, order)
            && kk_residual(&with_eta_power(&y2.clone().into(), &w), &k, order);
        println!("η^{w}·(Dt)^(-1/2) family solves the k = 1/5 equation: {ok}");
    }
}
