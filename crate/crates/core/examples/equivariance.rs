//! Cross-ratio equivariance of h = y2/y1 and a projective fit of ρ(γ).

use qmodular::numerics::{
    cross_ratio_equivariance, equivariance_points, fit_rho, min_im, parity_elements, BasisQuotient,
};
use qmodular::rat::int;

fn main() {
    let pts = equivariance_points();
    for r in 1..=3 {
        for g in parity_elements(r) {
            let (h, ctx) = BasisQuotient::adaptive(&int(r), 60, 1e-6, min_im(&g, &pts)).expect("solvable");
            let rep = cross_ratio_equivariance(&h, &g, &pts, &ctx).expect("distinct values");
            println!("r = {r}, γ = {:?}: |ΔCR| = {} with {} rows", g.entries(), rep.residual, ctx.terms);
            if let Ok(fit) = fit_rho(&h, &g, &pts, &ctx) {
                let m = fit.matrix_f64();
                println!("  ρ(γ) ∝ [[{:.4?}, {:.4?}], [{:.4?}, {:.4?}]]", m[0], m[1], m[2], m[3]);
                println!("  fourth-point residual 1e{:.0}", fit.residual_log10);
            }
        }
    }
}
