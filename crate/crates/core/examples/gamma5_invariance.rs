//! t(γτ) = t(τ) for a few γ ∈ Γ(5), evaluated in 60 digits.

use qmodular::numerics::{base_points, check_gamma5_invariance, gamma5_test_set, min_im, EvalContext};

fn main() {
    for g in gamma5_test_set() {
        let pts = base_points(&g);
        let ctx = EvalContext::adaptive(60, 1e-8, min_im(&g, &pts));
        for (x, y) in &pts {
            let rep = check_gamma5_invariance(&g, (x, y), &ctx).expect("valid point");
            let again = check_gamma5_invariance(&g, (x, y), &ctx.doubled()).expect("valid point");
            println!(
                "{:?} τ = {}: |Δ| = {} (doubled: {}), {} rows",
                g.entries(),
                rep.tau,
                rep.residual,
                again.residual,
                ctx.terms
            );
        }
    }
}
