//! Named verification checks. Each name maps to one library operation; the
//! report carries the residual data the decision was made on.

use num_traits::{One, Zero};
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::frobenius::{
    kk_residual_check, ode_residual_check, r_of_k, solutions_from_h, solve, with_eta_power, ResidualCheck,
};
use crate::modular::{check_e2_eta_with, check_ramanujan_with, haupt_t, named, IdentityCheck, SeriesName};
use crate::numerics::{
    base_points, check_gamma5_invariance, cross_ratio_equivariance, equivariance_points, fit_rho,
    gamma5_test_set, min_im, parity_elements, BasisQuotient, EvalContext, NumericReport, TAIL_WINDOW,
};
use crate::rat::{format_rat, int, rat, Rat};
use crate::schwarz::{check_schwarz_eq, level5_solution, SchwarzCheck};
use crate::series::{LogSeries, PuiseuxSeries};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckKind {
    Exact,
    Numeric,
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct CheckDescriptor {
    pub name: &'static str,
    pub kind: CheckKind,
    /// Flags the check reads besides `--order`.
    pub parameters: &'static [&'static str],
    pub summary: &'static str,
}

pub const CATALOG: &[CheckDescriptor] = &[
    CheckDescriptor {
        name: "ramanujan-e2",
        kind: CheckKind::Exact,
        parameters: &[],
        summary: "12·D(E2) = E2² − E4",
    },
    CheckDescriptor {
        name: "eta-e2",
        kind: CheckKind::Exact,
        parameters: &[],
        summary: "E2 = 24·Dη/η",
    },
    CheckDescriptor {
        name: "hauptmodul-schwarz",
        kind: CheckKind::Exact,
        parameters: &[],
        summary: "S_q(t) = −(1/50)·E4",
    },
    CheckDescriptor {
        name: "rational-map-7-5",
        kind: CheckKind::Exact,
        parameters: &[],
        summary: "S_q(t²(t⁵−7)/(7t⁵+1)) = −(2/25)·E4",
    },
    CheckDescriptor {
        name: "rational-map-13-5",
        kind: CheckKind::Exact,
        parameters: &[],
        summary: "S_q(t³(t¹⁰−39t⁵−26)/(26t¹⁰−39t⁵−1)) = −(9/50)·E4",
    },
    CheckDescriptor {
        name: "ode-roundtrip",
        kind: CheckKind::Exact,
        parameters: &["k", "r"],
        summary: "solved bases satisfy the normal form; solutions from t lie in the span of solve(1/5)",
    },
    CheckDescriptor {
        name: "wronskian",
        kind: CheckKind::Exact,
        parameters: &["k", "r"],
        summary: "y1·Dy2 − y2·Dy1 = −r, and c ≠ 0 for integer r",
    },
    CheckDescriptor {
        name: "kk-residual",
        kind: CheckKind::Exact,
        parameters: &["k", "perturb"],
        summary: "η^{2(k+1)}·y solves the E2 form of the equation",
    },
    CheckDescriptor {
        name: "exponent-probe",
        kind: CheckKind::Exact,
        parameters: &["k"],
        summary: "which of η^{2k+1}, η^{2(k+1)} turns the level-5 solutions into solutions",
    },
    CheckDescriptor {
        name: "gamma5-invariance",
        kind: CheckKind::Numeric,
        parameters: &["tolerance", "precision", "terms"],
        summary: "t(γτ) = t(τ) for five elements of Γ(5), plus a doubling check",
    },
    CheckDescriptor {
        name: "equivariance",
        kind: CheckKind::Numeric,
        parameters: &["r", "tolerance", "precision", "terms"],
        summary: "cross-ratios of y2/y1 are preserved by S, ST or (ST)², plus a doubling check",
    },
];

pub fn descriptor(name: &str) -> Option<&'static CheckDescriptor> {
    CATALOG.iter().find(|d| d.name == name)
}

#[derive(Clone, Debug)]
pub struct CheckParams {
    pub order: usize,
    pub k: Option<Rat>,
    pub r: Option<Rat>,
    pub tolerance: f64,
    pub precision: u32,
    pub terms: Option<usize>,
    pub perturb: bool,
}

impl Default for CheckParams {
    fn default() -> Self {
        CheckParams {
            order: 200,
            k: None,
            r: None,
            tolerance: 1e-8,
            precision: 60,
            terms: None,
            perturb: false,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub check: String,
    pub kind: CheckKind,
    pub pass: bool,
    pub details: Value,
}

pub fn run_check(name: &str, p: &CheckParams) -> Result<CheckReport> {
    let d = descriptor(name).ok_or_else(|| Error::OutOfRange(format!("unknown check `{name}`")))?;
    let (pass, details) = match name {
        "ramanujan-e2" => identity(ramanujan(p.order)),
        "eta-e2" => identity(eta_e2(p.order)?),
        "hauptmodul-schwarz" => schwarz(1, p.order)?,
        "rational-map-7-5" => schwarz(2, p.order)?,
        "rational-map-13-5" => schwarz(3, p.order)?,
        "ode-roundtrip" => ode_roundtrip(p)?,
        "wronskian" => wronskian(p)?,
        "kk-residual" => kk(p)?,
        "exponent-probe" => exponent_probe(p)?,
        "gamma5-invariance" => gamma5(p)?,
        "equivariance" => equivariance(p)?,
        _ => unreachable!("catalog and dispatch disagree on `{name}`"),
    };
    Ok(CheckReport {
        check: name.to_string(),
        kind: d.kind,
        pass,
        details,
    })
}

fn ramanujan(order: usize) -> IdentityCheck {
    let e2 = named(&SeriesName::E2, order).series;
    let e4 = named(&SeriesName::E4, order).series;
    check_ramanujan_with(&e2, &e4, order)
}

fn eta_e2(order: usize) -> Result<IdentityCheck> {
    let e2 = named(&SeriesName::E2, order).series;
    let eta = named(&SeriesName::Eta, order).series;
    check_e2_eta_with(&e2, &eta, order)
}

/// Summary of a residual that should vanish.
fn residual_json(res: &PuiseuxSeries) -> Value {
    json!({
        "certified_to": format_rat(&res.known_to()),
        "nonzero_terms": res.terms().count(),
        "first_failure": res.valuation().map(|v| format_rat(&v)),
    })
}

fn log_residual_json(c: &ResidualCheck) -> Value {
    json!({
        "requested": format_rat(&c.requested),
        "log_part": residual_json(&c.residual.log_part),
        "pure_part": residual_json(&c.residual.pure_part),
        "pass": c.passes(),
    })
}

fn identity(c: IdentityCheck) -> (bool, Value) {
    let mut v = residual_json(&c.residual);
    v["requested"] = json!(format_rat(&c.requested));
    (c.passes(), v)
}

fn schwarz_json(c: &SchwarzCheck) -> Value {
    let mut v = residual_json(&c.residual);
    v["requested"] = json!(format_rat(&c.requested));
    v
}

fn schwarz(n: u32, order: usize) -> Result<(bool, Value)> {
    let h = level5_solution(n, order)?;
    let r = rat(n as i64, 5);
    let c = check_schwarz_eq(&h.into(), &r, order)?;
    let mut v = schwarz_json(&c);
    v["r"] = json!(format_rat(&r));
    Ok((c.passes(), v))
}

/// `--r`, else `(k+1)/6` from `--k`, else the defaults.
fn r_values(p: &CheckParams, defaults: &[Rat]) -> Vec<Rat> {
    match (&p.r, &p.k) {
        (Some(r), _) => vec![r.clone()],
        (None, Some(k)) => vec![r_of_k(k)],
        _ => defaults.to_vec(),
    }
}

fn ode_roundtrip(p: &CheckParams) -> Result<(bool, Value)> {
    let defaults = [rat(1, 5), rat(2, 5), rat(1, 2), rat(3, 4), int(1), int(2), int(3)];
    let mut all = true;
    let mut rows = Vec::new();
    let rs = r_values(p, &defaults);
    for r in &rs {
        let r = r.clone();
        let b = solve(&r, p.order)?;
        let c1 = ode_residual_check(&b.y1.clone().into(), &r, p.order);
        let c2 = ode_residual_check(&b.y2, &r, p.order);
        all &= c1.passes() && c2.passes();
        rows.push(json!({
            "r": format_rat(&r),
            "y1": log_residual_json(&c1),
            "y2": log_residual_json(&c2),
        }));
    }
    let mut v = json!({ "bases": rows });
    if rs.contains(&rat(1, 5)) {
        let (ok, span) = span_check(p.order)?;
        all &= ok;
        v["span"] = span;
    }
    Ok((all, v))
}

/// `solutions_from_h(t)` as rational combinations of `solve(1/5)`.
fn span_check(order: usize) -> Result<(bool, Value)> {
    let r = rat(1, 5);
    let (z1, z2) = solutions_from_h(&haupt_t(order + 1))?;
    let basis = solve(&r, order + 1)?;
    let mut ok = true;
    let mut out = Vec::new();
    for (label, z) in [("h/sqrt(h')", &z1), ("1/sqrt(h')", &z2)] {
        let residual = ode_residual_check(&z.clone().into(), &r, order);
        let coeffs = basis.decompose(z);
        ok &= coeffs.is_some() && residual.passes();
        out.push(json!({
            "solution": label,
            "residual": log_residual_json(&residual),
            "coefficients": coeffs.map(|(a, b)| [format_rat(&a), format_rat(&b)]),
        }));
    }
    Ok((ok, Value::Array(out)))
}

fn wronskian(p: &CheckParams) -> Result<(bool, Value)> {
    let defaults = [
        rat(1, 5),
        rat(2, 5),
        rat(3, 5),
        rat(1, 2),
        rat(3, 4),
        int(1),
        int(2),
        int(3),
        rat(7, 6),
        rat(13, 36),
    ];
    let mut all = true;
    let mut rows = Vec::new();
    for r in r_values(p, &defaults) {
        let b = solve(&r, p.order)?;
        let (c0, single) = b.wronskian();
        let resonant_ok = !r.is_integer() || !b.c.is_zero();
        let ok = single && c0 == -&r && resonant_ok;
        all &= ok;
        rows.push(json!({
            "r": format_rat(&r),
            "constant": format_rat(&c0),
            "single_term": single,
            "c": format_rat(&b.c),
            "beta0": format_rat(b.y2.pure_part.leading_coeff().unwrap_or(&Rat::zero())),
            "pass": ok,
        }));
    }
    Ok((all, json!({ "bases": rows })))
}

/// Adds `q^{v+1}` to a nonzero series with valuation `v`.
fn perturbed(f: &LogSeries) -> LogSeries {
    let p = &f.pure_part;
    let e = p.valuation().unwrap_or_else(Rat::zero) + Rat::one();
    let bump = PuiseuxSeries::monomial(Rat::one(), &e, &p.known_to());
    LogSeries::new(f.log_part.clone(), p + &bump)
}

fn kk(p: &CheckParams) -> Result<(bool, Value)> {
    let ks = match &p.k {
        Some(k) => vec![k.clone()],
        None => vec![rat(1, 5), rat(7, 5), rat(13, 5), int(2), int(5)],
    };
    let mut all = true;
    let mut rows = Vec::new();
    for k in ks {
        let r = r_of_k(&k);
        let b = solve(&r, p.order)?;
        let (mut f1, f2) = b.to_f(&k)?;
        if p.perturb {
            f1 = perturbed(&f1);
        }
        let c1 = kk_residual_check(&f1, &k, p.order);
        let c2 = kk_residual_check(&f2, &k, p.order);
        all &= c1.passes() && c2.passes();
        rows.push(json!({
            "k": format_rat(&k),
            "r": format_rat(&r),
            "logarithmic": f2.has_log(),
            "f1": log_residual_json(&c1),
            "f2": log_residual_json(&c2),
        }));
    }
    Ok((all, json!({ "perturbed": p.perturb, "cases": rows })))
}

fn exponent_probe(p: &CheckParams) -> Result<(bool, Value)> {
    let k = p.k.clone().unwrap_or_else(|| rat(1, 5));
    let r = r_of_k(&k);
    let n = [rat(1, 5), rat(2, 5), rat(3, 5)]
        .iter()
        .position(|x| *x == r)
        .ok_or_else(|| Error::OutOfRange(format!("exponent probe needs k ∈ {{1/5, 7/5, 13/5}}, got {}", format_rat(&k))))?;
    let h = level5_solution(n as u32 + 1, p.order + 1)?;
    let (y1, y2) = solutions_from_h(&h)?;
    let wanted = int(2) * (&k + Rat::one());
    let other = int(2) * &k + Rat::one();
    let mut probes = Vec::new();
    let mut vanishing = Vec::new();
    for w in [&other, &wanted] {
        let f1 = with_eta_power(&y1.clone().into(), w);
        let f2 = with_eta_power(&y2.clone().into(), w);
        let c1 = kk_residual_check(&f1, &k, p.order);
        let c2 = kk_residual_check(&f2, &k, p.order);
        let vanishes = c1.passes() && c2.passes();
        if vanishes {
            vanishing.push(format_rat(w));
        }
        probes.push(json!({
            "exponent": format_rat(w),
            "vanishes": vanishes,
            "f1": log_residual_json(&c1),
            "f2": log_residual_json(&c2),
        }));
    }
    let pass = vanishing == [format_rat(&wanted)];
    Ok((
        pass,
        json!({ "k": format_rat(&k), "vanishing_exponents": vanishing, "probes": probes }),
    ))
}

fn doubled_ok(first: &NumericReport, second: &NumericReport) -> bool {
    second.residual_log10 <= first.residual_log10 - 1.0 || second.residual_log10 == f64::NEG_INFINITY
}

fn numeric_row(first: &NumericReport, second: &NumericReport, terms: usize) -> (bool, Value) {
    let doubling = doubled_ok(first, second);
    let mut v = serde_json::to_value(first).expect("report serializes");
    v["terms"] = json!(terms);
    v["doubled_residual"] = json!(second.residual);
    v["doubling_ok"] = json!(doubling);
    v["pass"] = json!(first.pass && doubling);
    (first.pass && doubling, v)
}

fn gamma5(p: &CheckParams) -> Result<(bool, Value)> {
    let mut all = true;
    let mut rows = Vec::new();
    for g in gamma5_test_set() {
        let pts = base_points(&g);
        let ctx = match p.terms {
            Some(terms) => EvalContext {
                precision: p.precision,
                terms,
                tol: p.tolerance,
            },
            None => EvalContext::adaptive(p.precision, p.tolerance, min_im(&g, &pts)),
        };
        for (x, y) in &pts {
            let first = check_gamma5_invariance(&g, (x, y), &ctx)?;
            let second = check_gamma5_invariance(&g, (x, y), &ctx.doubled())?;
            let (ok, row) = numeric_row(&first, &second, ctx.terms);
            all &= ok;
            rows.push(row);
        }
    }
    Ok((all, json!({ "results": rows })))
}

fn equivariance(p: &CheckParams) -> Result<(bool, Value)> {
    let rs = match &p.r {
        Some(r) => vec![r.clone()],
        None => vec![int(1), int(2), int(3)],
    };
    let mut all = true;
    let mut rows = Vec::new();
    for r in rs {
        if !r.is_integer() || r <= Rat::zero() {
            return Err(Error::OutOfRange(format!("equivariance needs a positive integer r, got {}", format_rat(&r))));
        }
        let ri: i64 = r.to_integer().try_into().map_err(|_| Error::OutOfRange(format_rat(&r)))?;
        let pts = equivariance_points();
        for g in parity_elements(ri) {
            let lowest = min_im(&g, &pts);
            let (h, ctx) = match p.terms {
                Some(terms) => (
                    BasisQuotient::for_r(&r, 2 * terms + TAIL_WINDOW)?,
                    EvalContext {
                        precision: p.precision,
                        terms,
                        tol: p.tolerance,
                    },
                ),
                None => BasisQuotient::adaptive(&r, p.precision, p.tolerance, lowest)?,
            };
            let first = cross_ratio_equivariance(&h, &g, &pts, &ctx)?;
            let second = cross_ratio_equivariance(&h, &g, &pts, &ctx.doubled())?;
            let (ok, mut row) = numeric_row(&first, &second, ctx.terms);
            row["r"] = json!(format_rat(&r));
            if let Ok(fit) = fit_rho(&h, &g, &pts, &ctx) {
                row["rho"] = json!(fit.matrix_f64().map(|(re, im)| [re, im]));
                row["rho_residual_log10"] = json!(fit.residual_log10);
            }
            all &= ok;
            rows.push(row);
        }
    }
    Ok((all, json!({ "results": rows })))
}
