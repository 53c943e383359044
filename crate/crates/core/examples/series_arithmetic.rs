//! Puiseux and logarithmic series arithmetic with exact rationals.

use qmodular::modular::{e4, haupt_t};
use qmodular::rat::{int, rat};
use qmodular::series::{LogSeries, PuiseuxSeries};

fn main() {
    let t = haupt_t(6);
    let inv = PuiseuxSeries::constant(int(1), &t.known_to()).div_series(&t).unwrap();
    println!("t        = {t}");
    println!("1/t      = {inv}");
    let (_, _, monic) = t.monicize().unwrap();
    println!("(t/q^(1/5))^(-1/2) = {}", monic.pow_rat(&rat(-1, 2)).unwrap());
    println!("D(E4)    = {}", e4(4).d());

    let q = PuiseuxSeries::monomial(int(1), &int(1), &int(5));
    let l = LogSeries::new(q.clone(), PuiseuxSeries::zero(&int(5)));
    println!("D(q·L)   = {:?}", l.d());
    println!("as JSON  : {}", serde_json::to_string(&t).unwrap());
}
