//! Modularity class of the solutions for a range of k.

use qmodular::classify::{classify, level5_ks};
use qmodular::rat::{int, rat};

fn main() {
    println!("{:>6}  {:>6}  class", "k", "r");
    let mut ks: Vec<_> = (0..=12).map(int).collect();
    ks.extend([rat(1, 2), rat(3, 2), rat(7, 2), rat(7, 6)]);
    ks.extend(level5_ks(4));
    for k in ks {
        let c = classify(&k).expect("k > -1");
        let level = c.level.map(|m| format!(" Γ({m})")).unwrap_or_default();
        println!("{:>6}  {:>6}  {:?}{level}", k.to_string(), c.r.to_string(), c.tag);
    }
}
