//! Text and JSON renderings of series.
//!
//! JSON: `{"ram": N, "lead": a, "coeffs": ["p/q", ...]}` for a
//! [`PuiseuxSeries`] and `{"log_part": {...}, "pure_part": {...}}` for a
//! [`LogSeries`]. Rationals are exact strings, so a round trip is bit-exact.

use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::rat::{format_rat, parse_rat, Rat};
use crate::series::{LogSeries, PuiseuxSeries};

#[derive(Serialize, Deserialize)]
struct SeriesRepr {
    ram: u64,
    lead: i64,
    coeffs: Vec<String>,
}

impl Serialize for PuiseuxSeries {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        SeriesRepr {
            ram: self.ram(),
            lead: self.lead(),
            coeffs: self.coeffs().iter().map(format_rat).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for PuiseuxSeries {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = SeriesRepr::deserialize(deserializer)?;
        if repr.ram == 0 {
            return Err(D::Error::custom("ram must be positive"));
        }
        let coeffs = repr
            .coeffs
            .iter()
            .map(|s| parse_rat(s))
            .collect::<Result<Vec<_>, _>>()
            .map_err(D::Error::custom)?;
        Ok(PuiseuxSeries::from_parts(repr.ram, repr.lead, coeffs))
    }
}

#[derive(Serialize, Deserialize)]
struct LogRepr {
    log_part: PuiseuxSeries,
    pure_part: PuiseuxSeries,
}

impl Serialize for LogSeries {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        LogRepr {
            log_part: self.log_part.clone(),
            pure_part: self.pure_part.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for LogSeries {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = LogRepr::deserialize(deserializer)?;
        Ok(LogSeries::new(repr.log_part, repr.pure_part))
    }
}

fn power(e: &Rat) -> String {
    if e.is_zero() {
        String::new()
    } else if e.is_one() {
        "q".to_string()
    } else if e.is_integer() && e.is_positive() {
        format!("q^{}", e.numer())
    } else {
        format!("q^({})", format_rat(e))
    }
}

/// `1 + 240q + 2160q^2 + O(q^3)`; non-integral exponents and coefficients
/// are parenthesized, e.g. `(1/5)q^(1/5)`.
pub fn to_text(s: &PuiseuxSeries) -> String {
    let mut out = String::new();
    for (e, c) in s.terms() {
        let negative = c.is_negative();
        let mag = c.abs();
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let mono = power(&e);
        if mono.is_empty() {
            out.push_str(&format_rat(&mag));
        } else {
            if !mag.is_one() {
                if mag.is_integer() {
                    out.push_str(&mag.numer().to_string());
                } else {
                    out.push_str(&format!("({})", format_rat(&mag)));
                }
            }
            out.push_str(&mono);
        }
    }
    if !out.is_empty() {
        out.push_str(" + ");
    }
    let bound = s.known_to();
    let o = if bound.is_zero() { "1".to_string() } else { power(&bound) };
    out.push_str(&format!("O({o})"));
    out
}

pub fn log_to_text(s: &LogSeries) -> String {
    format!("({})·L + ({})", to_text(&s.log_part), to_text(&s.pure_part))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{int, rat};

    #[test]
    fn text_rendering() {
        let s = PuiseuxSeries::from_terms(
            vec![(int(0), int(1)), (int(1), int(240)), (int(2), int(2160)), (int(3), int(6720))],
            &int(4),
        );
        assert_eq!(to_text(&s), "1 + 240q + 2160q^2 + 6720q^3 + O(q^4)");
        let t = PuiseuxSeries::from_terms(
            vec![(rat(1, 5), int(1)), (rat(6, 5), int(-1)), (rat(-1, 2), rat(-3, 7))],
            &rat(11, 5),
        );
        assert_eq!(to_text(&t), "-(3/7)q^(-1/2) + q^(1/5) - q^(6/5) + O(q^(11/5))");
        assert_eq!(to_text(&PuiseuxSeries::zero(&int(3))), "O(q^3)");
    }

    #[test]
    fn json_shape() {
        let t = PuiseuxSeries::from_terms(vec![(rat(1, 5), int(1)), (rat(6, 5), int(-1))], &rat(11, 5));
        let j = serde_json::to_string(&t).unwrap();
        assert_eq!(j, r#"{"ram":5,"lead":1,"coeffs":["1","0","0","0","0","-1","0","0","0","0"]}"#);
        let back: PuiseuxSeries = serde_json::from_str(&j).unwrap();
        assert_eq!(serde_json::to_string(&back).unwrap(), j);
    }
}
