use std::fmt::Write as _;

use serde::Serialize;
use vardesign::bounds::{Bound, BoundReport};
use vardesign::Rational;

/// `p/q ≈ d` with six significant digits, or just `p` for integers.
pub fn rational(x: &Rational) -> String {
    if x.is_integer() {
        x.to_string()
    } else {
        format!("{x} ≈ {}", x.to_decimal(6))
    }
}

pub fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn json<T: Serialize>(value: &T) -> anyhow::Result<String> {
    Ok(serde_json::to_string_pretty(value)? + "\n")
}

fn notes(out: &mut String, notes: &[String]) {
    if !notes.is_empty() {
        out.push_str("notes:\n");
        for n in notes {
            writeln!(out, "  {n}").unwrap();
        }
    }
}

pub fn report(r: &BoundReport) -> String {
    let mut out = String::new();
    writeln!(out, "bound: {}", r.name).unwrap();
    writeln!(out, "claim: {} {} {}", r.quantity, r.relation.symbol(), r.rhs).unwrap();
    writeln!(out, "lhs: {}", rational(&r.lhs)).unwrap();
    writeln!(out, "rhs: {}", rational(&r.rhs)).unwrap();
    writeln!(out, "slack: {}", rational(&r.slack)).unwrap();
    writeln!(out, "satisfied: {}", yes_no(r.satisfied)).unwrap();
    writeln!(out, "equality: {}", yes_no(r.equality)).unwrap();
    notes(&mut out, &r.notes);
    out
}

pub fn bound(b: &Bound) -> String {
    let mut out = String::new();
    writeln!(out, "bound: {}", b.name).unwrap();
    writeln!(out, "claim: {} {} {}", b.quantity, b.relation.symbol(), b.rhs).unwrap();
    writeln!(out, "rhs: {}", rational(&b.rhs)).unwrap();
    notes(&mut out, &b.notes);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use vardesign::ratio;

    #[test]
    fn rationals_render_with_a_decimal() {
        assert_eq!(rational(&ratio(2, 11)), "2/11 ≈ 0.181818");
        assert_eq!(rational(&ratio(-7, 1)), "-7");
        assert_eq!(rational(&ratio(225, 11)), "225/11 ≈ 20.4545");
    }
}
