//! Text rendering helpers shared by the commands.

use roughmat::{ElementSet, Rational, Relation, SetFamily, Universe};

pub fn set(u: &Universe, s: ElementSet) -> String {
    u.render(s)
}

pub fn sets(u: &Universe, items: &[ElementSet]) -> String {
    let parts: Vec<String> = items.iter().map(|s| u.render(*s)).collect();
    parts.join(", ")
}

pub fn family(f: &SetFamily) -> String {
    if f.is_empty() {
        "∅".to_string()
    } else {
        f.render()
    }
}

pub fn pairs(u: &Universe, pairs: &[(usize, usize)]) -> String {
    if pairs.is_empty() {
        return "∅".to_string();
    }
    let parts: Vec<String> = pairs
        .iter()
        .map(|&(x, y)| format!("({}, {})", u.label(x), u.label(y)))
        .collect();
    format!("{{{}}}", parts.join(", "))
}

pub fn relation(r: &Relation) -> String {
    let p: Vec<(usize, usize)> = r.pairs().collect();
    pairs(r.universe(), &p)
}

pub fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// `3/5 (0.6)`, `1`, `1/3 (0.333333)` or `undefined`.
pub fn ratio(r: Option<Rational>) -> String {
    match r {
        None => "undefined".to_string(),
        Some(r) if r.is_integer() => r.to_integer().to_string(),
        Some(r) => format!("{r} ({})", decimal(r)),
    }
}

pub fn ratio_json(r: Option<Rational>) -> Option<String> {
    r.map(|r| r.to_string())
}

fn decimal(r: Rational) -> String {
    let v = *r.numer() as f64 / *r.denom() as f64;
    let s = format!("{v:.6}");
    s.trim_end_matches('0').trim_end_matches('.').to_string()
}
