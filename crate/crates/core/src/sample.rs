//! Small named instances used by tests, benches and the CLI fixtures.

use crate::family::SetFamily;
use crate::relation::Relation;
use crate::universe::Universe;

fn rel(n: usize, pairs: &[(&str, &str)]) -> Relation {
    Relation::new(&Universe::alphabetic(n).unwrap(), pairs).unwrap()
}

fn family(n: usize, sets: &[&[&str]]) -> SetFamily {
    let sets: Vec<Vec<&str>> = sets.iter().map(|s| s.to_vec()).collect();
    SetFamily::from_labels(&Universe::alphabetic(n).unwrap(), &sets).unwrap()
}

/// Every pair among `class` (including the diagonal).
fn class_pairs<'a>(class: &[&'a str]) -> Vec<(&'a str, &'a str)> {
    class
        .iter()
        .flat_map(|x| class.iter().map(move |y| (*x, *y)))
        .collect()
}

/// On `{a, …, f}`: classes `{a, b, d}`, `{c}`, `{e}`; `f` isolated.
pub fn six_element_relation() -> Relation {
    let mut pairs = class_pairs(&["a", "b", "d"]);
    pairs.extend([("c", "c"), ("e", "e")]);
    rel(6, &pairs)
}

/// On `{a, b, c}`: the single class `{a, b}`; `c` isolated.
pub fn ab_class_on_abc() -> Relation {
    rel(3, &class_pairs(&["a", "b"]))
}

/// On `{a, b, c}`: the single class `{a, c}`; `b` isolated.
pub fn ac_class_on_abc() -> Relation {
    rel(3, &class_pairs(&["a", "c"]))
}

/// On `{a, b, c, d}`: the single class `{a, b, c}`; `d` isolated.
pub fn abc_class_on_abcd() -> Relation {
    rel(4, &class_pairs(&["a", "b", "c"]))
}

/// On `{a, b, c, d}`: the single class `{a, b, d}`; `c` isolated.
pub fn abd_class_on_abcd() -> Relation {
    rel(4, &class_pairs(&["a", "b", "d"]))
}

/// The full equivalence relation on `{a, b, c}`.
pub fn full_on_abc() -> Relation {
    rel(3, &class_pairs(&["a", "b", "c"]))
}

/// `{∅, {a}, {b}, {c}, {a, c}, {b, c}}` on `{a, b, c}`.
pub fn independents_ac_bc() -> SetFamily {
    family(3, &[&[], &["a"], &["b"], &["c"], &["a", "c"], &["b", "c"]])
}

/// `{∅, {a}, {b}, {c}, {a, b}, {b, c}}` on `{a, b, c}`.
pub fn independents_ab_bc() -> SetFamily {
    family(3, &[&[], &["a"], &["b"], &["c"], &["a", "b"], &["b", "c"]])
}
