//! The two constructions linking relations and matroids.
//!
//! A symmetric and transitive relation `R` induces the matroid `M(R)` whose
//! circuits are the unordered related pairs `{x, y}`, `x ≠ y`. Conversely a
//! matroid `M` induces `R(M)`: `x R(M) y` iff `{x, y}` is a circuit or `x = y`.
//!
//! [`circuit_approx`] recovers the lower and upper approximations of `R` from
//! the circuits of `M(R)` alone (plus the diagonal and emptiness of
//! neighborhoods). The lower formula is
//!
//! ```text
//! lower(X) = {x ∈ X | r(x) = {x}}
//!          ∪ ⋃{C ∈ C(R) | every circuit meeting C lies in X}
//!          ∪ {x ∈ U | r(x) = ∅}
//! ```
//!
//! and the upper one is `⋃{C | C ∩ X ≠ ∅} ∪ {x ∈ X | x ∈ r(x)}`. Both are
//! checked against [`crate::rough`] exhaustively in the test suite.

use crate::error::{Error, Result};
use crate::family::SetFamily;
use crate::matroid::{check_circuit_axioms, Matroid};
use crate::relation::Relation;
use crate::rough::{check_query, ApproxReport};
use crate::universe::{ElementSet, Universe, ENUMERATION_CAP};

/// `{{x, y} | x ≠ y, (x, y) ∈ R}` for a symmetric and transitive `R`.
pub fn circuits_from_relation(rel: &Relation) -> Result<SetFamily> {
    rel.require_per()?;
    let pairs = rel
        .pairs()
        .filter(|&(x, y)| x < y)
        .map(|(x, y)| ElementSet::from_indices([x, y]));
    SetFamily::new(rel.universe(), pairs)
}

/// `M(R)` together with its source relation and 2-element circuit family.
#[derive(Clone, Debug)]
pub struct InducedMatroid {
    source: Relation,
    matroid: Matroid,
    circuits: SetFamily,
    /// Union of the circuits through each element.
    stars: Vec<ElementSet>,
}

pub fn induced_matroid(rel: &Relation) -> Result<InducedMatroid> {
    let circuits = circuits_from_relation(rel)?;
    let universe = rel.universe();
    let matroid = if universe.len() <= ENUMERATION_CAP {
        Matroid::from_circuits(universe, circuits.clone())?
    } else {
        // past the axiom-check cap; pair families of a PER always satisfy the axioms
        Matroid::circuits_unchecked(circuits.clone())
    };
    let mut stars = vec![ElementSet::EMPTY; universe.len()];
    for &c in circuits.members() {
        for x in c.iter() {
            stars[x] = stars[x].union(c);
        }
    }
    Ok(InducedMatroid {
        source: rel.clone(),
        matroid,
        circuits,
        stars,
    })
}

impl InducedMatroid {
    pub fn source(&self) -> &Relation {
        &self.source
    }

    pub fn matroid(&self) -> &Matroid {
        &self.matroid
    }

    pub fn circuits(&self) -> &SetFamily {
        &self.circuits
    }

    pub fn universe(&self) -> &Universe {
        self.source.universe()
    }

    /// The explicit independence family `I(R)`.
    pub fn independents(&self) -> Result<SetFamily> {
        self.matroid.independents()
    }
}

/// Lower and upper approximations of `X` computed from the circuits of `M(R)`.
pub fn circuit_approx(ind: &InducedMatroid, x: ElementSet) -> Result<ApproxReport> {
    let universe = ind.universe();
    check_query(universe, x)?;
    let rel = &ind.source;

    let mut touching = ElementSet::EMPTY; // Y1
    let mut enclosed = ElementSet::EMPTY; // Y3
    for &c in ind.circuits.members() {
        if c.intersects(x) {
            touching = touching.union(c);
        }
        if c.iter().all(|e| ind.stars[e].is_subset(x)) {
            enclosed = enclosed.union(c);
        }
    }
    let reflexive_in_x = ElementSet::from_indices(x.iter().filter(|&e| rel.contains(e, e))); // Y2
    let singleton_in_x = ElementSet::from_indices(
        x.iter()
            .filter(|&e| rel.successors(e) == ElementSet::singleton(e)),
    );
    let isolated = rel.isolated();

    let upper = touching.union(reflexive_in_x);
    let lower = singleton_in_x.union(enclosed).union(isolated);
    Ok(ApproxReport::from_parts(x, lower, upper))
}

/// `R(M)`: the diagonal plus every pair forming a 2-element circuit.
/// Larger circuits contribute nothing.
pub fn induced_relation(m: &Matroid) -> Result<Relation> {
    let circuits = m.circuits();
    if m.universe().len() <= ENUMERATION_CAP {
        let report = check_circuit_axioms(&circuits)?;
        if !report.valid {
            let detail = report.describe(m.universe());
            return Err(Error::InvalidCircuitFamily { report, detail });
        }
    }
    let mut rows: Vec<ElementSet> = (0..m.universe().len()).map(ElementSet::singleton).collect();
    for c in circuits.members().iter().filter(|c| c.len() == 2) {
        let (x, y) = (c.iter().next().unwrap(), c.iter().nth(1).unwrap());
        rows[x].insert(y);
        rows[y].insert(x);
    }
    Ok(Relation::from_rows(m.universe(), rows))
}

/// `R(M(R))` next to the expected `R ∪ Δ`.
#[derive(Clone, Debug)]
pub struct RoundTrip {
    pub regenerated: Relation,
    pub expected: Relation,
}

impl RoundTrip {
    pub fn holds(&self) -> bool {
        self.regenerated == self.expected
    }

    /// Pairs present in `R(M(R))` but not in `R`.
    pub fn added(&self, original: &Relation) -> Vec<(usize, usize)> {
        self.regenerated
            .pairs()
            .filter(|&(x, y)| !original.contains(x, y))
            .collect()
    }
}

pub fn round_trip(rel: &Relation) -> Result<RoundTrip> {
    let ind = induced_matroid(rel)?;
    let regenerated = induced_relation(&ind.matroid)?;
    let expected = rel.union(&Relation::diagonal(rel.universe()))?;
    Ok(RoundTrip {
        regenerated,
        expected,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rough::{approx_report, Rational};
    use crate::sample;

    fn fam(u: &Universe, sets: &[&[&str]]) -> SetFamily {
        let sets: Vec<Vec<&str>> = sets.iter().map(|s| s.to_vec()).collect();
        SetFamily::from_labels(u, &sets).unwrap()
    }

    #[test]
    fn circuits_from_relation_examples() {
        let r = sample::ab_class_on_abc();
        assert_eq!(
            circuits_from_relation(&r).unwrap(),
            fam(r.universe(), &[&["a", "b"]])
        );
        let r = sample::six_element_relation();
        assert_eq!(
            circuits_from_relation(&r).unwrap(),
            fam(r.universe(), &[&["a", "b"], &["a", "d"], &["b", "d"]])
        );
        let u = Universe::alphabetic(3).unwrap();
        assert!(circuits_from_relation(&Relation::empty(&u))
            .unwrap()
            .is_empty());
        let bad = Relation::new(&u, &[("a", "b")]).unwrap();
        assert!(matches!(
            circuits_from_relation(&bad),
            Err(Error::NotSymmetricTransitive(_))
        ));
    }

    #[test]
    fn induced_matroid_examples() {
        let r = sample::ab_class_on_abc();
        let ind = induced_matroid(&r).unwrap();
        let u = r.universe().clone();
        assert_eq!(
            ind.independents().unwrap(),
            fam(&u, &[&[], &["a"], &["b"], &["c"], &["b", "c"], &["a", "c"]])
        );
        assert!(ind.matroid().is_normal());

        let r1 = sample::abc_class_on_abcd();
        let u = r1.universe().clone();
        assert_eq!(
            induced_matroid(&r1).unwrap().independents().unwrap(),
            fam(
                &u,
                &[
                    &[],
                    &["a"],
                    &["b"],
                    &["c"],
                    &["d"],
                    &["a", "d"],
                    &["b", "d"],
                    &["c", "d"]
                ]
            )
        );
        let both = r1.intersect(&sample::abd_class_on_abcd()).unwrap();
        let i = induced_matroid(&both).unwrap().independents().unwrap();
        assert!(i.contains(u.set_of(["b", "c", "d"]).unwrap()));
        assert!(i.contains(u.set_of(["a", "c", "d"]).unwrap()));
    }

    #[test]
    fn large_universe_uses_circuit_oracle() {
        let u = Universe::alphabetic(30).unwrap();
        let r = crate::enumerate::per_from_blocks(&u, &[u.set_of(["a", "b", "c"]).unwrap()]);
        let ind = induced_matroid(&r).unwrap();
        assert_eq!(ind.circuits().len(), 3);
        assert!(ind.matroid().is_normal());
        assert!(ind.independents().is_err());
        let x = u.set_of(["a", "b", "c", "q"]).unwrap();
        assert_eq!(
            circuit_approx(&ind, x).unwrap(),
            approx_report(&r, x).unwrap()
        );
    }

    #[test]
    fn circuit_approx_worked_example() {
        let r = sample::six_element_relation();
        let u = r.universe().clone();
        let ind = induced_matroid(&r).unwrap();

        let rep = circuit_approx(&ind, u.set_of(["a", "b", "c", "e", "f"]).unwrap()).unwrap();
        assert_eq!(rep.lower, u.set_of(["c", "e", "f"]).unwrap());
        assert_eq!(rep.upper, u.set_of(["a", "b", "c", "d", "e"]).unwrap());
        assert_eq!(rep.alpha, Some(Rational::new(3, 5)));
        assert_eq!(rep.rho, Some(Rational::new(2, 5)));

        let rep = circuit_approx(&ind, u.set_of(["a", "c", "d"]).unwrap()).unwrap();
        assert_eq!(rep.lower, u.set_of(["c", "f"]).unwrap());
        assert_eq!(rep.upper, u.set_of(["a", "b", "c", "d"]).unwrap());
        assert_eq!(rep.alpha, Some(Rational::new(1, 2)));

        let rep = circuit_approx(&ind, ElementSet::EMPTY).unwrap();
        assert_eq!(rep.upper, ElementSet::EMPTY);
        assert_eq!(rep.lower, r.isolated());
    }

    #[test]
    fn literal_lower_formula_disagrees_with_definition() {
        // With {x ∈ X | x ∈ r(x)} and {x ∈ X | r(x) = ∅} in place of the
        // corrected terms, X1 would gain a and b and X2 would lose f.
        let r = sample::six_element_relation();
        let u = r.universe().clone();
        let ind = induced_matroid(&r).unwrap();
        let circuits = ind.circuits().members();
        let literal = |x: ElementSet| {
            let y2 = ElementSet::from_indices(x.iter().filter(|&e| r.contains(e, e)));
            let y3 = circuits
                .iter()
                .filter(|c| {
                    circuits
                        .iter()
                        .filter(|d| d.intersects(**c))
                        .all(|d| d.is_subset(x))
                })
                .fold(ElementSet::EMPTY, |acc, c| acc.union(*c));
            let y4 = ElementSet::from_indices(x.iter().filter(|&e| r.successors(e).is_empty()));
            y2.union(y3).union(y4)
        };
        let x1 = u.set_of(["a", "b", "c", "e", "f"]).unwrap();
        let x2 = u.set_of(["a", "c", "d"]).unwrap();
        assert_ne!(literal(x1), lower_of(&r, x1));
        assert!(literal(x1).contains(0) && literal(x1).contains(1));
        assert!(!literal(x2).contains(5));
    }

    fn lower_of(r: &Relation, x: ElementSet) -> ElementSet {
        crate::rough::lower(r, x).unwrap()
    }

    #[test]
    fn induced_relation_examples() {
        let u = Universe::alphabetic(3).unwrap();
        let m = Matroid::from_circuits(&u, fam(&u, &[&["a", "b"]])).unwrap();
        assert_eq!(
            induced_relation(&m).unwrap(),
            Relation::new(
                &u,
                &[("a", "a"), ("b", "b"), ("c", "c"), ("a", "b"), ("b", "a")]
            )
            .unwrap()
        );
        let u2 = Universe::alphabetic(2).unwrap();
        assert_eq!(
            induced_relation(&Matroid::free(&u2)).unwrap(),
            Relation::diagonal(&u2)
        );
        let m = Matroid::from_circuits(&u, fam(&u, &[&["a", "b", "c"]])).unwrap();
        assert_eq!(induced_relation(&m).unwrap(), Relation::diagonal(&u));
    }

    #[test]
    fn non_transitive_circuit_listing_is_rejected() {
        let u = Universe::alphabetic(6).unwrap();
        let listed = fam(
            &u,
            &[
                &["a", "b"],
                &["a", "c"],
                &["a", "e"],
                &["b", "c"],
                &["c", "f"],
                &["e", "f"],
            ],
        );
        assert!(matches!(
            Matroid::from_circuits(&u, listed.clone()),
            Err(Error::InvalidCircuitFamily { .. })
        ));
        // taken at face value the resulting relation is not transitive
        let m = Matroid::circuits_unchecked(listed);
        assert!(induced_relation(&m).is_err());
    }

    #[test]
    fn round_trip_examples() {
        let r = sample::ab_class_on_abc();
        let rt = round_trip(&r).unwrap();
        assert!(rt.holds());
        assert_eq!(rt.added(&r), vec![(2, 2)]);

        let full = sample::full_on_abc();
        let rt = round_trip(&full).unwrap();
        assert!(rt.holds());
        assert_eq!(rt.regenerated, full);

        let r = sample::six_element_relation();
        let rt = round_trip(&r).unwrap();
        assert!(rt.holds());
        assert_eq!(rt.added(&r), vec![(5, 5)]);
    }
}
