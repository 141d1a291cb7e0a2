//! Lower and upper approximation operators evaluated straight from successor
//! neighborhoods, plus approximation quality/roughness and the operator-level
//! probes for symmetry and transitivity.
//!
//! This is the reference implementation that the circuit-based operators in
//! [`crate::bridge`] are checked against.

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::par::Strategy;
use crate::relation::Relation;
use crate::universe::{ElementSet, Universe};

pub type Rational = Ratio<i64>;

pub(crate) fn check_query(universe: &Universe, x: ElementSet) -> Result<()> {
    match x.difference(universe.full()).first() {
        Some(i) => Err(Error::UnknownLabel(format!("#{i}"))),
        None => Ok(()),
    }
}

fn lower_unchecked(rel: &Relation, x: ElementSet) -> ElementSet {
    ElementSet::from_indices(
        rel.rows()
            .iter()
            .enumerate()
            .filter(|(_, r)| r.is_subset(x))
            .map(|(i, _)| i),
    )
}

fn upper_unchecked(rel: &Relation, x: ElementSet) -> ElementSet {
    ElementSet::from_indices(
        rel.rows()
            .iter()
            .enumerate()
            .filter(|(_, r)| r.intersects(x))
            .map(|(i, _)| i),
    )
}

/// `{x ∈ U | r(x) ⊆ X}`. Elements with an empty neighborhood are always included.
pub fn lower(rel: &Relation, x: ElementSet) -> Result<ElementSet> {
    check_query(rel.universe(), x)?;
    Ok(lower_unchecked(rel, x))
}

/// `{x ∈ U | r(x) ∩ X ≠ ∅}`.
pub fn upper(rel: &Relation, x: ElementSet) -> Result<ElementSet> {
    check_query(rel.universe(), x)?;
    Ok(upper_unchecked(rel, x))
}

/// Lower/upper pair for one query set with quality `alpha = |lower| / |upper|`
/// and roughness `rho = 1 - alpha`. Both are `None` when the upper
/// approximation is empty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ApproxReport {
    pub query: ElementSet,
    pub lower: ElementSet,
    pub upper: ElementSet,
    pub alpha: Option<Rational>,
    pub rho: Option<Rational>,
    pub precise: bool,
}

impl ApproxReport {
    pub fn from_parts(query: ElementSet, lower: ElementSet, upper: ElementSet) -> Self {
        let alpha =
            (!upper.is_empty()).then(|| Rational::new(lower.len() as i64, upper.len() as i64));
        ApproxReport {
            query,
            lower,
            upper,
            alpha,
            rho: alpha.map(|a| Rational::from_integer(1) - a),
            precise: lower == upper,
        }
    }
}

pub fn approx_report(rel: &Relation, x: ElementSet) -> Result<ApproxReport> {
    check_query(rel.universe(), x)?;
    Ok(ApproxReport::from_parts(
        x,
        lower_unchecked(rel, x),
        upper_unchecked(rel, x),
    ))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Property {
    Symmetric,
    Transitive,
}

impl Property {
    pub fn name(self) -> &'static str {
        match self {
            Property::Symmetric => "symmetric",
            Property::Transitive => "transitive",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProbeReport {
    pub property: Property,
    pub holds: bool,
    /// Lowest subset (by mask value) violating the operator identity.
    pub witness: Option<ElementSet>,
}

/// Whether `x` violates the operator identity characterising `property`:
/// symmetry is `X ⊆ lower(upper(X))`, transitivity is `lower(X) ⊆ lower(lower(X))`.
pub fn violates(rel: &Relation, property: Property, x: ElementSet) -> bool {
    match property {
        Property::Symmetric => !x.is_subset(lower_unchecked(rel, upper_unchecked(rel, x))),
        Property::Transitive => {
            let l = lower_unchecked(rel, x);
            !l.is_subset(lower_unchecked(rel, l))
        }
    }
}

/// Decides `property` from the approximation operators alone by testing the
/// identity on every subset of the universe.
pub fn probe_property(rel: &Relation, property: Property) -> Result<ProbeReport> {
    probe_property_with(rel, property, Strategy::default())
}

pub fn probe_property_with(
    rel: &Relation,
    property: Property,
    strategy: Strategy,
) -> Result<ProbeReport> {
    rel.universe().ensure_enumerable()?;
    let n = rel.universe().len();
    let witness = strategy.find_map_first_in(0..1u64 << n, |mask| {
        let x = ElementSet(mask);
        violates(rel, property, x).then_some(x)
    });
    Ok(ProbeReport {
        property,
        holds: witness.is_none(),
        witness,
    })
}
