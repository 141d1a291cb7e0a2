//! Matroids over a finite universe, given either by an explicit independence
//! family or by a circuit family. Includes exhaustive axiom checks for both
//! presentations, circuit extraction, normality and matroid union.

use crate::error::{Error, Result};
use crate::family::SetFamily;
use crate::par::Strategy;
use crate::universe::{ElementSet, Universe};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Axiom {
    I1,
    I2,
    I3,
    C1,
    C2,
    C3,
}

impl Axiom {
    pub fn name(self) -> &'static str {
        match self {
            Axiom::I1 => "I1",
            Axiom::I2 => "I2",
            Axiom::I3 => "I3",
            Axiom::C1 => "C1",
            Axiom::C2 => "C2",
            Axiom::C3 => "C3",
        }
    }
}

/// The concrete sets behind a failed axiom.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AxiomWitness {
    /// The empty set is not in the family.
    MissingEmpty,
    /// `member` is in the family, `subset ⊆ member` is not.
    NotHereditary {
        member: ElementSet,
        subset: ElementSet,
    },
    /// `|smaller| < |larger|`, both in the family, and no `e ∈ larger − smaller`
    /// makes `smaller ∪ {e}` a member.
    NoAugmentation {
        smaller: ElementSet,
        larger: ElementSet,
    },
    /// The empty set is a circuit.
    EmptyCircuit,
    /// Two distinct circuits with `smaller ⊊ larger`.
    Nested {
        smaller: ElementSet,
        larger: ElementSet,
    },
    /// Distinct circuits sharing `element`, with no circuit inside
    /// `(first ∪ second) − {element}`.
    NoElimination {
        first: ElementSet,
        second: ElementSet,
        element: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub valid: bool,
    pub failed_axiom: Option<Axiom>,
    pub witness: Option<AxiomWitness>,
}

impl AxiomReport {
    fn ok() -> Self {
        AxiomReport {
            valid: true,
            failed_axiom: None,
            witness: None,
        }
    }

    fn failed(axiom: Axiom, witness: AxiomWitness) -> Self {
        AxiomReport {
            valid: false,
            failed_axiom: Some(axiom),
            witness: Some(witness),
        }
    }

    /// One-line human description using universe labels.
    pub fn describe(&self, universe: &Universe) -> String {
        let r = |s: ElementSet| universe.render(s);
        let Some(witness) = self.witness else {
            return "all axioms hold".to_string();
        };
        let axiom = self.failed_axiom.map(Axiom::name).unwrap_or("?");
        let detail = match witness {
            AxiomWitness::MissingEmpty => "∅ is not in the family".to_string(),
            AxiomWitness::NotHereditary { member, subset } => {
                format!(
                    "{} is a member but its subset {} is not",
                    r(member),
                    r(subset)
                )
            }
            AxiomWitness::NoAugmentation { smaller, larger } => format!(
                "no e in {} − {} extends {} to a member",
                r(larger),
                r(smaller),
                r(smaller)
            ),
            AxiomWitness::EmptyCircuit => "∅ is a circuit".to_string(),
            AxiomWitness::Nested { smaller, larger } => {
                format!(
                    "circuit {} is a proper subset of circuit {}",
                    r(smaller),
                    r(larger)
                )
            }
            AxiomWitness::NoElimination {
                first,
                second,
                element,
            } => format!(
                "no circuit inside ({} ∪ {}) − {{{}}}",
                r(first),
                r(second),
                universe.label(element)
            ),
        };
        format!("{axiom} fails: {detail}")
    }
}

/// Checks (I1) empty set, (I2) hereditary, (I3) augmentation.
pub fn check_independence_axioms(family: &SetFamily) -> Result<AxiomReport> {
    check_independence_axioms_with(family, Strategy::default())
}

pub fn check_independence_axioms_with(
    family: &SetFamily,
    strategy: Strategy,
) -> Result<AxiomReport> {
    family.universe().ensure_enumerable()?;
    if !family.contains(ElementSet::EMPTY) {
        return Ok(AxiomReport::failed(Axiom::I1, AxiomWitness::MissingEmpty));
    }
    let members = family.members();

    // Closure under single-element removal implies closure under all subsets.
    let hereditary = strategy.find_map_first(members, |&member| {
        member
            .iter()
            .map(|e| member.without(e))
            .find(|s| !family.contains(*s))
            .map(|subset| AxiomWitness::NotHereditary { member, subset })
    });
    if let Some(w) = hereditary {
        return Ok(AxiomReport::failed(Axiom::I2, w));
    }

    // With (I2) in place, a violating pair exists iff one exists with
    // |larger| = |smaller| + 1.
    let augmentation = strategy.find_map_first(members, |&smaller| {
        family.members()[family.size_range(smaller.len() + 1)]
            .iter()
            .find(|larger| {
                !larger
                    .difference(smaller)
                    .iter()
                    .any(|e| family.contains(smaller.with(e)))
            })
            .map(|&larger| AxiomWitness::NoAugmentation { smaller, larger })
    });
    Ok(match augmentation {
        Some(w) => AxiomReport::failed(Axiom::I3, w),
        None => AxiomReport::ok(),
    })
}

/// Checks (C1) no empty circuit, (C2) antichain, (C3) circuit elimination.
pub fn check_circuit_axioms(family: &SetFamily) -> Result<AxiomReport> {
    check_circuit_axioms_with(family, Strategy::default())
}

pub fn check_circuit_axioms_with(family: &SetFamily, strategy: Strategy) -> Result<AxiomReport> {
    family.universe().ensure_enumerable()?;
    if family.contains(ElementSet::EMPTY) {
        return Ok(AxiomReport::failed(Axiom::C1, AxiomWitness::EmptyCircuit));
    }
    let members = family.members();

    let nested = strategy.find_map_first(members, |&smaller| {
        members
            .iter()
            .find(|&&larger| larger != smaller && smaller.is_subset(larger))
            .map(|&larger| AxiomWitness::Nested { smaller, larger })
    });
    if let Some(w) = nested {
        return Ok(AxiomReport::failed(Axiom::C2, w));
    }

    let indexed: Vec<usize> = (0..members.len()).collect();
    let elimination = strategy.find_map_first(&indexed, |&i| {
        let first = members[i];
        members[i + 1..].iter().find_map(|&second| {
            first.intersection(second).iter().find_map(|element| {
                let target = first.union(second).without(element);
                (!members.iter().any(|c| c.is_subset(target))).then_some(
                    AxiomWitness::NoElimination {
                        first,
                        second,
                        element,
                    },
                )
            })
        })
    });
    Ok(match elimination {
        Some(w) => AxiomReport::failed(Axiom::C3, w),
        None => AxiomReport::ok(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Representation {
    Explicit(SetFamily),
    Circuits(SetFamily),
}

#[derive(Clone, Debug)]
pub struct Matroid {
    universe: Universe,
    repr: Representation,
}

impl Matroid {
    /// Matroid from its independent sets; the family must satisfy (I1)–(I3).
    pub fn from_independents(family: SetFamily) -> Result<Self> {
        let report = check_independence_axioms(&family)?;
        if !report.valid {
            let detail = report.describe(family.universe());
            return Err(Error::InvalidIndependenceFamily { report, detail });
        }
        Ok(Self::explicit_unchecked(family))
    }

    /// Matroid whose circuits are exactly `circuits`; the family must satisfy
    /// (C1)–(C3). A set is independent iff it contains no circuit.
    pub fn from_circuits(universe: &Universe, circuits: SetFamily) -> Result<Self> {
        universe.ensure_same(circuits.universe())?;
        let report = check_circuit_axioms(&circuits)?;
        if !report.valid {
            let detail = report.describe(universe);
            return Err(Error::InvalidCircuitFamily { report, detail });
        }
        Ok(Self::circuits_unchecked(circuits))
    }

    pub(crate) fn explicit_unchecked(family: SetFamily) -> Self {
        Self {
            universe: family.universe().clone(),
            repr: Representation::Explicit(family),
        }
    }

    pub(crate) fn circuits_unchecked(circuits: SetFamily) -> Self {
        Self {
            universe: circuits.universe().clone(),
            repr: Representation::Circuits(circuits),
        }
    }

    /// Every subset independent.
    pub fn free(universe: &Universe) -> Self {
        Self::circuits_unchecked(SetFamily::empty(universe))
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn representation(&self) -> &Representation {
        &self.repr
    }

    pub fn is_independent(&self, set: ElementSet) -> bool {
        match &self.repr {
            Representation::Explicit(f) => f.contains(set),
            Representation::Circuits(c) => !c.members().iter().any(|m| m.is_subset(set)),
        }
    }

    /// Independence of every subset, indexed by mask.
    pub fn independence_table(&self) -> Result<Vec<bool>> {
        self.universe.ensure_enumerable()?;
        Ok(self
            .universe
            .subsets()
            .map(|s| self.is_independent(s))
            .collect())
    }

    /// The explicit independence family.
    pub fn independents(&self) -> Result<SetFamily> {
        match &self.repr {
            Representation::Explicit(f) => Ok(f.clone()),
            Representation::Circuits(_) => {
                self.universe.ensure_enumerable()?;
                SetFamily::new(
                    &self.universe,
                    self.universe.subsets().filter(|s| self.is_independent(*s)),
                )
            }
        }
    }

    /// All minimal dependent sets.
    ///
    /// For an explicit family every circuit is some independent set plus one
    /// element, so candidates are generated from members rather than from all
    /// `2^n` subsets.
    pub fn circuits(&self) -> SetFamily {
        match &self.repr {
            Representation::Circuits(c) => c.clone(),
            Representation::Explicit(f) => {
                let full = self.universe.full();
                let mut found = Vec::new();
                for &member in f.members() {
                    for e in full.difference(member).iter() {
                        let candidate = member.with(e);
                        if !f.contains(candidate)
                            && candidate.iter().all(|x| f.contains(candidate.without(x)))
                        {
                            found.push(candidate);
                        }
                    }
                }
                let circuits = SetFamily::new(&self.universe, found)
                    .expect("candidates are subsets of the universe");
                debug_assert!(circuits
                    .members()
                    .iter()
                    .all(|c| c.subsets().all(|s| s == *c || f.contains(s))));
                circuits
            }
        }
    }

    /// Every element lies in some independent set, i.e. every singleton is independent.
    pub fn is_normal(&self) -> bool {
        (0..self.universe.len()).all(|x| self.is_independent(ElementSet::singleton(x)))
    }

    /// Whether both matroids declare the same subsets independent.
    pub fn agrees_with(&self, other: &Matroid) -> Result<bool> {
        self.universe.ensure_same(&other.universe)?;
        Ok(self.independence_table()? == other.independence_table()?)
    }
}

/// `M1 + M2`, whose independent sets are all `I1 ∪ I2` with `Ii` independent in `Mi`.
pub fn union(m1: &Matroid, m2: &Matroid) -> Result<Matroid> {
    union_with(m1, m2, Strategy::default())
}

pub fn union_with(m1: &Matroid, m2: &Matroid, strategy: Strategy) -> Result<Matroid> {
    m1.universe.ensure_same(&m2.universe)?;
    let first = m1.independence_table()?;
    let second = m2.independence_table()?;
    let n = m1.universe.len();
    // X = I1 ∪ I2 iff some independent S ⊆ X leaves X − S independent in M2,
    // because M2's family is closed under subsets.
    let covered = strategy.map_range(0..1u64 << n, |x| {
        ElementSet(x)
            .subsets()
            .any(|s| first[s.0 as usize] && second[(x & !s.0) as usize])
    });
    let members = covered
        .iter()
        .enumerate()
        .filter(|(_, &c)| c)
        .map(|(x, _)| ElementSet(x as u64));
    Ok(Matroid::explicit_unchecked(SetFamily::new(
        &m1.universe,
        members,
    )?))
}

/// Runs the independence axioms on `I(M1) ∩ I(M2)`; the intersection of two
/// independence families need not be one.
pub fn family_intersection_probe(m1: &Matroid, m2: &Matroid) -> Result<AxiomReport> {
    m1.universe.ensure_same(&m2.universe)?;
    let family = m1.independents()?.intersection(&m2.independents()?)?;
    check_independence_axioms(&family)
}
