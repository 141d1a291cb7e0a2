//! JSON file formats for relations and matroids.
//!
//! Relation: `{"universe": ["a", ...], "pairs": [["a", "b"], ...]}`
//!
//! Matroid: `{"universe": [...], "circuits": [["a", "b"], ...]}` or
//! `{"universe": [...], "independents": [[], ["a"], ...]}`

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::family::SetFamily;
use crate::matroid::{Matroid, Representation};
use crate::relation::Relation;
use crate::universe::Universe;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RelationFile {
    pub universe: Vec<String>,
    pub pairs: Vec<(String, String)>,
}

impl RelationFile {
    pub fn from_relation(rel: &Relation) -> Self {
        RelationFile {
            universe: rel.universe().labels().to_vec(),
            pairs: rel.label_pairs(),
        }
    }

    pub fn to_relation(&self) -> Result<Relation> {
        let universe = Universe::new(self.universe.iter().cloned())?;
        Relation::new(&universe, &self.pairs)
    }
}

/// Which presentation a matroid file uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyKind {
    Circuits,
    Independents,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatroidFile {
    pub universe: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub circuits: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub independents: Option<Vec<Vec<String>>>,
}

impl MatroidFile {
    pub fn from_matroid(m: &Matroid) -> Self {
        let universe = m.universe().labels().to_vec();
        match m.representation() {
            Representation::Circuits(c) => MatroidFile {
                universe,
                circuits: Some(c.to_labels()),
                independents: None,
            },
            Representation::Explicit(f) => MatroidFile {
                universe,
                circuits: None,
                independents: Some(f.to_labels()),
            },
        }
    }

    /// The stored family without any axiom check.
    pub fn to_family(&self) -> Result<(FamilyKind, SetFamily)> {
        let universe = Universe::new(self.universe.iter().cloned())?;
        let (kind, sets) = match (&self.circuits, &self.independents) {
            (Some(c), None) => (FamilyKind::Circuits, c),
            (None, Some(i)) => (FamilyKind::Independents, i),
            (Some(_), Some(_)) => {
                return Err(Error::Format(
                    "matroid file must give `circuits` or `independents`, not both".into(),
                ))
            }
            (None, None) => {
                return Err(Error::Format(
                    "matroid file needs a `circuits` or `independents` field".into(),
                ))
            }
        };
        Ok((kind, SetFamily::from_labels(&universe, sets)?))
    }

    /// Builds the matroid, running the axiom check for the stored presentation.
    pub fn to_matroid(&self) -> Result<Matroid> {
        match self.to_family()? {
            (FamilyKind::Circuits, family) => {
                let universe = family.universe().clone();
                Matroid::from_circuits(&universe, family)
            }
            (FamilyKind::Independents, family) => Matroid::from_independents(family),
        }
    }
}

fn parse<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))
}

pub fn parse_relation(text: &str) -> Result<Relation> {
    parse::<RelationFile>(text)?.to_relation()
}

pub fn parse_matroid(text: &str) -> Result<Matroid> {
    parse::<MatroidFile>(text)?.to_matroid()
}

pub fn parse_matroid_file(text: &str) -> Result<MatroidFile> {
    parse(text)
}
