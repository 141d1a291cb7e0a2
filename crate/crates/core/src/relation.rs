//! Binary relations on a finite universe, stored as one successor bit-row per element.

use crate::error::{Error, Result, Violation};
use crate::universe::{ElementSet, Universe};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Relation {
    universe: Universe,
    rows: Vec<ElementSet>,
}

impl Relation {
    /// Builds a relation from label pairs. Duplicate pairs collapse.
    pub fn new<S: AsRef<str>>(universe: &Universe, pairs: &[(S, S)]) -> Result<Self> {
        let mut rel = Self::empty(universe);
        for (x, y) in pairs {
            let x = universe.index_of(x.as_ref())?;
            let y = universe.index_of(y.as_ref())?;
            rel.rows[x].insert(y);
        }
        Ok(rel)
    }

    pub fn empty(universe: &Universe) -> Self {
        Self {
            universe: universe.clone(),
            rows: vec![ElementSet::EMPTY; universe.len()],
        }
    }

    /// Builds a relation directly from successor rows (index `x` holds `r(x)`).
    pub fn from_rows(universe: &Universe, rows: Vec<ElementSet>) -> Self {
        assert_eq!(rows.len(), universe.len(), "one row per element");
        let full = universe.full();
        assert!(
            rows.iter().all(|r| r.is_subset(full)),
            "row outside universe"
        );
        Self {
            universe: universe.clone(),
            rows,
        }
    }

    /// The diagonal `{(x, x) | x ∈ U}`.
    pub fn diagonal(universe: &Universe) -> Self {
        let rows = (0..universe.len()).map(ElementSet::singleton).collect();
        Self::from_rows(universe, rows)
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn rows(&self) -> &[ElementSet] {
        &self.rows
    }

    pub fn contains(&self, x: usize, y: usize) -> bool {
        self.rows[x].contains(y)
    }

    pub fn len(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.iter().all(|r| r.is_empty())
    }

    /// Ordered pairs as index tuples, in canonical (row-major) order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(x, row)| row.iter().map(move |y| (x, y)))
    }

    pub fn label_pairs(&self) -> Vec<(String, String)> {
        self.pairs()
            .map(|(x, y)| {
                (
                    self.universe.label(x).to_string(),
                    self.universe.label(y).to_string(),
                )
            })
            .collect()
    }

    /// Successor neighborhood `r(x) = {y | (x, y) ∈ R}` by index.
    pub fn successors(&self, x: usize) -> ElementSet {
        self.rows[x]
    }

    /// Successor neighborhood of a labelled element.
    pub fn successor(&self, label: &str) -> Result<ElementSet> {
        Ok(self.rows[self.universe.index_of(label)?])
    }

    /// Elements with an empty neighborhood.
    pub fn isolated(&self) -> ElementSet {
        ElementSet::from_indices((0..self.rows.len()).filter(|&x| self.rows[x].is_empty()))
    }

    pub fn intersect(&self, other: &Relation) -> Result<Relation> {
        self.universe.ensure_same(&other.universe)?;
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(a, b)| a.intersection(*b))
            .collect();
        Ok(Relation::from_rows(&self.universe, rows))
    }

    pub fn union(&self, other: &Relation) -> Result<Relation> {
        self.universe.ensure_same(&other.universe)?;
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(a, b)| a.union(*b))
            .collect();
        Ok(Relation::from_rows(&self.universe, rows))
    }

    pub fn check_properties(&self) -> PropertyReport {
        let symmetry_witness = self.pairs().find(|&(x, y)| !self.rows[y].contains(x));
        let transitivity_witness = self.pairs().find_map(|(x, y)| {
            self.rows[y]
                .difference(self.rows[x])
                .first()
                .map(|z| (x, y, z))
        });
        let reflexivity_witness = (0..self.rows.len()).find(|&x| !self.rows[x].contains(x));
        PropertyReport {
            symmetric: symmetry_witness.is_none(),
            transitive: transitivity_witness.is_none(),
            reflexive: reflexivity_witness.is_none(),
            symmetry_witness,
            transitivity_witness,
            reflexivity_witness,
        }
    }

    /// Fails with the first symmetry or transitivity violation, if any.
    pub fn require_per(&self) -> Result<()> {
        let report = self.check_properties();
        match report.violation(&self.universe) {
            Some(v) => Err(Error::NotSymmetricTransitive(v)),
            None => Ok(()),
        }
    }

    pub fn is_per(&self) -> bool {
        let r = self.check_properties();
        r.symmetric && r.transitive
    }

    /// Partial-equivalence decomposition: the classes of `R` on its domain
    /// (sorted by least element) and the isolated elements.
    pub fn classes(&self) -> Result<Classes> {
        self.require_per()?;
        let isolated = self.isolated();
        let mut covered = isolated;
        let mut blocks = Vec::new();
        for x in 0..self.rows.len() {
            if !covered.contains(x) {
                let block = self.rows[x];
                debug_assert!(block.contains(x));
                covered = covered.union(block);
                blocks.push(block);
            }
        }
        Ok(Classes { blocks, isolated })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classes {
    pub blocks: Vec<ElementSet>,
    pub isolated: ElementSet,
}

/// Symmetry, transitivity and reflexivity flags with one witness per false flag.
/// Witnesses are element indices; each is the first violation in row-major order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyReport {
    pub symmetric: bool,
    pub transitive: bool,
    pub reflexive: bool,
    pub symmetry_witness: Option<(usize, usize)>,
    pub transitivity_witness: Option<(usize, usize, usize)>,
    pub reflexivity_witness: Option<usize>,
}

impl PropertyReport {
    pub fn violation(&self, universe: &Universe) -> Option<Violation> {
        let l = |i: usize| universe.label(i).to_string();
        if let Some((x, y)) = self.symmetry_witness {
            return Some(Violation::Symmetry { x: l(x), y: l(y) });
        }
        self.transitivity_witness
            .map(|(x, y, z)| Violation::Transitivity {
                x: l(x),
                y: l(y),
                z: l(z),
            })
    }
}
