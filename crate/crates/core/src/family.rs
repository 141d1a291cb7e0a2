use crate::error::{Error, Result};
use crate::universe::{ElementSet, Universe};

/// A duplicate-free collection of subsets of one universe, kept in canonical
/// order (cardinality, then lexicographic).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SetFamily {
    universe: Universe,
    members: Vec<ElementSet>,
}

impl SetFamily {
    pub fn new<I: IntoIterator<Item = ElementSet>>(
        universe: &Universe,
        members: I,
    ) -> Result<Self> {
        let full = universe.full();
        let mut members: Vec<ElementSet> = members.into_iter().collect();
        if let Some(bad) = members.iter().find(|m| !m.is_subset(full)) {
            let i = bad.difference(full).first().unwrap_or_default();
            return Err(Error::UnknownLabel(format!("#{i}")));
        }
        members.sort_unstable();
        members.dedup();
        Ok(Self {
            universe: universe.clone(),
            members,
        })
    }

    pub fn empty(universe: &Universe) -> Self {
        Self {
            universe: universe.clone(),
            members: Vec::new(),
        }
    }

    /// Builds a family from lists of labels.
    pub fn from_labels<S: AsRef<str>>(universe: &Universe, sets: &[Vec<S>]) -> Result<Self> {
        let members = sets
            .iter()
            .map(|s| universe.set_of(s.iter().map(AsRef::as_ref)))
            .collect::<Result<Vec<_>>>()?;
        Self::new(universe, members)
    }

    /// Every subset of the universe.
    pub fn power_set(universe: &Universe) -> Result<Self> {
        universe.ensure_enumerable()?;
        Self::new(universe, universe.subsets())
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn members(&self) -> &[ElementSet] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, set: ElementSet) -> bool {
        self.members.binary_search(&set).is_ok()
    }

    pub fn is_subfamily_of(&self, other: &SetFamily) -> bool {
        self.members.iter().all(|m| other.contains(*m))
    }

    pub fn intersection(&self, other: &SetFamily) -> Result<SetFamily> {
        self.universe.ensure_same(&other.universe)?;
        let members = self
            .members
            .iter()
            .copied()
            .filter(|m| other.contains(*m))
            .collect();
        Ok(SetFamily {
            universe: self.universe.clone(),
            members,
        })
    }

    /// Union of all members.
    pub fn support(&self) -> ElementSet {
        self.members
            .iter()
            .fold(ElementSet::EMPTY, |acc, m| acc.union(*m))
    }

    pub fn to_labels(&self) -> Vec<Vec<String>> {
        self.members
            .iter()
            .map(|m| self.universe.labels_of(*m))
            .collect()
    }

    /// Set-builder rendering, e.g. `{∅, {a}, {a, b}}`.
    pub fn render(&self) -> String {
        let parts: Vec<String> = self
            .members
            .iter()
            .map(|m| self.universe.render(*m))
            .collect();
        format!("{{{}}}", parts.join(", "))
    }

    /// Contiguous index range of members with the given cardinality.
    pub(crate) fn size_range(&self, size: usize) -> std::ops::Range<usize> {
        let start = self.members.partition_point(|m| m.len() < size);
        let end = self.members.partition_point(|m| m.len() <= size);
        start..end
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_and_deduplicated() {
        let u = Universe::alphabetic(3).unwrap();
        let f = SetFamily::from_labels(
            &u,
            &[
                vec!["b", "c"],
                vec!["a"],
                vec![],
                vec!["c", "b"],
                vec!["a", "c"],
            ],
        )
        .unwrap();
        assert_eq!(f.len(), 4);
        assert_eq!(f.render(), "{∅, {a}, {a, c}, {b, c}}");
        assert!(f.contains(u.set_of(["c", "a"]).unwrap()));
        assert!(!f.contains(u.set_of(["b"]).unwrap()));
        assert_eq!(f.size_range(2), 2..4);
        assert_eq!(f.size_range(3), 4..4);
    }

    #[test]
    fn rejects_members_outside_universe() {
        let u = Universe::alphabetic(2).unwrap();
        assert!(SetFamily::new(&u, [ElementSet::singleton(2)]).is_err());
        assert!(SetFamily::from_labels(&u, &[vec!["x"]]).is_err());
    }

    #[test]
    fn intersection_and_inclusion() {
        let u = Universe::alphabetic(3).unwrap();
        let p = SetFamily::power_set(&u).unwrap();
        let f = SetFamily::from_labels(&u, &[Vec::<&str>::new(), vec!["a"]]).unwrap();
        assert_eq!(p.len(), 8);
        assert!(f.is_subfamily_of(&p));
        assert!(!p.is_subfamily_of(&f));
        assert_eq!(p.intersection(&f).unwrap(), f);
        assert_eq!(f.support(), ElementSet::singleton(0));
        let other = Universe::alphabetic(2).unwrap();
        assert!(p.intersection(&SetFamily::empty(&other)).is_err());
    }
}
