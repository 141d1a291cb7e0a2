//! Finite labeled universes and bitmask subsets over them.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Hard cap on universe size; subsets are stored as `u64` bitmasks.
pub const MAX_UNIVERSE: usize = 64;

/// Cap for operations that enumerate all `2^n` subsets.
pub const ENUMERATION_CAP: usize = 20;

/// An ordered, finite set of distinct labels.
///
/// Cloning is cheap (shared storage). Element order is fixed at construction
/// and is the canonical order for every report and serialized output.
#[derive(Clone)]
pub struct Universe {
    inner: Arc<UniverseInner>,
}

struct UniverseInner {
    labels: Vec<String>,
    index: HashMap<String, usize>,
}

impl Universe {
    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.len() > MAX_UNIVERSE {
            return Err(Error::UniverseTooLarge {
                size: labels.len(),
                cap: MAX_UNIVERSE,
            });
        }
        let mut index = HashMap::with_capacity(labels.len());
        for (i, label) in labels.iter().enumerate() {
            if label.is_empty() {
                return Err(Error::EmptyLabel);
            }
            if index.insert(label.clone(), i).is_some() {
                return Err(Error::DuplicateLabel(label.clone()));
            }
        }
        Ok(Self {
            inner: Arc::new(UniverseInner { labels, index }),
        })
    }

    /// Universe labelled `a`, `b`, `c`, ... (falls back to `e26`, `e27`, ... past `z`).
    pub fn alphabetic(n: usize) -> Result<Self> {
        Self::new((0..n).map(|i| {
            if i < 26 {
                ((b'a' + i as u8) as char).to_string()
            } else {
                format!("e{i}")
            }
        }))
    }

    pub fn len(&self) -> usize {
        self.inner.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.inner.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.inner.labels
    }

    pub fn label(&self, index: usize) -> &str {
        &self.inner.labels[index]
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.inner
            .index
            .get(label)
            .copied()
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    /// The set of all elements.
    pub fn full(&self) -> ElementSet {
        ElementSet::full(self.len())
    }

    pub fn set_of<I, S>(&self, labels: I) -> Result<ElementSet>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut set = ElementSet::EMPTY;
        for label in labels {
            set.insert(self.index_of(label.as_ref())?);
        }
        Ok(set)
    }

    pub fn labels_of(&self, set: ElementSet) -> Vec<String> {
        set.iter().map(|i| self.label(i).to_string()).collect()
    }

    /// Set-builder rendering, e.g. `{a, b}` or `∅`.
    pub fn render(&self, set: ElementSet) -> String {
        if set.is_empty() {
            return "∅".to_string();
        }
        let parts: Vec<&str> = set.iter().map(|i| self.label(i)).collect();
        format!("{{{}}}", parts.join(", "))
    }

    pub(crate) fn ensure_enumerable(&self) -> Result<()> {
        if self.len() > ENUMERATION_CAP {
            Err(Error::UniverseTooLarge {
                size: self.len(),
                cap: ENUMERATION_CAP,
            })
        } else {
            Ok(())
        }
    }

    pub(crate) fn ensure_same(&self, other: &Universe) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::UniverseMismatch)
        }
    }

    /// Every subset of the universe in ascending mask order. Exponential; mind [`ENUMERATION_CAP`].
    pub fn subsets(&self) -> impl Iterator<Item = ElementSet> {
        let n = self.len();
        (0..1u64 << n).map(ElementSet)
    }
}

impl PartialEq for Universe {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner.labels == other.inner.labels
    }
}

impl Eq for Universe {}

impl fmt::Debug for Universe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("Universe").field(&self.inner.labels).finish()
    }
}

/// A subset of a universe, one bit per element index.
///
/// Ordering is canonical: by cardinality, then lexicographically by the
/// ascending sequence of element indices.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct ElementSet(pub u64);

impl ElementSet {
    pub const EMPTY: ElementSet = ElementSet(0);

    pub fn full(n: usize) -> Self {
        if n >= 64 {
            ElementSet(u64::MAX)
        } else {
            ElementSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> Self {
        ElementSet(1u64 << i)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        let mut s = Self::EMPTY;
        for i in indices {
            s.insert(i);
        }
        s
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1u64 << i;
    }

    pub fn remove(&mut self, i: usize) {
        self.0 &= !(1u64 << i);
    }

    pub fn with(self, i: usize) -> Self {
        ElementSet(self.0 | 1u64 << i)
    }

    pub fn without(self, i: usize) -> Self {
        ElementSet(self.0 & !(1u64 << i))
    }

    pub fn union(self, other: Self) -> Self {
        ElementSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        ElementSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        ElementSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersects(self, other: Self) -> bool {
        self.0 & other.0 != 0
    }

    /// Lowest element index, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Element indices in ascending order.
    pub fn iter(self) -> Indices {
        Indices(self.0)
    }

    /// All subsets of `self`, in ascending mask order.
    pub fn subsets(self) -> Subsets {
        Subsets {
            mask: self.0,
            next: Some(0),
        }
    }
}

impl Ord for ElementSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| {
            let diff = self.0 ^ other.0;
            if diff == 0 {
                Ordering::Equal
            } else if self.0 & (diff & diff.wrapping_neg()) != 0 {
                // self holds the smallest differing element
                Ordering::Less
            } else {
                Ordering::Greater
            }
        })
    }
}

impl PartialOrd for ElementSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub struct Indices(u64);

impl Iterator for Indices {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Indices {}

/// Submask enumeration (ascending).
pub struct Subsets {
    mask: u64,
    next: Option<u64>,
}

impl Iterator for Subsets {
    type Item = ElementSet;

    fn next(&mut self) -> Option<ElementSet> {
        let cur = self.next?;
        self.next = if cur == self.mask {
            None
        } else {
            Some((cur.wrapping_sub(self.mask)) & self.mask)
        };
        Some(ElementSet(cur))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_duplicate_and_empty_labels() {
        assert!(matches!(
            Universe::new(["a", "b", "a"]),
            Err(Error::DuplicateLabel(l)) if l == "a"
        ));
        assert!(matches!(Universe::new(["a", ""]), Err(Error::EmptyLabel)));
    }

    #[test]
    fn empty_universe_is_allowed() {
        let u = Universe::new(Vec::<String>::new()).unwrap();
        assert!(u.is_empty());
        assert_eq!(u.full(), ElementSet::EMPTY);
        assert_eq!(u.subsets().count(), 1);
    }

    #[test]
    fn caps_size() {
        let labels: Vec<String> = (0..65).map(|i| format!("x{i}")).collect();
        assert!(matches!(
            Universe::new(labels),
            Err(Error::UniverseTooLarge { size: 65, cap: 64 })
        ));
        let u = Universe::alphabetic(64).unwrap();
        assert_eq!(u.full().len(), 64);
    }

    #[test]
    fn canonical_order_is_cardinality_then_lex() {
        let mut sets: Vec<ElementSet> = ElementSet::full(3).subsets().collect();
        sets.sort();
        let rendered: Vec<Vec<usize>> = sets.iter().map(|s| s.iter().collect()).collect();
        assert_eq!(
            rendered,
            vec![
                vec![],
                vec![0],
                vec![1],
                vec![2],
                vec![0, 1],
                vec![0, 2],
                vec![1, 2],
                vec![0, 1, 2]
            ]
        );
        // lexicographic on index sequences, not on mask value
        assert!(ElementSet::from_indices([0, 3]) < ElementSet::from_indices([1, 2]));
    }

    #[test]
    fn submask_enumeration_is_complete() {
        let s = ElementSet::from_indices([1, 4, 6]);
        let subs: Vec<ElementSet> = s.subsets().collect();
        assert_eq!(subs.len(), 8);
        assert!(subs.iter().all(|x| x.is_subset(s)));
        assert_eq!(ElementSet::EMPTY.subsets().count(), 1);
    }

    #[test]
    fn render_uses_set_builder_notation() {
        let u = Universe::alphabetic(3).unwrap();
        assert_eq!(u.render(ElementSet::EMPTY), "∅");
        assert_eq!(u.render(u.set_of(["c", "a"]).unwrap()), "{a, c}");
        assert!(matches!(u.set_of(["z"]), Err(Error::UnknownLabel(_))));
    }
}
