//! Ground sets and their subsets.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest ground set a [`Subset`] bitmask can address.
pub const MAX_GROUND: usize = 64;

/// A subset of a ground set, as a bitmask over element indices.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Subset(pub u64);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub fn full(n: usize) -> Subset {
        assert!(n <= MAX_GROUND);
        if n == MAX_GROUND {
            Subset(u64::MAX)
        } else {
            Subset((1u64 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> Subset {
        Subset(1u64 << i)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Subset {
        Subset(indices.into_iter().fold(0, |acc, i| acc | 1u64 << i))
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, i: usize) -> bool {
        i < MAX_GROUND && self.0 >> i & 1 == 1
    }

    pub fn with(self, i: usize) -> Subset {
        Subset(self.0 | 1u64 << i)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn sym_diff(self, other: Subset) -> Subset {
        Subset(self.0 ^ other.0)
    }

    pub fn union(self, other: Subset) -> Subset {
        Subset(self.0 | other.0)
    }

    pub fn intersection(self, other: Subset) -> Subset {
        Subset(self.0 & other.0)
    }

    pub fn difference(self, other: Subset) -> Subset {
        Subset(self.0 & !other.0)
    }

    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let i = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(i)
            }
        })
    }

    /// Re-indexes `self ∩ within` so that the elements of `within` become
    /// `0..within.len()` in increasing order.
    pub fn compress(self, within: Subset) -> Subset {
        Subset::from_indices(
            within
                .iter()
                .enumerate()
                .filter(|&(_, i)| self.contains(i))
                .map(|(k, _)| k),
        )
    }

    /// Inverse of [`Subset::compress`].
    pub fn expand(self, within: Subset) -> Subset {
        Subset::from_indices(
            within
                .iter()
                .enumerate()
                .filter(|&(k, _)| self.contains(k))
                .map(|(_, i)| i),
        )
    }

    /// All subsets of `{0..n}`, ordered by size, then lexicographically by
    /// their sorted element lists.
    pub fn all_by_size(n: usize) -> Vec<Subset> {
        use itertools::Itertools;
        (0..=n)
            .flat_map(|k| (0..n).combinations(k).map(Subset::from_indices))
            .collect()
    }

    /// All subsets of `{0..n}` in increasing bitmask order.
    pub fn all(n: usize) -> impl Iterator<Item = Subset> {
        (0..1u64 << n).map(Subset)
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// An ordered finite set of distinct labels.
///
/// The order fixes coordinates: element `i` of the ground set is coordinate
/// `i` of `V_E`, and its dual is coordinate `n + i`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GroundSet {
    labels: Vec<String>,
}

impl GroundSet {
    pub fn new<S: Into<String>, I: IntoIterator<Item = S>>(labels: I) -> Result<GroundSet> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.len() > MAX_GROUND {
            return Err(Error::GroundSetTooLarge {
                size: labels.len(),
                limit: MAX_GROUND,
            });
        }
        for (i, l) in labels.iter().enumerate() {
            if l.is_empty() || l.contains(|c: char| c.is_whitespace() || ",+^{}-".contains(c)) {
                return Err(Error::UnknownLabel(l.clone()));
            }
            if labels[..i].contains(l) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        Ok(GroundSet { labels })
    }

    /// The ground set `{1, …, n}`.
    pub fn numbered(n: usize) -> GroundSet {
        Self::numbered_from(1, n)
    }

    /// The ground set `{start, …, start + n - 1}`.
    pub fn numbered_from(start: usize, n: usize) -> GroundSet {
        GroundSet::new((start..start + n).map(|i| i.to_string())).expect("numeric labels")
    }

    pub fn empty() -> GroundSet {
        GroundSet { labels: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn full(&self) -> Subset {
        Subset::full(self.len())
    }

    pub fn contains_subset(&self, s: Subset) -> bool {
        s.is_subset_of(self.full())
    }

    /// The ground set formed by the elements of `s`, in the original order.
    pub fn restrict(&self, s: Subset) -> Result<GroundSet> {
        if !self.contains_subset(s) {
            return Err(Error::NotSubset);
        }
        Ok(GroundSet {
            labels: s.iter().map(|i| self.labels[i].clone()).collect(),
        })
    }

    /// Concatenation of two ground sets with no shared labels.
    pub fn disjoint_union(&self, other: &GroundSet) -> Result<GroundSet> {
        if let Some(l) = other.labels.iter().find(|l| self.labels.contains(l)) {
            return Err(Error::OverlappingLabels(l.clone()));
        }
        GroundSet::new(self.labels.iter().chain(&other.labels).cloned())
    }

    /// Reorders labels: element `i` of the result is element `perm[i]` here.
    pub fn permuted(&self, perm: &[usize]) -> GroundSet {
        GroundSet {
            labels: perm.iter().map(|&i| self.labels[i].clone()).collect(),
        }
    }

    /// Parses a comma-separated label list; `-` or the empty string is ∅.
    pub fn parse_subset(&self, text: &str) -> Result<Subset> {
        let text = text.trim();
        let text = text
            .strip_prefix('{')
            .and_then(|t| t.strip_suffix('}'))
            .unwrap_or(text);
        if text.is_empty() || text == "-" {
            return Ok(Subset::EMPTY);
        }
        text.split(',')
            .map(|tok| {
                let tok = tok.trim();
                self.index_of(tok)
                    .ok_or_else(|| Error::UnknownLabel(tok.to_string()))
            })
            .collect::<Result<Vec<_>>>()
            .map(Subset::from_indices)
    }

    /// `{a,b}` notation, elements in ground order.
    pub fn format_subset(&self, s: Subset) -> String {
        let inner: Vec<&str> = s.iter().map(|i| self.label(i)).collect();
        format!("{{{}}}", inner.join(","))
    }
}

impl fmt::Debug for GroundSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroundSet{:?}", self.labels)
    }
}

/// Sort key placing numeric labels in numeric order before other labels.
pub(crate) fn label_order(a: &str, b: &str) -> std::cmp::Ordering {
    match (a.parse::<u64>(), b.parse::<u64>()) {
        (Ok(x), Ok(y)) => x.cmp(&y),
        (Ok(_), Err(_)) => std::cmp::Ordering::Less,
        (Err(_), Ok(_)) => std::cmp::Ordering::Greater,
        (Err(_), Err(_)) => a.cmp(b),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compress_expand() {
        let within = Subset::from_indices([1, 3, 4]);
        let s = Subset::from_indices([0, 3, 4]);
        assert_eq!(s.compress(within), Subset::from_indices([1, 2]));
        assert_eq!(s.compress(within).expand(within), s.intersection(within));
    }

    #[test]
    fn subsets_by_size() {
        let all = Subset::all_by_size(3);
        assert_eq!(all.len(), 8);
        assert_eq!(all[0], Subset::EMPTY);
        assert_eq!(all[1], Subset::from_indices([0]));
        assert_eq!(all[4], Subset::from_indices([0, 1]));
        assert_eq!(all[7], Subset::full(3));
    }

    #[test]
    fn ground_set_validation() {
        assert_eq!(
            GroundSet::new(["a", "b", "a"]),
            Err(Error::DuplicateLabel("a".into()))
        );
        let g = GroundSet::numbered(3);
        assert_eq!(g.parse_subset("1,3").unwrap(), Subset::from_indices([0, 2]));
        assert_eq!(g.parse_subset("-").unwrap(), Subset::EMPTY);
        assert!(g.parse_subset("4").is_err());
        assert_eq!(g.format_subset(Subset::from_indices([0, 2])), "{1,3}");
        assert_eq!(
            g.disjoint_union(&GroundSet::numbered(1)),
            Err(Error::OverlappingLabels("1".into()))
        );
    }
}
