//! Ground set elements and small element sets.
//!
//! Every matroid in this crate lives on at most [`MAX_GROUND`] elements, so a
//! set of elements fits in one machine word.  All set operations below are
//! plain bit twiddling on a `u64` mask indexed by element id.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// Hard cap on ground set size.
pub const MAX_GROUND: usize = 20;

/// Largest element id representable in an [`ElemSet`] mask.
pub const MAX_ID: u32 = 63;

/// A ground set element, identified by a small non-negative integer.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Element(pub u32);

impl Element {
    pub fn id(self) -> u32 {
        self.0
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A set of elements with ids below [`MAX_ID`], stored as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ElemSet(u64);

impl ElemSet {
    pub const EMPTY: ElemSet = ElemSet(0);

    pub fn singleton(e: Element) -> ElemSet {
        ElemSet(1u64 << e.0)
    }

    /// Builds a set from raw ids, rejecting ids that do not fit in the mask.
    pub fn from_ids(ids: &[u32]) -> Result<ElemSet, Error> {
        let mut mask = 0u64;
        for &id in ids {
            if id > MAX_ID {
                return Err(Error::IdTooLarge(id));
            }
            mask |= 1u64 << id;
        }
        Ok(ElemSet(mask))
    }

    pub fn from_elems(elems: &[Element]) -> Result<ElemSet, Error> {
        let ids: Vec<u32> = elems.iter().map(|e| e.0).collect();
        ElemSet::from_ids(&ids)
    }

    pub fn from_mask(mask: u64) -> ElemSet {
        ElemSet(mask)
    }

    pub fn mask(self) -> u64 {
        self.0
    }

    pub fn contains(self, e: Element) -> bool {
        self.0 & (1u64 << e.0) != 0
    }

    pub fn with(self, e: Element) -> ElemSet {
        ElemSet(self.0 | (1u64 << e.0))
    }

    pub fn without(self, e: Element) -> ElemSet {
        ElemSet(self.0 & !(1u64 << e.0))
    }

    pub fn union(self, other: ElemSet) -> ElemSet {
        ElemSet(self.0 | other.0)
    }

    pub fn intersection(self, other: ElemSet) -> ElemSet {
        ElemSet(self.0 & other.0)
    }

    pub fn difference(self, other: ElemSet) -> ElemSet {
        ElemSet(self.0 & !other.0)
    }

    pub fn is_subset_of(self, other: ElemSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Elements in ascending id order.
    pub fn iter(self) -> impl Iterator<Item = Element> {
        let mut mask = self.0;
        std::iter::from_fn(move || {
            if mask == 0 {
                None
            } else {
                let id = mask.trailing_zeros();
                mask &= mask - 1;
                Some(Element(id))
            }
        })
    }

    pub fn min_elem(self) -> Option<Element> {
        if self.0 == 0 {
            None
        } else {
            Some(Element(self.0.trailing_zeros()))
        }
    }

    pub fn max_elem(self) -> Option<Element> {
        if self.0 == 0 {
            None
        } else {
            Some(Element(63 - self.0.leading_zeros()))
        }
    }

    pub fn ids(self) -> Vec<u32> {
        self.iter().map(|e| e.0).collect()
    }
}

impl fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for ElemSet {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.ids().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ElemSet {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let ids = Vec::<u32>::deserialize(deserializer)?;
        ElemSet::from_ids(&ids).map_err(serde::de::Error::custom)
    }
}

impl FromIterator<Element> for ElemSet {
    /// Panics on ids above [`MAX_ID`]; use [`ElemSet::from_ids`] for untrusted input.
    fn from_iter<I: IntoIterator<Item = Element>>(iter: I) -> Self {
        let mut mask = 0u64;
        for e in iter {
            assert!(e.0 <= MAX_ID, "element id {} out of range", e.0);
            mask |= 1u64 << e.0;
        }
        ElemSet(mask)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_basics() {
        let s = ElemSet::from_ids(&[3, 1, 5]).unwrap();
        assert_eq!(s.len(), 3);
        assert_eq!(s.ids(), vec![1, 3, 5]);
        assert_eq!(s.min_elem(), Some(Element(1)));
        assert_eq!(s.max_elem(), Some(Element(5)));
        assert!(s.contains(Element(3)));
        assert!(!s.contains(Element(2)));
        assert_eq!(s.to_string(), "{1,3,5}");
    }

    #[test]
    fn set_algebra() {
        let a = ElemSet::from_ids(&[1, 2, 3]).unwrap();
        let b = ElemSet::from_ids(&[3, 4]).unwrap();
        assert_eq!(a.union(b).ids(), vec![1, 2, 3, 4]);
        assert_eq!(a.intersection(b).ids(), vec![3]);
        assert_eq!(a.difference(b).ids(), vec![1, 2]);
        assert!(a.intersection(b).is_subset_of(a));
    }

    #[test]
    fn oversized_id_rejected() {
        assert!(matches!(
            ElemSet::from_ids(&[64]),
            Err(Error::IdTooLarge(64))
        ));
    }
}
