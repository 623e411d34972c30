use std::fmt;

use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A subset of the marks `{1, ..., n}` (at most 64 marks).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MarkSet(u64);

pub const MAX_MARKS: usize = 64;

impl MarkSet {
    pub fn empty() -> Self {
        MarkSet(0)
    }

    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_MARKS);
        MarkSet(if n == MAX_MARKS {
            u64::MAX
        } else {
            (1u64 << n) - 1
        })
    }

    pub fn from_bits(bits: u64) -> Self {
        MarkSet(bits)
    }

    pub fn from_marks<I: IntoIterator<Item = usize>>(marks: I, n: usize) -> Result<Self> {
        let mut set = MarkSet::empty();
        for m in marks {
            if m == 0 || m > n {
                return Err(Error::MarkOutOfRange { index: m, n });
            }
            set.0 |= 1 << (m - 1);
        }
        Ok(set)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, mark: usize) -> bool {
        (1..=MAX_MARKS).contains(&mark) && self.0 >> (mark - 1) & 1 == 1
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn complement(self, n: usize) -> Self {
        MarkSet(!self.0 & MarkSet::full(n).0)
    }

    pub fn is_within(self, n: usize) -> bool {
        self.0 & !MarkSet::full(n).0 == 0
    }

    /// Marks in increasing order, 1-based.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..MAX_MARKS)
            .filter(move |i| self.0 >> i & 1 == 1)
            .map(|i| i + 1)
    }

    /// All subsets of `{1..n}` in increasing bit order.
    pub fn all(n: usize) -> impl Iterator<Item = MarkSet> {
        assert!(n < MAX_MARKS);
        (0..1u64 << n).map(MarkSet)
    }
}

impl fmt::Display for MarkSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.iter().map(|m| m.to_string()).collect();
        write!(f, "{{{}}}", items.join(","))
    }
}

impl Serialize for MarkSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.iter().collect::<Vec<_>>().serialize(s)
    }
}

impl<'de> Deserialize<'de> for MarkSet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let marks = Vec::<usize>::deserialize(d)?;
        MarkSet::from_marks(marks, MAX_MARKS).map_err(de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_basics() {
        let s = MarkSet::from_marks([1, 3], 4).unwrap();
        assert_eq!(s.len(), 2);
        assert!(s.contains(3) && !s.contains(2));
        assert_eq!(s.complement(4).iter().collect::<Vec<_>>(), vec![2, 4]);
        assert_eq!(s.to_string(), "{1,3}");
        assert!(MarkSet::from_marks([5], 4).is_err());
        assert_eq!(MarkSet::all(3).count(), 8);
        assert_eq!(serde_json::to_string(&s).unwrap(), "[1,3]");
    }
}
