//! Weight-indexed counts (`A_w`, `L_w`, `N_w`, `LS_w`) with arbitrary precision.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::Zero;
use serde::de::{self, Deserialize, Deserializer, MapAccess, Visitor};
use serde::ser::{Serialize, SerializeMap, Serializer};

use crate::error::{Error, Result};

/// Counts keyed by Hamming weight `0..=n`. Zero counts are never stored, so
/// two tallies are equal iff they agree at every weight.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct WeightTally {
    n: usize,
    counts: BTreeMap<usize, BigUint>,
}

impl WeightTally {
    pub fn new(n: usize) -> Self {
        Self {
            n,
            counts: BTreeMap::new(),
        }
    }

    /// Builds a tally from `(weight, count)` pairs; weights above `n` are rejected.
    pub fn from_pairs<C: Into<BigUint>>(
        n: usize,
        pairs: impl IntoIterator<Item = (usize, C)>,
    ) -> Result<Self> {
        let mut t = Self::new(n);
        for (w, c) in pairs {
            t.try_add(w, c.into())?;
        }
        Ok(t)
    }

    /// Builds a tally from a dense per-weight count vector of length `n + 1`.
    pub fn from_dense(counts: &[u128]) -> Self {
        let n = counts.len().saturating_sub(1);
        let mut t = Self::new(n);
        for (w, &c) in counts.iter().enumerate() {
            if c != 0 {
                t.counts.insert(w, BigUint::from(c));
            }
        }
        t
    }

    #[inline]
    pub fn length(&self) -> usize {
        self.n
    }

    pub fn get(&self, w: usize) -> BigUint {
        self.counts.get(&w).cloned().unwrap_or_default()
    }

    pub fn get_ref(&self, w: usize) -> Option<&BigUint> {
        self.counts.get(&w)
    }

    pub fn try_add(&mut self, w: usize, c: BigUint) -> Result<()> {
        if w > self.n {
            return Err(Error::InvalidParameter(format!(
                "weight {w} exceeds tally length {}",
                self.n
            )));
        }
        if !c.is_zero() {
            *self.counts.entry(w).or_default() += c;
        }
        Ok(())
    }

    /// Adds `c` at weight `w`. Panics if `w > n`.
    pub fn add(&mut self, w: usize, c: impl Into<BigUint>) {
        self.try_add(w, c.into())
            .expect("weight within tally length");
    }

    /// Sets weight `w` to exactly `c` (removing the entry when zero).
    pub fn set(&mut self, w: usize, c: BigUint) {
        assert!(w <= self.n, "weight {w} exceeds tally length {}", self.n);
        if c.is_zero() {
            self.counts.remove(&w);
        } else {
            self.counts.insert(w, c);
        }
    }

    /// Elementwise sum. Lengths must match.
    pub fn merge(&mut self, other: &WeightTally) -> Result<()> {
        if self.n != other.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        for (&w, c) in &other.counts {
            *self.counts.entry(w).or_default() += c;
        }
        Ok(())
    }

    /// `factor · self`.
    pub fn scaled(&self, factor: u64) -> WeightTally {
        let mut out = WeightTally::new(self.n);
        if factor != 0 {
            for (&w, c) in &self.counts {
                out.counts.insert(w, c * factor);
            }
        }
        out
    }

    /// Nonzero entries in ascending weight order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, &BigUint)> {
        self.counts.iter().map(|(&w, c)| (w, c))
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn total(&self) -> BigUint {
        self.counts.values().sum()
    }

    /// Smallest weight `> 0` with a nonzero count.
    pub fn min_nonzero_weight(&self) -> Option<usize> {
        self.counts.keys().copied().find(|&w| w > 0)
    }

    pub fn max_weight(&self) -> Option<usize> {
        self.counts.keys().next_back().copied()
    }

    /// Restriction to even weights.
    pub fn even_part(&self) -> WeightTally {
        WeightTally {
            n: self.n,
            counts: self
                .counts
                .iter()
                .filter(|(&w, _)| w % 2 == 0)
                .map(|(&w, c)| (w, c.clone()))
                .collect(),
        }
    }

    /// Parses a compact `weight:count,weight:count` listing. Counts may use
    /// `_` as a digit-group separator.
    pub fn parse_inline(n: usize, text: &str) -> Result<WeightTally> {
        let mut t = WeightTally::new(n);
        for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (w, c) = item.split_once(':').ok_or_else(|| Error::Parse {
                line: 1,
                message: format!("expected weight:count, got {item:?}"),
            })?;
            let w = w.trim().parse::<usize>().map_err(|e| Error::Parse {
                line: 1,
                message: format!("bad weight {w:?}: {e}"),
            })?;
            let c = parse_count(c)?;
            t.try_add(w, c)?;
        }
        Ok(t)
    }

    /// Parses the listing format: one `weight count` pair per line, `#`
    /// comments and blank lines ignored, digit-group commas allowed in counts.
    pub fn parse_listing(n: usize, text: &str) -> Result<WeightTally> {
        let mut t = WeightTally::new(n);
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |message: String| Error::Parse {
                line: idx + 1,
                message,
            };
            let (w, c) = line
                .split_once(char::is_whitespace)
                .ok_or_else(|| err(format!("expected `weight count`, got {line:?}")))?;
            let w = w
                .parse::<usize>()
                .map_err(|e| err(format!("bad weight {w:?}: {e}")))?;
            let c = parse_count(c).map_err(|_| err(format!("bad count {:?}", c.trim())))?;
            t.try_add(w, c).map_err(|e| err(e.to_string()))?;
        }
        Ok(t)
    }

    /// Writes the listing format read by [`WeightTally::parse_listing`].
    pub fn to_listing(&self) -> String {
        self.counts
            .iter()
            .map(|(w, c)| format!("{w} {c}\n"))
            .collect()
    }
}

/// Parses a decimal count, tolerating `_` and `,` digit-group separators.
pub fn parse_count(text: &str) -> Result<BigUint> {
    let digits: String = text
        .trim()
        .chars()
        .filter(|&c| c != '_' && c != ',')
        .collect();
    BigUint::parse_bytes(digits.as_bytes(), 10).ok_or_else(|| Error::Parse {
        line: 1,
        message: format!("bad count {text:?}"),
    })
}

impl fmt::Debug for WeightTally {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeightTally(n={}, {{", self.n)?;
        for (i, (w, c)) in self.counts.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{w}: {c}")?;
        }
        f.write_str("})")
    }
}

/// Serializes the counts as `{"weight": "count"}` with decimal strings; the
/// length is carried by the surrounding document.
impl Serialize for WeightTally {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.counts.len()))?;
        for (w, c) in &self.counts {
            map.serialize_entry(&w.to_string(), &c.to_string())?;
        }
        map.end()
    }
}

/// The tally length is set to the largest weight present; callers that know
/// `n` fix it with [`WeightTally::with_length`].
impl<'de> Deserialize<'de> for WeightTally {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<WeightTally, D::Error> {
        d.deserialize_map(CountsVisitor)
    }
}

struct CountsVisitor;

impl<'de> Visitor<'de> for CountsVisitor {
    type Value = WeightTally;

    fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("a map from weight strings to decimal count strings")
    }

    fn visit_map<A: MapAccess<'de>>(
        self,
        mut access: A,
    ) -> std::result::Result<WeightTally, A::Error> {
        let mut counts = BTreeMap::new();
        while let Some((w, c)) = access.next_entry::<String, String>()? {
            let w: usize = w.parse().map_err(de::Error::custom)?;
            let c = parse_count(&c).map_err(de::Error::custom)?;
            if !c.is_zero() {
                counts.insert(w, c);
            }
        }
        let n = counts.keys().next_back().copied().unwrap_or(0);
        Ok(WeightTally { n, counts })
    }
}

impl WeightTally {
    /// Re-labels the tally length; fails if a stored weight exceeds `n`.
    pub fn with_length(mut self, n: usize) -> Result<WeightTally> {
        if let Some(w) = self.max_weight().filter(|&w| w > n) {
            return Err(Error::InvalidParameter(format!(
                "weight {w} exceeds tally length {n}"
            )));
        }
        self.n = n;
        Ok(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn listing_round_trip() {
        let t =
            WeightTally::parse_listing(127, "# column\n31 2,667\n\n32   8,001 # pair\n").unwrap();
        assert_eq!(t.get(32), BigUint::from(8001u32));
        assert_eq!(WeightTally::parse_listing(127, &t.to_listing()).unwrap(), t);
        assert!(matches!(
            WeightTally::parse_listing(127, "31 2667\n32\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            WeightTally::parse_listing(127, "31 26x7\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(WeightTally::parse_listing(7, "8 1\n").is_err());
    }

    #[test]
    fn zero_counts_are_not_stored() {
        let mut a = WeightTally::new(7);
        a.add(3, 0u32);
        assert!(a.is_empty());
        a.add(3, 7u32);
        a.add(4, 7u32);
        let b = WeightTally::from_pairs(7, [(4, 7u32), (3, 7u32), (5, 0u32)]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.get(5), BigUint::zero());
        assert_eq!(a.min_nonzero_weight(), Some(3));
    }

    #[test]
    fn merge_checks_length() {
        let mut a = WeightTally::from_dense(&[1, 0, 2]);
        let b = WeightTally::from_dense(&[0, 1, 1]);
        a.merge(&b).unwrap();
        assert_eq!(a, WeightTally::from_dense(&[1, 1, 3]));
        assert!(a.merge(&WeightTally::new(5)).is_err());
    }

    #[test]
    fn out_of_range_weight() {
        assert!(WeightTally::from_pairs(3, [(4, 1u32)]).is_err());
    }

    #[test]
    fn inline_parse() {
        let t = WeightTally::parse_inline(128, "32:10668, 36:1_000").unwrap();
        assert_eq!(t.get(32), BigUint::from(10668u32));
        assert_eq!(t.get(36), BigUint::from(1000u32));
        assert!(WeightTally::parse_inline(7, "3=7").is_err());
        assert!(parse_count("12a").is_err());
        assert_eq!(
            parse_count("1,481,008,226,366,914,560")
                .unwrap()
                .to_string(),
            "1481008226366914560"
        );
    }
}
