use std::fmt;

use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::gf2::BitVector;

/// A permutation of coordinates `0..n`, stored as the image of each coordinate.
/// Applying it moves the bit at coordinate `i` to coordinate `images[i]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for (i, &p) in images.iter().enumerate() {
            if p >= n {
                return Err(Error::InvalidPermutation(format!(
                    "image {p} of coordinate {i} is out of range for length {n}"
                )));
            }
            if std::mem::replace(&mut seen[p], true) {
                return Err(Error::InvalidPermutation(format!(
                    "image {p} appears twice"
                )));
            }
        }
        Ok(Self { images })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            images: (0..n).collect(),
        }
    }

    /// `i → i + shift mod n`.
    pub fn cyclic_shift(n: usize, shift: usize) -> Self {
        Self {
            images: (0..n).map(|i| (i + shift) % n.max(1)).collect(),
        }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    #[inline]
    pub fn image(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &p)| i == p)
    }

    /// Coordinate `images[i]` of the result is coordinate `i` of `v`.
    pub fn apply(&self, v: &BitVector) -> Result<BitVector> {
        if v.len() != self.len() {
            return Err(Error::LengthMismatch {
                expected: self.len(),
                found: v.len(),
            });
        }
        Ok(BitVector::from_support(
            v.len(),
            v.support().map(|i| self.images[i]),
        ))
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(
            self.len(),
            other.len(),
            "composing permutations of different lengths"
        );
        Permutation {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.len()];
        for (i, &p) in self.images.iter().enumerate() {
            images[p] = i;
        }
        Permutation { images }
    }

    /// Smallest `t ≥ 1` with `self^t = id`.
    pub fn order(&self) -> u64 {
        let mut seen = vec![false; self.len()];
        let mut order = 1u64;
        for start in 0..self.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0u64;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.images[i];
                len += 1;
            }
            order = lcm(order, len);
        }
        order
    }

    /// True iff the image of every generator row lies in `code`.
    pub fn is_automorphism(&self, code: &LinearCode) -> bool {
        self.len() == code.n()
            && code.generator().rows().iter().all(|r| {
                code.echelon()
                    .contains(&self.apply(r).expect("length checked"))
            })
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    fn gcd(a: u64, b: u64) -> u64 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    a / gcd(a, b) * b
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.images.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

/// Parses one permutation per line as whitespace-separated 0-indexed images.
/// Blank lines and `#` comments are skipped. With `n` given, every
/// permutation must have that length.
pub fn parse_permutations(text: &str, n: Option<usize>) -> Result<Vec<Permutation>> {
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let images = line
            .split_whitespace()
            .map(|t| {
                t.parse::<usize>().map_err(|e| Error::Parse {
                    line: idx + 1,
                    message: format!("bad image {t:?}: {e}"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        if let Some(n) = n.filter(|&n| n != images.len()) {
            return Err(Error::Parse {
                line: idx + 1,
                message: format!("permutation has {} images, expected {n}", images.len()),
            });
        }
        out.push(Permutation::new(images).map_err(|e| Error::Parse {
            line: idx + 1,
            message: e.to_string(),
        })?);
    }
    Ok(out)
}

pub fn format_permutations(perms: &[Permutation]) -> String {
    perms.iter().map(|p| format!("{p}\n")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{bch, random_linear_code};

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::new(vec![0, 0, 1]).is_err());
        assert!(Permutation::new(vec![0, 3, 1]).is_err());
        assert!(Permutation::new(vec![2, 0, 1]).is_ok());
    }

    #[test]
    fn shift_moves_bits_forward() {
        let s = Permutation::cyclic_shift(7, 1);
        let v: BitVector = "1000000".parse().unwrap();
        assert_eq!(s.apply(&v).unwrap().to_string(), "0100000");
        assert_eq!(s.order(), 7);
        assert!(Permutation::identity(5).is_identity());
        assert!(s.apply(&"10".parse().unwrap()).is_err());
    }

    #[test]
    fn compose_and_inverse() {
        let a = Permutation::new(vec![1, 2, 0, 3]).unwrap();
        let b = Permutation::new(vec![3, 2, 1, 0]).unwrap();
        let v: BitVector = "1100".parse().unwrap();
        let ab = a.compose(&b);
        assert_eq!(
            ab.apply(&v).unwrap(),
            a.apply(&b.apply(&v).unwrap()).unwrap()
        );
        assert!(a.compose(&a.inverse()).is_identity());
    }

    #[test]
    fn automorphisms() {
        let c = bch(4, 5).unwrap();
        assert!(Permutation::cyclic_shift(15, 1).is_automorphism(&c));
        assert!(Permutation::identity(15).is_automorphism(&c));
        let r = random_linear_code(15, 5, 3).unwrap();
        assert!(!Permutation::cyclic_shift(15, 1).is_automorphism(&r));
    }

    #[test]
    fn text_round_trip() {
        let perms = vec![Permutation::cyclic_shift(5, 2), Permutation::identity(5)];
        let text = format_permutations(&perms);
        assert_eq!(text, "2 3 4 0 1\n0 1 2 3 4\n");
        assert_eq!(
            parse_permutations(&format!("# gens\n{text}"), Some(5)).unwrap(),
            perms
        );
        assert!(parse_permutations("0 1 2\n", Some(4)).is_err());
        assert!(matches!(
            parse_permutations("0 0\n", None),
            Err(Error::Parse { line: 1, .. })
        ));
    }
}
