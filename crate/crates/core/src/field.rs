//! GF(2^m) arithmetic via log/antilog tables, and the minimal polynomials
//! needed to build primitive BCH generator polynomials.

use crate::error::{Error, Result};

/// Default primitive polynomial for each supported extension degree, as a bit
/// mask with bit `i` holding the coefficient of `x^i`.
pub fn default_primitive_poly(m: u32) -> Option<u32> {
    Some(match m {
        2 => 0b111,       // x^2 + x + 1
        3 => 0b1011,      // x^3 + x + 1
        4 => 0b1_0011,    // x^4 + x + 1
        5 => 0b10_0101,   // x^5 + x^2 + 1
        6 => 0b100_0011,  // x^6 + x + 1
        7 => 0b1000_1001, // x^7 + x^3 + 1
        8 => 0x11D,       // x^8 + x^4 + x^3 + x^2 + 1
        9 => 0x211,       // x^9 + x^4 + 1
        10 => 0x409,      // x^10 + x^3 + 1
        _ => return None,
    })
}

#[derive(Clone, Debug)]
pub struct Gf2mField {
    m: u32,
    poly: u32,
    exp: Vec<u32>,
    log: Vec<u32>,
}

impl Gf2mField {
    /// Builds the field from a primitive polynomial; fails if `x` does not
    /// have multiplicative order exactly `2^m − 1`.
    pub fn new(m: u32, poly: u32) -> Result<Self> {
        if !(1..=20).contains(&m) || poly >> m != 1 {
            return Err(Error::InvalidParameter(format!(
                "polynomial {poly:#b} is not of degree {m}"
            )));
        }
        let order = (1u32 << m) - 1;
        let mut exp = Vec::with_capacity(order as usize);
        let mut log = vec![u32::MAX; 1 << m];
        let mut a = 1u32;
        for i in 0..order {
            if log[a as usize] != u32::MAX {
                return Err(Error::InvalidParameter(format!(
                    "polynomial {poly:#b} is not primitive (x has order {i})"
                )));
            }
            log[a as usize] = i;
            exp.push(a);
            a <<= 1;
            if a >> m & 1 == 1 {
                a ^= poly;
            }
        }
        debug_assert_eq!(a, 1);
        Ok(Self { m, poly, exp, log })
    }

    pub fn with_default_poly(m: u32) -> Result<Self> {
        let poly = default_primitive_poly(m).ok_or_else(|| {
            Error::InvalidParameter(format!("no default primitive polynomial for m = {m}"))
        })?;
        Self::new(m, poly)
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn primitive_poly(&self) -> u32 {
        self.poly
    }

    /// Multiplicative group order `2^m − 1`.
    pub fn order(&self) -> u32 {
        self.exp.len() as u32
    }

    /// `α^e`.
    pub fn alpha_pow(&self, e: u64) -> u32 {
        self.exp[(e % self.exp.len() as u64) as usize]
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let s = self.log[a as usize] as usize + self.log[b as usize] as usize;
        self.exp[s % self.exp.len()]
    }

    /// The cyclotomic coset `{e·2^j mod (2^m − 1)}` containing `e`, sorted.
    pub fn cyclotomic_coset(&self, e: u32) -> Vec<u32> {
        let n = self.order();
        let mut coset = Vec::new();
        let mut x = e % n;
        while !coset.contains(&x) {
            coset.push(x);
            x = (x * 2) % n;
        }
        coset.sort_unstable();
        coset
    }

    /// Minimal polynomial of `α^e` over GF(2); coefficient `i` is at index `i`.
    pub fn minimal_poly(&self, e: u32) -> Vec<bool> {
        // ∏ (x + α^c) over the conjugates, computed in GF(2^m)[x].
        let mut p: Vec<u32> = vec![1];
        for c in self.cyclotomic_coset(e) {
            let root = self.alpha_pow(c as u64);
            let mut next = vec![0u32; p.len() + 1];
            for (i, &coef) in p.iter().enumerate() {
                next[i + 1] ^= coef;
                next[i] ^= self.mul(coef, root);
            }
            p = next;
        }
        p.into_iter()
            .map(|c| {
                debug_assert!(c <= 1, "minimal polynomial coefficient outside GF(2)");
                c == 1
            })
            .collect()
    }
}

/// Product of two binary polynomials given as coefficient vectors.
pub fn poly_mul(a: &[bool], b: &[bool]) -> Vec<bool> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![false; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x {
            for (j, &y) in b.iter().enumerate() {
                out[i + j] ^= y;
            }
        }
    }
    out
}

/// Generator polynomial of the narrow-sense primitive BCH code of length
/// `2^m − 1` and designed distance `designed_d`: the lcm of the minimal
/// polynomials of `α, α^2, …, α^(designed_d − 1)`.
pub fn bch_generator_poly(field: &Gf2mField, designed_d: u32) -> Vec<bool> {
    let mut seen = std::collections::BTreeSet::new();
    let mut g = vec![true];
    for e in 1..designed_d {
        let coset = field.cyclotomic_coset(e);
        if seen.insert(coset[0]) {
            g = poly_mul(&g, &field.minimal_poly(coset[0]));
        }
    }
    g
}
