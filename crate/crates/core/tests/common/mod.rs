//! Independent oracles: support scans over explicitly listed codewords, with
//! no rank computations.

#![allow(dead_code)]

use std::collections::BTreeMap;

use lwd_core::{
    bch, enumerate_codewords, hamming, random_linear_code, reed_muller, BitVector, Limits,
    LinearCode,
};

pub fn codewords(code: &LinearCode) -> Vec<BitVector> {
    enumerate_codewords(code.generator(), Limits::default())
        .expect("small code")
        .collect()
}

fn is_strict_subset(a: &BitVector, b: &BitVector) -> bool {
    a != b && a.words().iter().zip(b.words()).all(|(x, y)| x & !y == 0)
}

/// Nonzero codewords whose support strictly contains no other nonzero
/// codeword's support, by comparing against every codeword.
pub fn neighbors_by_full_scan(code: &LinearCode) -> Vec<BitVector> {
    let words = codewords(code);
    words
        .iter()
        .filter(|v| !v.is_zero())
        .filter(|v| !words.iter().any(|c| !c.is_zero() && is_strict_subset(c, v)))
        .cloned()
        .collect()
}

/// Same set as [`neighbors_by_full_scan`], scanning words by increasing
/// weight and comparing only against minimal words found so far. A word is
/// non-minimal iff some minimal word sits strictly inside it.
pub fn neighbors_by_weight_order(code: &LinearCode) -> Vec<BitVector> {
    let mut words: Vec<BitVector> = codewords(code)
        .into_iter()
        .filter(|v| !v.is_zero())
        .collect();
    words.sort_by_key(BitVector::weight);
    let mut minimal: Vec<BitVector> = Vec::new();
    for v in words {
        if !minimal.iter().any(|m| is_strict_subset(m, &v)) {
            minimal.push(v);
        }
    }
    minimal
}

pub fn tally_weights(n: usize, words: &[BitVector]) -> lwd_core::WeightTally {
    let mut dense = vec![0u128; n + 1];
    for w in words {
        dense[w.weight()] += 1;
    }
    lwd_core::WeightTally::from_dense(&dense)
        .with_length(n)
        .unwrap()
}

/// `L` by the weight-order support scan.
pub fn oracle_lwd(code: &LinearCode) -> lwd_core::WeightTally {
    tally_weights(code.n(), &neighbors_by_weight_order(code))
}

/// `A` by listing codewords.
pub fn oracle_weights(code: &LinearCode) -> lwd_core::WeightTally {
    tally_weights(code.n(), &codewords(code))
}

/// `N`: even-weight non-minimal words none of whose disjoint splittings
/// `v = c + (v − c)` (with `c` a nonzero codeword strictly inside `v`) have
/// even-weight parts.
pub fn oracle_only_odd(code: &LinearCode) -> lwd_core::WeightTally {
    let words = codewords(code);
    let mut found = Vec::new();
    for v in words.iter().filter(|v| !v.is_zero() && v.weight() % 2 == 0) {
        let inside: Vec<&BitVector> = words
            .iter()
            .filter(|c| !c.is_zero() && is_strict_subset(c, v))
            .collect();
        if !inside.is_empty() && inside.iter().all(|c| c.weight() % 2 == 1) {
            found.push(v.clone());
        }
    }
    tally_weights(code.n(), &found)
}

pub fn small_random_codes(count: u64, seed_base: u64) -> Vec<LinearCode> {
    (0..count)
        .map(|i| {
            let seed = seed_base + i;
            let n = 4 + (seed % 11) as usize;
            let k = 1 + ((seed / 11) % 8) as usize;
            random_linear_code(n, k.min(n), seed).unwrap()
        })
        .collect()
}

/// Named structured codes of dimension at most 16.
pub fn structured_codes() -> BTreeMap<String, LinearCode> {
    let mut out = BTreeMap::new();
    for r in 2..=4 {
        out.insert(format!("hamming({r})"), hamming(r).unwrap());
    }
    for m in 1..=5 {
        for r in 0..=m {
            let c = reed_muller(r, m).unwrap();
            if c.k() <= 16 {
                out.insert(format!("rm({r},{m})"), c);
            }
        }
    }
    for m in 3..=5 {
        let n = (1u32 << m) - 1;
        for d in 2..=n {
            let c = bch(m, d).unwrap();
            if c.k() >= 1 && c.k() <= 16 {
                out.entry(format!("bch({m}, k={})", c.k())).or_insert(c);
            }
        }
    }
    let derived: Vec<(String, LinearCode)> = out
        .iter()
        .filter(|(_, c)| c.n() <= 32)
        .flat_map(|(name, c)| {
            let mut v = vec![(format!("{name}.ex"), c.extend())];
            if c.has_odd_weight_word() && c.k() > 1 {
                v.push((format!("{name}.even"), c.even_subcode()));
            }
            v
        })
        .filter(|(_, c)| c.k() <= 16)
        .collect();
    out.extend(derived);
    out
}
