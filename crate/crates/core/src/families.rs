//! Constructors for the code families: Hamming, Reed–Muller, narrow-sense
//! primitive BCH, and seeded random codes.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::field::{bch_generator_poly, Gf2mField};
use crate::gf2::{BinaryMatrix, BitVector};

/// Longest code any constructor will materialize.
pub const MAX_LENGTH: usize = 1 << 12;

fn check_length(n: usize) -> Result<()> {
    if n > MAX_LENGTH {
        Err(Error::InvalidParameter(format!(
            "length {n} exceeds the construction cap of {MAX_LENGTH}"
        )))
    } else {
        Ok(())
    }
}

/// The `(2^r − 1, 2^r − 1 − r)` Hamming code whose parity-check columns are
/// the nonzero `r`-bit numbers `1, 2, …, 2^r − 1` in order.
pub fn hamming(r: u32) -> Result<LinearCode> {
    if r < 2 {
        return Err(Error::InvalidParameter(format!(
            "hamming needs r >= 2, got {r}"
        )));
    }
    if r > 12 {
        return Err(Error::InvalidParameter(format!(
            "hamming r = {r} exceeds the length cap"
        )));
    }
    let n = (1usize << r) - 1;
    let h_rows = (0..r as usize)
        .map(|i| BitVector::from_support(n, (0..n).filter(|j| (j + 1) >> i & 1 == 1)))
        .collect();
    let h = BinaryMatrix::new(n, h_rows)?;
    LinearCode::new(BinaryMatrix::new(n, h.null_space())?)
}

/// Evaluation point of coordinate `p` for `RM(·, m)`: variable `x_i` (0-based)
/// is bit `m − 1 − i` of `p`, so coordinates run over points in lexicographic order.
#[inline]
pub fn rm_point_bit(p: usize, m: u32, i: u32) -> bool {
    p >> (m - 1 - i) & 1 == 1
}

/// `RM(r, m)`: evaluation vectors of all monomials of degree `≤ r` in `m`
/// variables, ordered by degree and then lexicographically.
pub fn reed_muller(r: u32, m: u32) -> Result<LinearCode> {
    if r > m {
        return Err(Error::InvalidParameter(format!(
            "reed_muller needs r <= m, got r={r}, m={m}"
        )));
    }
    if m > 12 {
        return Err(Error::InvalidParameter(format!(
            "reed_muller m = {m} exceeds the length cap"
        )));
    }
    let n = 1usize << m;
    check_length(n)?;
    let mut rows = Vec::new();
    for degree in 0..=r {
        for vars in combinations(m, degree) {
            let row = BitVector::from_support(
                n,
                (0..n).filter(|&p| vars.iter().all(|&i| rm_point_bit(p, m, i))),
            );
            rows.push(row);
        }
    }
    Ok(LinearCode::new(BinaryMatrix::new(n, rows)?)?.with_transitive(true))
}

fn combinations(m: u32, size: u32) -> Vec<Vec<u32>> {
    fn go(start: u32, m: u32, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for i in start..m {
            cur.push(i);
            go(i + 1, m, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, m, size, &mut Vec::new(), &mut out);
    out
}

/// Narrow-sense primitive BCH code of length `2^m − 1` with designed
/// distance `designed_d`, over the default primitive polynomial for `m`.
/// Rows of the generator matrix are the shifts `x^i g(x)`.
pub fn bch(m: u32, designed_d: u32) -> Result<LinearCode> {
    let field = Gf2mField::with_default_poly(m)?;
    let n = field.order() as usize;
    check_length(n)?;
    if designed_d < 2 || designed_d as usize > n {
        return Err(Error::InvalidParameter(format!(
            "designed distance {designed_d} outside 2..={n}"
        )));
    }
    let g = bch_generator_poly(&field, designed_d);
    let deg = g.len() - 1;
    let k = n - deg;
    let rows = (0..k)
        .map(|shift| {
            BitVector::from_support(
                n,
                g.iter()
                    .enumerate()
                    .filter(|(_, &c)| c)
                    .map(|(i, _)| i + shift),
            )
        })
        .collect();
    Ok(LinearCode::new(BinaryMatrix::new(n, rows)?)?.with_cyclic(true))
}

/// Full-rank random `(n, k)` code, reproducible for a given seed.
pub fn random_linear_code(n: usize, k: usize, seed: u64) -> Result<LinearCode> {
    if k > n || n == 0 {
        return Err(Error::InvalidParameter(format!(
            "random code needs 0 < n and k <= n, got ({n}, {k})"
        )));
    }
    check_length(n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rows: Vec<BitVector> = Vec::with_capacity(k);
    while rows.len() < k {
        let words = (0..n.div_ceil(64)).map(|_| rng.random::<u64>()).collect();
        let candidate = BitVector::from_words(n, words);
        rows.push(candidate);
        if BinaryMatrix::new(n, rows.clone())?.rank() < rows.len() {
            rows.pop();
        }
    }
    LinearCode::new(BinaryMatrix::new(n, rows)?)
}
