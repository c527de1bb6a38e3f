//! Exhaustive codeword enumeration in Gray-code order.
//!
//! Message index `i` maps to the message vector `gray(i) = i ^ (i >> 1)`, so
//! step `i` flips exactly message bit `i.trailing_zeros()` and costs one row XOR.
//! Parallel sweeps split the index range `0..2^k` into contiguous blocks; each
//! block seeds its first codeword directly and then walks the Gray sequence.

use crate::error::{Error, Result};
use crate::gf2::{BinaryMatrix, BitVector};

/// Enumeration limits. `max_dimension` bounds `k` for full-code sweeps and
/// `max_support_subcode_dim` bounds the support-subcode walks done by `classify`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_dimension: u32,
    pub max_support_subcode_dim: u32,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            max_dimension: 30,
            max_support_subcode_dim: 20,
        }
    }
}

impl Limits {
    /// Lifts both caps to the hard ceiling of the 64-bit message counter.
    pub fn unbounded() -> Self {
        Self {
            max_dimension: 63,
            max_support_subcode_dim: 63,
        }
    }

    pub fn check_dimension(&self, k: usize) -> Result<()> {
        if k > self.max_dimension as usize || k > 63 {
            Err(Error::EnumerationCap {
                dimension: k,
                cap: self.max_dimension.min(63),
            })
        } else {
            Ok(())
        }
    }
}

#[inline]
pub fn gray(i: u64) -> u64 {
    i ^ (i >> 1)
}

/// Iterator over all `2^k` codewords of a basis, zero word first.
pub struct Codewords<'a> {
    rows: &'a [BitVector],
    current: BitVector,
    start: u64,
    next_index: u64,
    end: u64,
}

impl<'a> Codewords<'a> {
    /// Iterates the codewords of `g`, refusing `k` above `limits.max_dimension`.
    pub fn new(g: &'a BinaryMatrix, limits: Limits) -> Result<Self> {
        limits.check_dimension(g.num_rows())?;
        Ok(Self::range(g.rows(), g.num_cols(), 0, 1u64 << g.num_rows()))
    }

    /// Codewords for message indices `start..end` of the Gray sequence.
    pub(crate) fn range(rows: &'a [BitVector], n: usize, start: u64, end: u64) -> Self {
        let mut current = BitVector::zeros(n);
        let g = gray(start);
        for (j, row) in rows.iter().enumerate() {
            if (g >> j) & 1 == 1 {
                current.xor_assign(row);
            }
        }
        Self {
            rows,
            current,
            start,
            next_index: start,
            end,
        }
    }

    /// Visits the remaining codewords by reference, without cloning.
    pub fn for_each_ref(mut self, mut f: impl FnMut(&BitVector)) {
        while self.next_index < self.end {
            if self.next_index > self.start {
                let bit = self.next_index.trailing_zeros() as usize;
                self.current.xor_assign(&self.rows[bit]);
            }
            f(&self.current);
            self.next_index += 1;
        }
    }
}

impl Iterator for Codewords<'_> {
    type Item = BitVector;

    fn next(&mut self) -> Option<BitVector> {
        if self.next_index >= self.end {
            return None;
        }
        if self.next_index > self.start {
            let bit = self.next_index.trailing_zeros() as usize;
            self.current.xor_assign(&self.rows[bit]);
        }
        self.next_index += 1;
        Some(self.current.clone())
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end - self.next_index) as usize;
        (left, Some(left))
    }
}

/// All codewords of `g` in Gray order.
pub fn enumerate_codewords(g: &BinaryMatrix, limits: Limits) -> Result<Codewords<'_>> {
    Codewords::new(g, limits)
}

/// Sweeps every codeword of `g` split into `partitions` contiguous blocks.
///
/// Each block gets private state from `init` and runs on its own scoped
/// thread; the returned states are in block order so callers can merge
/// deterministically.
pub fn sweep_blocks<S, I, V>(
    g: &BinaryMatrix,
    limits: Limits,
    partitions: usize,
    init: I,
    visit: V,
) -> Result<Vec<S>>
where
    S: Send,
    I: Fn() -> S + Sync,
    V: Fn(&mut S, &BitVector) + Sync,
{
    let k = g.num_rows();
    limits.check_dimension(k)?;
    let total = 1u64 << k;
    let blocks = (partitions.max(1) as u64).min(total);
    let bounds: Vec<(u64, u64)> = (0..blocks)
        .map(|b| (total * b / blocks, total * (b + 1) / blocks))
        .collect();
    let n = g.num_cols();
    let rows = g.rows();

    let run = |(start, end): (u64, u64)| {
        let mut state = init();
        Codewords::range(rows, n, start, end).for_each_ref(|c| visit(&mut state, c));
        state
    };

    if bounds.len() == 1 {
        return Ok(vec![run(bounds[0])]);
    }
    Ok(std::thread::scope(|scope| {
        let handles: Vec<_> = bounds
            .iter()
            .map(|&b| scope.spawn(move || run(b)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("sweep worker panicked"))
            .collect()
    }))
}
