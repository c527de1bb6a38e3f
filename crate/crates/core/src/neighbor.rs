//! Zero neighbors (minimal codewords), decomposability classes, and the
//! weight spectra `A_w`, `L_w`, `N_w` computed by exhaustive sweep.
//!
//! A nonzero codeword `v` is a zero neighbor iff no other nonzero codeword has
//! support strictly inside `Supp(v)`, i.e. iff the support subcode
//! `C_S = {c ∈ C : Supp(c) ⊆ Supp(v)}` is `{0, v}`. We decide this by rank:
//! `dim C_S = k − rank{g_j : j ∉ Supp(v)}` where `g_j` are the columns of `G`.

use crate::code::LinearCode;
use crate::enumerate::{gray, sweep_blocks, Limits};
use crate::error::{Error, Result};
use crate::gf2::{self, BitVector};
use crate::tally::WeightTally;

/// Decomposability class of a nonzero codeword.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DecompCategory {
    /// A zero neighbor.
    Indecomposable,
    /// Decomposable, odd weight.
    DecomposableOddWeight,
    /// Even weight; every disjoint decomposition has two odd-weight parts.
    OnlyOddDecomposable,
    /// Even weight; some disjoint decomposition has two even-weight parts.
    EvenDecomposable,
}

/// Rank-based zero-neighbor test with the generator columns packed as `u128`.
/// Supports dimensions up to 128.
#[derive(Clone, Debug)]
pub struct NeighborTester {
    n: usize,
    k: usize,
    columns: Vec<u128>,
    rows: Vec<BitVector>,
}

impl NeighborTester {
    pub const MAX_DIMENSION: usize = 128;

    pub fn new(code: &LinearCode) -> Option<Self> {
        let g = code.generator();
        let k = g.num_rows();
        if k > Self::MAX_DIMENSION {
            return None;
        }
        let columns = (0..g.num_cols())
            .map(|j| {
                g.rows()
                    .iter()
                    .enumerate()
                    .filter(|(_, r)| r.get(j))
                    .fold(0u128, |acc, (i, _)| acc | 1u128 << i)
            })
            .collect();
        Some(Self {
            n: g.num_cols(),
            k,
            columns,
            rows: g.rows().to_vec(),
        })
    }

    fn outside_columns<'a>(&'a self, v: &'a BitVector) -> impl Iterator<Item = u128> + 'a {
        let n = self.n;
        v.words().iter().enumerate().flat_map(move |(wi, &w)| {
            let base = wi * 64;
            let valid = if base + 64 <= n {
                u64::MAX
            } else {
                (1u64 << (n - base)) - 1
            };
            let mut rest = !w & valid;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let b = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(self.columns[base + b])
            })
        })
    }

    /// Rank of the columns outside `Supp(v)`, stopping early once it reaches `stop_at`.
    fn outside_rank(&self, v: &BitVector, stop_at: usize) -> usize {
        let mut basis = [0u128; Self::MAX_DIMENSION];
        let mut rank = 0;
        if rank >= stop_at {
            return rank;
        }
        for mut x in self.outside_columns(v) {
            while x != 0 {
                let top = 127 - x.leading_zeros() as usize;
                if basis[top] == 0 {
                    basis[top] = x;
                    rank += 1;
                    break;
                }
                x ^= basis[top];
            }
            if rank >= stop_at {
                break;
            }
        }
        rank
    }

    /// `dim{c ∈ C : Supp(c) ⊆ Supp(v)}`.
    pub fn support_subcode_dim(&self, v: &BitVector) -> usize {
        self.k - self.outside_rank(v, self.k)
    }

    /// Zero-neighbor test for a nonzero codeword `v` (membership is not checked).
    #[inline]
    pub fn is_neighbor(&self, v: &BitVector) -> bool {
        // v itself lies in C_S, so the outside rank never exceeds k − 1.
        let target = self.k.saturating_sub(1);
        self.outside_rank(v, target) == target
    }

    /// Basis of the support subcode of `v`, as codewords.
    pub fn support_subcode_basis(&self, v: &BitVector) -> Vec<BitVector> {
        // Gauss-Jordan over the outside columns, then read the kernel off the free bits.
        let mut reduced: Vec<(usize, u128)> = Vec::new();
        for mut x in self.outside_columns(v) {
            for &(p, r) in &reduced {
                if x >> p & 1 == 1 {
                    x ^= r;
                }
            }
            if x == 0 {
                continue;
            }
            let p = x.trailing_zeros() as usize;
            for entry in reduced.iter_mut() {
                if entry.1 >> p & 1 == 1 {
                    entry.1 ^= x;
                }
            }
            reduced.push((p, x));
        }
        let pivot_mask = reduced.iter().fold(0u128, |m, &(p, _)| m | 1u128 << p);
        (0..self.k)
            .filter(|&f| pivot_mask >> f & 1 == 0)
            .map(|f| {
                let mut msg = 1u128 << f;
                for &(p, r) in &reduced {
                    if r >> f & 1 == 1 {
                        msg |= 1u128 << p;
                    }
                }
                let mut c = BitVector::zeros(self.n);
                for (i, row) in self.rows.iter().enumerate() {
                    if msg >> i & 1 == 1 {
                        c.xor_assign(row);
                    }
                }
                c
            })
            .collect()
    }

    /// Decomposability class of a nonzero codeword `v`.
    pub fn classify(&self, v: &BitVector, limits: &Limits) -> Result<DecompCategory> {
        if self.is_neighbor(v) {
            return Ok(DecompCategory::Indecomposable);
        }
        if v.parity() {
            return Ok(DecompCategory::DecomposableOddWeight);
        }
        let basis = self.support_subcode_basis(v);
        classify_even_by_basis(v, &basis, limits)
    }
}

/// Walks `C_S` looking for an even-weight element other than `0` and `v`.
/// Any disjoint decomposition `v = v1 + v2` has `v1 ∈ C_S \ {0, v}`, and for
/// even `wt(v)` both parts share a parity.
fn classify_even_by_basis(
    v: &BitVector,
    basis: &[BitVector],
    limits: &Limits,
) -> Result<DecompCategory> {
    let dim = basis.len();
    if dim > limits.max_support_subcode_dim as usize || dim > 63 {
        return Err(Error::SupportSubcodeCap {
            dimension: dim,
            cap: limits.max_support_subcode_dim,
        });
    }
    let mut c = BitVector::zeros(v.len());
    for i in 1u64..(1u64 << dim) {
        c.xor_assign(&basis[i.trailing_zeros() as usize]);
        if !c.parity() && c != *v {
            return Ok(DecompCategory::EvenDecomposable);
        }
    }
    Ok(DecompCategory::OnlyOddDecomposable)
}

fn check_member(code: &LinearCode, v: &BitVector) -> Result<()> {
    if !code.contains(v)? {
        return Err(Error::NotACodeword);
    }
    if v.is_zero() {
        return Err(Error::ZeroWord);
    }
    Ok(())
}

/// Zero-neighbor test for a nonzero codeword of `code`.
pub fn is_zero_neighbor(code: &LinearCode, v: &BitVector) -> Result<bool> {
    check_member(code, v)?;
    match NeighborTester::new(code) {
        Some(t) => Ok(t.is_neighbor(v)),
        None => Ok(gf2::support_subcode_dim(code.generator(), v)? == 1),
    }
}

/// Decomposability class of a nonzero codeword of `code`.
pub fn classify(code: &LinearCode, v: &BitVector, limits: &Limits) -> Result<DecompCategory> {
    check_member(code, v)?;
    match NeighborTester::new(code) {
        Some(t) => t.classify(v, limits),
        None => {
            let g = code.generator();
            if gf2::support_subcode_dim(g, v)? == 1 {
                Ok(DecompCategory::Indecomposable)
            } else if v.parity() {
                Ok(DecompCategory::DecomposableOddWeight)
            } else {
                classify_even_by_basis(v, &gf2::support_subcode_basis(g, v), limits)
            }
        }
    }
}

/// How an exhaustive sweep is run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SweepOptions {
    pub limits: Limits,
    /// Number of contiguous message-index blocks, each swept on its own thread.
    pub partitions: usize,
}

impl Default for SweepOptions {
    fn default() -> Self {
        Self {
            limits: Limits::default(),
            partitions: 1,
        }
    }
}

impl SweepOptions {
    pub fn with_partitions(partitions: usize) -> Self {
        Self {
            partitions,
            ..Self::default()
        }
    }
}

/// Dense per-block accumulator; merged by elementwise addition.
pub(crate) struct Dense {
    pub(crate) counts: Vec<Vec<u128>>,
    pub(crate) error: Option<Error>,
}

impl Dense {
    fn new(tallies: usize, n: usize) -> Self {
        Self {
            counts: vec![vec![0; n + 1]; tallies],
            error: None,
        }
    }
}

fn merge_dense(blocks: Vec<Dense>, tallies: usize, n: usize) -> Result<Vec<WeightTally>> {
    let mut total = vec![vec![0u128; n + 1]; tallies];
    for block in blocks {
        if let Some(e) = block.error {
            return Err(e);
        }
        for (acc, part) in total.iter_mut().zip(block.counts) {
            for (a, p) in acc.iter_mut().zip(part) {
                *a += p;
            }
        }
    }
    Ok(total.iter().map(|c| WeightTally::from_dense(c)).collect())
}

pub(crate) fn sweep_dense<V>(
    code: &LinearCode,
    opts: &SweepOptions,
    tallies: usize,
    visit: V,
) -> Result<Vec<WeightTally>>
where
    V: Fn(&mut Dense, &BitVector, usize) + Sync,
{
    let n = code.n();
    let blocks = sweep_blocks(
        code.generator(),
        opts.limits,
        opts.partitions,
        || Dense::new(tallies, n),
        |state, c| {
            if state.error.is_none() {
                visit(state, c, c.weight());
            }
        },
    )?;
    merge_dense(blocks, tallies, n)
}

pub(crate) fn tester_for(code: &LinearCode) -> Result<NeighborTester> {
    NeighborTester::new(code).ok_or(Error::EnumerationCap {
        dimension: code.k(),
        cap: 63,
    })
}

/// `A_w`: number of codewords of each weight (`A_0 = 1`).
pub fn weight_distribution(code: &LinearCode, opts: &SweepOptions) -> Result<WeightTally> {
    let mut out = sweep_dense(code, opts, 1, |s, _, w| s.counts[0][w] += 1)?;
    Ok(out.remove(0))
}

/// Minimum nonzero weight read off a weight distribution.
pub fn minimum_distance(a: &WeightTally) -> Option<usize> {
    a.min_nonzero_weight()
}

/// `L_w`: number of zero neighbors of each weight, with `L_0 = 0`.
///
/// With `use_shortcuts`, weights below `2d` copy `A_w` and weights above
/// `n − k + 1` are zero without testing; only `2d ≤ w ≤ n − k + 1` is swept.
pub fn local_weight_distribution(
    code: &LinearCode,
    use_shortcuts: bool,
    opts: &SweepOptions,
) -> Result<WeightTally> {
    opts.limits.check_dimension(code.k())?;
    let tester = tester_for(code)?;
    if !use_shortcuts {
        let mut out = sweep_dense(code, opts, 1, |s, c, w| {
            if w > 0 && tester.is_neighbor(c) {
                s.counts[0][w] += 1;
            }
        })?;
        return Ok(out.remove(0));
    }

    let a = weight_distribution(code, opts)?;
    let n = code.n();
    let mut l = WeightTally::new(n);
    let Some(d) = minimum_distance(&a) else {
        return Ok(l);
    };
    let lo = 2 * d;
    let hi = n + 1 - code.k();
    for (w, c) in a.iter().filter(|&(w, _)| w > 0 && w < lo) {
        l.set(w, c.clone());
    }
    if lo <= hi && a.iter().any(|(w, _)| (lo..=hi).contains(&w)) {
        let tested = sweep_dense(code, opts, 1, |s, c, w| {
            if (lo..=hi).contains(&w) && tester.is_neighbor(c) {
                s.counts[0][w] += 1;
            }
        })?;
        l.merge(&tested[0])?;
    }
    Ok(l)
}

/// `N_w`: number of only-odd-decomposable codewords of each (even) weight.
pub fn only_odd_counts(code: &LinearCode, opts: &SweepOptions) -> Result<WeightTally> {
    Ok(category_tallies(code, opts)?.only_odd)
}

/// Every codeword's class, tallied by weight in a single sweep.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CategoryTallies {
    /// `A_w`.
    pub weights: WeightTally,
    /// `L_w`.
    pub indecomposable: WeightTally,
    pub odd_decomposable: WeightTally,
    /// `N_w`.
    pub only_odd: WeightTally,
    pub even_decomposable: WeightTally,
}

pub fn category_tallies(code: &LinearCode, opts: &SweepOptions) -> Result<CategoryTallies> {
    opts.limits.check_dimension(code.k())?;
    let tester = tester_for(code)?;
    let limits = opts.limits;
    let mut t = sweep_dense(code, opts, 5, |s, c, w| {
        s.counts[0][w] += 1;
        if w == 0 {
            return;
        }
        match tester.classify(c, &limits) {
            Ok(cat) => {
                let idx = match cat {
                    DecompCategory::Indecomposable => 1,
                    DecompCategory::DecomposableOddWeight => 2,
                    DecompCategory::OnlyOddDecomposable => 3,
                    DecompCategory::EvenDecomposable => 4,
                };
                s.counts[idx][w] += 1;
            }
            Err(e) => s.error = Some(e),
        }
    })?;
    let even_decomposable = t.pop().unwrap();
    let only_odd = t.pop().unwrap();
    let odd_decomposable = t.pop().unwrap();
    let indecomposable = t.pop().unwrap();
    let weights = t.pop().unwrap();
    Ok(CategoryTallies {
        weights,
        indecomposable,
        odd_decomposable,
        only_odd,
        even_decomposable,
    })
}

/// Codeword for message `msg` (bit `i` selects row `i`, rows past 64 unused).
pub fn encode(code: &LinearCode, msg: u64) -> BitVector {
    let mut c = BitVector::zeros(code.n());
    for (i, r) in code.generator().rows().iter().enumerate().take(64) {
        if msg >> i & 1 == 1 {
            c.xor_assign(r);
        }
    }
    c
}

/// Codeword at position `index` of the Gray enumeration order.
pub fn gray_codeword(code: &LinearCode, index: u64) -> BitVector {
    encode(code, gray(index))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{hamming, reed_muller};
    use crate::gf2::BinaryMatrix;

    fn code(rows: &[&str]) -> LinearCode {
        LinearCode::new(BinaryMatrix::from_strs(rows).unwrap()).unwrap()
    }

    fn bv(s: &str) -> BitVector {
        s.parse().unwrap()
    }

    fn tally(n: usize, pairs: &[(usize, u64)]) -> WeightTally {
        WeightTally::from_pairs(n, pairs.iter().copied()).unwrap()
    }

    #[test]
    fn neighbor_examples() {
        let h = hamming(3).unwrap();
        let opts = SweepOptions::default();
        for c in crate::enumerate::enumerate_codewords(h.generator(), opts.limits).unwrap() {
            if c.weight() == 3 {
                assert!(is_zero_neighbor(&h, &c).unwrap());
            }
        }
        assert!(!is_zero_neighbor(&h, &BitVector::ones(7)).unwrap());
        let rm = reed_muller(1, 3).unwrap();
        assert!(!is_zero_neighbor(&rm, &BitVector::ones(8)).unwrap());
    }

    #[test]
    fn neighbor_errors() {
        let h = hamming(3).unwrap();
        assert_eq!(
            is_zero_neighbor(&h, &BitVector::zeros(7)),
            Err(Error::ZeroWord)
        );
        assert_eq!(
            is_zero_neighbor(&h, &bv("1000000")),
            Err(Error::NotACodeword)
        );
        assert!(matches!(
            is_zero_neighbor(&h, &bv("10")),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn classify_examples() {
        let l = Limits::default();
        let c = code(&["1000", "0111"]);
        assert_eq!(
            classify(&c, &bv("1111"), &l).unwrap(),
            DecompCategory::OnlyOddDecomposable
        );
        assert_eq!(
            classify(&c, &bv("1000"), &l).unwrap(),
            DecompCategory::Indecomposable
        );
        let rm = reed_muller(1, 3).unwrap();
        assert_eq!(
            classify(&rm, &BitVector::ones(8), &l).unwrap(),
            DecompCategory::EvenDecomposable
        );
        let c3 = code(&["100", "011"]);
        assert_eq!(
            classify(&c3, &bv("111"), &l).unwrap(),
            DecompCategory::DecomposableOddWeight
        );
    }

    #[test]
    fn support_subcode_cap() {
        let rm = reed_muller(3, 4).unwrap();
        let tight = Limits {
            max_support_subcode_dim: 4,
            ..Limits::default()
        };
        assert!(matches!(
            classify(&rm, &BitVector::ones(16), &tight),
            Err(Error::SupportSubcodeCap {
                dimension: 15,
                cap: 4
            })
        ));
    }

    #[test]
    fn distributions() {
        let opts = SweepOptions::default();
        let h = hamming(3).unwrap();
        assert_eq!(
            weight_distribution(&h, &opts).unwrap(),
            tally(7, &[(0, 1), (3, 7), (4, 7), (7, 1)])
        );
        let rm = reed_muller(1, 3).unwrap();
        assert_eq!(
            weight_distribution(&rm, &opts).unwrap(),
            tally(8, &[(0, 1), (4, 14), (8, 1)])
        );
        let zero = LinearCode::new(BinaryMatrix::new(5, vec![]).unwrap()).unwrap();
        assert_eq!(
            weight_distribution(&zero, &opts).unwrap(),
            tally(5, &[(0, 1)])
        );
        assert!(local_weight_distribution(&zero, true, &opts)
            .unwrap()
            .is_empty());

        for shortcuts in [false, true] {
            assert_eq!(
                local_weight_distribution(&h, shortcuts, &opts).unwrap(),
                tally(7, &[(3, 7), (4, 7)])
            );
            assert_eq!(
                local_weight_distribution(&rm, shortcuts, &opts).unwrap(),
                tally(8, &[(4, 14)])
            );
            assert_eq!(
                local_weight_distribution(&code(&["1000", "0111"]), shortcuts, &opts).unwrap(),
                tally(4, &[(1, 1), (3, 1)])
            );
        }
    }

    #[test]
    fn only_odd_examples() {
        let opts = SweepOptions::default();
        assert_eq!(
            only_odd_counts(&code(&["1000", "0111"]), &opts).unwrap(),
            tally(4, &[(4, 1)])
        );
        assert!(only_odd_counts(&hamming(3).unwrap(), &opts)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn support_basis_spans_support_subcode() {
        let rm = reed_muller(2, 4).unwrap();
        let t = NeighborTester::new(&rm).unwrap();
        for msg in [0x7FFu64, 0x123, 0x400, 0x0F0] {
            let v = encode(&rm, msg);
            if v.is_zero() {
                continue;
            }
            let basis = t.support_subcode_basis(&v);
            assert_eq!(basis.len(), t.support_subcode_dim(&v));
            for b in &basis {
                assert!(b.is_subsupport(&v).unwrap());
                assert!(rm.contains(b).unwrap());
            }
            assert_eq!(
                gf2::support_subcode_dim(rm.generator(), &v).unwrap(),
                basis.len()
            );
        }
    }

    #[test]
    fn wide_code_uses_word_iteration() {
        // n > 64 exercises the multi-word path of the outside-column walk.
        let h = hamming(7).unwrap();
        let t = NeighborTester::new(&h).unwrap();
        let v = encode(&h, 1);
        assert_eq!(
            t.support_subcode_dim(&v),
            gf2::support_subcode_dim(h.generator(), &v).unwrap()
        );
        assert_eq!(t.support_subcode_dim(&BitVector::ones(127)), h.k());
    }
}
