use std::collections::{HashSet, VecDeque};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::permutation::Permutation;
use crate::error::{Error, Result};

/// The shift `i → i + 1 mod n`, which generates the cyclic group.
pub fn cyclic_group_generator(n: usize) -> Permutation {
    Permutation::cyclic_shift(n, 1)
}

/// Generators of the general affine group `GA(m, 2)` acting on the `2^m`
/// coordinates of a Reed–Muller code (point `p` has `x_i` equal to bit
/// `m − 1 − i` of `p`).
///
/// `GL(m, 2)` is generated by the transvections `x_i ← x_i + x_{i+1}` for
/// `i < m − 1` together with the cyclic relabeling `x_i ← x_{i+1 mod m}`;
/// the translation `x ← x + e_1` adds the affine part.
pub fn affine_group_generators(m: u32) -> Result<Vec<Permutation>> {
    if m == 0 || m > 20 {
        return Err(Error::InvalidParameter(format!(
            "affine group needs 1 <= m <= 20, got {m}"
        )));
    }
    let n = 1usize << m;
    let bit = |p: usize, i: u32| p >> (m - 1 - i) & 1;
    let from_map = |f: &dyn Fn(usize) -> usize| {
        Permutation::new((0..n).map(f).collect()).expect("affine maps are bijections")
    };

    let mut gens = Vec::new();
    for i in 0..m.saturating_sub(1) {
        gens.push(from_map(&|p| p ^ (bit(p, i + 1) << (m - 1 - i))));
    }
    if m > 1 {
        gens.push(from_map(&|p| {
            (0..m).fold(0, |acc, i| acc | bit(p, (i + 1) % m) << (m - 1 - i))
        }));
    }
    gens.push(from_map(&|p| p ^ (1 << (m - 1))));
    Ok(gens)
}

fn check_lengths(gens: &[Permutation]) -> Result<usize> {
    let n = gens.first().map_or(0, Permutation::len);
    if let Some(bad) = gens.iter().find(|g| g.len() != n) {
        return Err(Error::InvalidPermutation(format!(
            "generator of length {} in a set of length {n}",
            bad.len()
        )));
    }
    Ok(n)
}

/// Every element of the group generated by `gens`, found by breadth-first
/// closure. Fails once more than `max_size` elements have been found.
pub fn group_closure(gens: &[Permutation], max_size: usize) -> Result<Vec<Permutation>> {
    let n = check_lengths(gens)?;
    let id = Permutation::identity(n);
    let mut seen: HashSet<Permutation> = HashSet::from([id.clone()]);
    let mut order = vec![id.clone()];
    let mut queue = VecDeque::from([id]);
    while let Some(p) = queue.pop_front() {
        for g in gens {
            let q = g.compose(&p);
            if seen.insert(q.clone()) {
                if seen.len() > max_size {
                    return Err(Error::InvalidParameter(format!(
                        "group closure exceeds {max_size} elements"
                    )));
                }
                order.push(q.clone());
                queue.push_back(q);
            }
        }
    }
    Ok(order)
}

/// Up to `count` distinct group elements drawn as random words in the
/// generators, reproducible for a given seed. Smaller groups may yield fewer.
pub fn sample_group(gens: &[Permutation], count: usize, seed: u64) -> Result<Vec<Permutation>> {
    let n = check_lengths(gens)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen = HashSet::new();
    let mut out = Vec::with_capacity(count);
    let mut misses = 0usize;
    let mut current = Permutation::identity(n);
    while out.len() < count && misses < 64 * count.max(1) {
        if !gens.is_empty() {
            let steps = rng.random_range(1..=8usize);
            for _ in 0..steps {
                current = gens[rng.random_range(0..gens.len())].compose(&current);
            }
        }
        if seen.insert(current.clone()) {
            out.push(current.clone());
        } else {
            misses += 1;
        }
    }
    Ok(out)
}
