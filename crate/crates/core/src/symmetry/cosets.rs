use std::collections::VecDeque;

use num_traits::Zero;

use super::permutation::Permutation;
use crate::code::LinearCode;
use crate::enumerate::{Codewords, Limits};
use crate::error::{Error, Result};
use crate::gf2::{BinaryMatrix, BitVector};
use crate::neighbor::{tester_for, NeighborTester, SweepOptions};
use crate::tally::WeightTally;

/// The cosets of a subcode `C′` in `C`, indexed by `(k − k′)`-bit labels.
///
/// The basis of `C′` is extended by complement rows `u_0, …, u_{r−1}` to a
/// basis of `C`; the coset with label `ℓ` is `Σ ℓ_j u_j + C′`. Labels are
/// read off a codeword with `r` linear functionals supported on an
/// information set of `C`, so relabeling costs `O(n·r)` word operations.
#[derive(Clone, Debug)]
pub struct CosetDecomposition {
    code: LinearCode,
    sub: LinearCode,
    complement: Vec<BitVector>,
    functionals: Vec<BitVector>,
    tester: NeighborTester,
}

/// Coset labels stay below this many bits.
pub const MAX_CODIMENSION: usize = 26;

impl CosetDecomposition {
    pub fn new(code: &LinearCode, sub: &LinearCode) -> Result<Self> {
        if !sub.is_subcode_of(code) {
            return Err(Error::NotSubcode {
                sub: "C'",
                sup: "C",
            });
        }
        let (k, k_sub) = (code.k(), sub.k());
        if k_sub >= k {
            return Err(Error::InvalidParameter(format!(
                "subcode must be proper: dim C' = {k_sub}, dim C = {k}"
            )));
        }
        if k - k_sub > MAX_CODIMENSION {
            return Err(Error::InvalidParameter(format!(
                "codimension {} exceeds {MAX_CODIMENSION}",
                k - k_sub
            )));
        }
        let n = code.n();
        let tester = tester_for(code)?;

        let mut basis: Vec<BitVector> = sub.generator().rows().to_vec();
        let mut complement = Vec::new();
        for row in code.generator().rows() {
            let span = BinaryMatrix::new(n, basis.clone())?.echelon();
            if !span.contains(row) {
                basis.push(row.clone());
                complement.push(row.clone());
            }
        }

        // Restrict the basis to the pivot columns of C, invert, and keep the
        // columns of the inverse that yield complement coefficients.
        let pivots = &code.echelon().pivots;
        let mut aug: Vec<BitVector> = basis
            .iter()
            .enumerate()
            .map(|(i, b)| {
                let mut row = BitVector::zeros(2 * k);
                for (t, &p) in pivots.iter().enumerate() {
                    row.set(t, b.get(p));
                }
                row.set(k + i, true);
                row
            })
            .collect();
        for col in 0..k {
            let found = (col..k)
                .find(|&r| aug[r].get(col))
                .expect("basis restricted to an information set is invertible");
            aug.swap(col, found);
            let pivot = aug[col].clone();
            for (r, row) in aug.iter_mut().enumerate() {
                if r != col && row.get(col) {
                    row.xor_assign(&pivot);
                }
            }
        }
        // aug = [I | M⁻¹]; coefficient j of v is Σ_t v[p_t] · M⁻¹[t][j].
        let functionals = (k_sub..k)
            .map(|j| {
                BitVector::from_support(
                    n,
                    pivots
                        .iter()
                        .enumerate()
                        .filter(|&(t, _)| aug[t].get(k + j))
                        .map(|(_, &p)| p),
                )
            })
            .collect();

        Ok(Self {
            code: code.clone(),
            sub: sub.clone(),
            complement,
            functionals,
            tester,
        })
    }

    pub fn code(&self) -> &LinearCode {
        &self.code
    }

    pub fn subcode(&self) -> &LinearCode {
        &self.sub
    }

    pub fn complement(&self) -> &[BitVector] {
        &self.complement
    }

    /// `k − k′`.
    pub fn codimension(&self) -> usize {
        self.complement.len()
    }

    /// `2^{k−k′}`.
    pub fn num_cosets(&self) -> u64 {
        1u64 << self.codimension()
    }

    /// Label of the coset containing the codeword `v`. Label `0` is `C′`.
    pub fn label(&self, v: &BitVector) -> Result<u64> {
        if !self.code.contains(v)? {
            return Err(Error::NotACodeword);
        }
        Ok(self.label_unchecked(v))
    }

    fn label_unchecked(&self, v: &BitVector) -> u64 {
        self.functionals
            .iter()
            .enumerate()
            .fold(0, |acc, (j, f)| acc | (v.dot(f) as u64) << j)
    }

    /// `Σ ℓ_j u_j`, the representative of coset `label`.
    pub fn representative(&self, label: u64) -> BitVector {
        let mut v = BitVector::zeros(self.code.n());
        for (j, u) in self.complement.iter().enumerate() {
            if label >> j & 1 == 1 {
                v.xor_assign(u);
            }
        }
        v
    }

    fn check_generators(&self, gens: &[Permutation]) -> Result<()> {
        for (index, g) in gens.iter().enumerate() {
            if g.len() != self.code.n() {
                return Err(Error::InvalidPermutation(format!(
                    "generator {index} has length {}, code length is {}",
                    g.len(),
                    self.code.n()
                )));
            }
            if !g.is_automorphism(&self.code) {
                return Err(Error::NotAutomorphism { index, code: "C" });
            }
            if !g.is_automorphism(&self.sub) {
                return Err(Error::NotAutomorphism { index, code: "C'" });
            }
        }
        Ok(())
    }

    /// Label of `π[D]` for the coset `D` with label `label`.
    pub fn image_label(&self, p: &Permutation, label: u64) -> Result<u64> {
        let v = p.apply(&self.representative(label))?;
        self.label(&v)
    }

    /// Zero neighbors of the full code `C` inside coset `label`, by weight.
    pub fn coset_subdistribution(&self, label: u64, limits: &Limits) -> Result<WeightTally> {
        limits.check_dimension(self.sub.k())?;
        let n = self.code.n();
        let rep = self.representative(label);
        let mut dense = vec![0u128; n + 1];
        Codewords::range(self.sub.generator().rows(), n, 0, 1u64 << self.sub.k()).for_each_ref(
            |c| {
                let v = c.xor(&rep);
                let w = v.weight();
                if w > 0 && self.tester.is_neighbor(&v) {
                    dense[w] += 1;
                }
            },
        );
        WeightTally::from_dense(&dense).with_length(n)
    }
}

/// One orbit of cosets under the permutation group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetClass {
    /// Smallest label in the orbit.
    pub label: u64,
    pub orbit_size: u64,
    /// Filled by [`fill_subdistributions`].
    pub subdistribution: Option<WeightTally>,
}

/// Orbits of the cosets of `C′` in `C` under the group generated by `gens`,
/// ordered by representative label. Every generator must be an automorphism
/// of both `C` and `C′`.
pub fn partition_cosets(dec: &CosetDecomposition, gens: &[Permutation]) -> Result<Vec<CosetClass>> {
    dec.check_generators(gens)?;
    let total = dec.num_cosets();
    let mut seen = vec![false; total as usize];
    let mut classes = Vec::new();
    let mut queue = VecDeque::new();
    for start in 0..total {
        if seen[start as usize] {
            continue;
        }
        seen[start as usize] = true;
        queue.push_back(start);
        let mut size = 0u64;
        while let Some(label) = queue.pop_front() {
            size += 1;
            let rep = dec.representative(label);
            for g in gens {
                let image = dec.label_unchecked(&g.apply(&rep)?);
                if !std::mem::replace(&mut seen[image as usize], true) {
                    queue.push_back(image);
                }
            }
        }
        classes.push(CosetClass {
            label: start,
            orbit_size: size,
            subdistribution: None,
        });
    }
    Ok(classes)
}

/// Computes the subdistribution of every class representative, spreading
/// classes over `opts.partitions` threads.
pub fn fill_subdistributions(
    dec: &CosetDecomposition,
    classes: &mut [CosetClass],
    opts: &SweepOptions,
) -> Result<()> {
    let parts = opts.partitions.max(1).min(classes.len().max(1));
    let limits = opts.limits;
    let results: Vec<Result<WeightTally>> = if parts == 1 {
        classes
            .iter()
            .map(|c| dec.coset_subdistribution(c.label, &limits))
            .collect()
    } else {
        let labels: Vec<u64> = classes.iter().map(|c| c.label).collect();
        let chunk = labels.len().div_ceil(parts);
        std::thread::scope(|scope| {
            let handles: Vec<_> = labels
                .chunks(chunk)
                .map(|ls| {
                    scope.spawn(move || {
                        ls.iter()
                            .map(|&l| dec.coset_subdistribution(l, &limits))
                            .collect::<Vec<_>>()
                    })
                })
                .collect();
            handles
                .into_iter()
                .flat_map(|h| h.join().expect("coset worker panicked"))
                .collect()
        })
    };
    for (class, r) in classes.iter_mut().zip(results) {
        class.subdistribution = Some(r?);
    }
    Ok(())
}

/// `L(C) = Σ_classes orbit_size · LS(representative)`.
pub fn lwd_via_cosets(
    code: &LinearCode,
    sub: &LinearCode,
    gens: &[Permutation],
    opts: &SweepOptions,
) -> Result<WeightTally> {
    let dec = CosetDecomposition::new(code, sub)?;
    let mut classes = partition_cosets(&dec, gens)?;
    fill_subdistributions(&dec, &mut classes, opts)?;
    Ok(sum_classes(code.n(), &classes))
}

/// `Σ orbit_size · subdistribution` over classes whose subdistribution is known.
pub fn sum_classes(n: usize, classes: &[CosetClass]) -> WeightTally {
    let mut total = WeightTally::new(n);
    for c in classes {
        if let Some(s) = &c.subdistribution {
            total
                .merge(&s.scaled(c.orbit_size))
                .expect("subdistributions share the code length");
        }
    }
    total
}

/// Candidates `ρ ∈ Aut(C) ∩ Aut(C′) ∩ Aut(C″)` with `ρv ∈ v + C′`. Such a
/// `ρ` permutes the cosets of `C″` inside `v + C′`, so only one coset per
/// orbit needs to be enumerated at the next level.
pub fn second_level_perms(
    dec: &CosetDecomposition,
    v: &BitVector,
    sub2: &LinearCode,
    candidates: &[Permutation],
) -> Result<Vec<Permutation>> {
    if !sub2.is_subcode_of(dec.subcode()) {
        return Err(Error::NotSubcode {
            sub: "C''",
            sup: "C'",
        });
    }
    let label = dec.label(v)?;
    let mut out = Vec::new();
    for rho in candidates {
        if rho.len() != dec.code.n() {
            return Err(Error::InvalidPermutation(format!(
                "candidate of length {} for code length {}",
                rho.len(),
                dec.code.n()
            )));
        }
        if rho.is_automorphism(&dec.code)
            && rho.is_automorphism(&dec.sub)
            && rho.is_automorphism(sub2)
            && dec.label_unchecked(&rho.apply(v)?) == label
        {
            out.push(rho.clone());
        }
    }
    Ok(out)
}

/// True iff no class has an empty subdistribution slot.
pub fn all_filled(classes: &[CosetClass]) -> bool {
    classes.iter().all(|c| c.subdistribution.is_some())
}

/// Number of classes whose representative coset holds at least one zero neighbor.
pub fn classes_with_neighbors(classes: &[CosetClass]) -> usize {
    classes
        .iter()
        .filter(|c| {
            c.subdistribution
                .as_ref()
                .is_some_and(|s| !s.total().is_zero())
        })
        .count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{bch, hamming, reed_muller};
    use crate::neighbor::local_weight_distribution;
    use crate::symmetry::groups::{affine_group_generators, cyclic_group_generator};

    fn t(n: usize, pairs: &[(usize, u64)]) -> WeightTally {
        WeightTally::from_pairs(n, pairs.iter().copied()).unwrap()
    }

    #[test]
    fn labels_are_coset_invariants() {
        let c = reed_muller(2, 4).unwrap();
        let sub = reed_muller(1, 4).unwrap();
        let dec = CosetDecomposition::new(&c, &sub).unwrap();
        assert_eq!(dec.num_cosets(), 64);
        for label in 0..64 {
            let rep = dec.representative(label);
            assert_eq!(dec.label(&rep).unwrap(), label);
            for s in sub.generator().rows() {
                assert_eq!(dec.label(&rep.xor(s)).unwrap(), label);
            }
        }
    }

    #[test]
    fn decomposition_preconditions() {
        let c = hamming(3).unwrap();
        assert!(CosetDecomposition::new(&c, &c).is_err());
        assert!(matches!(
            CosetDecomposition::new(&c.even_subcode(), &c),
            Err(Error::NotSubcode { .. })
        ));
        assert_eq!(
            CosetDecomposition::new(&c, &c.even_subcode())
                .unwrap()
                .num_cosets(),
            2
        );
    }

    #[test]
    fn hamming_coset_tallies() {
        let c = hamming(3).unwrap();
        let dec = CosetDecomposition::new(&c, &c.even_subcode()).unwrap();
        let limits = Limits::default();
        assert_eq!(
            dec.coset_subdistribution(0, &limits).unwrap(),
            t(7, &[(4, 7)])
        );
        assert_eq!(
            dec.coset_subdistribution(1, &limits).unwrap(),
            t(7, &[(3, 7)])
        );
    }

    #[test]
    fn identity_gives_singleton_classes() {
        let c = reed_muller(2, 4).unwrap();
        let dec = CosetDecomposition::new(&c, &reed_muller(1, 4).unwrap()).unwrap();
        let classes = partition_cosets(&dec, &[Permutation::identity(16)]).unwrap();
        assert_eq!(classes.len(), 64);
        assert!(classes.iter().all(|c| c.orbit_size == 1));
    }

    #[test]
    fn affine_orbits_rebuild_lwd() {
        let c = reed_muller(2, 4).unwrap();
        let sub = reed_muller(1, 4).unwrap();
        let gens = affine_group_generators(4).unwrap();
        let dec = CosetDecomposition::new(&c, &sub).unwrap();
        let classes = partition_cosets(&dec, &gens).unwrap();
        assert!(classes.len() < 64);
        assert_eq!(classes.iter().map(|c| c.orbit_size).sum::<u64>(), 64);
        let opts = SweepOptions::default();
        let via = lwd_via_cosets(&c, &sub, &gens, &opts).unwrap();
        assert_eq!(via, local_weight_distribution(&c, false, &opts).unwrap());
    }

    #[test]
    fn cyclic_orbits_in_bch() {
        let c = bch(4, 2).unwrap();
        let sub = bch(4, 5).unwrap();
        let gens = [cyclic_group_generator(15)];
        let dec = CosetDecomposition::new(&c, &sub).unwrap();
        let classes = partition_cosets(&dec, &gens).unwrap();
        assert_eq!(classes.iter().map(|c| c.orbit_size).sum::<u64>(), 16);
        let opts = SweepOptions::with_partitions(3);
        let via = lwd_via_cosets(&c, &sub, &gens, &opts).unwrap();
        assert_eq!(via, local_weight_distribution(&c, false, &opts).unwrap());
    }

    #[test]
    fn non_automorphism_is_named() {
        let c = reed_muller(2, 4).unwrap();
        let dec = CosetDecomposition::new(&c, &reed_muller(1, 4).unwrap()).unwrap();
        let gens = [Permutation::identity(16), cyclic_group_generator(16)];
        assert_eq!(
            partition_cosets(&dec, &gens),
            Err(Error::NotAutomorphism {
                index: 1,
                code: "C"
            })
        );
    }

    #[test]
    fn second_level_filter() {
        let c = reed_muller(2, 4).unwrap();
        let sub = reed_muller(1, 4).unwrap();
        let sub2 = reed_muller(0, 4).unwrap();
        let dec = CosetDecomposition::new(&c, &sub).unwrap();
        let v = dec.representative(5);
        let id = Permutation::identity(16);
        assert_eq!(
            second_level_perms(&dec, &v, &sub2, std::slice::from_ref(&id)).unwrap(),
            vec![id]
        );
        let gens = affine_group_generators(4).unwrap();
        let moved: Vec<_> = gens
            .iter()
            .filter(|g| dec.image_label(g, 5).unwrap() != 5)
            .cloned()
            .collect();
        assert!(!moved.is_empty());
        assert!(second_level_perms(&dec, &v, &sub2, &moved)
            .unwrap()
            .is_empty());
        assert!(matches!(
            second_level_perms(&dec, &v, &hamming(4).unwrap().extend(), &[]),
            Err(Error::NotSubcode { .. })
        ));
    }
}
