//! Coordinate permutations, automorphism subgroups, and local weight
//! distributions computed one coset orbit at a time.
//!
//! If `π` is an automorphism of `C` and of a subcode `C′`, it maps each coset
//! `D ∈ C/C′` onto another coset `π[D]` with the same number of zero neighbors
//! of `C` at every weight. So `L_w(C)` is the sum over orbits of
//! `|orbit| · LS_w(representative)`, and only one coset per orbit is enumerated.

mod cosets;
mod groups;
mod permutation;

pub use cosets::{
    all_filled, classes_with_neighbors, fill_subdistributions, lwd_via_cosets, partition_cosets,
    second_level_perms, sum_classes, CosetClass, CosetDecomposition, MAX_CODIMENSION,
};
pub use groups::{affine_group_generators, cyclic_group_generator, group_closure, sample_group};
pub use permutation::{format_permutations, parse_permutations, Permutation};
