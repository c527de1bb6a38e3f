//! Local weight distributions of binary linear codes.
//!
//! The crate enumerates zero neighbors (minimal codewords) of small binary
//! linear codes, classifies decomposable codewords, transfers local weight
//! distributions between a code, its extended code and its even-weight
//! subcode, and reduces enumeration work with coset orbits under
//! automorphism subgroups.

pub mod code;
pub mod enumerate;
pub mod error;
pub mod families;
pub mod field;
pub mod gf2;
pub mod neighbor;
pub mod reference;
pub mod relations;
pub mod report;
pub mod symmetry;
pub mod tally;

pub use code::{format_generator, parse_generator, CodeTags, LinearCode};
pub use enumerate::{enumerate_codewords, Limits};
pub use error::{Error, ErrorKind, Result};
pub use families::{bch, hamming, random_linear_code, reed_muller};
pub use gf2::{BinaryMatrix, BitVector};
pub use neighbor::{
    category_tallies, classify, is_zero_neighbor, local_weight_distribution, only_odd_counts,
    weight_distribution, CategoryTallies, DecompCategory, NeighborTester, SweepOptions,
};
pub use reference::{reference_column, reference_columns, ReferenceColumn};
pub use relations::{
    even_subcode_lwd, extend_lwd, extended_lwd_from_punctured, parity_split,
    puncture_lwd_transitive, table_ratio_check, verify_all_relations, weights_multiple_of_four,
    RelationEntry, RelationReport, RelationSuite, VerifyOptions,
};
pub use report::{CheckResult, LwdReport};
pub use symmetry::{
    affine_group_generators, cyclic_group_generator, lwd_via_cosets, partition_cosets,
    second_level_perms, CosetClass, CosetDecomposition, Permutation,
};
pub use tally::WeightTally;
