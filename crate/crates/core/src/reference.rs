//! Published local weight distributions of four length-127 codes, stored as
//! exact integers: the `(127,36)`, `(127,43)` and `(127,50)` primitive BCH
//! codes and the `(127,64)` punctured third-order Reed–Muller code.
//!
//! Each extended code is invariant under a transitive group and has all
//! weights divisible by four, so the columns satisfy the adjacent-weight
//! ratio `L_{w+1} · (w+1) = L_w · (127 − w)` and can be lifted back to the
//! length-128 extended distribution.

use crate::error::Result;
use crate::relations::{extended_lwd_from_punctured, table_ratio_check, RelationReport};
use crate::tally::WeightTally;

/// One embedded column.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ReferenceColumn {
    pub id: &'static str,
    pub description: &'static str,
    pub n: usize,
    pub k: usize,
    pub entries: &'static [(usize, u64)],
    /// `Σ w · L_w`, a guard against transcription errors.
    pub checksum: u128,
}

impl ReferenceColumn {
    pub fn tally(&self) -> WeightTally {
        WeightTally::from_pairs(self.n, self.entries.iter().copied())
            .expect("weights within length")
    }

    /// `L` of the length-128 extended code, assuming `N = 0`.
    pub fn extended_tally(&self) -> Result<WeightTally> {
        extended_lwd_from_punctured(&self.tally(), &WeightTally::new(self.n))
    }

    pub fn ratio_check(&self) -> RelationReport {
        table_ratio_check(&self.tally(), self.n)
    }

    pub fn weighted_sum(&self) -> u128 {
        self.entries
            .iter()
            .map(|&(w, c)| w as u128 * c as u128)
            .sum()
    }

    /// The column in the `w L_w` text format read by `check-table --file`.
    pub fn export(&self) -> String {
        let mut out = format!("# {}\n# ({}, {})\n", self.description, self.n, self.k);
        for (w, c) in self.entries {
            out.push_str(&format!("{w} {c}\n"));
        }
        out
    }
}

pub fn reference_columns() -> [ReferenceColumn; 4] {
    [
        ReferenceColumn {
            id: "bch-127-36",
            description: "(127,36) primitive BCH code",
            n: 127,
            k: 36,
            entries: BCH_127_36,
            checksum: 4_363_221_676_765,
        },
        ReferenceColumn {
            id: "bch-127-43",
            description: "(127,43) primitive BCH code",
            n: 127,
            k: 43,
            entries: BCH_127_43,
            checksum: 558_147_083_268_117,
        },
        ReferenceColumn {
            id: "bch-127-50",
            description: "(127,50) primitive BCH code",
            n: 127,
            k: 50,
            entries: BCH_127_50,
            checksum: 70_258_681_272_308_033,
        },
        ReferenceColumn {
            id: "rm-127-64",
            description: "(127,64) punctured third-order Reed-Muller code",
            n: 127,
            k: 64,
            entries: RM_127_64,
            checksum: 328_867_273_117_391_793_493,
        },
    ]
}

pub fn reference_column(id: &str) -> Option<ReferenceColumn> {
    reference_columns().into_iter().find(|c| c.id == id)
}

const BCH_127_36: &[(usize, u64)] = &[
    (31, 2_667),
    (32, 8_001),
    (35, 4_572),
    (36, 11_684),
    (39, 640_080),
    (40, 1_408_176),
    (43, 12_220_956),
    (44, 23_330_916),
    (47, 132_560_568),
    (48, 220_934_280),
    (51, 823_921_644),
    (52, 1_204_193_172),
    (55, 3_157_059_472),
    (56, 4_059_076_464),
    (59, 7_022_797_740),
    (60, 7_959_170_772),
    (63, 9_742_066_368),
    (64, 9_742_066_368),
    (67, 7_959_170_772),
    (68, 7_022_797_740),
    (71, 4_059_071_892),
    (72, 3_157_055_916),
    (75, 1_204_193_172),
    (76, 823_921_644),
    (79, 217_627_200),
    (80, 130_576_320),
    (83, 23_330_916),
    (84, 12_220_956),
    (87, 1_408_176),
    (88, 640_080),
];

const BCH_127_43: &[(usize, u64)] = &[
    (31, 31_115),
    (32, 93_345),
    (35, 2_478_024),
    (36, 6_332_728),
    (39, 82_356_960),
    (40, 181_185_312),
    (43, 1_554_145_736),
    (44, 2_967_005_496),
    (47, 16_837_453_752),
    (48, 28_062_422_920),
    (51, 106_485_735_720),
    (52, 155_632_998_360),
    (55, 400_716_792_672),
    (56, 515_207_304_864),
    (59, 905_612_814_120),
    (60, 1_026_361_189_336),
    (63, 1_238_334_929_472),
    (64, 1_238_334_929_472),
    (67, 1_026_345_592_720),
    (68, 905_599_052_400),
    (71, 515_097_101_376),
    (72, 400_631_078_848),
    (75, 155_191_535_184),
    (76, 106_183_681_968),
    (79, 26_980_367_680),
    (80, 16_188_220_608),
    (83, 1_617_588_840),
    (84, 847_308_440),
];

const BCH_127_50: &[(usize, u64)] = &[
    (27, 40_894),
    (28, 146_050),
    (31, 4_853_051),
    (32, 14_559_153),
    (35, 310_454_802),
    (36, 793_384_494),
    (39, 10_538_703_840),
    (40, 23_185_148_448),
    (43, 199_123_183_160),
    (44, 380_144_258_760),
    (47, 2_154_195_406_104),
    (48, 3_590_325_676_840),
    (51, 13_633_106_229_288),
    (52, 19_925_309_104_344),
    (55, 51_285_782_220_204),
    (56, 65_938_862_854_548),
    (59, 115_927_157_830_260),
    (60, 131_384_112_207_628),
    (63, 158_486_906_385_472),
    (64, 158_486_906_385_472),
    (67, 131_258_388_369_668),
    (68, 115_816_225_032_060),
    (71, 64_917_266_933_304),
    (72, 50_491_207_614_792),
    (75, 15_345_182_164_032),
    (76, 10_499_335_164_864),
];

const RM_127_64: &[(usize, u64)] = &[
    (15, 11_811),
    (16, 82_677),
    (23, 13_889_736),
    (24, 60_188_856),
    (27, 684_345_088),
    (28, 2_444_089_600),
    (31, 77_893_639_488),
    (32, 233_680_918_464),
    (35, 5_097_898_213_632),
    (36, 13_027_962_101_504),
    (39, 172_489_249_981_440),
    (40, 379_476_349_959_168),
    (43, 3_259_718_804_643_840),
    (44, 6_223_099_536_138_240),
    (47, 35_130_035_853_803_520),
    (48, 58_550_059_756_339_200),
    (51, 218_602_288_622_075_904),
    (52, 319_495_652_601_495_552),
    (55, 766_899_891_905_495_040),
    (56, 986_014_146_735_636_480),
    (59, 1_306_771_964_441_395_200),
    (60, 1_481_008_226_366_914_560),
    (63, 258_664_522_171_023_360),
    (64, 258_664_522_171_023_360),
];
#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    #[test]
    fn checksums_match() {
        for c in reference_columns() {
            assert_eq!(c.weighted_sum(), c.checksum, "{}", c.id);
        }
    }

    #[test]
    fn every_column_is_ratio_consistent() {
        let pairs: Vec<usize> = reference_columns()
            .iter()
            .map(|c| {
                let r = c.ratio_check();
                assert!(r.passed(), "{}", r);
                r.entries.len()
            })
            .collect();
        assert_eq!(pairs, [15, 14, 13, 12]);
    }

    #[test]
    fn lift_to_extended() {
        let ex = reference_column("bch-127-36")
            .unwrap()
            .extended_tally()
            .unwrap();
        assert_eq!(ex.get(32), BigUint::from(10_668u32));
        assert_eq!(ex.length(), 128);
        assert!(reference_column("nope").is_none());
    }
}
