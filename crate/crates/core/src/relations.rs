//! Exact transfer formulas between the local weight distributions of a code
//! `C`, its extension `C_ex` and its even-weight subcode `C_even`, and the
//! verifiers that check them against brute force.
//!
//! With `N_w` the number of only-odd-decomposable codewords of weight `w`:
//!
//! * `L_{2i}(C_ex) = L_{2i−1}(C) + L_{2i}(C) + N_{2i}(C)`, odd weights vanish;
//! * `L_{2i}(C_even) = L_{2i}(C) + N_{2i}(C)`;
//! * when every weight of `C_ex` is a multiple of four, `N = 0`;
//! * when `C_ex` (length `n + 1`) is invariant under a transitive group,
//!   a weight-`w` zero neighbor of `C_ex` has a one at any fixed coordinate
//!   for exactly `w/(n+1)` of the neighbors, which gives
//!   `L_w(C) = (w+1)/(n+1) · L_{w+1}(C_ex)` for odd `w` and
//!   `L_w(C) = (n+1−w)/(n+1) · L_w(C_ex) − N_w(C)` for even `w`.
//!
//! All arithmetic is on `BigUint`; any division with a remainder is an error.

use std::fmt;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::gf2::BitVector;
use crate::neighbor::{
    category_tallies, local_weight_distribution, sweep_dense, tester_for, weight_distribution,
    DecompCategory, SweepOptions,
};
use crate::tally::WeightTally;

/// One weight of a relation check. It passes iff `expected == actual`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationEntry {
    pub weight: usize,
    pub expected: BigUint,
    pub actual: BigUint,
}

impl RelationEntry {
    pub fn passed(&self) -> bool {
        self.expected == self.actual
    }
}

/// Outcome of one identity: per-weight expected and actual values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationReport {
    pub name: String,
    pub entries: Vec<RelationEntry>,
    /// Free-form remark, e.g. why a conditional check was vacuous or failed early.
    pub note: Option<String>,
    failed_early: bool,
}

impl RelationReport {
    pub fn new(name: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            entries: Vec::new(),
            note: None,
            failed_early: false,
        }
    }

    /// A report that fails without per-weight data (the identity could not be evaluated).
    pub fn failure(name: impl Into<String>, note: impl Into<String>) -> Self {
        Self {
            note: Some(note.into()),
            failed_early: true,
            ..Self::new(name)
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn push(&mut self, weight: usize, expected: BigUint, actual: BigUint) {
        self.entries.push(RelationEntry {
            weight,
            expected,
            actual,
        });
    }

    /// Compares two tallies at every weight where either is nonzero.
    pub fn compare(name: impl Into<String>, expected: &WeightTally, actual: &WeightTally) -> Self {
        let mut report = Self::new(name);
        let mut weights: Vec<usize> = expected
            .iter()
            .map(|(w, _)| w)
            .chain(actual.iter().map(|(w, _)| w))
            .collect();
        weights.sort_unstable();
        weights.dedup();
        for w in weights {
            report.push(w, expected.get(w), actual.get(w));
        }
        if expected.length() != actual.length() {
            report.failed_early = true;
            report.note = Some(format!(
                "tally lengths differ: {} vs {}",
                expected.length(),
                actual.length()
            ));
        }
        report
    }

    pub fn passed(&self) -> bool {
        !self.failed_early && self.entries.iter().all(RelationEntry::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &RelationEntry> {
        self.entries.iter().filter(|e| !e.passed())
    }

    /// One-line description used by reports and the command line.
    pub fn detail(&self) -> String {
        let bad: Vec<String> = self
            .failures()
            .take(4)
            .map(|e| format!("w={}: expected {}, got {}", e.weight, e.expected, e.actual))
            .collect();
        let mut out = if bad.is_empty() {
            format!("{} weights checked", self.entries.len())
        } else {
            format!(
                "{} of {} weights differ ({})",
                self.failures().count(),
                self.entries.len(),
                bad.join("; ")
            )
        };
        if let Some(note) = &self.note {
            out.push_str("; ");
            out.push_str(note);
        }
        out
    }
}

impl fmt::Display for RelationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{status} {}: {}", self.name, self.detail())
    }
}

/// A list of reports, e.g. everything [`verify_all_relations`] checks.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RelationSuite {
    pub reports: Vec<RelationReport>,
}

impl RelationSuite {
    pub fn passed(&self) -> bool {
        self.reports.iter().all(RelationReport::passed)
    }

    pub fn get(&self, name: &str) -> Option<&RelationReport> {
        self.reports.iter().find(|r| r.name == name)
    }
}

fn check_same_length(a: &WeightTally, b: &WeightTally) -> Result<()> {
    if a.length() != b.length() {
        return Err(Error::LengthMismatch {
            expected: a.length(),
            found: b.length(),
        });
    }
    Ok(())
}

fn check_even_support(t: &WeightTally, what: &'static str) -> Result<()> {
    match t.iter().find(|(w, _)| w % 2 == 1) {
        Some((weight, _)) => Err(Error::OddWeightOnlyOdd { what, weight }),
        None => Ok(()),
    }
}

fn exact_div(weight: usize, numerator: BigUint, denominator: usize) -> Result<BigUint> {
    let d = BigUint::from(denominator);
    if (&numerator % &d).is_zero() {
        Ok(numerator / d)
    } else {
        Err(Error::NotIntegral {
            weight,
            numerator: numerator.to_string(),
            denominator,
        })
    }
}

/// `L(C_ex)` from `L(C)` and `N(C)`.
pub fn extend_lwd(l: &WeightTally, only_odd: &WeightTally) -> Result<WeightTally> {
    check_same_length(l, only_odd)?;
    check_even_support(only_odd, "N")?;
    let n = l.length();
    let mut out = WeightTally::new(n + 1);
    for w in (2..=n + 1).step_by(2) {
        let c = l.get(w - 1) + l.get(w) + only_odd.get(w);
        out.set(w, c);
    }
    Ok(out)
}

/// `L(C_even)` from `L(C)` and `N(C)`.
pub fn even_subcode_lwd(l: &WeightTally, only_odd: &WeightTally) -> Result<WeightTally> {
    check_same_length(l, only_odd)?;
    check_even_support(only_odd, "N")?;
    let mut out = WeightTally::new(l.length());
    for (w, c) in l.iter().filter(|(w, _)| w % 2 == 0) {
        out.add(w, c.clone());
    }
    out.merge(only_odd)?;
    Ok(out)
}

/// Splits the zero neighbors of a transitive-invariant code of length
/// `N = l.length()` by the value of one fixed coordinate: returns
/// `(w·L_w/N, (N−w)·L_w/N)` for the one-valued and zero-valued parts.
pub fn parity_split(l: &WeightTally) -> Result<(WeightTally, WeightTally)> {
    let len = l.length();
    let mut ones = WeightTally::new(len);
    let mut zeros = WeightTally::new(len);
    if len == 0 {
        return Ok((ones, zeros));
    }
    for (w, c) in l.iter() {
        ones.set(w, exact_div(w, c * w, len)?);
        zeros.set(w, exact_div(w, c * (len - w), len)?);
    }
    Ok((ones, zeros))
}

/// `L(C)` for the punctured code `C` from `L(C_ex)` (length `n + 1`) and
/// `N(C)` (length `n`). The caller asserts that `C_ex` is invariant under a
/// transitive permutation group; pass an empty `N` when every weight of
/// `C_ex` is a multiple of four.
pub fn puncture_lwd_transitive(l_ex: &WeightTally, only_odd: &WeightTally) -> Result<WeightTally> {
    let len = l_ex.length();
    if len == 0 || only_odd.length() + 1 != len {
        return Err(Error::LengthMismatch {
            expected: len.saturating_sub(1),
            found: only_odd.length(),
        });
    }
    if let Some((weight, _)) = l_ex.iter().find(|(w, _)| w % 2 == 1) {
        return Err(Error::OddWeightInExtended { weight });
    }
    check_even_support(only_odd, "N")?;
    let n = len - 1;
    let mut out = WeightTally::new(n);
    for w in 1..=n {
        if w % 2 == 1 {
            let c = l_ex.get(w + 1);
            if !c.is_zero() {
                out.set(w, exact_div(w, c * (w + 1), len)?);
            }
        } else {
            let share = exact_div(w, l_ex.get(w) * (len - w), len)?;
            let nw = only_odd.get(w);
            if share < nw {
                return Err(Error::NegativeCount { weight: w });
            }
            out.set(w, share - nw);
        }
    }
    Ok(out)
}

/// Inverse of [`puncture_lwd_transitive`]: rebuilds `L(C_ex)` from the
/// punctured tally. Each extended weight `u` is obtained from the odd weight
/// `u − 1` and cross-checked against the even weight `u`.
pub fn extended_lwd_from_punctured(l: &WeightTally, only_odd: &WeightTally) -> Result<WeightTally> {
    check_same_length(l, only_odd)?;
    check_even_support(only_odd, "N")?;
    let n = l.length();
    let len = n + 1;
    let mut out = WeightTally::new(len);
    for u in (2..=len).step_by(2) {
        let from_odd = exact_div(u, l.get(u - 1) * len, u)?;
        let even_part = l.get(u) + only_odd.get(u);
        let consistent = if u == len {
            even_part.is_zero()
        } else {
            from_odd.clone() * (len - u) == even_part * len
        };
        if !consistent {
            return Err(Error::InconsistentTally { weight: u });
        }
        out.set(u, from_odd);
    }
    Ok(out)
}

/// True iff every weight with a nonzero count is divisible by four. When
/// this holds for `A(C_ex)`, `C` has no only-odd-decomposable codewords.
pub fn weights_multiple_of_four(a_ex: &WeightTally) -> bool {
    a_ex.iter().all(|(w, _)| w % 4 == 0)
}

/// Pairwise check of a punctured transitive-invariant code with `N = 0`:
/// for each odd `w` with `L_w > 0` and `L_{w+1} > 0`,
/// `L_{w+1} · (w + 1) = L_w · (n − w)`.
pub fn table_ratio_check(l: &WeightTally, n: usize) -> RelationReport {
    let mut report = RelationReport::new("adjacent-weight-ratio");
    for (w, lw) in l.iter().filter(|&(w, _)| w % 2 == 1 && w < n) {
        let next = l.get(w + 1);
        if lw.is_zero() || next.is_zero() {
            continue;
        }
        report.push(w, lw * (n - w), next * (w + 1));
    }
    report
}

/// Controls [`verify_all_relations`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct VerifyOptions {
    pub sweep: SweepOptions,
    /// Caller asserts that the extended code is invariant under a transitive
    /// group; enables the coordinate-split and puncture checks.
    pub extended_transitive: bool,
}

/// Brute-forces `C`, `C_ex` and `C_even` and checks every transfer identity,
/// both as tallies and codeword by codeword.
pub fn verify_all_relations(code: &LinearCode, opts: &VerifyOptions) -> Result<RelationSuite> {
    let sweep = &opts.sweep;
    let ex = code.extend();
    let even = code.even_subcode();

    let cats = category_tallies(code, sweep)?;
    let l = &cats.indecomposable;
    let nn = &cats.only_odd;
    let a_ex = weight_distribution(&ex, sweep)?;
    let l_ex = local_weight_distribution(&ex, false, sweep)?;
    let l_even = local_weight_distribution(&even, false, sweep)?;

    let mut suite = RelationSuite::default();

    for (name, c, brute) in [
        ("shortcut-lwd", code, l),
        ("shortcut-lwd-extended", &ex, &l_ex),
        ("shortcut-lwd-even-subcode", &even, &l_even),
    ] {
        let fast = local_weight_distribution(c, true, sweep)?;
        suite
            .reports
            .push(RelationReport::compare(name, brute, &fast));
    }

    let mut partition = WeightTally::new(code.n());
    for t in [l, &cats.odd_decomposable, nn, &cats.even_decomposable] {
        partition.merge(t)?;
    }
    let mut nonzero = cats.weights.clone();
    nonzero.set(0, BigUint::zero());
    suite.reports.push(RelationReport::compare(
        "category-partition",
        &nonzero,
        &partition,
    ));

    suite.reports.push(RelationReport::compare(
        "extended-lwd",
        &l_ex,
        &extend_lwd(l, nn)?,
    ));
    suite.reports.push(RelationReport::compare(
        "even-subcode-lwd",
        &l_even,
        &even_subcode_lwd(l, nn)?,
    ));

    let mof = if weights_multiple_of_four(&a_ex) {
        RelationReport::compare("multiple-of-four", &WeightTally::new(code.n()), nn)
    } else {
        RelationReport::new("multiple-of-four").with_note("premise does not hold; vacuous")
    };
    suite.reports.push(mof);

    let (ext_report, even_report) = per_codeword_checks(code, &ex, &even, sweep)?;
    suite.reports.push(ext_report);
    suite.reports.push(even_report);

    if opts.extended_transitive {
        suite
            .reports
            .push(coordinate_split_check(&ex, &l_ex, sweep)?);
        let punctured = match puncture_lwd_transitive(&l_ex, nn) {
            Ok(p) => RelationReport::compare("punctured-lwd", l, &p),
            Err(e) => RelationReport::failure("punctured-lwd", e.to_string()),
        };
        suite.reports.push(punctured);
    }
    Ok(suite)
}

/// Per codeword `v` of `C`: its extension is a zero neighbor of `C_ex` iff
/// `v` is a zero neighbor of `C` or only-odd decomposable; an even `v` is a
/// zero neighbor of `C_even` under the same condition. Entries count, per
/// weight, the words examined (`expected`) and the words that agree (`actual`).
fn per_codeword_checks(
    code: &LinearCode,
    ex: &LinearCode,
    even: &LinearCode,
    sweep: &SweepOptions,
) -> Result<(RelationReport, RelationReport)> {
    let tester = tester_for(code)?;
    let ex_tester = tester_for(ex)?;
    let even_tester = tester_for(even)?;
    let limits = sweep.limits;
    let t = sweep_dense(code, sweep, 4, |s, v, w| {
        if w == 0 {
            return;
        }
        let cat = match tester.classify(v, &limits) {
            Ok(c) => c,
            Err(e) => {
                s.error = Some(e);
                return;
            }
        };
        let predicted = matches!(
            cat,
            DecompCategory::Indecomposable | DecompCategory::OnlyOddDecomposable
        );
        let mut ext = v.clone();
        ext.push(v.parity());
        s.counts[0][w] += 1;
        if ex_tester.is_neighbor(&ext) == predicted {
            s.counts[1][w] += 1;
        }
        if w % 2 == 0 {
            s.counts[2][w] += 1;
            if even_tester.is_neighbor(v) == predicted {
                s.counts[3][w] += 1;
            }
        }
    })?;
    Ok((
        RelationReport::compare("extension-per-codeword", &t[0], &t[1]),
        RelationReport::compare("even-subcode-per-codeword", &t[2], &t[3]),
    ))
}

/// Counts zero neighbors of `C_ex` with a one in the last coordinate and
/// compares with `w·L_w/(n+1)`.
fn coordinate_split_check(
    ex: &LinearCode,
    l_ex: &WeightTally,
    sweep: &SweepOptions,
) -> Result<RelationReport> {
    const NAME: &str = "coordinate-split";
    let (ones, _) = match parity_split(l_ex) {
        Ok(split) => split,
        Err(e) => return Ok(RelationReport::failure(NAME, e.to_string())),
    };
    let tester = tester_for(ex)?;
    let last = ex.n() - 1;
    let counted = sweep_dense(ex, sweep, 1, |s, v: &BitVector, w| {
        if w > 0 && v.get(last) && tester.is_neighbor(v) {
            s.counts[0][w] += 1;
        }
    })?;
    Ok(RelationReport::compare(NAME, &ones, &counted[0]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{hamming, reed_muller};
    use crate::gf2::BinaryMatrix;

    fn t(n: usize, pairs: &[(usize, u64)]) -> WeightTally {
        WeightTally::from_pairs(n, pairs.iter().copied()).unwrap()
    }

    #[test]
    fn extend_hamming() {
        let out = extend_lwd(&t(7, &[(3, 7), (4, 7)]), &WeightTally::new(7)).unwrap();
        assert_eq!(out, t(8, &[(4, 14)]));
    }

    #[test]
    fn extend_with_only_odd() {
        let out = extend_lwd(&t(4, &[(1, 1), (3, 1)]), &t(4, &[(4, 1)])).unwrap();
        assert_eq!(out, t(5, &[(2, 1), (4, 2)]));
        let even = even_subcode_lwd(&t(4, &[(1, 1), (3, 1)]), &t(4, &[(4, 1)])).unwrap();
        assert_eq!(even, t(4, &[(4, 1)]));
    }

    #[test]
    fn zero_inputs() {
        let z = WeightTally::new(6);
        assert!(extend_lwd(&z, &z).unwrap().is_empty());
        assert!(even_subcode_lwd(&z, &z).unwrap().is_empty());
        assert!(puncture_lwd_transitive(&WeightTally::new(7), &z)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn length_and_parity_errors() {
        assert!(matches!(
            extend_lwd(&WeightTally::new(7), &WeightTally::new(6)),
            Err(Error::LengthMismatch { .. })
        ));
        assert!(matches!(
            extend_lwd(&WeightTally::new(7), &t(7, &[(3, 1)])),
            Err(Error::OddWeightOnlyOdd { weight: 3, .. })
        ));
        assert!(matches!(
            puncture_lwd_transitive(&t(8, &[(3, 1)]), &WeightTally::new(7)),
            Err(Error::OddWeightInExtended { weight: 3 })
        ));
    }

    #[test]
    fn split_and_puncture_rm13() {
        let (ones, zeros) = parity_split(&t(8, &[(4, 14)])).unwrap();
        assert_eq!(ones, t(8, &[(4, 7)]));
        assert_eq!(zeros, t(8, &[(4, 7)]));
        let p = puncture_lwd_transitive(&t(8, &[(4, 14)]), &WeightTally::new(7)).unwrap();
        assert_eq!(p, t(7, &[(3, 7), (4, 7)]));
        assert!(matches!(
            parity_split(&t(8, &[(4, 3)])),
            Err(Error::NotIntegral { .. })
        ));
    }

    #[test]
    fn puncture_reports_negative() {
        let r = puncture_lwd_transitive(&t(8, &[(4, 14)]), &t(7, &[(4, 8)]));
        assert_eq!(r, Err(Error::NegativeCount { weight: 4 }));
    }

    #[test]
    fn inverse_of_puncture() {
        let l = t(127, &[(31, 2667), (32, 8001)]);
        let ex = extended_lwd_from_punctured(&l, &WeightTally::new(127)).unwrap();
        assert_eq!(ex, t(128, &[(32, 10668)]));
        let bad = t(127, &[(31, 2667), (32, 8000)]);
        assert!(extended_lwd_from_punctured(&bad, &WeightTally::new(127)).is_err());
    }

    #[test]
    fn multiple_of_four() {
        assert!(weights_multiple_of_four(&t(8, &[(0, 1), (4, 14), (8, 1)])));
        assert!(!weights_multiple_of_four(&t(5, &[(0, 1), (2, 1), (4, 2)])));
        assert!(weights_multiple_of_four(&WeightTally::new(0)));
    }

    #[test]
    fn ratio_check() {
        let ok = table_ratio_check(&t(127, &[(27, 40_894), (28, 146_050)]), 127);
        assert!(ok.passed());
        assert_eq!(ok.entries.len(), 1);
        let bad = table_ratio_check(&t(7, &[(3, 1), (4, 1000)]), 7);
        assert!(!bad.passed());
    }

    #[test]
    fn verify_small_codes() {
        let h = hamming(3).unwrap();
        let suite = verify_all_relations(&h, &VerifyOptions::default()).unwrap();
        assert!(suite.passed(), "{:#?}", suite);

        let c = LinearCode::new(BinaryMatrix::from_strs(&["1000", "0111"]).unwrap()).unwrap();
        let suite = verify_all_relations(&c, &VerifyOptions::default()).unwrap();
        assert!(suite.passed(), "{:#?}", suite);

        let p = reed_muller(1, 4).unwrap().puncture(15).unwrap();
        let opts = VerifyOptions {
            extended_transitive: true,
            ..Default::default()
        };
        let suite = verify_all_relations(&p, &opts).unwrap();
        assert!(suite.passed(), "{:#?}", suite);
        assert!(suite.get("punctured-lwd").is_some());
    }
}
