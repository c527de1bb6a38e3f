use std::fmt::Write as _;

use lwd_core::{LwdReport, WeightTally};

/// Right-aligned columns: weight followed by one column per present tally.
/// A row is printed for every positive weight where some column is nonzero.
pub fn tally_table(columns: &[(&str, &WeightTally)]) -> String {
    let mut weights: Vec<usize> = columns
        .iter()
        .flat_map(|(_, t)| t.iter().map(|(w, _)| w))
        .filter(|&w| w > 0)
        .collect();
    weights.sort_unstable();
    weights.dedup();

    let mut cells: Vec<Vec<String>> = vec![std::iter::once("w".to_string())
        .chain(columns.iter().map(|(h, _)| h.to_string()))
        .collect()];
    for w in weights {
        cells.push(
            std::iter::once(w.to_string())
                .chain(columns.iter().map(|(_, t)| t.get(w).to_string()))
                .collect(),
        );
    }
    let widths: Vec<usize> = (0..=columns.len())
        .map(|c| cells.iter().map(|row| row[c].len()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for row in cells {
        let line: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(cell, &width)| format!("{cell:>width$}"))
            .collect();
        let _ = writeln!(out, "{}", line.join("  "));
    }
    out
}

pub fn report_table(report: &LwdReport) -> String {
    let mut columns = Vec::new();
    if let Some(a) = &report.weights {
        columns.push(("A_w", a));
    }
    columns.push(("L_w", &report.lwd));
    if let Some(n) = &report.only_odd {
        columns.push(("N_w", n));
    }
    let k = report.k.map_or("?".to_string(), |k| k.to_string());
    let mut out = format!(
        "# {} ({}, {}), mode {}\n",
        report.code, report.n, k, report.mode
    );
    if let Some(identity) = &report.identity {
        let _ = writeln!(out, "# {identity}");
    }
    out.push_str(&tally_table(&columns));
    for c in &report.checks {
        let _ = writeln!(
            out,
            "{} {}: {}",
            if c.pass { "PASS" } else { "FAIL" },
            c.name,
            c.detail
        );
    }
    out
}

pub fn emit(report: &LwdReport, json: bool) {
    if json {
        println!("{}", report.to_json());
    } else {
        print!("{}", report_table(report));
    }
}
