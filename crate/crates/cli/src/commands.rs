use std::time::Instant;

use lwd_core::symmetry::{
    fill_subdistributions, partition_cosets, sum_classes, CosetDecomposition,
};
use lwd_core::{
    category_tallies, even_subcode_lwd, extend_lwd, format_generator, local_weight_distribution,
    only_odd_counts, puncture_lwd_transitive, reference_column, reference_columns,
    table_ratio_check, verify_all_relations, weight_distribution, CheckResult, LinearCode,
    LwdReport, RelationReport, SweepOptions, VerifyOptions, WeightTally,
};

use crate::output::emit;
use crate::source::{build_family, load_group, load_subcode, load_tally, read_file, write_file};
use crate::{
    CheckTableArgs, CliError, CliResult, ConstructArgs, Direction, LwdArgs, Mode, RelateArgs,
    VerifyArgs,
};

fn elapsed_ms(start: Instant) -> u64 {
    start.elapsed().as_millis() as u64
}

pub fn construct(args: ConstructArgs) -> CliResult<()> {
    let (code, desc) = build_family(args.family, &args.params, args.seed)?;
    let text = format_generator(&code, Some(&desc));
    match &args.output {
        Some(path) => {
            write_file(path, &text)?;
            println!("({}, {})", code.n(), code.k());
        }
        None => print!("{text}"),
    }
    Ok(())
}

pub fn lwd(args: LwdArgs) -> CliResult<()> {
    let (code, desc) = args.source.load()?;
    let sweep = args.run.sweep();
    let start = Instant::now();
    let mut summary = None;
    let mut report = match args.mode {
        Mode::Brute => {
            let t = category_tallies(&code, &sweep)?;
            let mut r = LwdReport::new(desc, Some(code.k()), "brute", t.indecomposable);
            r.weights = Some(t.weights);
            r.only_odd = Some(t.only_odd);
            r
        }
        Mode::Shortcut => {
            let l = local_weight_distribution(&code, true, &sweep)?;
            let mut r = LwdReport::new(desc, Some(code.k()), "shortcut", l);
            r.weights = Some(weight_distribution(&code, &sweep)?);
            if args.with_n {
                r.only_odd = Some(only_odd_counts(&code, &sweep)?);
            }
            r
        }
        Mode::Cosets => {
            let sub = load_subcode(&args.subcode, &code)?;
            let gens = load_group(args.group.as_deref(), &code)?;
            let dec = CosetDecomposition::new(&code, &sub)?;
            let mut classes = partition_cosets(&dec, &gens)?;
            fill_subdistributions(&dec, &mut classes, &sweep)?;
            summary = Some(format!(
                "# {} cosets of a ({}, {}) subcode in {} orbits under {} generator(s)",
                dec.num_cosets(),
                sub.n(),
                sub.k(),
                classes.len(),
                gens.len()
            ));
            LwdReport::new(
                desc,
                Some(code.k()),
                "cosets",
                sum_classes(code.n(), &classes),
            )
        }
    };
    report.duration_ms = elapsed_ms(start);
    if let (Some(s), false) = (&summary, args.run.json) {
        println!("{s}");
    }
    emit(&report, args.run.json);
    Ok(())
}

struct RelateInputs {
    lwd: WeightTally,
    only_odd: WeightTally,
    /// The code the inputs were computed from, if any.
    code: Option<(LinearCode, String)>,
}

fn relate_inputs(args: &RelateArgs, sweep: &SweepOptions) -> CliResult<RelateInputs> {
    if let Some((code, desc)) = args.source.load_optional()? {
        if args.lwd.is_some() || args.only_odd.is_some() || args.n_zero {
            return Err(CliError::Usage(
                "tallies are computed from the code; drop --lwd, --only-odd and --n-zero".into(),
            ));
        }
        let t = category_tallies(&code, sweep)?;
        let lwd = match args.direction {
            Direction::Puncture => local_weight_distribution(&code.extend(), false, sweep)?,
            _ => t.indecomposable,
        };
        return Ok(RelateInputs {
            lwd,
            only_odd: t.only_odd,
            code: Some((code, desc)),
        });
    }
    let lwd_arg = args
        .lwd
        .as_deref()
        .ok_or_else(|| CliError::Usage("give a code or --lwd".into()))?;
    let len = args
        .length
        .ok_or_else(|| CliError::Usage("--length is required with --lwd".into()))?;
    let n = match args.direction {
        Direction::Puncture if len == 0 => {
            return Err(CliError::Usage("--length must be positive".into()))
        }
        Direction::Puncture => len - 1,
        _ => len,
    };
    let only_odd = match (&args.only_odd, args.n_zero) {
        (Some(t), _) => load_tally(t, n)?,
        (None, true) => WeightTally::new(n),
        (None, false) => return Err(CliError::Usage("give --only-odd or --n-zero".into())),
    };
    Ok(RelateInputs {
        lwd: load_tally(lwd_arg, len)?,
        only_odd,
        code: None,
    })
}

pub fn relate(args: RelateArgs) -> CliResult<()> {
    if args.direction == Direction::Puncture && !args.transitive {
        return Err(CliError::Core(lwd_core::Error::InvalidParameter(
            "puncture needs --transitive: the formula holds only for transitive-invariant extended codes".into(),
        )));
    }
    let sweep = args.run.sweep();
    let start = Instant::now();
    let inputs = relate_inputs(&args, &sweep)?;
    let (result, identity) = match args.direction {
        Direction::Extend => (
            extend_lwd(&inputs.lwd, &inputs.only_odd)?,
            "L_2i(C_ex) = L_2i-1(C) + L_2i(C) + N_2i(C)",
        ),
        Direction::Even => (
            even_subcode_lwd(&inputs.lwd, &inputs.only_odd)?,
            "L_2i(C_even) = L_2i(C) + N_2i(C)",
        ),
        Direction::Puncture => (
            puncture_lwd_transitive(&inputs.lwd, &inputs.only_odd)?,
            "L_w(C) = (w+1)/(n+1) L_w+1(C_ex) for odd w; (n+1-w)/(n+1) L_w(C_ex) - N_w(C) for even w",
        ),
    };

    let (desc, k, brute) = match &inputs.code {
        Some((code, desc)) => {
            let target = match args.direction {
                Direction::Extend => code.extend(),
                Direction::Even => code.even_subcode(),
                Direction::Puncture => code.clone(),
            };
            let brute = local_weight_distribution(&target, false, &sweep)?;
            (desc.clone(), Some(target.k()), Some(brute))
        }
        None => ("tallies".to_string(), None, None),
    };
    let direction = match args.direction {
        Direction::Extend => "extend",
        Direction::Puncture => "puncture",
        Direction::Even => "even",
    };
    let mut report = LwdReport::new(
        format!("{desc} -> {direction}"),
        k,
        "relate",
        result.clone(),
    );
    report.identity = Some(identity.to_string());
    let mut failed = false;
    if let Some(brute) = brute {
        let check = RelationReport::compare("matches-brute-force", &brute, &result);
        failed = !check.passed();
        report.checks.push(CheckResult::from(&check));
    }
    report.duration_ms = elapsed_ms(start);
    emit(&report, args.run.json);
    if failed {
        return Err(CliError::ChecksFailed(
            "derived tally differs from brute force".into(),
        ));
    }
    Ok(())
}

struct TableColumn {
    label: String,
    k: Option<usize>,
    tally: WeightTally,
    n: usize,
    extra: Vec<RelationReport>,
}

pub fn check_table(args: CheckTableArgs) -> CliResult<()> {
    if let Some(id) = &args.export {
        let column =
            reference_column(id).ok_or_else(|| CliError::Usage(format!("unknown table {id:?}")))?;
        print!("{}", column.export());
        return Ok(());
    }

    let mut columns: Vec<TableColumn> = Vec::new();
    let embedded: Vec<_> = if args.tables.is_empty() && args.file.is_none() {
        reference_columns().to_vec()
    } else {
        args.tables
            .iter()
            .filter_map(|id| reference_column(id))
            .collect()
    };
    for c in embedded {
        let mut checksum = RelationReport::new("checksum");
        checksum.push(0, c.checksum.into(), c.weighted_sum().into());
        columns.push(TableColumn {
            label: format!("{}: {}", c.id, c.description),
            k: Some(c.k),
            tally: c.tally(),
            n: c.n,
            extra: vec![checksum],
        });
    }
    if let Some(path) = &args.file {
        let tally = WeightTally::parse_listing(args.length, &read_file(path)?)?;
        columns.push(TableColumn {
            label: path.display().to_string(),
            k: None,
            tally,
            n: args.length,
            extra: Vec::new(),
        });
    }

    let mut all_pass = true;
    let mut reports = Vec::new();
    for TableColumn {
        label,
        k,
        tally,
        n,
        extra,
    } in columns
    {
        let ratio = table_ratio_check(&tally, n);
        all_pass &= ratio.passed() && extra.iter().all(RelationReport::passed);
        if !args.json {
            println!("# {label}");
            for e in &ratio.entries {
                let status = if e.passed() { "PASS" } else { "FAIL" };
                println!(
                    "{status} {}/{}: {}*{} = {}, {}*{} = {}",
                    e.weight,
                    e.weight + 1,
                    tally.get(e.weight),
                    n - e.weight,
                    e.expected,
                    tally.get(e.weight + 1),
                    e.weight + 1,
                    e.actual
                );
            }
            for r in &extra {
                println!("{r}");
            }
            println!(
                "{} pairs checked, {} failed",
                ratio.entries.len(),
                ratio.failures().count()
            );
        }
        let mut report = LwdReport::new(label, k, "table", tally);
        report.checks = std::iter::once(&ratio)
            .chain(&extra)
            .map(CheckResult::from)
            .collect();
        reports.push(report);
    }
    if args.json {
        println!(
            "{}",
            serde_json::to_string_pretty(&reports).expect("reports serialize")
        );
    }
    if all_pass {
        Ok(())
    } else {
        Err(CliError::ChecksFailed(
            "table consistency check failed".into(),
        ))
    }
}

pub fn verify(args: VerifyArgs) -> CliResult<()> {
    let (code, desc) = args.source.load()?;
    let sweep = args.run.sweep();
    let start = Instant::now();
    let opts = VerifyOptions {
        sweep,
        extended_transitive: args.transitive,
    };
    let suite = verify_all_relations(&code, &opts)?;
    let t = category_tallies(&code, &sweep)?;
    let mut report =
        LwdReport::new(desc, Some(code.k()), "verify", t.indecomposable).with_checks(&suite);
    report.weights = Some(t.weights);
    report.only_odd = Some(t.only_odd);
    report.duration_ms = elapsed_ms(start);
    emit(&report, args.run.json);
    if suite.passed() {
        Ok(())
    } else {
        Err(CliError::ChecksFailed("some relations failed".into()))
    }
}
