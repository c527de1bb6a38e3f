use std::path::Path;

use lwd_core::symmetry::{
    affine_group_generators, cyclic_group_generator, parse_permutations, Permutation,
};
use lwd_core::{
    bch, hamming, parse_generator, random_linear_code, reed_muller, Limits, LinearCode,
    SweepOptions, WeightTally,
};

use crate::{CliError, CliResult, Family, RunArgs, SourceArgs};

pub fn read_file(path: &Path) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|e| CliError::Io(path.to_path_buf(), e))
}

pub fn write_file(path: &Path, text: &str) -> CliResult<()> {
    std::fs::write(path, text).map_err(|e| CliError::Io(path.to_path_buf(), e))
}

fn param<T: TryFrom<u64>>(params: &[u64], i: usize, family: &str, usage: &str) -> CliResult<T> {
    let v = params
        .get(i)
        .ok_or_else(|| CliError::Usage(format!("{family} expects parameters {usage}")))?;
    T::try_from(*v).map_err(|_| CliError::Usage(format!("{family} parameter {v} is out of range")))
}

/// Builds a family member and a short description of it.
pub fn build_family(family: Family, params: &[u64], seed: u64) -> CliResult<(LinearCode, String)> {
    let (name, usage, arity) = match family {
        Family::Hamming => ("hamming", "R", 1),
        Family::Rm => ("rm", "R M", 2),
        Family::Bch => ("bch", "M D", 2),
        Family::Random => ("random", "N K", 2),
    };
    if params.len() != arity {
        return Err(CliError::Usage(format!(
            "{name} expects parameters {usage}"
        )));
    }
    let p32 = |i| param::<u32>(params, i, name, usage);
    let code = match family {
        Family::Hamming => hamming(p32(0)?)?,
        Family::Rm => reed_muller(p32(0)?, p32(1)?)?,
        Family::Bch => bch(p32(0)?, p32(1)?)?,
        Family::Random => random_linear_code(
            param(params, 0, name, usage)?,
            param(params, 1, name, usage)?,
            seed,
        )?,
    };
    let list = params
        .iter()
        .map(u64::to_string)
        .collect::<Vec<_>>()
        .join(" ");
    let desc = match family {
        Family::Random => format!("{name} {list} seed {seed}"),
        _ => format!("{name} {list}"),
    };
    Ok((code, desc))
}

impl SourceArgs {
    pub fn is_given(&self) -> bool {
        self.matrix.is_some() || self.family.is_some() || self.random.is_some()
    }

    /// Loads the code, or `None` when no source was given.
    pub fn load_optional(&self) -> CliResult<Option<(LinearCode, String)>> {
        if let Some(path) = &self.matrix {
            let code = parse_generator(&read_file(path)?)?;
            return Ok(Some((code, path.display().to_string())));
        }
        if let Some(arg) = &self.family {
            let family = <Family as clap::ValueEnum>::from_str(&arg[0], true)
                .map_err(|_| CliError::Usage(format!("unknown family {:?}", arg[0])))?;
            let params = arg[1..]
                .iter()
                .map(|p| {
                    p.parse::<u64>()
                        .map_err(|_| CliError::Usage(format!("bad parameter {p:?}")))
                })
                .collect::<CliResult<Vec<_>>>()?;
            return build_family(family, &params, self.seed).map(Some);
        }
        if let Some(nk) = &self.random {
            let params = [nk[0] as u64, nk[1] as u64];
            return build_family(Family::Random, &params, self.seed).map(Some);
        }
        Ok(None)
    }

    pub fn load(&self) -> CliResult<(LinearCode, String)> {
        self.load_optional()?.ok_or_else(|| {
            CliError::Usage("no code given: pass a matrix file, --family, or --random".into())
        })
    }
}

impl RunArgs {
    pub fn sweep(&self) -> SweepOptions {
        let partitions = self
            .threads
            .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
            .max(1);
        let limits = if self.force {
            Limits::unbounded()
        } else {
            Limits::default()
        };
        SweepOptions { limits, partitions }
    }
}

/// A tally given inline (`w:c,w:c`) or as a file of `w count` lines.
pub fn load_tally(arg: &str, n: usize) -> CliResult<WeightTally> {
    let path = Path::new(arg);
    if path.is_file() {
        Ok(WeightTally::parse_listing(n, &read_file(path)?)?)
    } else {
        Ok(WeightTally::parse_inline(n, arg)?)
    }
}

pub fn load_subcode(arg: &str, code: &LinearCode) -> CliResult<LinearCode> {
    if arg == "even" {
        if !code.has_odd_weight_word() {
            return Err(CliError::Core(lwd_core::Error::InvalidParameter(
                "every codeword has even weight, so the even subcode is not proper; pick another --subcode".into(),
            )));
        }
        return Ok(code.even_subcode());
    }
    if let Some(r) = arg.strip_prefix("rm:") {
        let r: u32 = r
            .parse()
            .map_err(|_| CliError::Usage(format!("bad subcode order {r:?}")))?;
        let m = power_of_two(code.n())?;
        return Ok(reed_muller(r, m)?);
    }
    Ok(parse_generator(&read_file(Path::new(arg))?)?)
}

pub fn load_group(arg: Option<&str>, code: &LinearCode) -> CliResult<Vec<Permutation>> {
    let n = code.n();
    let arg = arg.unwrap_or(if code.tags().cyclic {
        "cyclic"
    } else {
        "identity"
    });
    match arg {
        "cyclic" => Ok(vec![cyclic_group_generator(n)]),
        "affine" => Ok(affine_group_generators(power_of_two(n)?)?),
        "identity" => Ok(vec![Permutation::identity(n)]),
        path => Ok(parse_permutations(&read_file(Path::new(path))?, Some(n))?),
    }
}

fn power_of_two(n: usize) -> CliResult<u32> {
    if n.is_power_of_two() {
        Ok(n.trailing_zeros())
    } else {
        Err(CliError::Core(lwd_core::Error::InvalidParameter(format!(
            "length {n} is not a power of two"
        ))))
    }
}
