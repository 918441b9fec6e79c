//! The `toricube` command-line front end.
//!
//! Exit codes: 0 on success, 1 for malformed input or invocation, 2 for an
//! internal contract violation (including any oracle disagreement found by
//! `verify`).

mod output;
mod problem;

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::Serialize;

use crate::cw::{build_cw, regularity_report};
use crate::error::{Result, ToricError};
use crate::oracle::{check_map, rng_from_env, GRID_CAP};
use crate::toric::{
    cubify, implicitize, is_cube, parametrize, system_equiv, ToricCube, DEFAULT_SUPPORT_CAP,
    MAX_AMBIENT_DIM,
};

pub use output::{
    cw_json, poset_dot, poset_json, strata_json, CellJson, CwJson, DomainJson, IsCubeJson,
    PosetElementJson, PosetJson, PosetNodeJson, StrataJson, StratumJson, VerifyJson,
};
pub use problem::{parse_problem, JsonInequality, JsonInt, Problem, ProblemJson};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MALFORMED: i32 = 1;
pub const EXIT_CONTRACT: i32 = 2;

/// Image points sampled by `verify` for the partition check.
const PARTITION_SAMPLES: usize = 1000;

#[derive(Debug, Parser)]
#[command(
    name = "toricube",
    version,
    about = "Exact computations with toric cubes"
)]
struct Cli {
    /// Largest ambient dimension accepted for 2^n support enumeration.
    #[arg(long, global = true, default_value_t = DEFAULT_SUPPORT_CAP)]
    max_support_dim: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Binomial system cutting out the image of a monomial map.
    Implicitize { file: PathBuf },
    /// Monomial map onto the cube of a binomial system.
    Parametrize { file: PathBuf },
    /// System for the closure of the positive part of a binomial system.
    Cubify { file: PathBuf },
    /// Whether a binomial system already defines a toric cube.
    IsCube { file: PathBuf },
    /// Presence and log-cone of every support stratum.
    Strata { file: PathBuf },
    /// Cells, closure poset and f-vector of the CW decomposition.
    Cw {
        file: PathBuf,
        /// Include the characteristic domain of every positive-dimensional cell.
        #[arg(long)]
        char_domains: bool,
        /// Rescale rays to equal coordinate sums in characteristic domains.
        #[arg(long)]
        scaled_rays: bool,
    },
    /// Closure poset of the CW decomposition.
    Poset {
        file: PathBuf,
        /// Emit a Graphviz Hasse diagram instead of JSON.
        #[arg(long)]
        dot: bool,
    },
    /// Regularity checks on the CW decomposition.
    Check { file: PathBuf },
    /// Cross-check the pipeline against the brute-force oracles.
    Verify {
        file: PathBuf,
        /// Grid resolution for image sampling.
        #[arg(long, default_value_t = 4)]
        res: u32,
    },
}

enum Outcome {
    Text(String),
    /// Output followed by a contract-violation exit.
    Failed(String),
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("output types serialize");
    s.push('\n');
    s
}

fn read_input(path: &Path) -> Result<String> {
    let mut text = String::new();
    let res = if path.as_os_str() == "-" {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::File::open(path).and_then(|mut f| f.read_to_string(&mut text).map(|_| ()))
    };
    res.map_err(|e| ToricError::malformed("file", format!("{}: {e}", path.display())))?;
    Ok(text)
}

fn load(path: &Path, cap: usize) -> Result<Problem> {
    if cap > MAX_AMBIENT_DIM {
        return Err(ToricError::malformed(
            "--max-support-dim",
            format!("at most {MAX_AMBIENT_DIM} is supported"),
        ));
    }
    let p = parse_problem(&read_input(path)?)?;
    if p.n() > cap {
        return Err(ToricError::malformed(
            "n",
            format!("{} exceeds the support enumeration cap {cap}", p.n()),
        ));
    }
    Ok(p)
}

fn expect_system(p: Problem) -> Result<crate::toric::BinomialSystem> {
    match p {
        Problem::System(s) => Ok(s),
        Problem::Map(_) => Err(ToricError::malformed("kind", "expected `binomial_system`")),
    }
}

fn cube_of(p: &Problem) -> Result<ToricCube> {
    match p {
        Problem::Map(m) => ToricCube::from_map(m),
        Problem::System(s) => ToricCube::from_system(s),
    }
}

fn execute(cli: Cli) -> Result<Outcome> {
    let cap = cli.max_support_dim;
    let text = match cli.command {
        Command::Implicitize { file } => match load(&file, cap)? {
            Problem::Map(m) => json(&Problem::System(implicitize(&m)?).to_json()),
            Problem::System(_) => {
                return Err(ToricError::malformed("kind", "expected `monomial_map`"))
            }
        },
        Command::Parametrize { file } => {
            let s = expect_system(load(&file, cap)?)?;
            json(&Problem::Map(parametrize(&s)).to_json())
        }
        Command::Cubify { file } => {
            let s = expect_system(load(&file, cap)?)?;
            json(&Problem::System(cubify(&s)?).to_json())
        }
        Command::IsCube { file } => {
            let s = expect_system(load(&file, cap)?)?;
            json(&IsCubeJson {
                is_cube: is_cube(&s)?,
            })
        }
        Command::Strata { file } => {
            let cube = cube_of(&load(&file, cap)?)?;
            json(&strata_json(cube.n(), &cube.strata()))
        }
        Command::Cw {
            file,
            char_domains,
            scaled_rays,
        } => {
            let x = build_cw(&cube_of(&load(&file, cap)?)?);
            json(&cw_json(&x, char_domains, scaled_rays)?)
        }
        Command::Poset { file, dot } => {
            let x = build_cw(&cube_of(&load(&file, cap)?)?);
            if dot {
                poset_dot(&x)
            } else {
                json(&poset_json(&x))
            }
        }
        Command::Check { file } => {
            let x = build_cw(&cube_of(&load(&file, cap)?)?);
            let report = regularity_report(&x);
            let text = json(&report);
            if !report.pass {
                return Ok(Outcome::Failed(text));
            }
            text
        }
        Command::Verify { file, res } => {
            let p = load(&file, cap)?;
            let (m, system) = match p {
                Problem::Map(m) => (m, None),
                Problem::System(s) => (parametrize(&s), Some(s)),
            };
            if res == 0
                || u64::from(res)
                    .checked_pow(m.d() as u32)
                    .is_none_or(|k| k > GRID_CAP)
            {
                return Err(ToricError::malformed(
                    "--res",
                    format!("need 1 <= res and res^{} <= {GRID_CAP}", m.d()),
                ));
            }
            let mut rng = rng_from_env();
            let check = check_map(&m, res, PARTITION_SAMPLES, &mut rng)?;
            let cubify_consistent = match system {
                Some(s) => Some(system_equiv(&cubify(&s)?, &implicitize(&m)?)?),
                None => None,
            };
            let pass = check.pass() && cubify_consistent != Some(false);
            let text = json(&VerifyJson {
                res,
                check,
                cubify_consistent,
                pass,
            });
            if !pass {
                return Ok(Outcome::Failed(text));
            }
            text
        }
    };
    Ok(Outcome::Text(text))
}

/// Runs the command line `args` (program name first), writing results to
/// `out` and diagnostics to `err`. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_MALFORMED
            } else {
                EXIT_OK
            };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    match execute(cli) {
        Ok(Outcome::Text(text)) => {
            let _ = out.write_all(text.as_bytes());
            EXIT_OK
        }
        Ok(Outcome::Failed(text)) => {
            let _ = out.write_all(text.as_bytes());
            let _ = writeln!(err, "error: verification failed");
            EXIT_CONTRACT
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                ToricError::Malformed { .. } => EXIT_MALFORMED,
                _ => EXIT_CONTRACT,
            }
        }
    }
}

/// Entry point for the binary.
pub fn main() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}
