use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand};

use magrep::format::{load_group, read_corep_file, write_corep, GroupRef};
use magrep::{
    classify, decompose, induce, irreps, regular_corep, report, validate, Error, MagneticGroup,
};

#[derive(Parser)]
#[command(
    name = "magrep",
    version,
    about = "Irreducible corepresentations of finite magnetic groups"
)]
struct Cli {
    /// Seed for the randomized splitting.
    #[arg(long, global = true, env = "MAGREP_SEED", default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Table of irreducible coreps.
    Classify {
        /// A .mgrp path or `builtin <kind> [param]`.
        #[arg(required = true, num_args = 1..)]
        group: Vec<String>,
        #[arg(long)]
        json: bool,
    },
    /// Largest twisted-law residual of a .corep file.
    Verify {
        corep: PathBuf,
        #[arg(long)]
        group: Option<String>,
    },
    /// Multiplicities of the irreducible coreps in a .corep file.
    Decompose {
        corep: PathBuf,
        #[arg(long)]
        group: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Write the corep induced from a kernel irrep.
    Induce {
        #[arg(long)]
        group: String,
        /// Irrep label: `1`, `χ1` or `chi1`.
        #[arg(long)]
        irrep: String,
        #[arg(long)]
        out: PathBuf,
    },
    /// Write the regular corep.
    Regular {
        #[arg(long)]
        group: String,
        #[arg(long)]
        out: PathBuf,
    },
}

enum Failure {
    Input(String),
    Numerical(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_numerical() {
            Failure::Numerical(e.to_string())
        } else {
            Failure::Input(e.to_string())
        }
    }
}

fn fail<E: Into<Error>>(e: E) -> Failure {
    Failure::from(e.into())
}

fn group_arg(spec: &str) -> Result<(Arc<MagneticGroup>, GroupRef), Failure> {
    let mg = load_group(spec).map_err(fail)?;
    let gref = match GroupRef::parse(spec) {
        GroupRef::Path(p) => GroupRef::Path(std::fs::canonicalize(&p).unwrap_or(p)),
        builtin => builtin,
    };
    Ok((Arc::new(mg), gref))
}

fn irrep_index(label: &str) -> Option<usize> {
    let digits = label
        .strip_prefix('χ')
        .or_else(|| label.strip_prefix("chi"))
        .unwrap_or(label);
    digits.parse().ok()
}

fn write_file(path: &PathBuf, text: &str) -> Result<(), Failure> {
    std::fs::write(path, text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    match cli.cmd {
        Cmd::Classify { group, json } => {
            let (mg, _) = group_arg(&group.join(" "))?;
            let cls = classify(&mg, cli.seed).map_err(fail)?;
            if json {
                println!("{}", report::classification_json(&cls));
            } else {
                print!("{}", report::classification_table(&cls));
            }
        }
        Cmd::Verify { corep, group } => {
            let mg = group.map(|g| group_arg(&g)).transpose()?.map(|(mg, _)| mg);
            let c = read_corep_file(&corep, mg).map_err(fail)?;
            let rep = validate(&c);
            println!("max residual {:.3e}", rep.max_residual);
            if !rep.is_ok() {
                eprintln!("{rep}");
                return Ok(ExitCode::from(1));
            }
        }
        Cmd::Decompose { corep, group, json } => {
            let mg = group.map(|g| group_arg(&g)).transpose()?.map(|(mg, _)| mg);
            let c = read_corep_file(&corep, mg)
                .map_err(fail)?
                .validated()
                .map_err(fail)?;
            let rep = decompose(&c, cli.seed).map_err(fail)?;
            if json {
                println!("{}", report::decomposition_json(&rep));
            } else {
                print!("{}", report::decomposition_table(&rep));
            }
        }
        Cmd::Induce { group, irrep, out } => {
            let (mg, gref) = group_arg(&group)?;
            let reps = irreps(&mg, cli.seed).map_err(fail)?;
            let rep = irrep_index(&irrep)
                .and_then(|i| reps.get(i))
                .ok_or_else(|| {
                    Failure::Input(format!("no irrep `{irrep}` (there are {})", reps.len()))
                })?;
            let c = induce(rep).map_err(fail)?;
            write_file(&out, &write_corep(&c, &gref))?;
        }
        Cmd::Regular { group, out } => {
            let (mg, gref) = group_arg(&group)?;
            write_file(&out, &write_corep(&regular_corep(&mg), &gref))?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Numerical(msg)) => {
            eprintln!("numerical failure: {msg}");
            ExitCode::from(2)
        }
    }
}
