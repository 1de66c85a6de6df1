//! Command-line interface.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use catwood_core::catalan::{BinaryTree, NoncrossingPartition, PlaneTree};
use catwood_core::stack::is_stack;
use catwood_core::{phi, psi, DyckPath, LatticeKind};
use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::census::{run_census, CensusOptions};
use crate::dot::{hasse_dot, realizer_dot};
use crate::error::CliError;
use crate::json::{
    binary_tree_from_json, binary_tree_to_json, partition_from_json, partition_to_json,
    plane_tree_from_json, plane_tree_to_json, read_realizer, realizer_to_json,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_IDENTITY_FAILURE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "catwood",
    version,
    about = "Catalan lattices, Dyck path pairs and Schnyder realizers"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Form {
    /// Dyck word over N and S
    Word,
    /// plane tree as nested arrays of children
    Tree,
    /// binary tree: null or [left, right]
    Binary,
    /// non-crossing partition as an array of blocks
    Partition,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Lattice {
    Stanley,
    Tamari,
    Kreweras,
}

impl From<Lattice> for LatticeKind {
    fn from(l: Lattice) -> Self {
        match l {
            Lattice::Stanley => LatticeKind::Stanley,
            Lattice::Tamari => LatticeKind::Tamari,
            Lattice::Kreweras => LatticeKind::Kreweras,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Convert between Dyck words, plane trees, binary trees and partitions
    Convert {
        #[arg(long, value_enum)]
        from: Form,
        #[arg(long, value_enum)]
        to: Form,
        value: String,
    },
    /// Print whether P ≤ Q in a lattice
    Order {
        #[arg(long, value_enum)]
        lattice: Lattice,
        p: String,
        q: String,
    },
    /// List the paths covering P in a lattice
    Covers {
        #[arg(long, value_enum)]
        lattice: Lattice,
        p: String,
    },
    /// Build the realizer of a Stanley interval (P, Q)
    Phi {
        p: String,
        q: String,
        #[arg(long, conflicts_with = "dot")]
        json: bool,
        #[arg(long)]
        dot: bool,
    },
    /// Recover (P, Q) from a realizer file
    Psi {
        #[arg(long)]
        json: PathBuf,
    },
    /// Minimal / maximal / stack verdicts for a realizer file
    Classify {
        #[arg(long)]
        json: PathBuf,
    },
    /// Exhaustive census of size N, printed as a JSON report
    Census {
        n: usize,
        #[arg(long, default_value_t = 1)]
        shards: usize,
        /// Only count intervals, skipping realizers
        #[arg(long)]
        count_only: bool,
        /// Override the size cap
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Hasse diagram of a lattice in DOT
    ExportHasse {
        #[arg(long, value_enum)]
        lattice: Lattice,
        n: usize,
        #[arg(long, required = true)]
        dot: bool,
        /// Write to a file instead of standard output
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
}

fn parse_path(s: &str) -> Result<DyckPath, CliError> {
    Ok(DyckPath::parse_word(s)?)
}

fn parse_json(s: &str) -> Result<Value, CliError> {
    serde_json::from_str(s).map_err(|e| CliError::Format(format!("invalid JSON: {e}")))
}

fn read_to_path(form: Form, value: &str) -> Result<DyckPath, CliError> {
    Ok(match form {
        Form::Word => parse_path(value)?,
        Form::Tree => plane_tree_from_json(&parse_json(value)?)?.omega()?,
        Form::Binary => binary_tree_from_json(&parse_json(value)?)?.sigma()?,
        Form::Partition => partition_from_json(&parse_json(value)?)?.theta(),
    })
}

fn write_from_path(form: Form, p: &DyckPath) -> String {
    match form {
        Form::Word => p.to_word(),
        Form::Tree => plane_tree_to_json(&PlaneTree::omega_inv(p)).to_string(),
        Form::Binary => binary_tree_to_json(&BinaryTree::sigma_inv(p)).to_string(),
        Form::Partition => partition_to_json(&NoncrossingPartition::theta_inv(p)).to_string(),
    }
}

fn vertex_label(n: usize, v: usize) -> String {
    if v < n {
        format!("u{v}")
    } else {
        format!("v{}", v - n)
    }
}

fn execute(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    match cmd {
        Command::Convert { from, to, value } => {
            let p = read_to_path(from, &value)?;
            writeln!(out, "{}", write_from_path(to, &p))?;
        }
        Command::Order { lattice, p, q } => {
            let (p, q) = (parse_path(&p)?, parse_path(&q)?);
            writeln!(out, "{}", LatticeKind::from(lattice).leq(&p, &q)?)?;
        }
        Command::Covers { lattice, p } => {
            for c in LatticeKind::from(lattice).covers(&parse_path(&p)?) {
                writeln!(out, "{c}")?;
            }
        }
        Command::Phi { p, q, json, dot } => {
            let r = phi(&parse_path(&p)?, &parse_path(&q)?)?;
            if json {
                let j = realizer_to_json(&r)?;
                writeln!(
                    out,
                    "{}",
                    serde_json::to_string_pretty(&j).expect("serialisable")
                )?;
            } else if dot {
                write!(out, "{}", realizer_dot(&r))?;
            } else {
                let n = r.size();
                for c in catwood_core::Color::ALL {
                    let parents: Vec<String> = (0..n)
                        .map(|u| vertex_label(n, r.parent(c, u).expect("valid realizer")))
                        .collect();
                    writeln!(out, "p{c}: {}", parents.join(" "))?;
                }
            }
        }
        Command::Psi { json } => {
            let r = read_realizer(&fs::read_to_string(json)?)?;
            let (p, q) = psi(&r)?;
            writeln!(out, "{}", json!({ "p": p.to_word(), "q": q.to_word() }))?;
        }
        Command::Classify { json } => {
            let r = read_realizer(&fs::read_to_string(json)?)?;
            let verdict = json!({
                "minimal": r.is_minimal(),
                "maximal": r.is_maximal(),
                "min_and_max": r.is_min_and_max(),
                "stack": is_stack(r.triangulation()),
            });
            writeln!(out, "{verdict}")?;
        }
        Command::Census {
            n,
            shards,
            count_only,
            cap,
        } => {
            let options = CensusOptions {
                shards,
                count_only,
                cap,
            };
            if let Some(c) = cap {
                if c > options.default_cap() {
                    writeln!(
                        err,
                        "warning: cap raised from {} to {c}; large censuses take a long time",
                        options.default_cap()
                    )?;
                }
            }
            let report = run_census(n, &options)?;
            writeln!(
                out,
                "{}",
                serde_json::to_string_pretty(&report).expect("serialisable")
            )?;
            if !report.pass {
                for f in report.failures() {
                    writeln!(
                        err,
                        "identity failed: {} ({})",
                        f.name,
                        f.witness.as_deref().unwrap_or("")
                    )?;
                }
                return Ok(EXIT_IDENTITY_FAILURE);
            }
        }
        Command::ExportHasse {
            lattice, n, output, ..
        } => {
            let dot = hasse_dot(lattice.into(), n)?;
            match output {
                Some(path) => fs::write(path, dot)?,
                None => write!(out, "{dot}")?,
            }
        }
    }
    Ok(EXIT_OK)
}

/// Runs the CLI on `args` (including the program name) and returns the exit
/// code: 0 on success, 1 on usage or domain errors, 2 when a census
/// identity fails.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    EXIT_ERROR
                }
            };
            return code;
        }
    };
    match execute(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_ERROR
        }
    }
}
