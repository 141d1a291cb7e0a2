//! `roughmat` command-line front end.
//!
//! Exit codes: 0 success, 1 a checked claim failed, 2 bad input.

mod commands;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(
    name = "roughmat",
    version,
    about = "Rough sets over symmetric and transitive relations, and their matroids"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    /// Neighborhood definition.
    Def5,
    /// Circuits of the induced matroid.
    Circuit,
    /// Both, checked against each other.
    Both,
}

#[derive(Args)]
pub struct RelationArg {
    /// Relation file: {"universe": [...], "pairs": [[x, y], ...]}
    #[arg(long, value_name = "PATH")]
    relation: PathBuf,
}

#[derive(Args)]
pub struct MatroidArg {
    /// Matroid file with a `circuits` or `independents` family.
    #[arg(long, value_name = "PATH")]
    matroid: PathBuf,
}

#[derive(Subcommand)]
enum Command {
    /// Check symmetry, transitivity and reflexivity of a relation.
    RelCheck(RelationArg),
    /// Neighborhoods, classes and isolated elements of a symmetric, transitive relation.
    Classes(RelationArg),
    /// Lower and upper approximations of a set, with quality and roughness.
    Approx {
        #[command(flatten)]
        relation: RelationArg,
        /// Query set as comma-separated labels; empty for ∅.
        #[arg(long, value_name = "a,b,c", allow_hyphen_values = true)]
        set: String,
        #[arg(long, value_enum, default_value_t = Method::Def5)]
        method: Method,
    },
    /// Circuits and independent sets of the matroid induced by a relation.
    Induce(RelationArg),
    /// Run the matroid axioms on the family stored in a matroid file.
    MatroidCheck(MatroidArg),
    /// Circuits of a matroid.
    Circuits(MatroidArg),
    /// Union of two matroids.
    Union {
        #[command(flatten)]
        matroid: MatroidArg,
        /// Second matroid file.
        #[arg(long, value_name = "PATH")]
        matroid2: PathBuf,
    },
    /// The relation induced by a matroid's two-element circuits.
    InduceRel(MatroidArg),
    /// Compare the relation regenerated from the induced matroid with R ∪ Δ.
    Roundtrip(RelationArg),
    /// Check the relation/matroid claims over exhaustive and random grids.
    Verify {
        /// Claim to check.
        #[arg(long, default_value = "all", value_parser = ["p1", "p2", "p3", "p4", "p5", "p6", "p7", "roundtrip", "all"])]
        suite: String,
        /// Largest universe size of the exhaustive grid (at most 6).
        #[arg(long, default_value_t = 4)]
        n: usize,
        /// Adds a seeded random grid of larger relations.
        #[arg(long)]
        seed: Option<u64>,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match commands::run(cli.command, cli.format) {
        Ok(out) => {
            print!("{}", out.rendered);
            ExitCode::from(if out.claim_failed { 1 } else { 0 })
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
