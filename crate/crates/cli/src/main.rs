use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{CommandFactory, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use coe_core::constructions::{self, Invariants};
use coe_core::{
    coe, oracle, par, trees, EnumerationBound, Family, GeneratorSet, NumericalSemigroup, TreeSpec,
};

/// Numerical semigroups coated with odd elements.
#[derive(Debug, Parser)]
#[command(name = "coe", version)]
struct Cli {
    /// Worker threads for parallel traversal; output is identical for any value.
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Minimal generators, Frobenius number, genus and multiplicity.
    Info { gens: GeneratorSet },
    /// Whether ⟨gens⟩ is a Coe-semigroup.
    IsCoe { gens: GeneratorSet },
    /// The chain of a Coe-semigroup up to ℕ.
    Chain { gens: GeneratorSet },
    /// The smallest Coe-monoid containing a set.
    Closure { set: GeneratorSet },
    /// Enumerate one of the trees of Coe-semigroups.
    Tree {
        #[arg(long, value_enum)]
        family: FamilyArg,
        /// k, the Frobenius bound, or the genus bound, depending on the family.
        #[arg(long)]
        param: Option<u32>,
        #[arg(long)]
        max_genus: Option<u32>,
        #[arg(long)]
        max_depth: Option<u32>,
        #[arg(long)]
        max_nodes: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Jsonl)]
        format: Format,
    },
    /// The shift ({x}+S) ∪ {0}.
    MedLift { gens: GeneratorSet, x: u32 },
    /// The doubling 2S ∪ ({2s+1}+2S).
    DoubleLift { gens: GeneratorSet, s: u32 },
    /// Closed formulas for an embedding dimension three Coe-semigroup.
    Ed3 { gens: GeneratorSet },
    /// Wilf's inequality for S, and its transfer to the doubling when s is given.
    WilfCheck { gens: GeneratorSet, s: Option<u32> },
    /// Brute-force cross-checks.
    Oracle {
        #[command(subcommand)]
        command: OracleCommand,
    },
}

#[derive(Debug, Subcommand)]
enum OracleCommand {
    /// Per-genus counts of all numerical semigroups and of Coe-semigroups.
    Census {
        #[arg(long)]
        max_genus: u32,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FamilyArg {
    All,
    ContainsK,
    Frob,
    Genus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Jsonl,
    Dot,
}

fn semigroup(gens: &GeneratorSet) -> coe_core::Result<NumericalSemigroup> {
    NumericalSemigroup::from_generators(gens)
}

fn line(value: &impl Serialize) -> String {
    let mut s = serde_json::to_string(value).expect("values serialize");
    s.push('\n');
    s
}

#[derive(Serialize)]
struct CoeOutput<'a> {
    msg: &'a [u32],
    is_coe: bool,
}

#[derive(Serialize)]
struct ChainOutput {
    length: usize,
    links: Vec<coe_core::SemigroupInfo>,
}

#[derive(Serialize)]
struct ClosureOutput {
    scale: u32,
    msg: Vec<u32>,
}

#[derive(Serialize)]
struct WilfOutput<'a> {
    msg: &'a [u32],
    genus: u32,
    embedding_dimension: usize,
    small_count: u32,
    wilf_holds: bool,
}

#[derive(Serialize)]
struct CensusOutput {
    max_genus: u32,
    rows: Vec<oracle::CensusRow>,
}

#[derive(Serialize)]
struct LiftOutput<'a> {
    base: &'a [u32],
    parameter: u32,
    result: &'a [u32],
    predicted: &'a Invariants,
    computed: &'a Invariants,
    clauses: constructions::Clauses,
    coe: bool,
}

fn run(command: Command) -> coe_core::Result<String> {
    Ok(match command {
        Command::Info { gens } => line(&semigroup(&gens)?.info()),
        Command::IsCoe { gens } => {
            let s = semigroup(&gens)?;
            line(&CoeOutput {
                msg: s.minimal_generators(),
                is_coe: coe::is_coe(&s),
            })
        }
        Command::Chain { gens } => {
            let chain = coe::chain_to_full(&semigroup(&gens)?)?;
            line(&ChainOutput {
                length: chain.length(),
                links: chain.links.iter().map(NumericalSemigroup::info).collect(),
            })
        }
        Command::Closure { set } => {
            let m = coe::coe_closure(&set);
            line(&ClosureOutput {
                scale: m.scale(),
                msg: m.minimal_generators(),
            })
        }
        Command::Tree {
            family,
            param,
            max_genus,
            max_depth,
            max_nodes,
            format,
        } => {
            let family = match (family, param) {
                (FamilyArg::All, _) => Family::All,
                (FamilyArg::ContainsK, Some(k)) => Family::ContainsK(k),
                (FamilyArg::Frob, Some(f)) => Family::FrobAtMost(f),
                (FamilyArg::Genus, Some(g)) => Family::GenusAtMost(g),
                (_, None) => Cli::command()
                    .error(
                        ErrorKind::MissingRequiredArgument,
                        "this family needs --param <INT>",
                    )
                    .exit(),
            };
            let bound = EnumerationBound {
                max_genus,
                max_depth,
                max_nodes,
            };
            let tree = trees::enumerate(&TreeSpec::new(family, bound)?)?;
            match format {
                Format::Jsonl => tree.to_jsonl(),
                Format::Json => line(&tree.records()),
                Format::Dot => tree.to_dot(),
            }
        }
        Command::MedLift { gens, x } => {
            let lift = constructions::med_lift(&semigroup(&gens)?, x)?;
            line(&LiftOutput {
                base: lift.base.minimal_generators(),
                parameter: x,
                result: lift.result.minimal_generators(),
                predicted: &lift.report.predicted,
                computed: &lift.report.computed,
                clauses: lift.report.clauses,
                coe: coe::is_coe(&lift.result),
            })
        }
        Command::DoubleLift { gens, s } => {
            let lift = constructions::double_lift(&semigroup(&gens)?, s)?;
            line(&LiftOutput {
                base: lift.base.minimal_generators(),
                parameter: s,
                result: lift.result.minimal_generators(),
                predicted: &lift.report.predicted,
                computed: &lift.report.computed,
                clauses: lift.report.clauses,
                coe: coe::is_coe(&lift.result),
            })
        }
        Command::Ed3 { gens } => {
            let &[a, b, c] = gens.as_slice() else {
                return Err(coe_core::Error::NotEd3Coe(gens.into_vec()));
            };
            line(&constructions::ed3_report(a, b, c)?)
        }
        Command::WilfCheck { gens, s } => {
            let base = semigroup(&gens)?;
            match s {
                Some(s) => line(&constructions::wilf_transfer_check(&base, s)?),
                None => line(&WilfOutput {
                    msg: base.minimal_generators(),
                    genus: base.genus(),
                    embedding_dimension: base.embedding_dimension(),
                    small_count: base.small_count(),
                    wilf_holds: base.wilf_holds(),
                }),
            }
        }
        Command::Oracle {
            command: OracleCommand::Census { max_genus },
        } => line(&CensusOutput {
            max_genus,
            rows: oracle::census(max_genus)?,
        }),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let command = cli.command;
    let result = match cli.threads {
        Some(n) => par::with_threads(n, move || run(command)),
        None => run(command),
    };
    match result {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
