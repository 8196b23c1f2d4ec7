//! Command-line front end for `lonely-core`.
//!
//! Every subcommand prints exactly one JSON document on standard output.
//! Exit codes: 0 on success, 1 on malformed input, 2 when a search exceeds
//! `--max-box`.

pub mod error;
pub mod spec;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use lonely_core::cfinite::{exponent_lattice, reduce_order_with, Ansatz, ReductionResult};
use lonely_core::geometry::{Cone, DEFAULT_MAX_BOX};
use lonely_core::lonely::{
    dimension_bound_guarantee, enumerate_lonely_simplex_with_limit, has_infinitely_many_lonely_points,
    number_of_lonely_points_with_limit, ultimate_number_of_lonely_points_with_limit, LonelyCount,
};
use serde_json::{json, Value};

pub use error::CliError;
use spec::{format_rational, parse_rational, read_json, ClosedFormSpec, LatticeSpec};

#[derive(Debug, Parser)]
#[command(name = "lonely", version, about = "Lonely lattice points in dilated simplices")]
pub struct Cli {
    /// Maximum number of candidates a single box search or enumeration may visit.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_BOX)]
    pub max_box: u128,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide whether corner cone C_I has infinitely many lonely points.
    Infinite {
        #[arg(long)]
        lattice: PathBuf,
        #[arg(long)]
        corner: usize,
    },
    /// Count the lonely points of corner cone C_I.
    Count {
        #[arg(long)]
        lattice: PathBuf,
        #[arg(long)]
        corner: usize,
    },
    /// Number of lonely points of d·S for all sufficiently large d.
    Ultimate {
        #[arg(long)]
        lattice: PathBuf,
    },
    /// List the lonely points of d·S by brute force.
    Enumerate {
        #[arg(long)]
        lattice: PathBuf,
        #[arg(long)]
        dilation: u64,
    },
    /// Exponent lattice of a comma-separated list of rational bases.
    ExponentLattice {
        #[arg(long, allow_hyphen_values = true)]
        bases: String,
    },
    /// Search for a polynomial q of degree D lowering the order of q(a_n).
    Reduce {
        #[arg(long)]
        closedform: PathBuf,
        #[arg(long)]
        degree: usize,
        #[arg(long, value_enum, default_value_t = AnsatzArg::Monic)]
        ansatz: AnsatzArg,
    },
    /// Which dimension bound applies to the lattice.
    BoundCheck {
        #[arg(long)]
        lattice: PathBuf,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum AnsatzArg {
    /// Leading coefficient q_D = 1.
    Monic,
    /// Any nonconstant q of degree at most D.
    Full,
}

/// What a run produced: exit code and the text for each stream.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    match execute(&cli) {
        Ok(v) => Outcome {
            code: 0,
            stdout: format!("{v}\n"),
            stderr: String::new(),
        },
        Err(e) => Outcome {
            code: e.exit_code(),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn count_json(c: LonelyCount) -> Value {
    match c {
        LonelyCount::Finite(n) => json!({ "count": n }),
        LonelyCount::Infinite => json!({ "count": "infinity" }),
    }
}

fn load_lattice(path: &PathBuf) -> Result<lonely_core::geometry::Lattice, CliError> {
    read_json::<LatticeSpec>(path)?.to_lattice()
}

pub fn execute(cli: &Cli) -> Result<Value, CliError> {
    let limit = cli.max_box;
    match &cli.command {
        Command::Infinite { lattice, corner } => {
            let l = load_lattice(lattice)?;
            let c = Cone::corner(l.ambient_dim(), *corner)?;
            Ok(json!({ "infinite": has_infinitely_many_lonely_points(&l, &c)? }))
        }
        Command::Count { lattice, corner } => {
            let l = load_lattice(lattice)?;
            let c = Cone::corner(l.ambient_dim(), *corner)?;
            Ok(count_json(number_of_lonely_points_with_limit(&l, &c, limit)?))
        }
        Command::Ultimate { lattice } => {
            let l = load_lattice(lattice)?;
            Ok(count_json(ultimate_number_of_lonely_points_with_limit(&l, l.ambient_dim(), limit)?))
        }
        Command::Enumerate { lattice, dilation } => {
            let l = load_lattice(lattice)?;
            let pts = enumerate_lonely_simplex_with_limit(&l, l.ambient_dim(), *dilation, limit)?;
            let rows: Vec<Value> = pts
                .iter()
                .map(|p| Value::Array(p.coords().iter().map(|x| bigint_json(x)).collect()))
                .collect();
            Ok(Value::Array(rows))
        }
        Command::ExponentLattice { bases } => {
            let parsed = bases
                .split(',')
                .filter(|s| !s.trim().is_empty())
                .map(parse_rational)
                .collect::<Result<Vec<_>, _>>()?;
            let l = exponent_lattice(&parsed)?;
            Ok(serde_json::to_value(LatticeSpec::from_lattice(&l)?).expect("plain data"))
        }
        Command::Reduce { closedform, degree, ansatz } => {
            let cf = read_json::<ClosedFormSpec>(closedform)?.to_closed_form()?;
            let ansatz = match ansatz {
                AnsatzArg::Monic => Ansatz::Monic,
                AnsatzArg::Full => Ansatz::Full,
            };
            Ok(match reduce_order_with(&cf, *degree, ansatz) {
                ReductionResult::Found { q, order } => json!({
                    "q": q.coeffs().iter().map(format_rational).collect::<Vec<_>>(),
                    "order": order,
                }),
                ReductionResult::NotFound => json!({ "q": null, "order": null }),
            })
        }
        Command::BoundCheck { lattice } => {
            let l = load_lattice(lattice)?;
            let g = dimension_bound_guarantee(&l, l.ambient_dim());
            Ok(json!({
                "guarantee": g.as_str(),
                "dimension": l.dim(),
                "ambient_dimension": l.ambient_dim(),
            }))
        }
    }
}

// points of d·S are small, but stay exact if they are not
fn bigint_json(x: &num_bigint::BigInt) -> Value {
    use num_traits::ToPrimitive;
    match x.to_i64() {
        Some(v) => json!(v),
        None => Value::String(x.to_string()),
    }
}
