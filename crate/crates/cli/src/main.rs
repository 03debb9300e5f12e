mod commands;
mod input;
mod output;

use clap::{Args, Parser, Subcommand};
use output::Format;
use std::path::PathBuf;
use std::process::ExitCode;

/// Exact Cox-ring computations on projective simplicial toric varieties.
#[derive(Parser, Debug)]
#[command(name = "coxhodge", version)]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value = "json")]
    format: Format,
    /// Largest power tried per irrelevant generator in emptiness certificates.
    #[arg(long, global = true, default_value_t = 20, value_parser = clap::value_parser!(u32).range(1..))]
    m_max: u32,
    /// Dump monomial bases and pivot columns to stderr.
    #[arg(long, global = true)]
    trace: bool,
    /// Worker threads for independent rank computations.
    #[arg(long, global = true, value_parser = clap::value_parser!(u16).range(1..))]
    jobs: Option<u16>,
    /// Seed for generic polynomials.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
pub struct FanArg {
    #[arg(long)]
    fan: PathBuf,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Fan validation.
    #[command(subcommand)]
    Fan(FanCommand),
    /// Class group, degrees of the variables and positivity of classes.
    Classgroup {
        #[command(flatten)]
        fan: FanArg,
        #[arg(long = "class", allow_hyphen_values = true)]
        classes: Vec<String>,
    },
    /// Monomial basis of a graded piece.
    Basis {
        #[command(flatten)]
        fan: FanArg,
        #[arg(long, allow_hyphen_values = true)]
        degree: String,
    },
    /// Surjectivity of multiplication S^a1 x S^a2 -> S^(a1+a2).
    Oda {
        #[command(flatten)]
        fan: FanArg,
        #[arg(long, num_args = 2, value_names = ["A1", "A2"], allow_hyphen_values = true, required = true)]
        pair: Vec<String>,
        /// Skip the ample/nef Cartier precondition.
        #[arg(long)]
        unchecked: bool,
    },
    /// Quasi-smoothness of a hypersurface or complete intersection.
    Quasismooth {
        #[command(flatten)]
        fan: FanArg,
        #[arg(long, required = true)]
        poly: Vec<PathBuf>,
        /// Candidate singular point, comma-separated rationals.
        #[arg(long, allow_hyphen_values = true)]
        point: Option<String>,
    },
    /// Nondegeneracy of a hypersurface.
    Nondegenerate {
        #[command(flatten)]
        fan: FanArg,
        #[arg(long, required = true)]
        poly: Vec<PathBuf>,
        #[arg(long, allow_hyphen_values = true)]
        point: Option<String>,
    },
    /// Primitive Hodge numbers from Jacobian rings.
    #[command(subcommand)]
    Hodge(HodgeCommand),
    /// Cox-Gorenstein verification of an ideal.
    Gorenstein {
        #[command(flatten)]
        fan: FanArg,
        /// Generators: a JSON list of strings or one per line.
        #[arg(long, required_unless_present_any = ["jacobian", "toric_jacobian"])]
        ideal: Option<PathBuf>,
        /// Use the Jacobian ideal of the polynomial in this file.
        #[arg(long, conflicts_with_all = ["ideal", "toric_jacobian"])]
        jacobian: Option<PathBuf>,
        /// Use the ideal (x_i df/dx_i) of the polynomial in this file.
        #[arg(long, conflicts_with = "ideal")]
        toric_jacobian: Option<PathBuf>,
        #[arg(long, allow_hyphen_values = true)]
        socle: String,
    },
    /// Hypothesis audit for the asymptotic Noether-Lefschetz bound.
    Nl {
        #[command(flatten)]
        fan: FanArg,
        #[arg(long, allow_hyphen_values = true)]
        beta: String,
        #[arg(long, allow_hyphen_values = true)]
        eta: String,
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
        #[arg(long, alias = "oda-pairs", num_args = 2, value_names = ["A1", "A2"], allow_hyphen_values = true)]
        pair: Vec<String>,
        #[arg(long, allow_hyphen_values = true, requires_all = ["delta", "r"])]
        deg_v: Option<i64>,
        #[arg(long, allow_hyphen_values = true, requires = "deg_v")]
        delta: Option<String>,
        #[arg(long, allow_hyphen_values = true, requires = "deg_v")]
        r: Option<i64>,
        #[arg(long, allow_hyphen_values = true, requires = "deg_v")]
        d_param: Option<i64>,
    },
    /// Coefficient of t^k in prod(1 + a_i t) / (1 + b t).
    Step1 {
        /// Comma-separated integers.
        #[arg(long, allow_hyphen_values = true, default_value = "")]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: i64,
        #[arg(long)]
        k: usize,
    },
    /// The delta threshold and, given d and m_beta, the codimension bound.
    Bounds {
        #[arg(long, allow_hyphen_values = true)]
        r: i64,
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
        #[arg(long, requires = "m_beta")]
        d: Option<u64>,
        #[arg(long, requires = "d")]
        m_beta: Option<u64>,
    },
    /// Seeded polynomials with every monomial of the given degrees.
    Generic {
        #[command(flatten)]
        fan: FanArg,
        #[arg(long, required = true, allow_hyphen_values = true)]
        degree: Vec<String>,
    },
}

#[derive(Subcommand, Debug)]
pub enum FanCommand {
    Check {
        #[command(flatten)]
        fan: FanArg,
    },
}

#[derive(Subcommand, Debug)]
pub enum HodgeCommand {
    /// h^{a, d-1-a}_prim of a quasi-smooth hypersurface.
    Hypersurface {
        #[command(flatten)]
        fan: FanArg,
        #[arg(long, required = true)]
        poly: Vec<PathBuf>,
        #[arg(long, allow_hyphen_values = true)]
        index: i64,
        #[arg(long)]
        no_certify: bool,
    },
    /// h^{p-s, d-p}_prim of a complete intersection, via the Cayley trick.
    Intersection {
        #[command(flatten)]
        fan: FanArg,
        #[arg(long, required = true)]
        poly: Vec<PathBuf>,
        #[arg(long, allow_hyphen_values = true)]
        index: i64,
        #[arg(long)]
        no_certify: bool,
        #[arg(long)]
        certify_cayley: bool,
    },
}

/// Anything that ends in exit code 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub kind: String,
    pub detail: String,
}

impl Failure {
    pub fn new(kind: &str, detail: impl Into<String>) -> Self {
        Failure { kind: kind.to_string(), detail: detail.into() }
    }

    fn to_json(&self) -> serde_json::Value {
        serde_json::json!({ "error": { "kind": self.kind, "detail": self.detail } })
    }
}

impl From<coxhodge::Error> for Failure {
    fn from(e: coxhodge::Error) -> Self {
        Failure::new(e.kind(), e.to_string())
    }
}

/// How a successful run ended.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Computed,
    Refuted,
    Inconclusive,
}

impl Status {
    fn code(self) -> u8 {
        match self {
            Status::Computed => 0,
            Status::Refuted => 2,
            Status::Inconclusive => 3,
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            // --help and --version
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let failure = Failure::new("Usage", e.to_string().trim_end());
            print!("{}", output::render(&failure.to_json(), Format::Json));
            return ExitCode::from(1);
        }
    };
    if let Some(n) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n as usize).build_global() {
            eprintln!("warning: thread pool not configured: {e}");
        }
    }
    let (value, code) = match commands::run(&cli) {
        Ok((value, status)) => (value, status.code()),
        Err(f) => (f.to_json(), 1),
    };
    print!("{}", output::render(&value, cli.format));
    ExitCode::from(code)
}
