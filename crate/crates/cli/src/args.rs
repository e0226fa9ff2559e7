use clap::{Args, Parser, Subcommand, ValueEnum};

use num_bigint::BigInt;

use nonschur::quiver::is_probable_prime;
use nonschur::symfunc::Partition;

#[derive(Debug, Parser)]
#[command(
    name = "nonschur",
    version,
    about = "Exact arithmetic for non-Schurian quiver roots"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Args)]
pub struct SamplingArgs {
    /// Random samples per generic hom/ext value
    #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u32).range(1..))]
    pub trials: u32,
    /// Prime field used for sampling (at least 101)
    #[arg(long, default_value_t = 2147483647, value_parser = parse_prime)]
    pub prime: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Args)]
pub struct DecArgs {
    /// Arrow counts q2->q1, q3->q1, q3->q2
    #[arg(long, value_delimiter = ',', required = true)]
    pub quiver: Vec<u64>,
    #[arg(long, value_delimiter = ',', required = true)]
    pub a1: Vec<i64>,
    #[arg(long, value_delimiter = ',', required = true)]
    pub a2: Vec<i64>,
    #[arg(long, value_delimiter = ',', required = true)]
    pub a3: Vec<i64>,
    #[arg(long)]
    pub d1: u32,
    #[arg(long)]
    pub d2: u32,
    #[arg(long)]
    pub d3: u32,
    #[command(flatten)]
    pub sampling: SamplingArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ChowOp {
    /// Print the class as given
    Show,
    /// Multiply by the rectangle class of height `d` and width `--j`
    Rectangle,
    /// Multiply by the special class `--j`
    Pieri,
    /// Multiply by the identity
    Identity,
    /// Multiply by the class of the partition `--with`
    Product,
    /// Coefficient of the point class
    Degree,
}

#[derive(Debug, Args)]
pub struct ChowArgs {
    /// Grassmannian box as `d,codim`
    #[arg(long = "box", value_delimiter = ',', required = true)]
    pub grass: Vec<u32>,
    /// A term `[COEFF*]PARTS`, e.g. `32*8,8` or `3`; repeatable
    #[arg(long, allow_hyphen_values = true)]
    pub term: Vec<String>,
    #[arg(long, value_enum, default_value_t = ChowOp::Show)]
    pub op: ChowOp,
    #[arg(long)]
    pub j: Option<u32>,
    #[arg(long, value_delimiter = ',')]
    pub with: Option<Vec<u32>>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Analyze a root given its canonical exceptional decomposition
    Analyze {
        #[command(flatten)]
        dec: DecArgs,
        /// Compare a derived parameter with a stated value, e.g. `w=5`; repeatable
        #[arg(long, value_parser = parse_expectation)]
        expect: Vec<(String, i64)>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Kostka number K(shape, weight)
    Kostka {
        #[arg(long, value_delimiter = ',', required = true)]
        shape: Vec<u32>,
        #[arg(long, value_delimiter = ',', required = true)]
        weight: Vec<u32>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Arithmetic in the Chow ring of a Grassmannian
    Chow(ChowArgs),
    /// Decompose a Kronecker root
    Decompose {
        /// Number of arrows of the Kronecker quiver (at least 3)
        #[arg(long)]
        n: u64,
        /// Root as `source,sink`
        #[arg(long, value_delimiter = ',', required = true)]
        root: Vec<i64>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Gluing counts for a split of a decomposed root
    Glue {
        #[command(flatten)]
        dec: DecArgs,
        /// Multiplicities `cs,b2,b3` of the first part; all splits when omitted
        #[arg(long, value_delimiter = ',')]
        beta: Option<Vec<i64>>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Search for canonical exceptional decompositions of a root
    Search {
        #[arg(long, value_delimiter = ',', required = true)]
        quiver: Vec<u64>,
        #[arg(long, value_delimiter = ',', required = true)]
        alpha: Vec<i64>,
        /// Largest entry of the exceptional roots tried
        #[arg(long, default_value_t = 3)]
        bound: i64,
        #[command(flatten)]
        sampling: SamplingArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

impl Command {
    pub fn format(&self) -> Format {
        match self {
            Command::Analyze { format, .. }
            | Command::Kostka { format, .. }
            | Command::Decompose { format, .. }
            | Command::Glue { format, .. }
            | Command::Search { format, .. } => *format,
            Command::Chow(a) => a.format,
        }
    }
}

fn parse_prime(s: &str) -> Result<u64, String> {
    let p: u64 = s.parse().map_err(|e| format!("{e}"))?;
    if p < 101 || !is_probable_prime(p) {
        return Err(format!("{p} is not a prime >= 101"));
    }
    Ok(p)
}

fn parse_expectation(s: &str) -> Result<(String, i64), String> {
    let (name, value) = s.split_once('=').ok_or("expected NAME=VALUE")?;
    let value = value.trim().parse().map_err(|e| format!("{value}: {e}"))?;
    Ok((name.trim().to_string(), value))
}

/// Parses `[COEFF*]PARTS` where `PARTS` is comma separated and may be empty.
pub fn parse_term(s: &str) -> Result<(Partition, BigInt), String> {
    let (coeff, parts) = match s.split_once('*') {
        Some((c, p)) => (c.trim(), p.trim()),
        None => ("1", s.trim()),
    };
    let coeff = coeff
        .parse()
        .map_err(|_| format!("--term {s}: bad coefficient {coeff}"))?;
    let parts: Vec<u32> = if parts.is_empty() {
        Vec::new()
    } else {
        parts
            .split(',')
            .map(|x| {
                x.trim()
                    .parse()
                    .map_err(|_| format!("--term {s}: bad part {x}"))
            })
            .collect::<Result<_, _>>()?
    };
    let lambda = Partition::new(parts).map_err(|e| format!("--term {s}: {e}"))?;
    Ok((lambda, coeff))
}
