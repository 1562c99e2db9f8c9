use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use fullerene_core::cluster::KeySchema;
use fullerene_core::stats::Transform;
use fullerene_core::GraphKind;

#[derive(Parser, Debug)]
#[command(name = "fullerene", version, about = "Fullerene isomers, facet-graph spectra and Newton clustering")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    pub format: Format,

    /// Worker threads (default: all available cores).
    #[arg(long, global = true, value_parser = positive)]
    pub threads: Option<usize>,

    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

/// Where the isomers come from. Exactly one source is required.
#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
pub struct Source {
    /// Enumerate every isomer with this many atoms.
    #[arg(long)]
    pub n: Option<usize>,

    /// Spiral file, one isomer per line (`n p1 ... p12`); isomers are
    /// numbered by line order.
    #[arg(long)]
    pub spirals: Option<PathBuf>,

    /// A single spiral, `n p1 ... p12`.
    #[arg(long, allow_hyphen_values = true)]
    pub spiral: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Emit {
    /// One summary row per isomer.
    Summary,
    /// Edge list of the selected facet graph.
    Edges,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    T,
    T5,
    T6,
}

impl From<KindArg> for GraphKind {
    fn from(k: KindArg) -> GraphKind {
        match k {
            KindArg::T => GraphKind::Full,
            KindArg::T5 => GraphKind::Pentagon,
            KindArg::T6 => GraphKind::Hexagon,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum KindsArg {
    All,
    T,
    T5,
    T6,
}

impl KindsArg {
    pub fn kinds(self) -> Vec<GraphKind> {
        match self {
            KindsArg::All => GraphKind::ALL.to_vec(),
            KindsArg::T => vec![GraphKind::Full],
            KindsArg::T5 => vec![GraphKind::Pentagon],
            KindsArg::T6 => vec![GraphKind::Hexagon],
        }
    }
}

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be a positive integer".into()),
        Ok(k) => Ok(k),
        Err(e) => Err(e.to_string()),
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Enumerate all isomers of C_n as canonical spirals.
    Enumerate {
        #[arg(long)]
        n: usize,
        /// Keep only isomers without adjacent pentagons.
        #[arg(long)]
        ipr: bool,
    },
    /// Wind spirals into dual graphs.
    Wind {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value_t = Emit::Summary)]
        emit: Emit,
        /// Facet graph for `--emit edges`.
        #[arg(long, value_enum, default_value_t = KindArg::T)]
        graph: KindArg,
    },
    /// Exact Newton values N(A, k) = tr(A^k).
    Newton {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value_t = KindArg::T6)]
        graph: KindArg,
        /// Comma-separated degrees.
        #[arg(long, required = true, value_delimiter = ',', value_parser = positive)]
        k: Vec<usize>,
    },
    /// Floating-point eigenvalues.
    Spectrum {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value_t = KindArg::T6)]
        graph: KindArg,
    },
    /// Exact characteristic polynomials.
    Charpoly {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value_t = KindArg::T6)]
        graph: KindArg,
    },
    /// Cluster isomers by Newton values.
    Cluster {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value_t = KindArg::T6)]
        graph: KindArg,
        /// `single:K`, `pair:K1,K2` or `hierarchical:K`.
        #[arg(long)]
        schema: KeySchema,
        /// Accept odd degrees.
        #[arg(long)]
        allow_odd: bool,
    },
    /// Minimal degrees separating every isomer.
    Kstar {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value_t = KindArg::T6)]
        graph: KindArg,
    },
    /// Census of isomers sharing a spectrum.
    Cospectral {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value_t = KindsArg::All)]
        graph: KindsArg,
    },
    /// Per-isomer stability descriptors.
    Descriptors {
        #[command(flatten)]
        source: Source,
        /// Newton degrees of the hexagon graph to report.
        #[arg(long, value_delimiter = ',', value_parser = positive, default_value = "2,4,6,8")]
        k: Vec<usize>,
    },
    /// Regress relative energies on a descriptor.
    Correlate {
        #[command(flatten)]
        source: Source,
        /// CSV with header `isomer_index,relative_energy`.
        #[arg(long)]
        energies: PathBuf,
        /// `N<k>` (hexagon-graph Newton value), `p1`, `theta` or `lambda_max`.
        #[arg(long, default_value = "N2")]
        descriptor: String,
        #[arg(long, default_value = "identity")]
        transform: Transform,
        /// Also run the stability-criterion check.
        #[arg(long)]
        check: bool,
    },
}
