use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Exact computations with quasisymmetric power sums.
#[derive(Parser, Debug)]
#[command(name = "qpsum", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Expand one basis element in another basis.
    Expand {
        #[command(flatten)]
        basis: BasisArgs,
        /// Index: `1,2,1,1` for compositions, `3,4/1,5/2` for set compositions.
        #[arg(long, allow_hyphen_values = true)]
        index: String,
        /// Target basis (default: the monomial basis of the same algebra).
        #[arg(long)]
        to: Option<String>,
        /// Order for a power-sum target basis (default: the source order).
        #[arg(long)]
        to_order: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Convert a JSON element into another basis.
    Convert {
        /// The element as JSON, or `@path` to read it from a file.
        #[arg(long)]
        input: String,
        #[arg(long)]
        to: String,
        #[arg(long)]
        to_order: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Multiply two basis elements.
    Product {
        #[command(flatten)]
        basis: BasisArgs,
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
        #[arg(long)]
        to: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Coproduct of a basis element, in the same basis.
    Coproduct {
        #[command(flatten)]
        basis: BasisArgs,
        #[arg(long)]
        index: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// List the fillings behind a power-sum expansion.
    Fillings {
        #[arg(long, value_enum)]
        kind: FillingKind,
        #[arg(long)]
        index: String,
        #[command(flatten)]
        order: OrderArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Power sum to fundamental expansion through ribbon tuples.
    Mnrule {
        #[arg(long)]
        index: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run a verification suite.
    Verify {
        /// Suite name, or `all`.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 4)]
        max_weight: usize,
    },
}

#[derive(Args, Debug, Clone)]
pub struct BasisArgs {
    /// One of M, F, P, Ptilde, M_nc, P_nc, sym-p, sym-m.
    #[arg(long)]
    pub basis: String,
    #[command(flatten)]
    pub order: OrderArgs,
}

#[derive(Args, Debug, Clone, Default)]
pub struct OrderArgs {
    /// descending, ascending, dtilde or reverse-dtilde.
    #[arg(long, conflicts_with = "order_file")]
    pub order: Option<String>,
    /// File listing values from greatest to least, or an order name.
    #[arg(long)]
    pub order_file: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum FillingKind {
    #[value(name = "A", alias = "a")]
    A,
    #[value(name = "SD", alias = "sd")]
    Sd,
    #[value(name = "LDD", alias = "ldd")]
    Ldd,
}
