use clap::{Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "quartic",
    version,
    about = "Exact and iterative evaluation of the quartic integral family"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,

    /// Render exact values as decimals.
    #[arg(long, global = true)]
    pub float: bool,

    /// Omit the timestamp so repeated runs are byte-identical.
    #[arg(long, global = true)]
    pub no_timestamp: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Value of ∫₀^∞ dx/(x⁴ + 2ax² + 1)^(m+1) by one of four routes.
    Quartic {
        /// Parameter a > -1, as an integer, decimal or fraction p/q.
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long)]
        m: u32,
        #[arg(long, value_enum, default_value_t = Method::Closed)]
        method: Method,
        /// Relative tolerance for the quadrature route.
        #[arg(long, default_value_t = 1e-12)]
        tol: f64,
    },
    /// Coefficients d_l(m) of P_m for 0 ≤ l ≤ m ≤ m-max.
    Table {
        #[arg(long = "m-max")]
        m_max: u32,
    },
    /// Run an iterative parameter scheme to its limit.
    Landen {
        #[arg(value_enum)]
        variant: Variant,
        /// quad2: a b c; deg6: a b c d e; agm: a b.
        #[arg(required = true, allow_negative_numbers = true)]
        params: Vec<f64>,
        #[arg(long, default_value_t = 1e-12)]
        tol: f64,
        /// Use the uncorrected d-update in the degree-6 scheme.
        #[arg(long)]
        printed_d_map: bool,
    },
    /// Run a property suite; exits nonzero if any check fails.
    Verify {
        #[arg(value_enum, default_value_t = Suite::All)]
        suite: Suite,
    },
    /// Landen image of a rational function given by ascending coefficient lists.
    Transform {
        /// Numerator coefficients c0,c1,... (integers, decimals or fractions).
        #[arg(long, allow_hyphen_values = true)]
        num: String,
        /// Denominator coefficients c0,c1,...
        #[arg(long, allow_hyphen_values = true)]
        den: String,
        /// Accept non-even input; the whole-line integral is preserved.
        #[arg(long)]
        whole_line: bool,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Closed,
    Hyper,
    Landen,
    Quadrature,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Variant {
    Quad2,
    Deg6,
    Agm,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Identities,
    Convergence,
    LandenSymbolic,
    All,
}
