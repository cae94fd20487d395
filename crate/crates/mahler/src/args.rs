use clap::{ArgGroup, Args, Parser, Subcommand};

#[derive(Parser, Debug)]
#[command(name = "mahler", version, about = "Mahler measures, t-metric Mahler measures and attainment in Q(sqrt D)")]
pub struct Cli {
    /// Base for displayed logarithms: `e`, `2`, `10` or any number > 1.
    #[arg(long, global = true, default_value = "e")]
    pub log_base: String,

    /// Add elapsed wall-clock time to the output envelope.
    #[arg(long, global = true)]
    pub timing: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Classical Mahler measure, Weil height and norm of one number.
    Measure(MeasureArgs),

    /// M_t(q) for a rational q, with an optimal witness.
    Mt {
        #[arg(allow_hyphen_values = true)]
        q: String,
        #[arg(long)]
        t: String,
    },

    /// M_t(D^(1/k)) for squarefree D.
    MtSurd {
        d: String,
        k: u32,
        #[arg(long)]
        t: String,
    },

    /// Whether M_t(sqrt D) is attained inside Q(sqrt D).
    Attainment {
        d: String,
        #[arg(long)]
        t: String,
    },

    /// Non-attainment certificate for one D, or a sweep over all squarefree D up to a bound.
    #[command(group(ArgGroup::new("target").required(true).args(["d", "up_to"])))]
    Certify {
        d: Option<String>,
        #[arg(long)]
        up_to: Option<u64>,
        #[arg(long, default_value = "2")]
        t: String,
    },

    /// Small quadratic numbers of Q(sqrt D) with measure log p_1.
    SmallQuadratics { d: String },

    /// CSV of t -> M_t for a rational or a surd.
    Plot(PlotArgs),

    /// Compare the optimizer with the exhaustive oracle.
    OracleCheck {
        #[arg(allow_hyphen_values = true)]
        q: String,
        #[arg(long)]
        t: String,
        /// Cofactor inserted on both sides of the fraction before enumeration.
        #[arg(long, default_value_t = 1)]
        extraneous: u128,
    },

    /// Replay the built-in worked examples and report each check.
    VerifyPaper,
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("input").required(true).args(["rational", "quadratic", "surd"])))]
pub struct MeasureArgs {
    /// A rational `[-]num[/den]`.
    #[arg(allow_hyphen_values = true)]
    pub rational: Option<String>,
    /// Minimal polynomial coefficients `a,b,c[,+|-]`.
    #[arg(long, allow_hyphen_values = true)]
    pub quadratic: Option<String>,
    /// `D^(1/k)` or `(m/n)^(1/k)`.
    #[arg(long)]
    pub surd: Option<String>,
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("target").required(true).args(["q", "surd"])))]
pub struct PlotArgs {
    #[arg(allow_hyphen_values = true)]
    pub q: Option<String>,
    /// Squarefree D; plots M_t(D^(1/k)).
    #[arg(long)]
    pub surd: Option<String>,
    #[arg(long, default_value_t = 2, requires = "surd")]
    pub k: u32,
    #[arg(long, default_value = "1")]
    pub t_min: String,
    #[arg(long, default_value = "3")]
    pub t_max: String,
    #[arg(long, default_value = "0.25")]
    pub step: String,
    /// Append a final `inf` row.
    #[arg(long)]
    pub inf: bool,
}
