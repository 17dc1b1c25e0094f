use clap::{Parser, Subcommand, ValueEnum};

#[derive(Debug, Clone, Parser)]
#[command(
    name = "stableass",
    version,
    about = "Associated primes of powers of monomial ideals, with closed forms for polymatroidal ideals"
)]
pub struct Cli {
    /// Input document, or `-` for standard input.
    #[arg(long, global = true, default_value = "-", value_name = "FILE")]
    pub input: String,

    /// Largest witness search space the oracle may enumerate per ideal.
    #[arg(long, global = true, value_name = "N")]
    pub max_candidates: Option<u128>,

    /// Largest number of variables for subset sweeps.
    #[arg(long, global = true, value_name = "N")]
    pub max_n: Option<usize>,

    /// Seed for randomized verification sweeps.
    #[arg(long, global = true, default_value_t = 0, value_name = "S")]
    pub seed: u64,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Ass(I) with witnesses, by exhaustive search.
    Ass,
    /// Ass(I^k) for k = 1..=K.
    AssPowers {
        #[arg(long, value_name = "K")]
        k_max: u32,
    },
    /// The stable set of a polymatroidal ideal, with analytic spread and
    /// limit depth.
    AssInfinity,
    /// Certified index of Ass stability of a polymatroidal ideal.
    Astab {
        /// Also report dstab from a closed form, when one is known.
        #[arg(long)]
        compare_dstab: bool,
    },
    /// Closed forms for products of monomial primes.
    Transversal {
        #[command(subcommand)]
        verb: TransversalVerb,
    },
    /// Closed forms for ideals of Veronese type.
    Veronese {
        #[command(subcommand)]
        verb: VeroneseVerb,
    },
    /// Cross-check every applicable closed form against the oracle.
    Verify {
        /// Powers checked by the oracle.
        #[arg(long, default_value_t = 2, value_name = "K")]
        k_max: u32,
        /// Random localizations checked.
        #[arg(long, default_value_t = 16, value_name = "N")]
        samples: usize,
    },
}

#[derive(Debug, Clone, Subcommand)]
pub enum TransversalVerb {
    Ass,
    Decompose {
        #[arg(long, value_name = "K")]
        k: u32,
    },
    Depth,
    Recover,
}

#[derive(Debug, Clone, Subcommand)]
pub enum VeroneseVerb {
    Ass {
        #[arg(long, value_name = "K")]
        k: u32,
    },
    AssInfinity,
    Astab,
    Depth {
        #[arg(long, value_name = "K")]
        k: u32,
    },
    Dstab,
}
