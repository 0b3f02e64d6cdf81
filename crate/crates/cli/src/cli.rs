use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use stext::extengine::Method;
use stext::{CartanType, RingSpec};

const LABELING: &str = "\
Subsets of simple roots are comma-separated 0-based indices (empty means the
empty set). Simple roots are numbered along the Dynkin diagram:
  A_n: 0 - 1 - ... - (n-1)
  B_n: 0 - 1 - ... - (n-2) => (n-1)       (last root short)
  C_n: 0 - 1 - ... - (n-2) <= (n-1)       (last root long)
  D_n: 0 - 1 - ... - (n-3) < (n-2), (n-1)  (fork at n-3)
  E_n: 0 - 2 - 3 - ... - (n-1), with 1 attached to 3
  F_4: 0 - 1 => 2 - 3
  G_2: 0 <= 1 (0 short)

Rings: \"Q\" (optionally \"Q,q=<prime power>\") or \"q=<prime power>,d=<modulus>\".

Exit codes: 0 success, 1 verification mismatch, 2 usage or configuration
error, 3 ring assumption violated.";

/// Ext groups between induced and generalized Steinberg representations of
/// split p-adic groups, computed from closed forms and from explicit
/// complexes.
#[derive(Debug, Parser)]
#[command(name = "stext", version, after_help = LABELING)]
pub struct Cli {
    /// Directory holding cached Weyl group enumerations.
    #[arg(long, global = true, env = "STEXT_CACHE_DIR", value_name = "DIR")]
    pub cache_dir: Option<PathBuf>,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Tsv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    #[value(name = "closed_form")]
    ClosedForm,
    #[value(name = "complex_built")]
    ComplexBuilt,
    Both,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Method {
        match m {
            MethodArg::ClosedForm => Method::ClosedForm,
            MethodArg::ComplexBuilt => Method::ComplexBuilt,
            MethodArg::Both => Method::Both,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RepArg {
    /// Generalized Steinberg representation v_I.
    Steinberg,
    /// Induced representation i_I.
    Induced,
    /// Trivial representation.
    Trivial,
}

#[derive(Debug, Args)]
pub struct TypeRing {
    /// Root system type, e.g. A2, B3, G2.
    #[arg(long = "type", value_name = "TYPE")]
    pub ty: CartanType,

    /// Coefficient ring.
    #[arg(long, default_value = "Q", value_name = "RING")]
    pub ring: RingSpec,
}

#[derive(Debug, Args)]
pub struct Pair {
    /// Subset I of simple roots.
    #[arg(long = "I", value_name = "INDICES", default_value = "", allow_hyphen_values = true)]
    pub i_set: String,

    /// Subset J of simple roots.
    #[arg(long = "J", value_name = "INDICES", default_value = "", allow_hyphen_values = true)]
    pub j_set: String,
}

#[derive(Debug, Args)]
pub struct Computation {
    /// Which route to compute by; `both` checks one against the other.
    #[arg(long, value_enum, default_value_t = MethodArg::Both)]
    pub method: MethodArg,

    /// Embed the complexes behind a complex-built answer in the JSON output.
    #[arg(long)]
    pub dump_complex: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Ext^*(v_I, v_J), optionally with a center of positive rank.
    Ext {
        #[command(flatten)]
        base: TypeRing,
        #[command(flatten)]
        pair: Pair,
        /// Rank of the center of the group.
        #[arg(long, default_value_t = 0)]
        center_rank: usize,
        #[command(flatten)]
        comp: Computation,
    },
    /// Ext^*(i_I, i_J); the complex-built route goes through double cosets.
    ExtInduced {
        #[command(flatten)]
        base: TypeRing,
        #[command(flatten)]
        pair: Pair,
        #[command(flatten)]
        comp: Computation,
    },
    /// Ext^*(v_I, i_J).
    ExtVi {
        #[command(flatten)]
        base: TypeRing,
        #[command(flatten)]
        pair: Pair,
        #[command(flatten)]
        comp: Computation,
    },
    /// Cohomology of v_I, i_I or the trivial representation.
    Cohomology {
        #[command(flatten)]
        base: TypeRing,
        /// Subset I of simple roots.
        #[arg(long = "I", value_name = "INDICES", default_value = "")]
        i_set: String,
        /// Which representation.
        #[arg(long, value_enum, default_value_t = RepArg::Steinberg)]
        rep: RepArg,
        /// Rank of the center of the group.
        #[arg(long, default_value_t = 0)]
        center_rank: usize,
        #[command(flatten)]
        comp: Computation,
    },
    /// Minimal double coset representatives of W_I \ W / W_J with their
    /// exponent characters and vanishing certificates.
    Dcosets {
        #[command(flatten)]
        base: TypeRing,
        #[command(flatten)]
        pair: Pair,
    },
    /// Report the bon and banal conditions of a ring for a root system.
    CheckRing {
        #[command(flatten)]
        base: TypeRing,
        /// Acknowledge the character-lattice base change assumption.
        #[arg(long)]
        assume_theta: bool,
    },
    /// Check closed forms against built complexes for one or all pairs.
    Verify {
        #[command(flatten)]
        base: TypeRing,
        /// Subset I of the single pair to check.
        #[arg(long = "I", value_name = "INDICES", conflicts_with = "all_pairs")]
        i_set: Option<String>,
        /// Subset J of the single pair to check.
        #[arg(long = "J", value_name = "INDICES", conflicts_with = "all_pairs")]
        j_set: Option<String>,
        /// Check every pair (I, J).
        #[arg(long)]
        all_pairs: bool,
        /// Worker threads for the sweep.
        #[arg(long, default_value_t = 1, value_name = "N")]
        parallel: usize,
        /// Include the double-coset strata check regardless of rank (it is
        /// on by default up to rank 3).
        #[arg(long, conflicts_with = "no_strata")]
        strata: bool,
        /// Skip the double-coset strata check.
        #[arg(long)]
        no_strata: bool,
    },
    /// Orientations of a segment and Ext on a cuspidal line.
    Zelevinsky {
        /// Number of vertices of the segment.
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        pair: Pair,
        /// A permutation of 0..k, as comma-separated values, whose
        /// orientation to report.
        #[arg(long, value_name = "VALUES")]
        permutation: Option<String>,
    },
    /// Manage the Weyl group cache.
    Cache {
        #[command(subcommand)]
        action: CacheAction,
    },
}

#[derive(Debug, Subcommand)]
pub enum CacheAction {
    /// Enumerate and store the Weyl group of a type.
    Build {
        #[arg(long = "type", value_name = "TYPE")]
        ty: CartanType,
    },
    /// Remove all cached groups.
    Clear,
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn definition_is_consistent() {
        Cli::command().debug_assert();
    }

    #[test]
    fn parses_ext_query() {
        let cli = Cli::try_parse_from([
            "stext", "ext", "--type", "A2", "--I", "0", "--J", "1", "--ring", "q=3,d=5", "--method", "both",
        ])
        .unwrap();
        match cli.command {
            Command::Ext { base, pair, comp, .. } => {
                assert_eq!(base.ty.to_string(), "A2");
                assert_eq!(base.ring.to_string(), "q=3,d=5");
                assert_eq!(pair.i_set, "0");
                assert_eq!(comp.method, MethodArg::Both);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn rejects_bad_type_and_method() {
        assert!(Cli::try_parse_from(["stext", "ext", "--type", "Z9"]).is_err());
        assert!(Cli::try_parse_from(["stext", "ext", "--type", "A2", "--method", "fast"]).is_err());
        assert!(Cli::try_parse_from(["stext", "frobnicate"]).is_err());
    }
}
