use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

fn list<T: std::str::FromStr>(s: &str) -> Result<Vec<T>, String> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|x| x.trim().parse::<T>().map_err(|_| format!("`{x}` is not a valid entry")))
        .collect()
}

/// Comma-separated values parsed as one flag.
pub type Parts = Vec<usize>;
pub type Word = Vec<i64>;

pub fn usize_list(s: &str) -> Result<Parts, String> {
    list(s)
}

pub fn i64_list(s: &str) -> Result<Word, String> {
    list(s)
}

#[derive(Parser, Debug)]
#[command(name = "qcat", version, about = "Exact tableau, weight-module, Hecke and Grothendieck-group computations")]
pub struct Cli {
    /// Write the JSON payload to FILE instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    pub out: Option<PathBuf>,
    /// Pretty-print with N spaces of indentation.
    #[arg(long, global = true, value_name = "N")]
    pub json_indent: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Tableau enumeration and predicates.
    #[command(subcommand)]
    Tableaux(TableauxCmd),
    /// gl_n and sl_k weight combinatorics.
    #[command(subcommand)]
    Weights(WeightsCmd),
    /// U_q(sl_k) modules.
    #[command(subcommand)]
    Module(ModuleCmd),
    /// Degenerate affine Hecke algebra action.
    #[command(subcommand)]
    Hecke(HeckeCmd),
    /// Verma classes in the Grothendieck group.
    #[command(subcommand)]
    K0(K0Cmd),
    /// Run every verification suite.
    VerifyAll {
        #[arg(long, default_value_t = 4)]
        max_n: usize,
        #[arg(long, default_value_t = 4)]
        max_k: usize,
    },
}

#[derive(Subcommand, Debug)]
pub enum TableauxCmd {
    /// Semistandard tableaux of a shape, in reading-word lex order.
    Enumerate {
        /// Column heights, e.g. 3,3,1.
        #[arg(long, value_parser = usize_list)]
        shape: Parts,
        #[arg(long)]
        max_entry: usize,
    },
    /// Fill a shape from a reading word and report the predicates.
    Predicates {
        #[arg(long, value_parser = usize_list)]
        shape: Parts,
        #[arg(long, value_parser = i64_list, allow_hyphen_values = true)]
        word: Word,
    },
    /// Robinson–Schensted insertion and recording tableaux.
    Rs {
        #[arg(long, value_parser = i64_list, allow_hyphen_values = true)]
        word: Word,
    },
}

#[derive(Args, Debug)]
pub struct LabelArgs {
    /// A gl_n weight, e.g. 1,3,2.
    #[arg(long, value_parser = i64_list, allow_hyphen_values = true)]
    pub label: Word,
}

#[derive(Subcommand, Debug)]
pub enum WeightsCmd {
    /// The sl_k weight φ(a) as counts of each entry.
    Phi {
        #[command(flatten)]
        label: LabelArgs,
        #[arg(long)]
        k: usize,
    },
    /// (+i) on the block of a.
    Plus {
        #[command(flatten)]
        label: LabelArgs,
        #[arg(long)]
        i: i64,
    },
    /// (-i) on the block of a.
    Minus {
        #[command(flatten)]
        label: LabelArgs,
        #[arg(long)]
        i: i64,
    },
    /// Classes of the orbit of a under a Levi composition, with their order.
    Poset {
        #[command(flatten)]
        label: LabelArgs,
        /// Block sizes; defaults to all ones.
        #[arg(long, value_parser = usize_list)]
        levi: Option<Parts>,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModuleKind {
    Vector,
    Wedge,
    TensorPower,
    TildeV,
}

#[derive(Args, Debug)]
pub struct ModuleArgs {
    #[arg(long, value_enum)]
    pub kind: ModuleKind,
    #[arg(long)]
    pub k: usize,
    /// Exterior or tensor degree.
    #[arg(long, default_value_t = 1)]
    pub r: usize,
    /// Shape whose columns give the wedge factors of Ṽ(λ).
    #[arg(long, value_parser = usize_list)]
    pub shape: Option<Parts>,
    /// Specialize to q = 1.
    #[arg(long)]
    pub q1: bool,
}

#[derive(Subcommand, Debug)]
pub enum ModuleCmd {
    /// Basis, weights and action matrices.
    Build(ModuleArgs),
    /// Weight multiplicities.
    Character(ModuleArgs),
    /// Submodule generated by the singular vectors of Ṽ(λ) of weight λ.
    Closure {
        #[arg(long, value_parser = usize_list)]
        shape: Parts,
        #[arg(long)]
        k: usize,
    },
}

#[derive(Args, Debug)]
pub struct PsiArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub r: usize,
    #[arg(long, allow_hyphen_values = true)]
    pub c: i64,
}

#[derive(Subcommand, Debug)]
pub enum HeckeCmd {
    /// Check the defining relations on the tensor representation.
    Verify(PsiArgs),
    /// Eigenvalues and multiplicities of x_h.
    Spectrum {
        #[command(flatten)]
        psi: PsiArgs,
        #[arg(long)]
        h: usize,
    },
}

#[derive(Subcommand, Debug)]
pub enum K0Cmd {
    /// Matrices of [F_i], [E_i] on the span of I^n.
    Action {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// sl_k relations and the comparison with V^{⊗n} at q = 1.
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// [F_i M(b)] split by Levi blocks.
    Tpc3 {
        #[command(flatten)]
        label: LabelArgs,
        #[arg(long, value_parser = usize_list)]
        levi: Parts,
        #[arg(long)]
        i: i64,
        #[arg(long)]
        k: usize,
    },
    /// Column-strict and semistandard pieces for a shape.
    Parabolic {
        /// Components separated by `/`, each a list of column heights.
        #[arg(long)]
        shape: String,
        #[arg(long)]
        k: usize,
    },
}
