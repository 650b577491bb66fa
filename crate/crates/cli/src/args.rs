use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "wsa",
    version,
    about = "Weighted surface algebras: build, check, resolve, classify"
)]
pub struct Cli {
    #[command(subcommand)]
    pub verb: Verb,

    /// Coefficient field: `Q` or `GF(p)`. Overrides the spec file; default GF(101).
    #[arg(long, global = true)]
    pub field: Option<String>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Seed for the randomized isomorphism search used by `resolve`.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Worker threads for per-vertex analyses (0 = all cores).
    #[arg(long, global = true, default_value_t = 1)]
    pub jobs: usize,

    /// More log output (repeatable).
    #[arg(short, long, global = true, action = clap::ArgAction::Count)]
    pub verbose: u8,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Weighted,
    Biserial,
    String,
}

/// Exactly one of a spec file and a built-in.
#[derive(Args, Debug, Clone)]
#[group(required = true, multiple = false)]
pub struct Input {
    /// Spec file.
    pub spec: Option<PathBuf>,

    /// Built-in family (see `wsa builtin`).
    #[arg(long, short = 'b')]
    pub builtin: Option<String>,
}

#[derive(Args, Debug, Clone)]
pub struct Source {
    #[command(flatten)]
    pub input: Input,

    /// Built-in parameter `key=value` (repeatable).
    #[arg(
        long = "param",
        short = 'p',
        value_name = "KEY=VALUE",
        requires = "builtin"
    )]
    pub params: Vec<String>,
}

#[derive(Subcommand, Debug)]
pub enum Verb {
    /// Check the triangulation quiver axioms and the assumptions on m and c.
    Validate(Source),
    /// Orbits, virtual arrows, expected dimensions and the Gabriel quiver.
    Info(Source),
    /// Build an algebra table; JSON output is the table document.
    Build {
        #[command(flatten)]
        src: Source,
        #[arg(long, value_enum, default_value_t = Kind::Weighted)]
        kind: Kind,
        /// Path truncation cap (default: max q + 2).
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Read a table document and write it back out.
    Table { path: PathBuf },
    /// Cartan matrix and its determinant.
    Cartan {
        #[command(flatten)]
        src: Source,
        #[arg(long, value_enum, default_value_t = Kind::Weighted)]
        kind: Kind,
    },
    /// Socle of every indecomposable projective.
    Socle(Source),
    /// Symmetrizing form, symmetry and nondegeneracy of its Gram matrix.
    Symmetric(Source),
    /// Omega-period of simple modules.
    Period {
        #[command(flatten)]
        src: Source,
        /// Vertex id; omit with --all.
        #[arg(long, conflicts_with = "all")]
        vertex: Option<String>,
        #[arg(long)]
        all: bool,
        #[arg(long, default_value_t = 8)]
        max: usize,
    },
    /// Minimal resolutions of the simple modules against the expected shapes.
    Resolve(Source),
    /// Period-four certificate from the bimodule resolution.
    Bimodule {
        #[command(flatten)]
        src: Source,
        /// Largest algebra dimension attempted.
        #[arg(long, default_value_t = wsa_core::resolution::bimodule::DEFAULT_BIMODULE_CAP)]
        cap: usize,
    },
    /// v-profile, family and singular parameter.
    Classify(Source),
    /// Verify the degeneration A(1) -> A(t).
    Degenerate {
        #[command(flatten)]
        src: Source,
        #[arg(long, short = 't', default_value = "2")]
        t: String,
        /// Also print the table of A(t).
        #[arg(long)]
        table: bool,
    },
    /// Classify a walk of the string algebra, or count strings and bands.
    Walks {
        #[command(flatten)]
        src: Source,
        /// Letters separated by spaces, inverse letters as `a^-1`.
        #[arg(long, conflicts_with = "census")]
        walk: Option<String>,
        /// Enumerate strings and bands up to this length.
        #[arg(long)]
        census: Option<usize>,
    },
    /// List the built-ins, or print one as a spec file.
    Builtin {
        name: Option<String>,
        #[arg(long = "param", short = 'p', value_name = "KEY=VALUE")]
        params: Vec<String>,
    },
}
