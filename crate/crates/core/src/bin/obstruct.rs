use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use dehn_obstruct::lattice::GramMatrix;
use dehn_obstruct::numtheory::ResiduePredicateSet;
use dehn_obstruct::report::{self, Report};
use dehn_obstruct::Error;

/// Obstructions to realizing 3-manifolds as Dehn surgery on a knot in S³.
///
/// Prints one JSON report on stdout. Logging goes to stderr, controlled by OBSTRUCT_LOG.
#[derive(Parser)]
#[command(name = "obstruct", version)]
struct Cli {
    /// Also print a readable table on stderr.
    #[arg(long, global = true)]
    pretty: bool,
    /// Include wall-clock timing in the report.
    #[arg(long, global = true)]
    timing: bool,
    /// Worker threads for parallel searches (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Is Y(T(a,b), T(c,d)) surgery on a knot?
    Splice {
        #[arg(long, allow_hyphen_values = true)]
        a: i64,
        #[arg(long, allow_hyphen_values = true)]
        b: i64,
        #[arg(long, allow_hyphen_values = true)]
        c: i64,
        #[arg(long, allow_hyphen_values = true)]
        d: i64,
        /// Run the changemaker search when a builtin Goeritz form is available.
        #[arg(long)]
        changemaker: bool,
    },
    /// Changemaker census of Y(T(2a+1,2), T(2b+1,2)) at slope -|H1|.
    #[command(name = "census-2odd")]
    Census2odd {
        #[arg(long, default_value_t = 341)]
        max_product: i64,
    },
    /// Changemaker enumeration and lattice embedding.
    Changemaker {
        #[command(subcommand)]
        action: ChangemakerAction,
    },
    /// Toroidal surgery on the Eudave-Muñoz knot k(l,m,n,p).
    Em {
        #[arg(long, allow_hyphen_values = true)]
        l: i64,
        #[arg(long, allow_hyphen_values = true)]
        m: i64,
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
        #[arg(long, allow_hyphen_values = true)]
        p: i64,
    },
    /// Exact density of S, Sprime, Sk:k or Tk:k in 1..=limit.
    Density {
        #[arg(long)]
        set: ResiduePredicateSet,
        #[arg(long)]
        limit: i64,
        /// Compare with the limiting product density (Sk and Tk only).
        #[arg(long)]
        bound: bool,
    },
    /// SU(2)-cyclic surgeries on an iterated torus knot, e.g. "C(13,2);T(2,3)".
    Cable {
        #[arg(long, allow_hyphen_values = true)]
        knot: String,
    },
}

#[derive(Subcommand)]
enum ChangemakerAction {
    /// List changemakers of a given length and norm.
    Enum {
        #[arg(long)]
        len: usize,
        #[arg(long)]
        norm: i64,
    },
    /// Search for an embedding of a Gram matrix into a changemaker complement.
    Embed {
        #[arg(long)]
        gram: PathBuf,
        #[arg(long)]
        p: i64,
        /// Try every changemaker instead of stopping at the first witness.
        #[arg(long)]
        all: bool,
    },
}

fn run(command: Command) -> Result<Report, Error> {
    match command {
        Command::Splice { a, b, c, d, changemaker } => report::cmd_splice(a, b, c, d, changemaker),
        Command::Census2odd { max_product } => report::cmd_census_2odd(max_product),
        Command::Changemaker { action: ChangemakerAction::Enum { len, norm } } => report::cmd_changemaker_enum(len, norm),
        Command::Changemaker { action: ChangemakerAction::Embed { gram, p, all } } => {
            let text = std::fs::read_to_string(&gram)
                .map_err(|e| Error::Parse { line: 0, msg: format!("{}: {e}", gram.display()) })?;
            let gram: GramMatrix = text.parse()?;
            report::cmd_changemaker_embed(&gram, p, all)
        }
        Command::Em { l, m, n, p } => report::cmd_em(l, m, n, p),
        Command::Density { set, limit, bound } => report::cmd_density(set, limit, bound),
        Command::Cable { knot } => report::cmd_cable(&knot),
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::new().filter("OBSTRUCT_LOG")).init();
    let cli = Cli::parse();
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(j) = cli.jobs {
        pool = pool.num_threads(j.max(1));
    }
    let pool = match pool.build() {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: cannot start worker threads: {e}");
            return ExitCode::from(3);
        }
    };
    let start = Instant::now();
    match pool.install(|| run(cli.command)) {
        Ok(mut r) => {
            if cli.timing {
                r.elapsed_ms = Some(start.elapsed().as_millis());
            }
            println!("{}", r.to_json());
            if cli.pretty {
                eprint!("{}", r.to_table());
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::Resource(_) => 3,
                _ => 2,
            })
        }
    }
}
