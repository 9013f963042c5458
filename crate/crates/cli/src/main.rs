use std::path::PathBuf;
use std::process::ExitCode;

use barss_cli::{render_table, run, Command, Config, Diagram, DiagramKind, RunOptions, WalkSelection};
use clap::{Parser, Subcommand, ValueEnum};

const EXIT_AXIOM_FAILURE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_BLOW_UP: u8 = 3;

#[derive(Parser)]
#[command(name = "barss", version, about = "Bar constructions and the bar spectral sequence over exact fields")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Table,
    Json,
}

#[derive(clap::Args)]
struct Common {
    /// Algebra config file.
    #[arg(long)]
    config: PathBuf,
    /// Write output here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "table")]
    format: Format,
    /// Seed for the perturbation trials of the page suite.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Largest basis allowed in a single bidegree.
    #[arg(long, default_value_t = barss_core::sseq::DEFAULT_MAX_BASIS)]
    max_basis: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Shuffle,
    BracketShuffle,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run the algebra, bar and page identity suites.
    Axioms {
        #[command(flatten)]
        common: Common,
        /// Perturbation trials per class.
        #[arg(long, default_value_t = 100)]
        trials: usize,
    },
    /// Page dimensions and differentials for r ≤ R, plus E^inf.
    Pages {
        #[command(flatten)]
        common: Common,
    },
    /// Homology of the total bar complex by total degree.
    Tor {
        #[command(flatten)]
        common: Common,
    },
    /// Brackets of basis classes on one page.
    Bracket {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 1)]
        page: usize,
    },
    /// Draw a shuffle walk as SVG.
    Diagram {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
        /// Walk as a string of R and U steps.
        #[arg(long, conflicts_with = "index")]
        walk: Option<String>,
        /// Walk by enumeration index (right steps first).
        #[arg(long)]
        index: Option<usize>,
        /// 1-based corner position for bracket-shuffle.
        #[arg(long)]
        corner: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn emit(out: Option<&PathBuf>, text: &str) -> Result<(), u8> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| {
            eprintln!("error: cannot write {}: {e}", path.display());
            EXIT_USAGE
        }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn execute(cli: Cli) -> Result<(), u8> {
    let (command, common, options) = match cli.command {
        Cmd::Diagram { kind, p, q, walk, index, corner, out } => {
            let kind = match kind {
                Kind::Shuffle => DiagramKind::Shuffle,
                Kind::BracketShuffle => DiagramKind::BracketShuffle,
            };
            let selection = match (walk, index) {
                (Some(w), _) => WalkSelection::Steps(w),
                (None, i) => WalkSelection::Index(i.unwrap_or(0)),
            };
            let diagram = Diagram::select(kind, p, q, &selection, corner).map_err(|e| {
                eprintln!("error: {e}");
                EXIT_USAGE
            })?;
            return emit(out.as_ref(), &diagram.to_svg());
        }
        Cmd::Axioms { common, trials } => (Command::Axioms, common, RunOptions { trials, ..RunOptions::default() }),
        Cmd::Pages { common } => (Command::Pages, common, RunOptions::default()),
        Cmd::Tor { common } => (Command::Tor, common, RunOptions::default()),
        Cmd::Bracket { common, page } => (Command::Bracket, common, RunOptions { page: Some(page), ..RunOptions::default() }),
    };
    let options = RunOptions { seed: common.seed, max_basis: common.max_basis, ..options };

    let text = std::fs::read_to_string(&common.config).map_err(|e| {
        eprintln!("error: cannot read {}: {e}", common.config.display());
        EXIT_USAGE
    })?;
    let config = Config::parse(&text).map_err(|e| {
        eprintln!("error: {}: {e}", common.config.display());
        EXIT_USAGE
    })?;
    let result = run(command, &config, &options).map_err(|e| {
        eprintln!("error: {e}");
        match e {
            barss_core::Error::BasisBlowUp { .. } => EXIT_BLOW_UP,
            _ => EXIT_USAGE,
        }
    })?;
    let text = match common.format {
        Format::Table => render_table(&result),
        Format::Json => result.to_json(),
    };
    emit(common.out.as_ref(), &text)?;
    if result.passed() {
        Ok(())
    } else {
        Err(EXIT_AXIOM_FAILURE)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(code) => ExitCode::from(code),
    }
}
