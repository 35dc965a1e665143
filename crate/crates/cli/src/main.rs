use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;
use wsbound_core::enumerate::DEFAULT_GENUS_CAP;
use wsbound_core::DEFAULT_MAX_BITS;

use wsbound_cli::commands::{self, CliError, CliResult, ExcludeMethod};
use wsbound_cli::{Format, OutputRecord};

/// Upper bounds on rational places from Weierstrass semigroups.
#[derive(Parser)]
#[command(name = "wsbound", version)]
struct Cli {
    #[arg(long, value_enum, default_value = "text", global = true)]
    format: Format,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Largest bit-set window any computation may allocate.
    #[arg(long, default_value_t = DEFAULT_MAX_BITS, global = true)]
    max_bits: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Lewittes, new, t-refined and sharpened bounds for one semigroup.
    Bound {
        /// Comma-separated, strictly ascending.
        #[arg(long, value_delimiter = ',', required = true)]
        gens: Vec<u64>,
        #[arg(long)]
        q: u64,
        /// A priori bound N' on the number of rational places.
        #[arg(long)]
        n_prime: Option<u64>,
    },
    /// Recompute a published table and report discrepancies.
    Table {
        #[arg(value_parser = clap::value_parser!(u8).range(1..=3))]
        which: u8,
    },
    /// All semigroups of a genus, in lexicographic gap-set order.
    Enumerate {
        #[arg(long)]
        genus: u32,
        #[arg(long, default_value_t = DEFAULT_GENUS_CAP)]
        cap: u32,
    },
    /// Semigroups of a genus that cannot occur with N rational places.
    Exclude {
        #[arg(long)]
        genus: u32,
        #[arg(long)]
        q: u64,
        #[arg(long)]
        n: u64,
        #[arg(long, value_enum, default_value = "both")]
        method: ExcludeMethod,
        #[arg(long, default_value_t = DEFAULT_GENUS_CAP)]
        cap: u32,
    },
    /// Semigroups of the Garcia-Stichtenoth tower over F_{q^2}.
    Tower {
        #[arg(long)]
        q: u64,
        /// Highest level, starting from 1.
        #[arg(long)]
        levels: u32,
    },
    /// Telescopic test, closed-form genus and unique representations.
    Telescopic {
        /// Comma-separated; order matters.
        #[arg(long, value_delimiter = ',', required = true)]
        gens: Vec<u64>,
        /// Try every order of the generators.
        #[arg(long)]
        search: bool,
        #[arg(long)]
        q: Option<u64>,
        /// Element to write in telescopic coordinates.
        #[arg(long)]
        represent: Option<u64>,
    },
    /// Bounds on N_q(g) over all function fields of genus g.
    Nqg {
        #[arg(long)]
        g: u64,
        #[arg(long)]
        q: u64,
        /// Use the (8g+1)g^2 radicand in Ihara's bound.
        #[arg(long)]
        ihara_printed: bool,
    },
}

fn run(cli: &Cli, out: &mut dyn Write) -> CliResult<i32> {
    let bits = cli.max_bits;
    let (record, code): (OutputRecord, i32) = match &cli.command {
        Command::Bound { gens, q, n_prime } => (commands::cmd_bound(gens, *q, *n_prime, bits)?, 0),
        Command::Table { which } => {
            let (r, clean) = commands::cmd_table(*which, bits)?;
            (r, if clean { 0 } else { 3 })
        }
        Command::Enumerate { genus, cap } => {
            commands::cmd_enumerate(*genus, *cap, cli.format, out)?;
            return Ok(0);
        }
        Command::Exclude { genus, q, n, method, cap } => {
            (commands::cmd_exclude(*genus, *q, *n, *method, *cap)?, 0)
        }
        Command::Tower { q, levels } => (commands::cmd_tower(*q, *levels, bits)?, 0),
        Command::Telescopic { gens, search, q, represent } => {
            (commands::cmd_telescopic(gens, *search, *q, *represent, bits)?, 0)
        }
        Command::Nqg { g, q, ihara_printed } => (commands::cmd_nqg(*g, *q, *ihara_printed)?, 0),
    };
    for n in record.notes.iter().filter(|n| n.starts_with("warning:")) {
        eprintln!("{n}");
    }
    record.render(cli.format, out)?;
    Ok(code)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.out {
        Some(path) => File::create(path).map_err(CliError::from).and_then(|f| {
            let mut w = BufWriter::new(f);
            let code = run(&cli, &mut w)?;
            w.flush()?;
            Ok(code)
        }),
        None => {
            let stdout = io::stdout();
            let mut w = BufWriter::new(stdout.lock());
            run(&cli, &mut w).and_then(|code| {
                w.flush()?;
                Ok(code)
            })
        }
    };
    match result {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            if cli.format == Format::Json {
                eprintln!("{}", json!({"error": {"kind": e.kind(), "message": e.to_string()}}));
            } else {
                eprintln!("error: {e}");
            }
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
