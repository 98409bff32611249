use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use schroder_cli::{exit, run, Command, Direction, OutputFormat, RunConfig, Subject, LIMIT_ENV};
use schroder_core::bijection::MapName;
use schroder_core::enumeration::{SeriesKind, DEFAULT_ORDER};
use schroder_core::partition::DEFAULT_EXHAUSTIVE_LIMIT;
use schroder_core::path::PathClass;
use schroder_core::render::RenderFormat;
use schroder_core::SetPartition;

#[derive(Parser, Debug)]
#[command(name = "schroder", version, about = "Pattern-avoiding partitions and restricted Schröder paths")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Write output to a file instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Largest n accepted by exhaustive commands
    #[arg(long, global = true, env = LIMIT_ENV, default_value_t = DEFAULT_EXHAUSTIVE_LIMIT)]
    limit: usize,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Print every object of a class, one per line
    List(Selection),
    /// Count the objects of a class
    Count(Selection),
    /// Apply a bijection to each input object
    Map {
        #[arg(value_enum)]
        map: MapArg,
        /// Objects to map; read from stdin when absent
        objects: Vec<String>,
        #[arg(long, value_enum, default_value_t = DirectionArg::Forward)]
        direction: DirectionArg,
        /// Print the `index step label` decoder trace before each result
        #[arg(long)]
        trace: bool,
    },
    /// Report predicates of a partition or a path
    Check { objects: Vec<String> },
    /// Draw paths
    Render {
        objects: Vec<String>,
        #[arg(long, value_enum, default_value_t = Style::Ascii)]
        style: Style,
    },
    /// Print series coefficients
    Series {
        #[arg(value_enum)]
        series: SeriesArg,
        #[arg(long, default_value_t = DEFAULT_ORDER)]
        order: usize,
    },
    /// Run every cross-check up to a size
    Verify {
        #[arg(long, default_value_t = 8)]
        max_n: usize,
    },
}

#[derive(clap::Args, Debug)]
struct Selection {
    #[arg(value_enum)]
    kind: Kind,
    n: usize,
    /// Keep partitions avoiding this pattern (e.g. 12312)
    #[arg(long)]
    pattern: Option<String>,
    /// Path class
    #[arg(long, default_value = "schroder")]
    class: String,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Kind {
    Partitions,
    Paths,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Format {
    Text,
    Json,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum DirectionArg {
    Forward,
    Inverse,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum MapArg {
    Sigma,
    Phi,
    Psi,
    Full12312,
    Full12321,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Style {
    Ascii,
    Svg,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum SeriesArg {
    F,
    FPrime,
    Schroder,
    Bell,
}

fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(exit::USAGE as u8)
}

fn subject(sel: &Selection) -> Result<Subject, String> {
    match sel.kind {
        Kind::Partitions => {
            let pattern = sel
                .pattern
                .as_deref()
                .map(|p| p.parse::<SetPartition>().map_err(|e| format!("bad --pattern: {e}")))
                .transpose()?;
            Ok(Subject::Partitions { pattern })
        }
        Kind::Paths => Ok(Subject::Paths { class: sel.class.parse::<PathClass>().map_err(|e| e.to_string())? }),
    }
}

fn build(cli: &Cli) -> Result<RunConfig, String> {
    let mut objects = Vec::new();
    let command = match &cli.command {
        Cmd::List(sel) => Command::List { subject: subject(sel)?, n: sel.n },
        Cmd::Count(sel) => Command::Count { subject: subject(sel)?, n: sel.n },
        Cmd::Map { map, objects: objs, direction, trace } => {
            objects = objs.clone();
            let map = match map {
                MapArg::Sigma => MapName::Sigma,
                MapArg::Phi => MapName::Phi,
                MapArg::Psi => MapName::Psi,
                MapArg::Full12312 => MapName::Full12312,
                MapArg::Full12321 => MapName::Full12321,
            };
            let direction = match direction {
                DirectionArg::Forward => Direction::Forward,
                DirectionArg::Inverse => Direction::Inverse,
            };
            Command::Map { map, direction, trace: *trace }
        }
        Cmd::Check { objects: objs } => {
            objects = objs.clone();
            Command::Check
        }
        Cmd::Render { objects: objs, style } => {
            objects = objs.clone();
            let style = match style {
                Style::Ascii => RenderFormat::Ascii,
                Style::Svg => RenderFormat::Svg,
            };
            Command::Render { style }
        }
        Cmd::Series { series, order } => {
            let kind = match series {
                SeriesArg::F => SeriesKind::F,
                SeriesArg::FPrime => SeriesKind::FPrime,
                SeriesArg::Schroder => SeriesKind::Schroder,
                SeriesArg::Bell => SeriesKind::Bell,
            };
            Command::Series { kind, order: *order }
        }
        Cmd::Verify { max_n } => Command::Verify { max_n: *max_n },
    };
    let format = match cli.format {
        Format::Text => OutputFormat::Text,
        Format::Json => OutputFormat::Json,
    };
    Ok(RunConfig { command, format, limit: cli.limit, objects })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(exit::USAGE as u8);
        }
    };
    let config = match build(&cli) {
        Ok(c) => c,
        Err(msg) => return usage(msg),
    };
    let mut out: Box<dyn Write> = match &cli.out {
        Some(path) => match File::create(path) {
            Ok(f) => Box::new(BufWriter::new(f)),
            Err(e) => return usage(format!("cannot create {}: {e}", path.display())),
        },
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    let stdin = io::stdin();
    let result = run(&config, &mut stdin.lock(), &mut out);
    let flushed = out.flush();
    match result {
        Ok(()) if flushed.is_ok() => ExitCode::SUCCESS,
        Ok(()) => usage("failed to flush output"),
        Err(f) => {
            eprintln!("error: {f}");
            ExitCode::from(f.code as u8)
        }
    }
}
