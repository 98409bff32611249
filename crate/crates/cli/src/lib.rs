//! Command execution for the `schroder` binary.
//!
//! Argument parsing lives in `main.rs`; everything here works on an already
//! validated [`RunConfig`] so it can be driven directly from tests.

use std::fmt;
use std::io::{self, BufRead, Write};

use schroder_core::bijection::{self, DecodeRule, MapName};
use schroder_core::enumeration::{self, SeriesKind};
use schroder_core::partition::{self, Pattern, DEFAULT_EXHAUSTIVE_LIMIT};
use schroder_core::path::{self, PathClass};
use schroder_core::render::{self, RenderFormat};
use schroder_core::verify;
use schroder_core::{Error, LatticePath, SetPartition};
use serde_json::json;

/// Environment variable overriding the exhaustive limit.
pub const LIMIT_ENV: &str = "SCHRODER_EXHAUSTIVE_LIMIT";

pub mod exit {
    pub const OK: i32 = 0;
    pub const INVALID_INPUT: i32 = 1;
    pub const PRECONDITION: i32 = 2;
    pub const VERIFY_FAILED: i32 = 3;
    pub const USAGE: i32 = 64;
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Direction {
    #[default]
    Forward,
    Inverse,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Subject {
    /// Partitions of `[n]`, optionally restricted to avoiders of a pattern.
    Partitions { pattern: Option<SetPartition> },
    Paths { class: PathClass },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Command {
    List { subject: Subject, n: usize },
    Count { subject: Subject, n: usize },
    Map { map: MapName, direction: Direction, trace: bool },
    Check,
    Render { style: RenderFormat },
    Series { kind: SeriesKind, order: usize },
    Verify { max_n: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub command: Command,
    pub format: OutputFormat,
    pub limit: usize,
    /// Objects given on the command line; stdin is read when empty.
    pub objects: Vec<String>,
}

impl RunConfig {
    pub fn new(command: Command) -> Self {
        RunConfig { command, format: OutputFormat::Text, limit: DEFAULT_EXHAUSTIVE_LIMIT, objects: Vec::new() }
    }
}

/// A failed run: exit status plus message for stderr.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn new(code: i32, message: impl Into<String>) -> Self {
        Failure { code, message: message.into() }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::new(exit::USAGE, format!("i/o error: {e}"))
    }
}

/// Exit code for a core error raised while applying a map.
fn precondition(e: Error) -> Failure {
    let code = match e {
        Error::LimitExceeded { .. } => exit::USAGE,
        Error::PatternFound { .. } | Error::Malformed(_) | Error::EmptyPartition | Error::ClassViolation { .. } => {
            exit::PRECONDITION
        }
        _ => exit::INVALID_INPUT,
    };
    Failure::new(code, e.to_string())
}

fn invalid(line: &str, e: impl fmt::Display) -> Failure {
    Failure::new(exit::INVALID_INPUT, format!("invalid input {line:?}: {e}"))
}

/// Accepts the text forms and the JSON forms emitted by `--format json`.
pub fn read_partition(line: &str) -> Result<SetPartition, Failure> {
    let t = line.trim();
    if t.starts_with('[') {
        serde_json::from_str(t).map_err(|e| invalid(line, e))
    } else {
        partition::parse_partition(t).map_err(|e| invalid(line, e))
    }
}

pub fn read_path(line: &str) -> Result<LatticePath, Failure> {
    let t = line.trim();
    if t.starts_with('"') {
        serde_json::from_str(t).map_err(|e| invalid(line, e))
    } else {
        t.parse().map_err(|e| invalid(line, e))
    }
}

fn looks_like_partition(line: &str) -> bool {
    let t = line.trim();
    t.starts_with('[') || t.starts_with(|c: char| c.is_ascii_digit())
}

fn emit_partition(out: &mut dyn Write, p: &SetPartition, format: OutputFormat) -> io::Result<()> {
    match format {
        OutputFormat::Text => writeln!(out, "{p}"),
        OutputFormat::Json => writeln!(out, "{}", json!(p)),
    }
}

fn emit_path(out: &mut dyn Write, p: &LatticePath, format: OutputFormat) -> io::Result<()> {
    match format {
        OutputFormat::Text => writeln!(out, "{p}"),
        OutputFormat::Json => writeln!(out, "{}", json!(p)),
    }
}

fn check_limit(n: usize, limit: usize) -> Result<(), Failure> {
    if n > limit {
        Err(Failure::new(exit::USAGE, format!("n = {n} exceeds the exhaustive limit {limit} (set {LIMIT_ENV} to raise it)")))
    } else {
        Ok(())
    }
}

fn avoids(p: &SetPartition, pattern: &SetPartition) -> bool {
    match Pattern::ALL.into_iter().find(|q| q.word() == pattern.word()) {
        Some(known) => known.avoided_by(p),
        None => partition::avoids(p, pattern),
    }
}

/// Executes one command. Objects come from `config.objects`, or one per
/// non-blank line of `input` when none were given.
pub fn run(config: &RunConfig, input: &mut dyn BufRead, out: &mut dyn Write) -> Result<(), Failure> {
    let format = config.format;
    match &config.command {
        Command::List { subject, n } | Command::Count { subject, n } => {
            check_limit(*n, config.limit)?;
            let listing = matches!(config.command, Command::List { .. });
            let mut count: u64 = 0;
            match subject {
                Subject::Partitions { pattern } => {
                    let all = partition::generate_partitions_limited(*n, config.limit).map_err(precondition)?;
                    for p in all.filter(|p| pattern.as_ref().is_none_or(|t| avoids(p, t))) {
                        count += 1;
                        if listing {
                            emit_partition(out, &p, format)?;
                        }
                    }
                }
                Subject::Paths { class } => {
                    for p in path::generate_paths_limited(*n, *class, config.limit).map_err(precondition)? {
                        count += 1;
                        if listing {
                            emit_path(out, &p, format)?;
                        }
                    }
                }
            }
            if !listing {
                match format {
                    OutputFormat::Text => writeln!(out, "{count}")?,
                    OutputFormat::Json => writeln!(out, "{}", json!({ "count": count }))?,
                }
            }
        }
        Command::Map { map, direction, trace } => {
            for line in objects(config, input)? {
                apply_map(*map, *direction, *trace, &line, format, out)?;
            }
        }
        Command::Check => {
            for line in objects(config, input)? {
                check_object(&line, format, out)?;
            }
        }
        Command::Render { style } => {
            for line in objects(config, input)? {
                let p = read_path(&line)?;
                out.write_all(render::render(&p, *style).as_bytes())?;
            }
        }
        Command::Series { kind, order } => {
            let table = enumeration::series(*kind, *order);
            match format {
                OutputFormat::Text => {
                    for (i, c) in table.coefficients.iter().enumerate() {
                        writeln!(out, "{i} {c}")?;
                    }
                }
                OutputFormat::Json => {
                    let items: Vec<String> = table.coefficients.iter().map(ToString::to_string).collect();
                    writeln!(out, "[{}]", items.join(","))?;
                }
            }
        }
        Command::Verify { max_n } => {
            check_limit(*max_n, config.limit)?;
            let report = verify::run_all(*max_n);
            match format {
                OutputFormat::Text => writeln!(out, "{report}")?,
                OutputFormat::Json => {
                    let props: Vec<_> = report
                        .properties
                        .iter()
                        .map(|p| {
                            json!({
                                "property": p.name,
                                "max_n": p.max_n,
                                "passed": p.passed(),
                                "failure": p.failure.as_ref().map(|(n, msg)| json!({ "n": n, "counterexample": msg })),
                            })
                        })
                        .collect();
                    writeln!(out, "{}", json!({ "passed": report.passed(), "properties": props }))?;
                }
            }
            if !report.passed() {
                let first = report.failures().next().map(ToString::to_string).unwrap_or_default();
                return Err(Failure::new(exit::VERIFY_FAILED, format!("verification failed: {first}")));
            }
        }
    }
    Ok(())
}

fn objects(config: &RunConfig, input: &mut dyn BufRead) -> Result<Vec<String>, Failure> {
    if !config.objects.is_empty() {
        return Ok(config.objects.clone());
    }
    let mut lines = Vec::new();
    for line in input.lines() {
        let line = line?;
        if !line.trim().is_empty() {
            lines.push(line);
        }
    }
    Ok(lines)
}

fn apply_map(
    map: MapName,
    direction: Direction,
    trace: bool,
    line: &str,
    format: OutputFormat,
    out: &mut dyn Write,
) -> Result<(), Failure> {
    use Direction::{Forward, Inverse};
    match (map, direction) {
        (MapName::Sigma | MapName::Phi | MapName::Full12312 | MapName::Full12321, Forward) => {
            let p = read_partition(line)?;
            let image = match map {
                MapName::Sigma => bijection::sigma(&p),
                MapName::Phi => bijection::phi(&p),
                MapName::Full12312 => bijection::full_map_12312(&p),
                _ => bijection::full_map_12321(&p),
            }
            .map_err(precondition)?;
            emit_path(out, &image, format)?;
        }
        (MapName::Sigma | MapName::Phi, Inverse) => {
            let q = read_path(line)?;
            let rule = if map == MapName::Sigma { DecodeRule::Max } else { DecodeRule::Min };
            let state = bijection::decode_state(&q, rule).map_err(precondition)?;
            if trace {
                out.write_all(state.trace().as_bytes())?;
            }
            let p = bijection::decode(&q, rule).map_err(precondition)?;
            emit_partition(out, &p, format)?;
        }
        (MapName::Full12312 | MapName::Full12321, Inverse) => {
            let q = read_path(line)?;
            let p = if map == MapName::Full12312 {
                bijection::full_inv_12312(&q)
            } else {
                bijection::full_inv_12321(&q)
            }
            .map_err(precondition)?;
            emit_partition(out, &p, format)?;
        }
        (MapName::Psi, dir) => {
            let q = read_path(line)?;
            let image = match dir {
                Forward => bijection::psi(&q),
                Inverse => bijection::psi_inv(&q),
            }
            .map_err(precondition)?;
            emit_path(out, &image, format)?;
        }
    }
    Ok(())
}

fn check_object(line: &str, format: OutputFormat, out: &mut dyn Write) -> Result<(), Failure> {
    let record: Vec<(&str, serde_json::Value)> = if looks_like_partition(line) {
        let p = read_partition(line)?;
        let nonempty = !p.is_empty();
        vec![
            ("kind", json!("partition")),
            ("partition", json!(p)),
            ("length", json!(p.len())),
            ("blocks", json!(p.block_count())),
            ("avoids_12312", json!(partition::avoids(&p, &Pattern::P12312.as_partition()))),
            ("avoids_12321", json!(partition::avoids(&p, &Pattern::P12321.as_partition()))),
            ("irreducible", json!(nonempty && partition::is_irreducible(&p))),
        ]
    } else {
        let q = read_path(line)?;
        let c = q.classify();
        let classes: Vec<&str> =
            PathClass::ALL.into_iter().filter(|class| class.contains(&q)).map(PathClass::name).collect();
        vec![
            ("kind", json!("path")),
            ("path", json!(q)),
            ("semilength", json!(q.semilength())),
            ("peaks", json!(q.peaks().iter().map(|p| p.level).collect::<Vec<_>>())),
            ("uh_free", json!(c.uh_free)),
            ("no_even_peak", json!(c.no_even_peak)),
            ("no_level_one_peak", json!(c.no_level_one_peak)),
            ("ends_with_down", json!(c.ends_with_down)),
            ("classes", json!(classes)),
        ]
    };
    match format {
        OutputFormat::Text => {
            for (key, value) in &record {
                let shown = match value {
                    serde_json::Value::String(s) => s.clone(),
                    serde_json::Value::Array(items) => {
                        items.iter().map(|v| v.as_str().map_or_else(|| v.to_string(), String::from)).collect::<Vec<_>>().join(",")
                    }
                    other => other.to_string(),
                };
                writeln!(out, "{key}={shown}")?;
            }
        }
        OutputFormat::Json => {
            let obj: serde_json::Map<String, serde_json::Value> =
                record.into_iter().map(|(k, v)| (k.to_string(), v)).collect();
            writeln!(out, "{}", serde_json::Value::Object(obj))?;
        }
    }
    Ok(())
}
