//! Command-line driver. [`run`] parses arguments and returns the exit code
//! together with the text meant for stdout and stderr, so it can be tested
//! without spawning a process.

use std::ffi::OsString;
use std::fmt::Write as _;

use affine_crystals::{
    common_depth, gamma_to, iso_class, psi_at_depth, reduce_to_fundamental, theta, to_flotw,
    Convention, FiniteColumn, FockSpace, Generator, InfiniteColumn, Multicharge, Multipartition,
};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("malformed JSON for --{flag}: {source}")]
    Json {
        flag: &'static str,
        source: serde_json::Error,
    },
    #[error(transparent)]
    Library(#[from] affine_crystals::Error),
    #[error("{0}")]
    Usage(String),
}

type CliResult<T> = std::result::Result<T, CliError>;

#[derive(Parser, Debug)]
#[command(
    name = "crystals",
    version,
    about = "Crystals of higher level Fock spaces in affine type A"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Conv {
    Plus,
    Minus,
}

impl From<Conv> for Convention {
    fn from(c: Conv) -> Self {
        match c {
            Conv::Plus => Convention::Plus,
            Conv::Minus => Convention::Minus,
        }
    }
}

#[derive(Debug, Clone, Copy, Default, ValueEnum)]
enum GraphFormat {
    #[default]
    Json,
    Dot,
    Text,
}

#[derive(Debug, Clone, Copy, Default, ValueEnum)]
enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum CheckKind {
    Flotw,
    Uglov,
    Eregular,
    Erestricted,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generate the component of the empty multipartition up to a rank.
    Crystal {
        #[arg(long)]
        e: usize,
        /// Comma-separated integers, e.g. `0,-1,3`.
        #[arg(long, allow_hyphen_values = true, value_parser = parse_charge)]
        charge: Multicharge,
        #[arg(long, value_enum, default_value = "plus")]
        conv: Conv,
        #[arg(long)]
        max_rank: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: GraphFormat,
    },
    /// Membership test; prints true or false and exits 0 or 1.
    Check {
        #[arg(value_enum)]
        kind: CheckKind,
        /// JSON array of partitions, e.g. `[[2,1],[]]`.
        #[arg(long)]
        mp: String,
        #[arg(long)]
        e: usize,
        /// Required for `flotw` and `uglov`.
        #[arg(long, allow_hyphen_values = true, value_parser = parse_charge)]
        charge: Option<Multicharge>,
        #[arg(long, value_enum, default_value = "plus")]
        conv: Conv,
    },
    /// Image of a multipartition under the isomorphism between two crystals
    /// whose charges lie in one orbit.
    Iso {
        #[arg(long, allow_hyphen_values = true, value_parser = parse_charge)]
        from: Multicharge,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_charge)]
        to: Multicharge,
        #[arg(long)]
        mp: String,
        #[arg(long)]
        e: usize,
    },
    /// Every image of a multipartition across the orbit of its charge.
    Class {
        #[arg(long)]
        mp: String,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_charge)]
        charge: Multicharge,
        #[arg(long)]
        e: usize,
    },
    /// Carry a multipartition to the fundamental representative of its orbit.
    ToFlotw {
        #[arg(long)]
        mp: String,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_charge)]
        charge: Multicharge,
        #[arg(long)]
        e: usize,
    },
    /// Fundamental representative of a charge and a word reaching it.
    Reduce {
        #[arg(long, allow_hyphen_values = true, value_parser = parse_charge)]
        charge: Multicharge,
        #[arg(long)]
        e: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// R-matrix on two finite columns given as JSON arrays of letters.
    Theta {
        #[arg(long, allow_hyphen_values = true)]
        left: String,
        #[arg(long, allow_hyphen_values = true)]
        right: String,
    },
    /// R-matrix on two infinite columns, `{"charge":k,"shape":[..]}`.
    Psi {
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
        /// Truncation depth; defaults to the largest valid one.
        #[arg(long, allow_hyphen_values = true)]
        depth: Option<i64>,
    },
}

fn parse_charge(raw: &str) -> Result<Multicharge, String> {
    let values = raw
        .split(',')
        .map(|t| t.trim().parse::<i64>().map_err(|e| format!("`{t}`: {e}")))
        .collect::<Result<Vec<_>, _>>()?;
    Multicharge::new(values).map_err(|e| e.to_string())
}

fn parse_json<T: serde::de::DeserializeOwned>(flag: &'static str, raw: &str) -> CliResult<T> {
    serde_json::from_str(raw).map_err(|source| CliError::Json { flag, source })
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("output types serialize")
}

fn words(word: &[Generator]) -> Vec<String> {
    word.iter().map(ToString::to_string).collect()
}

/// What a finished invocation produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `args` (including the program name) and executes the command.
pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            let text = err.render().to_string();
            return if err.use_stderr() {
                Output {
                    code: 2,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Output {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    match execute(cli.command) {
        Ok((code, mut stdout)) => {
            if !stdout.ends_with('\n') {
                stdout.push('\n');
            }
            Output {
                code,
                stdout,
                stderr: String::new(),
            }
        }
        Err(err) => Output {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {err}\n"),
        },
    }
}

#[derive(Serialize)]
struct Member<'a> {
    charge: &'a Multicharge,
    mp: &'a Multipartition,
}

#[derive(Serialize)]
struct Reduced<'a> {
    charge: &'a Multicharge,
    word: Vec<String>,
}

#[derive(Serialize)]
struct Flotw<'a> {
    mp: &'a Multipartition,
    charge: &'a Multicharge,
    word: Vec<String>,
}

fn execute(command: Command) -> CliResult<(u8, String)> {
    let out = match command {
        Command::Crystal {
            e,
            charge,
            conv,
            max_rank,
            format,
        } => {
            let graph = FockSpace::new(charge, e, conv.into())?.generate_crystal(max_rank);
            match format {
                GraphFormat::Json => graph.to_json(),
                GraphFormat::Dot => graph.to_dot(),
                GraphFormat::Text => {
                    let mut text = String::new();
                    for (k, v) in graph.vertices().enumerate() {
                        let _ = writeln!(text, "{k}\t{v}");
                    }
                    for edge in graph.edges() {
                        let _ = writeln!(
                            text,
                            "{} -{} ({})-> {}",
                            edge.source, edge.residue, edge.content, edge.target
                        );
                    }
                    text
                }
            }
        }
        Command::Check {
            kind,
            mp,
            e,
            charge,
            conv,
        } => {
            let mp: Multipartition = parse_json("mp", &mp)?;
            let verdict = check(kind, &mp, e, charge, conv)?;
            return Ok((if verdict { 0 } else { 1 }, verdict.to_string()));
        }
        Command::Iso { from, to, mp, e } => {
            let mp: Multipartition = parse_json("mp", &mp)?;
            to_json(&gamma_to(&mp, &from, &to, e)?)
        }
        Command::Class { mp, charge, e } => {
            let mp: Multipartition = parse_json("mp", &mp)?;
            let class = iso_class(&mp, &charge, e)?;
            let members: Vec<Member> = class
                .members
                .iter()
                .map(|(charge, mp)| Member { charge, mp })
                .collect();
            to_json(&members)
        }
        Command::ToFlotw { mp, charge, e } => {
            let mp: Multipartition = parse_json("mp", &mp)?;
            let (image, fundamental, w) = to_flotw(&mp, &charge, e)?;
            to_json(&Flotw {
                mp: &image,
                charge: &fundamental,
                word: words(w.word()),
            })
        }
        Command::Reduce { charge, e, format } => {
            let (fundamental, w) = reduce_to_fundamental(&charge, e)?;
            match format {
                Format::Text => format!("{fundamental}\n{}", words(w.word()).join(" ")),
                Format::Json => to_json(&Reduced {
                    charge: &fundamental,
                    word: words(w.word()),
                }),
            }
        }
        Command::Theta { left, right } => {
            let left: FiniteColumn = parse_json("left", &left)?;
            let right: FiniteColumn = parse_json("right", &right)?;
            to_json(&theta(&left, &right)?)
        }
        Command::Psi { left, right, depth } => {
            let left: InfiniteColumn = parse_json("left", &left)?;
            let right: InfiniteColumn = parse_json("right", &right)?;
            let depth = depth.unwrap_or_else(|| common_depth(&left, &right));
            to_json(&psi_at_depth(&left, &right, depth)?)
        }
    };
    Ok((0, out))
}

fn check(
    kind: CheckKind,
    mp: &Multipartition,
    e: usize,
    charge: Option<Multicharge>,
    conv: Conv,
) -> CliResult<bool> {
    if e < 2 {
        return Err(affine_crystals::Error::InvalidE(e).into());
    }
    let space = |charge: Option<Multicharge>| -> CliResult<FockSpace> {
        let charge =
            charge.ok_or_else(|| CliError::Usage("--charge is required for this check".into()))?;
        Ok(FockSpace::new(charge, e, conv.into())?)
    };
    // The partition tests apply to every component.
    Ok(match kind {
        CheckKind::Flotw => space(charge)?.is_flotw(mp)?,
        CheckKind::Uglov => space(charge)?.is_uglov(mp)?,
        CheckKind::Eregular => mp.components().iter().all(|p| p.is_e_regular(e)),
        CheckKind::Erestricted => mp.components().iter().all(|p| p.is_e_restricted(e)),
    })
}
