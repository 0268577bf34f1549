use std::collections::BTreeSet;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use fanotope_core::enumerate::{enumerate_3dm1, verify_with, ClassificationReport, SearchConfig};
use fanotope_core::linalg::LinalgError;
use fanotope_core::{construct, find_isomorphism, CaseTag, Error as CoreError, FamilyId, Polytope};
use serde::Serialize;
use thiserror::Error;

use crate::format::{ParseError, PolytopeFile};
use crate::report::{all_levels, check_report};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CONTRADICTION: i32 = 3;
pub const EXIT_CAPABILITY: i32 = 4;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Parse { path: PathBuf, source: ParseError },
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error("writing output: {0}")]
    Output(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Parse { .. } | CliError::Io { .. } | CliError::Output(_) => EXIT_USAGE,
            CliError::Core(e) => match e {
                CoreError::Contradiction(_) => EXIT_CONTRADICTION,
                CoreError::Capability(_) | CoreError::Unsupported(_) => EXIT_CAPABILITY,
                CoreError::Linalg(LinalgError::Overflow) => EXIT_CAPABILITY,
                _ => EXIT_USAGE,
            },
        }
    }
}

/// Lattice polytope toolkit for reflexive, terminal and smooth Fano polytopes.
#[derive(Debug, Parser)]
#[command(name = "fanotope", version, about)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write a named polytope as a vertex file.
    Family {
        /// One of p1, p2, p3, dp2, cross, fig2.
        name: String,
        #[arg(long)]
        dim: Option<usize>,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Report the predicates and special facets of a polytope.
    Check {
        file: PathBuf,
        /// Exit 0 if the predicate holds, 1 otherwise (repeatable).
        #[arg(long = "assert", value_name = "PREDICATE",
              value_parser = ["reflexive", "simplicial", "terminal", "smooth"])]
        asserts: Vec<String>,
        /// Also run the lemma checks; a violation exits with 3.
        #[arg(long)]
        lemmas: bool,
    },
    /// Decide lattice isomorphism and print a witness matrix.
    Isom { a: PathBuf, b: PathBuf },
    /// Level histogram of every facet.
    Levels { file: PathBuf },
    /// Enumerate terminal simplicial reflexive polytopes with 3d-1 vertices.
    Enum {
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        nverts: Option<usize>,
        /// Restrict to a case of the level table (repeatable).
        #[arg(long = "case", value_parser = clap::value_parser!(u8).range(1..=3))]
        cases: Vec<u8>,
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Directory for the report and one vertex file per class.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Refuse dimensions above the supported maximum.
        #[arg(long)]
        strict: bool,
        /// Disable the lemma-based pruning rules.
        #[arg(long)]
        no_prune: bool,
    },
    /// Run the enumeration and check it against the classification.
    Verify {
        #[arg(long)]
        dim: usize,
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        strict: bool,
        #[arg(long)]
        no_prune: bool,
    },
}

fn read_polytope(path: &Path) -> Result<Polytope, CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io { path: path.into(), source })?;
    let file = PolytopeFile::parse(&text).map_err(|source| CliError::Parse { path: path.into(), source })?;
    Ok(file.to_polytope()?)
}

fn write_json(out: &mut dyn Write, value: &impl Serialize) -> Result<(), CliError> {
    out.write_all(json_string(value)?.as_bytes())?;
    Ok(())
}

fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    fs::write(path, contents).map_err(|source| CliError::Io { path: path.into(), source })
}

fn write_classes(dir: &Path, report: &ClassificationReport) -> Result<(), CliError> {
    fs::create_dir_all(dir).map_err(|source| CliError::Io { path: dir.into(), source })?;
    for (k, p) in report.representatives.iter().enumerate() {
        write_file(&dir.join(format!("class_{:02}.txt", k + 1)), &PolytopeFile::from_polytope(p).serialize())?;
    }
    Ok(())
}

fn json_string(value: &impl Serialize) -> Result<String, CliError> {
    serde_json::to_string_pretty(value)
        .map(|s| s + "\n")
        .map_err(|e| CliError::Usage(e.to_string()))
}

/// Runs one command, writing its normal output to `out`. Returns the exit
/// code for outcomes that are not errors.
pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<i32, CliError> {
    match &cli.command {
        Command::Family { name, dim, out: path } => {
            let id: FamilyId = name.parse().map_err(|e: CoreError| CliError::Usage(e.to_string()))?;
            let d = dim
                .or(id.default_dim())
                .ok_or_else(|| CliError::Usage(format!("family {id} needs --dim")))?;
            let p = construct(id, d).map_err(|e| CliError::Usage(e.to_string()))?;
            let text = PolytopeFile::from_polytope(&p).serialize();
            match path {
                Some(path) => write_file(path, &text)?,
                None => out.write_all(text.as_bytes())?,
            }
            Ok(EXIT_OK)
        }
        Command::Check { file, asserts, lemmas } => {
            let p = read_polytope(file)?;
            let report = check_report(&p, *lemmas)?;
            write_json(out, &report)?;
            if report.lemmas.as_ref().is_some_and(|l| !l.is_clean()) {
                eprintln!("lemma violation on input satisfying the hypotheses");
                return Ok(EXIT_CONTRADICTION);
            }
            let all = asserts.iter().all(|a| report.properties.get(a).unwrap_or(false));
            Ok(if all { EXIT_OK } else { EXIT_FALSE })
        }
        Command::Isom { a, b } => {
            let (p, q) = (read_polytope(a)?, read_polytope(b)?);
            match find_isomorphism(&p, &q)? {
                Some(t) => {
                    writeln!(out, "true")?;
                    for row in t.rows() {
                        let s: Vec<String> = row.iter().map(|c| c.to_string()).collect();
                        writeln!(out, "{}", s.join(" "))?;
                    }
                    Ok(EXIT_OK)
                }
                None => {
                    writeln!(out, "false")?;
                    Ok(EXIT_FALSE)
                }
            }
        }
        Command::Levels { file } => {
            let p = read_polytope(file)?;
            write_json(out, &all_levels(&p)?)?;
            Ok(EXIT_OK)
        }
        Command::Enum { dim, nverts, cases, jobs, out: dir, strict, no_prune } => {
            let mut cfg = SearchConfig::new(*dim);
            if let Some(n) = nverts {
                cfg.target = *n;
            }
            if !cases.is_empty() {
                cfg.cases = cases.iter().map(|&c| CaseTag::from_number(c).expect("range checked")).collect::<BTreeSet<_>>();
            }
            cfg.jobs = *jobs;
            cfg.strict = *strict;
            cfg.pruning = !no_prune;
            let report = enumerate_3dm1(&cfg)?;
            eprintln!("elapsed: {:.3?}", report.elapsed);
            let text = json_string(&report)?;
            if let Some(dir) = dir {
                write_classes(dir, &report)?;
                write_file(&dir.join("report.json"), &text)?;
            }
            out.write_all(text.as_bytes())?;
            Ok(EXIT_OK)
        }
        Command::Verify { dim, jobs, out: dir, strict, no_prune } => {
            let mut cfg = SearchConfig::new(*dim);
            cfg.jobs = *jobs;
            cfg.strict = *strict;
            cfg.pruning = !no_prune;
            let cert = verify_with(&cfg)?;
            eprintln!("elapsed: {:.3?}", cert.report.elapsed);
            let text = json_string(&cert)?;
            if let Some(dir) = dir {
                write_classes(dir, &cert.report)?;
                write_file(&dir.join("certificate.json"), &text)?;
            }
            out.write_all(text.as_bytes())?;
            Ok(if cert.passed { EXIT_OK } else { EXIT_FALSE })
        }
    }
}
