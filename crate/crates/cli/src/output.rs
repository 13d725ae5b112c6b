use std::fs;
use std::path::Path;

use serde::Serialize;

use jones_genus2::filtration::CaseTag;
use jones_genus2::jones::{DocNormalization, RepDefinition};

use crate::args::Common;

/// Why a command did not succeed; decides the exit status.
#[derive(Debug)]
pub enum Failure {
    /// A mathematical check failed (exit 2).
    Check(String),
    /// I/O, parsing or schema problem (exit 3).
    Env(String),
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Check(_) => 2,
            Failure::Env(_) => 3,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            Failure::Check(m) | Failure::Env(m) => m,
        }
    }
}

/// Reproducibility header embedded in every report.
#[derive(Serialize, Debug, Clone)]
pub struct Header {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: &'static str,
    pub order: usize,
    pub cases: Vec<CaseTag>,
    pub representation: RepInfo,
}

#[derive(Serialize, Debug, Clone)]
pub struct RepInfo {
    pub source: String,
    pub dim: usize,
    pub normalization: Option<DocNormalization>,
}

impl RepInfo {
    pub fn new(source: String, rep: &RepDefinition) -> Self {
        Self {
            source,
            dim: rep.dim(),
            normalization: rep.normalization().map(Into::into),
        }
    }
}

impl Header {
    pub fn new(command: &'static str, common: &Common, representation: RepInfo) -> Self {
        Self {
            tool: env!("CARGO_PKG_NAME"),
            version: env!("CARGO_PKG_VERSION"),
            command,
            order: common.order,
            cases: common.case.cases(),
            representation,
        }
    }
}

pub fn to_json<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents serialize");
    s.push('\n');
    s
}

pub fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::Env(format!("cannot write {}: {e}", path.display())))
}

/// Writes the document to `--out` if given, then prints either the JSON or
/// the text summary.
pub fn emit<T: Serialize>(common: &Common, doc: &T, summary: &str) -> Result<(), Failure> {
    let json = to_json(doc);
    if let Some(path) = &common.out {
        write_file(path, &json)?;
    }
    if common.json {
        print!("{json}");
    } else {
        print!("{summary}");
    }
    Ok(())
}
