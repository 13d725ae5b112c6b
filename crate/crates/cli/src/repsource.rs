use std::fs;
use std::path::Path;

use jones_genus2::algebra::{LaurentPoly, SquareMatrix};
use jones_genus2::jones::{
    default_search, generators_from_document, rep_from_document, rep_from_json, JonesError,
    RepDefinition, RepDocument,
};

use crate::args::Common;
use crate::output::{to_json, Failure, RepInfo};

/// The searched built-in representation is cached here, relative to the
/// working directory.
pub const CACHE_FILE: &str = ".jones-genus2-rep.json";

pub const BUILTIN_SOURCE: &str = "built-in (searched)";

pub fn read_document(path: &Path) -> Result<RepDocument, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Env(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| Failure::Env(format!("SCHEMA_ERROR in {}: {e}", path.display())))
}

/// Document at `path` and its generator matrices, checked for shape only.
pub fn load_generators(
    path: &Path,
) -> Result<(RepDocument, Vec<SquareMatrix<LaurentPoly>>), Failure> {
    let doc = read_document(path)?;
    let gens = generators_from_document(&doc)
        .map_err(|e| Failure::Env(format!("{}: {e}", path.display())))?;
    Ok((doc, gens))
}

fn jones_failure(e: JonesError) -> Failure {
    match e {
        JonesError::Schema(_) => Failure::Env(e.to_string()),
        _ => Failure::Check(e.to_string()),
    }
}

/// The built-in representation: read from the cache when it validates,
/// otherwise searched and cached.
pub fn builtin_rep() -> Result<RepDefinition, Failure> {
    if let Ok(text) = fs::read_to_string(CACHE_FILE) {
        if let Ok(rep) = rep_from_json(&text) {
            return Ok(rep);
        }
        eprintln!("warning: ignoring invalid cache {CACHE_FILE}");
    }
    let rep = default_search().map_err(jones_failure)?;
    if let Err(e) = fs::write(CACHE_FILE, to_json(&rep.to_document())) {
        eprintln!("warning: cannot write cache {CACHE_FILE}: {e}");
    }
    Ok(rep)
}

/// A fully validated representation from `--rep` or the built-in source.
pub fn resolve_rep(common: &Common) -> Result<(RepDefinition, RepInfo), Failure> {
    match &common.rep {
        Some(path) => {
            let doc = read_document(path)?;
            let rep = rep_from_document(&doc)
                .map_err(|e| annotate(jones_failure(e), &path.display().to_string()))?;
            let info = RepInfo::new(path.display().to_string(), &rep);
            Ok((rep, info))
        }
        None => {
            let rep = builtin_rep()?;
            let info = RepInfo::new(BUILTIN_SOURCE.into(), &rep);
            Ok((rep, info))
        }
    }
}

fn annotate(f: Failure, source: &str) -> Failure {
    match f {
        Failure::Check(m) => Failure::Check(format!("{source}: {m}")),
        Failure::Env(m) => Failure::Env(format!("{source}: {m}")),
    }
}
