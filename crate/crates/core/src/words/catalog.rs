use super::{parse_word, MCGWord, WordError};

/// Sample Torelli words shipped with the crate.
pub const BUILTIN_CATALOG: &str = include_str!("../../data/torelli_catalog.txt");

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    /// 1-based line number in the source text.
    pub line: usize,
    pub expression: String,
    pub word: MCGWord,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("catalog line {line}: {source}")]
pub struct CatalogError {
    pub line: usize,
    #[source]
    pub source: WordError,
}

/// One word expression per line; `#` starts a comment, blank lines are
/// skipped.
pub fn parse_catalog(text: &str) -> Result<Vec<CatalogEntry>, CatalogError> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let expr = raw.split('#').next().unwrap_or("").trim();
        if expr.is_empty() {
            continue;
        }
        let word = parse_word(expr).map_err(|source| CatalogError {
            line: i + 1,
            source,
        })?;
        out.push(CatalogEntry {
            line: i + 1,
            expression: expr.to_string(),
            word,
        });
    }
    Ok(out)
}

pub fn builtin_catalog() -> Vec<CatalogEntry> {
    parse_catalog(BUILTIN_CATALOG).expect("built-in catalog parses")
}
