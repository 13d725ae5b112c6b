use std::fs;

use rayon::prelude::*;
use serde::Serialize;

use jones_genus2::filtration::{analyze, CaseTag, FiltrationReportDoc};
use jones_genus2::words::{builtin_catalog, parse_catalog, parse_word, MCGWord};

use crate::args::Common;
use crate::output::{emit, Failure, Header};
use crate::repsource::resolve_rep;

#[derive(Serialize)]
struct AnalyzeDoc {
    header: Header,
    results: Vec<Entry>,
    summary: Summary,
}

#[derive(Serialize)]
struct Entry {
    expression: String,
    case: CaseTag,
    /// `OK`, `CHECK_FAILED`, or an error code such as `NOT_TORELLI`.
    status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    report: Option<FiltrationReportDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
}

#[derive(Serialize)]
struct Summary {
    total: usize,
    ok: usize,
    failed: Vec<String>,
}

/// Words from `--word` and `--catalog`, or the built-in catalog when
/// neither is given.
fn collect_words(common: &Common) -> Result<Vec<(String, MCGWord)>, Failure> {
    let mut out = Vec::new();
    for text in &common.words {
        let w = parse_word(text).map_err(|e| Failure::Env(format!("word '{text}': {e}")))?;
        out.push((text.trim().to_string(), w));
    }
    if let Some(path) = &common.catalog {
        let text = fs::read_to_string(path)
            .map_err(|e| Failure::Env(format!("cannot read {}: {e}", path.display())))?;
        let entries =
            parse_catalog(&text).map_err(|e| Failure::Env(format!("{}: {e}", path.display())))?;
        out.extend(entries.into_iter().map(|e| (e.expression, e.word)));
    }
    if common.words.is_empty() && common.catalog.is_none() {
        out.extend(
            builtin_catalog()
                .into_iter()
                .map(|e| (e.expression, e.word)),
        );
    }
    Ok(out)
}

pub fn run(common: &Common) -> Result<(), Failure> {
    let words = collect_words(common)?;
    let (rep, info) = resolve_rep(common)?;
    let jobs: Vec<(&String, &MCGWord, CaseTag)> = words
        .iter()
        .flat_map(|(text, w)| common.case.cases().into_iter().map(move |c| (text, w, c)))
        .collect();
    let results: Vec<Entry> = jobs
        .par_iter()
        .map(
            |&(text, w, case)| match analyze(&rep, w, case, common.order) {
                Ok(r) => {
                    let status = if r.all_checks_pass() {
                        "OK"
                    } else {
                        "CHECK_FAILED"
                    };
                    Entry {
                        expression: text.clone(),
                        case,
                        status: status.into(),
                        report: Some(r.into()),
                        error: None,
                    }
                }
                Err(e) => Entry {
                    expression: text.clone(),
                    case,
                    status: e.code().into(),
                    report: None,
                    error: Some(e.to_string()),
                },
            },
        )
        .collect();

    let failed: Vec<String> = results
        .iter()
        .filter(|e| e.status != "OK")
        .map(|e| format!("{} [{}]: {}", e.expression, e.case, e.status))
        .collect();
    let summary = Summary {
        total: results.len(),
        ok: results.len() - failed.len(),
        failed,
    };

    let mut text = String::new();
    for e in &results {
        match &e.report {
            Some(r) => text.push_str(&format!(
                "{:<5} {:<14} depth {}  trace {}  det-lemma {}  trivial {}  {}\n",
                e.case.label(),
                e.status,
                r.depth,
                r.trace,
                r.det_lemma_ok,
                r.trivial_projection,
                e.expression
            )),
            None => text.push_str(&format!(
                "{:<5} {:<14} {}  ({})\n",
                e.case.label(),
                e.status,
                e.expression,
                e.error.as_deref().unwrap_or("")
            )),
        }
    }
    text.push_str(&format!(
        "{}/{} analyses passed\n",
        summary.ok, summary.total
    ));

    let all_ok = summary.failed.is_empty();
    let n_failed = summary.failed.len();
    let doc = AnalyzeDoc {
        header: Header::new("analyze", common, info),
        results,
        summary,
    };
    emit(common, &doc, &text)?;
    if all_ok {
        Ok(())
    } else {
        Err(Failure::Check(format!("{n_failed} analyses failed")))
    }
}
