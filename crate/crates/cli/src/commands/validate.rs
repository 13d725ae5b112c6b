use serde::Serialize;

use jones_genus2::jones::{validate_generators, RepDefinition};
use jones_genus2::words::RelationCheck;

use crate::args::Common;
use crate::output::{emit, Failure, Header, RepInfo};
use crate::repsource::{builtin_rep, load_generators, BUILTIN_SOURCE};

#[derive(Serialize)]
struct ValidateDoc {
    header: Header,
    relations: Vec<RelationCheck>,
    determinants: Vec<String>,
    /// Common determinant when it is `±1`.
    determinant_sign: Option<i64>,
    status: &'static str,
    failure: Option<String>,
}

pub fn run(common: &Common) -> Result<(), Failure> {
    let (gens, info) = match &common.rep {
        Some(path) => {
            let (doc, gens) = load_generators(path)?;
            let info = RepInfo {
                source: path.display().to_string(),
                dim: doc.dim,
                normalization: doc.normalization,
            };
            (gens, info)
        }
        None => {
            let rep: RepDefinition = builtin_rep()?;
            let info = RepInfo::new(BUILTIN_SOURCE.into(), &rep);
            (rep.generators().to_vec(), info)
        }
    };
    let validation = validate_generators(&gens);
    let verdict = validation.verdict();
    let doc = ValidateDoc {
        header: Header::new("validate", common, info),
        relations: validation.relations.checks.clone(),
        determinants: validation
            .determinants
            .iter()
            .map(ToString::to_string)
            .collect(),
        determinant_sign: validation.determinant_sign().map(|s| s.value()),
        status: if verdict.is_ok() { "PASS" } else { "FAIL" },
        failure: verdict.as_ref().err().map(ToString::to_string),
    };

    let mut text = String::new();
    if let Some(n) = &doc.header.representation.normalization {
        text.push_str(&format!(
            "normalization: eta = {}, a = {}, m = {}\n",
            n.eta, n.a, n.m
        ));
    }
    for check in &doc.relations {
        let mark = if check.passed { "pass" } else { "FAIL" };
        text.push_str(&format!("{mark}  {}\n", check.name));
    }
    for (i, d) in doc.determinants.iter().enumerate() {
        text.push_str(&format!("det c{} = {d}\n", i + 1));
    }
    match &doc.failure {
        None => text.push_str("PASS\n"),
        Some(f) => text.push_str(&format!("FAIL {f}\n")),
    }
    emit(common, &doc, &text)?;
    match verdict {
        Ok(_) => Ok(()),
        Err(e) => Err(Failure::Check(e.to_string())),
    }
}
