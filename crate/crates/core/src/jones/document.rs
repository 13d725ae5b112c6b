use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::rep::check_shape;
use super::{validate_generators, JonesError, Normalization, Provenance, RepDefinition};
use crate::algebra::{LaurentPoly, Sign, SquareMatrix};

pub const DOCUMENT_VARIABLE: &str = "u";

/// Serialized Laurent polynomial: `[exponent, "coefficient"]` pairs in
/// increasing exponent order.
type EntryDoc = Vec<(i64, String)>;

/// On-disk form of a representation definition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RepDocument {
    pub dim: usize,
    pub variable: String,
    pub generators: Vec<Vec<Vec<EntryDoc>>>,
    pub normalization: Option<DocNormalization>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DocNormalization {
    pub eta: Sign,
    pub a: i64,
    pub m: i64,
}

impl From<Normalization> for DocNormalization {
    fn from(n: Normalization) -> Self {
        Self {
            eta: n.eta,
            a: n.a,
            m: n.m,
        }
    }
}

impl From<DocNormalization> for Normalization {
    fn from(n: DocNormalization) -> Self {
        Self {
            eta: n.eta,
            a: n.a,
            m: n.m,
        }
    }
}

fn entry_to_doc(p: &LaurentPoly) -> EntryDoc {
    p.terms().map(|(e, c)| (e, c.to_string())).collect()
}

fn entry_from_doc(
    entry: &EntryDoc,
    g: usize,
    i: usize,
    j: usize,
) -> Result<LaurentPoly, JonesError> {
    let mut terms = Vec::with_capacity(entry.len());
    for (e, c) in entry {
        let c: BigInt = c.trim().parse().map_err(|_| {
            JonesError::Schema(format!(
                "generator {g} entry ({i},{j}): bad coefficient '{c}'"
            ))
        })?;
        terms.push((*e, c));
    }
    Ok(LaurentPoly::from_terms(terms))
}

impl RepDefinition {
    pub fn to_document(&self) -> RepDocument {
        RepDocument {
            dim: self.dim(),
            variable: DOCUMENT_VARIABLE.to_string(),
            generators: self
                .generators()
                .iter()
                .map(|g| {
                    g.rows()
                        .map(|row| row.iter().map(entry_to_doc).collect())
                        .collect()
                })
                .collect(),
            normalization: self.normalization().map(Into::into),
        }
    }
}

/// Parses the generator matrices of a document, checking only its shape.
pub fn generators_from_document(
    doc: &RepDocument,
) -> Result<Vec<SquareMatrix<LaurentPoly>>, JonesError> {
    if doc.variable != DOCUMENT_VARIABLE {
        return Err(JonesError::Schema(format!(
            "variable must be \"{DOCUMENT_VARIABLE}\", found \"{}\"",
            doc.variable
        )));
    }
    if doc.dim == 0 {
        return Err(JonesError::Schema("dim must be positive".into()));
    }
    let mut gens = Vec::with_capacity(doc.generators.len());
    for (g, rows) in doc.generators.iter().enumerate() {
        if rows.len() != doc.dim || rows.iter().any(|r| r.len() != doc.dim) {
            return Err(JonesError::Schema(format!(
                "generator {} is not {d}x{d}",
                g + 1,
                d = doc.dim
            )));
        }
        let mut parsed = Vec::with_capacity(doc.dim);
        for (i, row) in rows.iter().enumerate() {
            let row = row
                .iter()
                .enumerate()
                .map(|(j, e)| entry_from_doc(e, g + 1, i + 1, j + 1))
                .collect::<Result<Vec<_>, _>>()?;
            parsed.push(row);
        }
        gens.push(SquareMatrix::from_rows(parsed).expect("shape checked"));
    }
    check_shape(&gens, doc.dim)?;
    Ok(gens)
}

/// Rebuilds and fully re-validates a representation from its document.
pub fn rep_from_document(doc: &RepDocument) -> Result<RepDefinition, JonesError> {
    let gens = generators_from_document(doc)?;
    validate_generators(&gens).verdict()?;
    RepDefinition::new(gens, doc.normalization.map(Into::into), Provenance::Loaded)
}

pub fn rep_from_json(text: &str) -> Result<RepDefinition, JonesError> {
    let doc: RepDocument =
        serde_json::from_str(text).map_err(|e| JonesError::Schema(e.to_string()))?;
    rep_from_document(&doc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jones::build_rep;

    fn doc() -> RepDocument {
        build_rep(Sign::Plus, -4, 5).to_document()
    }

    #[test]
    fn round_trip() {
        let rep = build_rep(Sign::Plus, -4, 5);
        let text = serde_json::to_string(&rep.to_document()).unwrap();
        let back = rep_from_json(&text).unwrap();
        assert_eq!(back.generators(), rep.generators());
        assert_eq!(back.normalization(), rep.normalization());
        assert_eq!(back.provenance(), Provenance::Loaded);
        assert!(text.contains("\"eta\":1"));
    }

    #[test]
    fn perturbed_entry_is_a_relation_failure() {
        let mut d = doc();
        let entry = &mut d.generators[1][2][3];
        entry.push((0, "1".into()));
        assert!(matches!(
            rep_from_document(&d),
            Err(JonesError::RelationFailure { .. })
        ));
    }

    #[test]
    fn scaled_generators_fail_the_determinant() {
        let rep = build_rep(Sign::Plus, -4, 5);
        let u = LaurentPoly::var();
        let gens: Vec<_> = rep.generators().iter().map(|g| g.scale(&u)).collect();
        let scaled = RepDefinition::new(gens, None, Provenance::Constructed).unwrap();
        match rep_from_document(&scaled.to_document()) {
            Err(JonesError::DetNotPm1 {
                generator,
                determinant,
            }) => {
                assert_eq!(generator, 1);
                assert_eq!(determinant, "u^5");
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn schema_errors() {
        let mut d = doc();
        d.variable = "t".into();
        assert!(matches!(rep_from_document(&d), Err(JonesError::Schema(_))));
        let mut d = doc();
        d.generators.pop();
        assert!(matches!(rep_from_document(&d), Err(JonesError::Schema(_))));
        let mut d = doc();
        d.generators[0][0][0] = vec![(0, "x".into())];
        assert!(matches!(rep_from_document(&d), Err(JonesError::Schema(_))));
        assert!(matches!(
            rep_from_json("{\"dim\": 5}"),
            Err(JonesError::Schema(_))
        ));
        assert!(matches!(
            rep_from_json(
                "{\"dim\":5,\"variable\":\"u\",\"generators\":[],\"normalization\":null,\"x\":1}"
            ),
            Err(JonesError::Schema(_))
        ));
    }
}
