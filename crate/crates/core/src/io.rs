//! JSON documents: bound quivers, character tables and embeddings.
//!
//! Quiver documents list vertices and arrows sorted by id and relations as
//! arrow-id sequences with `"num/den"` coefficients, so serializing the same
//! bound quiver always gives the same bytes.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::character::{CharacterTable, ConjugacyClass, Irreducible, RepCharacter};
use crate::cyclotomic::CyclotomicNumber;
use crate::mckay::AbelianMcKaySpec;
use crate::quiver::{
    validate_relation, Arrow, ArrowId, BoundQuiver, PathCombo, Quiver, QuiverError, RawRelation,
    Vertex, VertexId, VertexLabel,
};
use crate::rational::{format_fraction, parse_rational};

#[derive(Debug, Error)]
pub enum IoError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Quiver(#[from] QuiverError),
    #[error("{0}")]
    Format(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationDoc {
    pub source: VertexId,
    pub target: VertexId,
    pub paths: Vec<Vec<ArrowId>>,
    pub coefficients: Vec<String>,
}

/// Serialized form of a bound quiver. `relations` is the ρ side of a McKay
/// quiver, `dual_relations` the θ side when both are carried.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuiverDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub header: Option<AbelianMcKaySpec>,
    pub vertices: Vec<Vertex>,
    pub arrows: Vec<Arrow>,
    #[serde(default)]
    pub relations: Vec<RelationDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dual_relations: Option<Vec<RelationDoc>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nakayama: Option<Vec<VertexId>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nakayama_arrows: Option<Vec<ArrowId>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub translation: Option<Vec<(VertexId, VertexId)>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub loewy_length: Option<usize>,
}

/// A bound quiver together with an optional second relation set over the
/// same quiver and the abelian group it came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Document {
    pub bound: BoundQuiver,
    pub dual_relations: Option<Vec<PathCombo>>,
    pub header: Option<AbelianMcKaySpec>,
}

impl Document {
    pub fn new(bound: BoundQuiver) -> Self {
        Document {
            bound,
            dual_relations: None,
            header: None,
        }
    }

    pub fn to_doc(&self) -> QuiverDocument {
        let b = &self.bound;
        QuiverDocument {
            header: self.header.clone(),
            vertices: b.quiver.vertices().to_vec(),
            arrows: b.quiver.arrows().to_vec(),
            relations: b.relations.iter().map(relation_doc).collect(),
            dual_relations: self
                .dual_relations
                .as_ref()
                .map(|rs| rs.iter().map(relation_doc).collect()),
            nakayama: b.nakayama.clone(),
            nakayama_arrows: b.nakayama_arrows.clone(),
            translation: b
                .translation
                .as_ref()
                .map(|t| t.iter().map(|(x, y)| (*x, *y)).collect()),
            loewy_length: b.loewy_length,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_doc()).expect("documents serialize");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self, IoError> {
        let doc: QuiverDocument = serde_json::from_str(text)?;
        Document::from_doc(doc)
    }

    pub fn from_doc(doc: QuiverDocument) -> Result<Self, IoError> {
        let mut q = Quiver::new();
        for (k, v) in doc.vertices.iter().enumerate() {
            if v.id.0 != k {
                return Err(IoError::Format(format!(
                    "vertex ids must be 0..n in order; found {} at position {k}",
                    v.id.0
                )));
            }
            q.add_vertex(v.label.clone());
        }
        for (k, a) in doc.arrows.iter().enumerate() {
            if a.id.0 != k {
                return Err(IoError::Format(format!(
                    "arrow ids must be 0..n in order; found {} at position {k}",
                    a.id.0
                )));
            }
            q.add_arrow(a.source, a.target, a.label.clone())?;
        }
        let relations = doc
            .relations
            .iter()
            .map(|r| read_relation(&q, r))
            .collect::<Result<Vec<_>, _>>()?;
        let dual_relations = doc
            .dual_relations
            .as_ref()
            .map(|rs| {
                rs.iter()
                    .map(|r| read_relation(&q, r))
                    .collect::<Result<Vec<_>, _>>()
            })
            .transpose()?;
        let mut bound = BoundQuiver::with_relations(q, relations);
        bound.nakayama = doc.nakayama;
        bound.nakayama_arrows = doc.nakayama_arrows;
        bound.translation = doc
            .translation
            .map(|t| t.into_iter().collect::<BTreeMap<_, _>>());
        bound.loewy_length = doc.loewy_length;
        bound.validate()?;
        Ok(Document {
            bound,
            dual_relations,
            header: doc.header,
        })
    }
}

fn relation_doc(c: &PathCombo) -> RelationDoc {
    let (paths, coefficients) = c
        .terms()
        .iter()
        .map(|(p, h)| (p.arrows().to_vec(), format_fraction(h)))
        .unzip();
    RelationDoc {
        source: c.source(),
        target: c.target(),
        paths,
        coefficients,
    }
}

fn read_relation(q: &Quiver, r: &RelationDoc) -> Result<PathCombo, IoError> {
    if r.paths.len() != r.coefficients.len() {
        return Err(IoError::Format(
            "paths and coefficients differ in length".into(),
        ));
    }
    let terms = r
        .paths
        .iter()
        .zip(&r.coefficients)
        .map(|(p, h)| {
            parse_rational(h)
                .map(|h| (p.clone(), h))
                .map_err(|e| IoError::Format(e.to_string()))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let raw = RawRelation {
        source: Some(r.source),
        target: Some(r.target),
        terms,
    };
    Ok(validate_relation(q, &raw)?)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassDoc {
    pub name: String,
    pub size: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IrreducibleDoc {
    pub name: String,
    pub values: Vec<String>,
}

/// Character table file: values are cyclotomic strings such as
/// `"-1 + 2*z(3)^1"`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableDocument {
    pub group_order: u64,
    pub classes: Vec<ClassDoc>,
    pub irreducibles: Vec<IrreducibleDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub det_values: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rep_character: Option<Vec<String>>,
}

fn parse_values(values: &[String]) -> Result<Vec<CyclotomicNumber>, IoError> {
    values
        .iter()
        .map(|v| {
            v.parse()
                .map_err(|e: crate::cyclotomic::CyclotomicError| IoError::Format(e.to_string()))
        })
        .collect()
}

/// Reads a table file; irreducibles are labelled by name. The returned
/// character carries the determinant values when both are present.
pub fn read_table(text: &str) -> Result<(CharacterTable, Option<RepCharacter>), IoError> {
    let doc: TableDocument = serde_json::from_str(text)?;
    let irreducibles = doc
        .irreducibles
        .iter()
        .map(|s| {
            Ok(Irreducible {
                name: s.name.clone(),
                label: VertexLabel::Name(s.name.clone()),
                values: parse_values(&s.values)?,
            })
        })
        .collect::<Result<Vec<_>, IoError>>()?;
    let table = CharacterTable {
        group_order: doc.group_order,
        classes: doc
            .classes
            .iter()
            .map(|c| ConjugacyClass {
                name: c.name.clone(),
                size: c.size,
            })
            .collect(),
        irreducibles,
        abelian_orders: None,
    };
    let det = doc.det_values.as_deref().map(parse_values).transpose()?;
    let chi = doc
        .rep_character
        .as_deref()
        .map(parse_values)
        .transpose()?
        .map(|values| RepCharacter { values, det });
    Ok((table, chi))
}

pub fn write_table(table: &CharacterTable, chi: Option<&RepCharacter>) -> String {
    let strings = |v: &[CyclotomicNumber]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>();
    let doc = TableDocument {
        group_order: table.group_order,
        classes: table
            .classes
            .iter()
            .map(|c| ClassDoc {
                name: c.name.clone(),
                size: c.size,
            })
            .collect(),
        irreducibles: table
            .irreducibles
            .iter()
            .map(|s| IrreducibleDoc {
                name: s.name.clone(),
                values: strings(&s.values),
            })
            .collect(),
        det_values: chi.and_then(|c| c.det.as_deref()).map(strings),
        rep_character: chi.map(|c| strings(&c.values)),
    };
    let mut s = serde_json::to_string_pretty(&doc).expect("tables serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::character::s3_table;
    use crate::constructions::t_algebra;
    use crate::mckay::abelian_bound_mckay;

    #[test]
    fn quiver_documents_round_trip() {
        let t = t_algebra(3, 2).unwrap();
        let doc = Document::new(t.clone());
        let text = doc.to_json();
        let back = Document::from_json(&text).unwrap();
        assert_eq!(back.bound, t);
        assert_eq!(back.to_json(), text);

        let spec = AbelianMcKaySpec::new(vec![2, 2], vec![vec![1, 0], vec![0, 1]]);
        let m = abelian_bound_mckay(&spec).unwrap();
        let doc = Document {
            bound: m.rho_side.clone(),
            dual_relations: Some(m.theta_side.relations.clone()),
            header: Some(spec),
        };
        let back = Document::from_json(&doc.to_json()).unwrap();
        assert_eq!(back, doc);
    }

    #[test]
    fn rejects_bad_documents() {
        let bad = r#"{"vertices":[{"id":1,"label":{"kind":"residue","value":0}}],"arrows":[]}"#;
        assert!(matches!(Document::from_json(bad), Err(IoError::Format(_))));
        let bad = r#"{"vertices":[{"id":0,"label":{"kind":"residue","value":0}}],
            "arrows":[{"id":0,"source":0,"target":3,"label":{"kind":"named","value":"a"}}]}"#;
        assert!(matches!(Document::from_json(bad), Err(IoError::Quiver(_))));
    }

    #[test]
    fn tables_round_trip() {
        let t = s3_table();
        let chi = RepCharacter {
            values: t.irreducibles[2].values.clone(),
            det: Some(t.irreducibles[1].values.clone()),
        };
        let text = write_table(&t, Some(&chi));
        let (back, back_chi) = read_table(&text).unwrap();
        assert_eq!(back, t);
        assert_eq!(back_chi, Some(chi));
    }
}
