//! Canonical JSON form of an [`AlgebraTable`].
//!
//! Coefficients are written as strings so that rationals survive exactly.
//! Products are listed as `[i, j, k, coefficient]` in increasing `(i, j, k)`
//! order; zero products are omitted. Writing a parsed document gives back the
//! same bytes.

use serde::{Deserialize, Serialize};

use super::table::{AlgebraTable, BasisElement};
use crate::error::{Error, Result};
use crate::field::{Field, FieldDescriptor};
use crate::quiver::Arrow;

pub const FORMAT: &str = "wsa-algebra-table";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ArrowRecord {
    pub id: String,
    pub source: String,
    pub target: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BasisRecord {
    pub label: String,
    pub source: String,
    pub target: String,
    pub length: usize,
    pub word: Vec<String>,
    pub scale: String,
    pub socle: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TableDocument {
    pub format: String,
    pub version: String,
    pub field: String,
    pub kind: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub name: Option<String>,
    pub dimension: usize,
    pub vertices: Vec<String>,
    pub arrows: Vec<ArrowRecord>,
    pub basis: Vec<BasisRecord>,
    pub products: Vec<(usize, usize, usize, String)>,
}

impl TableDocument {
    pub fn field_descriptor(&self) -> Result<FieldDescriptor> {
        self.field.parse()
    }
}

pub fn to_document<F: Field>(table: &AlgebraTable<F>) -> TableDocument {
    let f = &table.field;
    let d = table.dim();
    let vname = |v: usize| table.vertices[v].clone();
    let arrows = table
        .arrows
        .iter()
        .map(|a| ArrowRecord {
            id: a.id.clone(),
            source: vname(a.source),
            target: vname(a.target),
        })
        .collect();
    let basis = table
        .basis
        .iter()
        .enumerate()
        .map(|(i, b)| BasisRecord {
            label: table.label(i),
            source: vname(b.source),
            target: vname(b.target),
            length: b.word.len(),
            word: b.word.iter().map(|&a| table.arrows[a].id.clone()).collect(),
            scale: f.to_string(&b.scale),
            socle: b.is_socle,
        })
        .collect();
    let mut products = Vec::new();
    for i in 0..d {
        for j in 0..d {
            let mut entries: Vec<&(usize, F::Elem)> = table
                .basis_product(i, j)
                .iter()
                .filter(|(_, c)| !f.is_zero(c))
                .collect();
            entries.sort_by_key(|(k, _)| *k);
            for (k, c) in entries {
                products.push((i, j, *k, f.to_string(c)));
            }
        }
    }
    TableDocument {
        format: FORMAT.into(),
        version: VERSION.into(),
        field: f.descriptor().to_string(),
        kind: table.kind.clone(),
        name: table.name.clone(),
        dimension: d,
        vertices: table.vertices.clone(),
        arrows,
        basis,
        products,
    }
}

pub fn to_json<F: Field>(table: &AlgebraTable<F>) -> String {
    let mut s =
        serde_json::to_string_pretty(&to_document(table)).expect("table documents serialize");
    s.push('\n');
    s
}

pub fn parse_document(s: &str) -> Result<TableDocument> {
    let doc: TableDocument =
        serde_json::from_str(s).map_err(|e| Error::Parse(format!("table JSON: {e}")))?;
    if doc.format != FORMAT {
        return Err(Error::Parse(format!(
            "unexpected format tag {:?}",
            doc.format
        )));
    }
    Ok(doc)
}

/// Rebuilds a table. `field` must match the document's field.
pub fn from_document<F: Field>(field: F, doc: &TableDocument) -> Result<AlgebraTable<F>> {
    if field.descriptor() != doc.field_descriptor()? {
        return Err(Error::InvalidInput(format!(
            "document is over {}, not {}",
            doc.field,
            field.descriptor()
        )));
    }
    let vidx = |name: &str| {
        doc.vertices
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::Parse(format!("unknown vertex {name:?}")))
    };
    let mut arrows = Vec::with_capacity(doc.arrows.len());
    for a in &doc.arrows {
        arrows.push(Arrow {
            id: a.id.clone(),
            source: vidx(&a.source)?,
            target: vidx(&a.target)?,
        });
    }
    let aidx = |id: &str| {
        arrows
            .iter()
            .position(|a| a.id == id)
            .ok_or_else(|| Error::Parse(format!("unknown arrow {id:?}")))
    };
    let mut basis = Vec::with_capacity(doc.basis.len());
    for b in &doc.basis {
        let word = b.word.iter().map(|a| aidx(a)).collect::<Result<Vec<_>>>()?;
        if word.len() != b.length {
            return Err(Error::Parse(format!(
                "basis element {:?}: length {} but word has {}",
                b.label,
                b.length,
                word.len()
            )));
        }
        basis.push(BasisElement {
            source: vidx(&b.source)?,
            target: vidx(&b.target)?,
            word,
            scale: field.parse(&b.scale)?,
            is_socle: b.socle,
        });
    }
    let d = basis.len();
    if d != doc.dimension {
        return Err(Error::Parse(format!(
            "dimension {} but {} basis elements",
            doc.dimension, d
        )));
    }
    let mut mult = vec![Vec::new(); d * d];
    for (i, j, k, c) in &doc.products {
        if *i >= d || *j >= d || *k >= d {
            return Err(Error::Parse(format!(
                "product index out of range: ({i}, {j}, {k})"
            )));
        }
        mult[i * d + j].push((*k, field.parse(c)?));
    }
    AlgebraTable::new(
        field,
        doc.kind.clone(),
        doc.name.clone(),
        doc.vertices.clone(),
        arrows,
        basis,
        mult,
    )
}

pub fn from_json<F: Field>(field: F, s: &str) -> Result<AlgebraTable<F>> {
    from_document(field, &parse_document(s)?)
}
