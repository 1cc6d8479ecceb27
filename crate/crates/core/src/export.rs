//! Text, JSON and CSV renderings of matrices and elements, with parsers
//! for the JSON and CSV forms.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::coeff::{parse_expr, pretty};
use crate::combi::{Partition, Permutation};
use crate::error::{Error, Result};
use crate::hecke::HeckeElement;
use crate::symfunc::QMatrix;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            _ => Err(Error::InvalidArgument(format!("unknown format `{s}`"))),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Text => "text",
            Format::Json => "json",
            Format::Csv => "csv",
        })
    }
}

/// On-disk layout of a matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixDocument {
    pub n: usize,
    pub rows: Vec<String>,
    pub cols: Vec<String>,
    pub entries: Vec<Vec<String>>,
}

impl MatrixDocument {
    pub fn from_matrix(m: &QMatrix, pretty_form: bool) -> Self {
        let n = m
            .rows()
            .first()
            .or(m.cols().first())
            .map_or(0, |p| p.size());
        Self {
            n,
            rows: m.rows().iter().map(|p| p.to_string()).collect(),
            cols: m.cols().iter().map(|p| p.to_string()).collect(),
            entries: m.strings(pretty_form),
        }
    }

    /// Entries may be canonical strings or any expression accepted by
    /// [`parse_expr`].
    pub fn to_matrix(&self) -> Result<QMatrix> {
        let labels = |v: &[String]| {
            v.iter()
                .map(|s| s.parse::<Partition>())
                .collect::<Result<Vec<_>>>()
        };
        let rows = labels(&self.rows)?;
        let cols = labels(&self.cols)?;
        if rows.iter().chain(&cols).any(|p| p.size() != self.n) {
            return Err(Error::InvalidArgument(format!(
                "labels are not partitions of {}",
                self.n
            )));
        }
        let entries = self
            .entries
            .iter()
            .map(|r| r.iter().map(|s| parse_expr(s)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        QMatrix::new(rows, cols, entries)
    }
}

fn json_error(e: serde_json::Error) -> Error {
    Error::Parse {
        pos: e.column(),
        msg: e.to_string(),
    }
}

pub fn matrix_to_json(m: &QMatrix, pretty_form: bool) -> String {
    serde_json::to_string(&MatrixDocument::from_matrix(m, pretty_form)).expect("strings serialize")
}

pub fn matrix_from_json(src: &str) -> Result<QMatrix> {
    let doc: MatrixDocument = serde_json::from_str(src).map_err(json_error)?;
    doc.to_matrix()
}

fn csv_error(e: csv::Error) -> Error {
    Error::Parse {
        pos: e.position().map_or(0, |p| p.byte() as usize),
        msg: e.to_string(),
    }
}

/// Header row `n, col labels...`, then one line per row led by its label.
pub fn matrix_to_csv(m: &QMatrix, pretty_form: bool) -> String {
    let doc = MatrixDocument::from_matrix(m, pretty_form);
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut header = vec![doc.n.to_string()];
    header.extend(doc.cols);
    w.write_record(&header).expect("in-memory write");
    for (label, row) in doc.rows.into_iter().zip(doc.entries) {
        let mut rec = vec![label];
        rec.extend(row);
        w.write_record(&rec).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 input")
}

pub fn matrix_from_csv(src: &str) -> Result<QMatrix> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .from_reader(src.as_bytes());
    let mut records = reader.records();
    let header = records
        .next()
        .ok_or_else(|| Error::Parse {
            pos: 0,
            msg: "empty input".into(),
        })?
        .map_err(csv_error)?;
    let n: usize = header
        .get(0)
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| Error::Parse {
            pos: 0,
            msg: "first header cell must be n".into(),
        })?;
    let cols = header.iter().skip(1).map(String::from).collect();
    let mut rows = Vec::new();
    let mut entries = Vec::new();
    for rec in records {
        let rec = rec.map_err(csv_error)?;
        let mut it = rec.iter().map(String::from);
        rows.push(it.next().unwrap_or_default());
        entries.push(it.collect());
    }
    MatrixDocument {
        n,
        rows,
        cols,
        entries,
    }
    .to_matrix()
}

pub fn export_matrix(m: &QMatrix, format: Format, pretty_form: bool) -> String {
    match format {
        Format::Text => m.to_string(),
        Format::Json => matrix_to_json(m, pretty_form),
        Format::Csv => matrix_to_csv(m, pretty_form),
    }
}

/// `{"[2,1,3]": "q^2", ...}` keyed by one-line notation.
pub fn element_to_json(h: &HeckeElement, pretty_form: bool) -> String {
    let map: BTreeMap<String, String> = h
        .terms()
        .into_iter()
        .map(|(w, c)| {
            (
                w.to_string(),
                if pretty_form {
                    pretty(&c)
                } else {
                    c.to_string()
                },
            )
        })
        .collect();
    serde_json::to_string(&map).expect("strings serialize")
}

pub fn element_from_json(n: usize, src: &str) -> Result<HeckeElement> {
    let map: BTreeMap<String, String> = serde_json::from_str(src).map_err(json_error)?;
    let terms = map
        .iter()
        .map(|(w, c)| Ok((w.parse::<Permutation>()?, parse_expr(c)?)))
        .collect::<Result<Vec<_>>>()?;
    HeckeElement::from_terms(n, terms)
}

/// One `perm,coefficient` line per term.
pub fn element_to_csv(h: &HeckeElement, pretty_form: bool) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["perm", "coeff"]).expect("in-memory write");
    for (perm, c) in h.terms() {
        let c = if pretty_form {
            pretty(&c)
        } else {
            c.to_string()
        };
        w.write_record([perm.to_string(), c])
            .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 input")
}

pub fn export_element(h: &HeckeElement, format: Format, pretty_form: bool) -> String {
    match format {
        Format::Text => {
            if pretty_form {
                h.pretty()
            } else {
                h.to_string()
            }
        }
        Format::Json => element_to_json(h, pretty_form),
        Format::Csv => element_to_csv(h, pretty_form),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::center::{family_transition, FamilyKind};
    use crate::characters::{char_table, TableFamily, TableMethod};

    #[test]
    fn n1_row_in_q() {
        let m = family_transition(4, FamilyKind::N1).unwrap();
        let doc = MatrixDocument::from_matrix(&m, true);
        assert_eq!(doc.entries[2], ["0", "0", "Q^2", "2*Q", "6"]);
        assert_eq!(doc.rows[2], "22");
    }

    #[test]
    fn identity_at_one() {
        let doc = MatrixDocument::from_matrix(&QMatrix::identity(1), false);
        assert_eq!(doc.entries, vec![vec!["1".to_string()]]);
    }

    #[test]
    fn car_entry_forms() {
        let car = char_table(4, TableFamily::Zeta, TableMethod::Trace);
        assert_eq!(car.strings(false)[2][2], "q^2+q^-2");
        assert_eq!(car.strings(true)[2][2], "[4]/[2]");
    }

    #[test]
    fn round_trips() {
        let car = char_table(4, TableFamily::Zeta, TableMethod::Trace);
        for pretty_form in [false, true] {
            let j = matrix_to_json(&car, pretty_form);
            assert_eq!(matrix_from_json(&j).unwrap(), car);
            assert_eq!(
                matrix_to_json(&matrix_from_json(&j).unwrap(), pretty_form),
                j
            );
            let c = matrix_to_csv(&car, pretty_form);
            assert_eq!(matrix_from_csv(&c).unwrap(), car);
            assert_eq!(matrix_to_csv(&matrix_from_csv(&c).unwrap(), pretty_form), c);
        }
        let h = &HeckeElement::generator(3, 1)
            + &HeckeElement::one(3).scale(&crate::coeff::Coeff::big_q());
        let j = element_to_json(&h, false);
        assert_eq!(element_from_json(3, &j).unwrap(), h);
    }
}
