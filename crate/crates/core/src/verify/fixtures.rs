//! Golden matrices embedded at build time.

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::export::MatrixDocument;
use crate::symfunc::QMatrix;

const FILES: &[(&str, &str)] = &[
    ("n1_4", include_str!("../../fixtures/n1_4.json")),
    ("ntomega_5", include_str!("../../fixtures/ntomega_5.json")),
    ("jones_5", include_str!("../../fixtures/jones_5.json")),
    ("car_4", include_str!("../../fixtures/car_4.json")),
    (
        "car_upsilon_4",
        include_str!("../../fixtures/car_upsilon_4.json"),
    ),
    ("fjchar_4", include_str!("../../fixtures/fjchar_4.json")),
    (
        "fjchar_d1_4",
        include_str!("../../fixtures/fjchar_d1_4.json"),
    ),
    (
        "fjchar_p2s_4",
        include_str!("../../fixtures/fjchar_p2s_4.json"),
    ),
    ("d2_4", include_str!("../../fixtures/d2_4.json")),
    (
        "ncarre_h2s_4",
        include_str!("../../fixtures/ncarre_h2s_4.json"),
    ),
    (
        "ncarre_e2s_4",
        include_str!("../../fixtures/ncarre_e2s_4.json"),
    ),
    (
        "ncarre_box_diag_4",
        include_str!("../../fixtures/ncarre_box_diag_4.json"),
    ),
    (
        "ncarre_nabla_diag_4",
        include_str!("../../fixtures/ncarre_nabla_diag_4.json"),
    ),
];

/// A printed entry replaced in `entries` by its corrected value.
#[derive(Clone, Debug, Deserialize, PartialEq, Eq)]
pub struct Erratum {
    pub row: String,
    pub col: String,
    pub printed: String,
    pub corrected: String,
}

#[derive(Clone, Debug, Deserialize)]
pub struct Fixture {
    pub theorem: String,
    pub n: usize,
    pub rows: Vec<String>,
    pub cols: Vec<String>,
    pub entries: Vec<Vec<String>>,
    #[serde(default)]
    pub errata: Vec<Erratum>,
}

impl Fixture {
    pub fn matrix(&self) -> Result<QMatrix> {
        MatrixDocument {
            n: self.n,
            rows: self.rows.clone(),
            cols: self.cols.clone(),
            entries: self.entries.clone(),
        }
        .to_matrix()
    }
}

pub fn fixture_names() -> impl Iterator<Item = &'static str> {
    FILES.iter().map(|(name, _)| *name)
}

pub fn fixture(name: &str) -> Result<Fixture> {
    let src = FILES
        .iter()
        .find(|(k, _)| *k == name)
        .map(|(_, v)| *v)
        .ok_or_else(|| Error::InvalidArgument(format!("no fixture `{name}`")))?;
    serde_json::from_str(src).map_err(|e| Error::Parse {
        pos: e.column(),
        msg: e.to_string(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_fixtures_parse() {
        for name in fixture_names() {
            let f = fixture(name).unwrap();
            let m = f.matrix().unwrap();
            assert_eq!(m.nrows(), f.rows.len(), "{name}");
            for e in &f.errata {
                assert_ne!(e.printed, e.corrected);
            }
        }
    }
}
