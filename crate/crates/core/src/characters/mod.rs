//! Irreducible characters of `H_n` and the character matrices of the
//! central families.

mod rep;

pub use rep::{
    character, identity, mat_mul, seminormal_rep, trace, trace_table, DenseMatrix, SeminormalRep,
};

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::center::{central_family, FamilyKind};
use crate::coeff::{Coeff, Rational};
use crate::combi::{factorial, partitions, zeta_permutation, Partition};
use crate::error::{Error, Result};
use crate::hecke::{frobenius_phi, upsilon, HeckeElement};
use crate::symfunc::{modified_complete_product, transition_matrix, Basis, QMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DiagonalKind {
    /// `Q^{n - l(lambda)}`.
    D,
    /// `prod 1/[lambda_i]`.
    D1,
    /// `q^{sum of contents} n! prod_{hooks} [h]/h`.
    D2,
    /// `Q^{l(lambda) - n} prod [lambda_i] / z_lambda`.
    D3,
}

pub fn diagonal_entry(lambda: &Partition, kind: DiagonalKind) -> Coeff {
    let n = lambda.size() as i32;
    let len = lambda.len() as i32;
    let qint_product = || {
        lambda
            .iter()
            .fold(Coeff::one(), |acc, &k| &acc * &Coeff::qint(k as i32))
    };
    match kind {
        DiagonalKind::D => Coeff::big_q().pow(n - len),
        DiagonalKind::D1 => qint_product().recip().expect("q-integers are nonzero"),
        DiagonalKind::D2 => {
            let contents: i64 = lambda.contents().iter().sum();
            let mut c = Coeff::q_pow(contents as i32)
                .scale(&Rational::from_integer(factorial(lambda.size()).into()));
            for h in lambda.hooks() {
                c = &c * &Coeff::qint(h as i32);
                c = c.scale(&crate::coeff::rat(1, h as i64));
            }
            c
        }
        DiagonalKind::D3 => {
            let z = Coeff::from_rational(Rational::new(1.into(), lambda.z().into()));
            &(&Coeff::big_q().pow(len - n) * &qint_product()) * &z
        }
    }
}

pub fn diagonal_matrix(n: usize, kind: DiagonalKind) -> QMatrix {
    QMatrix::diagonal(n, |lambda| diagonal_entry(lambda, kind))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TableFamily {
    Zeta,
    Upsilon,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TableMethod {
    /// Traces in the seminormal representations.
    Trace,
    /// Schur expansions of the Frobenius images.
    Ram,
}

macro_rules! lowercase_enum {
    ($ty:ident { $($var:ident => $s:literal),* }) => {
        impl FromStr for $ty {
            type Err = Error;
            fn from_str(s: &str) -> Result<Self> {
                match s.to_ascii_lowercase().as_str() {
                    $($s => Ok($ty::$var),)*
                    _ => Err(Error::InvalidArgument(format!("unknown value `{s}`"))),
                }
            }
        }
        impl fmt::Display for $ty {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(match self { $($ty::$var => $s,)* })
            }
        }
    };
}
lowercase_enum!(TableFamily { Zeta => "zeta", Upsilon => "upsilon" });
lowercase_enum!(TableMethod { Trace => "trace", Ram => "ram" });
lowercase_enum!(DiagonalKind { D => "d", D1 => "d1", D2 => "d2", D3 => "d3" });

fn table_element(family: TableFamily, lambda: &Partition) -> HeckeElement {
    match family {
        TableFamily::Zeta => HeckeElement::basis(&zeta_permutation(&lambda.as_composition())),
        TableFamily::Upsilon => upsilon(&lambda.as_composition()),
    }
}

/// Character table: rows irreducibles `mu`, columns `zeta_lambda` or
/// `Upsilon_lambda`. The Ram route reads `chi^mu` as `(-1)^n` times the
/// coefficient of `s_{mu'}` in the Frobenius image.
pub fn char_table(n: usize, family: TableFamily, method: TableMethod) -> QMatrix {
    let parts = partitions(n);
    let columns: Vec<Vec<Coeff>> = match method {
        TableMethod::Trace => parts
            .iter()
            .map(|lambda| {
                let h = table_element(family, lambda);
                parts.iter().map(|mu| character(mu, &h)).collect()
            })
            .collect(),
        TableMethod::Ram => {
            let sign = if n.is_multiple_of(2) {
                Coeff::one()
            } else {
                Coeff::from_int(-1)
            };
            parts
                .iter()
                .map(|lambda| {
                    let image = match family {
                        TableFamily::Zeta => modified_complete_product(lambda),
                        TableFamily::Upsilon => frobenius_phi(&upsilon(&lambda.as_composition())),
                    };
                    let s = image.to_basis(Basis::S);
                    parts
                        .iter()
                        .map(|mu| &s.coeff(&mu.conjugate()) * &sign)
                        .collect()
                })
                .collect()
        }
    };
    QMatrix::from_fn(parts.clone(), parts, |i, j| columns[j][i].clone())
}

/// Rows: family elements; columns: irreducibles.
pub fn family_character_matrix(n: usize, kind: FamilyKind) -> Result<QMatrix> {
    let fam = central_family(n, kind)?;
    let parts = partitions(n);
    let rows: Vec<Vec<Coeff>> = fam
        .elements
        .iter()
        .map(|(_, h)| parts.iter().map(|mu| character(mu, h)).collect())
        .collect();
    QMatrix::new(parts.clone(), parts, rows)
}

/// `(P2S)^tr D_3 P2M D`.
pub fn factored_char_table(n: usize) -> QMatrix {
    let p2s = transition_matrix(n, Basis::P, Basis::S).transpose();
    let left = &p2s * &diagonal_matrix(n, DiagonalKind::D3);
    let right = &*transition_matrix(n, Basis::P, Basis::M) * &diagonal_matrix(n, DiagonalKind::D);
    &left * &right
}

/// Named outcomes of the character-matrix identities.
#[derive(Clone, Debug, Serialize)]
pub struct CharacterReport {
    pub n: usize,
    pub checks: Vec<(String, bool)>,
}

impl CharacterReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|(_, ok)| *ok)
    }

    pub fn first_failure(&self) -> Option<&str> {
        self.checks
            .iter()
            .find(|(_, ok)| !ok)
            .map(|(s, _)| s.as_str())
    }
}

pub fn character_matrix_checks(n: usize) -> Result<CharacterReport> {
    let t = |a, b| (*transition_matrix(n, a, b)).clone();
    let d2 = diagonal_matrix(n, DiagonalKind::D2);
    let mut checks = Vec::new();
    let jones = family_character_matrix(n, FamilyKind::Jones)?;
    let expected = &(&diagonal_matrix(n, DiagonalKind::D1) * &t(Basis::P, Basis::S)) * &d2;
    checks.push((
        "jones characters are D1 P2S D2".to_string(),
        jones == expected,
    ));
    let boxes = family_character_matrix(n, FamilyKind::Box)?;
    checks.push((
        "box characters are H2S D2".to_string(),
        boxes == &t(Basis::H, Basis::S) * &d2,
    ));
    let nablas = family_character_matrix(n, FamilyKind::Nabla)?;
    checks.push((
        "nabla characters are E2S D2".to_string(),
        nablas == &t(Basis::E, Basis::S) * &d2,
    ));
    let car = char_table(n, TableFamily::Zeta, TableMethod::Trace);
    checks.push((
        "Car factorization".to_string(),
        car == factored_char_table(n),
    ));
    let classical = t(Basis::P, Basis::S).transpose();
    checks.push((
        "Car at q = 1 is the classical table".to_string(),
        car.evaluate(&crate::coeff::rat(1, 1))? == classical,
    ));
    let parts = partitions(n);
    let conj: Vec<usize> = parts
        .iter()
        .map(|mu| {
            parts
                .iter()
                .position(|p| *p == mu.conjugate())
                .expect("conjugate exists")
        })
        .collect();
    let exchanged = (0..parts.len()).all(|i| {
        (0..parts.len()).all(|j| *nablas.get(i, j) == boxes.get(i, conj[j]).bar_involution())
    });
    checks.push((
        "box and nabla exchange under q to -1/q".to_string(),
        exchanged,
    ));
    Ok(CharacterReport { n, checks })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn routes_agree() {
        for n in 1..=4 {
            for family in [TableFamily::Zeta, TableFamily::Upsilon] {
                assert_eq!(
                    char_table(n, family, TableMethod::Trace),
                    char_table(n, family, TableMethod::Ram),
                    "{n} {family}"
                );
            }
        }
    }

    #[test]
    fn upsilon_table_is_signed_kostka() {
        for n in 1..=4 {
            let e2s = transition_matrix(n, Basis::E, Basis::S).transpose();
            let sign = Coeff::from_int(if n % 2 == 0 { 1 } else { -1 });
            assert_eq!(
                char_table(n, TableFamily::Upsilon, TableMethod::Trace),
                e2s.scale(&sign)
            );
        }
    }

    #[test]
    fn matrix_checks_small() {
        for n in 1..=4 {
            let r = character_matrix_checks(n).unwrap();
            assert!(r.all_pass(), "n = {n}: {:?}", r.first_failure());
        }
    }

    #[test]
    fn d2_at_four() {
        let d2 = diagonal_matrix(4, DiagonalKind::D2);
        let expected = &Coeff::q_pow(6) * &(&(&Coeff::qint(2) * &Coeff::qint(3)) * &Coeff::qint(4));
        assert_eq!(*d2.get(0, 0), expected);
        let d = diagonal_matrix(4, DiagonalKind::D);
        assert_eq!(*d.get(0, 0), Coeff::big_q().pow(3));
    }
}
