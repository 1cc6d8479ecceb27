//! Central bases of `H_n` and the matrices relating them.

mod checks;
mod oracle;

pub use checks::{
    class_intersection_matrix, diagram_checks, solomon_identity_check, solomon_polynomials,
    DiagramReport, SolomonPolynomials,
};
pub use oracle::gamma_oracle;

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::characters::{diagonal_matrix, DiagonalKind};
use crate::coeff::Coeff;
use crate::combi::{partitions, zeta_permutation, Partition, SymGroup, MAX_N};
use crate::error::{Error, Result};
use crate::hecke::{
    jm_element, longest_square, normalize, signed_sum, subgroup_conjugation_sum, HeckeElement,
    JmKind, SignedKind,
};
use crate::symfunc::{transition_matrix, Basis, QMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyKind {
    /// Geck-Rouquier basis.
    Gr,
    /// `sum_{w in S_n} T_w zeta_lambda T_{w^-1}`.
    ClassSum,
    /// `N_lambda(1)`.
    N1,
    /// `N_lambda(T_{omega_lambda}^2)`.
    #[serde(rename = "ntomega")]
    NTomega,
    /// `N_lambda(e_{lambda natural})`, products of nonzero JM elements per block.
    Jones,
    Box,
    Nabla,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 7] = [
        FamilyKind::Gr,
        FamilyKind::ClassSum,
        FamilyKind::N1,
        FamilyKind::NTomega,
        FamilyKind::Jones,
        FamilyKind::Box,
        FamilyKind::Nabla,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::Gr => "gr",
            FamilyKind::ClassSum => "class_sum",
            FamilyKind::N1 => "n1",
            FamilyKind::NTomega => "ntomega",
            FamilyKind::Jones => "jones",
            FamilyKind::Box => "box",
            FamilyKind::Nabla => "nabla",
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        FamilyKind::ALL
            .into_iter()
            .find(|k| k.name() == s.to_ascii_lowercase())
            .ok_or_else(|| Error::InvalidArgument(format!("unknown family `{s}`")))
    }
}

/// A family of central elements indexed by `partitions(n)`.
#[derive(Clone, Debug)]
pub struct CentralFamily {
    pub n: usize,
    pub kind: FamilyKind,
    pub elements: Vec<(Partition, HeckeElement)>,
}

impl CentralFamily {
    pub fn get(&self, lambda: &Partition) -> Option<&HeckeElement> {
        self.elements
            .iter()
            .find(|(p, _)| p == lambda)
            .map(|(_, h)| h)
    }

    pub fn labels(&self) -> Vec<Partition> {
        self.elements.iter().map(|(p, _)| p.clone()).collect()
    }
}

/// Element of the Young subalgebra `H(S_lambda)` that gets normalized.
pub fn family_seed(kind: FamilyKind, lambda: &Partition) -> HeckeElement {
    let comp = lambda.as_composition();
    let n = lambda.size();
    match kind {
        FamilyKind::N1 | FamilyKind::Gr | FamilyKind::ClassSum => HeckeElement::one(n),
        FamilyKind::NTomega => longest_square(&comp),
        FamilyKind::Jones => {
            let blocks: Vec<HeckeElement> = lambda
                .iter()
                .map(|&k| {
                    let mut h = HeckeElement::one(k);
                    for j in 2..=k {
                        h = &h * &jm_element(JmKind::X, j, k).expect("index in range");
                    }
                    h
                })
                .collect();
            HeckeElement::direct_product(&blocks)
        }
        FamilyKind::Box => signed_sum(&comp, SignedKind::Box),
        FamilyKind::Nabla => signed_sum(&comp, SignedKind::Nabla),
    }
}

fn build_family(n: usize, kind: FamilyKind) -> Result<CentralFamily> {
    let parts = partitions(n);
    let elements: Vec<(Partition, HeckeElement)> = match kind {
        FamilyKind::Gr => {
            let n1 = central_family(n, FamilyKind::N1)?;
            let inv = expected_transition(n, FamilyKind::N1)
                .expect("n1 formula")
                .inverse()?;
            parts
                .par_iter()
                .enumerate()
                .map(|(i, lambda)| {
                    let mut g = HeckeElement::zero(n);
                    for (j, (_, h)) in n1.elements.iter().enumerate() {
                        let c = inv.get(i, j);
                        if !c.is_zero() {
                            g += &h.scale(c);
                        }
                    }
                    (lambda.clone(), g)
                })
                .collect()
        }
        FamilyKind::ClassSum => {
            let full = crate::combi::Composition::new(vec![n])?;
            parts
                .par_iter()
                .map(|lambda| {
                    let zeta = HeckeElement::basis(&zeta_permutation(&lambda.as_composition()));
                    (
                        lambda.clone(),
                        subgroup_conjugation_sum(&full, &zeta).expect("sizes agree"),
                    )
                })
                .collect()
        }
        _ => parts
            .par_iter()
            .map(|lambda| {
                let seed = family_seed(kind, lambda);
                (
                    lambda.clone(),
                    normalize(&lambda.as_composition(), &seed)
                        .expect("seed lies in the Young subalgebra"),
                )
            })
            .collect(),
    };
    Ok(CentralFamily { n, kind, elements })
}

type FamilyCache = HashMap<(usize, FamilyKind), Arc<CentralFamily>>;

fn family_cache() -> &'static Mutex<FamilyCache> {
    static CACHE: OnceLock<Mutex<FamilyCache>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The family `kind` of central elements of `H_n`, memoized.
pub fn central_family(n: usize, kind: FamilyKind) -> Result<Arc<CentralFamily>> {
    if n == 0 || n > MAX_N {
        return Err(Error::TooLarge { n, max: MAX_N });
    }
    if let Some(hit) = family_cache().lock().unwrap().get(&(n, kind)) {
        return Ok(hit.clone());
    }
    let fam = Arc::new(build_family(n, kind)?);
    family_cache()
        .lock()
        .unwrap()
        .insert((n, kind), fam.clone());
    Ok(fam)
}

pub fn geck_rouquier_basis(n: usize) -> Result<Arc<CentralFamily>> {
    central_family(n, FamilyKind::Gr)
}

/// `(g, zeta_mu)` for every `mu`: the coefficients of `g` in the
/// Geck-Rouquier basis.
pub fn gamma_coordinates(g: &HeckeElement) -> Vec<Coeff> {
    partitions(g.n())
        .iter()
        .map(|mu| g.coeff(&zeta_permutation(&mu.as_composition())).clone())
        .collect()
}

pub fn decompose_central(g: &HeckeElement) -> Result<Vec<(Partition, Coeff)>> {
    if !g.is_central() {
        return Err(Error::NotCentral);
    }
    Ok(partitions(g.n())
        .into_iter()
        .zip(gamma_coordinates(g))
        .collect())
}

/// `sum_lambda c_lambda Gamma_lambda`.
pub fn recompose(n: usize, coords: &[Coeff]) -> Result<HeckeElement> {
    let gr = geck_rouquier_basis(n)?;
    let mut out = HeckeElement::zero(n);
    for ((_, g), c) in gr.elements.iter().zip(coords) {
        if !c.is_zero() {
            out += &g.scale(c);
        }
    }
    Ok(out)
}

/// Rows: family elements; columns: Geck-Rouquier index.
pub fn family_transition(n: usize, kind: FamilyKind) -> Result<QMatrix> {
    let fam = central_family(n, kind)?;
    let parts = partitions(n);
    let rows: Vec<Vec<Coeff>> = fam
        .elements
        .iter()
        .map(|(_, h)| gamma_coordinates(h))
        .collect();
    QMatrix::new(parts.clone(), parts, rows)
}

/// The closed formula for [`family_transition`], where one is known.
pub fn expected_transition(n: usize, kind: FamilyKind) -> Option<QMatrix> {
    let d = diagonal_matrix(n, DiagonalKind::D);
    let d_inv = d.inverse().expect("diagonal is invertible");
    let d1_inv = diagonal_matrix(n, DiagonalKind::D1)
        .inverse()
        .expect("diagonal is invertible");
    let t = |a, b| (*transition_matrix(n, a, b)).clone();
    let jones = &(&d_inv * &t(Basis::P, Basis::M)) * &d;
    Some(match kind {
        FamilyKind::Gr => QMatrix::identity(n),
        FamilyKind::ClassSum => return None,
        FamilyKind::N1 => &t(Basis::E, Basis::M) * &d,
        FamilyKind::NTomega => &t(Basis::H, Basis::M) * &d,
        FamilyKind::Jones => jones,
        FamilyKind::Box => &(&t(Basis::H, Basis::P) * &d1_inv) * &jones,
        FamilyKind::Nabla => &(&t(Basis::E, Basis::P) * &d1_inv) * &jones,
    })
}

/// Francis's characterization of `Gamma`: specialization to the class sum
/// at `q = 1`, and coefficient `delta` on minimal-length class elements.
pub fn verify_francis(family: &CentralFamily) -> bool {
    let n = family.n;
    let g = SymGroup::get(n);
    let types: Vec<Partition> = (0..g.order()).map(|r| g.perm(r).cycle_type()).collect();
    let mut min_len: HashMap<&Partition, usize> = HashMap::new();
    for (r, ty) in types.iter().enumerate() {
        let e = min_len.entry(ty).or_insert(usize::MAX);
        *e = (*e).min(g.length(r));
    }
    let one = crate::coeff::rat(1, 1);
    family.elements.iter().all(|(lambda, gamma)| {
        let Ok(at_one) = gamma.evaluate(&one) else {
            return false;
        };
        (0..g.order()).all(|r| {
            let in_class = &types[r] == lambda;
            let expected = if in_class {
                Coeff::one()
            } else {
                Coeff::zero()
            };
            if *at_one.coeff_rank(r) != expected {
                return false;
            }
            g.length(r) != min_len[&types[r]] || *gamma.coeff_rank(r) == expected
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn n1_row_22() {
        let m = family_transition(4, FamilyKind::N1).unwrap();
        let q = Coeff::big_q();
        let row = m.row(2);
        assert_eq!(row[2], q.pow(2));
        assert_eq!(row[3], &Coeff::from_int(2) * &q);
        assert_eq!(row[4], Coeff::from_int(6));
        assert_eq!(m, expected_transition(4, FamilyKind::N1).unwrap());
    }

    #[test]
    fn families_match_formulas_small() {
        for n in 1..=4 {
            for kind in FamilyKind::ALL {
                let fam = central_family(n, kind).unwrap();
                assert!(
                    fam.elements.iter().all(|(_, h)| h.is_central()),
                    "{kind} at {n}"
                );
                if let Some(e) = expected_transition(n, kind) {
                    assert_eq!(family_transition(n, kind).unwrap(), e, "{kind} at {n}");
                }
            }
        }
    }

    #[test]
    fn francis_and_top_gamma() {
        for n in 1..=4 {
            let gr = geck_rouquier_basis(n).unwrap();
            assert!(verify_francis(&gr));
            let mut prod = HeckeElement::one(n);
            for j in 2..=n {
                prod = &prod * &jm_element(JmKind::X, j, n).unwrap();
            }
            assert_eq!(gr.get(&Partition::new(vec![n]).unwrap()).unwrap(), &prod);
        }
    }

    #[test]
    fn decomposition_round_trip() {
        let h = central_family(3, FamilyKind::NTomega).unwrap();
        let g = &h.elements[1].1;
        let coords: Vec<Coeff> = decompose_central(g)
            .unwrap()
            .into_iter()
            .map(|(_, c)| c)
            .collect();
        assert_eq!(&recompose(3, &coords).unwrap(), g);
        assert_eq!(
            decompose_central(&HeckeElement::generator(3, 1)).unwrap_err(),
            Error::NotCentral
        );
    }
}
