use std::collections::BTreeMap;

use serde::Serialize;

use super::{family_transition, FamilyKind};
use crate::characters::{diagonal_matrix, DiagonalKind};
use crate::coeff::Coeff;
use crate::combi::{
    compositions, coset_representatives, factorial, partitions, zeta_permutation, Composition,
    CosetMode, CosetSide, Partition, SymGroup,
};
use crate::error::{Error, Result};
use crate::hecke::{
    descent_sum, e_generating_product, longest_square, normalize, GeneratingKind, HeckeElement,
};
use crate::symfunc::{hook_generating_product, transition_matrix, Basis, QMatrix};

/// The three z-polynomials compared by [`solomon_identity_check`], keyed by
/// z-exponent vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolomonPolynomials {
    pub descent_pairing: BTreeMap<Vec<usize>, Coeff>,
    pub normalized_pairing: BTreeMap<Vec<usize>, Coeff>,
    pub hook_coefficient: BTreeMap<Vec<usize>, Coeff>,
}

impl SolomonPolynomials {
    pub fn agree(&self) -> bool {
        self.descent_pairing == self.normalized_pairing
            && self.normalized_pairing == self.hook_coefficient
    }
}

fn insert_nonzero(map: &mut BTreeMap<Vec<usize>, Coeff>, key: Vec<usize>, c: Coeff) {
    if !c.is_zero() {
        map.insert(key, c);
    }
}

/// `(sum_{w in S_n/S_J} T_w E_J(z), L[K])`, `(N_J(E^xi_J(z)), zeta_K) Q^{l(K)-n}` and the
/// coefficient of `m_K` in the hook product for `J`.
pub fn solomon_polynomials(j: &Composition, k: &Composition) -> Result<SolomonPolynomials> {
    let n = j.size();
    if k.size() != n {
        return Err(Error::InvalidArgument(format!(
            "{j} and {k} have different sizes"
        )));
    }
    let reps = coset_representatives(n, j, CosetMode::Min, CosetSide::Right);
    let all = HeckeElement::from_terms(n, reps.into_iter().map(|w| (w, Coeff::one())))?;
    let left = descent_sum(k);
    let zeta_k = HeckeElement::basis(&zeta_permutation(k));
    let scale = Coeff::big_q().pow(k.len() as i32 - n as i32);
    let mut out = SolomonPolynomials {
        descent_pairing: BTreeMap::new(),
        normalized_pairing: BTreeMap::new(),
        hook_coefficient: BTreeMap::new(),
    };
    for (e, h) in e_generating_product(j, GeneratingKind::T).terms() {
        insert_nonzero(
            &mut out.descent_pairing,
            e.clone(),
            (&all * h).scalar_product(&left),
        );
    }
    for (e, h) in e_generating_product(j, GeneratingKind::Xi).terms() {
        let normalized = normalize(j, h)?;
        insert_nonzero(
            &mut out.normalized_pairing,
            e.clone(),
            &normalized.scalar_product(&zeta_k) * &scale,
        );
    }
    let sorted = k.sorted();
    for (e, f) in hook_generating_product(j) {
        insert_nonzero(&mut out.hook_coefficient, e, f.coeff(&sorted));
    }
    Ok(out)
}

pub fn solomon_identity_check(j: &Composition, k: &Composition) -> Result<bool> {
    Ok(solomon_polynomials(j, k)?.agree())
}

/// `n! |C_mu cap S_lambda| / (|C_mu| |S_lambda|)`, rows `mu`, columns `lambda`.
pub fn class_intersection_matrix(n: usize) -> QMatrix {
    let g = SymGroup::get(n);
    let parts = partitions(n);
    let types: Vec<Partition> = (0..g.order()).map(|r| g.perm(r).cycle_type()).collect();
    let class_size = |mu: &Partition| types.iter().filter(|t| *t == mu).count() as i64;
    QMatrix::from_fn(parts.clone(), parts.clone(), |i, j| {
        let mu = &parts[i];
        let comp = parts[j].as_composition();
        let inter = (0..g.order())
            .filter(|&r| &types[r] == mu && g.perm(r).in_young_subgroup(&comp))
            .count() as i64;
        let young: u128 = comp.iter().map(|&x| factorial(x)).product();
        let num = factorial(n) as i64 * inter;
        let den = class_size(mu) * young as i64;
        Coeff::from_rational(crate::coeff::rat(num, den))
    })
}

/// Outcome of [`diagram_checks`]: one named boolean per identity.
#[derive(Clone, Debug, Serialize)]
pub struct DiagramReport {
    pub n: usize,
    pub checks: Vec<(String, bool)>,
}

impl DiagramReport {
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

/// Signed indicator of refinements: `sum (-1)^{n - l(I)} x_I` over `I` finer
/// than `J`.
fn alternating<F: FnMut(&Composition) -> HeckeElement>(j: &Composition, mut f: F) -> HeckeElement {
    let n = j.size();
    let mut acc = HeckeElement::zero(n);
    for i in j.refinements() {
        let x = f(&i);
        if (n - i.len()).is_multiple_of(2) {
            acc += &x;
        } else {
            acc -= &x;
        }
    }
    acc
}

/// The identities summarized by the diagram of bases: the `H2E` edge, the
/// labeled edges, the alternating coset sums and the alternating
/// normalization identity.
pub fn diagram_checks(n: usize) -> Result<DiagramReport> {
    let t = |a, b| (*transition_matrix(n, a, b)).clone();
    let d = diagonal_matrix(n, DiagonalKind::D);
    let d_inv = d.inverse()?;
    let d1 = diagonal_matrix(n, DiagonalKind::D1);
    let d1_inv = d1.inverse()?;
    let coords = |k| family_transition(n, k);
    let mut checks = Vec::new();

    let omega = coords(FamilyKind::NTomega)?;
    let n1 = coords(FamilyKind::N1)?;
    let h2e = &omega * &n1.inverse()?;
    checks.push((
        "ntomega to n1 is H2E".to_string(),
        h2e == t(Basis::H, Basis::E),
    ));
    checks.push((
        "H2E is self-inverse".to_string(),
        (&h2e * &h2e).is_identity(),
    ));
    checks.push((
        "H2E is free of q".to_string(),
        h2e.entries()
            .iter()
            .flatten()
            .all(|c| c.constant_value().is_some()),
    ));

    let edges: Vec<(&str, FamilyKind, FamilyKind, QMatrix)> = vec![
        (
            "nabla to ntomega",
            FamilyKind::Nabla,
            FamilyKind::NTomega,
            &(&(&t(Basis::E, Basis::P) * &d1_inv) * &d_inv) * &t(Basis::P, Basis::H),
        ),
        (
            "n1 to jones",
            FamilyKind::N1,
            FamilyKind::Jones,
            &t(Basis::E, Basis::P) * &d,
        ),
        (
            "box to jones",
            FamilyKind::Box,
            FamilyKind::Jones,
            &t(Basis::H, Basis::P) * &d1_inv,
        ),
        (
            "jones to gr",
            FamilyKind::Jones,
            FamilyKind::Gr,
            &(&d_inv * &t(Basis::P, Basis::M)) * &d,
        ),
        (
            "ntomega to box",
            FamilyKind::NTomega,
            FamilyKind::Box,
            &(&(&t(Basis::H, Basis::P) * &d) * &d1) * &t(Basis::P, Basis::H),
        ),
    ];
    for (name, src, dst, edge) in edges {
        let lhs = coords(src)?;
        let rhs = &edge * &coords(dst)?;
        checks.push((name.to_string(), lhs == rhs));
    }

    let mut cos_ok = true;
    let mut norm_ok = true;
    for j in compositions(n) {
        let cos = |i: &Composition| {
            let reps = coset_representatives(n, i, CosetMode::Min, CosetSide::Right);
            HeckeElement::from_terms(n, reps.into_iter().map(|w| (w, Coeff::one())))
                .expect("sizes agree")
        };
        let max = coset_representatives(n, &j, CosetMode::Max, CosetSide::Right);
        let max = HeckeElement::from_terms(n, max.into_iter().map(|w| (w, Coeff::one())))?;
        cos_ok &= alternating(&j, cos) == max;
        let lhs = alternating(&j, |i| {
            normalize(i, &HeckeElement::one(n)).expect("identity is in every subalgebra")
        });
        norm_ok &= lhs == normalize(&j, &longest_square(&j))?;
    }
    checks.push((
        "alternating coset sums give maximal representatives".to_string(),
        cos_ok,
    ));
    checks.push(("alternating normalization identity".to_string(), norm_ok));

    let mut count_ok = true;
    let h2e = t(Basis::H, Basis::E);
    for (a, lambda) in partitions(n).iter().enumerate() {
        for (b, mu) in partitions(n).iter().enumerate() {
            let signed: i64 = lambda
                .as_composition()
                .refinements()
                .iter()
                .filter(|i| &i.sorted() == mu)
                .map(|i| {
                    if (n - i.len()).is_multiple_of(2) {
                        1
                    } else {
                        -1
                    }
                })
                .sum();
            count_ok &= *h2e.get(a, b) == Coeff::from_int(signed);
        }
    }
    checks.push(("signed refinement counts give H2E".to_string(), count_ok));
    Ok(DiagramReport { n, checks })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(s: &str) -> Composition {
        s.parse().unwrap()
    }

    #[test]
    fn solomon_examples() {
        let polys = solomon_polynomials(&c("32"), &c("41")).unwrap();
        assert!(polys.agree(), "{polys:?}");
        let expected: BTreeMap<Vec<usize>, Coeff> =
            [(vec![2, 0], 1), (vec![1, 1], 1), (vec![2, 1], 2)]
                .into_iter()
                .map(|(k, v)| (k, Coeff::from_int(v)))
                .collect();
        assert_eq!(polys.hook_coefficient, expected);
        let polys = solomon_polynomials(&c("32"), &c("32")).unwrap();
        assert!(polys.agree());
        let expected: BTreeMap<Vec<usize>, Coeff> = [
            (vec![1, 0], 1),
            (vec![1, 1], 2),
            (vec![2, 0], 1),
            (vec![2, 1], 3),
        ]
        .into_iter()
        .map(|(k, v)| (k, Coeff::from_int(v)))
        .collect();
        assert_eq!(polys.hook_coefficient, expected);
    }

    #[test]
    fn footnote_matrix_is_p2m() {
        for n in 1..=4 {
            assert_eq!(
                class_intersection_matrix(n),
                *transition_matrix(n, Basis::P, Basis::M)
            );
        }
    }

    #[test]
    fn diagram_small() {
        for n in 1..=4 {
            let report = diagram_checks(n).unwrap();
            assert!(report.all_pass(), "{:?}", report.first_failure());
        }
    }
}
