//! Structural identities checked exhaustively for a given `n`. Each check
//! returns `None` on success and a witness otherwise.

use rayon::prelude::*;

use super::Witness;
use crate::center::{central_family, geck_rouquier_basis, verify_francis, FamilyKind};
use crate::characters::SeminormalRep;
use crate::coeff::Coeff;
use crate::combi::{
    compositions, coset_representatives, factorial, partitions, zeta_permutation, Composition,
    CosetMode, CosetSide, Permutation, RibbonShape, SymGroup,
};
use crate::error::Result;
use crate::hecke::{
    e_generating_product, jm_element, normalize, ribbon_sum, xi_monomial, GeneratingKind,
    HeckeElement, JmKind,
};

pub type Outcome = Result<Option<Witness>>;

fn element_witness(location: String, expected: &HeckeElement, actual: &HeckeElement) -> Witness {
    Witness {
        location,
        expected: expected.to_string(),
        actual: actual.to_string(),
    }
}

fn coeff_witness(location: String, expected: &Coeff, actual: &Coeff) -> Witness {
    Witness {
        location,
        expected: expected.to_string(),
        actual: actual.to_string(),
    }
}

/// `T_i^2 = Q T_i + 1`, braid relations and far commutation.
pub fn braid_quadratic(n: usize) -> Outcome {
    let t = |i| HeckeElement::generator(n, i);
    for i in 1..n {
        let lhs = &t(i) * &t(i);
        let rhs = &t(i).scale(&Coeff::big_q()) + &HeckeElement::one(n);
        if lhs != rhs {
            return Ok(Some(element_witness(format!("T{i}^2"), &rhs, &lhs)));
        }
        for j in i + 1..n {
            let (lhs, rhs) = if j == i + 1 {
                (&(&t(i) * &t(j)) * &t(i), &(&t(j) * &t(i)) * &t(j))
            } else {
                (&t(i) * &t(j), &t(j) * &t(i))
            };
            if lhs != rhs {
                return Ok(Some(element_witness(
                    format!("relation between T{i} and T{j}"),
                    &rhs,
                    &lhs,
                )));
            }
        }
    }
    Ok(None)
}

/// The multiplicative JM elements pairwise commute.
pub fn jm_commute(n: usize) -> Outcome {
    let xi: Vec<HeckeElement> = (1..=n)
        .map(|i| jm_element(JmKind::Xi, i, n))
        .collect::<Result<_>>()?;
    for a in 0..n {
        for b in a + 1..n {
            let ab = &xi[a] * &xi[b];
            let ba = &xi[b] * &xi[a];
            if ab != ba {
                return Ok(Some(element_witness(
                    format!("xi{} xi{}", a + 1, b + 1),
                    &ba,
                    &ab,
                )));
            }
        }
    }
    Ok(None)
}

pub fn families_central(n: usize) -> Outcome {
    for kind in FamilyKind::ALL {
        let fam = central_family(n, kind)?;
        for (lambda, h) in &fam.elements {
            for i in 1..n {
                let right = h.mul_generator_right(i);
                let left = h.mul_generator_left(i);
                if right != left {
                    return Ok(Some(element_witness(
                        format!("{kind}[{lambda}] against T{i}"),
                        &left,
                        &right,
                    )));
                }
            }
        }
    }
    Ok(None)
}

pub fn francis(n: usize) -> Outcome {
    let gr = geck_rouquier_basis(n)?;
    Ok((!verify_francis(&gr)).then(|| Witness {
        location: format!("Geck-Rouquier basis at n = {n}"),
        expected: "class sum at q = 1, delta on minimal-length elements".into(),
        actual: "violated".into(),
    }))
}

/// `(T_w, zeta_J T_w)` is `Q^{n - l(J)}` when `w` has every recoil `i`
/// with `T_i` in `zeta_J` (maximal in `S_J w` for left multiplication) and
/// zero otherwise, for every composition and permutation.
pub fn scalar_zeta(n: usize) -> Outcome {
    let g = SymGroup::get(n);
    for comp in compositions(n) {
        let word = zeta_permutation(&comp).reduced_word();
        let maximal: Vec<bool> = {
            let mut v = vec![false; g.order()];
            for w in coset_representatives(n, &comp, CosetMode::Max, CosetSide::Left) {
                v[g.rank_of(&w)] = true;
            }
            v
        };
        let gens = comp.generators();
        let top = Coeff::big_q().pow((n - comp.len()) as i32);
        for r in 0..g.order() {
            let tw = HeckeElement::basis_rank(n, r);
            let mut prod = tw.clone();
            for &i in word.iter().rev() {
                prod = prod.mul_generator_left(i);
            }
            let actual = tw.scalar_product(&prod);
            let recoils = g.perm(r).recoils();
            let by_recoil = gens.iter().all(|i| recoils.contains(i));
            let expected = if maximal[r] {
                top.clone()
            } else {
                Coeff::zero()
            };
            if actual != expected || by_recoil != maximal[r] {
                return Ok(Some(coeff_witness(
                    format!("J = {comp:?}, w = {}", g.perm(r)),
                    &expected,
                    &actual,
                )));
            }
        }
    }
    Ok(None)
}

/// Diagonal of left multiplication by `zeta_J` in the 0-Hecke algebra
/// `T_i^2 = Q T_i`.
fn zero_hecke_diagonal(n: usize, word: &[usize]) -> Vec<Coeff> {
    let g = SymGroup::get(n);
    (0..g.order())
        .map(|r| {
            let mut cur = r;
            let mut power = 0;
            for &i in word.iter().rev() {
                if g.is_left_ascent(cur, i) {
                    cur = g.left_mul(cur, i);
                } else {
                    power += 1;
                }
            }
            if cur == r {
                Coeff::big_q().pow(power)
            } else {
                Coeff::zero()
            }
        })
        .collect()
}

/// The diagonal of left multiplication by `zeta_J` agrees with the 0-Hecke
/// diagonal.
pub fn zero_hecke(n: usize) -> Outcome {
    let g = SymGroup::get(n);
    for comp in compositions(n) {
        let word = zeta_permutation(&comp).reduced_word();
        let expected = zero_hecke_diagonal(n, &word);
        for (r, e) in expected.iter().enumerate() {
            let mut prod = HeckeElement::basis_rank(n, r);
            for &i in word.iter().rev() {
                prod = prod.mul_generator_left(i);
            }
            let actual = prod.coeff_rank(r);
            if actual != e {
                return Ok(Some(coeff_witness(
                    format!("J = {comp:?}, w = {}", g.perm(r)),
                    e,
                    actual,
                )));
            }
        }
    }
    Ok(None)
}

/// Every 0-1 vector list compatible with `comp`, first bit of each block zero.
fn compatible_uu(comp: &Composition) -> Vec<Vec<Vec<u8>>> {
    let mut out: Vec<Vec<Vec<u8>>> = vec![Vec::new()];
    for &k in comp.iter() {
        let mut next = Vec::new();
        for prefix in &out {
            for mask in 0..(1u32 << (k - 1)) {
                let mut u = vec![0u8; k];
                for (b, slot) in u.iter_mut().enumerate().skip(1) {
                    *slot = ((mask >> (b - 1)) & 1) as u8;
                }
                let mut p = prefix.clone();
                p.push(u);
                next.push(p);
            }
        }
        out = next;
    }
    out
}

/// `(N_I(xi^uu), zeta_J) Q^{l(J) - n}` counts the permutations `w sigma(uu)`,
/// `w` minimal in `w S_I`, having every recoil `i` with `T_i` in `zeta_J`.
pub fn normalized_monomials(n: usize) -> Outcome {
    let targets: Vec<(Composition, Permutation, Vec<usize>)> = compositions(n)
        .into_iter()
        .map(|j| {
            let z = zeta_permutation(&j);
            let gens = j.generators();
            (j, z, gens)
        })
        .collect();
    let jobs: Vec<(Composition, Vec<Vec<u8>>)> = compositions(n)
        .into_iter()
        .flat_map(|i| compatible_uu(&i).into_iter().map(move |uu| (i.clone(), uu)))
        .collect();
    let failures: Vec<Option<Witness>> = jobs
        .par_iter()
        .map(|(i, uu)| -> Result<Option<Witness>> {
            let mono = xi_monomial(uu, i)?;
            let normalized = normalize(i, &mono.element)?;
            let shifted: Vec<Permutation> =
                coset_representatives(n, i, CosetMode::Min, CosetSide::Right)
                    .iter()
                    .map(|w| w.compose(&mono.sigma))
                    .collect();
            for (j, z, gens) in &targets {
                let scale = Coeff::big_q().pow(j.len() as i32 - n as i32);
                let actual = &normalized.coeff(z).clone() * &scale;
                let count = shifted
                    .iter()
                    .filter(|v| {
                        let rec = v.recoils();
                        gens.iter().all(|g| rec.contains(g))
                    })
                    .count();
                let expected = Coeff::from_int(count as i64);
                if actual != expected {
                    return Ok(Some(coeff_witness(
                        format!("I = {i:?}, uu = {uu:?}, J = {j:?}"),
                        &expected,
                        &actual,
                    )));
                }
            }
            Ok(None)
        })
        .collect::<Result<_>>()?;
    Ok(failures.into_iter().flatten().next())
}

/// `sum_{w in S_n/S_J} T_w E_J(z)` expands as `sum_I z^I R[hooks]`.
pub fn solomon_module(n: usize) -> Outcome {
    for comp in compositions(n) {
        let reps = coset_representatives(n, &comp, CosetMode::Min, CosetSide::Right);
        let all = HeckeElement::from_terms(n, reps.into_iter().map(|w| (w, Coeff::one())))?;
        let product = e_generating_product(&comp, GeneratingKind::T);
        let mut exps: Vec<Vec<usize>> = vec![Vec::new()];
        for &k in comp.iter() {
            exps = exps
                .into_iter()
                .flat_map(|e| (0..k).map(move |i| [e.clone(), vec![i]].concat()))
                .collect();
        }
        for e in exps {
            let hooks = e
                .iter()
                .zip(comp.iter())
                .map(|(&i, &k)| RibbonShape::hook(i, k))
                .collect();
            let expected = ribbon_sum(&RibbonShape::new(hooks));
            let actual = &all * &product.coeff(&e);
            if actual != expected {
                return Ok(Some(element_witness(
                    format!("J = {comp:?}, z^{e:?}"),
                    &expected,
                    &actual,
                )));
            }
        }
        if product
            .terms()
            .keys()
            .any(|e| e.iter().zip(comp.iter()).any(|(&i, &k)| i >= k))
        {
            return Ok(Some(Witness {
                location: format!("J = {comp:?}"),
                expected: "exponents below the block sizes".into(),
                actual: "exponent out of range".into(),
            }));
        }
    }
    Ok(None)
}

/// Every ribbon with `n` boxes and at least two components, as its list of
/// row compositions.
fn disconnected_ribbons(n: usize) -> Vec<RibbonShape> {
    // Gap between consecutive boxes: 0 same row, 1 new row, 2 new component.
    let mut out = Vec::new();
    let gaps = n.saturating_sub(1);
    for code in 0..3usize.pow(gaps as u32) {
        let mut c = code;
        let mut comps: Vec<Vec<usize>> = vec![vec![1]];
        for _ in 0..gaps {
            match c % 3 {
                0 => *comps.last_mut().unwrap().last_mut().unwrap() += 1,
                1 => comps.last_mut().unwrap().push(1),
                _ => comps.push(vec![1]),
            }
            c /= 3;
        }
        if comps.len() >= 2 {
            out.push(RibbonShape::new(
                comps
                    .into_iter()
                    .map(|p| Composition::new(p).expect("positive parts"))
                    .collect(),
            ));
        }
    }
    out
}

/// `R[.., [A, a], [b, B], ..] = R[.., [A, a, b, B], ..] + R[.., [A, a + b, B], ..]`.
pub fn ribbon_concatenation(n: usize) -> Outcome {
    for shape in disconnected_ribbons(n) {
        for k in 0..shape.0.len() - 1 {
            let lhs = ribbon_sum(&shape);
            let rhs = &ribbon_sum(&shape.glue(k, false)) + &ribbon_sum(&shape.glue(k, true));
            if lhs != rhs {
                return Ok(Some(element_witness(
                    format!("ribbon {:?} glued at {k}", shape.0),
                    &rhs,
                    &lhs,
                )));
            }
        }
    }
    Ok(None)
}

/// In every seminormal representation `xi_i` acts diagonally by
/// `q^{2 c(i, t)}`.
pub fn seminormal_diagonal(n: usize) -> Outcome {
    for shape in partitions(n) {
        let rep = SeminormalRep::new(&shape);
        for i in 0..n {
            let word: Vec<usize> = (1..=i).rev().chain(1..=i).collect();
            let m = rep.word_matrix(&word);
            for (a, t) in rep.tableaux().iter().enumerate() {
                for (b, actual) in m[a].iter().enumerate() {
                    let expected = if a == b {
                        Coeff::q_pow(2 * t.content(i + 1) as i32)
                    } else {
                        Coeff::zero()
                    };
                    if *actual != expected {
                        return Ok(Some(coeff_witness(
                            format!("xi{} on {shape}, entry ({a},{b})", i + 1),
                            &expected,
                            actual,
                        )));
                    }
                }
            }
        }
    }
    Ok(None)
}

/// `sum_lambda f_lambda^2 = n!` with `f_lambda` the seminormal dimensions.
pub fn dimension_squares(n: usize) -> Outcome {
    let sum: u128 = partitions(n)
        .iter()
        .map(|p| (SeminormalRep::new(p).dim() as u128).pow(2))
        .sum();
    let expected = factorial(n);
    Ok((sum != expected).then(|| Witness {
        location: format!("n = {n}"),
        expected: expected.to_string(),
        actual: sum.to_string(),
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_pass_small() {
        let checks: [fn(usize) -> Outcome; 11] = [
            braid_quadratic,
            jm_commute,
            families_central,
            francis,
            scalar_zeta,
            zero_hecke,
            normalized_monomials,
            solomon_module,
            ribbon_concatenation,
            seminormal_diagonal,
            dimension_squares,
        ];
        for n in 1..=4 {
            for (k, c) in checks.iter().enumerate() {
                assert_eq!(c(n).unwrap(), None, "check {k} at n = {n}");
            }
        }
    }

    #[test]
    fn ribbon_enumeration() {
        assert_eq!(disconnected_ribbons(3).len(), 5);
        assert_eq!(compatible_uu(&"32".parse().unwrap()).len(), 8);
    }
}
