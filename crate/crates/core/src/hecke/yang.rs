use super::element::HeckeElement;
use crate::coeff::Coeff;
use crate::combi::{Permutation, SymGroup};
use crate::error::{Error, Result};

fn spectral_shift(v: &[i64], prefix: &Permutation, i: usize) -> Result<Coeff> {
    let k = v[prefix.at(i + 1) - 1] - v[prefix.at(i) - 1];
    if k == 0 {
        return Err(Error::RepeatedSpectralValue);
    }
    let k = i32::try_from(k)
        .map_err(|_| Error::InvalidArgument("spectral value out of range".into()))?;
    Ok(Coeff::q_pow(k) / Coeff::qint(k))
}

/// `Y_w^v` along a given reduced word of `w`.
pub fn yang_baxter_along(v: &[i64], word: &[usize]) -> Result<HeckeElement> {
    let n = v.len();
    let mut y = HeckeElement::one(n);
    let mut prefix = Permutation::identity(n);
    for &i in word {
        if i == 0 || i >= n {
            return Err(Error::InvalidArgument(format!(
                "generator {i} out of range"
            )));
        }
        let c = spectral_shift(v, &prefix, i)?;
        y = &y.mul_generator_right(i) - &y.scale(&c);
        prefix = prefix.mul_simple_right(i);
    }
    Ok(y)
}

/// Yang-Baxter element `Y_w^v`, built by `Y_{w s_i} = Y_w (T_i - q^k/[k])`
/// with `k = v_{w(i+1)} - v_{w(i)}`.
pub fn yang_baxter(v: &[i64], w: &Permutation) -> Result<HeckeElement> {
    if v.len() != w.n() {
        return Err(Error::InvalidArgument(
            "spectral vector and permutation sizes differ".into(),
        ));
    }
    let mut seen = v.to_vec();
    seen.sort_unstable();
    if seen.windows(2).any(|p| p[0] == p[1]) {
        return Err(Error::RepeatedSpectralValue);
    }
    yang_baxter_along(v, &w.reduced_word())
}

/// All reduced words of `w`.
pub fn reduced_words(w: &Permutation) -> Vec<Vec<usize>> {
    if w.length() == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for i in w.descents() {
        for mut word in reduced_words(&w.mul_simple_right(i)) {
            word.push(i);
            out.push(word);
        }
    }
    out
}

/// Gram matrix `(Y_w^v, T_omega Y_{omega w'}^u)` over `S_n` in rank order,
/// with `u` the reversal of `v` and `omega w'` the composite `omega o w'`.
pub fn yang_baxter_gram(v: &[i64]) -> Result<Vec<Vec<Coeff>>> {
    let n = v.len();
    let g = SymGroup::get(n);
    let u: Vec<i64> = v.iter().rev().copied().collect();
    let omega = Permutation::longest(n);
    let t_omega = HeckeElement::basis(&omega);
    let left: Vec<HeckeElement> = (0..g.order())
        .map(|r| yang_baxter(v, &g.perm(r)))
        .collect::<Result<_>>()?;
    let right: Vec<HeckeElement> = (0..g.order())
        .map(|r| yang_baxter(&u, &omega.compose(&g.perm(r))).map(|y| &t_omega * &y))
        .collect::<Result<_>>()?;
    Ok(left
        .iter()
        .map(|a| right.iter().map(|b| a.scalar_product(b)).collect())
        .collect())
}

/// Whether the Gram matrix of [`yang_baxter_gram`] is the identity.
pub fn yang_baxter_dual_check(v: &[i64]) -> Result<bool> {
    let gram = yang_baxter_gram(v)?;
    Ok(gram.iter().enumerate().all(|(i, row)| {
        row.iter()
            .enumerate()
            .all(|(j, x)| if i == j { x.is_one() } else { x.is_zero() })
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn increasing(n: usize) -> Vec<i64> {
        (1..=n as i64).collect()
    }

    #[test]
    fn longest_element_closed_forms() {
        for n in 1..=4 {
            let g = SymGroup::get(n);
            let omega = Permutation::longest(n);
            let top = omega.length() as i32;
            let up = yang_baxter(&increasing(n), &omega).unwrap();
            let down: Vec<i64> = increasing(n).into_iter().rev().collect();
            let down = yang_baxter(&down, &omega).unwrap();
            for r in 0..g.order() {
                let l = g.length(r) as i32;
                let minus_q = Coeff::q_pow(top - l);
                let expected = if (top - l) % 2 == 0 {
                    minus_q
                } else {
                    -&minus_q
                };
                assert_eq!(up.coeff_rank(r), &expected);
                assert_eq!(down.coeff_rank(r), &Coeff::q_pow(l - top));
            }
        }
        assert_eq!(
            yang_baxter(&increasing(3), &Permutation::identity(3)).unwrap(),
            HeckeElement::one(3)
        );
    }

    #[test]
    fn word_independence() {
        for n in 2..=4 {
            let g = SymGroup::get(n);
            for v in [increasing(n), vec![3, 0, 7, -2][..n].to_vec()] {
                for r in 0..g.order() {
                    let w = g.perm(r);
                    let words = reduced_words(&w);
                    let first = yang_baxter_along(&v, &words[0]).unwrap();
                    for word in &words[1..] {
                        assert_eq!(yang_baxter_along(&v, word).unwrap(), first);
                    }
                }
            }
        }
    }

    #[test]
    fn repeated_values_rejected() {
        assert_eq!(
            yang_baxter(&[1, 1, 2], &Permutation::longest(3)).unwrap_err(),
            Error::RepeatedSpectralValue
        );
    }

    #[test]
    fn duality() {
        for n in 2..=3 {
            assert!(yang_baxter_dual_check(&increasing(n)).unwrap());
            let down: Vec<i64> = increasing(n).into_iter().rev().collect();
            assert!(yang_baxter_dual_check(&down).unwrap());
        }
    }
}
