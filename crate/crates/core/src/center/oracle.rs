use std::collections::HashMap;

use num_traits::{One, Zero};

use crate::coeff::{Coeff, Rational};
use crate::combi::{partitions, Partition, SymGroup};
use crate::error::{Error, Result};
use crate::hecke::HeckeElement;

/// Solve `a x = b` exactly; `None` when the system is inconsistent or has
/// more than one solution.
fn solve_unique(
    mut a: Vec<Vec<Rational>>,
    mut b: Vec<Rational>,
    unknowns: usize,
) -> Option<Vec<Rational>> {
    let rows = a.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..unknowns {
        let Some(p) = (r..rows).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        b.swap(r, p);
        let inv = a[r][col].recip();
        for x in a[r].iter_mut() {
            *x *= &inv;
        }
        b[r] *= &inv;
        for i in 0..rows {
            if i == r || a[i][col].is_zero() {
                continue;
            }
            let f = a[i][col].clone();
            for k in col..unknowns {
                if !a[r][k].is_zero() {
                    let t = &f * &a[r][k];
                    a[i][k] -= t;
                }
            }
            let t = &f * &b[r];
            b[i] -= t;
        }
        pivots.push(col);
        r += 1;
    }
    if pivots.len() < unknowns || b[r..].iter().any(|x| !x.is_zero()) {
        return None;
    }
    Some(b[..unknowns].to_vec())
}

/// Geck-Rouquier basis at `q = q0`, from centrality plus the prescribed
/// coefficients on minimal-length class elements, without normalization.
pub fn gamma_oracle(n: usize, q0: &Rational) -> Result<Vec<(Partition, HeckeElement)>> {
    if q0.is_zero() {
        return Err(Error::Pole("q = 0".into()));
    }
    let g = SymGroup::get(n);
    let order = g.order();
    let big_q = q0 - q0.recip();
    let types: Vec<Partition> = (0..order).map(|r| g.perm(r).cycle_type()).collect();
    let mut min_len: HashMap<&Partition, usize> = HashMap::new();
    for (r, ty) in types.iter().enumerate() {
        let e = min_len.entry(ty).or_insert(usize::MAX);
        *e = (*e).min(g.length(r));
    }
    let minimal: Vec<usize> = (0..order)
        .filter(|&r| g.length(r) == min_len[&types[r]])
        .collect();

    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for i in 1..n {
        for u in 0..order {
            // (x T_i - T_i x)_u = 0
            let mut row = vec![Rational::zero(); order];
            row[g.right_mul(u, i)] += Rational::one();
            if !g.is_right_ascent(u, i) {
                row[u] += &big_q;
            }
            row[g.left_mul(u, i)] -= Rational::one();
            if !g.is_left_ascent(u, i) {
                row[u] -= &big_q;
            }
            if row.iter().any(|x| !x.is_zero()) {
                rows.push(row);
            }
        }
    }
    for &m in &minimal {
        let mut row = vec![Rational::zero(); order];
        row[m] = Rational::one();
        rows.push(row);
    }
    let central_rows = rows.len() - minimal.len();
    partitions(n)
        .into_iter()
        .map(|lambda| {
            let mut rhs = vec![Rational::zero(); central_rows];
            rhs.extend(minimal.iter().map(|&m| {
                if types[m] == lambda {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            }));
            let x = solve_unique(rows.clone(), rhs, order).ok_or(Error::Singular)?;
            let h = HeckeElement::from_dense(n, x.into_iter().map(Coeff::from_rational).collect());
            Ok((lambda, h))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::center::geck_rouquier_basis;
    use crate::coeff::rat;

    #[test]
    fn oracle_matches_constructed_basis() {
        for n in 1..=4 {
            let q0 = rat(3, 2);
            let oracle = gamma_oracle(n, &q0).unwrap();
            let gr = geck_rouquier_basis(n).unwrap();
            for ((l1, a), (l2, b)) in oracle.iter().zip(&gr.elements) {
                assert_eq!(l1, l2);
                assert_eq!(a, &b.evaluate(&q0).unwrap(), "{l1}");
            }
        }
    }
}
