use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::Basis;
use crate::combi::Partition;

/// Class of integer matrices counted by [`count_matrices_oracle`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MatrixClass {
    /// Nonnegative integer entries: `h^I` in the monomial basis.
    NonNegative,
    /// 0-1 entries: `e^I`.
    ZeroOne,
    /// Exactly one nonzero entry per row: `p^I`.
    OnePerRow,
}

/// Brute-force count of matrices of the given class with row sums `rows`
/// and column sums `cols`.
pub fn count_matrices_oracle(class: MatrixClass, rows: &[usize], cols: &[usize]) -> u64 {
    if rows.iter().sum::<usize>() != cols.iter().sum::<usize>() {
        return 0;
    }
    fn fill_row(
        class: MatrixClass,
        rows: &[usize],
        r: usize,
        c: usize,
        left_in_row: usize,
        capacity: &mut Vec<usize>,
    ) -> u64 {
        if c == capacity.len() {
            if left_in_row != 0 {
                return 0;
            }
            return next_row(class, rows, r + 1, capacity);
        }
        let max = match class {
            MatrixClass::ZeroOne => left_in_row.min(capacity[c]).min(1),
            _ => left_in_row.min(capacity[c]),
        };
        let mut total = 0;
        for x in 0..=max {
            if class == MatrixClass::OnePerRow && x != 0 && x != rows[r] {
                continue;
            }
            capacity[c] -= x;
            total += fill_row(class, rows, r, c + 1, left_in_row - x, capacity);
            capacity[c] += x;
        }
        total
    }
    fn next_row(class: MatrixClass, rows: &[usize], r: usize, capacity: &mut Vec<usize>) -> u64 {
        if r == rows.len() {
            return u64::from(capacity.iter().all(|&x| x == 0));
        }
        fill_row(class, rows, r, 0, rows[r], capacity)
    }
    let mut capacity = cols.to_vec();
    next_row(class, rows, 0, &mut capacity)
}

type Poly = HashMap<Vec<u8>, BigInt>;

fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<u8> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            *out.entry(e).or_insert_with(BigInt::zero) += ca * cb;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// `e_k`, `h_k` or `p_k` as an explicit polynomial in `vars` variables.
fn single(basis: Basis, k: usize, vars: usize) -> Poly {
    let mut out = Poly::new();
    let mut exp = vec![0u8; vars];
    fn rec(basis: Basis, k: usize, start: usize, exp: &mut Vec<u8>, out: &mut Poly) {
        if k == 0 {
            out.insert(exp.clone(), BigInt::one());
            return;
        }
        for v in start..exp.len() {
            exp[v] += 1;
            match basis {
                Basis::E => rec(basis, k - 1, v + 1, exp, out),
                _ => rec(basis, k - 1, v, exp, out),
            }
            exp[v] -= 1;
        }
    }
    match basis {
        Basis::P => {
            for v in 0..vars {
                exp[v] = k as u8;
                out.insert(exp.clone(), BigInt::one());
                exp[v] = 0;
            }
        }
        _ => rec(basis, k, 0, &mut exp, &mut out),
    }
    out
}

/// Coefficient of `m_mu` in `b_lambda` (`b` one of e, h, p), read off an
/// explicit expansion in `|lambda|` variables.
pub fn polynomial_expansion_oracle(basis: Basis, lambda: &Partition, mu: &Partition) -> BigInt {
    assert!(
        matches!(basis, Basis::E | Basis::H | Basis::P),
        "oracle covers e, h and p"
    );
    let vars = lambda.size();
    let mut acc: Poly = Poly::new();
    acc.insert(vec![0u8; vars], BigInt::one());
    for &k in lambda.iter() {
        acc = poly_mul(&acc, &single(basis, k, vars));
    }
    let mut key: Vec<u8> = mu.iter().map(|&x| x as u8).collect();
    key.resize(vars, 0);
    acc.get(&key).cloned().unwrap_or_else(BigInt::zero)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(
            count_matrices_oracle(MatrixClass::ZeroOne, &[2, 2], &[2, 1, 1]),
            2
        );
        assert_eq!(
            count_matrices_oracle(MatrixClass::OnePerRow, &[4, 1], &[5]),
            1
        );
        assert_eq!(
            count_matrices_oracle(MatrixClass::OnePerRow, &[4, 1], &[3, 2]),
            0
        );
        assert_eq!(
            count_matrices_oracle(MatrixClass::OnePerRow, &[4, 1], &[4, 1]),
            1
        );
        assert_eq!(
            count_matrices_oracle(MatrixClass::NonNegative, &[4], &[4]),
            1
        );
        let p22: Partition = "22".parse().unwrap();
        let p211: Partition = "211".parse().unwrap();
        assert_eq!(
            polynomial_expansion_oracle(Basis::E, &p22, &p211),
            BigInt::from(2)
        );
    }
}
