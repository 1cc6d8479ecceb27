use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;

use crate::combi::{factorial, Partition};

type ProductTable = HashMap<(Partition, Partition), Arc<Vec<(Partition, BigInt)>>>;

fn product_cache() -> &'static Mutex<ProductTable> {
    static CACHE: OnceLock<Mutex<ProductTable>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn orbit_size(v: &[usize]) -> u128 {
    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    for &x in v {
        *counts.entry(x).or_insert(0) += 1;
    }
    counts
        .values()
        .fold(factorial(v.len()), |acc, &m| acc / factorial(m))
}

/// Calls `f` on every distinct rearrangement of `v`.
fn for_each_arrangement(v: &[usize], f: &mut impl FnMut(&[usize])) {
    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    for &x in v {
        *counts.entry(x).or_insert(0) += 1;
    }
    let mut values: Vec<(usize, usize)> = counts.into_iter().collect();
    let mut buf = Vec::with_capacity(v.len());
    fn rec(
        values: &mut [(usize, usize)],
        len: usize,
        buf: &mut Vec<usize>,
        f: &mut impl FnMut(&[usize]),
    ) {
        if buf.len() == len {
            f(buf);
            return;
        }
        for k in 0..values.len() {
            if values[k].1 == 0 {
                continue;
            }
            values[k].1 -= 1;
            buf.push(values[k].0);
            rec(values, len, buf, f);
            buf.pop();
            values[k].1 += 1;
        }
    }
    rec(&mut values, v.len(), &mut buf, f);
}

/// Structure constants of `m_a * m_b` in the monomial basis, by convolution
/// of exponent vectors.
pub(crate) fn monomial_product(a: &Partition, b: &Partition) -> Arc<Vec<(Partition, BigInt)>> {
    let key = if a <= b {
        (a.clone(), b.clone())
    } else {
        (b.clone(), a.clone())
    };
    if let Some(hit) = product_cache().lock().unwrap().get(&key) {
        return hit.clone();
    }
    let len = a.len() + b.len();
    let mut fixed: Vec<usize> = a.to_vec();
    fixed.resize(len, 0);
    let mut moving: Vec<usize> = b.to_vec();
    moving.resize(len, 0);
    let mut counts: BTreeMap<Vec<usize>, u128> = BTreeMap::new();
    for_each_arrangement(&moving, &mut |beta| {
        let mut sum: Vec<usize> = fixed.iter().zip(beta).map(|(x, y)| x + y).collect();
        sum.sort_unstable_by(|x, y| y.cmp(x));
        *counts.entry(sum).or_insert(0) += 1;
    });
    let orb_a = orbit_size(&fixed);
    let mut out: Vec<(Partition, BigInt)> = counts
        .into_iter()
        .map(|(nu, count)| {
            let c = count * orb_a / orbit_size(&nu);
            let parts: Vec<usize> = nu.into_iter().filter(|&x| x > 0).collect();
            (Partition::new(parts).expect("sorted"), BigInt::from(c))
        })
        .collect();
    out.sort_by(|x, y| y.0.cmp(&x.0));
    let out = Arc::new(out);
    product_cache().lock().unwrap().insert(key, out.clone());
    out
}

/// Number of semistandard tableaux of shape `shape` and content `content`.
pub fn kostka_number(shape: &Partition, content: &[usize]) -> u64 {
    fn rec(shape: &[usize], content: &[usize]) -> u64 {
        let Some((&last, rest)) = content.split_last() else {
            return u64::from(shape.iter().all(|&x| x == 0));
        };
        if shape.iter().sum::<usize>() != content.iter().sum::<usize>() {
            return 0;
        }
        // Remove a horizontal strip of size `last` filled with the largest value.
        let mut total = 0;
        let mut inner = vec![0usize; shape.len()];
        fn strips(
            shape: &[usize],
            i: usize,
            left: usize,
            inner: &mut Vec<usize>,
            rest: &[usize],
            total: &mut u64,
        ) {
            if i == shape.len() {
                if left == 0 {
                    let trimmed: Vec<usize> = inner.iter().copied().filter(|&x| x > 0).collect();
                    *total += rec(&trimmed, rest);
                }
                return;
            }
            let floor = shape.get(i + 1).copied().unwrap_or(0);
            for k in floor..=shape[i] {
                let removed = shape[i] - k;
                if removed > left {
                    continue;
                }
                inner[i] = k;
                strips(shape, i + 1, left - removed, inner, rest, total);
            }
        }
        strips(shape, 0, last, &mut inner, rest, &mut total);
        total
    }
    rec(shape.parts(), content)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn small_products() {
        let prod = monomial_product(&p("1"), &p("1"));
        assert_eq!(*prod, vec![(p("2"), 1.into()), (p("11"), 2.into())]);
        let prod = monomial_product(&p("4"), &p("1"));
        assert_eq!(*prod, vec![(p("5"), 1.into()), (p("41"), 1.into())]);
        let prod = monomial_product(&p("11"), &p("11"));
        assert_eq!(
            *prod,
            vec![
                (p("22"), 1.into()),
                (p("211"), 2.into()),
                (p("1111"), 6.into())
            ]
        );
    }

    #[test]
    fn kostka_values() {
        assert_eq!(kostka_number(&p("21"), &[1, 1, 1]), 2);
        assert_eq!(kostka_number(&p("31"), &[2, 1, 1]), 2);
        assert_eq!(kostka_number(&p("22"), &[2, 1, 1]), 1);
        assert_eq!(kostka_number(&p("22"), &[3, 1]), 0);
        assert_eq!(kostka_number(&p("4"), &[1, 1, 1, 1]), 1);
    }
}
