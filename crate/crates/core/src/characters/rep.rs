use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::coeff::Coeff;
use crate::combi::{standard_tableaux, Partition, StandardTableau, SymGroup};
use crate::hecke::HeckeElement;

pub type DenseMatrix = Vec<Vec<Coeff>>;

/// Seminormal representation of `H_n` on standard tableaux of one shape.
/// Column `t` of generator `i` lists the nonzero entries of `T_i v_t`.
#[derive(Clone, Debug)]
pub struct SeminormalRep {
    shape: Partition,
    tableaux: Vec<StandardTableau>,
    generators: Vec<Vec<Vec<(usize, Coeff)>>>,
}

impl SeminormalRep {
    pub fn new(shape: &Partition) -> Self {
        let tableaux = standard_tableaux(shape);
        let index: HashMap<Vec<Vec<usize>>, usize> = tableaux
            .iter()
            .enumerate()
            .map(|(k, t)| (t.rows().to_vec(), k))
            .collect();
        let n = shape.size();
        let q = Coeff::q_pow(1);
        let minus_inv = -&Coeff::q_pow(-1);
        let generators = (1..n)
            .map(|i| {
                tableaux
                    .iter()
                    .map(|t| {
                        let (r1, c1) = t.cell(i);
                        let (r2, c2) = t.cell(i + 1);
                        if r1 == r2 {
                            return vec![(index[t.rows()], q.clone())];
                        }
                        if c1 == c2 {
                            return vec![(index[t.rows()], minus_inv.clone())];
                        }
                        let d = (t.content(i + 1) - t.content(i)) as i32;
                        let me = index[t.rows()];
                        let partner = index[t.swap(i).expect("not in one row or column").rows()];
                        let diag = Coeff::q_pow(d) / Coeff::qint(d);
                        let off = if d > 0 {
                            Coeff::one()
                        } else {
                            let dd = -d;
                            &(&Coeff::qint(dd + 1) * &Coeff::qint(dd - 1)) / &Coeff::qint(dd).pow(2)
                        };
                        vec![(me, diag), (partner, off)]
                    })
                    .collect()
            })
            .collect();
        Self {
            shape: shape.clone(),
            tableaux,
            generators,
        }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn tableaux(&self) -> &[StandardTableau] {
        &self.tableaux
    }

    pub fn dim(&self) -> usize {
        self.tableaux.len()
    }

    pub fn generator_matrix(&self, i: usize) -> DenseMatrix {
        let dim = self.dim();
        let mut m = vec![vec![Coeff::zero(); dim]; dim];
        for (col, entries) in self.generators[i - 1].iter().enumerate() {
            for (row, c) in entries {
                m[*row][col] = c.clone();
            }
        }
        m
    }

    /// `a * rho(T_i)`.
    fn mul_generator(&self, a: &DenseMatrix, i: usize) -> DenseMatrix {
        let dim = self.dim();
        let mut out = vec![vec![Coeff::zero(); dim]; dim];
        for (col, entries) in self.generators[i - 1].iter().enumerate() {
            for (k, c) in entries {
                for row in 0..dim {
                    let x = &a[row][*k];
                    if !x.is_zero() {
                        out[row][col] += &(x * c);
                    }
                }
            }
        }
        out
    }

    /// `rho(T_{i_1} ... T_{i_k})`.
    pub fn word_matrix(&self, word: &[usize]) -> DenseMatrix {
        word.iter()
            .fold(identity(self.dim()), |m, &i| self.mul_generator(&m, i))
    }

    /// Matrices `rho(T_w)` for every rank, visited along the reduced-word
    /// tree; `f` receives each one once.
    fn for_each_basis_image(&self, mut f: impl FnMut(usize, &DenseMatrix)) {
        let n = self.shape.size();
        let g = SymGroup::get(n);
        let mut children: Vec<Vec<(usize, usize)>> = vec![Vec::new(); g.order()];
        for r in 1..g.order() {
            let (p, i) = g.parent(r).expect("non-identity");
            children[p].push((r, i));
        }
        let mut stack = vec![(0usize, identity(self.dim()))];
        while let Some((r, m)) = stack.pop() {
            f(r, &m);
            for &(child, i) in &children[r] {
                stack.push((child, self.mul_generator(&m, i)));
            }
        }
    }

    /// `rho(h)`.
    pub fn matrix_of(&self, h: &HeckeElement) -> DenseMatrix {
        let dim = self.dim();
        let mut out = vec![vec![Coeff::zero(); dim]; dim];
        let coeffs = h.dense();
        self.for_each_basis_image(|r, m| {
            let c = &coeffs[r];
            if c.is_zero() {
                return;
            }
            for (o, row) in out.iter_mut().zip(m) {
                for (x, y) in o.iter_mut().zip(row) {
                    if !y.is_zero() {
                        *x += &(y * c);
                    }
                }
            }
        });
        out
    }

    /// `tr rho(T_w)` for every rank.
    pub fn basis_traces(&self) -> Vec<Coeff> {
        let g = SymGroup::get(self.shape.size());
        let mut out = vec![Coeff::zero(); g.order()];
        self.for_each_basis_image(|r, m| out[r] = trace(m));
        out
    }
}

pub fn seminormal_rep(shape: &Partition) -> SeminormalRep {
    SeminormalRep::new(shape)
}

pub fn identity(dim: usize) -> DenseMatrix {
    (0..dim)
        .map(|i| {
            (0..dim)
                .map(|j| if i == j { Coeff::one() } else { Coeff::zero() })
                .collect()
        })
        .collect()
}

pub fn trace(m: &DenseMatrix) -> Coeff {
    let mut acc = Coeff::zero();
    for (i, row) in m.iter().enumerate() {
        acc += &row[i];
    }
    acc
}

pub fn mat_mul(a: &DenseMatrix, b: &DenseMatrix) -> DenseMatrix {
    let n = a.len();
    let m = b.first().map_or(0, |r| r.len());
    let mut out = vec![vec![Coeff::zero(); m]; n];
    for i in 0..n {
        for (k, bk) in b.iter().enumerate() {
            let x = &a[i][k];
            if x.is_zero() {
                continue;
            }
            for j in 0..m {
                if !bk[j].is_zero() {
                    out[i][j] += &(x * &bk[j]);
                }
            }
        }
    }
    out
}

type TraceCache = HashMap<Partition, Arc<Vec<Coeff>>>;

fn trace_cache() -> &'static Mutex<TraceCache> {
    static CACHE: OnceLock<Mutex<TraceCache>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Memoized [`SeminormalRep::basis_traces`].
pub fn trace_table(shape: &Partition) -> Arc<Vec<Coeff>> {
    if let Some(hit) = trace_cache().lock().unwrap().get(shape) {
        return hit.clone();
    }
    let traces = Arc::new(SeminormalRep::new(shape).basis_traces());
    trace_cache()
        .lock()
        .unwrap()
        .insert(shape.clone(), traces.clone());
    traces
}

/// `chi^mu(h)`: the trace of `h` in the seminormal representation `mu`.
pub fn character(mu: &Partition, h: &HeckeElement) -> Coeff {
    assert_eq!(mu.size(), h.n(), "shape and algebra sizes differ");
    let traces = trace_table(mu);
    let mut acc = Coeff::zero();
    for (r, c) in h.support() {
        let t = &traces[r];
        if !t.is_zero() {
            acc += &(c * t);
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combi::partitions;
    use crate::hecke::{jm_element, JmKind};

    fn sub(a: &DenseMatrix, b: &DenseMatrix) -> DenseMatrix {
        a.iter()
            .zip(b)
            .map(|(x, y)| x.iter().zip(y).map(|(u, v)| u - v).collect())
            .collect()
    }

    #[test]
    fn relations_hold() {
        for n in 1..=5 {
            for shape in partitions(n) {
                let rep = SeminormalRep::new(&shape);
                let id = identity(rep.dim());
                let gens: Vec<DenseMatrix> = (1..n).map(|i| rep.generator_matrix(i)).collect();
                for (k, m) in gens.iter().enumerate() {
                    let sq = mat_mul(m, m);
                    let qm: DenseMatrix = m
                        .iter()
                        .map(|r| r.iter().map(|x| x.mul_big_q()).collect())
                        .collect();
                    let rhs: DenseMatrix = qm
                        .iter()
                        .zip(&id)
                        .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x + y).collect())
                        .collect();
                    assert_eq!(sq, rhs, "quadratic in {shape}");
                    if k + 1 < gens.len() {
                        let a = mat_mul(&mat_mul(m, &gens[k + 1]), m);
                        let b = mat_mul(&mat_mul(&gens[k + 1], m), &gens[k + 1]);
                        assert_eq!(a, b, "braid in {shape}");
                    }
                    for other in gens.iter().skip(k + 2) {
                        let c = sub(&mat_mul(m, other), &mat_mul(other, m));
                        assert!(c.iter().flatten().all(|x| x.is_zero()));
                    }
                }
            }
        }
    }

    #[test]
    fn jm_elements_are_diagonal() {
        let n = 4;
        for shape in partitions(n) {
            let rep = SeminormalRep::new(&shape);
            for i in 1..=n {
                let m = rep.matrix_of(&jm_element(JmKind::Xi, i, n).unwrap());
                for (a, t) in rep.tableaux().iter().enumerate() {
                    for b in 0..rep.dim() {
                        let expected = if a == b {
                            Coeff::q_pow(2 * t.content(i) as i32)
                        } else {
                            Coeff::zero()
                        };
                        assert_eq!(m[a][b], expected);
                    }
                }
            }
        }
    }

    #[test]
    fn traces_match_examples() {
        let p = |s: &str| -> Partition { s.parse().unwrap() };
        let zeta4 = HeckeElement::word(4, &[3, 2, 1]);
        assert_eq!(character(&p("4"), &zeta4), Coeff::q_pow(3));
        let zeta22 = HeckeElement::word(4, &[1, 3]);
        assert_eq!(
            character(&p("22"), &zeta22),
            Coeff::qint(4) / Coeff::qint(2)
        );
        assert_eq!(
            character(&p("31"), &HeckeElement::one(4)),
            Coeff::from_int(3)
        );
    }
}
