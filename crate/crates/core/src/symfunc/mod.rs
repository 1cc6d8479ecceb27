//! Symmetric functions over Q(q) and their transition matrices.

mod kernel;
mod matrix;
mod oracle;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};

pub use kernel::kostka_number;
pub use matrix::QMatrix;
pub use oracle::{count_matrices_oracle, polynomial_expansion_oracle, MatrixClass};

use crate::coeff::{Coeff, Rational};
use crate::combi::{partition_index, partitions, Composition, Partition};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    E,
    H,
    P,
    M,
    S,
}

impl Basis {
    pub const ALL: [Basis; 5] = [Basis::E, Basis::H, Basis::P, Basis::M, Basis::S];

    pub fn letter(self) -> char {
        match self {
            Basis::E => 'e',
            Basis::H => 'h',
            Basis::P => 'p',
            Basis::M => 'm',
            Basis::S => 's',
        }
    }

    fn is_multiplicative(self) -> bool {
        matches!(self, Basis::E | Basis::H | Basis::P)
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

impl FromStr for Basis {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "e" => Ok(Basis::E),
            "h" => Ok(Basis::H),
            "p" => Ok(Basis::P),
            "m" => Ok(Basis::M),
            "s" => Ok(Basis::S),
            _ => Err(Error::InvalidArgument(format!(
                "unknown basis {s:?}; expected one of e, h, p, m, s"
            ))),
        }
    }
}

/// Homogeneous symmetric function of degree `n`, with coefficients indexed
/// like `partitions(n)`.
#[derive(Clone, PartialEq, Eq)]
pub struct SymmetricFunction {
    basis: Basis,
    n: usize,
    coeffs: Vec<Coeff>,
}

impl SymmetricFunction {
    pub fn zero(basis: Basis, n: usize) -> Self {
        Self {
            basis,
            n,
            coeffs: vec![Coeff::zero(); partitions(n).len()],
        }
    }

    /// The basis element indexed by `lambda`.
    pub fn basis_element(basis: Basis, lambda: &Partition) -> Self {
        let mut f = Self::zero(basis, lambda.size());
        f.coeffs[partition_index(lambda)] = Coeff::one();
        f
    }

    /// Product `b_{j_1} b_{j_2} ...` for a multiplicative basis, or the
    /// basis element of the sorted composition otherwise.
    pub fn from_composition(basis: Basis, comp: &Composition) -> Self {
        Self::basis_element(basis, &comp.sorted())
    }

    pub fn from_coeffs(basis: Basis, n: usize, coeffs: Vec<Coeff>) -> Result<Self> {
        if coeffs.len() != partitions(n).len() {
            return Err(Error::InvalidArgument("coefficient vector length".into()));
        }
        Ok(Self { basis, n, coeffs })
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn coeffs(&self) -> &[Coeff] {
        &self.coeffs
    }

    pub fn coeff(&self, lambda: &Partition) -> Coeff {
        if lambda.size() != self.n {
            return Coeff::zero();
        }
        self.coeffs[partition_index(lambda)].clone()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        let other = other.to_basis(self.basis);
        assert_eq!(self.n, other.n, "degrees differ");
        Self {
            basis: self.basis,
            n: self.n,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn scale(&self, c: &Coeff) -> Self {
        Self {
            basis: self.basis,
            n: self.n,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Rewrites in another basis.
    pub fn to_basis(&self, basis: Basis) -> Self {
        if basis == self.basis {
            return self.clone();
        }
        let t = transition_matrix(self.n, self.basis, basis);
        let k = self.coeffs.len();
        let coeffs = (0..k)
            .map(|j| {
                let mut acc = Coeff::zero();
                for i in 0..k {
                    if !self.coeffs[i].is_zero() && !t.get(i, j).is_zero() {
                        acc += &(&self.coeffs[i] * t.get(i, j));
                    }
                }
                acc
            })
            .collect();
        Self {
            basis,
            n: self.n,
            coeffs,
        }
    }

    /// Evaluates all coefficients at `q = q0`.
    pub fn evaluate(&self, q0: &Rational) -> Result<Self> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| c.evaluate(q0).map(Coeff::from_rational))
            .collect::<Result<_>>()?;
        Ok(Self {
            basis: self.basis,
            n: self.n,
            coeffs,
        })
    }
}

impl fmt::Display for SymmetricFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts = partitions(self.n);
        let mut first = true;
        for (lambda, c) in parts.iter().zip(&self.coeffs) {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            if c.is_one() {
                write!(f, "{}[{}]", self.basis, lambda)?;
            } else {
                write!(
                    f,
                    "({})*{}[{}]",
                    crate::coeff::pretty(c),
                    self.basis,
                    lambda
                )?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SymmetricFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn union(a: &Partition, b: &Partition) -> Partition {
    let mut parts: Vec<usize> = a.iter().chain(b.iter()).copied().collect();
    parts.sort_unstable_by(|x, y| y.cmp(x));
    Partition::new(parts).expect("sorted")
}

/// Product of symmetric functions. Two factors in the same multiplicative
/// basis (e, h, p) multiply in that basis; anything else goes through m.
pub fn multiply(f: &SymmetricFunction, g: &SymmetricFunction) -> SymmetricFunction {
    let n = f.n + g.n;
    let pf = partitions(f.n);
    let pg = partitions(g.n);
    let index: HashMap<Partition, usize> = partitions(n)
        .into_iter()
        .enumerate()
        .map(|(i, p)| (p, i))
        .collect();
    if f.basis == g.basis && f.basis.is_multiplicative() {
        let mut out = SymmetricFunction::zero(f.basis, n);
        for (a, ca) in pf.iter().zip(&f.coeffs) {
            if ca.is_zero() {
                continue;
            }
            for (b, cb) in pg.iter().zip(&g.coeffs) {
                if !cb.is_zero() {
                    out.coeffs[index[&union(a, b)]] += &(ca * cb);
                }
            }
        }
        return out;
    }
    let fm = f.to_basis(Basis::M);
    let gm = g.to_basis(Basis::M);
    let mut out = SymmetricFunction::zero(Basis::M, n);
    for (a, ca) in pf.iter().zip(&fm.coeffs) {
        if ca.is_zero() {
            continue;
        }
        for (b, cb) in pg.iter().zip(&gm.coeffs) {
            if cb.is_zero() {
                continue;
            }
            let cab = ca * cb;
            for (nu, c) in kernel::monomial_product(a, b).iter() {
                let k = Coeff::from_rational(Rational::from_integer(c.clone()));
                out.coeffs[index[nu]] += &(&cab * &k);
            }
        }
    }
    out
}

/// Monomial expansion of the basis element `b_lambda`.
fn expand_in_m(basis: Basis, lambda: &Partition) -> SymmetricFunction {
    let n = lambda.size();
    match basis {
        Basis::M => SymmetricFunction::basis_element(Basis::M, lambda),
        Basis::S => {
            let coeffs = partitions(n)
                .iter()
                .map(|mu| Coeff::from_int(kostka_number(lambda, mu) as i64))
                .collect();
            SymmetricFunction {
                basis: Basis::M,
                n,
                coeffs,
            }
        }
        Basis::E | Basis::H | Basis::P => {
            let mut acc =
                SymmetricFunction::basis_element(Basis::M, &Partition::new(vec![]).unwrap());
            for &k in lambda.iter() {
                let single = match basis {
                    Basis::E => SymmetricFunction::basis_element(
                        Basis::M,
                        &Partition::new(vec![1; k]).unwrap(),
                    ),
                    Basis::P => SymmetricFunction::basis_element(
                        Basis::M,
                        &Partition::new(vec![k]).unwrap(),
                    ),
                    _ => SymmetricFunction {
                        basis: Basis::M,
                        n: k,
                        coeffs: vec![Coeff::one(); partitions(k).len()],
                    },
                };
                acc = multiply(&acc, &single);
            }
            acc
        }
    }
}

type TransitionCache = HashMap<(usize, Basis, Basis), Arc<QMatrix>>;

fn transition_cache() -> &'static Mutex<TransitionCache> {
    static CACHE: OnceLock<Mutex<TransitionCache>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn to_m_matrix(n: usize, basis: Basis) -> Arc<QMatrix> {
    let key = (n, basis, Basis::M);
    if let Some(hit) = transition_cache().lock().unwrap().get(&key) {
        return hit.clone();
    }
    let rows: Vec<Vec<Coeff>> = partitions(n)
        .iter()
        .map(|l| expand_in_m(basis, l).coeffs)
        .collect();
    let m = Arc::new(QMatrix::new(partitions(n), partitions(n), rows).expect("square"));
    transition_cache().lock().unwrap().insert(key, m.clone());
    m
}

/// `A2B`: row `lambda` expands `a_lambda` in the basis `b`. Memoized.
pub fn transition_matrix(n: usize, src: Basis, dst: Basis) -> Arc<QMatrix> {
    if src == dst {
        return Arc::new(QMatrix::identity(n));
    }
    if dst == Basis::M {
        return to_m_matrix(n, src);
    }
    let key = (n, src, dst);
    if let Some(hit) = transition_cache().lock().unwrap().get(&key) {
        return hit.clone();
    }
    let from_m = {
        let inv_key = (n, Basis::M, dst);
        let cached = transition_cache().lock().unwrap().get(&inv_key).cloned();
        match cached {
            Some(m) => m,
            None => {
                let m = Arc::new(to_m_matrix(n, dst).inverse().expect("bases are invertible"));
                transition_cache()
                    .lock()
                    .unwrap()
                    .insert(inv_key, m.clone());
                m
            }
        }
    };
    let out = if src == Basis::M {
        from_m
    } else {
        Arc::new(&*to_m_matrix(n, src) * &*from_m)
    };
    transition_cache().lock().unwrap().insert(key, out.clone());
    out
}

/// `S^k` in the power-sum basis:
/// `Q^-1 sum_{rho |- k} z_rho^-1 prod_i (-Q [rho_i]) p_rho`.
pub fn modified_complete(k: usize) -> SymmetricFunction {
    let coeffs = partitions(k)
        .iter()
        .map(|rho| {
            let mut c = Coeff::from_rational(Rational::new(1.into(), rho.z().into()));
            for &part in rho.iter() {
                c = &c * &(-&(&Coeff::big_q() * &Coeff::qint(part as i32)));
            }
            &c / &Coeff::big_q()
        })
        .collect();
    SymmetricFunction {
        basis: Basis::P,
        n: k,
        coeffs,
    }
}

/// `S^{j_1} S^{j_2} ...` in the power-sum basis.
pub fn modified_complete_product(comp: &[usize]) -> SymmetricFunction {
    let mut acc = SymmetricFunction::basis_element(Basis::P, &Partition::new(vec![]).unwrap());
    for &j in comp {
        acc = multiply(&acc, &modified_complete(j));
    }
    acc
}

/// `S^{j_1} S^{j_2} ...` expanded in Schur functions.
pub fn ram_modified(comp: &Composition) -> SymmetricFunction {
    modified_complete_product(comp).to_basis(Basis::S)
}

/// Expansion of `prod_k (s_{1^{j_k}} + z_k s_{2,1^{j_k-2}} + ... + z_k^{j_k-1} s_{j_k})`:
/// z-exponent vector to its (monomial basis) coefficient.
pub fn hook_generating_product(comp: &Composition) -> BTreeMap<Vec<usize>, SymmetricFunction> {
    let mut acc: BTreeMap<Vec<usize>, SymmetricFunction> = BTreeMap::new();
    acc.insert(
        Vec::new(),
        SymmetricFunction::basis_element(Basis::M, &Partition::new(vec![]).unwrap()),
    );
    for &j in comp.iter() {
        let mut next = BTreeMap::new();
        for (exps, f) in &acc {
            for i in 0..j {
                let mut hook = vec![i + 1];
                hook.extend(std::iter::repeat_n(1, j - 1 - i));
                let s = SymmetricFunction::basis_element(Basis::S, &Partition::new(hook).unwrap());
                let mut e = exps.clone();
                e.push(i);
                next.insert(e, multiply(f, &s));
            }
        }
        acc = next;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn ints(m: &QMatrix) -> Vec<Vec<String>> {
        m.strings(false)
    }

    #[test]
    fn printed_rows() {
        let e2m = transition_matrix(4, Basis::E, Basis::M);
        assert_eq!(ints(&e2m)[2], ["0", "0", "1", "2", "6"]);
        let p2m = transition_matrix(4, Basis::P, Basis::M);
        let expected = [
            ["1", "0", "0", "0", "0"],
            ["1", "1", "0", "0", "0"],
            ["1", "0", "2", "0", "0"],
            ["1", "2", "2", "2", "0"],
            ["1", "4", "6", "12", "24"],
        ];
        assert_eq!(ints(&p2m), expected);
        assert!(transition_matrix(1, Basis::S, Basis::E).is_identity());
    }

    #[test]
    fn round_trips() {
        for n in 1..=5 {
            for a in Basis::ALL {
                for b in Basis::ALL {
                    let ab = transition_matrix(n, a, b);
                    let ba = transition_matrix(n, b, a);
                    assert!((&*ab * &*ba).is_identity(), "{a}2{b} at n={n}");
                }
            }
        }
    }

    #[test]
    fn products() {
        let e2 = SymmetricFunction::basis_element(Basis::E, &p("2"));
        let sq = multiply(&e2, &e2).to_basis(Basis::M);
        assert_eq!(sq.coeff(&p("22")), Coeff::from_int(1));
        assert_eq!(sq.coeff(&p("211")), Coeff::from_int(2));
        assert_eq!(sq.coeff(&p("1111")), Coeff::from_int(6));
        let prod = multiply(
            &SymmetricFunction::basis_element(Basis::P, &p("4")),
            &SymmetricFunction::basis_element(Basis::M, &p("1")),
        );
        assert_eq!(prod.coeff(&p("5")), Coeff::from_int(1));
        assert_eq!(prod.coeff(&p("41")), Coeff::from_int(1));
        assert_eq!(prod.coeffs().iter().filter(|c| !c.is_zero()).count(), 2);
    }

    #[test]
    fn modified_complete_examples() {
        let s2 = ram_modified(&"2".parse().unwrap());
        assert_eq!(s2.coeff(&p("2")), -Coeff::q_pow(-1));
        assert_eq!(s2.coeff(&p("11")), Coeff::q_pow(1));
        let s1 = ram_modified(&"1".parse().unwrap());
        assert_eq!(s1.coeff(&p("1")), Coeff::from_int(-1));
        let s1111 = ram_modified(&"1111".parse().unwrap());
        let dims: Vec<String> = s1111.coeffs().iter().map(|c| c.to_string()).collect();
        assert_eq!(dims, ["1", "3", "2", "3", "1"]);
    }

    #[test]
    fn hook_product_example() {
        let table = hook_generating_product(&"32".parse().unwrap());
        assert_eq!(table[&vec![1, 1]].coeff(&p("41")), Coeff::from_int(1));
        assert_eq!(table[&vec![2, 1]].coeff(&p("5")), Coeff::from_int(1));
        assert_eq!(table[&vec![2, 1]].coeff(&p("41")), Coeff::from_int(2));
        assert_eq!(table[&vec![2, 1]].coeff(&p("32")), Coeff::from_int(3));
        assert_eq!(
            table[&vec![0, 0]],
            SymmetricFunction::basis_element(Basis::E, &p("32")).to_basis(Basis::M)
        );
    }
}
