use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::Rational;

/// Laurent polynomial in `q` with exact rational coefficients.
///
/// Stored densely: `coeffs[k]` is the coefficient of `q^(low + k)`. The first
/// and last stored coefficients are nonzero; the zero polynomial has no
/// coefficients and `low == 0`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    low: i32,
    coeffs: Vec<Rational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0)
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(Rational::from_integer(BigInt::from(c)))
    }

    pub fn monomial(c: Rational, exp: i32) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            low: exp,
            coeffs: vec![c],
        }
    }

    /// `q^exp`.
    pub fn q_pow(exp: i32) -> Self {
        Self::monomial(Rational::one(), exp)
    }

    /// The parameter `Q = q - q^-1`.
    pub fn big_q() -> Self {
        Self::from_dense(
            -1,
            vec![
                Rational::from_integer((-1).into()),
                Rational::zero(),
                Rational::one(),
            ],
        )
    }

    /// Builds from dense coefficients starting at `q^low`, trimming zeros.
    pub fn from_dense(low: i32, coeffs: Vec<Rational>) -> Self {
        let mut p = Self { low, coeffs };
        p.trim();
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (i32, Rational)>>(terms: I) -> Self {
        let terms: Vec<(i32, Rational)> = terms.into_iter().collect();
        if terms.is_empty() {
            return Self::zero();
        }
        let low = terms.iter().map(|t| t.0).min().unwrap();
        let high = terms.iter().map(|t| t.0).max().unwrap();
        let mut coeffs = vec![Rational::zero(); (high - low + 1) as usize];
        for (e, c) in terms {
            coeffs[(e - low) as usize] += c;
        }
        Self::from_dense(low, coeffs)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.low += lead as i32;
        }
        if self.coeffs.is_empty() {
            self.low = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// True when the polynomial is a constant (including zero).
    pub fn is_constant(&self) -> bool {
        self.is_zero() || (self.low == 0 && self.coeffs.len() == 1)
    }

    pub fn is_monomial(&self) -> bool {
        self.coeffs.len() == 1
    }

    /// Smallest exponent with a nonzero coefficient. Zero polynomial: 0.
    pub fn low_degree(&self) -> i32 {
        self.low
    }

    /// Largest exponent with a nonzero coefficient. Zero polynomial: `low - 1`.
    pub fn high_degree(&self) -> i32 {
        self.low + self.coeffs.len() as i32 - 1
    }

    pub fn coeff(&self, exp: i32) -> Rational {
        let k = exp - self.low;
        if k < 0 || k as usize >= self.coeffs.len() {
            Rational::zero()
        } else {
            self.coeffs[k as usize].clone()
        }
    }

    pub fn leading_coeff(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    /// Dense coefficient slice starting at `low_degree()`.
    pub fn dense(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i32, &Rational)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(k, c)| (self.low + k as i32, c))
    }

    pub fn constant_value(&self) -> Option<Rational> {
        if self.is_zero() {
            Some(Rational::zero())
        } else if self.is_constant() {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i32) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Self {
            low: self.low + k,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            low: self.low,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Multiplies by `Q = q - q^-1` without a general convolution.
    pub fn mul_big_q(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let len = self.coeffs.len() + 2;
        let mut out = vec![Rational::zero(); len];
        for (k, c) in self.coeffs.iter().enumerate() {
            out[k + 2] += c;
            out[k] -= c;
        }
        Self::from_dense(self.low - 1, out)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Substitution `q -> q^-1`.
    pub fn invert_q(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Self {
            low: -self.high_degree(),
            coeffs,
        }
    }

    /// Substitution `q -> -q^-1`, the involution fixing `Q`.
    pub fn bar_involution(&self) -> Self {
        Self::from_terms(self.terms().map(|(e, c)| {
            let c = if e % 2 == 0 { c.clone() } else { -c.clone() };
            (-e, c)
        }))
    }

    /// Exact value at `q = q0`; `None` when `q0 = 0` and a negative power occurs.
    pub fn evaluate(&self, q0: &Rational) -> Option<Rational> {
        if self.is_zero() {
            return Some(Rational::zero());
        }
        if q0.is_zero() {
            if self.low > 0 {
                return Some(Rational::zero());
            }
            if self.low < 0 {
                return None;
            }
            return Some(self.coeffs[0].clone());
        }
        // Horner on the polynomial part, then the q^low factor.
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * q0 + c;
        }
        Some(acc * rat_pow(q0, self.low))
    }

    /// Division with remainder as ordinary polynomials, after both operands are
    /// shifted to start at `q^0`. Returns `(quotient, remainder)` as polynomials
    /// starting at exponent zero.
    fn poly_div_rem(num: &[Rational], den: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
        assert!(!den.is_empty(), "division by zero polynomial");
        let mut rem: Vec<Rational> = num.to_vec();
        if num.len() < den.len() {
            return (Vec::new(), rem);
        }
        let dl = den.len();
        let lead = den[dl - 1].clone();
        let mut quot = vec![Rational::zero(); num.len() - dl + 1];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dl - 1] / &lead;
            if c.is_zero() {
                continue;
            }
            for (j, d) in den.iter().enumerate() {
                if !d.is_zero() {
                    rem[k + j] -= &c * d;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dl - 1);
        while rem.last().is_some_and(|c| c.is_zero()) {
            rem.pop();
        }
        (quot, rem)
    }

    /// Exact quotient `self / other` in the Laurent ring, if it exists.
    pub fn exact_div(&self, other: &Self) -> Option<Self> {
        assert!(!other.is_zero(), "division by zero Laurent polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        let (quot, rem) = Self::poly_div_rem(&self.coeffs, &other.coeffs);
        if !rem.is_empty() {
            return None;
        }
        Some(Self::from_dense(self.low - other.low, quot))
    }

    /// Monic gcd of the polynomial parts (powers of `q` are units and are
    /// dropped). The result starts at `q^0` and has nonzero constant term.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.to_monic_poly();
        }
        if other.is_zero() {
            return self.to_monic_poly();
        }
        let mut a = self.coeffs.clone();
        let mut b = other.coeffs.clone();
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_empty() {
            if b.len() == 1 {
                return Self::one();
            }
            let (_, r) = Self::poly_div_rem(&a, &b);
            a = b;
            b = make_monic(r);
        }
        Self::from_dense(0, a).to_monic_poly()
    }

    fn to_monic_poly(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Self::from_dense(0, make_monic(self.coeffs.clone()))
    }

    /// The q-integer `[k] = (q^k - q^-k) / (q - q^-1)`.
    pub fn qint(k: i32) -> Self {
        // [k] = q^(k-1) + q^(k-3) + ... + q^(1-k), and [-k] = -[k].
        if k == 0 {
            return Self::zero();
        }
        let m = k.abs();
        let sign = if k < 0 {
            -Rational::one()
        } else {
            Rational::one()
        };
        let mut coeffs = vec![Rational::zero(); (2 * m - 1) as usize];
        for j in 0..m {
            coeffs[(2 * j) as usize] = sign.clone();
        }
        Self::from_dense(1 - m, coeffs)
    }
}

pub(crate) fn rat_pow(x: &Rational, e: i32) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..e.unsigned_abs() {
        acc *= x;
    }
    if e < 0 {
        acc.recip()
    } else {
        acc
    }
}

fn make_monic(mut v: Vec<Rational>) -> Vec<Rational> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    if let Some(lead) = v.last().cloned() {
        if !lead.is_one() {
            for c in v.iter_mut() {
                *c /= &lead;
            }
        }
    }
    v
}

pub(crate) fn fmt_rational(c: &Rational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// Writes `terms` (exponent, coefficient) in the given order with variable `var`.
pub(crate) fn fmt_terms<'a, I>(terms: I, var: &str) -> String
where
    I: Iterator<Item = (i32, &'a Rational)>,
{
    let mut out = String::new();
    for (e, c) in terms {
        let neg = c.is_negative();
        let abs = c.abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push(if neg { '-' } else { '+' });
        }
        let mono = match e {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{e}"),
        };
        if mono.is_empty() {
            out.push_str(&fmt_rational(&abs));
        } else if abs.is_one() {
            out.push_str(&mono);
        } else {
            out.push_str(&fmt_rational(&abs));
            out.push('*');
            out.push_str(&mono);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for LaurentPoly {
    /// Canonical form: terms `c*q^k` in decreasing `k`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&fmt_terms(self.terms().rev(), "q"))
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl<'b> AddAssign<&'b LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &'b LaurentPoly) {
        if rhs.is_zero() {
            return;
        }
        if self.is_zero() {
            *self = rhs.clone();
            return;
        }
        let low = self.low.min(rhs.low);
        let high = self.high_degree().max(rhs.high_degree());
        if low < self.low {
            let pad = (self.low - low) as usize;
            let mut v = vec![Rational::zero(); pad];
            v.append(&mut self.coeffs);
            self.coeffs = v;
            self.low = low;
        }
        let len = (high - low + 1) as usize;
        if self.coeffs.len() < len {
            self.coeffs.resize(len, Rational::zero());
        }
        let off = (rhs.low - low) as usize;
        for (k, c) in rhs.coeffs.iter().enumerate() {
            if !c.is_zero() {
                self.coeffs[off + k] += c;
            }
        }
        self.trim();
    }
}

impl<'b> SubAssign<&'b LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &'b LaurentPoly) {
        let neg = -rhs;
        *self += &neg;
    }
}

impl<'b> Add<&'b LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &'b LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<'b> Sub<&'b LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &'b LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            low: self.low,
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(mut self) -> LaurentPoly {
        for c in self.coeffs.iter_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl<'b> Mul<&'b LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &'b LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        if rhs.is_monomial() {
            return LaurentPoly {
                low: self.low + rhs.low,
                coeffs: self.coeffs.iter().map(|c| c * &rhs.coeffs[0]).collect(),
            };
        }
        if self.is_monomial() {
            return LaurentPoly {
                low: self.low + rhs.low,
                coeffs: rhs.coeffs.iter().map(|c| &self.coeffs[0] * c).collect(),
            };
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        LaurentPoly::from_dense(self.low + rhs.low, out)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
        impl<'b> $tr<&'b LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: &'b LaurentPoly) -> LaurentPoly {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn qint_small_values() {
        assert_eq!(LaurentPoly::qint(1), LaurentPoly::one());
        assert_eq!(
            LaurentPoly::qint(2),
            LaurentPoly::from_terms([(1, r(1)), (-1, r(1))])
        );
        assert_eq!(LaurentPoly::qint(0), LaurentPoly::zero());
        assert_eq!(LaurentPoly::qint(-3), -&LaurentPoly::qint(3));
    }

    #[test]
    fn qint_matches_quotient_definition() {
        for k in 1..8 {
            let num = &LaurentPoly::q_pow(k) - &LaurentPoly::q_pow(-k);
            assert_eq!(
                num.exact_div(&LaurentPoly::big_q()).unwrap(),
                LaurentPoly::qint(k)
            );
        }
    }

    #[test]
    fn four_over_two() {
        let quot = LaurentPoly::qint(4)
            .exact_div(&LaurentPoly::qint(2))
            .unwrap();
        assert_eq!(quot.to_string(), "q^2+q^-2");
    }

    #[test]
    fn canonical_printing() {
        let p = LaurentPoly::from_terms([
            (1, r(2)),
            (-1, r(-1)),
            (0, Rational::new(3.into(), 2.into())),
        ]);
        assert_eq!(p.to_string(), "2*q+3/2-q^-1");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!(LaurentPoly::big_q().to_string(), "q-q^-1");
    }

    #[test]
    fn gcd_drops_units() {
        let a = &LaurentPoly::qint(2) * &LaurentPoly::qint(3);
        let b = &LaurentPoly::qint(2) * &LaurentPoly::q_pow(5);
        let g = a.gcd(&b);
        // [2] = q^-1 (q^2 + 1)
        assert_eq!(g, LaurentPoly::from_terms([(0, r(1)), (2, r(1))]));
    }

    #[test]
    fn evaluation() {
        let v = LaurentPoly::qint(4).evaluate(&r(2)).unwrap();
        assert_eq!(v, Rational::new(85.into(), 8.into()));
        assert_eq!(LaurentPoly::big_q().evaluate(&r(1)).unwrap(), r(0));
        assert!(LaurentPoly::q_pow(-1).evaluate(&r(0)).is_none());
    }
}
