use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Zero};

use super::laurent::LaurentPoly;
use super::Rational;
use crate::error::{Error, Result};

/// Exact element of Q(q): a reduced quotient of Laurent polynomials.
///
/// The denominator is an ordinary polynomial with nonzero constant term and
/// leading coefficient 1. Every power of `q` lives in the numerator, so the
/// representation is unique and `==` is exact equality in Q(q).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl Default for RationalFunction {
    fn default() -> Self {
        Self::zero()
    }
}

impl RationalFunction {
    pub fn zero() -> Self {
        Self {
            num: LaurentPoly::zero(),
            den: LaurentPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }

    pub fn from_poly(num: LaurentPoly) -> Self {
        Self {
            num,
            den: LaurentPoly::one(),
        }
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_poly(LaurentPoly::from_int(c))
    }

    pub fn from_rational(c: Rational) -> Self {
        Self::from_poly(LaurentPoly::constant(c))
    }

    pub fn q_pow(k: i32) -> Self {
        Self::from_poly(LaurentPoly::q_pow(k))
    }

    pub fn big_q() -> Self {
        Self::from_poly(LaurentPoly::big_q())
    }

    pub fn qint(k: i32) -> Self {
        Self::from_poly(LaurentPoly::qint(k))
    }

    /// Builds `num / den`, reducing to canonical form.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        // Move the q-power of the denominator into the numerator.
        let shift = den.low_degree();
        let (mut num, mut den) = if shift != 0 {
            (num.shift(-shift), den.shift(-shift))
        } else {
            (num, den)
        };
        if den.is_monomial() {
            let c = den.leading_coeff();
            if !c.is_one() {
                num = num.scale(&c.recip());
            }
            return Self {
                num,
                den: LaurentPoly::one(),
            };
        }
        let g = num.gcd(&den);
        if !g.is_one() {
            num = num.exact_div(&g).expect("gcd divides numerator");
            den = den.exact_div(&g).expect("gcd divides denominator");
        }
        let lead = den.leading_coeff();
        if !lead.is_one() {
            let inv = lead.recip();
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        Self { num, den }
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num.is_one()
    }

    /// True when the value lies in Q[q, q^-1].
    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_laurent(&self) -> Option<&LaurentPoly> {
        self.is_laurent().then_some(&self.num)
    }

    pub fn constant_value(&self) -> Option<Rational> {
        if self.is_laurent() {
            self.num.constant_value()
        } else {
            None
        }
    }

    pub fn recip(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, e: i32) -> Self {
        if e >= 0 {
            Self::reduce(self.num.pow(e as u32), self.den.pow(e as u32))
        } else {
            self.recip().expect("negative power of zero").pow(-e)
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i32) -> Self {
        Self {
            num: self.num.shift(k),
            den: self.den.clone(),
        }
    }

    pub fn mul_big_q(&self) -> Self {
        if self.is_laurent() {
            return Self::from_poly(self.num.mul_big_q());
        }
        Self::reduce(self.num.mul_big_q(), self.den.clone())
    }

    /// Substitution `q -> q^-1`.
    pub fn invert_q(&self) -> Self {
        Self::reduce(self.num.invert_q(), self.den.invert_q())
    }

    /// Substitution `q -> -q^-1`.
    pub fn bar_involution(&self) -> Self {
        Self::reduce(self.num.bar_involution(), self.den.bar_involution())
    }

    /// Exact value at `q = q0`.
    pub fn evaluate(&self, q0: &Rational) -> Result<Rational> {
        let pole = || Error::Pole(super::fmt_rational(q0));
        let d = self.den.evaluate(q0).ok_or_else(pole)?;
        if d.is_zero() {
            return Err(pole());
        }
        let n = self.num.evaluate(q0).ok_or_else(pole)?;
        Ok(n / d)
    }
}

impl fmt::Display for RationalFunction {
    /// Canonical form; `num` alone when the denominator is 1, else
    /// `num/(den)` with the numerator parenthesized when it has several terms.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let num = self.num.to_string();
        if self.num.is_monomial() {
            write!(f, "{num}/({})", self.den)
        } else {
            write!(f, "({num})/({})", self.den)
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl From<LaurentPoly> for RationalFunction {
    fn from(p: LaurentPoly) -> Self {
        Self::from_poly(p)
    }
}

impl From<i64> for RationalFunction {
    fn from(c: i64) -> Self {
        Self::from_int(c)
    }
}

impl From<Rational> for RationalFunction {
    fn from(c: Rational) -> Self {
        Self::from_rational(c)
    }
}

impl<'b> AddAssign<&'b RationalFunction> for RationalFunction {
    fn add_assign(&mut self, rhs: &'b RationalFunction) {
        if rhs.is_zero() {
            return;
        }
        if self.is_zero() {
            *self = rhs.clone();
            return;
        }
        if self.den == rhs.den {
            self.num += &rhs.num;
            if !self.den.is_one() {
                let num = std::mem::take(&mut self.num);
                let den = std::mem::take(&mut self.den);
                *self = Self::reduce(num, den);
            }
            return;
        }
        let g = self.den.gcd(&rhs.den);
        let left = rhs.den.exact_div(&g).expect("gcd divides");
        let right = self.den.exact_div(&g).expect("gcd divides");
        let num = &(&self.num * &left) + &(&rhs.num * &right);
        let den = &self.den * &left;
        *self = Self::reduce(num, den);
    }
}

impl<'b> SubAssign<&'b RationalFunction> for RationalFunction {
    fn sub_assign(&mut self, rhs: &'b RationalFunction) {
        let neg = -rhs;
        *self += &neg;
    }
}

impl<'b> Add<&'b RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &'b RationalFunction) -> RationalFunction {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<'b> Sub<&'b RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &'b RationalFunction) -> RationalFunction {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -self.num,
            den: self.den,
        }
    }
}

impl<'b> Mul<&'b RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &'b RationalFunction) -> RationalFunction {
        if self.is_zero() || rhs.is_zero() {
            return RationalFunction::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RationalFunction::from_poly(&self.num * &rhs.num);
        }
        // Cross-cancel before multiplying to keep the gcd work small.
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let n1 = self.num.exact_div(&g1).expect("gcd divides");
        let d2 = rhs.den.exact_div(&g1).expect("gcd divides");
        let n2 = rhs.num.exact_div(&g2).expect("gcd divides");
        let d1 = self.den.exact_div(&g2).expect("gcd divides");
        RationalFunction::reduce(&n1 * &n2, &d1 * &d2)
    }
}

impl<'b> Div<&'b RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    /// Panics on division by zero; use [`RationalFunction::recip`] to handle it.
    fn div(self, rhs: &'b RationalFunction) -> RationalFunction {
        self * &rhs.recip().expect("division by zero rational function")
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<RationalFunction> for RationalFunction {
            type Output = RationalFunction;
            fn $m(self, rhs: RationalFunction) -> RationalFunction {
                (&self).$m(&rhs)
            }
        }
        impl<'b> $tr<&'b RationalFunction> for RationalFunction {
            type Output = RationalFunction;
            fn $m(self, rhs: &'b RationalFunction) -> RationalFunction {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<RationalFunction> for &'a RationalFunction {
            type Output = RationalFunction;
            fn $m(self, rhs: RationalFunction) -> RationalFunction {
                self.$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Zero for RationalFunction {
    fn zero() -> Self {
        RationalFunction::zero()
    }
    fn is_zero(&self) -> bool {
        RationalFunction::is_zero(self)
    }
}

impl One for RationalFunction {
    fn one() -> Self {
        RationalFunction::one()
    }
}

impl std::iter::Sum for RationalFunction {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        let mut acc = Self::zero();
        for x in iter {
            acc += &x;
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn reduces_common_factors() {
        let a = RationalFunction::qint(4);
        let b = RationalFunction::qint(2);
        let c = &a / &b;
        assert!(c.is_laurent());
        assert_eq!(c.to_string(), "q^2+q^-2");
    }

    #[test]
    fn denominator_normalized() {
        let f =
            RationalFunction::new(LaurentPoly::one(), LaurentPoly::qint(2).scale(&r(3))).unwrap();
        // 1/(3(q + q^-1)) = q / (3 (q^2 + 1))
        assert_eq!(f.to_string(), "1/3*q/(q^2+1)");
        assert_eq!(f.denominator().low_degree(), 0);
        assert!(f.denominator().leading_coeff().is_one());
    }

    #[test]
    fn sum_of_fractions() {
        let a = RationalFunction::qint(2).recip().unwrap();
        let b = RationalFunction::qint(3).recip().unwrap();
        let s = &a + &b;
        let expected = &(&RationalFunction::qint(2) + &RationalFunction::qint(3))
            / &(&RationalFunction::qint(2) * &RationalFunction::qint(3));
        assert_eq!(s, expected);
        assert_eq!(&(&s - &a) - &b, RationalFunction::zero());
    }

    #[test]
    fn evaluation_and_poles() {
        assert_eq!(RationalFunction::qint(3).evaluate(&r(1)).unwrap(), r(3));
        assert_eq!(RationalFunction::big_q().evaluate(&r(1)).unwrap(), r(0));
        let inv_q = RationalFunction::big_q().recip().unwrap();
        assert!(matches!(inv_q.evaluate(&r(1)), Err(Error::Pole(_))));
        assert!(RationalFunction::new(LaurentPoly::one(), LaurentPoly::zero()).is_err());
    }

    #[test]
    fn bar_involution_fixes_big_q() {
        let f = &RationalFunction::big_q().pow(3) / &RationalFunction::qint(3);
        assert_eq!(
            RationalFunction::big_q().bar_involution(),
            RationalFunction::big_q()
        );
        assert_eq!(f.bar_involution().bar_involution(), f);
    }
}
