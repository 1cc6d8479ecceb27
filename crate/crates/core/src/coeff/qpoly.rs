use std::fmt;

use num_traits::Zero;

use super::laurent::{fmt_terms, LaurentPoly};
use super::Rational;

/// Polynomial in `Q = q - q^-1`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct QPoly {
    coeffs: Vec<Rational>,
}

impl QPoly {
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Substitutes `Q = q - q^-1`.
    pub fn to_laurent(&self) -> LaurentPoly {
        let mut acc = LaurentPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul_big_q();
            acc += &LaurentPoly::constant(c.clone());
        }
        acc
    }

    /// Writes `f` as a polynomial in `Q`, or `None` when `f` is not in Q[Q].
    ///
    /// Eliminates the top term `c q^d` with `c Q^d` until nothing is left; the
    /// top exponent strictly drops at each step.
    pub fn rewrite(f: &LaurentPoly) -> Option<Self> {
        let mut rest = f.clone();
        let mut coeffs: Vec<Rational> = Vec::new();
        while !rest.is_zero() {
            let d = rest.high_degree();
            if d < 0 {
                return None;
            }
            let c = rest.leading_coeff();
            let d = d as usize;
            if coeffs.len() <= d {
                coeffs.resize(d + 1, Rational::zero());
            }
            coeffs[d] += &c;
            let term = LaurentPoly::big_q().pow(d as u32).scale(&c);
            rest -= &term;
        }
        Some(Self::from_coeffs(coeffs))
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| (e as i32, c));
        f.write_str(&fmt_terms(terms, "Q"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rewrite_examples() {
        let q = QPoly::rewrite(&LaurentPoly::big_q()).unwrap();
        assert_eq!(q.to_string(), "Q");
        let f = &LaurentPoly::q_pow(2) + &LaurentPoly::q_pow(-2);
        assert_eq!(QPoly::rewrite(&f).unwrap().to_string(), "Q^2+2");
        assert!(QPoly::rewrite(&LaurentPoly::q_pow(1)).is_none());
        assert!(QPoly::rewrite(&LaurentPoly::q_pow(-1)).is_none());
    }

    #[test]
    fn round_trip() {
        let f = &LaurentPoly::q_pow(2) + &LaurentPoly::q_pow(-2);
        assert_eq!(QPoly::rewrite(&f).unwrap().to_laurent(), f);
    }
}
