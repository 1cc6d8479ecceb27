//! Exact arithmetic in Q(q).

mod laurent;
mod parse;
mod pretty;
mod qpoly;
mod ratfunc;

pub use laurent::LaurentPoly;
pub use parse::{parse_expr, parse_rational};
pub use pretty::pretty;
pub use qpoly::QPoly;
pub use ratfunc::RationalFunction;

pub(crate) use laurent::fmt_rational;

pub type Rational = num_rational::BigRational;

/// Short alias used throughout the crate.
pub type Coeff = RationalFunction;

pub fn qint(k: i32) -> LaurentPoly {
    LaurentPoly::qint(k)
}

/// Expresses `f` as a polynomial in `Q = q - q^-1` when possible.
pub fn rewrite_in_q(f: &LaurentPoly) -> Option<QPoly> {
    QPoly::rewrite(f)
}

pub fn evaluate(f: &RationalFunction, q0: &Rational) -> crate::Result<Rational> {
    f.evaluate(q0)
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}
