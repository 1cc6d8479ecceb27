use std::collections::BTreeMap;

use num_traits::{One, Signed};

use super::{LaurentPoly, QPoly, Rational, RationalFunction};

/// Human-oriented rendering: q-integer products (`[4]/[2]`, `q^6*[2.3]`),
/// then polynomials in `Q` (`2*Q`, `Q^2+2`), falling back to the canonical
/// form. Every output parses back to the same value.
pub fn pretty(f: &RationalFunction) -> String {
    if f.is_zero() {
        return "0".into();
    }
    let q_form = f.as_laurent().and_then(QPoly::rewrite);
    match (factor_brackets(f), q_form) {
        (Some(prod), _) if !prod.brackets.is_empty() => prod.render(),
        (_, Some(p)) => p.to_string(),
        (Some(prod), None) => prod.render(),
        (None, None) => f.to_string(),
    }
}

/// `coeff * q^q_exp * Q^big_q_exp * prod [k]^e`.
struct BracketProduct {
    coeff: Rational,
    q_exp: i32,
    big_q_exp: i32,
    brackets: BTreeMap<i32, i32>,
}

impl BracketProduct {
    fn render(&self) -> String {
        let mut num: Vec<String> = Vec::new();
        let mut den: Vec<String> = Vec::new();
        let sign = if self.coeff.is_negative() { "-" } else { "" };
        let c = self.coeff.abs();
        if !c.numer().is_one() {
            num.push(c.numer().to_string());
        }
        if !c.denom().is_one() {
            den.push(c.denom().to_string());
        }
        match self.q_exp {
            0 => {}
            1 => num.push("q".into()),
            e => num.push(format!("q^{e}")),
        }
        match self.big_q_exp {
            0 => {}
            1 => num.push("Q".into()),
            -1 => den.push("Q".into()),
            e if e > 0 => num.push(format!("Q^{e}")),
            e => den.push(format!("Q^{}", -e)),
        }
        let list = |positive: bool| {
            let mut ks: Vec<String> = Vec::new();
            for (&k, &e) in &self.brackets {
                let m = if positive { e } else { -e };
                for _ in 0..m.max(0) {
                    ks.push(k.to_string());
                }
            }
            ks
        };
        let up = list(true);
        if !up.is_empty() {
            num.push(format!("[{}]", up.join(".")));
        }
        let down = list(false);
        if !down.is_empty() {
            den.push(format!("[{}]", down.join(".")));
        }
        let mut out = String::from(sign);
        if num.is_empty() {
            out.push('1');
        } else {
            out.push_str(&num.join("*"));
        }
        match den.len() {
            0 => {}
            1 => {
                out.push('/');
                out.push_str(&den[0]);
            }
            _ => {
                out.push_str("/(");
                out.push_str(&den.join("*"));
                out.push(')');
            }
        }
        out
    }
}

/// The d-th cyclotomic polynomial in `q`.
fn cyclotomic(d: i32) -> LaurentPoly {
    thread_local! {
        static CACHE: std::cell::RefCell<Vec<LaurentPoly>> = const { std::cell::RefCell::new(Vec::new()) };
    }
    CACHE.with(|cache| {
        let mut cache = cache.borrow_mut();
        while cache.len() < d as usize {
            let m = cache.len() as i32 + 1;
            let mut p = &LaurentPoly::q_pow(m) - &LaurentPoly::one();
            for e in 1..m {
                if m % e == 0 {
                    p = p
                        .exact_div(&cache[(e - 1) as usize])
                        .expect("cyclotomic divides");
                }
            }
            cache.push(p);
        }
        cache[(d - 1) as usize].clone()
    })
}

/// Multiplicities of cyclotomic factors of `p`, or `None` if a non-cyclotomic
/// factor remains.
fn cyclotomic_exponents(p: &LaurentPoly, out: &mut BTreeMap<i32, i32>, sign: i32) -> Option<()> {
    let mut rest = p.shift(-p.low_degree());
    let mut d = 1;
    while rest.high_degree() > 0 {
        // phi(d) > d/6 in the range that matters.
        if d > 6 * rest.high_degree() + 6 {
            return None;
        }
        let c = cyclotomic(d);
        if c.high_degree() <= rest.high_degree() {
            while let Some(quot) = rest.exact_div(&c) {
                rest = quot;
                *out.entry(d).or_insert(0) += sign;
            }
        }
        d += 1;
    }
    Some(())
}

fn bracket_cyclotomics(k: i32) -> Vec<i32> {
    (3..=2 * k).filter(|d| (2 * k) % d == 0).collect()
}

fn factor_brackets(f: &RationalFunction) -> Option<BracketProduct> {
    let mut cyc: BTreeMap<i32, i32> = BTreeMap::new();
    cyclotomic_exponents(f.numerator(), &mut cyc, 1)?;
    cyclotomic_exponents(f.denominator(), &mut cyc, -1)?;
    let m1 = cyc.remove(&1).unwrap_or(0);
    let m2 = cyc.remove(&2).unwrap_or(0);
    if m1 != m2 {
        return None;
    }
    let mut brackets: BTreeMap<i32, i32> = BTreeMap::new();
    while let Some((&d, &m)) = cyc.iter().next_back() {
        if m == 0 {
            cyc.remove(&d);
            continue;
        }
        if d % 2 == 1 {
            return None;
        }
        let k = d / 2;
        *brackets.entry(k).or_insert(0) += m;
        for c in bracket_cyclotomics(k) {
            *cyc.entry(c).or_insert(0) -= m;
        }
    }
    brackets.retain(|_, e| *e != 0);
    let mut base = RationalFunction::big_q().pow(m1);
    for (&k, &e) in &brackets {
        base = &base * &RationalFunction::qint(k).pow(e);
    }
    let rest = f / &base;
    let mono = rest.as_laurent()?;
    if !mono.is_monomial() {
        return None;
    }
    Some(BracketProduct {
        coeff: mono.leading_coeff(),
        q_exp: mono.low_degree(),
        big_q_exp: m1,
        brackets,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::parse_expr;

    fn pp(s: &str) -> String {
        pretty(&parse_expr(s).unwrap())
    }

    #[test]
    fn bracket_forms() {
        assert_eq!(pp("q^2+q^-2"), "[4]/[2]");
        assert_eq!(pp("q^6*[2]*[3]"), "q^6*[2.3]");
        assert_eq!(pp("3*q^2*[2]*[4]"), "3*q^2*[2.4]");
        assert_eq!(pp("1/([2]*[2])"), "1/[2.2]");
        assert_eq!(pp("q^-6[2.3.4]"), "q^-6*[2.3.4]");
    }

    #[test]
    fn q_forms() {
        assert_eq!(pp("q^2-2+q^-2"), "Q^2");
        assert_eq!(pp("2*q-2*q^-1"), "2*Q");
        assert_eq!(pp("6"), "6");
        assert_eq!(pp("0"), "0");
        assert_eq!(pp("q^2+q^-2"), "[4]/[2]");
        assert_eq!(pp("q^2+q^-2-2"), "Q^2");
    }

    #[test]
    fn fallbacks() {
        assert_eq!(pp("q^2-1"), "q*Q");
        assert_eq!(pp("q^2-2"), "q^2-2");
        assert_eq!(pp("-q"), "-q");
    }

    #[test]
    fn round_trips() {
        for s in [
            "q^2+q^-2",
            "q^6[2.3]",
            "1/[2.2]",
            "q^2-2",
            "2Q",
            "3q^-2[2.4]",
            "-Q/[3]",
            "q^3",
            "-1/q",
        ] {
            let v = parse_expr(s).unwrap();
            assert_eq!(parse_expr(&pretty(&v)).unwrap(), v, "{s}");
        }
    }
}
