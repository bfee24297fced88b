//! Rational functions in named parameters, used for parametric operator families.

use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::poly::Poly;
use crate::rational::Rational;

/// `num / den`, both polynomials in the parameters of one family. No simplification is done.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParamExpr {
    num: Poly,
    den: Poly,
}

impl ParamExpr {
    pub fn constant(nvars: usize, c: Rational) -> Self {
        ParamExpr { num: Poly::constant(nvars, c), den: Poly::constant(nvars, Rational::one()) }
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        ParamExpr { num: Poly::var(nvars, i), den: Poly::constant(nvars, Rational::one()) }
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    /// `None` when the denominator vanishes at `point`.
    pub fn eval(&self, point: &[Rational]) -> Option<Rational> {
        let d = self.den.eval(point).ok()?;
        let n = self.num.eval(point).ok()?;
        d.recip().map(|inv| n * inv)
    }

    pub fn denominator_vanishes(&self, point: &[Rational]) -> bool {
        self.den.eval(point).map_or(true, |d| d.is_zero())
    }

    pub fn to_string_with(&self, names: &[&str]) -> String {
        let name = |i: usize| names[i].to_string();
        if self.den == Poly::constant(self.den.nvars(), Rational::one()) {
            self.num.to_string_with(name)
        } else {
            format!("({})/({})", self.num.to_string_with(name), self.den.to_string_with(name))
        }
    }
}

impl Add for ParamExpr {
    type Output = ParamExpr;
    fn add(self, rhs: ParamExpr) -> ParamExpr {
        if self.den == rhs.den {
            return ParamExpr { num: &self.num + &rhs.num, den: self.den };
        }
        ParamExpr { num: &(&self.num * &rhs.den) + &(&rhs.num * &self.den), den: &self.den * &rhs.den }
    }
}

impl Neg for ParamExpr {
    type Output = ParamExpr;
    fn neg(self) -> ParamExpr {
        ParamExpr { num: -&self.num, den: self.den }
    }
}

impl Sub for ParamExpr {
    type Output = ParamExpr;
    fn sub(self, rhs: ParamExpr) -> ParamExpr {
        self + (-rhs)
    }
}

impl Mul for ParamExpr {
    type Output = ParamExpr;
    fn mul(self, rhs: ParamExpr) -> ParamExpr {
        ParamExpr { num: &self.num * &rhs.num, den: &self.den * &rhs.den }
    }
}

impl Div for ParamExpr {
    type Output = ParamExpr;
    fn div(self, rhs: ParamExpr) -> ParamExpr {
        ParamExpr { num: &self.num * &rhs.den, den: &self.den * &rhs.num }
    }
}

/// Named parameter list for building expressions.
#[derive(Debug, Clone)]
pub struct Params(pub Vec<&'static str>);

impl Params {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn v(&self, name: &str) -> ParamExpr {
        let i = self.0.iter().position(|&p| p == name).unwrap_or_else(|| panic!("unknown parameter {name}"));
        ParamExpr::var(self.len(), i)
    }

    pub fn int(&self, c: i64) -> ParamExpr {
        ParamExpr::constant(self.len(), Rational::from_int(c))
    }

    pub fn zero(&self) -> ParamExpr {
        self.int(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    #[test]
    fn evaluates_rational_functions() {
        let p = Params(vec!["a1", "lambda"]);
        let e = p.v("a1") * p.v("a1") / (p.int(2) * p.v("a1") + p.v("lambda"));
        assert_eq!(e.eval(&[q(1, 1), q(1, 1)]), Some(q(1, 3)));
        assert_eq!(e.eval(&[q(1, 1), q(-2, 1)]), None);
        assert_eq!(e.to_string_with(&p.0), "(1*a1*a1)/(2*a1 + 1*lambda)");
        assert_eq!((p.v("a1") - p.int(1)).to_string_with(&p.0), "1*a1 + -1");
    }
}
