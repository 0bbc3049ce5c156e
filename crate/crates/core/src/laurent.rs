//! Sparse Laurent polynomials in `q`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Zero};

use crate::scalar::Scalar;

/// A finite sum `Σ c_e q^e` with no stored zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentPoly<S> {
    terms: BTreeMap<i64, S>,
}

impl<S: Scalar> Default for LaurentPoly<S> {
    fn default() -> Self {
        Self { terms: BTreeMap::new() }
    }
}

impl<S: Scalar> LaurentPoly<S> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(S::one())
    }

    pub fn constant(c: S) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: S, exp: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, c);
        p
    }

    pub fn q() -> Self {
        Self::monomial(S::one(), 1)
    }

    /// `p = q⁻¹`.
    pub fn p() -> Self {
        Self::monomial(S::one(), -1)
    }

    pub fn q_pow(exp: i64) -> Self {
        Self::monomial(S::one(), exp)
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i64, S)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, exp: i64, c: S) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exp) {
            Some(old) => {
                *old = old.clone() + c;
                if old.is_zero() {
                    self.terms.remove(&exp);
                }
            }
            None => {
                self.terms.insert(exp, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &S)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, exp: i64) -> S {
        self.terms.get(&exp).cloned().unwrap_or_else(S::zero)
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// `Some((c, e))` if this is the single term `c q^e`.
    pub fn as_monomial(&self) -> Option<(&S, i64)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(e, c)| (c, *e))
        } else {
            None
        }
    }

    /// `Some(e)` if this is exactly `q^e`.
    pub fn as_q_power(&self) -> Option<i64> {
        self.as_monomial().filter(|(c, _)| c.is_one()).map(|(_, e)| e)
    }

    /// Multiply by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &S) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, x)| (*e, x.clone() * c.clone())).collect(),
        }
    }

    /// Value at `q = 1`.
    pub fn eval_q1(&self) -> S {
        self.terms.values().fold(S::zero(), |acc, c| acc + c.clone())
    }

    /// Value at a nonzero point.
    pub fn eval(&self, x: &S) -> S {
        let inv = S::one() / x.clone();
        let mut acc = S::zero();
        for (&e, c) in &self.terms {
            let base = if e < 0 { &inv } else { x };
            let mut pw = S::one();
            for _ in 0..e.unsigned_abs() {
                pw = pw * base.clone();
            }
            acc = acc + c.clone() * pw;
        }
        acc
    }
}

impl<S: Scalar> Zero for LaurentPoly<S> {
    fn zero() -> Self {
        Self::default()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<S: Scalar> One for LaurentPoly<S> {
    fn one() -> Self {
        Self::constant(S::one())
    }
}

impl<S: Scalar> AddAssign<&LaurentPoly<S>> for LaurentPoly<S> {
    fn add_assign(&mut self, rhs: &LaurentPoly<S>) {
        for (&e, c) in &rhs.terms {
            self.add_term(e, c.clone());
        }
    }
}

impl<S: Scalar> SubAssign<&LaurentPoly<S>> for LaurentPoly<S> {
    fn sub_assign(&mut self, rhs: &LaurentPoly<S>) {
        for (&e, c) in &rhs.terms {
            self.add_term(e, -c.clone());
        }
    }
}

impl<S: Scalar> Add for LaurentPoly<S> {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        self += &rhs;
        self
    }
}

impl<S: Scalar> Add<&LaurentPoly<S>> for &LaurentPoly<S> {
    type Output = LaurentPoly<S>;
    fn add(self, rhs: &LaurentPoly<S>) -> LaurentPoly<S> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<S: Scalar> Sub for LaurentPoly<S> {
    type Output = Self;
    fn sub(mut self, rhs: Self) -> Self {
        self -= &rhs;
        self
    }
}

impl<S: Scalar> Sub<&LaurentPoly<S>> for &LaurentPoly<S> {
    type Output = LaurentPoly<S>;
    fn sub(self, rhs: &LaurentPoly<S>) -> LaurentPoly<S> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<S: Scalar> Neg for LaurentPoly<S> {
    type Output = Self;
    fn neg(self) -> Self {
        Self {
            terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl<S: Scalar> Mul<&LaurentPoly<S>> for &LaurentPoly<S> {
    type Output = LaurentPoly<S>;
    fn mul(self, rhs: &LaurentPoly<S>) -> LaurentPoly<S> {
        let mut out = LaurentPoly::zero();
        for (&e1, c1) in &self.terms {
            for (&e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1.clone() * c2.clone());
            }
        }
        out
    }
}

impl<S: Scalar> Mul for LaurentPoly<S> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl<S: Scalar + fmt::Display> fmt::Display for LaurentPoly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (&e, c) in self.terms.iter().rev() {
            let mut coeff = c.to_string();
            if !first {
                if let Some(rest) = coeff.strip_prefix('-') {
                    f.write_str(" - ")?;
                    coeff = rest.to_string();
                } else {
                    f.write_str(" + ")?;
                }
            }
            first = false;
            match e {
                0 => write!(f, "{coeff}")?,
                1 => write!(f, "{coeff}*q")?,
                _ => write!(f, "{coeff}*q^{e}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Ratio;

    type L = LaurentPoly<Ratio<i64>>;

    fn r(n: i64) -> Ratio<i64> {
        Ratio::from_integer(n)
    }

    #[test]
    fn arithmetic() {
        let q = L::q();
        let p = L::p();
        assert_eq!(&q * &p, L::one());
        let a = &q - &L::one();
        let sq = &a * &a;
        assert_eq!(sq.coefficient(2), r(1));
        assert_eq!(sq.coefficient(1), r(-2));
        assert_eq!(sq.coefficient(0), r(1));
        assert!((&a - &a).is_zero());
        assert_eq!(a.eval_q1(), r(0));
        assert_eq!(p.eval(&r(2)), Ratio::new(1, 2));
    }

    #[test]
    fn q_powers() {
        assert_eq!(L::q_pow(-3).as_q_power(), Some(-3));
        assert_eq!(L::monomial(r(2), 1).as_q_power(), None);
        assert_eq!((L::q() + L::one()).as_q_power(), None);
    }

    #[test]
    fn display() {
        let x = L::from_terms([(1, r(1)), (0, r(-1)), (-1, r(2))]);
        assert_eq!(x.to_string(), "1*q - 1 + 2*q^-1");
    }
}
