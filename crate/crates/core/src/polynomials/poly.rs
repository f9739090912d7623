use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

/// Sparse integer polynomial `Σ c_ij xⁱ yʲ`. Zero coefficients are never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BivariatePolynomial {
    terms: BTreeMap<(u32, u32), i128>,
}

impl BivariatePolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0, 0)
    }

    pub fn monomial(coeff: i128, i: u32, j: u32) -> Self {
        let mut terms = BTreeMap::new();
        if coeff != 0 {
            terms.insert((i, j), coeff);
        }
        BivariatePolynomial { terms }
    }

    pub fn x() -> Self {
        Self::monomial(1, 1, 0)
    }

    pub fn y() -> Self {
        Self::monomial(1, 0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, i: u32, j: u32) -> i128 {
        self.terms.get(&(i, j)).copied().unwrap_or(0)
    }

    /// `((i, j), c)` pairs in ascending `(i, j)` order.
    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), i128)> + '_ {
        self.terms.iter().map(|(&k, &c)| (k, c))
    }

    fn add_term(&mut self, key: (u32, u32), c: i128) {
        let entry = self.terms.entry(key).or_insert(0);
        *entry += c;
        if *entry == 0 {
            self.terms.remove(&key);
        }
    }

    /// Multiplies by `xᵃ yᵇ`.
    pub fn shift(&self, a: u32, b: u32) -> Self {
        let terms = self.terms.iter().map(|(&(i, j), &c)| ((i + a, j + b), c)).collect();
        BivariatePolynomial { terms }
    }

    pub fn evaluate(&self, x: f64, y: f64) -> f64 {
        self.terms
            .iter()
            .map(|(&(i, j), &c)| c as f64 * x.powi(i as i32) * y.powi(j as i32))
            .sum()
    }

    pub fn evaluate_int(&self, x: i128, y: i128) -> i128 {
        self.terms.iter().map(|(&(i, j), &c)| c * x.pow(i) * y.pow(j)).sum()
    }

    /// Coefficients of `xⁱ` in `P(x, y0)` for integer `y0`.
    pub fn at_y(&self, y0: i128) -> Polynomial {
        let mut out = Polynomial::zero();
        for (&(i, j), &c) in &self.terms {
            out = out + Polynomial::monomial(c * y0.pow(j), i as usize);
        }
        out
    }
}

impl Add for BivariatePolynomial {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        for (k, c) in rhs.terms {
            self.add_term(k, c);
        }
        self
    }
}

impl Mul for &BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn mul(self, rhs: Self) -> BivariatePolynomial {
        let mut out = BivariatePolynomial::zero();
        for (&(a, b), &c) in &self.terms {
            for (&(i, j), &d) in &rhs.terms {
                out.add_term((a + i, b + j), c * d);
            }
        }
        out
    }
}

fn write_term(
    f: &mut fmt::Formatter<'_>,
    first: bool,
    coeff: i128,
    powers: &[(&str, u32)],
) -> fmt::Result {
    let sign = if coeff < 0 { "-" } else { "+" };
    if first {
        if coeff < 0 {
            write!(f, "-")?;
        }
    } else {
        write!(f, " {sign} ")?;
    }
    let mag = coeff.unsigned_abs();
    let factors: Vec<String> = powers
        .iter()
        .filter(|(_, p)| *p > 0)
        .map(|(v, p)| if *p == 1 { v.to_string() } else { format!("{v}^{p}") })
        .collect();
    match (mag, factors.is_empty()) {
        (_, true) => write!(f, "{mag}"),
        (1, false) => write!(f, "{}", factors.join("*")),
        (_, false) => write!(f, "{mag}*{}", factors.join("*")),
    }
}

/// Graded order: total degree descending, then the power of `x` descending.
impl fmt::Display for BivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut keys: Vec<&(u32, u32)> = self.terms.keys().collect();
        keys.sort_by_key(|k| std::cmp::Reverse((k.0 + k.1, k.0)));
        for (idx, key) in keys.into_iter().enumerate() {
            write_term(f, idx == 0, self.terms[key], &[("x", key.0), ("y", key.1)])?;
        }
        Ok(())
    }
}

/// Dense univariate integer polynomial, lowest degree first, no trailing zeros.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Polynomial {
    coeffs: Vec<i128>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: i128) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn monomial(c: i128, degree: usize) -> Self {
        let mut coeffs = vec![0; degree + 1];
        coeffs[degree] = c;
        Self::from_coeffs(coeffs)
    }

    /// `a + b·t`.
    pub fn linear(a: i128, b: i128) -> Self {
        Self::from_coeffs(vec![a, b])
    }

    pub fn from_coeffs(mut coeffs: Vec<i128>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[i128] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> i128 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Polynomial::constant(1), |acc, _| &acc * self)
    }

    pub fn scale(&self, c: i128) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn evaluate(&self, t: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * t + c as f64)
    }

    pub fn evaluate_int(&self, t: i128) -> i128 {
        self.coeffs.iter().rev().fold(0, |acc, &c| acc * t + c)
    }

    /// Human-readable form in the variable `var`, highest degree first.
    pub fn format_in(&self, var: &str) -> String {
        struct Show<'a>(&'a Polynomial, &'a str);
        impl fmt::Display for Show<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                let Show(p, var) = *self;
                if p.is_zero() {
                    return write!(f, "0");
                }
                let mut first = true;
                for (k, &c) in p.coeffs.iter().enumerate().rev() {
                    if c != 0 {
                        write_term(f, first, c, &[(var, k as u32)])?;
                        first = false;
                    }
                }
                Ok(())
            }
        }
        Show(self, var).to_string()
    }
}

impl Add for Polynomial {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Self::from_coeffs((0..len).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Neg for Polynomial {
    type Output = Self;
    fn neg(self) -> Self {
        self.scale(-1)
    }
}

impl Sub for Polynomial {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Self) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![0; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::from_coeffs(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bivariate_display_and_arithmetic() {
        let x = BivariatePolynomial::x();
        let y = BivariatePolynomial::y();
        let p = &(&x * &x) * &x + &x * &x + x.clone() + y.clone();
        assert_eq!(p.to_string(), "x^3 + x^2 + x + y");
        assert_eq!(p.evaluate_int(1, 1), 4);
        let q = BivariatePolynomial::monomial(-2, 1, 2) + BivariatePolynomial::one();
        assert_eq!(q.to_string(), "-2*x*y^2 + 1");
        assert!((p + q.clone() + BivariatePolynomial::monomial(2, 1, 2)).coeff(1, 2) == 0);
        assert_eq!(BivariatePolynomial::zero().to_string(), "0");
    }

    #[test]
    fn univariate_arithmetic() {
        let t = Polynomial::linear(-1, 1);
        assert_eq!(t.pow(2).coeffs(), &[1, -2, 1]);
        assert_eq!((t.clone() - t.clone()).degree(), None);
        let q = &Polynomial::monomial(1, 1) * &t;
        assert_eq!(q.format_in("q"), "q^2 - q");
        assert_eq!(q.evaluate_int(3), 6);
        assert_eq!(q.evaluate(0.5), -0.25);
    }
}
