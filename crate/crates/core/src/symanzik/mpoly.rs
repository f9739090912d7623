use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

/// Polynomial variables. Indices are 0-based and shown 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Var {
    /// Feynman parameter `x_j` of internal edge `j`.
    X(u32),
    /// Auxiliary parameter `z_j` of external leg `j`.
    Z(u32),
    /// `p_j · p_k / μ²` with `j <= k`.
    S(u32, u32),
    /// `m_j² / μ²` of internal edge `j`.
    M(u32),
}

impl Var {
    /// Momentum product with the indices put in order.
    pub fn s(j: u32, k: u32) -> Var {
        Var::S(j.min(k), j.max(k))
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Var::X(j) => write!(f, "x{}", j + 1),
            Var::Z(j) => write!(f, "z{}", j + 1),
            Var::S(j, k) => write!(f, "s{}{}", j + 1, k + 1),
            Var::M(j) => write!(f, "M{}", j + 1),
        }
    }
}

/// Product of variable powers, sorted by variable, exponents positive.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Monomial(Vec<(Var, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: Var) -> Self {
        Monomial(vec![(v, 1)])
    }

    pub fn from_powers(mut powers: Vec<(Var, u32)>) -> Self {
        powers.retain(|&(_, e)| e > 0);
        powers.sort();
        let mut out: Vec<(Var, u32)> = Vec::with_capacity(powers.len());
        for (v, e) in powers {
            match out.last_mut() {
                Some((w, f)) if *w == v => *f += e,
                _ => out.push((v, e)),
            }
        }
        Monomial(out)
    }

    pub fn powers(&self) -> &[(Var, u32)] {
        &self.0
    }

    pub fn exponent(&self, v: Var) -> u32 {
        self.0.iter().find(|&&(w, _)| w == v).map_or(0, |&(_, e)| e)
    }

    pub fn degree_where(&self, pred: impl Fn(Var) -> bool) -> u32 {
        self.0.iter().filter(|&&(v, _)| pred(v)).map(|&(_, e)| e).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            let ord = match (a.get(i), b.get(j)) {
                (Some(x), Some(y)) => x.0.cmp(&y.0),
                (Some(_), None) => Ordering::Less,
                _ => Ordering::Greater,
            };
            match ord {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        Monomial(out)
    }

    /// `self / other` when every exponent of `other` fits.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = self.0.clone();
        for &(v, e) in &other.0 {
            let slot = out.iter_mut().find(|(w, _)| *w == v)?;
            if slot.1 < e {
                return None;
            }
            slot.1 -= e;
        }
        out.retain(|&(_, e)| e > 0);
        Some(Monomial(out))
    }

    /// Lexicographic monomial order with `Var` order as variable priority.
    pub fn cmp_lex(&self, other: &Monomial) -> Ordering {
        let (a, b) = (&self.0, &other.0);
        for k in 0..a.len().max(b.len()) {
            match (a.get(k), b.get(k)) {
                (Some(x), Some(y)) => {
                    if x.0 != y.0 {
                        // The side holding the earlier variable is larger.
                        return y.0.cmp(&x.0);
                    }
                    if x.1 != y.1 {
                        return x.1.cmp(&y.1);
                    }
                }
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (None, None) => unreachable!(),
            }
        }
        Ordering::Equal
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (i, (v, e)) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Sparse integer polynomial over [`Var`]; canonical, so `==` is syntactic.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MultivariatePolynomial {
    terms: BTreeMap<Monomial, i128>,
}

impl MultivariatePolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: i128) -> Self {
        Self::term(c, Monomial::one())
    }

    pub fn term(c: i128, m: Monomial) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    pub fn var(v: Var) -> Self {
        Self::term(1, Monomial::var(v))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, i128)> {
        self.terms.iter().map(|(m, &c)| (m, c))
    }

    pub fn coeff(&self, m: &Monomial) -> i128 {
        self.terms.get(m).copied().unwrap_or(0)
    }

    pub fn add_term(&mut self, m: Monomial, c: i128) {
        if c == 0 {
            return;
        }
        match self.terms.entry(m) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if *o.get() == 0 {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn scale(&self, c: i128) -> Self {
        if c == 0 {
            return Self::zero();
        }
        let terms = self.terms.iter().map(|(m, &v)| (m.clone(), v * c)).collect();
        MultivariatePolynomial { terms }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        let terms = self.terms.iter().map(|(k, &v)| (k.mul(m), v)).collect();
        MultivariatePolynomial { terms }
    }

    /// Keeps the terms whose monomial satisfies `pred`.
    pub fn filter(&self, pred: impl Fn(&Monomial) -> bool) -> Self {
        let terms = self.terms.iter().filter(|(m, _)| pred(m)).map(|(m, &c)| (m.clone(), c)).collect();
        MultivariatePolynomial { terms }
    }

    /// Splits by total degree in the variables selected by `pred`.
    pub fn graded_by(&self, pred: impl Fn(Var) -> bool + Copy) -> BTreeMap<u32, Self> {
        let mut out: BTreeMap<u32, Self> = BTreeMap::new();
        for (m, &c) in &self.terms {
            out.entry(m.degree_where(pred)).or_default().add_term(m.clone(), c);
        }
        out
    }

    /// `(degree_min, degree_max)` in the selected variables; `None` if zero.
    pub fn degree_range(&self, pred: impl Fn(Var) -> bool + Copy) -> Option<(u32, u32)> {
        let degs = self.terms.keys().map(|m| m.degree_where(pred));
        let (mut lo, mut hi) = (u32::MAX, 0);
        let mut any = false;
        for d in degs {
            any = true;
            lo = lo.min(d);
            hi = hi.max(d);
        }
        any.then_some((lo, hi))
    }

    fn leading(&self) -> Option<(&Monomial, i128)> {
        self.terms.iter().max_by(|a, b| a.0.cmp_lex(b.0)).map(|(m, &c)| (m, c))
    }

    /// Exact quotient `self / divisor`, or `None` if the division leaves a
    /// remainder.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let (lead_m, lead_c) = divisor.leading()?;
        let (lead_m, lead_c) = (lead_m.clone(), lead_c);
        let mut rem = self.clone();
        let mut quotient = Self::zero();
        while let Some((m, c)) = rem.leading() {
            if c % lead_c != 0 {
                return None;
            }
            let q_m = m.div(&lead_m)?;
            let q_c = c / lead_c;
            rem = rem - divisor.mul_monomial(&q_m).scale(q_c);
            quotient.add_term(q_m, q_c);
        }
        Some(quotient)
    }

    /// Replaces each variable `v` by `subst(v)` when it returns a polynomial.
    pub fn substitute(&self, subst: impl Fn(Var) -> Option<Self>) -> Self {
        let mut out = Self::zero();
        for (m, &c) in &self.terms {
            let mut acc = Self::constant(c);
            let mut kept = Vec::new();
            for &(v, e) in m.powers() {
                match subst(v) {
                    Some(p) => {
                        for _ in 0..e {
                            acc = &acc * &p;
                        }
                    }
                    None => kept.push((v, e)),
                }
            }
            out = out + acc.mul_monomial(&Monomial::from_powers(kept));
        }
        out
    }

    pub fn evaluate(&self, value: impl Fn(Var) -> f64) -> f64 {
        self.terms
            .iter()
            .map(|(m, &c)| {
                m.powers().iter().fold(c as f64, |acc, &(v, e)| acc * value(v).powi(e as i32))
            })
            .sum()
    }

    /// Sorted variables that occur anywhere in the polynomial.
    pub fn variables(&self) -> Vec<Var> {
        let mut vars: Vec<Var> =
            self.terms.keys().flat_map(|m| m.powers().iter().map(|&(v, _)| v)).collect();
        vars.sort();
        vars.dedup();
        vars
    }
}

impl Add for MultivariatePolynomial {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
        self
    }
}

impl Neg for MultivariatePolynomial {
    type Output = Self;
    fn neg(self) -> Self {
        self.scale(-1)
    }
}

impl Sub for MultivariatePolynomial {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Mul for &MultivariatePolynomial {
    type Output = MultivariatePolynomial;
    fn mul(self, rhs: Self) -> MultivariatePolynomial {
        let mut terms: BTreeMap<Monomial, i128> = BTreeMap::new();
        for (a, &c) in &self.terms {
            for (b, &d) in &rhs.terms {
                *terms.entry(a.mul(b)).or_insert(0) += c * d;
            }
        }
        terms.retain(|_, c| *c != 0);
        MultivariatePolynomial { terms }
    }
}

/// Terms in descending lexicographic order.
impl fmt::Display for MultivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut terms: Vec<(&Monomial, i128)> = self.terms().collect();
        terms.sort_by(|a, b| b.0.cmp_lex(a.0));
        for (i, (m, c)) in terms.into_iter().enumerate() {
            let mag = c.unsigned_abs();
            match (i, c < 0) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.powers().is_empty() {
                write!(f, "{mag}")?;
            } else if mag == 1 {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}
