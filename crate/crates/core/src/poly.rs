//! Sparse multivariate polynomials with integer coefficients.
//!
//! Monomials are ordered reverse-lexicographically: compare exponents from
//! the highest variable index downward, larger exponent wins. Under this
//! order the Lehmer-code monomial is the leading term of a Schubert
//! polynomial.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use smallvec::SmallVec;
use thiserror::Error;

use crate::perm::LehmerCode;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("integer overflow in coefficient arithmetic")]
    CoefficientOverflow,
    #[error("integer overflow in exponent arithmetic")]
    ExponentOverflow,
    #[error("the zero polynomial has no leading monomial")]
    ZeroPolynomial,
    #[error("e_{b}(x1..x{a}) requires 1 <= b <= a")]
    InvalidElementary { b: usize, a: usize },
}

pub type Exponent = u16;

/// Exponent vector; position `i` holds the exponent of `x_{i+1}`.
/// Trailing zeros are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exps: SmallVec<[Exponent; 8]>,
}

impl Monomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn from_exponents<I: IntoIterator<Item = Exponent>>(exps: I) -> Self {
        let mut m = Self {
            exps: exps.into_iter().collect(),
        };
        m.trim();
        m
    }

    /// `x_i`, 1-indexed.
    pub fn var(i: usize) -> Self {
        assert!(i >= 1, "variables are 1-indexed");
        let mut exps = SmallVec::from_elem(0, i);
        exps[i - 1] = 1;
        Self { exps }
    }

    /// `x^L`, the exponent of `x_i` being the code entry `l_i`.
    pub fn from_code(code: &LehmerCode) -> Self {
        Self::from_exponents(code.entries().iter().map(|&l| l as Exponent))
    }

    fn trim(&mut self) {
        while self.exps.last() == Some(&0) {
            self.exps.pop();
        }
    }

    /// Exponent of `x_i`, 1-indexed.
    pub fn exponent(&self, i: usize) -> Exponent {
        self.exps.get(i - 1).copied().unwrap_or(0)
    }

    pub fn exponents(&self) -> &[Exponent] {
        &self.exps
    }

    /// Number of variables up to the last one that occurs.
    pub fn num_vars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> usize {
        self.exps.iter().map(|&e| e as usize).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    pub fn checked_mul(&self, other: &Monomial) -> Result<Monomial, PolyError> {
        let len = self.exps.len().max(other.exps.len());
        let mut exps = SmallVec::with_capacity(len);
        for i in 1..=len {
            exps.push(
                self.exponent(i)
                    .checked_add(other.exponent(i))
                    .ok_or(PolyError::ExponentOverflow)?,
            );
        }
        Ok(Monomial { exps })
    }

    /// Swaps the exponents of `x_i` and `x_{i+1}`.
    pub fn swap_vars(&self, i: usize) -> Monomial {
        let mut exps = self.exps.clone();
        if exps.len() < i + 1 {
            exps.resize(i + 1, 0);
        }
        exps.swap(i - 1, i);
        let mut m = Monomial { exps };
        m.trim();
        m
    }

    fn with_exponents(&self, i: usize, ei: Exponent, ej: Exponent) -> Monomial {
        let mut exps = self.exps.clone();
        if exps.len() < i + 1 {
            exps.resize(i + 1, 0);
        }
        exps[i - 1] = ei;
        exps[i] = ej;
        let mut m = Monomial { exps };
        m.trim();
        m
    }
}

impl Ord for Monomial {
    /// Reverse lexicographic. With trimmed vectors a longer one has a nonzero
    /// exponent where the shorter one has zero, so length decides first.
    fn cmp(&self, other: &Self) -> Ordering {
        self.exps
            .len()
            .cmp(&other.exps.len())
            .then_with(|| self.exps.iter().rev().cmp(other.exps.iter().rev()))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "x{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A polynomial in `x1, x2, ...` with `i64` coefficients. Zero coefficients
/// are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, i64>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(Monomial::one(), 1)
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(Monomial::one(), c)
    }

    pub fn monomial(m: Monomial, c: i64) -> Self {
        let mut terms = BTreeMap::new();
        if c != 0 {
            terms.insert(m, c);
        }
        Self { terms }
    }

    pub fn var(i: usize) -> Self {
        Self::monomial(Monomial::var(i), 1)
    }

    /// Collects terms, merging duplicates.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, i64)>>(terms: I) -> Result<Self, PolyError> {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, c)?;
        }
        Ok(p)
    }

    pub fn add_term(&mut self, m: Monomial, c: i64) -> Result<(), PolyError> {
        if c == 0 {
            return Ok(());
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().checked_add(c).ok_or(PolyError::CoefficientOverflow)?;
                if sum == 0 {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
        Ok(())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, m: &Monomial) -> i64 {
        self.terms.get(m).copied().unwrap_or(0)
    }

    /// Terms in ascending revlex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, i64)> + ExactSizeIterator {
        self.terms.iter().map(|(m, &c)| (m, c))
    }

    /// Sum of coefficients, i.e. the value at `x = (1, 1, ...)`.
    pub fn coefficient_sum(&self) -> Result<i64, PolyError> {
        self.terms
            .values()
            .try_fold(0i64, |acc, &c| acc.checked_add(c))
            .ok_or(PolyError::CoefficientOverflow)
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        let mut out = self.clone();
        for (m, &c) in &other.terms {
            out.add_term(m.clone(), c)?;
        }
        Ok(out)
    }

    pub fn checked_neg(&self) -> Result<Polynomial, PolyError> {
        let terms = self
            .terms
            .iter()
            .map(|(m, &c)| c.checked_neg().map(|c| (m.clone(), c)))
            .collect::<Option<BTreeMap<_, _>>>()
            .ok_or(PolyError::CoefficientOverflow)?;
        Ok(Polynomial { terms })
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.checked_add(&other.checked_neg()?)
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        let mut out = Polynomial::zero();
        for (ma, &ca) in &self.terms {
            for (mb, &cb) in &other.terms {
                let c = ca.checked_mul(cb).ok_or(PolyError::CoefficientOverflow)?;
                out.add_term(ma.checked_mul(mb)?, c)?;
            }
        }
        Ok(out)
    }

    /// The common degree of all terms; `None` for mixed degrees or zero.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        let d = degrees.next()?;
        degrees.all(|e| e == d).then_some(d)
    }

    /// Leading monomial in reverse lexicographic order.
    pub fn revlex_leading(&self) -> Result<(&Monomial, i64), PolyError> {
        self.terms
            .iter()
            .next_back()
            .map(|(m, &c)| (m, c))
            .ok_or(PolyError::ZeroPolynomial)
    }

    /// Applies the variable swap `x_i <-> x_{i+1}`.
    pub fn swap_vars(&self, i: usize) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(m, &c)| (m.swap_vars(i), c)).collect(),
        }
    }

    /// `(f - s_i f) / (x_i - x_{i+1})`, evaluated term by term:
    /// `x_i^p x_{i+1}^q` with `p > q` maps to
    /// `x_i^q x_{i+1}^q * sum_{k=0}^{p-q-1} x_i^k x_{i+1}^{p-q-1-k}`,
    /// and `p < q` gives the negation of the swapped case.
    pub fn divided_difference(&self, i: usize) -> Result<Polynomial, PolyError> {
        assert!(i >= 1, "divided differences are 1-indexed");
        let mut out = Polynomial::zero();
        for (m, &c) in &self.terms {
            let p = m.exponent(i);
            let q = m.exponent(i + 1);
            let (lo, hi, sign) = match p.cmp(&q) {
                Ordering::Equal => continue,
                Ordering::Greater => (q, p, 1i64),
                Ordering::Less => (p, q, -1i64),
            };
            let c = c.checked_mul(sign).ok_or(PolyError::CoefficientOverflow)?;
            let span = hi - lo - 1;
            for k in 0..=span {
                out.add_term(m.with_exponents(i, lo + k, lo + span - k), c)?;
            }
        }
        Ok(out)
    }

    /// Evaluates at integer values (`values[i]` is `x_{i+1}`; missing
    /// variables evaluate as zero).
    pub fn evaluate(&self, values: &[i64]) -> Result<i64, PolyError> {
        let mut total = 0i64;
        for (m, &c) in &self.terms {
            let mut t = c;
            for (i, &e) in m.exponents().iter().enumerate() {
                let x = values.get(i).copied().unwrap_or(0);
                let pow = x.checked_pow(e as u32).ok_or(PolyError::CoefficientOverflow)?;
                t = t.checked_mul(pow).ok_or(PolyError::CoefficientOverflow)?;
            }
            total = total.checked_add(t).ok_or(PolyError::CoefficientOverflow)?;
        }
        Ok(total)
    }
}

impl fmt::Display for Polynomial {
    /// Terms in descending revlex order, e.g. `x2^2*x3 + x1*x2*x3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (idx, (m, &c)) in self.terms.iter().rev().enumerate() {
            let magnitude = c.unsigned_abs();
            if idx == 0 {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else if c < 0 {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            if m.is_one() {
                write!(f, "{magnitude}")?;
            } else if magnitude == 1 {
                write!(f, "{m}")?;
            } else {
                write!(f, "{magnitude}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `e_b(x_1, ..., x_a)`: the sum of all squarefree degree-`b` monomials in
/// the first `a` variables.
pub fn elementary(b: usize, a: usize) -> Result<Polynomial, PolyError> {
    if b < 1 || b > a {
        return Err(PolyError::InvalidElementary { b, a });
    }
    let mut out = Polynomial::zero();
    let mut chosen: Vec<usize> = (0..b).collect();
    loop {
        let mut exps: SmallVec<[Exponent; 8]> = SmallVec::from_elem(0, a);
        for &i in &chosen {
            exps[i] = 1;
        }
        out.add_term(Monomial::from_exponents(exps), 1)?;
        // advance the b-subset of 0..a
        let mut i = b;
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            if chosen[i] < a - b + i {
                chosen[i] += 1;
                for j in i + 1..b {
                    chosen[j] = chosen[j - 1] + 1;
                }
                break;
            }
        }
    }
}
