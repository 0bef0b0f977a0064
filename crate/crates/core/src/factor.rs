//! Deciding whether a Schubert polynomial is a product of elementary
//! symmetric polynomials `e_b(x_1, ..., x_a)` in initial variable sets.
//!
//! The revlex leading monomial of such a product is the product of the
//! factors' leading monomials `x_{a-b+1} ... x_a`, and for `S_w` it is the
//! Lehmer-code monomial. So any factorization corresponds to a multiset of
//! integer intervals `[a-b+1, a]` whose indicator vectors sum to the code,
//! and enumerating those decompositions makes the search complete.

use std::fmt;

use crate::perm::{LehmerCode, Permutation};
use crate::pipedream::bottom_pipe_dream;
use crate::poly::{elementary, PolyError, Polynomial};
use crate::schubert::schubert_via_pipedreams;

/// `e_b(x_1, ..., x_a)` with `1 <= b <= a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntervalFactor {
    pub a: usize,
    pub b: usize,
}

impl IntervalFactor {
    pub fn new(a: usize, b: usize) -> Result<Self, PolyError> {
        if b < 1 || b > a {
            return Err(PolyError::InvalidElementary { b, a });
        }
        Ok(Self { a, b })
    }

    /// Factor whose leading monomial is `x_start * ... * x_end`.
    pub fn from_interval(start: usize, end: usize) -> Self {
        assert!(1 <= start && start <= end, "empty interval [{start}, {end}]");
        Self {
            a: end,
            b: end - start + 1,
        }
    }

    /// First index of the tail interval `[a - b + 1, a]`.
    pub fn tail_start(&self) -> usize {
        self.a - self.b + 1
    }

    pub fn polynomial(&self) -> Result<Polynomial, PolyError> {
        elementary(self.b, self.a)
    }

    /// Value at `x = (1, 1, ...)`, i.e. `binomial(a, b)`.
    pub fn term_count(&self) -> u128 {
        (0..self.b as u128).fold(1u128, |acc, k| acc * (self.a as u128 - k) / (k + 1))
    }
}

impl fmt::Display for IntervalFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e_{}(x1..x{})", self.b, self.a)
    }
}

/// A multiset of elementary factors, kept sorted by `(a, b)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Factorization {
    factors: Vec<IntervalFactor>,
}

impl Factorization {
    pub fn new(mut factors: Vec<IntervalFactor>) -> Self {
        factors.sort();
        Self { factors }
    }

    pub fn factors(&self) -> &[IntervalFactor] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.factors.iter().map(|f| f.b).sum()
    }

    /// Number of times each variable index occurs in a tail interval,
    /// over positions `1..=n`.
    pub fn interval_cover(&self, n: usize) -> Vec<usize> {
        let mut cover = vec![0; n];
        for f in &self.factors {
            for i in f.tail_start()..=f.a {
                if i <= n {
                    cover[i - 1] += 1;
                }
            }
        }
        cover
    }

    /// Product of the factors evaluated at all ones.
    pub fn coefficient_sum(&self) -> Option<u128> {
        self.factors
            .iter()
            .try_fold(1u128, |acc, f| acc.checked_mul(f.term_count()))
    }
}

impl fmt::Display for Factorization {
    /// `e_1(x1..x1) * e_1(x1..x3)`; the empty product prints as `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self.factors.iter().map(|x| x.to_string()).collect();
        f.write_str(&parts.join(" * "))
    }
}

/// The exact product of the factors; the empty product is `1`.
pub fn product_of(factorization: &Factorization) -> Result<Polynomial, PolyError> {
    factorization
        .factors
        .iter()
        .try_fold(Polynomial::one(), |acc, f| acc.checked_mul(&f.polynomial()?))
}

/// Every multiset of intervals whose indicator vectors sum to `code`,
/// ordered by number of factors and then by the sorted factor list.
pub fn interval_decompositions(code: &LehmerCode) -> std::vec::IntoIter<Factorization> {
    collect_decompositions(code, None)
}

/// The decompositions whose coefficient sum equals `target`.
///
/// Branches are cut as soon as the binomials of the intervals closed so far
/// stop dividing `target`, so this stays fast on codes with very many
/// decompositions. Same order as [`interval_decompositions`].
pub fn interval_decompositions_with_sum(code: &LehmerCode, target: u128) -> std::vec::IntoIter<Factorization> {
    collect_decompositions(code, Some(target))
}

fn collect_decompositions(code: &LehmerCode, target: Option<u128>) -> std::vec::IntoIter<Factorization> {
    let mut search = Decompose {
        code: code.entries(),
        target,
        closed: Vec::new(),
        out: Vec::new(),
    };
    search.run(0, Vec::new(), 1);
    let mut out = search.out;
    out.sort_by(|x, y| x.len().cmp(&y.len()).then_with(|| x.cmp(y)));
    out.into_iter()
}

struct Decompose<'a> {
    code: &'a [usize],
    target: Option<u128>,
    closed: Vec<IntervalFactor>,
    out: Vec<Factorization>,
}

impl Decompose<'_> {
    /// Multiplies `prod` by the binomials of `factors`; `None` once the
    /// product can no longer divide the target.
    fn extend_product(&self, prod: u128, factors: &[IntervalFactor]) -> Option<u128> {
        let Some(target) = self.target else {
            return Some(prod);
        };
        let prod = factors.iter().try_fold(prod, |p, f| p.checked_mul(f.term_count()))?;
        (target % prod == 0).then_some(prod)
    }

    /// At position `pos` (0-based), the intervals in `open` (start,
    /// multiplicity) either end just before `pos` or continue through it;
    /// the shortfall against `code[pos]` is made up by intervals starting
    /// at `pos`. `prod` covers the binomials of `self.closed`.
    fn run(&mut self, pos: usize, open: Vec<(usize, usize)>, prod: u128) {
        if pos == self.code.len() {
            let mut tail = Vec::new();
            for &(start, mult) in &open {
                tail.extend(std::iter::repeat_n(IntervalFactor::from_interval(start + 1, pos), mult));
            }
            match self.extend_product(prod, &tail) {
                Some(total) if self.target.is_none_or(|t| t == total) => {
                    let mut factors = self.closed.clone();
                    factors.extend(tail);
                    self.out.push(Factorization::new(factors));
                }
                _ => {}
            }
            return;
        }
        let need = self.code[pos];
        let mut keep = vec![0usize; open.len()];
        loop {
            let continuing: usize = keep.iter().sum();
            if continuing <= need {
                let closed_len = self.closed.len();
                let mut next_open = Vec::with_capacity(open.len() + 1);
                for (&(start, mult), &k) in open.iter().zip(&keep) {
                    if k > 0 {
                        next_open.push((start, k));
                    }
                    self.closed.extend(std::iter::repeat_n(
                        IntervalFactor::from_interval(start + 1, pos),
                        mult - k,
                    ));
                }
                if need > continuing {
                    next_open.push((pos, need - continuing));
                }
                if let Some(next_prod) = self.extend_product(prod, &self.closed[closed_len..]) {
                    self.run(pos + 1, next_open, next_prod);
                }
                self.closed.truncate(closed_len);
            }
            // odometer over keep[g] in 0..=mult_g
            let mut g = 0;
            loop {
                if g == open.len() {
                    return;
                }
                if keep[g] < open[g].1 {
                    keep[g] += 1;
                    break;
                }
                keep[g] = 0;
                g += 1;
            }
        }
    }
}

/// One factor `e_b(x_1..x_{r+b-1})` per column block (rows `r..r+b-1`) of
/// the bottom pipe dream.
pub fn candidate_from_columns(w: &Permutation) -> Factorization {
    let dream = bottom_pipe_dream(&w.lehmer_code());
    Factorization::new(
        dream
            .column_blocks()
            .iter()
            .map(|block| IntervalFactor::from_interval(block.top_row, block.bottom_row))
            .collect(),
    )
}

/// Outcome of the factorization search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorSearch {
    pub witness: Option<Factorization>,
    /// Whether the column candidate was the accepted witness.
    pub column_candidate_valid: bool,
    /// Candidates whose coefficient sum matched and whose product was
    /// expanded, the column candidate included.
    pub tried: usize,
}

/// Searches for a factorization of the given Schubert polynomial of `w`.
///
/// The column candidate is tried first, then every interval decomposition
/// of the Lehmer code with the same coefficient sum as `schubert` (any other
/// cannot match). Every accepted witness is confirmed by full polynomial
/// equality.
pub fn factorize_polynomial(w: &Permutation, schubert: &Polynomial) -> Result<FactorSearch, PolyError> {
    // coefficients of a Schubert polynomial are positive
    let target_sum = u128::try_from(schubert.coefficient_sum()?).unwrap_or(0);
    let column = candidate_from_columns(w);
    let mut tried = 0;
    if column.coefficient_sum() == Some(target_sum) {
        tried += 1;
        if &product_of(&column)? == schubert {
            return Ok(FactorSearch {
                witness: Some(column),
                column_candidate_valid: true,
                tried,
            });
        }
    }
    for candidate in interval_decompositions_with_sum(&w.lehmer_code(), target_sum) {
        if candidate == column {
            continue;
        }
        tried += 1;
        if &product_of(&candidate)? == schubert {
            debug_assert_eq!(candidate.degree(), w.length());
            return Ok(FactorSearch {
                witness: Some(candidate),
                column_candidate_valid: false,
                tried,
            });
        }
    }
    Ok(FactorSearch {
        witness: None,
        column_candidate_valid: false,
        tried,
    })
}

/// A factorization of `S_w` into elementary symmetric polynomials, if any.
pub fn factorize(w: &Permutation) -> Result<Option<Factorization>, PolyError> {
    let schubert = schubert_via_pipedreams(w)?;
    Ok(factorize_polynomial(w, &schubert)?.witness)
}

/// Lehmer code `(0^A, N^B, 0, ...)` with `A >= 1`, `N >= 2`, `B >= 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RectangleShape {
    pub leading_zeros: usize,
    pub value: usize,
    pub width: usize,
}

/// Splits a code into `(A, N, B)` if it is `0^A N^B 0^*` with `N >= 1`,
/// without the size constraints of [`RectangleShape`].
pub fn block_shape(code: &LehmerCode) -> Option<(usize, usize, usize)> {
    let e = code.entries();
    let a = e.iter().take_while(|&&x| x == 0).count();
    let value = *e.get(a)?;
    let b = e[a..].iter().take_while(|&&x| x == value).count();
    e[a + b..].iter().all(|&x| x == 0).then_some((a, value, b))
}

pub fn rectangle_shape(code: &LehmerCode) -> Option<RectangleShape> {
    let (a, value, b) = block_shape(code)?;
    (a >= 1 && value >= 2 && b >= 2).then_some(RectangleShape {
        leading_zeros: a,
        value,
        width: b,
    })
}
