//! Schubert polynomials, computed two independent ways.

use std::collections::HashMap;

use crate::perm::Permutation;
use crate::pipedream::{all_pipe_dreams, PipeDream};
use crate::poly::{Exponent, Monomial, PolyError, Polynomial};

/// Sum of the weights of the given dreams.
pub fn sum_of_weights(dreams: &[PipeDream]) -> Result<Polynomial, PolyError> {
    let mut counts: HashMap<Monomial, i64> = HashMap::new();
    for d in dreams {
        *counts.entry(d.weight()).or_insert(0) += 1;
    }
    Polynomial::from_terms(counts)
}

/// `S_w` as the sum of weights over all reduced pipe dreams of `w`.
pub fn schubert_via_pipedreams(w: &Permutation) -> Result<Polynomial, PolyError> {
    sum_of_weights(&all_pipe_dreams(w))
}

/// `x1^(n-1) x2^(n-2) ... x_(n-1)`, the Schubert polynomial of the longest
/// element of `S_n`.
pub fn staircase_monomial(n: usize) -> Polynomial {
    let exps = (1..=n).map(|i| (n - i) as Exponent);
    Polynomial::monomial(Monomial::from_exponents(exps), 1)
}

/// Which ascent to climb through when descending from the longest element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DescentPath {
    #[default]
    SmallestIndex,
    LargestIndex,
}

/// Divided-difference computation with a memo table keyed by one-line word.
///
/// `S_w = d_i S_{w s_i}` whenever `w(i) < w(i+1)`; the recursion bottoms
/// out at the longest element.
#[derive(Debug, Default)]
pub struct DividedDifferences {
    path: DescentPath,
    memo: HashMap<Permutation, Polynomial>,
}

impl DividedDifferences {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_path(path: DescentPath) -> Self {
        Self {
            path,
            memo: HashMap::new(),
        }
    }

    pub fn schubert(&mut self, w: &Permutation) -> Result<Polynomial, PolyError> {
        if let Some(p) = self.memo.get(w) {
            return Ok(p.clone());
        }
        // climb to the longest element, then apply the recorded operators
        let mut chain = Vec::new();
        let mut current = w.clone();
        let mut base = loop {
            if let Some(p) = self.memo.get(&current) {
                break p.clone();
            }
            match self.ascent(&current) {
                None => break staircase_monomial(current.n()),
                Some(i) => {
                    chain.push((current.clone(), i));
                    current = current.swap_positions(i);
                }
            }
        };
        self.memo.entry(current).or_insert_with(|| base.clone());
        while let Some((perm, i)) = chain.pop() {
            base = base.divided_difference(i)?;
            self.memo.insert(perm, base.clone());
        }
        Ok(base)
    }

    fn ascent(&self, w: &Permutation) -> Option<usize> {
        let mut ascents = (1..w.n()).filter(|&i| w.at(i) < w.at(i + 1));
        match self.path {
            DescentPath::SmallestIndex => ascents.next(),
            DescentPath::LargestIndex => ascents.next_back(),
        }
    }

    /// Number of memoized polynomials.
    pub fn len(&self) -> usize {
        self.memo.len()
    }

    pub fn is_empty(&self) -> bool {
        self.memo.is_empty()
    }

    pub fn clear(&mut self) {
        self.memo.clear();
    }
}

/// `S_w` from the staircase monomial by divided differences.
pub fn schubert_via_divided_differences(w: &Permutation) -> Result<Polynomial, PolyError> {
    DividedDifferences::new().schubert(w)
}

/// Visits every Schubert polynomial of `S_n` one length level at a time,
/// from the longest element down to the identity. Each level is derived
/// from the one above by a single divided difference (smallest ascent),
/// so only two levels are held in memory. Levels are sorted by word.
pub fn for_each_length_level<F>(n: usize, mut visit: F) -> Result<(), PolyError>
where
    F: FnMut(usize, &[(Permutation, Polynomial)]),
{
    let max_len = n * (n - 1) / 2;
    let mut levels: Vec<Vec<Permutation>> = vec![Vec::new(); max_len + 1];
    for w in crate::perm::enumerate_sn(n).expect("n within enumeration range") {
        levels[w.length()].push(w);
    }
    let mut above: HashMap<Permutation, Polynomial> = HashMap::new();
    for len in (0..=max_len).rev() {
        let mut current = Vec::with_capacity(levels[len].len());
        for w in std::mem::take(&mut levels[len]) {
            let poly = match (1..n).find(|&i| w.at(i) < w.at(i + 1)) {
                None => staircase_monomial(n),
                Some(i) => above[&w.swap_positions(i)].divided_difference(i)?,
            };
            current.push((w, poly));
        }
        visit(len, &current);
        above = current.into_iter().collect();
    }
    Ok(())
}

/// Whether `S_w` is a single monomial.
pub fn is_monomial(w: &Permutation) -> Result<bool, PolyError> {
    Ok(schubert_via_pipedreams(w)?.num_terms() == 1)
}
