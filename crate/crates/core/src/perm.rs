//! Permutations in one-line notation, Lehmer codes and pattern containment.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Largest `n` accepted by [`enumerate_sn`].
pub const MAX_ENUMERATION_N: usize = 9;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("permutation is empty")]
    Empty,
    #[error("entry {value} is out of range 1..={n}")]
    OutOfRange { value: usize, n: usize },
    #[error("duplicate entry {0}")]
    Duplicate(usize),
    #[error("lehmer code entry {value} at position {position} exceeds bound {bound}")]
    CodeOutOfBounds {
        position: usize,
        value: usize,
        bound: usize,
    },
    #[error("cannot parse permutation from {0:?}")]
    Parse(String),
    #[error("n = {n} is outside the supported range 1..={max}")]
    SizeOutOfRange { n: usize, max: usize },
}

/// A permutation of `{1, ..., n}` stored as its one-line word.
///
/// Trailing fixed points are significant: `1432` and `14325` are distinct
/// values even though their Schubert polynomials agree.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    word: Vec<u8>,
}

impl Permutation {
    /// Validates a one-line word (1-indexed values).
    pub fn from_one_line(word: &[usize]) -> Result<Self, PermError> {
        let n = word.len();
        if n == 0 {
            return Err(PermError::Empty);
        }
        if n > u8::MAX as usize {
            return Err(PermError::SizeOutOfRange {
                n,
                max: u8::MAX as usize,
            });
        }
        let mut seen = vec![false; n + 1];
        for &v in word {
            if v == 0 || v > n {
                return Err(PermError::OutOfRange { value: v, n });
            }
            if seen[v] {
                return Err(PermError::Duplicate(v));
            }
            seen[v] = true;
        }
        Ok(Self {
            word: word.iter().map(|&v| v as u8).collect(),
        })
    }

    pub fn identity(n: usize) -> Self {
        assert!(n >= 1, "S_0 is not supported");
        Self {
            word: (1..=n as u8).collect(),
        }
    }

    /// The longest element `n (n-1) ... 1`.
    pub fn longest(n: usize) -> Self {
        assert!(n >= 1, "S_0 is not supported");
        Self {
            word: (1..=n as u8).rev().collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.word.len()
    }

    /// Value at 1-indexed position `i`.
    pub fn at(&self, i: usize) -> usize {
        self.word[i - 1] as usize
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.word.iter().map(|&v| v as usize).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.word.iter().enumerate().all(|(i, &v)| v as usize == i + 1)
    }

    /// `w * s_i`: swaps the entries in positions `i` and `i + 1`.
    pub fn swap_positions(&self, i: usize) -> Self {
        let mut word = self.word.clone();
        word.swap(i - 1, i);
        Self { word }
    }

    /// Appends the fixed point `n + 1`.
    pub fn extend_fixed(&self) -> Self {
        let mut word = self.word.clone();
        word.push(self.word.len() as u8 + 1);
        Self { word }
    }

    pub fn lehmer_code(&self) -> LehmerCode {
        let entries = self
            .word
            .iter()
            .enumerate()
            .map(|(i, &wi)| self.word[i + 1..].iter().filter(|&&wj| wj < wi).count())
            .collect();
        LehmerCode { entries }
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let mut count = 0;
        for i in 0..self.word.len() {
            for j in i + 1..self.word.len() {
                if self.word[i] > self.word[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Whether some subsequence of `self` is order-isomorphic to `pattern`.
    ///
    /// Brute force over increasing index tuples; the patterns used here have
    /// length at most 4.
    pub fn contains_pattern(&self, pattern: &Permutation) -> bool {
        let k = pattern.n();
        if k > self.n() {
            return false;
        }
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            if self.matches_at(pattern, &idx) {
                return true;
            }
            if !next_combination(&mut idx, self.n()) {
                return false;
            }
        }
    }

    fn matches_at(&self, pattern: &Permutation, idx: &[usize]) -> bool {
        for a in 0..idx.len() {
            for b in a + 1..idx.len() {
                let text = self.word[idx[a]] < self.word[idx[b]];
                let pat = pattern.word[a] < pattern.word[b];
                if text != pat {
                    return false;
                }
            }
        }
        true
    }

    pub fn avoids(&self, pattern: &Permutation) -> bool {
        !self.contains_pattern(pattern)
    }

    /// Avoids all of 1432, 1423, 4132 and 3142.
    pub fn avoids_conjecture_patterns(&self) -> bool {
        CONJECTURE_PATTERNS
            .iter()
            .all(|p| self.avoids(&Permutation::from_digits(p)))
    }

    fn from_digits(digits: &[u8]) -> Self {
        Self { word: digits.to_vec() }
    }
}

/// The four patterns whose avoidance is conjectured to characterize
/// elementary-symmetric factorization.
pub const CONJECTURE_PATTERNS: [&[u8]; 4] = [&[1, 4, 3, 2], &[1, 4, 2, 3], &[4, 1, 3, 2], &[3, 1, 4, 2]];

/// Builds a pattern from a digit slice such as `&[1, 3, 2]`.
pub fn pattern(digits: &[u8]) -> Permutation {
    Permutation::from_one_line(&digits.iter().map(|&d| d as usize).collect::<Vec<_>>())
        .expect("pattern literal must be a permutation")
}

fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if idx[i] < n - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

impl fmt::Display for Permutation {
    /// Digit string for `n <= 9`, comma separated otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n() <= 9 {
            for v in &self.word {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.word.iter().map(|v| v.to_string()).collect();
            f.write_str(&parts.join(","))
        }
    }
}

impl FromStr for Permutation {
    type Err = PermError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let parse_err = || PermError::Parse(s.to_string());
        let values: Vec<usize> = if s.contains(',') {
            s.split(',')
                .map(|p| p.trim().parse::<usize>().map_err(|_| parse_err()))
                .collect::<Result<_, _>>()?
        } else {
            if s.is_empty() {
                return Err(PermError::Empty);
            }
            s.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(parse_err))
                .collect::<Result<_, _>>()?
        };
        Permutation::from_one_line(&values)
    }
}

/// Lehmer code `(l_1, ..., l_n)` with `l_i <= n - i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LehmerCode {
    entries: Vec<usize>,
}

impl LehmerCode {
    pub fn new(entries: Vec<usize>) -> Result<Self, PermError> {
        let n = entries.len();
        if n == 0 {
            return Err(PermError::Empty);
        }
        for (i, &value) in entries.iter().enumerate() {
            let bound = n - 1 - i;
            if value > bound {
                return Err(PermError::CodeOutOfBounds {
                    position: i + 1,
                    value,
                    bound,
                });
            }
        }
        Ok(Self { entries })
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }

    /// Entry at 1-indexed position `i`.
    pub fn at(&self, i: usize) -> usize {
        self.entries[i - 1]
    }

    pub fn sum(&self) -> usize {
        self.entries.iter().sum()
    }

    /// Inverse of [`Permutation::lehmer_code`]: position `i` takes the
    /// `(l_i + 1)`-th smallest value not used yet.
    pub fn to_permutation(&self) -> Permutation {
        let mut unused: Vec<u8> = (1..=self.entries.len() as u8).collect();
        let word = self.entries.iter().map(|&l| unused.remove(l)).collect();
        Permutation { word }
    }

    /// True iff `l_{i+1} - l_i <= 1` for every `i`.
    pub fn increments_bounded(&self) -> bool {
        self.entries.windows(2).all(|w| w[1] <= w[0] + 1)
    }
}

impl fmt::Display for LehmerCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|v| v.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// All `n!` permutations of `S_n` in lexicographic order of their words.
pub fn enumerate_sn(n: usize) -> Result<LexPermutations, PermError> {
    if n == 0 || n > MAX_ENUMERATION_N {
        return Err(PermError::SizeOutOfRange {
            n,
            max: MAX_ENUMERATION_N,
        });
    }
    Ok(LexPermutations {
        next: Some((1..=n as u8).collect()),
    })
}

/// Iterator behind [`enumerate_sn`] (next-permutation stepping).
#[derive(Debug, Clone)]
pub struct LexPermutations {
    next: Option<Vec<u8>>,
}

impl Iterator for LexPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        if next_lex(&mut succ) {
            self.next = Some(succ);
        }
        Some(Permutation { word: current })
    }
}

fn next_lex(word: &mut [u8]) -> bool {
    let n = word.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && word[i - 1] >= word[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while word[j] <= word[i - 1] {
        j -= 1;
    }
    word.swap(i - 1, j);
    word[i..].reverse();
    true
}
