//! Reduced pipe dreams on the staircase `{(r, c) : r + c <= n}`.
//!
//! Wires enter on the left of each row and leave through the top of a
//! column. A cross tile passes both wires straight through; an elbow tile
//! turns the wire entering from the left upward and the wire entering from
//! below to the right. Cells on the antidiagonal `r + c = n + 1` are always
//! elbows.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use crate::perm::{LehmerCode, Permutation};
use crate::poly::{Exponent, Monomial};

/// Largest `n` whose staircase fits the cross bitmask.
pub const MAX_DREAM_N: usize = 11;

const STRIDE: usize = MAX_DREAM_N;

fn bit(row: usize, col: usize) -> u128 {
    1u128 << ((row - 1) * STRIDE + (col - 1))
}

/// A set of cross positions (1-indexed `(row, col)`) inside the staircase
/// of size `n`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PipeDream {
    n: usize,
    mask: u128,
}

impl PipeDream {
    pub fn empty(n: usize) -> Self {
        assert!(
            (1..=MAX_DREAM_N).contains(&n),
            "pipe dreams support 1 <= n <= {MAX_DREAM_N}"
        );
        Self { n, mask: 0 }
    }

    /// Builds a dream from explicit crosses. Returns `None` if a cross lies
    /// outside the staircase.
    pub fn from_crosses<I: IntoIterator<Item = (usize, usize)>>(n: usize, crosses: I) -> Option<Self> {
        let mut dream = Self::empty(n);
        for (r, c) in crosses {
            if r == 0 || c == 0 || r + c > n {
                return None;
            }
            dream.mask |= bit(r, c);
        }
        Some(dream)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_cross(&self, row: usize, col: usize) -> bool {
        row >= 1 && col >= 1 && row + col <= self.n && self.mask & bit(row, col) != 0
    }

    pub fn num_crosses(&self) -> usize {
        self.mask.count_ones() as usize
    }

    /// Crosses sorted by `(row, col)`.
    pub fn crosses(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.num_crosses());
        for r in 1..self.n {
            for c in 1..=self.n - r {
                if self.mask & bit(r, c) != 0 {
                    out.push((r, c));
                }
            }
        }
        out
    }

    fn with_move(&self, from: (usize, usize), to: (usize, usize)) -> Self {
        Self {
            n: self.n,
            mask: (self.mask & !bit(from.0, from.1)) | bit(to.0, to.1),
        }
    }

    fn row_count(&self, row: usize) -> usize {
        (1..=self.n.saturating_sub(row))
            .filter(|&c| self.is_cross(row, c))
            .count()
    }

    /// The monomial `prod x_row` over all crosses.
    pub fn weight(&self) -> Monomial {
        Monomial::from_exponents((1..=self.n).map(|r| self.row_count(r) as Exponent))
    }

    /// Follows every wire, returning the realized permutation and whether
    /// any pair of wires crosses more than once.
    pub fn trace(&self) -> (Permutation, bool) {
        let n = self.n;
        let mut word = vec![0usize; n];
        // horizontal[r][c], vertical[r][c]: wire passing through a cross tile
        let mut horizontal = vec![vec![0usize; n + 2]; n + 2];
        let mut vertical = vec![vec![0usize; n + 2]; n + 2];
        for start in 1..=n {
            let (mut r, mut c) = (start, 1);
            let mut from_left = true;
            loop {
                if self.is_cross(r, c) {
                    if from_left {
                        horizontal[r][c] = start;
                        c += 1;
                    } else {
                        vertical[r][c] = start;
                        if r == 1 {
                            word[start - 1] = c;
                            break;
                        }
                        r -= 1;
                    }
                } else if from_left {
                    if r == 1 {
                        word[start - 1] = c;
                        break;
                    }
                    r -= 1;
                    from_left = false;
                } else {
                    c += 1;
                    from_left = true;
                }
            }
        }
        let mut pairs = HashSet::new();
        let mut double = false;
        for (r, c) in self.crosses() {
            let (a, b) = (horizontal[r][c], vertical[r][c]);
            if !pairs.insert((a.min(b), a.max(b))) {
                double = true;
            }
        }
        let perm = Permutation::from_one_line(&word).expect("wire tracing yields a bijection");
        (perm, double)
    }

    pub fn permutation(&self) -> Permutation {
        self.trace().0
    }

    /// Realizes `w` with no pair of wires crossing twice.
    pub fn is_valid_for(&self, w: &Permutation) -> bool {
        if w.n() != self.n {
            return false;
        }
        let (p, double) = self.trace();
        !double && &p == w
    }

    /// All dreams reachable by one ladder move. A cross at `(i, j)` moves to
    /// `(i - m, j + 1)` when `(i, j + 1)` is empty, rows strictly between
    /// have crosses in both columns `j` and `j + 1`, and row `i - m` is
    /// empty in both columns.
    pub fn ladder_moves(&self) -> Vec<PipeDream> {
        let mut out = Vec::new();
        for (i, j) in self.crosses() {
            if self.is_cross(i, j + 1) {
                continue;
            }
            let mut m = 1;
            while m < i {
                let r = i - m;
                let left = self.is_cross(r, j);
                let right = self.is_cross(r, j + 1);
                if !left && !right {
                    if r + j < self.n {
                        out.push(self.with_move((i, j), (r, j + 1)));
                    }
                    break;
                }
                if !(left && right) {
                    break;
                }
                m += 1;
            }
        }
        out.sort();
        out
    }

    /// Maximal vertical runs of crosses, ordered by `(col, top_row)`.
    pub fn column_blocks(&self) -> Vec<ColumnBlock> {
        let mut out = Vec::new();
        for col in 1..self.n {
            let mut row = 1;
            while row + col <= self.n {
                if self.is_cross(row, col) {
                    let top = row;
                    while self.is_cross(row + 1, col) {
                        row += 1;
                    }
                    out.push(ColumnBlock {
                        col,
                        top_row: top,
                        bottom_row: row,
                    });
                }
                row += 1;
            }
        }
        out
    }

    /// For a block in column `c` lying entirely below a block in column
    /// `c' > c` (its top row is below the other's bottom row), the
    /// antidiagonal `row + col` through its top cross must exceed the one
    /// through the other block's bottom cross by at least 2, leaving a
    /// clear diagonal between them. Blocks sharing rows, or sharing a
    /// column, are not compared.
    pub fn diagonal_separation(&self) -> bool {
        let blocks = self.column_blocks();
        blocks.iter().all(|lower| {
            blocks
                .iter()
                .filter(|higher| higher.col > lower.col && lower.top_row > higher.bottom_row)
                .all(|higher| lower.top_diagonal() >= higher.bottom_diagonal() + 2)
        })
    }

    /// Every row is a run of crosses starting in column 1.
    pub fn is_left_justified(&self) -> bool {
        (1..self.n).all(|r| {
            let k = self.row_count(r);
            (1..=k).all(|c| self.is_cross(r, c))
        })
    }

    /// Every column is a run of crosses starting in row 1.
    pub fn is_top_justified(&self) -> bool {
        (1..self.n).all(|c| {
            let k = (1..=self.n - c).filter(|&r| self.is_cross(r, c)).count();
            (1..=k).all(|r| self.is_cross(r, c))
        })
    }

    /// ASCII grid: `+` cross, `.` elbow, blank outside the staircase.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for r in 1..=self.n {
            let mut line = String::with_capacity(self.n);
            for c in 1..=self.n {
                line.push(if r + c > self.n {
                    ' '
                } else if self.is_cross(r, c) {
                    '+'
                } else {
                    '.'
                });
            }
            out.push_str(&line);
            out.push('\n');
        }
        out
    }
}

impl fmt::Debug for PipeDream {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PipeDream(n={}, {:?})", self.n, self.crosses())
    }
}

/// A maximal run of crosses `top_row..=bottom_row` in column `col`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColumnBlock {
    pub col: usize,
    pub top_row: usize,
    pub bottom_row: usize,
}

impl ColumnBlock {
    pub fn height(&self) -> usize {
        self.bottom_row - self.top_row + 1
    }

    pub fn top_diagonal(&self) -> usize {
        self.top_row + self.col
    }

    pub fn bottom_diagonal(&self) -> usize {
        self.bottom_row + self.col
    }
}

/// The left-justified dream with `l_i` crosses in row `i`.
pub fn bottom_pipe_dream(code: &LehmerCode) -> PipeDream {
    let n = code.n();
    let crosses = (1..=n).flat_map(|r| (1..=code.at(r)).map(move |c| (r, c)));
    let dream = PipeDream::from_crosses(n, crosses).expect("lehmer code bounds keep crosses in the staircase");
    debug_assert!(dream.is_valid_for(&code.to_permutation()));
    dream
}

/// Breadth-first closure of ladder moves from the bottom pipe dream,
/// sorted by cross mask.
pub fn all_pipe_dreams(w: &Permutation) -> Vec<PipeDream> {
    let start = bottom_pipe_dream(&w.lehmer_code());
    let mut seen = HashSet::new();
    seen.insert(start);
    let mut queue = VecDeque::from([start]);
    while let Some(d) = queue.pop_front() {
        for next in d.ladder_moves() {
            if seen.insert(next) {
                queue.push_back(next);
            }
        }
    }
    let mut out: Vec<_> = seen.into_iter().collect();
    out.sort();
    out
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TopDreamError {
    #[error("no top-justified pipe dream found for {0}")]
    Missing(String),
    #[error("{count} top-justified pipe dreams found for {word}")]
    Multiple { word: String, count: usize },
}

/// The unique top-justified element of `dreams` (all dreams of one
/// permutation).
pub fn top_pipe_dream_among(w: &Permutation, dreams: &[PipeDream]) -> Result<PipeDream, TopDreamError> {
    let mut tops = dreams.iter().filter(|d| d.is_top_justified());
    match (tops.next(), tops.count()) {
        (Some(d), 0) => Ok(*d),
        (None, _) => Err(TopDreamError::Missing(w.to_string())),
        (Some(_), rest) => Err(TopDreamError::Multiple {
            word: w.to_string(),
            count: rest + 1,
        }),
    }
}

pub fn top_pipe_dream(w: &Permutation) -> Result<PipeDream, TopDreamError> {
    top_pipe_dream_among(w, &all_pipe_dreams(w))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::enumerate_sn;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn code(v: &[usize]) -> LehmerCode {
        LehmerCode::new(v.to_vec()).unwrap()
    }

    fn dream(n: usize, crosses: &[(usize, usize)]) -> PipeDream {
        PipeDream::from_crosses(n, crosses.iter().copied()).unwrap()
    }

    #[test]
    fn bottom_dreams() {
        assert_eq!(
            bottom_pipe_dream(&code(&[0, 2, 1, 0])).crosses(),
            vec![(2, 1), (2, 2), (3, 1)]
        );
        assert_eq!(bottom_pipe_dream(&code(&[0, 0, 0])).num_crosses(), 0);
        assert_eq!(
            bottom_pipe_dream(&code(&[3, 2, 0, 0, 1, 0])).crosses(),
            vec![(1, 1), (1, 2), (1, 3), (2, 1), (2, 2), (5, 1)]
        );
    }

    #[test]
    fn rejects_crosses_outside_staircase() {
        assert!(PipeDream::from_crosses(3, [(2, 2)]).is_none());
        assert!(PipeDream::from_crosses(3, [(0, 1)]).is_none());
    }

    #[test]
    fn wire_tracing() {
        assert_eq!(PipeDream::empty(4).permutation(), p("1234"));
        assert_eq!(dream(4, &[(2, 1), (2, 2), (3, 1)]).permutation(), p("1432"));
        assert_eq!(dream(2, &[(1, 1)]).permutation(), p("21"));
        assert_eq!(dream(3, &[(1, 1), (2, 1)]).permutation(), p("231"));
    }

    #[test]
    fn validity() {
        for w in enumerate_sn(5).unwrap() {
            assert!(bottom_pipe_dream(&w.lehmer_code()).is_valid_for(&w));
        }
        // wires 2 and 3 cross at (2,1) and again at (1,2)
        let twice = dream(3, &[(1, 2), (2, 1)]);
        let (perm, double) = twice.trace();
        assert!(double);
        assert!(perm.is_identity());
        assert!(!twice.is_valid_for(&p("123")));
        // the non-simple move result drawn for 1432
        assert!(dream(4, &[(1, 2), (2, 1), (2, 2)]).is_valid_for(&p("1432")));
        assert!(!dream(4, &[(2, 1), (2, 2), (3, 1)]).is_valid_for(&p("1423")));
    }

    #[test]
    fn weights() {
        assert_eq!(bottom_pipe_dream(&code(&[0, 2, 1, 0])).weight().to_string(), "x2^2*x3");
        assert!(PipeDream::empty(3).weight().is_one());
        assert_eq!(
            bottom_pipe_dream(&code(&[3, 2, 0, 0, 1, 0])).weight().to_string(),
            "x1^3*x2^2*x5"
        );
    }

    #[test]
    fn ladder_move_examples() {
        let bottom = dream(4, &[(2, 1), (2, 2), (3, 1)]);
        let moves = bottom.ladder_moves();
        assert!(moves.contains(&dream(4, &[(1, 3), (2, 1), (3, 1)])));
        // (3,1) jumps over the doubly crossed row 2
        assert!(moves.contains(&dream(4, &[(1, 2), (2, 1), (2, 2)])));
        assert_eq!(moves.len(), 2);
        assert!(PipeDream::empty(4).ladder_moves().is_empty());
        let b2143 = dream(4, &[(1, 1), (3, 1)]);
        assert_eq!(b2143.ladder_moves(), vec![dream(4, &[(1, 1), (2, 2)])]);
    }

    #[test]
    fn ladder_moves_preserve_validity() {
        for n in 1..=5 {
            for w in enumerate_sn(n).unwrap() {
                for d in all_pipe_dreams(&w) {
                    for next in d.ladder_moves() {
                        assert!(next.is_valid_for(&w), "{w}: {d:?} -> {next:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn closures() {
        let d1432 = all_pipe_dreams(&p("1432"));
        assert_eq!(d1432.len(), 5);
        assert!(d1432.iter().all(|d| d.is_valid_for(&p("1432")) && d.num_crosses() == 3));
        assert_eq!(all_pipe_dreams(&p("1234")), vec![PipeDream::empty(4)]);
        let mut weights: Vec<String> = all_pipe_dreams(&p("2143"))
            .iter()
            .map(|d| d.weight().to_string())
            .collect();
        weights.sort();
        assert_eq!(weights, vec!["x1*x2", "x1*x3", "x1^2"]);
    }

    #[test]
    fn top_dreams() {
        assert_eq!(top_pipe_dream(&p("123")).unwrap(), PipeDream::empty(3));
        assert_eq!(top_pipe_dream(&p("14523")).unwrap().weight().to_string(), "x1^2*x2^2");
        let t = top_pipe_dream(&p("1432")).unwrap();
        assert_eq!(t.crosses(), vec![(1, 2), (1, 3), (2, 2)]);
        assert_eq!(t.weight().to_string(), "x1^2*x2");
    }

    #[test]
    fn blocks() {
        let b2143 = bottom_pipe_dream(&p("2143").lehmer_code());
        assert_eq!(
            b2143.column_blocks(),
            vec![
                ColumnBlock {
                    col: 1,
                    top_row: 1,
                    bottom_row: 1
                },
                ColumnBlock {
                    col: 1,
                    top_row: 3,
                    bottom_row: 3
                },
            ]
        );
        let b321 = bottom_pipe_dream(&p("321").lehmer_code());
        assert_eq!(
            b321.column_blocks(),
            vec![
                ColumnBlock {
                    col: 1,
                    top_row: 1,
                    bottom_row: 2
                },
                ColumnBlock {
                    col: 2,
                    top_row: 1,
                    bottom_row: 1
                },
            ]
        );
        assert!(PipeDream::empty(3).column_blocks().is_empty());
    }

    #[test]
    fn diagonal_separation_examples() {
        let bottom = |s: &str| bottom_pipe_dream(&p(s).lehmer_code());
        assert!(bottom("2143").diagonal_separation());
        // the column 2 block sits beside the column 1 block, not above it
        assert!(bottom("321").diagonal_separation());
        assert!(bottom("14523").diagonal_separation());
        // (3,1) on diagonal 4 is directly below-adjacent to (1,2) on diagonal 3
        assert!(!bottom("3142").diagonal_separation());
        assert!(!bottom("4132").diagonal_separation());
        // (4,1) on diagonal 5 leaves diagonal 4 clear below (1,2)
        assert!(bottom("31254").diagonal_separation());
    }

    #[test]
    fn rendering() {
        let b = bottom_pipe_dream(&p("1432").lehmer_code());
        assert_eq!(b.render(), "... \n++  \n+   \n    \n");
    }
}
