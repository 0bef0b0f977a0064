//! Schubert polynomials via pipe dreams and divided differences, and a
//! complete decision procedure for their factorization into elementary
//! symmetric polynomials in initial sets of variables.

pub mod factor;
pub mod perm;
pub mod pipedream;
pub mod poly;
pub mod schubert;

pub use factor::{
    candidate_from_columns, factorize, factorize_polynomial, interval_decompositions, interval_decompositions_with_sum,
    product_of, rectangle_shape, FactorSearch, Factorization, IntervalFactor, RectangleShape,
};
pub use perm::{enumerate_sn, LehmerCode, PermError, Permutation};
pub use pipedream::{all_pipe_dreams, bottom_pipe_dream, top_pipe_dream, ColumnBlock, PipeDream};
pub use poly::{elementary, Monomial, PolyError, Polynomial};
pub use schubert::{
    is_monomial, schubert_via_divided_differences, schubert_via_pipedreams, DescentPath, DividedDifferences,
};
