//! Shared inputs for the benchmarks.

use nree8_core::exact::IntMatrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// A reproducible n x n integer matrix with entries in [-range, range].
pub fn sample_matrix(n: usize, range: i64, seed: u64) -> IntMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rows: Vec<Vec<i64>> = (0..n)
        .map(|_| (0..n).map(|_| rng.gen_range(-range..=range)).collect())
        .collect();
    IntMatrix::from_rows(n, &rows)
}
