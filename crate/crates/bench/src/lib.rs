//! Inputs shared by the benchmarks.

use csp_core::{CspMatrix, Partition};

/// The 6x6 matrix of binary words under rotation and major index.
pub fn binary_word_matrix() -> CspMatrix {
    CspMatrix::from_integer_rows(&[
        vec![2, 1, 0, 0, 0, 11],
        vec![0, 0, 2, 0, 0, 7],
        vec![0, 0, 0, 0, 0, 11],
        vec![0, 1, 2, 0, 0, 7],
        vec![0, 0, 0, 0, 0, 11],
        vec![0, 0, 2, 0, 0, 7],
    ])
    .expect("fixed matrix is valid")
}

/// `nλ` for a shape given as `"3,2,1"`.
pub fn stretched(shape: &str, n: usize) -> Partition {
    shape.parse::<Partition>().expect("valid shape").scale(n)
}
