//! The worked example codes used throughout the documentation and tests.

use crate::code::{FrCode, NpdiMatrix};

/// The heterogeneous `(n=6, theta=10, alpha=4, rho=3)` example.
pub fn table_one() -> FrCode {
    FrCode::new(
        &[
            vec![1, 2, 3, 4],
            vec![1, 5, 6, 7],
            vec![2, 5, 8, 9],
            vec![3, 6, 8],
            vec![4, 7, 10],
            vec![8, 9, 10],
        ],
        10,
    )
    .expect("fixture is valid")
}

/// Incidence matrix of [`table_one`].
pub fn equation_one_matrix() -> NpdiMatrix {
    NpdiMatrix::from_rows(&[
        [1, 1, 1, 1, 0, 0, 0, 0, 0, 0],
        [1, 0, 0, 0, 1, 1, 1, 0, 0, 0],
        [0, 1, 0, 0, 1, 0, 0, 1, 1, 0],
        [0, 0, 1, 0, 0, 1, 0, 1, 0, 0],
        [0, 0, 0, 1, 0, 0, 1, 0, 0, 1],
        [0, 0, 0, 0, 0, 0, 0, 1, 1, 1],
    ])
    .expect("fixture is rectangular")
}

/// The symmetric `(5, 10, 4, 2)` code: edges of the complete graph on five nodes.
pub fn table_five() -> FrCode {
    FrCode::new(
        &[
            vec![1, 2, 3, 4],
            vec![1, 5, 6, 7],
            vec![2, 5, 8, 9],
            vec![3, 6, 8, 10],
            vec![4, 7, 9, 10],
        ],
        10,
    )
    .expect("fixture is valid")
}

/// The `(6, 6, 2, 2)` cycle code.
pub fn table_seven() -> FrCode {
    FrCode::new(
        &[vec![1, 2], vec![2, 3], vec![3, 4], vec![4, 5], vec![5, 6], vec![1, 6]],
        6,
    )
    .expect("fixture is valid")
}
