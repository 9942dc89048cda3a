use std::fmt;

use super::TwoComplex;

/// A real 2×2 matrix, row-major.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Matrix2 {
    pub entries: [[f64; 2]; 2],
}

impl Matrix2 {
    pub const IDENTITY: Matrix2 = Matrix2 {
        entries: [[1.0, 0.0], [0.0, 1.0]],
    };

    pub const fn new(entries: [[f64; 2]; 2]) -> Self {
        Matrix2 { entries }
    }

    pub const fn diag(a: f64, b: f64) -> Self {
        Matrix2::new([[a, 0.0], [0.0, b]])
    }

    /// The orthogonal transform `T = [[1/√2, 1/√2], [−1/√2, 1/√2]]` that
    /// diagonalizes every representing matrix at once.
    pub fn diagonalizer() -> Self {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        Matrix2::new([[s, s], [-s, s]])
    }

    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.entries[row][col]
    }

    pub fn mul(&self, rhs: &Matrix2) -> Matrix2 {
        let a = &self.entries;
        let b = &rhs.entries;
        let mut out = [[0.0; 2]; 2];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = a[i][0] * b[0][j] + a[i][1] * b[1][j];
            }
        }
        Matrix2::new(out)
    }

    pub fn det(&self) -> f64 {
        let a = &self.entries;
        a[0][0] * a[1][1] - a[0][1] * a[1][0]
    }

    /// Inverse via the adjugate; `None` for a singular matrix.
    pub fn inverse(&self) -> Option<Matrix2> {
        let det = self.det();
        if det == 0.0 {
            return None;
        }
        let a = &self.entries;
        Some(Matrix2::new([
            [a[1][1] / det, -a[0][1] / det],
            [-a[1][0] / det, a[0][0] / det],
        ]))
    }

    /// Whether the matrix has the symmetric, equal-diagonal shape of a
    /// representing matrix.
    pub fn is_twocomplex(&self) -> bool {
        let a = &self.entries;
        a[0][0] == a[1][1] && a[0][1] == a[1][0]
    }

    /// Reads `x + δy` back out of a representing matrix.
    pub fn to_twocomplex(&self) -> Option<TwoComplex> {
        self.is_twocomplex()
            .then(|| TwoComplex::new_unchecked(self.entries[0][0], self.entries[0][1]))
    }

    pub fn max_abs_diff(&self, other: &Matrix2) -> f64 {
        let mut m = 0.0f64;
        for i in 0..2 {
            for j in 0..2 {
                m = m.max((self.entries[i][j] - other.entries[i][j]).abs());
            }
        }
        m
    }
}

impl fmt::Display for Matrix2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let a = &self.entries;
        write!(f, "[[{}, {}], [{}, {}]]", a[0][0], a[0][1], a[1][0], a[1][1])
    }
}
