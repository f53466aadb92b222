use std::ops::Mul;

use serde::Serialize;

/// Real 4×4 matrix acting on Minkowski 4-vectors.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct LorentzMatrix(pub [[f64; 4]; 4]);

/// Metric signature diag(+1, −1, −1, −1).
pub const METRIC: [f64; 4] = [1.0, -1.0, -1.0, -1.0];

impl LorentzMatrix {
    pub fn identity() -> Self {
        Self::diag([1.0; 4])
    }

    pub fn diag(d: [f64; 4]) -> Self {
        let mut m = [[0.0; 4]; 4];
        for i in 0..4 {
            m[i][i] = d[i];
        }
        Self(m)
    }

    /// Space inversion P = diag(+1, −1, −1, −1).
    pub fn parity() -> Self {
        Self::diag(METRIC)
    }

    /// Time reversal T = −P.
    pub fn time_reversal() -> Self {
        Self::diag([-1.0, 1.0, 1.0, 1.0])
    }

    pub fn transpose(&self) -> Self {
        let mut t = [[0.0; 4]; 4];
        for (i, row) in self.0.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                t[j][i] = *v;
            }
        }
        Self(t)
    }

    pub fn scale(&self, s: f64) -> Self {
        Self(self.0.map(|row| row.map(|v| v * s)))
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.0
            .iter()
            .flatten()
            .zip(other.0.iter().flatten())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    /// Max entrywise |LᵀgL − g|.
    pub fn metric_residual(&self) -> f64 {
        let g = Self::parity();
        (self.transpose() * g * *self).max_abs_diff(&g)
    }

    pub fn det(&self) -> f64 {
        let mut a = self.0;
        let mut det = 1.0;
        for col in 0..4 {
            let pivot = (col..4).max_by(|&r, &s| a[r][col].abs().total_cmp(&a[s][col].abs())).unwrap();
            if a[pivot][col] == 0.0 {
                return 0.0;
            }
            if pivot != col {
                a.swap(pivot, col);
                det = -det;
            }
            det *= a[col][col];
            for r in col + 1..4 {
                let f = a[r][col] / a[col][col];
                for c in col..4 {
                    a[r][c] -= f * a[col][c];
                }
            }
        }
        det
    }

    /// Sign of L⁰₀.
    pub fn time_orientation(&self) -> f64 {
        self.0[0][0].signum()
    }
}

impl Mul for LorentzMatrix {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let mut m = [[0.0; 4]; 4];
        for i in 0..4 {
            for j in 0..4 {
                m[i][j] = (0..4).map(|k| self.0[i][k] * rhs.0[k][j]).sum();
            }
        }
        Self(m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn discrete_elements() {
        let p = LorentzMatrix::parity();
        let t = LorentzMatrix::time_reversal();
        assert_eq!(p.det(), -1.0);
        assert_eq!(t.det(), -1.0);
        assert_eq!(t.time_orientation(), -1.0);
        assert_eq!((p * t).det(), 1.0);
        assert_eq!(p.metric_residual(), 0.0);
        assert_eq!(t.metric_residual(), 0.0);
    }

    #[test]
    fn boost_preserves_metric() {
        let (ch, sh) = (1.3f64.cosh(), 1.3f64.sinh());
        let mut b = LorentzMatrix::identity();
        b.0[0][0] = ch;
        b.0[1][1] = ch;
        b.0[0][1] = sh;
        b.0[1][0] = sh;
        assert!(b.metric_residual() < 1e-14);
        assert!((b.det() - 1.0).abs() < 1e-14);
    }
}
