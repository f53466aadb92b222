use std::ops::Neg;

use rand::Rng;
use rand_distr::StandardNormal;
use serde::Serialize;

use super::matrix::{pauli, Matrix2, Matrix4, C64, I, ONE, ZERO};
use super::minkowski::{LorentzMatrix, METRIC};
use crate::error::{Error, Result};

/// Tolerance on |det B(k) − 1| accepted as normalized.
pub const NORMALIZATION_TOL: f64 = 1e-12;

/// Complex 4-tuple k labelling B(k) = k0·Id + kⱼσʲ in SL(2,C).
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SpinorParam {
    pub k: [C64; 4],
}

impl SpinorParam {
    pub const IDENTITY: Self = Self { k: [ONE, ZERO, ZERO, ZERO] };

    pub fn new(k0: C64, k1: C64, k2: C64, k3: C64) -> Self {
        Self { k: [k0, k1, k2, k3] }
    }

    pub fn real(k: [f64; 4]) -> Self {
        Self { k: k.map(|x| C64::new(x, 0.0)) }
    }

    /// k0² − k⃗².
    pub fn det(&self) -> C64 {
        let [k0, k1, k2, k3] = self.k;
        k0 * k0 - k1 * k1 - k2 * k2 - k3 * k3
    }

    pub fn normalization_error(&self) -> f64 {
        (self.det() - ONE).norm()
    }

    pub fn ensure_normalized(self) -> Result<Self> {
        let residual = self.normalization_error();
        if residual <= NORMALIZATION_TOL && self.k.iter().all(|z| z.re.is_finite() && z.im.is_finite()) {
            Ok(self)
        } else {
            Err(Error::NotNormalized { residual })
        }
    }

    /// Rescale onto det = 1 using the principal square root of the determinant.
    pub fn project(raw: [C64; 4]) -> Option<Self> {
        let d = Self { k: raw }.det();
        if d.norm() < 1e-300 {
            return None;
        }
        let s = d.sqrt();
        Some(Self { k: raw.map(|z| z / s) })
    }

    /// Random normalized parameter: four complex Gaussians projected onto det = 1.
    /// Draws with tiny determinant or huge Σ|kᵢ|² are rejected.
    pub fn random<R: Rng + ?Sized>(rng: &mut R) -> Self {
        loop {
            let raw = [(); 4].map(|_| C64::new(rng.sample(StandardNormal), rng.sample(StandardNormal)));
            if (Self { k: raw }).det().norm() < 1e-2 {
                continue;
            }
            if let Some(k) = Self::project(raw) {
                if k.norm_sq() <= 50.0 {
                    return k;
                }
            }
        }
    }

    /// Σ|kᵢ|², equal to L⁰₀ of the image.
    pub fn norm_sq(&self) -> f64 {
        self.k.iter().map(|z| z.norm_sqr()).sum()
    }

    /// k̄* = (k0*, −k⃗*), the parameter of the lower bispinor block.
    pub fn bar_conj(&self) -> Self {
        let [k0, k1, k2, k3] = self.k;
        Self::new(k0.conj(), -k1.conj(), -k2.conj(), -k3.conj())
    }

    pub fn compose(&self, other: &Self) -> Result<Self> {
        spinor_compose(self, other)
    }

    /// The composition rule without the normalization precondition.
    pub fn compose_unchecked(&self, other: &Self) -> Self {
        unchecked_compose(self, other)
    }

    pub fn b_matrix(&self) -> Matrix2 {
        b_matrix(self)
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.k.iter().zip(other.k.iter()).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max)
    }
}

impl Neg for SpinorParam {
    type Output = Self;
    fn neg(self) -> Self {
        Self { k: self.k.map(|z| -z) }
    }
}

fn unchecked_compose(a: &SpinorParam, b: &SpinorParam) -> SpinorParam {
    let [a0, a1, a2, a3] = a.k;
    let [b0, b1, b2, b3] = b.k;
    SpinorParam::new(
        a0 * b0 + a1 * b1 + a2 * b2 + a3 * b3,
        a1 * b0 + a0 * b1 + I * (a2 * b3 - a3 * b2),
        a2 * b0 + a0 * b2 + I * (a3 * b1 - a1 * b3),
        a3 * b0 + a0 * b3 + I * (a1 * b2 - a2 * b1),
    )
}

/// ⟨k1, k2⟩, the parameter of B(k1)·B(k2).
pub fn spinor_compose(k1: &SpinorParam, k2: &SpinorParam) -> Result<SpinorParam> {
    k1.ensure_normalized()?;
    k2.ensure_normalized()?;
    Ok(unchecked_compose(k1, k2))
}

/// B(k) = k0·Id + kⱼσʲ.
pub fn b_matrix(k: &SpinorParam) -> Matrix2 {
    let s = pauli();
    let mut b = Matrix2::scalar(k.k[0]);
    for j in 0..3 {
        b = b + s[j].scale(k.k[j + 1]);
    }
    b
}

/// S(upper, lower) = diag(B(upper), B(lower)).
pub fn bispinor_pair(upper: &SpinorParam, lower: &SpinorParam) -> Matrix4 {
    Matrix4::block_diag(&b_matrix(upper), &b_matrix(lower))
}

/// S(k, k̄*) = diag(B(k), B(k̄*)).
pub fn bispinor(k: &SpinorParam) -> Result<Matrix4> {
    let k = k.ensure_normalized()?;
    Ok(bispinor_pair(&k, &k.bar_conj()))
}

pub(crate) fn levi_civita(a: usize, b: usize, c: usize, d: usize) -> f64 {
    let p = [a, b, c, d];
    for i in 0..4 {
        for j in i + 1..4 {
            if p[i] == p[j] {
                return 0.0;
            }
        }
    }
    let mut sign = 1.0;
    for i in 0..4 {
        for j in i + 1..4 {
            if p[i] > p[j] {
                sign = -sign;
            }
        }
    }
    sign
}

/// Complex entries of L(k, k*) before discarding the (vanishing) imaginary parts:
/// L^a_b = −δ̄_ab (k·k*) + k_a k_b* + k_a* k_b − i ε_abmn k̃_m k̃_n*, with k̃ = δ̄k.
pub fn lorentz_entries(k: &SpinorParam) -> Matrix4 {
    let kc = k.k.map(|z| z.conj());
    let kl: [C64; 4] = std::array::from_fn(|m| k.k[m] * METRIC[m]);
    let klc: [C64; 4] = std::array::from_fn(|m| kc[m] * METRIC[m]);
    let dot: C64 = (0..4).map(|m| k.k[m] * kc[m] * METRIC[m]).sum();
    Matrix4::from_fn(|a, b| {
        let mut v = k.k[a] * kc[b] + kc[a] * k.k[b];
        if a == b {
            v -= dot * METRIC[a];
        }
        for m in 0..4 {
            for n in 0..4 {
                let e = levi_civita(a, b, m, n);
                if e != 0.0 {
                    v -= I * kl[m] * klc[n] * e;
                }
            }
        }
        v
    })
}

/// Proper orthochronous Lorentz matrix covered by ±k.
pub fn lorentz_from_spinor(k: &SpinorParam) -> Result<LorentzMatrix> {
    let k = k.ensure_normalized()?;
    let c = lorentz_entries(&k);
    Ok(LorentzMatrix(c.0.map(|row| row.map(|z| z.re))))
}
