use std::fmt;

use serde::Serialize;

use crate::algebra::{dirac_basis, BasisTag, LorentzMatrix, Matrix2, Matrix4, I, METRIC};

/// The four discrete spinor operations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum DiscreteGen {
    M,
    Mp,
    N,
    Np,
}

impl DiscreteGen {
    pub const ALL: [DiscreteGen; 4] = [DiscreteGen::M, DiscreteGen::Mp, DiscreteGen::N, DiscreteGen::Np];

    /// M = offdiag(Id, Id), M′ = iM, N = offdiag(−i·Id, i·Id), ′N = iN.
    pub fn matrix(self) -> Matrix4 {
        let id = Matrix2::identity();
        let m = Matrix4::off_diag(&id, &id);
        let n = Matrix4::off_diag(&id.scale(-I), &id.scale(I));
        match self {
            DiscreteGen::M => m,
            DiscreteGen::Mp => m.scale(I),
            DiscreteGen::N => n,
            DiscreteGen::Np => n.scale(I),
        }
    }

    /// Realization through Dirac matrices: M = γ⁰, M′ = iγ⁰, N = iγ⁵γ⁰, ′N = −γ⁵γ⁰.
    pub fn from_gammas(self, basis: BasisTag) -> Matrix4 {
        let b = dirac_basis(basis);
        let g0 = b.gamma[0];
        let g50 = b.gamma5() * g0;
        match self {
            DiscreteGen::M => g0,
            DiscreteGen::Mp => g0.scale(I),
            DiscreteGen::N => g50.scale(I),
            DiscreteGen::Np => -g50,
        }
    }

    /// Λᵃ_b = ¼ tr(F⁻¹ γᵃ F γ_b) in the Weyl basis.
    pub fn lorentz_image(self) -> LorentzMatrix {
        lorentz_image_of(&self.matrix())
    }

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            DiscreteGen::M => "M",
            DiscreteGen::Mp => "M'",
            DiscreteGen::N => "N",
            DiscreteGen::Np => "'N",
        }
    }
}

impl fmt::Display for DiscreteGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Vector transformation induced by conjugating the Weyl gammas with `f`.
pub fn lorentz_image_of(f: &Matrix4) -> LorentzMatrix {
    let b = dirac_basis(BasisTag::Weyl);
    let finv = f.inverse().expect("discrete generators are invertible");
    let mut m = [[0.0; 4]; 4];
    for a in 0..4 {
        let conj = finv * b.gamma[a] * *f;
        for c in 0..4 {
            m[a][c] = 0.25 * METRIC[c] * (conj * b.gamma[c]).trace().re;
        }
    }
    LorentzMatrix(m)
}

/// table[i][j] = gen(i) · gen(j) in the order M, M′, N, ′N.
pub fn discrete_mult_table() -> [[Matrix4; 4]; 4] {
    DiscreteGen::ALL.map(|a| DiscreteGen::ALL.map(|b| a.matrix() * b.matrix()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ONE;

    #[test]
    fn primed_generators() {
        assert_eq!(DiscreteGen::Mp.matrix(), DiscreteGen::M.matrix().scale(I));
        assert_eq!(DiscreteGen::Np.matrix(), DiscreteGen::N.matrix().scale(I));
    }

    #[test]
    fn gamma_realization_matches_explicit() {
        for g in DiscreteGen::ALL {
            assert_eq!(g.from_gammas(BasisTag::Weyl), g.matrix(), "{g}");
        }
    }

    #[test]
    fn table_spot_entries() {
        let t = discrete_mult_table();
        assert_eq!(t[0][0], Matrix4::identity());
        assert_eq!(t[0][1], Matrix4::scalar(I));
        assert_eq!(t[2][3], Matrix4::scalar(I));
        assert_eq!(t[3][3], Matrix4::scalar(-ONE));
    }

    #[test]
    fn images_are_parity_and_time_reversal() {
        assert_eq!(DiscreteGen::M.lorentz_image(), LorentzMatrix::parity());
        assert_eq!(DiscreteGen::Mp.lorentz_image(), LorentzMatrix::parity());
        assert_eq!(DiscreteGen::N.lorentz_image(), LorentzMatrix::time_reversal());
        assert_eq!(DiscreteGen::Np.lorentz_image(), LorentzMatrix::time_reversal());
    }
}
