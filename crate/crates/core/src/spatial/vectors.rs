use std::ops::Neg;

use serde::Serialize;

use crate::algebra::C64;
use crate::error::{Error, Result};

/// Real 3-vector read as a pseudo-vector (ξ model).
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct PseudoVector3 {
    pub a: [f64; 3],
}

/// Real 3-vector read as a proper vector (η model).
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ProperVector3 {
    pub b: [f64; 3],
}

macro_rules! vector_common {
    ($t:ident, $f:ident) => {
        impl $t {
            pub fn new(x1: f64, x2: f64, x3: f64) -> Self {
                Self { $f: [x1, x2, x3] }
            }

            pub fn norm(&self) -> f64 {
                let [x1, x2, x3] = self.$f;
                (x1 * x1 + x2 * x2 + x3 * x3).sqrt()
            }

            /// Distance from the third axis.
            pub fn rho(&self) -> f64 {
                self.$f[0].hypot(self.$f[1])
            }
        }
    };
}

vector_common!(PseudoVector3, a);
vector_common!(ProperVector3, b);

/// Unit direction in the (1, 2) plane.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Direction2 {
    pub n1: f64,
    pub n2: f64,
}

impl Direction2 {
    pub fn from_angle(theta: f64) -> Self {
        let (n2, n1) = theta.sin_cos();
        Self { n1, n2 }
    }

    pub fn new(n1: f64, n2: f64) -> Result<Self> {
        let norm = n1.hypot(n2);
        if (norm - 1.0).abs() > 1e-14 {
            return Err(Error::Config(format!("direction ({n1}, {n2}) is not a unit vector")));
        }
        Ok(Self { n1, n2 })
    }

    /// n⃗·v⃗ over the first two components.
    pub fn dot(&self, v1: f64, v2: f64) -> f64 {
        self.n1 * v1 + self.n2 * v2
    }

    /// n⃗×v⃗ = n1 v2 − n2 v1.
    pub fn cross(&self, v1: f64, v2: f64) -> f64 {
        self.n1 * v2 - self.n2 * v1
    }
}

/// Which copy of the doubled space a spinor lives on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Sheet {
    Upper,
    Lower,
}

impl Sheet {
    pub fn sign(self) -> f64 {
        match self {
            Sheet::Upper => 1.0,
            Sheet::Lower => -1.0,
        }
    }

    pub fn flip(self) -> Self {
        match self {
            Sheet::Upper => Sheet::Lower,
            Sheet::Lower => Sheet::Upper,
        }
    }

    pub fn from_sign(s: f64) -> Self {
        if s >= 0.0 {
            Sheet::Upper
        } else {
            Sheet::Lower
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Model {
    Xi,
    Eta,
}

impl Model {
    pub fn name(self) -> &'static str {
        match self {
            Model::Xi => "xi",
            Model::Eta => "eta",
        }
    }
}

/// Complex pair (c1, c2) of either model on a given sheet.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SpatialSpinor {
    pub c: [C64; 2],
    pub sheet: Sheet,
    pub model: Model,
}

impl SpatialSpinor {
    pub fn new(c1: C64, c2: C64, sheet: Sheet, model: Model) -> Self {
        Self { c: [c1, c2], sheet, model }
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        (self.c[0] - other.c[0]).norm().max((self.c[1] - other.c[1]).norm())
    }

    pub fn scale(&self, s: f64) -> Self {
        Self { c: self.c.map(|z| z * s), ..*self }
    }

    /// Same components moved to the other sheet with opposite sign.
    pub fn rotated_2pi(&self) -> Self {
        Self { c: self.c.map(|z| -z), sheet: self.sheet.flip(), model: self.model }
    }

    pub fn expect_model(&self, model: Model) -> Result<()> {
        if self.model == model {
            Ok(())
        } else {
            Err(Error::ModelMismatch { expected: model.name().into(), got: self.model.name().into() })
        }
    }
}

impl Neg for SpatialSpinor {
    type Output = Self;
    fn neg(self) -> Self {
        Self { c: self.c.map(|z| -z), ..self }
    }
}
