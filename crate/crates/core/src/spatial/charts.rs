use std::f64::consts::{PI, TAU};

use serde::Serialize;

use super::maps::{eta_auto, half_phase, xi_from_pseudovector, HalfSpace};
use super::vectors::{Direction2, Model, ProperVector3, PseudoVector3, Sheet, SpatialSpinor};
use crate::algebra::C64;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Chart {
    Cartesian,
    ParabolicCylindrical,
    Parabolic,
    Spherical,
}

/// Vector domain (single cover) or spinor domain (doubled).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Domain {
    Vector,
    Spinor,
}

/// Closed range with optional infinite ends.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Range {
    pub lo: f64,
    pub hi: f64,
}

impl Range {
    const ALL: Range = Range { lo: f64::NEG_INFINITY, hi: f64::INFINITY };
    const HALF: Range = Range { lo: 0.0, hi: f64::INFINITY };

    fn contains(&self, x: f64) -> bool {
        x.is_finite() && x >= self.lo && x <= self.hi
    }
}

impl Chart {
    pub const CURVILINEAR: [Chart; 3] = [Chart::ParabolicCylindrical, Chart::Parabolic, Chart::Spherical];

    pub fn name(self) -> &'static str {
        match self {
            Chart::Cartesian => "cartesian",
            Chart::ParabolicCylindrical => "parabolic_cylindrical",
            Chart::Parabolic => "parabolic",
            Chart::Spherical => "spherical",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        [Chart::Cartesian, Chart::ParabolicCylindrical, Chart::Parabolic, Chart::Spherical]
            .into_iter()
            .find(|c| c.name() == s || c.name().replace('_', "-") == s)
    }

    pub fn ranges(self, domain: Domain) -> [Range; 3] {
        let doubled = domain == Domain::Spinor;
        let angle = |lo: f64| Range { lo, hi: TAU };
        match self {
            Chart::Cartesian => [Range::ALL; 3],
            Chart::ParabolicCylindrical => [Range::ALL, if doubled { Range::ALL } else { Range::HALF }, Range::ALL],
            Chart::Parabolic => [Range::HALF, Range::HALF, angle(if doubled { -TAU } else { 0.0 })],
            Chart::Spherical => [Range::HALF, Range { lo: 0.0, hi: PI }, angle(if doubled { -TAU } else { 0.0 })],
        }
    }

    /// Index of the coordinate whose range is doubled in the spinor domain.
    pub fn doubled_coordinate(self) -> Option<usize> {
        match self {
            Chart::Cartesian => None,
            Chart::ParabolicCylindrical => Some(1),
            Chart::Parabolic | Chart::Spherical => Some(2),
        }
    }

    pub fn check_domain(self, y: [f64; 3], domain: Domain) -> Result<()> {
        if self.ranges(domain).iter().zip(y).all(|(r, v)| r.contains(v)) {
            Ok(())
        } else {
            Err(Error::OutOfDomain {
                chart: self.name().into(),
                domain: format!("{domain:?}").to_lowercase(),
                coords: y,
            })
        }
    }

    /// Sheet of a spinor-domain point.
    pub fn sheet(self, y: [f64; 3]) -> Sheet {
        match self {
            Chart::Cartesian => Sheet::Upper,
            Chart::ParabolicCylindrical => {
                if y[1] > 0.0 || (y[1] == 0.0 && y[0] >= 0.0) {
                    Sheet::Upper
                } else {
                    Sheet::Lower
                }
            }
            Chart::Parabolic | Chart::Spherical => {
                if y[2].rem_euclid(2.0 * TAU) < TAU {
                    Sheet::Upper
                } else {
                    Sheet::Lower
                }
            }
        }
    }

    /// Point of the other sheet over the same Cartesian point.
    pub fn doubled_partner(self, y: [f64; 3]) -> [f64; 3] {
        match self {
            Chart::Cartesian => y,
            Chart::ParabolicCylindrical => [-y[0], -y[1], y[2]],
            Chart::Parabolic | Chart::Spherical => {
                let t = if y[2] >= 0.0 { y[2] - TAU } else { y[2] + TAU };
                [y[0], y[1], t]
            }
        }
    }
}

/// Cartesian image of chart coordinates.
pub fn chart_to_cartesian(c: Chart, y: [f64; 3], domain: Domain) -> Result<[f64; 3]> {
    c.check_domain(y, domain)?;
    Ok(cartesian_unchecked(c, y))
}

fn cartesian_unchecked(c: Chart, y: [f64; 3]) -> [f64; 3] {
    let [y1, y2, y3] = y;
    match c {
        Chart::Cartesian => y,
        Chart::ParabolicCylindrical => [(y1 * y1 - y2 * y2) / 2.0, y1 * y2, y3],
        Chart::Parabolic => [y1 * y2 * y3.cos(), y1 * y2 * y3.sin(), (y1 * y1 - y2 * y2) / 2.0],
        Chart::Spherical => [y1 * y2.sin() * y3.cos(), y1 * y2.sin() * y3.sin(), y1 * y2.cos()],
    }
}

/// Closed-form spinor in chart coordinates; the sheet follows from the doubled coordinate.
pub fn spinor_in_chart(c: Chart, model: Model, y: [f64; 3]) -> Result<SpatialSpinor> {
    c.check_domain(y, Domain::Spinor)?;
    let sheet = c.sheet(y);
    let [y1, y2, y3] = y;
    let r = std::f64::consts::FRAC_1_SQRT_2;
    let pair = |p: f64, q: f64, h: C64| [h.conj() * p, h * q];
    let comps = match (c, model) {
        (Chart::Cartesian, Model::Xi) => return xi_from_pseudovector(&PseudoVector3::new(y1, y2, y3), 0.0),
        (Chart::Cartesian, Model::Eta) => return eta_auto(&ProperVector3::new(y1, y2, y3)),
        (Chart::ParabolicCylindrical, _) => {
            let rho = (y1 * y1 + y2 * y2) / 2.0;
            let a = y3.hypot(rho);
            if a == 0.0 {
                return Err(Error::UndefinedSpinor);
            }
            let h = if rho == 0.0 { C64::new(1.0, 0.0) } else { C64::new(y1, y2) / y1.hypot(y2) };
            match model {
                Model::Xi => {
                    let (p, q) = if rho == 0.0 { axis_split(y3) } else { ((a + y3).sqrt(), (a - y3).sqrt()) };
                    pair(p, q, h)
                }
                Model::Eta => pair(HalfSpace::of(y3).sign() * (a - rho).max(0.0).sqrt(), (a + rho).sqrt(), h),
            }
        }
        (Chart::Parabolic, Model::Xi) => pair(y1, y2, C64::from_polar(1.0, y3 / 2.0)),
        (Chart::Parabolic, Model::Eta) => pair(r * (y1 - y2), r * (y1 + y2), C64::from_polar(1.0, y3 / 2.0)),
        (Chart::Spherical, _) => {
            if y1 == 0.0 {
                return Err(Error::UndefinedSpinor);
            }
            let h = C64::from_polar(1.0, y3 / 2.0);
            let (s, co) = y2.sin_cos();
            match model {
                Model::Xi => pair((y1 * (1.0 + co)).sqrt(), (y1 * (1.0 - co)).sqrt(), h),
                Model::Eta => pair(HalfSpace::of(co).sign() * (y1 * (1.0 - s)).max(0.0).sqrt(), (y1 * (1.0 + s)).sqrt(), h),
            }
        }
    };
    Ok(SpatialSpinor { c: comps, sheet, model })
}

fn axis_split(x3: f64) -> (f64, f64) {
    if x3 > 0.0 {
        ((2.0 * x3).sqrt(), 0.0)
    } else {
        (0.0, (-2.0 * x3).sqrt())
    }
}

/// The Cartesian-route spinor carried to the chart point's sheet.
pub fn spinor_via_cartesian(c: Chart, model: Model, y: [f64; 3]) -> Result<SpatialSpinor> {
    c.check_domain(y, Domain::Spinor)?;
    let x = cartesian_unchecked(c, y);
    let base = match model {
        Model::Xi => xi_from_pseudovector(&PseudoVector3::new(x[0], x[1], x[2]), 0.0)?,
        Model::Eta => eta_auto(&ProperVector3::new(x[0], x[1], x[2]))?,
    };
    let sheet = c.sheet(y);
    Ok(SpatialSpinor { c: base.c.map(|z| z * sheet.sign()), sheet, model })
}

/// A point of the doubled space: a vector-domain base point plus a sheet.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct DoubledPoint {
    pub chart: Chart,
    pub base: [f64; 3],
    pub sheet: Sheet,
}

impl DoubledPoint {
    pub fn from_coords(chart: Chart, y: [f64; 3]) -> Result<Self> {
        chart.check_domain(y, Domain::Spinor)?;
        let sheet = chart.sheet(y);
        let base = if sheet == Sheet::Upper { y } else { chart.doubled_partner(y) };
        Ok(Self { chart, base, sheet })
    }

    pub fn coords(&self) -> [f64; 3] {
        match self.sheet {
            Sheet::Upper => self.base,
            Sheet::Lower => self.chart.doubled_partner(self.base),
        }
    }

    /// Advance the doubled angle by 2π: same base point, other sheet.
    pub fn rotate_2pi(&self) -> Self {
        Self { sheet: self.sheet.flip(), ..*self }
    }

    pub fn spinor(&self, model: Model) -> Result<SpatialSpinor> {
        let base = spinor_in_chart(self.chart, model, self.base)?;
        Ok(SpatialSpinor { c: base.c.map(|z| z * self.sheet.sign()), sheet: self.sheet, model })
    }
}

/// Residual of the chart-coordinate derivative equations in (y1, y2) for the
/// parabolic cylindrical chart, relative to the derivative scale.
pub fn curvilinear_ode_residual(model: Model, y: [f64; 3], n: &Direction2) -> Result<f64> {
    let analytic = curvilinear_rhs(model, y, n)?;
    let scale = y[0].hypot(y[1]).max(1.0);
    let h = 1e-5 * scale;
    let f = |y1: f64, y2: f64| spinor_in_chart(Chart::ParabolicCylindrical, model, [y1, y2, y[2]]).map(|s| s.c);
    let numeric = super::derivatives::central_diff(f, y[0], y[1], n, h)?;
    let psi = spinor_in_chart(Chart::ParabolicCylindrical, model, y)?.c;
    let ynorm = y[0].hypot(y[1]);
    Ok(super::derivatives::relative_error(analytic, numeric, psi, ynorm))
}

/// Right-hand sides ∇ₙψ in chart coordinates: ξ uses ρ/(a(a±a3))(n·y) ± (i/ρ)(n×y),
/// η uses ∓(n·y)/b ± (i/ρ)(n×y), each halved and multiplied by the component.
pub fn curvilinear_rhs(model: Model, y: [f64; 3], n: &Direction2) -> Result<[C64; 2]> {
    let [y1, y2, y3] = y;
    let rho = (y1 * y1 + y2 * y2) / 2.0;
    if rho <= 1e-12 * y3.abs().max(1.0) {
        return Err(Error::Singular { rho });
    }
    let a = y3.hypot(rho);
    let psi = spinor_in_chart(Chart::ParabolicCylindrical, model, y)?.c;
    let (dot, cross) = (n.dot(y1, y2), n.cross(y1, y2));
    let (k1, k2) = match model {
        Model::Xi => (
            C64::new(rho * dot / (a * (a + y3)), cross / rho),
            C64::new(rho * dot / (a * (a - y3)), -cross / rho),
        ),
        Model::Eta => (C64::new(-dot / a, cross / rho), C64::new(dot / a, -cross / rho)),
    };
    Ok([k1 * psi[0] * 0.5, k2 * psi[1] * 0.5])
}

/// The half-angle phase read off chart coordinates where one exists.
pub fn chart_half_phase(c: Chart, y: [f64; 3]) -> Option<C64> {
    match c {
        Chart::ParabolicCylindrical if y[0] != 0.0 || y[1] != 0.0 => Some(C64::new(y[0], y[1]) / y[0].hypot(y[1])),
        Chart::Parabolic | Chart::Spherical => Some(C64::from_polar(1.0, y[2] / 2.0)),
        Chart::Cartesian if y[0] != 0.0 || y[1] != 0.0 => Some(half_phase(y[0], y[1])),
        _ => None,
    }
}
