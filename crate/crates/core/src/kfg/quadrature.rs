use serde::Serialize;

use super::wave::{ParityClass, WaveFunction};
use super::separation::SeparationParams;
use crate::error::{Error, Result};

/// Gauss–Legendre nodes and weights on [−1, 1], ascending, with x[n−1−i] = −x[i] exactly.
pub fn gauss_legendre(n: usize) -> Result<(Vec<f64>, Vec<f64>)> {
    if n == 0 || n % 2 == 1 {
        return Err(Error::BadNodeCount(n));
    }
    let half = n / 2;
    let mut x = vec![0.0; n];
    let mut w = vec![0.0; n];
    for i in 0..half {
        // i-th largest root
        let mut z = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        for _ in 0..100 {
            let (p, d) = legendre(n, z);
            let dz = p / d;
            z -= dz;
            if dz.abs() < 1e-16 {
                break;
            }
        }
        let dp = legendre(n, z).1;
        let wi = 2.0 / ((1.0 - z * z) * dp * dp);
        x[n - 1 - i] = z;
        x[i] = -z;
        w[n - 1 - i] = wi;
        w[i] = wi;
    }
    Ok((x, w))
}

/// P_n(z) and P_n′(z).
fn legendre(n: usize, z: f64) -> (f64, f64) {
    let (mut p0, mut p1) = (1.0, z);
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * z * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    (p1, n as f64 * (z * p1 - p0) / (z * z - 1.0))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Space {
    /// Half-plane v ≥ 0, classes ++ and −−.
    Vector,
    /// Full (u, v) plane, all four classes.
    Spinor,
}

impl Space {
    pub fn classes(self) -> &'static [ParityClass] {
        match self {
            Space::Vector => &ParityClass::ALL[..2],
            Space::Spinor => &ParityClass::ALL,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Space::Vector => "vector",
            Space::Spinor => "spinor",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        [Space::Vector, Space::Spinor].into_iter().find(|x| x.name() == s)
    }
}

/// Tensor-product Gauss–Legendre rule on [−L, L]² (or [−L, L] × [0, L]) with weight u² + v².
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct QuadratureSpec {
    pub half_width: f64,
    pub nodes: usize,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        Self { half_width: 4.0, nodes: 200 }
    }
}

impl QuadratureSpec {
    pub fn new(half_width: f64, nodes: usize) -> Result<Self> {
        Self::from_box(-half_width, half_width, nodes)
    }

    pub fn from_box(lo: f64, hi: f64, nodes: usize) -> Result<Self> {
        if !(hi > 0.0 && hi.is_finite()) || lo != -hi {
            return Err(Error::AsymmetricBox(format!("[{lo}, {hi}]")));
        }
        if nodes == 0 || nodes % 2 == 1 {
            return Err(Error::BadNodeCount(nodes));
        }
        Ok(Self { half_width: hi, nodes })
    }
}

/// Factor values of each class on the nodes, with sums grouped over mirrored
/// node pairs so that integrands odd in u or v cancel exactly.
pub struct ClassGrid {
    space: Space,
    u: Vec<f64>,
    wu: Vec<f64>,
    v: Vec<f64>,
    wv: Vec<f64>,
    factors: Vec<(ParityClass, Vec<f64>, Vec<f64>)>,
}

impl ClassGrid {
    pub fn new(space: Space, spec: QuadratureSpec, params: SeparationParams, terms: usize) -> Result<Self> {
        let spec = QuadratureSpec::new(spec.half_width, spec.nodes)?;
        let (x, w) = gauss_legendre(spec.nodes)?;
        let l = spec.half_width;
        let u: Vec<f64> = x.iter().map(|t| l * t).collect();
        let wu: Vec<f64> = w.iter().map(|t| l * t).collect();
        let (v, wv) = match space {
            Space::Spinor => (u.clone(), wu.clone()),
            Space::Vector => (x.iter().map(|t| 0.5 * l * (t + 1.0)).collect(), w.iter().map(|t| 0.5 * l * t).collect()),
        };
        let mut factors = Vec::new();
        for &class in space.classes() {
            let wf = WaveFunction::new(class, params, terms)?;
            wf.check(l, l)?;
            factors.push((
                class,
                u.iter().map(|&s| wf.u_factor(s)).collect(),
                v.iter().map(|&s| wf.v_factor(s)).collect(),
            ));
        }
        Ok(Self { space, u, wu, v, wv, factors })
    }

    fn factor(&self, class: ParityClass) -> (&[f64], &[f64]) {
        let (_, fu, fv) = self.factors.iter().find(|(c, _, _)| *c == class).expect("class belongs to the space");
        (fu, fv)
    }

    /// ∫∫ Φ_a Φ_b op(u, v) (u² + v²) du dv.
    pub fn integrate(&self, a: ParityClass, b: ParityClass, op: impl Fn(f64, f64) -> f64) -> f64 {
        let (ua, va) = self.factor(a);
        let (ub, vb) = self.factor(b);
        let n = self.u.len();
        let g = |i: usize, j: usize| {
            let (u, v) = (self.u[i], self.v[j]);
            (ua[i] * va[j]) * (ub[i] * vb[j]) * op(u, v) * (u * u + v * v)
        };
        let mut total = 0.0;
        for i in 0..n / 2 {
            let im = n - 1 - i;
            let mut row = 0.0;
            match self.space {
                Space::Spinor => {
                    for j in 0..n / 2 {
                        let jm = n - 1 - j;
                        row += self.wv[j] * ((g(i, j) + g(im, j)) + (g(i, jm) + g(im, jm)));
                    }
                }
                Space::Vector => {
                    for j in 0..self.v.len() {
                        row += self.wv[j] * (g(i, j) + g(im, j));
                    }
                }
            }
            total += self.wu[i] * row;
        }
        total
    }

    pub fn norm(&self, class: ParityClass) -> f64 {
        self.integrate(class, class, |_, _| 1.0)
    }
}

/// I₀ (vector space) and I₁…I₆ (spinor space), each with its size relative to
/// √(N_a N_b) of the diagonal norms.
#[derive(Clone, Debug, Serialize)]
pub struct OrthogonalityReport {
    pub integrals: [f64; 7],
    pub relative: [f64; 7],
    pub pairs: [(ParityClass, ParityClass); 7],
    pub norms: Vec<(ParityClass, f64)>,
}

impl OrthogonalityReport {
    pub fn max_relative(&self) -> f64 {
        self.relative.iter().fold(0.0, |m, r| m.max(*r))
    }
}

pub const ORTHOGONALITY_PAIRS: [(ParityClass, ParityClass); 7] = {
    use ParityClass::*;
    [(PP, MM), (PP, MM), (PM, MP), (PP, PM), (PP, MP), (MM, PM), (MM, MP)]
};

pub fn orthogonality_integrals(spec: QuadratureSpec, params: SeparationParams, terms: usize) -> Result<OrthogonalityReport> {
    let vector = ClassGrid::new(Space::Vector, spec, params, terms)?;
    let spinor = ClassGrid::new(Space::Spinor, spec, params, terms)?;
    let mut integrals = [0.0; 7];
    let mut relative = [0.0; 7];
    for (k, &(a, b)) in ORTHOGONALITY_PAIRS.iter().enumerate() {
        let grid = if k == 0 { &vector } else { &spinor };
        integrals[k] = grid.integrate(a, b, |_, _| 1.0);
        relative[k] = integrals[k].abs() / (grid.norm(a) * grid.norm(b)).sqrt();
    }
    let norms = ParityClass::ALL.iter().map(|&c| (c, spinor.norm(c))).collect();
    Ok(OrthogonalityReport { integrals, relative, pairs: ORTHOGONALITY_PAIRS, norms })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Coordinate {
    X,
    Y,
    U,
    V,
}

impl Coordinate {
    pub const ALL: [Coordinate; 4] = [Coordinate::X, Coordinate::Y, Coordinate::U, Coordinate::V];

    pub fn eval(self, u: f64, v: f64) -> f64 {
        match self {
            Coordinate::X => (u * u - v * v) / 2.0,
            Coordinate::Y => u * v,
            Coordinate::U => u,
            Coordinate::V => v,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Coordinate::X => "x",
            Coordinate::Y => "y",
            Coordinate::U => "u",
            Coordinate::V => "v",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|c| c.name() == s)
    }
}

pub const ZERO_TOL: f64 = 1e-10;
pub const NONZERO_TOL: f64 = 1e-4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum EntryFlag {
    Zero,
    Nonzero,
    Indeterminate,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct TableEntry {
    pub value: f64,
    pub flag: EntryFlag,
}

#[derive(Clone, Debug, Serialize)]
pub struct MatrixElementTable {
    pub coordinate: Coordinate,
    pub space: Space,
    pub classes: Vec<ParityClass>,
    pub grid: Vec<Vec<TableEntry>>,
}

impl MatrixElementTable {
    /// `true` where an entry is nonzero; `None` if any entry is indeterminate.
    pub fn pattern(&self) -> Option<Vec<Vec<bool>>> {
        self.grid
            .iter()
            .map(|row| {
                row.iter()
                    .map(|e| match e.flag {
                        EntryFlag::Zero => Some(false),
                        EntryFlag::Nonzero => Some(true),
                        EntryFlag::Indeterminate => None,
                    })
                    .collect()
            })
            .collect()
    }

    pub fn render(&self) -> String {
        let mut s = format!("{}  ({} space)\n     ", self.coordinate.name(), self.space.name());
        for c in &self.classes {
            s += &format!("{:>5}", c.label());
        }
        for (c, row) in self.classes.iter().zip(&self.grid) {
            s += &format!("\n{:>5}", c.label());
            for e in row {
                s += match e.flag {
                    EntryFlag::Zero => "    0",
                    EntryFlag::Nonzero => "   !0",
                    EntryFlag::Indeterminate => "    ?",
                };
            }
        }
        s + "\n"
    }
}

/// ⟨Φ_row| coord |Φ_col⟩ at fixed (ε, p, a), flagged relative to the largest entry.
pub fn matrix_elements(coord: Coordinate, space: Space, spec: QuadratureSpec, params: SeparationParams, terms: usize) -> Result<MatrixElementTable> {
    let grid = ClassGrid::new(space, spec, params, terms)?;
    table_from_grid(&grid, coord)
}

pub fn table_from_grid(grid: &ClassGrid, coord: Coordinate) -> Result<MatrixElementTable> {
    let classes = grid.space.classes().to_vec();
    let values: Vec<Vec<f64>> = classes
        .iter()
        .map(|&a| classes.iter().map(|&b| grid.integrate(a, b, |u, v| coord.eval(u, v))).collect())
        .collect();
    let max = values.iter().flatten().fold(0.0f64, |m, x| m.max(x.abs()));
    let grid_entries = values
        .iter()
        .map(|row| {
            row.iter()
                .map(|&value| {
                    let r = if max > 0.0 { value.abs() / max } else { 0.0 };
                    let flag = if r < ZERO_TOL {
                        EntryFlag::Zero
                    } else if r > NONZERO_TOL {
                        EntryFlag::Nonzero
                    } else {
                        EntryFlag::Indeterminate
                    };
                    TableEntry { value, flag }
                })
                .collect()
        })
        .collect();
    Ok(MatrixElementTable { coordinate: coord, space: grid.space, classes, grid: grid_entries })
}
