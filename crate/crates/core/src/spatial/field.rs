use std::f64::consts::{PI, TAU};
use std::io::Write;

use super::charts::{spinor_in_chart, Chart};
use super::vectors::{Model, Sheet};
use crate::error::{Error, Result};

pub const FIELD_HEADER: [&str; 9] = ["chart", "y1", "y2", "y3", "sheet", "re_c1", "im_c1", "re_c2", "im_c2"];

/// Regular grid over the chart's spinor domain, `n` points per axis; unbounded
/// coordinates are clipped to [−2, 2] (radial ones to [0, 2]).
pub fn field_grid(chart: Chart, n: usize) -> Vec<[f64; 3]> {
    let lin = |lo: f64, hi: f64, i: usize| if n == 1 { lo } else { lo + (hi - lo) * i as f64 / (n - 1) as f64 };
    let bounds: [(f64, f64); 3] = match chart {
        Chart::Cartesian | Chart::ParabolicCylindrical => [(-2.0, 2.0); 3],
        Chart::Parabolic => [(0.0, 2.0), (0.0, 2.0), (-TAU, TAU)],
        Chart::Spherical => [(0.0, 2.0), (0.0, PI), (-TAU, TAU)],
    };
    let mut out = Vec::with_capacity(n * n * n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                out.push([lin(bounds[0].0, bounds[0].1, i), lin(bounds[1].0, bounds[1].1, j), lin(bounds[2].0, bounds[2].1, k)]);
            }
        }
    }
    out
}

/// Writes one CSV row per grid point where the spinor is defined; returns (written, skipped).
pub fn dump_field<W: Write>(out: W, chart: Chart, model: Model, points: &[[f64; 3]]) -> Result<(usize, usize)> {
    let io = |e: csv::Error| Error::Config(format!("field dump failed: {e}"));
    let mut w = csv::Writer::from_writer(out);
    w.write_record(FIELD_HEADER).map_err(io)?;
    let (mut written, mut skipped) = (0, 0);
    for y in points {
        let s = match spinor_in_chart(chart, model, *y) {
            Ok(s) => s,
            Err(Error::UndefinedSpinor | Error::Singular { .. }) => {
                skipped += 1;
                continue;
            }
            Err(e) => return Err(e),
        };
        let sheet = if s.sheet == Sheet::Upper { "1" } else { "-1" };
        let row = [
            chart.name().to_string(),
            y[0].to_string(),
            y[1].to_string(),
            y[2].to_string(),
            sheet.to_string(),
            s.c[0].re.to_string(),
            s.c[0].im.to_string(),
            s.c[1].re.to_string(),
            s.c[1].im.to_string(),
        ];
        w.write_record(&row).map_err(io)?;
        written += 1;
    }
    w.flush().map_err(|e| Error::Config(format!("field dump failed: {e}")))?;
    Ok((written, skipped))
}
