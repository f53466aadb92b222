//! Selection-rule tables of x, y, u and v between the parity classes.

use spinor_cover::kfg::quadrature::table_from_grid;
use spinor_cover::kfg::{ClassGrid, Coordinate, Equation, QuadratureSpec, SeparationParams, Space};

fn main() -> spinor_cover::Result<()> {
    let params = SeparationParams::canonical(Equation::KleinGordon, 0.7);
    for space in [Space::Vector, Space::Spinor] {
        let grid = ClassGrid::new(space, QuadratureSpec::default(), params, 60)?;
        for coord in Coordinate::ALL {
            println!("{}", table_from_grid(&grid, coord)?.render());
        }
    }
    Ok(())
}
