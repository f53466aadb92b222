//! Writes a spinor field over a doubled chart as CSV to stdout.
//!
//! cargo run --example chart_field_dump -- spherical eta > field.csv

use spinor_cover::spatial::field::{dump_field, field_grid};
use spinor_cover::spatial::{Chart, Model};

fn main() -> spinor_cover::Result<()> {
    let mut args = std::env::args().skip(1);
    let chart = args.next().and_then(|s| Chart::parse(&s)).unwrap_or(Chart::Parabolic);
    let model = match args.next().as_deref() {
        Some("eta") => Model::Eta,
        _ => Model::Xi,
    };
    let points = field_grid(chart, 9);
    let (written, undefined) = dump_field(std::io::stdout().lock(), chart, model, &points)?;
    eprintln!("{} rows, {undefined} undefined points skipped", written);
    Ok(())
}
