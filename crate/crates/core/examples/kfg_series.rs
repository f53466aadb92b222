//! Even and odd series solutions of F'' + (xi^2/4 - alpha)F = 0.

use spinor_cover::kfg::{series_even, series_odd};

fn main() -> spinor_cover::Result<()> {
    let alpha: f64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(0.7);
    let e = series_even(alpha, 60)?;
    let o = series_odd(alpha, 60)?;
    println!("alpha = {alpha}");
    println!("even a_2k: {:?}", &e.coeffs[..5]);
    println!("odd a_2k+1: {:?}", &o.coeffs[..5]);
    println!("validated radius: even {:.2}, odd {:.2}", e.radius, o.radius);
    println!("{:>6} {:>14} {:>14} {:>10}", "xi", "E", "O", "residual");
    for i in 0..=8 {
        let xi = 0.5 * i as f64;
        let r = e.ode_residual(xi).residual.max(o.ode_residual(xi).residual);
        println!("{xi:>6.2} {:>14.8} {:>14.8} {r:>10.1e}", e.eval(xi), o.eval(xi));
    }
    Ok(())
}
