//! xi and eta spinors of a vector, their norms, and transmutation between them.

use spinor_cover::spatial::maps::{eta_from_vector, HalfSpace};
use spinor_cover::spatial::{
    reconstruct_pseudovector, reconstruct_vector, transmute, xi_from_pseudovector, ProperVector3, PseudoVector3,
};

fn main() -> spinor_cover::Result<()> {
    let [x, y, z] = [1.0, -2.0, 0.5];
    let xi = xi_from_pseudovector(&PseudoVector3::new(x, y, z), 0.0)?;
    let eta = eta_from_vector(&ProperVector3::new(x, y, z), HalfSpace::of(z))?;
    println!("xi  = ({:.6}, {:.6})", xi.c[0], xi.c[1]);
    println!("eta = ({:.6}, {:.6})", eta.c[0], eta.c[1]);
    println!("|xi1|^2 + |xi2|^2 = {:.6}, 2|a| = {:.6}", xi.c[0].norm_sqr() + xi.c[1].norm_sqr(), 2.0 * PseudoVector3::new(x, y, z).norm());

    let (a, back) = reconstruct_pseudovector(&xi)?;
    println!("xi gives back a = {:?}, |a| = {a:.6}", back.a);
    let d = reconstruct_vector(&eta)?;
    println!("eta gives c + ib with b = {:?}, c = {:?}", d.b, d.c);

    let t = transmute(&xi);
    println!("transmute(xi) - eta: {:.1e}", t.max_abs_diff(&eta));
    println!("transmute twice - xi: {:.1e}", transmute(&t).max_abs_diff(&xi));
    Ok(())
}
