//! Schrodinger separation: orthogonality and the A eigen-relation for each class.

use spinor_cover::kfg::{
    a_operator_apply, orthogonality_integrals, schrodinger_separate, ParityClass, QuadratureSpec,
    SeparationParams, WaveFunction,
};

fn main() -> spinor_cover::Result<()> {
    let params = SeparationParams::schrodinger(1.0, 0.5, 1.0, 0.8);
    let pair = schrodinger_separate(&params)?;
    println!("lambda = {:.6}, alpha_u = {:.6}, alpha_v = {:.6}", pair.lambda, pair.alpha_u, pair.alpha_v);

    let rep = orthogonality_integrals(QuadratureSpec::new(2.0, 160)?, params, 60)?;
    for ((a, b), r) in rep.pairs.iter().zip(rep.relative) {
        println!("<{a}|{b}> relative {r:.1e}");
    }

    for class in ParityClass::ALL {
        let w = WaveFunction::new(class, params, 60)?;
        let e = a_operator_apply(&w, 0.9, -1.3)?;
        println!("{class}: A Phi = {:.6}, a Phi = {:.6}", e.value, e.expected);
    }
    Ok(())
}
