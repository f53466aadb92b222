//! Relations and representation classes of the six covering groups.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use spinor_cover::algebra::SpinorParam;
use spinor_cover::lorentz::{group_relations_check, rep_equivalence_check, similarity_witness, CoveringGroupId};

fn main() -> spinor_cover::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let samples: Vec<SpinorParam> = (0..200).map(|_| SpinorParam::random(&mut rng)).collect();

    for id in CoveringGroupId::ALL {
        let (g1, g2) = id.generators();
        let r = id.expected_relations();
        let ok = group_relations_check(id).iter().all(|c| c.pass);
        let eq = rep_equivalence_check(id, &samples)?;
        let classes: Vec<String> = eq.classes.iter().map(|c| format!("{c:?}")).collect();
        println!("{:>4}  <{g1}, {g2}>  {r:?}  relations ok: {ok}  classes: {}", id.name(), classes.join(" "));
    }

    for (a, b) in [(CoveringGroupId::GM, CoveringGroupId::GN), (CoveringGroupId::Gp, CoveringGroupId::PG)] {
        let w = similarity_witness(a, b)?;
        println!(
            "A maps {} onto {}: generators exact {}, residual on S(k) {:.1e}",
            a.name(),
            b.name(),
            w.generators_exact(),
            w.continuous_residual(&samples)?
        );
    }
    Ok(())
}
