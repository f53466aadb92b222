//! Which covering groups stay real in a Majorana basis.

use spinor_cover::lorentz::majorana::realization_consistency;
use spinor_cover::lorentz::majorana_reality_scan;

fn main() {
    for g in majorana_reality_scan() {
        let gens: Vec<String> = g.generators.iter().map(|(d, c)| format!("{d}: {c:?}")).collect();
        println!("{:>4}  {}  real: {}", g.group.name(), gens.join(", "), g.all_real);
    }
    println!("gamma realization residual {:.1e}", realization_consistency());
}
