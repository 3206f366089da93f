//! Prints `Tor_k(t, t)` for the small rook–Brauer, Motzkin and symmetric
//! group algebras over `Z`.

use diagram_homology::homology::tor;
use diagram_homology::{BasedAlgebra, BasedModule, Family, Ring};

fn main() -> diagram_homology::Result<()> {
    let max_degree = 3;
    for family in [Family::SymGroupAlgebra, Family::RookBrauer, Family::Motzkin] {
        for n in 1..=2 {
            let a = BasedAlgebra::with_ints(family, n, Ring::Integers, 1, 1)?;
            let groups = tor(&BasedModule::trivial(&a), max_degree)?;
            let row: Vec<String> = groups.iter().map(ToString::to_string).collect();
            println!("{:<18} n={n} dim {:>3}: {}", family.name(), a.dim(), row.join(", "));
        }
    }
    Ok(())
}
