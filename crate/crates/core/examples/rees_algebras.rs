//! Cone models of the Rees and extended Rees algebras, with their canonical
//! modules and graded pieces.

use reesmult::ideals::MonomialIdeal;
use reesmult::lattice::{lattice_points, LatticeBox};
use reesmult::rees::{canonical_module, AlgebraKind, extended_rees_cone, graded_piece, rees_cone};

fn main() -> reesmult::Result<()> {
    let a = MonomialIdeal::from_rows(&[[2, 0], [1, 1], [0, 2]])?;
    for alg in [rees_cone(&a)?, extended_rees_cone(&a)?] {
        let name = match alg.kind {
            AlgebraKind::Rees => "Rees",
            AlgebraKind::ExtendedRees => "extended Rees",
        };
        println!("{name} algebra of {a}");
        println!("  cone: {}", alg.cone);
        println!("  rays of sigma: {:?}", alg.rays.iter().map(ToString::to_string).collect::<Vec<_>>());
        let omega = canonical_module(&alg);
        for k in -1..=2 {
            let piece = graded_piece(&omega, k)?;
            let n = lattice_points(&piece.system, &LatticeBox::cube(2, 0, 4)?)?.len();
            println!("  omega piece k={k}: {} ({n} points in [0,4]^2)", piece.system);
        }
    }

    let bad = MonomialIdeal::from_rows(&[[4, 0], [0, 4]])?;
    if let Err(e) = extended_rees_cone(&bad) {
        println!("{bad}: {e}");
    }
    Ok(())
}
