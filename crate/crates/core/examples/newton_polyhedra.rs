//! Newton polyhedra, integral closure and normality of a few monomial ideals.

use reesmult::ideals::MonomialIdeal;
use reesmult::num::format_rational;

fn main() -> reesmult::Result<()> {
    let ideals = [
        MonomialIdeal::from_rows(&[[2, 0], [0, 3]])?,
        MonomialIdeal::from_rows(&[[4, 0], [0, 4]])?,
        MonomialIdeal::from_rows(&[[3, 0, 0], [0, 2, 0], [0, 0, 1]])?,
    ];
    for a in &ideals {
        println!("{a}");
        let newt = a.newton()?;
        for h in newt.facets() {
            println!("  facet <{}, m> >= {}", h.normal(), format_rational(h.threshold()));
        }
        println!("  closure {}", a.integral_closure()?);
        println!("  integrally closed: {}", a.is_integrally_closed()?);
        println!("  normal: {}", a.is_normal(None)?);
    }
    Ok(())
}
