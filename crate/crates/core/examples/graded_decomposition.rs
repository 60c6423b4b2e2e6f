//! Checks the graded decompositions of multiplier modules on the Rees and
//! extended Rees algebras.

use reesmult::ideals::MonomialIdeal;
use reesmult::num::ratio;
use reesmult::rees::{verify_theorem_b_s, verify_theorem_b_t};

fn main() -> reesmult::Result<()> {
    let a = MonomialIdeal::from_rows(&[[2, 0], [1, 1], [0, 2]])?;
    let lambda = ratio(3, 2);

    let t = verify_theorem_b_t(&a, &lambda, None, None)?;
    println!("extended Rees, lambda=3/2: overall {}", t.overall);
    for e in &t.per_k {
        println!("  k={:>2} lhs={:>4} rhs={:>4} equal={}", e.k, e.lhs_count, e.rhs_count, e.equal);
    }

    let s = verify_theorem_b_s(&a, &lambda, None, None)?;
    println!("Rees, lambda=3/2: overall {}", s.overall);
    for e in &s.per_k {
        println!("  k={:>2} lhs={:>4} rhs={:>4} equal={}", e.k, e.lhs_count, e.rhs_count, e.equal);
    }
    Ok(())
}
