//! Pair rationality on R, S and T, and the biconditional relating them.

use reesmult::ideals::MonomialIdeal;
use reesmult::num::{format_rational, ratio};
use reesmult::rees::verify_theorem_a;

fn main() -> reesmult::Result<()> {
    let ideals = [MonomialIdeal::maximal(2), MonomialIdeal::maximal(3), MonomialIdeal::from_rows(&[[2, 0], [1, 1], [0, 2]])?];
    for a in &ideals {
        for lambda in [ratio(1, 3), ratio(1, 2), ratio(1, 1), ratio(5, 2)] {
            let r = verify_theorem_a(a, &lambda, None)?;
            let p = r.pairs.expect("pairs are reported");
            println!(
                "{a} lambda={:<4} R={:<5} S={:<5} T={:<5} biconditional={}",
                format_rational(&lambda),
                p.base.rational,
                p.rees.rational,
                p.extended.rational,
                r.overall
            );
        }
    }
    Ok(())
}
