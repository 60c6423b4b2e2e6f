//! Multiplier modules, log canonical thresholds and jumping numbers.

use reesmult::ideals::{jumping_numbers, lct, multiplier_ideal, multiplier_module, MonomialIdeal};
use reesmult::lattice::LatticeBox;
use reesmult::num::{format_rational, ratio};

fn main() -> reesmult::Result<()> {
    let a = MonomialIdeal::from_rows(&[[2, 0], [0, 3]])?;
    println!("a = {a}, lct = {}", format_rational(&lct(&a)?));

    let lambda = ratio(7, 6);
    let module = multiplier_module(&a, &lambda)?;
    let ideal = multiplier_ideal(&a, &lambda)?;
    let b = LatticeBox::cube(2, 0, 4)?;
    println!("J(omega, a^7/6): {}", module.system);
    println!("  points in [0,4]^2: {:?}", module.points(&b)?.iter().map(ToString::to_string).collect::<Vec<_>>());
    println!("J(a^7/6): {}", ideal.system);

    let report = jumping_numbers(&a, &ratio(3, 1), None)?;
    let jumps: Vec<_> = report.jumps.iter().map(format_rational).collect();
    println!("jumps in (0,3]: {}", jumps.join(", "));
    let failures: Vec<_> = report.periodicity_failures().iter().map(format_rational).collect();
    println!("jumps c with c+1 not a jump: {}", failures.join(", "));
    Ok(())
}
