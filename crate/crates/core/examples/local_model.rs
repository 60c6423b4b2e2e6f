//! The local toric model xy = s^a: divisors, sections and the graded
//! decomposition after regrading.

use reesmult::hypersurface::{divisor_data, is_section, regrade, verify_local_decomposition, LocalBox, LocalHypersurfaceModel, LocalMonomial};
use reesmult::lattice::ExponentVector;
use reesmult::num::{format_rational, ratio};

fn main() -> reesmult::Result<()> {
    let model = LocalHypersurfaceModel::new(2, 1, vec![2])?;
    println!("{model}");
    let d = divisor_data(&model);
    for (i, ray) in d.rays.iter().enumerate() {
        println!("  {ray}: K={} div(x)={} div(y)={}", d.canonical[i], d.div_x[i], d.div_y[i]);
    }

    let lambda = ratio(1, 2);
    let mono = LocalMonomial::normal_form(&model, 3, 1, ExponentVector::from_i64(&[0, 1]))?;
    let (c, k) = regrade(&model, &mono)?;
    println!(
        "x^3 y s2 -> {mono:?}, regraded ({c}, k={k}), section at lambda={}: {}",
        format_rational(&lambda),
        is_section(&model, &mono, &lambda)?
    );

    for model in [LocalHypersurfaceModel::new(1, 1, vec![1])?, model] {
        let r = verify_local_decomposition(&model, &lambda, LocalBox::default(), None)?;
        let counts: Vec<_> = r.per_k.iter().map(|e| format!("{}:{}", e.k, e.lhs_count)).collect();
        println!("{model}: overall {} pieces {}", r.overall, counts.join(" "));
    }
    Ok(())
}
