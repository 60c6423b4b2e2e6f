//! Cones, dual cones and strict interiors of scaled polyhedra.

use reesmult::lattice::{dual_cone, Cone, ExponentVector, LatticeBox, Polyhedron};
use reesmult::lattice::lattice_points;
use reesmult::num::ratio;

fn main() -> reesmult::Result<()> {
    let rays = vec![ExponentVector::from_i64(&[1, 0]), ExponentVector::from_i64(&[1, 2])];
    let sigma = Cone::from_rays(2, rays)?;
    let dual = dual_cone(&sigma)?;
    println!("sigma rays: {:?}", sigma.rays().iter().map(ToString::to_string).collect::<Vec<_>>());
    println!("dual rays:  {:?}", dual.rays().iter().map(ToString::to_string).collect::<Vec<_>>());
    let back = dual_cone(&dual)?;
    println!("double dual rays: {:?}", back.rays().iter().map(ToString::to_string).collect::<Vec<_>>());

    let gens = [ExponentVector::from_i64(&[3, 0]), ExponentVector::from_i64(&[1, 1]), ExponentVector::from_i64(&[0, 3])];
    let p = Polyhedron::from_generators(2, &gens, Cone::orthant(2).rays())?;
    let interior = p.scale(&ratio(1, 2))?.strict_interior_system()?;
    println!("interior of P/2: {interior}");
    let pts = lattice_points(&interior, &LatticeBox::cube(2, 0, 2)?)?;
    println!("  points in [0,2]^2: {:?}", pts.iter().map(ToString::to_string).collect::<Vec<_>>());
    Ok(())
}
