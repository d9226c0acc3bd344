//! The exact linear programming layer: feasibility, optimization, vertex
//! enumeration and infeasibility diagnosis.
//!
//! ```bash
//! cargo run --example lp_engine
//! ```

use intgames::lpcore::{
    enumerate_vertices, feasible, irreducible_infeasible_subsystem, maximize, LinearSystem, Optimum,
};
use intgames::numerics::Scalar;

fn s(v: i64) -> Scalar {
    Scalar::from(v)
}

fn main() -> Result<(), intgames::error::Error> {
    // x + y <= 4, x + 3y <= 6, x, y >= 0
    let mut sys = LinearSystem::new(2)?;
    sys.add_upper_bound(vec![s(1), s(1)], s(4))?;
    sys.add_upper_bound(vec![s(1), s(3)], s(6))?;
    sys.set_all_nonneg();

    println!("feasible point: {:?}", feasible(&sys));
    if let Optimum::Optimal { point, value } = maximize(&sys, &[s(1), s(2)])? {
        println!("max x + 2y = {value} at {point:?}");
    }
    for v in enumerate_vertices(&sys)?.vertices() {
        println!("vertex {v:?}");
    }

    sys.add_inequality(vec![s(1), s(1)], s(5))?;
    println!("after adding x + y >= 5: feasible = {}", feasible(&sys).is_some());
    println!("conflicting rows: {:?}", irreducible_infeasible_subsystem(&sys));
    Ok(())
}
