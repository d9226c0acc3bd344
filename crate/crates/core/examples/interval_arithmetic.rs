//! Exact interval arithmetic and the weakly-better order.
//!
//! ```bash
//! cargo run --example interval_arithmetic
//! ```

use intgames::numerics::{Interval, Scalar};

fn main() -> Result<(), intgames::error::Error> {
    let a: Interval = "[1, 3]".parse()?;
    let b: Interval = "[-1/2, 2]".parse()?;

    println!("a = {a}, b = {b}");
    println!("a + b = {}", &a + &b);
    println!("a - b = {}", &a - &b);
    println!("a * b = {}", a.mul(&b));
    println!("a / [2, 4] = {}", a.div(&"[2, 4]".parse()?)?);
    match a.div(&b) {
        Ok(q) => println!("a / b = {q}"),
        Err(e) => println!("a / b fails: {e}"),
    }

    let c = Interval::new(Scalar::from(2), Scalar::from(3))?;
    println!("{c} weakly better than {a}: {}", c.weakly_better(&a));
    println!("{a} weakly better than {b}: {}", a.weakly_better(&b));
    println!("width of b: {}", b.width());

    if let Err(e) = Interval::new(Scalar::from(3), Scalar::from(1)) {
        println!("rejected: {e}");
    }
    Ok(())
}
