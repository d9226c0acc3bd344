//! Class membership by endpoint characterizations, checked against the
//! brute-force selection oracle.
//!
//! ```bash
//! cargo run --example selection_classes
//! ```

use intgames::classes::{
    check_selection_class, check_selection_convex_variant, classify, cross_check, selection_class_oracle,
    ConvexVariant, SelectionClass,
};
use intgames::games::{family, FamilyKind};

fn main() -> Result<(), intgames::error::Error> {
    for kind in FamilyKind::ALL {
        let w = family(kind, 3)?;
        println!("{kind}:");
        let c = classify(&w);
        for (class, holds) in &c.selection {
            let oracle = selection_class_oracle(&w, *class)?;
            println!("  {class:<24} characterization={holds:<5} oracle={}", oracle.holds);
            if let Some(v) = oracle.violating_selection {
                let values: Vec<String> = v.values().iter().skip(1).map(|x| x.to_string()).collect();
                println!("    violating endpoint selection: [{}]", values.join(", "));
            }
        }
        for variant in ConvexVariant::ALL {
            println!(
                "  convex via {variant}: {}",
                check_selection_convex_variant(&w, variant)
            );
        }
        assert!(cross_check(&w, check_selection_class)?.is_empty());
    }
    println!(
        "selection-convex implies selection-superadditive on the sel-convex family: {}",
        check_selection_class(
            &family(FamilyKind::SelectionConvex, 4)?,
            SelectionClass::SelectionSuperadditive
        )
    );
    Ok(())
}
