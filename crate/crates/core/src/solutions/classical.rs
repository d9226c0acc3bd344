use crate::error::Error;
use crate::games::{ClassicalGame, Coalition, PayoffVector};
use crate::lpcore::{feasible, LinearSystem};
use crate::numerics::Scalar;

pub fn is_imputation(v: &ClassicalGame, x: &PayoffVector) -> Result<bool, Error> {
    x.expect_len(v.players())?;
    Ok(x.total() == *v.worth(v.grand()) && (0..v.players()).all(|i| x[i] >= *v.worth(Coalition::singleton(i))))
}

pub fn is_core_member(v: &ClassicalGame, x: &PayoffVector) -> Result<bool, Error> {
    x.expect_len(v.players())?;
    Ok(x.total() == *v.worth(v.grand()) && Coalition::nonempty(v.players()).all(|s| x.coalition_sum(s) >= *v.worth(s)))
}

pub(crate) fn indicator(players: usize, s: Coalition) -> Vec<Scalar> {
    (0..players)
        .map(|i| if s.contains(i) { Scalar::one() } else { Scalar::zero() })
        .collect()
}

/// `{x : Σx = v(N), Σ_S x >= v(S) for nonempty S ≠ N}`.
pub(crate) fn core_system(v: &ClassicalGame) -> LinearSystem {
    let n = v.players();
    let grand = v.grand();
    let mut sys = LinearSystem::new(n).expect("at least one player");
    sys.add_equality(indicator(n, grand), v.worth(grand).clone())
        .expect("row length matches");
    for s in Coalition::nonempty(n).filter(|&s| s != grand) {
        sys.add_inequality(indicator(n, s), v.worth(s).clone())
            .expect("row length matches");
    }
    sys
}

/// A core element of `v`, or `None` if the core is empty.
pub fn core_nonempty(v: &ClassicalGame) -> Option<PayoffVector> {
    let x = PayoffVector::new(feasible(&core_system(v))?);
    debug_assert!(is_core_member(v, &x).unwrap_or(false));
    Some(x)
}
