//! Exact rational scalars and closed intervals.
//!
//! Interval sums and differences follow the usual endpoint rules:
//! `[a, b] + [c, d] = [a + c, b + d]` and `[a, b] - [c, d] = [a - d, b - c]`.
//! Intervals are partially ordered by [`Interval::weakly_better`].

mod interval;
mod scalar;

pub use interval::Interval;
pub use scalar::Scalar;
