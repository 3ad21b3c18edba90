//! Exact divisibility bounds for automorphism groups of smooth hypersurfaces
//! and complete intersections in complex projective space.
//!
//! The order of the automorphism group of a smooth degree-d hypersurface
//! (or multidegree-d̲ complete intersection) divides an explicit integer.
//! This crate computes those integers exactly: the discriminant counts
//! N(d̲, n) attached to the parameter space of singular members, the
//! per-index linking multipliers they produce, the degrees of the strata
//! swept out by projective subspaces, and the resulting bounds for the
//! linear, projective, and covering-deck actions.
//!
//! All arithmetic is arbitrary-precision and exact; the projective bound is
//! assembled from rationals and asserted integral at the end. Every headline
//! quantity has at least two independent computation routes (recursion,
//! closed form, direct enumeration) so each can audit the others.

pub mod arith;
pub mod bounds;
pub mod discriminant;
pub mod error;
pub mod series;
pub mod strata;

pub use arith::{binomial, factorize, lcm, Factorization};
pub use bounds::{
    deck_bound, gl_bound_general, gl_bound_hypersurface, pgl_bound, pgl_bound_closed,
    reference_table, BoundKind, BoundReport, ReferenceRow,
};
pub use discriminant::{
    multiplier, multiplier_suspension_check, n_value, n_value_closed, n_value_staircase_oracle,
    Multidegree, StaircaseTable,
};
pub use error::{Error, Result};
pub use series::{rational_product_coefficient, IntSeries};
pub use strata::{chern_coeffs, sigma_degree, stratum_degree, swept_degree};
