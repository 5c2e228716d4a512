//! Exact computations around one-step henselisation.
//!
//! * [`arith`]: the value group, coefficient fields, `p`-adic and `t`-adic
//!   valuated fields with truncated completions, univariate polynomials,
//!   resultants and characteristic polynomials.
//! * [`newton`]: Newton polygons and isolated slopes.
//! * [`hensel`]: Nagata and special polynomials, the transformation chain
//!   from an isolated slope to a special polynomial, Hensel lifting and the
//!   valuation on a one-step extension `K[α]`.
//! * [`local`]: finitely presented local rings `k[x]_(x)/I` with Mora
//!   normal forms, and the ring `R_f` obtained by adjoining a henselian zero.
//! * [`kernel`]: minimal-valuation setups, the commuting square between
//!   `R_f` and `K[α]`, and the certified decision procedure for the kernel
//!   of `θ_f`.

pub mod arith;
pub mod error;
pub mod hensel;
pub mod json;
pub mod kernel;
pub mod local;
pub mod newton;
pub mod parse;

pub use arith::poly::{Poly, PolyRing};
pub use arith::ratfunc::{RatFunc, Series, Tadic};
pub use arith::ring::{CoefficientField, Field, Integers, PrimeField, Rationals, Ring};
pub use arith::valued::{Padic, PadicTrunc, Truncated, ValuedField};
pub use arith::value::Value;
pub use error::{Error, Result};
pub use hensel::{Extension, PrecisionPolicy};
pub use kernel::{kernel_decide, verify_decision, CommutingSquare, KernelDecision, MinimalValuationSetup};
pub use local::{FPLocalRing, RfPresentation, RingElement};
pub use newton::{compute_polygon, NewtonPolygon};
