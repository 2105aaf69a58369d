//! Scalar-generic numerical kernels: uniform grids, finite-difference
//! stencils, quadrature, an embedded Runge-Kutta integrator, root finding
//! and a small dense linear solver.
//!
//! Everything here is generic over [`Real`] so the same code drives `f32`
//! and `f64`; the domain layer instantiates the `f64` aliases exported at
//! the crate root.

pub mod diff;
pub mod grid;
pub mod linalg;
pub mod quad;
pub mod rk;
pub mod roots;

use std::fmt;
use std::iter::Sum;

use num_traits::{Float, FloatConst, FromPrimitive, NumAssignOps};

/// Floating-point scalar usable by the kernels: `f32` or `f64`.
pub trait Real:
    Float + FloatConst + FromPrimitive + NumAssignOps + Sum + fmt::Debug + fmt::Display + 'static
{
    /// Shorthand for converting an `f64` literal into `Self`.
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("literal representable in scalar type")
    }
}

impl Real for f32 {}
impl Real for f64 {}
