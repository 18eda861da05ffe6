//! Gauss hypergeometric function 2F1 for fully complex parameters and argument.
//!
//! The evaluation strategy combines the power series around z = 0 with the
//! linear transformations to z/(z-1), 1-z, 1/z, (z-1)/z and 1/(1-z), each
//! summed in a cancellation-free form when c-a-b or b-a sits near an integer,
//! plus a Taylor continuation patch for the zone near |z| = 1 that no
//! transformation reaches. Series truncation is guarded by a quartic ratio
//! polynomial so that a temporary dip in term magnitude cannot cause a
//! premature stop.

pub mod gamma;
pub mod kernels;
mod dispatch;
mod residual;
mod sentinel;
mod series;
mod transforms;

pub use dispatch::hyp_2f1;
pub use residual::test_2f1;
pub use sentinel::{cv_poly_der_coeffs, cv_poly_der_eval, min_n_calc, ConvergencePoly};
pub use series::{
    a_sum_init, b_sum_init_ps_one, b_sum_init_ps_infinity, hyp_ps_zero, log_a_sum_init,
};
pub use transforms::{hyp_ps_infinity, hyp_ps_one};

pub type ComplexScalar = num_complex::Complex64;

/// Hard cap on summation length; hitting it raises `Error::NoConvergence`.
pub const MAX_TERMS: usize = 50_000;

pub(crate) const EPS_MACH: f64 = f64::EPSILON;
pub(crate) const TINY: f64 = 1e-300;

#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    #[error("series did not converge within {0} terms")]
    NoConvergence(usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

/// The four inputs of 2F1(a, b; c; z).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HypParams {
    pub a: ComplexScalar,
    pub b: ComplexScalar,
    pub c: ComplexScalar,
    pub z: ComplexScalar,
}

impl HypParams {
    pub fn new(a: ComplexScalar, b: ComplexScalar, c: ComplexScalar, z: ComplexScalar) -> Self {
        Self { a, b, c, z }
    }
}

/// Integer-plus-remainder split of c-a-b (1-z path) or b-a (1/z path).
#[derive(Debug, Clone, Copy)]
pub struct TransformSplit {
    pub m: i32,
    pub eps: ComplexScalar,
}

impl TransformSplit {
    /// Split w = m + eps with m the nearest integer to Re(w) (half away from zero).
    pub fn of(w: ComplexScalar) -> Self {
        let m = kernels::rnd(w.re);
        Self { m, eps: ComplexScalar::new(w.re - m as f64, w.im) }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    SeriesZero,
    SeriesZOverZm1,
    TransformOneMinusZ,
    TransformInvZ,
    TaylorPatch,
    Polynomial,
}

impl Method {
    pub const ALL: [Method; 6] = [
        Method::SeriesZero,
        Method::SeriesZOverZm1,
        Method::TransformOneMinusZ,
        Method::TransformInvZ,
        Method::TaylorPatch,
        Method::Polynomial,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Method::SeriesZero => "series_zero",
            Method::SeriesZOverZm1 => "series_z_over_zm1",
            Method::TransformOneMinusZ => "transform_one_minus_z",
            Method::TransformInvZ => "transform_inv_z",
            Method::TaylorPatch => "taylor_patch",
            Method::Polynomial => "polynomial",
        }
    }
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy)]
pub struct EvalResult {
    pub value: ComplexScalar,
    pub method: Method,
    pub terms_used: usize,
}
