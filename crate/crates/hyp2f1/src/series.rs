//! Power series around z = 0 and the seed values for the transformation
//! series. The seeds are where the near-integer stabilization lives: every
//! formula here has a removable singularity at eps = 0 and is arranged so
//! that no difference of large terms is ever formed.

use crate::gamma::{gamma, gamma_inv, gamma_inv_diff_eps, log_gamma};
use crate::kernels::{e_eps, inf_norm, p_m_eps, pochhammer, sinc_pi};
use crate::sentinel::{cv_poly_der_coeffs, cv_poly_der_eval};
use crate::{ComplexScalar, Error, EvalResult, HypParams, Method, TransformSplit};
use crate::{EPS_MACH, MAX_TERMS, TINY};

/// Running state of a transformation series: alpha drives the finite part,
/// beta/gamma_aux the infinite part, partial_sum accumulates both.
#[derive(Debug, Clone, Copy)]
pub(crate) struct SeriesAccumulator {
    pub alpha: ComplexScalar,
    pub beta: ComplexScalar,
    pub gamma_aux: ComplexScalar,
    pub partial_sum: ComplexScalar,
    pub n: usize,
}

impl SeriesAccumulator {
    pub fn new() -> Self {
        Self {
            alpha: ComplexScalar::ZERO,
            beta: ComplexScalar::ZERO,
            gamma_aux: ComplexScalar::ZERO,
            partial_sum: ComplexScalar::ZERO,
            n: 0,
        }
    }
}

/// Direct Gauss series at z. Truncates only when the sentinel polynomial
/// certifies the terms are in final decay and the current term is below the
/// rounding floor of the partial sum.
pub fn hyp_ps_zero(p: &HypParams) -> Result<EvalResult, Error> {
    hyp_ps_zero_min(p, 0)
}

/// Same series with a forced minimum term count, for re-summation checks.
pub(crate) fn hyp_ps_zero_min(p: &HypParams, min_terms: usize) -> Result<EvalResult, Error> {
    let cv = cv_poly_der_coeffs(p);
    let mut s = ComplexScalar::ZERO;
    let mut term = ComplexScalar::ONE;
    for n in 0..MAX_TERMS {
        s += term;
        if n >= min_terms
            && n as u32 >= cv.n_c
            && cv_poly_der_eval(&cv.derivative_coeffs, n as f64) < 0.0
            && inf_norm(term) <= EPS_MACH * inf_norm(s) + TINY
        {
            return Ok(EvalResult { value: s, method: Method::SeriesZero, terms_used: n + 1 });
        }
        let nf = n as f64;
        term *= p.z * (p.a + nf) * (p.b + nf) / ((p.c + nf) * (nf + 1.0));
    }
    Err(Error::NoConvergence(MAX_TERMS))
}

/// Terminating series: a or b is a nonpositive integer -degree.
pub(crate) fn hyp_polynomial(
    a: ComplexScalar,
    b: ComplexScalar,
    c: ComplexScalar,
    z: ComplexScalar,
    degree: u32,
) -> ComplexScalar {
    let mut s = ComplexScalar::ZERO;
    let mut term = ComplexScalar::ONE;
    for n in 0..=degree {
        s += term;
        if n < degree {
            let nf = n as f64;
            term *= z * (a + nf) * (b + nf) / ((c + nf) * (nf + 1.0));
        }
    }
    s
}

/// alpha_0 normalization 1/(eps Gamma(1-m-eps)), written by reflection as
/// (-1)^m sinc(pi eps) Gamma(m+eps) so eps = 0 needs no special case.
pub fn a_sum_init(m: u32, eps: ComplexScalar) -> ComplexScalar {
    let v = sinc_pi(eps) * gamma(eps + m as f64);
    if m & 1 != 0 {
        -v
    } else {
        v
    }
}

/// log of `a_sum_init`, imaginary part reduced to (-pi, pi].
pub fn log_a_sum_init(m: u32, eps: ComplexScalar) -> ComplexScalar {
    let v = sinc_pi(eps).ln() + log_gamma(eps + m as f64)
        + ComplexScalar::new(0.0, std::f64::consts::PI * m as f64);
    let im = (v.im).rem_euclid(2.0 * std::f64::consts::PI);
    let im = if im > std::f64::consts::PI { im - 2.0 * std::f64::consts::PI } else { im };
    ComplexScalar::new(v.re, im)
}

/// Seed beta_0/(1-z)^m of the 1-z transformation series.
///
/// Convention: `p.z` holds 1-z (the working variable of that series) and
/// `split` is the integer/remainder split of c-a-b.
pub fn b_sum_init_ps_one(p: &HypParams, split: TransformSplit) -> ComplexScalar {
    let (a, b, c) = (p.a, p.b, p.c);
    let one_minus_z = p.z;
    let m = split.m as u32;
    let mf = m as f64;
    let eps = split.eps;
    let gc = gamma(c);
    if inf_norm(eps) > 0.1 {
        let t1 = pochhammer(a, m) * pochhammer(b, m)
            * gamma_inv(1.0 - eps)
            * gamma_inv(a + eps + mf)
            * gamma_inv(b + eps + mf)
            * gamma_inv(ComplexScalar::new(mf + 1.0, 0.0));
        let t2 = one_minus_z.powc(eps)
            * gamma_inv(a)
            * gamma_inv(b)
            * gamma_inv(eps + (mf + 1.0));
        return gc * (t1 - t2) / eps;
    }
    let gi_am_e = gamma_inv(a + eps + mf);
    let gi_bm_e = gamma_inv(b + eps + mf);
    let gi_am = gamma_inv(a + mf);
    let gi_bm = gamma_inv(b + mf);
    let gi_m1_e = gamma_inv(eps + (mf + 1.0));
    let inv_fact_m = factorial(m).recip();
    let term1 = gi_am_e
        * gi_bm_e
        * (gamma_inv_diff_eps(ComplexScalar::ONE, -eps) * inv_fact_m
            + gamma_inv_diff_eps(ComplexScalar::new(mf + 1.0, 0.0), eps));
    let term2 = gi_m1_e
        * (gamma_inv_diff_eps(a + mf, eps) * gi_bm_e + gamma_inv_diff_eps(b + mf, eps) * gi_am);
    let term3 = e_eps(eps, one_minus_z.ln()) * gi_am * gi_bm * gi_m1_e;
    (term1 - term2 - term3) * gc * pochhammer(a, m) * pochhammer(b, m)
}

/// Seed beta_0 * z^m of the 1/z transformation series (b = a + m + eps).
///
/// Convention: `p.z` holds the true argument z; `split` is the split of b-a.
pub fn b_sum_init_ps_infinity(p: &HypParams, split: TransformSplit) -> ComplexScalar {
    let (a, c, z) = (p.a, p.c, p.z);
    let m = split.m as u32;
    let mf = m as f64;
    let eps = split.eps;
    let gc = gamma(c);
    let ca = c - a;
    let oca = 1.0 - c + a;
    if inf_norm(eps) > 0.1 {
        let t1 = pochhammer(a, m) * pochhammer(oca, m)
            * gamma_inv(ca)
            * gamma_inv(a + eps + mf)
            * gamma_inv(1.0 - eps)
            * gamma_inv(ComplexScalar::new(mf + 1.0, 0.0));
        let t2 = pochhammer(oca + eps, m)
            * (-z).powc(-eps)
            * gamma_inv(a)
            * gamma_inv(ca - eps)
            * gamma_inv(eps + (mf + 1.0));
        return gc * (t1 - t2) / eps;
    }
    let poch_oca_e = pochhammer(oca + eps, m);
    let gi_am_e = gamma_inv(a + eps + mf);
    let gi_ca = gamma_inv(ca);
    let gi_m1_e = gamma_inv(eps + (mf + 1.0));
    let gi_am = gamma_inv(a + mf);
    let inv_fact_m = factorial(m).recip();
    let line1 = (poch_oca_e * gamma_inv_diff_eps(ComplexScalar::ONE, -eps)
        - p_m_eps(oca, eps, m) * gamma_inv(1.0 - eps))
        * gi_ca
        * gi_am_e
        * inv_fact_m;
    let line2 = gamma_inv_diff_eps(ComplexScalar::new(mf + 1.0, 0.0), eps) * gi_ca * gi_am_e
        - gamma_inv_diff_eps(a + mf, eps) * gi_ca * gi_m1_e
        - (gamma_inv_diff_eps(ca, -eps) - e_eps(-eps, (-z).ln()) * gamma_inv(ca - eps))
            * gi_m1_e
            * gi_am;
    pochhammer(a, m) * gc * (line1 + poch_oca_e * line2)
}

pub(crate) fn factorial(m: u32) -> f64 {
    let mut f = 1.0;
    for k in 2..=m {
        f *= k as f64;
    }
    f
}
