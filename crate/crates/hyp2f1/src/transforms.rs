//! Stabilized 1-z and 1/z transformation series.
//!
//! Both transformations are the sum of a finite part A (m terms) and an
//! infinite part B whose classical closed form divides by sin(pi eps). Here B
//! is summed with the two-term recurrence in beta_n and the auxiliary
//! gamma_n, which stays finite as eps -> 0; the only eps division left is the
//! overall 1/sinc(pi eps) prefactor, which is regular.

use crate::kernels::{inf_norm, pochhammer, sinc_pi};
use crate::gamma::{gamma, gamma_inv, log_gamma};
use crate::sentinel::cv_poly_der_eval;
use crate::series::{
    a_sum_init, b_sum_init_ps_infinity, b_sum_init_ps_one, log_a_sum_init, SeriesAccumulator,
};
use crate::{ComplexScalar, Error, EvalResult, HypParams, Method, TransformSplit};
use crate::{sentinel::cv_poly_der_coeffs, EPS_MACH, MAX_TERMS, TINY};

/// alpha_0 = Gamma(c) * a_sum_init * 1/Gamma(p1) * 1/Gamma(p2). When the bare
/// a_sum_init overflows (large m), the whole product is assembled in log form
/// and exponentiated once; it is usually moderate even when pieces are not.
fn a_seed(
    c: ComplexScalar,
    m: u32,
    eps: ComplexScalar,
    p1: ComplexScalar,
    p2: ComplexScalar,
) -> ComplexScalar {
    let direct = a_sum_init(m, eps);
    if direct.is_finite() {
        return gamma(c) * direct * gamma_inv(p1) * gamma_inv(p2);
    }
    let lg = log_a_sum_init(m, eps) + log_gamma(c) - log_gamma(p1) - log_gamma(p2);
    lg.exp()
}

/// 2F1(a,b;c;z) through the 1-z transformation, taking 1-z as the argument.
/// Requires Re(c-a-b) >= 0 (the dispatcher guarantees it by swapping).
pub fn hyp_ps_one(
    a: ComplexScalar,
    b: ComplexScalar,
    c: ComplexScalar,
    one_minus_z: ComplexScalar,
) -> Result<EvalResult, Error> {
    hyp_ps_one_min(a, b, c, one_minus_z, 0)
}

/// Same transformation with a forced minimum infinite-part term count, for
/// re-summation checks.
pub(crate) fn hyp_ps_one_min(
    a: ComplexScalar,
    b: ComplexScalar,
    c: ComplexScalar,
    one_minus_z: ComplexScalar,
    min_terms: usize,
) -> Result<EvalResult, Error> {
    let split = TransformSplit::of(c - a - b);
    if split.m < 0 {
        return Err(Error::InvalidParameter(
            "1-z transformation needs Re(c-a-b) >= -1/2".into(),
        ));
    }
    let m = split.m as u32;
    let mf = m as f64;
    let eps = split.eps;
    let cv1 = cv_poly_der_coeffs(&HypParams::new(a, b, 1.0 - mf - eps, one_minus_z));
    let cv2 = cv_poly_der_coeffs(&HypParams::new(
        a + eps + mf,
        b + eps + mf,
        eps + (mf + 1.0),
        one_minus_z,
    ));
    let gi_am_e = gamma_inv(a + eps + mf);
    let gi_bm_e = gamma_inv(b + eps + mf);
    let gc = gamma(c);

    let mut acc = SeriesAccumulator::new();
    if m >= 1 {
        acc.alpha = a_seed(c, m, eps, a + eps + mf, b + eps + mf);
        let mut pw = ComplexScalar::ONE;
        for n in 0..m {
            acc.partial_sum += acc.alpha * pw;
            if n < m - 1 {
                let nf = n as f64;
                acc.alpha *= (a + nf) * (b + nf) / ((nf + 1.0) * (1.0 - mf - eps + nf));
                pw *= one_minus_z;
            }
        }
    }
    // B part: beta_n/(1-z)^m and gamma_n/(1-z)^m with the power restored per term
    let seed = HypParams::new(a, b, c, one_minus_z);
    acc.beta = b_sum_init_ps_one(&seed, split);
    acc.gamma_aux = gc
        * pochhammer(a, m)
        * pochhammer(b, m)
        * gi_am_e
        * gi_bm_e
        * gamma_inv(ComplexScalar::new(mf + 1.0, 0.0))
        * gamma_inv(1.0 - eps);
    let mut pw = one_minus_z.powu(m);
    for n in 0..MAX_TERMS {
        let nf = n as f64;
        let t = acc.beta * pw;
        acc.partial_sum += t;
        acc.n = n + 1;
        if n >= min_terms
            && n + m as usize >= cv1.n_c as usize
            && n >= cv2.n_c as usize
            && cv_poly_der_eval(&cv1.derivative_coeffs, nf + mf) < 0.0
            && cv_poly_der_eval(&cv2.derivative_coeffs, nf) < 0.0
            && inf_norm(t) <= EPS_MACH * inf_norm(acc.partial_sum) + TINY
        {
            let sign = if m & 1 != 0 { -1.0 } else { 1.0 };
            let value = sign / sinc_pi(eps) * acc.partial_sum;
            return Ok(EvalResult {
                value,
                method: Method::TransformOneMinusZ,
                terms_used: m as usize + acc.n,
            });
        }
        acc.beta = (a + eps + mf + nf) * (b + eps + mf + nf)
            / ((eps + (mf + nf + 1.0)) * (nf + 1.0))
            * acc.beta
            + ((a + mf + nf) * (b + mf + nf) / (mf + nf + 1.0)
                - (a + mf + nf)
                - (b + mf + nf)
                - eps
                + (a + eps + mf + nf) * (b + eps + mf + nf) / (nf + 1.0))
                * acc.gamma_aux
                / ((eps + (mf + nf + 1.0)) * (nf + 1.0 - eps));
        acc.gamma_aux *=
            (a + mf + nf) * (b + mf + nf) / ((mf + nf + 1.0) * (nf + 1.0 - eps));
        pw *= one_minus_z;
    }
    Err(Error::NoConvergence(MAX_TERMS))
}

/// 2F1(a,b;c;z) through the 1/z transformation. Requires Re(b-a) >= 0.
pub fn hyp_ps_infinity(p: &HypParams) -> Result<EvalResult, Error> {
    hyp_ps_infinity_min(p, 0)
}

/// Same transformation with a forced minimum infinite-part term count.
pub(crate) fn hyp_ps_infinity_min(p: &HypParams, min_terms: usize) -> Result<EvalResult, Error> {
    let (a, b, c, z) = (p.a, p.b, p.c, p.z);
    let split = TransformSplit::of(b - a);
    if split.m < 0 {
        return Err(Error::InvalidParameter(
            "1/z transformation needs Re(b-a) >= -1/2".into(),
        ));
    }
    let m = split.m as u32;
    let mf = m as f64;
    let eps = split.eps;
    let oca = 1.0 - c + a;
    let z_inv = z.finv();
    let cv1 = cv_poly_der_coeffs(&HypParams::new(a, oca, 1.0 - mf - eps, z_inv));
    let cv2 = cv_poly_der_coeffs(&HypParams::new(
        a + eps + mf,
        oca + eps + mf,
        eps + (mf + 1.0),
        z_inv,
    ));
    let gc = gamma(c);
    let gi_am_e = gamma_inv(a + eps + mf);
    let gi_ca = gamma_inv(c - a);

    let mut acc = SeriesAccumulator::new();
    if m >= 1 {
        acc.alpha = a_seed(c, m, eps, a + eps + mf, c - a);
        let mut pw = ComplexScalar::ONE;
        for n in 0..m {
            acc.partial_sum += acc.alpha * pw;
            if n < m - 1 {
                let nf = n as f64;
                acc.alpha *= (a + nf) * (oca + nf) / ((nf + 1.0) * (1.0 - mf - eps + nf));
                pw *= z_inv;
            }
        }
    }

    acc.beta = b_sum_init_ps_infinity(p, split);
    acc.gamma_aux = pochhammer(a, m)
        * pochhammer(oca, m)
        * gc
        * gi_am_e
        * gi_ca
        * gamma_inv(1.0 - eps)
        * gamma_inv(ComplexScalar::new(mf + 1.0, 0.0));
    let mut pw = z_inv.powu(m);
    for n in 0..MAX_TERMS {
        let nf = n as f64;
        let t = acc.beta * pw;
        acc.partial_sum += t;
        acc.n = n + 1;
        if n >= min_terms
            && n + m as usize >= cv1.n_c as usize
            && n >= cv2.n_c as usize
            && cv_poly_der_eval(&cv1.derivative_coeffs, nf + mf) < 0.0
            && cv_poly_der_eval(&cv2.derivative_coeffs, nf) < 0.0
            && inf_norm(t) <= EPS_MACH * inf_norm(acc.partial_sum) + TINY
        {
            let sign = if m & 1 != 0 { -1.0 } else { 1.0 };
            let value = sign * (-z).powc(-a) / sinc_pi(eps) * acc.partial_sum;
            return Ok(EvalResult {
                value,
                method: Method::TransformInvZ,
                terms_used: m as usize + acc.n,
            });
        }
        acc.beta = (a + eps + mf + nf) * (oca + eps + mf + nf)
            / ((eps + (mf + nf + 1.0)) * (nf + 1.0))
            * acc.beta
            + ((a + mf + nf) * (oca + mf + nf) / (mf + nf + 1.0)
                - (a + mf + nf)
                - (oca + mf + nf)
                - eps
                + (a + eps + mf + nf) * (oca + eps + mf + nf) / (nf + 1.0))
                * acc.gamma_aux
                / ((eps + (mf + nf + 1.0)) * (nf + 1.0 - eps));
        acc.gamma_aux *=
            (a + mf + nf) * (oca + mf + nf) / ((mf + nf + 1.0) * (nf + 1.0 - eps));
        pw *= z_inv;
    }
    Err(Error::NoConvergence(MAX_TERMS))
}
