//! False-convergence sentinel.
//!
//! The modulus ratio of consecutive series terms is |z(a+n)(b+n)| /
//! |(c+n)(n+1)|, so terms decrease exactly where the real quartic
//! P(x) = |z(a+x)(b+x)|^2 - |(c+x)(x+1)|^2 is negative. Truncation is only
//! allowed once P'(n) < 0 with n past every critical point of P', i.e. the
//! terms have entered their final decay and cannot grow again.

use crate::{ComplexScalar, HypParams};

/// Coefficients of P'(x) (degree 3) plus the index bound n_c from which a
/// negative P' is conclusive.
#[derive(Debug, Clone, Copy)]
pub struct ConvergencePoly {
    pub derivative_coeffs: [f64; 4],
    pub n_c: u32,
}

/// |w + x|^2 = x^2 + 2 Re(w) x + |w|^2 as real quadratic coefficients.
fn quad(w: ComplexScalar) -> [f64; 3] {
    [w.norm_sqr(), 2.0 * w.re, 1.0]
}

fn mul_poly(p: &[f64; 3], q: &[f64; 3]) -> [f64; 5] {
    let mut r = [0.0; 5];
    for (i, &pi) in p.iter().enumerate() {
        for (j, &qj) in q.iter().enumerate() {
            r[i + j] += pi * qj;
        }
    }
    r
}

/// Builds P'(x) for the term ratio of the series of `p` and its safe index.
pub fn cv_poly_der_coeffs(p: &HypParams) -> ConvergencePoly {
    let mod_z2 = p.z.norm_sqr();
    let pab = mul_poly(&quad(p.a), &quad(p.b));
    let pc1 = mul_poly(&quad(p.c), &quad(ComplexScalar::ONE));
    let mut poly = [0.0; 5];
    for k in 0..5 {
        poly[k] = mod_z2 * pab[k] - pc1[k];
    }
    let derivative_coeffs = [poly[1], 2.0 * poly[2], 3.0 * poly[3], 4.0 * poly[4]];
    let n_c = min_n_calc(&derivative_coeffs);
    ConvergencePoly { derivative_coeffs, n_c }
}

/// Horner evaluation of P'(x).
pub fn cv_poly_der_eval(d: &[f64; 4], x: f64) -> f64 {
    ((d[3] * x + d[2]) * x + d[1]) * x + d[0]
}

/// Smallest nonnegative integer past the largest real critical point of P',
/// from which P'(n) < 0 implies monotone decrease of P for all larger n.
pub fn min_n_calc(d: &[f64; 4]) -> u32 {
    // P''(x) = d2 + 2 d3 x + 3 d4 x^2 with d = [d1, d2, d3, d4]
    let aa = 3.0 * d[3];
    let bb = 2.0 * d[2];
    let cc = d[1];
    if aa == 0.0 {
        if bb == 0.0 || bb > 0.0 {
            return 0;
        }
        let x_c = -cc / bb;
        return x_c.ceil().max(0.0) as u32;
    }
    let delta = bb * bb - 4.0 * aa * cc;
    if delta <= 0.0 {
        return 0;
    }
    let sq = delta.sqrt();
    let x_c = ((-bb + sq) / (2.0 * aa)).max((-bb - sq) / (2.0 * aa));
    x_c.ceil().max(0.0) as u32
}
