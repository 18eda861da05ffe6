//! Accuracy self-test: the normalized defect of a candidate value in the
//! hypergeometric differential equation z(1-z)F'' + [c-(a+b+1)z]F' - abF = 0,
//! with the derivatives obtained from parameter-shifted evaluations. Exact in
//! the limit, so the returned magnitude estimates the relative error of f.

use crate::dispatch::hyp_2f1;
use crate::kernels::inf_norm;
use crate::{ComplexScalar, Error, HypParams};

/// Residual test of a candidate value `f` for 2F1(p). Returns a scale-free
/// nonnegative number comparable to the relative accuracy of `f`.
pub fn test_2f1(p: &HypParams, f: ComplexScalar) -> Result<f64, Error> {
    let (a, b, c, z) = (p.a, p.b, p.c, p.z);
    if z == ComplexScalar::ZERO {
        return Ok(inf_norm(f - 1.0));
    }
    let fp = a * b / c
        * hyp_2f1(&HypParams::new(a + 1.0, b + 1.0, c + 1.0, z))?.value;
    if z == ComplexScalar::ONE {
        let num = inf_norm((c - (a + b + 1.0)) * fp - a * b * f);
        return Ok(num / (inf_norm(f) + inf_norm(fp) + 1e-307));
    }
    let fpp = a * b / c * (a + 1.0) * (b + 1.0) / (c + 1.0)
        * hyp_2f1(&HypParams::new(a + 2.0, b + 2.0, c + 2.0, z))?.value;
    let num = inf_norm(fpp + ((c - (a + b + 1.0) * z) * fp - a * b * f) / (z * (1.0 - z)));
    Ok(num / (inf_norm(f) + inf_norm(fp) + inf_norm(fpp)))
}
