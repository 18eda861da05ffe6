//! Effective mass and the potential in energy units.

use crate::map::{dy_dr, y_search, YPoint};
use crate::{PtgError, PtgParams};

pub fn effective_mass(p: &PtgParams, r: f64) -> Result<f64, PtgError> {
    let yp = y_search(p, r)?;
    Ok(1.0 - p.a_mass * yp.one_minus_y2)
}

pub fn effective_mass_der(p: &PtgParams, r: f64) -> Result<f64, PtgError> {
    let yp = y_search(p, r)?;
    Ok(2.0 * p.a_mass * yp.y * dy_dr(p, &yp))
}

pub fn v_l_calc(p: &PtgParams, r: f64) -> Result<f64, PtgError> {
    let yp = y_search(p, r)?;
    Ok(v_l_from(p, &yp, r))
}

/// Centrifugal correction: the excess of the mapped 1/y^2 barrier over the
/// flat-space 1/(sr)^2 one. The two poles cancel at the origin, so small y
/// switches to a power series of the difference; the series coefficients
/// (1 - (1-Lambda^2)^{n+2})/(2n+3) come from subtracting the arctanh and
/// arctan expansions of the map itself.
pub(crate) fn v_l_from(p: &PtgParams, yp: &YPoint, r: f64) -> f64 {
    let ll1 = (p.ell * (p.ell + 1)) as f64;
    if ll1 == 0.0 {
        return 0.0;
    }
    let lam2 = p.lambda * p.lambda;
    let t = lam2 - 1.0;
    if r == 0.0 {
        return ll1 * (lam2 - 2.0) / 3.0;
    }
    let y = yp.y;
    let sr = p.s * r;
    if y.max(t.abs().sqrt() * y) < 0.01 {
        let q = 1.0 - lam2;
        let y2 = y * y;
        let mut qe = q * q;
        let mut pw = 1.0;
        let mut sum = 0.0;
        for n in 0..60u32 {
            let term = (1.0 - qe) / (2 * n + 3) as f64 * pw;
            sum += term;
            if term.abs() <= 1e-17 * sum.abs() {
                break;
            }
            qe *= q;
            pw *= y2;
        }
        ll1 * (y / (lam2 * sr) * (1.0 + y / sr) * sum + t - 1.0 - t * y2)
    } else {
        ll1 * (yp.one_minus_y2 * (1.0 + t * y * y) / (y * y) - 1.0 / (sr * sr))
    }
}

pub fn v_ptg(p: &PtgParams, r: f64) -> Result<f64, PtgError> {
    let yp = y_search(p, r)?;
    Ok(v_ptg_from(p, &yp, r))
}

pub(crate) fn v_ptg_from(p: &PtgParams, yp: &YPoint, r: f64) -> f64 {
    let lam2 = p.lambda * p.lambda;
    let t = lam2 - 1.0;
    let a = p.a_mass;
    let y2 = yp.y * yp.y;
    let omy2 = yp.one_minus_y2;
    let mu = 1.0 - a * omy2;
    let v_mu = (1.0 - a + (a * (4.0 - 3.0 * lam2) - 3.0 * (2.0 - lam2)) * y2
        - t * (5.0 * (1.0 - a) + 2.0 * a * y2) * y2 * y2)
        * a
        / (mu * mu)
        * omy2
        * (1.0 + t * y2);
    let v_c = omy2
        * (-lam2 * p.nu * (p.nu + 1.0)
            - t / 4.0 * (2.0 - (7.0 - lam2) * y2 - 5.0 * t * y2 * y2));
    p.s * p.s / (p.kin_fact * mu) * (v_mu + v_l_from(p, yp, r) + v_c)
}
