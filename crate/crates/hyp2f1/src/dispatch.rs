//! Region dispatch over the complex z plane.
//!
//! Order of preference: terminating polynomial, direct series at z or
//! z/(z-1), then the transformed series at 1/z, (z-1)/z, 1-z, 1/(1-z)
//! (guarded by parameter size, since transformation cancellation grows with
//! |a|,|b|,|c|), and finally Taylor continuation from a reachable circle for
//! the lens around |z| = 1 that none of the above covers.

use crate::kernels::inf_norm;
use crate::series::{hyp_polynomial, hyp_ps_zero};
use crate::transforms::{hyp_ps_infinity, hyp_ps_one};
use crate::{ComplexScalar, Error, EvalResult, HypParams, Method};
use crate::{EPS_MACH, MAX_TERMS, TINY};

/// Detects w = 0, -1, -2, ... within absolute tolerance 1e-300; returns the
/// magnitude |w| as u32.
fn nonpos_int_magnitude(w: ComplexScalar) -> Option<u32> {
    let n = w.re.round();
    if n <= 0.0 && (w.re - n).abs() <= 1e-300 && w.im.abs() <= 1e-300 {
        Some((-n) as u32)
    } else {
        None
    }
}

/// Taylor continuation about z0 = r0 z/|z| with r0 = 0.9 (inside) or 1.1
/// (outside); the two seed derivatives come from the series paths that do
/// reach the circle, and the rest follows from the hypergeometric ODE.
pub fn hyp_ps_complex_plane_rest(p: &HypParams) -> Result<EvalResult, Error> {
    let (a, b, c, z) = (p.a, p.b, p.c, p.z);
    let r0 = if z.norm() < 1.0 { 0.9 } else { 1.1 };
    let z0 = r0 * z / z.norm();
    let shifted = HypParams::new(a + 1.0, b + 1.0, c + 1.0, z0);
    let (q0, q1) = if r0 == 0.9 {
        let q0 = hyp_ps_zero(&HypParams::new(a, b, c, z0))?.value;
        let q1 = a * b / c * hyp_ps_zero(&shifted)?.value;
        (q0, q1)
    } else {
        let q0 = hyp_ps_infinity(&HypParams::new(a, b, c, z0))?.value;
        let q1 = a * b / c * hyp_ps_infinity(&shifted)?.value;
        (q0, q1)
    };
    let dz = z - z0;
    let mut s = ComplexScalar::ZERO;
    let mut qn = q0;
    let mut qn1 = q1;
    let mut pw = ComplexScalar::ONE;
    for n in 0..MAX_TERMS {
        let t0 = qn * pw;
        let t1 = qn1 * pw * dz;
        s += t0;
        if inf_norm(t0) + inf_norm(t1) <= EPS_MACH * inf_norm(s) + TINY {
            return Ok(EvalResult { value: s, method: Method::TaylorPatch, terms_used: n + 1 });
        }
        let nf = n as f64;
        let qn2 = ((nf * (2.0 * z0 - 1.0) - c + (a + b + 1.0) * z0) * qn1
            + (a + nf) * (b + nf) / (nf + 1.0) * qn)
            / (z0 * (1.0 - z0) * (nf + 2.0));
        qn = qn1;
        qn1 = qn2;
        pw *= dz;
    }
    Err(Error::NoConvergence(MAX_TERMS))
}

/// Full-plane 2F1(a,b;c;z).
///
/// Real z >= 1 is taken as the limit from below the cut. c equal to a
/// nonpositive integer is only admitted on the terminating-series escape
/// (a or b a nonpositive integer of strictly smaller magnitude).
pub fn hyp_2f1(p: &HypParams) -> Result<EvalResult, Error> {
    let (mut a, mut b, c) = (p.a, p.b, p.c);
    let mut z = p.z;
    let na = nonpos_int_magnitude(a);
    let nb = nonpos_int_magnitude(b);
    let mc = nonpos_int_magnitude(c);
    if na.is_some() || nb.is_some() {
        let (deg, term_par, other) = match (na, nb) {
            (Some(na), Some(nb)) if na <= nb => (na, a, b),
            (Some(na), None) => (na, a, b),
            (_, Some(nb)) => (nb, b, a),
            _ => unreachable!(),
        };
        if let Some(mc) = mc {
            if mc <= deg {
                return Err(Error::InvalidParameter(
                    "c is a nonpositive integer inside the terminating sum".into(),
                ));
            }
        }
        let zp = z / (z - 1.0);
        let value;
        if z == ComplexScalar::ONE || z.norm() < zp.norm() {
            value = hyp_polynomial(a, b, c, z, deg);
        } else {
            value = (1.0 - z).powc(-term_par) * hyp_polynomial(term_par, c - other, c, zp, deg);
        }
        return Ok(EvalResult {
            value,
            method: Method::Polynomial,
            terms_used: deg as usize + 1,
        });
    }
    if mc.is_some() {
        return Err(Error::InvalidParameter(
            "c is a nonpositive integer and the series does not terminate".into(),
        ));
    }
    if z.im == 0.0 && z.re >= 1.0 {
        z = ComplexScalar::new(z.re, -1e-307);
    }

    // push Re(c-a-b) and Re(b-a) nonnegative once and for all
    let mut prefactor = ComplexScalar::ONE;
    let cab = c - a - b;
    let ba = b - a;
    if ba.re < 0.0 && cab.re < 0.0 {
        prefactor = (1.0 - z).powc(cab);
        let (a2, b2) = (c - a, c - b);
        a = a2;
        b = b2;
    } else if cab.re < 0.0 {
        prefactor = (1.0 - z).powc(cab);
        let (a2, b2) = (c - b, c - a);
        a = a2;
        b = b2;
    } else if ba.re < 0.0 {
        std::mem::swap(&mut a, &mut b);
    }

    let omz = 1.0 - z;
    if omz.norm() < 1e-5 {
        let r = hyp_ps_one(a, b, c, omz)?;
        return Ok(EvalResult { value: prefactor * r.value, ..r });
    }
    let abs_z = z.norm();
    let zp = z / (z - 1.0);
    let abs_zp = zp.norm();

    // near-origin sweep: plain series at whichever of z, z/(z-1) is smaller
    let mut radius = 0.5;
    while radius <= 0.905 {
        if abs_z < radius && abs_z <= abs_zp {
            let r = hyp_ps_zero(&HypParams::new(a, b, c, z))?;
            return Ok(EvalResult { value: prefactor * r.value, ..r });
        }
        if abs_zp < radius {
            let r = hyp_ps_zero(&HypParams::new(a, c - b, c, zp))?;
            return Ok(EvalResult {
                value: prefactor * omz.powc(-a) * r.value,
                method: Method::SeriesZOverZm1,
                terms_used: r.terms_used,
            });
        }
        if abs_z < radius {
            let r = hyp_ps_zero(&HypParams::new(a, b, c, z))?;
            return Ok(EvalResult { value: prefactor * r.value, ..r });
        }
        radius += 0.1;
    }

    // transformation sweep, parameter-size guarded
    let g_one = inf_norm(a) < 5.0 && inf_norm(b) < 5.0 && inf_norm(c) < 5.0;
    let g_pfaff = inf_norm(c - b) < 5.0;
    let g_one_pf = inf_norm(a) < 5.0 && inf_norm(c - b) < 5.0 && inf_norm(c) < 5.0;
    let mut radius = 0.5;
    while radius <= 0.905 {
        if 1.0 / abs_z < radius {
            let r = hyp_ps_infinity(&HypParams::new(a, b, c, z))?;
            return Ok(EvalResult { value: prefactor * r.value, ..r });
        }
        if 1.0 / abs_zp < radius && g_pfaff {
            let r = hyp_ps_infinity(&HypParams::new(a, c - b, c, zp))?;
            return Ok(EvalResult {
                value: prefactor * omz.powc(-a) * r.value,
                ..r
            });
        }
        if omz.norm() < radius && g_one {
            let r = hyp_ps_one(a, b, c, omz)?;
            return Ok(EvalResult { value: prefactor * r.value, ..r });
        }
        if 1.0 / omz.norm() < radius && g_pfaff && g_one_pf {
            let r = hyp_ps_one(a, c - b, c, omz.finv())?;
            return Ok(EvalResult {
                value: prefactor * omz.powc(-a) * r.value,
                ..r
            });
        }
        radius += 0.1;
    }

    let r = hyp_ps_complex_plane_rest(&HypParams::new(a, b, c, z))?;
    Ok(EvalResult { value: prefactor * r.value, ..r })
}
